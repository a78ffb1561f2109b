//! Labeled instance families and seeded random signed graphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{GraphError, Sign, SignedGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `0 - 1 - ... - (n-1)`.
    Path,
    /// Path edges followed by the closing edge `(0, n-1)`; needs `n >= 3`.
    Cycle,
    /// All pairs in lexicographic order.
    Complete,
    /// Center 0 joined to `1..n`.
    Star,
}

/// Edge signs for a family: one sign repeated, or one sign per edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SignPattern {
    Uniform(Sign),
    PerEdge(Vec<Sign>),
}

impl SignPattern {
    /// Parses a string of `+`/`-`; a single character means a uniform pattern.
    pub fn parse(text: &str) -> Option<SignPattern> {
        let signs: Option<Vec<Sign>> = text.chars().map(Sign::from_symbol).collect();
        match signs? {
            v if v.is_empty() => None,
            v if v.len() == 1 => Some(SignPattern::Uniform(v[0])),
            v => Some(SignPattern::PerEdge(v)),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeneratorError {
    #[error("family needs at least {min} vertices, got {n}")]
    TooFewVertices { min: usize, n: usize },
    #[error("sign pattern has {got} signs but the graph has {expected} edges")]
    PatternLength { expected: usize, got: usize },
    #[error("no {degree}-regular graph on {n} vertices")]
    NoRegularGraph { n: usize, degree: usize },
    #[error("probability {0} outside [0, 1]")]
    Probability(f64),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Deterministic labeled member of a family.
pub fn family(kind: Family, n: usize, signs: &SignPattern) -> Result<SignedGraph, GeneratorError> {
    let min = match kind {
        Family::Cycle => 3,
        _ => 1,
    };
    if n < min {
        return Err(GeneratorError::TooFewVertices { min, n });
    }
    let pairs: Vec<(usize, usize)> = match kind {
        Family::Path => (1..n).map(|i| (i - 1, i)).collect(),
        Family::Cycle => (1..n).map(|i| (i - 1, i)).chain([(0, n - 1)]).collect(),
        Family::Complete => (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect(),
        Family::Star => (1..n).map(|i| (0, i)).collect(),
    };
    let signs = match signs {
        SignPattern::Uniform(s) => vec![*s; pairs.len()],
        SignPattern::PerEdge(v) if v.len() == pairs.len() => v.clone(),
        SignPattern::PerEdge(v) => {
            return Err(GeneratorError::PatternLength { expected: pairs.len(), got: v.len() })
        }
    };
    Ok(SignedGraph::new(
        n,
        pairs.into_iter().zip(signs).map(|((u, v), s)| (u, v, s)),
    )?)
}

/// The negative square with a negative pendant edge:
/// `v1..v4` on a 4-cycle with signs `+, +, +, -` and `v2 - v5` negative.
/// Vertex `vk` has id `k - 1`.
pub fn square_with_pendant() -> SignedGraph {
    use Sign::{Minus, Plus};
    SignedGraph::new(5, [(0, 1, Plus), (1, 2, Plus), (2, 3, Plus), (3, 0, Minus), (1, 4, Minus)])
        .expect("fixed instance is simple")
}

fn check_probability(p: f64) -> Result<(), GeneratorError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(GeneratorError::Probability(p))
    }
}

/// Erdős–Rényi graph `G(n, p)` with each edge negative with probability
/// `negative_probability`, reproducible from `seed`.
pub fn random_graph(
    n: usize,
    edge_probability: f64,
    negative_probability: f64,
    seed: u64,
) -> Result<SignedGraph, GeneratorError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_graph_with(&mut rng, n, edge_probability, negative_probability)
}

pub fn random_graph_with<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    edge_probability: f64,
    negative_probability: f64,
) -> Result<SignedGraph, GeneratorError> {
    check_probability(edge_probability)?;
    check_probability(negative_probability)?;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(edge_probability) {
                edges.push((u, v, random_sign(rng, negative_probability)));
            }
        }
    }
    Ok(SignedGraph::new(n, edges)?)
}

fn random_sign<R: Rng + ?Sized>(rng: &mut R, negative_probability: f64) -> Sign {
    if rng.random_bool(negative_probability) {
        Sign::Minus
    } else {
        Sign::Plus
    }
}

/// Random simple `degree`-regular graph by the pairing model with restarts.
/// Dense degrees are drawn as the complement of a sparse regular graph.
pub fn random_regular_with<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    degree: usize,
    negative_probability: f64,
) -> Result<SignedGraph, GeneratorError> {
    check_probability(negative_probability)?;
    if degree >= n.max(1) || (n * degree) % 2 == 1 {
        return Err(GeneratorError::NoRegularGraph { n, degree });
    }
    let pairs = if 2 * degree > n - 1 {
        let sparse: std::collections::HashSet<(usize, usize)> = regular_pairs(rng, n, n - 1 - degree)
            .ok_or(GeneratorError::NoRegularGraph { n, degree })?
            .into_iter()
            .collect();
        (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .filter(|p| !sparse.contains(p))
            .collect()
    } else {
        regular_pairs(rng, n, degree).ok_or(GeneratorError::NoRegularGraph { n, degree })?
    };
    let edges: Vec<_> = pairs
        .into_iter()
        .map(|(u, v)| (u, v, random_sign(rng, negative_probability)))
        .collect();
    Ok(SignedGraph::new(n, edges)?)
}

fn regular_pairs<R: Rng + ?Sized>(rng: &mut R, n: usize, degree: usize) -> Option<Vec<(usize, usize)>> {
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, degree)).collect();
    'attempt: for _ in 0..10_000 {
        points.shuffle(rng);
        let mut seen = std::collections::HashSet::new();
        let mut pairs = Vec::with_capacity(points.len() / 2);
        for chunk in points.chunks(2) {
            let (a, b) = (chunk[0].min(chunk[1]), chunk[0].max(chunk[1]));
            if a == b || !seen.insert((a, b)) {
                continue 'attempt;
            }
            pairs.push((a, b));
        }
        pairs.sort_unstable();
        return Some(pairs);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use Sign::{Minus, Plus};

    #[test]
    fn families() {
        let c3 = family(Family::Cycle, 3, &SignPattern::Uniform(Plus)).unwrap();
        assert_eq!(c3.edge_count(), 3);
        assert_eq!(c3.regular_degree(), Some(2));
        let k3 = family(Family::Complete, 3, &SignPattern::Uniform(Minus)).unwrap();
        assert_eq!(k3.negative_edge_count(), 3);
        let star = family(Family::Star, 4, &SignPattern::Uniform(Plus)).unwrap();
        assert_eq!(star.degree(0), 3);
        let p = family(Family::Path, 1, &SignPattern::Uniform(Plus)).unwrap();
        assert_eq!((p.vertex_count(), p.edge_count()), (1, 0));
    }

    #[test]
    fn pattern_errors() {
        assert_eq!(
            family(Family::Cycle, 4, &SignPattern::parse("++-").unwrap()),
            Err(GeneratorError::PatternLength { expected: 4, got: 3 })
        );
        assert!(matches!(
            family(Family::Cycle, 2, &SignPattern::Uniform(Plus)),
            Err(GeneratorError::TooFewVertices { min: 3, n: 2 })
        ));
        assert_eq!(SignPattern::parse("+x"), None);
        assert_eq!(SignPattern::parse(""), None);
    }

    #[test]
    fn cycle_with_pattern() {
        let c = family(Family::Cycle, 4, &SignPattern::parse("+++-").unwrap()).unwrap();
        assert_eq!(c.edge(3).sign, Minus);
        assert_eq!((c.edge(3).u, c.edge(3).v), (0, 3));
    }

    #[test]
    fn seeded_random_is_reproducible() {
        let a = random_graph(6, 0.5, 0.5, 42).unwrap();
        let b = random_graph(6, 0.5, 0.5, 42).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.edges(), b.edges());
    }

    #[test]
    fn random_regular() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for (n, r) in [(6, 3), (8, 4), (5, 2), (10, 3)] {
            let g = random_regular_with(&mut rng, n, r, 0.5).unwrap();
            assert_eq!(g.regular_degree(), Some(r));
        }
        assert!(random_regular_with(&mut rng, 5, 3, 0.0).is_err());
    }
}
