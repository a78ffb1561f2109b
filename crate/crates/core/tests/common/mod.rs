#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use signed_total::generators::{random_graph_with, random_regular_with};
use signed_total::{family, square_with_pendant, Family, Sign, SignPattern, SignedGraph};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random signed graph with `1 <= n <= n_max`, edge density in [0.2, 0.8]
/// and negative-edge probability in [0, 1].
pub fn random_signed(rng: &mut ChaCha8Rng, n_max: usize) -> SignedGraph {
    let n = rng.random_range(1..=n_max);
    let p = rng.random_range(0.2..0.8);
    let neg = rng.random_range(0.0..=1.0);
    random_graph_with(rng, n, p, neg).unwrap()
}

pub fn random_regular(rng: &mut ChaCha8Rng, degree: usize, n_max: usize) -> SignedGraph {
    loop {
        let n = rng.random_range(degree + 1..=n_max);
        if (n * degree).is_multiple_of(2) {
            let neg = rng.random_range(0.0..=1.0);
            return random_regular_with(rng, n, degree, neg).unwrap();
        }
    }
}

pub fn uniform(kind: Family, n: usize, sign: Sign) -> SignedGraph {
    family(kind, n, &SignPattern::Uniform(sign)).unwrap()
}

/// Paths, cycles of both signs, stars, complete graphs of both signs and the
/// square with a pendant edge, all with at most `n_max` vertices.
pub fn fixtures(n_max: usize) -> Vec<(String, SignedGraph)> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        out.push((format!("path-{n}"), uniform(Family::Path, n, Sign::Plus)));
    }
    for n in 3..=n_max {
        out.push((format!("cycle-{n}+"), uniform(Family::Cycle, n, Sign::Plus)));
        let mut pattern = vec![Sign::Plus; n];
        pattern[n - 1] = Sign::Minus;
        out.push((format!("cycle-{n}-"), family(Family::Cycle, n, &SignPattern::PerEdge(pattern)).unwrap()));
        out.push((format!("cycle-{n}-all"), uniform(Family::Cycle, n, Sign::Minus)));
    }
    for n in 2..=n_max {
        out.push((format!("star-{n}"), uniform(Family::Star, n, Sign::Plus)));
        out.push((format!("complete-{n}+"), uniform(Family::Complete, n, Sign::Plus)));
        out.push((format!("complete-{n}-"), uniform(Family::Complete, n, Sign::Minus)));
    }
    if n_max >= 5 {
        out.push(("square-with-pendant".to_string(), square_with_pendant()));
    }
    out
}

/// Every signing of the underlying graph of `g`, in binary order.
pub fn all_signings(g: &SignedGraph) -> Vec<SignedGraph> {
    let m = g.edge_count();
    (0u32..1 << m)
        .map(|bits| g.map_signs(|id, _| if bits >> id & 1 == 1 { Sign::Minus } else { Sign::Plus }))
        .collect()
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
