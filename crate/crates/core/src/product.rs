//! Cartesian products, multiset spectrum arithmetic and polynomials in the
//! spectral total graph operator.

use thiserror::Error;

use crate::graph::{Edge, SignedGraph};
use crate::operators::{total_graph, OperatorError, Variant};
use crate::orientation::Orientation;
use crate::spectral::{spectrum, total_spectrum_from_root, Spectrum, Which};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProductError {
    #[error("polynomial has no coefficients")]
    EmptyPolynomial,
    #[error("leading coefficient is zero")]
    LeadingZero,
    #[error("graph is not regular")]
    NotRegular,
    #[error("degree {0} is below 2")]
    DegreeTooSmall(usize),
    #[error(transparent)]
    Operator(#[from] OperatorError),
}

/// Coefficients `c_0..c_k` of `p(Σ) = Σ c_i Σ^i` with `c_k != 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySpec {
    coefficients: Vec<usize>,
}

impl PolySpec {
    pub fn new(coefficients: Vec<usize>) -> Result<Self, ProductError> {
        match coefficients.last() {
            None => Err(ProductError::EmptyPolynomial),
            Some(0) => Err(ProductError::LeadingZero),
            Some(_) => Ok(PolySpec { coefficients }),
        }
    }

    pub fn coefficients(&self) -> &[usize] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// `(i, c_i)` for the nonzero terms, ascending in `i`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.coefficients.iter().copied().enumerate().filter(|&(_, c)| c > 0)
    }
}

/// `Σ1 × Σ2` on vertex ids `x * n2 + y`. An edge inherits its sign from the
/// factor it moves in. Edge order: the copies of `Σ2` by `x`, then the
/// copies of `Σ1` edges by `y`.
pub fn cartesian_product(a: &SignedGraph, b: &SignedGraph) -> SignedGraph {
    let nb = b.vertex_count();
    let mut edges = Vec::with_capacity(a.vertex_count() * b.edge_count() + a.edge_count() * nb);
    for x in 0..a.vertex_count() {
        for e in b.edges() {
            edges.push(Edge { u: x * nb + e.u, v: x * nb + e.v, sign: e.sign });
        }
    }
    for e in a.edges() {
        for y in 0..nb {
            edges.push(Edge { u: e.u * nb + y, v: e.v * nb + y, sign: e.sign });
        }
    }
    SignedGraph::new(a.vertex_count() * nb, edges.into_iter().map(|e| (e.u, e.v, e.sign)))
        .expect("product of simple graphs is simple")
}

/// All pairwise sums `x + y`, with repetition.
pub fn multiset_sum(a: &Spectrum, b: &Spectrum) -> Spectrum {
    let mut values = Vec::with_capacity(a.len() * b.len());
    for &x in a.values() {
        values.extend(b.values().iter().map(|&y| x + y));
    }
    Spectrum::new(values)
}

/// Every element repeated `c` times.
pub fn multiset_power(s: &Spectrum, c: usize) -> Spectrum {
    Spectrum::new(s.values().iter().flat_map(|&x| std::iter::repeat_n(x, c)).collect())
}

/// `Σ^0 = K1`, `Σ^1 = Σ`, `Σ^i = T_S(Σ^{i-1})`. The first step uses `eta`;
/// later iterates are oriented canonically.
pub fn total_power(g: &SignedGraph, eta: &Orientation, i: usize) -> Result<SignedGraph, OperatorError> {
    if i == 0 {
        return Ok(SignedGraph::edgeless(1));
    }
    eta.check(g)?;
    let mut current = g.clone();
    for step in 1..i {
        let next = if step == 1 {
            total_graph(&current, eta, Variant::Spectral)?
        } else {
            total_graph(&current, &Orientation::canonical(&current), Variant::Spectral)?
        };
        current = next;
    }
    Ok(current)
}

fn regular_at_least_two(g: &SignedGraph) -> Result<usize, ProductError> {
    let r = g.regular_degree().ok_or(ProductError::NotRegular)?;
    if r < 2 {
        return Err(ProductError::DegreeTooSmall(r));
    }
    Ok(r)
}

/// Cartesian product, ascending in `i`, of `c_i` disjoint copies of `Σ^i`.
pub fn polynomial_compose(p: &PolySpec, g: &SignedGraph, eta: &Orientation) -> Result<SignedGraph, ProductError> {
    if g.regular_degree().is_none() {
        return Err(ProductError::NotRegular);
    }
    let mut acc = SignedGraph::edgeless(1);
    for (i, c) in p.terms() {
        let power = total_power(g, eta, i)?;
        let copies = vec![&power; c];
        acc = cartesian_product(&acc, &SignedGraph::disjoint_union(&copies));
    }
    Ok(acc)
}

/// Spectrum of `p(Σ)` from the spectrum of `Σ` alone: each `spec(Σ^i)` comes
/// from `spec(Σ^{i-1})` through the spectral total graph formula, and the
/// terms combine as `Σ_i spec(Σ^i)^{c_i}` under multiset sum.
pub fn polynomial_spectrum(p: &PolySpec, g: &SignedGraph) -> Result<Spectrum, ProductError> {
    let r = regular_at_least_two(g)?;
    let mut result = Spectrum::new(vec![0.0]);
    let mut power = Spectrum::new(vec![0.0]);
    let mut degree = 0;
    for i in 0..=p.degree() {
        if i == 1 {
            power = spectrum(g, Which::Adjacency);
            degree = r;
        } else if i > 1 {
            power = total_spectrum_from_root(&power, degree, Variant::Spectral);
            degree *= 2;
        }
        let c = p.coefficients()[i];
        if c > 0 {
            result = multiset_sum(&result, &multiset_power(&power, c));
        }
    }
    Ok(result)
}

/// `(r_i, n_i)` for the iterates of an `r`-regular graph on `n` vertices:
/// `(0, 1)` at `i = 0`, `(r, n)` at `i = 1`, then `n_i = n_{i-1} + n_{i-1} r_{i-1} / 2`
/// and `r_i = 2 r_{i-1}`. `None` on overflow.
pub fn iterated_params(r: usize, n: usize, i: usize) -> Option<(usize, usize)> {
    if i == 0 {
        return Some((0, 1));
    }
    let (mut ri, mut ni) = (r, n);
    for _ in 1..i {
        let m = ni.checked_mul(ri)? / 2;
        ni = ni.checked_add(m)?;
        ri = ri.checked_mul(2)?;
    }
    Some((ri, ni))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{family, Family, SignPattern};
    use crate::graph::Sign::{Minus, Plus};

    fn k2() -> SignedGraph {
        family(Family::Complete, 2, &SignPattern::Uniform(Plus)).unwrap()
    }

    fn c3() -> SignedGraph {
        family(Family::Cycle, 3, &SignPattern::Uniform(Plus)).unwrap()
    }

    fn assert_values(s: &Spectrum, want: &[f64]) {
        assert_eq!(s.len(), want.len());
        for (x, y) in s.values().iter().zip(want) {
            assert!((x - y).abs() < 1e-9, "{:?} vs {want:?}", s.values());
        }
    }

    #[test]
    fn square_from_two_edges() {
        let p = cartesian_product(&k2(), &k2());
        assert_eq!(p.vertex_count(), 4);
        assert_eq!(p.edge_count(), 4);
        assert!(p.is_all_positive());
        assert_eq!(p.regular_degree(), Some(2));
    }

    #[test]
    fn product_with_k1_is_identity() {
        let g = family(Family::Path, 4, &SignPattern::parse("+-+").unwrap()).unwrap();
        let k1 = SignedGraph::edgeless(1);
        assert_eq!(cartesian_product(&k1, &g), g);
        assert_eq!(cartesian_product(&g, &k1), g);
    }

    #[test]
    fn signs_follow_the_moving_factor() {
        let neg = k2().negate();
        let p = cartesian_product(&neg, &k2());
        assert_eq!(p.find_edge(0, 1).map(|e| p.edge(e).sign), Some(Plus));
        assert_eq!(p.find_edge(0, 2).map(|e| p.edge(e).sign), Some(Minus));
    }

    #[test]
    fn prism_spectrum() {
        let prism = cartesian_product(&c3(), &k2());
        let direct = spectrum(&prism, Which::Adjacency);
        let want = [3.0, 1.0, 0.0, 0.0, -2.0, -2.0];
        assert_values(&direct, &want);
        let summed = multiset_sum(&Spectrum::new(vec![2.0, -1.0, -1.0]), &Spectrum::new(vec![1.0, -1.0]));
        assert_values(&summed, &want);
    }

    #[test]
    fn multiset_examples() {
        assert_values(&multiset_sum(&Spectrum::new(vec![1.0, -1.0]), &Spectrum::new(vec![0.0])), &[1.0, -1.0]);
        assert_values(&multiset_power(&Spectrum::new(vec![5.0]), 3), &[5.0, 5.0, 5.0]);
        assert!(multiset_power(&Spectrum::new(vec![5.0]), 0).is_empty());
    }

    #[test]
    fn small_total_powers() {
        let g = c3();
        let eta = Orientation::canonical(&g);
        assert_eq!(total_power(&g, &eta, 0).unwrap(), SignedGraph::edgeless(1));
        assert_eq!(total_power(&g, &eta, 1).unwrap(), g);
        let t = total_power(&g, &eta, 2).unwrap();
        assert_eq!(t.vertex_count(), 6);
        assert_eq!(t.regular_degree(), Some(4));
        assert_eq!(t, total_graph(&g, &eta, Variant::Spectral).unwrap());
    }

    #[test]
    fn polynomial_examples() {
        let g = c3();
        let eta = Orientation::canonical(&g);
        assert_eq!(polynomial_compose(&PolySpec::new(vec![0, 1]).unwrap(), &g, &eta).unwrap(), g);
        assert_eq!(
            polynomial_compose(&PolySpec::new(vec![2]).unwrap(), &g, &eta).unwrap(),
            SignedGraph::edgeless(2)
        );
        let p = PolySpec::new(vec![0, 1, 1]).unwrap();
        let built = polynomial_compose(&p, &g, &eta).unwrap();
        assert_eq!(built.vertex_count(), 18);
        let predicted = polynomial_spectrum(&p, &g).unwrap();
        assert!(spectrum(&built, Which::Adjacency).approx_eq(&predicted, 1e-7));
        assert_values(
            &polynomial_spectrum(&PolySpec::new(vec![0, 0, 1]).unwrap(), &g).unwrap(),
            &[2.0, 2.0, 2.0, -2.0, -2.0, -2.0],
        );
    }

    #[test]
    fn polynomial_errors() {
        assert_eq!(PolySpec::new(vec![]), Err(ProductError::EmptyPolynomial));
        assert_eq!(PolySpec::new(vec![1, 0]), Err(ProductError::LeadingZero));
        let p = PolySpec::new(vec![0, 1]).unwrap();
        assert_eq!(polynomial_spectrum(&p, &k2()), Err(ProductError::DegreeTooSmall(1)));
        let path = family(Family::Path, 3, &SignPattern::Uniform(Plus)).unwrap();
        assert_eq!(polynomial_spectrum(&p, &path), Err(ProductError::NotRegular));
    }

    #[test]
    fn iterate_parameters() {
        assert_eq!(iterated_params(2, 3, 0), Some((0, 1)));
        assert_eq!(iterated_params(2, 3, 1), Some((2, 3)));
        assert_eq!(iterated_params(2, 3, 2), Some((4, 6)));
        assert_eq!(iterated_params(2, 3, 3), Some((8, 18)));
        assert_eq!(iterated_params(usize::MAX, 3, 2), None);
    }

    #[test]
    fn iterate_parameters_match_closed_form() {
        for r in 2..=6usize {
            for n in [4usize, 6, 10] {
                let mut closed = n as f64;
                for i in 2..=5 {
                    closed *= 2f64.powi(i - 3) * r as f64 + 1.0;
                    let (ri, ni) = iterated_params(r, n, i as usize).unwrap();
                    assert_eq!(ri, r << (i - 1));
                    assert_eq!(ni as f64, closed);
                }
            }
        }
    }

    #[test]
    fn constructed_iterates_match_parameters() {
        let g = family(Family::Complete, 4, &SignPattern::parse("+-+--+").unwrap()).unwrap();
        let eta = Orientation::canonical(&g);
        for i in 1..=3 {
            let t = total_power(&g, &eta, i).unwrap();
            let (ri, ni) = iterated_params(3, 4, i).unwrap();
            assert_eq!(t.vertex_count(), ni);
            assert_eq!(t.regular_degree(), Some(ri));
        }
    }
}
