//! Switching and labeled switching equivalence.

use thiserror::Error;

use crate::balance::is_balanced;
use crate::graph::{GraphError, Sign, SignedGraph};
use crate::orientation::Orientation;

/// A switching set `U`, sorted. Switching by `U` twice is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SwitchWitness {
    pub set: Vec<usize>,
}

impl SwitchWitness {
    pub fn new(mut set: Vec<usize>) -> Self {
        set.sort_unstable();
        set.dedup();
        SwitchWitness { set }
    }

    /// Membership mask over `n` vertices.
    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for &v in &self.set {
            if v < n {
                mask[v] = true;
            }
        }
        mask
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SwitchingError {
    #[error("graphs have different labeled underlying graphs")]
    UnderlyingMismatch,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn mask_of(g: &SignedGraph, set: &[usize]) -> Result<Vec<bool>, GraphError> {
    let mut mask = vec![false; g.vertex_count()];
    for &v in set {
        g.check_vertex(v)?;
        mask[v] = true;
    }
    Ok(mask)
}

/// `Σ^U`: flips every edge with exactly one endpoint in `U`.
pub fn switch(g: &SignedGraph, set: &[usize]) -> Result<SignedGraph, GraphError> {
    let mask = mask_of(g, set)?;
    Ok(g.map_signs(|_, e| if mask[e.u] != mask[e.v] { -e.sign } else { e.sign }))
}

/// Switches the graph and carries the orientation along (`B' = S B`).
pub fn switch_oriented(
    g: &SignedGraph,
    eta: &Orientation,
    set: &[usize],
) -> Result<(SignedGraph, Orientation), GraphError> {
    let mask = mask_of(g, set)?;
    let switched = switch(g, set)?;
    let eta = eta.switched(g, &switched, &mask);
    Ok((switched, eta))
}

/// Decides whether `b` is a switching of `a` on the same labeled graph.
/// They are equivalent iff the product signature is balanced, and the balance
/// certificate of the product is the switching set.
pub fn switching_equivalent(
    a: &SignedGraph,
    b: &SignedGraph,
) -> Result<Option<SwitchWitness>, SwitchingError> {
    if !a.same_underlying(b) {
        return Err(SwitchingError::UnderlyingMismatch);
    }
    let product = a.map_signs(|id, e| e.sign * b.edge(id).sign);
    Ok(is_balanced(&product))
}

/// Same as `switching_equivalent` for graphs whose edge lists contain the
/// same endpoint pairs in possibly different order.
pub fn switching_equivalent_unordered(
    a: &SignedGraph,
    b: &SignedGraph,
) -> Result<Option<SwitchWitness>, SwitchingError> {
    switching_equivalent(&a.with_sorted_edges(), &b.with_sorted_edges())
}

/// Sign of every edge after switching by `mask`, without building a graph.
pub(crate) fn switched_sign(sign: Sign, mask: &[bool], u: usize, v: usize) -> Sign {
    if mask[u] != mask[v] {
        -sign
    } else {
        sign
    }
}
