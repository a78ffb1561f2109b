//! Balance, antibalance, and exact frustration index and number.

use itertools::Itertools;
use thiserror::Error;

use crate::graph::{Sign, SignedGraph};
use crate::switching::{switched_sign, SwitchWitness};

/// Largest component, in vertices, that the switching enumeration accepts.
pub const MAX_ENUMERATION_ORDER: usize = 40;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BalanceError {
    #[error("unbalanced component with {order} vertices exceeds the exact-search limit of {limit}")]
    TooLarge { order: usize, limit: usize },
}

/// Exact frustration value with a deletion set that balances the graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrustrationResult {
    pub value: usize,
    /// Edge ids (frustration index) or vertex ids (frustration number), sorted.
    pub witness: Vec<usize>,
}

/// Balance test by sign-propagating traversal. Returns `U` with `Σ^U`
/// all-positive; component roots get potential `+`.
pub fn is_balanced(g: &SignedGraph) -> Option<SwitchWitness> {
    let potential = potentials(g, None, None)?;
    Some(SwitchWitness::new(
        (0..g.vertex_count()).filter(|&v| potential[v] == Sign::Minus).collect(),
    ))
}

pub fn is_antibalanced(g: &SignedGraph) -> bool {
    is_balanced(&g.negate()).is_some()
}

/// Potentials `p` with `p(u) p(v) = sigma(uv)` on every surviving edge, or
/// `None` on a conflict. Removed vertices and edges are ignored.
fn potentials(
    g: &SignedGraph,
    removed_vertices: Option<&[bool]>,
    removed_edges: Option<&[bool]>,
) -> Option<Vec<Sign>> {
    let n = g.vertex_count();
    let vertex_gone = |v: usize| removed_vertices.is_some_and(|r| r[v]);
    let edge_gone = |e: usize| removed_edges.is_some_and(|r| r[e]);
    let mut potential: Vec<Option<Sign>> = vec![None; n];
    let mut stack = Vec::new();
    for root in 0..n {
        if potential[root].is_some() || vertex_gone(root) {
            continue;
        }
        potential[root] = Some(Sign::Plus);
        stack.push(root);
        while let Some(x) = stack.pop() {
            let px = potential[x].expect("visited");
            for &(y, id) in g.neighbors(x) {
                if vertex_gone(y) || edge_gone(id) {
                    continue;
                }
                let want = px * g.edge(id).sign;
                match potential[y] {
                    None => {
                        potential[y] = Some(want);
                        stack.push(y);
                    }
                    Some(p) if p != want => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(potential.into_iter().map(|p| p.unwrap_or(Sign::Plus)).collect())
}

fn balanced_without(g: &SignedGraph, removed_vertices: Option<&[bool]>, removed_edges: Option<&[bool]>) -> bool {
    potentials(g, removed_vertices, removed_edges).is_some()
}

/// Potentials of one component, or `None` if it is unbalanced.
fn component_potentials(g: &SignedGraph, comp: &[usize]) -> Option<Vec<Sign>> {
    let mut outside = vec![true; g.vertex_count()];
    for &v in comp {
        outside[v] = false;
    }
    potentials(g, Some(&outside), None)
}

/// Components that contain at least one edge and are not balanced.
fn unbalanced_components(g: &SignedGraph) -> Vec<Vec<usize>> {
    g.components()
        .into_iter()
        .filter(|comp| comp.len() > 2 && component_potentials(g, comp).is_none())
        .collect()
}

/// Frustration index: minimum number of negative edges over all switchings,
/// enumerated per unbalanced component in Gray-code order with the smallest
/// vertex of the component held fixed. Ties go to the lexicographically
/// smallest switching set. The witness is the negative edges of the best
/// switching.
pub fn frustration_index(g: &SignedGraph) -> Result<FrustrationResult, BalanceError> {
    let n = g.vertex_count();
    let mut in_set = vec![false; n];
    for comp in g.components() {
        if let Some(p) = component_potentials(g, &comp) {
            for &v in &comp {
                in_set[v] = p[v] == Sign::Minus;
            }
            continue;
        }
        if comp.len() > MAX_ENUMERATION_ORDER {
            return Err(BalanceError::TooLarge { order: comp.len(), limit: MAX_ENUMERATION_ORDER });
        }
        let best = best_component_switch(g, &comp);
        for (j, &v) in comp[1..].iter().enumerate() {
            in_set[v] = best >> j & 1 == 1;
        }
    }
    let witness: Vec<usize> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| switched_sign(e.sign, &in_set, e.u, e.v).is_negative())
        .map(|(id, _)| id)
        .collect();
    Ok(FrustrationResult { value: witness.len(), witness })
}

fn best_component_switch(g: &SignedGraph, comp: &[usize]) -> u64 {
    let n = g.vertex_count();
    // Current switching state and the number of negative edges under it.
    let mut flipped = vec![false; n];
    let mut negatives = comp
        .iter()
        .flat_map(|&v| g.neighbors(v).iter().map(move |&(w, id)| (v, w, id)))
        .filter(|&(v, w, id)| v < w && g.edge(id).sign.is_negative())
        .count();
    let mut best = (negatives, 0u64);
    let free = &comp[1..];
    let mut mask = 0u64;
    for step in 1u64..(1u64 << free.len()) {
        let bit = step.trailing_zeros() as usize;
        let x = free[bit];
        // Flipping x toggles every incident edge.
        for &(y, id) in g.neighbors(x) {
            let now_negative = (g.edge(id).sign.is_negative()) ^ (flipped[x] != flipped[y]);
            if now_negative {
                negatives -= 1;
            } else {
                negatives += 1;
            }
        }
        flipped[x] = !flipped[x];
        mask ^= 1 << bit;
        if negatives < best.0 || (negatives == best.0 && lex_less(mask, best.1)) {
            best = (negatives, mask);
        }
    }
    best.1
}

/// Compares the sets encoded by two masks as sorted vertex lists.
fn lex_less(a: u64, b: u64) -> bool {
    let diff = a ^ b;
    if diff == 0 {
        return false;
    }
    let x = diff.trailing_zeros() + 1;
    let rest = |m: u64| if x >= 64 { 0 } else { m >> x };
    if a >> (x - 1) & 1 == 1 {
        rest(b) != 0
    } else {
        rest(a) == 0
    }
}

/// Frustration number: smallest vertex set whose deletion balances the graph.
/// Each unbalanced component is searched by subsets of increasing size in
/// lexicographic order, so the witness is the lexicographically first
/// minimum set per component.
pub fn frustration_number(g: &SignedGraph) -> FrustrationResult {
    let n = g.vertex_count();
    let mut witness = Vec::new();
    for comp in unbalanced_components(g) {
        let mut removed = vec![true; n];
        for &v in &comp {
            removed[v] = false;
        }
        'sizes: for k in 1..=comp.len() {
            for subset in comp.iter().copied().combinations(k) {
                for &v in &subset {
                    removed[v] = true;
                }
                let ok = balanced_without(g, Some(&removed), None);
                for &v in &subset {
                    removed[v] = false;
                }
                if ok {
                    witness.extend(subset);
                    break 'sizes;
                }
            }
        }
    }
    witness.sort_unstable();
    FrustrationResult { value: witness.len(), witness }
}

/// Frustration index by direct search over edge subsets of increasing size.
/// Exponential in the number of edges; an independent route used to check
/// `frustration_index` on small graphs.
pub fn frustration_index_by_deletion(g: &SignedGraph) -> FrustrationResult {
    let m = g.edge_count();
    let mut removed = vec![false; m];
    for k in 0..=m {
        for subset in (0..m).combinations(k) {
            for &e in &subset {
                removed[e] = true;
            }
            let ok = balanced_without(g, None, Some(&removed));
            for &e in &subset {
                removed[e] = false;
            }
            if ok {
                return FrustrationResult { value: k, witness: subset };
            }
        }
    }
    unreachable!("deleting every edge leaves a balanced graph")
}

/// True when deleting the given vertices leaves a balanced graph.
pub fn balanced_after_vertex_deletion(g: &SignedGraph, vertices: &[usize]) -> bool {
    let mut removed = vec![false; g.vertex_count()];
    for &v in vertices {
        removed[v] = true;
    }
    balanced_without(g, Some(&removed), None)
}

/// True when deleting the given edges leaves a balanced graph.
pub fn balanced_after_edge_deletion(g: &SignedGraph, edges: &[usize]) -> bool {
    let mut removed = vec![false; g.edge_count()];
    for &e in edges {
        removed[e] = true;
    }
    balanced_without(g, None, Some(&removed))
}

/// `sum over v of floor((d(v) - 1)^2 / 4)`, the number of edges needed to
/// balance every vertex clique of the combinatorial line graph.
pub fn line_clique_bound(g: &SignedGraph) -> usize {
    g.degrees()
        .into_iter()
        .filter(|&d| d > 0)
        .map(|d| (d - 1) * (d - 1) / 4)
        .sum()
}

/// Every vertex has degree at most 2, so every component is a path or a cycle.
pub fn is_paths_and_cycles(g: &SignedGraph) -> bool {
    g.max_degree() <= 2
}

/// A disjoint union of paths and cycles in which every cycle is positive.
pub fn is_paths_and_positive_cycles(g: &SignedGraph) -> bool {
    is_paths_and_cycles(g) && is_balanced(g).is_some()
}

/// Whether two edges of the graph share an endpoint.
pub fn has_adjacent_edges(g: &SignedGraph) -> bool {
    g.max_degree() >= 2
}
