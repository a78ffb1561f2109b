//! Signed line graphs and signed total graphs.
//!
//! Vertex `i` of a line graph is edge `i` of the root graph. A total graph
//! has the root vertices as ids `0..n` followed by the edge-vertices
//! `n..n+m` in edge-id order. All results carry edges sorted by `(u, v)`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Edge, GraphError, Sign, SignedGraph};
use crate::matrix::IntMatrix;
use crate::orientation::{incidence_matrix, Orientation, OrientationError};

/// Which signed line graph: combinatorial (`A = 2I - BᵀB`) or spectral
/// (`A = BᵀB - 2I`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    Combinatorial,
    Spectral,
}

impl Variant {
    pub const BOTH: [Variant; 2] = [Variant::Combinatorial, Variant::Spectral];

    pub fn tag(self) -> &'static str {
        match self {
            Variant::Combinatorial => "C",
            Variant::Spectral => "S",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "C" | "c" => Ok(Variant::Combinatorial),
            "S" | "s" => Ok(Variant::Spectral),
            other => Err(format!("unknown variant `{other}`, expected C or S")),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OperatorError {
    #[error(transparent)]
    Orientation(#[from] OrientationError),
    #[error("line-graph matrix entry ({i}, {j}) = {value} is not a simple signed adjacency")]
    BadEntry { i: usize, j: usize, value: i64 },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// `A_{L_*}` from the incidence matrix: `2I - BᵀB` or `BᵀB - 2I`.
pub fn line_adjacency_matrix(
    g: &SignedGraph,
    eta: &Orientation,
    variant: Variant,
) -> Result<IntMatrix, OperatorError> {
    let b = incidence_matrix(g, eta)?;
    let gram = &b.transpose() * &b;
    let twice = IntMatrix::identity(g.edge_count()).scaled(2);
    let a = match variant {
        Variant::Combinatorial => &twice - &gram,
        Variant::Spectral => &gram - &twice,
    };
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let value = a.get(i, j);
            let ok = if i == j { value == 0 } else { (-1..=1).contains(&value) };
            if !ok {
                return Err(OperatorError::BadEntry { i, j, value });
            }
        }
    }
    Ok(a)
}

/// Line graph read off the matrix identity.
pub fn line_graph_matrix(
    g: &SignedGraph,
    eta: &Orientation,
    variant: Variant,
) -> Result<SignedGraph, OperatorError> {
    Ok(SignedGraph::from_adjacency(&line_adjacency_matrix(g, eta, variant)?)?)
}

/// Line graph built edge by edge: edges `e`, `f` meeting at `v` are joined
/// with sign `-eta(v,e) eta(v,f)` (combinatorial) or `eta(v,e) eta(v,f)`
/// (spectral).
pub fn line_graph(g: &SignedGraph, eta: &Orientation, variant: Variant) -> Result<SignedGraph, OperatorError> {
    eta.check(g)?;
    let edges = line_edges(g, eta, variant, 0);
    Ok(sorted_graph(g.edge_count(), edges))
}

fn line_edges(g: &SignedGraph, eta: &Orientation, variant: Variant, offset: usize) -> Vec<Edge> {
    let mut edges = Vec::new();
    for v in 0..g.vertex_count() {
        let incident = g.neighbors(v);
        for (k, &(_, e)) in incident.iter().enumerate() {
            for &(_, f) in &incident[k + 1..] {
                let product = eta.eta_at(g, v, e) * eta.eta_at(g, v, f);
                let sign = match variant {
                    Variant::Combinatorial => -product,
                    Variant::Spectral => product,
                };
                let (a, b) = (e.min(f), e.max(f));
                edges.push(Edge { u: a + offset, v: b + offset, sign });
            }
        }
    }
    edges
}

fn sorted_graph(n: usize, mut edges: Vec<Edge>) -> SignedGraph {
    edges.sort_by_key(|e| (e.u, e.v));
    SignedGraph::new(n, edges.into_iter().map(|e| (e.u, e.v, e.sign)))
        .expect("operator output is a simple graph")
}

/// Combinatorial line graph together with its induced orientation
/// `eta_L(e, ef) = eta(v, e)` where `v` is the common vertex of `e` and `f`.
pub fn line_orientation(
    g: &SignedGraph,
    eta: &Orientation,
) -> Result<(SignedGraph, Orientation), OperatorError> {
    let line = line_graph(g, eta, Variant::Combinatorial)?;
    let etas = line
        .edges()
        .iter()
        .map(|le| {
            let (e, f) = (g.edge(le.u), g.edge(le.v));
            let common = [e.u, e.v]
                .into_iter()
                .find(|&w| f.has_endpoint(w))
                .expect("adjacent line vertices share an endpoint");
            (eta.eta_at(g, common, le.u), eta.eta_at(g, common, le.v))
        })
        .collect();
    let line_eta = Orientation::new(&line, etas)?;
    Ok((line, line_eta))
}

/// Total graph: root graph, line graph, and each vertex `v` joined to each
/// incident edge-vertex `e` with sign `eta(v, e)`.
pub fn total_graph(g: &SignedGraph, eta: &Orientation, variant: Variant) -> Result<SignedGraph, OperatorError> {
    eta.check(g)?;
    let n = g.vertex_count();
    let mut edges: Vec<Edge> = g.edges().to_vec();
    for (id, (e, &(at_u, at_v))) in g.edges().iter().zip(eta.etas()).enumerate() {
        edges.push(Edge { u: e.u, v: n + id, sign: at_u });
        edges.push(Edge { u: e.v, v: n + id, sign: at_v });
    }
    edges.extend(line_edges(g, eta, variant, n));
    Ok(sorted_graph(n + g.edge_count(), edges))
}

/// `[[A_Σ, B], [Bᵀ, A_{L_*}]]`.
pub fn total_adjacency_matrix(
    g: &SignedGraph,
    eta: &Orientation,
    variant: Variant,
) -> Result<IntMatrix, OperatorError> {
    let b = incidence_matrix(g, eta)?;
    let line = line_adjacency_matrix(g, eta, variant)?;
    Ok(IntMatrix::block(&g.adjacency_matrix(), &b, &b.transpose(), &line))
}

/// Total graph read off the block matrix.
pub fn total_graph_matrix(
    g: &SignedGraph,
    eta: &Orientation,
    variant: Variant,
) -> Result<SignedGraph, OperatorError> {
    Ok(SignedGraph::from_adjacency(&total_adjacency_matrix(g, eta, variant)?)?)
}

/// Sign of the closed walk through the given vertices (consecutive pairs and
/// the closing pair must be edges).
pub fn cycle_sign(g: &SignedGraph, cycle: &[usize]) -> Option<Sign> {
    let k = cycle.len();
    let mut sign = Sign::Plus;
    for i in 0..k {
        let id = g.find_edge(cycle[i], cycle[(i + 1) % k])?;
        sign = sign * g.edge(id).sign;
    }
    Some(sign)
}
