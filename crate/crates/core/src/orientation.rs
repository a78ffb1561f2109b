//! Orientations (bidirections) of signed graphs and their incidence matrices.
//!
//! An orientation assigns a sign `eta(w, e)` to each end `w` of each edge `e`
//! so that `eta(u, e) * eta(v, e) = -sigma(e)`. Positive incidence reads as an
//! arrow pointing into the vertex.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{GraphError, Sign, SignedGraph};
use crate::matrix::IntMatrix;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrientationError {
    #[error("orientation is bound to a graph with checksum {expected:016x}, got {actual:016x}")]
    ChecksumMismatch { expected: u64, actual: u64 },
    #[error("orientation has {orientation} edges, graph has {graph}")]
    EdgeCountMismatch { orientation: usize, graph: usize },
    #[error("edge {edge}: incidence signs {eta_u}{eta_v} violate eta_u * eta_v = -sigma with sigma = {sign}")]
    SignRule { edge: usize, eta_u: Sign, eta_v: Sign, sign: Sign },
    #[error("vertex {0} is not an endpoint of edge {1}")]
    NotIncident(usize, usize),
    #[error("graph has a negative edge; eulerian orientations need an all-positive graph")]
    NotAllPositive,
    #[error("vertex {vertex} has odd degree {degree}")]
    OddDegree { vertex: usize, degree: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// How `orient` chooses the free incidence of each edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrientMode {
    /// `eta = +1` at the smaller endpoint of every edge.
    Canonical,
    /// Free incidence drawn from a ChaCha8 stream seeded with the value.
    Seeded(u64),
}

/// Per-edge incidence pair `(eta at u, eta at v)` for an edge `u < v`, bound
/// to one graph by edge count and edge-list checksum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    checksum: u64,
    etas: Vec<(Sign, Sign)>,
}

impl Orientation {
    /// Validates the sign rule against `g` and binds to it.
    pub fn new(g: &SignedGraph, etas: Vec<(Sign, Sign)>) -> Result<Self, OrientationError> {
        let o = Orientation { checksum: g.checksum(), etas };
        o.check(g)?;
        Ok(o)
    }

    /// Unvalidated parts, as read from a file; `check` before use.
    pub fn from_parts(checksum: u64, etas: Vec<(Sign, Sign)>) -> Self {
        Orientation { checksum, etas }
    }

    pub fn canonical(g: &SignedGraph) -> Self {
        let etas = g.edges().iter().map(|e| (Sign::Plus, -e.sign)).collect();
        Orientation { checksum: g.checksum(), etas }
    }

    pub fn random<R: Rng + ?Sized>(g: &SignedGraph, rng: &mut R) -> Self {
        let etas = g
            .edges()
            .iter()
            .map(|e| {
                let at_u = if rng.random_bool(0.5) { Sign::Plus } else { Sign::Minus };
                (at_u, -(at_u * e.sign))
            })
            .collect();
        Orientation { checksum: g.checksum(), etas }
    }

    pub fn checksum(&self) -> u64 {
        self.checksum
    }

    pub fn edge_count(&self) -> usize {
        self.etas.len()
    }

    pub fn etas(&self) -> &[(Sign, Sign)] {
        &self.etas
    }

    /// Binding and sign-rule check against `g`.
    pub fn check(&self, g: &SignedGraph) -> Result<(), OrientationError> {
        if self.etas.len() != g.edge_count() {
            return Err(OrientationError::EdgeCountMismatch {
                orientation: self.etas.len(),
                graph: g.edge_count(),
            });
        }
        let actual = g.checksum();
        if actual != self.checksum {
            return Err(OrientationError::ChecksumMismatch { expected: self.checksum, actual });
        }
        for (edge, (e, &(eta_u, eta_v))) in g.edges().iter().zip(&self.etas).enumerate() {
            if eta_u * eta_v != -e.sign {
                return Err(OrientationError::SignRule { edge, eta_u, eta_v, sign: e.sign });
            }
        }
        Ok(())
    }

    /// `eta(w, e)` for an endpoint `w` of edge `e` of the bound graph.
    pub fn eta(&self, g: &SignedGraph, w: usize, e: usize) -> Result<Sign, OrientationError> {
        g.check_edge(e)?;
        let edge = g.edge(e);
        let (at_u, at_v) = self.etas[e];
        if w == edge.u {
            Ok(at_u)
        } else if w == edge.v {
            Ok(at_v)
        } else {
            Err(OrientationError::NotIncident(w, e))
        }
    }

    /// Like `eta` for callers that already know `w` is an endpoint.
    pub(crate) fn eta_at(&self, g: &SignedGraph, w: usize, e: usize) -> Sign {
        let (at_u, at_v) = self.etas[e];
        if w == g.edge(e).u {
            at_u
        } else {
            at_v
        }
    }

    /// Flips both incidences on every edge of `edges`.
    pub fn reorient(&self, edges: &[usize]) -> Result<Orientation, OrientationError> {
        let mut etas = self.etas.clone();
        for &e in edges {
            if e >= etas.len() {
                return Err(GraphError::EdgeOutOfRange { edge: e, m: etas.len() }.into());
            }
        }
        let mut flip = vec![false; etas.len()];
        for &e in edges {
            flip[e] = true;
        }
        for (pair, f) in etas.iter_mut().zip(flip) {
            if f {
                *pair = (-pair.0, -pair.1);
            }
        }
        Ok(Orientation { checksum: self.checksum, etas })
    }

    /// Orientation of the switched graph `g^U`: incidences at vertices of `U`
    /// are negated, which is `B' = S B`.
    pub fn switched(&self, g: &SignedGraph, switched: &SignedGraph, set: &[bool]) -> Orientation {
        let etas = g
            .edges()
            .iter()
            .zip(&self.etas)
            .map(|(e, &(a, b))| {
                let a = if set[e.u] { -a } else { a };
                let b = if set[e.v] { -b } else { b };
                (a, b)
            })
            .collect();
        Orientation { checksum: switched.checksum(), etas }
    }
}

pub fn orient(g: &SignedGraph, mode: OrientMode) -> Orientation {
    match mode {
        OrientMode::Canonical => Orientation::canonical(g),
        OrientMode::Seeded(seed) => Orientation::random(g, &mut ChaCha8Rng::seed_from_u64(seed)),
    }
}

/// `B_eta`: `n x m`, entry `(i, e)` is `eta(i, e)` when `i` is an endpoint of
/// `e` and 0 otherwise.
pub fn incidence_matrix(g: &SignedGraph, eta: &Orientation) -> Result<IntMatrix, OrientationError> {
    eta.check(g)?;
    let mut b = IntMatrix::zeros(g.vertex_count(), g.edge_count());
    for (id, (e, &(at_u, at_v))) in g.edges().iter().zip(eta.etas()).enumerate() {
        b.set(e.u, id, at_u.value());
        b.set(e.v, id, at_v.value());
    }
    Ok(b)
}

/// Orientation in which every vertex has as many `+1` as `-1` incidences,
/// traced from an Euler circuit of each component. Each traversal `a -> b`
/// gets `eta(a) = -1` (leaving) and `eta(b) = +1` (entering).
pub fn eulerian_orientation(g: &SignedGraph) -> Result<Orientation, OrientationError> {
    if !g.is_all_positive() {
        return Err(OrientationError::NotAllPositive);
    }
    if let Some(vertex) = (0..g.vertex_count()).find(|&v| g.degree(v) % 2 == 1) {
        return Err(OrientationError::OddDegree { vertex, degree: g.degree(vertex) });
    }
    let m = g.edge_count();
    let mut used = vec![false; m];
    let mut cursor = vec![0usize; g.vertex_count()];
    let mut etas = vec![(Sign::Plus, Sign::Minus); m];
    for start in 0..g.vertex_count() {
        // Hierholzer: walk unused edges from the top of the stack; a walk
        // can only get stuck where it started, so every vertex is entered
        // exactly as often as it is left.
        let mut stack = vec![start];
        while let Some(&a) = stack.last() {
            let adj = g.neighbors(a);
            while cursor[a] < adj.len() && used[adj[cursor[a]].1] {
                cursor[a] += 1;
            }
            if cursor[a] == adj.len() {
                stack.pop();
                continue;
            }
            let (b, id) = adj[cursor[a]];
            used[id] = true;
            etas[id] = if a == g.edge(id).u {
                (Sign::Minus, Sign::Plus)
            } else {
                (Sign::Plus, Sign::Minus)
            };
            stack.push(b);
        }
    }
    Ok(Orientation { checksum: g.checksum(), etas })
}

/// True iff every row sum of `B_eta` is zero.
pub fn is_eulerian(g: &SignedGraph, eta: &Orientation) -> Result<bool, OrientationError> {
    Ok(incidence_matrix(g, eta)?.row_sums().iter().all(|&s| s == 0))
}
