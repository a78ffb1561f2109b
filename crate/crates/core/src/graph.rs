//! The signed-graph value type and its basic invariants.

use std::collections::HashSet;
use std::fmt;
use std::ops::{Mul, Neg};

use thiserror::Error;

use crate::matrix::IntMatrix;

/// Sign of an edge, or of an incidence in an orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_value(value: i64) -> Option<Sign> {
        match value {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Minus
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn from_symbol(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Plus),
            '-' => Some(Sign::Minus),
            _ => None,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// An undirected signed edge, always stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
}

impl Edge {
    /// The endpoint opposite to `w`, if `w` is an endpoint.
    pub fn other(&self, w: usize) -> Option<usize> {
        if w == self.u {
            Some(self.v)
        } else if w == self.v {
            Some(self.u)
        } else {
            None
        }
    }

    pub fn has_endpoint(&self, w: usize) -> bool {
        self.u == w || self.v == w
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge {index} ({u}, {v}): endpoint out of range for {n} vertices")]
    EndpointOutOfRange { index: usize, u: usize, v: usize, n: usize },
    #[error("edge {index} ({u}, {v}): self-loop")]
    SelfLoop { index: usize, u: usize, v: usize },
    #[error("edge {index} ({u}, {v}): duplicate endpoint pair")]
    DuplicateEdge { index: usize, u: usize, v: usize },
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge id {edge} out of range for {m} edges")]
    EdgeOutOfRange { edge: usize, m: usize },
    #[error("matrix is not a signed adjacency matrix: {0}")]
    NotAdjacency(String),
}

/// A simple undirected graph with a sign on every edge.
///
/// Vertices are `0..n`, edge ids are positions in the edge list. Values are
/// immutable after construction; every operation that changes the graph
/// returns a new one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedGraph {
    n: usize,
    edges: Vec<Edge>,
    /// Per vertex: `(neighbor, edge id)` in edge-id order.
    adjacency: Vec<Vec<(usize, usize)>>,
}

impl SignedGraph {
    /// Builds a signed graph, normalizing every edge to `u < v` while keeping
    /// the input order as the edge-id order.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize, Sign)>,
    {
        let mut seen = HashSet::new();
        let mut list = Vec::new();
        for (index, (a, b, sign)) in edges.into_iter().enumerate() {
            if a >= n || b >= n {
                return Err(GraphError::EndpointOutOfRange { index, u: a, v: b, n });
            }
            if a == b {
                return Err(GraphError::SelfLoop { index, u: a, v: b });
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if !seen.insert((u, v)) {
                return Err(GraphError::DuplicateEdge { index, u: a, v: b });
            }
            list.push(Edge { u, v, sign });
        }
        Ok(Self::from_checked(n, list))
    }

    fn from_checked(n: usize, edges: Vec<Edge>) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        for (id, e) in edges.iter().enumerate() {
            adjacency[e.u].push((e.v, id));
            adjacency[e.v].push((e.u, id));
        }
        SignedGraph { n, edges, adjacency }
    }

    /// Graph on `n` vertices with no edges.
    pub fn edgeless(n: usize) -> Self {
        Self::from_checked(n, Vec::new())
    }

    /// Reads the signed graph encoded by a symmetric matrix with zero diagonal
    /// and off-diagonal entries in {-1, 0, 1}. Edges come out sorted by `(u, v)`.
    pub fn from_adjacency(matrix: &IntMatrix) -> Result<Self, GraphError> {
        if matrix.rows() != matrix.cols() {
            return Err(GraphError::NotAdjacency(format!(
                "{}x{} is not square",
                matrix.rows(),
                matrix.cols()
            )));
        }
        let n = matrix.rows();
        let mut edges = Vec::new();
        for i in 0..n {
            if matrix.get(i, i) != 0 {
                return Err(GraphError::NotAdjacency(format!(
                    "diagonal entry ({i}, {i}) = {}",
                    matrix.get(i, i)
                )));
            }
            for j in (i + 1)..n {
                let x = matrix.get(i, j);
                if x != matrix.get(j, i) {
                    return Err(GraphError::NotAdjacency(format!("asymmetric at ({i}, {j})")));
                }
                match x {
                    0 => {}
                    1 => edges.push(Edge { u: i, v: j, sign: Sign::Plus }),
                    -1 => edges.push(Edge { u: i, v: j, sign: Sign::Minus }),
                    other => {
                        return Err(GraphError::NotAdjacency(format!(
                            "entry ({i}, {j}) = {other}"
                        )))
                    }
                }
            }
        }
        Ok(Self::from_checked(n, edges))
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> &Edge {
        &self.edges[id]
    }

    /// `(neighbor, edge id)` pairs of `v`.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Edge id joining `u` and `v`, if any.
    pub fn find_edge(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        let (small, other) = if self.adjacency[u].len() <= self.adjacency[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adjacency[small]
            .iter()
            .find(|&&(w, _)| w == other)
            .map(|&(_, id)| id)
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn check_edge(&self, e: usize) -> Result<(), GraphError> {
        if e < self.edges.len() {
            Ok(())
        } else {
            Err(GraphError::EdgeOutOfRange { edge: e, m: self.edges.len() })
        }
    }

    /// The common degree, if the underlying graph is regular. An empty graph
    /// has no degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let first = self.adjacency.first()?.len();
        self.adjacency.iter().all(|a| a.len() == first).then_some(first)
    }

    pub fn is_all_positive(&self) -> bool {
        self.edges.iter().all(|e| e.sign == Sign::Plus)
    }

    pub fn negative_edge_count(&self) -> usize {
        self.edges.iter().filter(|e| e.sign.is_negative()).count()
    }

    /// `-Σ`: same underlying graph, every sign flipped.
    pub fn negate(&self) -> SignedGraph {
        self.map_signs(|_, e| -e.sign)
    }

    /// Same underlying graph with signs recomputed per edge.
    pub fn map_signs<F>(&self, mut f: F) -> SignedGraph
    where
        F: FnMut(usize, &Edge) -> Sign,
    {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .map(|(id, e)| Edge { sign: f(id, e), ..*e })
            .collect();
        Self::from_checked(self.n, edges)
    }

    /// True when both graphs have the same vertex count and the same labeled
    /// edge list, ignoring signs.
    pub fn same_underlying(&self, other: &SignedGraph) -> bool {
        self.n == other.n
            && self.edges.len() == other.edges.len()
            && self
                .edges
                .iter()
                .zip(&other.edges)
                .all(|(a, b)| a.u == b.u && a.v == b.v)
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(x) = stack.pop() {
                comp.push(x);
                for &(y, _) in &self.adjacency[x] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Deletes the given vertices and relabels the rest in increasing order.
    /// Returns the new graph and, for each new vertex, its old id.
    pub fn delete_vertices(&self, removed: &[usize]) -> Result<(SignedGraph, Vec<usize>), GraphError> {
        let mut gone = vec![false; self.n];
        for &v in removed {
            self.check_vertex(v)?;
            gone[v] = true;
        }
        let mut relabel = vec![usize::MAX; self.n];
        let mut kept = Vec::new();
        for v in 0..self.n {
            if !gone[v] {
                relabel[v] = kept.len();
                kept.push(v);
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| !gone[e.u] && !gone[e.v])
            .map(|e| Edge { u: relabel[e.u], v: relabel[e.v], sign: e.sign })
            .collect();
        Ok((Self::from_checked(kept.len(), edges), kept))
    }

    /// Deletes the given edges; surviving edges keep their relative order.
    pub fn delete_edges(&self, removed: &[usize]) -> Result<SignedGraph, GraphError> {
        let mut gone = vec![false; self.edges.len()];
        for &e in removed {
            self.check_edge(e)?;
            gone[e] = true;
        }
        let edges = self
            .edges
            .iter()
            .zip(&gone)
            .filter(|(_, &g)| !g)
            .map(|(e, _)| *e)
            .collect();
        Ok(Self::from_checked(self.n, edges))
    }

    /// Disjoint union; each part occupies a consecutive block of ids.
    pub fn disjoint_union(parts: &[&SignedGraph]) -> SignedGraph {
        let mut n = 0;
        let mut edges = Vec::new();
        for g in parts {
            edges.extend(g.edges.iter().map(|e| Edge { u: e.u + n, v: e.v + n, sign: e.sign }));
            n += g.n;
        }
        Self::from_checked(n, edges)
    }

    /// Copy of the graph with the edge list sorted by `(u, v)`.
    pub fn with_sorted_edges(&self) -> SignedGraph {
        let mut edges = self.edges.clone();
        edges.sort_by_key(|e| (e.u, e.v));
        Self::from_checked(self.n, edges)
    }

    /// `A_Σ`.
    pub fn adjacency_matrix(&self) -> IntMatrix {
        let mut a = IntMatrix::zeros(self.n, self.n);
        for e in &self.edges {
            a.set(e.u, e.v, e.sign.value());
            a.set(e.v, e.u, e.sign.value());
        }
        a
    }

    /// `L_Σ = D_G - A_Σ`.
    pub fn laplacian_matrix(&self) -> IntMatrix {
        let mut l = self.adjacency_matrix().scaled(-1);
        for v in 0..self.n {
            l.set(v, v, self.degree(v) as i64);
        }
        l
    }

    /// FNV-1a hash of the normalized edge list (endpoints and signs). Used
    /// to bind orientations to the graph they were made for.
    pub fn checksum(&self) -> u64 {
        const OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
        const PRIME: u64 = 0x0000_0100_0000_01b3;
        let mut h = OFFSET;
        let mut feed = |bytes: &[u8]| {
            for &b in bytes {
                h ^= u64::from(b);
                h = h.wrapping_mul(PRIME);
            }
        };
        for e in &self.edges {
            feed(&(e.u as u64).to_le_bytes());
            feed(&(e.v as u64).to_le_bytes());
            feed(&[e.sign.symbol() as u8]);
        }
        h
    }

    /// Dense `n x n` table of edge signs as -1/0/+1.
    pub(crate) fn sign_table(&self) -> Vec<i8> {
        let mut t = vec![0i8; self.n * self.n];
        for e in &self.edges {
            let s = e.sign.value() as i8;
            t[e.u * self.n + e.v] = s;
            t[e.v * self.n + e.u] = s;
        }
        t
    }
}

/// Positive and negative triangle counts.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TriangleCensus {
    pub positive: usize,
    pub negative: usize,
}

impl TriangleCensus {
    pub fn total(&self) -> usize {
        self.positive + self.negative
    }
}

/// Counts every 3-clique once and classifies it by the product of its edge
/// signs.
pub fn triangle_census(g: &SignedGraph) -> TriangleCensus {
    let n = g.vertex_count();
    let table = g.sign_table();
    let mut census = TriangleCensus::default();
    for e in g.edges() {
        // e.u < e.v < w
        for &(w, f) in g.neighbors(e.v) {
            if w <= e.v {
                continue;
            }
            let s = table[e.u * n + w];
            if s == 0 {
                continue;
            }
            let sign = e.sign.value() * g.edge(f).sign.value() * i64::from(s);
            if sign > 0 {
                census.positive += 1;
            } else {
                census.negative += 1;
            }
        }
    }
    census
}

/// A minimum vertex cover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexCover {
    pub size: usize,
    pub vertices: Vec<usize>,
}

/// Exact minimum vertex cover by branch and bound: branch on a vertex of
/// maximum remaining degree, either taking it or taking all its neighbors.
pub fn vertex_cover_number(g: &SignedGraph) -> VertexCover {
    let n = g.vertex_count();
    let adjacency: Vec<Vec<usize>> = (0..n)
        .map(|v| g.neighbors(v).iter().map(|&(w, _)| w).collect())
        .collect();
    // Initial incumbent: every non-isolated vertex.
    let mut best: Vec<usize> = (0..n).filter(|&v| !adjacency[v].is_empty()).collect();
    let mut search = CoverSearch {
        adjacency: &adjacency,
        taken: vec![false; n],
        chosen: Vec::new(),
    };
    search.run(&mut best);
    best.sort_unstable();
    VertexCover { size: best.len(), vertices: best }
}

struct CoverSearch<'a> {
    adjacency: &'a [Vec<usize>],
    taken: Vec<bool>,
    chosen: Vec<usize>,
}

impl CoverSearch<'_> {
    fn remaining_degree(&self, v: usize) -> usize {
        self.adjacency[v].iter().filter(|&&w| !self.taken[w]).count()
    }

    fn run(&mut self, best: &mut Vec<usize>) {
        let n = self.adjacency.len();
        let mut pivot = None;
        let mut max_degree = 0;
        let mut twice_edges = 0;
        for v in 0..n {
            if self.taken[v] {
                continue;
            }
            let d = self.remaining_degree(v);
            twice_edges += d;
            if d > max_degree {
                max_degree = d;
                pivot = Some(v);
            }
        }
        let Some(v) = pivot else {
            if self.chosen.len() < best.len() {
                *best = self.chosen.clone();
            }
            return;
        };
        let remaining_edges = twice_edges / 2;
        let lower = remaining_edges.div_ceil(max_degree);
        if self.chosen.len() + lower >= best.len() {
            return;
        }

        self.taken[v] = true;
        self.chosen.push(v);
        self.run(best);
        self.chosen.pop();
        self.taken[v] = false;

        // Without v every neighbor must be in the cover.
        let neighbors: Vec<usize> = self.adjacency[v]
            .iter()
            .copied()
            .filter(|&w| !self.taken[w])
            .collect();
        if self.chosen.len() + neighbors.len() >= best.len() {
            return;
        }
        self.taken[v] = true;
        for &w in &neighbors {
            self.taken[w] = true;
            self.chosen.push(w);
        }
        self.run(best);
        for &w in &neighbors {
            self.taken[w] = false;
            self.chosen.pop();
        }
        self.taken[v] = false;
    }
}
