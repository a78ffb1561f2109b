//! Signed graphs with orientations, their line and total graphs, switching,
//! balance and frustration, spectra of total graphs of regular signed graphs,
//! and Cartesian-product polynomials in the total graph operator.
//!
//! ```
//! use signed_total::{family, frustration_index, Family, Sign, SignPattern};
//!
//! let c4 = family(Family::Cycle, 4, &SignPattern::parse("+++-").unwrap()).unwrap();
//! assert_eq!(frustration_index(&c4).unwrap().value, 1);
//! assert_eq!(c4.negative_edge_count(), 1);
//! # let _ = Sign::Plus;
//! ```

pub mod balance;
pub mod eigen;
pub mod generators;
pub mod graph;
pub mod matrix;
pub mod operators;
pub mod orientation;
pub mod product;
pub mod spectral;
pub mod switching;

pub use balance::{
    balanced_after_edge_deletion, balanced_after_vertex_deletion, frustration_index,
    frustration_index_by_deletion, frustration_number, is_antibalanced, is_balanced, BalanceError,
    FrustrationResult,
};
pub use generators::{family, random_graph, square_with_pendant, Family, GeneratorError, SignPattern};
pub use graph::{triangle_census, vertex_cover_number, Edge, GraphError, Sign, SignedGraph, TriangleCensus, VertexCover};
pub use matrix::{IntMatrix, MatrixError, SymMatrix};
pub use operators::{
    line_adjacency_matrix, line_graph, line_graph_matrix, line_orientation, total_adjacency_matrix, total_graph,
    total_graph_matrix, OperatorError, Variant,
};
pub use orientation::{
    eulerian_orientation, incidence_matrix, is_eulerian, orient, OrientMode, Orientation, OrientationError,
};
pub use product::{
    cartesian_product, iterated_params, multiset_power, multiset_sum, polynomial_compose, polynomial_spectrum,
    total_power, PolySpec, ProductError,
};
pub use spectral::{
    eigenvalues, lambda_max_bound, main_eigenvalues, spectrum, spectrum_interval, total_spectrum_formula,
    MainSpectrum, SpectralError, Spectrum, Which,
};
pub use switching::{switch, switch_oriented, switching_equivalent, SwitchWitness, SwitchingError};
