//! Exact spectral moments of simple graphs, the lexicographic S-order they
//! induce, constructions of the extremal graphs among connected graphs with
//! a given number of cut edges, and an exhaustive census that checks which
//! graphs come first, second, second-last and last.
//!
//! Walk counting is generic over the scalar ([`spectral::WalkScalar`]); the
//! aliases below fix the choices used for ordering decisions.
//!
//! ```
//! use smorder::{families, spectral, Graph};
//!
//! let lollipop = families::pnk(6, 3).unwrap();
//! let clique = families::knk(6, 3).unwrap();
//! let r = spectral::s_compare(&lollipop, &clique);
//! assert_eq!(r.relation, spectral::SRelation::Precedes);
//! assert_eq!(spectral::moment_sequence(&Graph::complete(3).unwrap()).unwrap().to_string(), "3,0,6");
//! ```

pub mod bridges;
pub mod canon;
pub mod census;
pub mod families;
pub mod format;
pub mod graph;
pub mod motif;
pub mod spectral;

pub use num_bigint::BigUint;

pub use bridges::{cut_edge_count, cut_edges};
pub use canon::{canonical_form, CanonicalCode, Canonicalizer};
pub use format::{emit_graph6, parse_edge_list, parse_graph6};
pub use graph::{EdgeSet, Graph, GraphError};
pub use motif::{Motif, MotifCounts};

/// Exact moment value.
pub type Moment = BigUint;
/// Exact moment sequence; the only kind used for S-order decisions.
pub type Moments = spectral::MomentSequence<Moment>;
/// Eigenvalue-based moments, for diagnostics.
pub type FloatMoments = spectral::MomentSequence<f64>;
/// Single-precision eigenvalue-based moments.
pub type FloatMoments32 = spectral::MomentSequence<f32>;
