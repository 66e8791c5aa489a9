//! Spectral moments `S_k = sum of k-th powers of adjacency eigenvalues`,
//! computed exactly as counts of closed walks of length `k`.

mod float;
mod formulas;
mod order;
mod walks;

pub use float::{float_moment, float_moments};
pub use formulas::{
    s4_formula, s4_from_counts, s5_formula, s5_from_counts, s6_formula, s6_from_counts,
    s_low_formula,
};
pub use order::{compare_moments, s_compare, SOrderResult, SRelation};
pub use walks::{checked_closed_walks, closed_walks, exact_closed_walks, WalkScalar};

use std::fmt;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectralError {
    #[error("the moment sequence of the empty graph is undefined")]
    EmptyGraph,
    #[error("symmetric eigensolver did not converge")]
    NoConvergence,
}

/// The moments `(S_0, ..., S_{n-1})` of an `n`-vertex graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MomentSequence<T = BigUint> {
    values: Vec<T>,
}

impl<T> MomentSequence<T> {
    pub fn from_values(values: Vec<T>) -> Self {
        MomentSequence { values }
    }

    /// Order of the graph the sequence belongs to.
    pub fn order(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn get(&self, k: usize) -> Option<&T> {
        self.values.get(k)
    }

    pub fn into_values(self) -> Vec<T> {
        self.values
    }
}

impl<T: fmt::Display> fmt::Display for MomentSequence<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

// Decimal strings keep values exact for consumers whose numbers are doubles.
impl<T: fmt::Display> Serialize for MomentSequence<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.values.iter().map(|v| v.to_string()))
    }
}

/// Exact `S_k(G)`, the number of closed walks of length `k`.
pub fn spectral_moment(g: &Graph, k: usize) -> BigUint {
    exact_closed_walks(g, k).pop().expect("k + 1 traces")
}

/// `(S_0, ..., S_{n-1})` for a graph with at least one vertex.
pub fn moment_sequence(g: &Graph) -> Result<MomentSequence, SpectralError> {
    let n = g.order();
    if n == 0 {
        return Err(SpectralError::EmptyGraph);
    }
    Ok(MomentSequence::from_values(exact_closed_walks(g, n - 1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2_fourth_moment() {
        assert_eq!(
            spectral_moment(&Graph::complete(2).unwrap(), 4),
            BigUint::from(2u8)
        );
    }

    #[test]
    fn zeroth_moment_is_order() {
        for n in 1..8 {
            assert_eq!(
                spectral_moment(&Graph::path(n).unwrap(), 0),
                BigUint::from(n)
            );
        }
    }

    #[test]
    fn cycle_examples() {
        assert_eq!(
            spectral_moment(&Graph::cycle(4).unwrap(), 4),
            BigUint::from(32u8)
        );
        assert_eq!(
            spectral_moment(&Graph::cycle(5).unwrap(), 5),
            BigUint::from(10u8)
        );
    }

    #[test]
    fn sequences() {
        let seq = |g: Graph| moment_sequence(&g).unwrap().to_string();
        assert_eq!(seq(Graph::complete(3).unwrap()), "3,0,6");
        assert_eq!(seq(Graph::empty(1).unwrap()), "1");
        assert_eq!(seq(Graph::path(3).unwrap()), "3,0,4");
        assert_eq!(
            moment_sequence(&Graph::empty(0).unwrap()),
            Err(SpectralError::EmptyGraph)
        );
    }

    #[test]
    fn large_complete_graph_overflows_into_bigint() {
        // Closed walks in K_n: ((n-1)^k + (n-1)(-1)^k).
        let n = 40usize;
        let k = 39;
        let expected = BigUint::from(n - 1).pow(k as u32) - BigUint::from(n - 1);
        assert_eq!(spectral_moment(&Graph::complete(n).unwrap(), k), expected);
        assert!(expected > BigUint::from(u64::MAX));
    }

    #[test]
    fn serializes_as_decimal_strings() {
        let m = moment_sequence(&Graph::complete(3).unwrap()).unwrap();
        assert_eq!(serde_json::to_string(&m).unwrap(), r#"["3","0","6"]"#);
    }
}
