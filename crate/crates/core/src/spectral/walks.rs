use std::ops::AddAssign;

use num_bigint::BigUint;
use num_traits::{CheckedAdd, One, Zero};

use crate::graph::Graph;

/// Scalar able to count walks: only zero, one and in-place addition are used,
/// since adjacency entries are 0 or 1.
pub trait WalkScalar: Clone + Zero + One + for<'a> AddAssign<&'a Self> {}

impl<T> WalkScalar for T where T: Clone + Zero + One + for<'a> AddAssign<&'a T> {}

/// `trace(A^k)` for `k = 0..=max_power`, by iterated multiplication
/// `P_{k+1}[i][j] = sum over neighbors l of j of P_k[i][l]`.
pub fn closed_walks<T: WalkScalar>(g: &Graph, max_power: usize) -> Vec<T> {
    let n = g.order();
    let mut power = identity::<T>(n);
    let mut next = vec![T::zero(); n * n];
    let mut traces = Vec::with_capacity(max_power + 1);
    traces.push(trace(&power, n));
    for _ in 0..max_power {
        for i in 0..n {
            let row = &power[i * n..(i + 1) * n];
            for j in 0..n {
                let mut acc = T::zero();
                for l in g.neighbors(j) {
                    acc += &row[l];
                }
                next[i * n + j] = acc;
            }
        }
        std::mem::swap(&mut power, &mut next);
        traces.push(trace(&power, n));
    }
    traces
}

/// Same as [`closed_walks`], or `None` if any entry overflows `T`.
pub fn checked_closed_walks<T>(g: &Graph, max_power: usize) -> Option<Vec<T>>
where
    T: Clone + Zero + One + CheckedAdd,
{
    let n = g.order();
    let mut power = identity::<T>(n);
    let mut next = vec![T::zero(); n * n];
    let mut traces = Vec::with_capacity(max_power + 1);
    traces.push(checked_trace(&power, n)?);
    for _ in 0..max_power {
        for i in 0..n {
            let row = &power[i * n..(i + 1) * n];
            for j in 0..n {
                let mut acc = T::zero();
                for l in g.neighbors(j) {
                    acc = acc.checked_add(&row[l])?;
                }
                next[i * n + j] = acc;
            }
        }
        std::mem::swap(&mut power, &mut next);
        traces.push(checked_trace(&power, n)?);
    }
    Some(traces)
}

/// Exact traces: machine words while they fit, arbitrary precision otherwise.
pub fn exact_closed_walks(g: &Graph, max_power: usize) -> Vec<BigUint> {
    match checked_closed_walks::<u64>(g, max_power) {
        Some(small) => small.into_iter().map(BigUint::from).collect(),
        None => closed_walks::<BigUint>(g, max_power),
    }
}

fn identity<T: Clone + Zero + One>(n: usize) -> Vec<T> {
    let mut m = vec![T::zero(); n * n];
    for i in 0..n {
        m[i * n + i] = T::one();
    }
    m
}

fn trace<T: Clone + Zero + for<'a> AddAssign<&'a T>>(m: &[T], n: usize) -> T {
    let mut t = T::zero();
    for i in 0..n {
        t += &m[i * n + i];
    }
    t
}

fn checked_trace<T: Clone + Zero + CheckedAdd>(m: &[T], n: usize) -> Option<T> {
    (0..n).try_fold(T::zero(), |acc, i| acc.checked_add(&m[i * n + i]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_types_agree() {
        let g =
            Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]).unwrap();
        let big = closed_walks::<BigUint>(&g, 9);
        let small = closed_walks::<u64>(&g, 9);
        let float = closed_walks::<f64>(&g, 9);
        for ((b, s), f) in big.iter().zip(&small).zip(&float) {
            assert_eq!(*b, BigUint::from(*s));
            assert_eq!(*s as f64, *f);
        }
    }

    #[test]
    fn checked_detects_overflow() {
        let k10 = Graph::complete(10).unwrap();
        assert!(checked_closed_walks::<u8>(&k10, 3).is_none());
        assert_eq!(
            checked_closed_walks::<u8>(&k10, 2).unwrap(),
            vec![10, 0, 90]
        );
    }

    #[test]
    fn empty_graph_traces_are_zero() {
        let g = Graph::empty(0).unwrap();
        assert_eq!(closed_walks::<u64>(&g, 3), vec![0, 0, 0, 0]);
    }
}
