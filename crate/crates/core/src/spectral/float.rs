use nalgebra::{DMatrix, RealField, SymmetricEigen};

use super::SpectralError;
use crate::graph::Graph;

const MAX_SWEEPS: usize = 10_000;

/// `sum of lambda_i^k` for `k = 0..=max_power` from the adjacency spectrum.
/// Diagnostic only; ordering decisions use the exact walk counts.
pub fn float_moments<T: RealField + Copy>(
    g: &Graph,
    max_power: usize,
) -> Result<Vec<T>, SpectralError> {
    let n = g.order();
    if n == 0 {
        return Ok(vec![T::zero(); max_power + 1]);
    }
    let a = DMatrix::<T>::from_fn(n, n, |i, j| {
        if g.has_edge(i, j) {
            T::one()
        } else {
            T::zero()
        }
    });
    let eig = SymmetricEigen::try_new(a, T::default_epsilon(), MAX_SWEEPS)
        .ok_or(SpectralError::NoConvergence)?;
    let mut powers = vec![T::one(); n];
    let mut out = Vec::with_capacity(max_power + 1);
    out.push(T::from_usize(n).expect("order fits the scalar"));
    for _ in 0..max_power {
        for (p, &l) in powers.iter_mut().zip(eig.eigenvalues.iter()) {
            *p *= l;
        }
        out.push(powers.iter().fold(T::zero(), |acc, &p| acc + p));
    }
    Ok(out)
}

pub fn float_moment<T: RealField + Copy>(g: &Graph, k: usize) -> Result<T, SpectralError> {
    float_moments(g, k).map(|mut v| v.pop().expect("k + 1 entries"))
}
