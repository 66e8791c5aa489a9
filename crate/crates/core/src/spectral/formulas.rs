use num_bigint::BigUint;

use crate::graph::Graph;
use crate::motif::{fast_counts, Motif, MotifCounts};

/// `(S_0, S_1, S_2, S_3) = (n, 0, 2m, 6t)` for a loopless graph with `m`
/// edges and `t` triangles.
pub fn s_low_formula(g: &Graph) -> [BigUint; 4] {
    let counts = fast_counts(g);
    [
        BigUint::from(g.order()),
        BigUint::from(0u8),
        BigUint::from(2 * counts[Motif::P2]),
        BigUint::from(6 * counts[Motif::C3]),
    ]
}

fn combine(counts: &MotifCounts, terms: &[(u128, Motif)]) -> BigUint {
    let total: u128 = terms.iter().map(|&(c, m)| c * u128::from(counts[m])).sum();
    BigUint::from(total)
}

pub fn s4_from_counts(c: &MotifCounts) -> BigUint {
    combine(c, &[(2, Motif::P2), (4, Motif::P3), (8, Motif::C4)])
}

pub fn s5_from_counts(c: &MotifCounts) -> BigUint {
    combine(c, &[(30, Motif::C3), (10, Motif::U4), (10, Motif::C5)])
}

pub fn s6_from_counts(c: &MotifCounts) -> BigUint {
    combine(
        c,
        &[
            (2, Motif::P2),
            (12, Motif::P3),
            (6, Motif::P4),
            (12, Motif::K13),
            (12, Motif::U5),
            (36, Motif::B4),
            (24, Motif::B5),
            (24, Motif::C3),
            (48, Motif::C4),
            (12, Motif::C6),
        ],
    )
}

/// `S_4 = 2 P2 + 4 P3 + 8 C4` over subgraph counts.
pub fn s4_formula(g: &Graph) -> BigUint {
    s4_from_counts(&fast_counts(g))
}

/// `S_5 = 30 C3 + 10 U4 + 10 C5` over subgraph counts.
pub fn s5_formula(g: &Graph) -> BigUint {
    s5_from_counts(&fast_counts(g))
}

pub fn s6_formula(g: &Graph) -> BigUint {
    s6_from_counts(&fast_counts(g))
}
