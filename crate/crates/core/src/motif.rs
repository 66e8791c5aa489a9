//! Counts of (not necessarily induced) subgraphs isomorphic to twelve small
//! patterns. Each unlabeled copy is counted once.

use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::graph::{bit, Bits, Graph};

/// The fixed patterns. `Pk` is the path on `k` vertices, `K13` the claw,
/// `Ck` the cycle, `U4` a triangle with a pendant vertex (paw), `U5` a
/// 4-cycle with a pendant vertex, `B4` two triangles sharing an edge
/// (diamond) and `B5` two triangles sharing a vertex (bowtie).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Motif {
    P2,
    P3,
    P4,
    K13,
    C3,
    C4,
    C5,
    C6,
    U4,
    U5,
    B4,
    B5,
}

impl Motif {
    pub const ALL: [Motif; 12] = [
        Motif::P2,
        Motif::P3,
        Motif::P4,
        Motif::K13,
        Motif::C3,
        Motif::C4,
        Motif::C5,
        Motif::C6,
        Motif::U4,
        Motif::U5,
        Motif::B4,
        Motif::B5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Motif::P2 => "P2",
            Motif::P3 => "P3",
            Motif::P4 => "P4",
            Motif::K13 => "K13",
            Motif::C3 => "C3",
            Motif::C4 => "C4",
            Motif::C5 => "C5",
            Motif::C6 => "C6",
            Motif::U4 => "U4",
            Motif::U5 => "U5",
            Motif::B4 => "B4",
            Motif::B5 => "B5",
        }
    }

    fn index(self) -> usize {
        self as usize
    }

    pub fn pattern(self) -> Graph {
        let edges: &[(usize, usize)] = match self {
            Motif::P2 => &[(0, 1)],
            Motif::P3 => &[(0, 1), (1, 2)],
            Motif::P4 => &[(0, 1), (1, 2), (2, 3)],
            Motif::K13 => &[(0, 1), (0, 2), (0, 3)],
            Motif::C3 => &[(0, 1), (1, 2), (2, 0)],
            Motif::C4 => &[(0, 1), (1, 2), (2, 3), (3, 0)],
            Motif::C5 => &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)],
            Motif::C6 => &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)],
            Motif::U4 => &[(0, 1), (1, 2), (2, 0), (0, 3)],
            Motif::U5 => &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)],
            Motif::B4 => &[(0, 1), (1, 2), (2, 0), (1, 3), (2, 3)],
            Motif::B5 => &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)],
        };
        let n = edges.iter().map(|&(u, v)| u.max(v)).max().unwrap_or(0) + 1;
        Graph::from_edges(n, edges.iter().copied()).expect("motif patterns are valid")
    }

    /// Size of the pattern's automorphism group.
    pub fn automorphisms(self) -> u64 {
        match self {
            Motif::P2 | Motif::P3 | Motif::P4 | Motif::U4 | Motif::U5 => 2,
            Motif::K13 | Motif::C3 => 6,
            Motif::C4 | Motif::B5 => 8,
            Motif::C5 => 10,
            Motif::C6 => 12,
            Motif::B4 => 4,
        }
    }
}

impl fmt::Display for Motif {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Motif {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Motif::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown motif `{s}`"))
    }
}

/// One count per [`Motif`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct MotifCounts([u64; 12]);

impl MotifCounts {
    pub fn get(&self, m: Motif) -> u64 {
        self.0[m.index()]
    }

    fn set(&mut self, m: Motif, value: u64) {
        self.0[m.index()] = value;
    }

    pub fn iter(&self) -> impl Iterator<Item = (Motif, u64)> + '_ {
        Motif::ALL.into_iter().map(|m| (m, self.get(m)))
    }
}

impl Index<Motif> for MotifCounts {
    type Output = u64;

    fn index(&self, m: Motif) -> &u64 {
        &self.0[m.index()]
    }
}

/// Brute-force count of copies of `m` in `g`: every injective map of the
/// pattern's vertices into `g` that carries edges to edges, divided by the
/// pattern's automorphism count.
pub fn count_motif(g: &Graph, m: Motif) -> u64 {
    let pattern = m.pattern();
    let p = pattern.order();
    if p > g.order() || pattern.size() > g.size() {
        return 0;
    }
    let pattern_edges: Vec<(usize, usize)> = pattern.edges().collect();
    let mut embeddings = 0u64;
    for subset in (0..g.order()).combinations(p) {
        for image in subset.iter().copied().permutations(p) {
            if pattern_edges
                .iter()
                .all(|&(a, b)| g.has_edge(image[a], image[b]))
            {
                embeddings += 1;
            }
        }
    }
    debug_assert_eq!(embeddings % m.automorphisms(), 0);
    embeddings / m.automorphisms()
}

/// All twelve counts by brute force.
pub fn count_all(g: &Graph) -> MotifCounts {
    let mut out = MotifCounts::default();
    for m in Motif::ALL {
        out.set(m, count_motif(g, m));
    }
    out
}

fn choose2(x: u64) -> u64 {
    x * x.saturating_sub(1) / 2
}

fn choose3(x: u64) -> u64 {
    x * x.saturating_sub(1) * x.saturating_sub(2) / 6
}

/// The same counts as [`count_all`] from degree, triangle and short-cycle
/// statistics.
pub fn fast_counts(g: &Graph) -> MotifCounts {
    let n = g.order();
    let rows = g.rows();
    let deg: Vec<u64> = (0..n).map(|v| g.degree(v) as u64).collect();

    let mut out = MotifCounts::default();
    out.set(Motif::P2, g.size() as u64);
    out.set(Motif::P3, deg.iter().map(|&d| choose2(d)).sum());
    out.set(Motif::K13, deg.iter().map(|&d| choose3(d)).sum());

    // Closed 3-walks through each vertex: twice the triangles at that vertex.
    let walks3: Vec<u64> = (0..n)
        .map(|v| {
            g.neighbors(v)
                .map(|u| (rows[u] & rows[v]).count_ones() as u64)
                .sum()
        })
        .collect();
    let trace3: u64 = walks3.iter().sum();
    let triangles = trace3 / 6;
    out.set(Motif::C3, triangles);

    let mut p4_raw = 0u64;
    let mut diamonds = 0u64;
    for (u, v) in g.edges() {
        p4_raw += (deg[u] - 1) * (deg[v] - 1);
        diamonds += choose2((rows[u] & rows[v]).count_ones() as u64);
    }
    out.set(Motif::P4, p4_raw - 3 * triangles);
    out.set(Motif::B4, diamonds);

    let tri_at: Vec<u64> = walks3.iter().map(|w| w / 2).collect();
    out.set(
        Motif::B5,
        tri_at.iter().map(|&t| choose2(t)).sum::<u64>() - 2 * diamonds,
    );
    out.set(
        Motif::U4,
        (0..n).map(|v| tri_at[v] * deg[v].saturating_sub(2)).sum(),
    );

    let cycles = short_cycles(g);
    out.set(Motif::C4, cycles.c4);
    out.set(Motif::C5, cycles.c5);
    out.set(Motif::C6, cycles.c6);
    out.set(Motif::U5, cycles.u5);
    out
}

#[derive(Default)]
struct CycleStats {
    c4: u64,
    c5: u64,
    c6: u64,
    u5: u64,
}

/// Enumerates cycles of length 4 to 6 by depth-first search from each
/// cycle's smallest vertex; each cycle is met once per direction.
fn short_cycles(g: &Graph) -> CycleStats {
    struct Walk<'a> {
        rows: &'a [u64],
        start: usize,
        allowed: u64,
        counts: [u64; 7],
        pendant_on_c4: u64,
    }

    impl Walk<'_> {
        fn extend(&mut self, v: usize, len: usize, on_path: u64) {
            // `len` vertices on the path, `v` the last one.
            if len >= 4 && self.rows[v] & bit(self.start) != 0 {
                self.counts[len] += 1;
                if len == 4 {
                    self.pendant_on_c4 += Bits::new(on_path)
                        .map(|w| (self.rows[w] & !on_path).count_ones() as u64)
                        .sum::<u64>();
                }
            }
            if len == 6 {
                return;
            }
            for u in Bits::new(self.rows[v] & self.allowed & !on_path) {
                self.extend(u, len + 1, on_path | bit(u));
            }
        }
    }

    let n = g.order();
    let mut stats = CycleStats::default();
    for s in 0..n {
        let upto_s = bit(s) | (bit(s) - 1);
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let allowed = all & !upto_s;
        let mut walk = Walk {
            rows: g.rows(),
            start: s,
            allowed,
            counts: [0; 7],
            pendant_on_c4: 0,
        };
        walk.extend(s, 1, bit(s));
        stats.c4 += walk.counts[4] / 2;
        stats.c5 += walk.counts[5] / 2;
        stats.c6 += walk.counts[6] / 2;
        stats.u5 += walk.pendant_on_c4 / 2;
    }
    stats
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bowtie() -> Graph {
        Motif::B5.pattern()
    }

    #[test]
    fn automorphism_table_matches_enumeration() {
        for m in Motif::ALL {
            let p = m.pattern();
            let autos = (0..p.order())
                .permutations(p.order())
                .filter(|perm| p.relabel(perm).unwrap() == p)
                .count() as u64;
            assert_eq!(autos, m.automorphisms(), "{m}");
        }
    }

    #[test]
    fn each_pattern_contains_itself_once() {
        for m in Motif::ALL {
            assert_eq!(count_motif(&m.pattern(), m), 1, "{m}");
        }
    }

    #[test]
    fn small_examples() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(count_motif(&k4, Motif::C3), 4);
        assert_eq!(count_motif(&k4, Motif::B4), 6);
        assert_eq!(count_motif(&Graph::cycle(4).unwrap(), Motif::P3), 4);
        assert_eq!(count_motif(&bowtie(), Motif::B5), 1);
    }

    #[test]
    fn triangle_counts() {
        let c = count_all(&Graph::complete(3).unwrap());
        for (m, v) in c.iter() {
            let expect = match m {
                Motif::P2 | Motif::P3 => 3,
                Motif::C3 => 1,
                _ => 0,
            };
            assert_eq!(v, expect, "{m}");
        }
    }

    #[test]
    fn hexagon_counts() {
        let c = count_all(&Graph::cycle(6).unwrap());
        for (m, v) in c.iter() {
            let expect = match m {
                Motif::P2 | Motif::P3 | Motif::P4 => 6,
                Motif::C6 => 1,
                _ => 0,
            };
            assert_eq!(v, expect, "{m}");
        }
        assert_eq!(fast_counts(&Graph::cycle(6).unwrap()), c);
    }

    #[test]
    fn single_vertex_is_all_zero() {
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(count_all(&k1), MotifCounts::default());
        assert_eq!(fast_counts(&k1), MotifCounts::default());
        assert_eq!(
            fast_counts(&Graph::empty(0).unwrap()),
            MotifCounts::default()
        );
    }

    #[test]
    fn fast_path_on_k4_and_k6() {
        for n in [4, 6] {
            let k = Graph::complete(n).unwrap();
            assert_eq!(fast_counts(&k), count_all(&k));
        }
    }

    #[test]
    fn chorded_square_u5() {
        // 4-cycle 0-1-2-3 with chord 0-2 and a pendant at 0: chords must not
        // count as pendant edges of the 4-cycle.
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (0, 4)]).unwrap();
        assert_eq!(count_motif(&g, Motif::U5), 1);
        assert_eq!(fast_counts(&g), count_all(&g));
    }

    #[test]
    fn motif_names_parse() {
        for m in Motif::ALL {
            assert_eq!(m.name().parse::<Motif>(), Ok(m));
        }
        assert!("C7".parse::<Motif>().is_err());
    }
}
