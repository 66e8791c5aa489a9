//! Canonical labeling of small graphs.
//!
//! Vertices are first partitioned by iterated degree refinement (a vertex's
//! color is refined by how many neighbors it has in every current color
//! class). When refinement stalls with a non-singleton cell, each vertex of
//! the first such cell is individualized in turn and the search recurses.
//! Every leaf is a discrete partition, i.e. a labeling, and the code is the
//! largest upper-triangle adjacency bitstring over all leaves. Branches on
//! twin vertices (same neighborhood apart from each other) are skipped since
//! swapping twins is an automorphism.

use std::fmt;

use thiserror::Error;

use crate::graph::{bit, Bits, Graph};

/// Order above which canonicalization is refused unless the bound is raised.
pub const DEFAULT_CANON_BOUND: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonError {
    #[error("graph order {order} exceeds the canonicalization bound {bound}")]
    OrderAboveBound { order: usize, bound: usize },
}

/// Total-order key equal for two graphs iff they are isomorphic.
///
/// Orders first by vertex count, then by the canonical adjacency bitstring
/// (graph6 column order, most significant bit first).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode {
    order: usize,
    words: Vec<u64>,
}

impl CanonicalCode {
    pub fn order(&self) -> usize {
        self.order
    }

    /// Big-endian byte rendering of the key.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(1 + 8 * self.words.len());
        out.push(self.order as u8);
        for w in &self.words {
            out.extend_from_slice(&w.to_be_bytes());
        }
        out
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({}:", self.order)?;
        for w in &self.words {
            write!(f, "{w:016x}")?;
        }
        write!(f, ")")
    }
}

/// Canonicalizer with a configurable order bound.
#[derive(Debug, Clone, Copy)]
pub struct Canonicalizer {
    bound: usize,
}

impl Default for Canonicalizer {
    fn default() -> Self {
        Canonicalizer {
            bound: DEFAULT_CANON_BOUND,
        }
    }
}

impl Canonicalizer {
    pub fn with_bound(bound: usize) -> Self {
        Canonicalizer { bound }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    /// Canonical labeling as `perm[v] = new label of v`.
    pub fn labeling(&self, g: &Graph) -> Result<Vec<usize>, CanonError> {
        self.search(g).map(|(_, perm)| perm)
    }

    pub fn code(&self, g: &Graph) -> Result<CanonicalCode, CanonError> {
        self.search(g).map(|(code, _)| code)
    }

    /// The canonically relabeled graph together with its code.
    pub fn canonical_graph(&self, g: &Graph) -> Result<(Graph, CanonicalCode), CanonError> {
        let (code, perm) = self.search(g)?;
        Ok((g.relabel_unchecked(&perm), code))
    }

    fn search(&self, g: &Graph) -> Result<(CanonicalCode, Vec<usize>), CanonError> {
        let n = g.order();
        if n > self.bound {
            return Err(CanonError::OrderAboveBound {
                order: n,
                bound: self.bound,
            });
        }
        let nbits = n * n.saturating_sub(1) / 2;
        let mut s = Search {
            g,
            n,
            best: vec![0; nbits.div_ceil(64)],
            best_colors: Vec::new(),
            scratch: vec![0; nbits.div_ceil(64)],
        };
        s.descend(vec![0u8; n], usize::from(n > 0));
        let perm = s.best_colors.iter().map(|&c| c as usize).collect();
        Ok((
            CanonicalCode {
                order: n,
                words: s.best,
            },
            perm,
        ))
    }
}

/// Canonical code under the default bound.
pub fn canonical_form(g: &Graph) -> Result<CanonicalCode, CanonError> {
    Canonicalizer::default().code(g)
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    best: Vec<u64>,
    best_colors: Vec<u8>,
    scratch: Vec<u64>,
}

impl Search<'_> {
    fn descend(&mut self, mut colors: Vec<u8>, mut ncolors: usize) {
        refine(self.g, &mut colors, &mut ncolors);
        if ncolors == self.n {
            self.leaf(colors);
            return;
        }
        let mut cells = vec![0u64; ncolors];
        for (v, &c) in colors.iter().enumerate() {
            cells[c as usize] |= bit(v);
        }
        let (target, cell) = cells
            .iter()
            .enumerate()
            .find(|(_, m)| m.count_ones() > 1)
            .map(|(i, &m)| (i as u8, m))
            .expect("non-discrete partition has a non-singleton cell");

        let mut tried = 0u64;
        for v in Bits::new(cell) {
            let rows = self.g.rows();
            let twin = Bits::new(tried).any(|u| rows[u] & !bit(v) == rows[v] & !bit(u));
            if twin {
                continue;
            }
            tried |= bit(v);
            let mut next = colors.clone();
            for (u, c) in next.iter_mut().enumerate() {
                if *c > target || (*c == target && u != v) {
                    *c += 1;
                }
            }
            self.descend(next, ncolors + 1);
        }
    }

    fn leaf(&mut self, colors: Vec<u8>) {
        let n = self.n;
        let mut inv = [0usize; 64];
        for (v, &c) in colors.iter().enumerate() {
            inv[c as usize] = v;
        }
        self.scratch.iter_mut().for_each(|w| *w = 0);
        let rows = self.g.rows();
        let mut k = 0usize;
        for j in 1..n {
            let vj = bit(inv[j]);
            for &vi in &inv[..j] {
                if rows[vi] & vj != 0 {
                    self.scratch[k / 64] |= 1u64 << (63 - (k % 64));
                }
                k += 1;
            }
        }
        if self.best_colors.is_empty() || self.scratch > self.best {
            std::mem::swap(&mut self.best, &mut self.scratch);
            self.best_colors = colors;
        }
    }
}

/// Refines `colors` (dense ranks `0..ncolors`) to the coarsest stable
/// partition finer than it. New ranks are ordered by (old color, neighbor
/// counts per color), so the result is labeling-independent.
fn refine(g: &Graph, colors: &mut [u8], ncolors: &mut usize) {
    let n = colors.len();
    if n == 0 {
        return;
    }
    let rows = g.rows();
    let mut order: Vec<usize> = (0..n).collect();
    let mut keys: Vec<u8> = Vec::new();
    loop {
        let c = *ncolors;
        if c == n {
            return;
        }
        let mut cells = vec![0u64; c];
        for (v, &col) in colors.iter().enumerate() {
            cells[col as usize] |= bit(v);
        }
        let width = c + 1;
        keys.clear();
        keys.resize(n * width, 0);
        for v in 0..n {
            let key = &mut keys[v * width..(v + 1) * width];
            key[0] = colors[v];
            for (slot, &cell) in key[1..].iter_mut().zip(&cells) {
                *slot = (rows[v] & cell).count_ones() as u8;
            }
        }
        let key = |v: usize| &keys[v * width..(v + 1) * width];
        order.sort_unstable_by(|&a, &b| key(a).cmp(key(b)));
        let mut rank = 0u8;
        let mut new_colors = vec![0u8; n];
        for i in 0..n {
            if i > 0 && key(order[i]) != key(order[i - 1]) {
                rank += 1;
            }
            new_colors[order[i]] = rank;
        }
        let next = rank as usize + 1;
        colors.copy_from_slice(&new_colors);
        if next == c {
            return;
        }
        *ncolors = next;
    }
}
