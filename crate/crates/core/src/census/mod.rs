//! Isomorphism-free census of connected graphs, split by cut-edge count.

mod rank;
mod verify;

pub use rank::{rank, rank_graphs, RankReport, RankedGraph};
pub use verify::{verify_theorems, ClaimId, ClaimRecord, ClaimStatus, VerificationReport};

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use rayon::prelude::*;
use thiserror::Error;

use crate::bridges::cut_edge_count;
use crate::canon::{CanonError, CanonicalCode, Canonicalizer};
use crate::format::{emit_graph6, parse_graph6, FormatError};
use crate::graph::{bit, Graph};

/// Largest order enumerated directly from labeled graphs.
pub const BUILTIN_MAX_ORDER: usize = 7;

const BLOCK_BITS: u32 = 14;

#[derive(Debug, Error)]
pub enum CensusError {
    #[error("census requires --from for n > {BUILTIN_MAX_ORDER} (requested n = {0})")]
    AboveBuiltinBound(usize),
    #[error("no census graphs available for n = {0}")]
    MissingCensus(usize),
    #[error("graphs of mixed order: expected {expected}, found {found}")]
    MixedOrders { expected: usize, found: usize },
    #[error("graph {0} is disconnected")]
    Disconnected(String),
    #[error("cannot rank an empty class")]
    EmptyClass,
    #[error("line {line}: {source}")]
    Malformed { line: usize, source: FormatError },
    #[error(transparent)]
    Canon(#[from] CanonError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Connected `n`-vertex graphs with exactly `k` cut edges, one canonical
/// representative per isomorphism class, sorted by canonical code.
#[derive(Debug, Clone)]
pub struct CensusClass {
    pub n: usize,
    pub k: usize,
    pub members: Vec<Graph>,
}

fn upper_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

/// One canonical representative per isomorphism class of connected
/// `n`-vertex graphs, by running through all labeled graphs.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>, CensusError> {
    if n > BUILTIN_MAX_ORDER {
        return Err(CensusError::AboveBuiltinBound(n));
    }
    if n <= 1 {
        return Ok(vec![Graph::empty(n).expect("tiny order")]);
    }
    let pairs = upper_pairs(n);
    let total_bits = pairs.len() as u32;
    let block_bits = BLOCK_BITS.min(total_bits);
    let blocks = 1u64 << (total_bits - block_bits);
    let canon = Canonicalizer::default();

    let merged = (0..blocks)
        .into_par_iter()
        .map(|b| {
            let mut local = BTreeMap::new();
            let mut rows = vec![0u64; n];
            for low in 0..(1u64 << block_bits) {
                let mask = (b << block_bits) | low;
                if (mask.count_ones() as usize) < n - 1 {
                    continue;
                }
                rows.iter_mut().for_each(|r| *r = 0);
                let mut m = mask;
                while m != 0 {
                    let (i, j) = pairs[m.trailing_zeros() as usize];
                    rows[i] |= bit(j);
                    rows[j] |= bit(i);
                    m &= m - 1;
                }
                let g = Graph::from_rows_unchecked(rows.clone());
                if !g.is_connected() {
                    continue;
                }
                let (cg, code) = canon.canonical_graph(&g).expect("order within bound");
                local.entry(code).or_insert(cg);
            }
            local
        })
        .reduce(BTreeMap::new, merge_maps);
    Ok(merged.into_values().collect())
}

fn merge_maps(
    mut a: BTreeMap<CanonicalCode, Graph>,
    b: BTreeMap<CanonicalCode, Graph>,
) -> BTreeMap<CanonicalCode, Graph> {
    if a.len() < b.len() {
        return merge_maps(b, a);
    }
    for (k, v) in b {
        a.entry(k).or_insert(v);
    }
    a
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineDiagnostic {
    pub line: usize,
    pub message: String,
}

/// Result of reading a graph6 catalog.
#[derive(Debug, Clone, Default)]
pub struct Ingest {
    /// Distinct graphs in order of first appearance, canonically relabeled.
    pub graphs: Vec<Graph>,
    pub lines_read: usize,
    pub duplicates: usize,
    pub diagnostics: Vec<LineDiagnostic>,
}

/// Reads graph6 lines, dropping isomorphic duplicates. Malformed lines are
/// reported and skipped, or abort the read when `strict` is set.
pub fn ingest_graph6_reader<R: BufRead>(reader: R, strict: bool) -> Result<Ingest, CensusError> {
    let canon = Canonicalizer::default();
    let mut out = Ingest::default();
    let mut seen = std::collections::HashSet::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = i + 1;
        let trimmed = line.trim_end();
        if trimmed.is_empty() {
            continue;
        }
        out.lines_read += 1;
        let parsed = parse_graph6(trimmed).map_err(|source| CensusError::Malformed {
            line: lineno,
            source,
        });
        let g = match parsed {
            Ok(g) => g,
            Err(e) if strict => return Err(e),
            Err(e) => {
                out.diagnostics.push(LineDiagnostic {
                    line: lineno,
                    message: e.to_string(),
                });
                continue;
            }
        };
        match canon.canonical_graph(&g) {
            Ok((cg, code)) => {
                if seen.insert(code) {
                    out.graphs.push(cg);
                } else {
                    out.duplicates += 1;
                }
            }
            Err(e) if strict => return Err(e.into()),
            Err(e) => out.diagnostics.push(LineDiagnostic {
                line: lineno,
                message: e.to_string(),
            }),
        }
    }
    Ok(out)
}

pub fn ingest_graph6(path: impl AsRef<Path>, strict: bool) -> Result<Ingest, CensusError> {
    let file = File::open(path)?;
    ingest_graph6_reader(BufReader::new(file), strict)
}

fn describe(g: &Graph) -> String {
    emit_graph6(g).unwrap_or_else(|_| format!("{g:?}"))
}

/// Partitions connected graphs of one order by their number of cut edges.
/// Isomorphic duplicates are merged; classes that would be empty are absent.
pub fn classify(graphs: &[Graph]) -> Result<BTreeMap<usize, CensusClass>, CensusError> {
    let Some(first) = graphs.first() else {
        return Ok(BTreeMap::new());
    };
    let n = first.order();
    if let Some(bad) = graphs.iter().find(|g| g.order() != n) {
        return Err(CensusError::MixedOrders {
            expected: n,
            found: bad.order(),
        });
    }
    let canon = Canonicalizer::default();
    let tagged = graphs
        .par_iter()
        .map(|g| {
            let k = cut_edge_count(g).map_err(|_| CensusError::Disconnected(describe(g)))?;
            let (cg, code) = canon.canonical_graph(g)?;
            Ok((k, code, cg))
        })
        .collect::<Result<Vec<_>, CensusError>>()?;

    let mut by_k: BTreeMap<usize, BTreeMap<CanonicalCode, Graph>> = BTreeMap::new();
    for (k, code, g) in tagged {
        by_k.entry(k).or_default().entry(code).or_insert(g);
    }
    Ok(by_k
        .into_iter()
        .map(|(k, members)| {
            let members = members.into_values().collect();
            (k, CensusClass { n, k, members })
        })
        .collect())
}
