use rayon::prelude::*;
use serde::Serialize;

use super::{CensusClass, CensusError};
use crate::canon::{CanonicalCode, Canonicalizer};
use crate::format::emit_graph6;
use crate::graph::Graph;
use crate::spectral::{compare_moments, moment_sequence, MomentSequence, SOrderResult};

#[derive(Debug, Clone, Serialize)]
pub struct RankedGraph {
    #[serde(skip)]
    pub graph: Graph,
    #[serde(skip)]
    pub code: CanonicalCode,
    pub graph6: String,
    pub moments: MomentSequence,
}

/// A class sorted ascending in S-order. Graphs with equal moment sequences
/// are kept adjacent in canonical-code order and listed in `tie_groups`.
#[derive(Debug, Clone, Serialize)]
pub struct RankReport {
    pub n: usize,
    pub k: usize,
    pub ordered: Vec<RankedGraph>,
    /// Index ranges (into `ordered`) of moment-equal runs longer than one.
    pub tie_groups: Vec<Vec<usize>>,
}

impl RankReport {
    pub fn len(&self) -> usize {
        self.ordered.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ordered.is_empty()
    }

    pub fn first(&self) -> Option<&RankedGraph> {
        self.ordered.first()
    }

    pub fn second(&self) -> Option<&RankedGraph> {
        self.ordered.get(1)
    }

    pub fn last(&self) -> Option<&RankedGraph> {
        self.ordered.last()
    }

    pub fn second_last(&self) -> Option<&RankedGraph> {
        self.ordered
            .len()
            .checked_sub(2)
            .and_then(|i| self.ordered.get(i))
    }

    /// Index counted from the top: `from_top(0)` is the last graph.
    pub fn from_top(&self, i: usize) -> Option<usize> {
        self.ordered.len().checked_sub(i + 1)
    }

    /// True when the graph at `index` shares its moment sequence with no other member.
    pub fn is_unique_at(&self, index: usize) -> bool {
        !self.tie_groups.iter().any(|g| g.contains(&index))
    }

    /// S-order comparison of the members at positions `a` and `b`.
    pub fn compare(&self, a: usize, b: usize) -> Option<SOrderResult> {
        let (x, y) = (self.ordered.get(a)?, self.ordered.get(b)?);
        Some(compare_moments(x.moments.values(), y.moments.values()))
    }
}

/// Ranks a census class.
pub fn rank(class: &CensusClass) -> Result<RankReport, CensusError> {
    rank_graphs(class.n, class.k, &class.members)
}

/// Ranks any set of pairwise non-isomorphic graphs of order `n`.
pub fn rank_graphs(n: usize, k: usize, graphs: &[Graph]) -> Result<RankReport, CensusError> {
    if graphs.is_empty() {
        return Err(CensusError::EmptyClass);
    }
    if let Some(bad) = graphs.iter().find(|g| g.order() != n) {
        return Err(CensusError::MixedOrders {
            expected: n,
            found: bad.order(),
        });
    }
    let canon = Canonicalizer::with_bound(n.max(crate::canon::DEFAULT_CANON_BOUND));
    let mut ordered = graphs
        .par_iter()
        .map(|g| {
            let (graph, code) = canon.canonical_graph(g)?;
            let moments = moment_sequence(&graph).map_err(|_| CensusError::EmptyClass)?;
            let graph6 = emit_graph6(&graph).unwrap_or_default();
            Ok(RankedGraph {
                graph,
                code,
                graph6,
                moments,
            })
        })
        .collect::<Result<Vec<_>, CensusError>>()?;
    ordered.sort_by(|a, b| a.moments.cmp(&b.moments).then_with(|| a.code.cmp(&b.code)));

    let mut tie_groups = Vec::new();
    let mut start = 0;
    for i in 1..=ordered.len() {
        if i == ordered.len() || ordered[i].moments != ordered[start].moments {
            if i - start > 1 {
                tie_groups.push((start..i).collect());
            }
            start = i;
        }
    }
    Ok(RankReport {
        n,
        k,
        ordered,
        tie_groups,
    })
}
