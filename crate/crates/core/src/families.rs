//! Named extremal graphs for the class of connected `n`-vertex graphs with
//! `k` cut edges.
//!
//! Labels follow one convention throughout: clique (or cycle) vertices come
//! first, the attachment vertex is 0, and pendant vertices or path vertices
//! are appended in order.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    /// A feasibility predicate of the family failed; the message names it.
    #[error("infeasible parameters for {family}: {predicate} required")]
    Infeasible {
        family: Family,
        predicate: &'static str,
    },
    #[error("missing parameter `{0}`")]
    MissingParameter(&'static str),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Clique `K_{n-k}` with `k` pendant vertices at one clique vertex.
    KnK,
    /// Cycle `C_{n-k}` with a pendant path of `k` edges (lollipop).
    PnK,
    /// Hub clique joined by one edge to each of several further cliques.
    StarOfCliques,
    /// `K_n` minus one edge.
    G1,
    /// `K_n^1` minus an edge disjoint from its cut edge.
    G2,
    /// `K_n^k` with one pendant moved to a second clique vertex.
    G3,
    /// Star with one edge subdivided.
    StarPlus,
    /// Lollipop `P_{n-2}^{k-2}` with two leaves on its path end.
    UHat,
    /// Lollipop by girth: `C_g` with a pendant path.
    UnG,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::KnK,
        Family::PnK,
        Family::StarOfCliques,
        Family::G1,
        Family::G2,
        Family::G3,
        Family::StarPlus,
        Family::UHat,
        Family::UnG,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::KnK => "knk",
            Family::PnK => "pnk",
            Family::StarOfCliques => "star-of-cliques",
            Family::G1 => "g1",
            Family::G2 => "g2",
            Family::G3 => "g3",
            Family::StarPlus => "star-plus",
            Family::UHat => "uhat",
            Family::UnG => "ung",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.to_ascii_lowercase().replace('_', "-");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == norm)
            .ok_or_else(|| {
                let names: Vec<_> = Family::ALL.iter().map(|f| f.name()).collect();
                format!(
                    "unknown family `{s}` (expected one of {})",
                    names.join(", ")
                )
            })
    }
}

/// Parameters selecting one named construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    pub k: Option<usize>,
    /// `(a_0, a_1, ..., a_k)` for [`Family::StarOfCliques`].
    pub parts: Vec<usize>,
    pub girth: Option<usize>,
}

impl FamilySpec {
    pub fn new(family: Family, n: usize) -> Self {
        FamilySpec {
            family,
            n,
            k: None,
            parts: Vec::new(),
            girth: None,
        }
    }

    pub fn with_k(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }

    pub fn with_parts(mut self, parts: Vec<usize>) -> Self {
        self.parts = parts;
        self
    }

    pub fn with_girth(mut self, g: usize) -> Self {
        self.girth = Some(g);
        self
    }

    /// Cut edges the constructed graph is advertised to have, where defined.
    pub fn advertised_cut_edges(&self) -> Option<usize> {
        match self.family {
            Family::KnK => self.k.map(|k| {
                if self.n.checked_sub(k) == Some(2) {
                    k + 1
                } else {
                    k
                }
            }),
            Family::PnK | Family::G3 | Family::UHat => self.k,
            Family::UnG => self.girth.map(|g| self.n - g),
            // The inner edge of every K_2 clique is a bridge as well.
            Family::StarOfCliques => Some(
                self.parts.len().saturating_sub(1) + self.parts.iter().filter(|&&a| a == 2).count(),
            ),
            Family::G1 => (self.n >= 4).then_some(0),
            Family::G2 => Some(1),
            Family::StarPlus => Some(self.n.saturating_sub(1)),
        }
    }

    pub fn build(&self) -> Result<Graph, FamilyError> {
        let k = || self.k.ok_or(FamilyError::MissingParameter("k"));
        match self.family {
            Family::KnK => knk(self.n, k()?),
            Family::PnK => pnk(self.n, k()?),
            Family::StarOfCliques => {
                let (&a0, rest) = self
                    .parts
                    .split_first()
                    .ok_or(FamilyError::MissingParameter("parts"))?;
                let g = star_of_cliques(a0, rest)?;
                if g.order() != self.n {
                    return Err(FamilyError::Infeasible {
                        family: Family::StarOfCliques,
                        predicate: "parts summing to n",
                    });
                }
                Ok(g)
            }
            Family::G1 => g1(self.n),
            Family::G2 => g2(self.n),
            Family::G3 => g3(self.n, k()?),
            Family::StarPlus => star_plus(self.n),
            Family::UHat => uhat(self.n, k()?),
            Family::UnG => ung(
                self.n,
                self.girth.ok_or(FamilyError::MissingParameter("girth"))?,
            ),
        }
    }
}

fn require(ok: bool, family: Family, predicate: &'static str) -> Result<(), FamilyError> {
    if ok {
        Ok(())
    } else {
        Err(FamilyError::Infeasible { family, predicate })
    }
}

fn clique_edges(offset: usize, size: usize) -> impl Iterator<Item = (usize, usize)> {
    (offset..offset + size).flat_map(move |u| (u + 1..offset + size).map(move |v| (u, v)))
}

/// `K_n^k`: clique on `0..n-k`, pendants `n-k..n` attached to vertex 0.
pub fn knk(n: usize, k: usize) -> Result<Graph, FamilyError> {
    require(n >= 1, Family::KnK, "n >= 1")?;
    require(k < n, Family::KnK, "k <= n-1")?;
    let c = n - k;
    Ok(Graph::from_edges(
        n,
        clique_edges(0, c).chain((c..n).map(|p| (0, p))),
    )?)
}

/// `P_n^k`: cycle `0..n-k`, path `0 - (n-k) - ... - (n-1)`.
pub fn pnk(n: usize, k: usize) -> Result<Graph, FamilyError> {
    require(n >= k + 3, Family::PnK, "girth n-k >= 3")?;
    let g = n - k;
    let cycle = (0..g).map(|i| (i, (i + 1) % g));
    let path = (g..n).map(|v| (if v == g { 0 } else { v - 1 }, v));
    Ok(Graph::from_edges(n, cycle.chain(path))?)
}

/// `K(a_0, {a_1, ..., a_k})`: hub clique on `0..a_0`; clique `i` occupies the
/// next `a_i` labels and its first vertex is joined to vertex 0.
pub fn star_of_cliques(a0: usize, parts: &[usize]) -> Result<Graph, FamilyError> {
    require(a0 >= 1, Family::StarOfCliques, "a_0 >= 1")?;
    require(
        parts.iter().all(|&a| a >= 1),
        Family::StarOfCliques,
        "every a_i >= 1",
    )?;
    let n = a0 + parts.iter().sum::<usize>();
    let mut edges: Vec<(usize, usize)> = clique_edges(0, a0).collect();
    let mut offset = a0;
    for &a in parts {
        edges.extend(clique_edges(offset, a));
        edges.push((0, offset));
        offset += a;
    }
    Ok(Graph::from_edges(n, edges)?)
}

/// `G_3`: `K_n^k` with pendant `n-1` moved from vertex 0 to vertex 1.
pub fn g3(n: usize, k: usize) -> Result<Graph, FamilyError> {
    require(k >= 2, Family::G3, "k >= 2")?;
    require(n >= k + 3, Family::G3, "clique order n-k >= 3")?;
    Ok(knk(n, k)?.without_edge(0, n - 1)?.with_edge(1, n - 1)?)
}

/// `G_2`: `K_n^1` minus the clique edge `1 2`, which avoids the cut edge `0 (n-1)`.
pub fn g2(n: usize) -> Result<Graph, FamilyError> {
    require(n >= 5, Family::G2, "n >= 5")?;
    Ok(knk(n, 1)?.without_edge(1, 2)?)
}

/// `G_1`: `K_n` minus the edge `0 1`.
pub fn g1(n: usize) -> Result<Graph, FamilyError> {
    require(n >= 2, Family::G1, "n >= 2")?;
    Ok(Graph::complete(n)?.without_edge(0, 1)?)
}

/// `K*_{1,n-1}`: star centered at 0 on `0..n-1` plus leaf `n-1` hung on leaf 1.
pub fn star_plus(n: usize) -> Result<Graph, FamilyError> {
    require(n >= 3, Family::StarPlus, "n >= 3")?;
    Ok(Graph::star(n - 1)?.with_vertex(1 << 1)?)
}

/// `U-hat_n^k`: `P_{n-2}^{k-2}` plus two leaves on its path end `n-3`.
pub fn uhat(n: usize, k: usize) -> Result<Graph, FamilyError> {
    require(k >= 3, Family::UHat, "k >= 3")?;
    require(n >= k + 3, Family::UHat, "girth n-k >= 3")?;
    let end = 1u64 << (n - 3);
    Ok(pnk(n - 2, k - 2)?.with_vertex(end)?.with_vertex(end)?)
}

/// `U_n^g`: cycle `C_g` with a pendant path, i.e. `P_n^{n-g}`.
pub fn ung(n: usize, g: usize) -> Result<Graph, FamilyError> {
    require(g >= 3, Family::UnG, "g >= 3")?;
    require(g <= n, Family::UnG, "g <= n")?;
    pnk(n, n - g)
}
