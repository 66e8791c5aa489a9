use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use super::walks::exact_closed_walks;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SRelation {
    Precedes,
    Equal,
    Succeeds,
}

impl fmt::Display for SRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SRelation::Precedes => "precedes",
            SRelation::Equal => "equal",
            SRelation::Succeeds => "succeeds",
        })
    }
}

/// Outcome of a lexicographic moment comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SOrderResult {
    pub relation: SRelation,
    /// First index where the sequences differ; `None` iff equal.
    pub pivot: Option<usize>,
    /// Set when the two graphs have different orders. The ordering is then
    /// decided at index 0.
    pub cross_order: bool,
}

impl SOrderResult {
    pub fn ordering(&self) -> Ordering {
        match self.relation {
            SRelation::Precedes => Ordering::Less,
            SRelation::Equal => Ordering::Equal,
            SRelation::Succeeds => Ordering::Greater,
        }
    }
}

/// Lexicographic comparison of two moment vectors. A missing entry sorts
/// before any present one.
pub fn compare_moments<T: Ord>(a: &[T], b: &[T]) -> SOrderResult {
    let cross_order = a.len() != b.len();
    for i in 0..a.len().max(b.len()) {
        let ord = match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x.cmp(y),
            (None, Some(_)) => Ordering::Less,
            (Some(_), None) => Ordering::Greater,
            (None, None) => unreachable!(),
        };
        let relation = match ord {
            Ordering::Less => SRelation::Precedes,
            Ordering::Greater => SRelation::Succeeds,
            Ordering::Equal => continue,
        };
        return SOrderResult {
            relation,
            pivot: Some(i),
            cross_order,
        };
    }
    SOrderResult {
        relation: SRelation::Equal,
        pivot: None,
        cross_order,
    }
}

/// Compares `S_0, ..., S_{N-1}` of both graphs, `N` the larger order.
pub fn s_compare(g1: &Graph, g2: &Graph) -> SOrderResult {
    let len = g1.order().max(g2.order());
    if len == 0 {
        return compare_moments::<u8>(&[], &[]);
    }
    let a = exact_closed_walks(g1, len - 1);
    let b = exact_closed_walks(g2, len - 1);
    let mut r = compare_moments(&a, &b);
    r.cross_order = g1.order() != g2.order();
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reflexive() {
        let g = Graph::cycle(5).unwrap();
        let r = s_compare(&g, &g);
        assert_eq!(r.relation, SRelation::Equal);
        assert_eq!(r.pivot, None);
    }

    #[test]
    fn more_edges_come_later() {
        let p = Graph::path(4).unwrap();
        let c = Graph::cycle(4).unwrap();
        let r = s_compare(&p, &c);
        assert_eq!((r.relation, r.pivot), (SRelation::Precedes, Some(2)));
        assert_eq!(s_compare(&c, &p).relation, SRelation::Succeeds);
    }

    #[test]
    fn different_orders_decided_at_zero() {
        let r = s_compare(&Graph::complete(5).unwrap(), &Graph::path(6).unwrap());
        assert_eq!(
            (r.relation, r.pivot, r.cross_order),
            (SRelation::Precedes, Some(0), true)
        );
        let e = s_compare(&Graph::empty(0).unwrap(), &Graph::empty(0).unwrap());
        assert_eq!(e.relation, SRelation::Equal);
    }

    #[test]
    fn prefix_sorts_first() {
        assert_eq!(
            compare_moments(&[1, 2], &[1, 2, 0]).relation,
            SRelation::Precedes
        );
    }
}
