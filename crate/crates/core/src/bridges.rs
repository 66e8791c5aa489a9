//! Cut edges (bridges) by one depth-first traversal with low-link values.

use crate::graph::{EdgeSet, Graph, GraphError};

/// Returns exactly the bridges of a connected graph.
pub fn cut_edges(g: &Graph) -> Result<EdgeSet, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let n = g.order();
    let mut bridges = EdgeSet::new();
    if n == 0 {
        return Ok(bridges);
    }

    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut time = 0;

    // Explicit stack of (vertex, parent, remaining-neighbor mask).
    let mut stack: Vec<(usize, usize, u64)> = Vec::with_capacity(n);
    disc[0] = time;
    low[0] = time;
    time += 1;
    stack.push((0, UNSEEN, g.neighbor_mask(0)));

    while let Some(top) = stack.last_mut() {
        let (v, parent, pending) = *top;
        if pending != 0 {
            let u = pending.trailing_zeros() as usize;
            top.2 &= pending - 1;
            if u == parent {
                continue;
            }
            if disc[u] == UNSEEN {
                disc[u] = time;
                low[u] = time;
                time += 1;
                stack.push((u, v, g.neighbor_mask(u)));
            } else {
                low[v] = low[v].min(disc[u]);
            }
        } else {
            stack.pop();
            if parent != UNSEEN {
                low[parent] = low[parent].min(low[v]);
                if low[v] > disc[parent] {
                    bridges.insert(parent, v);
                }
            }
        }
    }
    Ok(bridges)
}

/// Number of cut edges of a connected graph.
pub fn cut_edge_count(g: &Graph) -> Result<usize, GraphError> {
    cut_edges(g).map(|b| b.len())
}
