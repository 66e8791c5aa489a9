//! Reference implementations used as test oracles. Everything here is
//! deliberately naive and shares no code with the library beyond `Graph`.

#![allow(dead_code)]

use std::collections::VecDeque;
use std::io::Write;

use itertools::Itertools;
use rand::Rng;
use smorder::census::enumerate_connected;
use smorder::{emit_graph6, Graph};

pub fn dense(g: &Graph) -> Vec<Vec<u128>> {
    let n = g.order();
    (0..n)
        .map(|i| (0..n).map(|j| u128::from(g.has_edge(i, j))).collect())
        .collect()
}

/// `trace(A^k)` for `k = 0..len` by repeated dense multiplication.
pub fn oracle_moments(g: &Graph, len: usize) -> Vec<u128> {
    let n = g.order();
    let a = dense(g);
    let mut p: Vec<Vec<u128>> = (0..n)
        .map(|i| (0..n).map(|j| u128::from(i == j)).collect())
        .collect();
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push((0..n).map(|i| p[i][i]).sum());
        p = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|t| p[i][t] * a[t][j]).sum())
                    .collect()
            })
            .collect();
    }
    out
}

pub fn oracle_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    if n <= 1 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(u) = queue.pop_front() {
        for &(a, b) in edges {
            let w = if a == u {
                b
            } else if b == u {
                a
            } else {
                continue;
            };
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Edges whose deletion disconnects a connected graph.
pub fn oracle_bridges(g: &Graph) -> Vec<(usize, usize)> {
    let edges: Vec<_> = g.edges().collect();
    (0..edges.len())
        .filter(|&i| {
            let rest: Vec<_> = edges
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &e)| e)
                .collect();
            !oracle_connected(g.order(), &rest)
        })
        .map(|i| edges[i])
        .collect()
}

/// Upper-triangle adjacency bits under `perm` (`perm[v]` = new label).
fn bits_under(g: &Graph, perm: &[usize]) -> u64 {
    let n = g.order();
    let mut inv = vec![0; n];
    for (v, &p) in perm.iter().enumerate() {
        inv[p] = v;
    }
    let mut code = 0u64;
    for j in 1..n {
        for i in 0..j {
            code = (code << 1) | u64::from(g.has_edge(inv[i], inv[j]));
        }
    }
    code
}

/// Maximum adjacency bitstring over all relabelings. Only for tiny orders.
pub fn brute_canon(g: &Graph) -> u64 {
    let n = g.order();
    assert!(n <= 8);
    (0..n)
        .permutations(n)
        .map(|p| bits_under(g, &p))
        .max()
        .unwrap_or(0)
}

pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.size() != b.size() {
        return false;
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    let n = a.order();
    (0..n)
        .permutations(n)
        .any(|p| (0..n).all(|i| (i + 1..n).all(|j| a.has_edge(i, j) == b.has_edge(p[i], p[j]))))
}

pub fn all_labeled(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let total = 1u64 << pairs.len();
    (0..total).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &e)| e);
        Graph::from_edges(n, edges).unwrap()
    })
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let edges: Vec<_> = (1..n)
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, edges).unwrap()
}

pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    loop {
        let g = random_graph(rng, n, p);
        if g.is_connected() {
            return g;
        }
    }
}

pub fn random_perm<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Every connected graph on `n + 1` vertices has a vertex whose removal
/// leaves it connected, so joining a new vertex to each non-empty subset
/// of every connected `n`-graph reaches every connected `(n+1)`-graph.
/// Output has many isomorphic repeats.
pub fn write_extension_catalog<W: Write>(n: usize, out: &mut W) -> std::io::Result<usize> {
    let mut lines = 0;
    for g in enumerate_connected(n).unwrap() {
        for mask in 1..(1u64 << n) {
            writeln!(
                out,
                "{}",
                emit_graph6(&g.with_vertex(mask).unwrap()).unwrap()
            )?;
            lines += 1;
        }
    }
    Ok(lines)
}
