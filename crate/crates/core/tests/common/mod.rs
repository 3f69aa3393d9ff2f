//! Test support: corpora and brute-force oracles.
//!
//! The oracles work on plain edge lists over `0..n` and share no code with
//! the library algorithms they check.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::Rng;
use wheelshp::{Graph, VertexId};

pub type Edge = (usize, usize);

/// Decodes one graph6 line (graphs with at most 62 vertices).
pub fn decode_graph6(line: &str) -> (usize, Vec<Edge>) {
    let bytes = line.trim().as_bytes();
    let n = (bytes[0] - 63) as usize;
    let bits = bytes[1..].iter().flat_map(|&b| (0..6).rev().map(move |i| ((b - 63) >> i) & 1 == 1));
    let pairs = (1..n).flat_map(|j| (0..j).map(move |i| (i, j)));
    let edges = pairs.zip(bits).filter(|&(_, bit)| bit).map(|(e, _)| e).collect();
    (n, edges)
}

/// All graphs on at most 7 vertices up to isomorphism.
pub fn atlas() -> Vec<(usize, Vec<Edge>)> {
    include_str!("../data/atlas7.g6")
        .lines()
        .filter(|l| !l.starts_with('#') && !l.is_empty())
        .map(decode_graph6)
        .collect()
}

pub fn to_graph(n: usize, edges: &[Edge]) -> Graph {
    let mut g = Graph::new();
    for v in 0..n {
        g.add_vertex(v).unwrap();
    }
    for &(u, v) in edges {
        g.add_edge(u, v).unwrap();
    }
    g
}

/// Graph with `n` vertices and `m` distinct random edges.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, m: usize) -> (usize, Vec<Edge>) {
    let mut all: Vec<Edge> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    all.shuffle(rng);
    all.truncate(m.min(all.len()));
    all.sort_unstable();
    (n, all)
}

/// Connectivity of the vertex set `alive` using only edges inside it.
pub fn connected_within(alive: u64, edges: &[Edge]) -> bool {
    if alive == 0 {
        return true;
    }
    let mut reached = 1u64 << alive.trailing_zeros();
    loop {
        let mut next = reached;
        for &(u, v) in edges {
            let (bu, bv) = (1u64 << u, 1u64 << v);
            if alive & bu != 0 && alive & bv != 0 && (reached & (bu | bv)) != 0 {
                next |= bu | bv;
            }
        }
        if next == reached {
            return reached == alive;
        }
        reached = next;
    }
}

fn full(n: usize) -> u64 {
    (1u64 << n) - 1
}

/// Connected, and still connected after deleting any one vertex.
pub fn two_connected_oracle(n: usize, edges: &[Edge]) -> bool {
    n > 0 && connected_within(full(n), edges) && (0..n).all(|v| connected_within(full(n) & !(1 << v), edges))
}

/// At least 4 vertices and no separating set of size at most 2.
pub fn three_connected_oracle(n: usize, edges: &[Edge]) -> bool {
    if n < 4 || !connected_within(full(n), edges) {
        return false;
    }
    (0..n).all(|a| {
        connected_within(full(n) & !(1 << a), edges)
            && (a + 1..n).all(|b| connected_within(full(n) & !(1 << a) & !(1 << b), edges))
    })
}

/// Whether the edge set is exactly a subdivision of `W_k`: chains of degree-2
/// vertices are traced between branch vertices and the resulting multigraph
/// must be simple and equal to a hub joined to every vertex of one cycle.
pub fn is_wheel_subdivision_oracle(edges: &[Edge], k: usize) -> bool {
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(u, v) in edges {
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    }
    if adj.values().any(|n| n.len() < 2) {
        return false;
    }
    let branch: Vec<usize> = adj.iter().filter(|(_, n)| n.len() >= 3).map(|(&v, _)| v).collect();
    if branch.len() != k + 1 {
        return false;
    }
    let mut on_chain: BTreeSet<usize> = branch.iter().copied().collect();
    let mut links: BTreeSet<(usize, usize)> = BTreeSet::new();
    for &b in &branch {
        for &first in &adj[&b] {
            let (mut prev, mut cur) = (b, first);
            while adj[&cur].len() == 2 {
                on_chain.insert(cur);
                let next = if adj[&cur][0] == prev { adj[&cur][1] } else { adj[&cur][0] };
                prev = cur;
                cur = next;
            }
            if cur == b {
                return false;
            }
            let pair = (b.min(cur), b.max(cur));
            // each chain is seen once from each end
            if b < cur && !links.insert(pair) {
                return false;
            }
        }
    }
    if on_chain.len() != adj.len() || links.len() != 2 * k {
        return false;
    }
    let degree = |v: usize| links.iter().filter(|&&(a, b)| a == v || b == v).count();
    if k == 3 {
        return branch.iter().all(|&v| degree(v) == 3);
    }
    let hubs: Vec<usize> = branch.iter().copied().filter(|&v| degree(v) == k).collect();
    if hubs.len() != 1 || branch.iter().filter(|&&v| degree(v) == 3).count() != k {
        return false;
    }
    let hub = hubs[0];
    let rim: Vec<Edge> = links.iter().copied().filter(|&(a, b)| a != hub && b != hub).collect();
    // k rim vertices each of rim-degree 2 forming one connected cycle
    let index: BTreeMap<usize, usize> =
        branch.iter().filter(|&&v| v != hub).enumerate().map(|(i, &v)| (v, i)).collect();
    let rim_dense: Vec<Edge> = rim.iter().map(|(a, b)| (index[a], index[b])).collect();
    rim.len() == k && connected_within(full(k), &rim_dense)
}

/// Whether some edge subset of the graph is a `W_k`-subdivision. Only
/// subsets with between `2k` and `n + k - 1` edges can qualify.
pub fn contains_wheel_oracle(n: usize, edges: &[Edge], k: usize) -> bool {
    let m = edges.len();
    let hi = m.min(n + k - 1);
    (2 * k..=hi).any(|size| {
        subsets_of_size(m, size).any(|mask| {
            let chosen: Vec<Edge> = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
            is_wheel_subdivision_oracle(&chosen, k)
        })
    })
}

/// Bitmasks over `m` bits with exactly `size` bits set (Gosper's hack).
pub fn subsets_of_size(m: usize, size: usize) -> impl Iterator<Item = u64> {
    let limit = 1u64 << m;
    let start = if size == 0 { 0 } else { (1u64 << size) - 1 };
    let mut cur = if size > m { None } else { Some(start) };
    std::iter::from_fn(move || {
        let out = cur?;
        cur = if out == 0 {
            None
        } else {
            let c = out & out.wrapping_neg();
            let r = out + c;
            let next = (((r ^ out) >> 2) / c) | r;
            (next < limit).then_some(next)
        };
        Some(out)
    })
}

/// Bridges of `G|W` by brute force: the pairwise path relation followed by
/// every maximal subset whose members are pairwise related.
pub fn bridges_oracle(n: usize, edges: &[Edge], w: &[usize]) -> Vec<Vec<usize>> {
    let in_w = |v: usize| w.contains(&v);
    // internal vertices must avoid W; x and y themselves may be in W
    let joined: Vec<Vec<bool>> = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    let alive = (0..n).filter(|&v| v == x || v == y || !in_w(v)).fold(0u64, |acc, v| acc | 1 << v);
                    x != y && connected_pair(alive, edges, x, y)
                })
                .collect()
        })
        .collect();
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    for mask in 1u64..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
        let pairwise = members.iter().all(|&a| members.iter().all(|&b| a == b || joined[a][b]));
        if !pairwise {
            continue;
        }
        let maximal = (0..n).filter(|v| mask >> v & 1 == 0).all(|v| !members.iter().all(|&a| joined[a][v]));
        if maximal {
            cliques.push(members);
        }
    }
    cliques.sort();
    cliques
}

fn connected_pair(alive: u64, edges: &[Edge], x: usize, y: usize) -> bool {
    // BFS from x that never continues out of y
    let mut reached = 1u64 << x;
    let mut frontier = vec![x];
    while let Some(v) = frontier.pop() {
        if v == y {
            continue;
        }
        for &(a, b) in edges {
            let other = if a == v {
                b
            } else if b == v {
                a
            } else {
                continue;
            };
            if alive >> other & 1 == 1 && reached >> other & 1 == 0 {
                reached |= 1 << other;
                frontier.push(other);
            }
        }
    }
    reached >> y & 1 == 1
}

/// Isomorphism by trying every permutation.
pub fn isomorphic_oracle(n: usize, e1: &[Edge], e2: &[Edge]) -> bool {
    if e1.len() != e2.len() {
        return false;
    }
    let target: BTreeSet<Edge> = e2.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    let mut perm: Vec<usize> = (0..n).collect();
    permutations(&mut perm, 0, &mut |p| e1.iter().all(|&(a, b)| target.contains(&(p[a].min(p[b]), p[a].max(p[b])))))
}

fn permutations(p: &mut Vec<usize>, k: usize, check: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if k == p.len() {
        return check(p);
    }
    for i in k..p.len() {
        p.swap(k, i);
        if permutations(p, k + 1, check) {
            p.swap(k, i);
            return true;
        }
        p.swap(k, i);
    }
    false
}

/// Subdivides a random edge of `g` with a fresh vertex.
pub fn subdivide_random_edge<R: Rng>(rng: &mut R, g: &mut Graph) -> VertexId {
    let edges: Vec<_> = g.edges().collect();
    let (u, v) = *edges.choose(rng).unwrap();
    let w = g.fresh_id();
    g.add_vertex(w).unwrap();
    g.expand_edge(u, v, w).unwrap();
    w
}

/// Relabels `g` onto `0..n` so the bitmask oracles can use it.
pub fn dense_edges(g: &Graph) -> (usize, Vec<Edge>) {
    let ids: Vec<_> = g.vertices().collect();
    let pos = |v| ids.binary_search(&v).unwrap();
    (ids.len(), g.edges().map(|(u, v)| (pos(u), pos(v))).collect())
}
