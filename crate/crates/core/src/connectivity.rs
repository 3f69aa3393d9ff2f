//! Biconnectivity by depth-first low-points, vertex-deletion 3-connectivity,
//! components after removing a vertex set, and bridges of `G|W`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::graph::{Graph, VertexId, VertexSet};

/// Graph relabelled onto `0..n` for the array-based traversals.
struct Dense {
    ids: Vec<VertexId>,
    adj: Vec<Vec<usize>>,
}

impl Dense {
    fn new(g: &Graph) -> Self {
        let ids: Vec<VertexId> = g.vertices().collect();
        let index: BTreeMap<VertexId, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let adj = ids.iter().map(|&v| g.neighbors(v).map(|w| index[&w]).collect()).collect();
        Dense { ids, adj }
    }
}

/// Per-vertex bookkeeping of the low-point search.
#[derive(Debug, Clone)]
pub struct DfsState {
    pub visited: Vec<bool>,
    pub dfnumber: Vec<usize>,
    pub low: Vec<usize>,
    pub father: Vec<Option<usize>>,
    pub count: usize,
}

impl DfsState {
    fn new(n: usize) -> Self {
        DfsState {
            visited: vec![false; n],
            dfnumber: vec![usize::MAX; n],
            low: vec![usize::MAX; n],
            father: vec![None; n],
            count: 0,
        }
    }

    /// Returns false as soon as an articulation point is found.
    fn visit(&mut self, adj: &[Vec<usize>], v: usize) -> bool {
        self.visited[v] = true;
        self.dfnumber[v] = self.count;
        self.low[v] = self.count;
        self.count += 1;
        for (i, &w) in adj[v].iter().enumerate() {
            if !self.visited[w] {
                self.father[w] = Some(v);
                if !self.visit(adj, w) {
                    return false;
                }
                // The root is a cut vertex iff a second tree child exists,
                // i.e. a tree edge that is not its first neighbour.
                if self.low[w] >= self.dfnumber[v] && (self.dfnumber[v] != 0 || i > 0) {
                    return false;
                }
                self.low[v] = self.low[v].min(self.low[w]);
            } else if self.father[v] != Some(w) {
                self.low[v] = self.low[v].min(self.dfnumber[w]);
            }
        }
        true
    }
}

/// True iff `g` is connected and has no cut vertex.
///
/// A single vertex and a single edge both count as 2-connected. The empty
/// graph is not.
pub fn is_2connected(g: &Graph) -> bool {
    if g.is_empty() {
        return false;
    }
    let dense = Dense::new(g);
    let mut state = DfsState::new(dense.ids.len());
    state.visit(&dense.adj, 0) && state.count == dense.ids.len()
}

/// True iff `g` has at least 4 vertices and stays 2-connected after deleting
/// any single vertex.
pub fn is_3connected(g: &Graph) -> bool {
    g.vertex_count() >= 4 && is_2connected(g) && g.vertices().all(|v| is_2connected(&g.without_vertex(v)))
}

pub fn is_connected(g: &Graph) -> bool {
    components_minus(g, &VertexSet::empty()).len() <= 1
}

/// Connected components of `g - s`, each sorted, ordered by smallest member.
pub fn components_minus(g: &Graph, s: &VertexSet) -> Vec<VertexSet> {
    let removed = s.to_btree();
    let mut seen: BTreeSet<VertexId> = BTreeSet::new();
    let mut out = Vec::new();
    for start in g.vertices() {
        if removed.contains(&start) || !seen.insert(start) {
            continue;
        }
        let mut comp = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v) {
                if !removed.contains(&w) && seen.insert(w) {
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(VertexSet::from_sorted(comp));
    }
    out
}

/// Bridges of `g|w`: the maximal vertex sets whose members are pairwise
/// joined by a path with no internal vertex in `w`.
///
/// The pairwise relation is computed directly and its maximal cliques are
/// listed with Bron-Kerbosch. Each bridge is sorted; the list is ordered by
/// smallest member, then lexicographically.
pub fn bridges(g: &Graph, w: &VertexSet) -> Vec<VertexSet> {
    let dense = Dense::new(g);
    let n = dense.ids.len();
    let blocked: Vec<bool> = dense.ids.iter().map(|&v| w.contains(v)).collect();

    // joined[x] = vertices reachable from x through internal vertices outside w
    let mut joined: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for x in 0..n {
        let mut seen = vec![false; n];
        seen[x] = true;
        let mut queue = VecDeque::from([x]);
        while let Some(v) = queue.pop_front() {
            if v != x && blocked[v] {
                continue;
            }
            for &y in &dense.adj[v] {
                if !seen[y] {
                    seen[y] = true;
                    joined[x].insert(y);
                    queue.push_back(y);
                }
            }
        }
    }

    let mut cliques = Vec::new();
    bron_kerbosch(&joined, Vec::new(), (0..n).collect(), BTreeSet::new(), &mut cliques);

    let mut out: Vec<Vec<VertexId>> = cliques
        .into_iter()
        .map(|c| {
            let mut ids: Vec<VertexId> = c.into_iter().map(|i| dense.ids[i]).collect();
            ids.sort_unstable();
            ids
        })
        .collect();
    out.sort();
    out.into_iter().map(VertexSet::from_sorted).collect()
}

fn bron_kerbosch(
    nbrs: &[BTreeSet<usize>],
    r: Vec<usize>,
    mut p: BTreeSet<usize>,
    mut x: BTreeSet<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() && x.is_empty() {
        out.push(r);
        return;
    }
    let pivot = p.union(&x).max_by_key(|&&u| nbrs[u].intersection(&p).count()).copied().unwrap();
    let candidates: Vec<usize> = p.difference(&nbrs[pivot]).copied().collect();
    for v in candidates {
        let mut r2 = r.clone();
        r2.push(v);
        let p2 = p.intersection(&nbrs[v]).copied().collect();
        let x2 = x.intersection(&nbrs[v]).copied().collect();
        bron_kerbosch(nbrs, r2, p2, x2, out);
        p.remove(&v);
        x.insert(v);
    }
}
