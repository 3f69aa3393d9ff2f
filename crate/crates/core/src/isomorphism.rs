//! Exact isomorphism for small graphs and grouping of graph lists into
//! isomorphism classes.

use crate::graph::Graph;

/// One isomorphism class: its first member and the indices of all members.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoClass {
    pub representative: Graph,
    pub members: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoClassSummary {
    pub classes: Vec<IsoClass>,
    pub total: usize,
}

/// Graph relabelled onto `0..n` with a colour per vertex that any
/// isomorphism must preserve.
struct Labelled {
    adj: Vec<Vec<bool>>,
    nbrs: Vec<Vec<usize>>,
    colour: Vec<(usize, Vec<usize>)>,
}

impl Labelled {
    fn new(g: &Graph) -> Self {
        let ids: Vec<_> = g.vertices().collect();
        let index = |v| ids.binary_search(&v).unwrap();
        let n = ids.len();
        let mut adj = vec![vec![false; n]; n];
        let mut nbrs = vec![Vec::new(); n];
        for (u, v) in g.edges() {
            let (a, b) = (index(u), index(v));
            adj[a][b] = true;
            adj[b][a] = true;
            nbrs[a].push(b);
            nbrs[b].push(a);
        }
        // degree plus sorted neighbour degrees
        let colour = nbrs
            .iter()
            .map(|ns| {
                let mut around: Vec<usize> = ns.iter().map(|&w| nbrs[w].len()).collect();
                around.sort_unstable();
                (ns.len(), around)
            })
            .collect();
        Labelled { adj, nbrs, colour }
    }

    fn sorted_colours(&self) -> Vec<(usize, Vec<usize>)> {
        let mut c = self.colour.clone();
        c.sort();
        c
    }

    /// Matching order: each next vertex has the most already-ordered
    /// neighbours, ties broken by higher degree then lower index.
    fn order(&self) -> Vec<usize> {
        let n = self.adj.len();
        let mut placed = vec![false; n];
        let mut links = vec![0usize; n];
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let next = (0..n)
                .filter(|&v| !placed[v])
                .max_by(|&a, &b| (links[a], self.nbrs[a].len()).cmp(&(links[b], self.nbrs[b].len())).then(b.cmp(&a)))
                .unwrap();
            placed[next] = true;
            order.push(next);
            for &w in &self.nbrs[next] {
                links[w] += 1;
            }
        }
        order
    }
}

/// True iff some bijection of live vertices maps the edges of `g1` exactly
/// onto the edges of `g2`.
pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> bool {
    if g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return false;
    }
    let (a, b) = (Labelled::new(g1), Labelled::new(g2));
    if a.sorted_colours() != b.sorted_colours() {
        return false;
    }
    let order = a.order();
    let n = order.len();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(&a, &b, &order, 0, &mut map, &mut used)
}

fn extend(a: &Labelled, b: &Labelled, order: &[usize], depth: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for w in 0..used.len() {
        if used[w] || a.colour[v] != b.colour[w] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&u| a.adj[v][u] == b.adj[w][map[u]]);
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend(a, b, order, depth + 1, map, used) {
            return true;
        }
        used[w] = false;
        map[v] = usize::MAX;
    }
    false
}

/// Groups `graphs` greedily in list order: each graph joins the first class
/// whose representative it is isomorphic to, or starts a new class.
pub fn iso_classes(graphs: &[Graph]) -> IsoClassSummary {
    let mut classes: Vec<IsoClass> = Vec::new();
    for (idx, g) in graphs.iter().enumerate() {
        match classes.iter_mut().find(|c| is_isomorphic(&c.representative, g)) {
            Some(class) => class.members.push(idx),
            None => classes.push(IsoClass { representative: g.clone(), members: vec![idx] }),
        }
    }
    IsoClassSummary { classes, total: graphs.len() }
}
