//! Exponential-time search for a `W_k`-subdivision by recursive edge removal.
//!
//! Each node of the search drops isolated vertices, asks [`is_k_wheel`]
//! whether the current graph already is a subdivision, prunes graphs that are
//! too small or have no vertex of degree `>= k`, and otherwise recurses on
//! every one-edge-smaller subgraph. Removals are threaded through an
//! [`EdgeCursor`] so every edge subset is visited at most once.

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use crate::graph::{Graph, VertexId};
use crate::wheel::is_k_wheel;

/// A found subdivision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    /// The subdivision with its degree-2 vertices contracted; isomorphic to `W_k`.
    pub wheel: Graph,
    /// The subgraph of the input on which recognition succeeded.
    pub subgraph: Graph,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Witness),
    NotFound,
    /// The configured node budget ran out before the search finished.
    BudgetExhausted,
}

impl SearchOutcome {
    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            SearchOutcome::Found(w) => Some(w),
            _ => None,
        }
    }
}

/// Lexicographic lower bound on the edges a search branch may still remove.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct EdgeCursor {
    pub start1: VertexId,
    pub start2: VertexId,
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    /// Maximum number of search nodes; `None` is unlimited.
    pub budget: Option<u64>,
    /// Evaluate the top-level branches on the rayon pool.
    pub parallel: bool,
    /// Restrict removals to edges after the cursor. Turning this off keeps the
    /// result but revisits edge subsets many times over.
    pub use_cursor: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { budget: None, parallel: false, use_cursor: true }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchRun {
    pub outcome: SearchOutcome,
    /// Search nodes visited, including the root.
    pub nodes: u64,
}

/// Searches `g` for a `W_k`-subdivision with the default configuration.
pub fn find_k_wheel(g: &Graph, k: usize) -> SearchOutcome {
    find_k_wheel_with(g, k, &SearchConfig::default()).outcome
}

pub fn find_k_wheel_with(g: &Graph, k: usize, config: &SearchConfig) -> SearchRun {
    let search = Search { k, config, nodes: AtomicU64::new(0) };
    let outcome = if k < 3 {
        SearchOutcome::NotFound
    } else if config.parallel {
        search.root_parallel(g.clone())
    } else {
        search.node(g.clone(), EdgeCursor::default())
    };
    SearchRun { outcome, nodes: search.nodes.load(Ordering::Relaxed) }
}

struct Search<'a> {
    k: usize,
    config: &'a SearchConfig,
    nodes: AtomicU64,
}

enum Node {
    Done(SearchOutcome),
    Branch(Graph, Vec<(VertexId, VertexId)>),
}

impl Search<'_> {
    fn expand(&self, mut g: Graph, cursor: EdgeCursor) -> Node {
        let visited = self.nodes.fetch_add(1, Ordering::Relaxed);
        if self.config.budget.is_some_and(|b| visited >= b) {
            return Node::Done(SearchOutcome::BudgetExhausted);
        }
        g.remove_isolated();
        if let Some(wheel) = is_k_wheel(&g, self.k) {
            return Node::Done(SearchOutcome::Found(Witness { wheel, subgraph: g }));
        }
        // is_k_wheel has already rejected the exact-size case
        if g.edge_count() <= 2 * self.k || g.vertex_count() < self.k + 1 {
            return Node::Done(SearchOutcome::NotFound);
        }
        if g.max_degree() < self.k {
            return Node::Done(SearchOutcome::NotFound);
        }
        let edges = if self.config.use_cursor {
            let mut edges = Vec::new();
            // the cursor edge itself is already gone; (0, 0) admits every edge
            let mut at = g.next_edge_after(cursor.start1, cursor.start2);
            while let Some((i, j)) = at {
                edges.push((i, j));
                at = g.next_edge_after(i, j);
            }
            edges
        } else {
            g.edges().collect()
        };
        Node::Branch(g, edges)
    }

    fn child(&self, g: &Graph, (i, j): (VertexId, VertexId)) -> SearchOutcome {
        let mut sub = g.clone();
        sub.remove_edge(i, j).expect("edge listed by the parent");
        self.node(sub, EdgeCursor { start1: i, start2: j })
    }

    fn node(&self, g: Graph, cursor: EdgeCursor) -> SearchOutcome {
        match self.expand(g, cursor) {
            Node::Done(outcome) => outcome,
            Node::Branch(g, edges) => {
                for e in edges {
                    match self.child(&g, e) {
                        SearchOutcome::NotFound => {}
                        other => return other,
                    }
                }
                SearchOutcome::NotFound
            }
        }
    }

    fn root_parallel(&self, g: Graph) -> SearchOutcome {
        match self.expand(g, EdgeCursor::default()) {
            Node::Done(outcome) => outcome,
            Node::Branch(g, edges) => edges
                .par_iter()
                .find_map_first(|&e| match self.child(&g, e) {
                    SearchOutcome::NotFound => None,
                    other => Some(other),
                })
                .unwrap_or(SearchOutcome::NotFound),
        }
    }
}
