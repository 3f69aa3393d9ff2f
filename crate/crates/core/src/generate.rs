//! Generators for the exception graphs of wheel characterization proofs.
//!
//! [`wheelproof`] starts from `W_{k-1}`, adds a new hub neighbour `u` and
//! tries every placement of the two further paths from `u` back into the
//! wheel. [`exception_generator`] adds one path between two regions of a
//! graph. Both keep every candidate that has no `W_k`-subdivision.
//!
//! Candidates are built by editing a single working graph in place (attach,
//! test, detach), so after a full pass the working graph is back to where it
//! started. Testing the collected candidates is independent per candidate and
//! can run on the rayon pool without changing the output order.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use crate::connectivity::{components_minus, is_3connected};
use crate::graph::{make_wheel, Graph, GraphError, VertexId, VertexSet};
use crate::search::{find_k_wheel_with, SearchConfig, SearchOutcome};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerationError {
    #[error("wheelproof needs k >= 4, got {0}")]
    KTooSmall(usize),
    #[error("region {0} is empty")]
    EmptyRegion(char),
    #[error("vertex {0} is in both regions")]
    OverlappingRegions(VertexId),
    #[error("region vertex {0} is not in the graph")]
    MissingVertex(VertexId),
    #[error("separating set leaves {0} components, expected 2")]
    NotTwoComponents(usize),
    #[error("search budget exhausted while testing candidate {0}")]
    BudgetExhausted(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Where a new path meets the existing graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Attachment {
    /// At an existing vertex.
    Existing(VertexId),
    /// At a fresh vertex subdividing the edge `anchor`-`other`.
    OnEdge { anchor: VertexId, other: VertexId },
}

impl fmt::Display for Attachment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Attachment::Existing(v) => write!(f, "{v}"),
            Attachment::OnEdge { anchor, other } => write!(f, "({anchor}-{other})"),
        }
    }
}

/// How `exception_generator` avoids subdividing one within-region edge from
/// both of its endpoints.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum SkipMode {
    /// Skip a neighbour that appears anywhere earlier in the region.
    #[default]
    Dedup,
    /// Only the comparison against the immediately preceding region member
    /// counts, and the flag carries over when there is no preceding member.
    Literal,
}

impl SkipMode {
    fn skip(self, previous: bool, earlier: &[VertexId], neighbour: VertexId) -> bool {
        match self {
            SkipMode::Dedup => earlier.contains(&neighbour),
            SkipMode::Literal => earlier.last().map_or(previous, |&p| p == neighbour),
        }
    }
}

impl fmt::Display for SkipMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SkipMode::Dedup => "dedup",
            SkipMode::Literal => "literal",
        })
    }
}

impl FromStr for SkipMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dedup" => Ok(SkipMode::Dedup),
            "literal" => Ok(SkipMode::Literal),
            other => Err(format!("unknown skip mode `{other}` (expected dedup or literal)")),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct GenerationOptions {
    /// Test candidates on the current rayon pool.
    pub parallel: bool,
    /// Node budget for each candidate search.
    pub budget: Option<u64>,
    pub skip_mode: SkipMode,
}

/// Graphs without a `W_k`-subdivision, in generation order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExceptionList {
    pub k: usize,
    pub graphs: Vec<Graph>,
}

impl ExceptionList {
    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GenerationStats {
    pub candidates_tested: usize,
    pub exceptions_found: usize,
    pub skipped_not_3connected: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generation {
    pub exceptions: ExceptionList,
    pub stats: GenerationStats,
}

/// `W_{k-1}` plus a vertex `u = k` joined to the hub. Returns the graph and `u`.
pub fn wheelproof_base(k: usize) -> Result<(Graph, VertexId), GenerationError> {
    if k < 4 {
        return Err(GenerationError::KTooSmall(k));
    }
    let mut g = make_wheel(k - 1)?;
    let u = k;
    g.add_vertex(u)?;
    g.add_edge(0, u)?;
    Ok((g, u))
}

/// Attachment sites for the paths from `u`: every vertex other than the hub
/// and `u` in ascending order, then every edge not incident to `u` in
/// ascending order.
pub fn wheelproof_sites(base: &Graph, hub: VertexId, u: VertexId) -> Vec<Attachment> {
    let existing = base.vertices().filter(|&v| v != hub && v != u).map(Attachment::Existing);
    let on_edge =
        base.edges().filter(|&(a, b)| a != u && b != u).map(|(anchor, other)| Attachment::OnEdge { anchor, other });
    existing.chain(on_edge).collect()
}

/// Visits every candidate `base + u-p1 + u-p2`, one per unordered pair of
/// attachment sites. Two fresh vertices on the same edge are allowed and
/// placed in one order only; the same existing vertex twice is not.
///
/// `g` is edited in place and is equal to its input again on return.
pub fn for_each_wheelproof_candidate<F>(
    g: &mut Graph,
    hub: VertexId,
    u: VertexId,
    mut visit: F,
) -> Result<usize, GraphError>
where
    F: FnMut(&Graph, Attachment, Attachment),
{
    let sites = wheelproof_sites(g, hub, u);
    let first_new = g.fresh_id();
    let second_new = first_new + 1;
    let mut visited = 0;
    for (idx, &first) in sites.iter().enumerate() {
        let p1 = attach(g, u, first, first_new)?;
        for &second in &sites[idx..] {
            let site = match (first, second) {
                (Attachment::Existing(x), Attachment::Existing(y)) if x == y => continue,
                // second new vertex goes on the far half of the same edge
                (Attachment::OnEdge { anchor, other }, s2) if s2 == (Attachment::OnEdge { anchor, other }) => {
                    Attachment::OnEdge { anchor: p1, other }
                }
                (_, s2) => s2,
            };
            attach(g, u, site, second_new)?;
            visit(g, first, second);
            visited += 1;
            detach(g, u, site, second_new)?;
        }
        detach(g, u, first, first_new)?;
    }
    Ok(visited)
}

fn attach(g: &mut Graph, u: VertexId, site: Attachment, fresh: VertexId) -> Result<VertexId, GraphError> {
    match site {
        Attachment::Existing(x) => {
            g.add_edge(u, x)?;
            Ok(x)
        }
        Attachment::OnEdge { anchor, other } => {
            g.add_vertex(fresh)?;
            g.expand_edge(anchor, other, fresh)?;
            g.add_edge(u, fresh)?;
            Ok(fresh)
        }
    }
}

fn detach(g: &mut Graph, u: VertexId, site: Attachment, fresh: VertexId) -> Result<(), GraphError> {
    match site {
        Attachment::Existing(x) => g.remove_edge(u, x),
        Attachment::OnEdge { .. } => {
            g.remove_edge(u, fresh)?;
            g.contract_vertex(fresh)
        }
    }
}

/// Runs the wheelproof generator with default options.
pub fn wheelproof(k: usize) -> Result<Generation, GenerationError> {
    wheelproof_with(k, &GenerationOptions::default())
}

/// Every 3-connected placement of a `k`th hub neighbour on `W_{k-1}` that
/// does not contain a `W_k`-subdivision. Candidates that are not 3-connected
/// are counted and dropped.
pub fn wheelproof_with(k: usize, options: &GenerationOptions) -> Result<Generation, GenerationError> {
    let (mut work, u) = wheelproof_base(k)?;
    let base = work.clone();
    let mut candidates = Vec::new();
    for_each_wheelproof_candidate(&mut work, 0, u, |g, _, _| candidates.push(g.clone()))?;
    debug_assert_eq!(work, base);
    evaluate(candidates, k, true, options)
}

fn check_regions(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<(), GenerationError> {
    if a.is_empty() {
        return Err(GenerationError::EmptyRegion('A'));
    }
    if b.is_empty() {
        return Err(GenerationError::EmptyRegion('B'));
    }
    if let Some(v) = a.first_missing(g).or_else(|| b.first_missing(g)) {
        return Err(GenerationError::MissingVertex(v));
    }
    if let Some(v) = a.iter().find(|&v| b.contains(v)) {
        return Err(GenerationError::OverlappingRegions(v));
    }
    Ok(())
}

/// Visits every graph `g + P` where `P` runs from region `a` to region `b`.
///
/// For each `i` in `a` and `j` in `b` four endpoint shapes are tried, in
/// this order: the edge `i-j`; a fresh vertex on an edge at `i` joined to
/// `j`; a fresh vertex on an edge at `j` joined to `i`, followed, with that
/// vertex still in place, by every fresh vertex on an edge at `i` joined to
/// it. Neighbours are taken in ascending id order. A path edge that already
/// exists would add nothing, so that candidate is not visited.
///
/// `g` is edited in place and is equal to its input again on return.
pub fn for_each_path_candidate<F>(
    g: &mut Graph,
    a: &VertexSet,
    b: &VertexSet,
    mode: SkipMode,
    mut visit: F,
) -> Result<usize, GraphError>
where
    F: FnMut(&Graph),
{
    let near_b = g.fresh_id();
    let near_a = near_b + 1;
    let (a, b) = (a.as_slice(), b.as_slice());
    let mut visited = 0;
    let mut try_edge = |g: &mut Graph, x: VertexId, y: VertexId| -> Result<(), GraphError> {
        if !g.has_edge(x, y) {
            g.add_edge(x, y)?;
            visit(g);
            visited += 1;
            g.remove_edge(x, y)?;
        }
        Ok(())
    };
    let (mut skip, mut skip_inner) = (false, false);

    for (ia, &i) in a.iter().enumerate() {
        for (jb, &j) in b.iter().enumerate() {
            try_edge(g, i, j)?;

            let around_i: Vec<_> = g.neighbors(i).collect();
            for x in around_i {
                skip = mode.skip(skip, &a[..ia], x);
                if !skip {
                    g.add_vertex(near_b)?;
                    g.expand_edge(i, x, near_b)?;
                    try_edge(g, near_b, j)?;
                    g.contract_vertex(near_b)?;
                }
            }

            let around_j: Vec<_> = g.neighbors(j).collect();
            for x in around_j {
                skip = mode.skip(skip, &b[..jb], x);
                if skip {
                    continue;
                }
                g.add_vertex(near_b)?;
                g.expand_edge(j, x, near_b)?;
                try_edge(g, near_b, i)?;

                let around_i: Vec<_> = g.neighbors(i).collect();
                for y in around_i {
                    skip_inner = mode.skip(skip_inner, &a[..ia], y);
                    if !skip_inner {
                        g.add_vertex(near_a)?;
                        g.expand_edge(i, y, near_a)?;
                        try_edge(g, near_b, near_a)?;
                        g.contract_vertex(near_a)?;
                    }
                }
                g.contract_vertex(near_b)?;
            }
        }
    }
    Ok(visited)
}

/// Number of candidates [`exception_generator`] tests for these regions.
pub fn candidate_count(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<usize, GenerationError> {
    candidate_count_with(g, a, b, SkipMode::Dedup)
}

pub fn candidate_count_with(g: &Graph, a: &VertexSet, b: &VertexSet, mode: SkipMode) -> Result<usize, GenerationError> {
    check_regions(g, a, b)?;
    let mut work = g.clone();
    Ok(for_each_path_candidate(&mut work, a, b, mode, |_| {})?)
}

/// Every `g + P` with `P` a new path from region `a` to region `b` that has
/// no `W_k`-subdivision.
pub fn exception_generator(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    k: usize,
    options: &GenerationOptions,
) -> Result<Generation, GenerationError> {
    check_regions(g, a, b)?;
    let mut work = g.clone();
    let mut candidates = Vec::new();
    for_each_path_candidate(&mut work, a, b, options.skip_mode, |c| candidates.push(c.clone()))?;
    debug_assert_eq!(&work, g);
    evaluate(candidates, k, false, options)
}

/// The two components of `g - s`, or an error naming how many there are.
pub fn split_regions(g: &Graph, s: &VertexSet) -> Result<(VertexSet, VertexSet), GenerationError> {
    if let Some(v) = s.first_missing(g) {
        return Err(GenerationError::MissingVertex(v));
    }
    let mut parts = components_minus(g, s);
    if parts.len() != 2 {
        return Err(GenerationError::NotTwoComponents(parts.len()));
    }
    let b = parts.pop().unwrap();
    let a = parts.pop().unwrap();
    Ok((a, b))
}

enum Verdict {
    Exception,
    Contains,
    NotThreeConnected,
    Exhausted,
}

fn evaluate(
    candidates: Vec<Graph>,
    k: usize,
    require_3connected: bool,
    options: &GenerationOptions,
) -> Result<Generation, GenerationError> {
    let config = SearchConfig { budget: options.budget, ..SearchConfig::default() };
    let judge = |g: &Graph| {
        if require_3connected && !is_3connected(g) {
            return Verdict::NotThreeConnected;
        }
        match find_k_wheel_with(g, k, &config).outcome {
            SearchOutcome::NotFound => Verdict::Exception,
            SearchOutcome::Found(_) => Verdict::Contains,
            SearchOutcome::BudgetExhausted => Verdict::Exhausted,
        }
    };
    let verdicts: Vec<Verdict> = if options.parallel {
        candidates.par_iter().map(judge).collect()
    } else {
        candidates.iter().map(judge).collect()
    };

    let mut stats = GenerationStats { candidates_tested: candidates.len(), ..Default::default() };
    let mut graphs = Vec::new();
    for (idx, (graph, verdict)) in candidates.into_iter().zip(verdicts).enumerate() {
        match verdict {
            Verdict::Exception => graphs.push(graph),
            Verdict::Contains => {}
            Verdict::NotThreeConnected => stats.skipped_not_3connected += 1,
            Verdict::Exhausted => return Err(GenerationError::BudgetExhausted(idx)),
        }
    }
    stats.exceptions_found = graphs.len();
    Ok(Generation { exceptions: ExceptionList { k, graphs }, stats })
}
