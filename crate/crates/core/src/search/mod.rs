//! Isomorph-free enumeration of `(r, z)`-regular mixed graphs with given
//! order and diameter.
//!
//! The search runs in stages:
//!
//! 1. the undirected skeleton: every `r`-regular graph on `n` vertices up to
//!    isomorphism (for `r = 1` the perfect matching `{2i, 2i+1}`);
//! 2. arcs are added vertex by vertex, choosing all `z` out-neighbours of the
//!    lowest unsaturated vertex at once;
//! 3. a partial assignment is dropped when some vertex cannot reach all `n`
//!    vertices within `k` steps even if every unassigned arc slot opened a
//!    full Moore subtree;
//! 4. choices equivalent under the automorphisms of the partial graph that
//!    fix the current vertex are explored once, and complete graphs are
//!    deduplicated by canonical form.
//!
//! Search subtrees are farmed out to worker threads. The frontier does not
//! depend on the worker count and results are merged in task order, so the
//! output (counters included) is identical for any `jobs`.

mod arcs;
mod skeleton;
mod symmetry;

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bounds::{improved_bound, moore_bound, DegreePair};
use crate::mixedgraph::{CanonicalForm, MixedGraph};

use arcs::{ArcSearch, Node, Outcome};

/// Default largest order the search accepts.
pub const DEFAULT_ORDER_CAP: usize = 16;

/// Number of open subtrees to split off before handing work to threads.
const FRONTIER_TARGET: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("order {n} exceeds the search cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("infeasible search: {reason}")]
    InfeasibleSpec { reason: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DiameterMode {
    Exact,
    AtMost,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchSpec {
    pub degrees: DegreePair,
    pub k: u32,
    pub n: usize,
    pub mode: DiameterMode,
    pub count_only: bool,
    pub jobs: usize,
    pub cap: usize,
}

impl SearchSpec {
    /// Exact-diameter search on one thread with the default cap.
    pub fn new(degrees: DegreePair, k: u32, n: usize) -> Self {
        SearchSpec {
            degrees,
            k,
            n,
            mode: DiameterMode::Exact,
            count_only: false,
            jobs: 1,
            cap: DEFAULT_ORDER_CAP,
        }
    }

    pub fn mode(mut self, mode: DiameterMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn count_only(mut self, count_only: bool) -> Self {
        self.count_only = count_only;
        self
    }

    pub fn jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs.max(1);
        self
    }

    pub fn cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    /// Parity and counting obstructions that rule out every graph.
    pub fn check_feasible(&self) -> Result<(), SearchError> {
        let (r, z, n) = (self.degrees.r() as usize, self.degrees.z() as usize, self.n);
        let reason = if n == 0 {
            Some("the order must be at least 1".to_string())
        } else if r % 2 == 1 && n % 2 == 1 {
            Some(format!(
                "r = {r} is odd, so the order must be even (edge handshake), not {n}"
            ))
        } else if r + 2 * z > n - 1 {
            Some(format!(
                "each vertex needs r + 2z = {} distinct neighbours but only {} others exist",
                r + 2 * z,
                n - 1
            ))
        } else {
            None
        };
        match reason {
            Some(reason) => Err(SearchError::InfeasibleSpec { reason }),
            None => Ok(()),
        }
    }
}

/// Pruning and rejection counters, by rule.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct PruneCounters {
    /// Too few admissible neighbours left for the next vertex.
    pub degree: u64,
    /// Optimistic Moore-ball reach fell short of `n`.
    pub moore_ball: u64,
    /// Choices skipped as images of an explored choice under an automorphism.
    pub orbit: u64,
    /// Complete graphs with the wrong diameter.
    pub diameter: u64,
    /// Complete graphs isomorphic to one already found.
    pub isomorph: u64,
}

impl PruneCounters {
    pub(crate) fn add(&mut self, o: &PruneCounters) {
        self.degree += o.degree;
        self.moore_ball += o.moore_ball;
        self.orbit += o.orbit;
        self.diameter += o.diameter;
        self.isomorph += o.isomorph;
    }
}

/// One line of the JSON-lines run log.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunLogRecord {
    pub event: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skeleton: Option<usize>,
    pub nodes_explored: u64,
    pub pruned: PruneCounters,
    pub classes: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchResult {
    pub spec: SearchSpec,
    /// Canonical forms, sorted by canonical encoding.
    pub classes: Vec<CanonicalForm>,
    /// Canonically relabelled representatives, parallel to `classes`; empty
    /// for count-only searches.
    #[serde(skip)]
    pub graphs: Vec<MixedGraph>,
    pub skeletons: usize,
    pub nodes_explored: u64,
    pub pruned: PruneCounters,
    #[serde(skip)]
    pub wall_time: Duration,
    /// Why the search space is empty, when that is known up front.
    pub obstruction: Option<String>,
    pub log: Vec<RunLogRecord>,
}

impl SearchResult {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// The run log as JSON lines.
    pub fn log_jsonl(&self) -> String {
        self.log
            .iter()
            .map(|r| serde_json::to_string(r).expect("log record serializes") + "\n")
            .collect()
    }

    /// File name for the `index`-th class: `<r>_<z>_k<k>_n<n>_<index>.mgf`.
    pub fn file_name(&self, index: usize) -> String {
        let s = &self.spec;
        format!(
            "{}_{}_k{}_n{}_{}.mgf",
            s.degrees.r(),
            s.degrees.z(),
            s.k,
            s.n,
            index
        )
    }
}

/// Every isomorphism class of strict `(r, z)`-regular mixed graphs of order
/// `n` whose diameter matches `spec.mode`.
///
/// Parity and counting obstructions are not errors: the result is empty and
/// `obstruction` says why.
pub fn enumerate(spec: &SearchSpec) -> Result<SearchResult, SearchError> {
    if spec.n > spec.cap {
        return Err(SearchError::CapExceeded {
            n: spec.n,
            cap: spec.cap,
        });
    }
    let started = Instant::now();
    let mut result = SearchResult {
        spec: spec.clone(),
        classes: Vec::new(),
        graphs: Vec::new(),
        skeletons: 0,
        nodes_explored: 0,
        pruned: PruneCounters::default(),
        wall_time: Duration::ZERO,
        obstruction: None,
        log: Vec::new(),
    };
    if let Err(SearchError::InfeasibleSpec { reason }) = spec.check_feasible() {
        result.obstruction = Some(reason);
        result.log.push(RunLogRecord {
            event: "infeasible".into(),
            skeleton: None,
            nodes_explored: 0,
            pruned: PruneCounters::default(),
            classes: 0,
        });
        result.wall_time = started.elapsed();
        return Ok(result);
    }

    let dp = spec.degrees;
    let mut nodes = 0;
    let mut pruned = PruneCounters::default();
    let skeletons = skeleton::regular_skeletons(dp.r() as usize, spec.n, &mut nodes, &mut pruned);
    result.skeletons = skeletons.len();
    result.log.push(RunLogRecord {
        event: "skeletons".into(),
        skeleton: None,
        nodes_explored: nodes,
        pruned,
        classes: 0,
    });

    let searches: Vec<ArcSearch> = skeletons
        .iter()
        .map(|s| ArcSearch::new(s, dp, spec.k, spec.mode))
        .collect();

    // Per-skeleton outcomes; the frontier expansion is charged to them too.
    let mut outcomes: Vec<Outcome> = searches.iter().map(|_| Outcome::default()).collect();
    let mut tasks: Vec<(usize, Node)> = Vec::new();
    for (i, s) in searches.iter().enumerate() {
        if let Some(root) = s.root(&mut outcomes[i].pruned) {
            tasks.push((i, root));
        }
    }
    loop {
        if tasks.len() >= FRONTIER_TARGET || tasks.iter().all(|(_, t)| ArcSearch::is_complete(t)) {
            break;
        }
        let mut next = Vec::with_capacity(tasks.len() * 2);
        for (i, node) in tasks {
            if ArcSearch::is_complete(&node) {
                next.push((i, node));
            } else {
                for child in searches[i].children(&node, &mut outcomes[i]) {
                    next.push((i, child));
                }
            }
        }
        tasks = next;
    }

    let run = |(i, node): &(usize, Node)| {
        let mut o = Outcome::default();
        searches[*i].dfs(node, &mut o);
        (*i, o)
    };
    let done: Vec<(usize, Outcome)> = if spec.jobs <= 1 {
        tasks.iter().map(run).collect()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(spec.jobs)
            .build()
            .expect("thread pool")
            .install(|| tasks.par_iter().map(run).collect())
    };
    for (i, o) in done {
        let acc = &mut outcomes[i];
        acc.nodes += o.nodes;
        acc.pruned.add(&o.pruned);
        for (key, value) in o.found {
            match acc.found.entry(key) {
                Entry::Occupied(_) => acc.pruned.isomorph += 1,
                Entry::Vacant(slot) => {
                    slot.insert(value);
                }
            }
        }
    }

    let mut all: BTreeMap<Vec<u8>, (CanonicalForm, MixedGraph)> = BTreeMap::new();
    for (i, o) in outcomes.into_iter().enumerate() {
        nodes += o.nodes;
        pruned.add(&o.pruned);
        for (key, value) in o.found {
            match all.entry(key) {
                Entry::Occupied(_) => pruned.isomorph += 1,
                Entry::Vacant(slot) => {
                    slot.insert(value);
                }
            }
        }
        result.log.push(RunLogRecord {
            event: "skeleton".into(),
            skeleton: Some(i),
            nodes_explored: nodes,
            pruned,
            classes: all.len(),
        });
    }

    for (_, (form, graph)) in all {
        result.classes.push(form);
        if !spec.count_only {
            result.graphs.push(graph);
        }
    }
    result.nodes_explored = nodes;
    result.pruned = pruned;
    result.log.push(RunLogRecord {
        event: "done".into(),
        skeleton: None,
        nodes_explored: nodes,
        pruned,
        classes: result.classes.len(),
    });
    result.wall_time = started.elapsed();
    Ok(result)
}

/// Every `r`-regular simple graph on `n` vertices up to isomorphism, as
/// edge-only mixed graphs in canonical labelling (the matching `{2i, 2i+1}`
/// for `r = 1`).
pub fn regular_skeletons(r: usize, n: usize) -> Vec<MixedGraph> {
    skeleton::regular_skeletons(r, n, &mut 0, &mut PruneCounters::default())
}

/// The largest `n` in `[n_lo, n_hi]` admitting an `(r, z)`-regular mixed
/// graph of diameter at most `k`, scanning downwards. `n_hi` defaults to the
/// improved bound when `z > 0` and to the Moore bound for undirected graphs,
/// where odd cycles reach `M`. Returns `None` when no order in range works.
pub fn max_order(
    dp: DegreePair,
    k: u32,
    n_lo: usize,
    n_hi: Option<usize>,
    jobs: usize,
    cap: usize,
) -> Result<Option<(usize, SearchResult)>, SearchError> {
    let n_hi = match n_hi {
        Some(n) => n,
        None => {
            let limit = if dp.z() > 0 {
                improved_bound(dp, k).improved
            } else {
                moore_bound(dp, k)
            };
            limit.to_usize().unwrap_or(usize::MAX)
        }
    };
    if n_hi > cap {
        return Err(SearchError::CapExceeded { n: n_hi, cap });
    }
    for n in (n_lo.max(1)..=n_hi).rev() {
        let spec = SearchSpec::new(dp, k, n)
            .mode(DiameterMode::AtMost)
            .jobs(jobs)
            .cap(cap);
        let res = enumerate(&spec)?;
        if !res.classes.is_empty() {
            return Ok(Some((n, res)));
        }
    }
    Ok(None)
}
