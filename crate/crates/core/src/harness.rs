//! Desk-scale verification harness: exhaustive extremal search over the edge
//! lattice, seeded saturation sampling, and per-claim grid verification with
//! serializable reports.
//!
//! The exhaustive search walks the edge-subset lattice depth-first in
//! lexicographic order. The family being enumerated (kappa-bar at most k) is
//! closed under edge removal, so a branch is pruned the moment an edge
//! addition would exceed k; its maximal members are exactly the
//! vertex-k-maximal hypergraphs. Grid cells and search subtrees are
//! independent work units; every merge (counts, min/max under total orders,
//! histogram union) is commutative, so parallel and sequential runs produce
//! identical reports.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use num::{BigInt, BigRational};
use serde::Serialize;

use crate::bounds::{self, binom_usize};
use crate::error::{HgError, Result};
use crate::kernel;
use crate::maximality::{
    is_vertex_k_maximal, saturate, verify_kappa_equality, verify_separation_structure,
    SaturationOrder, Verdict,
};
use crate::set::{full_mask, k_subsets, lex_cmp_masks, VertexSet};
use crate::{exec, Hypergraph};

/// Explicit budgets for the exhaustive search.
#[derive(Debug, Clone, Serialize)]
pub struct SearchLimits {
    /// Largest edge universe C(n, r) accepted by exhaustive mode.
    pub max_edge_universe: usize,
    /// Abort after visiting this many lattice nodes.
    pub node_budget: Option<u64>,
    /// Abort after this much wall-clock time.
    pub time_budget_ms: Option<u64>,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_edge_universe: 24,
            node_budget: None,
            time_budget_ms: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchMode {
    Exhaustive,
    Sampled,
}

/// Outcome of an extremal search at one parameter cell.
#[derive(Debug, Clone, Serialize)]
pub struct SearchResult {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub mode: SearchMode,
    /// Labeled count of vertex-k-maximal hypergraphs (exhaustive mode only).
    pub count_maximal: Option<u64>,
    pub min_size: Option<usize>,
    pub max_size: Option<usize>,
    pub min_witness: Option<Hypergraph>,
    pub max_witness: Option<Hypergraph>,
    /// Histogram of saturated sizes (sampled mode).
    pub samples: BTreeMap<usize, u64>,
    pub seed: Option<u64>,
    /// True when a budget stopped the search early; partial results only.
    pub truncated: bool,
    pub nodes_visited: u64,
    /// Sampled sizes strictly above the conjectured upper bound.
    pub over_conjectured: u64,
}

fn check_params(n: usize, k: usize, r: usize) -> Result<()> {
    if k < 2 || r < 2 {
        return Err(HgError::ParameterRange("search needs k, r >= 2".into()));
    }
    if n < k + 1 {
        return Err(HgError::ParameterRange("search needs n >= k+1".into()));
    }
    Ok(())
}

struct DfsCtx<'a> {
    universe: &'a [u64],
    verts: u64,
    r: usize,
    t: usize, // k + 1
    nodes: AtomicU64,
    stop: AtomicBool,
    node_budget: u64,
    deadline: Option<Instant>,
}

#[derive(Clone, Default)]
struct Partial {
    count: u64,
    min: Option<Vec<u64>>,
    max: Option<Vec<u64>>,
    truncated: bool,
}

/// Total order on maximal witnesses: edge count, then edge sequence.
fn witness_cmp(a: &[u64], b: &[u64]) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| {
        for (x, y) in a.iter().zip(b) {
            let ord = lex_cmp_masks(*x, *y);
            if ord != std::cmp::Ordering::Equal {
                return ord;
            }
        }
        std::cmp::Ordering::Equal
    })
}

impl Partial {
    fn maximal(state: &[u64]) -> Partial {
        Partial {
            count: 1,
            min: Some(state.to_vec()),
            max: Some(state.to_vec()),
            truncated: false,
        }
    }

    fn truncated() -> Partial {
        Partial {
            truncated: true,
            ..Partial::default()
        }
    }

    fn merge(mut self, other: Partial) -> Partial {
        self.count += other.count;
        self.min = match (self.min, other.min) {
            (Some(a), Some(b)) => Some(if witness_cmp(&a, &b).is_le() { a } else { b }),
            (a, b) => a.or(b),
        };
        self.max = match (self.max, other.max) {
            (Some(a), Some(b)) => {
                // larger size wins; ties toward the lexicographically smaller
                let ord = a.len().cmp(&b.len()).then_with(|| witness_cmp(&b, &a));
                Some(if ord.is_ge() { a } else { b })
            }
            (a, b) => a.or(b),
        };
        self.truncated |= other.truncated;
        self
    }
}

/// Depth above which branching nodes fork into parallel tasks.
const PAR_DEPTH: usize = 10;

fn dfs(ctx: &DfsCtx, state: &mut Vec<u64>, included: u64, i: usize, depth: usize) -> Partial {
    if ctx.stop.load(Ordering::Relaxed) {
        return Partial::truncated();
    }
    let visited = ctx.nodes.fetch_add(1, Ordering::Relaxed);
    if visited >= ctx.node_budget {
        ctx.stop.store(true, Ordering::Relaxed);
        return Partial::truncated();
    }
    if visited % 4096 == 0 {
        if let Some(deadline) = ctx.deadline {
            if Instant::now() >= deadline {
                ctx.stop.store(true, Ordering::Relaxed);
                return Partial::truncated();
            }
        }
    }
    if i == ctx.universe.len() {
        return leaf(ctx, state, included);
    }
    let e = ctx.universe[i];
    state.push(e);
    let can_add = kernel::find_t_connected(state, ctx.verts, ctx.r, ctx.t, e).is_none();
    state.pop();
    if !can_add {
        // every superset with e also exceeds k: prune the include branch
        return dfs(ctx, state, included, i + 1, depth + 1);
    }
    if depth < PAR_DEPTH {
        let mut with_state = state.clone();
        let mut without_state = state.clone();
        let (with, without) = exec::join(
            move || {
                with_state.push(e);
                dfs(ctx, &mut with_state, included | 1 << i, i + 1, depth + 1)
            },
            move || dfs(ctx, &mut without_state, included, i + 1, depth + 1),
        );
        with.merge(without)
    } else {
        state.push(e);
        let with = dfs(ctx, state, included | 1 << i, i + 1, depth + 1);
        state.pop();
        let without = dfs(ctx, state, included, i + 1, depth + 1);
        with.merge(without)
    }
}

fn leaf(ctx: &DfsCtx, state: &mut Vec<u64>, included: u64) -> Partial {
    for (j, &e) in ctx.universe.iter().enumerate() {
        if included & (1u64 << j) != 0 {
            continue;
        }
        state.push(e);
        let addable = kernel::find_t_connected(state, ctx.verts, ctx.r, ctx.t, e).is_none();
        state.pop();
        if addable {
            return Partial::default(); // extendable, not maximal
        }
    }
    Partial::maximal(state)
}

/// Enumerate every vertex-k-maximal r-uniform hypergraph on `n` labeled
/// vertices by pruned lattice search, reporting the labeled count and the
/// extremal sizes with witnesses.
pub fn exhaustive_extremal(
    n: usize,
    k: usize,
    r: usize,
    limits: &SearchLimits,
) -> Result<SearchResult> {
    check_params(n, k, r)?;
    let universe = k_subsets(full_mask(n), r);
    // 64 is a hard cap regardless of configured limits: the lattice walk
    // tracks included edges in a word-sized mask (and 2^64 subsets is far
    // past any budget anyway)
    let limit = limits.max_edge_universe.min(64);
    if universe.len() > limit {
        return Err(HgError::UniverseTooLarge {
            universe: universe.len(),
            limit,
        });
    }
    let ctx = DfsCtx {
        universe: &universe,
        verts: full_mask(n),
        r,
        t: k + 1,
        nodes: AtomicU64::new(0),
        stop: AtomicBool::new(false),
        node_budget: limits.node_budget.unwrap_or(u64::MAX),
        deadline: limits
            .time_budget_ms
            .map(|ms| Instant::now() + Duration::from_millis(ms)),
    };
    let mut state = Vec::with_capacity(universe.len());
    let partial = dfs(&ctx, &mut state, 0, 0, 0);
    let to_witness = |masks: &Vec<u64>| {
        Hypergraph::new(n, r, masks.iter().map(|&m| VertexSet(m)).collect::<Vec<_>>())
            .expect("search states are valid hypergraphs")
    };
    Ok(SearchResult {
        n,
        k,
        r,
        mode: SearchMode::Exhaustive,
        count_maximal: Some(partial.count),
        min_size: partial.min.as_ref().map(|w| w.len()),
        max_size: partial.max.as_ref().map(|w| w.len()),
        min_witness: partial.min.as_ref().map(to_witness),
        max_witness: partial.max.as_ref().map(to_witness),
        samples: BTreeMap::new(),
        seed: None,
        truncated: partial.truncated,
        nodes_visited: ctx.nodes.load(Ordering::Relaxed),
        over_conjectured: 0,
    })
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E3779B97F4A7C15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

/// Per-trial seed derivation: portable and independent of execution order.
pub fn trial_seed(master: u64, trial: u64) -> u64 {
    splitmix64(master ^ splitmix64(trial))
}

/// Saturate the edgeless hypergraph `trials` times under seeded-random
/// orders, collecting the size histogram. Sizes above the conjectured upper
/// bound are counted (reported, never asserted).
pub fn sample_saturations(
    n: usize,
    k: usize,
    r: usize,
    trials: u64,
    seed: u64,
) -> Result<SearchResult> {
    check_params(n, k, r)?;
    let start = Hypergraph::empty(n, r)?;
    let indices: Vec<u64> = (0..trials).collect();
    let outcomes: Vec<Hypergraph> = exec::map_ordered(&indices, |&t| {
        saturate(
            &start,
            k,
            SaturationOrder::SeededRandom {
                seed: trial_seed(seed, t),
            },
        )
        .expect("edgeless start is always admissible")
    });
    let mut samples: BTreeMap<usize, u64> = BTreeMap::new();
    let mut min: Option<Hypergraph> = None;
    let mut max: Option<Hypergraph> = None;
    for h in outcomes {
        *samples.entry(h.edge_count()).or_insert(0) += 1;
        min = Some(match min {
            None => h.clone(),
            Some(cur) => {
                if h.canonical_cmp(&cur).is_lt() {
                    h.clone()
                } else {
                    cur
                }
            }
        });
        max = Some(match max {
            None => h,
            Some(cur) => {
                let ord = h
                    .edge_count()
                    .cmp(&cur.edge_count())
                    .then_with(|| cur.canonical_cmp(&h));
                if ord.is_gt() {
                    h
                } else {
                    cur
                }
            }
        });
    }
    let conj = bounds::conjectured_upper(n, k, r)?;
    let over_conjectured = samples
        .iter()
        .filter(|(size, _)| BigRational::from(BigInt::from(**size)) > conj)
        .map(|(_, count)| count)
        .sum();
    Ok(SearchResult {
        n,
        k,
        r,
        mode: SearchMode::Sampled,
        count_maximal: None,
        min_size: min.as_ref().map(|h| h.edge_count()),
        max_size: max.as_ref().map(|h| h.edge_count()),
        min_witness: min,
        max_witness: max,
        samples,
        seed: Some(seed),
        truncated: false,
        nodes_visited: 0,
        over_conjectured,
    })
}

/// Identifiers of the verifiable claims, used by the CLI and report files.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ClaimId {
    #[serde(rename = "lemma2.1")]
    KappaEquality,
    #[serde(rename = "lemma2.3")]
    SeparationStructure,
    #[serde(rename = "lemma3.1")]
    LowerConstruction,
    #[serde(rename = "thm3.2")]
    LowerBound,
    #[serde(rename = "cor3.3")]
    GraphLowerIdentity,
    #[serde(rename = "lemma4.1")]
    UpperConstruction,
    #[serde(rename = "thm4.2")]
    SmallKUpperBound,
    #[serde(rename = "cor4.3")]
    SmallKExactSize,
    #[serde(rename = "conj2")]
    UpperConjecture,
}

pub const ALL_CLAIMS: [ClaimId; 9] = [
    ClaimId::KappaEquality,
    ClaimId::SeparationStructure,
    ClaimId::LowerConstruction,
    ClaimId::LowerBound,
    ClaimId::GraphLowerIdentity,
    ClaimId::UpperConstruction,
    ClaimId::SmallKUpperBound,
    ClaimId::SmallKExactSize,
    ClaimId::UpperConjecture,
];

impl ClaimId {
    pub fn id(self) -> &'static str {
        match self {
            ClaimId::KappaEquality => "lemma2.1",
            ClaimId::SeparationStructure => "lemma2.3",
            ClaimId::LowerConstruction => "lemma3.1",
            ClaimId::LowerBound => "thm3.2",
            ClaimId::GraphLowerIdentity => "cor3.3",
            ClaimId::UpperConstruction => "lemma4.1",
            ClaimId::SmallKUpperBound => "thm4.2",
            ClaimId::SmallKExactSize => "cor4.3",
            ClaimId::UpperConjecture => "conj2",
        }
    }

    /// One-line statement of what the claim checks.
    pub fn statement(self) -> &'static str {
        match self {
            ClaimId::KappaEquality => {
                "every vertex-k-maximal instance with n >= k+r-1 has kappa = kappa-bar = k"
            }
            ClaimId::SeparationStructure => {
                "across a separation triple of a vertex-k-maximal instance, the complement has no \
                 (side1, cut, side2)-crossing edge and the crossing count matches its closed form"
            }
            ClaimId::LowerConstruction => {
                "the hub construction h_l(n;k,r) is vertex-k-maximal with exactly C(n,r) - C(n-k,r) edges"
            }
            ClaimId::LowerBound => {
                "every vertex-k-maximal hypergraph has at least C(n,r) - C(n-k,r) edges, and the \
                 bound is attained"
            }
            ClaimId::GraphLowerIdentity => {
                "for r = 2 the lower bound equals (n-k)k + k(k-1)/2"
            }
            ClaimId::UpperConstruction => {
                "the block construction h_u(n;k,r) is vertex-k-maximal with at most \
                 C(n,r) - C(n-k,r) + (n/k - 2)C(k,r) edges, with equality whenever k divides n \
                 (and only then, wherever C(k,r) > 0)"
            }
            ClaimId::SmallKUpperBound => {
                "for k < r, every vertex-k-maximal hypergraph has at most C(n,r) - C(n-k,r) edges"
            }
            ClaimId::SmallKExactSize => {
                "for k < r and n >= 2k, every vertex-k-maximal hypergraph has exactly \
                 C(n,r) - C(n-k,r) edges"
            }
            ClaimId::UpperConjecture => {
                "observed maximum sizes versus the conjectured upper bound for k >= r \
                 (reported per cell, never asserted)"
            }
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for ClaimId {
    type Err = HgError;
    fn from_str(s: &str) -> Result<ClaimId> {
        ALL_CLAIMS
            .iter()
            .copied()
            .find(|c| c.id() == s)
            .ok_or_else(|| HgError::ParameterRange(format!("unknown claim id {s:?}")))
    }
}

/// Parameter grid for [`verify_claim`].
#[derive(Debug, Clone, Serialize)]
pub struct GridSpec {
    pub n_max: usize,
    pub ks: Vec<usize>,
    pub rs: Vec<usize>,
    /// Saturation trials per cell where sampling is used.
    pub trials: u64,
    pub seed: u64,
    pub limits: SearchLimits,
}

impl ClaimId {
    /// A sensible default grid per claim, all within desk scale.
    pub fn default_grid(self) -> GridSpec {
        let base = GridSpec {
            n_max: 9,
            ks: vec![2, 3],
            rs: vec![2, 3],
            trials: 5,
            seed: 0xC0FFEE,
            limits: SearchLimits::default(),
        };
        match self {
            ClaimId::LowerConstruction => GridSpec {
                n_max: 10,
                ks: vec![2, 3, 4],
                rs: vec![2, 3, 4],
                ..base
            },
            ClaimId::GraphLowerIdentity => GridSpec {
                n_max: 30,
                ks: (2..=29).collect(),
                rs: vec![2],
                ..base
            },
            ClaimId::UpperConstruction => GridSpec { n_max: 10, ..base },
            ClaimId::LowerBound => GridSpec {
                n_max: 6,
                limits: SearchLimits {
                    max_edge_universe: 20,
                    ..SearchLimits::default()
                },
                ..base
            },
            ClaimId::SmallKUpperBound | ClaimId::SmallKExactSize => GridSpec {
                rs: vec![3, 4],
                trials: 20,
                limits: SearchLimits {
                    max_edge_universe: 20,
                    ..SearchLimits::default()
                },
                ..base
            },
            ClaimId::UpperConjecture => GridSpec {
                trials: 50,
                limits: SearchLimits {
                    max_edge_universe: 16,
                    ..SearchLimits::default()
                },
                ..base
            },
            _ => base,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CellStatus {
    Verified,
    Violated,
    Skipped(String),
}

impl fmt::Display for CellStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CellStatus::Verified => f.write_str("verified"),
            CellStatus::Violated => f.write_str("violated"),
            CellStatus::Skipped(reason) => write!(f, "skipped({reason})"),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CellReport {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub status: CellStatus,
    /// Measured quantities, deterministic per (cell, seed).
    pub details: BTreeMap<String, String>,
    /// Serialized on violation; re-fails the claim check independently.
    pub witness: Option<Hypergraph>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClaimReport {
    pub claim: ClaimId,
    pub statement: String,
    pub seed: u64,
    pub cells: Vec<CellReport>,
}

impl ClaimReport {
    pub fn all_verified(&self) -> bool {
        self.cells
            .iter()
            .all(|c| !matches!(c.status, CellStatus::Violated))
    }

    pub fn violations(&self) -> usize {
        self.cells
            .iter()
            .filter(|c| matches!(c.status, CellStatus::Violated))
            .count()
    }
}

fn detail(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

fn skipped(n: usize, k: usize, r: usize, reason: &str) -> CellReport {
    CellReport {
        n,
        k,
        r,
        status: CellStatus::Skipped(reason.to_string()),
        details: BTreeMap::new(),
        witness: None,
    }
}

/// Run one claim's checker over every cell of the grid.
pub fn verify_claim(claim: ClaimId, grid: &GridSpec) -> ClaimReport {
    let mut cells: Vec<(usize, usize, usize)> = Vec::new();
    for &k in &grid.ks {
        for &r in &grid.rs {
            for n in 2..=grid.n_max {
                cells.push((n, k, r));
            }
        }
    }
    let reports = exec::map_ordered(&cells, |&(n, k, r)| check_cell(claim, n, k, r, grid));
    ClaimReport {
        claim,
        statement: claim.statement().to_string(),
        seed: grid.seed,
        cells: reports,
    }
}

fn cell_seed(grid: &GridSpec, n: usize, k: usize, r: usize) -> u64 {
    trial_seed(grid.seed, (n as u64) << 16 | (k as u64) << 8 | r as u64)
}

fn check_cell(claim: ClaimId, n: usize, k: usize, r: usize, grid: &GridSpec) -> CellReport {
    match claim {
        ClaimId::KappaEquality | ClaimId::SeparationStructure => {
            check_saturation_structure(claim, n, k, r, grid)
        }
        ClaimId::LowerConstruction => check_lower_construction(n, k, r),
        ClaimId::UpperConstruction => check_upper_construction(n, k, r),
        ClaimId::GraphLowerIdentity => check_graph_identity(n, k, r),
        ClaimId::LowerBound => check_size_claim(SizeClaim::AtLeastLower, n, k, r, grid),
        ClaimId::SmallKUpperBound => check_size_claim(SizeClaim::AtMostLower, n, k, r, grid),
        ClaimId::SmallKExactSize => check_size_claim(SizeClaim::ExactlyLower, n, k, r, grid),
        ClaimId::UpperConjecture => check_conjecture(n, k, r, grid),
    }
}

fn check_saturation_structure(
    claim: ClaimId,
    n: usize,
    k: usize,
    r: usize,
    grid: &GridSpec,
) -> CellReport {
    if k < 2 || r < 2 {
        return skipped(n, k, r, "needs k, r >= 2");
    }
    let min_n = if claim == ClaimId::KappaEquality {
        (k + r - 1).max(k + 1)
    } else {
        k + r
    };
    if n < min_n {
        return skipped(n, k, r, "below the claim's order threshold");
    }
    let trials = grid.trials.max(1);
    let mut details = BTreeMap::new();
    for t in 0..trials {
        let seed = trial_seed(cell_seed(grid, n, k, r), t);
        let start = Hypergraph::empty(n, r).expect("valid");
        let sat = match saturate(&start, k, SaturationOrder::SeededRandom { seed }) {
            Ok(h) => h,
            Err(e) => return skipped(n, k, r, &format!("saturation failed: {e}")),
        };
        let check = if claim == ClaimId::KappaEquality {
            verify_kappa_equality(&sat, k)
        } else {
            verify_separation_structure(&sat, k)
        };
        match check {
            Ok(rec) if rec.pass => {
                details.insert(format!("trial{t}.kappa"), rec.kappa.to_string());
                details.insert(format!("trial{t}.kappa_bar"), rec.kappa_bar.to_string());
                if let Some(c) = rec.crossing_count {
                    details.insert(format!("trial{t}.crossing"), c.to_string());
                }
            }
            Ok(rec) => {
                return CellReport {
                    n,
                    k,
                    r,
                    status: CellStatus::Violated,
                    details: detail(&[
                        ("kappa", rec.kappa.to_string()),
                        ("kappa_bar", rec.kappa_bar.to_string()),
                    ]),
                    witness: Some(sat),
                };
            }
            Err(e) => return skipped(n, k, r, &format!("precondition: {e}")),
        }
    }
    CellReport {
        n,
        k,
        r,
        status: CellStatus::Verified,
        details,
        witness: None,
    }
}

fn check_lower_construction(n: usize, k: usize, r: usize) -> CellReport {
    if n < k + 1 {
        return skipped(n, k, r, "needs n >= k+1");
    }
    let h = match Hypergraph::h_l(n, k, r) {
        Ok(h) => h,
        Err(e) => return skipped(n, k, r, &format!("{e}")),
    };
    let expected = bounds::lower_bound(n, k, r).expect("range checked");
    let report = is_vertex_k_maximal(&h, k).expect("k >= 2 checked");
    let size_ok = num::BigUint::from(h.edge_count()) == expected;
    let verdict_ok = report.verdict == Verdict::Maximal;
    CellReport {
        n,
        k,
        r,
        status: if size_ok && verdict_ok {
            CellStatus::Verified
        } else {
            CellStatus::Violated
        },
        details: detail(&[
            ("size", h.edge_count().to_string()),
            ("expected_size", expected.to_string()),
            ("verdict", format!("{:?}", report.verdict)),
        ]),
        witness: if size_ok && verdict_ok { None } else { Some(h) },
    }
}

fn check_upper_construction(n: usize, k: usize, r: usize) -> CellReport {
    if n < 2 * k {
        return skipped(n, k, r, "needs n >= 2k");
    }
    let h = match Hypergraph::h_u(n, k, r) {
        Ok(h) => h,
        Err(e) => return skipped(n, k, r, &format!("{e}")),
    };
    let conj = bounds::conjectured_upper(n, k, r).expect("range checked");
    let size = BigRational::from(BigInt::from(h.edge_count()));
    let report = is_vertex_k_maximal(&h, k).expect("k >= 2 checked");
    // equality must hold whenever k | n; the converse can only be demanded
    // where the correction term C(k,r) is nonzero (k >= r)
    let bound_ok = size <= conj
        && (n % k != 0 || size == conj)
        && (n % k == 0 || k < r || size < conj);
    let verdict_ok = report.verdict == Verdict::Maximal;
    CellReport {
        n,
        k,
        r,
        status: if bound_ok && verdict_ok {
            CellStatus::Verified
        } else {
            CellStatus::Violated
        },
        details: detail(&[
            ("size", h.edge_count().to_string()),
            ("conj_upper", conj.to_string()),
            ("divides", (n % k == 0).to_string()),
            ("verdict", format!("{:?}", report.verdict)),
        ]),
        witness: if bound_ok && verdict_ok { None } else { Some(h) },
    }
}

fn check_graph_identity(n: usize, k: usize, r: usize) -> CellReport {
    if r != 2 {
        return skipped(n, k, r, "identity is the r = 2 case");
    }
    if n < k + 1 {
        return skipped(n, k, r, "needs n >= k+1");
    }
    let lower = bounds::lower_bound(n, k, 2).expect("range checked");
    let closed = num::BigUint::from((n - k) * k + k * (k - 1) / 2);
    let ok = lower == closed;
    CellReport {
        n,
        k,
        r,
        status: if ok { CellStatus::Verified } else { CellStatus::Violated },
        details: detail(&[
            ("lower", lower.to_string()),
            ("closed_form", closed.to_string()),
        ]),
        witness: None,
    }
}

#[derive(Clone, Copy, PartialEq)]
enum SizeClaim {
    AtLeastLower,
    AtMostLower,
    ExactlyLower,
}

fn check_size_claim(
    claim: SizeClaim,
    n: usize,
    k: usize,
    r: usize,
    grid: &GridSpec,
) -> CellReport {
    if claim != SizeClaim::AtLeastLower {
        if k >= r {
            return skipped(n, k, r, "claim covers k < r only");
        }
        if claim == SizeClaim::ExactlyLower && n < 2 * k {
            return skipped(n, k, r, "needs n >= 2k");
        }
    }
    if n < k + 1 {
        return skipped(n, k, r, "needs n >= k+1");
    }
    let lower = binom_usize(n, r) - binom_usize(n.saturating_sub(k), r);
    let universe = binom_usize(n, r);
    let (min_size, max_size, mode, extra) = if universe <= grid.limits.max_edge_universe {
        match exhaustive_extremal(n, k, r, &grid.limits) {
            Ok(res) if !res.truncated => (
                res.min_size,
                res.max_size,
                "exhaustive",
                vec![("count", res.count_maximal.unwrap_or(0).to_string())],
            ),
            Ok(_) => return skipped(n, k, r, "budget exhausted"),
            Err(e) => return skipped(n, k, r, &format!("{e}")),
        }
    } else {
        match sample_saturations(n, k, r, grid.trials.max(1), cell_seed(grid, n, k, r)) {
            Ok(res) => (
                res.min_size,
                res.max_size,
                "sampled",
                vec![("trials", grid.trials.max(1).to_string())],
            ),
            Err(e) => return skipped(n, k, r, &format!("{e}")),
        }
    };
    let (Some(min_size), Some(max_size)) = (min_size, max_size) else {
        return skipped(n, k, r, "search produced no instances");
    };
    let ok = match claim {
        SizeClaim::AtLeastLower => min_size >= lower,
        SizeClaim::AtMostLower => max_size <= lower,
        SizeClaim::ExactlyLower => min_size == lower && max_size == lower,
    };
    let mut details = detail(&[
        ("lower", lower.to_string()),
        ("min_size", min_size.to_string()),
        ("max_size", max_size.to_string()),
        ("mode", mode.to_string()),
    ]);
    for (key, value) in extra {
        details.insert(key.to_string(), value);
    }
    CellReport {
        n,
        k,
        r,
        status: if ok { CellStatus::Verified } else { CellStatus::Violated },
        details,
        witness: None,
    }
}

fn check_conjecture(n: usize, k: usize, r: usize, grid: &GridSpec) -> CellReport {
    if k < r {
        return skipped(n, k, r, "conjecture cells are k >= r");
    }
    if n < 2 * k {
        return skipped(n, k, r, "needs n >= 2k for the block construction");
    }
    let conj = bounds::conjectured_upper(n, k, r).expect("range checked");
    let universe = binom_usize(n, r);
    let (observed_max, witness, mode) = if universe <= grid.limits.max_edge_universe {
        match exhaustive_extremal(n, k, r, &grid.limits) {
            Ok(res) if !res.truncated => (res.max_size, res.max_witness, "exhaustive"),
            Ok(_) => return skipped(n, k, r, "budget exhausted"),
            Err(e) => return skipped(n, k, r, &format!("{e}")),
        }
    } else {
        match sample_saturations(n, k, r, grid.trials.max(1), cell_seed(grid, n, k, r)) {
            Ok(res) => (res.max_size, res.max_witness, "sampled"),
            Err(e) => return skipped(n, k, r, &format!("{e}")),
        }
    };
    let Some(observed_max) = observed_max else {
        return skipped(n, k, r, "search produced no instances");
    };
    let within = BigRational::from(BigInt::from(observed_max)) <= conj;
    CellReport {
        n,
        k,
        r,
        status: if within { CellStatus::Verified } else { CellStatus::Violated },
        details: detail(&[
            ("observed_max", observed_max.to_string()),
            ("conj_upper", conj.to_string()),
            ("mode", mode.to_string()),
        ]),
        witness: if within { None } else { witness },
    }
}

/// Pretty JSON for a claim report (stable field order).
pub fn claim_report_json(report: &ClaimReport) -> String {
    serde_json::to_string_pretty(report).expect("report serialization is infallible")
}

/// Per-cell CSV summary: `claim,n,k,r,status,detail`.
pub fn claim_report_csv(report: &ClaimReport) -> String {
    let mut out = String::from("claim,n,k,r,status,detail\n");
    for cell in &report.cells {
        let detail = cell
            .details
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(";");
        out.push_str(&format!(
            "{},{},{},{},{},\"{}\"\n",
            report.claim, cell.n, cell.k, cell.r, cell.status, detail
        ));
    }
    out
}

/// Write a claim report into `<base>/<claim>-<timestamp>-<seed>/`:
/// `report.json`, `report.csv`, and one `.hg` file per violation witness.
/// Returns the run directory.
pub fn write_claim_report(report: &ClaimReport, base: &Path) -> Result<PathBuf> {
    let stamp = std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    let dir = base.join(format!("{}-{}-{}", report.claim, stamp, report.seed));
    std::fs::create_dir_all(&dir)?;
    std::fs::write(dir.join("report.json"), claim_report_json(report))?;
    std::fs::write(dir.join("report.csv"), claim_report_csv(report))?;
    for cell in &report.cells {
        if let Some(witness) = &cell.witness {
            let name = format!("witness-n{}-k{}-r{}.hg", cell.n, cell.k, cell.r);
            crate::io::write_hg_file(dir.join(name), witness)?;
        }
    }
    Ok(dir)
}

/// Write a search result as JSON plus extremal witnesses as `.hg` files.
pub fn write_search_result(result: &SearchResult, base: &Path) -> Result<PathBuf> {
    let stamp = std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    let dir = base.join(format!(
        "search-n{}-k{}-r{}-{}-{}",
        result.n,
        result.k,
        result.r,
        stamp,
        result.seed.unwrap_or(0)
    ));
    std::fs::create_dir_all(&dir)?;
    std::fs::write(
        dir.join("report.json"),
        serde_json::to_string_pretty(result)?,
    )?;
    if let Some(w) = &result.min_witness {
        crate::io::write_hg_file(dir.join("min-witness.hg"), w)?;
    }
    if let Some(w) = &result.max_witness {
        crate::io::write_hg_file(dir.join("max-witness.hg"), w)?;
    }
    Ok(dir)
}
