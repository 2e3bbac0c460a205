//! Exact vertex connectivity under induced-subhypergraph deletion semantics:
//! minimum cuts, pairwise separators, kappa-bar by brute force and by
//! cut-decomposition, and separation triples.
//!
//! Deleting a vertex set X removes every edge meeting X. For r >= 3 this
//! breaks the classical incidence-graph flow reduction (a single edge
//! {u, v, w} is separated by deleting w alone), so everything here is exact
//! search: candidate cuts by increasing cardinality, with lexicographic
//! tie-breaking for reproducibility.

use serde::Serialize;

use crate::error::{HgError, Result};
use crate::kernel;
use crate::set::{full_mask, k_subsets, VertexSet};
use crate::Hypergraph;

/// Default vertex-count ceiling for [`kappa_bar_bruteforce`].
pub const KAPPA_BAR_BRUTEFORCE_CEILING: usize = 14;

/// Outcome of a minimum-cut computation. `cut` is present exactly when the
/// hypergraph has a vertex cut; otherwise `kappa` falls back to the
/// no-cut convention |V| - 1 (clamped to 0 for at most one vertex).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutResult {
    pub kappa: usize,
    pub cut: Option<VertexSet>,
}

/// Maximum connectivity over subhypergraphs together with an induced witness
/// attaining it (minimum cardinality, then lexicographically smallest).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KappaBarResult {
    pub value: usize,
    pub witness: VertexSet,
}

/// A minimum cut `s` with the two sides it separates: `side1` is the
/// component of the remainder containing the smallest vertex label, `side2`
/// the rest. `h1`, `h2` are the subhypergraphs induced by `s | side1` and
/// `s | side2` (contiguously relabeled), of orders `n1`, `n2`.
#[derive(Debug, Clone, Serialize)]
pub struct SeparationTriple {
    pub s: VertexSet,
    pub side1: VertexSet,
    pub side2: VertexSet,
    pub h1: Hypergraph,
    pub h2: Hypergraph,
    pub n1: usize,
    pub n2: usize,
}

/// True when every pair of vertices is joined by a path (vacuously for at
/// most one vertex).
pub fn is_connected(h: &Hypergraph) -> bool {
    kernel::connected_after_removal(h.edge_masks(), full_mask(h.n()), 0)
}

/// Exact vertex connectivity.
pub fn kappa(h: &Hypergraph) -> usize {
    min_vertex_cut(h).kappa
}

/// Exact vertex connectivity with the lexicographically smallest minimum cut.
pub fn min_vertex_cut(h: &Hypergraph) -> CutResult {
    let (kappa, cut) = kernel::kappa_cut(h.edge_masks(), full_mask(h.n()));
    CutResult {
        kappa,
        cut: cut.map(VertexSet),
    }
}

/// Smallest set X avoiding both endpoints whose deletion separates `u` from
/// `v`; `cut: None` when no such set exists (then `kappa` is n - 1).
pub fn min_separator(h: &Hypergraph, u: usize, v: usize) -> Result<CutResult> {
    if u >= h.n() {
        return Err(HgError::VertexOutOfRange { vertex: u, n: h.n() });
    }
    if v >= h.n() {
        return Err(HgError::VertexOutOfRange { vertex: v, n: h.n() });
    }
    if u == v {
        return Err(HgError::IdenticalEndpoints);
    }
    let verts = full_mask(h.n());
    let edges = h.edge_masks();
    let rest = verts & !crate::set::bit(u) & !crate::set::bit(v);
    let n = h.n();
    for c in 0..=n - 2 {
        let candidates = k_subsets(rest, c);
        let separated = |&x: &u64| {
            // u's component after deleting x must avoid v
            let mut comp = crate::set::bit(u);
            loop {
                let mut grown = comp;
                for &e in edges {
                    if e & x == 0 && e & comp != 0 {
                        grown |= e;
                    }
                }
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            comp & crate::set::bit(v) == 0
        };
        if let Some(&x) = crate::exec::find_first(&candidates, separated) {
            return Ok(CutResult {
                kappa: c,
                cut: Some(VertexSet(x)),
            });
        }
    }
    Ok(CutResult {
        kappa: n - 1,
        cut: None,
    })
}

/// Is kappa(h) >= t? Stops enumerating as soon as a smaller cut is found.
pub fn is_t_connected(h: &Hypergraph, t: usize) -> bool {
    if t == 0 {
        return true;
    }
    let n = h.n();
    if n <= 1 {
        return false; // kappa = 0 < t
    }
    if kernel::cut_below(h.edge_masks(), full_mask(n), t).is_some() {
        return false;
    }
    // no cut below t: kappa >= t unless even the no-cut value n-1 is too small
    t <= n - 1
}

/// Maximum of kappa over all subhypergraphs, by exhaustive scan over induced
/// vertex subsets (sufficient because adding edges never lowers kappa, so the
/// maximum is attained at an induced subhypergraph). Scans subsets by
/// cardinality then lexicographic order, keeping strict improvements, so the
/// witness is the minimum-cardinality, lexicographically smallest maximizer.
pub fn kappa_bar_bruteforce(h: &Hypergraph) -> Result<KappaBarResult> {
    kappa_bar_bruteforce_with_ceiling(h, KAPPA_BAR_BRUTEFORCE_CEILING)
}

/// [`kappa_bar_bruteforce`] with an explicit vertex-count ceiling.
pub fn kappa_bar_bruteforce_with_ceiling(h: &Hypergraph, ceiling: usize) -> Result<KappaBarResult> {
    let n = h.n();
    if n > ceiling {
        return Err(HgError::CeilingExceeded { n, ceiling });
    }
    let edges = h.edge_masks();
    let r = h.r();
    let mut best: (usize, u64) = (0, 0);
    for s in 0..=n {
        // kappa of an s-vertex sub is at most s - r + 1 (and 0 below r)
        let bound = if s >= r { s - r + 1 } else { 0 };
        if bound <= best.0 {
            continue;
        }
        let candidates = k_subsets(full_mask(n), s);
        let score = |y: u64| kernel::kappa_cut(&kernel::edges_within(edges, y), y).0;
        if let Some(improvement) = crate::exec::best_mask_above(&candidates, best.0, score) {
            best = improvement;
        }
    }
    Ok(KappaBarResult {
        value: best.0,
        witness: VertexSet(best.1),
    })
}

/// Maximum of kappa over all subhypergraphs, by peeling plus cut
/// decomposition, with the same canonical witness as the brute force.
pub fn kappa_bar(h: &Hypergraph) -> KappaBarResult {
    kappa_bar_with_probe(h, None)
}

/// [`kappa_bar`] seeded with a probe threshold: when a t-connected induced
/// subhypergraph exists for the probe t, the branch-and-bound starts from
/// that verified floor.
pub fn kappa_bar_with_probe(h: &Hypergraph, t_probe: Option<usize>) -> KappaBarResult {
    let edges = h.edge_masks();
    let verts = full_mask(h.n());
    let r = h.r();
    let mut seed = 0usize;
    if let Some(t) = t_probe {
        if t >= 1 && kernel::find_t_connected(edges, verts, r, t, 0).is_some() {
            seed = t;
        }
    }
    let value = kernel::max_induced_kappa(edges, verts, r, seed);
    KappaBarResult {
        value,
        witness: canonical_witness(h, value),
    }
}

/// Minimum-cardinality, lexicographically smallest Y with
/// kappa(h[Y]) = value. Every such Y survives peeling at the value, so only
/// subsets of that core are scanned.
fn canonical_witness(h: &Hypergraph, value: usize) -> VertexSet {
    if value == 0 {
        return VertexSet::EMPTY;
    }
    let edges = h.edge_masks();
    let core = kernel::peel(edges, full_mask(h.n()), value);
    let start = kernel::min_t_connected_order(value, h.r());
    for s in start..=core.count_ones() as usize {
        let candidates = k_subsets(core, s);
        let hit = crate::exec::find_first(&candidates, |&y| {
            kernel::kappa_cut(&kernel::edges_within(edges, y), y).0 >= value
        });
        if let Some(&y) = hit {
            return VertexSet(y);
        }
    }
    unreachable!("kappa-bar value must be attained by some induced subhypergraph")
}

/// Separation triple for a hypergraph with at least one vertex cut: the
/// lexicographically smallest minimum cut S, side1 the component of the
/// remainder with the smallest vertex label, side2 the rest.
pub fn separation_triple(h: &Hypergraph) -> Result<SeparationTriple> {
    let CutResult { cut, .. } = min_vertex_cut(h);
    let Some(s) = cut else {
        return Err(HgError::NoCut);
    };
    let remainder = s.complement_in(h.n());
    let side_edges = kernel::edges_within(h.edge_masks(), remainder.mask());
    let blocks = kernel::components_within(&side_edges, remainder.mask());
    debug_assert!(blocks.len() >= 2);
    let side1 = VertexSet(blocks[0]);
    let side2 = remainder - side1;
    let (h1, _) = h.induced(s | side1)?;
    let (h2, _) = h.induced(s | side2)?;
    let (n1, n2) = (h1.n(), h2.n());
    Ok(SeparationTriple {
        s,
        side1,
        side2,
        h1,
        h2,
        n1,
        n2,
    })
}
