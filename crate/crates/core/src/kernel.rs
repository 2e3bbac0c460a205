//! Bitmask kernels shared by the connectivity, maximality, and search layers.
//!
//! All functions work on raw `u64` vertex masks and edge-mask slices so the
//! hot loops (cut enumeration, peeling, decomposition) never build
//! `Hypergraph` values. Deletion follows induced-subhypergraph semantics
//! throughout: removing a vertex set kills every edge meeting it, which is
//! why no flow-style reduction is attempted anywhere — connectivity is
//! decided by exact candidate-cut enumeration in increasing cardinality.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::exec;
use crate::set::{bit, k_subsets};

/// Edges of the slice fully contained in `mask`.
pub(crate) fn edges_within(edges: &[u64], mask: u64) -> Vec<u64> {
    edges.iter().copied().filter(|e| e & !mask == 0).collect()
}

/// Is the sub on `verts` still connected after deleting `removed`?
/// `edges` must all be contained in `verts`. Zero or one surviving vertex
/// counts as connected.
pub(crate) fn connected_after_removal(edges: &[u64], verts: u64, removed: u64) -> bool {
    let alive = verts & !removed;
    if alive.count_ones() <= 1 {
        return true;
    }
    let mut comp = alive & alive.wrapping_neg(); // lowest surviving vertex
    loop {
        let mut grown = comp;
        for &e in edges {
            if e & removed == 0 && e & comp != 0 {
                grown |= e;
            }
        }
        if grown == comp {
            break;
        }
        comp = grown;
    }
    comp == alive
}

/// Connected components of the sub on `verts` (edges must be within `verts`),
/// isolated vertices as singletons, ordered by smallest member.
pub(crate) fn components_within(edges: &[u64], verts: u64) -> Vec<u64> {
    let mut blocks = Vec::new();
    let mut remaining = verts;
    while remaining != 0 {
        let mut comp = remaining & remaining.wrapping_neg();
        loop {
            let mut grown = comp;
            for &e in edges {
                if e & !verts == 0 && e & comp != 0 {
                    grown |= e;
                }
            }
            if grown == comp {
                break;
            }
            comp = grown;
        }
        blocks.push(comp);
        remaining &= !comp;
    }
    blocks
}

/// Neighborhood of `v` inside `core`: the union of the edges contained in
/// `core` through `v`, minus `v` itself.
pub(crate) fn neighborhood(edges: &[u64], core: u64, v: usize) -> u64 {
    let b = bit(v);
    let mut nb = 0u64;
    for &e in edges {
        if e & b != 0 && e & !core == 0 {
            nb |= e;
        }
    }
    nb & !b
}

/// Iteratively remove vertices whose neighborhood inside the shrinking core
/// has fewer than `t` members. A vertex with |N(v)| < t cannot belong to any
/// induced t-connected subhypergraph, so the surviving core contains every
/// such subhypergraph; the fixpoint is the unique maximal core.
pub(crate) fn peel(edges: &[u64], mut core: u64, t: usize) -> u64 {
    if t == 0 {
        return core;
    }
    loop {
        let mut removed = false;
        let mut m = core;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            if (neighborhood(edges, core, v).count_ones() as usize) < t {
                core &= !bit(v);
                removed = true;
            }
        }
        if !removed {
            return core;
        }
    }
}

/// Exact vertex connectivity of the sub on `verts`, with the
/// lexicographically smallest minimum cut (none when no cut exists, in which
/// case kappa is |verts| - 1, or 0 for at most one vertex).
///
/// Candidate cuts are enumerated by increasing cardinality with early exit;
/// within one cardinality the scan is in lexicographic order, parallelized
/// with a position-ordered first-match reduction so parallel and sequential
/// runs agree.
pub(crate) fn kappa_cut(edges: &[u64], verts: u64) -> (usize, Option<u64>) {
    let nv = verts.count_ones() as usize;
    if nv <= 1 {
        return (0, None);
    }
    for c in 0..=nv - 2 {
        let candidates = k_subsets(verts, c);
        if let Some(&x) =
            exec::find_first(&candidates, |&x| !connected_after_removal(edges, verts, x))
        {
            return (c, Some(x));
        }
    }
    (nv - 1, None)
}

/// Like [`kappa_cut`] but only decides whether some cut smaller than `t`
/// exists, returning it.
pub(crate) fn cut_below(edges: &[u64], verts: u64, t: usize) -> Option<u64> {
    let nv = verts.count_ones() as usize;
    if nv <= 1 {
        return None;
    }
    for c in 0..t.min(nv - 1) {
        let candidates = k_subsets(verts, c);
        if let Some(&x) =
            exec::find_first(&candidates, |&x| !connected_after_removal(edges, verts, x))
        {
            return Some(x);
        }
    }
    None
}

/// Minimum size an induced t-connected subhypergraph can have: it needs at
/// least t+1 vertices, and (for t >= 1) at least one edge, forcing at least
/// t+r-1 vertices.
pub(crate) fn min_t_connected_order(t: usize, r: usize) -> usize {
    (t + 1).max(t + r - 1)
}

/// Search for an induced t-connected subhypergraph of the sub on `verts`
/// whose vertex set contains `require` (pass 0 for unconstrained), returning
/// its vertex set. Requires `t >= 1`.
///
/// The search peels to the t-core, computes an exact minimum cut, and on
/// failure recurses into cut-plus-component pieces: an induced subhypergraph
/// with connectivity above the cut size cannot meet two different sides, so
/// the pieces cover every candidate.
pub(crate) fn find_t_connected(
    edges: &[u64],
    verts: u64,
    r: usize,
    t: usize,
    require: u64,
) -> Option<u64> {
    debug_assert!(t >= 1);
    let min_order = min_t_connected_order(t, r) as u32;
    let mut stack = vec![verts];
    while let Some(piece) = stack.pop() {
        if require & !piece != 0 {
            continue;
        }
        let core = peel(edges, piece, t);
        if require & !core != 0 || core.count_ones() < min_order {
            continue;
        }
        let core_edges = edges_within(edges, core);
        let (kap, cut) = kappa_cut(&core_edges, core);
        if kap >= t {
            return Some(core);
        }
        if let Some(cut) = cut {
            let side_edges = edges_within(&core_edges, core & !cut);
            let mut sides = components_within(&side_edges, core & !cut);
            // explore the side with the smallest vertex first
            sides.reverse();
            for side in sides {
                stack.push(cut | side);
            }
        }
    }
    None
}

/// Maximum connectivity over all induced subhypergraphs of the sub on
/// `verts` (equivalently over all subhypergraphs, since adding edges never
/// lowers connectivity). `seed_best` must be a verified lower bound.
///
/// Branch-and-bound version of the decomposition: each piece is peeled at
/// one above the best value found so far, its exact connectivity taken, and
/// the cut-plus-component pieces explored recursively (in parallel when
/// enabled; the max-reduction is order-independent).
pub(crate) fn max_induced_kappa(edges: &[u64], verts: u64, r: usize, seed_best: usize) -> usize {
    let best = AtomicUsize::new(seed_best);
    explore(edges, verts, r, &best);
    best.load(Ordering::Relaxed)
}

fn explore(edges: &[u64], piece: u64, r: usize, best: &AtomicUsize) {
    let t = best.load(Ordering::Relaxed) + 1;
    let core = peel(edges, piece, t);
    if (core.count_ones() as usize) < min_t_connected_order(t, r) {
        return;
    }
    let core_edges = edges_within(edges, core);
    let (kap, cut) = kappa_cut(&core_edges, core);
    best.fetch_max(kap, Ordering::Relaxed);
    if let Some(cut) = cut {
        let side_edges = edges_within(&core_edges, core & !cut);
        let sides = components_within(&side_edges, core & !cut);
        if core.count_ones() >= 11 {
            // pieces this large carry enough work to fan out
            exec::for_each(sides, |side| explore(edges, cut | side, r, best));
        } else {
            for side in sides {
                explore(edges, cut | side, r, best);
            }
        }
    }
}
