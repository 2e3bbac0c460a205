//! Thin switch between the rayon data-parallel backend (feature `parallel`,
//! on by default) and a sequential fallback. Every reduction routed through
//! here is order-independent (min/max under a total order, sums, first match
//! in slice position order), so both backends return identical results.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::set::lex_cmp_masks;

/// Below this many items the sequential path is used even when the parallel
/// feature is enabled; fine-grained scans are cheaper than task dispatch,
/// which only pays off for coarse work items.
const PAR_CUTOFF: usize = 2048;

/// First item (in slice order) satisfying the predicate.
#[cfg(feature = "parallel")]
pub(crate) fn find_first<T: Sync, F: Fn(&T) -> bool + Sync + Send>(items: &[T], pred: F) -> Option<&T> {
    if items.len() < PAR_CUTOFF {
        items.iter().find(|x| pred(x))
    } else {
        items.par_iter().find_first(|x| pred(x))
    }
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn find_first<T: Sync, F: Fn(&T) -> bool + Sync + Send>(items: &[T], pred: F) -> Option<&T> {
    items.iter().find(|x| pred(x))
}

/// Highest-scoring mask with score strictly above `entering`; ties broken
/// toward the lexicographically smallest mask.
#[cfg(feature = "parallel")]
pub(crate) fn best_mask_above<F: Fn(u64) -> usize + Sync + Send>(
    items: &[u64],
    entering: usize,
    score: F,
) -> Option<(usize, u64)> {
    // scoring an item is a full connectivity computation, coarse enough to
    // fan out at moderate counts
    if items.len() < 512 {
        return best_mask_above_seq(items, entering, score);
    }
    items
        .par_iter()
        .filter_map(|&m| {
            let s = score(m);
            (s > entering).then_some((s, m))
        })
        .reduce_with(pick_better)
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn best_mask_above<F: Fn(u64) -> usize + Sync + Send>(
    items: &[u64],
    entering: usize,
    score: F,
) -> Option<(usize, u64)> {
    best_mask_above_seq(items, entering, score)
}

fn best_mask_above_seq<F: Fn(u64) -> usize>(
    items: &[u64],
    entering: usize,
    score: F,
) -> Option<(usize, u64)> {
    items
        .iter()
        .filter_map(|&m| {
            let s = score(m);
            (s > entering).then_some((s, m))
        })
        .fold(None, |acc, cand| match acc {
            None => Some(cand),
            Some(best) => Some(pick_better(best, cand)),
        })
}

fn pick_better(a: (usize, u64), b: (usize, u64)) -> (usize, u64) {
    match a.0.cmp(&b.0) {
        std::cmp::Ordering::Greater => a,
        std::cmp::Ordering::Less => b,
        std::cmp::Ordering::Equal => {
            if lex_cmp_masks(a.1, b.1) == std::cmp::Ordering::Less {
                a
            } else {
                b
            }
        }
    }
}

/// Ordered map over a slice.
#[cfg(feature = "parallel")]
pub(crate) fn map_ordered<T: Sync, R: Send, F: Fn(&T) -> R + Sync + Send>(items: &[T], f: F) -> Vec<R> {
    if items.len() < 4 {
        items.iter().map(f).collect()
    } else {
        items.par_iter().map(f).collect()
    }
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_ordered<T: Sync, R: Send, F: Fn(&T) -> R + Sync + Send>(items: &[T], f: F) -> Vec<R> {
    items.iter().map(f).collect()
}

/// Run two closures, potentially in parallel.
#[cfg(feature = "parallel")]
pub(crate) fn join<A, B, RA, RB>(a: A, b: B) -> (RA, RB)
where
    A: FnOnce() -> RA + Send,
    B: FnOnce() -> RB + Send,
    RA: Send,
    RB: Send,
{
    rayon::join(a, b)
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn join<A, B, RA, RB>(a: A, b: B) -> (RA, RB)
where
    A: FnOnce() -> RA + Send,
    B: FnOnce() -> RB + Send,
    RA: Send,
    RB: Send,
{
    (a(), b())
}

/// Consume a list of work items, applying `f` to each.
#[cfg(feature = "parallel")]
pub(crate) fn for_each<T: Send, F: Fn(T) + Sync + Send>(items: Vec<T>, f: F) {
    if items.len() < 2 {
        items.into_iter().for_each(f);
    } else {
        items.into_par_iter().for_each(f);
    }
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn for_each<T: Send, F: Fn(T) + Sync + Send>(items: Vec<T>, f: F) {
    items.into_iter().for_each(f);
}
