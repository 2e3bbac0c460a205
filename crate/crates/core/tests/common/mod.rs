//! Shared test oracles, kept independent of the search paths they check:
//! seeded random instances, connectivity straight from the definition, and
//! unpruned enumerations of subhypergraphs and of the maximal family.
//!
//! Each integration-test binary compiles this module separately and uses a
//! different subset of it.
#![allow(dead_code)]

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use vkmax::connectivity::{is_connected, kappa, kappa_bar_bruteforce_with_ceiling};
use vkmax::{Hypergraph, VertexSet};

/// Seeded r-uniform hypergraph where each possible edge appears with the
/// given percent probability.
pub fn random_hypergraph(n: usize, r: usize, density_percent: u32, seed: u64) -> Hypergraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<VertexSet> = Hypergraph::complete(n, r)
        .unwrap()
        .edges()
        .filter(|_| rng.random_range(0..100u32) < density_percent)
        .collect();
    Hypergraph::new(n, r, edges).unwrap()
}

fn subset(labels: u64, n: usize) -> VertexSet {
    VertexSet::from_labels((0..n).filter(|&v| labels >> v & 1 == 1)).unwrap()
}

/// Connectivity straight from the definition: minimum |X| over all subsets
/// whose deletion disconnects, else n - 1 (0 for at most one vertex).
pub fn kappa_by_definition(h: &Hypergraph) -> usize {
    let n = h.n();
    if n <= 1 {
        return 0;
    }
    let mut best: Option<usize> = None;
    for mask in 0..(1u64 << n) {
        let x = subset(mask, n);
        if x.len() > n - 2 {
            continue; // fewer than two survivors cannot be disconnected
        }
        let (rest, _) = h.delete_vertices(x).unwrap();
        if !is_connected(&rest) {
            best = Some(best.map_or(x.len(), |b| b.min(x.len())));
        }
    }
    best.unwrap_or(n - 1)
}

/// Maximum connectivity over ALL subhypergraphs: every vertex subset paired
/// with every subset of the edges it contains.
pub fn kappa_bar_over_all_subhypergraphs(h: &Hypergraph) -> usize {
    let n = h.n();
    let mut best = 0;
    for vmask in 0..(1u64 << n) {
        let (induced, _) = h.induced(subset(vmask, n)).unwrap();
        let edges: Vec<VertexSet> = induced.edges().collect();
        assert!(edges.len() <= 16, "oracle instances must stay sparse");
        for emask in 0..(1u32 << edges.len()) {
            let chosen: Vec<VertexSet> = edges
                .iter()
                .enumerate()
                .filter(|(i, _)| emask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let sub = Hypergraph::new(induced.n(), induced.r(), chosen).unwrap();
            best = best.max(kappa(&sub));
        }
    }
    best
}

/// Unpruned enumeration of the vertex-k-maximal family: every edge subset is
/// tested for admissibility by the subset-scan kappa-bar and for maximality
/// by re-testing every possible addition.
pub fn maximal_family_by_definition(n: usize, k: usize, r: usize) -> Vec<Hypergraph> {
    let universe: Vec<VertexSet> = Hypergraph::complete(n, r).unwrap().edges().collect();
    let m = universe.len();
    assert!(m <= 15, "unpruned oracle is limited to 2^15 subsets");
    let kappa_bar = |h: &Hypergraph| kappa_bar_bruteforce_with_ceiling(h, n).unwrap().value;
    let mut out = Vec::new();
    for mask in 0..(1u32 << m) {
        let edges: Vec<VertexSet> = universe
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let h = Hypergraph::new(n, r, edges).unwrap();
        if kappa_bar(&h) > k {
            continue;
        }
        let maximal = h
            .missing_edges()
            .iter()
            .all(|&e| kappa_bar(&h.add_edge(e).unwrap()) > k);
        if maximal {
            out.push(h);
        }
    }
    out
}
