//! Property tests for the set-algebra layer, the connectivity invariants,
//! and the serialization formats.

mod common;

use proptest::prelude::*;

use vkmax::bounds::binom;
use vkmax::connectivity::{
    is_connected, kappa, kappa_bar, kappa_bar_bruteforce, min_separator,
};
use vkmax::maximality::{is_vertex_k_maximal, saturate, SaturationOrder, Verdict};
use vkmax::{io, CrossingQuery, Hypergraph, VertexSet};

fn arb_hypergraph(
    ns: std::ops::RangeInclusive<usize>,
    rs: std::ops::RangeInclusive<usize>,
) -> impl Strategy<Value = Hypergraph> {
    (ns, rs).prop_flat_map(|(n, r)| {
        let universe = Hypergraph::complete(n, r).unwrap().edge_count();
        proptest::collection::vec(any::<bool>(), universe).prop_map(move |flags| {
            let edges: Vec<VertexSet> = Hypergraph::complete(n, r)
                .unwrap()
                .edges()
                .zip(flags)
                .filter_map(|(e, keep)| keep.then_some(e))
                .collect();
            Hypergraph::new(n, r, edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn complement_partitions_the_universe(h in arb_hypergraph(2..=8, 2..=4)) {
        let c = h.complement();
        let universe = binom(h.n() as i64, h.r() as i64);
        prop_assert_eq!(
            num::BigUint::from(h.edge_count() + c.edge_count()),
            universe
        );
        prop_assert_eq!(c.complement(), h);
    }

    #[test]
    fn add_then_remove_is_identity(h in arb_hypergraph(3..=8, 2..=3)) {
        if let Some(&e) = h.missing_edges().first() {
            let bigger = h.add_edge(e).unwrap();
            prop_assert_eq!(bigger.edge_count(), h.edge_count() + 1);
            prop_assert_eq!(bigger.remove_edge(e).unwrap(), h);
        }
    }

    #[test]
    fn crossing_classes_partition_edges(h in arb_hypergraph(3..=8, 2..=3), split in 1u64..) {
        let n = h.n();
        let a = VertexSet::from_labels((0..n).filter(|&v| split >> v & 1 == 1)).unwrap();
        let b = a.complement_in(n);
        prop_assume!(!a.is_empty() && !b.is_empty());
        let q = CrossingQuery::new(vec![a, b]).unwrap();
        let crossing = h.crossing_edges(&q, true).unwrap().len();
        let within_a = h.edges().filter(|e| e.is_subset_of(a)).count();
        let within_b = h.edges().filter(|e| e.is_subset_of(b)).count();
        prop_assert_eq!(within_a + within_b + crossing, h.edge_count());
        // with the union covering everything, exact and plain agree
        prop_assert_eq!(
            h.crossing_edges(&q, false).unwrap().len(),
            crossing
        );
    }

    #[test]
    fn hg_text_round_trips(h in arb_hypergraph(0..=8, 2..=4)) {
        let text = io::to_hg_string(&h);
        let back = io::parse_hg(&text, "prop").unwrap();
        prop_assert_eq!(&back, &h);
        prop_assert_eq!(io::to_hg_string(&back), text);
        let json = io::to_json_string(&h);
        prop_assert_eq!(io::from_json_str(&json).unwrap(), h);
    }

    #[test]
    fn reader_canonicalizes_any_edge_order(h in arb_hypergraph(2..=7, 2..=3), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let canonical = io::to_hg_string(&h);
        let mut lines: Vec<&str> = canonical.lines().collect();
        let header = lines.remove(0);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        lines.shuffle(&mut rng);
        let shuffled = std::iter::once(header)
            .chain(lines)
            .collect::<Vec<_>>()
            .join("\n");
        let back = io::parse_hg(&shuffled, "prop").unwrap();
        prop_assert_eq!(io::to_hg_string(&back), canonical);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kappa_is_monotone_and_bounded(h in arb_hypergraph(2..=7, 2..=3)) {
        let n = h.n();
        let k0 = kappa(&h);
        prop_assert!(k0 <= n.saturating_sub(1));
        if n >= h.r() {
            prop_assert!(k0 <= n - h.r() + 1);
        }
        if let Some(&e) = h.missing_edges().first() {
            let k1 = kappa(&h.add_edge(e).unwrap());
            prop_assert!(k0 <= k1);
        }
    }

    #[test]
    fn kappa_bar_decomposition_matches_bruteforce(h in arb_hypergraph(2..=8, 2..=3)) {
        let fast = kappa_bar(&h);
        let brute = kappa_bar_bruteforce(&h).unwrap();
        prop_assert_eq!(&fast, &brute);
        // the witness attains the value
        let (sub, _) = h.induced(fast.witness).unwrap();
        prop_assert_eq!(kappa(&sub), fast.value);
        // monotone under edge addition
        if let Some(&e) = h.missing_edges().first() {
            prop_assert!(kappa_bar(&h.add_edge(e).unwrap()).value >= fast.value);
        }
    }

    #[test]
    fn kappa_agrees_with_direct_enumeration(h in arb_hypergraph(2..=7, 2..=3)) {
        prop_assert_eq!(kappa(&h), common::kappa_by_definition(&h));
    }

    #[test]
    fn kappa_is_min_over_pairwise_separators(h in arb_hypergraph(2..=7, 2..=3)) {
        let n = h.n();
        let mut least: Option<usize> = None;
        for u in 0..n {
            for v in u + 1..n {
                let sep = min_separator(&h, u, v).unwrap();
                if sep.cut.is_some() {
                    least = Some(least.map_or(sep.kappa, |b| b.min(sep.kappa)));
                }
            }
        }
        prop_assert_eq!(least.unwrap_or(n.saturating_sub(1)), kappa(&h));
    }

    #[test]
    fn induced_kappa_never_exceeds_kappa_bar(h in arb_hypergraph(2..=7, 2..=3), mask in any::<u64>()) {
        let y = VertexSet::from_labels((0..h.n()).filter(|&v| mask >> v & 1 == 1)).unwrap();
        let (sub, _) = h.induced(y).unwrap();
        prop_assert!(kappa(&sub) <= kappa_bar(&h).value);
    }
}

/// Direct subset-enumeration check of kappa up to n = 10 on seeded
/// instances (the property tests above sweep smaller orders exhaustively).
#[test]
fn kappa_matches_direct_enumeration_up_to_ten_vertices() {
    for i in 0..30u64 {
        let n = 8 + (i as usize % 3); // 8..=10
        let r = [2, 3, 4][i as usize % 3];
        let density = 15 + (i as u32 * 11) % 70;
        let h = common::random_hypergraph(n, r, density, 400 + i);
        assert_eq!(
            kappa(&h),
            common::kappa_by_definition(&h),
            "instance {i}: n={n} r={r} density={density}"
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn saturation_yields_maximal_supersets(h in arb_hypergraph(4..=6, 2..=3), k in 2usize..=3) {
        let start = if kappa_bar(&h).value <= k {
            h
        } else {
            Hypergraph::empty(6, 3).unwrap()
        };
        let sat = saturate(&start, k, SaturationOrder::Lex).unwrap();
        for e in start.edges() {
            prop_assert!(sat.contains_edge(e));
        }
        let report = is_vertex_k_maximal(&sat, k).unwrap();
        prop_assert_eq!(report.verdict, Verdict::Maximal);
        prop_assert_eq!(&saturate(&sat, k, SaturationOrder::Lex).unwrap(), &sat);
        // size sandwich: at least the lower bound, exactly it when k < r
        let (n, r) = (sat.n(), sat.r());
        if n >= k + 1 {
            let lower = vkmax::bounds::lower_bound(n, k, r).unwrap();
            prop_assert!(num::BigUint::from(sat.edge_count()) >= lower);
            if k < r && n >= 2 * k {
                prop_assert_eq!(num::BigUint::from(sat.edge_count()), lower);
            }
        }
    }

    #[test]
    fn connectivity_conventions_hold(h in arb_hypergraph(2..=6, 2..=3)) {
        // is_connected matches component count
        prop_assert_eq!(is_connected(&h), h.components().len() <= 1);
        // components partition the vertex set
        let mut seen = VertexSet::EMPTY;
        for block in h.components() {
            prop_assert!(!block.intersects(seen));
            seen = seen | block;
        }
        prop_assert_eq!(seen, h.vertex_set());
    }
}
