//! Vertex-k-maximality: decision with per-edge certificates, greedy
//! saturation to a vertex-k-maximal superhypergraph, and the structural
//! checks used by the verification harness.
//!
//! A hypergraph is vertex-k-maximal when kappa-bar is at most k but adding
//! any missing r-set pushes it above k. Saturation scans the missing edges in
//! a fixed order and keeps an edge whenever kappa-bar stays at most k; since
//! kappa-bar is monotone under edge addition, a rejected edge stays
//! rejectable forever and the loop terminates with a maximal result.

use serde::Serialize;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bounds::binom_u128;
use crate::connectivity::{kappa, separation_triple};
use crate::error::{HgError, Result};
use crate::kernel;
use crate::set::{full_mask, VertexSet};
use crate::{exec, CrossingQuery, Hypergraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Maximal,
    NotAdmissible,
    NotMaximal,
}

/// For a maximal verdict: an induced witness showing that adding `edge`
/// creates a (k+1)-connected subhypergraph.
#[derive(Debug, Clone, Serialize)]
pub struct EdgeCertificate {
    pub edge: VertexSet,
    pub witness: VertexSet,
}

#[derive(Debug, Clone, Serialize)]
pub struct MaximalityReport {
    pub k: usize,
    pub kappa: usize,
    pub kappa_bar: usize,
    pub verdict: Verdict,
    /// One certificate per missing edge when the verdict is maximal.
    pub certificates: Vec<EdgeCertificate>,
    /// A missing edge whose addition keeps kappa-bar at most k, when the
    /// verdict is not-maximal (the lexicographically first such edge).
    pub counterexample: Option<VertexSet>,
}

/// Scan order for [`saturate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SaturationOrder {
    /// Canonical lexicographic order on the missing edges.
    Lex,
    /// A seeded, portable shuffle (ChaCha8) of the missing edges.
    SeededRandom { seed: u64 },
}

/// Decide vertex-k-maximality and produce certificates. Requires `k >= 2`.
///
/// Complete hypergraphs with kappa-bar at most k are maximal vacuously (no
/// missing edge exists).
pub fn is_vertex_k_maximal(h: &Hypergraph, k: usize) -> Result<MaximalityReport> {
    if k < 2 {
        return Err(HgError::ParameterRange(
            "vertex-k-maximality is defined here for k >= 2".into(),
        ));
    }
    let kap = kappa(h);
    let kbar = kernel::max_induced_kappa(h.edge_masks(), full_mask(h.n()), h.r(), 0);
    if kbar > k {
        return Ok(MaximalityReport {
            k,
            kappa: kap,
            kappa_bar: kbar,
            verdict: Verdict::NotAdmissible,
            certificates: Vec::new(),
            counterexample: None,
        });
    }
    let missing = h.missing_edges();
    let edges = h.edge_masks();
    // each missing edge is independent: look for a (k+1)-connected induced
    // sub of h + e; any such sub must contain e because kappa-bar(h) <= k.
    // Each search is coarse only at larger orders; below that the parallel
    // dispatch costs more than the work.
    let check = |e: &VertexSet| {
        let mut augmented: Vec<u64> = edges.to_vec();
        augmented.push(e.mask());
        kernel::find_t_connected(&augmented, full_mask(h.n()), h.r(), k + 1, e.mask())
    };
    let witnesses: Vec<Option<u64>> = if h.n() >= 10 {
        exec::map_ordered(&missing, check)
    } else {
        missing.iter().map(check).collect()
    };
    if let Some(pos) = witnesses.iter().position(|w| w.is_none()) {
        return Ok(MaximalityReport {
            k,
            kappa: kap,
            kappa_bar: kbar,
            verdict: Verdict::NotMaximal,
            certificates: Vec::new(),
            counterexample: Some(missing[pos]),
        });
    }
    let certificates = missing
        .iter()
        .zip(witnesses)
        .map(|(&edge, w)| EdgeCertificate {
            edge,
            witness: VertexSet(w.expect("checked above")),
        })
        .collect();
    Ok(MaximalityReport {
        k,
        kappa: kap,
        kappa_bar: kbar,
        verdict: Verdict::Maximal,
        certificates,
        counterexample: None,
    })
}

/// Grow `h` to a vertex-k-maximal hypergraph by scanning the missing edges in
/// the given order and keeping every edge that leaves kappa-bar at most k.
/// The input must itself have kappa-bar at most k.
pub fn saturate(h: &Hypergraph, k: usize, order: SaturationOrder) -> Result<Hypergraph> {
    if k < 2 {
        return Err(HgError::ParameterRange(
            "saturation is defined here for k >= 2".into(),
        ));
    }
    let verts = full_mask(h.n());
    let r = h.r();
    let kbar = kernel::max_induced_kappa(h.edge_masks(), verts, r, 0);
    if kbar > k {
        return Err(HgError::NotAdmissible { kappa_bar: kbar, k });
    }
    let mut candidates: Vec<u64> = h.missing_edges().iter().map(|e| e.mask()).collect();
    if let SaturationOrder::SeededRandom { seed } = order {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        candidates.shuffle(&mut rng);
    }
    let mut current: Vec<u64> = h.edge_masks().to_vec();
    let mut open: Vec<u64> = candidates;
    loop {
        let mut added_any = false;
        let mut next_open = Vec::with_capacity(open.len());
        for e in open {
            current.push(e);
            // admissible iff the addition gains no (k+1)-connected induced
            // sub; such a sub would have to contain e
            if kernel::find_t_connected(&current, verts, r, k + 1, e).is_some() {
                current.pop();
                next_open.push(e);
            } else {
                added_any = true;
            }
        }
        if !added_any {
            break;
        }
        // monotonicity makes rejections permanent, so the next pass merely
        // confirms the fixed point
        open = next_open;
    }
    // full recomputation guard behind the incremental checks
    let final_bar = kernel::max_induced_kappa(&current, verts, r, 0);
    assert!(
        final_bar <= k,
        "saturation invariant violated: kappa-bar {final_bar} > {k}"
    );
    Hypergraph::new(
        h.n(),
        r,
        current.into_iter().map(VertexSet).collect::<Vec<_>>(),
    )
}

/// Record produced by the structural verifiers below.
#[derive(Debug, Clone, Serialize)]
pub struct StructuralCheck {
    pub pass: bool,
    pub k: usize,
    pub kappa: usize,
    pub kappa_bar: usize,
    /// Crossing-edge count over (side1, s, side2) and the seven-binomial
    /// closed form it must equal (separation check only).
    pub crossing_count: Option<u64>,
    pub formula_value: Option<u64>,
    /// Complement crossing edges over the triple (must be empty).
    pub complement_crossing: Option<u64>,
}

/// For a vertex-k-maximal hypergraph with n >= k+r-1, both kappa and
/// kappa-bar must equal k exactly.
pub fn verify_kappa_equality(h: &Hypergraph, k: usize) -> Result<StructuralCheck> {
    let report = is_vertex_k_maximal(h, k)?;
    if report.verdict != Verdict::Maximal {
        return Err(HgError::Precondition(format!(
            "hypergraph is not vertex-{k}-maximal (verdict {:?})",
            report.verdict
        )));
    }
    if h.n() + 1 < k + h.r() {
        return Err(HgError::Precondition(format!(
            "needs n >= k+r-1 (n = {}, k = {k}, r = {})",
            h.n(),
            h.r()
        )));
    }
    Ok(StructuralCheck {
        pass: report.kappa == k && report.kappa_bar == k,
        k,
        kappa: report.kappa,
        kappa_bar: report.kappa_bar,
        crossing_count: None,
        formula_value: None,
        complement_crossing: None,
    })
}

/// For a vertex-k-maximal hypergraph with n >= k+r (so a cut exists), the
/// complement has no (side1, s, side2)-crossing edge, and the number of such
/// crossing edges in h equals
/// `C(n,r) - C(n1,r) - C(n2,r) + C(k,r) - C(n-k,r) + C(n1-k,r) + C(n2-k,r)`.
pub fn verify_separation_structure(h: &Hypergraph, k: usize) -> Result<StructuralCheck> {
    let report = is_vertex_k_maximal(h, k)?;
    if report.verdict != Verdict::Maximal {
        return Err(HgError::Precondition(format!(
            "hypergraph is not vertex-{k}-maximal (verdict {:?})",
            report.verdict
        )));
    }
    if h.n() < k + h.r() {
        return Err(HgError::Precondition(format!(
            "needs n >= k+r for a cut to exist (n = {}, k = {k}, r = {})",
            h.n(),
            h.r()
        )));
    }
    let triple = separation_triple(h)?;
    let q = CrossingQuery::new(vec![triple.side1, triple.s, triple.side2])?;
    let crossing = h.crossing_edges(&q, false)?.len() as u64;
    let complement_crossing = h.complement().crossing_edges(&q, false)?.len() as u64;
    let (n, r) = (h.n(), h.r());
    let (n1, n2) = (triple.n1, triple.n2);
    let formula = binom_u128(n, r) as i128 - binom_u128(n1, r) as i128 - binom_u128(n2, r) as i128
        + binom_u128(k, r) as i128
        - binom_u128(n - k, r) as i128
        + binom_u128(n1.saturating_sub(k), r) as i128
        + binom_u128(n2.saturating_sub(k), r) as i128;
    let formula_value = u64::try_from(formula.max(0)).unwrap_or(0);
    let pass = complement_crossing == 0 && crossing == formula_value && formula >= 0;
    Ok(StructuralCheck {
        pass,
        k,
        kappa: report.kappa,
        kappa_bar: report.kappa_bar,
        crossing_count: Some(crossing),
        formula_value: Some(formula_value),
        complement_crossing: Some(complement_crossing),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::binom_usize;
    use crate::connectivity::kappa_bar;

    #[test]
    fn lower_construction_is_maximal() {
        for (n, k, r) in [(6usize, 2usize, 3usize), (7, 2, 3), (8, 3, 3), (7, 2, 4)] {
            let h = Hypergraph::h_l(n, k, r).unwrap();
            let report = is_vertex_k_maximal(&h, k).unwrap();
            assert_eq!(report.verdict, Verdict::Maximal, "h_l({n};{k},{r})");
            assert_eq!(report.certificates.len(), h.complement().edge_count());
        }
    }

    #[test]
    fn upper_construction_is_maximal() {
        for (n, k, r) in [(8usize, 2usize, 3usize), (9, 2, 3), (8, 2, 2)] {
            let h = Hypergraph::h_u(n, k, r).unwrap();
            let report = is_vertex_k_maximal(&h, k).unwrap();
            assert_eq!(report.verdict, Verdict::Maximal, "h_u({n};{k},{r})");
        }
    }

    #[test]
    fn complete_maximal_iff_small() {
        let k = 2;
        for n in 2..=7usize {
            let r = 3;
            let h = Hypergraph::complete(n, r).unwrap();
            let report = is_vertex_k_maximal(&h, k).unwrap();
            let expect_maximal = n <= k + r - 1;
            assert_eq!(
                report.verdict == Verdict::Maximal,
                expect_maximal,
                "complete({n},{r}) vs k={k}"
            );
            if !expect_maximal {
                assert_eq!(report.verdict, Verdict::NotAdmissible);
            }
        }
    }

    #[test]
    fn not_maximal_has_counterexample() {
        // removing one non-critical edge from h_l leaves a non-maximal graph
        let h = Hypergraph::h_l(6, 2, 3).unwrap();
        let e = h.edges().next().unwrap();
        let smaller = h.remove_edge(e).unwrap();
        let report = is_vertex_k_maximal(&smaller, 2).unwrap();
        assert_eq!(report.verdict, Verdict::NotMaximal);
        let ce = report.counterexample.unwrap();
        // re-adding the counterexample edge keeps kappa-bar at most 2
        let back = smaller.add_edge(ce).unwrap();
        assert!(kappa_bar(&back).value <= 2);
    }

    #[test]
    fn certificates_reverify() {
        let h = Hypergraph::h_u(8, 2, 3).unwrap();
        let report = is_vertex_k_maximal(&h, 2).unwrap();
        assert_eq!(report.verdict, Verdict::Maximal);
        for cert in &report.certificates {
            let augmented = h.add_edge(cert.edge).unwrap();
            let (sub, _) = augmented.induced(cert.witness).unwrap();
            assert!(kappa(&sub) >= 3, "certificate for {}", cert.edge);
        }
    }

    #[test]
    fn saturate_from_edgeless() {
        let empty = Hypergraph::empty(6, 3).unwrap();
        let sat = saturate(&empty, 2, SaturationOrder::Lex).unwrap();
        assert_eq!(sat.edge_count(), 16); // C(6,3) - C(4,3)
        let report = is_vertex_k_maximal(&sat, 2).unwrap();
        assert_eq!(report.verdict, Verdict::Maximal);
    }

    #[test]
    fn saturate_fixed_point_and_idempotence() {
        let hl = Hypergraph::h_l(7, 2, 3).unwrap();
        assert_eq!(saturate(&hl, 2, SaturationOrder::Lex).unwrap(), hl);

        let start = Hypergraph::empty(7, 2).unwrap();
        let order = SaturationOrder::SeededRandom { seed: 11 };
        let once = saturate(&start, 3, order).unwrap();
        assert!(once.edge_count() >= binom_usize(7, 2) - binom_usize(4, 2)); // >= 15
        let twice = saturate(&once, 3, order).unwrap();
        assert_eq!(once, twice);
        // the input survives inside the output
        for e in start.edges() {
            assert!(once.contains_edge(e));
        }
    }

    #[test]
    fn saturate_rejects_inadmissible() {
        let h = Hypergraph::complete(6, 3).unwrap(); // kappa-bar = 4
        assert!(matches!(
            saturate(&h, 2, SaturationOrder::Lex),
            Err(HgError::NotAdmissible { kappa_bar: 4, k: 2 })
        ));
        assert!(saturate(&h, 1, SaturationOrder::Lex).is_err());
    }

    #[test]
    fn structural_checks_on_lower_construction() {
        let h = Hypergraph::h_l(7, 2, 3).unwrap();
        let eq = verify_kappa_equality(&h, 2).unwrap();
        assert!(eq.pass);
        assert_eq!((eq.kappa, eq.kappa_bar), (2, 2));

        let sep = verify_separation_structure(&h, 2).unwrap();
        assert!(sep.pass);
        assert_eq!(sep.crossing_count, Some(8));
        assert_eq!(sep.formula_value, Some(8)); // 35-1-20+0-10+0+4
        assert_eq!(sep.complement_crossing, Some(0));
    }

    #[test]
    fn structural_checks_on_upper_construction_and_saturations() {
        let h = Hypergraph::h_u(8, 2, 3).unwrap();
        let sep = verify_separation_structure(&h, 2).unwrap();
        assert!(sep.pass);

        let sat = saturate(
            &Hypergraph::empty(9, 3).unwrap(),
            2,
            SaturationOrder::SeededRandom { seed: 5 },
        )
        .unwrap();
        assert!(verify_kappa_equality(&sat, 2).unwrap().pass);
        assert!(verify_separation_structure(&sat, 2).unwrap().pass);
    }

    #[test]
    fn precondition_violations_are_reported() {
        let h = Hypergraph::empty(5, 3).unwrap(); // far from maximal
        assert!(matches!(
            verify_kappa_equality(&h, 2),
            Err(HgError::Precondition(_))
        ));
        // maximal but complete: no cut to separate
        let tiny = Hypergraph::complete(4, 3).unwrap();
        assert!(matches!(
            verify_separation_structure(&tiny, 2),
            Err(HgError::Precondition(_))
        ));
    }
}
