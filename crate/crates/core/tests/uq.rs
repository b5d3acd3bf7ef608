use fusion_torsion::uq::{
    build_pi, build_u, fusion_crosscheck, intertwiner_space, tensor_rep, uq_verify, Branch, Mat, RepMatrices, Twist,
    DEFAULT_TOL,
};
use proptest::prelude::*;

const QS: [f64; 3] = [-0.5, -2.0 / 3.0, -0.75];
const BRANCHES: [Branch; 2] = [Branch::Positive, Branch::Negative];

fn max_abs(m: &Mat) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

fn intertwines(t: &Mat, a: &RepMatrices, b: &RepMatrices) -> f64 {
    let scale = max_abs(t).max(1e-300);
    [(&a.e, &b.e), (&a.f, &b.f), (&a.k, &b.k)]
        .iter()
        .map(|(x, y)| max_abs(&(t * *x - *y * t)) / scale)
        .fold(0.0, f64::max)
}

#[test]
fn schur_lemma_for_the_unitary_family() {
    for q in QS {
        let reps: Vec<(bool, usize, RepMatrices)> = (0..=6)
            .flat_map(|n| [false, true].map(|minus| (minus, n, build_u(minus, n, q, Branch::Positive).unwrap())))
            .collect();
        for (s, n, a) in &reps {
            for (t, m, b) in &reps {
                let space = intertwiner_space(a, b, DEFAULT_TOL).unwrap();
                let want = usize::from(s == t && n == m);
                assert_eq!(space.dim, want, "q={q}: Hom(u{s}{n}, u{t}{m})");
                for basis in &space.basis {
                    assert!(intertwines(basis, a, b) < 1e-9);
                }
            }
        }
    }
}

#[test]
fn fusion_rules_match_numerics_up_to_four() {
    for q in QS {
        let report = fusion_crosscheck(4, q, Branch::Positive).unwrap();
        assert_eq!(report.entries.len(), 100);
        assert!(report.entries.iter().all(|e| e.complete), "q={q}");
        assert!(report.mismatches.is_empty(), "q={q}: {:?}", report.mismatches);
    }
}

#[test]
fn results_do_not_depend_on_the_branch_of_t() {
    for q in QS {
        let [a, b] = BRANCHES.map(|br| fusion_crosscheck(2, q, br).unwrap());
        let summary = |r: &fusion_torsion::uq::FusionCrosscheck| {
            r.entries.iter().map(|e| (e.u.id().to_string(), e.v.id().to_string(), e.numeric.clone())).collect::<Vec<_>>()
        };
        assert_eq!(summary(&a), summary(&b));
        for br in BRANCHES {
            assert!(uq_verify(q, 4, 2, br).unwrap().pass, "q={q} {br:?}");
        }
    }
}

#[test]
fn tensor_products_of_highest_weight_modules_split() {
    // π_1 ⊗ π_1 ≅ π_0 ⊕ π_2 for the trivial twist, at generic q
    let q = -0.5;
    let p1 = build_pi(Twist::One, 1, q, Branch::Positive).unwrap();
    let sq = tensor_rep(&p1, &p1).unwrap();
    for (n, want) in [(0, 1), (1, 0), (2, 1), (3, 0)] {
        let pn = build_pi(Twist::One, n, q, Branch::Positive).unwrap();
        assert_eq!(intertwiner_space(&pn, &sq, DEFAULT_TOL).unwrap().dim, want, "π{n}");
    }
    assert_eq!(intertwiner_space(&sq, &sq, DEFAULT_TOL).unwrap().dim, 2);
}

#[test]
fn non_negative_q_is_rejected_for_the_unitary_family() {
    assert!(build_u(false, 1, 0.5, Branch::Positive).is_err());
    assert!(build_u(false, 1, -1.0, Branch::Positive).is_err());
    assert!(uq_verify(0.3, 2, 1, Branch::Positive).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn relations_hold_across_q(q in -0.95f64..-0.05, n in 0usize..7, minus in any::<bool>()) {
        let u = build_u(minus, n, q, Branch::Positive).unwrap();
        prop_assert!(u.relations().max() <= 1e-9, "residual {}", u.relations().max());
        let pi = build_pi(Twist::I, n, q, Branch::Negative).unwrap();
        prop_assert!(pi.relations().max() <= 1e-9);
    }
}
