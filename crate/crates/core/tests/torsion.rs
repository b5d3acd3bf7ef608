use std::collections::BTreeSet;

use fusion_torsion::fusion::{Budget, FusionProvider, IrrLabel};
use fusion_torsion::providers::parse_provider;
use fusion_torsion::torsion::{
    central_closure, generated_subring, is_torsion, normal_forcing_closure, normality_consistency, torsion_subcategory,
    TorsionVerdict,
};
use proptest::prelude::*;

fn mul(r: &dyn FusionProvider, a: &IrrLabel, b: &IrrLabel) -> IrrLabel {
    r.decompose(a, b).unwrap().as_irreducible().unwrap().clone()
}

/// Subgroup generated by `gens`: repeated right multiplication until stable.
fn naive_subgroup(r: &dyn FusionProvider, gens: &[IrrLabel]) -> BTreeSet<IrrLabel> {
    let mut set = BTreeSet::from([r.unit()]);
    loop {
        let next: BTreeSet<IrrLabel> =
            set.iter().flat_map(|x| gens.iter().map(move |g| (x, g))).map(|(x, g)| mul(r, x, g)).chain(set.clone()).collect();
        if next == set {
            return set;
        }
        set = next;
    }
}

/// Normal closure: the subgroup generated by every conjugate of `gens`.
fn naive_normal_closure(r: &dyn FusionProvider, gens: &[IrrLabel]) -> BTreeSet<IrrLabel> {
    let all = r.all_labels().unwrap();
    let conjugates: Vec<IrrLabel> =
        all.iter().flat_map(|x| gens.iter().map(move |g| mul(r, &mul(r, &r.conj(x).unwrap(), g), x))).collect();
    naive_subgroup(r, &conjugates)
}

const GROUPS: [&str; 4] = ["group:S3", "group:D4", "group:Z6", "prod(group:S3,group:Z2)"];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closures_match_subgroup_generation(g in 0..GROUPS.len(), picks in prop::collection::vec(0usize..12, 1..3)) {
        let r = parse_provider(GROUPS[g]).unwrap();
        let all = r.all_labels().unwrap();
        let gens: Vec<IrrLabel> = picks.iter().map(|i| all[i % all.len()].clone()).collect();
        let budget = Budget::default();

        let generated = generated_subring(r.as_ref(), &gens, &budget).unwrap();
        prop_assert!(generated.is_saturated());
        prop_assert_eq!(&generated.labels, &naive_subgroup(r.as_ref(), &gens));

        let normal = naive_normal_closure(r.as_ref(), &gens);
        // in a group ring every conjugate is irreducible, so both closures are the normal closure
        prop_assert_eq!(&normal_forcing_closure(r.as_ref(), &gens, &budget).unwrap().labels, &normal);
        prop_assert_eq!(&central_closure(r.as_ref(), &gens, &budget).unwrap().labels, &normal);
        prop_assert!(normality_consistency(r.as_ref(), &normal, 64).unwrap().is_empty());
    }
}

#[test]
fn every_element_of_a_finite_group_is_torsion() {
    for spec in GROUPS {
        let r = parse_provider(spec).unwrap();
        let report = torsion_subcategory(r.as_ref(), &Budget::default()).unwrap();
        assert_eq!(report.torsion_set.len(), r.all_labels().unwrap().len(), "{spec}");
        assert!(report.tensorial && report.unknowns.is_empty());
    }
}

#[test]
fn torsion_verdicts_on_infinite_rings() {
    let budget = Budget::default();
    let suq2 = parse_provider("suq2").unwrap();
    assert!(matches!(is_torsion(suq2.as_ref(), &suq2.parse_label("u0").unwrap(), &budget).unwrap(), TorsionVerdict::Torsion { .. }));
    assert!(matches!(is_torsion(suq2.as_ref(), &suq2.parse_label("u1").unwrap(), &budget).unwrap(), TorsionVerdict::Unknown { .. }));

    let w = parse_provider("word:Z2*Z").unwrap();
    assert!(matches!(is_torsion(w.as_ref(), &w.parse_label("b").unwrap(), &budget).unwrap(), TorsionVerdict::NonTorsion { .. }));
    let conj = w.parse_label("bab^-1").unwrap();
    assert!(matches!(is_torsion(w.as_ref(), &conj, &budget).unwrap(), TorsionVerdict::Torsion { .. }));

    // torsion in SO(3)-by-Z2 free product: only the unit and the Z2 letter
    let f = parse_provider("free(so3,word:Z2)").unwrap();
    let report = torsion_subcategory(f.as_ref(), &Budget { max_irreducibles: 20, ..Budget::default() }).unwrap();
    let ids: Vec<String> = report.torsion_set.ids();
    assert_eq!(ids, ["1", "a"]);
}
