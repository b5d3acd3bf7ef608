use std::collections::BTreeSet;
use std::sync::{Arc, OnceLock};

use fusion_torsion::component::{
    connectedness_probe, factor_restriction, identity_component_report, restriction_hom_dim, s_part, ComponentBounds,
    ComponentVerdict, Connectedness,
};
use fusion_torsion::fusion::{Budget, FusionProvider, IrrLabel, VirtualElement};
use fusion_torsion::providers::{parse_provider, FreeProduct, UqSu11};
use fusion_torsion::torsion::all_subrings;
use num_bigint::BigInt;
use proptest::prelude::*;

fn free() -> &'static (Arc<dyn FusionProvider>, Vec<IrrLabel>) {
    static RING: OnceLock<(Arc<dyn FusionProvider>, Vec<IrrLabel>)> = OnceLock::new();
    RING.get_or_init(|| {
        let r = parse_provider("free(so3,word:Z2)").unwrap();
        let ls = r.enumerate(200);
        (r, ls)
    })
}

fn restrict(u: &IrrLabel) -> VirtualElement {
    let fp = free().0.as_any().downcast_ref::<FreeProduct>().unwrap();
    factor_restriction(fp, u, 0).unwrap()
}

fn uqsu11_torsion() -> BTreeSet<IrrLabel> {
    BTreeSet::from([UqSu11::label(false, 0), UqSu11::iota_minus()])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn factor_restriction_is_multiplicative(i in 0usize..200, j in 0usize..200) {
        let (r, ls) = free();
        let (u, v) = (&ls[i], &ls[j]);
        let so3 = r.as_any().downcast_ref::<FreeProduct>().unwrap().factor(0).clone();
        let mut lhs = VirtualElement::zero();
        for (w, n) in r.decompose(u, v).unwrap().iter() {
            lhs = lhs.add(&restrict(w).scaled(&BigInt::from(n.clone())));
        }
        let rhs = restrict(u).multiply(&restrict(v), so3.as_ref()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn restriction_preserves_dimension(i in 0usize..200) {
        let u = &free().1[i];
        prop_assert_eq!(restrict(u).dim(), BigInt::from(u.dim().clone()));
    }

    #[test]
    fn hom_dims_are_symmetric(a in 0u32..8, b in 0u32..8, s in any::<bool>(), t in any::<bool>()) {
        let (u, v) = (UqSu11::label(s, a), UqSu11::label(t, b));
        let set = uqsu11_torsion();
        prop_assert_eq!(
            restriction_hom_dim(&UqSu11, &set, &u, &v).unwrap(),
            restriction_hom_dim(&UqSu11, &set, &v, &u).unwrap()
        );
    }

    #[test]
    fn s_part_is_contained_in_both(a in 0u32..8, b in 0u32..8, s in any::<bool>(), t in any::<bool>()) {
        let d = UqSu11.decompose(&UqSu11::label(s, a), &UqSu11::label(t, b)).unwrap();
        let set = uqsu11_torsion();
        let part = s_part(&UqSu11, &d, &set).unwrap();
        prop_assert!(d.contains_multiset(&part));
        prop_assert!(part.labels().all(|w| set.contains(w)));
    }
}

#[test]
fn torsion_letters_restrict_trivially() {
    let (r, ls) = free();
    let a = r.parse_label("a").unwrap();
    assert_eq!(restrict(&a), VirtualElement::from_label(free_unit_in_so3()));
    // any word in the torsion letter alone restricts to a multiple of the unit
    for u in ls.iter().filter(|u| !u.id().contains('v')) {
        assert!(restrict(u).support().all(|l| l.id() == "v0"), "{}", u.id());
    }
}

fn free_unit_in_so3() -> IrrLabel {
    free().0.as_any().downcast_ref::<FreeProduct>().unwrap().factor(0).unit()
}

#[test]
fn hom_dims_over_the_whole_ring_are_frobenius() {
    // with S = Irr(G) the restriction is to the trivial subgroup: Hom = dim u · dim v
    let r = parse_provider("chars:S4").unwrap();
    let all: BTreeSet<IrrLabel> = r.all_labels().unwrap().into_iter().collect();
    for u in &all {
        for v in &all {
            assert_eq!(restriction_hom_dim(r.as_ref(), &all, u, v).unwrap(), u.dim() * v.dim());
        }
    }
    // with S = {1} it is the multiplicity of v in u: Schur
    let unit = BTreeSet::from([r.unit()]);
    for u in &all {
        for v in &all {
            let want = u32::from(u == v);
            assert_eq!(restriction_hom_dim(r.as_ref(), &unit, u, v).unwrap(), want.into());
        }
    }
    assert_eq!(all_subrings(r.as_ref(), 8).unwrap().len(), 4);
}

#[test]
fn verdicts_on_small_rings() {
    let bounds = ComponentBounds::default();
    let budget = Budget::default();
    let suq2 = parse_provider("suq2").unwrap();
    let rep = identity_component_report(suq2.as_ref(), &bounds, &budget).unwrap();
    assert_eq!(rep.verdict, ComponentVerdict::NormalWithFiniteComponentGroup);
    assert_eq!(rep.component_group_order, Some(1u32.into()));

    let finite = parse_provider("chars:S3").unwrap();
    let rep = identity_component_report(finite.as_ref(), &bounds, &budget).unwrap();
    assert!(rep.is_normal());
    assert_eq!(rep.component_group_order, Some(6u32.into()));
}

#[test]
fn connectedness_of_free_factors() {
    let budget = Budget::default();
    let so3 = parse_provider("so3").unwrap();
    assert_eq!(connectedness_probe(so3.as_ref(), 20, &budget).unwrap().outcome, Connectedness::NoTorsionFound);
    let z2 = parse_provider("word:Z2").unwrap();
    assert!(matches!(
        connectedness_probe(z2.as_ref(), 20, &budget).unwrap().outcome,
        Connectedness::TorsionFound { .. }
    ));
}
