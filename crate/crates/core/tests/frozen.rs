//! Small values worked out by hand, frozen against regressions.

use fusion_torsion::fusion::Order;
use fusion_torsion::providers::parse_provider;

/// `u ⊗ v` must be exactly `expected`, each listed once.
fn assert_product(spec: &str, u: &str, v: &str, expected: &[&str]) {
    let r = parse_provider(spec).unwrap();
    let d = r.decompose(&r.parse_label(u).unwrap(), &r.parse_label(v).unwrap()).unwrap();
    let mut got: Vec<String> = d.iter().map(|(l, n)| format!("{}×{n}", l.id())).collect();
    got.sort();
    let mut want: Vec<String> = expected.iter().map(|id| format!("{id}×1")).collect();
    want.sort();
    assert_eq!(got, want, "{spec}: {u} ⊗ {v}");
}

#[test]
fn clebsch_gordan() {
    assert_product("suq2", "u2", "u3", &["u1", "u3", "u5"]);
    assert_product("suq2", "u1", "u1", &["u0", "u2"]);
    assert_product("so3", "v1", "v2", &["v1", "v2", "v3"]);
    assert_product("so3", "v0", "v4", &["v4"]);
}

#[test]
fn uqsu11_signs_follow_the_grading() {
    // grades: (+,1) ↦ 1, so u+1 ⊗ u+1 has grade 2 = (−, even)
    assert_product("uqsu11", "u+1", "u+1", &["iota-1", "u-2"]);
    // grade 1 + 3 = 0 = (+, even)
    assert_product("uqsu11", "u+1", "u-1", &["iota", "u+2"]);
    assert_product("uqsu11", "iota-1", "iota-1", &["iota"]);
    // grade 2 + 1 = 3 = (−, odd)
    assert_product("uqsu11", "iota-1", "u+1", &["u-1"]);
}

#[test]
fn character_rings() {
    assert_product("chars:S3", "V", "V", &["1", "sgn", "V"]);
    assert_product("chars:S3", "sgn", "V", &["V"]);
    assert_product("chars:A4", "w", "w", &["w2"]);
}

#[test]
fn free_unitary_words() {
    // u ⊗ ū = 1 + uū for the free unitary quantum group, dims 4 = 1 + 3
    assert_product("au", "u", "ū", &["1", "uū"]);
    // ūu ⊗ ū = ūuū + ū, so dim ūuū = 3·2 − 2
    assert_product("au", "ūu", "ū", &["ūuū", "ū"]);
    let r = parse_provider("au").unwrap();
    assert_eq!(r.parse_label("ūuū").unwrap().dim(), &4u32.into());
}

#[test]
fn word_group_orders() {
    let r = parse_provider("word:Z2*Z2").unwrap();
    let order = |w: &str| r.order_oracle(&r.parse_label(w).unwrap()).unwrap();
    assert_eq!(order("aba"), Some(Order::Finite(2)));
    assert_eq!(order("ab"), Some(Order::Infinite));
    let r = parse_provider("word:Z3*Z").unwrap();
    assert_eq!(r.order_oracle(&r.parse_label("b^-1ab").unwrap()).unwrap(), Some(Order::Finite(3)));
}
