use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fusion-torsion")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn fixture(name: &str) -> String {
    format!("json:{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn uqsu11_component_is_normal() {
    let o = run(&["component", "--ring", "uqsu11"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("NormalWithFiniteComponentGroup"), "{}", stdout(&o));
}

#[test]
fn au_chain_increases_to_four() {
    let o = run(&["chain", "--ring", "au", "--dmax", "4", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["report"]["strictly_increasing_up_to"], 4);
}

#[test]
fn bad_table_exits_with_findings() {
    let o = run(&["axioms", "--ring", &fixture("bad.json")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("violation"), "{}", stdout(&o));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["decompose", "--ring", "free(so3,", "v1", "v1"][..],
        &["decompose", "--ring", "so3", "v1", "w7"],
        &["frobnicate"],
        &["torsion", "--ring", "suq2", "--budget", "max_rounds=zero"],
        &["uq", "verify", "--q", "0.5"],
        &["nsequence", "--ring", "suq2"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn json_reports_are_deterministic_and_round_trip() {
    let cases: [&[&str]; 6] = [
        &["--json", "--ring", "so3", "decompose", "v1", "v2"],
        &["--json", "--ring", "word:Z2*Z", "nsequence"],
        &["--json", "--ring", "uqsu11", "torsion"],
        &["--json", "--ring", "free(so3,word:Z2)", "component"],
        &["--json", "--ring", "chars:S4", "dimideal"],
        &["--json", "--ring", "prod(suq2,word:Z2)", "axioms", "--labels", "12", "--triples", "40"],
    ];
    for args in cases {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.stdout, b.stdout, "{args:?} not deterministic");
        let text = stdout(&a);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{args:?}: {e}"));
        assert_eq!(v["schema_version"], 1, "{args:?}");
        assert!(v["report"].is_object() || v["report"].is_array(), "{args:?}");
        let again = serde_json::to_string_pretty(&v).unwrap();
        assert_eq!(again.trim_end(), text.trim_end(), "{args:?} does not re-serialize identically");
    }
}

#[test]
fn same_seed_gives_the_same_report() {
    let a = run(&["--json", "--ring", "suq2", "--seed", "1", "axioms", "--labels", "8", "--triples", "10"]);
    let b = run(&["--json", "--ring", "suq2", "--seed", "1", "axioms", "--labels", "8", "--triples", "10"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), Some(0));
}

#[test]
fn uq_verify_passes_at_negative_q() {
    let o = run(&["uq", "verify", "--q", "-0.5", "--nmax", "3", "--fusion-nmax", "2", "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["report"]["pass"], true);
}

#[test]
fn closure_text_lists_members() {
    let o = run(&["closure", "--ring", "uqsu11", "--generators", "iota-1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("iota-1") && text.contains("iota"), "{text}");
}
