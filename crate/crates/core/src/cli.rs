//! Command-line front end. `run` parses arguments, dispatches to an
//! analysis and writes either a text summary or canonical JSON.
//!
//! Exit codes: 0 clean verdict, 1 violations / mismatches / inconclusive,
//! 2 usage or input errors.

use std::ffi::OsString;
use std::io::Write;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::component::{
    connectedness_probe, identity_component_report, ComponentBounds, ComponentVerdict, Connectedness,
};
use crate::error::{FusionError, Result};
use crate::fusion::axioms::DEFAULT_SEED;
use crate::fusion::{check_axioms, AxiomOptions, AxiomReport, Budget, FusionProvider, IrrLabel};
use crate::providers::{parse_provider, AuRing};
use crate::report::to_canonical_json;
use crate::torsion::{
    all_subrings, ascending_chain_probe, central_closure, dimension_ideal_recover, generated_subring, is_torsion,
    n_sequence_cocommutative, normal_forcing_closure, torsion_subcategory, BalancedPowers, Constant, TorsionDegree,
    TorsionVerdict,
};
use crate::uq::{uq_verify, Branch};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FINDINGS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Label-count budget used by `chain` unless `--budget` sets one: the
/// probe is limited by word length, not by the number of labels.
const CHAIN_MAX_IRREDUCIBLES: usize = 1 << 16;

#[derive(Parser, Debug)]
#[command(name = "fusion-torsion", version, about = "Torsion, identity components and sub-representation rings of fusion rings")]
struct Cli {
    /// Fusion ring, e.g. `suq2`, `uqsu11`, `au:3`, `word:Z2*Z`, `free(so3,word:Z2)`, `json:ring.json`.
    #[arg(long, global = true)]
    ring: Option<String>,
    /// Budget overrides `max_irreducibles=…,max_rounds=…,max_label_size=…`.
    #[arg(long, global = true)]
    budget: Option<String>,
    /// Emit the versioned JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the fusion-ring axioms on enumerated labels and random triples.
    Axioms {
        /// Number of enumerated labels (default: the budget's max_irreducibles).
        #[arg(long)]
        labels: Option<usize>,
        #[arg(long, default_value_t = crate::fusion::axioms::DEFAULT_TRIPLES)]
        triples: usize,
    },
    /// Decompose `u ⊗ v`.
    Decompose { u: String, v: String },
    /// Torsion verdict for one label, or the torsion set of the ring.
    Torsion {
        #[arg(long)]
        label: Option<String>,
    },
    /// Closure of a generator set.
    Closure {
        #[arg(long)]
        generators: String,
        #[arg(long, value_enum, default_value_t = ClosureKind::Generated)]
        kind: ClosureKind,
    },
    /// Normal-subgroup sequence of a finite or word group and its torsion degree.
    Nsequence {
        #[arg(long, default_value_t = crate::torsion::nsequence::DEFAULT_MAX_STAGE)]
        max_stage: usize,
        #[arg(long, default_value_t = crate::torsion::nsequence::DEFAULT_EXPONENT_BOUND)]
        exponent_bound: u64,
    },
    /// Identity-component analysis.
    Component {
        #[arg(value_enum, default_value_t = ComponentAction::Report)]
        action: ComponentAction,
        #[arg(long, default_value_t = ComponentBounds::default().probe_bound)]
        probe_bound: usize,
        #[arg(long, default_value_t = ComponentBounds::default().table_bound)]
        table_bound: usize,
    },
    /// Bounded probe of an ascending chain of generated subrings.
    Chain {
        #[arg(long, default_value_t = 4)]
        dmax: usize,
        /// Constant generator set; default for `au` is `{ū^r u^r : r ≤ d}`.
        #[arg(long)]
        generators: Option<String>,
    },
    /// Recover a sub-representation ring from its dimension ideal.
    Dimideal {
        /// Generators of the subring (default: every subring, exhaustively).
        #[arg(long)]
        generators: Option<String>,
    },
    /// Numeric checks of the su(1,1) real form.
    Uq {
        #[command(subcommand)]
        action: UqAction,
    },
    /// Same as `uq verify`.
    Uqverify(UqArgs),
}

#[derive(Subcommand, Debug)]
enum UqAction {
    Verify(UqArgs),
}

#[derive(Args, Debug)]
struct UqArgs {
    #[arg(long, default_value_t = -0.5, allow_negative_numbers = true)]
    q: f64,
    #[arg(long, default_value_t = 6)]
    nmax: usize,
    /// Largest `n, m` in the numeric fusion cross-check.
    #[arg(long, default_value_t = 3)]
    fusion_nmax: usize,
    #[arg(long, value_enum, default_value_t = BranchArg::Positive)]
    branch: BranchArg,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ClosureKind {
    Generated,
    Central,
    Normal,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ComponentAction {
    Report,
    Connectedness,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BranchArg {
    Positive,
    Negative,
}

/// Output of one command before rendering.
struct Outcome {
    json: String,
    text: String,
    code: i32,
}

fn outcome<T: Serialize>(command: &'static str, report: &T, text: String, code: i32) -> Result<Outcome> {
    Ok(Outcome {
        json: to_canonical_json(command, report)?,
        text,
        code,
    })
}

/// Splits at commas outside parentheses.
fn split_labels(list: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, ch) in list.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(list[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(list[start..].trim());
    out.into_iter().filter(|s| !s.is_empty()).collect()
}

fn parse_labels(ring: &dyn FusionProvider, list: &str) -> Result<Vec<IrrLabel>> {
    split_labels(list).into_iter().map(|t| ring.parse_label(t)).collect()
}

fn ids<'a>(labels: impl IntoIterator<Item = &'a IrrLabel>) -> String {
    let v: Vec<&str> = labels.into_iter().map(|l| l.id()).collect();
    format!("{{{}}}", v.join(", "))
}

fn exit_code_for(err: &FusionError) -> i32 {
    match err {
        FusionError::AxiomViolations(_)
        | FusionError::IllConditioned(_)
        | FusionError::ClosureCheck(_)
        | FusionError::NotSaturated => EXIT_FINDINGS,
        _ => EXIT_USAGE,
    }
}

fn axiom_text(r: &AxiomReport) -> String {
    let mut s = format!(
        "{}: {} labels, {} random triples, {} violation(s)\n",
        r.provider,
        r.labels_checked,
        r.triples_checked,
        r.violations.len()
    );
    for v in &r.violations {
        s += &format!("  {v}\n");
    }
    s
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let json = cli.json;
    match dispatch(cli) {
        Ok(o) => {
            let body = if json { o.json } else { o.text };
            let _ = writeln!(out, "{}", body.trim_end());
            o.code
        }
        Err(FusionError::AxiomViolations(report)) => {
            // a JSON ring that fails its axioms: the violations are the report
            let body = if json {
                to_canonical_json("axioms", &report).unwrap_or_default()
            } else {
                axiom_text(&report)
            };
            let _ = writeln!(out, "{}", body.trim_end());
            EXIT_FINDINGS
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code_for(&e)
        }
    }
}

fn ring_of(cli: &Cli) -> Result<Arc<dyn FusionProvider>> {
    let spec = cli
        .ring
        .as_deref()
        .ok_or_else(|| FusionError::BadParameter("this command needs --ring <spec>".into()))?;
    parse_provider(spec)
}

fn budget_of(cli: &Cli) -> Result<Budget> {
    match &cli.budget {
        Some(spec) => Budget::default().with_overrides(spec),
        None => Ok(Budget::default()),
    }
}

fn dispatch(cli: Cli) -> Result<Outcome> {
    if let Command::Uq { action: UqAction::Verify(a) } | Command::Uqverify(a) = &cli.command {
        return run_uq(a);
    }
    let ring = ring_of(&cli)?;
    let ring = ring.as_ref();
    let budget = budget_of(&cli)?;
    match &cli.command {
        Command::Axioms { labels, triples } => {
            let b = Budget {
                max_irreducibles: labels.unwrap_or(budget.max_irreducibles),
                ..budget
            };
            let r = check_axioms(
                ring,
                &b,
                AxiomOptions {
                    seed: cli.seed,
                    triples: *triples,
                },
            );
            let code = if r.passed() { EXIT_OK } else { EXIT_FINDINGS };
            outcome("axioms", &r, axiom_text(&r), code)
        }
        Command::Decompose { u, v } => {
            let (a, b) = (ring.parse_label(u)?, ring.parse_label(v)?);
            let d = ring.decompose(&a, &b)?;
            #[derive(Serialize)]
            struct Product<'a> {
                provider: String,
                u: &'a IrrLabel,
                v: &'a IrrLabel,
                product: &'a crate::fusion::Decomposition,
            }
            let text = format!("{a} ⊗ {b} = {d}");
            outcome(
                "decompose",
                &Product {
                    provider: ring.name(),
                    u: &a,
                    v: &b,
                    product: &d,
                },
                text,
                EXIT_OK,
            )
        }
        Command::Torsion { label: Some(label) } => {
            let u = ring.parse_label(label)?;
            let v = is_torsion(ring, &u, &budget)?;
            let text = match &v {
                TorsionVerdict::Torsion { closure } => format!("{u}: torsion, ⟨{u}⟩ = {}", ids(&closure.labels)),
                TorsionVerdict::NonTorsion { .. } => format!("{u}: not torsion (infinite order)"),
                TorsionVerdict::Unknown { budget } => format!("{u}: unknown within budget {budget}"),
            };
            outcome("torsion", &v, text, EXIT_OK)
        }
        Command::Torsion { label: None } => {
            let r = torsion_subcategory(ring, &budget)?;
            let text = format!(
                "{}: torsion set {} ({}, {})\n  {} non-torsion, {} unknown among {} labels",
                r.provider,
                ids(&r.torsion_set.labels),
                if r.tensorial { "tensor-closed" } else { "not tensor-closed" },
                if r.torsion_set.is_saturated() { "saturated" } else { "budget exceeded" },
                r.non_torsion.len(),
                r.unknowns.len(),
                r.verdicts.len()
            );
            outcome("torsion", &r, text, EXIT_OK)
        }
        Command::Closure { generators, kind } => {
            let gens = parse_labels(ring, generators)?;
            let s = match kind {
                ClosureKind::Generated => generated_subring(ring, &gens, &budget)?,
                ClosureKind::Central => central_closure(ring, &gens, &budget)?,
                ClosureKind::Normal => normal_forcing_closure(ring, &gens, &budget)?,
            };
            let text = format!(
                "{} labels, {}: {}",
                s.len(),
                if s.is_saturated() { "saturated" } else { "budget exceeded" },
                ids(&s.labels)
            );
            outcome("closure", &s, text, EXIT_OK)
        }
        Command::Nsequence { max_stage, exponent_bound } => {
            let r = n_sequence_cocommutative(ring, *max_stage, *exponent_bound, &budget)?;
            let consistent = r.stages.iter().all(|s| s.oracle_consistent());
            let mut text = format!("{}:\n", r.provider);
            for s in &r.stages {
                text += &format!(
                    "  N{}: {} labels, quotient {}, {}\n",
                    s.index,
                    s.closure.len(),
                    s.quotient,
                    if s.oracle_consistent() { "oracle consistent" } else { "ORACLE MISMATCH" }
                );
            }
            text += &match r.degree {
                TorsionDegree::Finite(d) => format!("  torsion degree {d}"),
                TorsionDegree::NotStabilized => "  not stabilized".to_string(),
            };
            if r.connected {
                text += ", connected";
            }
            if r.totally_disconnected {
                text += ", totally disconnected";
            }
            let code = if consistent && r.degree != TorsionDegree::NotStabilized {
                EXIT_OK
            } else {
                EXIT_FINDINGS
            };
            outcome("nsequence", &r, text, code)
        }
        Command::Component {
            action: ComponentAction::Connectedness,
            probe_bound,
            ..
        } => {
            let p = connectedness_probe(ring, *probe_bound, &budget)?;
            let text = match &p.outcome {
                Connectedness::TorsionFound { label } => format!("{}: not connected, torsion label {label}", p.provider),
                Connectedness::NoTorsionFound => format!(
                    "{}: no torsion among {} labels ({} certified non-torsion, {} unknown)",
                    p.provider,
                    p.bound,
                    p.certified_non_torsion,
                    p.unknowns.len()
                ),
            };
            outcome("component", &p, text, EXIT_OK)
        }
        Command::Component {
            action: ComponentAction::Report,
            probe_bound,
            table_bound,
        } => {
            let bounds = ComponentBounds {
                probe_bound: *probe_bound,
                table_bound: *table_bound,
            };
            let r = identity_component_report(ring, &bounds, &budget)?;
            let mut text = format!(
                "{}: torsion set {}\n  tensorial {}, commutative {}, finite {}, {} normality violation(s)\n",
                r.provider,
                ids(&r.torsion_set.labels),
                r.tensorial,
                r.commutative,
                serde_json::to_string(&r.finite)?,
                r.normality_violations.len()
            );
            let code = match &r.verdict {
                ComponentVerdict::NormalWithFiniteComponentGroup => {
                    text += "  verdict: NormalWithFiniteComponentGroup";
                    if let Some(o) = &r.component_group_order {
                        text += &format!(", component group order {o}");
                    }
                    EXIT_OK
                }
                ComponentVerdict::NonNormalWitness { label, evidence } => {
                    text += &format!(
                        "  verdict: NonNormalWitness({label}); restriction to {} is {} (invariant multiplicity {} ≠ {})",
                        evidence.factor_provider, evidence.restriction, evidence.invariant_multiplicity, evidence.dim
                    );
                    EXIT_OK
                }
                ComponentVerdict::Inconclusive { reasons } => {
                    text += &format!("  verdict: Inconclusive ({})", reasons.join("; "));
                    EXIT_FINDINGS
                }
            };
            for n in &r.notes {
                text += &format!("\n  note: {n}");
            }
            outcome("component", &r, text, code)
        }
        Command::Chain { dmax, generators } => {
            let b = if cli.budget.as_deref().is_some_and(|s| s.contains("irreducibles")) {
                budget
            } else {
                Budget {
                    max_irreducibles: CHAIN_MAX_IRREDUCIBLES,
                    ..budget
                }
            };
            let r = match (generators, ring.as_any().downcast_ref::<AuRing>()) {
                (Some(g), _) => ascending_chain_probe(ring, &Constant(parse_labels(ring, g)?), *dmax, &b)?,
                (None, Some(au)) => ascending_chain_probe(ring, &BalancedPowers(*au), *dmax, &b)?,
                (None, None) => {
                    return Err(FusionError::BadParameter(
                        "chain needs --generators unless the ring is au".into(),
                    ))
                }
            };
            let mut text = format!("{} (bounded verification):\n", r.provider);
            for s in &r.steps {
                text += &format!(
                    "  d={}: cap {}, {} labels{}, witness {} {}\n",
                    s.d,
                    s.label_cap,
                    s.closure_size,
                    if s.saturated { "" } else { " (truncated)" },
                    s.witness.as_ref().map_or("-".to_string(), |w| w.to_string()),
                    match s.witness_in_closure {
                        Some(true) => "present",
                        Some(false) => "absent",
                        None => "",
                    }
                );
            }
            text += &format!("  strictly increasing up to d={}", r.strictly_increasing_up_to);
            outcome("chain", &r, text, EXIT_OK)
        }
        Command::Dimideal { generators: Some(g) } => {
            let gens = parse_labels(ring, g)?;
            let a = generated_subring(ring, &gens, &budget)?;
            let r = dimension_ideal_recover(ring, &a)?;
            let text = format!(
                "{}: A = {}, ideal rank {}, recovered {} — {}",
                r.provider,
                ids(&r.subring),
                r.ideal_rank,
                ids(&r.recovered),
                if r.matches { "match" } else { "MISMATCH" }
            );
            let code = if r.matches { EXIT_OK } else { EXIT_FINDINGS };
            outcome("dimideal", &r, text, code)
        }
        Command::Dimideal { generators: None } => {
            let mut reports = Vec::new();
            for s in all_subrings(ring, budget.max_irreducibles)? {
                let a = crate::torsion::Subcategory::from_labels(
                    crate::torsion::SubcategoryKind::TensorGenerated,
                    s,
                    crate::torsion::ClosureStatus::Saturated,
                    budget,
                );
                reports.push(dimension_ideal_recover(ring, &a)?);
            }
            let bad = reports.iter().filter(|r| !r.matches).count();
            let mut text = format!("{}: {} sub-representation rings\n", ring.name(), reports.len());
            for r in &reports {
                text += &format!(
                    "  {} → {} {}\n",
                    ids(&r.subring),
                    ids(&r.recovered),
                    if r.matches { "ok" } else { "MISMATCH" }
                );
            }
            let code = if bad == 0 { EXIT_OK } else { EXIT_FINDINGS };
            outcome("dimideal", &reports, text, code)
        }
        Command::Uq { .. } | Command::Uqverify(_) => unreachable!("handled above"),
    }
}

fn run_uq(a: &UqArgs) -> Result<Outcome> {
    let branch = match a.branch {
        BranchArg::Positive => Branch::Positive,
        BranchArg::Negative => Branch::Negative,
    };
    let r = uq_verify(a.q, a.nmax, a.fusion_nmax, branch)?;
    let worst_rel = r.representations.iter().map(|x| x.relation_residual).fold(0.0, f64::max);
    let worst_star = r.representations.iter().map(|x| x.star_residual).fold(0.0, f64::max);
    let text = format!(
        "q = {}, n ≤ {}:\n  relations max residual {:.2e}, star max residual {:.2e}\n  unitarizability as expected: {}\n  conjugate equations: c = {:.12} ({})\n  permutation intertwiner: {}\n  fusion cross-check n,m ≤ {}: {} mismatch(es)\n  {}",
        r.q,
        r.n_max,
        worst_rel,
        worst_star,
        r.unitarizability_as_expected,
        r.conjugate_equations.c_left.re,
        if r.conjugate_equations.pass { "pass" } else { "FAIL" },
        if r.permutation.iter().all(|p| p.pass) { "pass" } else { "FAIL" },
        r.fusion_n_max,
        r.fusion.mismatches.len(),
        if r.pass { "PASS" } else { "FAIL" }
    );
    let code = if r.pass { EXIT_OK } else { EXIT_FINDINGS };
    outcome("uqverify", &r, text, code)
}
