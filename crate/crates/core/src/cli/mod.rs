//! Command-line interface.
//!
//! Exit codes: 0 when every verdict is positive, 1 when a verdict is
//! negative (a counterexample or a failed check), 2 on input errors and 3
//! when a budget is exhausted.

pub mod files;
pub mod report;

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::growth::{
    is_irreducible, measured_bergman_bound, span_filtration_capped, stabilized_profile, AlgebraPresentation,
    GrowthProfile, DEFAULT_LEVEL_CAP,
};
use crate::monomial::{classify_growth, count_normal_words, growth_profile_monomial, GrowthClass};
use crate::pi::{
    closed_form_decimal, max_irrep_dim, pi_degree_bound, remark_bound, BoundOptions, BoundReport, IdentityMode,
    IdentityVerdict, DEFAULT_TUPLE_BUDGET, N_REAL_DIGITS,
};
use crate::reduction::{
    verify_certificate, verify_comb_lemma, LemmaOptions, ReduceOptions, Reducer, DEFAULT_STEP_BUDGET,
};

use files::{load_monomial, load_presentation, read_source, DEMOS};
use report::{cert_doc, field_json, matrix_json, parse_cert, WordCodec, BOUND_SCHEMA};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    /// Strictly increasing tuples from an algebra basis (a proof)
    Basis,
    /// Every tuple of matrices over a prime field (a proof)
    Exhaustive,
    /// Seeded random elements of the algebra (evidence)
    Random,
}

#[derive(Debug, Parser)]
#[command(name = "lingrowth", version, about = "Growth, word reduction and standard identities for matrix algebras")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Work cap: words per growth level, reduction steps, or identity tuples
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    /// Check a cert-v1 file against the presentation (reduce only)
    #[arg(long, global = true, value_name = "CERT")]
    pub verify: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Growth filtration d_i = dim kS^i
    Growth {
        /// Presentation file, or demo:<name>
        input: String,
        /// Last level computed (default n² + 1)
        #[arg(long)]
        horizon: Option<usize>,
    },
    /// Check the word-reduction statement and emit sample certificates
    LemmaCheck {
        input: String,
        #[arg(long)]
        ell: Option<usize>,
        #[arg(long, default_value_t = 8)]
        certificates: usize,
    },
    /// Reduce one word to shorter words, or check a certificate with --verify
    Reduce {
        input: String,
        /// Comma-separated letters: indices or generator names
        #[arg(long)]
        word: Option<String>,
        #[arg(long)]
        ell: Option<usize>,
    },
    /// Decide whether the generators span M_n
    Irreducible { input: String },
    /// Bound report and standard identity test
    PiTest {
        input: String,
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long, value_enum, default_value_t = ModeArg::Basis)]
        mode: ModeArg,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
    },
    /// Normal-word counts and growth class of a monomial algebra
    Monomial {
        input: String,
        #[arg(long, default_value_t = 20)]
        horizon: usize,
    },
    /// Dimension and pi-degree bounds for a given Bergman bound c
    Bound {
        #[arg(long, allow_hyphen_values = true)]
        c: i64,
    },
    /// Run the bundled corpus, list it, or print one entry
    Demo {
        name: Option<String>,
        #[arg(long)]
        list: bool,
    },
}

/// A finished command: its exit code and the three renderings.
struct Report {
    exit: i32,
    json: Value,
    text: String,
    csv: Option<String>,
}

impl Report {
    fn new(exit: i32, json: Value, text: String) -> Self {
        Report { exit, json, text, csv: None }
    }

    fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Text => Ok(self.text.clone()),
            Format::Json => Ok(serde_json::to_string_pretty(&self.json).expect("json") + "\n"),
            Format::Csv => self.csv.clone().ok_or_else(|| Error::Input("csv output is only available for growth and monomial".into())),
        }
    }
}

/// Parse arguments (including the program name) and run. Returns the exit
/// code and everything the command prints.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.to_string());
        }
    };
    match execute(&cli).and_then(|r| Ok((r.exit, r.render(cli.format)?))) {
        Ok(out) => out,
        Err(e) => (e.exit_code(), format!("error: {e}\n")),
    }
}

fn execute(cli: &Cli) -> Result<Report> {
    if cli.verify.is_some() && !matches!(cli.command, Command::Reduce { .. }) {
        return Err(Error::Input("--verify applies to the reduce command only".into()));
    }
    match &cli.command {
        Command::Growth { input, horizon } => cmd_growth(cli, input, *horizon),
        Command::LemmaCheck { input, ell, certificates } => cmd_lemma_check(cli, input, *ell, *certificates),
        Command::Reduce { input, word, ell } => cmd_reduce(cli, input, word.as_deref(), *ell),
        Command::Irreducible { input } => cmd_irreducible(input),
        Command::PiTest { input, degree, mode, trials } => cmd_pi_test(cli, input, *degree, *mode, *trials),
        Command::Monomial { input, horizon } => cmd_monomial(input, *horizon),
        Command::Bound { c } => cmd_bound(*c),
        Command::Demo { name, list } => cmd_demo(cli, name.as_deref(), *list),
    }
}

fn budget_usize(cli: &Cli, default: usize) -> usize {
    cli.budget.map_or(default, |b| usize::try_from(b).unwrap_or(usize::MAX))
}

fn header(pres: &AlgebraPresentation) -> String {
    format!(
        "presentation: {} generator(s) in M_{}({}){}\n",
        pres.alphabet_size(),
        pres.n(),
        pres.field(),
        if pres.include_unit() { ", unit included" } else { "" }
    )
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(", ")
}

fn profile_csv(p: &GrowthProfile) -> String {
    let mut out = String::from("i,d_i,diff\n");
    for (i, d) in p.dims.iter().enumerate() {
        let diff = if i == 0 { *d } else { p.differences[i - 1] };
        let _ = writeln!(out, "{i},{d},{diff}");
    }
    out
}

fn cmd_growth(cli: &Cli, input: &str, horizon: Option<usize>) -> Result<Report> {
    let pres = load_presentation(input)?;
    let horizon = horizon.unwrap_or(pres.n() * pres.n() + 1);
    let profile = span_filtration_capped(&pres, horizon, budget_usize(cli, DEFAULT_LEVEL_CAP))?;
    let bound = measured_bergman_bound(&profile);
    let codec = WordCodec::new(&pres);
    let json = json!({
        "schema": "growth-v1",
        "field": field_json(pres.field()),
        "n": pres.n(),
        "include_unit": pres.include_unit(),
        "horizon": horizon,
        "dims": profile.dims,
        "differences": profile.differences,
        "measured_bergman_bound": bound,
        "stabilized_at": profile.stabilized_at,
        "bound_exact_for_generating_set": profile.stabilized_at.is_some(),
        "basis_words": profile.basis_words.iter().map(|l| l.iter().map(|w| codec.encode(w)).collect::<Vec<_>>()).collect::<Vec<_>>(),
    });
    let mut text = header(&pres);
    let _ = writeln!(text, "dims (i = 0..{horizon}): {}", join(&profile.dims));
    let _ = writeln!(text, "differences: {}", join(&profile.differences));
    let _ = writeln!(text, "measured Bergman bound: {bound}");
    match profile.stabilized_at {
        Some(i) => {
            let _ = writeln!(text, "stabilized at level {i}; the bound is exact for this generating set");
        }
        None => {
            let _ = writeln!(text, "not stabilized up to horizon {horizon}; the bound is a lower estimate");
        }
    }
    let csv = profile_csv(&profile);
    Ok(Report { exit: 0, json, text, csv: Some(csv) })
}

fn cmd_lemma_check(cli: &Cli, input: &str, ell: Option<usize>, certificates: usize) -> Result<Report> {
    let pres = load_presentation(input)?;
    let r = verify_comb_lemma(&pres, ell, LemmaOptions { certificates, seed: cli.seed })?;
    let codec = WordCodec::new(&pres);
    let passed = r.all_passed();
    let json = json!({
        "schema": "lemma-v1",
        "field": field_json(r.field),
        "n": r.n,
        "measured_bergman_bound": r.measured_bound,
        "ell": r.ell,
        "ell_clamped": r.ell_clamped,
        "word_length": r.word_length,
        "dims": r.dims,
        "irreducible": r.irreducible,
        "algebra_dim": r.algebra_dim,
        "span_claim": r.span_claim,
        "length_m_reducible": r.length_m_reducible,
        "inequality": {
            "lhs": r.inequality_lhs as u64,
            "rhs": r.inequality_rhs as u64,
            "holds": r.inequality_holds,
        },
        "seed": r.seed,
        "certificates": r.certified.iter().map(|c| cert_doc(&pres, r.ell, &c.certificate, Some(&c.check))).collect::<Vec<_>>(),
        "passed": passed,
    });
    let m = r.word_length;
    let mut text = header(&pres);
    let _ = writeln!(
        text,
        "measured Bergman bound {}, ell = {}{}, m = ell(n+1) = {m}",
        r.measured_bound,
        r.ell,
        if r.ell_clamped { " (raised from 0)" } else { "" }
    );
    let _ = writeln!(text, "irreducible: {} (dim {})", r.irreducible, r.algebra_dim);
    match r.span_claim {
        Some(ok) => {
            let _ = writeln!(text, "span claim d_{} = n² = {}: {ok}", m - 1, r.n * r.n);
        }
        None => {
            let _ = writeln!(text, "span claim skipped (presentation is reducible)");
        }
    }
    let _ = writeln!(text, "length-{m} words reducible (d_{m} = d_{}): {}", m - 1, r.length_m_reducible);
    let _ = writeln!(
        text,
        "inequality n² ≤ ell²(n+1) − ell + 1: {} ≤ {}: {}{}",
        r.inequality_lhs,
        r.inequality_rhs,
        r.inequality_holds,
        if r.irreducible { "" } else { " (not claimed for reducible presentations)" }
    );
    let _ = writeln!(text, "certificates (seed {}):", r.seed);
    for c in &r.certified {
        let _ = writeln!(
            text,
            "  {} = {}  [{}, {} step(s)]",
            codec.show(&c.certificate.word),
            codec.show_terms(&c.certificate.terms),
            c.check.reason(),
            c.certificate.trace.len()
        );
    }
    let _ = writeln!(text, "verdict: {}", if passed { "all checks passed" } else { "FAILED" });
    Ok(Report::new(if passed { 0 } else { 1 }, json, text))
}

fn default_ell(pres: &AlgebraPresentation) -> Result<usize> {
    Ok(measured_bergman_bound(&stabilized_profile(pres)?).max(1))
}

fn cmd_reduce(cli: &Cli, input: &str, word: Option<&str>, ell: Option<usize>) -> Result<Report> {
    let pres = load_presentation(input)?;
    let codec = WordCodec::new(&pres);
    if let Some(path) = &cli.verify {
        let cert = parse_cert(&pres, &read_source(path)?)?;
        let check = verify_certificate(&pres, &cert);
        let json = json!({
            "schema": "verify-v1",
            "word": codec.encode(&cert.word),
            "valid": check.is_valid(),
            "check": check.reason(),
        });
        let text = format!("certificate for {}: {}\n", codec.show(&cert.word), check.reason());
        return Ok(Report::new(if check.is_valid() { 0 } else { 1 }, json, text));
    }
    let word = word.ok_or_else(|| Error::Input("reduce needs --word (or --verify CERT)".into()))?;
    let w = codec.parse(word)?;
    let ell = match ell {
        Some(l) => l,
        None => default_ell(&pres)?,
    };
    let options = ReduceOptions { step_budget: budget_usize(cli, DEFAULT_STEP_BUDGET), ..ReduceOptions::default() };
    let reducer = Reducer::with_options(&pres, ell, options)?;
    let cert = reducer.reduce(&w)?;
    let check = verify_certificate(&pres, &cert);
    let json = serde_json::to_value(cert_doc(&pres, ell, &cert, Some(&check))).expect("json");
    let mut text = header(&pres);
    let _ = writeln!(text, "ell = {ell}, word length {}", w.len());
    for (i, s) in cert.trace.iter().enumerate() {
        let _ = writeln!(
            text,
            "  step {}: {} = {}  [{}]",
            i + 1,
            codec.show(&s.input_word),
            codec.show_terms(&s.output_terms),
            s.kind.as_str()
        );
    }
    let _ = writeln!(text, "{} = {}", codec.show(&cert.word), codec.show_terms(&cert.terms));
    let _ = writeln!(text, "certificate: {}", check.reason());
    Ok(Report::new(if check.is_valid() { 0 } else { 1 }, json, text))
}

fn cmd_irreducible(input: &str) -> Result<Report> {
    let pres = load_presentation(input)?;
    let (irr, dim) = is_irreducible(&pres)?;
    let n2 = pres.n() * pres.n();
    let json = json!({
        "schema": "irreducible-v1",
        "field": field_json(pres.field()),
        "n": pres.n(),
        "irreducible": irr,
        "algebra_dim": dim,
        "n_squared": n2,
    });
    let text = format!(
        "{}algebra dimension {dim} of n² = {n2}: {}\n",
        header(&pres),
        if irr { "irreducible" } else { "reducible" }
    );
    Ok(Report::new(0, json, text))
}

fn bound_json(r: &BoundReport, seed: Option<u64>) -> Value {
    let empirical = r.empirical.as_ref().map(|e| {
        let proof = !matches!(e.mode, IdentityMode::Random { .. });
        let mut v = json!({
            "identity": format!("S_{}", e.degree),
            "degree": e.degree,
            "mode": e.mode.label(),
            "proof": proof,
            "pool_size": e.pool_size,
            "tuples_tested": e.tuples_tested,
            "status": if e.verdict.vanishes() { "vanishes" } else { "counterexample" },
        });
        if let IdentityMode::Random { seed, trials } = e.mode {
            v["seed"] = json!(seed);
            v["trials"] = json!(trials);
        }
        if let IdentityVerdict::Counterexample { tuple_index, args, value } = &e.verdict {
            v["counterexample"] = json!({
                "tuple_index": tuple_index,
                "args": args.iter().map(matrix_json).collect::<Vec<_>>(),
                "value": matrix_json(value),
            });
        }
        v
    });
    json!({
        "schema": BOUND_SCHEMA,
        "measured_c": r.measured_c,
        "c_used": r.c_used,
        "exact_for_generating_set": r.exact_for_generating_set,
        "field": r.field.map(field_json),
        "n": r.n,
        "N_int": r.n_int as u64,
        "N_real": r.n_real,
        "N_real_digits": N_REAL_DIGITS,
        "remark_bound": r.remark_bound as u64,
        "pi_degree_claim": r.pi_degree_claim as u64,
        "seed": seed,
        "empirical": empirical,
        "note": "c is measured on the supplied generating set and may exceed the minimum over all generating sets, so the bound may be non-tight; pi degree at most N is tested as vanishing of the standard polynomial S_2N",
    })
}

fn bound_text(r: &BoundReport) -> String {
    let mut text = String::new();
    let _ = writeln!(
        text,
        "measured c = {}{}",
        r.measured_c,
        if r.c_used != r.measured_c { format!(" (using c = {})", r.c_used) } else { String::new() }
    );
    let _ = writeln!(text, "N_int = {}, N_real = {}, c² + 1 = {}", r.n_int, r.n_real, r.remark_bound);
    let _ = writeln!(text, "claim: pi degree at most {}", r.pi_degree_claim);
    if let Some(e) = &r.empirical {
        let how = match e.mode {
            IdentityMode::Basis => "proof over basis tuples".to_owned(),
            IdentityMode::FieldExhaustive => "proof over all field tuples".to_owned(),
            IdentityMode::Random { seed, .. } => format!("random evidence, seed {seed}"),
        };
        match &e.verdict {
            IdentityVerdict::Vanishes => {
                let _ = writeln!(text, "S_{} vanishes ({how}, {} tuple(s))", e.degree, e.tuples_tested);
            }
            IdentityVerdict::Counterexample { tuple_index, args, value } => {
                let _ = writeln!(text, "S_{} does not vanish: counterexample at tuple {tuple_index} ({how})", e.degree);
                for (i, a) in args.iter().enumerate() {
                    let _ = writeln!(text, "  x{} = {a}", i + 1);
                }
                let _ = writeln!(text, "  value = {value}");
            }
        }
    }
    text
}

fn cmd_pi_test(cli: &Cli, input: &str, degree: Option<usize>, mode: ModeArg, trials: u64) -> Result<Report> {
    let pres = load_presentation(input)?;
    let profile = stabilized_profile(&pres)?;
    let mode = match mode {
        ModeArg::Basis => IdentityMode::Basis,
        ModeArg::Exhaustive => IdentityMode::FieldExhaustive,
        ModeArg::Random => IdentityMode::Random { trials, seed: cli.seed },
    };
    let options = BoundOptions { mode, degree, budget: cli.budget.unwrap_or(DEFAULT_TUPLE_BUDGET) };
    let r = pi_degree_bound(&profile, Some(&pres), options)?;
    let json = bound_json(&r, Some(cli.seed));
    let text = header(&pres) + &bound_text(&r);
    Ok(Report::new(if r.verdict_positive() { 0 } else { 1 }, json, text))
}

fn cmd_monomial(input: &str, horizon: usize) -> Result<Report> {
    let mp = load_monomial(input)?;
    let profile = growth_profile_monomial(&mp, horizon)?;
    let counts: Vec<String> = (0..=horizon).map(|l| count_normal_words(&mp, l).to_string()).collect();
    let class = classify_growth(&mp);
    let forbidden: Vec<String> = mp.forbidden().iter().map(|w| mp.render(w)).collect();
    let degree = match class {
        GrowthClass::Polynomial(d) => Some(d),
        GrowthClass::Finite => Some(0),
        GrowthClass::Exponential => None,
    };
    let json = json!({
        "schema": "monomial-v1",
        "alphabet": mp.alphabet(),
        "forbidden": forbidden,
        "horizon": horizon,
        "counts": counts,
        "dims": profile.dims,
        "differences": profile.differences,
        "measured_bergman_bound": measured_bergman_bound(&profile),
        "classification": class.label(),
        "degree": degree,
        "linear": class.is_linear(),
    });
    let mut text = format!("alphabet {{{}}}, forbidden {{{}}}\n", mp.alphabet().join(", "), forbidden.join(", "));
    let _ = writeln!(text, "normal words per length 0..{horizon}: {}", counts.join(", "));
    let _ = writeln!(text, "cumulative dims: {}", join(&profile.dims));
    let _ = writeln!(text, "measured Bergman bound: {}", measured_bergman_bound(&profile));
    let _ = writeln!(text, "growth: {}{}", class.label(), if class.is_linear() { " (linear)" } else { "" });
    Ok(Report { exit: 0, json, text, csv: Some(profile_csv(&profile)) })
}

fn cmd_bound(c: i64) -> Result<Report> {
    let n_int = max_irrep_dim(c)?;
    let n_real = closed_form_decimal(c, N_REAL_DIGITS)?;
    let remark = remark_bound(c)?;
    let json = json!({
        "schema": BOUND_SCHEMA,
        "c": c,
        "N_int": n_int as u64,
        "N_real": n_real,
        "N_real_digits": N_REAL_DIGITS,
        "remark_bound": remark as u64,
        "pi_degree_claim": n_int as u64,
    });
    let text = format!(
        "c = {c}\nlargest n with n² ≤ c²(n+1) − c + 1: {n_int}\nclosed form: {n_real}\nc² + 1 = {remark}\n"
    );
    Ok(Report::new(0, json, text))
}

/// The corpus run: each entry is a command line and its expected exit code.
pub const DEMO_RUNS: &[(&[&str], i32)] = &[
    (&["growth", "demo:e12-e21", "--horizon", "4"], 0),
    (&["growth", "demo:zero", "--horizon", "4"], 0),
    (&["growth", "demo:upper-triangular", "--horizon", "3"], 0),
    (&["irreducible", "demo:e12-e21"], 0),
    (&["irreducible", "demo:upper-triangular"], 0),
    (&["lemma-check", "demo:e12-e21"], 0),
    (&["lemma-check", "demo:upper-triangular"], 0),
    (&["lemma-check", "demo:unipotent"], 0),
    (&["reduce", "demo:e12-e21", "--word", "0,1,0,1,0,1"], 0),
    (&["reduce", "demo:unipotent", "--word", "g,g,g"], 0),
    (&["pi-test", "demo:e12-e21"], 0),
    (&["pi-test", "demo:e12-e21", "--degree", "3"], 1),
    (&["pi-test", "demo:e12-e21-f2", "--mode", "random", "--trials", "200"], 0),
    (&["pi-test", "demo:block-m2-m1", "--degree", "4"], 0),
    (&["pi-test", "demo:zero"], 0),
    (&["monomial", "demo:monomial-yx-yy"], 0),
    (&["monomial", "demo:free-2", "--horizon", "12"], 0),
    (&["bound", "--c", "2"], 0),
];

fn cmd_demo(cli: &Cli, name: Option<&str>, list: bool) -> Result<Report> {
    if list {
        let names: Vec<&str> = DEMOS.iter().map(|(n, _)| *n).collect();
        let text = names.iter().map(|n| format!("demo:{n}\n")).collect();
        return Ok(Report::new(0, json!({ "schema": "demo-list-v1", "demos": names }), text));
    }
    if let Some(name) = name {
        let src = files::demo_source(name).ok_or_else(|| Error::Input(format!("no demo named {name:?}")))?;
        let value: Value = serde_json::from_str(src).expect("corpus is valid json");
        return Ok(Report::new(0, value, src.to_owned()));
    }
    let mut runs = Vec::new();
    let mut text = String::new();
    let mut all_ok = true;
    for (args, expected) in DEMO_RUNS {
        let seed = cli.seed.to_string();
        let mut argv = vec!["lingrowth"];
        argv.extend_from_slice(args);
        argv.extend(["--seed", seed.as_str()]);
        let sub = Cli::try_parse_from(argv).map_err(|e| Error::Input(e.to_string()))?;
        let (exit, json, sub_text) = match execute(&sub) {
            Ok(r) => (r.exit, r.json, r.text),
            Err(e) => (e.exit_code(), json!({ "error": e.to_string() }), format!("error: {e}\n")),
        };
        let ok = exit == *expected;
        all_ok &= ok;
        let _ = writeln!(text, "$ lingrowth {}", args.join(" "));
        text.push_str(&sub_text);
        let _ = writeln!(text, "[exit {exit}, expected {expected}]\n");
        runs.push(json!({
            "args": args,
            "exit": exit,
            "expected_exit": expected,
            "ok": ok,
            "report": json,
        }));
    }
    let _ = writeln!(text, "{}", if all_ok { "all demo runs behaved as expected" } else { "some demo runs misbehaved" });
    let json = json!({ "schema": "demo-v1", "seed": cli.seed, "runs": runs, "all_ok": all_ok });
    Ok(Report::new(if all_ok { 0 } else { 1 }, json, text))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> (i32, String) {
        run(std::iter::once("lingrowth").chain(args.iter().copied()))
    }

    #[test]
    fn growth_outputs() {
        let (code, out) = go(&["growth", "demo:e12-e21", "--horizon", "4", "--format", "csv"]);
        assert_eq!(code, 0);
        assert_eq!(out, "i,d_i,diff\n0,1,1\n1,3,2\n2,4,1\n3,4,0\n4,4,0\n");
        let (code, out) = go(&["growth", "demo:zero", "--format", "json"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["dims"], json!([1, 1, 1]));
        assert_eq!(v["measured_bergman_bound"], json!(0));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(go(&["bound", "--c", "0"]).0, 2);
        assert_eq!(go(&["bound", "--c", "-3"]).0, 2);
        assert_eq!(go(&["growth", "demo:missing"]).0, 2);
        assert_eq!(go(&["pi-test", "demo:e12-e21", "--degree", "3"]).0, 1);
        assert_eq!(go(&["pi-test", "demo:e12-e21", "--mode", "random", "--trials", "0"]).0, 2);
        assert_eq!(go(&["lemma-check", "demo:e12-e21", "--ell", "1"]).0, 2);
        assert_eq!(go(&["growth", "demo:e12-e21", "--budget", "1", "--horizon", "4"]).0, 3);
        assert_eq!(go(&["bound", "--c", "2", "--format", "csv"]).0, 2);
        assert_eq!(go(&["growth", "demo:e12-e21", "--verify", "x.json"]).0, 2);
        assert_eq!(go(&["nonsense"]).0, 2);
        assert_eq!(go(&["--help"]).0, 0);
    }

    #[test]
    fn bound_command() {
        let (code, out) = go(&["bound", "--c", "2", "--format", "json"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["N_int"], json!(4));
        assert_eq!(v["remark_bound"], json!(5));
        assert_eq!(v["N_real"], json!("4.645751311064"));
        assert_eq!(v["schema"], json!("bound-v1"));
    }

    #[test]
    fn demo_list_and_show() {
        let (code, out) = go(&["demo", "--list"]);
        assert_eq!(code, 0);
        assert!(out.contains("demo:e12-e21\n"));
        let (code, out) = go(&["demo", "monomial-yx-yy"]);
        assert_eq!(code, 0);
        assert!(out.contains("\"yx\""));
    }
}
