use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use rankring::chow::{ChowElement, ChowError};
use rankring::corpus::{self, CorpusError, Table1Row};
use rankring::matroid::{format_subset, Matroid, MatroidError};
use rankring::rank_nullity::{degree1_relation_census, RankNullityError, RankNullityRing};
use rankring::tautological::{
    balancing_check, chern_closed_form, compare_chern_routes, csm_weights, matroid_ring, ChernSide,
};
use rankring::uniform::{gb_check, standard_basis, UniformError};

/// Largest `n` for which `basis` enumerates standard monomials.
const MAX_BASIS_N: usize = 16;

#[derive(Parser)]
#[command(name = "rankring", version, about = "Chow rings of matroids, tautological classes and rank-nullity rings")]
struct Cli {
    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Largest ground set for Chow-ring computations.
    #[arg(long, global = true, default_value_t = 8)]
    max_n: usize,
    /// Worker threads for independent rows (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Builtin matroid: uniform:R:N, m1, m2, m3, m4, mk4, fano_minus.
    #[arg(long)]
    builtin: Option<String>,
    /// Matroid JSON file.
    #[arg(long)]
    matroid: Option<PathBuf>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct HilbertSource {
    #[arg(long)]
    builtin: Option<String>,
    #[arg(long)]
    matroid: Option<PathBuf>,
    /// Every row of the built-in Hilbert-function table, checked against the stored values.
    #[arg(long)]
    table1: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert function of the rank-nullity ring.
    Hilbert {
        #[command(flatten)]
        source: HilbertSource,
    },
    /// Tautological Chern class c_k(S_M) or c_k(Q_M).
    Chern {
        #[command(flatten)]
        source: Source,
        /// S for the subbundle, Q for the quotient.
        #[arg(long, value_parser = parse_side)]
        bundle: ChernSide,
        /// Degree of the Chern class.
        #[arg(short)]
        k: usize,
        /// Print the closed-form sum without rewriting to the FY basis.
        #[arg(long)]
        raw: bool,
        /// Compare the closed form with the Higgs product and the y-expansion.
        #[arg(long)]
        cross_check: bool,
    },
    /// CSM Minkowski weight dual to ch_k(M).
    Csm {
        #[command(flatten)]
        source: Source,
        /// Index k of ch_k(M); the weight lives on cones of dimension rank(M) - 1 - k.
        #[arg(short)]
        k: usize,
    },
    /// Verify the Gröbner basis of the relations among z_1..z_n.
    GbCheck {
        /// Number of variables.
        #[arg(short)]
        n: usize,
    },
    /// Standard monomial basis of the symmetric rank-nullity ring.
    Basis {
        /// Number of variables.
        #[arg(short)]
        n: usize,
        /// A degree, or "all".
        #[arg(long, default_value = "all")]
        degree: String,
    },
    /// Degree-one relations among the rank-nullity generators.
    Census {
        #[command(flatten)]
        source: Source,
    },
    /// Injectivity of multiplication by the Lefschetz element on R*(M).
    Lefschetz {
        #[command(flatten)]
        source: Source,
    },
}

fn parse_side(s: &str) -> Result<ChernSide, String> {
    s.parse().map_err(|_| format!("bundle must be S or Q, got {s:?}"))
}

enum Failure {
    Mismatch,
    Input(String),
    Cap(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Mismatch => 1,
            Failure::Input(_) => 2,
            Failure::Cap(_) => 3,
        }
    }
}

impl From<CorpusError> for Failure {
    fn from(e: CorpusError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<MatroidError> for Failure {
    fn from(e: MatroidError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<ChowError> for Failure {
    fn from(e: ChowError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<UniformError> for Failure {
    fn from(e: UniformError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<RankNullityError> for Failure {
    fn from(e: RankNullityError) -> Self {
        match e {
            RankNullityError::TooLarge { .. } => Failure::Cap(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

/// Text to print and whether every check passed.
struct Outcome {
    text: String,
    ok: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, ok: true }
    }
}

fn load(builtin: &Option<String>, file: &Option<PathBuf>) -> Result<Matroid, Failure> {
    if let Some(name) = builtin {
        return Ok(corpus::builtin(name)?);
    }
    let path = file.as_ref().expect("clap enforces a source");
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let m = corpus::matroid_from_json(&text)?;
    let label = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    Ok(m.with_label(label))
}

fn check_cap(m: &Matroid, max_n: usize) -> Result<(), Failure> {
    if m.n() > max_n {
        return Err(Failure::Cap(format!("n = {} exceeds --max-n {max_n}", m.n())));
    }
    Ok(())
}

fn json_text(v: &Value) -> String {
    serde_json::to_string(v).expect("serializable") + "\n"
}

/// CSV output is unquoted, so commas inside a label become semicolons.
fn csv_label(label: &str) -> String {
    label.replace(',', ";")
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn cmd_hilbert(source: &HilbertSource, format: Format, max_n: usize) -> Result<Outcome, Failure> {
    if source.table1 {
        return cmd_table1(format, max_n);
    }
    let m = load(&source.builtin, &source.matroid)?;
    let h = RankNullityRing::with_limit(&m, max_n)?.hilbert();
    Ok(Outcome::ok(match format {
        Format::Pretty => format!("{h}\n"),
        Format::Csv => h.csv_row(&csv_label(m.label())) + "\n",
        Format::Json => json_text(&json!({
            "matroid": m.label(),
            "n": m.n(),
            "rank": m.rank(),
            "hilbert": h.values,
            "unimodal": h.is_unimodal(),
            "log_concave": h.is_log_concave(),
        })),
    }))
}

struct RowResult {
    label: String,
    expected: Vec<usize>,
    // computed vectors, one per matroid of the row
    computed: Vec<Vec<usize>>,
}

impl RowResult {
    fn matches(&self) -> bool {
        self.computed.iter().all(|c| *c == self.expected)
    }

    fn shown(&self) -> &[usize] {
        self.computed
            .iter()
            .find(|c| **c != self.expected)
            .unwrap_or(&self.computed[0])
    }
}

fn cmd_table1(format: Format, max_n: usize) -> Result<Outcome, Failure> {
    let rows: Vec<Table1Row> = corpus::table1()?;
    if let Some(big) = rows.iter().flat_map(|r| &r.matroids).find(|m| m.n() > max_n) {
        check_cap(big, max_n)?;
    }
    let results: Vec<RowResult> = rows
        .par_iter()
        .map(|row| {
            let computed = row
                .matroids
                .iter()
                .map(|m| Ok(RankNullityRing::with_limit(m, max_n)?.hilbert().values))
                .collect::<Result<Vec<_>, RankNullityError>>()?;
            Ok(RowResult {
                label: row.label.clone(),
                expected: row.expected.clone(),
                computed,
            })
        })
        .collect::<Result<_, RankNullityError>>()?;
    let ok = results.iter().all(RowResult::matches);
    let text = match format {
        Format::Pretty => {
            let width = results.iter().map(|r| r.label.len()).max().unwrap_or(0);
            let mut out = String::new();
            for r in &results {
                let status = if r.matches() { "ok" } else { "MISMATCH" };
                let _ = write!(out, "{:<width$}  ({})", r.label, join(r.shown()));
                if !r.matches() {
                    let _ = write!(out, "  expected ({})", join(&r.expected));
                }
                let _ = writeln!(out, "  {status}");
            }
            let bad = results.iter().filter(|r| !r.matches()).count();
            let _ = writeln!(out, "{} rows, {} mismatched", results.len(), bad);
            out
        }
        Format::Csv => {
            let mut out = String::from("label,status,computed,expected\n");
            for r in &results {
                let status = if r.matches() { "ok" } else { "mismatch" };
                let _ = writeln!(
                    out,
                    "{},{status},{},{}",
                    csv_label(&r.label),
                    r.shown().iter().map(ToString::to_string).collect::<Vec<_>>().join(" "),
                    r.expected.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
                );
            }
            out
        }
        Format::Json => json_text(&json!({
            "rows": results.iter().map(|r| json!({
                "label": r.label,
                "computed": r.shown(),
                "expected": r.expected,
                "match": r.matches(),
            })).collect::<Vec<_>>(),
            "all_match": ok,
        })),
    };
    Ok(Outcome { text, ok })
}

fn chain_text(chain: impl Iterator<Item = u32>) -> String {
    chain.map(format_subset).collect::<Vec<_>>().join("|")
}

fn element_csv(e: &ChowElement) -> String {
    let mut out = String::from("coeff,chain,powers\n");
    for (mono, c) in e.terms() {
        let powers: Vec<String> = mono.factors().iter().map(|f| f.1.to_string()).collect();
        let _ = writeln!(out, "{c},{},{}", chain_text(mono.chain()).replace(',', " "), powers.join(" "));
    }
    out
}

/// Groups the terms of a raw class by rank sequence and powers.
fn shape_summary(m: &Matroid, e: &ChowElement, side: ChernSide) -> String {
    let mut shapes: BTreeMap<Vec<(usize, u32)>, BTreeMap<String, usize>> = BTreeMap::new();
    for (mono, c) in e.terms() {
        let shape = mono.factors().iter().map(|&(s, p)| (side.value(m, s), p)).collect();
        *shapes.entry(shape).or_default().entry(c.to_string()).or_default() += 1;
    }
    let value = match side {
        ChernSide::Sub => "rank",
        ChernSide::Quot => "nullity",
    };
    let mut out = String::new();
    for (shape, coeffs) in shapes {
        let factors: Vec<String> = shape
            .iter()
            .map(|(v, p)| if *p == 1 { format!("x[{value} {v}]") } else { format!("x[{value} {v}]^{p}") })
            .collect();
        let cs: Vec<String> = coeffs.iter().map(|(c, count)| format!("{c} x{count}")).collect();
        let _ = writeln!(out, "  {}: {}", factors.join("*"), cs.join(", "));
    }
    out
}

fn cmd_chern(
    source: &Source,
    side: ChernSide,
    k: usize,
    raw: bool,
    cross_check: bool,
    format: Format,
    max_n: usize,
) -> Result<Outcome, Failure> {
    let m = load(&source.builtin, &source.matroid)?;
    check_cap(&m, max_n)?;
    let closed = chern_closed_form(&m, side, k)?;
    let shown = if raw { closed.clone() } else { closed.normal_form()? };
    let comparison = if cross_check {
        Some(compare_chern_routes(&m, side, k)?)
    } else {
        None
    };
    let ok = comparison.as_ref().is_none_or(|c| c.agree());
    let text = match format {
        Format::Pretty => {
            let mut out = format!("c_{k}({side}) of {}{}:\n{shown}\n", m.label(), if raw { " (raw)" } else { "" });
            if raw && !shown.is_zero() {
                out.push_str("terms by shape:\n");
                out.push_str(&shape_summary(&m, &shown, side));
            }
            if let Some(c) = &comparison {
                out.push_str(if c.agree() {
                    "3 routes agree\n"
                } else {
                    "routes disagree\n"
                });
                if !c.agree() {
                    let _ = writeln!(
                        out,
                        "  closed = product: {}\n  closed = y-expansion: {}",
                        c.closed_equals_product, c.closed_equals_y
                    );
                }
            }
            out
        }
        Format::Csv => element_csv(&shown),
        Format::Json => {
            let mut v = json!({
                "matroid": m.label(),
                "bundle": side.symbol(),
                "k": k,
                "raw": raw,
                "class": shown.to_json()?,
            });
            if let Some(c) = &comparison {
                v["cross_check"] = json!({
                    "closed_equals_product": c.closed_equals_product,
                    "closed_equals_y": c.closed_equals_y,
                    "agree": c.agree(),
                });
            }
            json_text(&v)
        }
    };
    Ok(Outcome { text, ok })
}

fn cmd_csm(source: &Source, k: usize, format: Format, max_n: usize) -> Result<Outcome, Failure> {
    let m = load(&source.builtin, &source.matroid)?;
    check_cap(&m, max_n)?;
    let ring = matroid_ring(&m)?;
    let w = csm_weights(&ring, k)?;
    let balanced = balancing_check(&w);
    let text = match format {
        Format::Json => {
            let mut v = w.to_json();
            v["balanced"] = json!(balanced);
            json_text(&v)
        }
        Format::Csv => {
            let mut out = String::from("chain,w\n");
            for (chain, weight) in &w.weights {
                let _ = writeln!(out, "{},{weight}", chain_text(chain.iter().copied()).replace(',', " "));
            }
            out
        }
        Format::Pretty => {
            let mut out = format!("csm_{}({}) from ch_{k}:\n", w.dim, m.label());
            for (chain, weight) in &w.weights {
                let c = if chain.is_empty() { "()".to_string() } else { chain_text(chain.iter().copied()) };
                let _ = writeln!(out, "  {c}  {weight}");
            }
            let _ = writeln!(out, "balanced: {balanced}");
            out
        }
    };
    Ok(Outcome { text, ok: balanced })
}

fn cmd_gb_check(n: usize, format: Format, max_n: usize) -> Result<Outcome, Failure> {
    if n == 0 {
        return Err(Failure::Input("n must be at least 1".into()));
    }
    if n > max_n {
        return Err(Failure::Cap(format!("n = {n} exceeds --max-n {max_n}")));
    }
    let report = gb_check(n)?;
    let text = match format {
        Format::Json | Format::Pretty => {
            json_text(&serde_json::to_value(&report).expect("serializable"))
        }
        Format::Csv => {
            let mut out = String::from("degree,standard,nondivisible,expected,independent_rank\n");
            for d in &report.degrees {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{}",
                    d.degree, d.standard, d.nondivisible, d.expected, d.independent_rank
                );
            }
            out
        }
    };
    Ok(Outcome { text, ok: report.ok })
}

fn cmd_basis(n: usize, degree: &str, format: Format) -> Result<Outcome, Failure> {
    if n == 0 {
        return Err(Failure::Input("n must be at least 1".into()));
    }
    if n > MAX_BASIS_N {
        return Err(Failure::Cap(format!("n = {n} exceeds {MAX_BASIS_N}")));
    }
    let basis = standard_basis(n);
    let degrees: Vec<usize> = if degree == "all" {
        (0..basis.by_degree.len()).collect()
    } else {
        let d: usize = degree
            .parse()
            .map_err(|_| Failure::Input(format!("degree must be a number or \"all\", got {degree:?}")))?;
        if d >= basis.by_degree.len() {
            return Err(Failure::Input(format!("degree {d} outside 0..={}", n - 1)));
        }
        vec![d]
    };
    let text = match format {
        Format::Pretty => {
            let mut out = String::new();
            for &d in &degrees {
                let names: Vec<String> = basis.by_degree[d].iter().map(ToString::to_string).collect();
                let _ = writeln!(out, "degree {d} ({}): {}", names.len(), names.join(" "));
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("degree,monomial,exponents\n");
            for &d in &degrees {
                for mono in &basis.by_degree[d] {
                    let exps: Vec<String> = mono.0.iter().map(ToString::to_string).collect();
                    let _ = writeln!(out, "{d},{mono},{}", exps.join(" "));
                }
            }
            out
        }
        Format::Json => json_text(&json!({
            "n": n,
            "degrees": degrees.iter().map(|&d| json!({
                "degree": d,
                "monomials": basis.by_degree[d].iter().map(ToString::to_string).collect::<Vec<_>>(),
                "exponents": basis.by_degree[d].iter().map(|m| m.0.clone()).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })),
    };
    Ok(Outcome::ok(text))
}

fn cmd_census(source: &Source, format: Format, max_n: usize) -> Result<Outcome, Failure> {
    let m = load(&source.builtin, &source.matroid)?;
    check_cap(&m, max_n)?;
    let c = degree1_relation_census(&m)?;
    let text = match format {
        Format::Json => {
            let mut v = serde_json::to_value(&c).expect("serializable");
            v["matroid"] = json!(m.label());
            v["holds"] = json!(c.holds());
            json_text(&v)
        }
        Format::Csv => format!(
            "matroid,generators,rank,expected_rank,free_plus_loops,holds\n{},{},{},{},{},{}\n",
            csv_label(m.label()),
            c.generators,
            c.rank,
            c.expected_rank,
            c.free_plus_loops,
            c.holds()
        ),
        Format::Pretty => {
            let vanishing: Vec<String> = c.vanishing.iter().map(|(i, j)| format!("({i},{j})")).collect();
            format!(
                "{}: {} generators, degree-1 rank {} (expected {}){}\nvanishing y: {}\nflat bound: {}\n",
                m.label(),
                c.generators,
                c.rank,
                c.expected_rank,
                if c.free_plus_loops { ", free plus loops" } else { "" },
                vanishing.join(" "),
                if c.matches_flat_bound { "matches" } else { "differs" },
            )
        }
    };
    Ok(Outcome { text, ok: c.holds() })
}

fn cmd_lefschetz(source: &Source, format: Format, max_n: usize) -> Result<Outcome, Failure> {
    let m = load(&source.builtin, &source.matroid)?;
    let rn = RankNullityRing::with_limit(&m, max_n)?;
    let report = rn.lefschetz()?;
    let ok = report.injective();
    let text = match format {
        Format::Json => {
            let mut v = serde_json::to_value(&report).expect("serializable");
            v["matroid"] = json!(m.label());
            v["injective"] = json!(ok);
            json_text(&v)
        }
        Format::Csv => {
            let mut out = String::from("q,source_rank,image_rank\n");
            for s in &report.steps {
                let _ = writeln!(out, "{},{},{}", s.q, s.source_rank, s.image_rank);
            }
            out
        }
        Format::Pretty => {
            let mut out = format!("{}: hilbert {}\n", m.label(), rn.hilbert());
            for s in &report.steps {
                let _ = writeln!(out, "  R^{} -> R^{}: rank {} -> {}", s.q, s.q + 1, s.source_rank, s.image_rank);
            }
            let _ = writeln!(out, "injective: {ok}");
            out
        }
    };
    Ok(Outcome { text, ok })
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let fmt = |default| cli.format.unwrap_or(default);
    match &cli.command {
        Command::Hilbert { source } => cmd_hilbert(source, fmt(Format::Pretty), cli.max_n),
        Command::Chern {
            source,
            bundle,
            k,
            raw,
            cross_check,
        } => cmd_chern(source, *bundle, *k, *raw, *cross_check, fmt(Format::Pretty), cli.max_n),
        Command::Csm { source, k } => cmd_csm(source, *k, fmt(Format::Json), cli.max_n),
        Command::GbCheck { n } => cmd_gb_check(*n, fmt(Format::Json), cli.max_n),
        Command::Basis { n, degree } => cmd_basis(*n, degree, fmt(Format::Pretty)),
        Command::Census { source } => cmd_census(source, fmt(Format::Pretty), cli.max_n),
        Command::Lefschetz { source } => cmd_lefschetz(source, fmt(Format::Pretty), cli.max_n),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if cli.jobs > 0 {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build_global();
    }
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(Failure::Mismatch.code())
            }
        }
        Err(f) => {
            match &f {
                Failure::Input(msg) => eprintln!("error: {msg}"),
                Failure::Cap(msg) => eprintln!("resource cap: {msg}"),
                Failure::Mismatch => {}
            }
            ExitCode::from(f.code())
        }
    }
}
