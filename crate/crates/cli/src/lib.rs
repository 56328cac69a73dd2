//! `hls-lab`: compute, expand, verify, census and export.
//!
//! Every report is a JSON line. Exit codes: 0 success, 1 failed
//! verification, 2 usage error.

use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use hls_core::algebra::{rat_equal, Kind, Monomial, Poly, RatFunc, Var};
use hls_core::hls::{
    coarse_chain_numerator, coarsen, depth_conjecture, eulerian, h_minus_first_prediction, h_minus_sum_prediction,
    h_vector, hls_by_tableaux, hls_series, hls_series_with, linear_terms, numerator_by_tableaux, special_value_y,
    verify_functional_equation, verify_functional_equation_rational, HlsSeries, DEFAULT_BOUND,
};
use hls_core::oracle::{self, census, verify_extensions, verify_fnt, verify_series_coefficients, ExtensionKind, GroupBy, Target};
use hls_core::par::{self, Strategy};
use hls_core::poset::{bruhat_iso_check, chain_census, thrall_count};
use hls_core::special::{self, AffineKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "hls-lab", version, about = "Hall-Littlewood-Schubert series: exact computation and verification")]
pub struct Cli {
    /// Accepted for harness compatibility; every computation is deterministic.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute a series as a rational function.
    Compute(SeriesArgs),
    /// Expand a series to a degree bound and list coefficients.
    Expand {
        #[command(flatten)]
        series: SeriesArgs,
        /// Total degree bound in the series variables (all but q and Y).
        #[arg(long, default_value_t = 3)]
        bound: i64,
    },
    /// Run named checks.
    Verify(VerifyArgs),
    /// Count sublattices of Z_p^n by tableaux, Hermite composition and type.
    Census(CensusArgs),
    /// Write a series to a file (or standard output).
    Export {
        #[command(flatten)]
        series: SeriesArgs,
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum SeriesName {
    Hls,
    AffsIn,
    AffsPr,
    Hs,
    Hecke,
    HeckeNum,
    Quiver,
    Coarse,
    Igusa,
    WeakOrder,
    Gsp,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Latex,
}

#[derive(Args, Debug)]
struct SeriesArgs {
    #[arg(long, value_enum, default_value_t = SeriesName::Hls)]
    series: SeriesName,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Check name; see `--list`.
    #[arg(long, conflicts_with = "all")]
    check: Option<String>,
    /// Run the whole suite.
    #[arg(long)]
    all: bool,
    /// With `--all`: only n <= 3 and small lattice censuses.
    #[arg(long, requires = "all")]
    fast: bool,
    /// Print the available checks.
    #[arg(long)]
    list: bool,
    #[arg(long, default_value_t = 3)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    p: u64,
    #[arg(long = "max-index-exp", default_value_t = 4)]
    max_index_exp: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum CensusFormat {
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct CensusArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    p: u64,
    #[arg(long = "max-index-exp")]
    max_index_exp: usize,
    #[arg(long = "group-by", default_value = "all", value_parser = ["tableau", "delta", "type", "all"])]
    group_by: String,
    #[arg(long, value_enum, default_value_t = CensusFormat::Json)]
    format: CensusFormat,
    /// Output file; standard output if absent.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

/// A usage error naming the offending flag.
#[derive(Debug)]
struct Usage(String);

fn usage(flag: &str, msg: impl std::fmt::Display) -> Usage {
    Usage(format!("{flag}: {msg}"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Status {
    Pass,
    Fail,
    ConjectureConsistent,
    ConjectureInconsistent,
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::ConjectureConsistent => "conjecture-consistent",
            Status::ConjectureInconsistent => "conjecture-inconsistent",
        }
    }

    fn failed(self) -> bool {
        matches!(self, Status::Fail | Status::ConjectureInconsistent)
    }
}

fn pass(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

fn conjecture(ok: bool) -> Status {
    if ok {
        Status::ConjectureConsistent
    } else {
        Status::ConjectureInconsistent
    }
}

pub const CHECKS: &[(&str, &str)] = &[
    ("functional-equation", "numerator reciprocity, polynomial and rational forms"),
    ("tableau-sum", "numerator and series against the direct sums over tableaux"),
    ("no-linear-terms", "numerator has no terms linear in the X variables"),
    ("parallel-agreement", "sequential and parallel numerators agree"),
    ("coarse", "coarsened series against the chain count"),
    ("y-zero", "Y = 0 h-vector sums to the maximal-chain count"),
    ("y-one", "Y = 1 coarsening is the Eulerian series"),
    ("littlewood", "Littlewood-type products at X = 1"),
    ("reciprocity", "affine Schubert and Hecke functional equations"),
    ("hecke-invariance", "Hecke series under the hyperoctahedral group"),
    ("hecke-vanishing", "Hecke numerator degree and vanishing coefficients"),
    ("hecke-palindromic", "Hecke numerator palindromy"),
    ("upsilon", "Hermite-Smith series through the affine Schubert series"),
    ("bgs", "symplectic integral against the descent form"),
    ("igusa", "Igusa function through the Hermite-Smith series"),
    ("weak-order", "weak-order zeta function"),
    ("zeta", "subgroup zeta function specialization"),
    ("fnT", "lattice census against the tableau formulas (uses --p, --max-index-exp)"),
    ("series-affs-in", "census against affine Schubert coefficients, intersection type"),
    ("series-affs-pr", "census against affine Schubert coefficients, projection type"),
    ("series-hs", "census against Hermite-Smith coefficients"),
    ("extensions-in", "exhaustive intersection extension counts (uses --p, --max-index-exp)"),
    ("extensions-pr", "exhaustive projection extension counts"),
    ("poset", "gradedness, rank and maximal chains of the tableau poset"),
    ("bruhat", "tableau poset against the Bruhat quotient"),
    ("conjecture-depth", "Y = 0 h-vector positivity, vanishing and palindromy (data only)"),
    ("conjecture-y-minus-one", "Y = -1 h-vector first entry and sum (data only)"),
];

fn series(n: usize) -> Result<HlsSeries, Usage> {
    hls_series(n).map_err(|e| usage("--n", e))
}

fn need(n: usize, max: usize) -> Result<(), Usage> {
    if n == 0 || n > max {
        return Err(usage("--n", format!("must be between 1 and {max} for this check")));
    }
    Ok(())
}

fn special_ok<T>(r: Result<T, hls_core::hls::HlsError>) -> Result<T, Usage> {
    r.map_err(|e| usage("--n", e))
}

fn oracle_err(e: oracle::OracleError) -> Usage {
    match e {
        oracle::OracleError::NotPrime(_) => usage("--p", e),
        _ => usage("--max-index-exp", e),
    }
}

fn run_check(name: &str, n: usize, p: u64, b: usize) -> Result<(Status, Value), Usage> {
    let census_target = |t: Target| -> Result<(Status, Value), Usage> {
        need(n, 4)?;
        let c = census(n, p, b).map_err(oracle_err)?;
        let r = verify_series_coefficients(&c, t).map_err(oracle_err)?;
        Ok((pass(r.ok()), json!({"compared": r.compared, "mismatches": r.mismatches})))
    };
    let extensions = |k: ExtensionKind| -> Result<(Status, Value), Usage> {
        need(n, 4)?;
        let r = verify_extensions(n, p, b, k).map_err(oracle_err)?;
        Ok((pass(r.ok()), json!({"compared": r.compared, "mismatches": r.mismatches})))
    };
    let none = Value::Null;
    Ok(match name {
        "functional-equation" => {
            let s = series(n)?;
            let ok = special_ok(verify_functional_equation(&s))? && special_ok(verify_functional_equation_rational(&s))?;
            (pass(ok), none)
        }
        "tableau-sum" => {
            let s = series(n)?;
            let poly = s.numerator == numerator_by_tableaux(n);
            // The rational sum grows too fast beyond n = 3.
            let rational = n > 3 || rat_equal(&s.ratfunc(), &hls_by_tableaux(n));
            (pass(poly && rational), json!({"rational_route": n <= 3}))
        }
        "no-linear-terms" => (pass(linear_terms(&series(n)?).is_empty()), none),
        "parallel-agreement" => {
            let a = hls_series_with(n, DEFAULT_BOUND, Strategy::Sequential).map_err(|e| usage("--n", e))?;
            let b = hls_series_with(n, DEFAULT_BOUND, Strategy::Parallel).map_err(|e| usage("--n", e))?;
            (pass(a.numerator == b.numerator && a.denominator() == b.denominator()), none)
        }
        "coarse" => {
            let chains = special_ok(coarse_chain_numerator(n, DEFAULT_BOUND))?;
            (pass(rat_equal(&coarsen(&series(n)?), &chains.ratfunc())), none)
        }
        "y-zero" => {
            need(n, 6)?;
            let h = special_ok(h_vector(n, 0, 6))?;
            let sum: BigInt = h.iter().sum();
            (pass(sum == thrall_count(n)), json!({"h": h.iter().map(|c| c.to_string()).collect::<Vec<_>>()}))
        }
        "y-one" => {
            need(n, 6)?;
            let x = Var::big_x();
            let f = special_ok(special_value_y(&special_ok(coarse_chain_numerator(n, 6))?.ratfunc(), 1))?;
            let e = RatFunc::new(Poly::from_univariate(x, &eulerian(n)), vec![Monomial::var(x); n]).expect("X is not 1");
            (pass(rat_equal(&f, &e)), none)
        }
        "littlewood" => {
            let r = special_ok(special::littlewood_checks(&series(n)?))?;
            (pass(r.schur_identity && r.x1_product), json!({"schur": r.schur_identity, "x1": r.x1_product}))
        }
        "reciprocity" => {
            let r = special_ok(special::reciprocity_checks(&series(n)?))?;
            (pass(r.affs_in && r.affs_pr && r.hecke), json!({"affs_in": r.affs_in, "affs_pr": r.affs_pr, "hecke": r.hecke}))
        }
        "hecke-invariance" => (pass(special_ok(special::hecke_b_invariance(&series(n)?))?), none),
        "hecke-vanishing" => {
            let v = special_ok(special::hecke_vanishing(&series(n)?))?;
            (pass(v.degree_ok && v.linear_zero && v.second_highest_but_one_zero), json!({"degree": v.degree}))
        }
        "hecke-palindromic" => (pass(special_ok(special::hecke_palindromic(&series(n)?))?), none),
        "upsilon" => (pass(special_ok(special::upsilon_check(&series(n)?))?), none),
        "bgs" => (pass(special_ok(special::bgs_check(&series(n)?))?), none),
        "igusa" => (pass(special_ok(special::igusa_check(&series(n)?))?), none),
        "weak-order" => (pass(special_ok(special::weak_order_check(&series(n)?))?), none),
        "zeta" => (pass(special_ok(special::zeta_check(&series(n)?))?), none),
        "fnT" => {
            need(n, 4)?;
            let c = census(n, p, b).map_err(oracle_err)?;
            let r = verify_fnt(&c);
            (pass(r.ok()), json!({"lattices": c.total(), "compared": r.compared, "mismatches": r.mismatches}))
        }
        "series-affs-in" => census_target(Target::AffsIn)?,
        "series-affs-pr" => census_target(Target::AffsPr)?,
        "series-hs" => census_target(Target::Hs)?,
        "extensions-in" => extensions(ExtensionKind::Intersection)?,
        "extensions-pr" => extensions(ExtensionKind::Projection)?,
        "poset" => {
            let c = chain_census(n, 6).map_err(|e| usage("--n", e))?;
            let ok = c.graded && c.rank + 1 == n * (n + 1) / 2 && c.maximal_chains == thrall_count(n);
            (pass(ok), json!({"rank": c.rank, "maximal_chains": c.maximal_chains.to_string()}))
        }
        "bruhat" => {
            let r = bruhat_iso_check(n).map_err(|e| usage("--n", e))?;
            (pass(r.ok()), json!({"quotient_size": r.quotient_size}))
        }
        "conjecture-depth" => {
            need(n, 6)?;
            (conjecture(depth_conjecture(n, &special_ok(h_vector(n, 0, 6))?)), none)
        }
        "conjecture-y-minus-one" => {
            need(n, 6)?;
            let h = special_ok(h_vector(n, -1, 6))?;
            let sum: BigInt = h.iter().sum();
            let first = n < 2 || h.get(1).cloned().unwrap_or_default() == h_minus_first_prediction(n);
            let literal = h_minus_sum_prediction(n) == Some(sum.clone());
            let shifted = h_minus_sum_prediction(n + 1) == Some(sum.clone());
            (
                conjecture(first && shifted),
                json!({"sum": sum.to_string(), "first_entry": first, "sum_formula_at_n": literal, "sum_formula_at_n_plus_1": shifted}),
            )
        }
        _ => return Err(usage("--check", format!("unknown check {name:?}; see `verify --list`"))),
    })
}

/// The `--all` plan: `(check, n, p, max-index-exp)`.
fn suite(fast: bool) -> Vec<(&'static str, usize, u64, usize)> {
    let top = if fast { 3 } else { 4 };
    let mut plan = Vec::new();
    for n in 1..=top {
        for c in [
            "functional-equation",
            "tableau-sum",
            "no-linear-terms",
            "coarse",
            "y-zero",
            "y-one",
            "hecke-vanishing",
            "hecke-palindromic",
            "igusa",
            "weak-order",
            "poset",
            "bruhat",
            "conjecture-depth",
            "conjecture-y-minus-one",
        ] {
            plan.push((c, n, 2, 0));
        }
    }
    for n in 1..=3 {
        for c in ["littlewood", "reciprocity", "hecke-invariance", "upsilon", "bgs", "zeta"] {
            plan.push((c, n, 2, 0));
        }
    }
    let lattice: &[(usize, u64, usize)] = if fast { &[(2, 2, 4), (3, 2, 3)] } else { &[(2, 2, 5), (2, 3, 5), (3, 2, 5), (3, 3, 5)] };
    for &(n, p, b) in lattice {
        for c in ["fnT", "series-affs-in", "series-affs-pr", "series-hs", "extensions-in", "extensions-pr"] {
            plan.push((c, n, p, b));
        }
    }
    plan
}

fn report(out: &mut dyn Write, name: &str, n: usize, status: Status, t0: Instant, detail: Value) -> std::io::Result<()> {
    let mut line = json!({"check": name, "n": n, "status": status.label(), "millis": t0.elapsed().as_millis() as u64});
    if !detail.is_null() {
        line["detail"] = detail;
    }
    writeln!(out, "{line}")
}

fn verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32, Usage> {
    if args.list {
        for (name, about) in CHECKS {
            writeln!(out, "{}", json!({"check": name, "about": about})).ok();
        }
        return Ok(EXIT_OK);
    }
    let plan = if args.all {
        suite(args.fast)
    } else if let Some(c) = &args.check {
        vec![(c.as_str(), args.n, args.p, args.max_index_exp)]
    } else {
        return Err(usage("--check", "one of --check, --all or --list is required"));
    };
    let mut failed = false;
    for (name, n, p, b) in plan {
        let t0 = Instant::now();
        let (status, detail) = run_check(name, n, p, b)?;
        failed |= status.failed();
        report(out, name, n, status, t0, detail).ok();
    }
    Ok(if failed { EXIT_FAILED } else { EXIT_OK })
}

fn compute(a: &SeriesArgs) -> Result<(RatFunc, Option<HlsSeries>), Usage> {
    let n = a.n;
    let s = || series(n);
    let f = match a.series {
        SeriesName::Hls => {
            let s = s()?;
            return Ok((s.ratfunc(), Some(s)));
        }
        SeriesName::AffsIn => special_ok(special::affine_schubert(&s()?, AffineKind::Intersection))?,
        SeriesName::AffsPr => special_ok(special::affine_schubert(&s()?, AffineKind::Projection))?,
        SeriesName::Hs => special_ok(special::hermite_smith(&s()?))?,
        SeriesName::Hecke => special_ok(special::hecke_series(&s()?))?,
        SeriesName::HeckeNum => RatFunc::from_poly(special_ok(special::hecke_numerator(&s()?))?),
        SeriesName::Quiver => special_ok(special::quiver_zeta(&s()?))?,
        SeriesName::Coarse => {
            need(n, 6)?;
            special_ok(coarse_chain_numerator(n, 6))?.ratfunc()
        }
        SeriesName::Igusa => {
            need(n, 8)?;
            special::igusa(n)
        }
        SeriesName::WeakOrder => special_ok(special::weak_order_zeta(n))?,
        SeriesName::Gsp => special_ok(special::symplectic_integral(&s()?))?,
    };
    Ok((f, None))
}

fn render(a: &SeriesArgs, f: &RatFunc, s: Option<&HlsSeries>) -> String {
    let name = a.series.to_possible_value().expect("named variant").get_name().to_string();
    match (a.format, s) {
        (Format::Latex, Some(s)) => format!("{}\\quad D_{} = {}", s.to_latex(), a.n, denominator_latex(f)),
        (Format::Latex, None) => f.to_latex(),
        (Format::Json, Some(s)) => json!({"series": name, "n": a.n, "value": s.to_json()}).to_string(),
        (Format::Json, None) => json!({"series": name, "n": a.n, "value": f.to_json()}).to_string(),
    }
}

fn denominator_latex(f: &RatFunc) -> String {
    f.denominator().iter().map(|m| format!("(1 - {})", Poly::term(1, m.clone()).to_latex())).collect::<String>()
}

/// Variables treated as coefficients when expanding.
fn is_coefficient(v: Var) -> bool {
    matches!(v.kind(), Kind::Y | Kind::Q)
}

fn expand(a: &SeriesArgs, bound: i64, out: &mut dyn Write) -> Result<i32, Usage> {
    if bound < 0 {
        return Err(usage("--bound", "must be nonnegative"));
    }
    let (f, _) = compute(a)?;
    let p = f.series_expand(&|v| !is_coefficient(v), bound).map_err(|e| usage("--series", e))?;
    for (m, c) in p.terms() {
        let mono = Poly::term(1, m.restrict(&|v| !is_coefficient(v)));
        let coeff = Poly::term(c.clone(), m.restrict(&is_coefficient));
        writeln!(out, "{}", json!({"monomial": mono.to_string(), "coefficient": coeff.to_string()})).ok();
    }
    Ok(EXIT_OK)
}

fn run_census(a: &CensusArgs, out: &mut dyn Write) -> Result<i32, Usage> {
    if a.n == 0 || a.n > 4 {
        return Err(usage("--n", "must be between 1 and 4"));
    }
    let by: GroupBy = a.group_by.parse().map_err(|e| usage("--group-by", e))?;
    let c = census(a.n, a.p, a.max_index_exp).map_err(oracle_err)?;
    let text = match a.format {
        CensusFormat::Csv => c.to_csv(by),
        CensusFormat::Json => {
            let mut s = String::new();
            for (key, count) in c.grouped(by) {
                s.push_str(&json!({"key": key, "count": count}).to_string());
                s.push('\n');
            }
            s.push_str(&json!({"n": c.n, "p": c.p, "max_index_exp": c.bound, "total": c.total()}).to_string());
            s.push('\n');
            s
        }
    };
    emit(&a.out, &text, out)?;
    Ok(EXIT_OK)
}

fn emit(path: &Option<std::path::PathBuf>, text: &str, out: &mut dyn Write) -> Result<(), Usage> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| usage("--out", e)),
        None => {
            out.write_all(text.as_bytes()).ok();
            Ok(())
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, Usage> {
    match &cli.command {
        Command::Compute(a) => {
            let (f, s) = compute(a)?;
            writeln!(out, "{}", render(a, &f, s.as_ref())).ok();
            Ok(EXIT_OK)
        }
        Command::Expand { series, bound } => expand(series, *bound, out),
        Command::Verify(a) => verify(a, out),
        Command::Census(a) => run_census(a, out),
        Command::Export { series, out: path } => {
            let (f, s) = compute(series)?;
            emit(path, &(render(series, &f, s.as_ref()) + "\n"), out)?;
            Ok(EXIT_OK)
        }
    }
}

fn configure_threads() -> Result<(), Usage> {
    if let Ok(v) = std::env::var("HLS_LAB_THREADS") {
        let n: usize = v.parse().ok().filter(|&n| n > 0).ok_or_else(|| usage("HLS_LAB_THREADS", "must be a positive integer"))?;
        // A second call in the same process keeps the first pool.
        let _ = par::set_threads(n);
    }
    Ok(())
}

/// Parse `args` (including the program name) and run; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            if e.use_stderr() {
                write!(err, "{e}").ok();
            } else {
                write!(out, "{e}").ok();
            }
            return code;
        }
    };
    match configure_threads().and_then(|_| dispatch(&cli, out)) {
        Ok(code) => code,
        Err(Usage(msg)) => {
            writeln!(err, "error: {msg}").ok();
            EXIT_USAGE
        }
    }
}
