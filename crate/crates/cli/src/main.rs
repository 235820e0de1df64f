//! Command-line front end: discriminants, monogenicity verdicts, family
//! search, local-obstruction scans, density estimates, and a built-in
//! regression suite, with optional single-document JSON output.

mod polyparse;
mod verify;

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use monotri::disc::{disc_power, disc_power_factored, PowerTrinomial, Trinomial};
use monotri::families::{density_c, empirical_density, obstruction_scan, search_t, FamilyParams};
use monotri::integers::{Effort, IntFactorization};
use monotri::monogenic::{is_monogenic, MonoInput, Strategy, Verdict};
use monotri::Error;

const EFFORT_ENV: &str = "MONOTRI_EFFORT";

const AFTER_HELP: &str = "\
Environment:
  MONOTRI_EFFORT  Pollard-rho iteration budget per factorization attempt
                  (default 4000000; raise it for stubborn discriminants)

Exit codes:
  0  success (monogenic, where a verdict is the point)
  1  not monogenic, reducible, or failed verification
  2  invalid flags or inputs
  3  factorization effort budget exceeded
  4  verdict undecided
  5  family search exhausted";

#[derive(Parser)]
#[command(
    name = "monotri",
    version,
    about = "Irreducibility, monogenicity, and squarefree-density tools for \
             trinomials x^m + Ax^(m-1) + B and their compositions F(x^(p^n))",
    after_help = AFTER_HELP
)]
struct Cli {
    /// Machine output: one JSON document on stdout, byte-identical for
    /// identical invocations.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// D and the discriminant of F(x^(p^n)), fully factored.
    Disc(DiscArgs),
    /// Decide monogenicity of a trinomial composition or an explicit polynomial.
    Check(CheckArgs),
    /// Search prime values of t for certified family members.
    Search(SearchArgs),
    /// Scan the family's G(t) = B(t) D(t) for local obstructions.
    Obstruction(FamilyArgs),
    /// Truncated density product for squarefree G(t) over prime t.
    Density(DensityArgs),
    /// Run the built-in regression suite.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct DiscArgs {
    /// Degree m of the base trinomial (m >= 2).
    #[arg(long)]
    m: u32,
    /// Coefficient A of x^(m-1).
    #[arg(long = "A", allow_hyphen_values = true)]
    a: BigInt,
    /// Constant term B (nonzero).
    #[arg(long = "B", allow_hyphen_values = true)]
    b: BigInt,
    /// Composition prime p; omit for the base trinomial itself.
    #[arg(long)]
    p: Option<u64>,
    /// Composition exponent n (defaults to 1 when --p is given).
    #[arg(long)]
    n: Option<u32>,
}

#[derive(Args)]
struct CheckArgs {
    /// Degree m of the base trinomial (m >= 2).
    #[arg(long)]
    m: Option<u32>,
    /// Coefficient A of x^(m-1).
    #[arg(long = "A", allow_hyphen_values = true)]
    a: Option<BigInt>,
    /// Constant term B (nonzero).
    #[arg(long = "B", allow_hyphen_values = true)]
    b: Option<BigInt>,
    /// Composition prime p; omit for the base trinomial itself.
    #[arg(long)]
    p: Option<u64>,
    /// Composition exponent n (defaults to 1 when --p is given).
    #[arg(long)]
    n: Option<u32>,
    /// Explicit monic integer polynomial instead of --m/--A/--B,
    /// e.g. "x^2-5" or "x^6+11x^3+7".
    #[arg(long, allow_hyphen_values = true)]
    poly: Option<String>,
    /// Which index criterion to run at each obstructed prime.
    #[arg(long, value_enum, default_value_t = StrategyArg::Both)]
    strategy: StrategyArg,
}

#[derive(Args)]
struct SearchArgs {
    /// Family degree m (>= 2).
    #[arg(long)]
    m: u32,
    /// Odd family prime p (>= 3).
    #[arg(long)]
    p: u64,
    /// Family parameter u.
    #[arg(long, allow_hyphen_values = true)]
    u: BigInt,
    /// How many certificates to collect.
    #[arg(long, default_value_t = 1)]
    count: usize,
    /// Largest prime t to try.
    #[arg(long = "t-max", default_value_t = 100_000)]
    t_max: u64,
}

#[derive(Args)]
struct FamilyArgs {
    /// Family degree m (>= 2).
    #[arg(long)]
    m: u32,
    /// Odd family prime p (>= 3).
    #[arg(long)]
    p: u64,
    /// Family parameter u.
    #[arg(long, allow_hyphen_values = true)]
    u: BigInt,
}

#[derive(Args)]
struct DensityArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Truncation point of the local-factor product.
    #[arg(long = "L", default_value_t = 10_000)]
    l_max: u64,
    /// Also count squarefree G(t) over primes t <= X.
    #[arg(long = "empirical-X")]
    empirical_x: Option<u64>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Run a single section instead of all five.
    #[arg(long, value_enum)]
    filter: Option<SectionArg>,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Jks,
    Dedekind,
    Both,
}

impl StrategyArg {
    fn to_strategy(self) -> Strategy {
        match self {
            StrategyArg::Jks => Strategy::Jks,
            StrategyArg::Dedekind => Strategy::Dedekind,
            StrategyArg::Both => Strategy::Both,
        }
    }

    fn name(self) -> &'static str {
        match self {
            StrategyArg::Jks => "jks",
            StrategyArg::Dedekind => "dedekind",
            StrategyArg::Both => "both",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SectionArg {
    Tables,
    Gamma,
    Binomial,
    Agreement,
    Family,
}

impl SectionArg {
    fn name(self) -> &'static str {
        match self {
            SectionArg::Tables => "tables",
            SectionArg::Gamma => "gamma",
            SectionArg::Binomial => "binomial",
            SectionArg::Agreement => "agreement",
            SectionArg::Family => "family",
        }
    }
}

struct CmdOutput {
    result: Value,
    human: String,
    exit: u8,
}

/// A failed invocation: error kind and exit code, plus any partial result
/// worth reporting (certificates found before exhaustion).
struct Failure {
    kind: &'static str,
    message: String,
    exit: u8,
    partial: Option<Value>,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (kind, exit) = match &e {
            Error::EffortExceeded { .. } => ("effort-exceeded", 3),
            Error::DegreeCapExceeded { .. } => ("degree-cap", 2),
            Error::InvalidInput(_) => ("invalid-input", 2),
            Error::Exhausted { .. } => ("exhausted", 5),
        };
        let partial = match &e {
            Error::Exhausted { found, .. } if !found.is_empty() => {
                Some(json!({ "certificates": found }))
            }
            _ => None,
        };
        Failure {
            kind,
            message: e.to_string(),
            exit,
            partial,
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure {
        kind: "invalid-input",
        message: msg.into(),
        exit: 2,
        partial: None,
    }
}

#[derive(Serialize)]
struct Envelope<'a> {
    tool: &'static str,
    version: &'static str,
    command: &'a str,
    inputs: &'a Value,
    status: &'static str,
    error: Option<ErrInfo<'a>>,
    result: Option<&'a Value>,
}

#[derive(Serialize)]
struct ErrInfo<'a> {
    kind: &'a str,
    message: &'a str,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let effort = match effort_from_env() {
        Ok(e) => e,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let (command, inputs) = describe(&cli.command);
    match dispatch(&cli.command, effort) {
        Ok(out) => {
            if cli.json {
                emit(&Envelope {
                    tool: "monotri",
                    version: env!("CARGO_PKG_VERSION"),
                    command,
                    inputs: &inputs,
                    status: "ok",
                    error: None,
                    result: Some(&out.result),
                });
            } else {
                print!("{}", out.human);
            }
            ExitCode::from(out.exit)
        }
        Err(fail) => {
            if cli.json {
                emit(&Envelope {
                    tool: "monotri",
                    version: env!("CARGO_PKG_VERSION"),
                    command,
                    inputs: &inputs,
                    status: "error",
                    error: Some(ErrInfo {
                        kind: fail.kind,
                        message: &fail.message,
                    }),
                    result: fail.partial.as_ref(),
                });
            } else {
                eprintln!("error: {}", fail.message);
            }
            ExitCode::from(fail.exit)
        }
    }
}

fn emit(envelope: &Envelope) {
    println!(
        "{}",
        serde_json::to_string(envelope).expect("reports serialize")
    );
}

fn effort_from_env() -> Result<Effort, String> {
    match std::env::var(EFFORT_ENV) {
        Ok(v) => v
            .trim()
            .parse::<u64>()
            .map(|rho_iterations| Effort { rho_iterations })
            .map_err(|_| format!("{EFFORT_ENV} must be an unsigned integer, got {v:?}")),
        Err(std::env::VarError::NotPresent) => Ok(Effort::default()),
        Err(e) => Err(format!("{EFFORT_ENV}: {e}")),
    }
}

fn opt_str(x: &Option<BigInt>) -> Option<String> {
    x.as_ref().map(|v| v.to_string())
}

fn describe(cmd: &Cmd) -> (&'static str, Value) {
    match cmd {
        Cmd::Disc(a) => (
            "disc",
            json!({
                "m": a.m, "A": a.a.to_string(), "B": a.b.to_string(),
                "p": a.p, "n": a.n,
            }),
        ),
        Cmd::Check(a) => (
            "check",
            json!({
                "m": a.m, "A": opt_str(&a.a), "B": opt_str(&a.b),
                "p": a.p, "n": a.n, "poly": a.poly,
                "strategy": a.strategy.name(),
            }),
        ),
        Cmd::Search(a) => (
            "search",
            json!({
                "m": a.m, "p": a.p, "u": a.u.to_string(),
                "count": a.count, "t_max": a.t_max,
            }),
        ),
        Cmd::Obstruction(a) => (
            "obstruction",
            json!({ "m": a.m, "p": a.p, "u": a.u.to_string() }),
        ),
        Cmd::Density(a) => (
            "density",
            json!({
                "m": a.family.m, "p": a.family.p, "u": a.family.u.to_string(),
                "L": a.l_max, "empirical_X": a.empirical_x,
            }),
        ),
        Cmd::Verify(a) => (
            "verify",
            json!({ "filter": a.filter.map(SectionArg::name) }),
        ),
    }
}

fn dispatch(cmd: &Cmd, effort: Effort) -> Result<CmdOutput, Failure> {
    match cmd {
        Cmd::Disc(args) => run_disc(args, effort),
        Cmd::Check(args) => run_check(args, effort),
        Cmd::Search(args) => run_search(args, effort),
        Cmd::Obstruction(args) => run_obstruction(args, effort),
        Cmd::Density(args) => run_density(args, effort),
        Cmd::Verify(args) => run_verify(args, effort),
    }
}

/// Resolve the optional composition flags: bare trinomial when both are
/// absent (p is then irrelevant), n defaulting to 1 when only p is given.
fn power_args(p: Option<u64>, n: Option<u32>) -> Result<(u64, u32), Failure> {
    match (p, n) {
        (None, None) => Ok((2, 0)),
        (Some(p), None) => Ok((p, 1)),
        (Some(p), Some(n)) => Ok((p, n)),
        (None, Some(_)) => Err(usage("--n needs --p")),
    }
}

fn fmt_factorization(f: &IntFactorization) -> String {
    let sign = if f.sign < 0 { "-" } else { "" };
    if f.factors.is_empty() {
        return format!("{sign}1");
    }
    let terms: Vec<String> = f
        .factors
        .iter()
        .map(|pp| {
            if pp.exponent == 1 {
                pp.prime.to_string()
            } else {
                format!("{}^{}", pp.prime, pp.exponent)
            }
        })
        .collect();
    format!("{sign}{}", terms.join(" * "))
}

fn run_disc(args: &DiscArgs, effort: Effort) -> Result<CmdOutput, Failure> {
    let (p, n) = power_args(args.p, args.n)?;
    let tri = Trinomial::new(args.m, args.a.clone(), args.b.clone())?;
    let pt = PowerTrinomial::new(tri, p, n)?;
    let data = disc_power(&pt);
    let factors = disc_power_factored(&pt, effort)?;
    let result = json!({
        "trinomial": pt.base(),
        "p": if n == 0 { Value::Null } else { json!(pt.p()) },
        "n": n,
        "degree": pt.expanded_degree(),
        "d": data.d.to_string(),
        "disc": data.disc.to_string(),
        "disc_factors": factors,
    });
    let mut human = String::new();
    writeln!(human, "F = {}", pt.base().to_poly()).unwrap();
    if n > 0 {
        writeln!(
            human,
            "composition F(x^({p}^{n})), degree {}",
            pt.expanded_degree()
        )
        .unwrap();
    }
    writeln!(human, "D    = {}", data.d).unwrap();
    writeln!(human, "disc = {}", data.disc).unwrap();
    writeln!(human, "     = {}", fmt_factorization(&factors)).unwrap();
    Ok(CmdOutput {
        result,
        human,
        exit: 0,
    })
}

fn run_check(args: &CheckArgs, effort: Effort) -> Result<CmdOutput, Failure> {
    let (input, shown) = match (&args.poly, args.m) {
        (Some(_), Some(_)) => return Err(usage("--poly conflicts with --m/--A/--B")),
        (None, None) => return Err(usage("give either --m/--A/--B or --poly")),
        (Some(src), None) => {
            if args.a.is_some() || args.b.is_some() || args.p.is_some() || args.n.is_some() {
                return Err(usage("--poly replaces --m/--A/--B/--p/--n"));
            }
            let f = polyparse::parse_poly(src).map_err(usage)?;
            let shown = f.to_string();
            (MonoInput::Poly(f), shown)
        }
        (None, Some(m)) => {
            let a = args
                .a
                .clone()
                .ok_or_else(|| usage("--A is required with --m"))?;
            let b = args
                .b
                .clone()
                .ok_or_else(|| usage("--B is required with --m"))?;
            let tri = Trinomial::new(m, a, b)?;
            let (p, n) = power_args(args.p, args.n)?;
            if n == 0 {
                let shown = tri.to_poly().to_string();
                (MonoInput::Trinomial(tri), shown)
            } else {
                let pt = PowerTrinomial::new(tri, p, n)?;
                let shown = format!(
                    "{} composed with x^({p}^{n}), degree {}",
                    pt.base().to_poly(),
                    pt.expanded_degree()
                );
                (MonoInput::Power(pt), shown)
            }
        }
    };
    let report = is_monogenic(&input, args.strategy.to_strategy(), effort);
    let exit = match &report.verdict {
        Verdict::Monogenic => 0,
        Verdict::NotMonogenic { .. } | Verdict::Reducible { .. } => 1,
        Verdict::Unknown { .. } => 4,
    };
    let mut human = String::new();
    writeln!(human, "F = {shown}").unwrap();
    if let Some(d) = &report.disc {
        writeln!(human, "disc = {} = {}", d.value, fmt_factorization(d)).unwrap();
    }
    for check in &report.checks {
        let how = match (&check.jks, &check.dedekind) {
            (Some(j), Some(_)) => format!("jks case {} + dedekind", j.case),
            (Some(j), None) => format!("jks case {}", j.case),
            (None, Some(_)) => "dedekind".to_string(),
            (None, None) => "none".to_string(),
        };
        writeln!(
            human,
            "  q = {} (disc exponent {}): {} [{how}]",
            check.q,
            check.disc_exponent,
            if check.passes { "pass" } else { "FAIL" },
        )
        .unwrap();
    }
    let verdict = match &report.verdict {
        Verdict::Monogenic => "monogenic".to_string(),
        Verdict::NotMonogenic { q } => format!("not monogenic (index divisible by {q})"),
        Verdict::Reducible { witness } => format!("reducible ({witness} divides F)"),
        Verdict::Unknown { reason } => format!("unknown ({reason})"),
    };
    writeln!(human, "verdict: {verdict}").unwrap();
    Ok(CmdOutput {
        result: serde_json::to_value(&report).expect("reports serialize"),
        human,
        exit,
    })
}

fn run_search(args: &SearchArgs, effort: Effort) -> Result<CmdOutput, Failure> {
    let params = FamilyParams::new(args.m, args.p, args.u.clone())?;
    let certs = search_t(&params, args.count, args.t_max, effort)?;
    let result = json!({
        "params": params,
        "t_max": args.t_max,
        "certificates": certs,
    });
    let mut human = String::new();
    writeln!(
        human,
        "family m = {}, p = {}, u = {}: {} certificate(s)",
        args.m,
        args.p,
        args.u,
        certs.len()
    )
    .unwrap();
    for cert in &certs {
        writeln!(
            human,
            "t = {}: F = {}, D = {}",
            cert.t,
            cert.trinomial().to_poly(),
            cert.d
        )
        .unwrap();
    }
    Ok(CmdOutput {
        result,
        human,
        exit: 0,
    })
}

fn run_obstruction(args: &FamilyArgs, effort: Effort) -> Result<CmdOutput, Failure> {
    let params = FamilyParams::new(args.m, args.p, args.u.clone())?;
    let g = params.g_poly();
    let report = obstruction_scan(&g, effort)?;
    let result = json!({
        "params": params,
        "g": g,
        "g_display": g.to_string(),
        "report": report,
    });
    let mut human = String::new();
    writeln!(human, "G(t) = {g}").unwrap();
    for local in &report.locals {
        writeln!(
            human,
            "l = {}: rho = {} of bound {}",
            local.ell, local.rho, local.bound
        )
        .unwrap();
    }
    match report.obstruction {
        Some(l) => writeln!(
            human,
            "obstruction at l = {l}: G(t) is divisible by {l}^2 for every prime t"
        )
        .unwrap(),
        None => writeln!(human, "no local obstruction").unwrap(),
    }
    Ok(CmdOutput {
        result,
        human,
        exit: 0,
    })
}

fn run_density(args: &DensityArgs, effort: Effort) -> Result<CmdOutput, Failure> {
    let params = FamilyParams::new(args.family.m, args.family.p, args.family.u.clone())?;
    let g = params.g_poly();
    let estimate = density_c(&g, args.l_max);
    let empirical = match args.empirical_x {
        Some(x) => Some(empirical_density(&g, x, effort)?),
        None => None,
    };
    let result = json!({
        "params": params,
        "g": g,
        "g_display": g.to_string(),
        "estimate": estimate,
        "empirical": empirical,
    });
    let mut human = String::new();
    writeln!(human, "G(t) = {g}").unwrap();
    writeln!(
        human,
        "C_G truncated at L = {}: {:.6} (tail bound {:.6})",
        estimate.l_max, estimate.c, estimate.tail_bound
    )
    .unwrap();
    if let Some(e) = &empirical {
        writeln!(
            human,
            "empirical: {} of {} primes t <= {} give squarefree G(t) (fraction {:.6})",
            e.squarefree_hits, e.primes_tested, e.x_max, e.density
        )
        .unwrap();
    }
    Ok(CmdOutput {
        result,
        human,
        exit: 0,
    })
}

fn run_verify(args: &VerifyArgs, effort: Effort) -> Result<CmdOutput, Failure> {
    let reports = verify::run(args.filter.map(SectionArg::name), effort);
    let passed = reports.iter().all(|r| r.passed());
    let result = json!({ "sections": reports, "passed": passed });
    let mut human = String::new();
    let mut failed = 0;
    for rep in &reports {
        if rep.passed() {
            writeln!(human, "{}: ok ({} checks)", rep.section, rep.checked).unwrap();
        } else {
            failed += 1;
            writeln!(
                human,
                "{}: FAILED ({} of {} checks)",
                rep.section,
                rep.failures.len(),
                rep.checked
            )
            .unwrap();
            for item in rep.failures.iter().take(10) {
                writeln!(human, "  {item}").unwrap();
            }
        }
    }
    if passed {
        writeln!(human, "all sections passed").unwrap();
    } else {
        writeln!(human, "{failed} section(s) failed").unwrap();
    }
    Ok(CmdOutput {
        result,
        human,
        exit: if passed { 0 } else { 1 },
    })
}
