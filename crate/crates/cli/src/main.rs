//! `comspace`: compute, check and export exact Poincaré series of spaces
//! of commuting tuples in compact Lie groups.
//!
//! Exit codes: 0 success, 1 usage or resource errors (bad flags, budget
//! exceeded), 2 verification failure (a computed value disagrees with a
//! prediction or a suite check fails).

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use comspace::analysis::{predicted_top, stability_scan, top_term, TopTerm};
use comspace::invariants::gen_set;
use comspace::poincare::{compute_series, series_formula, series_oracle, Budget, Method};
use comspace::verify::{self, Outcome, SuiteReport};
use comspace::weylgroups::{Family, GroupSpec};
use comspace::{Error, Poly, SeriesRequest};

#[derive(Parser)]
#[command(
    name = "comspace",
    version,
    about = "Exact Poincaré series of spaces of commuting tuples in compact Lie groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    #[value(name = "U", alias = "u")]
    U,
    #[value(name = "SU", alias = "su")]
    Su,
    #[value(name = "Sp", alias = "sp")]
    Sp,
    #[value(name = "SO-odd", alias = "so-odd")]
    SoOdd,
    #[value(name = "SO-even", alias = "so-even")]
    SoEven,
    #[value(name = "G2", alias = "g2")]
    G2,
    #[value(name = "F4", alias = "f4")]
    F4,
    #[value(name = "E6", alias = "e6")]
    E6,
    #[value(name = "E7", alias = "e7")]
    E7,
    #[value(name = "E8", alias = "e8")]
    E8,
}

impl FamilyArg {
    fn family(self) -> Family {
        match self {
            FamilyArg::U => Family::U,
            FamilyArg::Su => Family::SU,
            FamilyArg::Sp => Family::Sp,
            FamilyArg::SoOdd => Family::SOOdd,
            FamilyArg::SoEven => Family::SOEven,
            FamilyArg::G2 => Family::G2,
            FamilyArg::F4 => Family::F4,
            FamilyArg::E6 => Family::E6,
            FamilyArg::E7 => Family::E7,
            FamilyArg::E8 => Family::E8,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Formula,
    Oracle,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Plain,
    Json,
    Csv,
    Latex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BudgetArg {
    Small,
    Medium,
    Large,
}

impl BudgetArg {
    fn budget(self) -> Budget {
        match self {
            BudgetArg::Small => Budget::small(),
            BudgetArg::Medium => Budget::medium(),
            BudgetArg::Large => Budget::large(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Combinatorics,
    Formulas,
    Topterms,
    Stability,
    Invariants,
    Fixtures,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the Poincaré series of the identity component of the space
    /// of commuting m-tuples.
    Series {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Rank parameter n; ignored for exceptional families.
        #[arg(long, default_value_t = 0)]
        rank: u32,
        #[arg(short)]
        m: u32,
        #[arg(long, value_enum, default_value_t = MethodArg::Formula)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Plain)]
        format: FormatArg,
        #[arg(long, value_enum, default_value_t = BudgetArg::Small)]
        budget: BudgetArg,
    },
    /// Computed vs predicted top term.
    Top {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, default_value_t = 0)]
        rank: u32,
        #[arg(short)]
        m: u32,
        #[arg(long, value_enum, default_value_t = BudgetArg::Small)]
        budget: BudgetArg,
    },
    /// Coefficient-wise stability between ranks n and n+1.
    Stability {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        rank: u32,
        #[arg(short)]
        m: u32,
    },
    /// List the minimal generating set of the invariant cohomology ring.
    Generators {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        rank: u32,
        #[arg(short)]
        m: u32,
    },
    /// Run a verification suite; exits 2 when any check fails.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, value_enum, default_value_t = BudgetArg::Small)]
        budget: BudgetArg,
        /// `json` prints a machine-readable summary instead of one line
        /// per check.
        #[arg(long, value_enum, default_value_t = FormatArg::Plain)]
        format: FormatArg,
    },
}

const EXIT_OK: u8 = 0;
const EXIT_USAGE: u8 = 1;
const EXIT_VERIFICATION: u8 = 2;

fn main() -> ExitCode {
    // Flag errors exit 1 (clap's default would be 2, reserved here for
    // verification failures).
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { EXIT_OK });
        }
    };
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            match e {
                Error::BudgetExceeded { .. }
                | Error::Precondition(_)
                | Error::Unsupported(_)
                | Error::UnknownKey(_) => EXIT_USAGE,
                _ => EXIT_VERIFICATION,
            }
        }
    };
    ExitCode::from(code)
}

fn make_spec(family: FamilyArg, rank: u32) -> Result<GroupSpec, Error> {
    let family = family.family();
    if family.is_classical() && rank == 0 {
        return Err(Error::Precondition(format!(
            "{} needs --rank >= 1",
            family.name()
        )));
    }
    GroupSpec::new(family, rank)
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Series {
            family,
            rank,
            m,
            method,
            format,
            budget,
        } => cmd_series(family, rank, m, method, format, budget.budget()),
        Command::Top {
            family,
            rank,
            m,
            budget,
        } => cmd_top(family, rank, m, budget.budget()),
        Command::Stability { family, rank, m } => cmd_stability(family, rank, m),
        Command::Generators { family, rank, m } => cmd_generators(family, rank, m),
        Command::Verify {
            suite,
            budget,
            format,
        } => cmd_verify(suite, budget.budget(), format),
    }
}

fn compute(spec: &GroupSpec, m: u32, method: MethodArg, budget: Budget) -> Result<Poly, Error> {
    let request = SeriesRequest {
        spec: *spec,
        m,
        method: match method {
            MethodArg::Formula => Method::Formula,
            MethodArg::Oracle => Method::Oracle,
            MethodArg::Both => unreachable!("handled by the caller"),
        },
    };
    compute_series(&request, budget)
}

fn cmd_series(
    family: FamilyArg,
    rank: u32,
    m: u32,
    method: MethodArg,
    format: FormatArg,
    budget: Budget,
) -> Result<u8, Error> {
    let spec = make_spec(family, rank)?;
    if method == MethodArg::Both {
        let formula = series_formula(&spec, m)?;
        let oracle = series_oracle(&spec, m, budget)?;
        print_series(&spec, m, "formula", &formula, format);
        print_series(&spec, m, "oracle", &oracle, format);
        if formula == oracle {
            println!("formula == oracle: OK");
            return Ok(EXIT_OK);
        }
        println!("formula != oracle: MISMATCH");
        return Ok(EXIT_VERIFICATION);
    }
    let series = compute(&spec, m, method, budget)?;
    let method_name = if method == MethodArg::Formula {
        "formula"
    } else {
        "oracle"
    };
    print_series(&spec, m, method_name, &series, format);
    Ok(EXIT_OK)
}

fn series_key(spec: &GroupSpec, m: u32) -> String {
    let family = match spec.family {
        Family::SOOdd => "SOodd".to_string(),
        Family::SOEven => "SOeven".to_string(),
        f => f.name().replace('-', ""),
    };
    if spec.family.is_classical() {
        format!("{}{}/m{}", family, spec.rank_param, m)
    } else {
        format!("{}/m{}", family, m)
    }
}

fn print_series(spec: &GroupSpec, m: u32, method: &str, p: &Poly, format: FormatArg) {
    match format {
        FormatArg::Plain => println!("{}", p),
        FormatArg::Latex => println!("{}", latex(p)),
        FormatArg::Csv => {
            println!("degree,coefficient");
            let deg = p.degree().unwrap_or(0);
            for d in 0..=deg {
                println!("{},{}", d, p.coeff(d));
            }
        }
        FormatArg::Json => {
            let report = comspace::SeriesReport::build(
                *spec,
                m,
                if method == "oracle" { "oracle" } else { "formula" },
                p.clone(),
            )
            .expect("series is a nonzero polynomial");
            let coeffs: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
            println!(
                "{{\"schema\":1,\"key\":{},\"family\":{},\"rank\":{},\"m\":{},\"method\":{},\"degree\":{},\"top\":{{\"coefficient\":{},\"degree\":{}}},\"palindromic\":{},\"coefficients\":[{}]}}",
                serde_json::to_string(&series_key(spec, m)).unwrap(),
                serde_json::to_string(spec.family.name()).unwrap(),
                spec.rank_param,
                m,
                serde_json::to_string(report.method).unwrap(),
                p.degree().map(|d| d as i64).unwrap_or(-1),
                report.top.coefficient,
                report.top.degree,
                report.palindromic,
                coeffs.join(",")
            );
        }
    }
}

/// Appendix-style LaTeX: `1+t^{2}+2 t^{3}`.
fn latex(p: &Poly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (d, c) in p.coeffs().iter().enumerate() {
        if c == &comspace::exactalg::rat_int(0) {
            continue;
        }
        if !out.is_empty() {
            out.push('+');
        }
        let unit = c == &comspace::exactalg::rat_int(1) && d != 0;
        if !unit {
            out.push_str(&c.to_string());
            if d != 0 {
                out.push(' ');
            }
        }
        match d {
            0 => {}
            1 => out.push('t'),
            _ => out.push_str(&format!("t^{{{}}}", d)),
        }
    }
    out
}

fn cmd_top(family: FamilyArg, rank: u32, m: u32, budget: Budget) -> Result<u8, Error> {
    let spec = make_spec(family, rank)?;
    let (series, predicted) = if spec.family.is_classical() {
        (series_formula(&spec, m)?, predicted_top(&spec, m)?)
    } else {
        if m != 2 {
            return Err(Error::Unsupported(
                "exceptional top terms are predicted at m = 2 only".into(),
            ));
        }
        // Simple compact group at m = 2: (rank + 1) t^{dim G}.
        let predicted = TopTerm {
            coefficient: (spec.rank() + 1).into(),
            degree: spec.dim_group() as usize,
        };
        (series_oracle(&spec, m, budget)?, predicted)
    };
    let computed = top_term(&series)?;
    let verdict = if computed == predicted { "OK" } else { "MISMATCH" };
    println!(
        "coeff {} deg {} | predicted {},{} | {}",
        computed.coefficient, computed.degree, predicted.coefficient, predicted.degree, verdict
    );
    Ok(if computed == predicted {
        EXIT_OK
    } else {
        EXIT_VERIFICATION
    })
}

fn cmd_stability(family: FamilyArg, rank: u32, m: u32) -> Result<u8, Error> {
    let report = stability_scan(family.family(), m, rank)?;
    let growth = report
        .strict_growth_at
        .map(|d| d.to_string())
        .unwrap_or_else(|| "none".into());
    let ok = report.agreement_degree == report.expected
        && report.strict_growth_at == Some(report.expected + 1);
    println!(
        "{} m={} n={}: agreement through degree {} (expected {}), strict growth at {} | {}",
        report.family.name(),
        report.m,
        report.n,
        report.agreement_degree,
        report.expected,
        growth,
        if ok { "OK" } else { "MISMATCH" }
    );
    Ok(if ok { EXIT_OK } else { EXIT_VERIFICATION })
}

fn cmd_generators(family: FamilyArg, rank: u32, m: u32) -> Result<u8, Error> {
    let spec = make_spec(family, rank)?;
    let mut gens = gen_set(spec.family, m, spec.rank_param)?;
    gens.sort_by_key(|g| g.degree());
    for g in &gens {
        println!("deg {:>2}  {}", g.degree(), g);
    }
    println!("{} generators", gens.len());
    Ok(EXIT_OK)
}

fn suite_report(suite: SuiteArg, budget: Budget) -> SuiteReport {
    match suite {
        SuiteArg::Combinatorics => verify::suite_combinatorics(),
        SuiteArg::Formulas => verify::suite_formulas(),
        SuiteArg::Topterms => verify::suite_topterms(),
        SuiteArg::Stability => verify::suite_stability(),
        SuiteArg::Invariants => verify::suite_invariants(),
        SuiteArg::Fixtures => verify::suite_fixtures(budget),
        SuiteArg::All => verify::suite_all(budget),
    }
}

fn cmd_verify(suite: SuiteArg, budget: Budget, format: FormatArg) -> Result<u8, Error> {
    match format {
        FormatArg::Plain => {}
        FormatArg::Json => {}
        _ => {
            return Err(Error::Precondition(
                "verify supports --format plain or json".into(),
            ))
        }
    }
    let report = suite_report(suite, budget);
    let mut failed = 0;
    let mut entries = Vec::new();
    for check in &report.checks {
        match &check.outcome {
            Outcome::Pass => {
                entries.push((check.name, "pass", None));
            }
            Outcome::Skipped(why) => {
                entries.push((check.name, "skip", Some(why.clone())));
            }
            Outcome::Fail(why) => {
                entries.push((check.name, "fail", Some(why.clone())));
                failed += 1;
            }
        }
    }
    let total = report.checks.len();
    if format == FormatArg::Json {
        let checks: Vec<String> = entries
            .iter()
            .map(|(name, outcome, detail)| {
                let detail = match detail {
                    Some(d) => serde_json::to_string(d).unwrap(),
                    None => "null".into(),
                };
                format!(
                    "{{\"name\":{},\"outcome\":{},\"detail\":{}}}",
                    serde_json::to_string(name).unwrap(),
                    serde_json::to_string(outcome).unwrap(),
                    detail
                )
            })
            .collect();
        println!(
            "{{\"schema\":1,\"suite\":{},\"total\":{},\"failed\":{},\"checks\":[{}]}}",
            serde_json::to_string(&format!("{:?}", suite).to_lowercase()).unwrap(),
            total,
            failed,
            checks.join(",")
        );
    } else {
        for (name, outcome, detail) in &entries {
            match *outcome {
                "pass" => println!("[PASS] {}", name),
                "skip" => println!("[SKIP] {} ({})", name, detail.as_deref().unwrap_or("")),
                _ => println!("[FAIL] {}: {}", name, detail.as_deref().unwrap_or("")),
            }
        }
        if failed == 0 {
            println!("verify: {} checks, all passed", total);
        } else {
            println!("verify: {} of {} checks failed", failed, total);
        }
    }
    Ok(if failed == 0 { EXIT_OK } else { EXIT_VERIFICATION })
}
