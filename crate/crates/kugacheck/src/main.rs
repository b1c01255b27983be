//! Command-line entry point.
//!
//! Exit codes: 0 when the requested computation succeeds (for `certify`,
//! when every certificate entry passes), 1 when a certificate fails, and 2
//! for input errors — unreadable or invalid spec files, malformed rationals,
//! and usage mistakes.

use clap::{Args, Parser, Subcommand};
use exact_core::{format_rational, parse_rational};
use kugacheck::runner::RunConfig;
use kugacheck::{certify, load_spec, parse_tau_pair, report_bytes, summary_text, CliError};
use quaternion::{archimedean_corestriction, classify_algebra, CorestrictionType};
use std::fmt::Display;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "kugacheck",
    version,
    about = "Exact certificates for families of abelian varieties over curves"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the invariants of a rational quaternion algebra.
    Classify(ClassifyArgs),
    /// Run the certificate suite for a family described by a spec file.
    Certify(CertifyArgs),
    /// Evaluate the exact scalar identities for fibered families.
    Ledger(LedgerArgs),
}

#[derive(Args)]
struct ClassifyArgs {
    /// Square of the first generator, a nonzero rational.
    #[arg(short = 'a', value_name = "A", allow_hyphen_values = true)]
    a: String,
    /// Square of the second generator, a nonzero rational.
    #[arg(short = 'b', value_name = "B", allow_hyphen_values = true)]
    b: String,
    /// Also print the corestriction type at the real place for this degree.
    #[arg(long)]
    degree: Option<u64>,
}

#[derive(Args)]
struct CertifyArgs {
    /// Path to the TOML spec file.
    #[arg(long)]
    spec: PathBuf,
    /// Write the JSON report to this path.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Replace the spec's base points (repeatable; RE,IM with rational parts).
    #[arg(long = "tau", value_name = "RE,IM", allow_hyphen_values = true)]
    tau: Vec<String>,
    /// Word-ball radius for torsion screening and cocycle enumeration.
    #[arg(long, default_value_t = 4)]
    word_ball: usize,
    /// Override the number of fiber-product copies to certify.
    #[arg(long)]
    copies: Option<usize>,
    /// Working precision, in bits, for interval fallbacks.
    #[arg(long, default_value_t = 106)]
    numeric_bits: u32,
}

#[derive(Args)]
struct LedgerArgs {
    /// Fiber dimension.
    #[arg(short = 'm', value_name = "M")]
    m: Option<u32>,
    /// Base dimension.
    #[arg(short = 'n', value_name = "N")]
    n: Option<u32>,
    /// Degree of the Hodge bundle, a rational.
    #[arg(long = "degE", value_name = "DEG", allow_hyphen_values = true)]
    deg_e: Option<String>,
    /// Genus of the base curve.
    #[arg(long)]
    genus: Option<u32>,
    /// Compare the slope bound against the curve case (needs -n).
    #[arg(long)]
    slope: bool,
}

fn input(e: impl Display) -> CliError {
    CliError::Invalid(e.to_string())
}

fn yes_no(flag: bool) -> &'static str {
    if flag {
        "yes"
    } else {
        "no"
    }
}

fn run_classify(args: &ClassifyArgs) -> Result<i32, CliError> {
    let a = parse_rational(&args.a).map_err(|e| input(format!("a: {e}")))?;
    let b = parse_rational(&args.b).map_err(|e| input(format!("b: {e}")))?;
    let class = classify_algebra(&a, &b).map_err(input)?;
    println!(
        "algebra: ({}, {})",
        format_rational(&a),
        format_rational(&b)
    );
    let places: Vec<String> = class.ramified.iter().map(|p| p.to_string()).collect();
    let places_text = if places.is_empty() {
        "none".to_string()
    } else {
        places.join(", ")
    };
    println!("ramified places: {places_text}");
    println!("division: {}", yes_no(class.division));
    println!("definite: {}", yes_no(class.definite));
    println!("discriminant: {}", class.discriminant);
    if let Some(degree) = args.degree {
        let core = archimedean_corestriction(degree).map_err(input)?;
        let description = match core {
            CorestrictionType::MatrixReal { size } => format!("M_{size}(R)"),
            CorestrictionType::MatrixHamiltonian { size } => format!("M_{size}(H)"),
        };
        let derived = if core.indefinite_quaternion_class() {
            "indefinite"
        } else {
            "definite"
        };
        println!("corestriction at the real place (degree {degree}): {description}");
        println!("derived quaternion class: {derived}");
    }
    Ok(0)
}

fn run_certify(args: &CertifyArgs) -> Result<i32, CliError> {
    let mut spec = load_spec(&args.spec)?;
    if !args.tau.is_empty() {
        let mut taus = Vec::with_capacity(args.tau.len());
        for text in &args.tau {
            taus.push(parse_tau_pair(text)?);
        }
        spec.taus = taus;
    }
    if let Some(copies) = args.copies {
        if copies == 0 {
            return Err(input("copies must be at least 1"));
        }
        spec.copies = copies;
    }
    let config = RunConfig {
        word_ball: args.word_ball,
        numeric_bits: args.numeric_bits,
    };
    let report = certify(&spec, &config);
    let bytes = report_bytes(&report);
    if let Some(path) = &args.out {
        std::fs::write(path, &bytes)?;
    }
    print!("{}", summary_text(&report));
    Ok(if report.passed() { 0 } else { 1 })
}

fn run_ledger(args: &LedgerArgs) -> Result<i32, CliError> {
    let mut printed = false;
    if let Some(m) = args.m {
        let profile = chern_ledger::chern_profile(m).map_err(input)?;
        let coefficients: Vec<String> = profile
            .coefficients()
            .iter()
            .map(format_rational)
            .collect();
        println!("chern profile (m = {m}): {}", coefficients.join(", "));
        printed = true;
    }
    if let (Some(m), Some(n)) = (args.m, args.n) {
        let (deg_factor, canonical_factor) =
            chern_ledger::relative_canonical_factors(m, n).map_err(input)?;
        println!(
            "relative canonical factors (m = {m}, n = {n}): {}, {}",
            format_rational(&deg_factor),
            format_rational(&canonical_factor)
        );
        printed = true;
        if let (Some(deg_text), Some(genus)) = (&args.deg_e, args.genus) {
            let deg_e = parse_rational(deg_text).map_err(|e| input(format!("degE: {e}")))?;
            let profile = chern_ledger::FibrationProfile::new(m, n, deg_e, genus).map_err(input)?;
            println!(
                "arakelov gap: {}",
                format_rational(&chern_ledger::arakelov_gap(&profile))
            );
        }
    }
    if args.slope {
        let n = args
            .n
            .ok_or_else(|| input("--slope needs a base dimension; pass -n"))?;
        let (lhs, rhs, equal) = chern_ledger::slope_forces_curve(n).map_err(input)?;
        let verdict = if equal {
            "equal: the base is a curve"
        } else {
            "strict"
        };
        println!(
            "slope comparison (n = {n}): {} vs {} ({verdict})",
            format_rational(&lhs),
            format_rational(&rhs)
        );
        printed = true;
    }
    if !printed {
        return Err(input(
            "nothing to compute; pass -m (profile), -m with -n (factors, with --degE and --genus the gap), or -n with --slope",
        ));
    }
    Ok(0)
}

fn main() {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Classify(args) => run_classify(&args),
        Command::Certify(args) => run_certify(&args),
        Command::Ledger(args) => run_ledger(&args),
    };
    let code = match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    };
    std::process::exit(code);
}
