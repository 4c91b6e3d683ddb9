use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use rayon::prelude::*;
use serde_json::{json, Map, Number, Value};

use fibpart::chi_analysis::{self, RunKind, RunReport};
use fibpart::contfrac::{parse_word, word_of};
use fibpart::counting::{chi, count_f, fib_poly};
use fibpart::enumeration::{self, Strategy};
use fibpart::oracle::OracleConfig;
use fibpart::orbits::{self, Generator};
use fibpart::{zeckendorf, Natural, Word};

#[derive(Parser)]
#[command(
    name = "fibpart",
    version,
    about = "Partitions of integers into distinct Fibonacci numbers"
)]
struct Cli {
    /// Refuse numeric inputs wider than this many bits (theta, psi and minimal ignore it).
    #[arg(long, global = true, default_value_t = 128)]
    limit_bits: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full record for N as JSON.
    Info {
        n: BigUint,
        /// Include the coefficients of F(N;t).
        #[arg(long)]
        poly: bool,
    },
    /// Coefficients of F(N;t), lowest degree first.
    Poly { n: BigUint },
    /// chi(N) = F(N;-1).
    Chi { n: BigUint },
    /// The word of N.
    Word { n: BigUint },
    /// Least n whose word is WORD, e.g. 2/3*1/3 (the empty word is 1).
    Theta {
        #[arg(value_parser = parse_word)]
        word: Word,
    },
    /// Whether N is essential, and its index m if so.
    Essential { n: BigUint },
    /// Apply generators to N in order.
    Orbit {
        n: BigUint,
        /// Comma-separated generators: omega, tau, S.
        #[arg(long, value_delimiter = ',', required = true)]
        apply: Vec<Generator>,
    },
    /// Number of essential K-numbers.
    Psi { k: u64 },
    /// Number of commutative essential K-numbers.
    PsiSigma { k: u64 },
    /// All essential K-numbers, increasing.
    Enumerate { k: u64 },
    /// Least n with F(n) = K, and its word.
    Minimal {
        k: u64,
        /// Search every word rather than one per multiset of letters.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Count of n in [f_R, f_{R+1}) with F(n) = K.
    Stability { r: usize, k: u64 },
    /// Zeros of chi on [0, N] and X(N).
    Zeros { n: u64 },
    /// Interior runs of chi in [LO, HI] as CSV.
    Runs {
        lo: u64,
        hi: u64,
        #[arg(long, value_enum, default_value_t = RunSelect::Both)]
        kind: RunSelect,
    },
    /// Predicted and computed upper-hull vertices over [f_R - 1, f_{R+1} - 1].
    Hull { r: usize },
    /// CSV rows n,F,chi for LO <= n <= HI.
    Plot { lo: u64, hi: u64 },
    /// Compare F(n;t) with brute-force enumeration for 0 <= n <= N.
    OracleCheck { n: u64 },
}

#[derive(Clone, Copy, ValueEnum)]
enum RunSelect {
    Zero,
    Nonzero,
    Both,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<fibpart::Error> for Failure {
    fn from(e: fibpart::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

fn big(n: &BigUint) -> Value {
    Value::Number(n.to_string().parse::<Number>().expect("decimal digits"))
}

fn check_bits(n: &BigUint, limit: u64) -> Result<(), Failure> {
    if n.bits() > limit {
        return Err(Failure::Usage(format!(
            "input {n} has {} bits, above --limit-bits {limit}",
            n.bits()
        )));
    }
    Ok(())
}

fn poly_json(n: &Natural) -> Value {
    let p = fib_poly(n);
    Value::Array(
        p.coeffs()
            .iter()
            .map(|c| Value::Number(c.to_string().parse().expect("decimal digits")))
            .collect(),
    )
}

fn output_record(n: &Natural, with_poly: bool) -> Value {
    let mut rec = Map::new();
    rec.insert("n".into(), big(n));
    rec.insert("zeckendorf".into(), json!(zeckendorf(n).indices()));
    rec.insert("word".into(), json!(word_of(n).to_string()));
    rec.insert("F".into(), big(&count_f(n)));
    rec.insert("chi".into(), json!(chi(n)));
    if with_poly {
        rec.insert("poly".into(), poly_json(n));
    }
    rec.insert("essential".into(), json!(orbits::is_essential(n)));
    Value::Object(rec)
}

fn run_row(out: &mut impl Write, run: &RunReport) -> io::Result<()> {
    let kind = match run.kind {
        RunKind::Zero => "zero",
        RunKind::Nonzero => "nonzero",
    };
    let values: Vec<String> = run.values.iter().map(i8::to_string).collect();
    writeln!(
        out,
        "{},{},{},{}",
        run.start,
        run.length,
        kind,
        values.join(" ")
    )
}

fn run(cli: Cli) -> Result<(), Failure> {
    let limit = cli.limit_bits;
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match cli.command {
        Command::Info { n, poly } => {
            check_bits(&n, limit)?;
            writeln!(out, "{}", output_record(&n, poly))?;
        }
        Command::Poly { n } => {
            check_bits(&n, limit)?;
            writeln!(out, "{}", poly_json(&n))?;
        }
        Command::Chi { n } => {
            check_bits(&n, limit)?;
            writeln!(out, "{}", chi(&n))?;
        }
        Command::Word { n } => {
            check_bits(&n, limit)?;
            writeln!(out, "{}", word_of(&n))?;
        }
        Command::Theta { word } => {
            writeln!(out, "{}", orbits::theta(&word)?)?;
        }
        Command::Essential { n } => {
            check_bits(&n, limit)?;
            let m = orbits::m_from_essential(&n).ok();
            let rec = json!({
                "n": big(&n),
                "essential": m.is_some(),
                "m": m.as_ref().map_or(Value::Null, big),
            });
            writeln!(out, "{rec}")?;
        }
        Command::Orbit { n, apply } => {
            check_bits(&n, limit)?;
            let mut current = n.clone();
            let mut steps = Vec::new();
            for g in apply {
                current = g.apply(&current)?;
                steps.push(json!({ "generator": g.to_string(), "n": big(&current) }));
            }
            writeln!(out, "{}", json!({ "start": big(&n), "steps": steps }))?;
        }
        Command::Psi { k } => writeln!(out, "{}", enumeration::psi(k)?)?,
        Command::PsiSigma { k } => writeln!(out, "{}", enumeration::psi_sigma(k)?)?,
        Command::Enumerate { k } => {
            let class = enumeration::list_essential(k)?;
            let members: Vec<String> = class.members.iter().map(ToString::to_string).collect();
            writeln!(out, "{}", members.join(" "))?;
        }
        Command::Minimal { k, exhaustive } => {
            let strategy = if exhaustive {
                Strategy::Exhaustive
            } else {
                Strategy::Commutative
            };
            let (m, w) = enumeration::minimal_essential_with_word(k, strategy)?;
            let rec = json!({
                "k": k,
                "M": big(&m),
                "word": w.to_string(),
                "primitive": k == 1 || orbits::is_f_prime(&m),
            });
            writeln!(out, "{rec}")?;
        }
        Command::Stability { r, k } => {
            check_bits(&BigUint::from(r), limit)?;
            writeln!(out, "{}", enumeration::stability_count(r, k))?;
        }
        Command::Zeros { n } => {
            let zeros = chi_analysis::count_zero_chi(n);
            // chi(0) = 1, so zeros on [0, N] and on [1, N] agree.
            let rec = json!({ "N": n, "zeros": zeros, "x_sum": n - zeros });
            writeln!(out, "{rec}")?;
        }
        Command::Runs { lo, hi, kind } => {
            let mut runs = Vec::new();
            if matches!(kind, RunSelect::Zero | RunSelect::Both) {
                runs.extend(chi_analysis::zero_runs(lo, hi)?);
            }
            if matches!(kind, RunSelect::Nonzero | RunSelect::Both) {
                runs.extend(chi_analysis::nonzero_runs(lo, hi)?);
            }
            runs.sort_by_key(|r| r.start);
            writeln!(out, "start,length,kind,values")?;
            for r in &runs {
                run_row(&mut out, r)?;
            }
        }
        Command::Hull { r } => {
            let predicted = chi_analysis::hull_points(r)?;
            let computed = chi_analysis::computed_hull(r)?;
            let pts = |v: &[(Natural, Natural)]| -> Value {
                Value::Array(v.iter().map(|(x, y)| json!([big(x), big(y)])).collect())
            };
            let rec = json!({
                "r": r,
                "predicted": pts(&predicted),
                "computed": pts(&computed),
                "match": predicted == computed,
            });
            writeln!(out, "{rec}")?;
        }
        Command::Plot { lo, hi } => {
            if lo > hi {
                return Err(fibpart::Error::InvalidRange { lo, hi }.into());
            }
            let rows: Vec<(u64, Natural, i8)> = (lo..=hi)
                .into_par_iter()
                .map(|v| {
                    let x = Natural::from(v);
                    (v, count_f(&x), chi(&x))
                })
                .collect();
            writeln!(out, "n,F,chi")?;
            for (v, f, c) in rows {
                writeln!(out, "{v},{f},{c}")?;
            }
        }
        Command::OracleCheck { n } => {
            let cfg = OracleConfig { bound: n };
            let mismatches: Vec<u64> = (0..=n)
                .into_par_iter()
                .filter(|&v| {
                    let x = Natural::from(v);
                    cfg.poly(&x).map_or(true, |p| p != fib_poly(&x))
                })
                .collect();
            let pass = mismatches.is_empty();
            let rec = json!({
                "N": n,
                "checked": n + 1,
                "mismatches": mismatches.len(),
                "first_mismatch": mismatches.first(),
                "pass": pass,
            });
            writeln!(out, "{rec}")?;
            out.flush()?;
            if !pass {
                return Err(Failure::Domain(format!("{} mismatches", mismatches.len())));
            }
        }
    }
    out.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
