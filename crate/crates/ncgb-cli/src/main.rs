//! Command-line front end: reads a problem file (or stdin), runs one of the
//! pipelines, and prints canonical text output.
//!
//! Exit codes: 0 success, 1 input error, 2 guard hit with a partial result
//! printed, 3 internal invariant violation.

use std::io::Read;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use ncgb::completion::{CompletionStatus, GbCheck, Guard};
use ncgb::oracle::{report, OracleOptions};
use ncgb::poly::Context;
use ncgb::{
    buchberger, is_groebner_up_to, min_gen_set, min_standard_basis, parse_poly_text,
    parse_problem, print_poly, print_word, remainder, truncated_gb, Poly, ProblemFile,
};

#[derive(Parser)]
#[command(name = "ncgb", about = "Gröbner bases and minimal generating sets in free algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArg {
    /// Problem file; `-` reads stdin.
    #[arg(default_value = "-", value_name = "FILE")]
    file: String,
}

#[derive(Subcommand)]
enum Command {
    /// Complete the generators to a Gröbner basis under a mandatory guard.
    Gb {
        /// Stop once all pending overlaps exceed this degree.
        #[arg(long = "max-deg", value_name = "N", conflicts_with = "max_elems")]
        max_deg: Option<u64>,
        /// Stop before the basis grows beyond this many elements.
        #[arg(long = "max-elems", value_name = "M")]
        max_elems: Option<usize>,
        #[command(flatten)]
        input: InputArg,
    },
    /// Degree-truncated basis of a graded ideal (homogeneous generators).
    Truncate {
        #[arg(long, value_name = "N")]
        deg: u64,
        #[command(flatten)]
        input: InputArg,
    },
    /// Minimal homogeneous generating subset plus its degree profile.
    Mingen {
        /// Also print the truncated basis computed along the way.
        #[arg(long = "with-basis")]
        with_basis: bool,
        #[command(flatten)]
        input: InputArg,
    },
    /// Minimal standard basis extracted from a Gröbner basis.
    Stdbasis {
        /// First certify the Gröbner property up to this degree.
        #[arg(long = "certify-deg", value_name = "N")]
        certify_deg: Option<u64>,
        #[command(flatten)]
        input: InputArg,
    },
    /// Remainder of an expression on division by the generators.
    Reduce {
        /// Polynomial expression over the declared variables.
        #[arg(long, value_name = "EXPR")]
        poly: String,
        /// Print the full division certificate.
        #[arg(long)]
        certificate: bool,
        #[command(flatten)]
        input: InputArg,
    },
    /// Ambient, ideal, and minimal-generator dimensions per degree.
    Dims {
        #[arg(long, value_name = "N")]
        deg: u64,
        /// Machine-readable output.
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        input: InputArg,
    },
}

fn main() -> ExitCode {
    let outcome = std::panic::catch_unwind(run);
    match outcome {
        Ok(code) => code,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".to_string());
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprintln!("{e}");
            return ExitCode::from(1);
        }
    };

    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn load(input: &InputArg) -> Result<ProblemFile, String> {
    let text = if input.file == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("cannot read stdin: {e}"))?;
        buf
    } else {
        std::fs::read_to_string(&input.file)
            .map_err(|e| format!("cannot read `{}`: {e}", input.file))?
    };
    parse_problem(&text).map_err(|e| e.to_string())
}

fn print_basis(elements: &[Poly], ctx: &Context) {
    for g in elements {
        println!("{}", print_poly(g, ctx));
    }
}

fn dispatch(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Gb {
            max_deg,
            max_elems,
            input,
        } => {
            let guard = match (max_deg, max_elems) {
                (Some(n), None) => Guard::MaxDegree(n),
                (None, Some(m)) => Guard::MaxElements(m),
                _ => return Err("provide exactly one of --max-deg or --max-elems".into()),
            };
            let pf = load(&input)?;
            let out = buchberger(&pf.generators, guard, &pf.context).map_err(|e| e.to_string())?;
            let mut basis = out.basis;
            // Canonical presentation: non-decreasing degrees, stable.
            basis.sort_by_key(|g| g.degree(&pf.context.signature).unwrap_or(0));
            print_basis(&basis, &pf.context);
            match out.status {
                CompletionStatus::Complete => Ok(ExitCode::SUCCESS),
                CompletionStatus::GuardHit { pending } => {
                    eprintln!("guard hit: {pending} obstructions pending; printed a partial basis");
                    Ok(ExitCode::from(2))
                }
            }
        }
        Command::Truncate { deg, input } => {
            let pf = load(&input)?;
            let basis =
                truncated_gb(&pf.generators, deg, &pf.context).map_err(|e| e.to_string())?;
            print_basis(&basis.elements, &pf.context);
            Ok(ExitCode::SUCCESS)
        }
        Command::Mingen { with_basis, input } => {
            let pf = load(&input)?;
            let out = min_gen_set(&pf.generators, &pf.context).map_err(|e| e.to_string())?;
            println!(
                "minimal generators ({} of {}):",
                out.kept.len(),
                pf.generators.len()
            );
            for &i in &out.kept {
                println!("[{i}] {}", print_poly(&pf.generators[i], &pf.context));
            }
            println!("degree profile:");
            for (d, count) in &out.degree_profile {
                println!("{d}: {count}");
            }
            if with_basis {
                println!(
                    "truncated basis (degree <= {}):",
                    out.basis.truncation_degree
                );
                print_basis(&out.basis.elements, &pf.context);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Stdbasis { certify_deg, input } => {
            let pf = load(&input)?;
            if let Some(n) = certify_deg {
                match is_groebner_up_to(&pf.generators, n, &pf.context).map_err(|e| e.to_string())?
                {
                    GbCheck::Certified => println!("groebner check up to degree {n}: ok"),
                    GbCheck::Failed(w) => {
                        return Err(format!(
                            "input is not a Groebner basis up to degree {n}: the overlap of \
                             elements {} and {} leaves remainder {}",
                            w.left,
                            w.right,
                            print_poly(&w.remainder, &pf.context)
                        ));
                    }
                }
            }
            let out = min_standard_basis(&pf.generators, &pf.context).map_err(|e| e.to_string())?;
            println!(
                "kept indices: {}",
                out.kept
                    .iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            println!("minimal standard basis:");
            for &i in &out.kept {
                println!("[{i}] {}", print_poly(&pf.generators[i], &pf.context));
            }
            println!("leading homogeneous degree profile:");
            let mut profile = std::collections::BTreeMap::new();
            for f in &out.lh_min {
                *profile
                    .entry(f.degree(&pf.context.signature).unwrap_or(0))
                    .or_insert(0usize) += 1;
            }
            for (d, count) in profile {
                println!("{d}: {count}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Reduce {
            poly,
            certificate,
            input,
        } => {
            let pf = load(&input)?;
            let f = parse_poly_text(&poly, &pf.context).map_err(|e| e.to_string())?;
            let rep = remainder(&f, &pf.generators, &pf.context).map_err(|e| e.to_string())?;
            println!("remainder: {}", print_poly(&rep.remainder, &pf.context));
            if certificate {
                println!("certificate:");
                let sig = &pf.context.signature;
                for s in &rep.summands {
                    println!(
                        "+ {} * {} * g{} * {}",
                        s.coeff,
                        print_word(&s.left, sig),
                        s.divisor,
                        print_word(&s.right, sig)
                    );
                }
                println!("+ remainder");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Dims { deg, json, input } => {
            let pf = load(&input)?;
            let r = report(&pf.generators, deg, &pf.context, &OracleOptions::default())
                .map_err(|e| e.to_string())?;
            if json {
                let doc = serde_json::json!({
                    "max_degree": r.max_degree,
                    "ambient_dims": r.ambient_dims,
                    "ideal_dims": r.ideal_dims,
                    "betti": r.betti,
                });
                println!("{doc}");
            } else {
                println!("{:>6}  {:>9}  {:>9}  {:>6}", "degree", "ambient", "ideal", "betti");
                for q in 0..=deg as usize {
                    println!(
                        "{:>6}  {:>9}  {:>9}  {:>6}",
                        q, r.ambient_dims[q], r.ideal_dims[q], r.betti[q]
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
