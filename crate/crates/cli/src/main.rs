use clap::{Parser, Subcommand};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use weyl_cli::{
    cmd_classify, cmd_dim, cmd_jantzen, cmd_killing, cmd_minuscule, cmd_primes, cmd_qm,
    cmd_root_info, cmd_verify, error_json, parse_type, parse_weight, CliError, Report,
};
use weyl_core::killing::QuotientSpec;
use weyl_core::verify::VerifyConfig;

/// Exact-arithmetic computations with Weyl modules: global irreducibility
/// classification, the Jantzen sum formula, and reduced Killing form
/// discriminants.
#[derive(Parser)]
#[command(name = "weyl", version, about, max_term_width = 100)]
struct Cli {
    /// Emit the machine-readable JSON report on stdout.
    #[arg(long, global = true)]
    json: bool,
    /// Also write the JSON report to this path.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Worker threads for the verify harness (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the root datum of a simple type (Cartan matrix, |W|, ...).
    RootInfo { type_spec: String },
    /// Weyl dimension of V(lambda).
    Dim {
        type_spec: String,
        #[arg(allow_hyphen_values = true)]
        weight: String,
    },
    /// List the minuscule weights of a type.
    Minuscule { type_spec: String },
    /// Decide global irreducibility of V(lambda) with a witness chain.
    Classify {
        type_spec: String,
        #[arg(allow_hyphen_values = true)]
        weight: String,
    },
    /// Evaluate the Jantzen sum formula at one prime.
    Jantzen {
        type_spec: String,
        #[arg(allow_hyphen_values = true)]
        weight: String,
        prime: u64,
    },
    /// All primes where V(lambda) is reducible, by the sum-formula oracle.
    Primes {
        type_spec: String,
        #[arg(allow_hyphen_values = true)]
        weight: String,
    },
    /// Is V_J(lambda) irreducible for every proper Levi subgroup?
    Qm {
        type_spec: String,
        #[arg(allow_hyphen_values = true)]
        weight: String,
    },
    /// Reduced Killing form discriminant of an isogeny quotient.
    Killing {
        #[command(subcommand)]
        spec: KillingSpecArg,
    },
    /// Run the acceptance harness: classifier vs oracle and the
    /// Killing-form checks.
    Verify {
        /// Rank ceiling for the cross-validation sweep (at most 6).
        #[arg(long, default_value_t = 4)]
        max_rank: usize,
        /// Weyl-dimension cap for swept weights.
        #[arg(long, default_value_t = 5000)]
        dim_cap: u64,
    },
}

#[derive(Subcommand)]
enum KillingSpecArg {
    /// Simply connected group of the given type.
    Sc { type_spec: String },
    /// Adjoint group of the given type.
    Adjoint { type_spec: String },
    /// SO_N for even N >= 8.
    So { dim: usize },
    /// HSpin_N for N divisible by 4, N >= 8.
    Hspin { dim: usize },
    /// SL_n / mu_m with m dividing n.
    Slmu { n: u64, m: u64 },
}

fn killing_spec(arg: &KillingSpecArg) -> Result<QuotientSpec, CliError> {
    Ok(match arg {
        KillingSpecArg::Sc { type_spec } => QuotientSpec::SimplyConnected(parse_type(type_spec)?),
        KillingSpecArg::Adjoint { type_spec } => QuotientSpec::Adjoint(parse_type(type_spec)?),
        KillingSpecArg::So { dim } => {
            if dim % 2 != 0 {
                return Err(CliError::Usage(format!("SO dimension {dim} must be even")));
            }
            QuotientSpec::SpecialOrthogonalEven { n: dim / 2 }
        }
        KillingSpecArg::Hspin { dim } => {
            if dim % 2 != 0 {
                return Err(CliError::Usage(format!(
                    "HSpin dimension {dim} must be even"
                )));
            }
            QuotientSpec::HalfSpin { n: dim / 2 }
        }
        KillingSpecArg::Slmu { n, m } => QuotientSpec::SpecialLinearQuotient { n: *n, m: *m },
    })
}

fn run(cli: &Cli) -> Result<(Report, bool), CliError> {
    match &cli.command {
        Command::RootInfo { type_spec } => Ok((cmd_root_info(parse_type(type_spec)?)?, true)),
        Command::Dim { type_spec, weight } => {
            let typ = parse_type(type_spec)?;
            let lam = parse_weight(weight, typ.rank)?;
            Ok((cmd_dim(typ, &lam)?, true))
        }
        Command::Minuscule { type_spec } => Ok((cmd_minuscule(parse_type(type_spec)?)?, true)),
        Command::Classify { type_spec, weight } => {
            let typ = parse_type(type_spec)?;
            let lam = parse_weight(weight, typ.rank)?;
            Ok((cmd_classify(typ, &lam)?, true))
        }
        Command::Jantzen {
            type_spec,
            weight,
            prime,
        } => {
            let typ = parse_type(type_spec)?;
            let lam = parse_weight(weight, typ.rank)?;
            Ok((cmd_jantzen(typ, &lam, *prime)?, true))
        }
        Command::Primes { type_spec, weight } => {
            let typ = parse_type(type_spec)?;
            let lam = parse_weight(weight, typ.rank)?;
            Ok((cmd_primes(typ, &lam)?, true))
        }
        Command::Qm { type_spec, weight } => {
            let typ = parse_type(type_spec)?;
            let lam = parse_weight(weight, typ.rank)?;
            Ok((cmd_qm(typ, &lam)?, true))
        }
        Command::Killing { spec } => Ok((cmd_killing(killing_spec(spec)?)?, true)),
        Command::Verify { max_rank, dim_cap } => {
            if *max_rank > 6 {
                return Err(CliError::Usage("--max-rank is capped at 6".into()));
            }
            let cfg = VerifyConfig {
                max_rank: *max_rank,
                dim_cap: *dim_cap,
            };
            let (results, report, all_passed) = cmd_verify(&cfg);
            for r in &results {
                eprintln!("# criterion {:2} {}: {} ms", r.id, r.name, r.millis);
            }
            Ok((report, all_passed))
        }
    }
}

/// Write to stdout, exiting quietly if the downstream pipe is closed
/// (e.g. `weyl ... | head`).
fn emit(s: &str) {
    let mut out = std::io::stdout().lock();
    if let Err(e) = out.write_all(s.as_bytes()).and_then(|()| out.flush()) {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error writing to stdout: {e}");
        std::process::exit(1);
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = cli.threads.unwrap_or(0);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("rayon pool");
    let outcome = pool.install(|| run(&cli));
    match outcome {
        Ok((report, success)) => {
            if cli.json {
                emit(&format!(
                    "{}\n",
                    serde_json::to_string_pretty(&report.json).unwrap()
                ));
            } else {
                emit(&report.human);
            }
            if let Some(path) = &cli.out {
                let mut f = match std::fs::File::create(path) {
                    Ok(f) => f,
                    Err(e) => {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(1);
                    }
                };
                writeln!(f, "{}", serde_json::to_string_pretty(&report.json).unwrap()).ok();
            }
            ExitCode::from(if success { 0 } else { 1 })
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}\nrun `weyl --help` for the command syntax");
            ExitCode::from(2)
        }
        Err(CliError::Domain(e)) => {
            emit(&format!(
                "{}\n",
                serde_json::to_string_pretty(&error_json(&e)).unwrap()
            ));
            ExitCode::from(1)
        }
    }
}
