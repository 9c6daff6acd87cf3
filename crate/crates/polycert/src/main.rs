//! Thin command-line front end over the library: verify one n, sweep a
//! range, export artifacts, or run the higher-rank sweep.
//!
//! Exit status: 0 when every check passed, 1 when a verification
//! completed with failures, 2 on usage or hard errors.

use std::fs::File;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use polycert::cert::{self, ExportKind, LatticeMode, VerifyOptions, DEFAULT_MAX_COSETS};
use polycert::fp::SweepStatus;

#[derive(Parser)]
#[command(name = "polycert", version, about = "Builds and certifies the {n,n} family of self-dual regular 3-polytopes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify one member end to end and emit a JSON certificate.
    Verify {
        /// Family parameter; the group has order 2^n * n. Bounded by the
        /// closure cap: full element enumeration stops at n = 16.
        #[arg(value_parser = clap::value_parser!(u64).range(3..=16))]
        n: u64,
        /// Skip the face-lattice checks regardless of size.
        #[arg(long)]
        skip_lattice: bool,
        /// Cap on live cosets for the enumeration.
        #[arg(long)]
        max_cosets: Option<usize>,
        /// Write the certificate here instead of stdout.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Verify a range of members, one JSON certificate per line.
    Sweep {
        #[arg(value_parser = clap::value_parser!(u64).range(3..=16))]
        n_min: u64,
        #[arg(value_parser = clap::value_parser!(u64).range(3..=16))]
        n_max: u64,
        /// Worker threads.
        #[arg(long, default_value_t = 1)]
        parallel: usize,
        #[arg(long)]
        max_cosets: Option<usize>,
    },
    /// Write a deterministic export for one member.
    Export {
        #[arg(value_parser = clap::value_parser!(u64).range(3..=60))]
        n: u64,
        kind: ExportArg,
        /// Output path; stdout when omitted.
        out: Option<PathBuf>,
    },
    /// Enumerate the higher-rank presentations over (d, n) ranges,
    /// recording order, type and string C-group verdicts per pair.
    Conjecture {
        #[arg(value_parser = clap::value_parser!(u64).range(3..=8))]
        d_min: u64,
        #[arg(value_parser = clap::value_parser!(u64).range(3..=8))]
        d_max: u64,
        #[arg(value_parser = clap::value_parser!(u64).range(3..=60))]
        n_min: u64,
        #[arg(value_parser = clap::value_parser!(u64).range(3..=60))]
        n_max: u64,
        #[arg(long)]
        max_cosets: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportArg {
    Hasse,
    Flaggraph,
    Presentation,
}

impl From<ExportArg> for ExportKind {
    fn from(a: ExportArg) -> ExportKind {
        match a {
            ExportArg::Hasse => ExportKind::Hasse,
            ExportArg::Flaggraph => ExportKind::FlagGraph,
            ExportArg::Presentation => ExportKind::Presentation,
        }
    }
}

fn resolve_max_cosets(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var("POLYCERT_MAX_COSETS")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(DEFAULT_MAX_COSETS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            let detail = serde_json::json!({ "error": err.to_string() });
            println!("{detail}");
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> polycert::Result<ExitCode> {
    match command {
        Command::Verify {
            n,
            skip_lattice,
            max_cosets,
            json,
        } => {
            let opts = VerifyOptions {
                lattice: if skip_lattice {
                    LatticeMode::Skip
                } else {
                    LatticeMode::Auto
                },
                max_cosets: resolve_max_cosets(max_cosets),
            };
            let certificate = cert::verify(n as usize, &opts)?;
            let body = serde_json::to_string_pretty(&certificate).expect("serializable");
            match json {
                Some(path) => {
                    File::create(&path)?.write_all(body.as_bytes())?;
                    println!(
                        "n={} order={} {}",
                        certificate.n,
                        certificate.group_order,
                        if certificate.all_pass() { "ok" } else { "FAILED" }
                    );
                }
                None => println!("{body}"),
            }
            Ok(exit_for(certificate.all_pass()))
        }
        Command::Sweep {
            n_min,
            n_max,
            parallel,
            max_cosets,
        } => {
            let opts = VerifyOptions {
                lattice: LatticeMode::Auto,
                max_cosets: resolve_max_cosets(max_cosets),
            };
            let entries = cert::sweep(n_min as usize, n_max as usize, parallel, &opts)?;
            let mut failures: Vec<usize> = Vec::new();
            eprintln!("{:>4} {:>10} {:>9}  verdict", "n", "order", "flags");
            for entry in &entries {
                match &entry.outcome {
                    Ok(c) => {
                        println!("{}", serde_json::to_string(c).expect("serializable"));
                        let flags = c
                            .flag_count
                            .map_or("-".to_string(), |f| f.to_string());
                        let verdict = if c.all_pass() { "ok" } else { "FAILED" };
                        eprintln!("{:>4} {:>10} {:>9}  {verdict}", c.n, c.group_order, flags);
                        if !c.all_pass() {
                            failures.push(c.n);
                        }
                    }
                    Err(e) => {
                        let detail =
                            serde_json::json!({ "n": entry.n, "error": e.to_string() });
                        println!("{detail}");
                        eprintln!("{:>4} {:>10} {:>9}  error: {e}", entry.n, "-", "-");
                        failures.push(entry.n);
                    }
                }
            }
            if failures.is_empty() {
                eprintln!("all {} members passed", entries.len());
            } else {
                eprintln!("failures at n = {failures:?}");
            }
            Ok(exit_for(failures.is_empty()))
        }
        Command::Export { n, kind, out } => {
            let mut buf = Vec::new();
            cert::export(n as usize, kind.into(), &mut buf)?;
            match out {
                Some(path) => File::create(&path)?.write_all(&buf)?,
                None => std::io::stdout().write_all(&buf)?,
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Conjecture {
            d_min,
            d_max,
            n_min,
            n_max,
            max_cosets,
        } => {
            let records = cert::conjecture(
                d_min as usize,
                d_max as usize,
                n_min as usize,
                n_max as usize,
                resolve_max_cosets(max_cosets),
            )?;
            for r in &records {
                println!("{}", serde_json::to_string(r).expect("serializable"));
                let status = match r.status {
                    SweepStatus::Verified => "verified",
                    SweepStatus::Failed => "FAILED",
                    SweepStatus::Inconclusive => "inconclusive (cap hit)",
                };
                match r.order {
                    Some(order) => eprintln!("d={} n={}: order {order}, {status}", r.d, r.n),
                    None => eprintln!("d={} n={}: {status}", r.d, r.n),
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn exit_for(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
