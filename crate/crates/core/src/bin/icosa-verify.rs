use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use icosa_core::verifier::{list_claims, render, run, Format};

#[derive(Parser)]
#[command(name = "icosa-verify", version, about = "Run the registered algebraic claims and report on them")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List registered claims.
    List {
        #[arg(long)]
        filter: Option<String>,
    },
    /// Run claims and print or write a report.
    Run {
        #[arg(long)]
        filter: Option<String>,
        #[arg(long, default_value_t = default_jobs(), value_parser = clap::value_parser!(u64).range(1..))]
        jobs: u64,
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, default_value = "json")]
        format: String,
    },
}

fn default_jobs() -> u64 {
    std::thread::available_parallelism().map(|n| n.get() as u64).unwrap_or(1)
}

const USAGE: u8 = 3;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::List { filter } => {
            for c in list_claims(filter.as_deref()) {
                println!("{}\t{}", c.id, c.description);
            }
            ExitCode::SUCCESS
        }
        Command::Run { filter, jobs, report, format } => {
            let format: Format = match format.parse() {
                Ok(f) => f,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(USAGE);
                }
            };
            let r = match run(filter.as_deref(), jobs as usize) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            let text = render(&r, format);
            match report {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, &text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                    let s = r.summary;
                    eprintln!("{} pass, {} fail, {} error", s.pass, s.fail, s.error);
                }
                None => print!("{text}"),
            }
            ExitCode::from(r.exit_code() as u8)
        }
    }
}
