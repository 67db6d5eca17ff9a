use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::thread;

use clap::{Args, Parser, Subcommand, ValueEnum};
use witt_core::report::{
    render, render_batch, run_selftest, run_series, run_verify, Format, ModuleSelector,
    RunOptions, VerificationReport,
};

#[derive(Parser)]
#[command(name = "witt", version, about = "Restricted W(1)-modules over F_p")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every check for A(1) ⊗ A(1) and its composition series.
    Verify(Common),
    /// Print the composition series of one module.
    Series {
        #[command(flatten)]
        common: Common,
        /// A1, A2, AsPlus, AaPlus, LxL, Z:<λ>, L:<λ> or adjoint.
        #[arg(short, long)]
        module: String,
    },
    /// Check the algebra, module and linear-algebra axioms only.
    Selftest(Common),
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Md,
    Json,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Text => Format::Text,
            OutputFormat::Md => Format::Md,
            OutputFormat::Json => Format::Json,
        }
    }
}

#[derive(Args)]
struct Common {
    /// Prime characteristic.
    #[arg(short, long, conflicts_with = "primes", required_unless_present = "primes")]
    p: Option<u64>,
    /// Comma-separated primes, verified in parallel.
    #[arg(long, value_delimiter = ',')]
    primes: Vec<u64>,
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
    /// Also write the report to this file.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Record wall time per phase.
    #[arg(long)]
    timings: bool,
}

fn run_all(
    primes: &[u64],
    job: impl Fn(u64) -> witt_core::Result<VerificationReport> + Sync,
) -> witt_core::Result<Vec<VerificationReport>> {
    thread::scope(|s| {
        let job = &job;
        let handles: Vec<_> = primes.iter().map(|&p| s.spawn(move || job(p))).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (common, selector) = match &cli.command {
        Command::Verify(c) | Command::Selftest(c) => (c, None),
        Command::Series { common, module } => match module.parse::<ModuleSelector>() {
            Ok(s) => (common, Some(s)),
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        },
    };
    let opts = RunOptions {
        timings: common.timings,
    };
    let batch = common.p.is_none();
    let primes: Vec<u64> = common.p.map_or_else(|| common.primes.clone(), |p| vec![p]);

    let reports = run_all(&primes, |p| match (&cli.command, selector) {
        (Command::Verify(_), _) => run_verify(p, opts),
        (Command::Selftest(_), _) => run_selftest(p, opts),
        (Command::Series { .. }, Some(s)) => run_series(p, s, opts),
        (Command::Series { .. }, None) => unreachable!("selector parsed above"),
    });
    let reports = match reports {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };

    let format = Format::from(common.format);
    let text = if batch {
        render_batch(&reports, format)
    } else {
        render(&reports[0], format)
    };
    if let Some(path) = &common.out {
        if let Err(e) = fs::write(path, &text) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    let _ = io::stdout().write_all(text.as_bytes());

    for r in &reports {
        for c in r.failed_checks() {
            eprintln!("p = {}: {} failed: {}", r.prime, c.name, c.detail);
        }
    }
    if reports.iter().all(VerificationReport::passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
