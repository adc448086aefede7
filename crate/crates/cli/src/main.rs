use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gsym::acceptance::{exit_code, run_acceptance, AcceptanceConfig};
use gsym::families::FamilySpec;
use gsym::io::parse_graph;
use gsym::report::{analyze, run_family, sample_family, AnalyzeOptions, Report};
use num_bigint::BigUint;

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "gsym", version, about = "Automorphism groups, minors and structure trees of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(clap::Args)]
struct Common {
    /// Node budget of the Hadwiger-number search.
    #[arg(long, default_value_t = 200_000)]
    hadwiger_budget: u64,
    /// Largest group order for which composition factors are computed.
    #[arg(long, default_value_t = BigUint::from(gsym::perm::DEFAULT_ORDER_CAP))]
    group_order_cap: BigUint,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Omit the timing object so that output is byte-for-byte reproducible.
    #[arg(long)]
    no_timing: bool,
}

impl Common {
    fn options(&self) -> AnalyzeOptions {
        AnalyzeOptions {
            hadwiger_budget: self.hadwiger_budget,
            group_order_cap: self.group_order_cap.clone(),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one graph file ("-" reads standard input).
    Analyze {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Analyze every member of a family, e.g. `twisted_grid:5,5` or
    /// `small_corpus:6,biconnected`. JSON output has one report per line.
    Family {
        spec: String,
        /// Analyze only this many members, chosen by `--seed`.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Run the acceptance suite; exits 0 only if every criterion passes.
    Acceptance {
        #[arg(long, default_value_t = AcceptanceConfig::default().seed)]
        seed: u64,
    },
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

/// Writes to stdout, treating a closed pipe as a normal end of output.
fn write_out(text: &str) {
    let mut out = std::io::stdout().lock();
    if let Err(e) = out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
        }
    }
}

fn emit(reports: &[Report], common: &Common, lines: bool) -> ExitCode {
    let mut text = String::new();
    for r in reports {
        let r = if common.no_timing { r.untimed() } else { r.clone() };
        match common.format {
            Format::Json if lines => text += &serde_json::to_string(&r).expect("reports serialize"),
            Format::Json => text += &serde_json::to_string_pretty(&r).expect("reports serialize"),
            Format::Text => text += &r.to_text(),
        }
        text.push('\n');
    }
    write_out(&text);
    if reports.iter().any(|r| !r.failures.is_empty()) {
        ExitCode::from(EXIT_FAILURE)
    } else if reports.iter().any(Report::budget_exceeded) {
        ExitCode::from(EXIT_BUDGET)
    } else {
        ExitCode::SUCCESS
    }
}

fn read_input(file: &PathBuf) -> std::io::Result<String> {
    if file.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(file)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Analyze { file, common } => {
            let text = match read_input(&file) {
                Ok(t) => t,
                Err(e) => return usage_error(format!("{}: {e}", file.display())),
            };
            let parsed = match parse_graph(&text) {
                Ok(p) => p,
                Err(e) => return usage_error(format!("{}: {e}", file.display())),
            };
            let mut report = analyze(&file.display().to_string(), &parsed.graph, &common.options());
            report.labels = parsed.labels;
            emit(&[report], &common, false)
        }
        Command::Family {
            spec,
            sample,
            seed,
            common,
        } => {
            let spec: FamilySpec = match spec.parse() {
                Ok(s) => s,
                Err(e) => return usage_error(e),
            };
            let reports = match sample {
                Some(k) => sample_family(&spec, k, seed, &common.options()),
                None => run_family(&spec, &common.options()),
            };
            match reports {
                Ok(r) => emit(&r, &common, true),
                Err(e) => usage_error(e),
            }
        }
        Command::Acceptance { seed } => {
            let results = run_acceptance(&AcceptanceConfig {
                seed,
                ..AcceptanceConfig::default()
            });
            write_out(&results.iter().map(|r| format!("{r}\n")).collect::<String>());
            ExitCode::from(exit_code(&results) as u8)
        }
    }
}
