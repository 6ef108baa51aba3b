use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use nur4::classify::{classify_length, ClassifyOptions};
use nur4::duality::NicePolicy;
use nur4::export::{inspect, run_classify, Emit, Format, RunConfig};
use nur4::ring::format_tables;
use nur4::tables::{
    diff_tables, format_diff, format_reconciliation, format_table, nice_reconciliation,
    published_rows,
};

#[derive(Parser)]
#[command(
    name = "nur4",
    version,
    about = "Classify linear codes over the non-unital ring E of order 4"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Ring utilities.
    Ring {
        #[command(subcommand)]
        what: RingCommand,
    },
    /// Print everything about one code, e.g. `nur4 inspect n=4 k0=1 k1=2 T=10 U=1 V=01`.
    Inspect {
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        spec: Vec<String>,
    },
    /// Classify all codes of a length or of a single type.
    Classify {
        #[arg(long)]
        n: usize,
        #[arg(long, requires = "k1")]
        k0: Option<usize>,
        #[arg(long, requires = "k0")]
        k1: Option<usize>,
        #[arg(long)]
        with_nice: bool,
        /// Allow niceness at n = 7.
        #[arg(long)]
        allow_nice_n7: bool,
        #[arg(long, default_value = "both")]
        policy: NicePolicy,
        #[arg(long, value_enum, default_value_t = EmitArg::Summary)]
        emit: EmitArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
        /// Output directory; the summary goes to stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, env = "NUR4_JOBS", default_value_t = 1)]
        jobs: usize,
        /// Optimal candidate indices kept per type.
        #[arg(long, default_value_t = 1_000_000)]
        optimal_cap: usize,
    },
    /// Print the classification tables, optionally diffed against the published values.
    Tables {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long)]
        diff: bool,
        /// Niceness policy for the N columns (computed for n <= 6).
        #[arg(long)]
        policy: Option<NicePolicy>,
        #[arg(long, env = "NUR4_JOBS", default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Subcommand)]
enum RingCommand {
    /// Print the addition and multiplication tables.
    Tables,
}

#[derive(Clone, Copy, ValueEnum)]
enum EmitArg {
    Summary,
    Full,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match cli.command {
        Command::Ring {
            what: RingCommand::Tables,
        } => {
            println!("{}", format_tables());
            ExitCode::SUCCESS
        }
        Command::Inspect { spec } => match inspect(&spec.join(" ")) {
            Ok(report) => {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("report serializes")
                );
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
        Command::Classify {
            n,
            k0,
            k1,
            with_nice,
            allow_nice_n7,
            policy,
            emit,
            format,
            out,
            jobs,
            optimal_cap,
        } => {
            if jobs == 0 {
                eprintln!("error: --jobs must be at least 1");
                return ExitCode::from(2);
            }
            let mut options = ClassifyOptions {
                jobs,
                optimal_cap,
                ..ClassifyOptions::default()
            };
            if allow_nice_n7 {
                options.nice_max_n = 7;
                if with_nice && n == 7 {
                    log::warn!("niceness at n = 7 scans 4^7 words per code; expect a long run");
                }
            }
            let config = RunConfig {
                n,
                k0,
                k1,
                with_nice,
                policy,
                emit: match emit {
                    EmitArg::Summary => Emit::Summary,
                    EmitArg::Full => Emit::Full,
                },
                format: match format {
                    FormatArg::Json => Format::Json,
                    FormatArg::Csv => Format::Csv,
                },
                out,
                options,
            };
            match run_classify(&config) {
                Ok(output) => {
                    if output.files.is_empty() {
                        let text = match config.format {
                            Format::Json => nur4::export::summary_json(&output.report)
                                .expect("report serializes"),
                            Format::Csv => nur4::export::summary_csv(&output.report),
                        };
                        print!("{text}");
                    } else {
                        print!(
                            "{}",
                            format_table(
                                std::slice::from_ref(&output.report),
                                with_nice.then_some(policy)
                            )
                        );
                        for f in &output.files {
                            println!("wrote {}", f.display());
                        }
                    }
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(e.exit_code() as u8)
                }
            }
        }
        Command::Tables {
            max_n,
            diff,
            policy,
            jobs,
        } => {
            if !(2..=7).contains(&max_n) || jobs == 0 {
                eprintln!("error: --max-n must be in 2..=7 and --jobs at least 1");
                return ExitCode::from(2);
            }
            let mut reports = Vec::new();
            for n in 2..=max_n {
                let options = ClassifyOptions {
                    jobs,
                    ..ClassifyOptions::default()
                }
                .with_nice(policy.is_some() && n <= 6);
                match classify_length(n, &options) {
                    Ok(r) => reports.push(r),
                    Err(e) => {
                        eprintln!("error: {e}");
                        return ExitCode::from(2);
                    }
                }
            }
            print!("{}", format_table(&reports, policy));
            if diff {
                let d = diff_tables(&reports, &published_rows());
                println!();
                print!("{}", format_diff(&d));
                if policy.is_some() {
                    println!();
                    print!(
                        "{}",
                        format_reconciliation(&nice_reconciliation(&reports, &published_rows()))
                    );
                }
                if !d.is_clean() {
                    return ExitCode::from(1);
                }
            }
            ExitCode::SUCCESS
        }
    }
}
