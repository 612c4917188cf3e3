use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use involut_harness::config::{Format, SweepConfig};
use involut_harness::h1cmd::cmd_h1;
use involut_harness::instance::random_instance;
use involut_harness::report::run_sweep;
use involut_harness::HarnessError;

/// Finite groupoids with involution: H¹ reports and seeded verification sweeps.
///
/// Size caps can be raised with INVOLUT_MAX_GROUP_ORDER, INVOLUT_ENUM_CAP and
/// INVOLUT_MAX_ARROWS.
#[derive(Parser)]
#[command(name = "involut", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Nonabelian H¹ of a group with an involutive automorphism.
    H1 {
        /// Group spec, e.g. S4, D8, C2xC4.
        group: String,
        /// trivial, inner:<element> or index:<k>.
        involution: String,
        /// Print JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Run a check over the configured family or over seeded instances.
    Verify {
        /// sawin, smith-thom, decomposition, fibers or series.
        check: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of seeded instances (instance checks only).
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 16)]
        max_order: usize,
        #[arg(long, default_value_t = 12)]
        max_set_size: usize,
        /// Comma-separated group specs replacing the built-in family.
        #[arg(long, value_delimiter = ',')]
        groups: Option<Vec<String>>,
        /// Report path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "json")]
        format: Format,
    },
    /// Print the dump of the seeded random instance.
    Instance {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 16)]
        max_order: usize,
        #[arg(long, default_value_t = 12)]
        max_set_size: usize,
    },
}

fn run(cli: Cli) -> Result<bool, HarnessError> {
    match cli.command {
        Command::H1 {
            group,
            involution,
            json,
        } => {
            let r = cmd_h1(&group, &involution)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&r).expect("report serialises"));
            } else {
                print!("{}", r.to_text());
            }
            Ok(true)
        }
        Command::Verify {
            check,
            seed,
            count,
            max_order,
            max_set_size,
            groups,
            out,
            format,
        } => {
            let mut cfg = SweepConfig {
                seed,
                instance_count: count,
                max_group_order: max_order,
                max_set_size,
                output_path: out,
                format,
                ..SweepConfig::default()
            };
            if let Some(g) = groups {
                cfg.group_family = g;
            }
            let report = run_sweep(&check, &cfg)?;
            match &cfg.output_path {
                Some(path) => {
                    report.write(path, format)?;
                    let s = report.summary;
                    eprintln!(
                        "{}: {} passed, {} failed, {} skipped of {}",
                        report.check, s.passed, s.failed, s.skipped, s.total
                    );
                }
                None => print!("{}", report.render(format)),
            }
            Ok(!report.has_failures())
        }
        Command::Instance {
            seed,
            max_order,
            max_set_size,
        } => {
            let cfg = SweepConfig {
                seed,
                max_group_order: max_order,
                max_set_size,
                ..SweepConfig::default()
            };
            cfg.validate()?;
            let inst = random_instance(seed, &cfg)?;
            println!(
                "# group {} strategy {} points {} sha256 {}",
                inst.group_spec,
                inst.strategy,
                inst.action.points(),
                inst.hash
            );
            print!("{}", inst.dump);
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
