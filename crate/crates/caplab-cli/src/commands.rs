//! Subcommand definitions and dispatch.
//!
//! `compute` prints one quantity for one channel; `sweep` writes a
//! `param,ce_bits` CSV over a parameter grid; `verify` runs named
//! inequality suites and optionally writes a JSON report; `info` prints a
//! channel's structural summary. Identical invocations produce
//! byte-identical CSV/JSON outputs: report files zero out the wall-time
//! field (the console line carries the measured time).

use std::fs;
use std::path::{Path, PathBuf};

use caplab::capacity::{capacity_sweep, compute_ce, compute_one_shot_c1, OptimizerConfig};
use caplab::channels::{family_parameter, QuantumChannel};
use caplab::entropy::{coherent_information, mutual_information};
use caplab::qmat::DensityMatrix;
use caplab::verify::{run_suite, SuiteId, SuiteReport};
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use crate::spec;
use crate::CliError;

#[derive(Parser)]
#[command(
    name = "caplab",
    about = "Entanglement-assisted capacities of finite-dimensional quantum channels",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Compute a capacity or information quantity for one channel.
    #[command(group(ArgGroup::new("source").required(true).args(["channel", "builtin"])))]
    Compute {
        /// Channel document (builtin or explicit Kraus form).
        #[arg(long, value_name = "FILE")]
        channel: Option<PathBuf>,
        /// Builtin family: identity, depolarizing, dephasing,
        /// amplitude_damping, erasure.
        #[arg(long, value_name = "NAME")]
        builtin: Option<String>,
        /// Family parameters, e.g. p=0.25,d=2.
        #[arg(long, value_name = "K=V,...", default_value = "", requires = "builtin")]
        params: String,
        /// ce = entanglement-assisted, c1 = one-shot Holevo (lower bound),
        /// mi/ci = mutual/coherent information at --input-state.
        #[arg(long, value_enum)]
        quantity: Quantity,
        /// Density-matrix document; required by mi and ci, ignored otherwise.
        #[arg(long, value_name = "FILE")]
        input_state: Option<PathBuf>,
        /// Optimizer restarts (ce/c1 only).
        #[arg(long, value_name = "N")]
        restarts: Option<usize>,
        /// Optimizer seed (ce/c1 only).
        #[arg(long, value_name = "N")]
        seed: Option<u64>,
    },
    /// Sweep a builtin family's parameter and write C_E per grid point.
    Sweep {
        #[arg(long, value_name = "NAME")]
        builtin: String,
        /// Parameter key to sweep (must be the family's parameter).
        #[arg(long, value_name = "KEY")]
        param: String,
        /// Inclusive grid START,END,COUNT.
        #[arg(long, value_name = "START,END,COUNT")]
        range: String,
        /// Output CSV path.
        #[arg(long, value_name = "FILE.csv")]
        out: PathBuf,
    },
    /// Run a verification suite (or all) on seeded random instances.
    Verify {
        /// Suite id (dp, convexity, additivity, ssa, jsa, monotonicity,
        /// exchange-bound, concavity, decomp, bound, eq3) or "all".
        #[arg(long, value_name = "ID|all")]
        suite: String,
        #[arg(long, value_name = "N")]
        trials: usize,
        #[arg(long, value_name = "N")]
        seed: u64,
        /// JSON report path (object for one suite, array for "all").
        #[arg(long, value_name = "FILE.json")]
        report: Option<PathBuf>,
    },
    /// Print a channel's dimensions, Kraus rank, CPTP deviation, and Choi
    /// spectrum.
    Info {
        #[arg(long, value_name = "FILE")]
        channel: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Quantity {
    Ce,
    C1,
    Mi,
    Ci,
}

/// Dispatches a parsed invocation and returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return 2;
    }
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

/// `CAPLAB_THREADS` caps internal parallelism; absent means the rayon
/// default.
fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var("CAPLAB_THREADS") else {
        return Ok(());
    };
    let n: usize = raw.parse().ok().filter(|&n| n >= 1).ok_or_else(|| {
        CliError::Usage(format!(
            "CAPLAB_THREADS must be a positive integer, got {raw:?}"
        ))
    })?;
    // A second initialization (e.g. under a test harness) keeps the
    // existing pool; that is fine.
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global();
    Ok(())
}

fn dispatch(command: Command) -> Result<i32, CliError> {
    match command {
        Command::Compute {
            channel,
            builtin,
            params,
            quantity,
            input_state,
            restarts,
            seed,
        } => {
            let ch = load_channel(channel.as_deref(), builtin.as_deref(), &params)?;
            let cfg = optimizer_config(restarts, seed)?;
            match quantity {
                Quantity::Ce => {
                    println!("C_E = {:.6} bits", compute_ce(&ch, &cfg).value_bits);
                }
                Quantity::C1 => {
                    println!(
                        "C_1 = {:.6} bits (lower bound)",
                        compute_one_shot_c1(&ch, &cfg).value_bits
                    );
                }
                Quantity::Mi => {
                    let rho = load_state(input_state.as_deref(), "mi")?;
                    println!("I = {:.6} bits", mutual_information(&ch, &rho)?.bits());
                }
                Quantity::Ci => {
                    let rho = load_state(input_state.as_deref(), "ci")?;
                    println!("I_c = {:.6} bits", coherent_information(&ch, &rho)?);
                }
            }
            Ok(0)
        }
        Command::Sweep {
            builtin,
            param,
            range,
            out,
        } => {
            let key = family_parameter(&builtin)?.ok_or_else(|| {
                CliError::Usage(format!("family {builtin} has no parameter to sweep"))
            })?;
            if param != key {
                return Err(CliError::Usage(format!(
                    "family {builtin} sweeps parameter {key}, not {param}"
                )));
            }
            let grid = spec::parse_range(&range)?;
            let points = capacity_sweep(&builtin, &grid, &OptimizerConfig::default())?;
            let mut body = String::from("param,ce_bits\n");
            for point in &points {
                body.push_str(&format!("{:.6},{:.6}\n", point.param, point.ce_bits));
            }
            write_file(&out, &body)?;
            Ok(0)
        }
        Command::Verify {
            suite,
            trials,
            seed,
            report,
        } => {
            if trials == 0 {
                return Err(CliError::Usage("--trials must be at least 1".into()));
            }
            let ids: Vec<SuiteId> = if suite == "all" {
                SuiteId::ALL.to_vec()
            } else {
                vec![suite.parse::<SuiteId>()?]
            };
            let mut reports = Vec::with_capacity(ids.len());
            for id in ids {
                let rep = run_suite(id, trials, seed);
                println!(
                    "suite {}: trials={} failures={} worst_slack={:.6} bits elapsed={:.6} s",
                    rep.suite, rep.trials, rep.failures, rep.worst_slack_bits, rep.elapsed_seconds
                );
                reports.push(rep);
            }
            if let Some(path) = report {
                write_file(&path, &render_report(&reports)?)?;
            }
            Ok(if reports.iter().any(|r| r.failures > 0) {
                1
            } else {
                0
            })
        }
        Command::Info { channel } => {
            let ch = spec::parse_channel_spec(&read_file(&channel)?)?;
            let cptp = ch.validate_cptp();
            let choi = ch.choi_of();
            println!("dim_in = {}", ch.dim_in());
            println!("dim_out = {}", ch.dim_out());
            println!("kraus_rank = {}", ch.kraus_rank());
            println!("cptp_deviation = {:.6e}", cptp.deviation);
            let spectrum: Vec<String> = choi
                .state()
                .eigenvalues()
                .iter()
                .map(|l| format!("{l:.6}"))
                .collect();
            println!("choi_spectrum = [{}]", spectrum.join(", "));
            Ok(0)
        }
    }
}

fn load_channel(
    channel: Option<&Path>,
    builtin: Option<&str>,
    params: &str,
) -> Result<QuantumChannel, CliError> {
    match (channel, builtin) {
        (Some(path), None) => spec::parse_channel_spec(&read_file(path)?),
        (None, Some(family)) => {
            let map = spec::parse_params(params)?;
            Ok(caplab::channels::standard_channel(family, &map)?)
        }
        _ => Err(CliError::Usage(
            "exactly one of --channel and --builtin is required".into(),
        )),
    }
}

fn load_state(path: Option<&Path>, quantity: &str) -> Result<DensityMatrix, CliError> {
    let path = path.ok_or_else(|| {
        CliError::Usage(format!("quantity {quantity} requires --input-state FILE"))
    })?;
    spec::parse_density_matrix(&read_file(path)?)
}

fn optimizer_config(
    restarts: Option<usize>,
    seed: Option<u64>,
) -> Result<OptimizerConfig, CliError> {
    let mut cfg = OptimizerConfig::default();
    if let Some(r) = restarts {
        if r == 0 {
            return Err(CliError::Usage("--restarts must be at least 1".into()));
        }
        cfg.restarts = r;
    }
    if let Some(s) = seed {
        cfg.seed = s;
    }
    Ok(cfg)
}

/// Serializes suite reports with `elapsed_seconds` zeroed so identical
/// invocations write byte-identical files.
fn render_report(reports: &[SuiteReport]) -> Result<String, CliError> {
    let stable: Vec<SuiteReport> = reports
        .iter()
        .map(|r| SuiteReport {
            elapsed_seconds: 0.0,
            ..r.clone()
        })
        .collect();
    let body = if stable.len() == 1 {
        serde_json::to_string_pretty(&stable[0])
    } else {
        serde_json::to_string_pretty(&stable)
    }
    .expect("suite reports serialize");
    Ok(body + "\n")
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.display().to_string(),
        source,
    })
}

fn write_file(path: &Path, body: &str) -> Result<(), CliError> {
    fs::write(path, body).map_err(|source| CliError::Write {
        path: path.display().to_string(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn optimizer_config_overrides() {
        let cfg = optimizer_config(Some(3), Some(7)).unwrap();
        assert_eq!((cfg.restarts, cfg.seed), (3, 7));
        let cfg = optimizer_config(None, None).unwrap();
        assert_eq!(cfg.restarts, OptimizerConfig::default().restarts);
        assert!(optimizer_config(Some(0), None).is_err());
    }

    #[test]
    fn report_rendering_is_stable_and_zeroes_elapsed() {
        let rep = run_suite(SuiteId::Eq3, 3, 11);
        let a = render_report(std::slice::from_ref(&rep)).unwrap();
        let b = render_report(std::slice::from_ref(&rep)).unwrap();
        assert_eq!(a, b);
        assert!(a.contains("\"elapsed_seconds\": 0.0"));
        assert!(a.contains("\"suite\": \"eq3\""));
        assert!(a.ends_with('\n'));
    }

    #[test]
    fn cli_parses_the_documented_grammar() {
        use clap::Parser as _;
        Cli::try_parse_from([
            "caplab",
            "compute",
            "--builtin",
            "depolarizing",
            "--params",
            "p=0.25",
            "--quantity",
            "ce",
            "--restarts",
            "4",
            "--seed",
            "1",
        ])
        .unwrap();
        Cli::try_parse_from([
            "caplab",
            "sweep",
            "--builtin",
            "depolarizing",
            "--param",
            "p",
            "--range",
            "0,1,21",
            "--out",
            "sweep.csv",
        ])
        .unwrap();
        Cli::try_parse_from([
            "caplab", "verify", "--suite", "all", "--trials", "50", "--seed", "42", "--report",
            "out.json",
        ])
        .unwrap();
        Cli::try_parse_from(["caplab", "info", "--channel", "ch.json"]).unwrap();
        // --channel and --builtin are mutually exclusive and one is required.
        assert!(Cli::try_parse_from([
            "caplab",
            "compute",
            "--channel",
            "a.json",
            "--builtin",
            "identity",
            "--quantity",
            "ce",
        ])
        .is_err());
        assert!(Cli::try_parse_from(["caplab", "compute", "--quantity", "ce"]).is_err());
    }
}
