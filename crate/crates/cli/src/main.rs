//! `cola` — command-line front end for the draft-compensation toolkit:
//! replay ledger history, verify against reference snapshots, settle a
//! season's lottery, score expert surveys, run the agent-based league
//! simulator, and drive the canned experiment suite.
//!
//! Every run prints the effective master seed as its first output line so
//! any result can be reproduced byte-for-byte.

mod commands;
mod error;
mod state;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use cola_core::MechanismConfig;
use cola_sim::SimConfig;

use crate::commands::experiments::{cmd_experiment, parse_team_list, ExperimentName};
use crate::commands::lottery::cmd_lottery;
use crate::commands::rbts::cmd_rbts_score;
use crate::commands::replay::{cmd_replay, cmd_verify};
use crate::commands::simulate::cmd_simulate;
use crate::error::CliError;

#[derive(Parser)]
#[command(name = "cola", version, about = "Draft-compensation ledger toolkit")]
struct Cli {
    /// Master seed; omitted means a fresh random one (always printed).
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// TOML config file: mechanism settings for replay/verify/lottery,
    /// simulation settings for simulate/experiments. Built-in defaults
    /// when omitted.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Directory for generated files (falls back to $COLA_OUT_DIR, then
    /// ./cola-out).
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Print resolved config source and output directory before running.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Replay a history event log from zero ledgers and print the final
    /// ledger snapshot; optionally diff against a reference.
    Replay {
        /// Event log file.
        #[arg(long)]
        events: PathBuf,
        /// Reference ledger snapshot to diff against (exit 1 on deltas).
        #[arg(long)]
        reference: Option<PathBuf>,
    },
    /// Replay a history event log and report PASS/FAIL against a
    /// reference ledger snapshot.
    Verify {
        /// Event log file.
        #[arg(long)]
        events: PathBuf,
        /// Reference ledger snapshot.
        #[arg(long)]
        reference: PathBuf,
    },
    /// Settle one season from a state file: index increments, the
    /// weighted draw, diminishment, and the full draft order.
    Lottery {
        /// Season state file (team rows plus a line directive).
        #[arg(long)]
        state: PathBuf,
    },
    /// Survey scoring.
    #[command(subcommand)]
    Rbts(RbtsCommand),
    /// Run the agent-based league simulator and write per-season records.
    Simulate {
        /// Seasons per replicate.
        #[arg(long, default_value_t = 100)]
        seasons: usize,
        /// Independent replicate runs.
        #[arg(long, default_value_t = 1)]
        replicates: usize,
    },
    /// Canned experiments over simulated league histories.
    #[command(subcommand)]
    Experiments(ExperimentsCommand),
}

#[derive(Subcommand)]
enum RbtsCommand {
    /// Score one survey round: consensus line, per-agent scores, payments.
    Score {
        /// Survey responses file.
        #[arg(long)]
        responses: PathBuf,
        /// Total payment budget for the round.
        #[arg(long, default_value_t = 1000.0)]
        budget: f64,
    },
}

#[derive(Subcommand)]
enum ExperimentsCommand {
    /// Run one named experiment; writes a CSV and a summary to the out dir.
    Run {
        /// Which experiment to run.
        name: ExperimentName,
        /// Seasons per run (default depends on the experiment).
        #[arg(long)]
        seasons: Option<usize>,
        /// Replicate runs (streaks experiment only).
        #[arg(long)]
        replicates: Option<usize>,
        /// Comma-separated teams for index-trajectories, e.g. "T05,T12"
        /// (default: two teams sampled from the seed).
        #[arg(long)]
        teams: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let seed = cli.seed.unwrap_or_else(rand::random);
    // First line of every run, so output files and draws are reproducible.
    println!("seed: {seed}");
    if cli.verbose > 0 {
        match &cli.config {
            Some(path) => println!("config: {}", path.display()),
            None => println!("config: built-in defaults"),
        }
        println!("out dir: {}", out_dir(&cli).display());
    }
    match run(&cli, seed) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn run(cli: &Cli, seed: u64) -> Result<u8, CliError> {
    match &cli.command {
        Command::Replay { events, reference } => {
            let cfg = load_mechanism(cli.config.as_deref())?;
            cmd_replay(events, reference.as_deref(), &cfg)
        }
        Command::Verify { events, reference } => {
            let cfg = load_mechanism(cli.config.as_deref())?;
            cmd_verify(events, reference, &cfg)
        }
        Command::Lottery { state } => {
            let cfg = load_mechanism(cli.config.as_deref())?;
            cmd_lottery(state, seed, &cfg)
        }
        Command::Rbts(RbtsCommand::Score { responses, budget }) => {
            cmd_rbts_score(responses, *budget, seed)
        }
        Command::Simulate {
            seasons,
            replicates,
        } => {
            let cfg = load_sim(cli.config.as_deref())?;
            cmd_simulate(&cfg, *seasons, *replicates, seed, &out_dir(cli))
        }
        Command::Experiments(ExperimentsCommand::Run {
            name,
            seasons,
            replicates,
            teams,
        }) => {
            let cfg = load_sim(cli.config.as_deref())?;
            let teams = teams.as_deref().map(parse_team_list).transpose()?;
            cmd_experiment(
                *name,
                &cfg,
                *seasons,
                *replicates,
                teams.as_deref(),
                seed,
                &out_dir(cli),
            )
        }
    }
}

fn out_dir(cli: &Cli) -> PathBuf {
    cli.out
        .clone()
        .or_else(|| std::env::var_os("COLA_OUT_DIR").map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("cola-out"))
}

fn load_mechanism(path: Option<&Path>) -> Result<MechanismConfig, CliError> {
    match path {
        None => Ok(MechanismConfig::default()),
        Some(p) => Ok(MechanismConfig::from_toml_file(p)?),
    }
}

fn load_sim(path: Option<&Path>) -> Result<SimConfig, CliError> {
    match path {
        None => Ok(SimConfig::default()),
        Some(p) => Ok(SimConfig::from_toml_file(p)?),
    }
}
