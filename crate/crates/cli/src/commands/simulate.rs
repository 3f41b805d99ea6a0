//! Multi-season league simulation with per-replicate CSV output.

use std::path::Path;

use cola_experiments::Table;
use cola_sim::season::team_name;
use cola_sim::{run_replicates, ReplicateRun, SimConfig};

use crate::error::CliError;

/// Run the simulator and write one CSV per replicate into `out_dir`.
pub fn cmd_simulate(
    cfg: &SimConfig,
    seasons: usize,
    replicates: usize,
    seed: u64,
    out_dir: &Path,
) -> Result<u8, CliError> {
    if seasons == 0 || replicates == 0 {
        return Err(CliError::validation(
            "simulate needs at least one season and one replicate",
        ));
    }
    let runs = run_replicates(cfg, seasons, replicates, seed)?;
    std::fs::create_dir_all(out_dir)?;

    println!("seasons: {seasons}, replicates: {replicates}");
    for run in &runs {
        let path = out_dir.join(format!("replicate_{:02}.csv", run.replicate));
        let table = replicate_table(run);
        std::fs::write(&path, table.to_csv())?;
        println!(
            "wrote {} ({} records)",
            path.display(),
            table.rows.len()
        );
    }
    Ok(0)
}

/// Flatten a replicate into one long CSV table: a row per team-season.
pub fn replicate_table(run: &ReplicateRun) -> Table {
    let mut table = Table::new([
        "replicate",
        "season",
        "team",
        "wins",
        "rank",
        "result",
        "pick",
        "tickets",
        "index_start",
        "index_end",
        "strength_end",
    ]);
    for season in &run.seasons {
        for row in &season.rows {
            table.push_row([
                run.replicate.to_string(),
                season.season.to_string(),
                team_name(row.team),
                row.wins.to_string(),
                row.rank.to_string(),
                row.result.to_string(),
                row.pick.to_string(),
                row.tickets.to_string(),
                row.index_start.to_string(),
                row.index_end.to_string(),
                format!("{:.6}", row.strength_end),
            ]);
        }
    }
    table
}
