//! Tabular experiment output.
//!
//! Every experiment returns an `ExperimentReport`: a named table (emitted
//! as CSV with a header row), an ordered list of summary statistics, and
//! the exact config and seed that produced it, so any report can be
//! regenerated byte-for-byte.

use std::io;
use std::path::{Path, PathBuf};

use cola_sim::SimConfig;

/// A rectangular table destined for CSV.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

/// Quote a CSV field only when it needs it (comma, quote, or newline).
fn csv_field(field: &str) -> String {
    if field.contains([',', '"', '\n']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

impl Table {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Self {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    /// Append a row; must match the header width.
    pub fn push_row<S: Into<String>>(&mut self, row: impl IntoIterator<Item = S>) {
        let row: Vec<String> = row.into_iter().map(Into::into).collect();
        assert_eq!(
            row.len(),
            self.header.len(),
            "row width must match header width"
        );
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let emit = |line: &[String], out: &mut String| {
            let joined: Vec<String> = line.iter().map(|f| csv_field(f)).collect();
            out.push_str(&joined.join(","));
            out.push('\n');
        };
        emit(&self.header, &mut out);
        for row in &self.rows {
            emit(row, &mut out);
        }
        out
    }
}

/// One finished experiment: what ran, under which config and seed, and
/// what came out.
#[derive(Debug, Clone)]
pub struct ExperimentReport {
    pub name: String,
    pub seed: u64,
    pub config: SimConfig,
    /// Ordered key/value summary statistics, pre-rendered.
    pub summary: Vec<(String, String)>,
    pub table: Table,
}

impl ExperimentReport {
    /// Human-readable summary block: identity, statistics, then the full
    /// config snapshot in TOML.
    pub fn summary_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("experiment: {}\n", self.name));
        out.push_str(&format!("seed: {}\n", self.seed));
        for (key, value) in &self.summary {
            out.push_str(&format!("{key}: {value}\n"));
        }
        out.push_str("\n--- config snapshot ---\n");
        out.push_str(&self.config.to_toml_string());
        out
    }

    /// Write `<name>.csv` and `<name>_summary.txt` under `dir`; returns
    /// both paths.
    pub fn write_to_dir(&self, dir: &Path) -> io::Result<(PathBuf, PathBuf)> {
        std::fs::create_dir_all(dir)?;
        let csv_path = dir.join(format!("{}.csv", self.name));
        let summary_path = dir.join(format!("{}_summary.txt", self.name));
        std::fs::write(&csv_path, self.table.to_csv())?;
        std::fs::write(&summary_path, self.summary_text())?;
        Ok((csv_path, summary_path))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_quotes_only_when_needed() {
        let mut t = Table::new(["a", "b"]);
        t.push_row(["plain", "with,comma"]);
        t.push_row(["with\"quote", "with\nnewline"]);
        let csv = t.to_csv();
        assert_eq!(
            csv,
            "a,b\nplain,\"with,comma\"\n\"with\"\"quote\",\"with\nnewline\"\n"
        );
    }

    #[test]
    #[should_panic(expected = "row width")]
    fn ragged_rows_are_rejected() {
        let mut t = Table::new(["a", "b"]);
        t.push_row(["only-one"]);
    }

    #[test]
    fn report_files_land_in_dir() {
        let report = ExperimentReport {
            name: "demo".to_string(),
            seed: 9,
            config: SimConfig::default(),
            summary: vec![("k".to_string(), "v".to_string())],
            table: Table::new(["x"]),
        };
        let dir = tempfile::tempdir().unwrap();
        let (csv, summary) = report.write_to_dir(dir.path()).unwrap();
        assert!(csv.ends_with("demo.csv"));
        let text = std::fs::read_to_string(summary).unwrap();
        assert!(text.starts_with("experiment: demo\nseed: 9\nk: v\n"));
        assert!(text.contains("n_teams = 30"));
    }
}
