//! Machine-readable run reports.
//!
//! Reports are deterministic for identical inputs: the only wall-clock
//! content is the isolated `timestamp` field, which is excluded from the
//! input digest and easily stripped when comparing runs.

use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Clone, Debug, Serialize)]
pub struct ReportCheck {
    pub name: String,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
    /// Which statement the check exercises.
    pub theorem: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    /// Digest of the input files and arguments.
    pub inputs: String,
    pub checks: Vec<ReportCheck>,
    pub notes: Vec<String>,
    pub exit: i32,
    pub timestamp: String,
}

impl RunReport {
    pub fn new(command: impl Into<String>, inputs_digest: String) -> RunReport {
        RunReport {
            command: command.into(),
            inputs: inputs_digest,
            checks: Vec::new(),
            notes: Vec::new(),
            exit: 0,
            timestamp: now_epoch(),
        }
    }

    pub fn push_check(
        &mut self,
        name: impl Into<String>,
        passed: bool,
        exact: bool,
        residual: Option<f64>,
        theorem: impl Into<String>,
    ) {
        let status = match (passed, exact) {
            (true, true) => "exact-pass",
            (true, false) => "pass",
            (false, _) => "fail",
        };
        self.checks.push(ReportCheck {
            name: name.into(),
            status: status.to_string(),
            residual,
            theorem: theorem.into(),
        });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != "fail")
    }

    /// Sets the exit code from the check outcomes and returns it.
    pub fn finalize(&mut self) -> i32 {
        self.exit = if self.all_passed() { 0 } else { 1 };
        self.exit
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }
}

pub fn digest(parts: &[&str]) -> String {
    let mut hasher = Sha256::new();
    for p in parts {
        hasher.update(p.as_bytes());
        hasher.update([0u8]);
    }
    let out = hasher.finalize();
    let mut hex = String::with_capacity(2 + out.len() * 2);
    hex.push_str("sha256:");
    for byte in out {
        hex.push_str(&format!("{byte:02x}"));
    }
    hex
}

fn now_epoch() -> String {
    use std::time::{SystemTime, UNIX_EPOCH};
    let secs = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .unwrap_or_default()
        .as_secs();
    format!("{secs}")
}

/// A plain comma-separated residual table with a one-line header.
#[derive(Clone, Debug, Default)]
pub struct CsvTable {
    pub header: String,
    pub rows: Vec<String>,
}

impl CsvTable {
    pub fn new(header: impl Into<String>) -> CsvTable {
        CsvTable {
            header: header.into(),
            rows: Vec::new(),
        }
    }

    pub fn push_row(&mut self, row: String) {
        self.rows.push(row);
    }

    pub fn render(&self) -> String {
        let mut s = String::with_capacity((self.rows.len() + 1) * 32);
        s.push_str(&self.header);
        s.push('\n');
        for row in &self.rows {
            s.push_str(row);
            s.push('\n');
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_is_stable_and_order_sensitive() {
        let a = digest(&["x", "y"]);
        assert_eq!(a, digest(&["x", "y"]));
        assert_ne!(a, digest(&["y", "x"]));
        assert!(a.starts_with("sha256:"));
        assert_eq!(a.len(), 7 + 64);
    }

    #[test]
    fn exit_codes_follow_checks() {
        let mut r = RunReport::new("test", digest(&[]));
        r.push_check("a", true, true, None, "t");
        assert_eq!(r.finalize(), 0);
        r.push_check("b", false, false, Some(0.5), "t");
        assert_eq!(r.finalize(), 1);
        let json = r.to_json();
        assert!(json.contains("\"exact-pass\""));
        assert!(json.contains("\"fail\""));
    }

    #[test]
    fn csv_has_single_header_line() {
        let mut t = CsvTable::new("a,b");
        t.push_row("1,2".into());
        assert_eq!(t.render(), "a,b\n1,2\n");
    }
}
