use std::fmt::Write as _;

use loewner_core::{CMatrix, HermitianMatrix, Tolerances};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

/// SHA-256 over named inputs. Each input contributes its name, its length
/// and its bytes, so that concatenation ambiguities cannot collide.
#[derive(Clone, Default)]
pub struct InputDigest {
    hasher: Sha256,
}

impl InputDigest {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, name: &str, bytes: &[u8]) -> &mut Self {
        for part in [name.as_bytes(), bytes] {
            self.hasher.update((part.len() as u64).to_le_bytes());
            self.hasher.update(part);
        }
        self
    }

    pub fn finish(self) -> String {
        let bytes = self.hasher.finalize();
        let mut s = String::from("sha256:");
        for b in bytes {
            let _ = write!(s, "{b:02x}");
        }
        s
    }
}

/// Result of one command: structured verdicts for `--json` and annotated
/// lines for the human report.
#[derive(Clone, Debug)]
pub struct RunReport {
    pub command: String,
    pub inputs_digest: String,
    pub tolerances: Tolerances<f64>,
    pub seed: u64,
    pub verdicts: Value,
    pub lines: Vec<String>,
    /// Only set with `--timing`; reports without it are byte-stable.
    pub elapsed_ms: Option<f64>,
}

impl RunReport {
    pub fn to_value(&self) -> Value {
        let mut m = Map::new();
        m.insert("command".into(), json!(self.command));
        m.insert("inputs_digest".into(), json!(self.inputs_digest));
        m.insert(
            "tolerances".into(),
            json!({
                "rank_rel": self.tolerances.rank_rel,
                "psd_rel": self.tolerances.psd_rel,
                "eq_rel": self.tolerances.eq_rel,
            }),
        );
        m.insert("seed".into(), json!(self.seed));
        m.insert("verdicts".into(), self.verdicts.clone());
        if let Some(ms) = self.elapsed_ms {
            m.insert("elapsed_ms".into(), json!(ms));
        }
        Value::Object(m)
    }

    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("report values are finite");
        s.push('\n');
        s
    }

    pub fn render_human(&self) -> String {
        let t = &self.tolerances;
        let mut s = String::new();
        let _ = writeln!(s, "command     {}", self.command);
        let _ = writeln!(s, "inputs      {}", self.inputs_digest);
        let _ = writeln!(
            s,
            "tolerances  rank {:e}, psd {:e}, eq {:e}; seed {}",
            t.rank_rel, t.psd_rel, t.eq_rel, self.seed
        );
        s.push('\n');
        for line in &self.lines {
            s.push_str(line);
            s.push('\n');
        }
        if let Some(ms) = self.elapsed_ms {
            let _ = writeln!(s, "\nelapsed     {ms:.3} ms");
        }
        s
    }
}

fn fmt_entry(re: f64, im: f64) -> String {
    let clean = |x: f64| if x.abs() < 5e-13 { 0.0 } else { x };
    let (re, im) = (clean(re), clean(im));
    if im == 0.0 {
        format!("{re:.6}")
    } else {
        format!("{re:.6}{:+.6}i", im)
    }
}

/// Indented rows of a matrix for human reports. Entries below `5e-13` print
/// as zero; the JSON report keeps full precision.
pub fn matrix_lines(m: &CMatrix<f64>, indent: usize) -> Vec<String> {
    let cells: Vec<Vec<String>> = (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| fmt_entry(m[(i, j)].re, m[(i, j)].im)).collect())
        .collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(0);
    cells
        .iter()
        .map(|row| {
            let body: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            format!("{}[ {} ]", " ".repeat(indent), body.join("  "))
        })
        .collect()
}

pub fn hermitian_lines(m: &HermitianMatrix<f64>, indent: usize) -> Vec<String> {
    matrix_lines(m.as_matrix(), indent)
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
