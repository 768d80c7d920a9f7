//! Matrix-set documents:
//!
//! ```json
//! {"dim": 2, "field_tag": "complex",
//!  "matrices": [[[[1, 0], [0, 1]], [[0, -1], [2, 0]]]],
//!  "labels": ["A"]}
//! ```
//!
//! Real documents write entries as plain numbers; complex documents as
//! `[re, im]` pairs (a plain number is accepted as a real entry).

use loewner_core::{CMatrix, HermitianMatrix, MatrixSet, Tolerances};
use num_complex::Complex;
use serde_json::{json, Map, Value};

use crate::error::{CliError, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldTag {
    Real,
    Complex,
}

impl FieldTag {
    pub fn as_str(self) -> &'static str {
        match self {
            FieldTag::Real => "real",
            FieldTag::Complex => "complex",
        }
    }
}

/// A parsed and validated document.
#[derive(Clone, Debug)]
pub struct MatrixSetDocument {
    pub field_tag: FieldTag,
    pub set: MatrixSet<f64>,
    pub labels: Option<Vec<String>>,
    /// Free-text annotation, emitted by fixtures and kept when parsing.
    pub note: Option<String>,
}

impl MatrixSetDocument {
    pub fn new(set: MatrixSet<f64>, labels: Option<Vec<String>>) -> Self {
        let field_tag = if set.iter().all(HermitianMatrix::is_real) {
            FieldTag::Real
        } else {
            FieldTag::Complex
        };
        Self {
            field_tag,
            set,
            labels,
            note: None,
        }
    }

    pub fn dim(&self) -> usize {
        self.set.dim()
    }

    /// Label of member `i`, falling back to `#i`.
    pub fn label(&self, i: usize) -> String {
        self.labels
            .as_ref()
            .and_then(|l| l.get(i).cloned())
            .unwrap_or_else(|| format!("#{i}"))
    }

    pub fn to_value(&self) -> Value {
        let mut doc = Map::new();
        doc.insert("dim".into(), json!(self.dim()));
        doc.insert("field_tag".into(), json!(self.field_tag.as_str()));
        let matrices: Vec<Value> = self
            .set
            .iter()
            .map(|m| matrix_entries(m.as_matrix(), self.field_tag))
            .collect();
        doc.insert("matrices".into(), Value::Array(matrices));
        if let Some(labels) = &self.labels {
            doc.insert("labels".into(), json!(labels));
        }
        if let Some(note) = &self.note {
            doc.insert("note".into(), json!(note));
        }
        Value::Object(doc)
    }

    /// Pretty-printed JSON with a trailing newline. `serde_json` writes the
    /// shortest representation that parses back to the same `f64`, so
    /// `parse(emit(doc))` reproduces every entry bit for bit.
    pub fn emit(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("document values are finite");
        s.push('\n');
        s
    }
}

/// Entries of a square matrix as nested JSON arrays, numbers for `Real` and
/// `[re, im]` pairs for `Complex`.
pub fn matrix_entries(m: &CMatrix<f64>, tag: FieldTag) -> Value {
    let rows: Vec<Value> = (0..m.nrows())
        .map(|i| {
            let row: Vec<Value> = (0..m.ncols())
                .map(|j| {
                    let z = m[(i, j)];
                    match tag {
                        FieldTag::Real => json!(z.re),
                        FieldTag::Complex => json!([z.re, z.im]),
                    }
                })
                .collect();
            Value::Array(row)
        })
        .collect();
    Value::Array(rows)
}

/// Tag that represents `m` without loss.
pub fn tag_for(m: &CMatrix<f64>) -> FieldTag {
    if m.iter().all(|z| z.im == 0.0) {
        FieldTag::Real
    } else {
        FieldTag::Complex
    }
}

fn parse_err(source: &str, locator: impl Into<String>, message: impl Into<String>) -> CliError {
    CliError::Parse {
        source_name: source.to_string(),
        locator: locator.into(),
        message: message.into(),
    }
}

fn validation_err(source: &str, locator: impl Into<String>, message: impl Into<String>) -> CliError {
    CliError::Validation {
        source_name: source.to_string(),
        locator: locator.into(),
        message: message.into(),
    }
}

/// Parses JSON text, reporting syntax errors with their line and column.
pub fn parse_json(text: &str, source: &str) -> CliResult<Value> {
    serde_json::from_str(text).map_err(|e| {
        // serde_json appends its own position; the locator already carries it.
        let msg = e.to_string();
        let msg = msg.split(" at line ").next().unwrap_or(&msg).to_string();
        parse_err(source, format!("line {}, column {}", e.line(), e.column()), msg)
    })
}

fn entry(v: &Value, tag: FieldTag, source: &str, at: &str) -> CliResult<Complex<f64>> {
    let number = |x: &Value, at: &str| {
        x.as_f64()
            .ok_or_else(|| parse_err(source, at, format!("expected a number, found {x}")))
    };
    match (v, tag) {
        (Value::Number(_), _) => Ok(Complex::new(number(v, at)?, 0.0)),
        (Value::Array(pair), FieldTag::Complex) if pair.len() == 2 => Ok(Complex::new(
            number(&pair[0], &format!("{at}[0]"))?,
            number(&pair[1], &format!("{at}[1]"))?,
        )),
        (_, FieldTag::Complex) => Err(parse_err(source, at, "expected a number or an [re, im] pair")),
        (_, FieldTag::Real) => Err(parse_err(source, at, "expected a number (field_tag is \"real\")")),
    }
}

/// Rows of a general (not necessarily square or Hermitian) matrix.
pub fn parse_general_matrix(v: &Value, tag: FieldTag, source: &str, at: &str) -> CliResult<CMatrix<f64>> {
    let rows = v
        .as_array()
        .ok_or_else(|| parse_err(source, at, "expected an array of rows"))?;
    if rows.is_empty() {
        return Err(validation_err(source, at, "matrix has no rows"));
    }
    let mut parsed: Vec<Vec<Complex<f64>>> = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let at_row = format!("{at}[{i}]");
        let cells = row
            .as_array()
            .ok_or_else(|| parse_err(source, &at_row, "expected an array of entries"))?;
        let cells = cells
            .iter()
            .enumerate()
            .map(|(j, c)| entry(c, tag, source, &format!("{at_row}[{j}]")))
            .collect::<CliResult<Vec<_>>>()?;
        parsed.push(cells);
    }
    let cols = parsed[0].len();
    if let Some(i) = parsed.iter().position(|r| r.len() != cols) {
        return Err(validation_err(
            source,
            format!("{at}[{i}]"),
            format!("row has {} entries, expected {cols}", parsed[i].len()),
        ));
    }
    if cols == 0 {
        return Err(validation_err(source, at, "matrix has no columns"));
    }
    Ok(CMatrix::from_fn(parsed.len(), cols, |i, j| parsed[i][j]))
}

fn field_tag(v: &Value, source: &str) -> CliResult<FieldTag> {
    match v.get("field_tag") {
        None => Err(parse_err(source, "field_tag", "missing field")),
        Some(Value::String(s)) if s == "real" => Ok(FieldTag::Real),
        Some(Value::String(s)) if s == "complex" => Ok(FieldTag::Complex),
        Some(other) => Err(parse_err(
            source,
            "field_tag",
            format!("expected \"real\" or \"complex\", found {other}"),
        )),
    }
}

/// Parses and validates a document: every matrix must be `dim × dim` and
/// Hermitian within `eq_rel`.
pub fn parse_document(text: &str, source: &str, tol: &Tolerances<f64>) -> CliResult<MatrixSetDocument> {
    let v = parse_json(text, source)?;
    if !v.is_object() {
        return Err(parse_err(source, "line 1", "expected a JSON object"));
    }
    let dim = match v.get("dim") {
        None => return Err(parse_err(source, "dim", "missing field")),
        Some(d) => d
            .as_u64()
            .filter(|&d| d >= 1)
            .ok_or_else(|| parse_err(source, "dim", format!("expected a positive integer, found {d}")))?
            as usize,
    };
    let tag = field_tag(&v, source)?;
    let matrices = match v.get("matrices") {
        None => return Err(parse_err(source, "matrices", "missing field")),
        Some(Value::Array(ms)) => ms,
        Some(_) => return Err(parse_err(source, "matrices", "expected an array of matrices")),
    };
    if matrices.is_empty() {
        return Err(validation_err(source, "matrices", "at least one matrix is required"));
    }
    let mut members = Vec::with_capacity(matrices.len());
    for (k, m) in matrices.iter().enumerate() {
        let at = format!("matrices[{k}]");
        let raw = parse_general_matrix(m, tag, source, &at)?;
        if raw.nrows() != dim || raw.ncols() != dim {
            return Err(validation_err(
                source,
                &at,
                format!("matrix is {}x{}, document dim is {dim}", raw.nrows(), raw.ncols()),
            ));
        }
        let h = HermitianMatrix::hermitize(raw, tol).map_err(|e| validation_err(source, &at, e.to_string()))?;
        members.push(h);
    }
    let labels = match v.get("labels") {
        None | Some(Value::Null) => None,
        Some(Value::Array(ls)) => {
            if ls.len() != members.len() {
                return Err(validation_err(
                    source,
                    "labels",
                    format!("{} labels for {} matrices", ls.len(), members.len()),
                ));
            }
            let labels = ls
                .iter()
                .enumerate()
                .map(|(i, l)| {
                    l.as_str()
                        .map(str::to_string)
                        .ok_or_else(|| parse_err(source, format!("labels[{i}]"), "expected a string"))
                })
                .collect::<CliResult<Vec<_>>>()?;
            Some(labels)
        }
        Some(_) => return Err(parse_err(source, "labels", "expected an array of strings")),
    };
    let note = v.get("note").and_then(Value::as_str).map(str::to_string);
    let set = MatrixSet::new(members).map_err(|e| validation_err(source, "matrices", e.to_string()))?;
    Ok(MatrixSetDocument {
        field_tag: tag,
        set,
        labels,
        note,
    })
}

/// Collects every matrix found under a `"rows"` key of a report value, with
/// its JSON path. Used to re-validate emitted matrices.
pub fn collect_report_matrices(v: &Value, path: &str, out: &mut Vec<(String, Value)>) {
    match v {
        Value::Object(map) => {
            if map.get("field_tag").is_some_and(Value::is_string) && map.contains_key("rows") {
                out.push((path.to_string(), v.clone()));
                return;
            }
            for (k, child) in map {
                collect_report_matrices(child, &format!("{path}.{k}"), out);
            }
        }
        Value::Array(items) => {
            for (i, child) in items.iter().enumerate() {
                collect_report_matrices(child, &format!("{path}[{i}]"), out);
            }
        }
        _ => {}
    }
}

/// Report encoding of a Hermitian matrix: `{"field_tag": …, "rows": …}`.
pub fn hermitian_value(m: &HermitianMatrix<f64>) -> Value {
    let tag = tag_for(m.as_matrix());
    json!({ "field_tag": tag.as_str(), "rows": matrix_entries(m.as_matrix(), tag) })
}

/// Report encoding of a general (possibly rectangular) matrix. Uses
/// `entries` instead of `rows` so that it is not mistaken for a Hermitian
/// one.
pub fn general_value(m: &CMatrix<f64>) -> Value {
    let tag = tag_for(m);
    json!({ "field_tag": tag.as_str(), "shape": [m.nrows(), m.ncols()], "entries": matrix_entries(m, tag) })
}

/// Decodes a matrix produced by [`hermitian_value`] and re-validates it as
/// Hermitian.
pub fn decode_hermitian(v: &Value, tol: &Tolerances<f64>) -> CliResult<HermitianMatrix<f64>> {
    let tag = field_tag(v, "report")?;
    let rows = v
        .get("rows")
        .ok_or_else(|| parse_err("report", "rows", "missing field"))?;
    let raw = parse_general_matrix(rows, tag, "report", "rows")?;
    HermitianMatrix::hermitize(raw, tol).map_err(|e| validation_err("report", "rows", e.to_string()))
}
