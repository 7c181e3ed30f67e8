//! Reading and writing delimited tables.
//!
//! A file whose header reads `label,divisor,...` is a raw data table; a
//! header starting with any other label gives a labeled matrix; a file whose
//! first row is all numbers is an unlabeled matrix. Files ending in `.tsv`
//! are tab-separated, everything else comma-separated.

use std::collections::BTreeSet;
use std::fmt::Display;
use std::path::Path;

use csv::{ReaderBuilder, StringRecord, Trim};
use fuzzadapt_core::{Matrix, RawDataTable};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq)]
pub struct LabeledMatrix {
    pub row_labels: Option<Vec<String>>,
    pub col_labels: Option<Vec<String>>,
    pub data: Matrix<f64>,
}

impl LabeledMatrix {
    pub fn row_labels_or(&self, prefix: &str) -> Vec<String> {
        self.row_labels.clone().unwrap_or_else(|| numbered(prefix, self.data.rows()))
    }

    pub fn col_labels_or(&self, prefix: &str) -> Vec<String> {
        self.col_labels.clone().unwrap_or_else(|| numbered(prefix, self.data.cols()))
    }

    /// Entries as integers; fails on the first fractional entry.
    pub fn integers(&self, what: &str) -> Result<Matrix<i64>, CliError> {
        for i in 0..self.data.rows() {
            for j in 0..self.data.cols() {
                let v = self.data.get(i, j);
                if v.fract() != 0.0 || v.abs() > 1e15 {
                    return Err(CliError::input(format!(
                        "{what}: entry {v} at row {}, column {} is not an integer",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(self.data.map(|v| v as i64))
    }
}

pub fn numbered(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

#[derive(Debug, Clone, PartialEq)]
pub enum Table {
    Raw(RawDataTable),
    Matrix(LabeledMatrix),
}

impl Table {
    pub fn into_matrix(self, path: &str) -> Result<LabeledMatrix, CliError> {
        match self {
            Table::Matrix(m) => Ok(m),
            Table::Raw(_) => Err(CliError::input(format!(
                "{path}: expected a matrix, found a raw data table with divisors"
            ))),
        }
    }

    pub fn into_raw(self, path: &str) -> Result<RawDataTable, CliError> {
        match self {
            Table::Raw(t) => Ok(t),
            Table::Matrix(_) => Err(CliError::input(format!(
                "{path}: expected a raw data table with a 'divisor' column"
            ))),
        }
    }
}

pub fn delimiter_for(path: &Path) -> u8 {
    match path.extension().and_then(|e| e.to_str()) {
        Some(ext) if ext.eq_ignore_ascii_case("tsv") => b'\t',
        _ => b',',
    }
}

pub fn load_table(path: impl AsRef<Path>) -> Result<Table, CliError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    parse_table(&text, delimiter_for(path)).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn parse_number(cell: &str, line: u64, col: usize, name: &str) -> Result<f64, String> {
    let v: f64 = cell
        .parse()
        .map_err(|_| format!("line {line}, column {col} ({name}): '{cell}' is not a number"))?;
    if !v.is_finite() {
        return Err(format!("line {line}, column {col} ({name}): '{cell}' is not a finite number"));
    }
    Ok(v)
}

fn line_of(rec: &StringRecord) -> u64 {
    rec.position().map_or(0, |p| p.line())
}

fn check_unique(labels: &[String], what: &str) -> Result<(), String> {
    let mut seen = BTreeSet::new();
    for (i, l) in labels.iter().enumerate() {
        if !seen.insert(l.as_str()) {
            return Err(format!("duplicate {what} label '{l}' at position {}", i + 1));
        }
    }
    Ok(())
}

/// Parses table text; errors carry line and column numbers.
pub fn parse_table(text: &str, delimiter: u8) -> Result<Table, String> {
    let mut reader = ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(Trim::All)
        .comment(Some(b'#'))
        .delimiter(delimiter)
        .from_reader(text.as_bytes());
    let mut records = Vec::new();
    for rec in reader.records() {
        let rec = rec.map_err(|e| e.to_string())?;
        if rec.len() == 1 && rec[0].is_empty() {
            continue;
        }
        records.push(rec);
    }
    let first = records.first().ok_or("file contains no rows")?;
    let width = first.len();
    for rec in &records {
        if rec.len() != width {
            return Err(format!("line {}: expected {width} fields, found {}", line_of(rec), rec.len()));
        }
    }

    let headerless = first.iter().all(|c| c.parse::<f64>().is_ok());
    if headerless {
        let mut data = Vec::with_capacity(records.len() * width);
        for rec in &records {
            for (j, cell) in rec.iter().enumerate() {
                data.push(parse_number(cell, line_of(rec), j + 1, "value")?);
            }
        }
        let data = Matrix::new(records.len(), width, data).map_err(|e| e.to_string())?;
        return Ok(Table::Matrix(LabeledMatrix {
            row_labels: None,
            col_labels: None,
            data,
        }));
    }

    let is_raw = width >= 2 && first[1].eq_ignore_ascii_case("divisor");
    let skip = if is_raw { 2 } else { 1 };
    if width <= skip {
        return Err(format!("line {}: header has no data columns", line_of(first)));
    }
    let col_labels: Vec<String> = first.iter().skip(skip).map(str::to_string).collect();
    check_unique(&col_labels, "column")?;
    let body = &records[1..];
    if body.is_empty() {
        return Err("table has a header but no data rows".into());
    }
    let mut row_labels = Vec::with_capacity(body.len());
    let mut divisors = Vec::with_capacity(body.len());
    let mut data = Vec::with_capacity(body.len() * col_labels.len());
    for rec in body {
        let line = line_of(rec);
        row_labels.push(rec[0].to_string());
        if is_raw {
            let d = parse_number(&rec[1], line, 2, "divisor")?;
            if d < 0.0 {
                return Err(format!("line {line}, column 2: negative divisor {d}"));
            }
            divisors.push(d);
        }
        for (j, cell) in rec.iter().enumerate().skip(skip) {
            data.push(parse_number(cell, line, j + 1, &first[j])?);
        }
    }
    check_unique(&row_labels, "row")?;
    let matrix = Matrix::new(body.len(), col_labels.len(), data).map_err(|e| e.to_string())?;
    if is_raw {
        RawDataTable::new(row_labels, divisors, col_labels, matrix)
            .map(Table::Raw)
            .map_err(|e| e.to_string())
    } else {
        Ok(Table::Matrix(LabeledMatrix {
            row_labels: Some(row_labels),
            col_labels: Some(col_labels),
            data: matrix,
        }))
    }
}

/// Tab-separated matrix with a `label` header. Reals are written in their
/// shortest exact form so the file reloads to the same values.
pub fn matrix_tsv<T>(row_labels: &[String], col_labels: &[String], m: &Matrix<T>) -> String
where
    T: fuzzadapt_core::Scalar + Display + Copy,
{
    let mut out = String::from("label");
    for c in col_labels {
        out.push('\t');
        out.push_str(c);
    }
    out.push('\n');
    for (label, row) in row_labels.iter().zip(m.iter_rows()) {
        out.push_str(label);
        for v in row {
            out.push('\t');
            out.push_str(&v.to_string());
        }
        out.push('\n');
    }
    out
}

/// Raw data table in the `label, divisor, ...` layout.
pub fn raw_table_tsv(t: &RawDataTable) -> String {
    let mut out = String::from("label\tdivisor");
    for c in t.col_labels() {
        out.push('\t');
        out.push_str(c);
    }
    out.push('\n');
    for ((label, d), row) in t.row_labels().iter().zip(t.row_divisors()).zip(t.counts().iter_rows()) {
        out.push_str(label);
        out.push('\t');
        out.push_str(&d.to_string());
        for v in row {
            out.push('\t');
            out.push_str(&v.to_string());
        }
        out.push('\n');
    }
    out
}

/// Parses `3,4,-1` style vectors given on the command line.
pub fn parse_vector(s: &str, what: &str) -> Result<Vec<f64>, CliError> {
    s.split(',')
        .enumerate()
        .map(|(i, cell)| {
            let cell = cell.trim();
            cell.parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| CliError::input(format!("{what}: element {} ('{cell}') is not a number", i + 1)))
        })
        .collect()
}
