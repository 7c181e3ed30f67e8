//! Structured text report: `key: value` lines and embedded matrices.

use std::fmt::{Display, Write};

use fuzzadapt_core::Matrix;

use crate::format::sig6;

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Report {
    text: String,
}

impl Report {
    pub fn new(job: &str) -> Self {
        let mut r = Self::default();
        r.field("job", job);
        r
    }

    pub fn field(&mut self, key: &str, value: impl Display) {
        let _ = writeln!(self.text, "{key}: {value}");
    }

    pub fn note(&mut self, text: &str) {
        let _ = writeln!(self.text, "note: {text}");
    }

    pub fn blank(&mut self) {
        self.text.push('\n');
    }

    fn matrix_with(&mut self, name: &str, rows: &[String], cols: &[String], cells: impl Fn(usize, usize) -> String) {
        let _ = writeln!(self.text, "[{name}]");
        let _ = writeln!(self.text, "label\t{}", cols.join("\t"));
        for (i, label) in rows.iter().enumerate() {
            let line: Vec<String> = (0..cols.len()).map(|j| cells(i, j)).collect();
            let _ = writeln!(self.text, "{label}\t{}", line.join("\t"));
        }
        let _ = writeln!(self.text, "[end {name}]");
    }

    /// Real matrix at six significant digits.
    pub fn real_matrix(&mut self, name: &str, rows: &[String], cols: &[String], m: &Matrix<f64>) {
        self.matrix_with(name, rows, cols, |i, j| sig6(m.get(i, j)));
    }

    pub fn int_matrix(&mut self, name: &str, rows: &[String], cols: &[String], m: &Matrix<i64>) {
        self.matrix_with(name, rows, cols, |i, j| m.get(i, j).to_string());
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn into_string(self) -> String {
        self.text
    }
}
