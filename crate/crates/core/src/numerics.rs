//! Dense matrices, state vectors and the threshold signal functions shared by
//! every engine.
//!
//! Integer-valued models (relational maps, synaptic matrices, refined stages)
//! use `Matrix<i64>` so that products are exact; averaged and fuzzy stages use
//! `Matrix<f64>`.

use std::fmt;
use std::ops::{Add, Mul};

use crate::error::{Error, Result};

/// Element type usable in a [`Matrix`].
pub trait Scalar: Copy + PartialEq + PartialOrd + fmt::Debug + Add<Output = Self> + Mul<Output = Self> {
    fn zero() -> Self;
    fn to_f64(self) -> f64;
    fn from_i8(v: i8) -> Self;
}

impl Scalar for i64 {
    fn zero() -> Self {
        0
    }
    fn to_f64(self) -> f64 {
        self as f64
    }
    fn from_i8(v: i8) -> Self {
        v as i64
    }
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn to_f64(self) -> f64 {
        self
    }
    fn from_i8(v: i8) -> Self {
        v as f64
    }
}

/// Row-major dense matrix with at least one row and one column.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyMatrix { rows, cols });
        }
        if data.len() != rows * cols {
            return Err(Error::BadShape {
                rows,
                cols,
                actual: data.len(),
            });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        Self::new(rows, cols, vec![T::zero(); rows * cols])
    }

    /// Builds a matrix from nested rows; every row must have the same length.
    pub fn from_rows<R: AsRef<[T]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(n * m);
        for row in rows {
            let row = row.as_ref();
            if row.len() != m {
                return Err(Error::DimensionMismatch {
                    context: "matrix row length",
                    expected: m,
                    actual: row.len(),
                });
            }
            data.extend_from_slice(row);
        }
        Self::new(n, m, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn as_slice(&self) -> &[T] {
        &self.data
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[T]> {
        self.data.chunks(self.cols)
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j));
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| f(x)).collect(),
        }
    }

    /// Entrywise sum.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch {
                context: "matrix addition (rows)",
                expected: self.rows,
                actual: other.rows,
            });
        }
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                context: "matrix addition (cols)",
                expected: self.cols,
                actual: other.cols,
            });
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| a + b).collect(),
        })
    }

    pub fn row_sums(&self) -> Vec<T> {
        self.iter_rows().map(|r| r.iter().fold(T::zero(), |acc, &x| acc + x)).collect()
    }
}

/// `v × M`: `result_j = Σ_i v_i · M[i][j]`.
pub fn left_multiply<T: Scalar>(v: &[T], m: &Matrix<T>) -> Result<Vec<T>> {
    if v.len() != m.rows {
        return Err(Error::DimensionMismatch {
            context: "vector-matrix product",
            expected: m.rows,
            actual: v.len(),
        });
    }
    let mut out = vec![T::zero(); m.cols];
    for (vi, row) in v.iter().zip(m.iter_rows()) {
        for (o, &mij) in out.iter_mut().zip(row) {
            *o = *o + *vi * mij;
        }
    }
    Ok(out)
}

pub fn transpose<T: Scalar>(m: &Matrix<T>) -> Matrix<T> {
    m.transpose()
}

/// Value set a [`StateVector`] draws from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Alphabet {
    /// {0, 1}
    Binary,
    /// {-1, 0, 1}
    Ternary,
    /// {-1, 1}
    Bipolar,
}

impl Alphabet {
    pub fn contains(self, v: i8) -> bool {
        match self {
            Alphabet::Binary => v == 0 || v == 1,
            Alphabet::Ternary => (-1..=1).contains(&v),
            Alphabet::Bipolar => v == -1 || v == 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Alphabet::Binary => "binary",
            Alphabet::Ternary => "ternary",
            Alphabet::Bipolar => "bipolar",
        }
    }

    /// The "off" signal of the alphabet.
    pub fn off(self) -> i8 {
        match self {
            Alphabet::Bipolar => -1,
            _ => 0,
        }
    }
}

/// On/off (or signed) state of a field of nodes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StateVector {
    values: Vec<i8>,
    alphabet: Alphabet,
}

impl StateVector {
    pub fn new(values: Vec<i8>, alphabet: Alphabet) -> Result<Self> {
        if let Some((index, &v)) = values.iter().enumerate().find(|(_, &v)| !alphabet.contains(v)) {
            return Err(Error::OutsideAlphabet {
                value: v as i64,
                index,
                alphabet: alphabet.name(),
            });
        }
        Ok(Self { values, alphabet })
    }

    pub fn binary(values: &[i8]) -> Result<Self> {
        Self::new(values.to_vec(), Alphabet::Binary)
    }

    /// All-off vector of length `len`.
    pub fn off(len: usize, alphabet: Alphabet) -> Self {
        Self {
            values: vec![alphabet.off(); len],
            alphabet,
        }
    }

    /// Binary vector with only coordinate `index` switched on.
    pub fn unit(len: usize, index: usize) -> Self {
        let mut values = vec![0; len];
        values[index] = 1;
        Self {
            values,
            alphabet: Alphabet::Binary,
        }
    }

    pub fn values(&self) -> &[i8] {
        &self.values
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_all_off(&self) -> bool {
        self.values.iter().all(|&v| v == self.alphabet.off())
    }

    /// Values lifted into the scalar type of a matrix.
    pub fn as_scalars<T: Scalar>(&self) -> Vec<T> {
        self.values.iter().map(|&v| T::from_i8(v)).collect()
    }
}

impl fmt::Display for StateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Which threshold rule turns raw activations into signals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SignalKind {
    /// 1 above threshold, 0 otherwise.
    BinaryStrict,
    /// 1 above, 0 below, previous signal at the threshold.
    BamBinaryMemory,
    /// 1 above, -1 below, previous signal at the threshold.
    BamBipolarMemory,
    /// Sign of `raw - threshold`.
    Ternary,
}

impl SignalKind {
    pub fn alphabet(self) -> Alphabet {
        match self {
            SignalKind::BinaryStrict | SignalKind::BamBinaryMemory => Alphabet::Binary,
            SignalKind::BamBipolarMemory => Alphabet::Bipolar,
            SignalKind::Ternary => Alphabet::Ternary,
        }
    }

    pub fn uses_memory(self) -> bool {
        matches!(self, SignalKind::BamBinaryMemory | SignalKind::BamBipolarMemory)
    }
}

/// Signal rule plus per-coordinate thresholds. An empty threshold list means
/// every threshold is zero.
#[derive(Debug, Clone, PartialEq)]
pub struct SignalPolicy {
    pub kind: SignalKind,
    pub thresholds: Vec<f64>,
}

impl SignalPolicy {
    pub fn new(kind: SignalKind) -> Self {
        Self {
            kind,
            thresholds: Vec::new(),
        }
    }

    pub fn with_thresholds(kind: SignalKind, thresholds: Vec<f64>) -> Self {
        Self { kind, thresholds }
    }

    fn threshold(&self, i: usize) -> f64 {
        self.thresholds.get(i).copied().unwrap_or(0.0)
    }
}

/// Thresholds a raw activation vector into a signal vector.
///
/// `prev` is the previous signal of the same field; it is consulted only by
/// the memory rules, where a raw value exactly at the threshold keeps the old
/// signal.
pub fn apply_signal(raw: &[f64], policy: &SignalPolicy, prev: &StateVector) -> Result<StateVector> {
    if !policy.thresholds.is_empty() && policy.thresholds.len() != raw.len() {
        return Err(Error::DimensionMismatch {
            context: "signal thresholds",
            expected: raw.len(),
            actual: policy.thresholds.len(),
        });
    }
    if prev.len() != raw.len() {
        return Err(Error::DimensionMismatch {
            context: "previous signal",
            expected: raw.len(),
            actual: prev.len(),
        });
    }
    let alphabet = policy.kind.alphabet();
    let below = alphabet.off();
    let mut out = Vec::with_capacity(raw.len());
    for (i, &x) in raw.iter().enumerate() {
        let u = policy.threshold(i);
        let s = match policy.kind {
            SignalKind::BinaryStrict => i8::from(x > u),
            SignalKind::Ternary => {
                if x > u {
                    1
                } else if x < u {
                    -1
                } else {
                    0
                }
            }
            SignalKind::BamBinaryMemory | SignalKind::BamBipolarMemory => {
                if x > u {
                    1
                } else if x < u {
                    below
                } else {
                    let p = prev.values[i];
                    if !alphabet.contains(p) {
                        return Err(Error::OutsideAlphabet {
                            value: p as i64,
                            index: i,
                            alphabet: alphabet.name(),
                        });
                    }
                    p
                }
            }
        };
        out.push(s);
    }
    Ok(StateVector { values: out, alphabet })
}

/// Mean and population standard deviation (divisor `n`).
pub fn population_stats(column: &[f64]) -> Result<(f64, f64)> {
    if column.is_empty() {
        return Err(Error::Empty("statistics column"));
    }
    let n = column.len() as f64;
    let mean = column.iter().sum::<f64>() / n;
    let var = column.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / n;
    Ok((mean, var.sqrt()))
}
