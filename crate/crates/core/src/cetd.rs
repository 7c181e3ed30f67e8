//! The five-stage fuzzy matrix analysis of time-dependent data: raw counts,
//! averaged (ATD), refined (RTD) for a parameter α, combined effect (CETD)
//! over several α, and row sums.

use crate::error::{Error, Result};
use crate::numerics::{population_stats, Matrix};

/// Raw counts per time period (rows) and attribute (columns), with the divisor
/// used to average each row.
#[derive(Debug, Clone, PartialEq)]
pub struct RawDataTable {
    row_labels: Vec<String>,
    row_divisors: Vec<f64>,
    col_labels: Vec<String>,
    counts: Matrix<f64>,
}

impl RawDataTable {
    pub fn new(row_labels: Vec<String>, row_divisors: Vec<f64>, col_labels: Vec<String>, counts: Matrix<f64>) -> Result<Self> {
        check_len("row labels", counts.rows(), row_labels.len())?;
        check_len("row divisors", counts.rows(), row_divisors.len())?;
        check_len("column labels", counts.cols(), col_labels.len())?;
        for i in 0..counts.rows() {
            for j in 0..counts.cols() {
                let v = counts.get(i, j);
                if v.is_nan() || v < 0.0 {
                    return Err(Error::EntryOutOfRange {
                        row: i,
                        col: j,
                        value: v,
                        range: "[0, inf)".into(),
                    });
                }
            }
        }
        Ok(Self {
            row_labels,
            row_divisors,
            col_labels,
            counts,
        })
    }

    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    pub fn row_divisors(&self) -> &[f64] {
        &self.row_divisors
    }

    pub fn col_labels(&self) -> &[String] {
        &self.col_labels
    }

    pub fn counts(&self) -> &Matrix<f64> {
        &self.counts
    }
}

fn check_len(context: &'static str, expected: usize, actual: usize) -> Result<()> {
    if expected != actual {
        return Err(Error::DimensionMismatch { context, expected, actual });
    }
    Ok(())
}

/// Pipeline stage a [`StageMatrix`] belongs to.
#[derive(Debug, Clone, PartialEq)]
pub enum Stage {
    Atd,
    Rtd { alpha: f64 },
    Cetd { alphas: Vec<f64> },
}

impl Stage {
    pub fn name(&self) -> &'static str {
        match self {
            Stage::Atd => "ATD",
            Stage::Rtd { .. } => "RTD",
            Stage::Cetd { .. } => "CETD",
        }
    }
}

/// A stage matrix with the labels carried over from the raw table.
#[derive(Debug, Clone, PartialEq)]
pub struct StageMatrix<T> {
    pub stage: Stage,
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
    pub data: Matrix<T>,
}

/// Averaged time-dependent data.
pub type AtdMatrix = StageMatrix<f64>;
/// Refined (RTD) or combined (CETD) stage, integer valued.
pub type RefinedMatrix = StageMatrix<i64>;

impl<T: crate::numerics::Scalar> StageMatrix<T> {
    pub fn row_sums(&self) -> Vec<T> {
        self.data.row_sums()
    }
}

/// Divides each row of counts by its divisor. A zero divisor yields a zero row.
pub fn to_atd(ird: &RawDataTable) -> Result<AtdMatrix> {
    let counts = &ird.counts;
    let mut data = Vec::with_capacity(counts.rows() * counts.cols());
    for (i, (row, &d)) in counts.iter_rows().zip(&ird.row_divisors).enumerate() {
        if d < 0.0 || d.is_nan() {
            return Err(Error::NegativeDivisor { row: i, value: d });
        }
        if d == 0.0 {
            data.extend(std::iter::repeat(0.0).take(row.len()));
        } else {
            data.extend(row.iter().map(|x| x / d));
        }
    }
    Ok(StageMatrix {
        stage: Stage::Atd,
        row_labels: ird.row_labels.clone(),
        col_labels: ird.col_labels.clone(),
        data: Matrix::new(counts.rows(), counts.cols(), data)?,
    })
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::UnitIntervalViolation {
            what: "alpha",
            value: alpha,
        });
    }
    Ok(())
}

fn refine(atd: &Matrix<f64>, stats: &[(f64, f64)], alpha: f64) -> Matrix<i64> {
    let mut out = Matrix::<i64>::zeros(atd.rows(), atd.cols()).expect("non-empty");
    for (j, &(mean, sd)) in stats.iter().enumerate() {
        // No variation in the column means no signal.
        if sd == 0.0 {
            continue;
        }
        let low = mean - alpha * sd;
        let high = mean + alpha * sd;
        for i in 0..atd.rows() {
            let a = atd.get(i, j);
            let e = if a <= low {
                -1
            } else if a >= high {
                1
            } else {
                0
            };
            out.set(i, j, e);
        }
    }
    out
}

fn column_stats(atd: &Matrix<f64>) -> Result<Vec<(f64, f64)>> {
    (0..atd.cols()).map(|j| population_stats(&atd.column(j))).collect()
}

/// Refines an ATD matrix into {-1, 0, 1} using the band `μ_j ± α σ_j` of each
/// column. Entries on the band edges go to ±1.
pub fn to_rtd(atd: &AtdMatrix, alpha: f64) -> Result<RefinedMatrix> {
    check_alpha(alpha)?;
    let stats = column_stats(&atd.data)?;
    Ok(StageMatrix {
        stage: Stage::Rtd { alpha },
        row_labels: atd.row_labels.clone(),
        col_labels: atd.col_labels.clone(),
        data: refine(&atd.data, &stats, alpha),
    })
}

/// Sum of the RTD matrices over every α in `alphas`.
pub fn to_cetd(atd: &AtdMatrix, alphas: &[f64]) -> Result<RefinedMatrix> {
    if alphas.is_empty() {
        return Err(Error::Empty("alpha list"));
    }
    for &a in alphas {
        check_alpha(a)?;
    }
    let stats = column_stats(&atd.data)?;
    let mut acc = Matrix::<i64>::zeros(atd.data.rows(), atd.data.cols())?;
    for &a in alphas {
        acc = acc.add(&refine(&atd.data, &stats, a))?;
    }
    Ok(StageMatrix {
        stage: Stage::Cetd { alphas: alphas.to_vec() },
        row_labels: atd.row_labels.clone(),
        col_labels: atd.col_labels.clone(),
        data: acc,
    })
}

/// Row sums of any matrix.
pub fn row_sums<T: crate::numerics::Scalar>(m: &Matrix<T>) -> Vec<T> {
    m.row_sums()
}

/// Every intermediate of a full pipeline run.
#[derive(Debug, Clone, PartialEq)]
pub struct PipelineRun {
    pub atd: AtdMatrix,
    pub rtds: Vec<RefinedMatrix>,
    pub cetd: RefinedMatrix,
}

impl PipelineRun {
    pub fn cetd_row_sums(&self) -> Vec<i64> {
        self.cetd.row_sums()
    }
}

/// Raw table to CETD, keeping the per-α RTD matrices.
pub fn run_pipeline(ird: &RawDataTable, alphas: &[f64]) -> Result<PipelineRun> {
    let atd = to_atd(ird)?;
    let rtds = alphas.iter().map(|&a| to_rtd(&atd, a)).collect::<Result<Vec<_>>>()?;
    let cetd = to_cetd(&atd, alphas)?;
    Ok(PipelineRun { atd, rtds, cetd })
}
