//! Fuzzy associative memory: max-min composition, grading and defuzzification.

use crate::error::{Error, Result};
use crate::numerics::Matrix;

/// Fuzzy relation between `n` causes (rows) and `m` effects (columns).
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzyRelation {
    matrix: Matrix<f64>,
    row_labels: Vec<String>,
    col_labels: Vec<String>,
}

impl FuzzyRelation {
    pub fn new(matrix: Matrix<f64>, row_labels: Vec<String>, col_labels: Vec<String>) -> Result<Self> {
        if row_labels.len() != matrix.rows() {
            return Err(Error::DimensionMismatch {
                context: "fuzzy relation row labels",
                expected: matrix.rows(),
                actual: row_labels.len(),
            });
        }
        if col_labels.len() != matrix.cols() {
            return Err(Error::DimensionMismatch {
                context: "fuzzy relation column labels",
                expected: matrix.cols(),
                actual: col_labels.len(),
            });
        }
        for i in 0..matrix.rows() {
            for j in 0..matrix.cols() {
                let v = matrix.get(i, j);
                if !(0.0..=1.0).contains(&v) {
                    return Err(Error::EntryOutOfRange {
                        row: i,
                        col: j,
                        value: v,
                        range: "[0, 1]".into(),
                    });
                }
            }
        }
        Ok(Self {
            matrix,
            row_labels,
            col_labels,
        })
    }

    /// Relation with generated labels `C1..` and `E1..`.
    pub fn unlabeled(matrix: Matrix<f64>) -> Result<Self> {
        let rows = (1..=matrix.rows()).map(|i| format!("C{i}")).collect();
        let cols = (1..=matrix.cols()).map(|j| format!("E{j}")).collect();
        Self::new(matrix, rows, cols)
    }

    pub fn matrix(&self) -> &Matrix<f64> {
        &self.matrix
    }

    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[String] {
        &self.col_labels
    }
}

/// Grades of membership, each in `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct FitVector(Vec<f64>);

impl FitVector {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if let Some(&v) = values.iter().find(|v| !(0.0..=1.0).contains(*v)) {
            return Err(Error::UnitIntervalViolation {
                what: "fit value",
                value: v,
            });
        }
        Ok(Self(values))
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// `a_i = max_j min(m_ij, b_j)`.
pub fn fam_backward(m: &FuzzyRelation, b: &FitVector) -> Result<FitVector> {
    let mx = &m.matrix;
    if b.len() != mx.cols() {
        return Err(Error::DimensionMismatch {
            context: "FAM backward fit vector",
            expected: mx.cols(),
            actual: b.len(),
        });
    }
    let a = mx
        .iter_rows()
        .map(|row| row.iter().zip(b.values()).map(|(&w, &x)| w.min(x)).fold(0.0, f64::max))
        .collect();
    Ok(FitVector(a))
}

/// `b_j = max_i min(a_i, m_ij)`.
pub fn fam_forward(a: &FitVector, m: &FuzzyRelation) -> Result<FitVector> {
    let mx = &m.matrix;
    if a.len() != mx.rows() {
        return Err(Error::DimensionMismatch {
            context: "FAM forward fit vector",
            expected: mx.rows(),
            actual: a.len(),
        });
    }
    let mut b = vec![0.0f64; mx.cols()];
    for (row, &ai) in mx.iter_rows().zip(a.values()) {
        for (bj, &w) in b.iter_mut().zip(row) {
            *bj = (*bj).max(ai.min(w));
        }
    }
    Ok(FitVector(b))
}

/// Labels sharing one grade.
#[derive(Debug, Clone, PartialEq)]
pub struct GradeGroup {
    pub value: f64,
    pub labels: Vec<String>,
}

/// Groups labels by exactly equal grade, highest grade first. Labels keep
/// their input order within a group.
pub fn top_grades(v: &FitVector, labels: &[String]) -> Result<Vec<GradeGroup>> {
    if v.is_empty() {
        return Err(Error::Empty("fit vector"));
    }
    if labels.len() != v.len() {
        return Err(Error::DimensionMismatch {
            context: "grade labels",
            expected: v.len(),
            actual: labels.len(),
        });
    }
    let mut order: Vec<usize> = (0..v.len()).collect();
    order.sort_by(|&i, &j| v.0[j].total_cmp(&v.0[i]).then(i.cmp(&j)));
    let mut groups: Vec<GradeGroup> = Vec::new();
    for i in order {
        let value = v.0[i];
        match groups.last_mut() {
            Some(g) if g.value == value => g.labels.push(labels[i].clone()),
            _ => groups.push(GradeGroup {
                value,
                labels: vec![labels[i].clone()],
            }),
        }
    }
    Ok(groups)
}

/// Entrywise average of `parts` with weights normalised to sum 1.
pub fn weighted_combine(parts: &[FitVector], weights: &[f64]) -> Result<FitVector> {
    let first = parts.first().ok_or(Error::Empty("fit vectors to combine"))?;
    if weights.len() != parts.len() {
        return Err(Error::DimensionMismatch {
            context: "combination weights",
            expected: parts.len(),
            actual: weights.len(),
        });
    }
    if let Some(&w) = weights.iter().find(|w| !(w.is_finite() && **w >= 0.0)) {
        return Err(Error::InvalidParameter(format!("weights must be non-negative, got {w}")));
    }
    let total: f64 = weights.iter().sum();
    if total <= 0.0 {
        return Err(Error::InvalidParameter("weights sum to zero".into()));
    }
    let mut out = vec![0.0; first.len()];
    for part in parts {
        if part.len() != first.len() {
            return Err(Error::DimensionMismatch {
                context: "fit vectors to combine",
                expected: first.len(),
                actual: part.len(),
            });
        }
    }
    for (part, &w) in parts.iter().zip(weights) {
        for (o, &x) in out.iter_mut().zip(part.values()) {
            *o += w * x;
        }
    }
    for o in &mut out {
        *o = (*o / total).clamp(0.0, 1.0);
    }
    Ok(FitVector(out))
}

/// Fuzzy centroid `Σ b_j y_j / Σ b_j`.
pub fn centroid(b: &FitVector, support: &[f64]) -> Result<f64> {
    if support.len() != b.len() {
        return Err(Error::DimensionMismatch {
            context: "centroid support",
            expected: b.len(),
            actual: support.len(),
        });
    }
    let mass: f64 = b.values().iter().sum();
    if mass <= 0.0 {
        return Err(Error::InvalidParameter("centroid of an all-zero fit vector is undefined".into()));
    }
    let moment: f64 = b.values().iter().zip(support).map(|(&w, &y)| w * y).sum();
    Ok(moment / mass)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fit(v: &[f64]) -> FitVector {
        FitVector::new(v.to_vec()).unwrap()
    }

    fn labels(n: usize) -> Vec<String> {
        (1..=n).map(|i| i.to_string()).collect()
    }

    fn small() -> FuzzyRelation {
        FuzzyRelation::unlabeled(Matrix::from_rows(&[[0.2, 0.9], [0.7, 0.4], [1.0, 0.0]]).unwrap()).unwrap()
    }

    #[test]
    fn backward_trivial_inputs() {
        let m = small();
        assert_eq!(fam_backward(&m, &fit(&[0.0, 0.0])).unwrap().values(), &[0.0; 3]);
        assert_eq!(fam_backward(&m, &fit(&[1.0, 1.0])).unwrap().values(), &[0.9, 0.7, 1.0]);
        assert_eq!(fam_backward(&m, &fit(&[0.5, 0.3])).unwrap().values(), &[0.3, 0.5, 0.5]);
    }

    #[test]
    fn forward_identity() {
        let m = FuzzyRelation::unlabeled(Matrix::from_rows(&[[1.0, 0.0], [0.0, 1.0]]).unwrap()).unwrap();
        assert_eq!(fam_forward(&fit(&[0.3, 0.6]), &m).unwrap().values(), &[0.3, 0.6]);
        assert_eq!(fam_forward(&fit(&[0.0, 0.0, 0.0]), &small()).unwrap().values(), &[0.0, 0.0]);
    }

    #[test]
    fn rejects_bad_ranges_and_lengths() {
        assert!(FitVector::new(vec![1.2]).is_err());
        assert!(FuzzyRelation::unlabeled(Matrix::from_rows(&[[-0.1]]).unwrap()).is_err());
        assert!(fam_backward(&small(), &fit(&[0.1])).is_err());
        assert!(fam_forward(&fit(&[0.1]), &small()).is_err());
    }

    #[test]
    fn grades() {
        let g = top_grades(&fit(&[0.8, 0.8, 0.6, 0.0, 0.0, 0.0, 0.0]), &labels(7)).unwrap();
        assert_eq!(g.len(), 3);
        assert_eq!(g[0].labels, vec!["1", "2"]);
        assert_eq!(g[1].labels, vec!["3"]);
        assert_eq!(g[2].labels, vec!["4", "5", "6", "7"]);
        assert_eq!(g[2].value, 0.0);

        let g = top_grades(&fit(&[0.1, 0.3, 0.2]), &labels(3)).unwrap();
        let order: Vec<_> = g.iter().map(|g| g.labels[0].as_str()).collect();
        assert_eq!(order, vec!["2", "3", "1"]);

        assert_eq!(top_grades(&fit(&[0.4; 4]), &labels(4)).unwrap().len(), 1);
        assert!(top_grades(&fit(&[]), &[]).is_err());
    }

    #[test]
    fn combine() {
        let b = fit(&[0.2, 0.9]);
        assert_eq!(weighted_combine(std::slice::from_ref(&b), &[7.0]).unwrap(), b);
        assert_eq!(weighted_combine(&[b.clone(), b.clone()], &[1.0, 1.0]).unwrap(), b);
        let skewed = weighted_combine(&[b.clone(), b.clone()], &[1.0, 2.0]).unwrap();
        for (x, y) in skewed.values().iter().zip(b.values()) {
            assert!((x - y).abs() < 1e-12);
        }
        let c = weighted_combine(&[fit(&[0.0, 1.0]), fit(&[1.0, 0.0])], &[1.0, 3.0]).unwrap();
        assert_eq!(c.values(), &[0.75, 0.25]);
        assert!(weighted_combine(std::slice::from_ref(&b), &[0.0]).is_err());
        assert!(weighted_combine(std::slice::from_ref(&b), &[-1.0]).is_err());
        assert!(weighted_combine(&[b, fit(&[0.1])], &[1.0, 1.0]).is_err());
    }

    #[test]
    fn centroids() {
        assert_eq!(centroid(&fit(&[1.0]), &[5.0]).unwrap(), 5.0);
        assert_eq!(centroid(&fit(&[0.5, 0.5]), &[0.0, 10.0]).unwrap(), 5.0);
        assert!((centroid(&fit(&[0.2, 0.6, 0.2]), &[1.0, 2.0, 3.0]).unwrap() - 2.0).abs() < 1e-12);
        assert!(centroid(&fit(&[0.0, 0.0]), &[1.0, 2.0]).is_err());
    }
}
