//! Fuzzy relational maps: causal relations from a domain node set to a
//! disjoint range node set, iterated to a hidden pattern.

use std::collections::HashMap;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::numerics::{apply_signal, left_multiply, Alphabet, Matrix, SignalKind, SignalPolicy, StateVector};

/// Largest `n + m` accepted by [`hidden_pattern`].
pub const MAX_NODES: usize = 30;

/// Relational matrix `E` with its domain (rows) and range (columns) labels.
///
/// A simple map has entries in {-1, 0, 1}. A combined map of `p` experts has
/// entries in `[-p, p]`; see [`combined_model`].
#[derive(Debug, Clone, PartialEq)]
pub struct RelationalModel {
    domain_labels: Vec<String>,
    range_labels: Vec<String>,
    matrix: Matrix<i64>,
    weight_bound: i64,
}

impl RelationalModel {
    pub fn new(domain_labels: Vec<String>, range_labels: Vec<String>, matrix: Matrix<i64>) -> Result<Self> {
        Self::weighted(domain_labels, range_labels, matrix, 1)
    }

    /// Simple map with generated labels `D1..Dn`, `R1..Rm`.
    pub fn unlabeled(matrix: Matrix<i64>) -> Result<Self> {
        let d = (1..=matrix.rows()).map(|i| format!("D{i}")).collect();
        let r = (1..=matrix.cols()).map(|j| format!("R{j}")).collect();
        Self::new(d, r, matrix)
    }

    /// Map whose entries may range over `[-bound, bound]`.
    pub fn weighted(domain_labels: Vec<String>, range_labels: Vec<String>, matrix: Matrix<i64>, bound: i64) -> Result<Self> {
        if bound < 1 {
            return Err(Error::InvalidParameter(format!("weight bound must be positive, got {bound}")));
        }
        if domain_labels.len() != matrix.rows() {
            return Err(Error::DimensionMismatch {
                context: "domain labels",
                expected: matrix.rows(),
                actual: domain_labels.len(),
            });
        }
        if range_labels.len() != matrix.cols() {
            return Err(Error::DimensionMismatch {
                context: "range labels",
                expected: matrix.cols(),
                actual: range_labels.len(),
            });
        }
        for i in 0..matrix.rows() {
            for j in 0..matrix.cols() {
                let v = matrix.get(i, j);
                if v.abs() > bound {
                    return Err(Error::EntryOutOfRange {
                        row: i,
                        col: j,
                        value: v as f64,
                        range: format!("[-{bound}, {bound}]"),
                    });
                }
            }
        }
        Ok(Self {
            domain_labels,
            range_labels,
            matrix,
            weight_bound: bound,
        })
    }

    pub fn matrix(&self) -> &Matrix<i64> {
        &self.matrix
    }

    pub fn domain_labels(&self) -> &[String] {
        &self.domain_labels
    }

    pub fn range_labels(&self) -> &[String] {
        &self.range_labels
    }

    pub fn weight_bound(&self) -> i64 {
        self.weight_bound
    }

    pub fn side_len(&self, side: Side) -> usize {
        match side {
            Side::Domain => self.matrix.rows(),
            Side::Range => self.matrix.cols(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Domain,
    Range,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Domain => Side::Range,
            Side::Range => Side::Domain,
        }
    }
}

/// Which coordinates are held on while iterating.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum UpdateMode {
    /// The initially-on input coordinates stay on.
    #[default]
    InputSide,
    /// Additionally, the coordinates switched on by the first output stay on
    /// for the rest of the run.
    BothSides,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FrmOptions {
    pub signal: SignalKind,
    pub update: UpdateMode,
}

impl Default for FrmOptions {
    fn default() -> Self {
        Self {
            signal: SignalKind::BinaryStrict,
            update: UpdateMode::InputSide,
        }
    }
}

/// One propagation through the map: from the domain via `E`, from the range
/// via `E^T`. Coordinates where `clamp` is 1 are forced on in the result.
pub fn frm_step(
    model: &RelationalModel,
    state: &StateVector,
    from: Side,
    policy: &SignalPolicy,
    clamp: Option<&StateVector>,
) -> Result<StateVector> {
    let expected = model.side_len(from);
    if state.len() != expected {
        return Err(Error::DimensionMismatch {
            context: "frm input state",
            expected,
            actual: state.len(),
        });
    }
    let raw = match from {
        Side::Domain => left_multiply(&state.as_scalars::<i64>(), &model.matrix)?,
        Side::Range => left_multiply(&state.as_scalars::<i64>(), &model.matrix.transpose())?,
    };
    let raw: Vec<f64> = raw.into_iter().map(|x| x as f64).collect();
    let target_len = raw.len();
    let prev = StateVector::off(target_len, policy.kind.alphabet());
    let signal = apply_signal(&raw, policy, &prev)?;
    match clamp {
        None => Ok(signal),
        Some(c) => {
            if c.len() != target_len {
                return Err(Error::DimensionMismatch {
                    context: "frm clamp",
                    expected: target_len,
                    actual: c.len(),
                });
            }
            let values = signal
                .values()
                .iter()
                .zip(c.values())
                .map(|(&s, &k)| if k == 1 { 1 } else { s })
                .collect();
            StateVector::new(values, signal.alphabet())
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PatternKind {
    FixedPoint,
    LimitCycle,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StatePair {
    pub domain: StateVector,
    pub range: StateVector,
}

/// Equilibrium reached by [`hidden_pattern`].
#[derive(Debug, Clone, PartialEq)]
pub struct HiddenPattern {
    pub kind: PatternKind,
    /// Settled pair (for a limit cycle, the first pair of the cycle).
    pub domain_state: StateVector,
    pub range_state: StateVector,
    /// Repeating segment; empty for a fixed point.
    pub cycle: Vec<StatePair>,
    /// Every pair visited, one per round trip, ending with the repeat.
    pub trajectory: Vec<StatePair>,
    /// Side visits until the terminal pair (or cycle entry) was first reached.
    pub steps: usize,
    /// Side visits executed, including the confirming round.
    pub half_steps: usize,
}

/// Iterates the map from `initial` on `side` until a (domain, range) pair
/// repeats.
pub fn hidden_pattern(model: &RelationalModel, initial: &StateVector, side: Side, options: &FrmOptions) -> Result<HiddenPattern> {
    let nodes = model.matrix.rows() + model.matrix.cols();
    if nodes > MAX_NODES {
        return Err(Error::TooManyNodes { nodes, limit: MAX_NODES });
    }
    let expected = model.side_len(side);
    if initial.len() != expected {
        return Err(Error::DimensionMismatch {
            context: "frm initial state",
            expected,
            actual: initial.len(),
        });
    }
    if initial.values().iter().all(|&v| v == 0) {
        return Err(Error::NoActiveNode);
    }
    let policy = SignalPolicy::new(options.signal);
    let input_clamp = StateVector::new(initial.values().iter().map(|&v| i8::from(v == 1)).collect(), Alphabet::Binary)?;
    let mut output_clamp: Option<StateVector> = None;

    let orient = |input: StateVector, output: StateVector| match side {
        Side::Domain => StatePair {
            domain: input,
            range: output,
        },
        Side::Range => StatePair {
            domain: output,
            range: input,
        },
    };

    let mut half_steps = 0usize;
    let first_round =
        |current: &StateVector, output_clamp: &mut Option<StateVector>, half_steps: &mut usize| -> Result<(StateVector, StateVector)> {
            let out = frm_step(model, current, side, &policy, output_clamp.as_ref())?;
            *half_steps += 1;
            if options.update == UpdateMode::BothSides && output_clamp.is_none() {
                *output_clamp = Some(StateVector::new(
                    out.values().iter().map(|&v| i8::from(v == 1)).collect(),
                    Alphabet::Binary,
                )?);
            }
            let back = frm_step(model, &out, side.opposite(), &policy, Some(&input_clamp))?;
            *half_steps += 1;
            Ok((back, out))
        };
    let (input0, output0) = first_round(initial, &mut output_clamp, &mut half_steps)?;
    let start = orient(input0, output0);
    let repeat = find_repeat(start, |pair| {
        let input = match side {
            Side::Domain => &pair.domain,
            Side::Range => &pair.range,
        };
        let (back, out) = first_round(input, &mut output_clamp, &mut half_steps)?;
        Ok(orient(back, out))
    })?;
    let terminal = repeat.trajectory[repeat.first].clone();
    let (kind, cycle) = if repeat.period == 1 {
        (PatternKind::FixedPoint, Vec::new())
    } else {
        let end = repeat.first + repeat.period;
        (PatternKind::LimitCycle, repeat.trajectory[repeat.first..end].to_vec())
    };
    Ok(HiddenPattern {
        kind,
        domain_state: terminal.domain,
        range_state: terminal.range,
        cycle,
        trajectory: repeat.trajectory,
        steps: 2 * (repeat.first + 1),
        half_steps,
    })
}

/// Result of iterating a map until some state recurs.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Repeat<S> {
    /// Visited states, ending with the first recurrence.
    pub trajectory: Vec<S>,
    /// Index of the first occurrence of the recurring state.
    pub first: usize,
    /// Length of the repeating segment.
    pub period: usize,
}

/// Applies `next` from `start` until a state seen before comes up again.
pub(crate) fn find_repeat<S, F>(start: S, mut next: F) -> Result<Repeat<S>>
where
    S: Clone + Eq + Hash,
    F: FnMut(&S) -> Result<S>,
{
    let mut seen: HashMap<S, usize> = HashMap::new();
    let mut trajectory = vec![start.clone()];
    seen.insert(start, 0);
    loop {
        let s = next(trajectory.last().expect("non-empty"))?;
        let idx = trajectory.len();
        trajectory.push(s.clone());
        if let Some(&first) = seen.get(&s) {
            return Ok(Repeat {
                trajectory,
                first,
                period: idx - first,
            });
        }
        seen.insert(s, idx);
    }
}

/// Entrywise sum of several experts' relational matrices.
pub fn combine(models: &[RelationalModel]) -> Result<Matrix<i64>> {
    let first = models.first().ok_or(Error::Empty("model list"))?;
    let mut acc = first.matrix.clone();
    for (k, m) in models.iter().enumerate().skip(1) {
        if m.domain_labels != first.domain_labels || m.range_labels != first.range_labels {
            return Err(Error::LabelMismatch(format!(
                "model {} has different node labels from model 1",
                k + 1
            )));
        }
        acc = acc.add(&m.matrix)?;
    }
    Ok(acc)
}

/// The combined map as a relational model with weight bound `p`.
pub fn combined_model(models: &[RelationalModel]) -> Result<RelationalModel> {
    let matrix = combine(models)?;
    let bound: i64 = models.iter().map(|m| m.weight_bound).sum();
    RelationalModel::weighted(models[0].domain_labels.clone(), models[0].range_labels.clone(), matrix, bound)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn teacher() -> RelationalModel {
        RelationalModel::unlabeled(Matrix::from_rows(&[[1i64, 0, 0], [0, 1, 0], [0, 0, 1], [1, 0, 0], [0, 1, 0]]).unwrap()).unwrap()
    }

    fn strict() -> SignalPolicy {
        SignalPolicy::new(SignalKind::BinaryStrict)
    }

    #[test]
    fn step_from_domain_and_range() {
        let m = teacher();
        let a = StateVector::unit(5, 0);
        assert_eq!(frm_step(&m, &a, Side::Domain, &strict(), None).unwrap().values(), &[1, 0, 0]);
        let b = StateVector::unit(3, 0);
        assert_eq!(frm_step(&m, &b, Side::Range, &strict(), None).unwrap().values(), &[1, 0, 0, 1, 0]);
        // (1 0 0 1 0) E = (2 0 0), thresholded to (1 0 0).
        let a1 = StateVector::binary(&[1, 0, 0, 1, 0]).unwrap();
        assert_eq!(left_multiply(&a1.as_scalars::<i64>(), m.matrix()).unwrap(), vec![2, 0, 0]);
        assert_eq!(frm_step(&m, &a1, Side::Domain, &strict(), None).unwrap().values(), &[1, 0, 0]);
    }

    #[test]
    fn step_clamps_target() {
        let m = teacher();
        let clamp = StateVector::unit(3, 2);
        let out = frm_step(&m, &StateVector::unit(5, 0), Side::Domain, &strict(), Some(&clamp)).unwrap();
        assert_eq!(out.values(), &[1, 0, 1]);
    }

    #[test]
    fn step_dimension_mismatch() {
        assert!(frm_step(&teacher(), &StateVector::unit(3, 0), Side::Domain, &strict(), None).is_err());
    }

    #[test]
    fn teacher_hidden_pattern() {
        let hp = hidden_pattern(&teacher(), &StateVector::unit(5, 0), Side::Domain, &FrmOptions::default()).unwrap();
        assert_eq!(hp.kind, PatternKind::FixedPoint);
        assert_eq!(hp.domain_state.values(), &[1, 0, 0, 1, 0]);
        assert_eq!(hp.range_state.values(), &[1, 0, 0]);
        assert_eq!(hp.steps, 2);
    }

    #[test]
    fn zero_matrix_keeps_input() {
        let m = RelationalModel::unlabeled(Matrix::zeros(3, 2).unwrap()).unwrap();
        let hp = hidden_pattern(&m, &StateVector::unit(3, 0), Side::Domain, &FrmOptions::default()).unwrap();
        assert_eq!(hp.kind, PatternKind::FixedPoint);
        assert_eq!(hp.domain_state.values(), &[1, 0, 0]);
        assert_eq!(hp.range_state.values(), &[0, 0]);
    }

    #[test]
    fn rejects_all_off_input_and_large_models() {
        let m = teacher();
        assert_eq!(
            hidden_pattern(&m, &StateVector::off(5, Alphabet::Binary), Side::Domain, &FrmOptions::default()).unwrap_err(),
            Error::NoActiveNode
        );
        let big = RelationalModel::unlabeled(Matrix::zeros(16, 16).unwrap()).unwrap();
        assert!(matches!(
            hidden_pattern(&big, &StateVector::unit(16, 0), Side::Domain, &FrmOptions::default()),
            Err(Error::TooManyNodes { nodes: 32, .. })
        ));
    }

    #[test]
    fn ternary_signal_settles() {
        let m = RelationalModel::unlabeled(Matrix::from_rows(&[[1i64], [-1]]).unwrap()).unwrap();
        let opts = FrmOptions {
            signal: SignalKind::Ternary,
            update: UpdateMode::InputSide,
        };
        let hp = hidden_pattern(&m, &StateVector::unit(2, 0), Side::Domain, &opts).unwrap();
        assert_eq!(hp.kind, PatternKind::FixedPoint);
        assert_eq!(hp.domain_state.values(), &[1, -1]);
        assert_eq!(hp.range_state.values(), &[1]);
    }

    #[test]
    fn find_repeat_classifies_cycles() {
        // 0 -> 1 -> 2 -> 3 -> 1
        let r = find_repeat(0u8, |&s| Ok(if s == 3 { 1 } else { s + 1 })).unwrap();
        assert_eq!(r.trajectory, vec![0, 1, 2, 3, 1]);
        assert_eq!((r.first, r.period), (1, 3));
        let r = find_repeat(5u8, |_| Ok(5)).unwrap();
        assert_eq!((r.first, r.period), (0, 1));
    }

    #[test]
    fn combine_cases() {
        let e = teacher();
        assert_eq!(combine(std::slice::from_ref(&e)).unwrap(), *e.matrix());
        let neg = RelationalModel::unlabeled(e.matrix().map(|x| -x)).unwrap();
        assert_eq!(combine(&[e.clone(), neg]).unwrap(), Matrix::zeros(5, 3).unwrap());
        assert!(combine(&[]).is_err());
        let other = RelationalModel::new(
            (1..=5).map(|i| format!("X{i}")).collect(),
            (1..=3).map(|j| format!("R{j}")).collect(),
            e.matrix().clone(),
        )
        .unwrap();
        assert!(matches!(combine(&[e, other]), Err(Error::LabelMismatch(_))));
    }

    #[test]
    fn simple_model_rejects_weights() {
        assert!(RelationalModel::unlabeled(Matrix::from_rows(&[[2i64]]).unwrap()).is_err());
    }
}
