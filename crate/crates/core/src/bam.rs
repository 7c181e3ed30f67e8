//! Discrete additive bidirectional associative memory.
//!
//! Two neuron fields `F_X` (n neurons) and `F_Y` (p neurons) are coupled by an
//! integer synaptic matrix `M` (forward) and `M^T` (backward). Whole fields
//! update synchronously; a raw activation exactly at the threshold keeps the
//! neuron's previous signal.

use crate::error::{Error, Result};
use crate::numerics::{apply_signal, left_multiply, Alphabet, Matrix, SignalKind, SignalPolicy, StateVector};

/// Binary (0/1) or bipolar (-1/1) neuron signals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BamSignal {
    #[default]
    Binary,
    Bipolar,
}

impl BamSignal {
    pub fn kind(self) -> SignalKind {
        match self {
            BamSignal::Binary => SignalKind::BamBinaryMemory,
            BamSignal::Bipolar => SignalKind::BamBipolarMemory,
        }
    }

    pub fn alphabet(self) -> Alphabet {
        self.kind().alphabet()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SynapticModel {
    matrix: Matrix<i64>,
    scale: i64,
    x_labels: Vec<String>,
    y_labels: Vec<String>,
    x_thresholds: Vec<f64>,
    y_thresholds: Vec<f64>,
    x_inputs: Vec<f64>,
    y_inputs: Vec<f64>,
    signal: BamSignal,
}

impl SynapticModel {
    /// Model on the scale `[-scale, scale]` with zero thresholds and inputs.
    pub fn new(matrix: Matrix<i64>, scale: i64) -> Result<Self> {
        if scale < 1 {
            return Err(Error::InvalidParameter(format!("scale must be a positive integer, got {scale}")));
        }
        for i in 0..matrix.rows() {
            for j in 0..matrix.cols() {
                let v = matrix.get(i, j);
                if v.abs() > scale {
                    return Err(Error::EntryOutOfRange {
                        row: i,
                        col: j,
                        value: v as f64,
                        range: format!("[-{scale}, {scale}]"),
                    });
                }
            }
        }
        let n = matrix.rows();
        let p = matrix.cols();
        Ok(Self {
            x_labels: (1..=n).map(|i| format!("X{i}")).collect(),
            y_labels: (1..=p).map(|j| format!("Y{j}")).collect(),
            x_thresholds: vec![0.0; n],
            y_thresholds: vec![0.0; p],
            x_inputs: vec![0.0; n],
            y_inputs: vec![0.0; p],
            signal: BamSignal::Binary,
            matrix,
            scale,
        })
    }

    pub fn with_labels(mut self, x_labels: Vec<String>, y_labels: Vec<String>) -> Result<Self> {
        check("F_X labels", self.n(), x_labels.len())?;
        check("F_Y labels", self.p(), y_labels.len())?;
        self.x_labels = x_labels;
        self.y_labels = y_labels;
        Ok(self)
    }

    /// Thresholds `U` (on `F_X`) and `V` (on `F_Y`).
    pub fn with_thresholds(mut self, u: Vec<f64>, v: Vec<f64>) -> Result<Self> {
        check("F_X thresholds", self.n(), u.len())?;
        check("F_Y thresholds", self.p(), v.len())?;
        self.x_thresholds = u;
        self.y_thresholds = v;
        Ok(self)
    }

    /// Constant inputs `I` (on `F_X`) and `J` (on `F_Y`).
    pub fn with_inputs(mut self, i: Vec<f64>, j: Vec<f64>) -> Result<Self> {
        check("F_X inputs", self.n(), i.len())?;
        check("F_Y inputs", self.p(), j.len())?;
        self.x_inputs = i;
        self.y_inputs = j;
        Ok(self)
    }

    pub fn with_signal(mut self, signal: BamSignal) -> Self {
        self.signal = signal;
        self
    }

    /// Same memory with the roles of the two fields exchanged.
    pub fn transposed(&self) -> Self {
        Self {
            matrix: self.matrix.transpose(),
            scale: self.scale,
            x_labels: self.y_labels.clone(),
            y_labels: self.x_labels.clone(),
            x_thresholds: self.y_thresholds.clone(),
            y_thresholds: self.x_thresholds.clone(),
            x_inputs: self.y_inputs.clone(),
            y_inputs: self.x_inputs.clone(),
            signal: self.signal,
        }
    }

    pub fn matrix(&self) -> &Matrix<i64> {
        &self.matrix
    }

    pub fn scale(&self) -> i64 {
        self.scale
    }

    pub fn signal(&self) -> BamSignal {
        self.signal
    }

    pub fn x_labels(&self) -> &[String] {
        &self.x_labels
    }

    pub fn y_labels(&self) -> &[String] {
        &self.y_labels
    }

    /// Size of `F_X`.
    pub fn n(&self) -> usize {
        self.matrix.rows()
    }

    /// Size of `F_Y`.
    pub fn p(&self) -> usize {
        self.matrix.cols()
    }

    fn x_policy(&self) -> SignalPolicy {
        SignalPolicy::with_thresholds(self.signal.kind(), self.x_thresholds.clone())
    }

    fn y_policy(&self) -> SignalPolicy {
        SignalPolicy::with_thresholds(self.signal.kind(), self.y_thresholds.clone())
    }
}

fn check(context: &'static str, expected: usize, actual: usize) -> Result<()> {
    if expected != actual {
        return Err(Error::DimensionMismatch { context, expected, actual });
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// `F_X` to `F_Y` through `M`.
    Forward,
    /// `F_Y` to `F_X` through `M^T`.
    Backward,
}

/// One synchronous half-step. Returns the raw activation of the target field
/// and its new signal; `prev` is the target field's current signal.
pub fn bam_step(model: &SynapticModel, signal: &StateVector, direction: Direction, prev: &StateVector) -> Result<(Vec<f64>, StateVector)> {
    let (product, inputs, policy) = match direction {
        Direction::Forward => {
            check("BAM forward signal", model.n(), signal.len())?;
            (
                left_multiply(&signal.as_scalars::<i64>(), &model.matrix)?,
                &model.y_inputs,
                model.y_policy(),
            )
        }
        Direction::Backward => {
            check("BAM backward signal", model.p(), signal.len())?;
            (
                left_multiply(&signal.as_scalars::<i64>(), &model.matrix.transpose())?,
                &model.x_inputs,
                model.x_policy(),
            )
        }
    };
    let raw: Vec<f64> = product.iter().zip(inputs).map(|(&s, &inp)| s as f64 + inp).collect();
    let out = apply_signal(&raw, &policy, prev)?;
    Ok((raw, out))
}

/// One recorded half-step of a run.
#[derive(Debug, Clone, PartialEq)]
pub struct HalfStep {
    pub direction: Direction,
    pub raw: Vec<f64>,
    pub signal: StateVector,
}

/// Bidirectionally stable pair `(A_f, B_f)` and how it was reached.
#[derive(Debug, Clone, PartialEq)]
pub struct StableResult {
    pub x_signal: StateVector,
    pub y_signal: StateVector,
    /// Initial `F_X` signal obtained by thresholding the activation.
    pub initial_x_signal: StateVector,
    /// Half-steps executed, including the two confirming ones.
    pub iterations: usize,
    /// Last half-step that changed a signal (0 if the start was already stable).
    pub settled_at: usize,
    pub trajectory: Vec<HalfStep>,
}

/// Runs the memory from an `F_X` activation until one forward and one
/// backward half-step both leave the pair unchanged.
///
/// `initial_prev_y` is the `F_Y` signal consulted at threshold ties on the
/// first forward step; it defaults to the all-off vector.
pub fn bam_run(model: &SynapticModel, initial_activation: &[f64], initial_prev_y: Option<&StateVector>) -> Result<StableResult> {
    check("BAM initial activation", model.n(), initial_activation.len())?;
    let alphabet = model.signal.alphabet();
    let mut x = apply_signal(initial_activation, &model.x_policy(), &StateVector::off(model.n(), alphabet))?;
    let initial_x_signal = x.clone();
    let mut y = match initial_prev_y {
        Some(y) => {
            check("BAM initial F_Y signal", model.p(), y.len())?;
            StateVector::new(y.values().to_vec(), alphabet)?
        }
        None => StateVector::off(model.p(), alphabet),
    };

    let nodes = (model.n() + model.p()) as u32;
    let limit: u64 = 1u64.checked_shl(nodes).unwrap_or(u64::MAX).max(4);
    let mut trajectory = Vec::new();
    let mut unchanged_run = 0;
    let mut settled_at = 0;
    let mut direction = Direction::Forward;
    let mut half = 0u64;
    while unchanged_run < 2 {
        if half >= limit {
            return Err(Error::NotConverged { limit });
        }
        half += 1;
        let (raw, next) = match direction {
            Direction::Forward => bam_step(model, &x, direction, &y)?,
            Direction::Backward => bam_step(model, &y, direction, &x)?,
        };
        let target = match direction {
            Direction::Forward => &mut y,
            Direction::Backward => &mut x,
        };
        if *target == next {
            unchanged_run += 1;
        } else {
            unchanged_run = 0;
            settled_at = half as usize;
            *target = next.clone();
        }
        trajectory.push(HalfStep {
            direction,
            raw,
            signal: next,
        });
        direction = match direction {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        };
    }
    Ok(StableResult {
        x_signal: x,
        y_signal: y,
        initial_x_signal,
        iterations: half as usize,
        settled_at,
        trajectory,
    })
}

/// `E = -(x M)·y - I·x - J·y`.
pub fn energy(model: &SynapticModel, x_signal: &StateVector, y_signal: &StateVector) -> Result<f64> {
    check("energy F_X signal", model.n(), x_signal.len())?;
    check("energy F_Y signal", model.p(), y_signal.len())?;
    let xm = left_multiply(&x_signal.as_scalars::<i64>(), &model.matrix)?;
    let coupling: i64 = xm.iter().zip(y_signal.values()).map(|(&a, &b)| a * b as i64).sum();
    let ix: f64 = model.x_inputs.iter().zip(x_signal.values()).map(|(&i, &x)| i * x as f64).sum();
    let jy: f64 = model.y_inputs.iter().zip(y_signal.values()).map(|(&j, &y)| j * y as f64).sum();
    Ok(-(coupling as f64) - ix - jy)
}
