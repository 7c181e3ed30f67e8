//! Fuzzy model engines: CETD matrices, fuzzy relational maps, bidirectional
//! associative memories, fuzzy associative memories, and the transforms that
//! let one model kind adapt into another.

pub mod adaptive;
pub mod bam;
pub mod cetd;
pub mod error;
pub mod fam;
pub mod fixtures;
pub mod frm;
pub mod numerics;

pub use adaptive::{
    bam_to_atd, bam_to_frm, cetd_to_bam, cfrm_to_bam, classify, AdaptivityReport, Model, ModelKind, Transform, TransformRegistry,
};
pub use bam::{bam_run, bam_step, energy, BamSignal, Direction, HalfStep, StableResult, SynapticModel};
pub use cetd::{row_sums, run_pipeline, to_atd, to_cetd, to_rtd, AtdMatrix, PipelineRun, RawDataTable, RefinedMatrix, Stage, StageMatrix};
pub use error::{Error, Result};
pub use fam::{centroid, fam_backward, fam_forward, top_grades, weighted_combine, FitVector, FuzzyRelation, GradeGroup};
pub use frm::{
    combine, combined_model, frm_step, hidden_pattern, FrmOptions, HiddenPattern, PatternKind, RelationalModel, Side, StatePair, UpdateMode,
};
pub use numerics::{
    apply_signal, left_multiply, population_stats, transpose, Alphabet, Matrix, Scalar, SignalKind, SignalPolicy, StateVector,
};
