//! Transformations between model kinds and classification of model
//! collections by how they adapt to one another.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::bam::SynapticModel;
use crate::cetd::{to_cetd, AtdMatrix, RefinedMatrix, Stage, StageMatrix};
use crate::error::{Error, Result};
use crate::fam::FuzzyRelation;
use crate::frm::{combined_model, RelationalModel};
use crate::numerics::Matrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ModelKind {
    CetdMatrix,
    Bam,
    Frm,
    Fam,
}

impl ModelKind {
    pub const ALL: [ModelKind; 4] = [ModelKind::CetdMatrix, ModelKind::Bam, ModelKind::Frm, ModelKind::Fam];

    pub fn name(self) -> &'static str {
        match self {
            ModelKind::CetdMatrix => "CETD_MATRIX",
            ModelKind::Bam => "BAM",
            ModelKind::Frm => "FRM",
            ModelKind::Fam => "FAM",
        }
    }
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ModelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().replace('-', "_").as_str() {
            "CETD_MATRIX" | "CETD" => Ok(ModelKind::CetdMatrix),
            "BAM" => Ok(ModelKind::Bam),
            "FRM" => Ok(ModelKind::Frm),
            "FAM" => Ok(ModelKind::Fam),
            other => Err(Error::InvalidParameter(format!("unknown model kind '{other}'"))),
        }
    }
}

/// A concrete model of one of the supported kinds.
#[derive(Debug, Clone, PartialEq)]
pub enum Model {
    Cetd(RefinedMatrix),
    Bam(SynapticModel),
    Frm(RelationalModel),
    Fam(FuzzyRelation),
}

impl Model {
    pub fn kind(&self) -> ModelKind {
        match self {
            Model::Cetd(_) => ModelKind::CetdMatrix,
            Model::Bam(_) => ModelKind::Bam,
            Model::Frm(_) => ModelKind::Frm,
            Model::Fam(_) => ModelKind::Fam,
        }
    }
}

/// CETD matrix taken unchanged as a BAM on `[-k, k]`, `k` the number of
/// parameters the CETD was built from.
pub fn cetd_to_bam(cetd: &RefinedMatrix) -> Result<SynapticModel> {
    let k = match &cetd.stage {
        Stage::Cetd { alphas } => alphas.len(),
        other => {
            return Err(Error::InvalidParameter(format!("expected a CETD matrix, got {}", other.name())));
        }
    };
    SynapticModel::new(cetd.data.clone(), k as i64)?.with_labels(cetd.row_labels.clone(), cetd.col_labels.clone())
}

/// Divides every synaptic weight by the scale, giving an ATD-stage matrix.
pub fn bam_to_atd(model: &SynapticModel) -> AtdMatrix {
    let t = model.scale() as f64;
    StageMatrix {
        stage: Stage::Atd,
        row_labels: model.x_labels().to_vec(),
        col_labels: model.y_labels().to_vec(),
        data: model.matrix().map(|v| v as f64 / t),
    }
}

/// The combined map of `p` experts as a BAM on `[-p, p]`.
pub fn cfrm_to_bam(models: &[RelationalModel]) -> Result<SynapticModel> {
    let combined = combined_model(models)?;
    frm_as_bam(&combined)
}

fn frm_as_bam(model: &RelationalModel) -> Result<SynapticModel> {
    SynapticModel::new(model.matrix().clone(), model.weight_bound())?
        .with_labels(model.domain_labels().to_vec(), model.range_labels().to_vec())
}

/// Reads each normalised weight `v = m_ij / t` through the band
/// `(c - eps, c + eps)`: `-1` at or below it, `+1` at or above it, `0` inside.
pub fn bam_to_frm(model: &SynapticModel, c: f64, eps: f64) -> Result<RelationalModel> {
    if !(eps > 0.0 && eps < c) {
        return Err(Error::InvalidParameter(format!("need 0 < eps < c, got c = {c}, eps = {eps}")));
    }
    let t = model.scale() as f64;
    let matrix: Matrix<i64> = model.matrix().map(|m| {
        let v = m as f64 / t;
        if v <= c - eps {
            -1
        } else if v >= c + eps {
            1
        } else {
            0
        }
    });
    RelationalModel::new(model.x_labels().to_vec(), model.y_labels().to_vec(), matrix)
}

/// A registered transformation and its parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum Transform {
    /// Identity embedding of a CETD matrix as a BAM.
    CetdToBam,
    /// Divide by the scale, then refine with the given parameters.
    BamToCetd {
        alphas: Vec<f64>,
    },
    /// Combined (or single) FRM as a BAM on its weight bound.
    CfrmToBam,
    BamToFrm {
        c: f64,
        eps: f64,
    },
    /// An edge known to exist but without an executable procedure.
    Declared(String),
}

impl Transform {
    pub fn apply(&self, model: &Model) -> Result<Model> {
        match (self, model) {
            (Transform::CetdToBam, Model::Cetd(m)) => Ok(Model::Bam(cetd_to_bam(m)?)),
            (Transform::BamToCetd { alphas }, Model::Bam(m)) => Ok(Model::Cetd(to_cetd(&bam_to_atd(m), alphas)?)),
            (Transform::CfrmToBam, Model::Frm(m)) => Ok(Model::Bam(frm_as_bam(m)?)),
            (Transform::BamToFrm { c, eps }, Model::Bam(m)) => Ok(Model::Frm(bam_to_frm(m, *c, *eps)?)),
            (Transform::Declared(name), _) => Err(Error::InvalidParameter(format!(
                "transform '{name}' is declared but has no procedure"
            ))),
            (t, m) => Err(Error::InvalidParameter(format!("{t:?} cannot be applied to a {} model", m.kind()))),
        }
    }

    fn endpoints(&self) -> Option<(ModelKind, ModelKind)> {
        match self {
            Transform::CetdToBam => Some((ModelKind::CetdMatrix, ModelKind::Bam)),
            Transform::BamToCetd { .. } => Some((ModelKind::Bam, ModelKind::CetdMatrix)),
            Transform::CfrmToBam => Some((ModelKind::Frm, ModelKind::Bam)),
            Transform::BamToFrm { .. } => Some((ModelKind::Bam, ModelKind::Frm)),
            Transform::Declared(_) => None,
        }
    }
}

/// Directed edges between model kinds, at most one per ordered pair.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct TransformRegistry {
    edges: BTreeMap<(ModelKind, ModelKind), Transform>,
}

impl TransformRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    /// The four executable transforms between CETD matrices, BAMs and FRMs.
    pub fn standard(alphas: Vec<f64>, c: f64, eps: f64) -> Result<Self> {
        let mut r = Self::new();
        r.register(ModelKind::CetdMatrix, ModelKind::Bam, Transform::CetdToBam)?;
        r.register(ModelKind::Bam, ModelKind::CetdMatrix, Transform::BamToCetd { alphas })?;
        r.register(ModelKind::Frm, ModelKind::Bam, Transform::CfrmToBam)?;
        r.register(ModelKind::Bam, ModelKind::Frm, Transform::BamToFrm { c, eps })?;
        Ok(r)
    }

    pub fn register(&mut self, from: ModelKind, to: ModelKind, transform: Transform) -> Result<()> {
        if from == to {
            return Err(Error::InvalidParameter(format!("self-edge on {from}")));
        }
        if let Some(ends) = transform.endpoints() {
            if ends != (from, to) {
                return Err(Error::InvalidParameter(format!("{transform:?} does not map {from} to {to}")));
            }
        }
        if self.edges.contains_key(&(from, to)) {
            return Err(Error::InvalidParameter(format!(
                "a transform from {from} to {to} is already registered"
            )));
        }
        self.edges.insert((from, to), transform);
        Ok(())
    }

    pub fn declare(&mut self, from: ModelKind, to: ModelKind) -> Result<()> {
        self.register(from, to, Transform::Declared(format!("{from}->{to}")))
    }

    pub fn get(&self, from: ModelKind, to: ModelKind) -> Option<&Transform> {
        self.edges.get(&(from, to))
    }

    pub fn has_edge(&self, from: ModelKind, to: ModelKind) -> bool {
        self.edges.contains_key(&(from, to))
    }

    pub fn edges(&self) -> impl Iterator<Item = (ModelKind, ModelKind)> + '_ {
        self.edges.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Registry keeping only edges with both ends in `kinds`.
    pub fn restrict(&self, kinds: &[ModelKind]) -> Self {
        let keep: BTreeSet<_> = kinds.iter().copied().collect();
        Self {
            edges: self
                .edges
                .iter()
                .filter(|((a, b), _)| keep.contains(a) && keep.contains(b))
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }

    /// Transforms `model` into `target` through the registered edge.
    pub fn apply(&self, model: &Model, target: ModelKind) -> Result<Model> {
        let from = model.kind();
        let t = self.get(from, target).ok_or_else(|| Error::NoTransform {
            from: from.to_string(),
            to: target.to_string(),
        })?;
        t.apply(model)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdaptivityReport {
    /// Every ordered pair of distinct kinds has a transform.
    pub full_n_adaptive: bool,
    /// An ordering visiting every kind once along registered edges.
    pub directed_chain: Option<Vec<ModelKind>>,
    /// Vertex count of the longest simple directed path.
    pub max_semi_directed_r: usize,
}

pub fn classify(registry: &TransformRegistry, kinds: &[ModelKind]) -> Result<AdaptivityReport> {
    if kinds.len() < 2 {
        return Err(Error::InvalidParameter(format!(
            "need at least two model kinds, got {}",
            kinds.len()
        )));
    }
    let distinct: BTreeSet<_> = kinds.iter().collect();
    if distinct.len() != kinds.len() {
        return Err(Error::InvalidParameter("model kinds must be distinct".into()));
    }
    let n = kinds.len();
    let adj: Vec<Vec<usize>> = kinds
        .iter()
        .map(|&a| (0..n).filter(|&j| kinds[j] != a && registry.has_edge(a, kinds[j])).collect())
        .collect();
    let full_n_adaptive = adj.iter().all(|out| out.len() == n - 1);

    let mut best: Vec<usize> = Vec::new();
    let mut path = Vec::with_capacity(n);
    let mut used = vec![false; n];
    for start in 0..n {
        path.push(start);
        used[start] = true;
        longest_path(&adj, &mut path, &mut used, &mut best);
        used[start] = false;
        path.pop();
        if best.len() == n {
            break;
        }
    }
    let directed_chain = (best.len() == n).then(|| best.iter().map(|&i| kinds[i]).collect());
    Ok(AdaptivityReport {
        full_n_adaptive,
        directed_chain,
        max_semi_directed_r: best.len(),
    })
}

fn longest_path(adj: &[Vec<usize>], path: &mut Vec<usize>, used: &mut [bool], best: &mut Vec<usize>) {
    if path.len() > best.len() {
        best.clone_from(path);
    }
    if best.len() == adj.len() {
        return;
    }
    let last = *path.last().expect("path is never empty");
    for &next in &adj[last] {
        if !used[next] {
            used[next] = true;
            path.push(next);
            longest_path(adj, path, used, best);
            path.pop();
            used[next] = false;
        }
    }
}
