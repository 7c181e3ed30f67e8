//! Job descriptions, their execution and the files they produce.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use csv::{ReaderBuilder, Trim};
use fuzzadapt_core::{
    bam_run, centroid, classify, energy, fam_backward, fam_forward, hidden_pattern, run_pipeline, top_grades, Alphabet, BamSignal,
    Direction, FitVector, FrmOptions, FuzzyRelation, HiddenPattern, Matrix, Model, ModelKind, PatternKind, RawDataTable, RelationalModel,
    Side, SignalKind, Stage as PipelineStage, StageMatrix, StateVector, SynapticModel, Transform, TransformRegistry, UpdateMode,
};

use crate::chart::{peak, svg_chart, text_chart};
use crate::error::{CliError, Stage};
use crate::format::{ints, reals, sig6};
use crate::report::Report;
use crate::table::{load_table, matrix_tsv, raw_table_tsv, LabeledMatrix, Table};

/// Which field of a BAM receives the input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BamSide {
    X,
    Y,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamDirection {
    Forward,
    Backward,
}

#[derive(Debug, Clone, PartialEq)]
pub enum JobConfig {
    Cetd {
        table: PathBuf,
        alphas: Vec<f64>,
    },
    Frm {
        model: PathBuf,
        input: Vec<f64>,
        side: Side,
        signal: SignalKind,
        update: UpdateMode,
    },
    Cfrm {
        experts: Vec<PathBuf>,
        input: Option<Vec<f64>>,
        side: Side,
    },
    Bam {
        model: PathBuf,
        input: Vec<f64>,
        side: BamSide,
        scale: Option<i64>,
        signal: BamSignal,
        prev: Option<Vec<f64>>,
    },
    Fam {
        model: PathBuf,
        direction: FamDirection,
        fit: Vec<f64>,
        support: Option<Vec<f64>>,
    },
    Transform {
        from: ModelKind,
        to: ModelKind,
        models: Vec<PathBuf>,
        alphas: Option<Vec<f64>>,
        scale: Option<i64>,
        c: Option<f64>,
        eps: Option<f64>,
    },
    Classify {
        registry: PathBuf,
        kinds: Option<Vec<ModelKind>>,
    },
}

fn join_full(v: &[f64]) -> String {
    v.iter().map(f64::to_string).collect::<Vec<_>>().join(",")
}

fn side_name(side: Side) -> &'static str {
    match side {
        Side::Domain => "domain",
        Side::Range => "range",
    }
}

impl JobConfig {
    pub fn name(&self) -> &'static str {
        match self {
            JobConfig::Cetd { .. } => "cetd",
            JobConfig::Frm { .. } => "frm",
            JobConfig::Cfrm { .. } => "cfrm",
            JobConfig::Bam { .. } => "bam",
            JobConfig::Fam { .. } => "fam",
            JobConfig::Transform { .. } => "transform",
            JobConfig::Classify { .. } => "classify",
        }
    }

    /// Command-line arguments (without `--out`) that recreate this job.
    pub fn command_line(&self) -> String {
        let mut s = self.name().to_string();
        let mut arg = |k: &str, v: String| {
            let _ = write!(s, " --{k} {v}");
        };
        match self {
            JobConfig::Cetd { table, alphas } => {
                arg("table", table.display().to_string());
                arg("alphas", join_full(alphas));
            }
            JobConfig::Frm {
                model,
                input,
                side,
                signal,
                update,
            } => {
                arg("model", model.display().to_string());
                arg("input", join_full(input));
                arg("side", side_name(*side).into());
                arg("policy", if *signal == SignalKind::Ternary { "ternary" } else { "binary" }.into());
                arg("update", if *update == UpdateMode::BothSides { "both" } else { "input" }.into());
            }
            JobConfig::Cfrm { experts, input, side } => {
                for e in experts {
                    arg("expert", e.display().to_string());
                }
                if let Some(input) = input {
                    arg("input", join_full(input));
                    arg("side", side_name(*side).into());
                }
            }
            JobConfig::Bam {
                model,
                input,
                side,
                scale,
                signal,
                prev,
            } => {
                arg("model", model.display().to_string());
                arg("input", join_full(input));
                arg("side", if *side == BamSide::X { "x" } else { "y" }.into());
                if let Some(t) = scale {
                    arg("scale", t.to_string());
                }
                arg("policy", if *signal == BamSignal::Bipolar { "bipolar" } else { "binary" }.into());
                if let Some(p) = prev {
                    arg("prev", join_full(p));
                }
            }
            JobConfig::Fam {
                model,
                direction,
                fit,
                support,
            } => {
                arg("model", model.display().to_string());
                arg(
                    "direction",
                    if *direction == FamDirection::Forward {
                        "forward"
                    } else {
                        "backward"
                    }
                    .into(),
                );
                arg("fit", join_full(fit));
                if let Some(y) = support {
                    arg("support", join_full(y));
                }
            }
            JobConfig::Transform {
                from,
                to,
                models,
                alphas,
                scale,
                c,
                eps,
            } => {
                arg("from", from.to_string());
                arg("to", to.to_string());
                for m in models {
                    arg("model", m.display().to_string());
                }
                if let Some(a) = alphas {
                    arg("alphas", join_full(a));
                }
                if let Some(t) = scale {
                    arg("scale", t.to_string());
                }
                if let Some(c) = c {
                    arg("c", c.to_string());
                }
                if let Some(e) = eps {
                    arg("eps", e.to_string());
                }
            }
            JobConfig::Classify { registry, kinds } => {
                arg("registry", registry.display().to_string());
                if let Some(k) = kinds {
                    arg("kinds", k.iter().map(ModelKind::to_string).collect::<Vec<_>>().join(","));
                }
            }
        }
        s
    }
}

/// Everything a job writes, keyed by file name. `report.txt` is always
/// present.
#[derive(Debug, Clone, PartialEq)]
pub struct JobOutput {
    pub files: BTreeMap<String, String>,
}

impl JobOutput {
    pub fn report(&self) -> &str {
        &self.files["report.txt"]
    }

    pub fn write_to(&self, dir: &Path) -> Result<(), CliError> {
        std::fs::create_dir_all(dir).map_err(|e| CliError::input(format!("{}: {e}", dir.display())))?;
        for (name, body) in &self.files {
            let path = dir.join(name);
            std::fs::write(&path, body).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
        }
        Ok(())
    }
}

struct Files {
    files: BTreeMap<String, String>,
}

impl Files {
    fn new() -> Self {
        Self { files: BTreeMap::new() }
    }

    fn add(&mut self, name: impl Into<String>, body: String) {
        self.files.insert(name.into(), body);
    }

    fn finish(mut self, report: Report) -> JobOutput {
        self.files.insert("report.txt".into(), report.into_string());
        JobOutput { files: self.files }
    }
}

fn load_matrix(path: &Path) -> Result<LabeledMatrix, CliError> {
    load_table(path)?.into_matrix(&path.display().to_string())
}

fn load_raw(path: &Path) -> Result<RawDataTable, CliError> {
    load_table(path)?.into_raw(&path.display().to_string())
}

fn state_vector(values: &[f64], alphabet: Alphabet, what: &'static str) -> Result<StateVector, CliError> {
    let mut out = Vec::with_capacity(values.len());
    for (i, &v) in values.iter().enumerate() {
        if v.fract() != 0.0 || !alphabet.contains(v as i8) || v.abs() > 1.0 {
            return Err(CliError::input(format!(
                "{what}: element {} ({v}) is not a {} state",
                i + 1,
                alphabet.name()
            )));
        }
        out.push(v as i8);
    }
    StateVector::new(out, alphabet).stage(what)
}

fn load_frm(path: &Path) -> Result<RelationalModel, CliError> {
    let m = load_matrix(path)?;
    let ints = m.integers(&path.display().to_string())?;
    RelationalModel::new(m.row_labels_or("D"), m.col_labels_or("R"), ints).stage("frm model")
}

fn load_bam(path: &Path, scale: Option<i64>) -> Result<SynapticModel, CliError> {
    let m = load_matrix(path)?;
    let ints = m.integers(&path.display().to_string())?;
    let t = scale.unwrap_or_else(|| ints.as_slice().iter().map(|v| v.abs()).max().unwrap_or(0).max(1));
    SynapticModel::new(ints, t)
        .and_then(|b| b.with_labels(m.row_labels_or("X"), m.col_labels_or("Y")))
        .stage("bam model")
}

fn load_fam(path: &Path) -> Result<FuzzyRelation, CliError> {
    let m = load_matrix(path)?;
    FuzzyRelation::new(m.data.clone(), m.row_labels_or("C"), m.col_labels_or("E")).stage("fam model")
}

pub fn run_job(config: &JobConfig) -> Result<JobOutput, CliError> {
    let mut report = Report::new(config.name());
    report.field("command", config.command_line());
    let mut files = Files::new();
    match config {
        JobConfig::Cetd { table, alphas } => cetd_job(table, alphas, &mut report, &mut files)?,
        JobConfig::Frm {
            model,
            input,
            side,
            signal,
            update,
        } => {
            let frm = load_frm(model)?;
            report.int_matrix("model", frm.domain_labels(), frm.range_labels(), frm.matrix());
            let options = FrmOptions {
                signal: *signal,
                update: *update,
            };
            frm_pattern(&frm, input, *side, &options, &mut report, &mut files)?;
        }
        JobConfig::Cfrm { experts, input, side } => {
            let models = experts.iter().map(|p| load_frm(p)).collect::<Result<Vec<_>, _>>()?;
            let combined = fuzzadapt_core::combined_model(&models).stage("combine")?;
            report.field("experts", models.len());
            report.int_matrix("combined", combined.domain_labels(), combined.range_labels(), combined.matrix());
            files.add(
                "combined.tsv",
                matrix_tsv(combined.domain_labels(), combined.range_labels(), combined.matrix()),
            );
            if let Some(input) = input {
                frm_pattern(&combined, input, *side, &FrmOptions::default(), &mut report, &mut files)?;
            }
        }
        JobConfig::Bam {
            model,
            input,
            side,
            scale,
            signal,
            prev,
        } => {
            let bam = load_bam(model, *scale)?.with_signal(*signal);
            bam_job(&bam, input, *side, prev.as_deref(), &mut report, &mut files)?;
        }
        JobConfig::Fam {
            model,
            direction,
            fit,
            support,
        } => fam_job(&load_fam(model)?, *direction, fit, support.as_deref(), &mut report, &mut files)?,
        JobConfig::Transform {
            from,
            to,
            models,
            alphas,
            scale,
            c,
            eps,
        } => transform_job(*from, *to, models, alphas.as_deref(), *scale, *c, *eps, &mut report, &mut files)?,
        JobConfig::Classify { registry, kinds } => classify_job(registry, kinds.as_deref(), &mut report)?,
    }
    Ok(files.finish(report))
}

fn alpha_tag(a: f64) -> String {
    a.to_string()
}

fn cetd_job(table: &Path, alphas: &[f64], report: &mut Report, files: &mut Files) -> Result<(), CliError> {
    let ird = load_raw(table)?;
    let run = run_pipeline(&ird, alphas).stage("cetd pipeline")?;
    let rows = ird.row_labels();
    let cols = ird.col_labels();
    report.field("alphas", reals(alphas));
    report.field("divisors", reals(ird.row_divisors()));
    report.real_matrix("ird", rows, cols, ird.counts());
    report.note("ATD = counts / divisor, rows with divisor 0 are zero");
    report.real_matrix("atd", rows, cols, &run.atd.data);
    files.add("ird.tsv", raw_table_tsv(&ird));
    files.add("atd.tsv", matrix_tsv(rows, cols, &run.atd.data));

    let mut sums_tsv = String::from("label");
    for a in alphas {
        let _ = write!(sums_tsv, "\trtd_alpha_{}", alpha_tag(*a));
    }
    sums_tsv.push_str("\tcetd\n");
    let rtd_sums: Vec<Vec<i64>> = run.rtds.iter().map(|r| r.row_sums()).collect();

    for (k, (rtd, &a)) in run.rtds.iter().zip(alphas).enumerate() {
        let name = format!("rtd_{}_alpha_{}", k + 1, alpha_tag(a));
        report.blank();
        report.field("stage", format!("RTD alpha = {}", sig6(a)));
        report.note("entries at or beyond mean -/+ alpha * sd give -1/+1, constant columns give 0");
        report.int_matrix(&name, rows, cols, &rtd.data);
        report.field("row_sums", ints(&rtd_sums[k]));
        let sums: Vec<f64> = rtd_sums[k].iter().map(|&v| v as f64).collect();
        if let Some(p) = peak(&sums) {
            report.field("peak", &rows[p]);
        }
        files.add(format!("{name}.tsv"), matrix_tsv(rows, cols, &rtd.data));
        let title = format!("Row sums of the RTD matrix, alpha = {}", sig6(a));
        files.add(format!("{name}.svg"), svg_chart(&title, &sums, rows));
    }

    let cetd_sums = run.cetd_row_sums();
    report.blank();
    report.field("stage", "CETD");
    report.note("entrywise sum of the RTD matrices");
    report.int_matrix("cetd", rows, cols, &run.cetd.data);
    report.field("row_sums", ints(&cetd_sums));
    let sums: Vec<f64> = cetd_sums.iter().map(|&v| v as f64).collect();
    if let Some(p) = peak(&sums) {
        report.field("peak", &rows[p]);
    }
    files.add("cetd.tsv", matrix_tsv(rows, cols, &run.cetd.data));
    for (i, label) in rows.iter().enumerate() {
        sums_tsv.push_str(label);
        for s in &rtd_sums {
            let _ = write!(sums_tsv, "\t{}", s[i]);
        }
        let _ = writeln!(sums_tsv, "\t{}", cetd_sums[i]);
    }
    files.add("row_sums.tsv", sums_tsv);
    let title = "Row sums of the CETD matrix";
    files.add("rowsums.svg", svg_chart(title, &sums, rows));
    files.add("rowsums.txt", text_chart(title, &sums, rows));
    Ok(())
}

fn frm_pattern(
    model: &RelationalModel,
    input: &[f64],
    side: Side,
    options: &FrmOptions,
    report: &mut Report,
    files: &mut Files,
) -> Result<(), CliError> {
    let alphabet = options.signal.alphabet();
    let initial = state_vector(input, alphabet, "initial state")?;
    let hp: HiddenPattern = hidden_pattern(model, &initial, side, options).stage("hidden pattern")?;
    report.field("input_side", side_name(side));
    report.field("initial", &initial);
    let mut tsv = String::from("round\tdomain\trange\n");
    for (k, pair) in hp.trajectory.iter().enumerate() {
        report.field(&format!("round_{}", k + 1), format!("{} {}", pair.domain, pair.range));
        let _ = writeln!(tsv, "{}\t{}\t{}", k + 1, pair.domain, pair.range);
    }
    match hp.kind {
        PatternKind::FixedPoint => report.field("hidden_pattern", "fixed point"),
        PatternKind::LimitCycle => {
            report.field("hidden_pattern", "limit cycle");
            report.field("cycle_length", hp.cycle.len());
        }
    }
    report.field("domain_state", &hp.domain_state);
    report.field("range_state", &hp.range_state);
    report.field("steps", hp.steps);
    let on = |s: &StateVector, labels: &[String]| {
        s.values()
            .iter()
            .zip(labels)
            .filter(|(&v, _)| v == 1)
            .map(|(_, l)| l.as_str())
            .collect::<Vec<_>>()
            .join(", ")
    };
    report.field("domain_on", on(&hp.domain_state, model.domain_labels()));
    report.field("range_on", on(&hp.range_state, model.range_labels()));
    files.add("pattern.tsv", tsv);
    Ok(())
}

fn bam_job(
    bam: &SynapticModel,
    input: &[f64],
    side: BamSide,
    prev: Option<&[f64]>,
    report: &mut Report,
    files: &mut Files,
) -> Result<(), CliError> {
    report.field("scale", bam.scale());
    report.field("policy", if bam.signal() == BamSignal::Bipolar { "bipolar" } else { "binary" });
    report.int_matrix("model", bam.x_labels(), bam.y_labels(), bam.matrix());
    let (runner, input_name) = match side {
        BamSide::X => (bam.clone(), "x"),
        BamSide::Y => {
            report.note("input on F_Y, run against the transposed matrix");
            (bam.transposed(), "y")
        }
    };
    report.field("input_side", input_name);
    report.field("activation", reals(input));
    let prev = prev
        .map(|p| state_vector(p, bam.signal().alphabet(), "initial signal"))
        .transpose()?;
    let r = bam_run(&runner, input, prev.as_ref()).stage("bam run")?;
    report.field("initial_signal", &r.initial_x_signal);
    let mut tsv = String::from("half_step\tdirection\traw\tsignal\n");
    for (k, step) in r.trajectory.iter().enumerate() {
        let dir = match (step.direction, side) {
            (Direction::Forward, BamSide::X) | (Direction::Backward, BamSide::Y) => "to_y",
            _ => "to_x",
        };
        report.field(
            &format!("half_step_{}", k + 1),
            format!("{dir} raw ({}) signal {}", reals(&step.raw), step.signal),
        );
        let _ = writeln!(tsv, "{}\t{dir}\t{}\t{}", k + 1, reals(&step.raw), step.signal);
    }
    let (x, y) = match side {
        BamSide::X => (r.x_signal.clone(), r.y_signal.clone()),
        BamSide::Y => (r.y_signal.clone(), r.x_signal.clone()),
    };
    report.field("x_signal", &x);
    report.field("y_signal", &y);
    report.field("settled_at", r.settled_at);
    report.field("iterations", r.iterations);
    report.field("energy", sig6(energy(bam, &x, &y).stage("energy")?));
    files.add("trajectory.tsv", tsv);
    Ok(())
}

fn fam_job(
    rel: &FuzzyRelation,
    direction: FamDirection,
    fit: &[f64],
    support: Option<&[f64]>,
    report: &mut Report,
    files: &mut Files,
) -> Result<(), CliError> {
    report.real_matrix("relation", rel.row_labels(), rel.col_labels(), rel.matrix());
    let fit = FitVector::new(fit.to_vec()).stage("fit vector")?;
    report.field("fit", reals(fit.values()));
    let (result, labels) = match direction {
        FamDirection::Backward => (fam_backward(rel, &fit).stage("fam backward")?, rel.row_labels()),
        FamDirection::Forward => (fam_forward(&fit, rel).stage("fam forward")?, rel.col_labels()),
    };
    report.note("max-min composition");
    report.field("result", reals(result.values()));
    let groups = top_grades(&result, labels).stage("grades")?;
    for (k, g) in groups.iter().enumerate() {
        report.field(
            &format!("grade_{}", k + 1),
            format!("{} {{{}}}", sig6(g.value), g.labels.join(", ")),
        );
    }
    if let Some(y) = support {
        report.field("centroid", sig6(centroid(&result, y).stage("centroid")?));
    }
    let mut tsv = String::from("label\tvalue\n");
    for (l, v) in labels.iter().zip(result.values()) {
        let _ = writeln!(tsv, "{l}\t{v}");
    }
    files.add("result.tsv", tsv);
    Ok(())
}

fn need<T>(v: Option<T>, flag: &str, from: ModelKind, to: ModelKind) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::input(format!("--{flag} is required to transform {from} into {to}")))
}

#[allow(clippy::too_many_arguments)]
fn transform_job(
    from: ModelKind,
    to: ModelKind,
    models: &[PathBuf],
    alphas: Option<&[f64]>,
    scale: Option<i64>,
    c: Option<f64>,
    eps: Option<f64>,
    report: &mut Report,
    files: &mut Files,
) -> Result<(), CliError> {
    let first = models.first().ok_or_else(|| CliError::input("at least one --model is required"))?;
    if models.len() > 1 && from != ModelKind::Frm {
        return Err(CliError::input("several --model files are only combined for FRM sources"));
    }
    let transform = match (from, to) {
        (ModelKind::CetdMatrix, ModelKind::Bam) => Transform::CetdToBam,
        (ModelKind::Bam, ModelKind::CetdMatrix) => Transform::BamToCetd {
            alphas: need(alphas, "alphas", from, to)?.to_vec(),
        },
        (ModelKind::Frm, ModelKind::Bam) => Transform::CfrmToBam,
        (ModelKind::Bam, ModelKind::Frm) => Transform::BamToFrm {
            c: need(c, "c", from, to)?,
            eps: need(eps, "eps", from, to)?,
        },
        _ => {
            return Err(CliError::input(format!("no transformation from {from} to {to} is available")));
        }
    };
    let mut registry = TransformRegistry::new();
    registry.register(from, to, transform).stage("registry")?;

    let source = match from {
        ModelKind::CetdMatrix => Model::Cetd(load_cetd(first, alphas)?),
        ModelKind::Bam => Model::Bam(load_bam(first, scale)?),
        ModelKind::Frm => {
            let frms = models.iter().map(|p| load_frm(p)).collect::<Result<Vec<_>, _>>()?;
            report.field("experts", frms.len());
            Model::Frm(fuzzadapt_core::combined_model(&frms).stage("combine")?)
        }
        ModelKind::Fam => unreachable!("no FAM source transform"),
    };
    report.field("from", from);
    report.field("to", to);
    let out = registry.apply(&source, to).stage("transform")?;
    match &out {
        Model::Bam(b) => {
            report.field("scale", b.scale());
            report.int_matrix("bam", b.x_labels(), b.y_labels(), b.matrix());
            files.add("model.tsv", matrix_tsv(b.x_labels(), b.y_labels(), b.matrix()));
        }
        Model::Cetd(m) => {
            report.note("weights divided by the scale, then refined");
            report.int_matrix("cetd", &m.row_labels, &m.col_labels, &m.data);
            report.field("row_sums", ints(&m.row_sums()));
            files.add("model.tsv", matrix_tsv(&m.row_labels, &m.col_labels, &m.data));
        }
        Model::Frm(f) => {
            report.int_matrix("frm", f.domain_labels(), f.range_labels(), f.matrix());
            files.add("model.tsv", matrix_tsv(f.domain_labels(), f.range_labels(), f.matrix()));
        }
        Model::Fam(_) => unreachable!("no transform produces a FAM"),
    }
    Ok(())
}

/// A CETD source is either a raw table refined with `alphas`, or an integer
/// matrix built from that many parameters.
fn load_cetd(path: &Path, alphas: Option<&[f64]>) -> Result<fuzzadapt_core::RefinedMatrix, CliError> {
    let alphas = alphas.ok_or_else(|| CliError::input("--alphas is required for a CETD source"))?;
    match load_table(path)? {
        Table::Raw(ird) => Ok(run_pipeline(&ird, alphas).stage("cetd pipeline")?.cetd),
        Table::Matrix(m) => {
            let data: Matrix<i64> = m.integers(&path.display().to_string())?;
            let k = alphas.len() as i64;
            if let Some(v) = data.as_slice().iter().find(|v| v.abs() > k) {
                return Err(CliError::input(format!(
                    "{}: CETD entry {v} exceeds the {k} parameters given",
                    path.display()
                )));
            }
            Ok(StageMatrix {
                stage: PipelineStage::Cetd { alphas: alphas.to_vec() },
                row_labels: m.row_labels_or("R"),
                col_labels: m.col_labels_or("A"),
                data,
            })
        }
    }
}

/// Registry files hold one `FROM,TO` edge per line.
pub fn load_registry(path: &Path) -> Result<TransformRegistry, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    let mut reader = ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(Trim::All)
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let mut registry = TransformRegistry::new();
    for rec in reader.records() {
        let rec = rec.map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
        let line = rec.position().map_or(0, |p| p.line());
        if rec.len() != 2 {
            return Err(CliError::input(format!("{}: line {line}: expected FROM,TO", path.display())));
        }
        let kind = |s: &str| {
            s.parse::<ModelKind>()
                .map_err(|e| CliError::input(format!("{}: line {line}: {e}", path.display())))
        };
        let (a, b) = (kind(&rec[0])?, kind(&rec[1])?);
        registry
            .declare(a, b)
            .map_err(|e| CliError::input(format!("{}: line {line}: {e}", path.display())))?;
    }
    Ok(registry)
}

fn classify_job(path: &Path, kinds: Option<&[ModelKind]>, report: &mut Report) -> Result<(), CliError> {
    let registry = load_registry(path)?;
    let kinds: Vec<ModelKind> = match kinds {
        Some(k) => k.to_vec(),
        None => ModelKind::ALL
            .into_iter()
            .filter(|k| registry.edges().any(|(a, b)| a == *k || b == *k))
            .collect(),
    };
    for (a, b) in registry.edges() {
        report.field("edge", format!("{a} -> {b}"));
    }
    report.field("kinds", kinds.iter().map(ModelKind::to_string).collect::<Vec<_>>().join(", "));
    let rep = classify(&registry, &kinds).stage("classify")?;
    report.field("full_n_adaptive", rep.full_n_adaptive);
    report.field(
        "directed_chain",
        rep.directed_chain.as_ref().map_or("none".to_string(), |c| {
            c.iter().map(ModelKind::to_string).collect::<Vec<_>>().join(" -> ")
        }),
    );
    report.field("max_semi_directed_r", rep.max_semi_directed_r);
    Ok(())
}
