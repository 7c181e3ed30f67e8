//! Reference datasets from field studies of HIV/AIDS patients and the public,
//! shipped so examples, tests and benchmarks share one copy.

use crate::bam::SynapticModel;
use crate::cetd::RawDataTable;
use crate::fam::FuzzyRelation;
use crate::frm::RelationalModel;
use crate::numerics::Matrix;

fn labels(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

fn strings(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn table<const C: usize>(rows: &[&str], divisors: &[f64], counts: &[[f64; C]]) -> RawDataTable {
    RawDataTable::new(
        strings(rows),
        divisors.to_vec(),
        labels("A", C),
        Matrix::from_rows(counts).expect("static data"),
    )
    .expect("static data")
}

/// Parameters used with [`patient_age_table`].
pub const PATIENT_ALPHAS: [f64; 3] = [0.5, 0.2, 1.0];

/// Parameters used with the two public-opinion tables.
pub const OPINION_ALPHAS: [f64; 3] = [1.0, 0.7, 0.2];

/// Patients per age group reporting each of six attributes; the divisor is
/// the number of years in the group.
pub fn patient_age_table() -> RawDataTable {
    table(
        &["20-23", "24-30", "31-34", "35-37", "38-40", "41-47"],
        &[4.0, 6.0, 4.0, 3.0, 3.0, 7.0],
        &[
            [3.0, 2.0, 2.0, 3.0, 3.0, 2.0],
            [20.0, 6.0, 15.0, 16.0, 14.0, 10.0],
            [15.0, 4.0, 13.0, 14.0, 9.0, 6.0],
            [8.0, 2.0, 6.0, 6.0, 3.0, 2.0],
            [6.0, 1.0, 4.0, 4.0, 2.0, 1.0],
            [8.0, 1.0, 5.0, 6.0, 3.0, 2.0],
        ],
    )
}

/// Public interviews in six age groups over twelve attitudes; the divisor is
/// the number of people interviewed in the group.
pub fn public_opinion_six_groups() -> RawDataTable {
    table(
        &[">=60", "50-59", "40-49", "30-39", "20-29", "<=19"],
        &[5.0, 13.0, 16.0, 17.0, 36.0, 14.0],
        &[
            [5.0, 0.0, 4.0, 0.0, 2.0, 0.0, 1.0, 2.0, 5.0, 5.0, 4.0, 2.0],
            [6.0, 4.0, 0.0, 2.0, 8.0, 1.0, 2.0, 3.0, 8.0, 10.0, 6.0, 8.0],
            [9.0, 2.0, 7.0, 5.0, 6.0, 1.0, 5.0, 7.0, 15.0, 15.0, 9.0, 7.0],
            [7.0, 0.0, 5.0, 2.0, 9.0, 3.0, 4.0, 5.0, 17.0, 17.0, 16.0, 7.0],
            [15.0, 5.0, 13.0, 4.0, 21.0, 0.0, 8.0, 8.0, 36.0, 35.0, 25.0, 17.0],
            [7.0, 4.0, 1.0, 1.0, 9.0, 1.0, 1.0, 5.0, 11.0, 14.0, 11.0, 10.0],
        ],
    )
}

/// The same interviews split into eleven age groups. The 60-64 group is
/// empty.
pub fn public_opinion_eleven_groups() -> RawDataTable {
    table(
        &[
            ">=65", "60-64", "55-59", "50-54", "45-49", "40-44", "35-39", "30-34", "25-29", "20-24", "14-19",
        ],
        &[5.0, 0.0, 7.0, 6.0, 10.0, 6.0, 10.0, 7.0, 15.0, 21.0, 14.0],
        &[
            [5.0, 0.0, 2.0, 0.0, 1.0, 0.0, 1.0, 2.0, 5.0, 5.0, 4.0, 2.0],
            [0.0; 12],
            [6.0, 1.0, 2.0, 1.0, 4.0, 1.0, 1.0, 1.0, 6.0, 6.0, 3.0, 4.0],
            [0.0, 3.0, 0.0, 1.0, 4.0, 0.0, 1.0, 2.0, 4.0, 4.0, 3.0, 4.0],
            [4.0, 2.0, 5.0, 3.0, 5.0, 1.0, 2.0, 4.0, 8.0, 9.0, 4.0, 6.0],
            [5.0, 0.0, 2.0, 2.0, 1.0, 0.0, 3.0, 2.0, 5.0, 5.0, 5.0, 1.0],
            [4.0, 0.0, 2.0, 2.0, 4.0, 2.0, 4.0, 3.0, 10.0, 10.0, 10.0, 3.0],
            [3.0, 0.0, 3.0, 1.0, 5.0, 1.0, 0.0, 3.0, 7.0, 7.0, 7.0, 4.0],
            [6.0, 2.0, 5.0, 2.0, 10.0, 0.0, 5.0, 5.0, 15.0, 15.0, 13.0, 10.0],
            [8.0, 2.0, 8.0, 2.0, 10.0, 0.0, 2.0, 3.0, 18.0, 17.0, 11.0, 7.0],
            [9.0, 4.0, 1.0, 1.0, 9.0, 1.0, 1.0, 8.0, 14.0, 14.0, 13.0, 11.0],
        ],
    )
}

/// Five teacher concepts against three student concepts.
pub fn teacher_student_map() -> RelationalModel {
    let m = Matrix::from_rows(&[[1i64, 0, 0], [0, 1, 0], [0, 0, 1], [1, 0, 0], [0, 1, 0]]).expect("static data");
    RelationalModel::unlabeled(m).expect("static data")
}

/// Attributes of women (W1..W9) against causes of vulnerability (R1..R10).
pub fn women_vulnerability_map() -> RelationalModel {
    let m = Matrix::from_rows(&[
        [1i64, 1, 1, 0, 1, 1, 0, 0, 1, 0],
        [1, 1, 1, 0, 0, 0, 0, 0, 1, 0],
        [1, 1, 1, 0, 0, 1, 0, 0, 0, 0],
        [1, 1, 0, 0, 0, 0, 0, 1, 1, 0],
        [1, 1, 1, 0, 0, 0, 0, 1, 0, 0],
        [0, 0, 1, 1, 0, 0, 0, 1, 0, 0],
        [1, 0, 1, 0, 0, 0, 0, 0, 0, 0],
        [1, 1, 0, 0, 1, 1, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 1, 0, 1, 1],
    ])
    .expect("static data");
    RelationalModel::new(labels("W", 9), labels("R", 10), m).expect("static data")
}

/// Vulnerability attributes against factors forcing migration, on `[-5, 5]`.
pub fn migration_memory() -> SynapticModel {
    let m = Matrix::from_rows(&[
        [5i64, 2, 4, 4],
        [4, 3, 5, 3],
        [-1, -2, 4, 0],
        [0, 4, 2, 0],
        [2, 4, 3, 3],
        [0, 1, 2, 0],
    ])
    .expect("static data");
    SynapticModel::new(m, 5).expect("static data")
}

/// Roles of government (G1..G5) against vulnerability attributes (A1..A6),
/// on `[-5, 5]`.
pub fn government_memory() -> SynapticModel {
    let m = Matrix::from_rows(&[
        [3i64, 4, -2, 0, -1, 5],
        [5, 4, 3, -1, 0, 4],
        [1, 3, 0, 1, 4, 2],
        [2, 3, -2, -3, 0, 3],
        [3, 2, 0, 3, 1, 4],
    ])
    .expect("static data");
    SynapticModel::new(m, 5)
        .expect("static data")
        .with_labels(labels("G", 5), labels("A", 6))
        .expect("static data")
}

/// Expert CETD matrix of public opinion built from five parameters; six age
/// groups against twelve attitudes.
pub fn public_opinion_cetd() -> Matrix<i64> {
    Matrix::from_rows(&[
        [5i64, -5, 4, -5, 0, -5, -3, 0, 5, 5, 3, 0],
        [0, -1, -5, -4, 2, -5, -4, -2, 2, 3, 0, 2],
        [1, -4, 0, 0, 0, -5, 0, 0, 5, 5, 1, 0],
        [0, -5, -1, -4, 1, -3, -1, -1, 5, 5, 5, 0],
        [0, -4, 0, -4, 1, -5, -3, -3, 5, 5, 2, 0],
        [0, -3, -5, -5, 2, -5, -5, 0, 3, 5, 3, 3],
    ])
    .expect("static data")
}

/// [`public_opinion_cetd`] taken as a memory on `[-5, 5]`.
pub fn public_opinion_memory() -> SynapticModel {
    SynapticModel::new(public_opinion_cetd(), 5)
        .expect("static data")
        .with_labels(strings(&[">=60", "50-59", "40-49", "30-39", "20-29", "<=19"]), labels("A", 12))
        .expect("static data")
}

/// Grades relating seven attributes of women to ten causes. The printed
/// source is garbled in its first row; this reconstruction reproduces the
/// published backward inference.
pub fn women_cause_relation() -> FuzzyRelation {
    let m = Matrix::from_rows(&[
        [0.9, 0.8, 0.7, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.7],
        [0.5, 0.8, 0.6, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.3, 0.6, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.6, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0, 0.9, 0.6, 0.7, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0, 0.0, 0.7, 0.5, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0, 0.6, 0.0, 0.0, 0.0, 0.0, 0.0],
    ])
    .expect("static data");
    FuzzyRelation::new(m, labels("W", 7), labels("R", 10)).expect("static data")
}
