//! Engines checked against slow, independent reimplementations.

use fuzzadapt_core::fixtures;
use fuzzadapt_core::*;
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Straight loops over the raw table, each branch tested on its own.
fn pipeline_oracle(counts: &[Vec<f64>], divisors: &[f64], alphas: &[f64]) -> Vec<Vec<i64>> {
    let rows = counts.len();
    let cols = counts[0].len();
    let mut atd = vec![vec![0.0; cols]; rows];
    for i in 0..rows {
        for j in 0..cols {
            atd[i][j] = if divisors[i] == 0.0 { 0.0 } else { counts[i][j] / divisors[i] };
        }
    }
    let mut cetd = vec![vec![0i64; cols]; rows];
    for j in 0..cols {
        let mut sum = 0.0;
        for row in &atd {
            sum += row[j];
        }
        let mean = sum / rows as f64;
        let mut sq = 0.0;
        for row in &atd {
            sq += (row[j] - mean) * (row[j] - mean);
        }
        let sd = (sq / rows as f64).sqrt();
        for &alpha in alphas {
            for i in 0..rows {
                let a = atd[i][j];
                let low = a <= mean - alpha * sd;
                let high = a >= mean + alpha * sd;
                let e = if sd == 0.0 {
                    0
                } else if low {
                    -1
                } else if high {
                    1
                } else {
                    0
                };
                cetd[i][j] += e;
            }
        }
    }
    cetd
}

fn random_table(rng: &mut ChaCha8Rng) -> (Vec<Vec<f64>>, Vec<f64>) {
    let rows = rng.gen_range(1..=8);
    let cols = rng.gen_range(1..=8);
    let counts = (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(0..30) as f64).collect())
        .collect();
    let divisors = (0..rows).map(|_| rng.gen_range(0..8) as f64).collect();
    (counts, divisors)
}

fn raw_table(counts: &[Vec<f64>], divisors: &[f64]) -> RawDataTable {
    let rows = counts.len();
    let cols = counts[0].len();
    RawDataTable::new(
        (0..rows).map(|i| format!("r{i}")).collect(),
        divisors.to_vec(),
        (0..cols).map(|j| format!("c{j}")).collect(),
        Matrix::from_rows(counts).unwrap(),
    )
    .unwrap()
}

#[test]
fn pipeline_matches_oracle_on_random_tables() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..500 {
        let (counts, divisors) = random_table(&mut rng);
        let alphas: Vec<f64> = (0..rng.gen_range(1..=4)).map(|_| rng.gen_range(0..=10) as f64 / 10.0).collect();
        let run = run_pipeline(&raw_table(&counts, &divisors), &alphas).unwrap();
        let want = pipeline_oracle(&counts, &divisors, &alphas);
        let got: Vec<Vec<i64>> = run.cetd.data.iter_rows().map(|r| r.to_vec()).collect();
        assert_eq!(got, want, "counts {counts:?} divisors {divisors:?} alphas {alphas:?}");
    }
}

#[test]
fn survey_tables_match_oracle() {
    for table in [fixtures::public_opinion_six_groups(), fixtures::public_opinion_eleven_groups()] {
        let counts: Vec<Vec<f64>> = table.counts().iter_rows().map(|r| r.to_vec()).collect();
        let run = run_pipeline(&table, &fixtures::OPINION_ALPHAS).unwrap();
        let want = pipeline_oracle(&counts, table.row_divisors(), &fixtures::OPINION_ALPHAS);
        let want_sums: Vec<i64> = want.iter().map(|r| r.iter().sum()).collect();
        assert_eq!(run.cetd_row_sums(), want_sums);
    }
}

fn max_min_oracle(m: &[[f64; 3]; 3], b: &[f64; 3]) -> ([f64; 3], [f64; 3]) {
    let mut back = [0.0; 3];
    let mut fwd = [0.0; 3];
    for i in 0..3 {
        for j in 0..3 {
            let v = if m[i][j] < b[j] { m[i][j] } else { b[j] };
            if v > back[i] {
                back[i] = v;
            }
            let w = if b[i] < m[i][j] { b[i] } else { m[i][j] };
            if w > fwd[j] {
                fwd[j] = w;
            }
        }
    }
    (back, fwd)
}

#[test]
fn fam_matches_oracle_on_grid_relations() {
    const GRID: [f64; 5] = [0.0, 0.25, 0.5, 0.75, 1.0];
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let fits: Vec<[f64; 3]> = (0..200).map(|_| [rng.gen(), rng.gen(), rng.gen()]).collect();
    // Every relation over the grid, each paired with one of the fit vectors.
    for code in 0..5usize.pow(9) {
        let mut c = code;
        let mut m = [[0.0; 3]; 3];
        for cell in m.iter_mut().flatten() {
            *cell = GRID[c % 5];
            c /= 5;
        }
        let b = fits[code % fits.len()];
        let rel = FuzzyRelation::unlabeled(Matrix::from_rows(&m).unwrap()).unwrap();
        let fit = FitVector::new(b.to_vec()).unwrap();
        let (back, fwd) = max_min_oracle(&m, &b);
        assert_eq!(fam_backward(&rel, &fit).unwrap().values(), &back);
        assert_eq!(fam_forward(&fit, &rel).unwrap().values(), &fwd);
    }
}

#[test]
fn cetd_bam_atd_round_trip_is_exact() {
    let tables = [
        (fixtures::patient_age_table(), &fixtures::PATIENT_ALPHAS[..]),
        (fixtures::public_opinion_six_groups(), &fixtures::OPINION_ALPHAS[..]),
        (fixtures::public_opinion_eleven_groups(), &fixtures::OPINION_ALPHAS[..]),
    ];
    for (table, alphas) in tables {
        let cetd = run_pipeline(&table, alphas).unwrap().cetd;
        let atd = bam_to_atd(&cetd_to_bam(&cetd).unwrap());
        let k = alphas.len() as i64;
        for (&c, &a) in cetd.data.as_slice().iter().zip(atd.data.as_slice()) {
            let exact = Ratio::new(c, k);
            assert_eq!(Ratio::<i64>::approximate_float(a), Some(exact));
            assert_eq!(a * k as f64, c as f64);
        }
    }
}

#[test]
fn combine_matches_loop_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..50 {
        let models: Vec<Vec<i64>> = (0..3).map(|_| (0..12).map(|_| rng.gen_range(-1..=1)).collect()).collect();
        let rms: Vec<RelationalModel> = models
            .iter()
            .map(|d| RelationalModel::unlabeled(Matrix::new(4, 3, d.clone()).unwrap()).unwrap())
            .collect();
        let mut want = [0i64; 12];
        for d in &models {
            for (w, v) in want.iter_mut().zip(d) {
                *w += v;
            }
        }
        assert_eq!(combine(&rms).unwrap().as_slice(), &want[..]);
        let bam = cfrm_to_bam(&rms).unwrap();
        assert_eq!(bam.scale(), 3);
        assert!(bam.matrix().as_slice().iter().all(|v| v.abs() <= 3));
    }
}

#[test]
fn energy_of_all_on_pair_is_negated_entry_sum() {
    let model = fixtures::migration_memory();
    let mut total = 0;
    for i in 0..model.n() {
        for j in 0..model.p() {
            total += model.matrix().get(i, j);
        }
    }
    let x = StateVector::binary(&vec![1; model.n()]).unwrap();
    let y = StateVector::binary(&vec![1; model.p()]).unwrap();
    assert_eq!(energy(&model, &x, &y).unwrap(), -(total as f64));
}
