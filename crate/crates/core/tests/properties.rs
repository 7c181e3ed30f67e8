use fuzzadapt_core::*;
use proptest::prelude::*;

fn int_matrix(max_rows: usize, max_cols: usize, lo: i64, hi: i64) -> impl Strategy<Value = Matrix<i64>> {
    (1..=max_rows, 1..=max_cols)
        .prop_flat_map(move |(r, c)| prop::collection::vec(lo..=hi, r * c).prop_map(move |data| Matrix::new(r, c, data).unwrap()))
}

fn binary_vec(len: usize) -> impl Strategy<Value = Vec<i8>> {
    prop::collection::vec(0i8..=1, len)
}

fn atd_table(max_rows: usize, max_cols: usize) -> impl Strategy<Value = AtdMatrix> {
    (2..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        prop::collection::vec(0u32..=40, r * c).prop_map(move |cells| StageMatrix {
            stage: Stage::Atd,
            row_labels: (0..r).map(|i| format!("r{i}")).collect(),
            col_labels: (0..c).map(|j| format!("c{j}")).collect(),
            data: Matrix::new(r, c, cells.into_iter().map(|v| v as f64 / 4.0).collect()).unwrap(),
        })
    })
}

/// True when some entry of `col` sits within `tol` of a band edge, where
/// rounding in shifted or scaled data could move it across.
fn near_band_edge(col: &[f64], alpha: f64, tol: f64) -> bool {
    let (mu, sd) = population_stats(col).unwrap();
    col.iter()
        .any(|&a| (a - (mu - alpha * sd)).abs() < tol || (a - (mu + alpha * sd)).abs() < tol)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn left_multiply_distributes(
        (a, b, v) in (1usize..6, 1usize..6).prop_flat_map(|(r, c)| (
            prop::collection::vec(-9i64..=9, r * c),
            prop::collection::vec(-9i64..=9, r * c),
            prop::collection::vec(-9i64..=9, r),
            Just((r, c)),
        ).prop_map(|(a, b, v, (r, c))| (Matrix::new(r, c, a).unwrap(), Matrix::new(r, c, b).unwrap(), v)))
    ) {
        let lhs = left_multiply(&v, &a.add(&b).unwrap()).unwrap();
        let pa = left_multiply(&v, &a).unwrap();
        let pb = left_multiply(&v, &b).unwrap();
        let rhs: Vec<i64> = pa.iter().zip(&pb).map(|(x, y)| x + y).collect();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn transpose_is_an_involution(m in int_matrix(6, 6, -5, 5)) {
        prop_assert_eq!(transpose(&transpose(&m)), m);
    }

    #[test]
    fn stats_translate_and_scale(col in prop::collection::vec(-100i32..100, 1..20), shift in -50i32..50, k in -5i32..5) {
        let col: Vec<f64> = col.into_iter().map(f64::from).collect();
        let (mu, sd) = population_stats(&col).unwrap();
        let shifted: Vec<f64> = col.iter().map(|x| x + shift as f64).collect();
        let (mu_s, sd_s) = population_stats(&shifted).unwrap();
        prop_assert!((mu_s - mu - shift as f64).abs() < 1e-9);
        prop_assert!((sd_s - sd).abs() < 1e-9);
        let scaled: Vec<f64> = col.iter().map(|x| x * k as f64).collect();
        let (_, sd_k) = population_stats(&scaled).unwrap();
        prop_assert!((sd_k - sd * (k as f64).abs()).abs() < 1e-9);
    }

    #[test]
    fn signal_alphabet_matches_policy(raw in prop::collection::vec(-3i32..3, 1..10), kind in prop::sample::select(vec![
        SignalKind::BinaryStrict, SignalKind::BamBinaryMemory, SignalKind::BamBipolarMemory, SignalKind::Ternary,
    ])) {
        let raw: Vec<f64> = raw.into_iter().map(f64::from).collect();
        let prev = StateVector::off(raw.len(), kind.alphabet());
        let s = apply_signal(&raw, &SignalPolicy::new(kind), &prev).unwrap();
        prop_assert_eq!(s.alphabet(), kind.alphabet());
        prop_assert!(s.values().iter().all(|&v| kind.alphabet().contains(v)));
    }

    #[test]
    fn rtd_narrows_as_alpha_grows(atd in atd_table(8, 6), a1 in 0.0f64..=1.0, a2 in 0.0f64..=1.0) {
        let (lo, hi) = if a1 <= a2 { (a1, a2) } else { (a2, a1) };
        let r_lo = to_rtd(&atd, lo).unwrap();
        let r_hi = to_rtd(&atd, hi).unwrap();
        for (&x, &y) in r_lo.data.as_slice().iter().zip(r_hi.data.as_slice()) {
            prop_assert!(y.abs() <= x.abs());
            if x != 0 && y != 0 {
                prop_assert_eq!(x, y);
            }
        }
    }

    #[test]
    fn rtd_column_is_translation_and_scale_invariant(
        atd in atd_table(8, 4),
        alpha in 0.0f64..=1.0,
        shift in -10.0f64..10.0,
        scale in 0.1f64..10.0,
    ) {
        let base = to_rtd(&atd, alpha).unwrap();
        for j in 0..atd.data.cols() {
            let col = atd.data.column(j);
            if near_band_edge(&col, alpha, 1e-9) {
                continue;
            }
            for f in [|a: f64, s: f64, _k: f64| a + s, |a: f64, _s: f64, k: f64| a * k] {
                let mut moved = atd.clone();
                for i in 0..atd.data.rows() {
                    moved.data.set(i, j, f(atd.data.get(i, j), shift, scale));
                }
                let r = to_rtd(&moved, alpha).unwrap();
                prop_assert_eq!(r.data.column(j), base.data.column(j));
            }
        }
    }

    #[test]
    fn cetd_row_sums_are_linear(atd in atd_table(8, 8), alphas in prop::collection::vec(0.0f64..=1.0, 1..5)) {
        let cetd = to_cetd(&atd, &alphas).unwrap();
        let mut expected = vec![0i64; atd.data.rows()];
        for &a in &alphas {
            for (e, s) in expected.iter_mut().zip(to_rtd(&atd, a).unwrap().row_sums()) {
                *e += s;
            }
        }
        prop_assert_eq!(cetd.row_sums(), expected);
        let k = alphas.len() as i64;
        prop_assert!(cetd.data.as_slice().iter().all(|v| v.abs() <= k));
    }

    #[test]
    fn hidden_pattern_is_stable_and_bounded(
        (m, init) in int_matrix(8, 8, -1, 1).prop_flat_map(|m| {
            let n = m.rows();
            (Just(m), binary_vec(n).prop_filter("an active node", |v| v.contains(&1)))
        })
    ) {
        let model = RelationalModel::unlabeled(m).unwrap();
        let init = StateVector::binary(&init).unwrap();
        let hp = hidden_pattern(&model, &init, Side::Domain, &FrmOptions::default()).unwrap();
        prop_assert_eq!(hp.kind, PatternKind::FixedPoint);
        let n = model.matrix().rows();
        let p = model.matrix().cols();
        prop_assert!(hp.steps <= n + p, "steps {} > {}", hp.steps, n + p);

        let policy = SignalPolicy::new(SignalKind::BinaryStrict);
        let out = frm_step(&model, &hp.domain_state, Side::Domain, &policy, None).unwrap();
        prop_assert_eq!(&out, &hp.range_state);
        let back = frm_step(&model, &out, Side::Range, &policy, Some(&init)).unwrap();
        prop_assert_eq!(&back, &hp.domain_state);
        for (&a, &b) in init.values().iter().zip(hp.domain_state.values()) {
            prop_assert!(b >= a);
        }
    }

    #[test]
    fn hidden_pattern_is_permutation_equivariant(
        (m, init, perm) in int_matrix(7, 7, -1, 1).prop_flat_map(|m| {
            let n = m.rows();
            (
                Just(m),
                binary_vec(n).prop_filter("an active node", |v| v.contains(&1)),
                Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
            )
        })
    ) {
        let n = m.rows();
        let mut pm = Matrix::zeros(n, m.cols()).unwrap();
        for (new_i, &old_i) in perm.iter().enumerate() {
            for j in 0..m.cols() {
                pm.set(new_i, j, m.get(old_i, j));
            }
        }
        let pinit: Vec<i8> = perm.iter().map(|&i| init[i]).collect();
        let opts = FrmOptions::default();
        let a = hidden_pattern(&RelationalModel::unlabeled(m).unwrap(), &StateVector::binary(&init).unwrap(), Side::Domain, &opts).unwrap();
        let b = hidden_pattern(&RelationalModel::unlabeled(pm).unwrap(), &StateVector::binary(&pinit).unwrap(), Side::Domain, &opts).unwrap();
        let permuted: Vec<i8> = perm.iter().map(|&i| a.domain_state.values()[i]).collect();
        prop_assert_eq!(b.domain_state.values(), &permuted[..]);
        prop_assert_eq!(b.range_state, a.range_state);
    }

    #[test]
    fn combine_commutes_and_associates(
        (a, b, c) in (1usize..5, 1usize..5).prop_flat_map(|(r, k)| {
            let one = move || prop::collection::vec(-1i64..=1, r * k).prop_map(move |d| RelationalModel::unlabeled(Matrix::new(r, k, d).unwrap()).unwrap());
            (one(), one(), one())
        })
    ) {
        prop_assert_eq!(combine(&[a.clone(), b.clone()]).unwrap(), combine(&[b.clone(), a.clone()]).unwrap());
        let ab = combined_model(&[a.clone(), b.clone()]).unwrap();
        let bc = combined_model(&[b.clone(), c.clone()]).unwrap();
        prop_assert_eq!(combine(&[ab, c.clone()]).unwrap(), combine(&[a.clone(), bc]).unwrap());
        prop_assert_eq!(combine(&[a, b, c]).unwrap().as_slice().iter().map(|v| v.abs()).max().unwrap() <= 3, true);
    }

    #[test]
    fn bam_converges_with_falling_energy(
        (m, act) in int_matrix(8, 8, -5, 5).prop_flat_map(|m| {
            let n = m.rows();
            (Just(m), prop::collection::vec(-5i32..=5, n))
        })
    ) {
        let model = SynapticModel::new(m, 5).unwrap();
        let act: Vec<f64> = act.into_iter().map(f64::from).collect();
        let r = bam_run(&model, &act, None).unwrap();

        let (_, y) = bam_step(&model, &r.x_signal, Direction::Forward, &r.y_signal).unwrap();
        prop_assert_eq!(&y, &r.y_signal);
        let (_, x) = bam_step(&model, &y, Direction::Backward, &r.x_signal).unwrap();
        prop_assert_eq!(&x, &r.x_signal);

        let mut x = r.initial_x_signal.clone();
        let mut y = StateVector::off(model.p(), Alphabet::Binary);
        let mut e = energy(&model, &x, &y).unwrap();
        for step in &r.trajectory {
            let changed = match step.direction {
                Direction::Forward => std::mem::replace(&mut y, step.signal.clone()) != step.signal,
                Direction::Backward => std::mem::replace(&mut x, step.signal.clone()) != step.signal,
            };
            let next = energy(&model, &x, &y).unwrap();
            prop_assert!(next <= e);
            if changed {
                prop_assert!(next < e);
            }
            e = next;
        }
    }

    #[test]
    fn fam_is_monotone_and_bounded(
        (rel, b, db) in (1usize..6, 1usize..6).prop_flat_map(|(r, c)| (
            prop::collection::vec(0.0f64..=1.0, r * c).prop_map(move |d| FuzzyRelation::unlabeled(Matrix::new(r, c, d).unwrap()).unwrap()),
            prop::collection::vec(0.0f64..=1.0, c),
            prop::collection::vec(0.0f64..=1.0, c),
        ))
    ) {
        let bigger: Vec<f64> = b.iter().zip(&db).map(|(x, d)| (x + d).min(1.0)).collect();
        let lo = fam_backward(&rel, &FitVector::new(b.clone()).unwrap()).unwrap();
        let hi = fam_backward(&rel, &FitVector::new(bigger).unwrap()).unwrap();
        let bmax = b.iter().cloned().fold(0.0, f64::max);
        for (x, y) in lo.values().iter().zip(hi.values()) {
            prop_assert!(x <= y);
            prop_assert!(*x <= bmax);
            prop_assert!((0.0..=1.0).contains(y));
        }
        let fwd = fam_forward(&lo, &rel).unwrap();
        let lmax = lo.values().iter().cloned().fold(0.0, f64::max);
        prop_assert!(fwd.values().iter().all(|&v| (0.0..=1.0).contains(&v) && v <= lmax));
    }

    #[test]
    fn bam_to_frm_is_ternary(m in int_matrix(6, 6, -4, 4), c in 0.05f64..1.0, frac in 0.05f64..0.95) {
        let bam = SynapticModel::new(m, 4).unwrap();
        let frm = bam_to_frm(&bam, c, c * frac).unwrap();
        prop_assert!(frm.matrix().as_slice().iter().all(|v| [-1, 0, 1].contains(v)));
    }

    #[test]
    fn subset_of_full_registry_stays_full(mask in 3u8..16) {
        let mut r = TransformRegistry::new();
        for a in ModelKind::ALL {
            for b in ModelKind::ALL {
                if a != b {
                    r.declare(a, b).unwrap();
                }
            }
        }
        let kinds: Vec<ModelKind> = ModelKind::ALL.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, k)| *k).collect();
        prop_assume!(kinds.len() >= 2);
        let rep = classify(&r.restrict(&kinds), &kinds).unwrap();
        prop_assert!(rep.full_n_adaptive);
        prop_assert_eq!(rep.max_semi_directed_r, kinds.len());
    }

    #[test]
    fn classification_implications_hold(edges in prop::collection::vec(any::<bool>(), 12), n in 2usize..=4) {
        let mut r = TransformRegistry::new();
        let mut k = 0;
        for a in ModelKind::ALL {
            for b in ModelKind::ALL {
                if a != b {
                    if edges[k] {
                        r.declare(a, b).unwrap();
                    }
                    k += 1;
                }
            }
        }
        let kinds = &ModelKind::ALL[..n];
        let rep = classify(&r, kinds).unwrap();
        if rep.full_n_adaptive {
            prop_assert!(rep.directed_chain.is_some());
        }
        prop_assert_eq!(rep.directed_chain.is_some(), rep.max_semi_directed_r == n);
        if let Some(chain) = &rep.directed_chain {
            for w in chain.windows(2) {
                prop_assert!(r.has_edge(w[0], w[1]));
            }
        }
        prop_assert!((1..=n).contains(&rep.max_semi_directed_r));
    }
}
