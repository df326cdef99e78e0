mod common;

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4, PI};

use common::*;
use proptest::prelude::*;
use zzsynth::dense::max_abs_diff;
use zzsynth::targets::{
    conditional_phase_matrix, diffusion_matrix, grover_iterate_matrix, oracle_matrix, walsh_hadamard_matrix,
};
use zzsynth::{
    build_grover_iteration, build_walsh_hadamard, compile_conditional_phase, compile_controlled_u,
    compile_deutsch_jozsa, decompose_u2, distance_up_to_phase, sequence_unitary, simulate_grover,
    universal_gate_matrix, DenseUnitary, GateCounts, TruthTable, U2Matrix,
};

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Counts for a generic `u`: every Walsh coefficient of the core is nonzero.
fn generic_controlled_counts(n: usize) -> GateCounts {
    let mut c = GateCounts { zz: 0, one_qubit: 4, phase: 1 };
    for m in 1..=n {
        if m == 1 {
            c.one_qubit += n;
        } else {
            c.zz += binom(n, m) * (2 * m - 3);
            c.one_qubit += binom(n, m) * 6 * (m - 2);
        }
    }
    c
}

fn hadamard() -> U2Matrix<f64> {
    let h = C::new(FRAC_1_SQRT_2, 0.0);
    U2Matrix::new([[h, h], [h, -h]]).unwrap()
}

#[test]
fn hadamard_parameters() {
    // e^{iπ/2} RY(π/4) RZ(π) RY(-π/4) = (X + Z)/√2.
    let p = decompose_u2(&hadamard());
    assert!(p.alpha.abs() < 1e-15);
    assert!((p.beta - FRAC_PI_4).abs() < 1e-15);
    assert!((p.phi0 + PI / 2.0).abs() < 1e-15);
    assert!((p.phi1 - PI).abs() < 1e-15);
}

#[test]
fn deutsch_gate_counts() {
    let u = u2_from_angles(0.3, 1.1, 0.7, -0.4);
    let seq = compile_controlled_u(&u, 3).unwrap();
    assert_eq!(seq.counts(), GateCounts { zz: 6, one_qubit: 13, phase: 1 });
    let d = distance_up_to_phase(&sequence_unitary(&seq).unwrap(), &universal_gate_matrix(&u, 3).unwrap()).unwrap();
    assert!(d < 1e-10);
}

#[test]
fn two_qubit_core_shape() {
    let u = u2_from_angles(0.3, 1.1, 0.7, -0.4);
    let seq = compile_controlled_u(&u, 2).unwrap();
    // T† (2), GPHASE, RZ, RZ, ZZ, T (2).
    assert_eq!(seq.counts(), GateCounts { zz: 1, one_qubit: 6, phase: 1 });
}

#[test]
fn walsh_hadamard_one_qubit_is_hadamard() {
    let w = sequence_unitary(&build_walsh_hadamard::<f64>(1).unwrap()).unwrap();
    let h = hadamard();
    for i in 0..2 {
        for j in 0..2 {
            assert!((w.matrix()[[i, j]] - h.get(i, j)).norm() < 1e-12);
        }
    }
}

#[test]
fn walsh_hadamard_matches_tensor_power() {
    for n in 1..=8 {
        let got = sequence_unitary(&build_walsh_hadamard::<f64>(n).unwrap()).unwrap();
        let want = walsh_hadamard_matrix(n).unwrap();
        assert!(max_abs_diff(got.matrix(), want.matrix()) < 1e-12, "n={n}");
    }
    for n in 1..=6 {
        let w = sequence_unitary(&build_walsh_hadamard::<f64>(n).unwrap()).unwrap();
        let ww = w.compose(&w).unwrap();
        assert!(distance_up_to_phase(&ww, &DenseUnitary::identity(n)).unwrap() < 1e-12);
    }
}

#[test]
fn diffusion_and_grover_match_dense() {
    for n in 1..=6 {
        let dim = 1usize << n;
        for marked in [0, dim / 3, dim - 1] {
            let it = sequence_unitary(&build_grover_iteration::<f64>(n, marked).unwrap()).unwrap();
            let want = grover_iterate_matrix(n, marked).unwrap();
            assert!(max_abs_diff(it.matrix(), want.matrix()) < 1e-10, "n={n} marked={marked}");
            assert!(it.unitarity_defect() < 1e-12);
        }
    }
    let d = diffusion_matrix::<f64>(8).unwrap();
    let c = conditional_phase_matrix::<f64>(8, 77).unwrap();
    let it = sequence_unitary(&build_grover_iteration::<f64>(8, 77).unwrap()).unwrap();
    assert!(distance_up_to_phase(&it, &d.compose(&c).unwrap()).unwrap() < 1e-10);
}

#[test]
fn grover_probabilities() {
    for n in 1..=6 {
        let theta = (2f64.powf(-(n as f64) / 2.0)).asin();
        for k in 0..=10 {
            let marked = (5 * k + 3) % (1 << n);
            let p = simulate_grover::<f64>(n, marked, k).unwrap();
            let want = ((2 * k + 1) as f64 * theta).sin().powi(2);
            assert!((p - want).abs() < 1e-9, "n={n} k={k}: {p} vs {want}");
        }
    }
    assert!((simulate_grover::<f64>(3, 2, 2).unwrap() - 0.9453).abs() < 1e-4);
    assert!((simulate_grover::<f64>(2, 1, 1).unwrap() - 1.0).abs() < 1e-10);
    assert!((simulate_grover::<f64>(1, 0, 0).unwrap() - 0.5).abs() < 1e-15);
}

#[test]
fn deutsch_jozsa_examples() {
    let parity = TruthTable::parity(2).unwrap();
    let u = sequence_unitary(&compile_deutsch_jozsa::<f64>(&parity).unwrap()).unwrap();
    let signs = [1.0, -1.0, -1.0, 1.0];
    for (i, s) in signs.into_iter().enumerate() {
        assert!((u.matrix()[[i, i]] - C::new(s, 0.0)).norm() < 1e-12);
    }
}

#[test]
fn conditional_phase_has_single_sign_flip() {
    let u = sequence_unitary(&compile_conditional_phase::<f64>(3, 5, PI).unwrap()).unwrap();
    for i in 0..8 {
        let want = if i == 5 { -1.0 } else { 1.0 };
        assert!((u.matrix()[[i, i]] - C::new(want, 0.0)).norm() < 1e-12);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn u2_reconstruction(u in u2_strategy()) {
        let p = decompose_u2(&u);
        prop_assert!((0.0..=PI).contains(&p.beta));
        prop_assert!(p.reconstruct().max_abs_diff(&u) < 1e-12);
    }

    #[test]
    fn controlled_u_matches_block_matrix(u in u2_strategy(), n in 1usize..=6) {
        let seq = compile_controlled_u(&u, n).unwrap();
        let got = sequence_unitary(&seq).unwrap();
        let want = universal_gate_matrix(&u, n).unwrap();
        prop_assert!(distance_up_to_phase(&got, &want).unwrap() < 1e-10);
        prop_assert!(max_abs_diff(got.matrix(), want.matrix()) < 1e-10);
        prop_assert_eq!(seq.counts(), generic_controlled_counts(n));
    }

    #[test]
    fn deutsch_jozsa_matches_oracle(n in 1usize..=7, bits in prop::collection::vec(any::<bool>(), 128)) {
        let f = TruthTable::new(n, bits[..1 << n].to_vec()).unwrap();
        let got = sequence_unitary(&compile_deutsch_jozsa::<f64>(&f).unwrap()).unwrap();
        prop_assert!(max_abs_diff(got.matrix(), oracle_matrix::<f64>(&f).unwrap().matrix()) < 1e-10);
    }

    #[test]
    fn sequence_times_inverse_is_identity(u in u2_strategy(), n in 1usize..=4) {
        let seq = compile_controlled_u(&u, n).unwrap();
        let mut both = seq.clone();
        both.extend(&seq.inverse()).unwrap();
        let m = sequence_unitary(&both).unwrap();
        prop_assert!(max_abs_diff(m.matrix(), DenseUnitary::identity(n).matrix()) < 1e-12);
    }

    #[test]
    fn distance_is_a_pseudometric(a in u2_strategy(), b in u2_strategy(), c in u2_strategy(), phase in -PI..PI) {
        let ua = universal_gate_matrix(&a, 2).unwrap();
        let ub = universal_gate_matrix(&b, 2).unwrap();
        let uc = universal_gate_matrix(&c, 2).unwrap();
        let d = |x: &DenseUnitary<f64>, y: &DenseUnitary<f64>| distance_up_to_phase(x, y).unwrap();
        prop_assert!(d(&ua, &ua) < 1e-15);
        prop_assert!((d(&ua, &ub) - d(&ub, &ua)).abs() < 1e-12);
        prop_assert!(d(&ua, &uc) <= d(&ua, &ub) + d(&ub, &uc) + 1e-12);
        let shifted = DenseUnitary::from_matrix(2, ua.matrix().mapv(|z| z * C::from_polar(1.0, phase)), 1e-12).unwrap();
        prop_assert!(d(&ua, &shifted) < 1e-12);
        prop_assert!((d(&shifted, &ub) - d(&ua, &ub)).abs() < 1e-12);
    }

    #[test]
    fn state_norm_is_preserved(u in u2_strategy(), n in 1usize..=6, start in 0usize..64) {
        let seq = compile_controlled_u(&u, n).unwrap();
        let mut psi = zzsynth::StateVector::<f64>::basis(n, start % (1 << n)).unwrap();
        psi.apply_sequence(&build_walsh_hadamard(n).unwrap()).unwrap();
        for g in seq.gates() {
            psi.apply(g).unwrap();
            prop_assert!((psi.norm() - 1.0).abs() < 1e-9);
        }
    }
}
