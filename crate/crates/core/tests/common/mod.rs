#![allow(dead_code)]

use ndarray::Array2;
use num_complex::Complex;
use proptest::prelude::*;
use zzsynth::dense::{identity, max_abs_diff, CMatrix};
use zzsynth::pauli::ShiftFactor;
use zzsynth::{Axis, PauliPolynomial, ProductOperator, U2Matrix};

pub type C = Complex<f64>;

pub fn axis() -> impl Strategy<Value = Axis> {
    prop_oneof![Just(Axis::E), Just(Axis::X), Just(Axis::Y), Just(Axis::Z)]
}

pub fn coeff() -> impl Strategy<Value = C> {
    (-2.0..2.0f64, -2.0..2.0f64).prop_map(|(re, im)| C::new(re, im))
}

pub fn product_operator(n: usize) -> impl Strategy<Value = ProductOperator<f64>> {
    (prop::collection::vec(axis(), n), coeff()).prop_map(|(f, c)| ProductOperator::new(f, c))
}

pub fn polynomial(n: usize, max_terms: usize) -> impl Strategy<Value = PauliPolynomial<f64>> {
    prop::collection::vec(product_operator(n), 1..=max_terms)
        .prop_map(move |ops| PauliPolynomial::from_terms(n, ops).unwrap())
}

fn shift_factor() -> impl Strategy<Value = ShiftFactor> {
    prop_oneof![Just(ShiftFactor::E), Just(ShiftFactor::Z), Just(ShiftFactor::Plus), Just(ShiftFactor::Minus)]
}

/// Random shift-basis terms, each satisfying `keep(order)`.
pub fn shift_terms(
    n: usize,
    max_terms: usize,
    keep: fn(i32) -> bool,
) -> impl Strategy<Value = Vec<(Vec<ShiftFactor>, C)>> {
    prop::collection::vec((prop::collection::vec(shift_factor(), n), coeff()), 1..=max_terms)
        .prop_map(move |ts| ts.into_iter().filter(|(f, _)| keep(order(f))).collect())
}

pub fn order(f: &[ShiftFactor]) -> i32 {
    f.iter()
        .map(|s| match s {
            ShiftFactor::Plus => 1,
            ShiftFactor::Minus => -1,
            _ => 0,
        })
        .sum()
}

/// Total `F_z = Σ_k I_kz` in the computational basis (bit 0 ↦ +1/2).
pub fn total_fz(n: usize) -> Vec<f64> {
    (0..1usize << n).map(|x| n as f64 / 2.0 - x.count_ones() as f64).collect()
}

/// `exp(-iφF_z) · m · exp(iφF_z)`.
pub fn rotate_about_z(m: &CMatrix<f64>, n: usize, phi: f64) -> CMatrix<f64> {
    let fz = total_fz(n);
    Array2::from_shape_fn(m.dim(), |(i, j)| m[[i, j]] * C::from_polar(1.0, -phi * (fz[i] - fz[j])))
}

/// `exp(-iλG)` for `G` a scalar multiple of a Pauli string (`G² ∝ E`).
pub fn expm_pauli_string(g: &ProductOperator<f64>, lambda: f64) -> CMatrix<f64> {
    let dense = g.to_dense();
    let w = g.factors().iter().filter(|a| **a != Axis::E).count();
    // G = c · 2^{-w} P with P² = E.
    let scale = g.coeff().re / 2f64.powi(w as i32);
    let p = dense.mapv(|z| z / scale);
    let (c, s) = ((lambda * scale).cos(), (lambda * scale).sin());
    identity::<f64>(1 << g.n_spins()).mapv(|z| z * c) - p.mapv(|z| z * C::new(0.0, s))
}

pub fn close(a: &CMatrix<f64>, b: &CMatrix<f64>, tol: f64) -> bool {
    max_abs_diff(a, b) < tol
}

/// `e^{iγ} RZ(a) RY(b) RZ(c)`: covers U(2) as the angles vary.
pub fn u2_from_angles(gamma: f64, a: f64, b: f64, c: f64) -> U2Matrix<f64> {
    let rz =
        |t: f64| [[C::from_polar(1.0, -t / 2.0), C::new(0.0, 0.0)], [C::new(0.0, 0.0), C::from_polar(1.0, t / 2.0)]];
    let ry = |t: f64| {
        let (co, si) = ((t / 2.0).cos(), (t / 2.0).sin());
        [[C::new(co, 0.0), C::new(-si, 0.0)], [C::new(si, 0.0), C::new(co, 0.0)]]
    };
    let mul = |x: [[C; 2]; 2], y: [[C; 2]; 2]| {
        let e = |i: usize, j: usize| x[i][0] * y[0][j] + x[i][1] * y[1][j];
        [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
    };
    let m = mul(mul(rz(a), ry(b)), rz(c));
    let g = C::from_polar(1.0, gamma);
    U2Matrix::new([[m[0][0] * g, m[0][1] * g], [m[1][0] * g, m[1][1] * g]]).unwrap()
}

pub fn u2_strategy() -> impl Strategy<Value = U2Matrix<f64>> {
    let ang = -7.0..7.0f64;
    (ang.clone(), ang.clone(), ang.clone(), ang).prop_map(|(g, a, b, c)| u2_from_angles(g, a, b, c))
}
