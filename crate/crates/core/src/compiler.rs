//! Builders for the named unitaries, lowered to the RX/RY/RZ/ZZ/GPHASE set.

use std::fmt;

use num_complex::Complex;
use num_traits::Zero;

use crate::diag::{phases_to_zpoly, zpoly_to_sequence, PhaseVector, MAX_DIAG_QUBITS};
use crate::error::{Error, Result};
use crate::gate::{Gate, GateSequence};
use crate::scalar::Real;

pub use crate::gate::gate_counts;

/// A 2×2 unitary, row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct U2Matrix<T: Real> {
    m: [[Complex<T>; 2]; 2],
}

impl<T: Real> U2Matrix<T> {
    /// Checks `U†U = I` to the drop tolerance.
    pub fn new(m: [[Complex<T>; 2]; 2]) -> Result<Self> {
        Self::with_tolerance(m, T::drop_tol())
    }

    pub fn with_tolerance(m: [[Complex<T>; 2]; 2], tol: T) -> Result<Self> {
        let u = Self { m };
        let d = u.unitarity_defect();
        if d.is_nan() || d > tol {
            return Err(Error::NotUnitary(d.to_f64().unwrap_or(f64::NAN)));
        }
        Ok(u)
    }

    pub fn identity() -> Self {
        let (o, z) = (Complex::new(T::one(), T::zero()), Complex::zero());
        Self { m: [[o, z], [z, o]] }
    }

    pub fn entries(&self) -> [[Complex<T>; 2]; 2] {
        self.m
    }

    pub fn get(&self, i: usize, j: usize) -> Complex<T> {
        self.m[i][j]
    }

    pub fn mul(&self, other: &Self) -> Self {
        let a = &self.m;
        let b = &other.m;
        let e = |i: usize, j: usize| a[i][0] * b[0][j] + a[i][1] * b[1][j];
        Self { m: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]] }
    }

    pub fn adjoint(&self) -> Self {
        let a = &self.m;
        Self { m: [[a[0][0].conj(), a[1][0].conj()], [a[0][1].conj(), a[1][1].conj()]] }
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        let mut d = T::zero();
        for i in 0..2 {
            for j in 0..2 {
                d = d.max((self.m[i][j] - other.m[i][j]).norm());
            }
        }
        d
    }

    fn unitarity_defect(&self) -> T {
        self.adjoint().mul(self).max_abs_diff(&Self::identity())
    }

    fn rz(theta: T) -> Self {
        let h = theta * T::lit(0.5);
        let z = Complex::zero();
        Self { m: [[Complex::new(h.cos(), -h.sin()), z], [z, Complex::new(h.cos(), h.sin())]] }
    }

    fn ry(theta: T) -> Self {
        let h = theta * T::lit(0.5);
        let (c, s) = (Complex::new(h.cos(), T::zero()), Complex::new(h.sin(), T::zero()));
        Self { m: [[c, -s], [s, c]] }
    }

    fn scalar(c: Complex<T>) -> Self {
        let z = Complex::zero();
        Self { m: [[c, z], [z, c]] }
    }
}

/// `U = T · exp(-i(φ0 + φ1 I_z)) · T†` with `T = exp(-iα I_z) exp(-iβ I_y)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct U2Params<T: Real> {
    pub alpha: T,
    pub beta: T,
    pub phi0: T,
    pub phi1: T,
}

impl<T: Real> U2Params<T> {
    pub fn reconstruct(&self) -> U2Matrix<T> {
        let t = U2Matrix::rz(self.alpha).mul(&U2Matrix::ry(self.beta));
        let core = U2Matrix::scalar(Complex::new(self.phi0.cos(), -self.phi0.sin())).mul(&U2Matrix::rz(self.phi1));
        t.mul(&core).mul(&t.adjoint())
    }

    /// True for the scalar branch (no eigenbasis rotation).
    pub fn is_scalar(&self) -> bool {
        self.alpha.is_zero() && self.beta.is_zero() && self.phi1.is_zero()
    }
}

impl<T: Real> fmt::Display for U2Params<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "alpha={} beta={} phi0={} phi1={}", self.alpha, self.beta, self.phi0, self.phi1)
    }
}

/// Eigen-decomposes a u(2) matrix into [`U2Params`].
///
/// `u e^{iφ0}` lies in SU(2) and equals `cos(φ1/2) E − i sin(φ1/2) n·σ`, whose
/// rotation axis `n = (sinβ cosα, sinβ sinα, cosβ)` gives `α` and `β ∈ [0, π]`.
/// Scalar matrices return `α = β = φ1 = 0`.
pub fn decompose_u2<T: Real>(u: &U2Matrix<T>) -> U2Params<T> {
    let m = u.entries();
    let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    // arg in (-π, π]; a signed-zero imaginary part must not flip the branch.
    let mut arg = det.arg();
    if arg <= -T::PI() {
        arg = arg + T::two_pi();
    }
    let phi0 = -arg * T::lit(0.5);
    let rot = Complex::new(phi0.cos(), phi0.sin());
    let w = |i: usize, j: usize| m[i][j] * rot;
    let half = T::lit(0.5);
    let a0 = (w(0, 0) + w(1, 1)).re * half;
    let ax = -(w(0, 1) + w(1, 0)).im * half;
    let ay = (w(1, 0) - w(0, 1)).re * half;
    let az = -(w(0, 0) - w(1, 1)).im * half;
    let s = (ax * ax + ay * ay + az * az).sqrt();
    if s < T::drop_tol() {
        let c = (m[0][0] + m[1][1]) * half;
        return U2Params { alpha: T::zero(), beta: T::zero(), phi0: -c.arg(), phi1: T::zero() };
    }
    let phi1 = T::lit(2.0) * s.atan2(a0);
    let nz = (az / s).max(-T::one()).min(T::one());
    let beta = nz.acos();
    let alpha = if (ax * ax + ay * ay).sqrt() < T::drop_tol() { T::zero() } else { ay.atan2(ax) };
    U2Params { alpha, beta, phi0, phi1 }
}

fn check_register(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyRegister);
    }
    if n > MAX_DIAG_QUBITS {
        return Err(Error::TooManyQubits { n, cap: MAX_DIAG_QUBITS });
    }
    Ok(())
}

/// Lowers `diag(e^{-iθ_x})` through the Walsh transform.
pub fn compile_phases<T: Real>(pv: &PhaseVector<T>) -> Result<GateSequence<T>> {
    zpoly_to_sequence(&phases_to_zpoly(pv))
}

/// The `n`-qubit gate applying `u` to the last qubit when all other qubits are 1.
///
/// Emits `T†`, the compiled diagonal core, then `T` (application order), where
/// the core carries `φ0 ± φ1/2` on `|1…1,0⟩` and `|1…1,1⟩`.
pub fn compile_controlled_u<T: Real>(u: &U2Matrix<T>, n: usize) -> Result<GateSequence<T>> {
    check_register(n)?;
    let p = decompose_u2(u);
    let target = n - 1;
    let dim = 1usize << n;
    let half_phi1 = p.phi1 * T::lit(0.5);
    let mut phases = vec![T::zero(); dim];
    phases[dim - 2] = p.phi0 + half_phi1;
    phases[dim - 1] = p.phi0 - half_phi1;
    let core = compile_phases(&PhaseVector::new(n, phases)?)?;

    let mut seq = GateSequence::new(n);
    if !p.is_scalar() {
        seq.push_nonzero(Gate::rz(target, -p.alpha))?;
        seq.push_nonzero(Gate::ry(target, -p.beta))?;
    }
    seq.extend(&core)?;
    if !p.is_scalar() {
        seq.push_nonzero(Gate::ry(target, p.beta))?;
        seq.push_nonzero(Gate::rz(target, p.alpha))?;
    }
    Ok(seq)
}

/// `W = e^{inπ/2} exp(-iπ Σ I_kx) exp(-i(π/2) Σ I_ky)`: the RY layer acts first.
pub fn build_walsh_hadamard<T: Real>(n: usize) -> Result<GateSequence<T>> {
    check_register(n)?;
    let mut seq = GateSequence::new(n);
    seq.push(Gate::phase(-T::from_usize_lossy(n) * T::FRAC_PI_2()))?;
    for k in 0..n {
        seq.push(Gate::ry(k, T::FRAC_PI_2()))?;
    }
    for k in 0..n {
        seq.push(Gate::rx(k, T::PI()))?;
    }
    Ok(seq)
}

/// Phase `phase` on basis state `marked` only; `π` gives Grover's oracle `C`.
pub fn compile_conditional_phase<T: Real>(n: usize, marked: usize, phase: T) -> Result<GateSequence<T>> {
    check_register(n)?;
    compile_phases(&PhaseVector::single(n, marked, phase)?)
}

/// One Grover iterate `D·C` with `D = 2|s⟩⟨s| − E`.
///
/// `R` is compiled as phase π on every state except `|0…0⟩`, i.e. exactly
/// `2|0⟩⟨0| − E`, so `W R W = D` with no residual global phase.
pub fn build_grover_iteration<T: Real>(n: usize, marked: usize) -> Result<GateSequence<T>> {
    check_register(n)?;
    let oracle = compile_conditional_phase(n, marked, T::PI())?;
    let dim = 1usize << n;
    let mut r = vec![T::PI(); dim];
    r[0] = T::zero();
    let reflection = compile_phases(&PhaseVector::new(n, r)?)?;
    let w = build_walsh_hadamard(n)?;

    let mut seq = GateSequence::new(n);
    seq.extend(&oracle)?;
    seq.extend(&w)?;
    seq.extend(&reflection)?;
    seq.extend(&w)?;
    Ok(seq)
}

/// Values `f(x)` for `x = 0 … 2^n − 1`, qubit 0 most significant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruthTable {
    n_inputs: usize,
    values: Vec<bool>,
}

impl TruthTable {
    pub fn new(n_inputs: usize, values: Vec<bool>) -> Result<Self> {
        if n_inputs > MAX_DIAG_QUBITS {
            return Err(Error::TooManyQubits { n: n_inputs, cap: MAX_DIAG_QUBITS });
        }
        let expected = 1usize << n_inputs;
        if values.len() != expected {
            return Err(Error::WrongLength { expected, got: values.len() });
        }
        Ok(Self { n_inputs, values })
    }

    /// From 0/1 integers; anything else is rejected.
    pub fn from_bits(n_inputs: usize, bits: &[u8]) -> Result<Self> {
        let values = bits
            .iter()
            .enumerate()
            .map(|(i, &b)| match b {
                0 => Ok(false),
                1 => Ok(true),
                _ => Err(Error::Parse(format!("truth table entry {i} is {b}, expected 0 or 1"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n_inputs, values)
    }

    pub fn constant(n_inputs: usize, value: bool) -> Result<Self> {
        Self::new(n_inputs, vec![value; 1 << n_inputs])
    }

    /// `f(x) = x_1 ⊕ … ⊕ x_n`.
    pub fn parity(n_inputs: usize) -> Result<Self> {
        Self::new(n_inputs, (0..1usize << n_inputs).map(|x| x.count_ones() % 2 == 1).collect())
    }

    pub fn n_inputs(&self) -> usize {
        self.n_inputs
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }

    pub fn is_constant(&self) -> bool {
        self.values.iter().all(|&v| v == self.values[0])
    }

    pub fn is_balanced(&self) -> bool {
        2 * self.values.iter().filter(|&&v| v).count() == self.values.len()
    }

    /// `θ_x = π f(x)`.
    pub fn phase_vector<T: Real>(&self) -> Result<PhaseVector<T>> {
        let phases = self.values.iter().map(|&v| if v { T::PI() } else { T::zero() }).collect();
        PhaseVector::new(self.n_inputs, phases)
    }
}

/// `U_f = diag((−1)^{f(x)})` on the input register.
pub fn compile_deutsch_jozsa<T: Real>(f: &TruthTable) -> Result<GateSequence<T>> {
    compile_phases(&f.phase_vector()?)
}
