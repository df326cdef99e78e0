//! Dense state-vector and unitary oracle.
//!
//! Gates act in place on amplitude pairs; the full `2^n × 2^n` matrix is only
//! built by [`sequence_unitary`]. Basis index `x` has qubit 0 as its most
//! significant bit.

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::compiler::{build_grover_iteration, build_walsh_hadamard};
use crate::dense::{identity, unitarity_defect, CMatrix};
use crate::diag::{zpoly_to_phases, ZPolynomial};
use crate::error::{Error, Result};
use crate::gate::{Gate, GateSequence};
use crate::scalar::{phase_factor, Real};

/// Default cap on dense unitary construction.
pub const DENSE_QUBIT_CAP: usize = 12;

#[derive(Clone, Debug, PartialEq)]
pub struct StateVector<T: Real> {
    n_qubits: usize,
    amplitudes: Vec<Complex<T>>,
}

impl<T: Real> StateVector<T> {
    /// The computational basis state `|index⟩`.
    pub fn basis(n_qubits: usize, index: usize) -> Result<Self> {
        if n_qubits > 30 {
            return Err(Error::TooManyQubits { n: n_qubits, cap: 30 });
        }
        let dim = 1usize << n_qubits;
        if index >= dim {
            return Err(Error::BasisIndexOutOfRange { index, n: n_qubits });
        }
        let mut amplitudes = vec![Complex::zero(); dim];
        amplitudes[index] = Complex::one();
        Ok(Self { n_qubits, amplitudes })
    }

    pub fn from_amplitudes(n_qubits: usize, amplitudes: Vec<Complex<T>>) -> Result<Self> {
        let expected = 1usize << n_qubits;
        if amplitudes.len() != expected {
            return Err(Error::WrongLength { expected, got: amplitudes.len() });
        }
        Ok(Self { n_qubits, amplitudes })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn amplitudes(&self) -> &[Complex<T>] {
        &self.amplitudes
    }

    pub fn norm(&self) -> T {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum::<T>().sqrt()
    }

    pub fn probability(&self, index: usize) -> Result<T> {
        self.amplitudes.get(index).map(|a| a.norm_sqr()).ok_or(Error::BasisIndexOutOfRange { index, n: self.n_qubits })
    }

    pub fn apply(&mut self, gate: &Gate<T>) -> Result<()> {
        apply_to_rows(&mut self.amplitudes, 1, self.n_qubits, gate)
    }

    pub fn apply_sequence(&mut self, seq: &GateSequence<T>) -> Result<()> {
        if seq.n_qubits() != self.n_qubits {
            return Err(Error::DimensionMismatch { left: self.n_qubits, right: seq.n_qubits() });
        }
        for g in seq.gates() {
            self.apply(g)?;
        }
        Ok(())
    }
}

/// Functional form of [`StateVector::apply`].
pub fn apply_gate<T: Real>(gate: &Gate<T>, state: &StateVector<T>) -> Result<StateVector<T>> {
    let mut out = state.clone();
    out.apply(gate)?;
    Ok(out)
}

/// A gate as either a parity-selected diagonal or a 2×2 block on one qubit.
enum Action<T: Real> {
    Diagonal { mask: usize, even: Complex<T>, odd: Complex<T> },
    Rotation { qubit: usize, m: [Complex<T>; 4] },
}

fn action<T: Real>(gate: &Gate<T>, n: usize) -> Result<Action<T>> {
    for k in gate.qubits() {
        if k >= n {
            return Err(Error::QubitOutOfRange { index: k, n });
        }
    }
    let half = T::lit(0.5);
    let bit = |k: usize| 1usize << (n - 1 - k);
    Ok(match *gate {
        Gate::GlobalPhase(phi) => {
            let f = phase_factor(phi);
            Action::Diagonal { mask: 0, even: f, odd: f }
        }
        Gate::Zz(k, l, lambda) => {
            if k == l {
                return Err(Error::RepeatedQubit(k + 1));
            }
            let f = phase_factor(lambda * half);
            Action::Diagonal { mask: bit(k) | bit(l), even: f, odd: f.conj() }
        }
        Gate::Rz(k, t) => {
            let f = phase_factor(t * half);
            Action::Diagonal { mask: bit(k), even: f, odd: f.conj() }
        }
        Gate::Rx(k, t) | Gate::Ry(k, t) => {
            let (c, s) = ((t * half).cos(), (t * half).sin());
            let z = T::zero();
            // [[m00, m01], [m10, m11]]
            let m = match *gate {
                Gate::Rx(..) => [Complex::new(c, z), Complex::new(z, -s), Complex::new(z, -s), Complex::new(c, z)],
                _ => [Complex::new(c, z), Complex::new(-s, z), Complex::new(s, z), Complex::new(c, z)],
            };
            Action::Rotation { qubit: k, m }
        }
    })
}

fn parity_factor<T: Real>(x: usize, mask: usize, even: Complex<T>, odd: Complex<T>) -> Complex<T> {
    if (x & mask).count_ones().is_multiple_of(2) {
        even
    } else {
        odd
    }
}

/// Applies a 2×2 block on `qubit` to a `2^n × width` row-major buffer.
fn apply_rotation<T: Real>(amps: &mut [Complex<T>], width: usize, n: usize, qubit: usize, m: &[Complex<T>; 4]) {
    let stride = (1usize << (n - 1 - qubit)) * width;
    for block in amps.chunks_mut(2 * stride) {
        let (lo, hi) = block.split_at_mut(stride);
        for (a0, a1) in lo.iter_mut().zip(hi.iter_mut()) {
            let (x0, x1) = (*a0, *a1);
            *a0 = m[0] * x0 + m[1] * x1;
            *a1 = m[2] * x0 + m[3] * x1;
        }
    }
}

fn scale_rows<T: Real>(amps: &mut [Complex<T>], width: usize, f: impl Fn(usize) -> Complex<T>) {
    for (x, row) in amps.chunks_mut(width).enumerate() {
        let f = f(x);
        row.iter_mut().for_each(|a| *a = *a * f);
    }
}

/// Applies `gate` to a `2^n × width` row-major buffer; `width = 1` is a state
/// vector and `width = 2^n` a whole matrix.
fn apply_to_rows<T: Real>(amps: &mut [Complex<T>], width: usize, n: usize, gate: &Gate<T>) -> Result<()> {
    match action(gate, n)? {
        Action::Diagonal { mask, even, odd } => scale_rows(amps, width, |x| parity_factor(x, mask, even, odd)),
        Action::Rotation { qubit, m } => apply_rotation(amps, width, n, qubit, &m),
    }
    Ok(())
}

fn mul2<T: Real>(a: &[Complex<T>; 4], b: &[Complex<T>; 4]) -> [Complex<T>; 4] {
    [a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]]
}

#[derive(Clone, Debug, PartialEq)]
pub struct DenseUnitary<T: Real> {
    n_qubits: usize,
    matrix: CMatrix<T>,
}

impl<T: Real> DenseUnitary<T> {
    pub fn identity(n_qubits: usize) -> Self {
        Self { n_qubits, matrix: identity(1 << n_qubits) }
    }

    /// Wraps a matrix after checking its shape and `U†U = I` to `tol`.
    pub fn from_matrix(n_qubits: usize, matrix: CMatrix<T>, tol: T) -> Result<Self> {
        let dim = 1usize << n_qubits;
        if matrix.dim() != (dim, dim) {
            return Err(Error::WrongLength { expected: dim * dim, got: matrix.len() });
        }
        let defect = unitarity_defect(&matrix);
        if defect.is_nan() || defect > tol {
            return Err(Error::NotUnitary(defect.to_f64().unwrap_or(f64::NAN)));
        }
        Ok(Self { n_qubits, matrix })
    }

    pub fn from_diagonal(n_qubits: usize, diag: &[Complex<T>]) -> Result<Self> {
        let dim = 1usize << n_qubits;
        if diag.len() != dim {
            return Err(Error::WrongLength { expected: dim, got: diag.len() });
        }
        let mut matrix = CMatrix::zeros((dim, dim));
        for (i, d) in diag.iter().enumerate() {
            matrix[[i, i]] = *d;
        }
        Ok(Self { n_qubits, matrix })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn matrix(&self) -> &CMatrix<T> {
        &self.matrix
    }

    pub fn into_matrix(self) -> CMatrix<T> {
        self.matrix
    }

    /// `self · other` (other acts first).
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n_qubits != other.n_qubits {
            return Err(Error::DimensionMismatch { left: self.n_qubits, right: other.n_qubits });
        }
        Ok(Self { n_qubits: self.n_qubits, matrix: self.matrix.dot(&other.matrix) })
    }

    pub fn unitarity_defect(&self) -> T {
        unitarity_defect(&self.matrix)
    }
}

/// Product of the gate matrices, later gates on the left.
pub fn sequence_unitary<T: Real>(seq: &GateSequence<T>) -> Result<DenseUnitary<T>> {
    sequence_unitary_capped(seq, DENSE_QUBIT_CAP)
}

pub fn sequence_unitary_capped<T: Real>(seq: &GateSequence<T>, cap: usize) -> Result<DenseUnitary<T>> {
    let n = seq.n_qubits();
    if n > cap {
        return Err(Error::TooManyQubits { n, cap });
    }
    // Runs of diagonal gates and of rotations on one qubit are fused before
    // touching the matrix.
    let dim = 1usize << n;
    let mut rows = identity::<T>(dim).into_raw_vec_and_offset().0;
    let mut diag: Option<Vec<Complex<T>>> = None;
    let mut rot: Option<(usize, [Complex<T>; 4])> = None;
    for g in seq.gates() {
        match action(g, n)? {
            Action::Diagonal { mask, even, odd } => {
                if let Some((q, m)) = rot.take() {
                    apply_rotation(&mut rows, dim, n, q, &m);
                }
                let d = diag.get_or_insert_with(|| vec![Complex::one(); dim]);
                for (x, v) in d.iter_mut().enumerate() {
                    *v = *v * parity_factor(x, mask, even, odd);
                }
            }
            Action::Rotation { qubit, m } => {
                if let Some(d) = diag.take() {
                    scale_rows(&mut rows, dim, |x| d[x]);
                }
                rot = match rot.take() {
                    Some((q, prev)) if q == qubit => Some((q, mul2(&m, &prev))),
                    Some((q, prev)) => {
                        apply_rotation(&mut rows, dim, n, q, &prev);
                        Some((qubit, m))
                    }
                    None => Some((qubit, m)),
                };
            }
        }
    }
    if let Some((q, m)) = rot {
        apply_rotation(&mut rows, dim, n, q, &m);
    }
    if let Some(d) = diag {
        scale_rows(&mut rows, dim, |x| d[x]);
    }
    let matrix = CMatrix::from_shape_vec((dim, dim), rows).expect("square buffer");
    Ok(DenseUnitary { n_qubits: n, matrix })
}

/// `min_φ max_ij |U_ij - e^{iφ} V_ij|`.
///
/// Entry `j` contributes `|u - e^{iφ}v|² = A_j - 2|c_j| cos(φ - γ_j)` with
/// `c_j = u·conj(v)`. The minimum of the upper envelope is found by bisection
/// on its value, testing feasibility as an intersection of arcs; the trace
/// phase `arg tr(V†U)` seeds the upper bound. The result is always a directly
/// evaluated `max |U - e^{iφ}V|` at some phase.
pub fn distance_up_to_phase<T: Real>(u: &DenseUnitary<T>, v: &DenseUnitary<T>) -> Result<T> {
    if u.matrix.dim() != v.matrix.dim() {
        return Err(Error::DimensionMismatch { left: u.n_qubits, right: v.n_qubits });
    }
    let pairs: Vec<(Complex<T>, Complex<T>)> = u.matrix.iter().copied().zip(v.matrix.iter().copied()).collect();
    let eval = |phi: T| -> T {
        let f = Complex::new(phi.cos(), phi.sin());
        pairs.iter().map(|(a, b)| (*a - f * *b).norm()).fold(T::zero(), T::max)
    };
    let trace: Complex<T> = pairs.iter().map(|(a, b)| *a * b.conj()).fold(Complex::zero(), |s, x| s + x);
    let phi_trace = if trace.norm() > T::zero() { trace.arg() } else { T::zero() };
    let mut best = eval(phi_trace);
    if best <= T::epsilon() {
        return Ok(best);
    }

    let arcs: Vec<(T, T, T)> = pairs
        .iter()
        .map(|(a, b)| {
            let c = *a * b.conj();
            (a.norm_sqr() + b.norm_sqr(), c.norm(), c.arg())
        })
        .collect();
    let mut lo = pairs.iter().map(|(a, b)| (a.norm() - b.norm()).powi(2)).fold(T::zero(), T::max);
    let mut hi = best * best;
    let rel = T::epsilon() * T::lit(4.0);
    for _ in 0..80 {
        if hi - lo <= rel * hi {
            break;
        }
        let mid = (lo + hi) * T::lit(0.5);
        match feasible_phase(&arcs, mid) {
            Some(phi) => {
                hi = mid;
                best = best.min(eval(phi));
            }
            None => lo = mid,
        }
    }
    Ok(best)
}

/// A phase where every `A - 2r cos(φ - γ) ≤ t`, if one exists.
fn feasible_phase<T: Real>(arcs: &[(T, T, T)], t: T) -> Option<T> {
    let two_pi = T::two_pi();
    let tiny = T::min_positive_value().sqrt();
    let mut set: Option<Vec<(T, T)>> = None;
    for &(a, r, gamma) in arcs {
        if r <= tiny {
            if a > t {
                return None;
            }
            continue;
        }
        let x = (a - t) / (r + r);
        if x > T::one() {
            return None;
        }
        if x <= -T::one() {
            continue;
        }
        let w = x.acos();
        let next = match set.take() {
            None => vec![(gamma - w, gamma + w)],
            Some(current) => {
                let mut out = Vec::with_capacity(current.len());
                for &(s, e) in &current {
                    for k in [-1.0, 0.0, 1.0] {
                        let c = gamma + two_pi * T::lit(k);
                        let (s2, e2) = (s.max(c - w), e.min(c + w));
                        if s2 <= e2 {
                            out.push((s2, e2));
                        }
                    }
                }
                if out.is_empty() {
                    return None;
                }
                out
            }
        };
        set = Some(next);
    }
    Some(match set {
        None => T::zero(),
        Some(v) => (v[0].0 + v[0].1) * T::lit(0.5),
    })
}

/// `diag(e^{-iθ_x})` for the phases of `zp`; independent of gate lowering.
pub fn exponential_of_zpoly<T: Real>(zp: &ZPolynomial<T>) -> Result<DenseUnitary<T>> {
    let pv = zpoly_to_phases(zp)?;
    DenseUnitary::from_diagonal(zp.n_qubits(), &pv.diagonal())
}

/// Probability of measuring `marked` after `iterations` Grover iterates applied
/// to `W|0…0⟩`, all gates taken from the compiled sequences.
pub fn simulate_grover<T: Real>(n_qubits: usize, marked: usize, iterations: usize) -> Result<T> {
    if n_qubits > DENSE_QUBIT_CAP {
        return Err(Error::TooManyQubits { n: n_qubits, cap: DENSE_QUBIT_CAP });
    }
    let iterate = build_grover_iteration::<T>(n_qubits, marked)?;
    let mut psi = StateVector::basis(n_qubits, 0)?;
    psi.apply_sequence(&build_walsh_hadamard(n_qubits)?)?;
    for _ in 0..iterations {
        psi.apply_sequence(&iterate)?;
    }
    psi.probability(marked)
}
