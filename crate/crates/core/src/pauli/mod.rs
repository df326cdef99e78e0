//! Cartesian product operators for spin-1/2 systems.
//!
//! A [`ProductOperator`] is `c · A_1 ⊗ A_2 ⊗ … ⊗ A_n` with each `A_k` one of
//! `E`, `I_x = σ_x/2`, `I_y`, `I_z`. Normalization prefactors such as the
//! `2^{m-1}` of an `m`-spin basis element live in the coefficient, so each
//! operator has exactly one representation.
//!
//! Spin indices are 0-based in this API. The text syntax accepted by
//! [`parse_operator`] and shown by `Display` is 1-based (`I1z` is spin 0).

mod coherence;
mod parse;
mod polynomial;

use std::fmt;

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::dense::{kron_all, CMatrix};
use crate::error::{Error, Result};
use crate::scalar::Real;

pub use coherence::{
    classify_subspace, coherence_orders, from_shift_terms, shift_expansion, CoherenceProfile, ShiftFactor, Subspace,
};
pub use parse::parse_operator;
pub use polynomial::{commutator, conjugate_bch, PauliPolynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axis {
    E,
    X,
    Y,
    Z,
}

impl Axis {
    /// Single-spin product `A·B = c·C`.
    pub(crate) fn product<T: Real>(self, other: Axis) -> (Complex<T>, Axis) {
        use Axis::*;
        let half_i = Complex::new(T::zero(), T::lit(0.5));
        match (self, other) {
            (E, b) => (Complex::one(), b),
            (a, E) => (Complex::one(), a),
            (a, b) if a == b => (Complex::new(T::lit(0.25), T::zero()), E),
            (X, Y) => (half_i, Z),
            (Y, X) => (-half_i, Z),
            (Y, Z) => (half_i, X),
            (Z, Y) => (-half_i, X),
            (Z, X) => (half_i, Y),
            (X, Z) => (-half_i, Y),
            _ => unreachable!(),
        }
    }

    /// 2×2 matrix of the spin operator (`E`, or Pauli/2).
    pub fn matrix<T: Real>(self) -> CMatrix<T> {
        let z = Complex::zero();
        let h = T::lit(0.5);
        let v = match self {
            Axis::E => [Complex::one(), z, z, Complex::one()],
            Axis::X => [z, Complex::new(h, T::zero()), Complex::new(h, T::zero()), z],
            Axis::Y => [z, Complex::new(T::zero(), -h), Complex::new(T::zero(), h), z],
            Axis::Z => [Complex::new(h, T::zero()), z, z, Complex::new(-h, T::zero())],
        };
        CMatrix::from_shape_vec((2, 2), v.to_vec()).expect("2x2")
    }

    pub fn label(self) -> char {
        match self {
            Axis::E => 'e',
            Axis::X => 'x',
            Axis::Y => 'y',
            Axis::Z => 'z',
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProductOperator<T: Real> {
    factors: Vec<Axis>,
    coeff: Complex<T>,
}

impl<T: Real> ProductOperator<T> {
    pub fn new(factors: Vec<Axis>, coeff: Complex<T>) -> Self {
        Self { factors, coeff }
    }

    pub fn identity(n_spins: usize) -> Self {
        Self::new(vec![Axis::E; n_spins], Complex::one())
    }

    /// `I_{spin,axis}` on `n_spins` spins.
    pub fn single(n_spins: usize, spin: usize, axis: Axis) -> Result<Self> {
        Self::from_axes(n_spins, &[(spin, axis)], Complex::one())
    }

    /// `coeff · Π I_{k,α}` for the listed (spin, axis) pairs.
    pub fn from_axes(n_spins: usize, axes: &[(usize, Axis)], coeff: Complex<T>) -> Result<Self> {
        let mut op = Self::new(vec![Axis::E; n_spins], coeff);
        for &(spin, axis) in axes {
            if spin >= n_spins {
                return Err(Error::QubitOutOfRange { index: spin, n: n_spins });
            }
            let (c, a) = op.factors[spin].product::<T>(axis);
            op.factors[spin] = a;
            op.coeff = op.coeff * c;
        }
        Ok(op)
    }

    /// The normalized longitudinal basis element `2^{m-1} Π_{k∈spins} I_kz`.
    pub fn zstring(n_spins: usize, spins: &[usize]) -> Result<Self> {
        let axes: Vec<_> = spins.iter().map(|&s| (s, Axis::Z)).collect();
        let scale = if spins.is_empty() { T::one() } else { T::lit(2.0).powi(spins.len() as i32 - 1) };
        Self::from_axes(n_spins, &axes, Complex::new(scale, T::zero()))
    }

    pub fn n_spins(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[Axis] {
        &self.factors
    }

    pub fn coeff(&self) -> Complex<T> {
        self.coeff
    }

    pub fn scaled(&self, c: Complex<T>) -> Self {
        Self::new(self.factors.clone(), self.coeff * c)
    }

    /// Number of non-identity factors.
    pub fn weight(&self) -> usize {
        self.factors.iter().filter(|&&a| a != Axis::E).count()
    }

    /// Product `self · other`, always a single product operator.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        check_dims(self.n_spins(), other.n_spins())?;
        let mut coeff = self.coeff * other.coeff;
        let factors = self
            .factors
            .iter()
            .zip(&other.factors)
            .map(|(&a, &b)| {
                let (c, axis) = a.product::<T>(b);
                coeff = coeff * c;
                axis
            })
            .collect();
        Ok(Self::new(factors, coeff))
    }

    /// True when the two Pauli strings commute (ignoring coefficients).
    pub fn commutes_with(&self, other: &Self) -> bool {
        let anti =
            self.factors.iter().zip(&other.factors).filter(|(&a, &b)| a != Axis::E && b != Axis::E && a != b).count();
        anti % 2 == 0
    }

    pub fn to_dense(&self) -> CMatrix<T> {
        let mats: Vec<_> = self.factors.iter().map(|a| a.matrix::<T>()).collect();
        kron_all(&mats).mapv(|z| z * self.coeff)
    }
}

pub(crate) fn check_dims(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { left: a, right: b })
    }
}

pub(crate) fn fmt_coeff<T: Real>(c: Complex<T>) -> String {
    if c.im.is_zero() {
        format!("{}", c.re)
    } else if c.re.is_zero() {
        format!("{}i", c.im)
    } else {
        format!("({}{:+}i)", c.re, c.im)
    }
}

pub(crate) fn fmt_factors(factors: &[Axis]) -> String {
    let parts: Vec<String> = factors
        .iter()
        .enumerate()
        .filter(|(_, a)| **a != Axis::E)
        .map(|(k, a)| format!("I{}{}", k + 1, a.label()))
        .collect();
    if parts.is_empty() {
        "E".to_string()
    } else {
        parts.join(" ")
    }
}

impl<T: Real> fmt::Display for ProductOperator<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", fmt_coeff(self.coeff), fmt_factors(&self.factors))
    }
}
