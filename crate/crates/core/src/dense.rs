//! Small dense complex matrix helpers shared by the oracles.

use ndarray::{linalg::kron, Array2};
use num_complex::Complex;
use num_traits::{One, Zero};

use crate::scalar::Real;

pub type CMatrix<T> = Array2<Complex<T>>;

pub fn identity<T: Real>(dim: usize) -> CMatrix<T> {
    Array2::from_shape_fn((dim, dim), |(i, j)| if i == j { Complex::one() } else { Complex::zero() })
}

pub fn adjoint<T: Real>(m: &CMatrix<T>) -> CMatrix<T> {
    m.t().mapv(|z| z.conj())
}

pub fn kron_all<T: Real>(factors: &[CMatrix<T>]) -> CMatrix<T> {
    let mut acc = Array2::from_elem((1, 1), Complex::one());
    for f in factors {
        acc = kron(&acc, f);
    }
    acc
}

/// Largest entry magnitude of `a - b`.
pub fn max_abs_diff<T: Real>(a: &CMatrix<T>, b: &CMatrix<T>) -> T {
    a.iter().zip(b.iter()).map(|(x, y)| (*x - *y).norm()).fold(T::zero(), T::max)
}

/// `max |U†U - I|`.
pub fn unitarity_defect<T: Real>(m: &CMatrix<T>) -> T {
    let prod = adjoint(m).dot(m);
    max_abs_diff(&prod, &identity(m.nrows()))
}
