//! Dense reference matrices built directly from their definitions, without the
//! gate compiler. Used as verification targets.

use num_complex::Complex;
use num_traits::One;

use crate::compiler::{TruthTable, U2Matrix};
use crate::dense::{kron_all, CMatrix};
use crate::diag::PhaseVector;
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::simulator::{DenseUnitary, DENSE_QUBIT_CAP};

fn check_dense(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyRegister);
    }
    if n > DENSE_QUBIT_CAP {
        return Err(Error::TooManyQubits { n, cap: DENSE_QUBIT_CAP });
    }
    Ok(())
}

fn wrap<T: Real>(n: usize, matrix: CMatrix<T>) -> DenseUnitary<T> {
    DenseUnitary::from_matrix(n, matrix, T::lit(1e3) * T::drop_tol()).expect("reference matrices are unitary")
}

/// Identity except for `u` on the last `2×2` block (`|1…1,0⟩`, `|1…1,1⟩`).
pub fn universal_gate_matrix<T: Real>(u: &U2Matrix<T>, n: usize) -> Result<DenseUnitary<T>> {
    check_dense(n)?;
    let dim = 1usize << n;
    let mut m = crate::dense::identity::<T>(dim);
    for i in 0..2 {
        for j in 0..2 {
            m[[dim - 2 + i, dim - 2 + j]] = u.get(i, j);
        }
    }
    Ok(wrap(n, m))
}

/// `H^{⊗n}`.
pub fn walsh_hadamard_matrix<T: Real>(n: usize) -> Result<DenseUnitary<T>> {
    check_dense(n)?;
    let s = Complex::new(T::FRAC_1_SQRT_2(), T::zero());
    let h = CMatrix::from_shape_vec((2, 2), vec![s, s, s, -s]).expect("2x2");
    Ok(wrap(n, kron_all(&vec![h; n])))
}

/// `diag(e^{-iθ_x})`.
pub fn diagonal_matrix<T: Real>(pv: &PhaseVector<T>) -> Result<DenseUnitary<T>> {
    check_dense(pv.n_qubits().max(1))?;
    DenseUnitary::from_diagonal(pv.n_qubits(), &pv.diagonal())
}

/// `diag((−1)^{f(x)})`.
pub fn oracle_matrix<T: Real>(f: &TruthTable) -> Result<DenseUnitary<T>> {
    diagonal_matrix(&f.phase_vector()?)
}

/// `E − 2|x⟩⟨x|`.
pub fn conditional_phase_matrix<T: Real>(n: usize, marked: usize) -> Result<DenseUnitary<T>> {
    check_dense(n)?;
    let dim = 1usize << n;
    if marked >= dim {
        return Err(Error::BasisIndexOutOfRange { index: marked, n });
    }
    let mut d = vec![Complex::one(); dim];
    d[marked] = -Complex::<T>::one();
    DenseUnitary::from_diagonal(n, &d)
}

/// `D = 2|s⟩⟨s| − E` with `|s⟩` the uniform superposition.
pub fn diffusion_matrix<T: Real>(n: usize) -> Result<DenseUnitary<T>> {
    check_dense(n)?;
    let dim = 1usize << n;
    let two_over = Complex::new(T::lit(2.0) / T::from_usize_lossy(dim), T::zero());
    let mut m = CMatrix::from_elem((dim, dim), two_over);
    for i in 0..dim {
        m[[i, i]] = m[[i, i]] - Complex::one();
    }
    Ok(wrap(n, m))
}

/// `D · (E − 2|x⟩⟨x|)`.
pub fn grover_iterate_matrix<T: Real>(n: usize, marked: usize) -> Result<DenseUnitary<T>> {
    diffusion_matrix(n)?.compose(&conditional_phase_matrix(n, marked)?)
}
