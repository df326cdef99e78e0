//! Diagonal unitaries: phase vectors, longitudinal Z-polynomials and their
//! exact lowering to RZ/ZZ/one-qubit gates.
//!
//! Conventions shared with the simulator:
//! * `U = diag(e^{-iθ_x})`,
//! * basis index `x` has qubit 0 as its most significant bit,
//! * bit value 0 is the `m = +1/2` state, so its `I_z` eigenvalue is `+1/2`.

mod walsh;
mod zstring;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::pauli::{PauliPolynomial, ProductOperator};
use crate::scalar::Real;

pub use walsh::{fwht, phases_to_zpoly, zpoly_to_phases};
pub use zstring::{reduce_zstring, zpoly_to_sequence};

/// Largest register the Walsh transform accepts (2^24 phases).
pub const MAX_DIAG_QUBITS: usize = 24;

/// A non-empty set of qubit indices, ordered by size and then
/// lexicographically on the sorted index list.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct QubitSet(u64);

impl QubitSet {
    pub fn from_indices(indices: &[usize]) -> Result<Self> {
        let mut bits = 0u64;
        for &k in indices {
            if k >= 64 {
                return Err(Error::QubitOutOfRange { index: k, n: 64 });
            }
            if bits & (1 << k) != 0 {
                return Err(Error::RepeatedQubit(k + 1));
            }
            bits |= 1 << k;
        }
        if bits == 0 {
            return Err(Error::ZStringTooShort(0));
        }
        Ok(Self(bits))
    }

    pub(crate) fn from_bits(bits: u64) -> Self {
        Self(bits)
    }

    pub fn bits(&self) -> u64 {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn contains(&self, k: usize) -> bool {
        k < 64 && self.0 & (1 << k) != 0
    }

    pub fn max_index(&self) -> usize {
        63 - self.0.leading_zeros() as usize
    }

    /// Ascending indices.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..64).filter(move |&k| self.0 & (1 << k) != 0)
    }

    pub fn indices(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl Ord for QubitSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for QubitSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for QubitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one_based: Vec<usize> = self.iter().map(|k| k + 1).collect();
        write!(f, "{one_based:?}")
    }
}

/// `2^n` phases defining `U = diag(e^{-iθ_x})`.
#[derive(Clone, Debug, PartialEq)]
pub struct PhaseVector<T: Real> {
    n_qubits: usize,
    phases: Vec<T>,
}

impl<T: Real> PhaseVector<T> {
    pub fn new(n_qubits: usize, phases: Vec<T>) -> Result<Self> {
        if n_qubits > MAX_DIAG_QUBITS {
            return Err(Error::TooManyQubits { n: n_qubits, cap: MAX_DIAG_QUBITS });
        }
        let expected = 1usize << n_qubits;
        if phases.len() != expected {
            return Err(Error::WrongLength { expected, got: phases.len() });
        }
        if let Some(i) = phases.iter().position(|p| !p.is_finite()) {
            return Err(Error::NonFinite(i));
        }
        Ok(Self { n_qubits, phases })
    }

    pub fn zeros(n_qubits: usize) -> Result<Self> {
        if n_qubits > MAX_DIAG_QUBITS {
            return Err(Error::TooManyQubits { n: n_qubits, cap: MAX_DIAG_QUBITS });
        }
        Self::new(n_qubits, vec![T::zero(); 1 << n_qubits])
    }

    /// Phase `phase` on basis state `index`, zero elsewhere.
    pub fn single(n_qubits: usize, index: usize, phase: T) -> Result<Self> {
        let mut pv = Self::zeros(n_qubits)?;
        if index >= pv.phases.len() {
            return Err(Error::BasisIndexOutOfRange { index, n: n_qubits });
        }
        pv.phases[index] = phase;
        Ok(pv)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn phases(&self) -> &[T] {
        &self.phases
    }

    /// The diagonal entries `e^{-iθ_x}`.
    pub fn diagonal(&self) -> Vec<Complex<T>> {
        self.phases.iter().map(|&t| crate::scalar::phase_factor(t)).collect()
    }
}

/// `H = Ω₀ E + Σ_S a_S · 2^{|S|-1} Π_{j∈S} I_jz`.
#[derive(Clone, Debug, PartialEq)]
pub struct ZPolynomial<T: Real> {
    n_qubits: usize,
    constant: T,
    coeffs: BTreeMap<QubitSet, T>,
}

impl<T: Real> ZPolynomial<T> {
    pub fn new(n_qubits: usize) -> Self {
        Self { n_qubits, constant: T::zero(), coeffs: BTreeMap::new() }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn constant(&self) -> T {
        self.constant
    }

    pub fn set_constant(&mut self, c: T) {
        self.constant = c;
    }

    /// Sets `a_S`; coefficients below the drop tolerance remove the entry.
    pub fn set(&mut self, subset: QubitSet, coeff: T) -> Result<()> {
        if subset.max_index() >= self.n_qubits {
            return Err(Error::QubitOutOfRange { index: subset.max_index(), n: self.n_qubits });
        }
        if !coeff.is_finite() {
            return Err(Error::NonFinite(0));
        }
        if coeff.abs() < T::drop_tol() {
            self.coeffs.remove(&subset);
        } else {
            self.coeffs.insert(subset, coeff);
        }
        Ok(())
    }

    pub fn add(&mut self, subset: QubitSet, coeff: T) -> Result<()> {
        let cur = self.coeff(&subset);
        self.set(subset, cur + coeff)
    }

    pub fn coeff(&self, subset: &QubitSet) -> T {
        self.coeffs.get(subset).copied().unwrap_or_else(T::zero)
    }

    /// Coefficient for 0-based qubit indices; missing or invalid sets read 0.
    pub fn coeff_of(&self, indices: &[usize]) -> T {
        QubitSet::from_indices(indices).map(|s| self.coeff(&s)).unwrap_or_else(|_| T::zero())
    }

    /// Terms in emission order: by subset size, then lexicographically.
    pub fn terms(&self) -> impl Iterator<Item = (QubitSet, T)> + '_ {
        self.coeffs.iter().map(|(s, c)| (*s, *c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty() && self.constant.abs() < T::drop_tol()
    }

    /// The same operator as a product-operator polynomial.
    pub fn to_pauli(&self) -> Result<PauliPolynomial<T>> {
        let n = self.n_qubits;
        let mut ops = vec![ProductOperator::identity(n).scaled(Complex::new(self.constant, T::zero()))];
        for (s, c) in self.terms() {
            ops.push(ProductOperator::zstring(n, &s.indices())?.scaled(Complex::new(c, T::zero())));
        }
        PauliPolynomial::from_terms(n, ops)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qubit_set_order_is_size_then_lex() {
        let mut sets: Vec<QubitSet> = [&[1, 2][..], &[0, 1, 2], &[2], &[0, 2], &[0], &[0, 1]]
            .iter()
            .map(|s| QubitSet::from_indices(s).unwrap())
            .collect();
        sets.sort();
        let idx: Vec<Vec<usize>> = sets.iter().map(|s| s.indices()).collect();
        assert_eq!(idx, vec![vec![0], vec![2], vec![0, 1], vec![0, 2], vec![1, 2], vec![0, 1, 2]]);
    }

    #[test]
    fn qubit_set_rejects_bad_input() {
        assert!(QubitSet::from_indices(&[]).is_err());
        assert!(QubitSet::from_indices(&[1, 1]).is_err());
        assert!(QubitSet::from_indices(&[64]).is_err());
    }

    #[test]
    fn phase_vector_invariants() {
        assert!(PhaseVector::<f64>::new(2, vec![0.0; 3]).is_err());
        assert!(PhaseVector::<f64>::new(1, vec![0.0, f64::NAN]).is_err());
        assert!(PhaseVector::<f64>::single(2, 4, 1.0).is_err());
        assert!(PhaseVector::<f64>::zeros(MAX_DIAG_QUBITS + 1).is_err());
    }

    #[test]
    fn zpoly_drops_small_and_checks_range() {
        let mut z = ZPolynomial::<f64>::new(2);
        let s = QubitSet::from_indices(&[0, 1]).unwrap();
        z.set(s, 1.0).unwrap();
        z.add(s, -1.0).unwrap();
        assert_eq!(z.num_terms(), 0);
        assert!(z.set(QubitSet::from_indices(&[2]).unwrap(), 1.0).is_err());
    }
}
