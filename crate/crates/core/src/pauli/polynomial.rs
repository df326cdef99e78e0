use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex;
use num_traits::{One, Zero};

use super::{check_dims, fmt_coeff, fmt_factors, Axis, ProductOperator};
use crate::dense::CMatrix;
use crate::error::Result;
use crate::scalar::Real;

/// A linear combination of product operators on a fixed number of spins.
///
/// Terms whose coefficient magnitude falls below [`Real::drop_tol`] are removed
/// after every operation.
#[derive(Clone, Debug, PartialEq)]
pub struct PauliPolynomial<T: Real> {
    n_spins: usize,
    terms: BTreeMap<Vec<Axis>, Complex<T>>,
}

impl<T: Real> PauliPolynomial<T> {
    pub fn zero(n_spins: usize) -> Self {
        Self { n_spins, terms: BTreeMap::new() }
    }

    pub fn from_terms(n_spins: usize, terms: impl IntoIterator<Item = ProductOperator<T>>) -> Result<Self> {
        let mut p = Self::zero(n_spins);
        for t in terms {
            p.add_term(&t)?;
        }
        Ok(p)
    }

    pub fn n_spins(&self) -> usize {
        self.n_spins
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, factors: &[Axis]) -> Complex<T> {
        self.terms.get(factors).copied().unwrap_or_else(Complex::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = ProductOperator<T>> + '_ {
        self.terms.iter().map(|(f, c)| ProductOperator::new(f.clone(), *c))
    }

    pub(crate) fn raw_terms(&self) -> &BTreeMap<Vec<Axis>, Complex<T>> {
        &self.terms
    }

    pub fn add_term(&mut self, op: &ProductOperator<T>) -> Result<()> {
        check_dims(self.n_spins, op.n_spins())?;
        self.accumulate(op.factors().to_vec(), op.coeff());
        Ok(())
    }

    fn accumulate(&mut self, key: Vec<Axis>, c: Complex<T>) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Occupied(mut e) => {
                let v = *e.get() + c;
                if v.norm() < T::drop_tol() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
            Entry::Vacant(e) => {
                if c.norm() >= T::drop_tol() {
                    e.insert(c);
                }
            }
        }
    }

    pub fn scaled(&self, c: Complex<T>) -> Self {
        let mut out = Self::zero(self.n_spins);
        for (k, v) in &self.terms {
            out.accumulate(k.clone(), *v * c);
        }
        out
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        check_dims(self.n_spins, other.n_spins)?;
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.accumulate(k.clone(), *v);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.scaled(-Complex::<T>::one()))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        check_dims(self.n_spins, other.n_spins)?;
        let mut out = Self::zero(self.n_spins);
        for a in self.terms() {
            for b in other.terms() {
                let p = a.multiply(&b)?;
                out.accumulate(p.factors().to_vec(), p.coeff());
            }
        }
        Ok(out)
    }

    /// `[self, other]`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.checked_mul(other)?.checked_sub(&other.checked_mul(self)?)
    }

    /// Hermitian conjugate.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zero(self.n_spins);
        for (k, v) in &self.terms {
            out.accumulate(k.clone(), v.conj());
        }
        out
    }

    /// Largest coefficient magnitude of `self - other`.
    pub fn max_coeff_diff(&self, other: &Self) -> T {
        let mut d = T::zero();
        for (k, v) in &self.terms {
            d = d.max((*v - other.coeff(k)).norm());
        }
        for (k, v) in &other.terms {
            if !self.terms.contains_key(k) {
                d = d.max(v.norm());
            }
        }
        d
    }

    pub fn to_dense(&self) -> CMatrix<T> {
        let dim = 1usize << self.n_spins;
        let mut m = CMatrix::<T>::zeros((dim, dim));
        for t in self.terms() {
            m = m + t.to_dense();
        }
        m
    }

    /// `exp(-iλG) · self · exp(iλG)`.
    pub fn conjugated_by(&self, generator: &ProductOperator<T>, angle: T) -> Result<Self> {
        let mut out = Self::zero(self.n_spins);
        for t in self.terms() {
            out = out.checked_add(&conjugate_bch(generator, angle, &t)?)?;
        }
        Ok(out)
    }
}

impl<T: Real> From<ProductOperator<T>> for PauliPolynomial<T> {
    fn from(op: ProductOperator<T>) -> Self {
        let mut p = Self::zero(op.n_spins());
        p.accumulate(op.factors().to_vec(), op.coeff());
        p
    }
}

impl<T: Real> fmt::Display for PauliPolynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.terms.iter().map(|(k, v)| format!("{} {}", fmt_coeff(*v), fmt_factors(k))).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `[a, b] = ab - ba`.
pub fn commutator<T: Real>(a: &ProductOperator<T>, b: &ProductOperator<T>) -> Result<PauliPolynomial<T>> {
    check_dims(a.n_spins(), b.n_spins())?;
    let mut out = PauliPolynomial::zero(a.n_spins());
    if a.commutes_with(b) {
        return Ok(out);
    }
    let ab = a.multiply(b)?;
    let ba = b.multiply(a)?;
    out.accumulate(ab.factors().to_vec(), ab.coeff() - ba.coeff());
    Ok(out)
}

/// `exp(-iλG) · B · exp(iλG)` for product operators `G`, `B`.
///
/// When `[G,[G,B]] = αB` the rotation has the two-term closed form
/// `B cos(√α λ) − (i/√α)[G,B] sin(√α λ)`. Pauli strings always satisfy this;
/// `α` is complex only for non-Hermitian generators, where the same analytic
/// expression still equals the series.
pub fn conjugate_bch<T: Real>(
    generator: &ProductOperator<T>,
    angle: T,
    target: &ProductOperator<T>,
) -> Result<PauliPolynomial<T>> {
    check_dims(generator.n_spins(), target.n_spins())?;
    let first = commutator(generator, target)?;
    if first.is_zero() || target.coeff().norm() < T::drop_tol() {
        return Ok(PauliPolynomial::from(target.clone()));
    }
    let second = PauliPolynomial::from(generator.clone()).commutator(&first)?;
    let alpha = second.coeff(target.factors()) / target.coeff();
    let closes = second.len() == 1 && second.raw_terms().contains_key(target.factors());
    if !closes {
        return conjugate_series(generator, angle, target);
    }
    let root = alpha.sqrt();
    let x = root * angle;
    let (cos, sinc) = if root.norm() < T::epsilon() {
        (Complex::one(), Complex::new(angle, T::zero()))
    } else {
        (x.cos(), x.sin() / root)
    };
    let minus_i = Complex::new(T::zero(), -T::one());
    PauliPolynomial::from(target.clone()).scaled(cos).checked_add(&first.scaled(minus_i * sinc))
}

/// Direct summation of the nested-commutator series, used only if the
/// double commutator does not close on the target.
fn conjugate_series<T: Real>(
    generator: &ProductOperator<T>,
    angle: T,
    target: &ProductOperator<T>,
) -> Result<PauliPolynomial<T>> {
    let g = PauliPolynomial::from(generator.clone());
    let mut term = PauliPolynomial::from(target.clone());
    let mut sum = term.clone();
    let step = Complex::new(T::zero(), -angle);
    for n in 1..200 {
        term = g.commutator(&term)?.scaled(step / T::from_usize_lossy(n));
        if term.is_zero() {
            break;
        }
        sum = sum.checked_add(&term)?;
    }
    Ok(sum)
}
