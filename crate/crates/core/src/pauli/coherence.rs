//! Multiple-quantum coherence orders.
//!
//! A `p`-quantum operator shifts the total magnetic quantum number by `p`.
//! Orders are read off by rewriting `I_x = (I₊+I₋)/2` and
//! `I_y = (I₊−I₋)/(2i)` and counting raising minus lowering factors.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_complex::Complex;
use num_traits::{One, Zero};

use super::{Axis, PauliPolynomial, ProductOperator};
use crate::error::Result;
use crate::scalar::Real;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ShiftFactor {
    E,
    Z,
    Plus,
    Minus,
}

impl ShiftFactor {
    fn order(self) -> i32 {
        match self {
            ShiftFactor::Plus => 1,
            ShiftFactor::Minus => -1,
            _ => 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CoherenceProfile<T: Real> {
    pub orders: BTreeSet<i32>,
    pub component_weights: BTreeMap<i32, T>,
}

impl<T: Real> CoherenceProfile<T> {
    pub fn is_zero_quantum(&self) -> bool {
        self.orders.iter().all(|&p| p == 0)
    }

    pub fn is_even_order(&self) -> bool {
        self.orders.iter().all(|&p| p % 2 == 0)
    }
}

impl<T: Real> fmt::Display for CoherenceProfile<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let orders: Vec<String> = self.orders.iter().map(|p| format!("{p:+}")).collect();
        write!(f, "orders {{{}}}", orders.join(", "))?;
        for (p, w) in &self.component_weights {
            write!(f, "\n  p = {p:+}: weight {w}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subspace {
    Longitudinal,
    ZeroQuantum,
    EvenOrder,
    General,
}

impl Subspace {
    /// Position in the chain Longitudinal ⊂ ZeroQuantum ⊂ EvenOrder ⊂ General.
    pub fn rank(self) -> u8 {
        match self {
            Subspace::Longitudinal => 0,
            Subspace::ZeroQuantum => 1,
            Subspace::EvenOrder => 2,
            Subspace::General => 3,
        }
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Subspace::Longitudinal => "Longitudinal",
            Subspace::ZeroQuantum => "ZeroQuantum",
            Subspace::EvenOrder => "EvenOrder",
            Subspace::General => "General",
        };
        f.write_str(s)
    }
}

/// Rewrites `op` in the `{E, I_z, I₊, I₋}` product basis.
pub fn shift_expansion<T: Real>(op: &PauliPolynomial<T>) -> BTreeMap<Vec<ShiftFactor>, Complex<T>> {
    let half = Complex::new(T::lit(0.5), T::zero());
    let y_plus = Complex::new(T::zero(), T::lit(-0.5));
    let mut out: BTreeMap<Vec<ShiftFactor>, Complex<T>> = BTreeMap::new();
    for (factors, coeff) in op.raw_terms() {
        let mut partial: Vec<(Vec<ShiftFactor>, Complex<T>)> = vec![(Vec::with_capacity(factors.len()), *coeff)];
        for axis in factors {
            let options: &[(ShiftFactor, Complex<T>)] = match axis {
                Axis::E => &[(ShiftFactor::E, Complex::one())],
                Axis::Z => &[(ShiftFactor::Z, Complex::one())],
                Axis::X => &[(ShiftFactor::Plus, half), (ShiftFactor::Minus, half)],
                Axis::Y => &[(ShiftFactor::Plus, y_plus), (ShiftFactor::Minus, -y_plus)],
            };
            partial = partial
                .into_iter()
                .flat_map(|(key, c)| {
                    options.iter().map(move |&(s, w)| {
                        let mut k = key.clone();
                        k.push(s);
                        (k, c * w)
                    })
                })
                .collect();
        }
        for (k, c) in partial {
            let e = out.entry(k).or_insert_with(Complex::zero);
            *e = *e + c;
        }
    }
    out.retain(|_, c| c.norm() >= T::drop_tol());
    out
}

/// Builds a Cartesian polynomial from `{E, I_z, I₊, I₋}` product terms.
pub fn from_shift_terms<T: Real>(
    n_spins: usize,
    terms: &[(Vec<ShiftFactor>, Complex<T>)],
) -> Result<PauliPolynomial<T>> {
    let i = Complex::new(T::zero(), T::one());
    let mut total = PauliPolynomial::zero(n_spins);
    for (factors, coeff) in terms {
        let mut acc = PauliPolynomial::from(ProductOperator::new(vec![Axis::E; n_spins], *coeff));
        for (spin, f) in factors.iter().enumerate() {
            let local = match f {
                ShiftFactor::E => continue,
                ShiftFactor::Z => PauliPolynomial::from(ProductOperator::single(n_spins, spin, Axis::Z)?),
                ShiftFactor::Plus | ShiftFactor::Minus => {
                    let sign = if *f == ShiftFactor::Plus { i } else { -i };
                    PauliPolynomial::from_terms(
                        n_spins,
                        [
                            ProductOperator::single(n_spins, spin, Axis::X)?,
                            ProductOperator::single(n_spins, spin, Axis::Y)?.scaled(sign),
                        ],
                    )?
                }
            };
            acc = acc.checked_mul(&local)?;
        }
        total = total.checked_add(&acc)?;
    }
    Ok(total)
}

pub fn coherence_orders<T: Real>(op: &PauliPolynomial<T>) -> CoherenceProfile<T> {
    let mut weights: BTreeMap<i32, T> = BTreeMap::new();
    for (key, c) in shift_expansion(op) {
        let p: i32 = key.iter().map(|s| s.order()).sum();
        let w = weights.entry(p).or_insert_with(T::zero);
        *w = *w + c.norm_sqr();
    }
    weights.retain(|_, w| *w > T::zero());
    CoherenceProfile { orders: weights.keys().copied().collect(), component_weights: weights }
}

/// Most specific of Longitudinal ⊂ ZeroQuantum ⊂ EvenOrder ⊂ General.
pub fn classify_subspace<T: Real>(op: &PauliPolynomial<T>) -> Subspace {
    let longitudinal = op.raw_terms().keys().all(|f| f.iter().all(|a| matches!(a, Axis::E | Axis::Z)));
    if longitudinal {
        return Subspace::Longitudinal;
    }
    let profile = coherence_orders(op);
    if profile.is_zero_quantum() {
        Subspace::ZeroQuantum
    } else if profile.is_even_order() {
        Subspace::EvenOrder
    } else {
        Subspace::General
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(n: usize, terms: &[(&[(usize, Axis)], f64)]) -> PauliPolynomial<f64> {
        PauliPolynomial::from_terms(
            n,
            terms.iter().map(|(axes, c)| ProductOperator::from_axes(n, axes, Complex::new(*c, 0.0)).unwrap()),
        )
        .unwrap()
    }

    fn orders(p: &PauliPolynomial<f64>) -> Vec<i32> {
        coherence_orders(p).orders.into_iter().collect()
    }

    #[test]
    fn iz_is_zero_quantum() {
        let p = poly(1, &[(&[(0, Axis::Z)], 1.0)]);
        assert_eq!(orders(&p), vec![0]);
        assert_eq!(classify_subspace(&p), Subspace::Longitudinal);
    }

    #[test]
    fn ix_is_single_quantum() {
        let p = poly(1, &[(&[(0, Axis::X)], 1.0)]);
        assert_eq!(orders(&p), vec![-1, 1]);
        assert_eq!(classify_subspace(&p), Subspace::General);
    }

    #[test]
    fn xx_has_double_and_zero_quantum() {
        let p = poly(2, &[(&[(0, Axis::X), (1, Axis::X)], 2.0)]);
        assert_eq!(orders(&p), vec![-2, 0, 2]);
        assert_eq!(classify_subspace(&p), Subspace::EvenOrder);
    }

    #[test]
    fn flip_flop_is_zero_quantum() {
        let p = poly(2, &[(&[(0, Axis::X), (1, Axis::X)], 1.0), (&[(0, Axis::Y), (1, Axis::Y)], 1.0)]);
        assert_eq!(orders(&p), vec![0]);
        assert_eq!(classify_subspace(&p), Subspace::ZeroQuantum);
    }

    #[test]
    fn zz_is_longitudinal() {
        let p = poly(2, &[(&[(0, Axis::Z), (1, Axis::Z)], 2.0)]);
        assert_eq!(classify_subspace(&p), Subspace::Longitudinal);
        assert_eq!(classify_subspace(&PauliPolynomial::<f64>::zero(3)), Subspace::Longitudinal);
    }

    #[test]
    fn shift_roundtrip() {
        let p = poly(2, &[(&[(0, Axis::X), (1, Axis::Y)], 0.7), (&[(1, Axis::Z)], -1.3)]);
        let terms: Vec<_> = shift_expansion(&p).into_iter().collect();
        let back = from_shift_terms(2, &terms).unwrap();
        assert!(back.max_coeff_diff(&p) < 1e-14);
    }

    #[test]
    fn weights_sum_per_order() {
        let p = poly(1, &[(&[(0, Axis::X)], 1.0)]);
        let prof = coherence_orders(&p);
        assert!((prof.component_weights[&1] - 0.25).abs() < 1e-15);
        assert!((prof.component_weights[&-1] - 0.25).abs() < 1e-15);
    }
}
