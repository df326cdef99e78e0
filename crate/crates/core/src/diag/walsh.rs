use super::{PhaseVector, QubitSet, ZPolynomial};
use crate::error::Result;
use crate::scalar::Real;

/// In-place unnormalized Walsh–Hadamard transform,
/// `h[y] = Σ_x (-1)^{popcount(x & y)} v[x]`. Length must be a power of two.
pub fn fwht<T: Real>(v: &mut [T]) {
    debug_assert!(v.len().is_power_of_two());
    let mut half = 1;
    while half < v.len() {
        for block in v.chunks_mut(2 * half) {
            let (lo, hi) = block.split_at_mut(half);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        half *= 2;
    }
}

/// Maps a qubit set to the bit pattern of basis indices (qubit 0 = MSB).
fn subset_to_mask(subset: &QubitSet, n: usize) -> usize {
    subset.iter().fold(0usize, |m, k| m | 1 << (n - 1 - k))
}

fn mask_to_subset(mask: usize, n: usize) -> QubitSet {
    let bits = (0..n).filter(|&k| mask & (1 << (n - 1 - k)) != 0).fold(0u64, |b, k| b | 1 << k);
    QubitSet::from_bits(bits)
}

/// The unique Z-polynomial with `diag(H) = θ`.
///
/// `Ω₀ = 2^{-n} Σ_x θ_x` and `a_S = 2^{1-n} Σ_x θ_x Π_{j∈S} s_j(x)` with
/// `s_j = +1` when qubit `j` of `x` is 0.
pub fn phases_to_zpoly<T: Real>(pv: &PhaseVector<T>) -> ZPolynomial<T> {
    let n = pv.n_qubits();
    let mut h = pv.phases().to_vec();
    fwht(&mut h);
    let dim = T::from_usize_lossy(h.len());
    let mut zp = ZPolynomial::new(n);
    zp.set_constant(h[0] / dim);
    let scale = T::lit(2.0) / dim;
    for (mask, &v) in h.iter().enumerate().skip(1) {
        zp.set(mask_to_subset(mask, n), v * scale).expect("subset within register");
    }
    if zp.constant().abs() < T::drop_tol() {
        zp.set_constant(T::zero());
    }
    zp
}

/// Evaluates `θ_x = Ω₀ + Σ_S (a_S/2) Π_{j∈S} s_j(x)`.
pub fn zpoly_to_phases<T: Real>(zp: &ZPolynomial<T>) -> Result<PhaseVector<T>> {
    let n = zp.n_qubits();
    let mut c = PhaseVector::<T>::zeros(n)?.phases().to_vec();
    c[0] = zp.constant();
    let half = T::lit(0.5);
    for (s, a) in zp.terms() {
        c[subset_to_mask(&s, n)] = a * half;
    }
    fwht(&mut c);
    PhaseVector::new(n, c)
}
