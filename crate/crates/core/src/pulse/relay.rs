use super::CouplingGraph;
use crate::error::{Error, Result};
use crate::gate::{Gate, GateSequence};
use crate::scalar::Real;

/// Hop `(p, q)`: `exp(-i(π/2)·2I_px I_qx)` then `exp(-i(π/2)·2I_py I_qy)`,
/// each as a ZZ gate between basis-change rotations.
fn push_hop<T: Real>(seq: &mut GateSequence<T>, p: usize, q: usize) -> Result<()> {
    let h = T::FRAC_PI_2();
    seq.push(Gate::ry(p, -h))?;
    seq.push(Gate::ry(q, -h))?;
    seq.push(Gate::zz(p, q, h))?;
    seq.push(Gate::ry(p, h))?;
    seq.push(Gate::ry(q, h))?;

    seq.push(Gate::rx(p, h))?;
    seq.push(Gate::rx(q, h))?;
    seq.push(Gate::zz(p, q, h))?;
    seq.push(Gate::rx(p, -h))?;
    seq.push(Gate::rx(q, -h))
}

/// Sequence `S` with `U_S · 2I_kz I_mz · U_S† = 2I_tz I_mz` for the path
/// `k, r, …, t, m`.
///
/// Every consecutive pair must be coupled and the endpoints must not be,
/// except for a two-spin path, which needs no relay and yields an empty
/// sequence.
pub fn relay_sequence<T: Real>(g: &CouplingGraph<T>, path: &[usize]) -> Result<GateSequence<T>> {
    let n = g.n_spins();
    if path.len() < 2 {
        return Err(Error::BrokenPath(format!("path needs two spins, got {}", path.len())));
    }
    for &s in path {
        g.check_spin(s)?;
    }
    for (i, &s) in path.iter().enumerate() {
        if path[..i].contains(&s) {
            return Err(Error::BrokenPath(format!("spin {} visited twice", s + 1)));
        }
    }
    for w in path.windows(2) {
        if !g.is_coupled(w[0], w[1]) {
            return Err(Error::BrokenPath(format!("spins {} and {} are not coupled", w[0] + 1, w[1] + 1)));
        }
    }
    let (k, m) = (path[0], path[path.len() - 1]);
    let mut seq = GateSequence::new(n);
    if path.len() == 2 {
        return Ok(seq);
    }
    if g.is_coupled(k, m) {
        return Err(Error::BrokenPath(format!("endpoints {} and {} are directly coupled", k + 1, m + 1)));
    }
    for w in path[..path.len() - 1].windows(2) {
        push_hop(&mut seq, w[0], w[1])?;
    }
    Ok(seq)
}

/// `ZZ(k, m, λ)` for uncoupled endpoints, using only couplings on `path`:
/// `S`, then `ZZ(t, m, λ)`, then `S⁻¹`.
pub fn relay_zz_gate<T: Real>(g: &CouplingGraph<T>, path: &[usize], lambda: T) -> Result<GateSequence<T>> {
    let s = relay_sequence(g, path)?;
    let t = path[path.len() - 2];
    let m = path[path.len() - 1];
    let mut seq = s.clone();
    seq.push(Gate::zz(t, m, lambda))?;
    seq.extend(&s.inverse())?;
    Ok(seq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::{PauliPolynomial, ProductOperator};

    fn chain(n: usize) -> CouplingGraph<f64> {
        let mut g = CouplingGraph::new(vec![0.0; n]).unwrap();
        for i in 0..n - 1 {
            g.set_coupling(i, i + 1, 1.0).unwrap();
        }
        g
    }

    fn zz(n: usize, a: usize, b: usize) -> PauliPolynomial<f64> {
        ProductOperator::zstring(n, &[a, b]).unwrap().into()
    }

    #[test]
    fn direct_pair_needs_no_relay() {
        assert!(relay_sequence(&chain(2), &[0, 1]).unwrap().is_empty());
    }

    #[test]
    fn one_hop_moves_the_coupling() {
        let g = chain(3);
        let s = relay_sequence(&g, &[0, 1, 2]).unwrap();
        let image = s.conjugate(&zz(3, 0, 2)).unwrap();
        assert!(image.max_coeff_diff(&zz(3, 1, 2)) < 1e-12, "{image}");
    }

    #[test]
    fn broken_paths() {
        let g = chain(4);
        assert!(relay_sequence(&g, &[0, 2, 3]).is_err());
        assert!(relay_sequence(&g, &[0]).is_err());
        assert!(relay_sequence(&g, &[0, 1, 0]).is_err());
        let tri = chain(3).with_coupling(0, 2, 1.0).unwrap();
        assert!(relay_sequence(&tri, &[0, 1, 2]).is_err());
    }
}
