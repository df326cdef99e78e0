use super::{QubitSet, ZPolynomial};
use crate::error::{Error, Result};
use crate::gate::{Gate, GateSequence};
use crate::scalar::Real;

/// Lowers `exp(-iλ · 2^{m-1} Π_{j∈S} I_jz)` to ZZ and one-qubit gates.
///
/// For sorted indices `k_1 < … < k_m` the second-highest index `a = k_{m-1}` is
/// eliminated against the pivot `b = k_m`:
///
/// `exp(-iλ 2^{m-1} I_{k1}…I_a I_b) = V · exp(-iλ 2^{m-2} I_{k1}…I_b) · V†`,
/// `V = RX(b, π/2) · ZZ(a, b, π/2) · RX(b, -π/2) · RY(b, π/2)`
///
/// (`ZZ(π/2) = exp(-iπ I_az I_bz)`), which maps `I_bz` to `2 I_az I_bz`. An
/// `m`-body string costs `2m - 3` ZZ gates and `6(m - 2)` one-qubit gates.
pub fn reduce_zstring<T: Real>(n_qubits: usize, subset: &QubitSet, coeff: T) -> Result<GateSequence<T>> {
    if subset.len() < 2 {
        return Err(Error::ZStringTooShort(subset.len()));
    }
    if subset.max_index() >= n_qubits {
        return Err(Error::QubitOutOfRange { index: subset.max_index(), n: n_qubits });
    }
    let mut seq = GateSequence::new(n_qubits);
    emit_zstring(&mut seq, &subset.indices(), coeff)?;
    Ok(seq)
}

fn emit_zstring<T: Real>(seq: &mut GateSequence<T>, indices: &[usize], coeff: T) -> Result<()> {
    let m = indices.len();
    if m == 2 {
        return seq.push(Gate::zz(indices[0], indices[1], coeff));
    }
    let a = indices[m - 2];
    let b = indices[m - 1];
    let quarter = T::FRAC_PI_2();
    // V† in application order.
    seq.push(Gate::rx(b, -quarter))?;
    seq.push(Gate::zz(a, b, -quarter))?;
    seq.push(Gate::rx(b, quarter))?;
    seq.push(Gate::ry(b, -quarter))?;
    let mut rest = indices[..m - 2].to_vec();
    rest.push(b);
    emit_zstring(seq, &rest, coeff)?;
    // V in application order.
    seq.push(Gate::ry(b, quarter))?;
    seq.push(Gate::rx(b, -quarter))?;
    seq.push(Gate::zz(a, b, quarter))?;
    seq.push(Gate::rx(b, quarter))
}

/// Lowers `exp(-i H)` for a Z-polynomial `H`.
///
/// All terms commute, so the factor order is free; the emitted order is
/// GPHASE, then subsets by size and lexicographically. Zero terms are skipped.
pub fn zpoly_to_sequence<T: Real>(zp: &ZPolynomial<T>) -> Result<GateSequence<T>> {
    let n = zp.n_qubits();
    let mut seq = GateSequence::new(n);
    seq.push_nonzero(Gate::phase(zp.constant()))?;
    for (s, a) in zp.terms() {
        match s.len() {
            1 => seq.push(Gate::rz(s.max_index(), a))?,
            _ => seq.extend(&reduce_zstring(n, &s, a)?)?,
        }
    }
    Ok(seq)
}
