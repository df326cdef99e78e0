//! Target gate set and gate sequences.
//!
//! * `RX/RY/RZ(k, θ) = exp(-iθ I_kα)`
//! * `ZZ(k, l, λ) = exp(-iλ · 2 I_kz I_lz)`
//! * `GPHASE(φ) = e^{-iφ} · E`
//!
//! Rotation angles have period 4π in these conventions, so constructors store
//! them reduced into `(-2π, 2π]` without changing the unitary.
//!
//! Text format, one gate per line in application order, qubits 1-based:
//!
//! ```text
//! QUBITS 3
//! PHASE 7.8539816339744828e-1
//! RZ 1 -1.5707963267948966e0
//! ZZ 1 2 1.5707963267948966e0
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. Angles are written with
//! 17 significant digits so text round trips are bit exact for `f64`.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::pauli::{Axis, PauliPolynomial, ProductOperator};
use crate::scalar::{wrap_symmetric, Real};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Gate<T: Real> {
    Rx(usize, T),
    Ry(usize, T),
    Rz(usize, T),
    Zz(usize, usize, T),
    GlobalPhase(T),
}

fn reduce<T: Real>(angle: T) -> T {
    wrap_symmetric(angle, T::lit(2.0) * T::two_pi())
}

impl<T: Real> Gate<T> {
    pub fn rx(k: usize, theta: T) -> Self {
        Gate::Rx(k, reduce(theta))
    }

    pub fn ry(k: usize, theta: T) -> Self {
        Gate::Ry(k, reduce(theta))
    }

    pub fn rz(k: usize, theta: T) -> Self {
        Gate::Rz(k, reduce(theta))
    }

    pub fn zz(k: usize, l: usize, lambda: T) -> Self {
        Gate::Zz(k, l, reduce(lambda))
    }

    pub fn phase(phi: T) -> Self {
        Gate::GlobalPhase(reduce(phi))
    }

    pub fn angle(&self) -> T {
        match *self {
            Gate::Rx(_, a) | Gate::Ry(_, a) | Gate::Rz(_, a) | Gate::Zz(_, _, a) | Gate::GlobalPhase(a) => a,
        }
    }

    pub fn qubits(&self) -> Vec<usize> {
        match *self {
            Gate::Rx(k, _) | Gate::Ry(k, _) | Gate::Rz(k, _) => vec![k],
            Gate::Zz(k, l, _) => vec![k, l],
            Gate::GlobalPhase(_) => vec![],
        }
    }

    pub fn inverse(&self) -> Self {
        match *self {
            Gate::Rx(k, a) => Gate::rx(k, -a),
            Gate::Ry(k, a) => Gate::ry(k, -a),
            Gate::Rz(k, a) => Gate::rz(k, -a),
            Gate::Zz(k, l, a) => Gate::zz(k, l, -a),
            Gate::GlobalPhase(a) => Gate::phase(-a),
        }
    }

    /// `(B, λ)` with the gate equal to `exp(-iλB)`; `None` for a global phase.
    pub fn generator(&self, n_qubits: usize) -> Result<Option<(ProductOperator<T>, T)>> {
        let one = Complex::new(T::one(), T::zero());
        let two = Complex::new(T::lit(2.0), T::zero());
        let g = match *self {
            Gate::Rx(k, a) => (ProductOperator::from_axes(n_qubits, &[(k, Axis::X)], one)?, a),
            Gate::Ry(k, a) => (ProductOperator::from_axes(n_qubits, &[(k, Axis::Y)], one)?, a),
            Gate::Rz(k, a) => (ProductOperator::from_axes(n_qubits, &[(k, Axis::Z)], one)?, a),
            Gate::Zz(k, l, a) => (ProductOperator::from_axes(n_qubits, &[(k, Axis::Z), (l, Axis::Z)], two)?, a),
            Gate::GlobalPhase(_) => return Ok(None),
        };
        Ok(Some(g))
    }

    fn validate(&self, n_qubits: usize) -> Result<()> {
        for k in self.qubits() {
            if k >= n_qubits {
                return Err(Error::QubitOutOfRange { index: k, n: n_qubits });
            }
        }
        if let Gate::Zz(k, l, _) = *self {
            if k == l {
                return Err(Error::RepeatedQubit(k + 1));
            }
        }
        if !self.angle().is_finite() {
            return Err(Error::NonFinite(0));
        }
        Ok(())
    }
}

fn angle_text<T: Real>(a: T) -> String {
    format!("{:.16e}", a.to_f64().unwrap_or(f64::NAN))
}

impl<T: Real> fmt::Display for Gate<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Gate::Rx(k, a) => write!(f, "RX {} {}", k + 1, angle_text(a)),
            Gate::Ry(k, a) => write!(f, "RY {} {}", k + 1, angle_text(a)),
            Gate::Rz(k, a) => write!(f, "RZ {} {}", k + 1, angle_text(a)),
            Gate::Zz(k, l, a) => write!(f, "ZZ {} {} {}", k + 1, l + 1, angle_text(a)),
            Gate::GlobalPhase(a) => write!(f, "PHASE {}", angle_text(a)),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GateCounts {
    pub zz: usize,
    pub one_qubit: usize,
    pub phase: usize,
}

impl GateCounts {
    pub fn total(&self) -> usize {
        self.zz + self.one_qubit + self.phase
    }
}

impl fmt::Display for GateCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "zz={} one_qubit={} phase={} total={}", self.zz, self.one_qubit, self.phase, self.total())
    }
}

/// Ordered gates; `gates[0]` acts on the state first.
#[derive(Clone, Debug, PartialEq)]
pub struct GateSequence<T: Real> {
    n_qubits: usize,
    gates: Vec<Gate<T>>,
}

impl<T: Real> GateSequence<T> {
    pub fn new(n_qubits: usize) -> Self {
        Self { n_qubits, gates: Vec::new() }
    }

    pub fn from_gates(n_qubits: usize, gates: impl IntoIterator<Item = Gate<T>>) -> Result<Self> {
        let mut s = Self::new(n_qubits);
        for g in gates {
            s.push(g)?;
        }
        Ok(s)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn gates(&self) -> &[Gate<T>] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn push(&mut self, g: Gate<T>) -> Result<()> {
        g.validate(self.n_qubits)?;
        self.gates.push(g);
        Ok(())
    }

    /// Appends `g` unless its angle is below the drop tolerance.
    pub fn push_nonzero(&mut self, g: Gate<T>) -> Result<()> {
        if g.angle().abs() < T::drop_tol() {
            g.validate(self.n_qubits)
        } else {
            self.push(g)
        }
    }

    pub fn extend(&mut self, other: &GateSequence<T>) -> Result<()> {
        if other.n_qubits > self.n_qubits {
            return Err(Error::DimensionMismatch { left: self.n_qubits, right: other.n_qubits });
        }
        self.gates.extend_from_slice(&other.gates);
        Ok(())
    }

    /// The sequence realizing the inverse unitary.
    pub fn inverse(&self) -> Self {
        Self { n_qubits: self.n_qubits, gates: self.gates.iter().rev().map(Gate::inverse).collect() }
    }

    pub fn counts(&self) -> GateCounts {
        gate_counts(self)
    }

    /// `U · op · U†` for the sequence unitary `U`, evaluated symbolically gate
    /// by gate.
    pub fn conjugate(&self, op: &PauliPolynomial<T>) -> Result<PauliPolynomial<T>> {
        if op.n_spins() != self.n_qubits {
            return Err(Error::DimensionMismatch { left: self.n_qubits, right: op.n_spins() });
        }
        let mut out = op.clone();
        for g in &self.gates {
            if let Some((gen, angle)) = g.generator(self.n_qubits)? {
                out = out.conjugated_by(&gen, angle)?;
            }
        }
        Ok(out)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("QUBITS {}\n", self.n_qubits);
        for g in &self.gates {
            out.push_str(&g.to_string());
            out.push('\n');
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let mut n_qubits = None;
        let mut gates = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: &str| Error::Parse(format!("line {}: {msg}: '{line}'", lineno + 1));
            let fields: Vec<&str> = line.split_whitespace().collect();
            let qubit = |s: &str| -> Result<usize> {
                let k: usize = s.parse().map_err(|_| err("bad qubit index"))?;
                k.checked_sub(1).ok_or_else(|| err("qubit indices are 1-based"))
            };
            let angle = |s: &str| -> Result<T> {
                let v = f64::from_str(s).map_err(|_| err("bad angle"))?;
                Ok(T::lit(v))
            };
            let gate = match (fields[0].to_ascii_uppercase().as_str(), fields.len()) {
                ("QUBITS", 2) => {
                    n_qubits = Some(fields[1].parse::<usize>().map_err(|_| err("bad qubit count"))?);
                    continue;
                }
                ("RX", 3) => Gate::rx(qubit(fields[1])?, angle(fields[2])?),
                ("RY", 3) => Gate::ry(qubit(fields[1])?, angle(fields[2])?),
                ("RZ", 3) => Gate::rz(qubit(fields[1])?, angle(fields[2])?),
                ("ZZ", 4) => Gate::zz(qubit(fields[1])?, qubit(fields[2])?, angle(fields[3])?),
                ("PHASE", 2) => Gate::phase(angle(fields[1])?),
                _ => return Err(err("unrecognized line")),
            };
            gates.push(gate);
        }
        let n = match n_qubits {
            Some(n) => n,
            None => gates.iter().flat_map(|g| g.qubits()).max().map_or(1, |k| k + 1),
        };
        Self::from_gates(n, gates)
    }
}

pub fn gate_counts<T: Real>(seq: &GateSequence<T>) -> GateCounts {
    let mut c = GateCounts::default();
    for g in seq.gates() {
        match g {
            Gate::Zz(..) => c.zz += 1,
            Gate::GlobalPhase(_) => c.phase += 1,
            _ => c.one_qubit += 1,
        }
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn angles_are_reduced() {
        let g = Gate::rz(0, 5.0 * PI);
        assert!((g.angle() - PI).abs() < 1e-12);
        assert_eq!(Gate::zz(0, 1, -2.0 * PI).angle(), 2.0 * PI);
    }

    #[test]
    fn validation() {
        let mut s = GateSequence::<f64>::new(2);
        assert!(s.push(Gate::rx(2, 0.1)).is_err());
        assert!(s.push(Gate::zz(1, 1, 0.1)).is_err());
        assert!(s.push(Gate::zz(0, 1, 0.1)).is_ok());
        assert!(s.push_nonzero(Gate::rz(0, 0.0)).is_ok());
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn counts_sum_to_length() {
        let s =
            GateSequence::from_gates(3, [Gate::phase(0.2), Gate::rz(0, 0.1), Gate::zz(0, 2, 0.3), Gate::ry(1, 0.4)])
                .unwrap();
        let c = gate_counts(&s);
        assert_eq!(c, GateCounts { zz: 1, one_qubit: 2, phase: 1 });
        assert_eq!(c.total(), s.len());
        assert_eq!(gate_counts(&GateSequence::<f64>::new(2)), GateCounts::default());
    }

    #[test]
    fn text_roundtrip_is_bit_exact() {
        let s = GateSequence::from_gates(
            3,
            [Gate::phase(PI / 4.0), Gate::rz(0, -PI / 2.0), Gate::zz(0, 2, 0.1 + 0.2), Gate::rx(2, 1e-7)],
        )
        .unwrap();
        let text = s.to_text();
        assert!(text.starts_with("QUBITS 3\nPHASE 7.8539816339744828e-1\n"));
        let back = GateSequence::<f64>::parse_text(&text).unwrap();
        assert_eq!(back, s);
        assert_eq!(back.to_text(), text);
    }

    #[test]
    fn parse_errors() {
        assert!(GateSequence::<f64>::parse_text("RX 0 1.0").is_err());
        assert!(GateSequence::<f64>::parse_text("RX 1").is_err());
        assert!(GateSequence::<f64>::parse_text("FOO 1 2").is_err());
        assert!(GateSequence::<f64>::parse_text("QUBITS 1\nZZ 1 2 0.5").is_err());
    }
}
