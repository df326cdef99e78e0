//! Physical realizations of the ZZ gate.
//!
//! * [`build_refocus_schedule`]: nested spin echoes on a weakly coupled spin
//!   system, checked by the toggling-frame [`average_hamiltonian`].
//! * [`relay_sequence`]: moves a coupling along a chain of coupled spins.
//! * [`ion_pulse_params`]: laser phases for the trapped-ion realization.
//!
//! Spins are 0-based here and 1-based in every text or JSON format.

mod ion;
mod refocus;
mod relay;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Real;

pub use ion::{ion_pulse_params, IonPulseParams};
pub use refocus::{average_hamiltonian, build_refocus_schedule, group_spins, SpinGroups};
pub use relay::{relay_sequence, relay_zz_gate};

/// `H₀ = Σ_k Ω_k I_kz + Σ_{k<l} 2πJ_kl I_kz I_lz`.
#[derive(Clone, Debug, PartialEq)]
pub struct CouplingGraph<T: Real> {
    shifts: Vec<T>,
    couplings: BTreeMap<(usize, usize), T>,
}

impl<T: Real> CouplingGraph<T> {
    /// Uncoupled spins with the given shifts (rad/s).
    pub fn new(shifts: Vec<T>) -> Result<Self> {
        if let Some(i) = shifts.iter().position(|s| !s.is_finite()) {
            return Err(Error::NonFinite(i));
        }
        Ok(Self { shifts, couplings: BTreeMap::new() })
    }

    /// Sets `J_kl = J_lk` (Hz). A zero value removes the coupling.
    pub fn set_coupling(&mut self, k: usize, l: usize, j: T) -> Result<()> {
        let n = self.n_spins();
        for s in [k, l] {
            if s >= n {
                return Err(Error::QubitOutOfRange { index: s, n });
            }
        }
        if k == l {
            return Err(Error::InvalidGraph(format!("self-coupling on spin {}", k + 1)));
        }
        if !j.is_finite() {
            return Err(Error::NonFinite(0));
        }
        let key = (k.min(l), k.max(l));
        if j.is_zero() {
            self.couplings.remove(&key);
        } else {
            self.couplings.insert(key, j);
        }
        Ok(())
    }

    pub fn with_coupling(mut self, k: usize, l: usize, j: T) -> Result<Self> {
        self.set_coupling(k, l, j)?;
        Ok(self)
    }

    pub fn n_spins(&self) -> usize {
        self.shifts.len()
    }

    pub fn shifts(&self) -> &[T] {
        &self.shifts
    }

    pub fn coupling(&self, k: usize, l: usize) -> T {
        self.couplings.get(&(k.min(l), k.max(l))).copied().unwrap_or_else(T::zero)
    }

    pub fn is_coupled(&self, k: usize, l: usize) -> bool {
        self.couplings.contains_key(&(k.min(l), k.max(l)))
    }

    /// `((k, l), J_kl)` with `k < l`, ascending.
    pub fn couplings(&self) -> impl Iterator<Item = ((usize, usize), T)> + '_ {
        self.couplings.iter().map(|(&p, &j)| (p, j))
    }

    fn check_spin(&self, k: usize) -> Result<()> {
        if k >= self.n_spins() {
            return Err(Error::QubitOutOfRange { index: k, n: self.n_spins() });
        }
        Ok(())
    }
}

/// One free-evolution period in the toggling frame.
#[derive(Clone, Debug, PartialEq)]
pub struct Segment<T: Real> {
    pub duration: T,
    /// `+1` or `-1` per spin.
    pub signs: Vec<i8>,
}

/// Free evolution separated by ideal selective π pulses.
///
/// A pulse on spin `i` is implied wherever its sign changes: before the first
/// segment (from all `+1`), between segments, and after the last segment (back
/// to all `+1`).
#[derive(Clone, Debug, PartialEq)]
pub struct PulseSchedule<T: Real> {
    n_spins: usize,
    segments: Vec<Segment<T>>,
}

impl<T: Real> PulseSchedule<T> {
    pub fn new(n_spins: usize, segments: Vec<Segment<T>>) -> Result<Self> {
        for seg in &segments {
            if seg.signs.len() != n_spins {
                return Err(Error::WrongLength { expected: n_spins, got: seg.signs.len() });
            }
            if !seg.duration.is_finite() || seg.duration <= T::zero() {
                return Err(Error::NonPositiveDuration(seg.duration.to_f64().unwrap_or(f64::NAN)));
            }
            if seg.signs.iter().any(|&s| s != 1 && s != -1) {
                return Err(Error::InvalidSchedule("segment signs must be +1 or -1".into()));
            }
        }
        if let Some(first) = segments.first() {
            if first.signs.iter().any(|&s| s != 1) {
                return Err(Error::InvalidSchedule("first segment must be unflipped".into()));
            }
        }
        Ok(Self { n_spins, segments })
    }

    pub fn n_spins(&self) -> usize {
        self.n_spins
    }

    pub fn segments(&self) -> &[Segment<T>] {
        &self.segments
    }

    pub fn total_duration(&self) -> T {
        self.segments.iter().map(|s| s.duration).sum()
    }

    /// Spins pulsed after each segment, including the final return to `+1`.
    /// Entry `i` follows segment `i`.
    pub fn pulses(&self) -> Vec<Vec<usize>> {
        let plus = vec![1i8; self.n_spins];
        (0..self.segments.len())
            .map(|i| {
                let cur = &self.segments[i].signs;
                let next = self.segments.get(i + 1).map_or(&plus, |s| &s.signs);
                (0..self.n_spins).filter(|&k| cur[k] != next[k]).collect()
            })
            .collect()
    }

    /// Text export:
    ///
    /// ```text
    /// SPINS 2
    /// SEGMENT 5.0000000000000000e-4
    /// PULSE180 1 2
    /// SEGMENT 5.0000000000000000e-4
    /// PULSE180 1 2
    /// ```
    ///
    /// Spins are 1-based; durations are seconds with 17 significant digits.
    pub fn to_text(&self) -> String {
        let mut out = format!("SPINS {}\n", self.n_spins);
        for (seg, pulse) in self.segments.iter().zip(self.pulses()) {
            out.push_str(&format!("SEGMENT {:.16e}\n", seg.duration.to_f64().unwrap_or(f64::NAN)));
            if !pulse.is_empty() {
                let spins: Vec<String> = pulse.iter().map(|k| (k + 1).to_string()).collect();
                out.push_str(&format!("PULSE180 {}\n", spins.join(" ")));
            }
        }
        out
    }

    /// Inverse of [`to_text`](Self::to_text). Rejects schedules whose frame does
    /// not close.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut n_spins = None;
        let mut signs: Vec<i8> = Vec::new();
        let mut segments = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: &str| Error::Parse(format!("line {}: {msg}: '{line}'", lineno + 1));
            let mut fields = line.split_whitespace();
            match fields.next() {
                Some("SPINS") => {
                    let n: usize = fields.next().and_then(|v| v.parse().ok()).ok_or_else(|| err("bad spin count"))?;
                    n_spins = Some(n);
                    signs = vec![1; n];
                }
                Some("SEGMENT") => {
                    n_spins.ok_or_else(|| err("SEGMENT before SPINS"))?;
                    let d: f64 = fields.next().and_then(|v| v.parse().ok()).ok_or_else(|| err("bad duration"))?;
                    segments.push(Segment { duration: T::lit(d), signs: signs.clone() });
                }
                Some("PULSE180") => {
                    let n = n_spins.ok_or_else(|| err("PULSE180 before SPINS"))?;
                    for f in fields {
                        let k: usize = f.parse().map_err(|_| err("bad spin index"))?;
                        if k == 0 || k > n {
                            return Err(err("spin index out of range"));
                        }
                        signs[k - 1] = -signs[k - 1];
                    }
                }
                _ => return Err(err("unrecognized line")),
            }
        }
        if signs.iter().any(|&s| s != 1) {
            return Err(Error::InvalidSchedule("frame does not close".into()));
        }
        Self::new(n_spins.unwrap_or(0), segments)
    }
}

impl<T: Real> fmt::Display for PulseSchedule<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
