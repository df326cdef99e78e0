use super::{CouplingGraph, PulseSchedule, Segment};
use crate::diag::{QubitSet, ZPolynomial};
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Spin partition for the nested echo on pair `(k, l)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SpinGroups {
    /// Flipped together with `k` and `l` in every echo unit.
    pub p: Vec<usize>,
    /// One nesting level each; no two spins in a group are coupled.
    pub groups: Vec<Vec<usize>>,
}

/// Partitions the spins other than `k`, `l`.
///
/// `p` collects, in ascending order, spins coupled to neither `k` nor `l` and
/// not to an earlier member of `p`. Everything else is placed first-fit into
/// the earliest group holding no spin it couples to.
pub fn group_spins<T: Real>(g: &CouplingGraph<T>, k: usize, l: usize) -> Result<SpinGroups> {
    g.check_spin(k)?;
    g.check_spin(l)?;
    if k == l || !g.is_coupled(k, l) {
        return Err(Error::NotCoupled(k + 1, l + 1));
    }
    let mut out = SpinGroups::default();
    for s in (0..g.n_spins()).filter(|&s| s != k && s != l) {
        let free = !g.is_coupled(s, k) && !g.is_coupled(s, l) && out.p.iter().all(|&q| !g.is_coupled(s, q));
        if free {
            out.p.push(s);
            continue;
        }
        match out.groups.iter_mut().find(|grp| grp.iter().all(|&q| !g.is_coupled(s, q))) {
            Some(grp) => grp.push(s),
            None => out.groups.push(vec![s]),
        }
    }
    Ok(out)
}

/// Nested echo that keeps only `2 I_kz I_lz` in the average Hamiltonian.
///
/// `SE₁` is `τ/2` unflipped then `τ/2` with `{k, l} ∪ p` flipped. Each group
/// adds a level `SE_{j+1} = SE_j, SE_j', SE_j', SE_j` where `'` flips the group;
/// the total duration is `4^{levels-1} τ`.
pub fn build_refocus_schedule<T: Real>(g: &CouplingGraph<T>, k: usize, l: usize, tau: T) -> Result<PulseSchedule<T>> {
    if !tau.is_finite() || tau <= T::zero() {
        return Err(Error::NonPositiveDuration(tau.to_f64().unwrap_or(f64::NAN)));
    }
    let groups = group_spins(g, k, l)?;
    let n = g.n_spins();
    let half = tau * T::lit(0.5);
    let plus = vec![1i8; n];
    let mut flipped = plus.clone();
    for s in [k, l].into_iter().chain(groups.p.iter().copied()) {
        flipped[s] = -1;
    }
    let mut unit = vec![Segment { duration: half, signs: plus }, Segment { duration: half, signs: flipped }];
    for grp in &groups.groups {
        let mut toggled = unit.clone();
        for seg in &mut toggled {
            for &s in grp {
                seg.signs[s] = -seg.signs[s];
            }
        }
        let mut next = Vec::with_capacity(4 * unit.len());
        next.extend_from_slice(&unit);
        next.extend_from_slice(&toggled);
        next.extend_from_slice(&toggled);
        next.extend_from_slice(&unit);
        unit = next;
    }
    PulseSchedule::new(n, unit)
}

/// Σ over segments of `duration · sign`, with positive and negative parts
/// accumulated apart so exact cancellation yields exactly zero.
fn signed_time<T: Real>(sched: &PulseSchedule<T>, sign: impl Fn(&[i8]) -> i8) -> T {
    let (mut pos, mut neg) = (T::zero(), T::zero());
    for seg in sched.segments() {
        if sign(&seg.signs) > 0 {
            pos = pos + seg.duration;
        } else {
            neg = neg + seg.duration;
        }
    }
    pos - neg
}

/// Time integral of the toggled `H₀` over the schedule.
///
/// Spin `i` gets `Ω_i Σ dur·s_i` on `I_iz`; pair `(i, j)` gets
/// `πJ_ij Σ dur·s_i s_j` on `2 I_iz I_jz`. All toggled terms commute, so
/// `exp(-i·result)` is the exact propagator.
pub fn average_hamiltonian<T: Real>(sched: &PulseSchedule<T>, g: &CouplingGraph<T>) -> Result<ZPolynomial<T>> {
    if sched.n_spins() != g.n_spins() {
        return Err(Error::DimensionMismatch { left: sched.n_spins(), right: g.n_spins() });
    }
    let mut zp = ZPolynomial::new(g.n_spins());
    for (i, &omega) in g.shifts().iter().enumerate() {
        let t = signed_time(sched, |s| s[i]);
        zp.set(QubitSet::from_indices(&[i])?, omega * t)?;
    }
    for ((i, j), coupling) in g.couplings() {
        let t = signed_time(sched, |s| s[i] * s[j]);
        zp.set(QubitSet::from_indices(&[i, j])?, T::PI() * coupling * t)?;
    }
    Ok(zp)
}
