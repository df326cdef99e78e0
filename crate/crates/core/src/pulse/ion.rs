use std::fmt;

use crate::scalar::Angle;

/// Laser phases of the six-pulse ion gate.
#[derive(Clone, Debug, PartialEq)]
pub struct IonPulseParams<A: Angle> {
    pub phi0: A,
    pub phi1: A,
    pub phi2: A,
    pub phi3: A,
    pub theta1: A,
    pub theta2: A,
}

impl<A: Angle> IonPulseParams<A> {
    /// `φ1 − φ2`.
    pub fn phase_difference(&self) -> A {
        self.phi1.clone() - self.phi2.clone()
    }

    /// `φ0 − φ3 ≡ π + 2(φ1 − φ2)` and `θ1 − θ2 ≡ π + 4(φ1 − φ2)` (mod 2π).
    pub fn satisfies_constraints(&self) -> bool {
        let d = self.phase_difference();
        let outer = self.phi0.clone() - self.phi3.clone();
        let theta = self.theta1.clone() - self.theta2.clone();
        outer.congruent_mod_two_pi(&(A::pi() + d.times(2))) && theta.congruent_mod_two_pi(&(A::pi() + d.times(4)))
    }

    /// The realized coupling angle `λ = 2π − 2(φ1 − φ2)`, in `(−π, π]`.
    pub fn lambda(&self) -> A {
        (A::pi().times(2) - self.phase_difference().times(2)).wrap()
    }
}

impl<A: Angle> fmt::Display for IonPulseParams<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "phi0   = {}", self.phi0)?;
        writeln!(f, "phi1   = {}", self.phi1)?;
        writeln!(f, "phi2   = {}", self.phi2)?;
        writeln!(f, "phi3   = {}", self.phi3)?;
        writeln!(f, "theta1 = {}", self.theta1)?;
        write!(f, "theta2 = {}", self.theta2)
    }
}

/// Phases realizing `ZZ(λ)`: `φ1 − φ2 = π − λ/2`, with `φ2 = phi2`,
/// `θ2 = φ3 = 0` and every value wrapped into `(−π, π]`.
pub fn ion_pulse_params<A: Angle>(lambda: A, phi2: A) -> IonPulseParams<A> {
    let d = A::pi() - lambda.half();
    let phi2 = phi2.wrap();
    let phi3 = A::zero();
    let theta2 = A::zero();
    IonPulseParams {
        phi0: (phi3.clone() + A::pi() + d.times(2)).wrap(),
        phi1: (phi2.clone() + d.clone()).wrap(),
        phi2,
        phi3,
        theta1: (theta2.clone() + A::pi() + d.times(4)).wrap(),
        theta2,
    }
}
