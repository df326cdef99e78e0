//! Scalar abstractions.
//!
//! Every numeric module is generic over [`Real`], implemented for `f32` and
//! `f64`. Angles that must satisfy congruences exactly (laser phase
//! constraints) use the [`Angle`] trait, which is also implemented by the exact
//! [`PiFraction`] type.

use std::fmt::{self, Debug, Display};
use std::iter::Sum;
use std::ops::{Add, Neg, Sub};

use num_complex::Complex;
use num_rational::Ratio;
use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive, Zero};

/// Floating point scalar used throughout the crate.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Default + Sum + Send + Sync + 'static
{
    /// Coefficients with magnitude below this are dropped after arithmetic.
    fn drop_tol() -> Self;

    /// Default tolerance for unitary equivalence checks.
    fn verify_tol() -> Self;

    /// Converts an `f64` literal. Panics only if the target cannot represent
    /// finite `f64` values, which does not happen for `f32`/`f64`.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("finite f64 literal")
    }

    #[inline]
    fn from_usize_lossy(x: usize) -> Self {
        Self::from_usize(x).expect("usize fits in float")
    }

    #[inline]
    fn two_pi() -> Self {
        Self::TAU()
    }
}

impl Real for f32 {
    fn drop_tol() -> Self {
        1e-6
    }

    fn verify_tol() -> Self {
        1e-4
    }
}

impl Real for f64 {
    fn drop_tol() -> Self {
        1e-12
    }

    fn verify_tol() -> Self {
        1e-10
    }
}

/// `e^{-iθ}`.
#[inline]
pub(crate) fn phase_factor<T: Real>(theta: T) -> Complex<T> {
    Complex::new(theta.cos(), -theta.sin())
}

/// Reduces `x` into `(-half_period, half_period]`.
#[inline]
pub(crate) fn wrap_symmetric<T: Real>(x: T, period: T) -> T {
    let half = period / T::lit(2.0);
    let mut r = x % period;
    if r > half {
        r = r - period;
    } else if r <= -half {
        r = r + period;
    }
    r
}

/// Angle arithmetic needed by the laser-phase solver.
///
/// Values are radians. Implementations must make `wrap` idempotent and keep
/// `congruent_mod_two_pi` consistent with it.
pub trait Angle:
    Clone + Debug + Display + PartialEq + Add<Output = Self> + Sub<Output = Self> + Neg<Output = Self>
{
    fn zero() -> Self;
    fn pi() -> Self;
    fn times(&self, k: i64) -> Self;
    fn half(&self) -> Self;
    /// Representative in `(-π, π]`.
    fn wrap(&self) -> Self;
    fn congruent_mod_two_pi(&self, other: &Self) -> bool;
    fn to_radians_f64(&self) -> f64;
}

macro_rules! float_angle {
    ($t:ty) => {
        impl Angle for $t {
            fn zero() -> Self {
                0.0
            }

            fn pi() -> Self {
                <$t as FloatConst>::PI()
            }

            fn times(&self, k: i64) -> Self {
                *self * k as $t
            }

            fn half(&self) -> Self {
                *self / 2.0
            }

            fn wrap(&self) -> Self {
                wrap_symmetric(*self, <$t as FloatConst>::TAU())
            }

            fn congruent_mod_two_pi(&self, other: &Self) -> bool {
                let d = (*self - *other).wrap();
                d.abs() <= 64.0 * <$t>::EPSILON * (1.0 + self.abs().max(other.abs()))
            }

            fn to_radians_f64(&self) -> f64 {
                *self as f64
            }
        }
    };
}

float_angle!(f32);
float_angle!(f64);

/// An exact rational multiple of π.
///
/// `PiFraction::new(1, 2)` is π/2. Arithmetic never rounds, so congruences
/// modulo 2π are decided exactly.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PiFraction(Ratio<i64>);

impl PiFraction {
    pub fn new(numer: i64, denom: i64) -> Self {
        Self(Ratio::new(numer, denom))
    }

    pub fn from_ratio(r: Ratio<i64>) -> Self {
        Self(r)
    }

    /// The multiple of π as a ratio.
    pub fn ratio(&self) -> Ratio<i64> {
        self.0
    }
}

impl Debug for PiFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PiFraction({})", self)
    }
}

impl Display for PiFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_zero() {
            return write!(f, "0");
        }
        match (*self.0.numer(), *self.0.denom()) {
            (1, 1) => write!(f, "π"),
            (-1, 1) => write!(f, "-π"),
            (n, 1) => write!(f, "{n}π"),
            (1, d) => write!(f, "π/{d}"),
            (-1, d) => write!(f, "-π/{d}"),
            (n, d) => write!(f, "{n}π/{d}"),
        }
    }
}

impl Add for PiFraction {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self(self.0 + rhs.0)
    }
}

impl Sub for PiFraction {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self(self.0 - rhs.0)
    }
}

impl Neg for PiFraction {
    type Output = Self;
    fn neg(self) -> Self {
        Self(-self.0)
    }
}

impl Angle for PiFraction {
    fn zero() -> Self {
        Self(Ratio::zero())
    }

    fn pi() -> Self {
        Self(Ratio::from_integer(1))
    }

    fn times(&self, k: i64) -> Self {
        Self(self.0 * k)
    }

    fn half(&self) -> Self {
        Self(self.0 / 2)
    }

    fn wrap(&self) -> Self {
        // r in units of π; bring into (-1, 1].
        let two = Ratio::from_integer(2);
        let one = Ratio::from_integer(1);
        let mut r = self.0 - two * (self.0 / two).floor();
        if r > one {
            r -= two;
        }
        Self(r)
    }

    fn congruent_mod_two_pi(&self, other: &Self) -> bool {
        (*self - *other).wrap().0.is_zero()
    }

    fn to_radians_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN) * std::f64::consts::PI
    }
}
