//! Angle arguments: plain radians (`1.25`) or rational multiples of π
//! (`pi`, `-pi/2`, `3pi/4`, `2*pi`), the latter kept exact.

use std::fmt;
use std::str::FromStr;

use zzsynth::{Angle, PiFraction};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum AngleArg {
    Exact(PiFraction),
    Float(f64),
}

impl AngleArg {
    pub fn radians(&self) -> f64 {
        match self {
            AngleArg::Exact(p) => p.to_radians_f64(),
            AngleArg::Float(x) => *x,
        }
    }
}

impl fmt::Display for AngleArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AngleArg::Exact(p) => write!(f, "{p}"),
            AngleArg::Float(x) => write!(f, "{x}"),
        }
    }
}

impl FromStr for AngleArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let t: String = s.trim().to_ascii_lowercase().replace('π', "pi").split_whitespace().collect();
        let bad = || format!("bad angle '{s}': expected radians or a multiple of pi such as 3pi/4");
        let Some((coeff, rest)) = t.split_once("pi") else {
            return match t.parse::<f64>() {
                Ok(x) if x.is_finite() => Ok(AngleArg::Float(x)),
                _ => Err(bad()),
            };
        };
        let coeff = coeff.strip_suffix('*').unwrap_or(coeff);
        let numer: i64 = match coeff {
            "" | "+" => 1,
            "-" => -1,
            c => c.parse().map_err(|_| bad())?,
        };
        let denom: i64 = match rest {
            "" => 1,
            r => r.strip_prefix('/').and_then(|d| d.parse().ok()).filter(|d| *d > 0).ok_or_else(bad)?,
        };
        Ok(AngleArg::Exact(PiFraction::new(numer, denom)))
    }
}
