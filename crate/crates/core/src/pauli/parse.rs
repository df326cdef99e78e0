//! Text syntax: `"[coeff] I<k><axis> [I<l><axis> …] [+|- …]"`, spins 1-based.
//!
//! Examples: `"2 I1z I2z"`, `"0.5 I1x + 0.5 I1y"`, `"I1x I2x - I1y I2y"`,
//! `"E"`. Axis letters are case-insensitive.

use num_complex::Complex;

use super::{Axis, PauliPolynomial, ProductOperator};
use crate::error::{Error, Result};
use crate::scalar::Real;

struct RawTerm {
    coeff: f64,
    factors: Vec<(usize, Axis)>,
}

/// Parses an operator. `n_spins` defaults to the largest spin index used.
pub fn parse_operator<T: Real>(text: &str, n_spins: Option<usize>) -> Result<PauliPolynomial<T>> {
    let terms = parse_terms(text)?;
    let max_spin = terms.iter().flat_map(|t| t.factors.iter().map(|(k, _)| k + 1)).max().unwrap_or(1);
    let n = match n_spins {
        Some(n) if n < max_spin => {
            return Err(Error::Parse(format!("spin {max_spin} exceeds declared {n} spins")));
        }
        Some(n) => n,
        None => max_spin,
    };
    let ops = terms
        .into_iter()
        .map(|t| ProductOperator::from_axes(n, &t.factors, Complex::new(T::lit(t.coeff), T::zero())))
        .collect::<Result<Vec<_>>>()?;
    PauliPolynomial::from_terms(n, ops)
}

fn parse_terms(text: &str) -> Result<Vec<RawTerm>> {
    let chars: Vec<char> = text.chars().collect();
    let mut pos = 0;
    let mut terms = Vec::new();
    loop {
        skip_ws(&chars, &mut pos);
        if pos >= chars.len() {
            break;
        }
        let mut sign = 1.0;
        if !terms.is_empty() || matches!(chars[pos], '+' | '-') {
            match chars[pos] {
                '+' => pos += 1,
                '-' => {
                    sign = -1.0;
                    pos += 1
                }
                c => return Err(Error::Parse(format!("expected '+' or '-' before term, found '{c}'"))),
            }
            skip_ws(&chars, &mut pos);
        }
        let coeff = parse_number(&chars, &mut pos)?.unwrap_or(1.0) * sign;
        let mut factors = Vec::new();
        loop {
            skip_ws(&chars, &mut pos);
            match chars.get(pos) {
                Some('I') => {
                    pos += 1;
                    let start = pos;
                    while pos < chars.len() && chars[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    let digits: String = chars[start..pos].iter().collect();
                    let spin: usize =
                        digits.parse().map_err(|_| Error::Parse(format!("missing spin index at offset {start}")))?;
                    if spin == 0 {
                        return Err(Error::Parse("spin indices are 1-based".into()));
                    }
                    let axis = match chars.get(pos).map(|c| c.to_ascii_lowercase()) {
                        Some('x') => Axis::X,
                        Some('y') => Axis::Y,
                        Some('z') => Axis::Z,
                        other => return Err(Error::Parse(format!("bad axis {other:?} after I{spin}"))),
                    };
                    pos += 1;
                    factors.push((spin - 1, axis));
                }
                Some('E') => {
                    pos += 1;
                }
                _ => break,
            }
        }
        if !coeff.is_finite() {
            return Err(Error::Parse("non-finite coefficient".into()));
        }
        terms.push(RawTerm { coeff, factors });
    }
    if terms.is_empty() {
        return Err(Error::Parse("empty operator".into()));
    }
    Ok(terms)
}

fn skip_ws(chars: &[char], pos: &mut usize) {
    while *pos < chars.len() && chars[*pos].is_whitespace() {
        *pos += 1;
    }
}

fn parse_number(chars: &[char], pos: &mut usize) -> Result<Option<f64>> {
    let start = *pos;
    let mut i = *pos;
    while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
        i += 1;
    }
    if i == start {
        return Ok(None);
    }
    if i < chars.len() && matches!(chars[i], 'e') {
        let mut j = i + 1;
        if j < chars.len() && matches!(chars[j], '+' | '-') {
            j += 1;
        }
        if j < chars.len() && chars[j].is_ascii_digit() {
            while j < chars.len() && chars[j].is_ascii_digit() {
                j += 1;
            }
            i = j;
        }
    }
    let s: String = chars[start..i].iter().collect();
    let v = s.parse::<f64>().map_err(|e| Error::Parse(format!("bad coefficient '{s}': {e}")))?;
    *pos = i;
    Ok(Some(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_two_spin_product() {
        let p: PauliPolynomial<f64> = parse_operator("2 I1z I2z", None).unwrap();
        assert_eq!(p.n_spins(), 2);
        assert_eq!(p.coeff(&[Axis::Z, Axis::Z]), Complex::new(2.0, 0.0));
    }

    #[test]
    fn parses_sums_and_signs() {
        let p: PauliPolynomial<f64> = parse_operator("0.5 I1x + 0.5 I1Y - 1e-1 I2z", None).unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.coeff(&[Axis::Y, Axis::E]), Complex::new(0.5, 0.0));
        assert_eq!(p.coeff(&[Axis::E, Axis::Z]), Complex::new(-0.1, 0.0));
    }

    #[test]
    fn repeated_spin_multiplies() {
        let p: PauliPolynomial<f64> = parse_operator("I1x I1y", None).unwrap();
        assert_eq!(p.coeff(&[Axis::Z]), Complex::new(0.0, 0.5));
    }

    #[test]
    fn explicit_width_pads() {
        let p: PauliPolynomial<f64> = parse_operator("I1z", Some(3)).unwrap();
        assert_eq!(p.n_spins(), 3);
        assert!(parse_operator::<f64>("I4z", Some(3)).is_err());
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_operator::<f64>("", None).is_err());
        assert!(parse_operator::<f64>("I0x", None).is_err());
        assert!(parse_operator::<f64>("I1q", None).is_err());
        assert!(parse_operator::<f64>("I1x I2x I3", None).is_err());
        assert!(parse_operator::<f64>("I1x ? I2x", None).is_err());
    }
}
