//! Parameter values of the form `c·q^e`.

use std::fmt;
use std::ops::{Div, Mul, Neg};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::Rational;

/// A nonzero rational multiple of an integer power of `q`.
///
/// Every parameter (`a`, `k`, `z`, `y`, `ρ₁`, …) is bound to one of these
/// before any series is expanded, so all coefficients stay rational.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QMonomial {
    coeff: Rational,
    exp: i64,
}

impl QMonomial {
    pub fn new(coeff: Rational, exp: i64) -> Result<Self> {
        if coeff.is_zero() {
            return Err(Error::ZeroParameter);
        }
        Ok(Self { coeff, exp })
    }

    /// `n·q^0`. Panics on `n == 0`.
    pub fn int(n: i64) -> Self {
        assert!(n != 0, "zero q-monomial");
        Self { coeff: Rational::from_integer(BigInt::from(n)), exp: 0 }
    }

    /// `(num/den)·q^0`. Panics on a zero numerator or denominator.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(num != 0 && den != 0, "zero in q-monomial ratio");
        Self { coeff: Rational::new(num.into(), den.into()), exp: 0 }
    }

    pub fn constant(coeff: Rational) -> Result<Self> {
        Self::new(coeff, 0)
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    /// `q^e`.
    pub fn q(exp: i64) -> Self {
        Self { coeff: Rational::one(), exp }
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn exp(&self) -> i64 {
        self.exp
    }

    /// True for the value `1` itself, i.e. the factor `1 - x` vanishes.
    pub fn is_one(&self) -> bool {
        self.exp == 0 && self.coeff.is_one()
    }

    pub fn inv(&self) -> Self {
        Self { coeff: self.coeff.recip(), exp: -self.exp }
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inv() } else { self.clone() };
        let k = n.unsigned_abs();
        let coeff = num_traits::pow(base.coeff, k as usize);
        Self { coeff, exp: base.exp * k as i64 }
    }

    /// Shift by `q^e`.
    pub fn shift(&self, e: i64) -> Self {
        Self { coeff: self.coeff.clone(), exp: self.exp + e }
    }

    /// Substitute `q → q^m`.
    pub fn substitute(&self, m: i64) -> Self {
        Self { coeff: self.coeff.clone(), exp: self.exp * m }
    }
}

impl Mul for &QMonomial {
    type Output = QMonomial;
    fn mul(self, rhs: &QMonomial) -> QMonomial {
        QMonomial { coeff: &self.coeff * &rhs.coeff, exp: self.exp + rhs.exp }
    }
}

impl Mul for QMonomial {
    type Output = QMonomial;
    fn mul(self, rhs: QMonomial) -> QMonomial {
        &self * &rhs
    }
}

impl Div for &QMonomial {
    type Output = QMonomial;
    fn div(self, rhs: &QMonomial) -> QMonomial {
        QMonomial { coeff: &self.coeff / &rhs.coeff, exp: self.exp - rhs.exp }
    }
}

impl Div for QMonomial {
    type Output = QMonomial;
    fn div(self, rhs: QMonomial) -> QMonomial {
        &self / &rhs
    }
}

impl Neg for &QMonomial {
    type Output = QMonomial;
    fn neg(self) -> QMonomial {
        QMonomial { coeff: -&self.coeff, exp: self.exp }
    }
}

impl Neg for QMonomial {
    type Output = QMonomial;
    fn neg(self) -> QMonomial {
        -&self
    }
}

impl fmt::Display for QMonomial {
    /// Renders in the wire format accepted by [`FromStr`]: `-3/2*q^-1`, `q^2`, `5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            return write!(f, "{}", self.coeff);
        }
        let q = if self.exp == 1 { "q".to_string() } else { format!("q^{}", self.exp) };
        if self.coeff.is_one() {
            write!(f, "{q}")
        } else if (-&self.coeff).is_one() {
            write!(f, "-{q}")
        } else {
            write!(f, "{}*{q}", self.coeff)
        }
    }
}

/// Parses an exact rational `p/q` (no decimals).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let err = || Error::Parse(s.to_string());
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let valid = |t: &str| {
        let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid(num) || !valid(den) {
        return Err(err());
    }
    let num: BigInt = num.parse().map_err(|_| err())?;
    let den: BigInt = den.parse().map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(num, den))
}

impl FromStr for QMonomial {
    type Err = Error;

    /// Accepts `p/q`, `p/q*q^e`, `p/q * q`, `q^e`, `-q^e`.
    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(err());
        }
        let (coeff_part, q_part) = match t.find('q') {
            Some(i) => {
                let c = t[..i].strip_suffix('*').unwrap_or(&t[..i]);
                (c.to_string(), Some(t[i + 1..].to_string()))
            }
            None => (t.clone(), None),
        };
        let coeff = match coeff_part.as_str() {
            "" | "+" => Rational::one(),
            "-" => -Rational::one(),
            c => parse_rational(c).map_err(|_| err())?,
        };
        let exp = match q_part.as_deref() {
            None => 0,
            Some("") => 1,
            Some(rest) => {
                let e = rest.strip_prefix('^').ok_or_else(err)?;
                let e = e.strip_prefix('(').and_then(|x| x.strip_suffix(')')).unwrap_or(e);
                e.parse::<i64>().map_err(|_| err())?
            }
        };
        if coeff.is_zero() {
            return Err(Error::ZeroParameter);
        }
        Ok(Self { coeff, exp })
    }
}

impl QMonomial {
    pub fn is_negative(&self) -> bool {
        self.coeff.is_negative()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!("2".parse::<QMonomial>().unwrap(), QMonomial::int(2));
        assert_eq!("-1/2*q^-2".parse::<QMonomial>().unwrap(), QMonomial::new(Rational::new((-1).into(), 2.into()), -2).unwrap());
        assert_eq!("q".parse::<QMonomial>().unwrap(), QMonomial::q(1));
        assert_eq!("-q^3".parse::<QMonomial>().unwrap(), -QMonomial::q(3));
        assert_eq!("3/4 * q^(-1)".parse::<QMonomial>().unwrap(), QMonomial::new(Rational::new(3.into(), 4.into()), -1).unwrap());
    }

    #[test]
    fn parse_rejects() {
        for bad in ["", "1.5", "2/0", "0", "x", "q^", "2*q^1.5", "1/2/3"] {
            assert!(bad.parse::<QMonomial>().is_err(), "{bad}");
        }
    }

    #[test]
    fn display_roundtrip() {
        for s in ["2", "-1/2*q^-2", "q", "-q^3", "7/3*q^5"] {
            let m: QMonomial = s.parse().unwrap();
            assert_eq!(m.to_string(), s);
            assert_eq!(m.to_string().parse::<QMonomial>().unwrap(), m);
        }
    }

    #[test]
    fn arithmetic() {
        let a = QMonomial::int(2).shift(-1);
        assert_eq!(&a * &a.inv(), QMonomial::one());
        assert_eq!(a.pow(3), QMonomial::int(8).shift(-3));
        assert_eq!(a.pow(-2), QMonomial::ratio(1, 4).shift(2));
        assert!(!a.is_one());
        assert!((&a / &a).is_one());
    }
}
