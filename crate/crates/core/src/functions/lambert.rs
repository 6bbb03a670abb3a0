use num_traits::Zero;

use crate::error::{Error, Result};
use crate::monomial::QMonomial;
use crate::series::Series;
use crate::Rational;

/// `Σ_{n≥1} x q^{rn} / (1 − x q^{rn})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambertSpec {
    pub x: QMonomial,
    pub step: i64,
}

impl LambertSpec {
    pub fn new(x: QMonomial, step: i64) -> Result<Self> {
        let spec = Self { x, step };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<()> {
        if self.step < 1 || self.x.exp() + self.step < 1 {
            return Err(Error::Divergent(format!(
                "Lambert series in {} with step {} has a summand of non-positive valuation",
                self.x, self.step
            )));
        }
        Ok(())
    }
}

/// Expands a Lambert series as the double geometric sum
/// `Σ_{n≥1} Σ_{m≥1} c^m q^{m(e + rn)}`.
pub fn lambert(spec: &LambertSpec, order: i64) -> Result<Series> {
    spec.validate()?;
    geometric_double_sum(&spec.x, spec.step, order, 1, 0)
}

/// `Σ_{n≥1} x q^{rn} / (1 − x² q^{2rn}) = Σ_n Σ_{j≥0} (x q^{rn})^{2j+1}`.
pub fn lambert_odd(spec: &LambertSpec, order: i64) -> Result<Series> {
    spec.validate()?;
    geometric_double_sum(&spec.x, spec.step, order, 2, 1)
}

/// Accumulates `(x q^{rn})^{stride·j + first}` for `n ≥ 1`, `stride·j + first ≥ 1`.
fn geometric_double_sum(x: &QMonomial, r: i64, order: i64, stride: i64, first: i64) -> Result<Series> {
    if order < 1 {
        return Ok(Series::zero(order));
    }
    let mut coeffs = vec![Rational::zero(); order as usize + 1];
    let c = x.coeff();
    let mut n = 1;
    loop {
        let b = x.exp() + r * n;
        if b > order {
            break;
        }
        let mut m = if first == 0 { stride } else { first };
        while m * b <= order {
            coeffs[(m * b) as usize] += num_traits::pow(c.clone(), m as usize);
            m += stride;
        }
        n += 1;
    }
    Ok(Series::from_coeffs(0, coeffs, order))
}

/// `Σ_{n≥1} χ(n) q^n / (1 − q^n)` for an integer-valued `χ`.
pub fn character_lambert(chi: impl Fn(i64) -> i64, order: i64) -> Series {
    let mut terms = Vec::new();
    for n in 1..=order.max(0) {
        let c = chi(n);
        if c == 0 {
            continue;
        }
        terms.extend((1..=order / n).map(|m| (n * m, Rational::from_integer(c.into()))));
    }
    Series::from_terms(terms, order)
}

/// Number of divisors of `n`.
#[cfg(test)]
pub(crate) fn divisor_count(n: i64) -> i64 {
    (1..=n).filter(|d| n % d == 0).count() as i64
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn m(s: &str) -> QMonomial {
        s.parse().unwrap()
    }

    #[test]
    fn divisor_function() {
        let s = lambert(&LambertSpec::new(m("1"), 1).unwrap(), 40).unwrap();
        let first: Vec<i64> = (1..=6).map(|e| s.coeff(e).to_integer().try_into().unwrap()).collect();
        assert_eq!(first, vec![1, 2, 2, 3, 2, 4]);
        for n in 1..=40 {
            assert_eq!(s.coeff(n), Rational::from_integer(divisor_count(n).into()), "d({n})");
        }
        assert!(s.coeff(0).is_zero());
    }

    #[test]
    fn alternating_matches_term_oracle() {
        // x = −q: Σ_n Σ_m (−1)^m q^{m(n+1)}
        let s = lambert(&LambertSpec::new(m("-q"), 1).unwrap(), 30).unwrap();
        let mut oracle = vec![0i64; 31];
        for n in 1..=30 {
            for mm in 1..=30 {
                let e = mm * (n + 1);
                if e <= 30 {
                    oracle[e as usize] += if mm % 2 == 0 { 1 } else { -1 };
                }
            }
        }
        for e in 0..=30 {
            assert_eq!(s.coeff(e), Rational::from_integer(oracle[e as usize].into()));
        }
    }

    #[test]
    fn shifted_step_three() {
        // x = q^-2, step 3: first summand q/(1 − q)
        let s = lambert(&LambertSpec::new(m("q^-2"), 3).unwrap(), 3).unwrap();
        assert_eq!(s.coeff(1), Rational::one());
        assert_eq!(s.coeff(2), Rational::one());
    }

    #[test]
    fn rejects_non_positive_summand() {
        assert!(matches!(LambertSpec::new(m("q^-3"), 3), Err(Error::Divergent(_))));
        assert!(LambertSpec::new(m("q^-3"), 4).is_ok());
    }

    #[test]
    fn odd_lambert_matches_product_form() {
        let spec = LambertSpec::new(m("2*q^-1"), 3).unwrap();
        let direct = lambert_odd(&spec, 25).unwrap();
        let sum = crate::series::sum_terms(1, 25, |n| {
            let x = spec.x.shift(3 * n as i64);
            crate::poch::Product::new(x.clone()).over_factor(&x.pow(2)).eval(25)
        })
        .unwrap();
        assert_eq!(direct, sum);
    }
}
