//! Truncated Laurent series in `q` with exact rational coefficients.
//!
//! A [`Series`] is known exactly modulo `q^(order+1)`. Every operation
//! tracks how far its result is known, so a result never claims more
//! precision than its inputs justify. Coefficients are never floated.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::QMonomial;
use crate::Rational;

/// Consecutive over-order terms that end [`sum_terms`].
pub const GUARD: usize = 4;

/// Default working order for identity checks.
pub const DEFAULT_ORDER: i64 = 40;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Series {
    /// Exponent of `coeffs[0]`; meaningless (kept at 0) for the zero series.
    val: i64,
    /// Dense coefficients; first and last entries are nonzero.
    coeffs: Vec<Rational>,
    /// The series is exact modulo `q^(order+1)`.
    order: i64,
}

impl Series {
    pub fn zero(order: i64) -> Self {
        Self { val: 0, coeffs: Vec::new(), order }
    }

    pub fn one(order: i64) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: i64) -> Self {
        Self::from_coeffs(0, vec![c], order)
    }

    /// The single term `c·q^e`.
    pub fn monomial(m: &QMonomial, order: i64) -> Self {
        Self::from_coeffs(m.exp(), vec![m.coeff().clone()], order)
    }

    /// Builds `Σ coeffs[i]·q^(val+i)`, dropping anything above `order`.
    pub fn from_coeffs(val: i64, coeffs: Vec<Rational>, order: i64) -> Self {
        let mut s = Self { val, coeffs, order };
        s.canonicalize();
        s
    }

    /// Builds a series from sparse `(exponent, coefficient)` terms; repeated
    /// exponents accumulate.
    pub fn from_terms<I>(terms: I, order: i64) -> Self
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        let terms: Vec<_> = terms.into_iter().filter(|(e, _)| *e <= order).collect();
        let Some(lo) = terms.iter().map(|(e, _)| *e).min() else {
            return Self::zero(order);
        };
        let mut coeffs = vec![Rational::zero(); (order - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        Self::from_coeffs(lo, coeffs, order)
    }

    fn canonicalize(&mut self) {
        let keep = (self.order - self.val + 1).max(0) as usize;
        self.coeffs.truncate(keep);
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.val += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.val = 0;
        }
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient; `None` for the zero series.
    pub fn valuation(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.val)
    }

    /// Valuation, or `order + 1` for the zero series (a lower bound on the true valuation).
    fn val_bound(&self) -> i64 {
        self.valuation().unwrap_or(self.order + 1)
    }

    /// Coefficient of `q^e`. Exponents above `order` are unknown and read as zero.
    pub fn coeff(&self, e: i64) -> Rational {
        if self.is_zero() || e < self.val {
            return Rational::zero();
        }
        self.coeffs.get((e - self.val) as usize).cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero terms as `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.val + i as i64, c))
    }

    /// Forget everything above `order` (never raises the order).
    pub fn truncate(&self, order: i64) -> Self {
        Self::from_coeffs(self.val, self.coeffs.clone(), order.min(self.order))
    }

    /// Exact multiplication by `q^e`.
    pub fn shift(&self, e: i64) -> Self {
        Self { val: self.val + e, coeffs: self.coeffs.clone(), order: self.order + e }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.order);
        }
        Self { val: self.val, coeffs: self.coeffs.iter().map(|x| x * c).collect(), order: self.order }
    }

    /// Exact multiplication by `c·q^e`.
    pub fn scale_monomial(&self, m: &QMonomial) -> Self {
        self.scale(m.coeff()).shift(m.exp())
    }

    /// Substitute `q → q^m` for `m ≥ 1`.
    pub fn substitute(&self, m: i64) -> Self {
        assert!(m >= 1, "substitution power must be positive");
        let order = self.order * m + (m - 1);
        Self::from_terms(self.terms().map(|(e, c)| (e * m, c.clone())), order)
    }

    fn combine(&self, other: &Self, sign: bool) -> Self {
        let order = self.order.min(other.order);
        if other.is_zero() {
            return self.truncate(order);
        }
        if self.is_zero() {
            let o = other.truncate(order);
            return if sign { o } else { -&o };
        }
        let lo = self.val.min(other.val);
        let hi = (self.val + self.coeffs.len() as i64 - 1)
            .max(other.val + other.coeffs.len() as i64 - 1)
            .min(order);
        if hi < lo {
            return Self::zero(order);
        }
        let mut coeffs = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (e, c) in self.terms().take_while(|(e, _)| *e <= hi) {
            coeffs[(e - lo) as usize] += c;
        }
        for (e, c) in other.terms().take_while(|(e, _)| *e <= hi) {
            if sign {
                coeffs[(e - lo) as usize] += c;
            } else {
                coeffs[(e - lo) as usize] -= c;
            }
        }
        Self::from_coeffs(lo, coeffs, order)
    }

    fn product(&self, other: &Self) -> Self {
        let order = (self.order + other.val_bound()).min(other.order + self.val_bound());
        if self.is_zero() || other.is_zero() {
            return Self::zero(order);
        }
        let lo = self.val + other.val;
        if lo > order {
            return Self::zero(order);
        }
        let len = (order - lo + 1) as usize;
        let mut coeffs = vec![Rational::zero(); len.min(self.coeffs.len() + other.coeffs.len() - 1)];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i >= coeffs.len() {
                break;
            }
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(coeffs.len() - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Self::from_coeffs(lo, coeffs, order)
    }

    /// Multiplicative inverse. A series known to order `N` with valuation `v`
    /// has an inverse known to order `N − 2v`.
    pub fn invert(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Degenerate(format!(
                "division by a series that vanishes to order {}",
                self.order
            )));
        }
        let v = self.val;
        let order = self.order - 2 * v;
        let len = (self.order - v + 1) as usize;
        let u0_inv = self.coeffs[0].recip();
        let mut w: Vec<Rational> = Vec::with_capacity(len);
        w.push(u0_inv.clone());
        for k in 1..len {
            let mut acc = Rational::zero();
            for i in 1..=k.min(self.coeffs.len() - 1) {
                let u = &self.coeffs[i];
                if !u.is_zero() {
                    acc += u * &w[k - i];
                }
            }
            w.push(-(acc * &u0_inv));
        }
        Ok(Self::from_coeffs(-v, w, order))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.invert()?)
    }

    pub fn pow(&self, n: u32) -> Self {
        if n == 0 {
            return Self::one(self.order);
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact multiplication by the binomial `1 − c·q^e`.
    pub fn mul_binomial(&self, x: &QMonomial) -> Self {
        let t = self.scale_monomial(x);
        let order = self.order + x.exp().min(0);
        (self - &t).truncate(order)
    }

    /// Exact division by the binomial `1 − c·q^e`.
    pub fn div_binomial(&self, x: &QMonomial) -> Result<Self> {
        let e = x.exp();
        if e == 0 {
            let d = Rational::one() - x.coeff();
            if d.is_zero() {
                return Err(Error::Degenerate("factor (1 - 1) in a denominator".into()));
            }
            return Ok(self.scale(&d.recip()));
        }
        if e < 0 {
            // 1 − c q^e = −c q^e (1 − c⁻¹ q^{−e})
            let pre = (-x).inv();
            return self.scale_monomial(&pre).div_binomial(&x.inv());
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let len = (self.order - self.val + 1) as usize;
        let step = e as usize;
        let c = x.coeff();
        let mut out: Vec<Rational> = Vec::with_capacity(len);
        for i in 0..len {
            let mut b = self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
            if i >= step && !out[i - step].is_zero() {
                b += c * &out[i - step];
            }
            out.push(b);
        }
        Ok(Self::from_coeffs(self.val, out, self.order))
    }

    /// First exponent `≤ upto` where the two series differ, comparing only
    /// up to the shared order.
    pub fn first_mismatch(&self, other: &Self, upto: i64) -> Option<i64> {
        let hi = upto.min(self.order).min(other.order);
        let lo = self.val_bound().min(other.val_bound());
        (lo..=hi).find(|&e| self.coeff(e) != other.coeff(e))
    }

    /// Agreement on every exponent up to `min(order₁, order₂)`.
    pub fn equal_to_order(&self, other: &Self) -> bool {
        self.first_mismatch(other, i64::MAX).is_none()
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        self.combine(rhs, true)
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        self.combine(rhs, false)
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        self.product(rhs)
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series { val: self.val, coeffs: self.coeffs.iter().map(|c| -c).collect(), order: self.order }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Series {
            type Output = Series;
            fn $m(self, rhs: Series) -> Series {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Series> for Series {
            type Output = Series;
            fn $m(self, rhs: &Series) -> Series {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Series {
    type Output = Series;
    fn neg(self) -> Series {
        -&self
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{mag}*q^{e}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order + 1)
    }
}

/// Sums `term(n)` for `n = start, start+1, …`, stopping once [`GUARD`]
/// consecutive terms vanish to `order`.
///
/// Term valuations must eventually grow; if terms at or below `order` keep
/// appearing past a budget derived from the first term's valuation the sum
/// fails with [`Error::NonTermination`].
pub fn sum_terms<F>(start: u64, order: i64, mut term: F) -> Result<Series>
where
    F: FnMut(u64) -> Result<Series>,
{
    let mut acc = Series::zero(order);
    let mut over = 0usize;
    let mut budget: Option<u64> = None;
    let mut n = start;
    loop {
        let t = term(n)?;
        let v = t.valuation();
        let b = *budget.get_or_insert_with(|| {
            let v0 = v.unwrap_or(0).min(0);
            2 * (order - v0).max(0) as u64 + 8 * GUARD as u64
        });
        if v.is_none_or(|v| v > order) {
            over += 1;
        } else {
            over = 0;
        }
        acc = &acc + &t;
        if over >= GUARD {
            return Ok(acc.truncate(order));
        }
        n += 1;
        if n - start > b {
            return Err(Error::NonTermination { terms: (n - start) as usize });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn poly(val: i64, cs: &[i64], order: i64) -> Series {
        Series::from_coeffs(val, cs.iter().map(|&c| r(c)).collect(), order)
    }

    #[test]
    fn add_cancels() {
        let s = poly(0, &[1, -1], 10) + poly(1, &[1], 10);
        assert_eq!(s, Series::one(10));
        assert_eq!(s.order(), 10);
    }

    #[test]
    fn add_zero_identity() {
        let s = poly(-2, &[3, 0, 1], 8);
        assert_eq!(&s + &Series::zero(8), s);
    }

    #[test]
    fn add_laurent_valuation() {
        let s = poly(-1, &[1], 10) + Series::one(10);
        assert_eq!(s.valuation(), Some(-1));
        assert_eq!(s, poly(-1, &[1, 1], 10));
    }

    #[test]
    fn mul_geometric_inverse() {
        let geo = poly(0, &[1; 21], 20);
        let p = poly(0, &[1, -1], 20) * geo;
        assert_eq!(p, Series::one(20));
    }

    #[test]
    fn mul_by_zero() {
        assert!((poly(0, &[1, 2, 3], 10) * Series::zero(10)).is_zero());
    }

    #[test]
    fn mul_valuations_add() {
        let p = poly(-1, &[1], 10) * poly(1, &[1], 10);
        assert_eq!(p.valuation(), Some(0));
        assert!(p.equal_to_order(&Series::one(9)));
    }

    #[test]
    fn invert_examples() {
        let inv = poly(0, &[1, -1], 15).invert().unwrap();
        assert_eq!(inv, poly(0, &[1; 16], 15));
        let inv = Series::monomial(&QMonomial::q(1), 15).invert().unwrap();
        assert_eq!(inv.valuation(), Some(-1));
        assert_eq!(inv.coeff(-1), r(1));
        let half = Series::constant(r(2), 5).invert().unwrap();
        assert_eq!(half.coeff(0), Rational::new(1.into(), 2.into()));
        assert!(matches!(Series::zero(5).invert(), Err(Error::Degenerate(_))));
    }

    #[test]
    fn monomial_examples() {
        let m = Series::monomial(&QMonomial::q(1), 5);
        assert_eq!(m.coeff(1), r(1));
        let m = Series::monomial(&"-1/2*q^-2".parse().unwrap(), 5);
        assert_eq!(m.valuation(), Some(-2));
        assert_eq!(m.coeff(-2), Rational::new((-1).into(), 2.into()));
        assert_eq!(Series::monomial(&QMonomial::int(3), 5), Series::constant(r(3), 5));
        assert!(Series::monomial(&QMonomial::q(7), 5).is_zero());
    }

    #[test]
    fn binomial_ops_exact() {
        let x: QMonomial = "3*q^-2".parse().unwrap();
        let s = poly(0, &[1, 2, 3, 4, 5, 6, 7], 12);
        let back = s.mul_binomial(&x).div_binomial(&x).unwrap();
        assert!(back.equal_to_order(&s));
        assert_eq!(back.order(), 12);
        let y: QMonomial = "2/3*q^3".parse().unwrap();
        let back = s.div_binomial(&y).unwrap().mul_binomial(&y);
        assert!(back.equal_to_order(&s));
        let generic = s.div(&Series::one(40).mul_binomial(&y)).unwrap();
        assert!(generic.equal_to_order(&s.div_binomial(&y).unwrap()));
    }

    #[test]
    fn sum_terms_examples() {
        let s = sum_terms(1, 3, |n| Ok(Series::monomial(&QMonomial::q(n as i64), 3))).unwrap();
        assert_eq!(s, poly(1, &[1, 1, 1], 3));
        let z = sum_terms(1, 3, |_| Ok(Series::zero(3))).unwrap();
        assert!(z.is_zero());
        let sq = sum_terms(1, 10, |n| Ok(Series::monomial(&QMonomial::q((n * n) as i64), 10))).unwrap();
        assert_eq!(sq, Series::from_terms([(1, r(1)), (4, r(1)), (9, r(1))], 10));
    }

    #[test]
    fn sum_terms_guard_trips() {
        let res = sum_terms(1, 10, |_| Ok(Series::one(10)));
        assert!(matches!(res, Err(Error::NonTermination { .. })));
        let res = sum_terms(1, 10, |n| Ok(Series::monomial(&QMonomial::q(-(n as i64)), 10)));
        assert!(matches!(res, Err(Error::NonTermination { .. })));
    }

    #[test]
    fn substitute_scales_exponents() {
        let s = poly(0, &[1, 1, 1], 2).substitute(3);
        assert_eq!(s.order(), 8);
        assert_eq!(s, Series::from_terms([(0, r(1)), (3, r(1)), (6, r(1))], 8));
    }

    #[test]
    fn display() {
        assert_eq!(poly(-1, &[1, 0, -2], 3).to_string(), "q^-1 - 2*q + O(q^4)");
        assert_eq!(Series::zero(2).to_string(), "0 + O(q^3)");
    }
}
