//! q-Pochhammer symbols and products of binomial factors.
//!
//! Every hypergeometric term in this crate is a monomial times a ratio of
//! binomials `(1 − c·q^e)`. [`Product`] collects those factors and expands
//! them with exact O(N) multiply/divide steps, so a term is always produced
//! at exactly the requested order even when some factors carry negative
//! powers of `q`.

use crate::error::{Error, Result};
use crate::monomial::QMonomial;
use crate::series::Series;

/// The base `q^m` that a formula is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Base(pub i64);

impl Base {
    pub const ONE: Base = Base(1);

    pub fn new(m: i64) -> Self {
        assert!(m >= 1, "base step must be positive");
        Base(m)
    }

    pub fn step(self) -> i64 {
        self.0
    }

    /// The base itself, `q^m`.
    pub fn q(self) -> QMonomial {
        QMonomial::q(self.0)
    }

    /// `(q^m)^k`.
    pub fn q_pow(self, k: i64) -> QMonomial {
        QMonomial::q(self.0 * k)
    }

    pub fn doubled(self) -> Base {
        Base(self.0 * 2)
    }
}

/// Length of a Pochhammer symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Length {
    Finite(u64),
    Infinite,
}

/// `coef · Π(1 − num_i) / Π(1 − den_j)` with optional infinite Pochhammers.
#[derive(Clone, Debug)]
pub struct Product {
    coef: QMonomial,
    num: Vec<QMonomial>,
    den: Vec<QMonomial>,
    inf_num: Vec<(QMonomial, i64)>,
    inf_den: Vec<(QMonomial, i64)>,
}

impl Default for Product {
    fn default() -> Self {
        Self::new(QMonomial::one())
    }
}

impl Product {
    pub fn new(coef: QMonomial) -> Self {
        Self { coef, num: Vec::new(), den: Vec::new(), inf_num: Vec::new(), inf_den: Vec::new() }
    }

    pub fn times(mut self, m: &QMonomial) -> Self {
        self.coef = &self.coef * m;
        self
    }

    pub fn over(self, m: &QMonomial) -> Self {
        self.times(&m.inv())
    }

    /// Multiply by `(−1)^n`.
    pub fn sign(self, n: u64) -> Self {
        if n % 2 == 1 {
            self.times(&QMonomial::int(-1))
        } else {
            self
        }
    }

    /// Multiply by `1 − x`.
    pub fn factor(mut self, x: &QMonomial) -> Self {
        self.num.push(x.clone());
        self
    }

    /// Divide by `1 − x`.
    pub fn over_factor(mut self, x: &QMonomial) -> Self {
        self.den.push(x.clone());
        self
    }

    /// Multiply by `(x; q^step)_n`.
    pub fn poch(mut self, x: &QMonomial, step: i64, n: u64) -> Self {
        self.num.extend((0..n as i64).map(|j| x.shift(step * j)));
        self
    }

    /// Divide by `(x; q^step)_n`.
    pub fn over_poch(mut self, x: &QMonomial, step: i64, n: u64) -> Self {
        self.den.extend((0..n as i64).map(|j| x.shift(step * j)));
        self
    }

    /// Multiply by `(x; q^step)_∞`.
    pub fn poch_inf(mut self, x: &QMonomial, step: i64) -> Self {
        assert!(step >= 1);
        self.inf_num.push((x.clone(), step));
        self
    }

    /// Divide by `(x; q^step)_∞`.
    pub fn over_poch_inf(mut self, x: &QMonomial, step: i64) -> Self {
        assert!(step >= 1);
        self.inf_den.push((x.clone(), step));
        self
    }

    /// Multiply by `(x; q^step)_n` for any integer `n`, using
    /// `(x;q)_{−n} = (−1)^n q^{n(n+1)/2} / (x^n (q/x;q)_n)` for negative `n`.
    pub fn poch_signed(self, x: &QMonomial, step: i64, n: i64) -> Self {
        if n >= 0 {
            return self.poch(x, step, n as u64);
        }
        let m = n.unsigned_abs();
        let mi = m as i64;
        self.sign(m)
            .times(&QMonomial::q(step * mi * (mi + 1) / 2))
            .over(&x.pow(mi))
            .over_poch(&(&QMonomial::q(step) / x), step, m)
    }

    /// Divide by `(x; q^step)_n` for any integer `n`.
    pub fn over_poch_signed(self, x: &QMonomial, step: i64, n: i64) -> Self {
        self.merge(Product::default().poch_signed(x, step, n).inverse())
    }

    /// The reciprocal product.
    pub fn inverse(self) -> Self {
        Self { coef: self.coef.inv(), num: self.den, den: self.num, inf_num: self.inf_den, inf_den: self.inf_num }
    }

    /// Multiply by the very-well-poised ratio
    /// `(q√k, −q√k; q^step)_n / (√k, −√k; q^step)_n = (1 − k q^{2·step·n}) / (1 − k)`.
    pub fn vwp(self, k: &QMonomial, step: i64, n: u64) -> Self {
        if n == 0 {
            return self;
        }
        self.factor(&k.shift(2 * step * n as i64)).over_factor(k)
    }

    pub fn merge(mut self, other: Product) -> Self {
        self.coef = &self.coef * &other.coef;
        self.num.extend(other.num);
        self.den.extend(other.den);
        self.inf_num.extend(other.inf_num);
        self.inf_den.extend(other.inf_den);
        self
    }

    fn neg_shift(&self) -> i64 {
        let n: i64 = self.num.iter().map(|x| (-x.exp()).max(0)).sum();
        let d: i64 = self.den.iter().map(|x| (-x.exp()).max(0)).sum();
        let hn: i64 = self.inf_num.iter().map(|(x, r)| head_shift(x, *r)).sum();
        let hd: i64 = self.inf_den.iter().map(|(x, r)| head_shift(x, *r)).sum();
        n + hn - d - hd
    }

    /// Order an input series must be known to for [`Product::apply`] to
    /// reach `target`.
    pub fn input_order(&self, target: i64) -> i64 {
        target - self.coef.exp() + self.neg_shift()
    }

    /// Expands the product to exactly `order`.
    pub fn eval(&self, order: i64) -> Result<Series> {
        let start = order + self.neg_shift();
        let s = Series::monomial(&self.coef, start);
        self.run(s, order)
    }

    /// Multiplies `s` by the product; `s` must be known to
    /// [`Product::input_order`]`(target)` for the result to reach `target`.
    pub fn apply(&self, s: &Series, target: i64) -> Result<Series> {
        self.run(s.scale_monomial(&self.coef), target)
    }

    fn run(&self, start: Series, target: i64) -> Result<Series> {
        let mut num: Vec<QMonomial> = self.num.clone();
        let mut den: Vec<QMonomial> = self.den.clone();
        for (x, r) in &self.inf_num {
            num.extend(head_factors(x, *r));
        }
        for (x, r) in &self.inf_den {
            den.extend(head_factors(x, *r));
        }
        if let Some(x) = den.iter().find(|x| x.is_one()) {
            return Err(Error::Degenerate(format!("denominator factor (1 - {x}) vanishes")));
        }
        if num.iter().any(QMonomial::is_one) {
            return Ok(Series::zero(target));
        }
        // Lower bound on the valuation of everything except the positive
        // tails of the infinite products; tail factors beyond target − low
        // are 1 to the working order.
        let low = start.valuation().unwrap_or(start.order() + 1)
            + num.iter().map(|x| x.exp().min(0)).sum::<i64>()
            - den.iter().map(|x| x.exp().min(0)).sum::<i64>();
        let cutoff = target - low;
        for (x, r) in &self.inf_num {
            num.extend(tail_factors(x, *r, cutoff));
        }
        for (x, r) in &self.inf_den {
            den.extend(tail_factors(x, *r, cutoff));
        }
        let mut s = start;
        for x in &den {
            s = s.div_binomial(x)?;
        }
        for x in &num {
            s = s.mul_binomial(x);
        }
        Ok(s.truncate(target))
    }
}

fn first_positive(x: &QMonomial, r: i64) -> i64 {
    if x.exp() > 0 {
        0
    } else {
        (-x.exp()) / r + 1
    }
}

fn head_factors(x: &QMonomial, r: i64) -> impl Iterator<Item = QMonomial> + '_ {
    (0..first_positive(x, r)).map(move |j| x.shift(r * j))
}

fn head_shift(x: &QMonomial, r: i64) -> i64 {
    head_factors(x, r).map(|f| (-f.exp()).max(0)).sum()
}

fn tail_factors(x: &QMonomial, r: i64, cutoff: i64) -> impl Iterator<Item = QMonomial> + '_ {
    (first_positive(x, r)..)
        .map(move |j| x.shift(r * j))
        .take_while(move |f| f.exp() <= cutoff)
}

/// `(x; q^r)_n = Π_{j<n} (1 − x q^{rj})`.
pub fn poch_finite(x: &QMonomial, r: i64, n: u64, order: i64) -> Result<Series> {
    Product::default().poch(x, r, n).eval(order)
}

/// `(x; q^r)_{−n}` for `n ≥ 1`.
pub fn poch_negative(x: &QMonomial, r: i64, n: u64, order: i64) -> Result<Series> {
    Product::default().poch_signed(x, r, -(n as i64)).eval(order)
}

/// `(x; q^r)_∞` truncated to `order`.
pub fn poch_infinite(x: &QMonomial, r: i64, order: i64) -> Result<Series> {
    Product::default().poch_inf(x, r).eval(order)
}

/// `(x₁, …, x_j; q^r)_n`.
pub fn poch_multi(xs: &[QMonomial], r: i64, n: Length, order: i64) -> Result<Series> {
    let p = xs.iter().fold(Product::default(), |p, x| match n {
        Length::Finite(n) => p.poch(x, r, n),
        Length::Infinite => p.poch_inf(x, r),
    });
    p.eval(order)
}

/// `(1 − k q^{2rn}) / (1 − k)`.
pub fn vwp_ratio(k: &QMonomial, r: i64, n: u64, order: i64) -> Result<Series> {
    if k.is_one() {
        return Err(Error::Degenerate("very-well-poised ratio with k = 1".into()));
    }
    Product::default().vwp(k, r, n).eval(order)
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn rational(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn m(s: &str) -> QMonomial {
        s.parse().unwrap()
    }

    /// Direct multiplication of binomial series, no Product machinery.
    fn oracle_product(factors: &[QMonomial], order: i64) -> Series {
        factors.iter().fold(Series::one(order), |acc, x| {
            let b = &Series::one(order) - &Series::monomial(x, order + 64);
            &acc * &b
        })
    }

    #[test]
    fn finite_examples() {
        let s = poch_finite(&m("q"), 1, 2, 10).unwrap();
        assert_eq!(s, Series::from_terms([(0, rational(1)), (1, rational(-1)), (2, rational(-1)), (3, rational(1))], 10));
        assert_eq!(poch_finite(&m("7"), 1, 0, 10).unwrap(), Series::one(10));
        let s = poch_finite(&m("q^-1"), 1, 1, 10).unwrap();
        assert_eq!(s, Series::from_terms([(-1, rational(-1)), (0, rational(1))], 10));
        assert_eq!(s.order(), 10);
    }

    #[test]
    fn negative_examples() {
        // (2;q)_{-1} = -q / (2 (1 - q/2))
        let s = poch_negative(&m("2"), 1, 1, 12).unwrap();
        let half = Rational::new(1.into(), 2.into());
        for e in 1..=12 {
            let expect = -num_traits::pow(half.clone(), e as usize);
            assert_eq!(s.coeff(e), expect, "q^{e}");
        }
        // (q^2;q)_{-1} = -q / (q^2 (1 - q^{-1})) = 1/(1 - q)
        let s = poch_negative(&m("q^2"), 1, 1, 12).unwrap();
        let direct = Series::monomial(&m("-q^-1"), 40).div(&(&Series::one(40) - &Series::monomial(&m("q^-1"), 40))).unwrap();
        assert!(s.equal_to_order(&direct));
        assert_eq!(s.order(), 12);
        assert_eq!(s, Series::from_coeffs(0, vec![rational(1); 13], 12));
    }

    #[test]
    fn infinite_examples() {
        let s = poch_infinite(&m("q"), 1, 12).unwrap();
        let expect = Series::from_terms(
            [(0, 1), (1, -1), (2, -1), (5, 1), (7, 1), (12, -1)].map(|(e, c)| (e, rational(c))),
            12,
        );
        assert_eq!(s, expect);
        let factors: Vec<_> = (0..=20).map(|j| m("2").shift(j)).collect();
        assert_eq!(poch_infinite(&m("2"), 1, 20).unwrap(), oracle_product(&factors, 20));
        assert_eq!(poch_infinite(&m("q^3"), 3, 2).unwrap(), Series::one(2));
    }

    #[test]
    fn infinite_with_negative_head() {
        let factors: Vec<_> = (0..=40).map(|j| m("3*q^-4").shift(2 * j)).collect();
        let s = poch_infinite(&m("3*q^-4"), 2, 15).unwrap();
        assert_eq!(s.order(), 15);
        assert!(s.equal_to_order(&oracle_product(&factors, 15)));
    }

    #[test]
    fn multi_examples() {
        let sq = poch_multi(&[m("q"), m("q")], 1, Length::Infinite, 20).unwrap();
        let single = poch_infinite(&m("q"), 1, 20).unwrap();
        assert_eq!(sq, &single * &single);
        assert_eq!(poch_multi(&[], 1, Length::Finite(5), 9).unwrap(), Series::one(9));
        assert_eq!(
            poch_multi(&[m("5*q^2")], 2, Length::Finite(3), 9).unwrap(),
            poch_finite(&m("5*q^2"), 2, 3, 9).unwrap()
        );
    }

    #[test]
    fn vwp_examples() {
        assert_eq!(vwp_ratio(&m("3"), 1, 0, 10).unwrap(), Series::one(10));
        let s = vwp_ratio(&m("3"), 1, 1, 10).unwrap();
        let half = Rational::new(1.into(), 2.into());
        assert_eq!(s, Series::from_terms([(0, -half.clone()), (2, half * rational(3))], 10));
        assert!(vwp_ratio(&m("1"), 1, 2, 10).is_err());
    }

    #[test]
    fn vwp_matches_square_root_form() {
        // k = 4 q^2, √k = 2q
        let k = m("4*q^2");
        let rk = m("2*q");
        for n in 0..6 {
            let p = Product::default()
                .poch(&rk.shift(1), 1, n)
                .poch(&(-&rk).shift(1), 1, n)
                .over_poch(&rk, 1, n)
                .over_poch(&-&rk, 1, n);
            assert_eq!(p.eval(20).unwrap(), vwp_ratio(&k, 1, n, 20).unwrap(), "n={n}");
        }
    }

    #[test]
    fn degenerate_denominator_is_reported() {
        let err = Product::default().over_poch(&m("q^-2"), 1, 4).eval(10).unwrap_err();
        assert!(matches!(err, Error::Degenerate(_)));
        assert!(Product::default().poch(&m("q^-2"), 1, 4).eval(10).unwrap().is_zero());
    }

    #[test]
    fn apply_reaches_target() {
        let p = Product::new(m("q^-3")).over_factor(&m("2*q^-1")).factor(&m("5*q^-2"));
        let s = poch_finite(&m("3*q"), 1, 4, p.input_order(12)).unwrap();
        let out = p.apply(&s, 12).unwrap();
        assert_eq!(out.order(), 12);
        let direct = p.eval(40).unwrap() * poch_finite(&m("3*q"), 1, 4, 60).unwrap();
        assert!(out.equal_to_order(&direct));
    }
}
