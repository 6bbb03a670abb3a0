//! Classical summations used as inputs: Bailey's ₆ψ₆, Jackson's ₆φ₅ and the
//! q-binomial theorem with its two limiting cases.

use crate::check::{verify_all, CheckResult};
use crate::error::{Error, Result};
use crate::monomial::QMonomial;
use crate::poch::Product;
use crate::series::{sum_terms, Series};

/// The `₆ψ₆` argument `q a² / (b c d e)`.
fn psi_ratio(a: &QMonomial, b: &QMonomial, c: &QMonomial, d: &QMonomial, e: &QMonomial) -> QMonomial {
    &(&QMonomial::q(1) * &a.pow(2)) / &(&(b * c) * &(d * e))
}

/// `(aq, aq/bc, aq/bd, aq/be, aq/cd, aq/ce, aq/de, q, q/a; q)_∞ /
/// (aq/b, aq/c, aq/d, aq/e, q/b, q/c, q/d, q/e, qa²/bcde; q)_∞`.
pub fn bailey_6psi6_product(a: &QMonomial, b: &QMonomial, c: &QMonomial, d: &QMonomial, e: &QMonomial, order: i64) -> Result<Series> {
    let q = QMonomial::q(1);
    let aq = a * &q;
    let ps = [b, c, d, e];
    let mut p = Product::default().poch_inf(&aq, 1).poch_inf(&q, 1).poch_inf(&(&q / a), 1);
    for i in 0..4 {
        for j in i + 1..4 {
            p = p.poch_inf(&(&aq / &(ps[i] * ps[j])), 1);
        }
    }
    for x in ps {
        p = p.over_poch_inf(&(&aq / x), 1).over_poch_inf(&(&q / x), 1);
    }
    p.over_poch_inf(&psi_ratio(a, b, c, d, e), 1).eval(order)
}

/// The bilateral sum over `n ∈ ℤ`, with negative-index Pochhammer symbols
/// expanded through `(x;q)_{−n} = (−1)ⁿ q^{n(n+1)/2} / (xⁿ (q/x;q)_n)`.
pub fn bailey_6psi6_bilateral(a: &QMonomial, b: &QMonomial, c: &QMonomial, d: &QMonomial, e: &QMonomial, order: i64) -> Result<Series> {
    let ratio = psi_ratio(a, b, c, d, e);
    let aq = a * &QMonomial::q(1);
    let term = |n: i64| {
        let mut p = Product::new(ratio.pow(n)).factor(&a.shift(2 * n)).over_factor(a);
        for x in [b, c, d, e] {
            p = p.poch_signed(x, 1, n).over_poch_signed(&(&aq / x), 1, n);
        }
        p
    };
    let positive = sum_terms(0, order, |n| term(n as i64).eval(order))?;
    let negative = sum_terms(1, order, |n| term(-(n as i64)).eval(order))?;
    Ok(&positive + &negative)
}

/// `1 + Σ_{n≥1} (1−aq^{2n})(b,c,d,e;q)_n / ((1−a)(aq/b,…;q)_n) xⁿ
///  + Σ_{n≥1} (1−q^{2n}/a)(b/a,c/a,d/a,e/a;q)_n / ((1−1/a)(q/b,…;q)_n) xⁿ`.
pub fn bailey_6psi6_unilateral(a: &QMonomial, b: &QMonomial, c: &QMonomial, d: &QMonomial, e: &QMonomial, order: i64) -> Result<Series> {
    let ratio = psi_ratio(a, b, c, d, e);
    let q = QMonomial::q(1);
    let aq = a * &q;
    let ai = a.inv();
    let first = sum_terms(1, order, |n| {
        let mut p = Product::new(ratio.pow(n as i64)).vwp(a, 1, n);
        for x in [b, c, d, e] {
            p = p.poch(x, 1, n).over_poch(&(&aq / x), 1, n);
        }
        p.eval(order)
    })?;
    let second = sum_terms(1, order, |n| {
        let mut p = Product::new(ratio.pow(n as i64)).vwp(&ai, 1, n);
        for x in [b, c, d, e] {
            p = p.poch(&(x / a), 1, n).over_poch(&(&q / x), 1, n);
        }
        p.eval(order)
    })?;
    Ok(&(&Series::one(order) + &first) + &second)
}

/// Product side, bilateral sum and the two unilateral sums all agree.
pub fn bailey_6psi6_check(a: &QMonomial, b: &QMonomial, c: &QMonomial, d: &QMonomial, e: &QMonomial, order: i64) -> CheckResult {
    verify_all(order, 3, |i, t| match i {
        0 => bailey_6psi6_product(a, b, c, d, e, t),
        1 => bailey_6psi6_unilateral(a, b, c, d, e, t),
        _ => bailey_6psi6_bilateral(a, b, c, d, e, t),
    })
}

/// `Σ_{n≥0} (a,q√a,−q√a,b,c,d;q)_n / (q,√a,−√a,aq/b,aq/c,aq/d;q)_n (aq/bcd)ⁿ`.
pub fn jackson_6phi5_sum(a: &QMonomial, b: &QMonomial, c: &QMonomial, d: &QMonomial, order: i64) -> Result<Series> {
    let q = QMonomial::q(1);
    let aq = a * &q;
    let ratio = &aq / &(&(b * c) * d);
    sum_terms(0, order, |n| {
        let mut p = Product::new(ratio.pow(n as i64)).vwp(a, 1, n).poch(a, 1, n).over_poch(&q, 1, n);
        for x in [b, c, d] {
            p = p.poch(x, 1, n).over_poch(&(&aq / x), 1, n);
        }
        p.eval(order)
    })
}

/// `(aq, aq/bc, aq/bd, aq/cd; q)_∞ / (aq/b, aq/c, aq/d, aq/bcd; q)_∞`.
pub fn jackson_6phi5_product(a: &QMonomial, b: &QMonomial, c: &QMonomial, d: &QMonomial, order: i64) -> Result<Series> {
    let aq = a * &QMonomial::q(1);
    Product::default()
        .poch_inf(&aq, 1)
        .poch_inf(&(&aq / &(b * c)), 1)
        .poch_inf(&(&aq / &(b * d)), 1)
        .poch_inf(&(&aq / &(c * d)), 1)
        .over_poch_inf(&(&aq / b), 1)
        .over_poch_inf(&(&aq / c), 1)
        .over_poch_inf(&(&aq / d), 1)
        .over_poch_inf(&(&aq / &(&(b * c) * d)), 1)
        .eval(order)
}

pub fn jackson_6phi5_check(a: &QMonomial, b: &QMonomial, c: &QMonomial, d: &QMonomial, order: i64) -> CheckResult {
    verify_all(order, 2, |i, t| {
        if i == 0 {
            jackson_6phi5_sum(a, b, c, d, t)
        } else {
            jackson_6phi5_product(a, b, c, d, t)
        }
    })
}

fn require_positive(z: &QMonomial) -> Result<()> {
    if z.exp() < 1 {
        return Err(Error::Divergent(format!("q-binomial argument {z} must have positive valuation")));
    }
    Ok(())
}

/// `Σ_{n≥0} (a;q)_n zⁿ / (q;q)_n`.
pub fn q_binomial_sum(a: &QMonomial, z: &QMonomial, order: i64) -> Result<Series> {
    require_positive(z)?;
    let q = QMonomial::q(1);
    sum_terms(0, order, |n| Product::new(z.pow(n as i64)).poch(a, 1, n).over_poch(&q, 1, n).eval(order))
}

/// `(az;q)_∞ / (z;q)_∞`.
pub fn q_binomial_product(a: &QMonomial, z: &QMonomial, order: i64) -> Result<Series> {
    require_positive(z)?;
    Product::default().poch_inf(&(a * z), 1).over_poch_inf(z, 1).eval(order)
}

/// `Σ zⁿ/(q;q)_n`, the `a = 0` case.
pub fn euler_inverse_sum(z: &QMonomial, order: i64) -> Result<Series> {
    require_positive(z)?;
    let q = QMonomial::q(1);
    sum_terms(0, order, |n| Product::new(z.pow(n as i64)).over_poch(&q, 1, n).eval(order))
}

/// `Σ q^{n(n−1)/2} (−z)ⁿ/(q;q)_n`, the `a → ∞` case.
pub fn euler_sum(z: &QMonomial, order: i64) -> Result<Series> {
    require_positive(z)?;
    let q = QMonomial::q(1);
    let nz = -z;
    sum_terms(0, order, |n| {
        let k = n as i64;
        Product::new(&nz.pow(k) * &QMonomial::q(k * (k - 1) / 2)).over_poch(&q, 1, n).eval(order)
    })
}

pub fn q_binomial_check(a: &QMonomial, z: &QMonomial, order: i64) -> CheckResult {
    verify_all(order, 2, |i, t| if i == 0 { q_binomial_sum(a, z, t) } else { q_binomial_product(a, z, t) })
}

/// `Σ zⁿ/(q;q)_n = 1/(z;q)_∞`.
pub fn q_binomial_zero_check(z: &QMonomial, order: i64) -> CheckResult {
    verify_all(order, 2, |i, t| {
        if i == 0 {
            euler_inverse_sum(z, t)
        } else {
            Product::default().over_poch_inf(z, 1).eval(t)
        }
    })
}

/// `Σ q^{n(n−1)/2}(−z)ⁿ/(q;q)_n = (z;q)_∞`.
pub fn q_binomial_infinity_check(z: &QMonomial, order: i64) -> CheckResult {
    verify_all(order, 2, |i, t| if i == 0 { euler_sum(z, t) } else { Product::default().poch_inf(z, 1).eval(t) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::Status;

    fn m(s: &str) -> QMonomial {
        s.parse().unwrap()
    }

    #[test]
    fn bailey_at_primes() {
        let r = bailey_6psi6_check(&m("4"), &m("2"), &m("3"), &m("5"), &m("7"), 25);
        assert!(r.is_pass(), "{r}");
    }

    #[test]
    fn bailey_with_e_equal_a_is_jackson() {
        let (a, b, c, d) = (m("4"), m("2"), m("3"), m("5"));
        let r = bailey_6psi6_check(&a, &b, &c, &d, &a, 20);
        assert!(r.is_pass(), "{r}");
        let s = bailey_6psi6_product(&a, &b, &c, &d, &a, 20).unwrap();
        assert_eq!(s, jackson_6phi5_product(&a, &b, &c, &d, 20).unwrap());
    }

    #[test]
    fn bailey_terminating_side() {
        let r = bailey_6psi6_check(&m("4"), &m("q^-2"), &m("3"), &m("5"), &m("7"), 20);
        assert!(r.is_pass(), "{r}");
    }

    #[test]
    fn jackson_cases() {
        assert!(jackson_6phi5_check(&m("4"), &m("2"), &m("3"), &m("5"), 30).is_pass());
        assert!(jackson_6phi5_check(&m("2"), &m("3"), &m("5"), &m("7"), 30).is_pass());
        assert!(jackson_6phi5_check(&m("4"), &m("2"), &m("3"), &m("q^-3"), 30).is_pass());
    }

    #[test]
    fn q_binomial_cases() {
        assert!(q_binomial_check(&m("3"), &m("q^2"), 30).is_pass());
        assert!(q_binomial_zero_check(&m("q"), 30).is_pass());
        assert!(q_binomial_infinity_check(&m("q"), 30).is_pass());
    }

    #[test]
    fn q_binomial_rejects_constant_argument() {
        let r = q_binomial_check(&m("3"), &m("2"), 10);
        assert_eq!(r.status, Status::Degenerate);
    }
}
