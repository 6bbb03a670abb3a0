//! The series `f(a,k,z,q)` and `g(a,k,y,z,q)` and their companions.
//!
//! Every function takes a [`Base`]: with base `q^m` each `q` in the defining
//! formula becomes `q^m` while the parameters stay monomials in `q`.

use crate::error::Result;
use crate::functions::lambert::{lambert, LambertSpec};
use crate::monomial::QMonomial;
use crate::poch::{Base, Product};
use crate::series::{sum_terms, Series};

/// `f(a,k,z,q) = Σ_{n≥1} (q√k,−q√k,k,z,k/a;q)_n / ((√k,−√k,qk,qk/z,qa;q)_n (1−qⁿ)) (qa/z)ⁿ`,
/// with the `√k` ratio collapsed to `(1 − kq^{2n})/(1 − k)`.
pub fn f(a: &QMonomial, k: &QMonomial, z: &QMonomial, base: Base, order: i64) -> Result<Series> {
    let m = base.step();
    let q = base.q();
    let ka = k / a;
    let qk = &q * k;
    let qkz = &qk / z;
    let qa = &q * a;
    let ratio = &qa / z;
    sum_terms(1, order, |n| {
        Product::new(ratio.pow(n as i64))
            .vwp(k, m, n)
            .poch(k, m, n)
            .poch(z, m, n)
            .poch(&ka, m, n)
            .over_poch(&qk, m, n)
            .over_poch(&qkz, m, n)
            .over_poch(&qa, m, n)
            .over_factor(&base.q_pow(n as i64))
            .eval(order)
    })
}

/// `L(k) + L(a/z) − L(a) − L(k/z)` with `L(x) = Σ x qⁿ/(1 − x qⁿ)`.
pub fn f_lambert(a: &QMonomial, k: &QMonomial, z: &QMonomial, base: Base, order: i64) -> Result<Series> {
    let m = base.step();
    let l = |x: QMonomial| -> Result<Series> { lambert(&LambertSpec::new(x, m)?, order) };
    let s = &l(k.clone())? + &l(a / z)?;
    let t = &l(a.clone())? + &l(k / z)?;
    Ok(&s - &t)
}

/// Closed form of `f(a,k,z,q) − f(1/a,1/k,1/z,q)`:
/// `(a−k)(1−1/z)(1−ak/z) / ((1−a)(1−k)(1−a/z)(1−k/z))`
/// `+ (z/k)·(z,q/z,k/a,qa/k,ak/z,qz/ak,q,q;q)_∞ / (z/k,qk/z,z/a,qa/z,a,q/a,k,q/k;q)_∞`.
pub fn f_closed_form_rhs(a: &QMonomial, k: &QMonomial, z: &QMonomial, base: Base, order: i64) -> Result<Series> {
    let m = base.step();
    let q = base.q();
    let akz = &(a * k) / z;
    let prefactor = Product::new(a.clone())
        .factor(&(k / a))
        .factor(&z.inv())
        .factor(&akz)
        .over_factor(a)
        .over_factor(k)
        .over_factor(&(a / z))
        .over_factor(&(k / z))
        .eval(order)?;
    let num = [z.clone(), &q / z, k / a, &(&q * a) / k, akz.clone(), &q / &akz, q.clone(), q.clone()];
    let den = [z / k, &(&q * k) / z, z / a, &(&q * a) / z, a.clone(), &q / a, k.clone(), &q / k];
    let p = num.iter().fold(Product::new(z / k), |p, x| p.poch_inf(x, m));
    let p = den.iter().fold(p, |p, x| p.over_poch_inf(x, m));
    Ok(&prefactor + &p.eval(order)?)
}

/// `g(a,k,y,z,q) = Σ_{n≥0} (q√k,−q√k,k,y,z,k/a;q)_n / (√k,−√k,qk/y,qk/z,qa,q;q)_n (qa/yz)ⁿ`.
pub fn g(a: &QMonomial, k: &QMonomial, y: &QMonomial, z: &QMonomial, base: Base, order: i64) -> Result<Series> {
    let m = base.step();
    let q = base.q();
    let ka = k / a;
    let qky = &(&q * k) / y;
    let qkz = &(&q * k) / z;
    let qa = &q * a;
    let ratio = &qa / &(y * z);
    sum_terms(0, order, |n| {
        Product::new(ratio.pow(n as i64))
            .vwp(k, m, n)
            .poch(k, m, n)
            .poch(y, m, n)
            .poch(z, m, n)
            .poch(&ka, m, n)
            .over_poch(&qky, m, n)
            .over_poch(&qkz, m, n)
            .over_poch(&qa, m, n)
            .over_poch(&q, m, n)
            .eval(order)
    })
}

/// `(qk, qk/yz, qa/y, qa/z; q)_∞ / (qk/y, qk/z, qa, qa/yz; q)_∞`, the product that `g` sums to.
pub fn g_product(a: &QMonomial, k: &QMonomial, y: &QMonomial, z: &QMonomial, base: Base, order: i64) -> Result<Series> {
    let m = base.step();
    let q = base.q();
    let qk = &q * k;
    let qa = &q * a;
    let yz = y * z;
    Product::default()
        .poch_inf(&qk, m)
        .poch_inf(&(&qk / &yz), m)
        .poch_inf(&(&qa / y), m)
        .poch_inf(&(&qa / z), m)
        .over_poch_inf(&(&qk / y), m)
        .over_poch_inf(&(&qk / z), m)
        .over_poch_inf(&qa, m)
        .over_poch_inf(&(&qa / &yz), m)
        .eval(order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> QMonomial {
        s.parse().unwrap()
    }

    const N: i64 = 30;

    #[test]
    fn f_vanishes_when_a_equals_k() {
        assert!(f(&m("2"), &m("2"), &m("5"), Base::ONE, N).unwrap().is_zero());
    }

    #[test]
    fn f_equals_lambert_combination() {
        let (a, k, z) = (m("2"), m("3"), m("5"));
        assert_eq!(f(&a, &k, &z, Base::ONE, N).unwrap(), f_lambert(&a, &k, &z, Base::ONE, N).unwrap());
    }

    #[test]
    fn f_doubling() {
        let (a, k, z) = (m("2"), m("3"), m("5"));
        let lhs = &f(&a, &k, &z, Base::ONE, N).unwrap() + &f(&-&a, &-&k, &z, Base::ONE, N).unwrap();
        let rhs = f(&a.pow(2), &k.pow(2), &z.pow(2), Base::new(2), N).unwrap();
        assert_eq!(lhs, &rhs + &rhs);
    }

    #[test]
    fn closed_form() {
        let (a, k, z) = (m("2"), m("3"), m("5"));
        let lhs = &f(&a, &k, &z, Base::ONE, N).unwrap() - &f(&a.inv(), &k.inv(), &z.inv(), Base::ONE, N).unwrap();
        let rhs = f_closed_form_rhs(&a, &k, &z, Base::ONE, N).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn closed_form_vanishes_at_a_equals_k() {
        assert!(f_closed_form_rhs(&m("2"), &m("2"), &m("5"), Base::ONE, N).unwrap().is_zero());
    }

    #[test]
    fn closed_form_antisymmetric() {
        let (a, k, z) = (m("2"), m("3"), m("5"));
        let s = f_closed_form_rhs(&a, &k, &z, Base::ONE, N).unwrap();
        let t = f_closed_form_rhs(&k, &a, &z, Base::ONE, N).unwrap();
        assert!((&s + &t).is_zero());
    }

    #[test]
    fn g_reciprocity_and_product() {
        let (a, k, y, z) = (m("2"), m("3"), m("5"), m("7"));
        let g1 = g(&a, &k, &y, &z, Base::ONE, N).unwrap();
        let g2 = g(&k, &a, &y, &z, Base::ONE, N).unwrap();
        assert_eq!(&g1 * &g2, Series::one(N));
        assert_eq!(g1, g_product(&a, &k, &y, &z, Base::ONE, N).unwrap());
        let ga = g(&a, &a, &y, &z, Base::ONE, N).unwrap();
        assert_eq!(&ga * &ga, Series::one(N));
    }
}
