//! The Bailey-pair limits `f₁`, `f₂`, `f₃` and the Lambert series `L_a`,
//! each with several independently built representations.

use crate::error::Result;
use crate::functions::lambert::{lambert, lambert_odd, LambertSpec};
use crate::monomial::QMonomial;
use crate::poch::{Base, Product};
use crate::series::{sum_terms, Series};

fn triangular(base: Base, n: u64) -> QMonomial {
    let n = n as i64;
    base.q_pow(n * (n + 1) / 2)
}

/// `L_a(q) = Σ_{n≥1} a qⁿ / (1 − a qⁿ)`.
pub fn l_lambert(a: &QMonomial, base: Base, order: i64) -> Result<Series> {
    lambert(&LambertSpec::new(a.clone(), base.step())?, order)
}

/// `−Σ (q√a,−q√a,a,z;q)_n q^{n(n+1)/2} / ((√a,−√a,qa,qa/z;q)_n (1−qⁿ)) (−a/z)ⁿ`.
pub fn f1_series(a: &QMonomial, z: &QMonomial, base: Base, order: i64) -> Result<Series> {
    let m = base.step();
    let qa = &base.q() * a;
    let qaz = &qa / z;
    let ratio = -(a / z);
    let s = sum_terms(1, order, |n| {
        Product::new(&ratio.pow(n as i64) * &triangular(base, n))
            .vwp(a, m, n)
            .poch(a, m, n)
            .poch(z, m, n)
            .over_poch(&qa, m, n)
            .over_poch(&qaz, m, n)
            .over_factor(&base.q_pow(n as i64))
            .eval(order)
    })?;
    Ok(-s)
}

/// `Σ (z;q)_n / ((qa;q)_n (1−qⁿ)) (qa/z)ⁿ`.
pub fn f1_simple(a: &QMonomial, z: &QMonomial, base: Base, order: i64) -> Result<Series> {
    let m = base.step();
    let qa = &base.q() * a;
    let ratio = &qa / z;
    sum_terms(1, order, |n| {
        Product::new(ratio.pow(n as i64))
            .poch(z, m, n)
            .over_poch(&qa, m, n)
            .over_factor(&base.q_pow(n as i64))
            .eval(order)
    })
}

/// `L_{a/z}(q) − L_a(q)`.
pub fn f1_lambert(a: &QMonomial, z: &QMonomial, base: Base, order: i64) -> Result<Series> {
    Ok(&l_lambert(&(a / z), base, order)? - &l_lambert(a, base, order)?)
}

pub fn f1(a: &QMonomial, z: &QMonomial, base: Base, order: i64) -> Result<[Series; 3]> {
    Ok([f1_series(a, z, base, order)?, f1_simple(a, z, base, order)?, f1_lambert(a, z, base, order)?])
}

/// `−Σ (1 − a q^{2n}) q^{n²} aⁿ / ((1 − a qⁿ)(1 − qⁿ))`.
pub fn f2_series(a: &QMonomial, base: Base, order: i64) -> Result<Series> {
    Ok(-l_laeq_first(a, base, order)?)
}

/// `Σ q^{n(n+1)/2} (−a)ⁿ / ((qa;q)_n (1 − qⁿ))`.
pub fn f2_simple(a: &QMonomial, base: Base, order: i64) -> Result<Series> {
    let m = base.step();
    let qa = &base.q() * a;
    let na = -a;
    sum_terms(1, order, |n| {
        Product::new(&na.pow(n as i64) * &triangular(base, n))
            .over_poch(&qa, m, n)
            .over_factor(&base.q_pow(n as i64))
            .eval(order)
    })
}

/// `−L_a(q)`.
pub fn f2_lambert(a: &QMonomial, base: Base, order: i64) -> Result<Series> {
    Ok(-l_lambert(a, base, order)?)
}

pub fn f2(a: &QMonomial, base: Base, order: i64) -> Result<[Series; 3]> {
    Ok([f2_series(a, base, order)?, f2_simple(a, base, order)?, f2_lambert(a, base, order)?])
}

/// `−Σ (q√a,−q√a,a;q)_n (−q;q)_{n−1} q^{n(n+1)/2} aⁿ / ((√a,−√a;q)_n (q²a²;q²)_n (1−qⁿ))`.
pub fn f3_series(a: &QMonomial, base: Base, order: i64) -> Result<Series> {
    let m = base.step();
    let q = base.q();
    let q2a2 = &base.q_pow(2) * &a.pow(2);
    let s = sum_terms(1, order, |n| {
        Product::new(&a.pow(n as i64) * &triangular(base, n))
            .vwp(a, m, n)
            .poch(a, m, n)
            .poch(&-&q, m, n - 1)
            .over_poch(&q2a2, 2 * m, n)
            .over_factor(&base.q_pow(n as i64))
            .eval(order)
    })?;
    Ok(-s)
}

/// `Σ (−q;q)_{n−1} (−qa)ⁿ / ((qa;q)_n (1−qⁿ))`.
pub fn f3_simple(a: &QMonomial, base: Base, order: i64) -> Result<Series> {
    let m = base.step();
    let q = base.q();
    let qa = &q * a;
    let ratio = -&qa;
    sum_terms(1, order, |n| {
        Product::new(ratio.pow(n as i64))
            .poch(&-&q, m, n - 1)
            .over_poch(&qa, m, n)
            .over_factor(&base.q_pow(n as i64))
            .eval(order)
    })
}

/// `−Σ a qⁿ / (1 − a² q^{2n})`.
pub fn f3_lambert(a: &QMonomial, base: Base, order: i64) -> Result<Series> {
    Ok(-lambert_odd(&LambertSpec::new(a.clone(), base.step())?, order)?)
}

pub fn f3(a: &QMonomial, base: Base, order: i64) -> Result<[Series; 3]> {
    Ok([f3_series(a, base, order)?, f3_simple(a, base, order)?, f3_lambert(a, base, order)?])
}

/// `Σ (1 − a q^{2n}) q^{n²} aⁿ / ((1 − a qⁿ)(1 − qⁿ))`.
pub fn l_laeq_first(a: &QMonomial, base: Base, order: i64) -> Result<Series> {
    sum_terms(1, order, |n| {
        let n = n as i64;
        Product::new(&a.pow(n) * &base.q_pow(n * n))
            .factor(&(a * &base.q_pow(2 * n)))
            .over_factor(&(a * &base.q_pow(n)))
            .over_factor(&base.q_pow(n))
            .eval(order)
    })
}

/// `−Σ q^{n(n+1)/2} (−a)ⁿ / ((qa;q)_n (1 − qⁿ))`.
pub fn l_laeq_second(a: &QMonomial, base: Base, order: i64) -> Result<Series> {
    Ok(-f2_simple(a, base, order)?)
}

/// `−1/(aq;q)_∞ · Σ n (−a)ⁿ q^{n(n+1)/2} / (q;q)_n`.
pub fn l_claq_first(a: &QMonomial, base: Base, order: i64) -> Result<Series> {
    let m = base.step();
    let q = base.q();
    let outer = Product::new(QMonomial::int(-1)).over_poch_inf(&(a * &q), m);
    let target = outer.input_order(order);
    let na = -a;
    let inner = sum_terms(1, target, |n| {
        Product::new(&(&na.pow(n as i64) * &triangular(base, n)) * &QMonomial::int(n as i64))
            .over_poch(&q, m, n)
            .eval(target)
    })?;
    outer.apply(&inner, order)
}

/// `(aq;q)_∞ · Σ n aⁿ qⁿ / (q;q)_n`.
pub fn l_claq_second(a: &QMonomial, base: Base, order: i64) -> Result<Series> {
    let m = base.step();
    let q = base.q();
    let aq = a * &q;
    let outer = Product::default().poch_inf(&aq, m);
    let target = outer.input_order(order);
    let inner = sum_terms(1, target, |n| {
        Product::new(&aq.pow(n as i64) * &QMonomial::int(n as i64)).over_poch(&q, m, n).eval(target)
    })?;
    outer.apply(&inner, order)
}

/// All five builders of `L_a(q)`: the Lambert series itself, two series
/// forms, and the two infinite-product forms.
pub fn l_all(a: &QMonomial, base: Base, order: i64) -> Result<[Series; 5]> {
    Ok([
        l_lambert(a, base, order)?,
        l_laeq_first(a, base, order)?,
        l_laeq_second(a, base, order)?,
        l_claq_first(a, base, order)?,
        l_claq_second(a, base, order)?,
    ])
}
