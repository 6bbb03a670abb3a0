use crate::catalog::forms::{q, sum};
use crate::catalog::{param, Bindings, Constraint, IdentityCase};
use crate::error::Result;
use crate::functions::classical::*;
use crate::functions::f::{g, g_product};
use crate::monomial::QMonomial;
use crate::poch::{Base, Product};
use crate::series::Series;

fn params<const N: usize>(b: &Bindings, names: [&str; N]) -> Result<[QMonomial; N]> {
    let mut out: [QMonomial; N] = std::array::from_fn(|_| QMonomial::one());
    for (slot, name) in out.iter_mut().zip(names) {
        *slot = param(b, name)?;
    }
    Ok(out)
}

fn classical(id: &str, title: &str, eq: &str) -> IdentityCase {
    IdentityCase::new(id, title, eq).tags(&["classical"])
}

/// `Π_x Σ_{n≥0} (x;q)_{−n} q^{n²}` with `(x;q)_{−n}` written as `1/(xq^{−n};q)_n`.
fn negative_by_reflection(xs: &[QMonomial], t: i64) -> Result<Series> {
    sum(0, t, |n| {
        let k = n as i64;
        xs.iter().fold(Product::new(q(k * k)), |p, x| p.over_poch(&(x * &q(-k)), 1, n))
    })
}

fn negative_direct(xs: &[QMonomial], t: i64) -> Result<Series> {
    sum(0, t, |n| {
        let k = n as i64;
        xs.iter().fold(Product::new(q(k * k)), |p, x| p.poch_signed(x, 1, -k))
    })
}

pub fn cases() -> Vec<IdentityCase> {
    vec![
        classical("6psi6", "Bailey's very-well-poised 6psi6 summation", "6psi6 summation")
            .tags(&["robust"])
            .bind_free("a", "11")
            .bind_free("b", "2")
            .bind_free("c", "3")
            .bind_free("d", "5")
            .bind_free("e", "7")
            .constraint(Constraint::distinct(&["a", "b", "c", "d", "e"]))
            .constraint(Constraint::not_one(&["a", "b", "c", "d", "e"]))
            .lhs("infinite products", |b, t| {
                let [a, bb, c, d, e] = params(b, ["a", "b", "c", "d", "e"])?;
                bailey_6psi6_product(&a, &bb, &c, &d, &e, t)
            })
            .rhs("bilateral sum", |b, t| {
                let [a, bb, c, d, e] = params(b, ["a", "b", "c", "d", "e"])?;
                bailey_6psi6_bilateral(&a, &bb, &c, &d, &e, t)
            })
            .rhs("two unilateral sums", |b, t| {
                let [a, bb, c, d, e] = params(b, ["a", "b", "c", "d", "e"])?;
                bailey_6psi6_unilateral(&a, &bb, &c, &d, &e, t)
            }),
        classical("6phi5", "Very-well-poised 6phi5 summation", "6phi5 summation")
            .tags(&["robust"])
            .bind_free("a", "2")
            .bind_free("b", "3")
            .bind_free("c", "5")
            .bind_free("d", "7")
            .constraint(Constraint::distinct(&["a", "b", "c", "d"]))
            .constraint(Constraint::not_one(&["a", "b", "c", "d"]))
            .lhs("series", |b, t| {
                let [a, bb, c, d] = params(b, ["a", "b", "c", "d"])?;
                jackson_6phi5_sum(&a, &bb, &c, &d, t)
            })
            .rhs("infinite products", |b, t| {
                let [a, bb, c, d] = params(b, ["a", "b", "c", "d"])?;
                jackson_6phi5_product(&a, &bb, &c, &d, t)
            }),
        classical("prod6phi5", "Product form of the 6phi5-type series g", "6phi5 product form")
            .tags(&["f"])
            .bind("a", "2")
            .bind("k", "3")
            .bind("y", "5")
            .bind("z", "7")
            .lhs("series", |b, t| {
                let [a, k, y, z] = params(b, ["a", "k", "y", "z"])?;
                g(&a, &k, &y, &z, Base::ONE, t)
            })
            .rhs("infinite products", |b, t| {
                let [a, k, y, z] = params(b, ["a", "k", "y", "z"])?;
                g_product(&a, &k, &y, &z, Base::ONE, t)
            }),
        classical("qbin", "q-binomial theorem", "q-binomial theorem")
            .bind("a", "3")
            .bind("z", "q^2")
            .lhs("series", |b, t| q_binomial_sum(&param(b, "a")?, &param(b, "z")?, t))
            .rhs("(az)_inf/(z)_inf", |b, t| q_binomial_product(&param(b, "a")?, &param(b, "z")?, t)),
        classical("qbin/a0", "q-binomial theorem at a = 0", "Euler's first product")
            .bind("z", "q")
            .lhs("sum z^n/(q)_n", |b, t| euler_inverse_sum(&param(b, "z")?, t))
            .rhs("1/(z)_inf", |b, t| Product::default().over_poch_inf(&param(b, "z")?, 1).eval(t)),
        classical("qbin/ainf", "q-binomial theorem as a tends to infinity", "Euler's second product")
            .bind("z", "q")
            .lhs("sum q^(n(n-1)/2) (-z)^n/(q)_n", |b, t| euler_sum(&param(b, "z")?, t))
            .rhs("(z)_inf", |b, t| Product::default().poch_inf(&param(b, "z")?, 1).eval(t)),
        classical("qneg-consistency", "Negative-length q-Pochhammer symbols", "negative-length Pochhammer")
            .bind("x", "3")
            .bind("y", "2*q")
            .lhs("reflected finite products", |b, t| negative_by_reflection(&params(b, ["x", "y"])?, t))
            .rhs("signed Pochhammer", |b, t| negative_direct(&params(b, ["x", "y"])?, t)),
    ]
}
