use crate::catalog::forms::{apply, f2_pair_form, pair_sum, q, sum, times, PairChoice, Seq};
use crate::catalog::{param, Bindings, Constraint, IdentityCase};
use crate::error::Result;
use crate::functions::lambert::{lambert, LambertSpec};
use crate::functions::reps;
use crate::functions::theta::{phi_sum, Sign};
use crate::monomial::QMonomial;
use crate::pairs::PairSpec;
use crate::poch::{Base, Product};
use crate::series::Series;

fn pair(choice: PairChoice, b: &Bindings) -> Result<PairSpec> {
    choice.build(param(b, "a")?, None, b, Base::ONE)
}

fn l_cases() -> Vec<IdentityCase> {
    let reps = IdentityCase::new("La-reps", "L_a(q) as q-series and from Bailey pairs", "L_a q-series")
        .tags(&["lambert", "pairs", "robust"])
        .bind_free("a", "2")
        .constraint(Constraint::not_one(&["a"]))
        .lhs("L_a(q)", |b, t| reps::l_lambert(&param(b, "a")?, Base::ONE, t))
        .rhs("sum (1-aq^2n) q^(n^2) a^n/((1-aq^n)(1-q^n))", |b, t| reps::l_laeq_first(&param(b, "a")?, Base::ONE, t))
        .rhs("-sum q^(n(n+1)/2) (-a)^n/((qa)_n (1-q^n))", |b, t| reps::l_laeq_second(&param(b, "a")?, Base::ONE, t))
        .rhs("unit pair sums", |b, t| Ok(-f2_pair_form(&pair(PairChoice::Unit, b)?, t)?))
        .rhs("trivial pair sums", |b, t| Ok(-f2_pair_form(&pair(PairChoice::Trivial, b)?, t)?));
    let claq = IdentityCase::new("La-claq2", "L_a(q) as infinite products times q-series", "L_a product forms")
        .tags(&["lambert", "robust"])
        .bind_free("a", "2")
        .constraint(Constraint::not_one(&["a"]))
        .lhs("L_a(q)", |b, t| reps::l_lambert(&param(b, "a")?, Base::ONE, t))
        .rhs("-1/(aq)_inf sum n (-a)^n q^(n(n+1)/2)/(q)_n", |b, t| reps::l_claq_first(&param(b, "a")?, Base::ONE, t))
        .rhs("(aq)_inf sum n a^n q^n/(q)_n", |b, t| reps::l_claq_second(&param(b, "a")?, Base::ONE, t));
    vec![reps, claq]
}

/// `(qa/y;q)_∞ / (qa;q)_∞`.
fn peq_ratio(a: &QMonomial, y: &QMonomial) -> Product {
    let qa = &q(1) * a;
    Product::default().poch_inf(&(&qa / y), 1).over_poch_inf(&qa, 1)
}

fn peq(choice: PairChoice) -> IdentityCase {
    let names: Vec<&str> = ["a", "y"].into_iter().chain(choice.params().iter().map(|p| p.0)).collect();
    let mut case = IdentityCase::new(&format!("peq/{}", choice.slug()), "Bailey pair sums with a free parameter y", "Bailey pair y-transformation")
        .tags(&["lambert", "pairs"])
        .bind_free("a", "2")
        .bind_free("y", "5");
    for (name, value) in choice.params() {
        case = case.bind_free(name, value);
    }
    case.constraint(Constraint::distinct(&names))
        .constraint(Constraint::not_one(&names))
        .lhs("pair sums", move |b, t| {
            let p = pair(choice, b)?;
            let (a, y) = (param(b, "a")?, param(b, "y")?);
            let (qq, ratio) = (q(1), -&(&a / &y));
            let w = |n: u64| {
                let k = n as i64;
                Product::new(&ratio.pow(k) * &q(k * (k + 1) / 2)).poch(&(&y * &qq), 1, n - 1)
            };
            let beta = pair_sum(&p, Seq::Beta, t, w)?;
            let alpha = apply(peq_ratio(&a, &y), t, |s| pair_sum(&p, Seq::Alpha, s, |n| w(n).over_poch(&(&(&qq * &a) / &y), 1, n)))?;
            Ok(&beta - &alpha)
        })
        .rhs("((qa/y)_inf/(qa)_inf - 1)/(1-y)", |b, t| {
            let (a, y) = (param(b, "a")?, param(b, "y")?);
            let r = peq_ratio(&a, &y).eval(t)?;
            Product::default().over_factor(&y).apply(&(&r - &Series::one(t)), t)
        })
}

fn phi_cubic(t: i64) -> Result<Series> {
    phi_sum(Sign::Minus, Base::ONE, t).pow(3).div(&phi_sum(Sign::Minus, Base::new(3), t))
}

/// `Σ_{n≥1} n s(n) q^{e(n)} / (q³;q³)_n`, with `s(n) = ±1`.
fn weighted_n(t: i64, alternating: bool, e: impl Fn(i64) -> i64) -> Result<Series> {
    sum(1, t, |n| {
        let k = n as i64;
        let p = Product::new(&QMonomial::int(k) * &q(e(k))).over_poch(&q(3), 3, n);
        if alternating {
            p.sign(n)
        } else {
            p
        }
    })
}

/// `1 − 6/(−q;q³)_∞ Σ n q^{e₁(n)}/(q³;q³)_n + 6/(−q²;q³)_∞ Σ n q^{e₂(n)}/(q³;q³)_n`
/// with `eᵢ(n) = (3n² ± n)/2` chosen by the coefficient pairs.
fn first_display(t: i64, e1: (i64, i64), e2: (i64, i64)) -> Result<Series> {
    let s1 = apply(Product::default().over_poch_inf(&-&q(1), 3), t, |s| weighted_n(s, false, |n| (e1.0 * n * n + e1.1 * n) / 2))?;
    let s2 = apply(Product::default().over_poch_inf(&-&q(2), 3), t, |s| weighted_n(s, false, |n| (e2.0 * n * n + e2.1 * n) / 2))?;
    Ok(&(&Series::one(t) - &times(6, s1)) + &times(6, s2))
}

fn phi_cubic_case() -> IdentityCase {
    IdentityCase::new("phi-cubic", "phi(-q)^3/phi(-q^3) as Lambert and q-series", "cubic theta quotient")
        .tags(&["lambert", "theta"])
        .lhs("phi(-q)^3/phi(-q^3)", |_, t| phi_cubic(t))
        .rhs("1 - 6 sum q^(3n-2)/(1+q^(3n-2)) + 6 sum q^(3n-1)/(1+q^(3n-1))", |_, t| {
            let l2 = lambert(&LambertSpec::new(-&q(-2), 3)?, t)?;
            let l1 = lambert(&LambertSpec::new(-&q(-1), 3)?, t)?;
            Ok(&(&Series::one(t) + &times(6, l2)) - &times(6, l1))
        })
        .rhs("first product display, exponents exchanged", |_, t| first_display(t, (3, -1), (3, 1)))
        .rhs("second product display", |_, t| {
            let s1 = apply(Product::default().poch_inf(&-&q(1), 3), t, |s| weighted_n(s, true, |n| n))?;
            let s2 = apply(Product::default().poch_inf(&-&q(2), 3), t, |s| weighted_n(s, true, |n| 2 * n))?;
            Ok(&(&Series::one(t) + &times(6, s1)) - &times(6, s2))
        })
}

pub fn cases() -> Vec<IdentityCase> {
    let mut cases = l_cases();
    cases.push(peq(PairChoice::Unit));
    cases.push(peq(PairChoice::Trivial));
    cases.push(phi_cubic_case());
    cases
}
