use crate::catalog::forms::{f2_pair_form, f3_pair_form, mono, p1_alpha, p1_beta, q, sum, times, PairChoice, BAILEY_PAIRS};
use crate::catalog::{param, Bindings, Constraint, IdentityCase};
use crate::error::Result;
use crate::functions::lambert::{lambert, lambert_odd, LambertSpec};
use crate::functions::reps;
use crate::functions::theta::{borwein_a, borwein_a_character, borwein_a_lambert, phi_sum, psi_sum, Sign};
use crate::monomial::QMonomial;
use crate::pairs::PairSpec;
use crate::poch::{Base, Product};
use crate::series::Series;

fn with_pair(mut case: IdentityCase, choice: PairChoice) -> IdentityCase {
    for (name, value) in choice.params() {
        case = case.bind_free(name, value);
    }
    case
}

fn bailey(choice: PairChoice, b: &Bindings, a: QMonomial, base: Base) -> Result<PairSpec> {
    choice.build(a, None, b, base)
}

fn limit_cases(choice: PairChoice) -> Vec<IdentityCase> {
    let slug = choice.slug();
    let names: Vec<&str> = ["a", "z"].into_iter().chain(choice.params().iter().map(|p| p.0)).collect();
    let t2 = with_pair(
        IdentityCase::new(&format!("thm-t2/{slug}"), "Bailey pair sums equal f1(a,z,q)", "Bailey pair f1 limit")
            .tags(&["bailey", "pairs"])
            .bind_free("a", "2")
            .bind_free("z", "3"),
        choice,
    )
    .constraint(Constraint::distinct(&names))
    .constraint(Constraint::not_one(&names))
    .lhs("pair sums", move |b, t| {
        let pair = bailey(choice, b, param(b, "a")?, Base::ONE)?;
        let z = param(b, "z")?;
        Ok(&p1_beta(&pair, &z, t)? - &p1_alpha(&pair, &z, t)?)
    });
    let t2 = f1_sides(t2);
    let names: Vec<&str> = ["a"].into_iter().chain(choice.params().iter().map(|p| p.0)).collect();
    let base_case = |id: String, title: &str, eq: &str| {
        with_pair(IdentityCase::new(&id, title, eq).tags(&["bailey", "pairs"]).bind_free("a", "2"), choice)
            .constraint(Constraint::distinct(&names))
            .constraint(Constraint::not_one(&names))
    };
    let c4 = base_case(format!("cor-c4/{slug}"), "Bailey pair sums equal f2(a,q)", "Bailey pair f2 limit")
        .lhs("pair sums", move |b, t| f2_pair_form(&bailey(choice, b, param(b, "a")?, Base::ONE)?, t))
        .rhs("f2 series", |b, t| reps::f2_series(&param(b, "a")?, Base::ONE, t))
        .rhs("f2 simple series", |b, t| reps::f2_simple(&param(b, "a")?, Base::ONE, t))
        .rhs("-L_a", |b, t| reps::f2_lambert(&param(b, "a")?, Base::ONE, t));
    let cz1 = base_case(format!("cor-cz1/{slug}"), "Bailey pair sums equal f3(a,q)", "Bailey pair f3 limit")
        .lhs("pair sums", move |b, t| f3_pair_form(&bailey(choice, b, param(b, "a")?, Base::ONE)?, t))
        .rhs("f3 series", |b, t| reps::f3_series(&param(b, "a")?, Base::ONE, t))
        .rhs("f3 simple series", |b, t| reps::f3_simple(&param(b, "a")?, Base::ONE, t))
        .rhs("odd Lambert series", |b, t| reps::f3_lambert(&param(b, "a")?, Base::ONE, t));
    vec![t2, c4, cz1]
}

fn f1_sides(case: IdentityCase) -> IdentityCase {
    case.rhs("f1 series", |b, t| reps::f1_series(&param(b, "a")?, &param(b, "z")?, Base::ONE, t))
        .rhs("f1 simple series", |b, t| reps::f1_simple(&param(b, "a")?, &param(b, "z")?, Base::ONE, t))
        .rhs("L(a/z) - L(a)", |b, t| reps::f1_lambert(&param(b, "a")?, &param(b, "z")?, Base::ONE, t))
}

fn theta_case(id: &str, title: &str, eq: &str) -> IdentityCase {
    IdentityCase::new(id, title, eq).tags(&["theta"])
}

/// `1 + c·s`.
fn one_plus(c: i64, s: Series) -> Series {
    &Series::one(s.order()) + &times(c, s)
}

/// `(1 − q^{e₁}) q^{e₀} / ((1 − q^{e₂})(1 − q^{e₃}))` with exponents linear in `n`.
fn ratio_term(num: i64, pow: i64, den1: i64, den2: i64) -> Product {
    Product::new(q(pow)).factor(&q(num)).over_factor(&q(den1)).over_factor(&q(den2))
}

fn aq_cases() -> Vec<IdentityCase> {
    let mut cases = vec![
        theta_case("aq-entry", "a(q) as Lambert series", "a(q) Lambert series")
            .lhs("lattice sum", |_, t| Ok(borwein_a(t)))
            .rhs("1 + 6 sum (n/3) q^n/(1-q^n)", |_, t| Ok(borwein_a_character(t)))
            .rhs("1 + 6 L(q^-2;q^3) - 6 L(q^-1;q^3)", |_, t| borwein_a_lambert(t)),
        theta_case("aq-cor", "a(q) as two pairs of q-series", "a(q) q-series")
            .lhs("lattice sum", |_, t| Ok(borwein_a(t)))
            .rhs("first display", |_, t| {
                let s1 = sum(1, t, |n| {
                    let n = n as i64;
                    Product::new(q((3 * n * n - n) / 2)).sign(n as u64).over_poch(&q(1), 3, n as u64).over_factor(&q(3 * n))
                })?;
                let s2 = sum(1, t, |n| {
                    let n = n as i64;
                    Product::new(q((3 * n * n + n) / 2)).sign(n as u64).over_poch(&q(2), 3, n as u64).over_factor(&q(3 * n))
                })?;
                Ok(&one_plus(-6, s1) + &times(6, s2))
            })
            .rhs("second display", |_, t| {
                let s1 = sum(1, t, |n| {
                    let n = n as i64;
                    ratio_term(6 * n - 2, 3 * n * n - 2 * n, 3 * n - 2, 3 * n)
                })?;
                let s2 = sum(1, t, |n| {
                    let n = n as i64;
                    ratio_term(6 * n - 1, 3 * n * n - n, 3 * n - 1, 3 * n)
                })?;
                Ok(&one_plus(6, s1) - &times(6, s2))
            }),
        theta_case("aq-slater", "a(q) from Slater's pair written out", "a(q) Slater pair")
            .tags(&["bailey"])
            .bind_free("c", "2")
            .bind_free("d", "3")
            .constraint(Constraint::not_one(&["c", "d"]))
            .lhs("lattice sum", |_, t| Ok(borwein_a(t)))
            .rhs("four printed sums", aq_slater_printed),
        theta_case("aq-slater-limit", "a(q) from Slater's pair with c, d to infinity", "a(q) Slater limit")
            .tags(&["bailey"])
            .lhs("lattice sum", |_, t| Ok(borwein_a(t)))
            .rhs("four printed sums", |_, t| {
                let s1 = sum(1, t, |n| {
                    let n = n as i64;
                    Product::new(q((3 * n * n + n) / 2)).sign(n as u64).over_factor(&q(3 * n))
                })?;
                let s2 = sum(1, t, |n| {
                    let n = n as i64;
                    Product::new(q((3 * n * n - n) / 2)).sign(n as u64).over_factor(&q(3 * n))
                })?;
                let s3 = sum(1, t, |n| {
                    let n = n as i64;
                    ratio_term(6 * n - 1, 6 * n * n - 2 * n, 3 * n - 1, 3 * n)
                })?;
                let s4 = sum(1, t, |n| {
                    let n = n as i64;
                    ratio_term(6 * n - 2, 6 * n * n - 4 * n, 3 * n - 2, 3 * n)
                })?;
                Ok(&(&(&one_plus(6, s1) - &times(6, s2)) - &times(6, s3)) + &times(6, s4))
            }),
    ];
    for choice in [PairChoice::Unit, PairChoice::Trivial, PairChoice::Slater, PairChoice::SlaterLimit, PairChoice::Msz] {
        cases.push(
            with_pair(
                theta_case(&format!("aq-general/{}", choice.slug()), "a(q) from any Bailey pair", "a(q) general Bailey pair").tags(&["bailey", "pairs"]),
                choice,
            )
            .lhs("lattice sum", |_, t| Ok(borwein_a(t)))
            .rhs("pair sums", move |b, t| {
                let p1 = bailey(choice, b, mono("q^-1"), Base::new(3))?;
                let p2 = bailey(choice, b, mono("q^-2"), Base::new(3))?;
                Ok(&one_plus(-6, f2_pair_form(&p2, t)?) + &times(6, f2_pair_form(&p1, t)?))
            }),
        );
    }
    cases
}

fn aq_slater_printed(b: &Bindings, t: i64) -> Result<Series> {
    let (c, d) = (param(b, "c")?, param(b, "d")?);
    let cd = &c * &d;
    let q3 = q(3);
    let s1 = sum(1, t, |n| {
        let k = n as i64;
        Product::new(q((3 * k * k + k) / 2))
            .sign(n)
            .poch(&q3, 3, n - 1)
            .poch(&(&q(2) / &cd), 3, n)
            .over_poch(&(&q(2) / &c), 3, n)
            .over_poch(&(&q(2) / &d), 3, n)
            .over_poch(&q3, 3, n)
    })?;
    let s2 = sum(1, t, |n| {
        let k = n as i64;
        Product::new(q((3 * k * k - k) / 2))
            .sign(n)
            .poch(&q3, 3, n - 1)
            .poch(&(&q(1) / &cd), 3, n)
            .over_poch(&(&q(1) / &c), 3, n)
            .over_poch(&(&q(1) / &d), 3, n)
            .over_poch(&q3, 3, n)
    })?;
    let s3 = sum(1, t, |n| {
        let k = n as i64;
        Product::new(&q(3 * k * k + k) / &cd.pow(k))
            .factor(&q(6 * k - 1))
            .over_factor(&q(-1))
            .poch(&q3, 3, n - 1)
            .poch(&q(-1), 3, n)
            .poch(&c, 3, n)
            .poch(&d, 3, n)
            .over_poch(&(&q(2) / &c), 3, n)
            .over_poch(&(&q(2) / &d), 3, n)
            .over_poch(&q(2), 3, n)
            .over_poch(&q3, 3, n)
    })?;
    let s4 = sum(1, t, |n| {
        let k = n as i64;
        Product::new(&q(3 * k * k - k) / &cd.pow(k))
            .factor(&q(6 * k - 2))
            .over_factor(&q(-2))
            .poch(&q3, 3, n - 1)
            .poch(&q(-2), 3, n)
            .poch(&c, 3, n)
            .poch(&d, 3, n)
            .over_poch(&(&q(1) / &c), 3, n)
            .over_poch(&(&q(1) / &d), 3, n)
            .over_poch(&q(1), 3, n)
            .over_poch(&q3, 3, n)
    })?;
    Ok(&(&(&one_plus(6, s1) - &times(6, s2)) - &times(6, s3)) + &times(6, s4))
}

fn phi_squared(t: i64) -> Series {
    phi_sum(Sign::Plus, Base::ONE, t).pow(2)
}

fn phi2_cases() -> Vec<IdentityCase> {
    vec![
        theta_case("phi2-lambert", "phi(q)^2 as Lambert series", "phi squared Lambert series")
            .lhs("phi(q)^2", |_, t| Ok(phi_squared(t)))
            .rhs("1 + 4 sum q^(4n-3)/(1-q^(4n-3)) - 4 sum q^(4n-1)/(1-q^(4n-1))", |_, t| {
                let l3 = lambert(&LambertSpec::new(q(-3), 4)?, t)?;
                let l1 = lambert(&LambertSpec::new(q(-1), 4)?, t)?;
                Ok(&one_plus(4, l3) - &times(4, l1))
            }),
        theta_case("phi2-cor", "phi(q)^2 as two pairs of q-series", "phi squared q-series")
            .lhs("phi(q)^2", |_, t| Ok(phi_squared(t)))
            .rhs("first display", |_, t| {
                let s1 = sum(1, t, |n| {
                    let k = n as i64;
                    Product::new(q(2 * k * k - k)).sign(n).over_poch(&q(1), 4, n).over_factor(&q(4 * k))
                })?;
                let s2 = sum(1, t, |n| {
                    let k = n as i64;
                    Product::new(q(2 * k * k + k)).sign(n).over_poch(&q(3), 4, n).over_factor(&q(4 * k))
                })?;
                Ok(&one_plus(-4, s1) + &times(4, s2))
            })
            .rhs("second display", |_, t| {
                let s1 = sum(1, t, |n| {
                    let k = n as i64;
                    ratio_term(8 * k - 3, 4 * k * k - 3 * k, 4 * k - 3, 4 * k)
                })?;
                let s2 = sum(1, t, |n| {
                    let k = n as i64;
                    ratio_term(8 * k - 1, 4 * k * k - k, 4 * k - 1, 4 * k)
                })?;
                Ok(&one_plus(4, s1) - &times(4, s2))
            }),
        theta_case("phi2-cd", "phi(q)^2 from Slater's pair written out", "phi squared Slater pair")
            .tags(&["bailey"])
            .bind_free("c", "2")
            .bind_free("d", "3")
            .constraint(Constraint::not_one(&["c", "d"]))
            .lhs("phi(q)^2", |_, t| Ok(phi_squared(t)))
            .rhs("four printed sums", phi2_cd_printed),
        theta_case("phi2-limit", "phi(q)^2 from Slater's pair with c, d to infinity", "phi squared Slater limit")
            .tags(&["bailey"])
            .lhs("phi(q)^2", |_, t| Ok(phi_squared(t)))
            .rhs("four printed sums", |_, t| {
                let s1 = sum(1, t, |n| {
                    let k = n as i64;
                    Product::new(q(2 * k * k + k)).sign(n).over_factor(&q(4 * k))
                })?;
                let s2 = sum(1, t, |n| {
                    let k = n as i64;
                    Product::new(q(2 * k * k - k)).sign(n).over_factor(&q(4 * k))
                })?;
                let s3 = sum(1, t, |n| {
                    let k = n as i64;
                    ratio_term(8 * k - 1, 8 * k * k - 2 * k, 4 * k - 1, 4 * k)
                })?;
                let s4 = sum(1, t, |n| {
                    let k = n as i64;
                    ratio_term(8 * k - 3, 8 * k * k - 6 * k, 4 * k - 3, 4 * k)
                })?;
                Ok(&(&(&one_plus(4, s1) - &times(4, s2)) - &times(4, s3)) + &times(4, s4))
            }),
    ]
}

fn phi2_cd_printed(b: &Bindings, t: i64) -> Result<Series> {
    let (c, d) = (param(b, "c")?, param(b, "d")?);
    let cd = &c * &d;
    let q4 = q(4);
    let s1 = sum(1, t, |n| {
        let k = n as i64;
        Product::new(q(2 * k * k + k))
            .sign(n)
            .poch(&q4, 4, n - 1)
            .poch(&(&q(3) / &cd), 4, n)
            .over_poch(&(&q(3) / &c), 4, n)
            .over_poch(&(&q(3) / &d), 4, n)
            .over_poch(&q4, 4, n)
    })?;
    let s2 = sum(1, t, |n| {
        let k = n as i64;
        Product::new(q(2 * k * k - k))
            .sign(n)
            .poch(&q4, 4, n - 1)
            .poch(&(&q(1) / &cd), 4, n)
            .over_poch(&(&q(1) / &c), 4, n)
            .over_poch(&(&q(1) / &d), 4, n)
            .over_poch(&q4, 4, n)
    })?;
    let s3 = sum(1, t, |n| {
        let k = n as i64;
        Product::new(&q(4 * k * k + 2 * k) / &cd.pow(k))
            .factor(&q(8 * k - 1))
            .over_factor(&q(-1))
            .poch(&q4, 4, n - 1)
            .poch(&q(-1), 4, n)
            .poch(&c, 4, n)
            .poch(&d, 4, n)
            .over_poch(&(&q(3) / &c), 4, n)
            .over_poch(&(&q(3) / &d), 4, n)
            .over_poch(&q(3), 4, n)
            .over_poch(&q4, 4, n)
    })?;
    let s4 = sum(1, t, |n| {
        let k = n as i64;
        Product::new(&q(4 * k * k - 2 * k) / &cd.pow(k))
            .factor(&q(8 * k - 3))
            .over_factor(&q(-3))
            .poch(&q4, 4, n - 1)
            .poch(&q(-3), 4, n)
            .poch(&c, 4, n)
            .poch(&d, 4, n)
            .over_poch(&(&q(1) / &c), 4, n)
            .over_poch(&(&q(1) / &d), 4, n)
            .over_poch(&q(1), 4, n)
            .over_poch(&q4, 4, n)
    })?;
    Ok(&(&(&one_plus(4, s1) - &times(4, s2)) - &times(4, s3)) + &times(4, s4))
}

/// `q ψ³(q³) / ψ(q)` from the theta series.
fn psi_quotient(t: i64) -> Result<Series> {
    let w = t - 1;
    let num = psi_sum(Base::new(3), w).pow(3);
    Ok(num.div(&psi_sum(Base::ONE, w))?.shift(1))
}

fn psi_cases() -> Vec<IdentityCase> {
    let mut cases = vec![
        theta_case("psi-entry", "q psi(q^3)^3/psi(q) as Lambert series", "psi cubic quotient Lambert series")
            .lhs("q psi(q^3)^3/psi(q)", |_, t| psi_quotient(t))
            .rhs("sum q^(3n-2)/(1-q^(6n-4)) - sum q^(3n-1)/(1-q^(6n-2))", |_, t| {
                let s2 = lambert_odd(&LambertSpec::new(q(-2), 3)?, t)?;
                let s1 = lambert_odd(&LambertSpec::new(q(-1), 3)?, t)?;
                Ok(&s2 - &s1)
            }),
        theta_case("psi-cor1", "q psi(q^3)^3/psi(q) as two pairs of q-series", "psi cubic quotient q-series")
            .lhs("q psi(q^3)^3/psi(q)", |_, t| psi_quotient(t))
            .rhs("first display", |_, t| {
                let s1 = sum(1, t, |n| {
                    let k = n as i64;
                    ratio_term(6 * k - 2, (3 * k * k - k) / 2, 3 * k - 2, 3 * k).poch(&-&q(3), 3, n - 1).over_poch(&-&q(1), 3, n)
                })?;
                let s2 = sum(1, t, |n| {
                    let k = n as i64;
                    ratio_term(6 * k - 1, (3 * k * k + k) / 2, 3 * k - 1, 3 * k).poch(&-&q(3), 3, n - 1).over_poch(&-&q(2), 3, n)
                })?;
                Ok(&s1 - &s2)
            })
            .rhs("second display", |_, t| {
                let s1 = sum(1, t, |n| {
                    let k = n as i64;
                    Product::new(q(2 * k)).sign(n).poch(&-&q(3), 3, n - 1).over_factor(&q(3 * k)).over_poch(&q(2), 3, n)
                })?;
                let s2 = sum(1, t, |n| {
                    let k = n as i64;
                    Product::new(q(k)).sign(n).poch(&-&q(3), 3, n - 1).over_factor(&q(3 * k)).over_poch(&q(1), 3, n)
                })?;
                Ok(&s1 - &s2)
            }),
        theta_case("psi-d", "q psi(q^3)^3/psi(q) from the MSZ pair written out", "psi cubic quotient MSZ pair")
            .tags(&["bailey"])
            .bind_free("d", "5")
            .constraint(Constraint::not_one(&["d"]))
            .lhs("q psi(q^3)^3/psi(q)", |_, t| psi_quotient(t))
            .rhs("four printed sums", |b, t| psi_printed(Some(&param(b, "d")?), t)),
        theta_case("psi-limit", "q psi(q^3)^3/psi(q) from the MSZ pair with d to infinity", "psi cubic quotient MSZ limit")
            .tags(&["bailey"])
            .lhs("q psi(q^3)^3/psi(q)", |_, t| psi_quotient(t))
            .rhs("four printed sums", |_, t| psi_printed(None, t)),
    ];
    for choice in [PairChoice::Unit, PairChoice::Trivial, PairChoice::Slater, PairChoice::Msz] {
        cases.push(
            with_pair(
                theta_case(&format!("psi-general/{}", choice.slug()), "q psi(q^3)^3/psi(q) from any Bailey pair", "psi cubic quotient general Bailey pair")
                    .tags(&["bailey", "pairs"]),
                choice,
            )
            .lhs("q psi(q^3)^3/psi(q)", |_, t| psi_quotient(t))
            .rhs("pair sums", move |b, t| {
                let p1 = bailey(choice, b, mono("q^-1"), Base::new(3))?;
                let p2 = bailey(choice, b, mono("q^-2"), Base::new(3))?;
                Ok(&f3_pair_form(&p1, t)? - &f3_pair_form(&p2, t)?)
            }),
        );
    }
    cases
}

/// The four sums obtained from the MSZ pair; `d = None` is the `d → ∞` limit.
fn psi_printed(d: Option<&QMonomial>, t: i64) -> Result<Series> {
    let q6 = &q(6);
    let first = |shift: i64, sgn_base: i64| {
        sum(1, t, move |n| {
            let k = n as i64;
            let mut p = Product::new(q(sgn_base * k)).sign(n).poch(q6, 6, n - 1).over_poch(&q(shift), 6, n).over_poch(&q(3), 3, n);
            if let Some(d) = d {
                let x = &q(shift) / d;
                p = p.poch(&x, 6, n).over_poch(&x, 3, n);
            }
            p
        })
    };
    let s1 = first(2, 2)?;
    let s2 = first(1, 1)?;
    let last = |a: i64, den: i64, pow: fn(i64) -> i64| {
        sum(1, t, move |n| {
            let k = n as i64;
            let mut p = Product::new(q(pow(k)))
                .factor(&q(12 * k + a))
                .over_factor(&q(a))
                .poch(q6, 6, 2 * n - 1)
                .poch(&q(a), 6, n)
                .over_poch(&q(den), 6, 2 * n)
                .over_poch(q6, 6, n);
            match d {
                Some(d) => p = p.poch(d, 6, n).over_poch(&(&q(6 + a) / d), 6, n).over(&d.pow(k)),
                None => p = p.sign(n),
            }
            p
        })
    };
    let (s3, s4) = match d {
        Some(_) => (last(-2, 2, |k| 6 * k * k)?, last(-1, 4, |k| 6 * k * k + 3 * k)?),
        None => (last(-2, 2, |k| 9 * k * k - 3 * k)?, last(-1, 4, |k| 9 * k * k)?),
    };
    Ok(&(&(&s1 - &s2) + &s3) - &s4)
}

pub fn cases() -> Vec<IdentityCase> {
    let mut cases: Vec<IdentityCase> = BAILEY_PAIRS.into_iter().flat_map(limit_cases).collect();
    cases.extend(aq_cases());
    cases.extend(phi2_cases());
    cases.extend(psi_cases());
    cases
}
