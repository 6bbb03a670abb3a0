use crate::catalog::forms::{mono, p1_alpha, p1_beta, sum, times, PairChoice, BAILEY_PAIRS, WP_PAIRS};
use crate::catalog::{param, Bindings, Constraint, IdentityCase, ROBUST_TAG};
use crate::error::Result;
use crate::functions::f::{f, f_closed_form_rhs, f_lambert, g};
use crate::monomial::QMonomial;
use crate::pairs::{insertion_lhs, insertion_rhs, PairAt, PairSpec};
use crate::poch::{Base, Product};
use crate::series::Series;

fn akz(b: &Bindings) -> Result<(QMonomial, QMonomial, QMonomial)> {
    Ok((param(b, "a")?, param(b, "k")?, param(b, "z")?))
}

fn with_pair(mut case: IdentityCase, choice: PairChoice) -> IdentityCase {
    for (name, value) in choice.params() {
        case = case.bind_free(name, value);
    }
    case
}

fn pair_at(choice: PairChoice, b: &Bindings, a: QMonomial, k: Option<QMonomial>, base: Base) -> Result<PairSpec> {
    choice.build(a, k, b, base)
}

/// `P1(a,k,z)`: the β sum minus the α sum of the lemma, for the pair at `(a,k)`.
fn p1(pair: &PairSpec, z: &QMonomial, order: i64) -> Result<Series> {
    Ok(&p1_beta(pair, z, order)? - &p1_alpha(pair, z, order)?)
}

fn wp_constraints(case: IdentityCase, names: &[&str]) -> IdentityCase {
    case.constraint(Constraint::distinct(names)).constraint(Constraint::not_one(names))
}

fn insertion(choice: PairChoice) -> IdentityCase {
    let case = IdentityCase::new(
        &format!("insertion/{}", choice.slug()),
        "WP-Bailey pair inserted into the 6phi5-type transformation",
        "WP-Bailey insertion transformation",
    )
    .tags(&["wp", "pairs"])
    .bind_free("a", "2")
    .bind_free("k", "3")
    .bind_free("y", "13")
    .bind_free("z", "17");
    let mut names = vec!["a", "k", "y", "z"];
    names.extend(choice.params().iter().map(|p| p.0));
    wp_constraints(with_pair(case, choice), &names)
        .lhs("beta side", move |b, t| {
            let pair = pair_at(choice, b, param(b, "a")?, Some(param(b, "k")?), Base::ONE)?;
            insertion_lhs(&pair, &param(b, "y")?, &param(b, "z")?, t)
        })
        .rhs("alpha side", move |b, t| {
            let pair = pair_at(choice, b, param(b, "a")?, Some(param(b, "k")?), Base::ONE)?;
            insertion_rhs(&pair, &param(b, "y")?, &param(b, "z")?, t)
        })
}

fn lemma_p1(choice: PairChoice) -> IdentityCase {
    let case = IdentityCase::new(&format!("lemma-p1/{}", choice.slug()), "pair sums reduce to f(a,k,z,q)", "pair sums equal f")
        .tags(&["wp", "pairs", "f"])
        .bind_free("a", "2")
        .bind_free("k", "3")
        .bind_free("z", "5");
    let mut names = vec!["a", "k", "z"];
    names.extend(choice.params().iter().map(|p| p.0));
    wp_constraints(with_pair(case, choice), &names)
        .lhs("pair sums", move |b, t| {
            let (a, k, z) = akz(b)?;
            p1(&pair_at(choice, b, a, Some(k), Base::ONE)?, &z, t)
        })
        .rhs("f series", |b, t| {
            let (a, k, z) = akz(b)?;
            f(&a, &k, &z, Base::ONE, t)
        })
        .rhs("Lambert form", |b, t| {
            let (a, k, z) = akz(b)?;
            f_lambert(&a, &k, &z, Base::ONE, t)
        })
}

fn f_case(id: &str, title: &str, equation: &str) -> IdentityCase {
    wp_constraints(
        IdentityCase::new(id, title, equation)
            .tags(&["f", ROBUST_TAG])
            .bind_free("a", "2")
            .bind_free("k", "3")
            .bind_free("z", "5"),
        &["a", "k", "z"],
    )
}

fn f_lemmas() -> Vec<IdentityCase> {
    vec![
        f_case("f-antisym", "f(a,k,z,q) = -f(k,a,z,q)", "f antisymmetry")
            .lhs("f(a,k,z)", |b, t| {
                let (a, k, z) = akz(b)?;
                f(&a, &k, &z, Base::ONE, t)
            })
            .rhs("-f(k,a,z)", |b, t| {
                let (a, k, z) = akz(b)?;
                Ok(-f(&k, &a, &z, Base::ONE, t)?)
            }),
        f_case("f-lambert", "f(a,k,z,q) as four Lambert series", "f as Lambert series")
            .lhs("f(a,k,z)", |b, t| {
                let (a, k, z) = akz(b)?;
                f(&a, &k, &z, Base::ONE, t)
            })
            .rhs("L(k) + L(a/z) - L(a) - L(k/z)", |b, t| {
                let (a, k, z) = akz(b)?;
                f_lambert(&a, &k, &z, Base::ONE, t)
            }),
        f_case("f-doubling", "f(a,k,z,q) + f(-a,-k,z,q) = 2 f(a^2,k^2,z^2,q^2)", "f doubling")
            .lhs("f(a,k,z) + f(-a,-k,z)", |b, t| {
                let (a, k, z) = akz(b)?;
                Ok(&f(&a, &k, &z, Base::ONE, t)? + &f(&-&a, &-&k, &z, Base::ONE, t)?)
            })
            .rhs("2 f(a^2,k^2,z^2,q^2)", |b, t| {
                let (a, k, z) = akz(b)?;
                Ok(times(2, f(&a.pow(2), &k.pow(2), &z.pow(2), Base::new(2), t)?))
            }),
        f_case("f-closed", "f(a,k,z,q) - f(1/a,1/k,1/z,q) in closed form", "f reciprocal difference closed form")
            .lhs("f(a,k,z) - f(1/a,1/k,1/z)", |b, t| {
                let (a, k, z) = akz(b)?;
                Ok(&f(&a, &k, &z, Base::ONE, t)? - &f(&a.inv(), &k.inv(), &z.inv(), Base::ONE, t)?)
            })
            .rhs("rational part + theta quotient", |b, t| {
                let (a, k, z) = akz(b)?;
                f_closed_form_rhs(&a, &k, &z, Base::ONE, t)
            }),
        wp_constraints(
            IdentityCase::new("g-recip", "g(a,k,y,z,q) g(k,a,y,z,q) = 1", "g reciprocity")
                .tags(&["f"])
                .bind_free("a", "2")
                .bind_free("k", "3")
                .bind_free("y", "5")
                .bind_free("z", "7"),
            &["a", "k", "y", "z"],
        )
        .lhs("g(a,k,y,z) g(k,a,y,z)", |b, t| {
            let (a, k, y, z) = (param(b, "a")?, param(b, "k")?, param(b, "y")?, param(b, "z")?);
            Ok(&g(&a, &k, &y, &z, Base::ONE, t)? * &g(&k, &a, &y, &z, Base::ONE, t)?)
        })
        .rhs("1", |_, t| Ok(Series::one(t))),
    ]
}

fn reciprocal_difference(choice: PairChoice) -> IdentityCase {
    let case = IdentityCase::new(
        &format!("thm1/{}", choice.slug()),
        "WP-Bailey pair at (a,k) and (1/a,1/k) summed to a closed form",
        "WP-Bailey reciprocal closed form",
    )
    .tags(&["wp", "pairs", ROBUST_TAG])
    .bind_free("a", "2")
    .bind_free("k", "3")
    .bind_free("z", "5");
    let mut names = vec!["a", "k", "z"];
    names.extend(choice.params().iter().map(|p| p.0));
    wp_constraints(with_pair(case, choice), &names)
        .lhs("pair sums", move |b, t| {
            let (a, k, z) = akz(b)?;
            let pair = pair_at(choice, b, a.clone(), Some(k.clone()), Base::ONE)?;
            let inv = pair.rebind(PairAt::wp(a.inv(), k.inv(), Base::ONE));
            Ok(&p1(&pair, &z, t)? - &p1(&inv, &z.inv(), t)?)
        })
        .rhs("rational part + theta quotient", |b, t| {
            let (a, k, z) = akz(b)?;
            f_closed_form_rhs(&a, &k, &z, Base::ONE, t)
        })
}

/// `S(a,k,z) + S(−a,−k,z) − 2 S(a²,k²,z²; q²)` for either sum of the lemma.
fn doubled(pair: &PairSpec, z: &QMonomial, order: i64, s: fn(&PairSpec, &QMonomial, i64) -> Result<Series>) -> Result<Series> {
    let PairAt { a, k, .. } = &pair.at;
    let neg = pair.rebind(PairAt { a: -a, k: k.as_ref().map(|k| -k), base: Base::ONE });
    let sq = pair.rebind(PairAt { a: a.pow(2), k: k.as_ref().map(|k| k.pow(2)), base: Base::new(2) });
    let first = &s(pair, z, order)? + &s(&neg, z, order)?;
    Ok(&first - &times(2, s(&sq, &z.pow(2), order)?))
}

fn doubled_difference(choice: PairChoice) -> IdentityCase {
    let wp = choice.is_wp();
    let (id, title, equation) = if wp {
        (format!("thm2/{}", choice.slug()), "pair at (a,k), (-a,-k) and (a^2,k^2;q^2)", "WP-Bailey doubling transformation")
    } else {
        (format!("cor-c33/{}", choice.slug()), "Bailey pair at a, -a and (a^2;q^2)", "Bailey doubling transformation")
    };
    let mut case = IdentityCase::new(&id, title, equation).tags(&["pairs", if wp { "wp" } else { "bailey" }]).bind_free("a", "2");
    let mut names = vec!["a", "z"];
    if wp {
        case = case.tags(&[ROBUST_TAG]).bind_free("k", "3");
        names.push("k");
    }
    case = case.bind_free("z", "5");
    names.extend(choice.params().iter().map(|p| p.0));
    let build = move |b: &Bindings| -> Result<PairSpec> {
        let k = if wp { Some(param(b, "k")?) } else { None };
        pair_at(choice, b, param(b, "a")?, k, Base::ONE)
    };
    wp_constraints(with_pair(case, choice), &names)
        .lhs("beta sums", move |b, t| doubled(&build(b)?, &param(b, "z")?, t, p1_beta))
        .rhs("alpha sums", move |b, t| doubled(&build(b)?, &param(b, "z")?, t, p1_alpha))
}

/// The explicit series for `f(a,k,z,q)` with `(q;q)_{n−1}/(q;q)_n` in place of `1/(1 − qⁿ)`.
fn f_printed(a: &QMonomial, k: &QMonomial, z: &QMonomial, order: i64) -> Result<Series> {
    let q = mono("q");
    let ratio = &(&q * a) / z;
    sum(1, order, |n| {
        Product::new(ratio.pow(n as i64))
            .vwp(k, 1, n)
            .poch(k, 1, n)
            .poch(z, 1, n)
            .poch(&(k / a), 1, n)
            .poch(&q, 1, n - 1)
            .over_poch(&(&q * k), 1, n)
            .over_poch(&(&q * a), 1, n)
            .over_poch(&(&(&q * k) / z), 1, n)
            .over_poch(&q, 1, n)
    })
}

fn printed_corollaries() -> Vec<IdentityCase> {
    let base = |id: &str, title: &str, eq: &str| {
        wp_constraints(
            IdentityCase::new(id, title, eq).tags(&["wp"]).bind_free("a", "2").bind_free("k", "3").bind_free("z", "5"),
            &["a", "k", "z"],
        )
    };
    let closed = |b: &Bindings, t: i64| -> Result<Series> {
        let (a, k, z) = akz(b)?;
        f_closed_form_rhs(&a, &k, &z, Base::ONE, t)
    };
    vec![
        base("f-explicit", "explicit f series at (a,k,z) and (1/a,1/k,1/z)", "explicit f reciprocal difference")
            .lhs("two series", |b, t| {
                let (a, k, z) = akz(b)?;
                Ok(&f_printed(&a, &k, &z, t)? - &f_printed(&a.inv(), &k.inv(), &z.inv(), t)?)
            })
            .rhs("rational part + theta quotient", closed),
        with_pair(base("cor-singh", "Singh's pair written out in the reciprocal identity", "Singh pair summation"), PairChoice::Singh)
            .constraint(Constraint::distinct(&["a", "k", "z", "rho1", "rho2"]))
            .lhs("four printed sums", |b, t| singh_printed(b, t))
            .rhs("rational part + theta quotient", closed),
        base("cor-ab", "Andrews-Berkovich pair written out in the reciprocal identity", "Andrews-Berkovich pair summation")
            .lhs("four printed sums", |b, t| ab_printed(b, t))
            .rhs("rational part + theta quotient", closed),
    ]
}

fn singh_printed(b: &Bindings, order: i64) -> Result<Series> {
    let (a, k, z) = akz(b)?;
    let (r1, r2) = (param(b, "rho1")?, param(b, "rho2")?);
    let q = mono("q");
    let r12 = &r1 * &r2;
    let (ai, ki, zi) = (a.inv(), k.inv(), z.inv());
    let s1 = sum(1, order, |n| {
        Product::new((&(&q * &a) / &z).pow(n as i64))
            .vwp(&k, 1, n)
            .poch(&z, 1, n)
            .poch(&k, 1, n)
            .poch(&(&(&k * &r1) / &a), 1, n)
            .poch(&(&(&k * &r2) / &a), 1, n)
            .poch(&(&(&a * &q) / &r12), 1, n)
            .poch(&q, 1, n - 1)
            .over_poch(&(&q * &k), 1, n)
            .over_poch(&(&(&q * &k) / &z), 1, n)
            .over_poch(&(&(&a * &q) / &r1), 1, n)
            .over_poch(&(&(&a * &q) / &r2), 1, n)
            .over_poch(&(&(&k * &r12) / &a), 1, n)
            .over_poch(&q, 1, n)
    })?;
    let s2 = sum(1, order, |n| {
        Product::new((&(&q * &z) / &a).pow(n as i64))
            .vwp(&ki, 1, n)
            .poch(&zi, 1, n)
            .poch(&ki, 1, n)
            .poch(&(&(&a * &r1) / &k), 1, n)
            .poch(&(&(&a * &r2) / &k), 1, n)
            .poch(&(&q / &(&a * &r12)), 1, n)
            .poch(&q, 1, n - 1)
            .over_poch(&(&q / &k), 1, n)
            .over_poch(&(&(&q * &z) / &k), 1, n)
            .over_poch(&(&q / &(&a * &r1)), 1, n)
            .over_poch(&(&q / &(&a * &r2)), 1, n)
            .over_poch(&(&(&a * &r12) / &k), 1, n)
            .over_poch(&q, 1, n)
    })?;
    let s3 = sum(1, order, |n| {
        Product::new((&(&q * &k) / &z).pow(n as i64))
            .vwp(&a, 1, n)
            .poch(&a, 1, n)
            .poch(&r1, 1, n)
            .poch(&r2, 1, n)
            .poch(&(&(&a.pow(2) * &q) / &(&k * &r12)), 1, n)
            .poch(&z, 1, n)
            .poch(&q, 1, n - 1)
            .over_poch(&(&(&a * &q) / &r1), 1, n)
            .over_poch(&(&(&a * &q) / &r2), 1, n)
            .over_poch(&(&(&k * &r12) / &a), 1, n)
            .over_poch(&(&q * &a), 1, n)
            .over_poch(&(&(&q * &a) / &z), 1, n)
            .over_poch(&q, 1, n)
    })?;
    let s4 = sum(1, order, |n| {
        Product::new((&(&q * &z) / &k).pow(n as i64))
            .vwp(&ai, 1, n)
            .poch(&ai, 1, n)
            .poch(&r1, 1, n)
            .poch(&r2, 1, n)
            .poch(&(&(&k * &q) / &(&a.pow(2) * &r12)), 1, n)
            .poch(&zi, 1, n)
            .poch(&q, 1, n - 1)
            .over_poch(&(&q / &(&a * &r1)), 1, n)
            .over_poch(&(&q / &(&a * &r2)), 1, n)
            .over_poch(&(&(&a * &r12) / &k), 1, n)
            .over_poch(&(&q / &a), 1, n)
            .over_poch(&(&(&q * &z) / &a), 1, n)
            .over_poch(&q, 1, n)
    })?;
    Ok(&(&(&s1 - &s2) - &s3) + &s4)
}

fn ab_printed(b: &Bindings, order: i64) -> Result<Series> {
    let (a, k, z) = akz(b)?;
    let q = mono("q");
    let (ai, ki, zi) = (a.inv(), k.inv(), z.inv());
    let s1 = sum(1, order, |n| {
        Product::new((&(&q * &a) / &z).pow(n as i64))
            .vwp(&k, 1, n)
            .poch(&z, 1, n)
            .poch(&(&k.pow(2) / &(&q * &a.pow(2))), 1, n)
            .poch(&q, 1, n - 1)
            .over_poch(&(&q * &k), 1, n)
            .over_poch(&(&(&q * &k) / &z), 1, n)
            .over_poch(&q, 1, n)
    })?;
    let s2 = sum(1, order, |n| {
        Product::new((&(&q * &z) / &a).pow(n as i64))
            .vwp(&ki, 1, n)
            .poch(&zi, 1, n)
            .poch(&(&a.pow(2) / &(&q * &k.pow(2))), 1, n)
            .poch(&q, 1, n - 1)
            .over_poch(&(&q / &k), 1, n)
            .over_poch(&(&(&q * &z) / &k), 1, n)
            .over_poch(&q, 1, n)
    })?;
    let s3 = sum(1, order, |n| {
        Product::new((&(&q * &k) / &z).pow(n as i64))
            .vwp(&a, 1, n)
            .poch(&a, 1, n)
            .poch(&z, 1, n)
            .poch(&(&k / &(&a * &q)), 1, n)
            .poch(&(&(&q * &a.pow(2)) / &k), 1, 2 * n)
            .poch(&q, 1, n - 1)
            .over_poch(&(&q * &a), 1, n)
            .over_poch(&(&(&q * &a) / &z), 1, n)
            .over_poch(&(&(&a.pow(2) * &q.pow(2)) / &k), 1, n)
            .over_poch(&q, 1, n)
            .over_poch(&k, 1, 2 * n)
    })?;
    let s4 = sum(1, order, |n| {
        Product::new((&(&q * &z) / &k).pow(n as i64))
            .vwp(&ai, 1, n)
            .poch(&ai, 1, n)
            .poch(&zi, 1, n)
            .poch(&(&a / &(&k * &q)), 1, n)
            .poch(&(&(&q * &k) / &a.pow(2)), 1, 2 * n)
            .poch(&q, 1, n - 1)
            .over_poch(&(&q / &a), 1, n)
            .over_poch(&(&(&q * &z) / &a), 1, n)
            .over_poch(&(&(&k * &q.pow(2)) / &a.pow(2)), 1, n)
            .over_poch(&q, 1, n)
            .over_poch(&ki, 1, 2 * n)
    })?;
    Ok(&(&(&s1 - &s2) - &s3) + &s4)
}

pub fn cases() -> Vec<IdentityCase> {
    let mut cases = Vec::new();
    for choice in [PairChoice::Singh, PairChoice::AndrewsBerkovich] {
        cases.push(insertion(choice));
        cases.push(lemma_p1(choice));
    }
    cases.extend(f_lemmas());
    for choice in WP_PAIRS {
        cases.push(reciprocal_difference(choice));
    }
    for choice in [PairChoice::Singh, PairChoice::AndrewsBerkovich] {
        cases.push(doubled_difference(choice));
    }
    for choice in BAILEY_PAIRS {
        cases.push(doubled_difference(choice));
    }
    cases.extend(printed_corollaries());
    cases
}
