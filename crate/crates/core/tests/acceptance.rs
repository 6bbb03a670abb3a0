//! Acceptance criteria, one line each. Runs without the libtest harness so
//! every line is printed; exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use qseries::catalog::{self, Bindings, Report};
use qseries::check::{verify_all, Status};
use qseries::functions::lambert::{lambert, LambertSpec};
use qseries::functions::reps;
use qseries::functions::theta::{borwein_a, borwein_a_character, phi_product, phi_sum, psi_product, psi_sum, Sign};
use qseries::pairs::{chain_transform, defining_check, make_ab_pair, make_singh_pair};
use qseries::{Base, Product, QMonomial, Rational, Series};

type Outcome = Result<String, String>;

fn m(s: &str) -> QMonomial {
    s.parse().expect("monomial literal")
}

fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn full_catalog() -> Outcome {
    let start = Instant::now();
    let output = Command::new(env!("CARGO_BIN_EXE_qseries"))
        .args(["run", "--all", "--order", "25", "--json"])
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let reports: Vec<Report> = serde_json::from_slice(&output.stdout).map_err(|e| e.to_string())?;
    let failed: Vec<String> = reports.iter().filter(|r| !r.is_pass()).map(|r| r.to_string()).collect();
    if !failed.is_empty() {
        return Err(failed.join("; "));
    }
    if output.status.code() != Some(0) {
        return Err(format!("exit status {:?}", output.status.code()));
    }
    if reports.len() < 30 {
        return Err(format!("only {} cases registered", reports.len()));
    }
    if elapsed > Duration::from_secs(120) {
        return Err(format!("took {:.1}s", elapsed.as_secs_f64()));
    }
    Ok(format!("`run --all --order 25` exits 0, {} cases pass in {:.1}s", reports.len(), elapsed.as_secs_f64()))
}

fn chain_preservation() -> Outcome {
    let singh = make_singh_pair(m("2"), m("3"), m("7"), m("11"), Base::ONE).map_err(|e| e.to_string())?;
    let ab = make_ab_pair(m("2"), m("3"), Base::ONE).map_err(|e| e.to_string())?;
    let mut lines = Vec::new();
    for pair in [singh, ab] {
        let chained = chain_transform(&pair, m("19"), m("23")).map_err(|e| e.to_string())?;
        let r = defining_check(&chained, 5, 25);
        if !r.is_pass() {
            return Err(format!("{}: {r}", chained.name()));
        }
        lines.push(format!("{} {r}", chained.name()));
    }
    Ok(lines.join(", "))
}

fn f_lemmas() -> Outcome {
    let mut total = 0;
    for id in ["f-antisym", "f-lambert", "f-doubling", "f-closed"] {
        let case = catalog::find(id).ok_or(format!("{id} missing"))?;
        let reports = catalog::run_random(&case, 20_261_016, 10, Some(25));
        let distinct: BTreeSet<_> = reports.iter().map(|r| r.bindings.clone()).collect();
        if distinct.len() != 10 {
            return Err(format!("{id}: only {} distinct bindings", distinct.len()));
        }
        if let Some(bad) = reports.iter().find(|r| !r.is_pass()) {
            return Err(bad.to_string());
        }
        total += reports.len();
    }
    Ok(format!("{total} random prime bindings pass at order 25"))
}

fn multi_representation() -> Outcome {
    const ORDER: i64 = 30;
    let single: [(&str, Base); 5] =
        [("2", Base::ONE), ("5", Base::ONE), ("-7/3", Base::ONE), ("q^-1", Base::new(3)), ("q^-2", Base::new(3))];
    let pairs: [(&str, &str, Base); 5] = [
        ("2", "3", Base::ONE),
        ("5", "7", Base::ONE),
        ("11", "-2", Base::ONE),
        ("q^-1", "5", Base::new(3)),
        ("q^-2", "7", Base::new(3)),
    ];
    let mut checks = 0;
    let mut fail = |name: &str, label: String, r: qseries::check::CheckResult| -> Result<(), String> {
        checks += 1;
        if r.is_pass() {
            Ok(())
        } else {
            Err(format!("{name} at {label}: {r}"))
        }
    };
    for (a, z, base) in pairs {
        let (a, z) = (m(a), m(z));
        let r = verify_all(ORDER, 3, |i, t| Ok(reps::f1(&a, &z, base, t)?[i].clone()));
        fail("f1", format!("a={a} z={z} step {}", base.step()), r)?;
    }
    for (a, base) in single {
        let a = m(a);
        let label = format!("a={a} step {}", base.step());
        fail("f2", label.clone(), verify_all(ORDER, 3, |i, t| Ok(reps::f2(&a, base, t)?[i].clone())))?;
        fail("f3", label.clone(), verify_all(ORDER, 3, |i, t| Ok(reps::f3(&a, base, t)?[i].clone())))?;
        fail("L_a", label, verify_all(ORDER, 5, |i, t| Ok(reps::l_all(&a, base, t)?[i].clone())))?;
    }
    Ok(format!("{checks} binding sets agree at order 30, including step 3 with a = q^-1, q^-2"))
}

fn theta() -> Outcome {
    const ORDER: i64 = 40;
    let compare = |name: &str, a: &Series, b: &Series| -> Result<(), String> {
        match a.first_mismatch(b, ORDER) {
            None if a.order() >= ORDER && b.order() >= ORDER => Ok(()),
            None => Err(format!("{name}: orders {} and {}", a.order(), b.order())),
            Some(e) => Err(format!("{name}: differ at q^{e}")),
        }
    };
    for sign in [Sign::Plus, Sign::Minus] {
        compare("phi", &phi_sum(sign, Base::ONE, ORDER), &phi_product(sign, Base::ONE, ORDER).map_err(|e| e.to_string())?)?;
    }
    compare("psi", &psi_sum(Base::ONE, ORDER), &psi_product(Base::ONE, ORDER).map_err(|e| e.to_string())?)?;
    let a = borwein_a(ORDER);
    compare("a(q)", &a, &borwein_a_character(ORDER))?;
    let head = |s: &Series| -> Vec<Rational> { (0..5).map(|e| s.coeff(e)).collect() };
    let phi = phi_sum(Sign::Plus, Base::ONE, ORDER);
    if head(&phi) != [1, 2, 0, 0, 2].map(int) {
        return Err(format!("phi starts {:?}", head(&phi)));
    }
    if head(&a) != [1, 6, 0, 6, 6].map(int) {
        return Err(format!("a(q) starts {:?}", head(&a)));
    }
    Ok("phi(±q), psi(q) and a(q) agree to order 40; leading coefficients 1,2,0,0,2 and 1,6,0,6,6".into())
}

fn classical_inputs() -> Outcome {
    let mut n = 0;
    for id in ["6psi6", "6phi5", "qbin", "qbin/a0", "qbin/ainf"] {
        let case = catalog::find(id).ok_or(format!("{id} missing"))?;
        let mut reports = vec![catalog::run_check(&case, &Bindings::new(), Some(30)).map_err(|e| e.to_string())?];
        if !case.free.is_empty() {
            reports.extend(catalog::run_random(&case, 30, 2, Some(30)));
        }
        if let Some(bad) = reports.iter().find(|r| !r.is_pass()) {
            return Err(bad.to_string());
        }
        n += reports.len();
    }
    Ok(format!("{n} runs of 6psi6, 6phi5 and the q-binomial cases pass at order 30"))
}

fn negative_control() -> Outcome {
    let mut lines = Vec::new();
    for id in ["aq-entry", "phi2-lambert", "qbin"] {
        let case = catalog::perturbed(&catalog::find(id).ok_or(format!("{id} missing"))?, 20);
        let r = catalog::run_check(&case, &Bindings::new(), Some(25)).map_err(|e| e.to_string())?;
        let at = r.mismatch.as_ref().map(|m| m.exponent);
        if r.status != Status::Mismatch || at != Some(20) || r.matched_order != Some(19) {
            return Err(format!("{r}"));
        }
        lines.push(format!("{id} x (1+q^20) mismatches at q^20"));
    }
    Ok(lines.join(", "))
}

fn oracles() -> Outcome {
    const ORDER: i64 = 40;
    let euler = Product::default().poch_inf(&QMonomial::q(1), 1).eval(ORDER).map_err(|e| e.to_string())?;
    let mut naive = Series::one(ORDER);
    for n in 1..=ORDER {
        naive = &naive * &(&Series::one(ORDER) - &Series::monomial(&QMonomial::q(n), ORDER));
    }
    let mut pentagonal = vec![Rational::zero(); ORDER as usize + 1];
    for k in -6i64..=6 {
        let e = k * (3 * k - 1) / 2;
        if (0..=ORDER).contains(&e) {
            pentagonal[e as usize] = if k % 2 == 0 { Rational::one() } else { -Rational::one() };
        }
    }
    for e in 0..=ORDER {
        if euler.coeff(e) != pentagonal[e as usize] || naive.coeff(e) != pentagonal[e as usize] {
            return Err(format!("(q;q)_inf differs from the pentagonal oracle at q^{e}"));
        }
    }
    let divisors = lambert(&LambertSpec::new(QMonomial::one(), 1).map_err(|e| e.to_string())?, ORDER).map_err(|e| e.to_string())?;
    for n in 1..=ORDER {
        let d = (1..=n).filter(|j| n % j == 0).count() as i64;
        if divisors.coeff(n) != int(d) {
            return Err(format!("Lambert coefficient of q^{n} is {}, expected d(n) = {d}", divisors.coeff(n)));
        }
    }
    Ok("(q;q)_inf matches pentagonal and factor-product oracles, sum q^n/(1-q^n) matches d(n), to order 40".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("full catalog at order 25", full_catalog),
        ("chain preserves WP-Bailey pairs", chain_preservation),
        ("f-function lemmas at random primes", f_lemmas),
        ("multi-representation agreement", multi_representation),
        ("theta cross-checks", theta),
        ("classical summations", classical_inputs),
        ("negative control", negative_control),
        ("coefficient oracles", oracles),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(msg) => println!("criterion {} PASS  {name}: {msg}", i + 1),
            Err(msg) => {
                failures += 1;
                println!("criterion {} FAIL  {name}: {msg}", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
