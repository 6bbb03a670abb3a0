//! Ramanujan's `φ`, `ψ` and the Borweins' cubic `a(q)`, each with
//! independently built sum and product (or Lambert) forms.

use crate::error::Result;
use crate::functions::lambert::{character_lambert, lambert, LambertSpec};
use crate::monomial::QMonomial;
use crate::poch::{Base, Product};
use crate::series::Series;
use crate::Rational;

fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Argument of `φ`: `q` or `−q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// `φ(±q^m) = Σ_{n∈ℤ} (±1)^n q^{m n²}`.
pub fn phi_sum(sign: Sign, base: Base, order: i64) -> Series {
    let m = base.step();
    let mut terms = vec![(0, int(1))];
    let mut n = 1i64;
    while m * n * n <= order {
        let c = if sign == Sign::Minus && n % 2 == 1 { -2 } else { 2 };
        terms.push((m * n * n, int(c)));
        n += 1;
    }
    Series::from_terms(terms, order)
}

/// `φ(q) = (−q, −q, q²; q²)_∞`, and `φ(−q) = (q, q, q²; q²)_∞`, in base `q^m`.
pub fn phi_product(sign: Sign, base: Base, order: i64) -> Result<Series> {
    let q = base.q();
    let x = if sign == Sign::Plus { -&q } else { q };
    let s = 2 * base.step();
    Product::default().poch_inf(&x, s).poch_inf(&x, s).poch_inf(&base.q_pow(2), s).eval(order)
}

/// `ψ(q^m) = Σ_{n≥0} q^{m n(n+1)/2}`.
pub fn psi_sum(base: Base, order: i64) -> Series {
    let m = base.step();
    let terms = (0..)
        .map(|n: i64| m * n * (n + 1) / 2)
        .take_while(|&e| e <= order)
        .map(|e| (e, int(1)));
    Series::from_terms(terms, order)
}

/// `ψ(q) = (q²; q²)_∞ / (q; q²)_∞` in base `q^m`.
pub fn psi_product(base: Base, order: i64) -> Result<Series> {
    let s = 2 * base.step();
    Product::default().poch_inf(&base.q_pow(2), s).over_poch_inf(&base.q(), s).eval(order)
}

/// `a(q) = Σ_{m,n∈ℤ} q^{m²+mn+n²}` by lattice enumeration.
///
/// `m²+mn+n² ≥ (m²+n²)/2`, so `|m|, |n| ≤ ⌈2√N⌉` covers every point with
/// exponent at most `N`.
pub fn borwein_a(order: i64) -> Series {
    if order < 0 {
        return Series::zero(order);
    }
    let bound = (0..).find(|b| b * b >= 4 * order).unwrap_or(0) + 1;
    let mut counts = vec![0i64; order as usize + 1];
    for m in -bound..=bound {
        for n in -bound..=bound {
            let e = m * m + m * n + n * n;
            if e <= order {
                counts[e as usize] += 1;
            }
        }
    }
    Series::from_coeffs(0, counts.into_iter().map(int).collect(), order)
}

/// The Legendre symbol `(n/3)`.
pub fn legendre3(n: i64) -> i64 {
    match n.rem_euclid(3) {
        1 => 1,
        2 => -1,
        _ => 0,
    }
}

/// `1 + 6 Σ (n/3) qⁿ/(1 − qⁿ)`.
pub fn borwein_a_character(order: i64) -> Series {
    let l = character_lambert(legendre3, order);
    &Series::one(order) + &l.scale(&int(6))
}

/// `1 + 6 Σ q^{3n−2}/(1 − q^{3n−2}) − 6 Σ q^{3n−1}/(1 − q^{3n−1})`.
pub fn borwein_a_lambert(order: i64) -> Result<Series> {
    let l2 = lambert(&LambertSpec::new(QMonomial::q(-2), 3)?, order)?;
    let l1 = lambert(&LambertSpec::new(QMonomial::q(-1), 3)?, order)?;
    Ok(&Series::one(order) + &(&l2 - &l1).scale(&int(6)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(s: &Series, upto: i64) -> Vec<i64> {
        (0..=upto).map(|e| s.coeff(e).to_integer().try_into().unwrap()).collect()
    }

    #[test]
    fn phi_values() {
        assert_eq!(coeffs(&phi_sum(Sign::Plus, Base::ONE, 9), 9), vec![1, 2, 0, 0, 2, 0, 0, 0, 0, 2]);
        assert_eq!(coeffs(&phi_sum(Sign::Minus, Base::ONE, 9), 9), vec![1, -2, 0, 0, 2, 0, 0, 0, 0, -2]);
    }

    #[test]
    fn phi_sum_equals_product() {
        for sign in [Sign::Plus, Sign::Minus] {
            for m in [1, 3] {
                let b = Base::new(m);
                assert_eq!(phi_sum(sign, b, 40), phi_product(sign, b, 40).unwrap());
            }
        }
    }

    #[test]
    fn psi_values() {
        assert_eq!(coeffs(&psi_sum(Base::ONE, 10), 10), vec![1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1]);
        assert_eq!(coeffs(&psi_sum(Base::new(3), 9), 9), vec![1, 0, 0, 1, 0, 0, 0, 0, 0, 1]);
        assert_eq!(psi_sum(Base::ONE, 40), psi_product(Base::ONE, 40).unwrap());
        assert_eq!(psi_sum(Base::new(3), 40), psi_product(Base::new(3), 40).unwrap());
    }

    #[test]
    fn borwein_a_values() {
        assert_eq!(coeffs(&borwein_a(4), 4), vec![1, 6, 0, 6, 6]);
        assert_eq!(borwein_a(0), Series::one(0));
        assert_eq!(borwein_a(40), borwein_a_character(40));
        assert_eq!(borwein_a(40), borwein_a_lambert(40).unwrap());
    }
}
