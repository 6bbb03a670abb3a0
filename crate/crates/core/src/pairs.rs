//! Bailey and WP-Bailey pairs as parameterized families, the defining
//! relation, Andrews' first WP-Bailey chain and the insertion identity.
//!
//! A pair `(α_n(a,k), β_n(a,k))` is a WP-Bailey pair when `α₀ = β₀ = 1` and
//!
//! ```text
//! β_n(a,k) = Σ_{j=0}^{n} (k/a;q)_{n−j} (k;q)_{n+j} / ((q;q)_{n−j} (aq;q)_{n+j}) α_j(a,k)
//! ```
//!
//! and a Bailey pair when the same holds with `k = 0`.
//!
//! Families are re-bindable: the same family is evaluated at `(a, k)`,
//! `(a, c)` inside the chain, or at `(a², k²)` in base `q²`.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::check::{verify, CheckResult};
use crate::error::{Error, Result};
use crate::monomial::QMonomial;
use crate::poch::{Base, Product};
use crate::series::{sum_terms, Series};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PairKind {
    WP,
    Bailey,
}

/// The point at which a family is evaluated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairAt {
    pub a: QMonomial,
    /// `None` for Bailey pairs, where `k` is absent.
    pub k: Option<QMonomial>,
    pub base: Base,
}

impl PairAt {
    pub fn bailey(a: QMonomial, base: Base) -> Self {
        Self { a, k: None, base }
    }

    pub fn wp(a: QMonomial, k: QMonomial, base: Base) -> Self {
        Self { a, k: Some(k), base }
    }

    fn k(&self) -> Result<&QMonomial> {
        self.k.as_ref().ok_or_else(|| Error::Degenerate("WP-Bailey pair evaluated without k".into()))
    }
}

pub trait PairFamily: Send + Sync + fmt::Debug {
    fn name(&self) -> String;
    fn kind(&self) -> PairKind;
    /// Family-specific parameters beyond `a` and `k`.
    fn params(&self) -> Vec<(&'static str, QMonomial)> {
        Vec::new()
    }
    fn alpha(&self, at: &PairAt, n: u64, order: i64) -> Result<Series>;
    fn beta(&self, at: &PairAt, n: u64, order: i64) -> Result<Series>;
}

/// A family bound to a point.
#[derive(Clone, Debug)]
pub struct PairSpec {
    pub family: Arc<dyn PairFamily>,
    pub at: PairAt,
}

impl PairSpec {
    fn new(family: impl PairFamily + 'static, at: PairAt) -> Result<Self> {
        let spec = Self { family: Arc::new(family), at };
        for n in 0..=2 {
            spec.alpha(n, 0)?;
            spec.beta(n, 0)?;
        }
        Ok(spec)
    }

    pub fn name(&self) -> String {
        self.family.name()
    }

    pub fn kind(&self) -> PairKind {
        self.family.kind()
    }

    pub fn alpha(&self, n: u64, order: i64) -> Result<Series> {
        self.family.alpha(&self.at, n, order)
    }

    pub fn beta(&self, n: u64, order: i64) -> Result<Series> {
        self.family.beta(&self.at, n, order)
    }

    /// The same family at another point.
    pub fn rebind(&self, at: PairAt) -> Self {
        Self { family: Arc::clone(&self.family), at }
    }
}

fn delta(n: u64, order: i64) -> Series {
    if n == 0 {
        Series::one(order)
    } else {
        Series::zero(order)
    }
}

/// Multiplies a product into a series produced on demand at whatever order
/// the product needs.
pub(crate) fn weighted<F>(p: &Product, order: i64, inner: F) -> Result<Series>
where
    F: FnOnce(i64) -> Result<Series>,
{
    p.apply(&inner(p.input_order(order))?, order)
}

fn q_tri(base: Base, n: u64) -> QMonomial {
    let n = n as i64;
    base.q_pow(n * (n - 1) / 2)
}

/// `α_n = (q√a,−q√a,a;q)_n/(√a,−√a,q;q)_n (−1)ⁿ q^{n(n−1)/2}`, `β_n = δ_{n0}`.
#[derive(Debug)]
struct Unit;

impl PairFamily for Unit {
    fn name(&self) -> String {
        "unit".into()
    }
    fn kind(&self) -> PairKind {
        PairKind::Bailey
    }
    fn alpha(&self, at: &PairAt, n: u64, order: i64) -> Result<Series> {
        let m = at.base.step();
        Product::new(q_tri(at.base, n)).sign(n).vwp(&at.a, m, n).poch(&at.a, m, n).over_poch(&at.base.q(), m, n).eval(order)
    }
    fn beta(&self, _: &PairAt, n: u64, order: i64) -> Result<Series> {
        Ok(delta(n, order))
    }
}

/// `α_n = δ_{n0}`, `β_n = 1/(aq,q;q)_n`.
#[derive(Debug)]
struct Trivial;

impl PairFamily for Trivial {
    fn name(&self) -> String {
        "trivial".into()
    }
    fn kind(&self) -> PairKind {
        PairKind::Bailey
    }
    fn alpha(&self, _: &PairAt, n: u64, order: i64) -> Result<Series> {
        Ok(delta(n, order))
    }
    fn beta(&self, at: &PairAt, n: u64, order: i64) -> Result<Series> {
        let (m, q) = (at.base.step(), at.base.q());
        Product::default().over_poch(&(&at.a * &q), m, n).over_poch(&q, m, n).eval(order)
    }
}

#[derive(Debug)]
struct Singh {
    rho1: QMonomial,
    rho2: QMonomial,
}

impl PairFamily for Singh {
    fn name(&self) -> String {
        "singh".into()
    }
    fn kind(&self) -> PairKind {
        PairKind::WP
    }
    fn params(&self) -> Vec<(&'static str, QMonomial)> {
        vec![("rho1", self.rho1.clone()), ("rho2", self.rho2.clone())]
    }
    fn alpha(&self, at: &PairAt, n: u64, order: i64) -> Result<Series> {
        let (a, k, m, q) = (&at.a, at.k()?, at.base.step(), at.base.q());
        let aq = a * &q;
        let r12 = &self.rho1 * &self.rho2;
        Product::new((k / a).pow(n as i64))
            .vwp(a, m, n)
            .poch(a, m, n)
            .poch(&self.rho1, m, n)
            .poch(&self.rho2, m, n)
            .poch(&(&(&aq * a) / &(k * &r12)), m, n)
            .over_poch(&q, m, n)
            .over_poch(&(&aq / &self.rho1), m, n)
            .over_poch(&(&aq / &self.rho2), m, n)
            .over_poch(&(&(k * &r12) / a), m, n)
            .eval(order)
    }
    fn beta(&self, at: &PairAt, n: u64, order: i64) -> Result<Series> {
        let (a, k, m, q) = (&at.a, at.k()?, at.base.step(), at.base.q());
        let aq = a * &q;
        let r12 = &self.rho1 * &self.rho2;
        Product::default()
            .poch(&(&(k * &self.rho1) / a), m, n)
            .poch(&(&(k * &self.rho2) / a), m, n)
            .poch(k, m, n)
            .poch(&(&aq / &r12), m, n)
            .over_poch(&(&aq / &self.rho1), m, n)
            .over_poch(&(&aq / &self.rho2), m, n)
            .over_poch(&(&(k * &r12) / a), m, n)
            .over_poch(&q, m, n)
            .eval(order)
    }
}

/// The Andrews–Berkovich pair.
#[derive(Debug)]
struct AndrewsBerkovich;

impl PairFamily for AndrewsBerkovich {
    fn name(&self) -> String {
        "andrews-berkovich".into()
    }
    fn kind(&self) -> PairKind {
        PairKind::WP
    }
    fn alpha(&self, at: &PairAt, n: u64, order: i64) -> Result<Series> {
        let (a, k, m, q) = (&at.a, at.k()?, at.base.step(), at.base.q());
        let qa2k = &(&q * &a.pow(2)) / k;
        Product::new((k / a).pow(n as i64))
            .vwp(a, m, n)
            .poch(a, m, n)
            .poch(&(k / &(a * &q)), m, n)
            .poch(&qa2k, m, 2 * n)
            .over_poch(&q, m, n)
            .over_poch(&(&qa2k * &q), m, n)
            .over_poch(k, m, 2 * n)
            .eval(order)
    }
    fn beta(&self, at: &PairAt, n: u64, order: i64) -> Result<Series> {
        let (a, k, m, q) = (&at.a, at.k()?, at.base.step(), at.base.q());
        Product::default().poch(&(&k.pow(2) / &(&q * &a.pow(2))), m, n).over_poch(&q, m, n).eval(order)
    }
}

#[derive(Debug)]
struct Slater {
    c: QMonomial,
    d: QMonomial,
}

impl PairFamily for Slater {
    fn name(&self) -> String {
        "slater".into()
    }
    fn kind(&self) -> PairKind {
        PairKind::Bailey
    }
    fn params(&self) -> Vec<(&'static str, QMonomial)> {
        vec![("c", self.c.clone()), ("d", self.d.clone())]
    }
    fn alpha(&self, at: &PairAt, n: u64, order: i64) -> Result<Series> {
        let (a, m, q) = (&at.a, at.base.step(), at.base.q());
        let aq = a * &q;
        let ratio = -&(a / &(&self.c * &self.d));
        Product::new(&ratio.pow(n as i64) * &q_tri(at.base, n + 1))
            .vwp(a, m, n)
            .poch(a, m, n)
            .poch(&self.c, m, n)
            .poch(&self.d, m, n)
            .over_poch(&(&aq / &self.c), m, n)
            .over_poch(&(&aq / &self.d), m, n)
            .over_poch(&q, m, n)
            .eval(order)
    }
    fn beta(&self, at: &PairAt, n: u64, order: i64) -> Result<Series> {
        let (a, m, q) = (&at.a, at.base.step(), at.base.q());
        let aq = a * &q;
        Product::default()
            .poch(&(&aq / &(&self.c * &self.d)), m, n)
            .over_poch(&(&aq / &self.c), m, n)
            .over_poch(&(&aq / &self.d), m, n)
            .over_poch(&q, m, n)
            .eval(order)
    }
}

/// Slater's pair with `c, d → ∞`:
/// `α_n = (q√a,−q√a,a;q)_n/(√a,−√a,q;q)_n (−a)ⁿ q^{(3n²−n)/2}`, `β_n = 1/(q;q)_n`.
#[derive(Debug)]
struct SlaterLimit;

impl PairFamily for SlaterLimit {
    fn name(&self) -> String {
        "slater-limit".into()
    }
    fn kind(&self) -> PairKind {
        PairKind::Bailey
    }
    fn alpha(&self, at: &PairAt, n: u64, order: i64) -> Result<Series> {
        let (a, m, q) = (&at.a, at.base.step(), at.base.q());
        let k = n as i64;
        Product::new(&(-a).pow(k) * &at.base.q_pow((3 * k * k - k) / 2))
            .vwp(a, m, n)
            .poch(a, m, n)
            .over_poch(&q, m, n)
            .eval(order)
    }
    fn beta(&self, at: &PairAt, n: u64, order: i64) -> Result<Series> {
        Product::default().over_poch(&at.base.q(), at.base.step(), n).eval(order)
    }
}

/// `α_{2r} = (1−aq^{4r})/(1−a) (a,d;q²)_r aʳ q^{2r²} / ((aq²/d,q²;q²)_r dʳ)`,
/// `α_{2r−1} = 0`, `β_n = (aq/d;q²)_n / ((aq;q²)_n (aq/d,q;q)_n)`.
#[derive(Debug)]
struct Msz {
    d: QMonomial,
}

impl PairFamily for Msz {
    fn name(&self) -> String {
        "msz".into()
    }
    fn kind(&self) -> PairKind {
        PairKind::Bailey
    }
    fn params(&self) -> Vec<(&'static str, QMonomial)> {
        vec![("d", self.d.clone())]
    }
    fn alpha(&self, at: &PairAt, n: u64, order: i64) -> Result<Series> {
        if n % 2 == 1 {
            return Ok(Series::zero(order));
        }
        let (a, d, m) = (&at.a, &self.d, at.base.step());
        let r = n / 2;
        let ri = r as i64;
        Product::new(&(a / d).pow(ri) * &at.base.q_pow(2 * ri * ri))
            .vwp(a, 2 * m, r)
            .poch(a, 2 * m, r)
            .poch(d, 2 * m, r)
            .over_poch(&(&(a * &at.base.q_pow(2)) / d), 2 * m, r)
            .over_poch(&at.base.q_pow(2), 2 * m, r)
            .eval(order)
    }
    fn beta(&self, at: &PairAt, n: u64, order: i64) -> Result<Series> {
        let (a, d, m, q) = (&at.a, &self.d, at.base.step(), at.base.q());
        let aqd = &(a * &q) / d;
        Product::default()
            .poch(&aqd, 2 * m, n)
            .over_poch(&(a * &q), 2 * m, n)
            .over_poch(&aqd, m, n)
            .over_poch(&q, m, n)
            .eval(order)
    }
}

/// The image of a WP-Bailey pair under Andrews' first chain with parameters
/// `y`, `z` and `c = kyz/(aq)`:
///
/// ```text
/// α'_n(a,k) = (y,z;q)_n / (aq/y,aq/z;q)_n (k/c)ⁿ α_n(a,c)
/// β'_n(a,k) = (ky/a,kz/a;q)_n / (aq/y,aq/z;q)_n
///     Σ_j (1−cq^{2j})(y,z;q)_j (k/c;q)_{n−j}(k;q)_{n+j}
///         / ((1−c)(ky/a,kz/a;q)_j (q;q)_{n−j}(qc;q)_{n+j}) (k/c)^j β_j(a,c)
/// ```
#[derive(Debug)]
pub struct ChainedPair {
    inner: Arc<dyn PairFamily>,
    y: QMonomial,
    z: QMonomial,
}

impl ChainedPair {
    fn inner_at(&self, at: &PairAt) -> Result<(QMonomial, PairAt)> {
        let k = at.k()?;
        let c = &(&(k * &self.y) * &self.z) / &(&at.a * &at.base.q());
        Ok((c.clone(), PairAt { a: at.a.clone(), k: Some(c), base: at.base }))
    }
}

impl PairFamily for ChainedPair {
    fn name(&self) -> String {
        format!("chain({})", self.inner.name())
    }
    fn kind(&self) -> PairKind {
        PairKind::WP
    }
    fn params(&self) -> Vec<(&'static str, QMonomial)> {
        let mut p = self.inner.params();
        p.push(("y", self.y.clone()));
        p.push(("z", self.z.clone()));
        p
    }
    fn alpha(&self, at: &PairAt, n: u64, order: i64) -> Result<Series> {
        let (c, inner) = self.inner_at(at)?;
        let (a, k, m, q) = (&at.a, at.k()?, at.base.step(), at.base.q());
        let aq = a * &q;
        let p = Product::new((k / &c).pow(n as i64))
            .poch(&self.y, m, n)
            .poch(&self.z, m, n)
            .over_poch(&(&aq / &self.y), m, n)
            .over_poch(&(&aq / &self.z), m, n);
        weighted(&p, order, |t| self.inner.alpha(&inner, n, t))
    }
    fn beta(&self, at: &PairAt, n: u64, order: i64) -> Result<Series> {
        let (c, inner) = self.inner_at(at)?;
        let (a, k, m, q) = (&at.a, at.k()?, at.base.step(), at.base.q());
        let aq = a * &q;
        let (kya, kza) = (&(k * &self.y) / a, &(k * &self.z) / a);
        let outer = Product::default()
            .poch(&kya, m, n)
            .poch(&kza, m, n)
            .over_poch(&(&aq / &self.y), m, n)
            .over_poch(&(&aq / &self.z), m, n);
        let kc = k / &c;
        let qc = &q * &c;
        weighted(&outer, order, |t| {
            let mut sum = Series::zero(t);
            for j in 0..=n {
                let p = Product::new(kc.pow(j as i64))
                    .vwp(&c, m, j)
                    .poch(&self.y, m, j)
                    .poch(&self.z, m, j)
                    .poch(&kc, m, n - j)
                    .poch(k, m, n + j)
                    .over_poch(&kya, m, j)
                    .over_poch(&kza, m, j)
                    .over_poch(&q, m, n - j)
                    .over_poch(&qc, m, n + j);
                sum = &sum + &weighted(&p, t, |u| self.inner.beta(&inner, j, u))?;
            }
            Ok(sum)
        })
    }
}

pub fn make_unit_pair(a: QMonomial, base: Base) -> Result<PairSpec> {
    PairSpec::new(Unit, PairAt::bailey(a, base))
}

pub fn make_trivial_pair(a: QMonomial, base: Base) -> Result<PairSpec> {
    PairSpec::new(Trivial, PairAt::bailey(a, base))
}

pub fn make_singh_pair(a: QMonomial, k: QMonomial, rho1: QMonomial, rho2: QMonomial, base: Base) -> Result<PairSpec> {
    PairSpec::new(Singh { rho1, rho2 }, PairAt::wp(a, k, base))
}

pub fn make_ab_pair(a: QMonomial, k: QMonomial, base: Base) -> Result<PairSpec> {
    PairSpec::new(AndrewsBerkovich, PairAt::wp(a, k, base))
}

pub fn make_slater_pair(a: QMonomial, c: QMonomial, d: QMonomial, base: Base) -> Result<PairSpec> {
    PairSpec::new(Slater { c, d }, PairAt::bailey(a, base))
}

pub fn make_slater_limit_pair(a: QMonomial, base: Base) -> Result<PairSpec> {
    PairSpec::new(SlaterLimit, PairAt::bailey(a, base))
}

pub fn make_msz_pair(a: QMonomial, d: QMonomial, base: Base) -> Result<PairSpec> {
    PairSpec::new(Msz { d }, PairAt::bailey(a, base))
}

/// Applies Andrews' first WP-Bailey chain to a WP-Bailey pair.
pub fn chain_transform(pair: &PairSpec, y: QMonomial, z: QMonomial) -> Result<PairSpec> {
    if pair.kind() != PairKind::WP {
        return Err(Error::Degenerate(format!("the chain needs a WP-Bailey pair, got the Bailey pair {}", pair.name())));
    }
    PairSpec::new(ChainedPair { inner: Arc::clone(&pair.family), y, z }, pair.at.clone())
}

/// The right side of the defining relation for a given `n`.
pub fn defining_sum(pair: &PairSpec, n: u64, order: i64) -> Result<Series> {
    let PairAt { a, k, base } = &pair.at;
    let (m, q) = (base.step(), base.q());
    let aq = a * &q;
    let mut sum = Series::zero(order);
    for j in 0..=n {
        let mut p = Product::default().over_poch(&q, m, n - j).over_poch(&aq, m, n + j);
        if let Some(k) = k {
            p = p.poch(&(k / a), m, n - j).poch(k, m, n + j);
        }
        sum = &sum + &weighted(&p, order, |t| pair.alpha(j, t))?;
    }
    Ok(sum)
}

/// Checks `α₀ = β₀ = 1` and the defining relation for `1 ≤ n ≤ nmax`.
pub fn defining_check(pair: &PairSpec, nmax: u64, order: i64) -> CheckResult {
    let norm = verify(order, |t| Ok((pair.alpha(0, t)?, Series::one(t))));
    if !norm.is_pass() {
        return norm.with_detail("alpha_0 != 1");
    }
    let norm = verify(order, |t| Ok((pair.beta(0, t)?, Series::one(t))));
    if !norm.is_pass() {
        return norm.with_detail("beta_0 != 1");
    }
    for n in 1..=nmax {
        let r = verify(order, |t| Ok((pair.beta(n, t)?, defining_sum(pair, n, t)?)));
        if !r.is_pass() {
            return r.with_detail(format!("n = {n}"));
        }
    }
    CheckResult::pass(order)
}

/// The `β` side of the insertion identity
///
/// ```text
/// Σ (q√k,−q√k,y,z;q)_n / (√k,−√k,qk/y,qk/z;q)_n (qa/yz)ⁿ β_n
///   = (qk,qk/yz,qa/y,qa/z;q)_∞ / (qk/y,qk/z,qa,qa/yz;q)_∞ Σ (y,z;q)_n / (qa/y,qa/z;q)_n (qa/yz)ⁿ α_n
/// ```
pub fn insertion_lhs(pair: &PairSpec, y: &QMonomial, z: &QMonomial, order: i64) -> Result<Series> {
    let PairAt { a, base, .. } = &pair.at;
    let k = pair.at.k()?;
    let (m, q) = (base.step(), base.q());
    let qk = &q * k;
    let ratio = insertion_ratio(a, y, z, *base)?;
    sum_terms(0, order, |n| {
        let p = Product::new(ratio.pow(n as i64))
            .vwp(k, m, n)
            .poch(y, m, n)
            .poch(z, m, n)
            .over_poch(&(&qk / y), m, n)
            .over_poch(&(&qk / z), m, n);
        weighted(&p, order, |t| pair.beta(n, t))
    })
}

/// The `α` side of the insertion identity.
pub fn insertion_rhs(pair: &PairSpec, y: &QMonomial, z: &QMonomial, order: i64) -> Result<Series> {
    let PairAt { a, base, .. } = &pair.at;
    let k = pair.at.k()?;
    let (m, q) = (base.step(), base.q());
    let (qa, qk) = (&q * a, &q * k);
    let yz = y * z;
    let ratio = insertion_ratio(a, y, z, *base)?;
    let outer = Product::default()
        .poch_inf(&qk, m)
        .poch_inf(&(&qk / &yz), m)
        .poch_inf(&(&qa / y), m)
        .poch_inf(&(&qa / z), m)
        .over_poch_inf(&(&qk / y), m)
        .over_poch_inf(&(&qk / z), m)
        .over_poch_inf(&qa, m)
        .over_poch_inf(&(&qa / &yz), m);
    weighted(&outer, order, |t| {
        sum_terms(0, t, |n| {
            let p = Product::new(ratio.pow(n as i64))
                .poch(y, m, n)
                .poch(z, m, n)
                .over_poch(&(&qa / y), m, n)
                .over_poch(&(&qa / z), m, n);
            weighted(&p, t, |u| pair.alpha(n, u))
        })
    })
}

fn insertion_ratio(a: &QMonomial, y: &QMonomial, z: &QMonomial, base: Base) -> Result<QMonomial> {
    let ratio = &(&base.q() * a) / &(y * z);
    if ratio.exp() < 1 {
        return Err(Error::Divergent(format!("insertion needs qa/yz = {ratio} to have positive valuation")));
    }
    Ok(ratio)
}

pub fn insertion_check(pair: &PairSpec, y: &QMonomial, z: &QMonomial, order: i64) -> CheckResult {
    verify(order, |t| Ok((insertion_lhs(pair, y, z, t)?, insertion_rhs(pair, y, z, t)?)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn m(s: &str) -> QMonomial {
        s.parse().unwrap()
    }

    fn assert_pass(r: CheckResult) {
        assert!(r.is_pass(), "{r}");
    }

    fn all_pairs() -> Vec<PairSpec> {
        vec![
            make_unit_pair(m("2"), Base::ONE).unwrap(),
            make_trivial_pair(m("2"), Base::ONE).unwrap(),
            make_singh_pair(m("2"), m("3"), m("5"), m("7"), Base::ONE).unwrap(),
            make_ab_pair(m("2"), m("3"), Base::ONE).unwrap(),
            make_slater_pair(m("2"), m("3"), m("5"), Base::ONE).unwrap(),
            make_slater_limit_pair(m("2"), Base::ONE).unwrap(),
            make_msz_pair(m("2"), m("7"), Base::ONE).unwrap(),
        ]
    }

    #[test]
    fn every_pair_satisfies_the_defining_relation() {
        for p in all_pairs() {
            let r = defining_check(&p, 8, 30);
            assert!(r.is_pass(), "{}: {r}", p.name());
        }
    }

    #[test]
    fn pairs_in_other_bases() {
        assert_pass(defining_check(&make_slater_pair(m("q^-1"), m("3"), m("5"), Base::new(3)).unwrap(), 5, 25));
        assert_pass(defining_check(&make_msz_pair(m("q^-1"), m("7"), Base::new(3)).unwrap(), 5, 25));
        assert_pass(defining_check(&make_singh_pair(m("4"), m("9"), m("5"), m("7"), Base::new(2)).unwrap(), 5, 25));
    }

    #[test]
    fn chain_preserves_pairs() {
        let singh = make_singh_pair(m("2"), m("3"), m("5"), m("7"), Base::ONE).unwrap();
        assert_pass(defining_check(&chain_transform(&singh, m("11"), m("13")).unwrap(), 5, 20));
        let ab = make_ab_pair(m("2"), m("3"), Base::ONE).unwrap();
        assert_pass(defining_check(&chain_transform(&ab, m("11"), m("13")).unwrap(), 5, 20));
    }

    #[test]
    fn chain_rejects_bailey_pairs() {
        assert!(chain_transform(&make_unit_pair(m("2"), Base::ONE).unwrap(), m("3"), m("5")).is_err());
    }

    #[test]
    fn chain_with_c_equal_k() {
        // yz = aq makes c = k
        let (a, y, z) = (m("2"), m("3*q"), m("2/3"));
        let singh = make_singh_pair(a.clone(), m("5"), m("7"), m("11"), Base::ONE).unwrap();
        let chained = chain_transform(&singh, y.clone(), z.clone()).unwrap();
        let aq = &a * &QMonomial::q(1);
        for n in 0..4 {
            let p = Product::default().poch(&y, 1, n).poch(&z, 1, n).over_poch(&(&aq / &y), 1, n).over_poch(&(&aq / &z), 1, n);
            let expect = p.apply(&singh.alpha(n, p.input_order(15)).unwrap(), 15).unwrap();
            assert!(expect.equal_to_order(&chained.alpha(n, 15).unwrap()));
        }
    }

    #[test]
    fn normalization() {
        let singh = make_singh_pair(m("2"), m("3"), m("5"), m("7"), Base::ONE).unwrap();
        let chained = chain_transform(&singh, m("11"), m("13")).unwrap();
        for p in all_pairs().into_iter().chain([chained]) {
            assert_eq!(p.alpha(0, 10).unwrap(), Series::one(10), "{}", p.name());
            assert_eq!(p.beta(0, 10).unwrap(), Series::one(10), "{}", p.name());
        }
    }

    #[test]
    fn direct_values() {
        let unit = make_unit_pair(m("2"), Base::ONE).unwrap();
        assert!(unit.beta(1, 10).unwrap().is_zero());
        // α₁ = −(1 − 2q²)/(1 − q)
        let a1 = Product::new(QMonomial::int(-1)).factor(&m("2*q^2")).over_factor(&m("q")).eval(10).unwrap();
        assert_eq!(unit.alpha(1, 10).unwrap(), a1);
        let trivial = make_trivial_pair(m("2"), Base::ONE).unwrap();
        assert!(trivial.alpha(1, 10).unwrap().is_zero());
        let b1 = trivial.beta(1, 10).unwrap();
        let mut expect = vec![Rational::from_integer(0.into()); 11];
        for i in 0..=10usize {
            for j in 0..=10 - i {
                expect[i + j] += Rational::from_integer((1i64 << i).into());
            }
        }
        assert_eq!(b1, Series::from_coeffs(0, expect, 10));
        let msz = make_msz_pair(m("2"), m("7"), Base::ONE).unwrap();
        assert!(msz.alpha(1, 10).unwrap().is_zero());
        assert!(msz.alpha(3, 10).unwrap().is_zero());
    }

    #[test]
    fn base_step_coherence() {
        for b in [2, 3] {
            let base = Base::new(b);
            for (one, many) in [
                (make_unit_pair(m("2"), Base::ONE).unwrap(), make_unit_pair(m("2"), base).unwrap()),
                (make_trivial_pair(m("2"), Base::ONE).unwrap(), make_trivial_pair(m("2"), base).unwrap()),
            ] {
                for n in 0..5 {
                    assert_eq!(one.alpha(n, 10).unwrap().substitute(b), many.alpha(n, 10 * b + b - 1).unwrap());
                    assert_eq!(one.beta(n, 10).unwrap().substitute(b), many.beta(n, 10 * b + b - 1).unwrap());
                }
            }
        }
    }

    #[test]
    fn insertion_identity() {
        let singh = make_singh_pair(m("2"), m("3"), m("5"), m("7"), Base::ONE).unwrap();
        assert_pass(insertion_check(&singh, &m("11"), &m("13"), 20));
        let ab = make_ab_pair(m("2"), m("3"), Base::ONE).unwrap();
        assert_pass(insertion_check(&ab, &m("11"), &m("13"), 20));
    }
}
