//! The registry of identities, each with independent left and right side
//! builders, and the runner that checks them.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::check::{verify, CheckResult, Status};
use crate::error::{Error, Result};
use crate::monomial::QMonomial;
use crate::series::Series;

mod bailey;
mod classical;
mod forms;
mod lambert;
mod wp;

pub type Bindings = BTreeMap<String, QMonomial>;
pub type Builder = Arc<dyn Fn(&Bindings, i64) -> Result<Series> + Send + Sync>;

pub const DEFAULT_ORDER: i64 = 25;

/// Primes drawn for randomized bindings.
pub const PRIMES: [i64; 15] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47];

/// Tag carried by the cases that are re-run with random bindings.
pub const ROBUST_TAG: &str = "robust";

#[derive(Clone)]
pub struct Side {
    pub label: String,
    pub build: Builder,
}

impl Side {
    pub fn new(label: &str, build: impl Fn(&Bindings, i64) -> Result<Series> + Send + Sync + 'static) -> Self {
        Self { label: label.to_string(), build: Arc::new(build) }
    }
}

impl fmt::Debug for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Side({})", self.label)
    }
}

/// A nondegeneracy condition checked before any series is built.
#[derive(Clone)]
pub struct Constraint {
    pub text: String,
    holds: Arc<dyn Fn(&Bindings) -> bool + Send + Sync>,
}

impl Constraint {
    pub fn new(text: impl Into<String>, holds: impl Fn(&Bindings) -> bool + Send + Sync + 'static) -> Self {
        Self { text: text.into(), holds: Arc::new(holds) }
    }

    /// The named parameters are pairwise distinct.
    pub fn distinct(names: &[&str]) -> Self {
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        Self::new(format!("{} pairwise distinct", names.join(", ")), move |b| {
            let vals: Vec<_> = names.iter().filter_map(|n| b.get(n)).collect();
            vals.iter().enumerate().all(|(i, x)| vals[i + 1..].iter().all(|y| x != y))
        })
    }

    /// None of the named parameters equals 1.
    pub fn not_one(names: &[&str]) -> Self {
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        Self::new(format!("{} != 1", names.join(", ")), move |b| names.iter().filter_map(|n| b.get(n)).all(|x| !x.is_one()))
    }

    pub fn holds(&self, b: &Bindings) -> bool {
        (self.holds)(b)
    }
}

impl fmt::Debug for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Constraint({})", self.text)
    }
}

#[derive(Clone, Debug)]
pub struct IdentityCase {
    pub id: String,
    pub title: String,
    /// Short name of the identity being checked.
    pub equation: String,
    pub tags: Vec<String>,
    pub default_bindings: Bindings,
    /// Parameters that may be replaced by random primes.
    pub free: Vec<String>,
    pub default_order: i64,
    pub lhs: Side,
    /// Each right side is compared with the left side separately.
    pub rhs: Vec<Side>,
    pub constraints: Vec<Constraint>,
}

impl IdentityCase {
    pub fn new(id: &str, title: &str, equation: &str) -> Self {
        Self {
            id: id.into(),
            title: title.into(),
            equation: equation.into(),
            tags: Vec::new(),
            default_bindings: Bindings::new(),
            free: Vec::new(),
            default_order: DEFAULT_ORDER,
            lhs: Side::new("lhs", |_, t| Ok(Series::zero(t))),
            rhs: Vec::new(),
            constraints: Vec::new(),
        }
    }

    pub fn tags(mut self, tags: &[&str]) -> Self {
        self.tags.extend(tags.iter().map(|s| s.to_string()));
        self
    }

    /// Binds a parameter from its wire form; panics on malformed literals,
    /// which only appear in the built-in registry.
    pub fn bind(mut self, name: &str, value: &str) -> Self {
        self.default_bindings.insert(name.into(), value.parse().expect("catalog literal"));
        self
    }

    /// Binds a parameter that robustness runs may replace by a random prime.
    pub fn bind_free(mut self, name: &str, value: &str) -> Self {
        self.free.push(name.into());
        self.bind(name, value)
    }

    pub fn lhs(mut self, label: &str, f: impl Fn(&Bindings, i64) -> Result<Series> + Send + Sync + 'static) -> Self {
        self.lhs = Side::new(label, f);
        self
    }

    pub fn rhs(mut self, label: &str, f: impl Fn(&Bindings, i64) -> Result<Series> + Send + Sync + 'static) -> Self {
        self.rhs.push(Side::new(label, f));
        self
    }

    pub fn constraint(mut self, c: Constraint) -> Self {
        self.constraints.push(c);
        self
    }

    pub fn has_tag(&self, tag: &str) -> bool {
        self.tags.iter().any(|t| t == tag) || self.id.split('/').next() == Some(tag)
    }

    pub fn info(&self) -> CaseInfo {
        CaseInfo {
            id: self.id.clone(),
            title: self.title.clone(),
            equation: self.equation.clone(),
            tags: self.tags.clone(),
            bindings: wire(&self.default_bindings),
            default_order: self.default_order,
            constraints: self.constraints.iter().map(|c| c.text.clone()).collect(),
        }
    }
}

/// Looks up a bound parameter.
pub fn param(b: &Bindings, name: &str) -> Result<QMonomial> {
    b.get(name).cloned().ok_or_else(|| Error::UnknownParameter(name.into()))
}

fn wire(b: &Bindings) -> BTreeMap<String, String> {
    b.iter().map(|(k, v)| (k.clone(), v.to_string())).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseInfo {
    pub id: String,
    pub title: String,
    #[serde(rename = "paper_eq")]
    pub equation: String,
    pub tags: Vec<String>,
    pub bindings: BTreeMap<String, String>,
    pub default_order: i64,
    pub constraints: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MismatchReport {
    pub exponent: i64,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one case at one set of bindings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub id: String,
    #[serde(rename = "paper_eq")]
    pub equation: String,
    pub bindings: BTreeMap<String, String>,
    pub order: i64,
    /// `None` when the case could not be evaluated.
    pub matched_order: Option<i64>,
    pub status: Status,
    pub mismatch: Option<MismatchReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    pub millis: Option<u64>,
}

impl Report {
    pub fn is_pass(&self) -> bool {
        self.status == Status::Pass
    }

    fn new(case: &IdentityCase, b: &Bindings, order: i64, r: CheckResult) -> Self {
        Self {
            id: case.id.clone(),
            equation: case.equation.clone(),
            bindings: wire(b),
            order,
            matched_order: (r.status != Status::Degenerate).then_some(r.matched_order),
            status: r.status,
            mismatch: r.mismatch.map(|m| MismatchReport { exponent: m.exponent, lhs: m.lhs.to_string(), rhs: m.rhs.to_string() }),
            detail: r.detail,
            millis: None,
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<28} {:<10}", self.id, self.status)?;
        match (&self.mismatch, self.matched_order) {
            (Some(m), _) => write!(f, " first mismatch at q^{}: lhs {} rhs {}", m.exponent, m.lhs, m.rhs)?,
            (None, Some(o)) => write!(f, " to O(q^{})", o + 1)?,
            (None, None) => {}
        }
        if let Some(d) = &self.detail {
            write!(f, " ({d})")?;
        }
        if let Some(ms) = self.millis {
            write!(f, " [{ms} ms]")?;
        }
        Ok(())
    }
}

/// Merges overrides into the defaults, rejecting unknown names.
pub fn resolve(case: &IdentityCase, overrides: &Bindings) -> Result<Bindings> {
    let mut b = case.default_bindings.clone();
    for (k, v) in overrides {
        if !b.contains_key(k) {
            return Err(Error::UnknownParameter(format!("{k} (case {} takes {})", case.id, names(&b))));
        }
        b.insert(k.clone(), v.clone());
    }
    Ok(b)
}

fn names(b: &Bindings) -> String {
    if b.is_empty() {
        return "no parameters".into();
    }
    b.keys().cloned().collect::<Vec<_>>().join(", ")
}

/// Checks every right side against the left side at the given bindings.
pub fn check_bindings(case: &IdentityCase, b: &Bindings, order: i64) -> CheckResult {
    if let Some(c) = case.constraints.iter().find(|c| !c.holds(b)) {
        return CheckResult::degenerate(order, &Error::Degenerate(format!("constraint violated: {}", c.text)));
    }
    let cache: RefCell<HashMap<i64, Series>> = RefCell::new(HashMap::new());
    let lhs = |t: i64| -> Result<Series> {
        if let Some(s) = cache.borrow().get(&t) {
            return Ok(s.clone());
        }
        let s = (case.lhs.build)(b, t)?;
        cache.borrow_mut().insert(t, s.clone());
        Ok(s)
    };
    let mut result = CheckResult::pass(order);
    for side in &case.rhs {
        let r = verify(order, |t| Ok((lhs(t)?, (side.build)(b, t)?)));
        if !r.is_pass() {
            return r.with_detail(format!("{} vs {}", case.lhs.label, side.label));
        }
        result = r;
    }
    result
}

/// Runs one case with optional binding overrides and order.
pub fn run_check(case: &IdentityCase, overrides: &Bindings, order: Option<i64>) -> Result<Report> {
    let b = resolve(case, overrides)?;
    Ok(run_bindings(case, &b, order.unwrap_or(case.default_order)))
}

fn run_bindings(case: &IdentityCase, b: &Bindings, order: i64) -> Report {
    Report::new(case, b, order, check_bindings(case, b, order))
}

/// Like [`run_check`], also recording wall-clock time.
pub fn run_timed(case: &IdentityCase, overrides: &Bindings, order: Option<i64>) -> Result<Report> {
    let start = Instant::now();
    let mut r = run_check(case, overrides, order)?;
    r.millis = Some(start.elapsed().as_millis() as u64);
    Ok(r)
}

/// Every registered case, ordered by id.
pub fn registry() -> Vec<IdentityCase> {
    let mut cases = Vec::new();
    cases.extend(wp::cases());
    cases.extend(bailey::cases());
    cases.extend(lambert::cases());
    cases.extend(classical::cases());
    cases.sort_by(|a, b| a.id.cmp(&b.id));
    cases
}

pub fn find(id: &str) -> Option<IdentityCase> {
    registry().into_iter().find(|c| c.id == id)
}

/// Cases carrying `tag` (or all cases when `tag` is `None`).
pub fn select(tag: Option<&str>) -> Vec<IdentityCase> {
    registry().into_iter().filter(|c| tag.map_or(true, |t| c.has_tag(t))).collect()
}

/// Runs every selected case in parallel; results come back in id order.
pub fn run_all(order: Option<i64>, tag: Option<&str>) -> Vec<Report> {
    select(tag).par_iter().map(|c| run_bindings(c, &c.default_bindings, order.unwrap_or(c.default_order))).collect()
}

/// Replaces the free parameters of a case by distinct primes, avoiding
/// the values of its fixed parameters.
pub fn random_bindings(case: &IdentityCase, rng: &mut ChaCha8Rng) -> Bindings {
    let mut b = case.default_bindings.clone();
    let fixed: Vec<QMonomial> = b.iter().filter(|(k, _)| !case.free.contains(k)).map(|(_, v)| v.clone()).collect();
    let pool: Vec<i64> = PRIMES.iter().copied().filter(|p| !fixed.contains(&QMonomial::int(*p))).collect();
    let picks: Vec<i64> = pool.choose_multiple(rng, case.free.len()).copied().collect();
    for (name, p) in case.free.iter().zip(picks) {
        b.insert(name.clone(), QMonomial::int(p));
    }
    b
}

/// Runs `count` random prime bindings of a case, deterministically in `seed`.
pub fn run_random(case: &IdentityCase, seed: u64, count: usize, order: Option<i64>) -> Vec<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bindings: Vec<Bindings> = (0..count).map(|_| random_bindings(case, &mut rng)).collect();
    let order = order.unwrap_or(case.default_order);
    bindings.par_iter().map(|b| run_bindings(case, b, order)).collect()
}

/// A copy of `case` whose right sides are multiplied by `1 + q^e`: a
/// control that must be reported as a mismatch.
pub fn perturbed(case: &IdentityCase, e: i64) -> IdentityCase {
    let mut c = case.clone();
    c.id = format!("{}~perturbed", case.id);
    c.rhs = case
        .rhs
        .iter()
        .map(|s| {
            let build = Arc::clone(&s.build);
            Side::new(&format!("{} * (1 + q^{e})", s.label), move |b, t| {
                let bump = &Series::one(t) + &Series::monomial(&QMonomial::q(e), t);
                Ok(&build(b, t)? * &bump)
            })
        })
        .collect();
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique_and_sorted() {
        let ids: Vec<String> = registry().into_iter().map(|c| c.id).collect();
        let mut sorted = ids.clone();
        sorted.dedup();
        assert_eq!(ids, sorted);
        assert!(ids.len() >= 30);
    }

    #[test]
    fn every_case_has_a_right_side_and_valid_defaults() {
        for c in registry() {
            assert!(!c.rhs.is_empty(), "{}", c.id);
            for k in &c.free {
                assert!(c.default_bindings.contains_key(k), "{}: {k}", c.id);
            }
            assert!(c.constraints.iter().all(|k| k.holds(&c.default_bindings)), "{}", c.id);
        }
    }

    #[test]
    fn unknown_override_is_rejected() {
        let c = find("f-closed").unwrap();
        let mut o = Bindings::new();
        o.insert("nope".into(), QMonomial::int(2));
        assert!(matches!(run_check(&c, &o, Some(5)), Err(Error::UnknownParameter(_))));
    }

    #[test]
    fn constraint_violation_is_degenerate() {
        let c = find("thm1/singh").unwrap();
        let mut o = Bindings::new();
        o.insert("z".into(), c.default_bindings["k"].clone());
        let r = run_check(&c, &o, Some(5)).unwrap();
        assert_eq!(r.status, Status::Degenerate);
        assert!(r.detail.unwrap().contains("constraint"));
    }

    #[test]
    fn perturbation_is_caught_at_its_exponent() {
        let c = perturbed(&find("aq-entry").unwrap(), 20);
        let r = run_check(&c, &Bindings::new(), Some(25)).unwrap();
        assert_eq!(r.status, Status::Mismatch);
        assert_eq!(r.mismatch.unwrap().exponent, 20);
        assert_eq!(r.matched_order, Some(19));
    }

    #[test]
    fn tag_filter() {
        let theta = select(Some("theta"));
        assert!(!theta.is_empty());
        assert!(theta.iter().all(|c| c.has_tag("theta")));
        assert!(select(Some("no-such-tag")).is_empty());
    }

    #[test]
    fn random_bindings_are_reproducible_primes() {
        let c = find("f-closed").unwrap();
        let a = random_bindings(&c, &mut ChaCha8Rng::seed_from_u64(7));
        let b = random_bindings(&c, &mut ChaCha8Rng::seed_from_u64(7));
        assert_eq!(a, b);
        let vals: Vec<_> = c.free.iter().map(|k| a[k].clone()).collect();
        for (i, v) in vals.iter().enumerate() {
            assert!(PRIMES.iter().any(|p| QMonomial::int(*p) == *v));
            assert!(vals[i + 1..].iter().all(|w| w != v));
        }
    }
}
