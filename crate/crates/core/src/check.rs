//! Comparing two independently built series to a requested order.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::Series;
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Mismatch,
    Degenerate,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Mismatch => "mismatch",
            Status::Degenerate => "degenerate",
        })
    }
}

/// First exponent where the two sides disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub exponent: i64,
    pub lhs: Rational,
    pub rhs: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    /// Highest exponent through which both sides agree.
    pub matched_order: i64,
    pub requested_order: i64,
    pub status: Status,
    pub mismatch: Option<Mismatch>,
    /// Why a degenerate check could not be evaluated.
    pub detail: Option<String>,
}

impl CheckResult {
    pub fn pass(order: i64) -> Self {
        Self { matched_order: order, requested_order: order, status: Status::Pass, mismatch: None, detail: None }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(match self.detail.take() {
            Some(d) => format!("{}: {d}", detail.into()),
            None => detail.into(),
        });
        self
    }

    pub fn is_pass(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn degenerate(order: i64, err: &Error) -> Self {
        Self {
            matched_order: i64::MIN,
            requested_order: order,
            status: Status::Degenerate,
            mismatch: None,
            detail: Some(err.to_string()),
        }
    }

    /// Compares `lhs` and `rhs` on every exponent `≤ order`. Both must be
    /// known to at least `order`.
    pub fn compare(lhs: &Series, rhs: &Series, order: i64) -> Self {
        debug_assert!(lhs.order() >= order && rhs.order() >= order);
        match lhs.first_mismatch(rhs, order) {
            None => Self { matched_order: order, requested_order: order, status: Status::Pass, mismatch: None, detail: None },
            Some(e) => Self {
                matched_order: e - 1,
                requested_order: order,
                status: Status::Mismatch,
                mismatch: Some(Mismatch { exponent: e, lhs: lhs.coeff(e), rhs: rhs.coeff(e) }),
                detail: None,
            },
        }
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.status, &self.mismatch, &self.detail) {
            (Status::Pass, _, _) => write!(f, "pass to O(q^{})", self.matched_order + 1),
            (Status::Mismatch, Some(m), _) => {
                write!(f, "mismatch at q^{}: lhs {} vs rhs {}", m.exponent, m.lhs, m.rhs)
            }
            (_, _, Some(d)) => write!(f, "{}: {d}", self.status),
            _ => write!(f, "{}", self.status),
        }
    }
}

const MAX_ATTEMPTS: usize = 8;

/// Builds both sides at a working order and compares them to `order`.
///
/// Generic series division can lose precision when a divisor has negative
/// valuation; when either side comes back short, the working order is
/// raised by the deficit and both sides are rebuilt.
pub fn verify<F>(order: i64, build: F) -> CheckResult
where
    F: Fn(i64) -> Result<(Series, Series)>,
{
    let mut target = order;
    for _ in 0..MAX_ATTEMPTS {
        match build(target) {
            Err(e) => return CheckResult::degenerate(order, &e),
            Ok((lhs, rhs)) => {
                let have = lhs.order().min(rhs.order());
                if have >= order {
                    return CheckResult::compare(&lhs, &rhs, order);
                }
                target += order - have;
            }
        }
    }
    CheckResult::degenerate(order, &Error::Divergent(format!("could not reach order {order}")))
}

/// Checks that `count` builders agree pairwise by comparing each with the
/// first. Returns the first failure, if any.
pub fn verify_all<F>(order: i64, count: usize, build: F) -> CheckResult
where
    F: Fn(usize, i64) -> Result<Series>,
{
    let mut worst: Option<CheckResult> = None;
    for i in 1..count {
        let r = verify(order, |t| Ok((build(0, t)?, build(i, t)?)));
        if !r.is_pass() {
            return r;
        }
        worst.get_or_insert(r);
    }
    worst.unwrap_or(CheckResult { matched_order: order, requested_order: order, status: Status::Pass, mismatch: None, detail: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::QMonomial;

    #[test]
    fn compare_reports_first_mismatch() {
        let a = Series::monomial(&QMonomial::q(3), 10);
        let b = &a + &Series::monomial(&QMonomial::int(2).shift(7), 10);
        let r = CheckResult::compare(&a, &b, 10);
        assert_eq!(r.status, Status::Mismatch);
        assert_eq!(r.matched_order, 6);
        assert_eq!(r.mismatch.unwrap().exponent, 7);
        assert!(CheckResult::compare(&a, &a, 10).is_pass());
    }

    #[test]
    fn verify_retries_short_sides() {
        let r = verify(10, |t| {
            let s = Series::one(t - 3);
            Ok((s.clone(), s))
        });
        assert!(r.is_pass());
        assert_eq!(r.matched_order, 10);
    }

    #[test]
    fn verify_degenerate() {
        let r = verify(10, |_| Err(Error::Degenerate("x".into())));
        assert_eq!(r.status, Status::Degenerate);
        assert!(r.detail.unwrap().contains("x"));
    }
}
