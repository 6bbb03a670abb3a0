//! Building blocks shared by the registered identities.

use crate::catalog::{param, Bindings};
use crate::error::{Error, Result};
use crate::monomial::QMonomial;
use crate::pairs::{self, weighted, PairSpec};
use crate::poch::{Base, Product};
use crate::series::{sum_terms, Series};

pub fn mono(s: &str) -> QMonomial {
    s.parse().expect("catalog literal")
}

pub fn q(e: i64) -> QMonomial {
    QMonomial::q(e)
}

/// `Σ_{n≥start} term(n)` for terms written as products.
pub fn sum(start: u64, order: i64, term: impl Fn(u64) -> Product) -> Result<Series> {
    sum_terms(start, order, |n| term(n).eval(order))
}

/// `c · s` for an integer `c`.
pub fn times(c: i64, s: Series) -> Series {
    s.scale(&crate::Rational::from_integer(c.into()))
}

/// `p · inner`, where `inner` is produced at the order `p` needs.
pub fn apply(p: Product, order: i64, inner: impl FnOnce(i64) -> Result<Series>) -> Result<Series> {
    weighted(&p, order, inner)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Seq {
    Alpha,
    Beta,
}

/// `Σ_{n≥1} weight(n) · α_n` or `β_n`.
pub fn pair_sum(pair: &PairSpec, seq: Seq, order: i64, weight: impl Fn(u64) -> Product) -> Result<Series> {
    sum_terms(1, order, |n| {
        weighted(&weight(n), order, |t| match seq {
            Seq::Alpha => pair.alpha(n, t),
            Seq::Beta => pair.beta(n, t),
        })
    })
}

/// `Σ_{n≥1} (q√k,−q√k,z;q)_n (q;q)_{n−1} / (√k,−√k,qk,qk/z;q)_n (qa/z)ⁿ β_n`,
/// dropping the `k` factors for Bailey pairs.
pub fn p1_beta(pair: &PairSpec, z: &QMonomial, order: i64) -> Result<Series> {
    let (a, base) = (&pair.at.a, pair.at.base);
    let (m, q) = (base.step(), base.q());
    let ratio = &(&q * a) / z;
    let k = pair.at.k.clone();
    pair_sum(pair, Seq::Beta, order, |n| {
        let p = Product::new(ratio.pow(n as i64)).poch(z, m, n).poch(&q, m, n - 1);
        match &k {
            Some(k) => p.vwp(k, m, n).over_poch(&(&q * k), m, n).over_poch(&(&(&q * k) / z), m, n),
            None => p,
        }
    })
}

/// `Σ_{n≥1} (z;q)_n (q;q)_{n−1} / (qa,qa/z;q)_n (qa/z)ⁿ α_n`.
pub fn p1_alpha(pair: &PairSpec, z: &QMonomial, order: i64) -> Result<Series> {
    let (a, base) = (&pair.at.a, pair.at.base);
    let (m, q) = (base.step(), base.q());
    let qa = &q * a;
    let ratio = &qa / z;
    pair_sum(pair, Seq::Alpha, order, |n| {
        Product::new(ratio.pow(n as i64))
            .poch(z, m, n)
            .poch(&q, m, n - 1)
            .over_poch(&qa, m, n)
            .over_poch(&(&qa / z), m, n)
    })
}

/// `Σ (q;q)_{n−1} (−a)ⁿ q^{n(n+1)/2} β_n − Σ (q;q)_{n−1} (−a)ⁿ q^{n(n+1)/2} / (qa;q)_n α_n`.
pub fn f2_pair_form(pair: &PairSpec, order: i64) -> Result<Series> {
    let (a, base) = (&pair.at.a, pair.at.base);
    let (m, qq) = (base.step(), base.q());
    let w = |n: u64| {
        let k = n as i64;
        Product::new(&(-a).pow(k) * &base.q_pow(k * (k + 1) / 2)).poch(&qq, m, n - 1)
    };
    let beta = pair_sum(pair, Seq::Beta, order, w)?;
    let alpha = pair_sum(pair, Seq::Alpha, order, |n| w(n).over_poch(&(&qq * a), m, n))?;
    Ok(&beta - &alpha)
}

/// `Σ (q²;q²)_{n−1} (−qa)ⁿ β_n − Σ (q²;q²)_{n−1} (−qa)ⁿ / (q²a²;q²)_n α_n`.
pub fn f3_pair_form(pair: &PairSpec, order: i64) -> Result<Series> {
    let (a, base) = (&pair.at.a, pair.at.base);
    let m = base.step();
    let (qq, q2) = (base.q(), base.q_pow(2));
    let ratio = -&(&qq * a);
    let w = |n: u64| Product::new(ratio.pow(n as i64)).poch(&q2, 2 * m, n - 1);
    let beta = pair_sum(pair, Seq::Beta, order, w)?;
    let alpha = pair_sum(pair, Seq::Alpha, order, |n| w(n).over_poch(&(&q2 * &a.pow(2)), 2 * m, n))?;
    Ok(&beta - &alpha)
}

/// The pair families that can be named in a case id.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairChoice {
    Unit,
    Trivial,
    Singh,
    AndrewsBerkovich,
    Slater,
    SlaterLimit,
    Msz,
    ChainSingh,
    ChainAndrewsBerkovich,
}

impl PairChoice {
    pub fn slug(self) -> &'static str {
        match self {
            PairChoice::Unit => "unit",
            PairChoice::Trivial => "trivial",
            PairChoice::Singh => "singh",
            PairChoice::AndrewsBerkovich => "ab",
            PairChoice::Slater => "slater",
            PairChoice::SlaterLimit => "slater-limit",
            PairChoice::Msz => "msz",
            PairChoice::ChainSingh => "chain-singh",
            PairChoice::ChainAndrewsBerkovich => "chain-ab",
        }
    }

    /// Extra parameters read from the bindings, with their default values.
    pub fn params(self) -> &'static [(&'static str, &'static str)] {
        match self {
            PairChoice::Singh => &[("rho1", "7"), ("rho2", "11")],
            PairChoice::Slater => &[("c", "7"), ("d", "11")],
            PairChoice::Msz => &[("d", "7")],
            PairChoice::ChainSingh => &[("rho1", "7"), ("rho2", "11"), ("cy", "19"), ("cz", "23")],
            PairChoice::ChainAndrewsBerkovich => &[("cy", "19"), ("cz", "23")],
            _ => &[],
        }
    }

    pub fn is_wp(self) -> bool {
        matches!(
            self,
            PairChoice::Singh | PairChoice::AndrewsBerkovich | PairChoice::ChainSingh | PairChoice::ChainAndrewsBerkovich
        )
    }

    /// Builds the pair at `(a, k)` in `base`, reading extras from `b`.
    pub fn build(self, a: QMonomial, k: Option<QMonomial>, b: &Bindings, base: Base) -> Result<PairSpec> {
        let need_k = || k.clone().ok_or_else(|| Error::Degenerate("WP-Bailey pair needs k".into()));
        match self {
            PairChoice::Unit => pairs::make_unit_pair(a, base),
            PairChoice::Trivial => pairs::make_trivial_pair(a, base),
            PairChoice::Singh => pairs::make_singh_pair(a, need_k()?, param(b, "rho1")?, param(b, "rho2")?, base),
            PairChoice::AndrewsBerkovich => pairs::make_ab_pair(a, need_k()?, base),
            PairChoice::Slater => pairs::make_slater_pair(a, param(b, "c")?, param(b, "d")?, base),
            PairChoice::SlaterLimit => pairs::make_slater_limit_pair(a, base),
            PairChoice::Msz => pairs::make_msz_pair(a, param(b, "d")?, base),
            PairChoice::ChainSingh => {
                let inner = PairChoice::Singh.build(a, k, b, base)?;
                pairs::chain_transform(&inner, param(b, "cy")?, param(b, "cz")?)
            }
            PairChoice::ChainAndrewsBerkovich => {
                let inner = PairChoice::AndrewsBerkovich.build(a, k, b, base)?;
                pairs::chain_transform(&inner, param(b, "cy")?, param(b, "cz")?)
            }
        }
    }
}

pub const WP_PAIRS: [PairChoice; 4] =
    [PairChoice::Singh, PairChoice::AndrewsBerkovich, PairChoice::ChainSingh, PairChoice::ChainAndrewsBerkovich];

pub const BAILEY_PAIRS: [PairChoice; 5] =
    [PairChoice::Unit, PairChoice::Trivial, PairChoice::Slater, PairChoice::SlaterLimit, PairChoice::Msz];
