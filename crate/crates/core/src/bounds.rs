//! Closed-form bound calculators.
//!
//! Every function that corresponds to an asymptotic statement returns only the
//! asymptotic main term: the `(1 + o(1))` factors have no explicit rate, so
//! none of these values should be read as a proven bound at a finite `k`.
//! All logarithms are natural.

use std::collections::BTreeMap;
use std::f64::consts::{E, LN_2};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Rate function of a fair coin:
/// `x ln(2x) + (1-x) ln(2(1-x))` on `[0,1]`, `ln 2` at both endpoints and
/// `+inf` outside the unit interval.
pub fn lambda_star(x: f64) -> f64 {
    if !(0.0..=1.0).contains(&x) {
        return f64::INFINITY;
    }
    if x == 0.0 || x == 1.0 {
        return LN_2;
    }
    x_ln_2x(x) + x_ln_2x(1.0 - x)
}

fn x_ln_2x(x: f64) -> f64 {
    // 2x - 1 is exact for x >= 1/4, so ln_1p keeps full accuracy next to the
    // minimum at 1/2 where both terms nearly cancel.
    if x >= 0.25 {
        x * (2.0 * x - 1.0).ln_1p()
    } else {
        x * (2.0 * x).ln()
    }
}

/// A rate value together with its argument.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RateValue {
    pub x: f64,
    pub value: f64,
}

impl RateValue {
    pub fn at(x: f64) -> Self {
        RateValue {
            x,
            value: lambda_star(x),
        }
    }
}

fn binom2(k: u64) -> f64 {
    (k as f64) * (k as f64 - 1.0) / 2.0
}

/// Upper bound `exp(-C(k,2) * L(tbar/(k-1)))` on the probability that
/// `G(k,1/2)` has maximum degree at most `tbar`.
///
/// Evaluated as a power of two so that `tbar = 0` gives exactly `2^-C(k,2)`.
pub fn dependent_set_tail(t_bar: u64, k: u64) -> Result<f64> {
    if k < 2 {
        return Err(Error::Domain(format!("need k >= 2, got {k}")));
    }
    if 2 * t_bar > k - 1 {
        return Err(Error::Domain(format!("need tbar <= (k-1)/2, got tbar = {t_bar}, k = {k}")));
    }
    let rate = lambda_star(t_bar as f64 / (k - 1) as f64);
    Ok((-binom2(k) * (rate / LN_2)).exp2())
}

fn check_eps_k(k: u64, eps: f64) -> Result<()> {
    if k < 2 {
        return Err(Error::Domain(format!("need k >= 2, got {k}")));
    }
    if !(eps >= 0.0) {
        return Err(Error::Domain(format!("need eps >= 0, got {eps}")));
    }
    Ok(())
}

/// Main term `(k/e) exp(((k-1)/2) L(1/2 - eps))` of the random-graph lower
/// bound for the variable problem with `f(l) >= (1/2 + eps)(l - 1)`.
/// Infinite for `eps > 1/2`.
pub fn variable_lower_bound(k: u64, eps: f64) -> Result<f64> {
    check_eps_k(k, eps)?;
    let kf = k as f64;
    Ok(kf / E * ((kf - 1.0) / 2.0 * lambda_star(0.5 - eps)).exp())
}

/// Main term `(k/e) exp(((k+1)/2) L(1/2 - eps))` of the local-lemma lower
/// bound for the fixed problem with `t >= (1/2 + eps)(k - 1)`.
pub fn fixed_lower_bound_lll(k: u64, eps: f64) -> Result<f64> {
    check_eps_k(k, eps)?;
    let kf = k as f64;
    Ok(kf / E * ((kf + 1.0) / 2.0 * lambda_star(0.5 - eps)).exp())
}

/// `2 eps^2`, a lower bound for `L(1/2 - eps)` at every `eps >= 0`.
pub fn taylor_floor(eps: f64) -> f64 {
    2.0 * eps * eps
}

/// `(t^{3/2} / 1000) sqrt(ln(5n/t))`: the discrepancy guaranteed among sets of
/// at most `t` vertices of any large enough `n`-vertex graph.
pub fn erdos_spencer_bound(n: u64, t: u64) -> Result<f64> {
    if t < 1 || t > n {
        return Err(Error::Domain(format!("need 1 <= t <= n, got t = {t}, n = {n}")));
    }
    let (n, t) = (n as f64, t as f64);
    Ok(t.powf(1.5) / 1000.0 * (5.0 * n / t).ln().sqrt())
}

/// Whether `exp(eps^2 (k-1) / 2) > k`, the order condition of the thinning
/// lemma.
pub fn thinning_condition(k: u64, eps: f64) -> bool {
    (0.5 * eps * eps * (k as f64 - 1.0)).exp() > k as f64
}

/// `exp(-d^2 N / (2ab))`, bounding `Pr(X <= ab/N - d)` for `X` hypergeometric
/// (population `N`, sample size `b`, `a` marked items).
pub fn hypergeometric_tail(population: u64, sample: u64, marked: u64, d: f64) -> Result<f64> {
    if sample < 1 || marked < 1 || sample > population || marked > population {
        return Err(Error::Domain(format!(
            "need 1 <= a, b <= N, got N = {population}, b = {sample}, a = {marked}"
        )));
    }
    if !(d >= 0.0) {
        return Err(Error::Domain(format!("need d >= 0, got {d}")));
    }
    let exponent = d * d * population as f64 / (2.0 * marked as f64 * sample as f64);
    Ok((-exponent).exp())
}

fn binomial(n: u64, r: u64) -> Option<u128> {
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    Some(acc)
}

/// Erdős–Szekeres-type upper bound `(k-t-1) C(2(t-1), t-1) + C(2t, t)`.
pub fn chappell_gimbel_upper(k: u64, t: u64) -> Result<u128> {
    if t < 1 || k <= t {
        return Err(Error::Domain(format!("need t >= 1 and k > t, got k = {k}, t = {t}")));
    }
    let overflow = || Error::Domain(format!("upper bound overflows for k = {k}, t = {t}"));
    let left = binomial(2 * (t - 1), t - 1).ok_or_else(overflow)?;
    let right = binomial(2 * t, t).ok_or_else(overflow)?;
    ((k - t - 1) as u128)
        .checked_mul(left)
        .and_then(|x| x.checked_add(right))
        .ok_or_else(overflow)
}

/// `k + 2t - 2` when `1 <= t <= (k+2)/4`, where it is the exact value.
pub fn chappell_gimbel_exact(k: u64, t: u64) -> Result<Option<u64>> {
    if t < 1 || k <= t {
        return Err(Error::Domain(format!("need t >= 1 and k > t, got k = {k}, t = {t}")));
    }
    Ok((4 * t <= k + 2).then(|| k + 2 * t - 2))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    /// `t ~ alpha (k-1)` with `alpha > 1/2`; brackets bound `(1/k) ln R`.
    Exponential,
    /// `1/4 <= alpha < 1/2`; brackets bound `(1/k) R`.
    Linear,
}

/// Main terms of the lower and upper brackets for `R*_t(k)` with
/// `t ~ alpha (k-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Brackets {
    pub regime: Regime,
    /// Bracket on the normalised quantity (`(1/k) ln R` or `(1/k) R`).
    pub normalised: (f64, f64),
    /// The same bracket mapped back to `R*_t(k)` at the given `k`.
    pub implied: (f64, f64),
}

pub fn conclusion_brackets(alpha: f64, k: u64) -> Result<Brackets> {
    let kf = k as f64;
    if alpha > 0.5 && alpha <= 1.0 {
        let lo = 0.5 * lambda_star(1.0 - alpha);
        let hi = 2.0 * alpha * LN_2;
        Ok(Brackets {
            regime: Regime::Exponential,
            normalised: (lo, hi),
            implied: ((kf * lo).exp(), (kf * hi).exp()),
        })
    } else if (0.25..0.5).contains(&alpha) {
        let lo = 2.0 * alpha + 1.0;
        let hi = (1.0 / (0.5 - alpha) + 1.0).sqrt();
        Ok(Brackets {
            regime: Regime::Linear,
            normalised: (lo, hi),
            implied: (kf * lo, kf * hi),
        })
    } else {
        Err(Error::Domain(format!(
            "alpha = {alpha} is in neither the exponential (1/2, 1] nor the linear [1/4, 1/2) regime"
        )))
    }
}

/// A named closed-form quantity with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case")]
pub enum BoundQuery {
    LambdaStar { x: f64 },
    DependentSetTail { t_bar: u64, k: u64 },
    VariableLower { k: u64, eps: f64 },
    FixedLower { k: u64, eps: f64 },
    TaylorFloor { eps: f64 },
    ErdosSpencer { n: u64, t: u64 },
    HypergeometricTail { population: u64, sample: u64, marked: u64, d: f64 },
    ChappellGimbelUpper { k: u64, t: u64 },
}

/// An evaluated [`BoundQuery`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundValue {
    pub name: String,
    pub params: BTreeMap<String, f64>,
    pub value: f64,
}

impl BoundQuery {
    pub fn name(&self) -> &'static str {
        match self {
            BoundQuery::LambdaStar { .. } => "lambda_star",
            BoundQuery::DependentSetTail { .. } => "dependent_set_tail",
            BoundQuery::VariableLower { .. } => "variable_lower",
            BoundQuery::FixedLower { .. } => "fixed_lower",
            BoundQuery::TaylorFloor { .. } => "taylor_floor",
            BoundQuery::ErdosSpencer { .. } => "erdos_spencer",
            BoundQuery::HypergeometricTail { .. } => "hypergeometric_tail",
            BoundQuery::ChappellGimbelUpper { .. } => "chappell_gimbel_upper",
        }
    }

    fn params(&self) -> Vec<(&'static str, f64)> {
        match *self {
            BoundQuery::LambdaStar { x } => vec![("x", x)],
            BoundQuery::DependentSetTail { t_bar, k } => vec![("t_bar", t_bar as f64), ("k", k as f64)],
            BoundQuery::VariableLower { k, eps } | BoundQuery::FixedLower { k, eps } => {
                vec![("k", k as f64), ("eps", eps)]
            }
            BoundQuery::TaylorFloor { eps } => vec![("eps", eps)],
            BoundQuery::ErdosSpencer { n, t } => vec![("n", n as f64), ("t", t as f64)],
            BoundQuery::HypergeometricTail { population, sample, marked, d } => vec![
                ("N", population as f64),
                ("b", sample as f64),
                ("a", marked as f64),
                ("d", d),
            ],
            BoundQuery::ChappellGimbelUpper { k, t } => vec![("k", k as f64), ("t", t as f64)],
        }
    }

    pub fn evaluate(&self) -> Result<BoundValue> {
        let value = match *self {
            BoundQuery::LambdaStar { x } => lambda_star(x),
            BoundQuery::DependentSetTail { t_bar, k } => dependent_set_tail(t_bar, k)?,
            BoundQuery::VariableLower { k, eps } => variable_lower_bound(k, eps)?,
            BoundQuery::FixedLower { k, eps } => fixed_lower_bound_lll(k, eps)?,
            BoundQuery::TaylorFloor { eps } => taylor_floor(eps),
            BoundQuery::ErdosSpencer { n, t } => erdos_spencer_bound(n, t)?,
            BoundQuery::HypergeometricTail { population, sample, marked, d } => {
                hypergeometric_tail(population, sample, marked, d)?
            }
            BoundQuery::ChappellGimbelUpper { k, t } => chappell_gimbel_upper(k, t)? as f64,
        };
        Ok(BoundValue {
            name: self.name().to_string(),
            params: self.params().into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            value,
        })
    }
}
