use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finders::variable_threshold;
use crate::graph::{Graph, Side, VertexSet};
use crate::graph6::to_graph6_string;

/// `Graph` if `g[s]` has minimum degree at least `t`, else `Complement` if the
/// complement does, else `None`. The empty set qualifies on the graph side.
pub fn is_homogeneous(g: &Graph, s: &VertexSet, t: f64) -> Result<Option<Side>> {
    s.validate(g.order())?;
    let mask = s.to_mask(g.order());
    Ok(homogeneous_side(g, s.members(), &mask, t))
}

fn homogeneous_side(g: &Graph, members: &[usize], mask: &[u64], t: f64) -> Option<Side> {
    let m = members.len();
    let (mut lo, mut hi) = (usize::MAX, 0usize);
    for &v in members {
        let d = g.degree_into(v, mask);
        lo = lo.min(d);
        hi = hi.max(d);
    }
    if m == 0 || lo as f64 >= t {
        Some(Side::Graph)
    } else if (m - 1 - hi) as f64 >= t {
        Some(Side::Complement)
    } else {
        None
    }
}

/// Degree threshold as a function of the set order `l`, pinned explicitly
/// because the asymptotic statements leave small-`l` behaviour open.
///
/// Textual forms: `const:T`, `linear:A` (`A l`), `sqrt:NU`
/// (`(l-1)/2 + NU sqrt((l-1) ln l)`), `weighted:NU` (`(1/2 - l^-NU)(l-1)`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum ThresholdFn {
    Const(f64),
    Linear(f64),
    Sqrt(f64),
    Weighted(f64),
}

impl ThresholdFn {
    pub fn eval(&self, ell: usize) -> f64 {
        let l = ell as f64;
        match *self {
            ThresholdFn::Const(t) => t,
            ThresholdFn::Linear(a) => a * l,
            ThresholdFn::Sqrt(nu) => variable_threshold(ell, nu),
            ThresholdFn::Weighted(nu) => (0.5 - l.powf(-nu)) * (l - 1.0),
        }
    }
}

impl fmt::Display for ThresholdFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ThresholdFn::Const(x) => write!(f, "const:{x}"),
            ThresholdFn::Linear(x) => write!(f, "linear:{x}"),
            ThresholdFn::Sqrt(x) => write!(f, "sqrt:{x}"),
            ThresholdFn::Weighted(x) => write!(f, "weighted:{x}"),
        }
    }
}

impl FromStr for ThresholdFn {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, value) = s
            .split_once(':')
            .ok_or_else(|| Error::Domain(format!("threshold `{s}` is not of the form name:value")))?;
        let x: f64 = value
            .trim()
            .parse()
            .map_err(|_| Error::Domain(format!("threshold parameter `{value}` is not a number")))?;
        if !x.is_finite() {
            return Err(Error::Domain(format!("threshold parameter must be finite, got {x}")));
        }
        match name.trim() {
            "const" => Ok(ThresholdFn::Const(x)),
            "linear" => Ok(ThresholdFn::Linear(x)),
            "sqrt" if x >= 0.0 => Ok(ThresholdFn::Sqrt(x)),
            "weighted" if x > 0.0 => Ok(ThresholdFn::Weighted(x)),
            "sqrt" | "weighted" => Err(Error::Domain(format!("{name} needs a positive parameter, got {x}"))),
            other => Err(Error::Domain(format!(
                "unknown threshold `{other}` (expected const, linear, sqrt or weighted)"
            ))),
        }
    }
}

impl TryFrom<String> for ThresholdFn {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<ThresholdFn> for String {
    fn from(f: ThresholdFn) -> String {
        f.to_string()
    }
}

/// What a negative certificate claims to rule out.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum Claim {
    /// No `t`-homogeneous set of order exactly `k`.
    Fixed { k: usize, t: usize },
    /// No `f(l)`-homogeneous set of any order `l >= k`.
    Variable { k: usize, threshold: ThresholdFn },
}

impl Claim {
    pub fn k(&self) -> usize {
        match *self {
            Claim::Fixed { k, .. } | Claim::Variable { k, .. } => k,
        }
    }

    fn threshold_at(&self, ell: usize) -> f64 {
        match *self {
            Claim::Fixed { t, .. } => t as f64,
            Claim::Variable { threshold, .. } => threshold.eval(ell),
        }
    }

    fn orders(&self, n: usize) -> std::ops::RangeInclusive<usize> {
        match *self {
            Claim::Fixed { k, .. } => k..=k,
            Claim::Variable { k, .. } => k..=n,
        }
    }

    /// Number of subsets an exhaustive check of an `n`-vertex graph visits.
    pub fn search_space(&self, n: usize) -> u128 {
        self.orders(n).filter(|&l| l <= n).map(|l| binomial(n, l)).sum()
    }
}

/// A homogeneous set that refutes a claim.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SetWitness {
    pub set: VertexSet,
    pub side: Side,
    pub threshold: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LowerBoundCertificate {
    pub graph6: String,
    pub claim: Claim,
    pub subsets_checked: u64,
    /// True iff no qualifying set exists.
    pub verified: bool,
    /// First qualifying set in search order, present iff `verified` is false.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<SetWitness>,
    /// Set by callers for graphs drawn from a construction whose asymptotic
    /// guarantee does not apply at this size.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub asymptotic: Option<bool>,
    /// Wall time; kept out of the serialized form so certificates are
    /// byte-reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}

/// Vertices ordered by `|2 deg - (n-1)|` descending (index ascending on ties),
/// so extreme-degree vertices are tried first.
fn search_order(g: &Graph) -> Vec<usize> {
    let n = g.order() as i64;
    let mut order: Vec<usize> = (0..g.order()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse((2 * g.degree(v) as i64 - (n - 1)).abs()));
    order
}

pub(crate) struct Scan {
    pub checked: u64,
    pub witness: Option<SetWitness>,
    /// The cap was hit before the search finished.
    pub truncated: bool,
}

/// Visits the subsets the claim quantifies over, smallest order first and
/// lexicographically in search-order positions within an order, stopping at the
/// first homogeneous set or after `cap` subsets.
pub(crate) fn scan(g: &Graph, claim: &Claim, cap: u64) -> Scan {
    let n = g.order();
    let order = search_order(g);
    let mut checked = 0u64;
    let mut mask = vec![0u64; g.row_words()];
    let mut members = Vec::with_capacity(n);
    for ell in claim.orders(n) {
        if ell > n {
            break;
        }
        let t = claim.threshold_at(ell);
        let mut pos: Vec<usize> = (0..ell).collect();
        loop {
            if checked == cap {
                return Scan {
                    checked,
                    witness: None,
                    truncated: true,
                };
            }
            checked += 1;
            mask.iter_mut().for_each(|w| *w = 0);
            members.clear();
            for &p in &pos {
                let v = order[p];
                members.push(v);
                mask[v / 64] |= 1 << (v % 64);
            }
            if let Some(side) = homogeneous_side(g, &members, &mask, t) {
                return Scan {
                    checked,
                    witness: Some(SetWitness {
                        set: VertexSet::new(members.clone()),
                        side,
                        threshold: t,
                    }),
                    truncated: false,
                };
            }
            // Next combination of positions.
            let mut i = ell;
            while i > 0 && pos[i - 1] == n - ell + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            pos[i - 1] += 1;
            for j in i..ell {
                pos[j] = pos[j - 1] + 1;
            }
        }
    }
    Scan {
        checked,
        witness: None,
        truncated: false,
    }
}

pub(crate) fn verify_claim(g: &Graph, claim: Claim, budget: u64) -> Result<LowerBoundCertificate> {
    let k = claim.k();
    if k < 1 {
        return Err(Error::Domain("need k >= 1".into()));
    }
    let start = Instant::now();
    let result = scan(g, &claim, budget);
    if result.truncated {
        return Err(Error::BudgetExceeded {
            spent: result.checked,
            lower_bound: 0,
            reason: format!(
                "exhaustive check needs {} subsets, budget is {budget}",
                claim.search_space(g.order())
            ),
        });
    }
    Ok(LowerBoundCertificate {
        graph6: to_graph6_string(g)?,
        claim,
        subsets_checked: result.checked,
        verified: result.witness.is_none(),
        witness: result.witness,
        asymptotic: None,
        elapsed: start.elapsed(),
    })
}

/// Exhaustively checks that no `k`-subset is `t`-homogeneous. A refuting set
/// ends the search early and is embedded in the certificate.
pub fn verify_no_homogeneous_fixed(g: &Graph, k: usize, t: usize, budget: u64) -> Result<LowerBoundCertificate> {
    if t >= k {
        return Err(Error::Domain(format!("need t < k, got t = {t}, k = {k}")));
    }
    verify_claim(g, Claim::Fixed { k, t }, budget)
}

/// Exhaustively checks that no set of order `l >= k` is `f(l)`-homogeneous.
pub fn verify_no_homogeneous_variable(
    g: &Graph,
    k: usize,
    threshold: ThresholdFn,
    budget: u64,
) -> Result<LowerBoundCertificate> {
    verify_claim(g, Claim::Variable { k, threshold }, budget)
}

impl LowerBoundCertificate {
    /// Re-runs the check from the embedded graph and compares the outcome.
    pub fn recheck(&self, budget: u64) -> Result<bool> {
        let g = crate::graph6::decode_graph6(self.graph6.as_bytes())?;
        let fresh = verify_claim(&g, self.claim, budget)?;
        if fresh.verified != self.verified {
            return Ok(false);
        }
        match &self.witness {
            None => Ok(self.verified && fresh.subsets_checked == self.subsets_checked),
            Some(w) => Ok(is_homogeneous(&g, &w.set, w.threshold)?.is_some()
                && w.set.len() >= self.claim.k()
                && w.threshold == self.claim.threshold_at(w.set.len())),
        }
    }
}
