//! Weighted block random graph.
//!
//! `z` equal blocks of `floor((1 - 1/(2z)) k)` vertices. With 1-based block
//! indices, a pair inside block `i` is an edge with probability
//! `1/2 + (2z)^(-8i)` and a pair between blocks `i != j` with probability
//! `1/2 - (2z)^(-4(i+j)-1)`.
//!
//! The block count `z = g(k) = floor((nu'/8) ln k / ln ln k)` with
//! `nu' = nu/2 + 1/7` is zero for every `k` that fits in memory, so desk-scale
//! sampling has to force `z` through an override; such instances say nothing
//! about the large-`k` behaviour and are flagged as non-asymptotic.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng;

fn nu_prime(nu: f64) -> f64 {
    0.5 * nu + 1.0 / 7.0
}

fn check_nu(nu: f64) -> Result<()> {
    if nu > 0.0 && nu < 2.0 / 7.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("need 0 < nu < 2/7, got {nu}")))
    }
}

/// `g(x) = floor((nu'/8) ln x / ln ln x)`; zero where `ln ln x <= 0`.
pub fn block_count(x: f64, nu: f64) -> usize {
    let lnln = x.ln().ln();
    if !(lnln > 0.0) {
        return 0;
    }
    let value = (nu_prime(nu) / 8.0 * x.ln() / lnln).floor();
    if value.is_finite() && value > 0.0 {
        value as usize
    } else {
        0
    }
}

/// `(2z)^(-8z-2)` for a block count `z >= 1`.
pub fn eps_hat_for_blocks(z: usize) -> Result<f64> {
    if z == 0 {
        return Err(Error::DegenerateParameters("block count is 0".into()));
    }
    Ok((2.0 * z as f64).powf(-8.0 * z as f64 - 2.0))
}

/// `eps_hat(x) = (2 g(x))^(-8 g(x) - 2)`.
pub fn eps_hat(x: f64, nu: f64) -> Result<f64> {
    check_nu(nu)?;
    let z = block_count(x, nu);
    if z == 0 {
        return Err(Error::DegenerateParameters(format!("g({x}) = 0 for nu = {nu}")));
    }
    eps_hat_for_blocks(z)
}

/// `(1/2 - ell^(-nu)) (ell - 1)`. Negative for small `ell`, in which case
/// every set of that order meets it.
pub fn homogeneity_threshold_weighted(ell: usize, nu: f64) -> Result<f64> {
    if ell < 2 {
        return Err(Error::Domain(format!("need ell >= 2, got {ell}")));
    }
    let l = ell as f64;
    Ok((0.5 - l.powf(-nu)) * (l - 1.0))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightedBlockParams {
    pub k: usize,
    pub nu: f64,
    pub nu_prime: f64,
    /// Block count.
    pub z: usize,
    pub block_size: usize,
    /// Symmetric `z x z` edge probabilities, 0-based storage of the 1-based
    /// formulas.
    pub p: Vec<Vec<f64>>,
    /// `eps_hat` evaluated at the block count in use.
    pub eps_hat: f64,
    /// False when `z` was forced by an override rather than computed as `g(k)`.
    pub asymptotic: bool,
}

impl WeightedBlockParams {
    pub fn order(&self) -> usize {
        self.z * self.block_size
    }

    pub fn block_of(&self, v: usize) -> usize {
        v / self.block_size
    }
}

fn probability_matrix(z: usize) -> Vec<Vec<f64>> {
    let base = 2.0 * z as f64;
    (1..=z)
        .map(|i| {
            (1..=z)
                .map(|j| {
                    if i == j {
                        0.5 + base.powf(-8.0 * i as f64)
                    } else {
                        0.5 - base.powf(-4.0 * (i + j) as f64 - 1.0)
                    }
                })
                .collect()
        })
        .collect()
}

pub fn weighted_params(k: usize, nu: f64, z_override: Option<usize>) -> Result<WeightedBlockParams> {
    check_nu(nu)?;
    let z = match z_override {
        Some(0) => return Err(Error::Domain("block count override must be >= 1".into())),
        Some(z) => z,
        None => {
            let z = block_count(k as f64, nu);
            if z == 0 {
                return Err(Error::DegenerateParameters(format!(
                    "g({k}) = 0 for nu = {nu}; the construction needs far larger k, or force a block count"
                )));
            }
            z
        }
    };
    // floor((1 - 1/(2z)) k) in exact integer arithmetic.
    let block_size = (2 * z - 1) * k / (2 * z);
    if block_size == 0 {
        return Err(Error::DegenerateParameters(format!("empty blocks for k = {k}, z = {z}")));
    }
    let p = probability_matrix(z);
    for (i, row) in p.iter().enumerate() {
        for (j, &pij) in row.iter().enumerate() {
            assert!(pij > 0.0 && pij < 1.0, "p[{i}][{j}] = {pij} outside (0,1)");
            assert_eq!(pij, p[j][i]);
        }
    }
    Ok(WeightedBlockParams {
        k,
        nu,
        nu_prime: nu_prime(nu),
        z,
        block_size,
        p,
        eps_hat: eps_hat_for_blocks(z)?,
        asymptotic: z_override.is_none(),
    })
}

/// Samples the weighted block graph; returns it with each vertex's block
/// (0-based). Row `i` draws from stream `(seed, i)`.
pub fn sample_weighted(params: &WeightedBlockParams, seed: u64) -> (Graph, Vec<usize>) {
    let n = params.order();
    let labels: Vec<usize> = (0..n).map(|v| params.block_of(v)).collect();
    let mut g = Graph::empty(n);
    for i in 0..n {
        let mut stream = rng::stream(seed, i as u64);
        let row_p = &params.p[labels[i]];
        for j in i + 1..n {
            let u: f64 = stream.random();
            if u < row_p[labels[j]] {
                g.add_edge(i, j);
            }
        }
    }
    (g, labels)
}
