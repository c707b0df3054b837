use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::chow::{int, HSeries, LineBundleOnPn};
use crate::error::{Error, Result};

use super::polar::binomial;

/// A vector bundle given by its rank and total Chern class in `H`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "BundleWire", into = "BundleWire")]
pub struct BundleData {
    rank: usize,
    total_chern: HSeries,
}

impl BundleData {
    /// Requires `c_0 = 1` and `c_i = 0` for `i > rank`.
    pub fn new(rank: usize, total_chern: HSeries) -> Result<Self> {
        if !total_chern.constant_term().is_one() {
            return Err(Error::validation(format!(
                "total Chern class must start with 1, got {total_chern}"
            )));
        }
        if let Some(i) =
            (rank + 1..total_chern.coeffs().len()).find(|&i| !total_chern.coeffs()[i].is_zero())
        {
            return Err(Error::validation(format!(
                "rank {rank} bundle cannot have nonzero c_{i} (total class {total_chern})"
            )));
        }
        Ok(BundleData { rank, total_chern })
    }

    /// `O(d)` on `P^n`.
    pub fn line_bundle(n: usize, bundle: &LineBundleOnPn) -> Self {
        BundleData {
            rank: 1,
            total_chern: bundle.chern(n),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn total_chern(&self) -> &HSeries {
        &self.total_chern
    }

    pub fn dual(&self) -> BundleData {
        let coeffs = self
            .total_chern
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 0 { c.clone() } else { -c })
            .collect::<Vec<_>>();
        BundleData {
            rank: self.rank,
            total_chern: HSeries::truncated(self.total_chern.ambient_dim(), coeffs),
        }
    }

    /// `E ⊗ L`.
    pub fn twisted(&self, bundle: &LineBundleOnPn) -> BundleData {
        let n = self.total_chern.ambient_dim();
        let e = self.rank as i64;
        let c = self.total_chern.coeffs();
        let lambda = &bundle.twist;
        // c_k(E ⊗ L) = Σ_i C(e-i, k-i) c_i(E) λ^{k-i}
        let coeffs = (0..=n).map(|k| {
            let mut acc = int(0);
            let mut lambda_pow = int(1);
            for i in (0..=k.min(self.rank)).rev() {
                if !c[i].is_zero() {
                    acc += binomial(e - i as i64, (k - i) as u64) * &c[i] * &lambda_pow;
                }
                lambda_pow *= lambda;
            }
            acc
        });
        BundleData {
            rank: self.rank,
            total_chern: HSeries::truncated(n, coeffs),
        }
    }
}

/// Total Chern class of `E ⊗ L` modulo `H^{n+1}`.
pub fn twisted_chern(bundle: &BundleData, line: &LineBundleOnPn, n: usize) -> Result<HSeries> {
    bundle.total_chern.check_same_dim(n)?;
    Ok(bundle.twisted(line).total_chern)
}

/// Total Chern class of `E^*`: `c_k(E^*) = (-1)^k c_k(E)`.
pub fn dual_bundle_chern(bundle: &BundleData, n: usize) -> Result<HSeries> {
    bundle.total_chern.check_same_dim(n)?;
    Ok(bundle.dual().total_chern)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BundleWire {
    rank: usize,
    total_chern: HSeries,
}

impl TryFrom<BundleWire> for BundleData {
    type Error = Error;

    fn try_from(w: BundleWire) -> Result<Self> {
        BundleData::new(w.rank, w.total_chern)
    }
}

impl From<BundleData> for BundleWire {
    fn from(b: BundleData) -> Self {
        BundleWire {
            rank: b.rank,
            total_chern: b.total_chern,
        }
    }
}
