use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::class::GradedClass;
use super::convolve;
use super::rational::{int, Rational};
use super::series::HSeries;
use crate::error::Result;

/// Line bundle on `P^n` with `c_1 = λH`. Non-integral λ stands for a formal
/// divisor such as `ρX`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LineBundleOnPn {
    #[serde(with = "super::rational::as_string")]
    pub twist: Rational,
}

impl LineBundleOnPn {
    pub fn new(twist: Rational) -> Self {
        LineBundleOnPn { twist }
    }

    /// `O(d)`.
    pub fn o(d: i64) -> Self {
        LineBundleOnPn::new(int(d))
    }

    pub fn dual(&self) -> Self {
        LineBundleOnPn::new(-&self.twist)
    }

    /// Total Chern class `1 + λH`.
    pub fn chern(&self, ambient_dim: usize) -> HSeries {
        HSeries::linear(ambient_dim, int(1), self.twist.clone())
    }
}

/// `s ∩ A`: the coefficient of `[P^{n-k}]` is `Σ_{i+j=k} s_i A_j`.
pub fn cap(s: &HSeries, a: &GradedClass) -> Result<GradedClass> {
    s.check_same_dim(a.ambient_dim())?;
    Ok(GradedClass::from_vec_unchecked(
        a.ambient_dim(),
        convolve(s.coeffs(), a.coeffs()),
    ))
}

// dimension of the codim-k piece minus the relative dimension
fn excess(ambient_dim: usize, k: usize, relative_dim: i64) -> i64 {
    (ambient_dim - k) as i64 - relative_dim
}

/// `A^∨` relative to an ambient variety of dimension `relative_dim`: the
/// dimension-`p` piece picks up the sign `(-1)^{p - relative_dim}`.
pub fn dual(a: &GradedClass, relative_dim: i64) -> GradedClass {
    let n = a.ambient_dim();
    let coeffs = a
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| {
            if excess(n, k, relative_dim).rem_euclid(2) == 0 {
                c.clone()
            } else {
                -c
            }
        })
        .collect();
    GradedClass::from_vec_unchecked(n, coeffs)
}

/// `A ⊗ L` relative to an ambient variety of dimension `relative_dim`: the
/// dimension-`p` piece is capped with `c(L)^{p - relative_dim}`.
pub fn twist(a: &GradedClass, bundle: &LineBundleOnPn, relative_dim: i64) -> Result<GradedClass> {
    let n = a.ambient_dim();
    let chern = bundle.chern(n);
    let mut out = GradedClass::zero(n);
    for (k, c) in a.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let factor = chern.pow(excess(n, k, relative_dim))?;
        let piece = GradedClass::linear_space(n, n - k, c.clone());
        out = out.add(&cap(&factor, &piece)?)?;
    }
    Ok(out)
}

/// `c(TP^n) = (1 + H)^{n+1}` truncated at `H^{n+1}`.
pub fn tangent_chern_pn(n: usize) -> HSeries {
    let mut binom = int(1);
    let mut coeffs = Vec::with_capacity(n + 1);
    for k in 0..=n {
        coeffs.push(binom.clone());
        binom = binom * int((n + 1 - k) as i64) / int(k as i64 + 1);
    }
    HSeries::truncated(n, coeffs)
}
