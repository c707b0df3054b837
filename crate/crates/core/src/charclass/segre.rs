use crate::chow::{
    cap, dual, tangent_chern_pn, twist, GradedClass, HSeries, LineBundleOnPn, Rational,
};
use crate::error::{Error, Result};

use super::bundle::BundleData;
use super::invariants::InvariantData;
use super::polar::total_polar_class;
use super::spec::HypersurfaceSpec;
use super::{inverse_one_plus, one_plus};

/// `s(Y,X) = ((χ-Eu)/(χ-1) + X) ∩ s(Y,M)`.
pub fn segre_yx_from_ym(
    s_ym: &GradedClass,
    d: &Rational,
    inv: &InvariantData,
) -> Result<GradedClass> {
    let op = HSeries::linear(s_ym.ambient_dim(), inv.sigma().recip(), d.clone());
    cap(&op, s_ym)
}

/// `s(Y,M) = σ/(1+σX) ∩ s(Y,X)`, the inverse of [`segre_yx_from_ym`].
pub fn segre_ym_from_yx(
    s_yx: &GradedClass,
    d: &Rational,
    inv: &InvariantData,
) -> Result<GradedClass> {
    let n = s_yx.ambient_dim();
    let op = inverse_one_plus(n, inv.sigma() * d)?.scale(inv.sigma());
    cap(&op, s_yx)
}

fn divisor_segre(n: usize, d: &Rational) -> Result<GradedClass> {
    if n == 0 {
        return Err(Error::validation("a hypersurface needs n >= 1"));
    }
    cap(
        &inverse_one_plus(n, d.clone())?,
        &GradedClass::linear_space(n, n - 1, d.clone()),
    )
}

/// `[X]/(1+X) + s(Y,X)^∨ ⊗ L` for a degree-`d` hypersurface of `P^n`; capping
/// with `c(TP^n)` gives the Chern-Mather class.
pub fn mather_segre_class(s_yx: &GradedClass, n: usize, d: &Rational) -> Result<GradedClass> {
    s_yx.check_same_dim(n)?;
    let m = n as i64;
    let l = LineBundleOnPn::new(d.clone());
    divisor_segre(n, d)?.add(&twist(&dual(s_yx, m), &l, m)?)
}

/// Chern-Mather class from `s(Y,X)`.
pub fn mather_from_segre(s_yx: &GradedClass, n: usize, d: &Rational) -> Result<GradedClass> {
    cap(&tangent_chern_pn(n), &mather_segre_class(s_yx, n, d)?)
}

/// CSM class from `s(Y,M)`:
/// `c(TP^n) ∩ ([X]/(1+X) + (c(L) ∩ s(Y,M))^∨ ⊗ L)`.
pub fn csm_from_segre(s_ym: &GradedClass, n: usize, d: &Rational) -> Result<GradedClass> {
    s_ym.check_same_dim(n)?;
    let m = n as i64;
    let l = LineBundleOnPn::new(d.clone());
    let correction = twist(&dual(&cap(&one_plus(n, d.clone()), s_ym)?, m), &l, m)?;
    cap(
        &tangent_chern_pn(n),
        &divisor_segre(n, d)?.add(&correction)?,
    )
}

/// `s(Y,X) = [X] + c(N^*⊗L)/c(L)^{n-r-1} ∩ ([P]^∨ ⊗_M L)` where `N` is the
/// normal bundle of `X` in `P^n`, `L = O_M(X)|_X` acts as `d·H`, and `∨`, `⊗`
/// are taken relative to `M` (of dimension `r + 1`).
pub fn segre_sing_theorem5b(spec: &HypersurfaceSpec, normal: &BundleData) -> Result<GradedClass> {
    let n = spec.n();
    let r = spec.r();
    if normal.rank() != n - r {
        return Err(Error::validation(format!(
            "normal bundle of X in P^{n} must have rank {}, got {}",
            n - r,
            normal.rank()
        )));
    }
    normal.total_chern().check_same_dim(n)?;
    let m = spec.hypersurface_ambient_dim();
    let l = LineBundleOnPn::new(spec.d().clone());
    let numerator = normal.dual().twisted(&l).total_chern().clone();
    let exponent = n as i64 - r as i64 - 1;
    let op = numerator.mul(&l.chern(n).pow(-exponent)?)?;
    let p = total_polar_class(spec)?;
    let tail = cap(&op, &twist(&dual(&p, m), &l, m)?)?;
    spec.fundamental_class().add(&tail)
}

/// The hypersurface-of-`P^n` reduction `s(Y,X) = [P]^∨ ⊗ O(d) + [X]`.
pub fn segre_sing_plucker(spec: &HypersurfaceSpec) -> Result<GradedClass> {
    let n = spec.n();
    if spec.r() + 1 != n {
        return Err(Error::validation(format!(
            "the two-term formula needs a hypersurface of P^{n}, got r = {}",
            spec.r()
        )));
    }
    let m = n as i64;
    let l = LineBundleOnPn::new(spec.d().clone());
    let p = total_polar_class(spec)?;
    twist(&dual(&p, m), &l, m)?.add(spec.fundamental_class())
}
