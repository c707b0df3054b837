use crate::chow::{
    cap, dual, int, tangent_chern_pn, twist, GradedClass, HSeries, LineBundleOnPn, Rational,
};
use crate::error::Result;

use super::spec::HypersurfaceSpec;

/// Total polar class `[P] = (-1)^{n-r} Σ_k [P_k]^∨ ⊗ O(1)`, with `∨` and `⊗`
/// taken relative to `P^n`.
pub fn total_polar_class(spec: &HypersurfaceSpec) -> Result<GradedClass> {
    let n = spec.n();
    let o1 = LineBundleOnPn::o(1);
    let mut sum = GradedClass::zero(n);
    for p in spec.polar_classes() {
        sum = sum.add(&twist(&dual(p, n as i64), &o1, n as i64)?)?;
    }
    if (n - spec.r()) % 2 == 1 {
        sum = sum.neg();
    }
    Ok(sum)
}

/// Chern-Mather class as `c(TP^n) ∩ [P]`.
pub fn mather_from_polar(spec: &HypersurfaceSpec) -> Result<GradedClass> {
    cap(&tangent_chern_pn(spec.n()), &total_polar_class(spec)?)
}

/// Chern-Mather class as the double sum over polar classes
/// `Σ_{k≥0} Σ_{i=0..k} (-1)^{k-i} C(r+1-k+i, i) H^i · [P_{k-i}]`.
///
/// Computed term by term without going through `[P]`; agrees with
/// [`mather_from_polar`].
pub fn mather_piene_double_sum(spec: &HypersurfaceSpec) -> Result<GradedClass> {
    let n = spec.n();
    let r = spec.r() as i64;
    let mut out = GradedClass::zero(n);
    // H^i vanishes for i > n and P_j for j > r
    for k in 0..=(spec.r() + n) {
        for i in 0..=k.min(n) {
            let j = k - i;
            if j > spec.r() {
                continue;
            }
            let sign = if (k - i) % 2 == 0 { int(1) } else { int(-1) };
            let coeff = sign * binomial(r + 1 - k as i64 + i as i64, i as u64);
            let hi = HSeries::monomial(n, i, coeff);
            out = out.add(&cap(&hi, &spec.polar(j))?)?;
        }
    }
    Ok(out)
}

/// `C(top, k)` for any integer `top`.
pub(crate) fn binomial(top: i64, k: u64) -> Rational {
    let mut acc = int(1);
    for i in 0..k as i64 {
        acc = acc * int(top - i) / int(i + 1);
    }
    acc
}
