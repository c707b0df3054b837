//! Exact intersection theory on projective space.
//!
//! Everything lives in `A_*(P^n) ⊗ Q`, which is spanned by the linear subspaces
//! `[P^0], ..., [P^n]`. Classes are indexed by codimension, so that the class
//! `[P^{n-k}]` is the hyperplane power `H^k` capped with `[P^n]` and every `∩`
//! becomes a truncated polynomial product in `H`.

mod class;
mod ops;
mod rational;
mod series;

pub use class::GradedClass;
pub use ops::{cap, dual, tangent_chern_pn, twist, LineBundleOnPn};
pub use rational::{as_string, frac, int, parse_rational, Rational};
pub use series::HSeries;

/// Truncated convolution of two coefficient vectors of equal length.
pub(crate) fn convolve(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let len = a.len();
    let mut out = vec![int(0); len];
    for (i, ai) in a.iter().enumerate() {
        if num_traits::Zero::is_zero(ai) {
            continue;
        }
        for (j, bj) in b.iter().take(len - i).enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}
