//! Characteristic classes of a hypersurface `X` with smooth singular locus.
//!
//! The classes all live in `A_*(P^n) ⊗ Q` (pushforwards from `X`):
//!
//! * Fulton's class `c_F(X) = c(TM) ∩ [X]/(1+X)`,
//! * the Chern-Mather class, either from the polar classes of `X ⊂ P^n` or
//!   from the Segre class `s(Y, X)` of the singularity subscheme,
//! * the interpolation family `c_(α)` between the two, whose member at
//!   `α = ρ = (1-Eu)/(χ-Eu)` is the Chern-Schwartz-MacPherson class.
//!
//! The divisor `X = c_1(O_M(X))` acts on every class as multiplication by
//! `d·H` for a declared rational `d`.

mod bundle;
mod interpolation;
mod invariants;
mod polar;
mod segre;
mod spec;

pub use bundle::{dual_bundle_chern, twisted_chern, BundleData};
pub use interpolation::{
    csm_corollary_polar, csm_theorem_main, fulton_class, fulton_class_of, interpolated_class,
};
pub use invariants::{
    lemma3_multiplicities, prop7_lhs, prop7_rhs, rho_sigma, solve_invariants, InvariantData,
    Multiplicities,
};
pub use polar::{mather_from_polar, mather_piene_double_sum, total_polar_class};
pub use segre::{
    csm_from_segre, mather_from_segre, mather_segre_class, segre_sing_plucker,
    segre_sing_theorem5b, segre_ym_from_yx, segre_yx_from_ym,
};
pub use spec::HypersurfaceSpec;

use crate::chow::{int, HSeries, Rational};
use crate::error::Result;

/// `1 + c·H` over `P^n`.
pub(crate) fn one_plus(n: usize, c: Rational) -> HSeries {
    HSeries::linear(n, int(1), c)
}

/// `(1 + c·H)^{-1}`.
pub(crate) fn inverse_one_plus(n: usize, c: Rational) -> Result<HSeries> {
    one_plus(n, c).invert()
}
