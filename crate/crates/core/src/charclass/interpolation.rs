use crate::chow::{cap, int, tangent_chern_pn, GradedClass, Rational};
use crate::error::{Error, Result};

use super::invariants::InvariantData;
use super::inverse_one_plus;
use super::polar::total_polar_class;
use super::spec::HypersurfaceSpec;

/// Fulton class of a degree-`d` hypersurface of `P^n`:
/// `c(TP^n) ∩ d[P^{n-1}] / (1 + dH)`.
pub fn fulton_class(n: usize, d: &Rational) -> Result<GradedClass> {
    if n == 0 {
        return Err(Error::validation(
            "the Fulton class of a hypersurface needs n >= 1",
        ));
    }
    let x = GradedClass::linear_space(n, n - 1, d.clone());
    let op = tangent_chern_pn(n).mul(&inverse_one_plus(n, d.clone())?)?;
    cap(&op, &x)
}

/// Fulton class `c(TM) ∩ [X]/(1+X)` using the ambient tangent class of the input.
pub fn fulton_class_of(spec: &HypersurfaceSpec) -> Result<GradedClass> {
    let op = spec
        .ambient_tangent()
        .mul(&inverse_one_plus(spec.n(), spec.d().clone())?)?;
    cap(&op, spec.fundamental_class())
}

/// `c_(α) = c_F + (1-α)/(1+αX) ∩ (c_Ma - c_F)`, defined for every rational `α`.
pub fn interpolated_class(
    c_fulton: &GradedClass,
    c_mather: &GradedClass,
    d: &Rational,
    alpha: &Rational,
) -> Result<GradedClass> {
    let n = c_fulton.ambient_dim();
    let diff = c_mather.sub(c_fulton)?;
    let op = inverse_one_plus(n, alpha * d)?.scale(&(int(1) - alpha));
    c_fulton.add(&cap(&op, &diff)?)
}

/// CSM class as the interpolated class at `α = ρ`.
pub fn csm_theorem_main(
    c_fulton: &GradedClass,
    c_mather: &GradedClass,
    d: &Rational,
    inv: &InvariantData,
) -> Result<GradedClass> {
    interpolated_class(c_fulton, c_mather, d, inv.rho())
}

/// CSM class from polar data:
/// `c(TM) ∩ ρ[X]/(1+ρX) + c(TP^n) ∩ σ[P]/(1+ρX)`.
pub fn csm_corollary_polar(spec: &HypersurfaceSpec, inv: &InvariantData) -> Result<GradedClass> {
    let n = spec.n();
    let denom = inverse_one_plus(n, inv.rho() * spec.d())?;
    let virtual_part = cap(
        &spec.ambient_tangent().mul(&denom)?,
        &spec.fundamental_class().scale(inv.rho()),
    )?;
    let milnor_part = cap(
        &tangent_chern_pn(n).mul(&denom)?,
        &total_polar_class(spec)?.scale(inv.sigma()),
    )?;
    virtual_part.add(&milnor_part)
}
