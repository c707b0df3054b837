use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::chow::{as_string, cap, int, GradedClass, HSeries, Rational};
use crate::error::{Error, Result};

use super::one_plus;

/// Milnor-fiber Euler characteristic `χ` and Euler obstruction `Eu` along
/// the singular locus, with the derived interpolation weights
/// `ρ = (1-Eu)/(χ-Eu)` and `σ = 1-ρ = (χ-1)/(χ-Eu)`.
///
/// Construction rejects `χ = 1` and `χ = Eu`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "InvariantInput")]
pub struct InvariantData {
    #[serde(with = "as_string")]
    chi: Rational,
    #[serde(with = "as_string")]
    eu: Rational,
    #[serde(with = "as_string")]
    rho: Rational,
    #[serde(with = "as_string")]
    sigma: Rational,
}

impl InvariantData {
    pub fn new(chi: Rational, eu: Rational) -> Result<Self> {
        if chi.is_one() || chi == eu {
            return Err(Error::DegenerateInvariants {
                chi: Box::new(chi),
                eu: Box::new(eu),
            });
        }
        let denom = &chi - &eu;
        let rho = (int(1) - &eu) / &denom;
        let sigma = (&chi - int(1)) / &denom;
        Ok(InvariantData {
            chi,
            eu,
            rho,
            sigma,
        })
    }

    pub fn chi(&self) -> &Rational {
        &self.chi
    }

    pub fn eu(&self) -> &Rational {
        &self.eu
    }

    pub fn rho(&self) -> &Rational {
        &self.rho
    }

    pub fn sigma(&self) -> &Rational {
        &self.sigma
    }
}

// rho and sigma are always derived, never read
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct InvariantInput {
    #[serde(with = "as_string")]
    chi: Rational,
    #[serde(with = "as_string")]
    eu: Rational,
}

impl TryFrom<InvariantInput> for InvariantData {
    type Error = Error;

    fn try_from(w: InvariantInput) -> Result<Self> {
        InvariantData::new(w.chi, w.eu)
    }
}

pub fn rho_sigma(chi: Rational, eu: Rational) -> Result<InvariantData> {
    InvariantData::new(chi, eu)
}

/// Multiplicities in the blow-up along the singularity subscheme `Y`: the
/// exceptional divisor is `m·E'` and the total transform of `X` is
/// `X~ + n·E'`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Multiplicities {
    #[serde(with = "as_string")]
    pub m: Rational,
    #[serde(with = "as_string")]
    pub n: Rational,
}

impl Multiplicities {
    /// `n/m = (χ-Eu)/(χ-1) = 1/σ`, the constant term relating `s(Y,X)` to `s(Y,M)`.
    pub fn ratio(&self) -> Option<Rational> {
        (!self.m.is_zero()).then(|| &self.n / &self.m)
    }
}

/// `m = (-1)^{dim X - dim Y}(χ-1)`, `n = (-1)^{dim X - dim Y}(χ-Eu)`.
pub fn lemma3_multiplicities(
    chi: &Rational,
    eu: &Rational,
    dim_x: usize,
    dim_y: usize,
) -> Result<Multiplicities> {
    if dim_x <= dim_y {
        return Err(Error::validation(format!(
            "singular locus must have smaller dimension than X (dim X = {dim_x}, dim Y = {dim_y})"
        )));
    }
    let sign = if (dim_x - dim_y).is_multiple_of(2) {
        int(1)
    } else {
        int(-1)
    };
    Ok(Multiplicities {
        m: &sign * (chi - int(1)),
        n: sign * (chi - eu),
    })
}

/// `(1+X)(c_Ma - c_F)`.
pub fn prop7_lhs(
    c_mather: &GradedClass,
    c_fulton: &GradedClass,
    d: &Rational,
) -> Result<GradedClass> {
    let diff = c_mather.sub(c_fulton)?;
    cap(&one_plus(diff.ambient_dim(), d.clone()), &diff)
}

/// `((Eu-χ) + (Eu-1)X) ∩ c_Y`, where `c_Y` is the pushforward of `c(TY') ∩ [Y']`.
pub fn prop7_rhs(
    c_y: &GradedClass,
    d: &Rational,
    chi: &Rational,
    eu: &Rational,
) -> Result<GradedClass> {
    let op = HSeries::linear(c_y.ambient_dim(), eu - chi, (eu - int(1)) * d);
    cap(&op, c_y)
}

/// Recovers `(Eu, χ)` from `(1+X)(c_Ma - c_F) = ((Eu-χ) + (Eu-1)X) ∩ c_Y`.
///
/// Each codimension `k` gives one linear equation
/// `c_Y[k]·a + d·c_Y[k-1]·b = lhs[k]` in `a = Eu-χ`, `b = Eu-1`. Two
/// independent equations fix the solution; every other equation must then
/// hold exactly.
pub fn solve_invariants(
    lhs: &GradedClass,
    c_y: &GradedClass,
    d: &Rational,
) -> Result<InvariantData> {
    let n = lhs.ambient_dim();
    c_y.check_same_dim(n)?;
    let rows: Vec<[Rational; 3]> = (0..=n)
        .map(|k| {
            let b = if k == 0 { int(0) } else { d * c_y.codim(k - 1) };
            [c_y.codim(k).clone(), b, lhs.codim(k).clone()]
        })
        .collect();

    let mut solution = None;
    'outer: for (i, r1) in rows.iter().enumerate() {
        for r2 in &rows[i + 1..] {
            let det = &r1[0] * &r2[1] - &r1[1] * &r2[0];
            if !det.is_zero() {
                let a = (&r1[2] * &r2[1] - &r1[1] * &r2[2]) / &det;
                let b = (&r1[0] * &r2[2] - &r1[2] * &r2[0]) / &det;
                solution = Some((a, b));
                break 'outer;
            }
        }
    }
    let Some((a, b)) = solution else {
        return Err(Error::Underdetermined(format!(
            "the equations from c_Y = {c_y} and d = {d} have rank < 2; \
             need d != 0 and a positive-dimensional singular locus"
        )));
    };

    for (k, row) in rows.iter().enumerate() {
        if &row[0] * &a + &row[1] * &b != row[2] {
            return Err(Error::Inconsistent(format!(
                "codimension {k}: {}·(Eu-χ) + {}·(Eu-1) = {} fails for Eu-χ = {a}, Eu-1 = {b}",
                row[0], row[1], row[2]
            )));
        }
    }
    let eu = b + int(1);
    let chi = &eu - a;
    InvariantData::new(chi, eu)
}
