use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{int, parse_rational, Rational};
use crate::error::{Error, Result};

/// A rational Chow class on `P^n`; `coeffs[k]` multiplies `[P^{n-k}]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ClassWire", into = "ClassWire")]
pub struct GradedClass {
    ambient_dim: usize,
    coeffs: Vec<Rational>,
}

impl GradedClass {
    pub fn new(ambient_dim: usize, coeffs_by_codim: Vec<Rational>) -> Result<Self> {
        if coeffs_by_codim.len() != ambient_dim + 1 {
            return Err(Error::validation(format!(
                "class on P^{ambient_dim} needs {} coefficients, got {}",
                ambient_dim + 1,
                coeffs_by_codim.len()
            )));
        }
        Ok(GradedClass {
            ambient_dim,
            coeffs: coeffs_by_codim,
        })
    }

    pub(crate) fn from_vec_unchecked(ambient_dim: usize, coeffs: Vec<Rational>) -> Self {
        debug_assert_eq!(coeffs.len(), ambient_dim + 1);
        GradedClass {
            ambient_dim,
            coeffs,
        }
    }

    /// Leading coefficients by codimension, zero-padded; anything past codim n is dropped.
    pub fn truncated<I>(ambient_dim: usize, coeffs_by_codim: I) -> Self
    where
        I: IntoIterator<Item = Rational>,
    {
        let mut c: Vec<Rational> = coeffs_by_codim.into_iter().take(ambient_dim + 1).collect();
        c.resize(ambient_dim + 1, int(0));
        GradedClass {
            ambient_dim,
            coeffs: c,
        }
    }

    pub fn from_ints(ambient_dim: usize, coeffs_by_codim: &[i64]) -> Self {
        Self::truncated(ambient_dim, coeffs_by_codim.iter().map(|&c| int(c)))
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Self::truncated(ambient_dim, [])
    }

    /// `c · [P^dim]`. Panics if `dim > n`.
    pub fn linear_space(ambient_dim: usize, dim: usize, c: Rational) -> Self {
        assert!(
            dim <= ambient_dim,
            "P^{dim} does not fit in P^{ambient_dim}"
        );
        let mut out = Self::zero(ambient_dim);
        out.coeffs[ambient_dim - dim] = c;
        out
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn codim(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    /// Coefficient of `[P^dim]`.
    pub fn dim_coeff(&self, dim: usize) -> &Rational {
        &self.coeffs[self.ambient_dim - dim]
    }

    /// Degree-zero part, i.e. the coefficient of `[P^0]`.
    pub fn degree(&self) -> &Rational {
        &self.coeffs[self.ambient_dim]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Largest dimension with a nonzero coefficient.
    pub fn top_dim(&self) -> Option<usize> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .map(|k| self.ambient_dim - k)
    }

    /// True when every nonzero piece has dimension at most `dim`.
    pub fn supported_in_dim(&self, dim: usize) -> bool {
        self.top_dim().is_none_or(|t| t <= dim)
    }

    /// True when the class is a multiple of `[P^dim]`.
    pub fn is_pure_dim(&self, dim: usize) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(k, c)| c.is_zero() || self.ambient_dim - k == dim)
    }

    pub(crate) fn check_same_dim(&self, other_dim: usize) -> Result<()> {
        if self.ambient_dim != other_dim {
            return Err(Error::DimensionMismatch {
                left: self.ambient_dim,
                right: other_dim,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &GradedClass) -> Result<GradedClass> {
        self.check_same_dim(other.ambient_dim)?;
        Ok(GradedClass {
            ambient_dim: self.ambient_dim,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &GradedClass) -> Result<GradedClass> {
        self.check_same_dim(other.ambient_dim)?;
        Ok(GradedClass {
            ambient_dim: self.ambient_dim,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, c: &Rational) -> GradedClass {
        GradedClass {
            ambient_dim: self.ambient_dim,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn neg(&self) -> GradedClass {
        self.scale(&int(-1))
    }
}

impl fmt::Display for GradedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.ambient_dim;
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| (c, format!("[ℙ{}]", superscript(n - k))));
        write_terms(f, terms)
    }
}

pub(crate) fn superscript(k: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    k.to_string()
        .chars()
        .map(|d| DIGITS[d.to_digit(10).unwrap() as usize])
        .collect()
}

/// Writes `c1 u1 + c2 u2 - ...`, skipping zero terms.
pub(crate) fn write_terms<'a, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: IntoIterator<Item = (&'a Rational, String)>,
{
    let mut first = true;
    for (c, unit) in terms {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else if c.is_negative() {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        if mag.is_integer() || unit.is_empty() {
            write!(f, "{mag}{unit}")?;
        } else {
            write!(f, "({mag}){unit}")?;
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ClassWire {
    ambient_dim: usize,
    coeffs_by_codim: Vec<String>,
}

impl TryFrom<ClassWire> for GradedClass {
    type Error = Error;

    fn try_from(w: ClassWire) -> Result<Self> {
        let coeffs = w
            .coeffs_by_codim
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()?;
        GradedClass::new(w.ambient_dim, coeffs)
    }
}

impl From<GradedClass> for ClassWire {
    fn from(c: GradedClass) -> Self {
        ClassWire {
            ambient_dim: c.ambient_dim,
            coeffs_by_codim: c.coeffs.iter().map(ToString::to_string).collect(),
        }
    }
}
