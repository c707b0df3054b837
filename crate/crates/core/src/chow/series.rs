use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::convolve;
use super::rational::{int, parse_rational, Rational};
use crate::error::{Error, Result};

/// A polynomial in the hyperplane class `H`, truncated modulo `H^{n+1}`.
///
/// Holds cohomology operators such as total Chern classes `c(TP^n)`, `c(L)`
/// and expansions like `1/(1 + aH)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SeriesWire", into = "SeriesWire")]
pub struct HSeries {
    ambient_dim: usize,
    coeffs: Vec<Rational>,
}

impl HSeries {
    /// Builds a series from exactly `n + 1` coefficients.
    pub fn new(ambient_dim: usize, coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.len() != ambient_dim + 1 {
            return Err(Error::validation(format!(
                "series over P^{ambient_dim} needs {} coefficients, got {}",
                ambient_dim + 1,
                coeffs.len()
            )));
        }
        Ok(HSeries {
            ambient_dim,
            coeffs,
        })
    }

    /// Builds a series from any number of leading coefficients, padding with
    /// zeros and discarding everything of degree > n.
    pub fn truncated<I>(ambient_dim: usize, coeffs: I) -> Self
    where
        I: IntoIterator<Item = Rational>,
    {
        let mut c: Vec<Rational> = coeffs.into_iter().take(ambient_dim + 1).collect();
        c.resize(ambient_dim + 1, int(0));
        HSeries {
            ambient_dim,
            coeffs: c,
        }
    }

    pub fn from_ints(ambient_dim: usize, coeffs: &[i64]) -> Self {
        Self::truncated(ambient_dim, coeffs.iter().map(|&c| int(c)))
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Self::truncated(ambient_dim, [])
    }

    pub fn one(ambient_dim: usize) -> Self {
        Self::constant(ambient_dim, int(1))
    }

    pub fn constant(ambient_dim: usize, c: Rational) -> Self {
        Self::truncated(ambient_dim, [c])
    }

    /// `c0 + c1 H`.
    pub fn linear(ambient_dim: usize, c0: Rational, c1: Rational) -> Self {
        Self::truncated(ambient_dim, [c0, c1])
    }

    /// The monomial `c H^k` (zero when `k > n`).
    pub fn monomial(ambient_dim: usize, k: usize, c: Rational) -> Self {
        let mut s = Self::zero(ambient_dim);
        if k <= ambient_dim {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `H^k`; zero past the truncation order.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(|| int(0))
    }

    pub fn constant_term(&self) -> &Rational {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
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

    pub fn add(&self, other: &HSeries) -> Result<HSeries> {
        self.check_same_dim(other.ambient_dim)?;
        Ok(HSeries {
            ambient_dim: self.ambient_dim,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &HSeries) -> Result<HSeries> {
        self.check_same_dim(other.ambient_dim)?;
        Ok(HSeries {
            ambient_dim: self.ambient_dim,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, c: &Rational) -> HSeries {
        HSeries {
            ambient_dim: self.ambient_dim,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Truncated product modulo `H^{n+1}`.
    pub fn mul(&self, other: &HSeries) -> Result<HSeries> {
        self.check_same_dim(other.ambient_dim)?;
        Ok(HSeries {
            ambient_dim: self.ambient_dim,
            coeffs: convolve(&self.coeffs, &other.coeffs),
        })
    }

    /// Multiplicative inverse, solved degree by degree from
    /// `b_0 = 1/a_0`, `b_k = -(a_1 b_{k-1} + ... + a_k b_0) / a_0`.
    pub fn invert(&self) -> Result<HSeries> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::NonUnit);
        }
        let inv_a0 = a0.recip();
        let mut b: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        b.push(inv_a0.clone());
        for k in 1..=self.ambient_dim {
            let mut acc = int(0);
            for i in 1..=k {
                if !self.coeffs[i].is_zero() {
                    acc += &self.coeffs[i] * &b[k - i];
                }
            }
            b.push(-acc * &inv_a0);
        }
        Ok(HSeries {
            ambient_dim: self.ambient_dim,
            coeffs: b,
        })
    }

    /// `self^e` for any integer `e`; negative powers need a unit.
    pub fn pow(&self, e: i64) -> Result<HSeries> {
        let base = if e < 0 { self.invert()? } else { self.clone() };
        let mut exp = e.unsigned_abs();
        let mut acc = HSeries::one(self.ambient_dim);
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&sq)?;
            }
            exp >>= 1;
            if exp > 0 {
                sq = sq.mul(&sq)?;
            }
        }
        Ok(acc)
    }
}

impl fmt::Display for HSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.coeffs.iter().enumerate().map(|(k, c)| {
            let unit = match k {
                0 => String::new(),
                1 => "H".to_string(),
                _ => format!("H{}", super::class::superscript(k)),
            };
            (c, unit)
        });
        super::class::write_terms(f, terms)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SeriesWire {
    ambient_dim: usize,
    coeffs_by_degree: Vec<String>,
}

impl TryFrom<SeriesWire> for HSeries {
    type Error = Error;

    fn try_from(w: SeriesWire) -> Result<Self> {
        let coeffs = w
            .coeffs_by_degree
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()?;
        HSeries::new(w.ambient_dim, coeffs)
    }
}

impl From<HSeries> for SeriesWire {
    fn from(s: HSeries) -> Self {
        SeriesWire {
            ambient_dim: s.ambient_dim,
            coeffs_by_degree: s.coeffs.iter().map(ToString::to_string).collect(),
        }
    }
}
