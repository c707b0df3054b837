use std::collections::BTreeMap;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::chow::{as_string, int, tangent_chern_pn, GradedClass, HSeries, Rational};
use crate::error::{Error, Result};

/// A variety `X ⊂ P^n` of dimension `r`, realized as a hypersurface in some
/// nonsingular `M`, together with its polar classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SpecWire", into = "SpecWire")]
pub struct HypersurfaceSpec {
    n: usize,
    r: usize,
    d: Rational,
    polar: Vec<GradedClass>,
    ambient_tangent: Option<HSeries>,
}

impl HypersurfaceSpec {
    /// `polar` lists `(k, [P_k])`; missing indices are zero.
    ///
    /// `[P_0]` is the fundamental class `[X]` and must be present. When `X` is
    /// a hypersurface of `P^n` (`r = n - 1`) it must equal `d[P^{n-1}]`.
    pub fn new<I>(n: usize, r: usize, d: Rational, polar: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, GradedClass)>,
    {
        if r > n {
            return Err(Error::validation(format!(
                "dimension r = {r} exceeds ambient dimension n = {n}"
            )));
        }
        let mut classes = vec![GradedClass::zero(n); r + 1];
        let mut seen = vec![false; r + 1];
        for (k, class) in polar {
            if k > r {
                return Err(Error::validation(format!(
                    "polar class P_{k} given but X has dimension {r}"
                )));
            }
            if class.ambient_dim() != n {
                return Err(Error::validation(format!(
                    "polar class P_{k} lives on P^{}, expected P^{n}",
                    class.ambient_dim()
                )));
            }
            if !class.is_pure_dim(r - k) {
                return Err(Error::validation(format!(
                    "polar class P_{k} = {class} must be a multiple of [P^{}]",
                    r - k
                )));
            }
            if seen[k] {
                return Err(Error::validation(format!("polar class P_{k} given twice")));
            }
            seen[k] = true;
            classes[k] = class;
        }
        if classes[0].is_zero() {
            return Err(Error::validation(
                "P_0 must be the (nonzero) fundamental class [X]",
            ));
        }
        if r + 1 == n && classes[0] != GradedClass::linear_space(n, r, d.clone()) {
            return Err(Error::validation(format!(
                "hypersurface of P^{n} with d = {d} needs P_0 = {d}[P^{r}], got {}",
                classes[0]
            )));
        }
        Ok(HypersurfaceSpec {
            n,
            r,
            d,
            polar: classes,
            ambient_tangent: None,
        })
    }

    /// Hypersurface of `P^n` of degree `d` with `[P_k] = polar_degrees[k-1]·[P^{n-1-k}]`.
    pub fn hypersurface(n: usize, d: i64, polar_degrees: &[i64]) -> Result<Self> {
        if n == 0 {
            return Err(Error::validation("a hypersurface needs n >= 1"));
        }
        let r = n - 1;
        let mut polar = vec![(0, GradedClass::linear_space(n, r, int(d)))];
        for (i, &deg) in polar_degrees.iter().enumerate() {
            let k = i + 1;
            if k > r {
                return Err(Error::validation(format!(
                    "polar class P_{k} given but X has dimension {r}"
                )));
            }
            polar.push((k, GradedClass::linear_space(n, r - k, int(deg))));
        }
        Self::new(n, r, int(d), polar)
    }

    /// Declares `c(TM)` restricted to `X`, for `M` other than `P^n`.
    pub fn with_ambient_tangent(mut self, tangent: HSeries) -> Result<Self> {
        if tangent.ambient_dim() != self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: tangent.ambient_dim(),
            });
        }
        if !tangent.constant_term().is_one() {
            return Err(Error::validation(format!(
                "ambient tangent class must have constant term 1, got {tangent}"
            )));
        }
        self.ambient_tangent = Some(tangent);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn d(&self) -> &Rational {
        &self.d
    }

    /// `[P_k]`, zero for `k > r`.
    pub fn polar(&self, k: usize) -> GradedClass {
        self.polar
            .get(k)
            .cloned()
            .unwrap_or_else(|| GradedClass::zero(self.n))
    }

    pub fn polar_classes(&self) -> &[GradedClass] {
        &self.polar
    }

    /// `[X] = [P_0]`.
    pub fn fundamental_class(&self) -> &GradedClass {
        &self.polar[0]
    }

    /// `c(TM)|_X`, defaulting to `c(TP^n)`.
    pub fn ambient_tangent(&self) -> HSeries {
        self.ambient_tangent
            .clone()
            .unwrap_or_else(|| tangent_chern_pn(self.n))
    }

    pub fn has_explicit_ambient_tangent(&self) -> bool {
        self.ambient_tangent.is_some()
    }

    /// Dimension of the ambient `M` in which `X` is a hypersurface.
    pub fn hypersurface_ambient_dim(&self) -> i64 {
        self.r as i64 + 1
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecWire {
    n: usize,
    r: usize,
    #[serde(with = "as_string")]
    d: Rational,
    polar: BTreeMap<usize, GradedClass>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    ambient_tangent: Option<HSeries>,
}

impl TryFrom<SpecWire> for HypersurfaceSpec {
    type Error = Error;

    fn try_from(w: SpecWire) -> Result<Self> {
        let spec = HypersurfaceSpec::new(w.n, w.r, w.d, w.polar)?;
        match w.ambient_tangent {
            Some(t) => spec.with_ambient_tangent(t),
            None => Ok(spec),
        }
    }
}

impl From<HypersurfaceSpec> for SpecWire {
    fn from(s: HypersurfaceSpec) -> Self {
        SpecWire {
            n: s.n,
            r: s.r,
            d: s.d,
            polar: s
                .polar
                .into_iter()
                .enumerate()
                .filter(|(k, c)| *k == 0 || !c.is_zero())
                .collect(),
            ambient_tangent: s.ambient_tangent,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, c: &[i64]) -> GradedClass {
        GradedClass::from_ints(n, c)
    }

    #[test]
    fn missing_polar_entries_are_zero() {
        let s = HypersurfaceSpec::new(3, 2, int(4), [(0, g(3, &[0, 4]))]).unwrap();
        assert_eq!(s.polar(1), GradedClass::zero(3));
        assert_eq!(s.polar(2), GradedClass::zero(3));
        assert_eq!(s.polar(7), GradedClass::zero(3));
    }

    #[test]
    fn rejects_bad_polar_data() {
        let p0 = (0, g(3, &[0, 4]));
        // index beyond r
        assert!(matches!(
            HypersurfaceSpec::new(3, 2, int(4), [p0.clone(), (3, g(3, &[0, 0, 0, 1]))]),
            Err(Error::Validation(_))
        ));
        // wrong support dimension
        assert!(matches!(
            HypersurfaceSpec::new(3, 2, int(4), [p0.clone(), (1, g(3, &[0, 0, 0, 3]))]),
            Err(Error::Validation(_))
        ));
        // P_0 must match d for a hypersurface of P^n
        assert!(matches!(
            HypersurfaceSpec::new(3, 2, int(5), [p0.clone()]),
            Err(Error::Validation(_))
        ));
        // P_0 is required
        assert!(matches!(
            HypersurfaceSpec::new(3, 2, int(4), [(1, g(3, &[0, 0, 3]))]),
            Err(Error::Validation(_))
        ));
        // wrong ambient
        assert!(matches!(
            HypersurfaceSpec::new(3, 2, int(4), [(0, g(2, &[0, 4]))]),
            Err(Error::Validation(_))
        ));
        assert!(HypersurfaceSpec::new(2, 3, int(1), [(0, g(2, &[1]))]).is_err());
    }

    #[test]
    fn curve_in_p3_is_not_tied_to_d() {
        // a twisted cubic, abstractly a hypersurface in some surface M
        let s = HypersurfaceSpec::new(
            3,
            1,
            int(2),
            [(0, g(3, &[0, 0, 3])), (1, g(3, &[0, 0, 0, 4]))],
        );
        assert!(s.is_ok());
    }

    #[test]
    fn ambient_tangent_checks() {
        let s = HypersurfaceSpec::hypersurface(3, 4, &[3]).unwrap();
        assert!(s
            .clone()
            .with_ambient_tangent(HSeries::from_ints(3, &[2]))
            .is_err());
        assert!(s.clone().with_ambient_tangent(HSeries::one(2)).is_err());
        let t = s
            .with_ambient_tangent(HSeries::from_ints(3, &[1, 4, 6, 4]))
            .unwrap();
        assert!(t.has_explicit_ambient_tangent());
    }

    #[test]
    fn json_contract() {
        let j = r#"{"n":3,"r":2,"d":"4","polar":{
            "0":{"ambient_dim":3,"coeffs_by_codim":["0","4","0","0"]},
            "1":{"ambient_dim":3,"coeffs_by_codim":["0","0","3","0"]}}}"#;
        let s: HypersurfaceSpec = serde_json::from_str(j).unwrap();
        assert_eq!(s, HypersurfaceSpec::hypersurface(3, 4, &[3, 0]).unwrap());
        let back: HypersurfaceSpec =
            serde_json::from_str(&serde_json::to_string(&s).unwrap()).unwrap();
        assert_eq!(back, s);
        let bad = r#"{"n":3,"r":2,"d":"4","degree":4,"polar":{
            "0":{"ambient_dim":3,"coeffs_by_codim":["0","4","0","0"]}}}"#;
        assert!(serde_json::from_str::<HypersurfaceSpec>(bad).is_err());
    }
}
