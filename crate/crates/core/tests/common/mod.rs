#![allow(dead_code)]

use csm_core::charclass::{HypersurfaceSpec, InvariantData};
use csm_core::chow::{frac, int, GradedClass, HSeries, Rational};
use proptest::prelude::*;

pub fn g(n: usize, c: &[i64]) -> GradedClass {
    GradedClass::from_ints(n, c)
}

pub fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=9).prop_map(|(p, q)| frac(p, q))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| *r != int(0))
}

pub fn coeffs(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec(rational(), n + 1)
}

pub fn class_on(n: usize) -> impl Strategy<Value = GradedClass> {
    coeffs(n).prop_map(move |c| GradedClass::new(n, c).unwrap())
}

pub fn series_on(n: usize) -> impl Strategy<Value = HSeries> {
    coeffs(n).prop_map(move |c| HSeries::new(n, c).unwrap())
}

pub fn unit_series_on(n: usize) -> impl Strategy<Value = HSeries> {
    (nonzero_rational(), coeffs(n)).prop_map(move |(c0, mut c)| {
        c[0] = c0;
        HSeries::new(n, c).unwrap()
    })
}

pub fn dim() -> impl Strategy<Value = usize> {
    0usize..=6
}

/// Admissible (χ, Eu): χ ≠ 1 and χ ≠ Eu.
pub fn invariants() -> impl Strategy<Value = InvariantData> {
    (-12i64..=12, -12i64..=12)
        .prop_filter("nice", |(chi, eu)| *chi != 1 && chi != eu)
        .prop_map(|(chi, eu)| InvariantData::new(int(chi), int(eu)).unwrap())
}

/// Random polar data for an `r`-dimensional `X ⊂ P^n`, `n <= 6`.
pub fn polar_spec() -> impl Strategy<Value = HypersurfaceSpec> {
    (1usize..=6)
        .prop_flat_map(|n| (Just(n), 0..n))
        .prop_flat_map(|(n, r)| {
            (
                Just(n),
                Just(r),
                1i64..=9,
                proptest::collection::vec(-20i64..=20, r),
                rational(),
            )
        })
        .prop_map(|(n, r, deg, higher, d)| {
            let d = if r + 1 == n { int(deg) } else { d };
            let mut polar = vec![(0, GradedClass::linear_space(n, r, int(deg)))];
            for (i, c) in higher.into_iter().enumerate() {
                polar.push((i + 1, GradedClass::linear_space(n, r - i - 1, int(c))));
            }
            HypersurfaceSpec::new(n, r, d, polar).unwrap()
        })
}

/// Random hypersurface of `P^n`.
pub fn hypersurface_spec() -> impl Strategy<Value = HypersurfaceSpec> {
    (1usize..=6)
        .prop_flat_map(|n| {
            (
                Just(n),
                1i64..=9,
                proptest::collection::vec(-40i64..=40, n - 1),
            )
        })
        .prop_map(|(n, d, degs)| HypersurfaceSpec::hypersurface(n, d, &degs).unwrap())
}
