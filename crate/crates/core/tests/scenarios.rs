use std::collections::BTreeMap;

use csm_core::chow::{frac, int, GradedClass};
use csm_core::scenarios::*;

#[test]
fn tangent_developable_passes() {
    let rep = example_tangent_developable();
    assert!(rep.passed(), "{rep}");
    assert_eq!(
        rep.entry("c_sm_segre").unwrap().computed,
        Some(Value::Class(GradedClass::from_ints(3, &[0, 4, 6, 4])))
    );
}

#[test]
fn cone_passes_for_d_3_to_8() {
    for d in 3..=8 {
        let rep = example_cone_over_nodal_curve(d).unwrap();
        assert!(rep.passed(), "d = {d}\n{rep}");
    }
}

#[test]
fn cone_d3_values() {
    let rep = example_cone_over_nodal_curve(3).unwrap();
    assert_eq!(
        rep.entry("alpha_polynomial_codim2").unwrap().computed,
        Some(Value::Polynomial(vec![int(5), int(-2), int(0)]))
    );
    assert_eq!(
        rep.entry("alpha_polynomial_codim3").unwrap().computed,
        Some(Value::Polynomial(vec![int(1), int(2), int(6)]))
    );
    assert_eq!(
        rep.entry("codim3_at_candidate").unwrap().computed,
        Some(Value::Scalar(frac(7, 2)))
    );
    assert_eq!(
        rep.entry("codim3_at_candidate").unwrap().expected,
        Value::Scalar(int(2))
    );
    assert_eq!(
        rep.entry("codim2_at_candidate").unwrap().computed,
        Some(Value::Scalar(int(4)))
    );
}

#[test]
fn cone_rejects_small_degree() {
    assert!(example_cone_over_nodal_curve(2).is_err());
}

#[test]
fn smooth_sanity_values() {
    let rep = smooth_hypersurface_sanity(3, 4).unwrap();
    assert!(rep.passed(), "{rep}");
    assert_eq!(
        rep.entry("euler_characteristic").unwrap().expected,
        Value::Scalar(int(24))
    );

    let line = smooth_hypersurface_sanity(2, 1).unwrap();
    assert!(line.passed());
    assert_eq!(
        line.entry("c_sm_segre").unwrap().computed,
        Some(Value::Class(GradedClass::from_ints(2, &[0, 1, 2])))
    );
    let conic = smooth_hypersurface_sanity(2, 2).unwrap();
    assert_eq!(
        conic.entry("c_mather_polar").unwrap().computed,
        Some(Value::Class(GradedClass::from_ints(2, &[0, 2, 2])))
    );
    for n in 1..=6 {
        for d in 1..=6 {
            assert!(
                smooth_hypersurface_sanity(n, d).unwrap().passed(),
                "n={n} d={d}"
            );
        }
    }
}

#[test]
fn reconstruction_agrees_at_a_fourth_point() {
    for d in 3..=8 {
        let rep = example_cone_over_nodal_curve(d).unwrap();
        assert!(rep.entry("reconstruction_at_5/3").unwrap().pass);
    }
}

#[test]
fn every_entry_carries_provenance_in_json() {
    let rep = example_tangent_developable();
    let j = serde_json::to_value(&rep).unwrap();
    for e in j["entries"].as_array().unwrap() {
        let p = e["provenance"].as_str().unwrap();
        assert!(["PAPER", "TRIVIAL", "DERIVED"].contains(&p), "{e}");
        assert!(e["pass"].as_bool().unwrap());
    }
}

#[test]
fn dispatch_by_name() {
    let mut params = BTreeMap::new();
    params.insert("d".to_string(), "6".to_string());
    let rep = run_scenario("cone-nodal-curve", &params).unwrap();
    assert_eq!(rep.inputs["d"], 6);
    assert!(rep.passed());
    for name in SCENARIOS {
        assert!(
            run_scenario(name, &BTreeMap::new()).unwrap().passed(),
            "{name}"
        );
    }
}
