use std::io::Cursor;
use std::process::Command;

use num_traits::Signed;

use csm_core::chow::GradedClass;
use csm_core::cli::{run, run_with_stdin, Outcome};

const SPEC41: &str = concat!(
    env!("CARGO_MANIFEST_DIR"),
    "/fixtures/tangent_developable.json"
);
const LHS41: &str = concat!(
    env!("CARGO_MANIFEST_DIR"),
    "/fixtures/tangent_developable_lhs.json"
);
const CY41: &str = concat!(
    env!("CARGO_MANIFEST_DIR"),
    "/fixtures/tangent_developable_cy.json"
);
const INV41: &str = concat!(
    env!("CARGO_MANIFEST_DIR"),
    "/fixtures/tangent_developable_invariants.json"
);
const CONE3: &str = concat!(
    env!("CARGO_MANIFEST_DIR"),
    "/fixtures/cone_nodal_cubic.json"
);

fn csmcalc(args: &[&str]) -> Outcome {
    run(std::iter::once("csmcalc").chain(args.iter().copied()))
}

fn csmcalc_stdin(args: &[&str], stdin: &str) -> Outcome {
    run_with_stdin(
        std::iter::once("csmcalc").chain(args.iter().copied()),
        &mut Cursor::new(stdin.as_bytes().to_vec()),
    )
}

fn ok(out: &Outcome) -> &str {
    assert_eq!(out.code, 0, "stderr: {}", out.stderr);
    &out.stdout
}

fn line<'a>(out: &'a str, key: &str) -> &'a str {
    out.lines()
        .find(|l| l.split_whitespace().next() == Some(key))
        .unwrap_or_else(|| panic!("no {key} in\n{out}"))
}

#[test]
fn csm_of_tangent_developable() {
    let out = csmcalc(&["csm", "--spec", SPEC41, "--chi=-1", "--eu=2"]);
    assert!(line(ok(&out), "c_sm").ends_with("4[ℙ²] + 6[ℙ¹] + 4[ℙ⁰]"));
    let out = csmcalc(&["csm", "--spec", SPEC41, "--chi", "-1", "--eu", "2"]);
    assert!(line(ok(&out), "c_sm").ends_with("4[ℙ²] + 6[ℙ¹] + 4[ℙ⁰]"));
    let out = csmcalc(&["csm-polar", "--spec", SPEC41, "--invariants", INV41]);
    assert!(line(ok(&out), "c_sm").ends_with("4[ℙ²] + 6[ℙ¹] + 4[ℙ⁰]"));
}

#[test]
fn interpolate_at_zero_is_mather() {
    let out = csmcalc(&["interpolate", "--alpha", "0", "--spec", SPEC41]);
    let text = ok(&out);
    let mather = line(text, "c_mather").trim_start_matches("c_mather").trim();
    let alpha = line(text, "c_alpha").trim_start_matches("c_alpha").trim();
    assert_eq!(mather, alpha);
    assert_eq!(alpha, "4[ℙ²] + 9[ℙ¹] + 6[ℙ⁰]");
}

#[test]
fn solve_invariants_of_tangent_developable() {
    let out = csmcalc(&["solve-invariants", "--lhs", LHS41, "--cy", CY41, "--d", "4"]);
    assert!(ok(&out).contains("Eu = 2, χ = -1, ρ = 1/3, σ = 2/3"));
}

#[test]
fn other_subcommands() {
    let out = csmcalc(&["fulton", "--n", "3", "--d", "4"]);
    assert!(ok(&out).contains("4[ℙ²] + 24[ℙ⁰]"));
    let out = csmcalc(&["polar-total", "--spec", SPEC41]);
    assert!(ok(&out).contains("4[ℙ²] - 7[ℙ¹] + 10[ℙ⁰]"));
    let out = csmcalc(&["segre-5b", "--spec", SPEC41]);
    assert!(line(ok(&out), "s_YX").ends_with("9[ℙ¹] - 18[ℙ⁰]"));
    let syx = r#"{"ambient_dim":3,"coeffs_by_codim":["0","0","9","-18"]}"#;
    let out = csmcalc(&[
        "segre-convert",
        "--class",
        syx,
        "--d",
        "4",
        "--to",
        "ym",
        "--chi=-1",
        "--eu=2",
    ]);
    assert!(line(ok(&out), "s_YM").ends_with("6[ℙ¹] - 28[ℙ⁰]"));
    let sym = r#"{"ambient_dim":3,"coeffs_by_codim":["0","0","6","-28"]}"#;
    let out = csmcalc(&[
        "segre-convert",
        "--class",
        sym,
        "--d",
        "4",
        "--to",
        "yx",
        "--chi=-1",
        "--eu=2",
    ]);
    assert!(line(ok(&out), "s_YX").ends_with("9[ℙ¹] - 18[ℙ⁰]"));
    let out = csmcalc(&["mather", "--syx", syx, "--n", "3", "--d", "4"]);
    assert!(line(ok(&out), "c_mather").ends_with("4[ℙ²] + 9[ℙ¹] + 6[ℙ⁰]"));
    let out = csmcalc(&[
        "multiplicities",
        "--chi=-1",
        "--eu=2",
        "--dim-x",
        "2",
        "--dim-y",
        "1",
    ]);
    assert!(ok(&out).contains("m = 2, n = 3"));
    let out = csmcalc(&["interpolate", "--alpha", "1/2", "--spec", CONE3]);
    assert!(line(ok(&out), "c_alpha").ends_with("3[ℙ²] + 4[ℙ¹] + (7/2)[ℙ⁰]"));
}

#[test]
fn json_output_feeds_back_in() {
    let cf = csmcalc(&[
        "--format", "json", "--only", "c_fulton", "fulton", "--n", "3", "--d", "4",
    ]);
    let cma = csmcalc(&[
        "--format", "json", "--only", "c_mather", "mather", "--spec", SPEC41,
    ]);
    let cf_text = ok(&cf).trim().to_string();
    let out = csmcalc_stdin(
        &[
            "--format",
            "json",
            "--only",
            "c_alpha",
            "interpolate",
            "--alpha",
            "1/3",
            "--cf",
            &cf_text,
            "--cma",
            "-",
            "--d",
            "4",
        ],
        ok(&cma),
    );
    let c: GradedClass = serde_json::from_str(ok(&out)).unwrap();
    assert_eq!(c, GradedClass::from_ints(3, &[0, 4, 6, 4]));
    // bit-exact: re-serializing the parsed value reproduces the bytes
    assert_eq!(serde_json::to_string(&c).unwrap(), ok(&out).trim());
}

#[test]
fn full_json_document_has_stable_keys() {
    let out = csmcalc(&[
        "--format", "json", "csm", "--spec", SPEC41, "--chi=-1", "--eu=2",
    ]);
    let j: serde_json::Value = serde_json::from_str(ok(&out)).unwrap();
    for key in [
        "command",
        "inputs",
        "c_fulton",
        "c_mather",
        "c_sm",
        "invariants",
    ] {
        assert!(j.get(key).is_some(), "missing {key}");
    }
    assert_eq!(j["invariants"]["rho"], "1/3");
    assert_eq!(j["inputs"]["spec"]["d"], "4");
    let c_sm: GradedClass = serde_json::from_value(j["c_sm"].clone()).unwrap();
    assert_eq!(c_sm, GradedClass::from_ints(3, &[0, 4, 6, 4]));
}

#[test]
fn table_and_json_render_the_same_rationals() {
    let args = ["interpolate", "--alpha", "2/7", "--spec", CONE3];
    let table = csmcalc(&args);
    let mut json_args = vec!["--format", "json", "--only", "c_alpha"];
    json_args.extend(args);
    let json = csmcalc(&json_args);
    let c: GradedClass = serde_json::from_str(ok(&json)).unwrap();
    let rendered = line(ok(&table), "c_alpha")
        .trim_start_matches("c_alpha")
        .trim()
        .to_string();
    assert_eq!(rendered, c.to_string());
    assert!(c.coeffs().iter().any(|q| !q.is_integer()));
    for q in c.coeffs().iter().filter(|q| !q.is_integer()) {
        assert!(
            rendered.contains(&q.abs().to_string()),
            "{q} not in {rendered}"
        );
    }
}

#[test]
fn run_scenario_outputs() {
    let out = csmcalc(&["run-scenario", "tangent-developable"]);
    assert!(ok(&out).contains("PASS: 16 of 16 checks passed"));
    let out = csmcalc(&[
        "--format",
        "json",
        "run-scenario",
        "cone-nodal-curve",
        "--param",
        "d=5",
    ]);
    let j: serde_json::Value = serde_json::from_str(ok(&out)).unwrap();
    assert_eq!(j["name"], "cone-nodal-curve");
    assert_eq!(j["inputs"]["d"], 5);
    let out = csmcalc(&[
        "run-scenario",
        "smooth-hypersurface",
        "--param",
        "n=4",
        "--param",
        "d=3",
    ]);
    assert!(ok(&out).contains("euler_characteristic"));
}

#[test]
fn exit_codes() {
    // usage and parse errors
    assert_eq!(csmcalc(&["frobnicate"]).code, 2);
    assert_eq!(csmcalc(&["polar-total", "--spec", "{not json"]).code, 2);
    assert_eq!(
        csmcalc(&["polar-total", "--spec", "/nonexistent/spec.json"]).code,
        2
    );
    let unknown = r#"{"n":3,"r":2,"d":"4","colour":"red","polar":{"0":{"ambient_dim":3,"coeffs_by_codim":["0","4","0","0"]}}}"#;
    assert_eq!(csmcalc(&["polar-total", "--spec", unknown]).code, 2);
    assert_eq!(csmcalc(&["fulton", "--n", "3", "--d", "4/0"]).code, 2);
    assert_eq!(
        csmcalc(&["run-scenario", "cone-nodal-curve", "--param", "d"]).code,
        2
    );
    assert_eq!(
        csmcalc(&["--only", "nope", "fulton", "--n", "3", "--d", "4"]).code,
        2
    );
    assert_eq!(
        csmcalc_stdin(
            &["solve-invariants", "--lhs", "-", "--cy", "-", "--d", "4"],
            "{}"
        )
        .code,
        2
    );

    // validation
    let bad_support = r#"{"n":3,"r":2,"d":"4","polar":{"0":{"ambient_dim":3,"coeffs_by_codim":["0","4","0","0"]},"1":{"ambient_dim":3,"coeffs_by_codim":["0","0","0","3"]}}}"#;
    let out = csmcalc(&["polar-total", "--spec", bad_support]);
    assert_eq!(out.code, 3, "{}", out.stderr);
    assert!(out.stderr.starts_with("error: "));
    assert_eq!(out.stderr.lines().count(), 1);
    let point = r#"{"ambient_dim":3,"coeffs_by_codim":["0","0","0","1"]}"#;
    let lhs = r#"{"ambient_dim":3,"coeffs_by_codim":["0","0","0","5"]}"#;
    assert_eq!(
        csmcalc(&["solve-invariants", "--lhs", lhs, "--cy", point, "--d", "4"]).code,
        3
    );
    assert_eq!(csmcalc(&["fulton", "--n", "0", "--d", "1"]).code, 3);
    assert_eq!(csmcalc(&["run-scenario", "nope"]).code, 3);

    // degenerate invariants
    assert_eq!(
        csmcalc(&["csm", "--spec", SPEC41, "--chi", "1", "--eu", "2"]).code,
        4
    );
    assert_eq!(
        csmcalc(&["csm", "--spec", SPEC41, "--chi", "3", "--eu", "3"]).code,
        4
    );
    let inv = r#"{"chi":"2","eu":"2"}"#;
    assert_eq!(
        csmcalc(&["csm-polar", "--spec", SPEC41, "--invariants", inv]).code,
        4
    );
    let zero = r#"{"ambient_dim":3,"coeffs_by_codim":["0","0","0","0"]}"#;
    assert_eq!(
        csmcalc(&["solve-invariants", "--lhs", zero, "--cy", CY41, "--d", "4"]).code,
        4
    );

    // inconsistent
    let cy = r#"{"ambient_dim":3,"coeffs_by_codim":["0","3","3","2"]}"#;
    assert_eq!(
        csmcalc(&["solve-invariants", "--lhs", LHS41, "--cy", cy, "--d", "4"]).code,
        5
    );
}

#[test]
fn help_is_not_an_error() {
    let out = csmcalc(&["--help"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("run-scenario"));
}

#[test]
fn binary_end_to_end() {
    let out = Command::new(env!("CARGO_BIN_EXE_csmcalc"))
        .args(["csm", "--spec", SPEC41, "--chi=-1", "--eu=2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains("4[ℙ²] + 6[ℙ¹] + 4[ℙ⁰]"));
    let out = Command::new(env!("CARGO_BIN_EXE_csmcalc"))
        .args(["csm", "--spec", SPEC41, "--chi=1", "--eu=2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
}
