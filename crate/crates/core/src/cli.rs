//! Command-line front end.
//!
//! Inputs that take JSON (`--spec`, `--cf`, `--lhs`, ...) accept a file path,
//! an inline JSON object (anything starting with `{`), or `-` for stdin.
//! Exit codes: 0 success, 1 failing scenario, 2 parse/usage error,
//! 3 validation error, 4 degenerate invariants, 5 inconsistent system.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Display;
use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{json, Value as Json};

use crate::charclass::{
    csm_corollary_polar, csm_theorem_main, fulton_class, fulton_class_of, interpolated_class,
    lemma3_multiplicities, mather_from_polar, mather_from_segre, segre_sing_theorem5b,
    segre_ym_from_yx, segre_yx_from_ym, solve_invariants, total_polar_class, BundleData,
    HypersurfaceSpec, InvariantData,
};
use crate::chow::{parse_rational, GradedClass, LineBundleOnPn};
use crate::error::{Error, Result};
use crate::scenarios::run_scenario;

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

pub const EXIT_SCENARIO_FAILED: u8 = 1;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_VALIDATION: u8 = 3;
pub const EXIT_DEGENERATE: u8 = 4;
pub const EXIT_INCONSISTENT: u8 = 5;

pub fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Parse(_) => EXIT_PARSE,
        Error::DimensionMismatch { .. }
        | Error::NonUnit
        | Error::Validation(_)
        | Error::Underdetermined(_) => EXIT_VALIDATION,
        Error::DegenerateInvariants { .. } => EXIT_DEGENERATE,
        Error::Inconsistent(_) => EXIT_INCONSISTENT,
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "csmcalc",
    version,
    about = "Exact Fulton, Chern-Mather and Chern-Schwartz-MacPherson classes of hypersurfaces"
)]
struct Cli {
    /// Output rendering.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,

    /// Print only the named result (e.g. `c_sm`).
    #[arg(long, global = true, value_name = "KEY")]
    only: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SegreTarget {
    /// s(Y,M) to s(Y,X)
    Yx,
    /// s(Y,X) to s(Y,M)
    Ym,
}

#[derive(Args, Debug)]
struct InvariantArgs {
    /// Milnor-fiber Euler characteristic χ.
    #[arg(long, allow_hyphen_values = true)]
    chi: Option<String>,
    /// Local Euler obstruction Eu.
    #[arg(long, allow_hyphen_values = true)]
    eu: Option<String>,
    /// InvariantData JSON `{"chi": .., "eu": ..}` instead of --chi/--eu.
    #[arg(long, conflicts_with_all = ["chi", "eu"], value_name = "SRC")]
    invariants: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Fulton class of a degree-d hypersurface of P^n.
    Fulton {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        d: String,
    },
    /// Total polar class [P].
    PolarTotal {
        #[arg(long, value_name = "SRC")]
        spec: String,
    },
    /// Chern-Mather class from polar data (--spec) or from s(Y,X) (--syx, --n, --d).
    Mather {
        #[arg(long, value_name = "SRC", conflicts_with = "syx")]
        spec: Option<String>,
        #[arg(long, value_name = "SRC", requires_all = ["n", "d"])]
        syx: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        d: Option<String>,
    },
    /// Interpolated class c_(α), from a spec or from explicit c_F and c_Ma.
    Interpolate {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, value_name = "SRC", conflicts_with_all = ["cf", "cma"])]
        spec: Option<String>,
        #[arg(long, value_name = "SRC", requires_all = ["cma", "d"])]
        cf: Option<String>,
        #[arg(long, value_name = "SRC", requires = "cf")]
        cma: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        d: Option<String>,
    },
    /// CSM class as c_(ρ) from Fulton and Mather classes.
    Csm {
        #[arg(long, value_name = "SRC")]
        spec: String,
        #[command(flatten)]
        inv: InvariantArgs,
    },
    /// CSM class from the total polar class.
    CsmPolar {
        #[arg(long, value_name = "SRC")]
        spec: String,
        #[command(flatten)]
        inv: InvariantArgs,
    },
    /// Segre class s(Y,X) of the singularity subscheme from polar data.
    #[command(name = "segre-5b")]
    Segre5b {
        #[arg(long, value_name = "SRC")]
        spec: String,
        /// BundleData JSON for the normal bundle of X in P^n; defaults to O(d)
        /// for hypersurfaces of P^n.
        #[arg(long, value_name = "SRC")]
        normal: Option<String>,
    },
    /// Convert between s(Y,X) and s(Y,M).
    SegreConvert {
        #[arg(long, value_name = "SRC")]
        class: String,
        #[arg(long, allow_hyphen_values = true)]
        d: String,
        #[arg(long, value_enum)]
        to: SegreTarget,
        #[command(flatten)]
        inv: InvariantArgs,
    },
    /// Recover (Eu, χ) from (1+X)(c_Ma - c_F) and c(TY') ∩ [Y'].
    SolveInvariants {
        #[arg(long, value_name = "SRC")]
        lhs: String,
        #[arg(long, value_name = "SRC")]
        cy: String,
        #[arg(long, allow_hyphen_values = true)]
        d: String,
    },
    /// Blow-up multiplicities m and n.
    Multiplicities {
        #[command(flatten)]
        inv: InvariantArgs,
        #[arg(long)]
        dim_x: usize,
        #[arg(long)]
        dim_y: usize,
    },
    /// Run a named scenario: tangent-developable, cone-nodal-curve, smooth-hypersurface.
    RunScenario {
        name: String,
        /// Scenario parameter, e.g. `--param d=5`.
        #[arg(long = "param", value_name = "KEY=VALUE")]
        params: Vec<String>,
    },
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with_stdin(argv, &mut std::io::stdin())
}

pub fn run_with_stdin<I, T>(argv: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let mut ctx = Context {
        stdin,
        stdin_used: false,
    };
    match execute(&cli, &mut ctx) {
        Ok((code, stdout)) => Outcome {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

struct Context<'a> {
    stdin: &'a mut dyn Read,
    stdin_used: bool,
}

impl Context<'_> {
    fn read_source(&mut self, src: &str) -> Result<String> {
        if src == "-" {
            if self.stdin_used {
                return Err(Error::Parse(
                    "standard input can feed only one argument".into(),
                ));
            }
            self.stdin_used = true;
            let mut buf = String::new();
            self.stdin
                .read_to_string(&mut buf)
                .map_err(|e| Error::Parse(format!("reading stdin: {e}")))?;
            Ok(buf)
        } else if src.trim_start().starts_with('{') {
            Ok(src.to_string())
        } else {
            std::fs::read_to_string(src).map_err(|e| Error::Parse(format!("reading {src}: {e}")))
        }
    }

    fn load<T: DeserializeOwned>(&mut self, src: &str, what: &str) -> Result<T> {
        let text = self.read_source(src)?;
        serde_json::from_str(&text).map_err(|e| classify_json_error(what, e))
    }

    fn invariants(&mut self, args: &InvariantArgs) -> Result<InvariantData> {
        if let Some(src) = &args.invariants {
            // parsed field by field so degenerate values keep their own exit code
            let raw: RawInvariants = self.load(src, "invariants")?;
            return InvariantData::new(parse_rational(&raw.chi)?, parse_rational(&raw.eu)?);
        }
        match (&args.chi, &args.eu) {
            (Some(chi), Some(eu)) => InvariantData::new(parse_rational(chi)?, parse_rational(eu)?),
            _ => Err(Error::Parse("need --chi and --eu, or --invariants".into())),
        }
    }
}

#[derive(serde::Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInvariants {
    chi: String,
    eu: String,
}

// Errors raised by our own validation inside deserialization keep their
// category; everything else (syntax, unknown keys, bad rationals) is a parse error.
fn classify_json_error(what: &str, e: serde_json::Error) -> Error {
    let msg = e.to_string();
    if msg.starts_with("invalid input") || msg.starts_with("ambient dimension mismatch") {
        return Error::Validation(format!("{what}: {msg}"));
    }
    Error::Parse(format!("{what}: {msg}"))
}

/// Named results in display order.
struct Report {
    command: &'static str,
    inputs: Json,
    items: Vec<(&'static str, Json, String)>,
}

impl Report {
    fn new(command: &'static str, inputs: Json) -> Self {
        Report {
            command,
            inputs,
            items: Vec::new(),
        }
    }

    fn push<T: Serialize + Display>(&mut self, key: &'static str, value: &T) {
        let j = serde_json::to_value(value).expect("result serializes");
        self.items.push((key, j, value.to_string()));
    }

    fn render(self, format: Format, only: Option<&str>) -> Result<String> {
        if let Some(key) = only {
            let (_, j, text) = self
                .items
                .into_iter()
                .find(|(k, _, _)| *k == key)
                .ok_or_else(|| {
                    Error::Parse(format!("no result named {key:?} for {}", self.command))
                })?;
            return Ok(match format {
                Format::Json => format!("{}\n", serde_json::to_string(&j).expect("json")),
                Format::Table => format!("{text}\n"),
            });
        }
        Ok(match format {
            Format::Json => {
                let mut obj = serde_json::Map::new();
                obj.insert("command".into(), json!(self.command));
                obj.insert("inputs".into(), self.inputs);
                for (k, j, _) in self.items {
                    obj.insert(k.into(), j);
                }
                format!(
                    "{}\n",
                    serde_json::to_string_pretty(&Json::Object(obj)).expect("json")
                )
            }
            Format::Table => {
                let width = self
                    .items
                    .iter()
                    .map(|(k, _, _)| k.len())
                    .max()
                    .unwrap_or(0);
                self.items
                    .iter()
                    .map(|(k, _, text)| format!("{k:<width$}  {text}\n"))
                    .collect()
            }
        })
    }
}

impl Display for InvariantData {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Eu = {}, χ = {}, ρ = {}, σ = {}",
            self.eu(),
            self.chi(),
            self.rho(),
            self.sigma()
        )
    }
}

impl Display for crate::charclass::Multiplicities {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "m = {}, n = {}", self.m, self.n)
    }
}

fn execute(cli: &Cli, ctx: &mut Context<'_>) -> Result<(u8, String)> {
    let report = match &cli.command {
        Command::Fulton { n, d } => {
            let d = parse_rational(d)?;
            let mut rep = Report::new("fulton", json!({ "n": n, "d": d.to_string() }));
            rep.push("c_fulton", &fulton_class(*n, &d)?);
            rep
        }
        Command::PolarTotal { spec } => {
            let spec: HypersurfaceSpec = ctx.load(spec, "spec")?;
            let mut rep = Report::new("polar-total", json!({ "spec": spec }));
            rep.push("total_polar", &total_polar_class(&spec)?);
            rep
        }
        Command::Mather { spec, syx, n, d } => match (spec, syx) {
            (Some(src), None) => {
                let spec: HypersurfaceSpec = ctx.load(src, "spec")?;
                let mut rep = Report::new("mather", json!({ "spec": spec }));
                rep.push("total_polar", &total_polar_class(&spec)?);
                rep.push("c_mather", &mather_from_polar(&spec)?);
                rep
            }
            (None, Some(src)) => {
                let s_yx: GradedClass = ctx.load(src, "s_YX")?;
                let n = n.expect("clap enforces --n");
                let d = parse_rational(d.as_deref().expect("clap enforces --d"))?;
                let mut rep = Report::new(
                    "mather",
                    json!({ "s_YX": s_yx, "n": n, "d": d.to_string() }),
                );
                rep.push("c_mather", &mather_from_segre(&s_yx, n, &d)?);
                rep
            }
            _ => {
                return Err(Error::Parse(
                    "mather needs exactly one of --spec or --syx".into(),
                ))
            }
        },
        Command::Interpolate {
            alpha,
            spec,
            cf,
            cma,
            d,
        } => {
            let alpha = parse_rational(alpha)?;
            let (inputs, c_f, c_ma, d) = match (spec, cf, cma) {
                (Some(src), None, None) => {
                    let spec: HypersurfaceSpec = ctx.load(src, "spec")?;
                    let c_f = fulton_class_of(&spec)?;
                    let c_ma = mather_from_polar(&spec)?;
                    let d = spec.d().clone();
                    (
                        json!({ "spec": spec, "alpha": alpha.to_string() }),
                        c_f,
                        c_ma,
                        d,
                    )
                }
                (None, Some(cf), Some(cma)) => {
                    let c_f: GradedClass = ctx.load(cf, "c_fulton")?;
                    let c_ma: GradedClass = ctx.load(cma, "c_mather")?;
                    let d = parse_rational(d.as_deref().expect("clap enforces --d"))?;
                    let inputs = json!({
                        "c_fulton": c_f, "c_mather": c_ma,
                        "d": d.to_string(), "alpha": alpha.to_string()
                    });
                    (inputs, c_f, c_ma, d)
                }
                _ => {
                    return Err(Error::Parse(
                        "interpolate needs --spec, or --cf with --cma and --d".into(),
                    ))
                }
            };
            let mut rep = Report::new("interpolate", inputs);
            let c_alpha = interpolated_class(&c_f, &c_ma, &d, &alpha)?;
            rep.push("c_fulton", &c_f);
            rep.push("c_mather", &c_ma);
            rep.push("c_alpha", &c_alpha);
            rep
        }
        Command::Csm { spec, inv } => {
            let spec: HypersurfaceSpec = ctx.load(spec, "spec")?;
            let inv = ctx.invariants(inv)?;
            let c_f = fulton_class_of(&spec)?;
            let c_ma = mather_from_polar(&spec)?;
            let c_sm = csm_theorem_main(&c_f, &c_ma, spec.d(), &inv)?;
            let mut rep = Report::new("csm", json!({ "spec": spec, "invariants": inv }));
            rep.push("invariants", &inv);
            rep.push("c_fulton", &c_f);
            rep.push("c_mather", &c_ma);
            rep.push("c_sm", &c_sm);
            rep
        }
        Command::CsmPolar { spec, inv } => {
            let spec: HypersurfaceSpec = ctx.load(spec, "spec")?;
            let inv = ctx.invariants(inv)?;
            let mut rep = Report::new("csm-polar", json!({ "spec": spec, "invariants": inv }));
            rep.push("invariants", &inv);
            rep.push("total_polar", &total_polar_class(&spec)?);
            rep.push("c_sm", &csm_corollary_polar(&spec, &inv)?);
            rep
        }
        Command::Segre5b { spec, normal } => {
            let spec: HypersurfaceSpec = ctx.load(spec, "spec")?;
            let normal: BundleData = match normal {
                Some(src) => ctx.load(src, "normal")?,
                None if spec.r() + 1 == spec.n() => {
                    BundleData::line_bundle(spec.n(), &LineBundleOnPn::new(spec.d().clone()))
                }
                None => {
                    return Err(Error::validation(format!(
                        "X has codimension {} in P^{}; pass its normal bundle with --normal",
                        spec.n() - spec.r(),
                        spec.n()
                    )))
                }
            };
            let mut rep = Report::new("segre-5b", json!({ "spec": spec, "normal": normal }));
            rep.push("total_polar", &total_polar_class(&spec)?);
            rep.push("s_YX", &segre_sing_theorem5b(&spec, &normal)?);
            rep
        }
        Command::SegreConvert { class, d, to, inv } => {
            let class: GradedClass = ctx.load(class, "class")?;
            let d = parse_rational(d)?;
            let inv = ctx.invariants(inv)?;
            let (from_key, to_key, result) = match to {
                SegreTarget::Yx => ("s_YM", "s_YX", segre_yx_from_ym(&class, &d, &inv)?),
                SegreTarget::Ym => ("s_YX", "s_YM", segre_ym_from_yx(&class, &d, &inv)?),
            };
            let mut rep = Report::new(
                "segre-convert",
                json!({ from_key: class, "d": d.to_string(), "invariants": inv }),
            );
            rep.push("invariants", &inv);
            rep.push(to_key, &result);
            rep
        }
        Command::SolveInvariants { lhs, cy, d } => {
            let lhs: GradedClass = ctx.load(lhs, "lhs")?;
            let c_y: GradedClass = ctx.load(cy, "c_Y")?;
            let d = parse_rational(d)?;
            let inv = solve_invariants(&lhs, &c_y, &d)?;
            let mut rep = Report::new(
                "solve-invariants",
                json!({ "lhs": lhs, "c_Y": c_y, "d": d.to_string() }),
            );
            rep.push("invariants", &inv);
            rep
        }
        Command::Multiplicities { inv, dim_x, dim_y } => {
            let inv = ctx.invariants(inv)?;
            let m = lemma3_multiplicities(inv.chi(), inv.eu(), *dim_x, *dim_y)?;
            let mut rep = Report::new(
                "multiplicities",
                json!({ "invariants": inv, "dim_x": dim_x, "dim_y": dim_y }),
            );
            rep.push("invariants", &inv);
            rep.push("multiplicities", &m);
            rep
        }
        Command::RunScenario { name, params } => {
            if cli.only.is_some() {
                return Err(Error::Parse("--only does not apply to run-scenario".into()));
            }
            let mut map = BTreeMap::new();
            for p in params {
                let (k, v) = p
                    .split_once('=')
                    .ok_or_else(|| Error::Parse(format!("--param expects KEY=VALUE, got {p:?}")))?;
                map.insert(k.trim().to_string(), v.trim().to_string());
            }
            let report = run_scenario(name, &map)?;
            let code = if report.passed() {
                0
            } else {
                EXIT_SCENARIO_FAILED
            };
            let text = match cli.format {
                Format::Table => report.to_string(),
                Format::Json => format!(
                    "{}\n",
                    serde_json::to_string_pretty(&report).expect("report serializes")
                ),
            };
            return Ok((code, text));
        }
    };
    Ok((0, report.render(cli.format, cli.only.as_deref())?))
}
