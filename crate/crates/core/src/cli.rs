//! Command-line front end.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::analysis::{
    adjoint_irreducible, algebra_span, classify_discreteness, connectivity, elliptic_at_root,
    elliptic_at_trace, fingerprint, format_factored, generic_char_poly, projective_image_order,
    ImageOrder, SpanVerdict,
};
use crate::arith::{
    q_int, Angle, Cyclotomic, Domain, Field, GenericField, ParameterSpec, RationalPoint,
    TraceValue, Q,
};
use crate::potts::{potts_partition, potts_with_colors, PlanarGraph};
use crate::rep::{cob_data, cob_identity_check, DimensionTable, Representation};
use crate::skein::{bracket_state_sum, parse_braid_word, Normalization, PdCode};
use crate::{selftest, Error, Result};

#[derive(Parser, Debug)]
#[command(
    name = "jonesrep",
    version,
    about = "Exact Temperley-Lieb and Kauffman bracket braid representations"
)]
pub struct Cli {
    #[command(flatten)]
    pub param: ParamArgs,
    /// Crossing normalization.
    #[arg(long, global = true, value_enum, default_value_t = NormArg::Bracket)]
    pub normalization: NormArg,
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Default)]
#[group(multiple = false)]
pub struct ParamArgs {
    /// Treat t as an indeterminate (the default).
    #[arg(long, global = true)]
    pub generic: bool,
    /// A rational value of t.
    #[arg(long, global = true, value_name = "Q", allow_hyphen_values = true)]
    pub t_rational: Option<String>,
    /// t = exp(2 pi i k / R).
    #[arg(long, global = true, value_name = "R")]
    pub root_of_unity: Option<u64>,
    /// t = exp(i pi FRAC) for a rational FRAC.
    #[arg(long, global = true, value_name = "FRAC", allow_hyphen_values = true)]
    pub theta: Option<String>,
    /// A rational value of t + 1/t.
    #[arg(long, global = true, value_name = "Q", allow_hyphen_values = true)]
    pub trace: Option<String>,
    /// t + 1/t = 1 + 2 cos(2 pi / N).
    #[arg(long, global = true, value_name = "N")]
    pub trace_cos: Option<u64>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum NormArg {
    Bracket,
    Rescaled,
}

impl From<NormArg> for Normalization {
    fn from(n: NormArg) -> Self {
        match n {
            NormArg::Bracket => Normalization::Bracket,
            NormArg::Rescaled => Normalization::Rescaled,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dimension d(N, C, R) of the reduced space.
    Dim { n: u64, c: u64, r: Option<u64> },
    /// Basis matchings.
    Basis { n: usize, c: usize },
    /// Matrix of a braid word.
    Matrix {
        /// Number of strands.
        n: usize,
        /// Clasp color.
        c: usize,
        /// Braid word such as "1 -2 3"; "[a,b]" is a commutator.
        word: String,
    },
    /// Gram matrix of the invariant form.
    Gram { n: usize, c: usize },
    /// Characteristic polynomial of a braid word.
    Charpoly {
        /// Number of strands.
        n: usize,
        /// Clasp color.
        c: usize,
        /// Braid word such as "1 -2 3"; "[a,b]" is a commutator.
        word: String,
    },
    /// Full-twist eigenvalue ratio.
    Fingerprint { n: usize, c: usize },
    /// Connectivity certificate.
    Connectivity {
        n: usize,
        c: usize,
        /// Use the adjoint decomposition.
        #[arg(long)]
        adjoint: bool,
    },
    /// Span of the image in matrices (or of the adjoint image).
    Irreducible {
        n: usize,
        c: usize,
        #[arg(long)]
        adjoint: bool,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
    },
    /// Order of the projective image, up to a cap.
    ImageOrder {
        n: usize,
        c: usize,
        #[arg(long, default_value_t = 10_000)]
        cap: usize,
    },
    /// Order of a non-unit eigenvalue of a braid word.
    Elliptic {
        /// Number of strands.
        n: usize,
        /// Clasp color.
        c: usize,
        /// Braid word such as "1 -2 3"; "[a,b]" is a commutator.
        word: String,
    },
    /// Whether the image of the three-strand representation is discrete.
    Discrete,
    /// Kauffman bracket of a PD-code JSON file.
    Bracket { pdfile: String },
    /// Potts partition function of a planar graph JSON file.
    Potts {
        graphfile: String,
        /// Integer number of colors; overrides the parameter flags.
        #[arg(long)]
        colors: Option<u64>,
    },
    /// Change of basis between the two colored bases.
    Cob { c: usize },
    /// Run the acceptance checks.
    Selftest {
        /// Run one criterion only.
        #[arg(long)]
        only: Option<u8>,
    },
}

fn parse_q(s: &str) -> Result<Q> {
    s.trim()
        .parse::<Q>()
        .map_err(|_| Error::Parse(format!("not a rational number: {s:?}")))
}

impl ParamArgs {
    pub fn spec(&self) -> Result<ParameterSpec> {
        let spec = if let Some(t) = &self.t_rational {
            ParameterSpec::RationalValue(parse_q(t)?)
        } else if let Some(r) = self.root_of_unity {
            ParameterSpec::RootOfUnity { r, k: 1 }
        } else if let Some(f) = &self.theta {
            ParameterSpec::UnitCircle(Angle::RationalPi(parse_q(f)?))
        } else if let Some(u) = &self.trace {
            ParameterSpec::Trace(TraceValue::Rational(parse_q(u)?))
        } else if let Some(m) = self.trace_cos {
            ParameterSpec::Trace(TraceValue::OnePlusTwoCos(m))
        } else {
            ParameterSpec::Generic
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// `exp(i pi a/b)` as `exp(2 pi i k / r)` with `k` reduced mod `r`.
pub fn theta_to_root(frac: &Q) -> (u64, u64) {
    let half = frac / q_int(2);
    let r = half.denom().clone();
    let k = ((half.numer() % &r) + &r) % &r;
    let r: u64 = r.try_into().expect("root order fits in u64");
    let k: u64 = k.try_into().expect("exponent fits in u64");
    (r, k)
}

/// An exact domain for building representations.
pub enum ExactDomain {
    Generic(GenericField),
    Root(Cyclotomic),
    Rational(RationalPoint),
}

impl ExactDomain {
    pub fn from_spec(spec: &ParameterSpec) -> Result<Self> {
        match spec {
            ParameterSpec::Generic => Ok(ExactDomain::Generic(GenericField)),
            ParameterSpec::RootOfUnity { r, k } => Ok(ExactDomain::Root(Cyclotomic::new(*r, *k)?)),
            ParameterSpec::UnitCircle(Angle::RationalPi(f)) => {
                let (r, k) = theta_to_root(f);
                Ok(ExactDomain::Root(Cyclotomic::new(r, k)?))
            }
            ParameterSpec::RationalValue(t) => Ok(ExactDomain::Rational(RationalPoint::from_t(t)?)),
            other => Err(Error::Unsupported(format!(
                "no exact domain for {other}; use it with `discrete`"
            ))),
        }
    }
}

macro_rules! on_domain {
    ($dom:expr, $d:ident => $body:expr) => {
        match $dom {
            ExactDomain::Generic($d) => $body,
            ExactDomain::Root($d) => $body,
            ExactDomain::Rational($d) => $body,
        }
    };
}

/// Output of one subcommand.
pub struct Report {
    pub text: String,
    pub json: Value,
}

impl Report {
    fn new(text: impl Into<String>, json: Value) -> Self {
        Report {
            text: text.into(),
            json,
        }
    }

    fn from_serialize<T: Serialize>(v: &T) -> Self {
        let json = serde_json::to_value(v).expect("serializable");
        Report {
            text: key_value_text(&json),
            json,
        }
    }
}

fn key_value_text(v: &Value) -> String {
    match v {
        Value::Object(m) => m
            .iter()
            .map(|(k, x)| match x {
                Value::String(s) => format!("{k}: {s}"),
                other => format!("{k}: {other}"),
            })
            .collect::<Vec<_>>()
            .join("\n"),
        other => other.to_string(),
    }
}

fn matrix_json<F: crate::arith::Scalar>(m: &crate::linalg::Matrix<F>) -> Value {
    Value::Array(
        m.to_rows()
            .iter()
            .map(|r| Value::Array(r.iter().map(|x| Value::String(x.to_string())).collect()))
            .collect(),
    )
}

fn build<D: Domain + Clone>(
    n: usize,
    c: usize,
    d: &D,
    norm: Normalization,
) -> Result<Representation<D>>
where
    D::F: Field,
{
    Representation::build(n, c, d, norm)
}

fn read_file(path: &str) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidParameter(format!("cannot read {path}: {e}")))
}

fn span_report_json(label: &str, r: &crate::analysis::SpanReport) -> Value {
    json!({"space": label, "verdict": r.verdict, "span_dim": r.span_dim, "target_dim": r.target_dim, "word_length": r.word_length})
}

/// Runs one parsed invocation. `Ok((report, success))`; a failed selftest
/// yields `success == false`.
pub fn execute(cli: &Cli) -> Result<(Report, bool)> {
    let norm: Normalization = cli.normalization.into();
    let spec = || cli.param.spec();
    let domain = || -> Result<ExactDomain> { ExactDomain::from_spec(&spec()?) };
    let report = match &cli.command {
        Command::Dim { n, c, r } => {
            let d = DimensionTable::new().get(*n, *c, *r)?;
            Report::new(
                d.to_string(),
                json!({"n": n, "c": c, "r": r, "dimension": d}),
            )
        }
        Command::Basis { n, c } => on_domain!(domain()?, d => {
            let rep = build(*n, *c, &d, norm)?;
            let names: Vec<String> = rep.basis.iter().map(|m| m.to_string()).collect();
            Report::new(names.join("\n"), json!({"n": n, "c": c, "parameter": rep.spec.to_string(), "basis": names}))
        }),
        Command::Matrix { n, c, word } => {
            let w = parse_braid_word(word)?;
            on_domain!(domain()?, d => {
                let m = build(*n, *c, &d, norm)?.word_matrix(&w)?;
                Report::new(m.to_string().trim_end(), json!({"word": w, "matrix": matrix_json(&m)}))
            })
        }
        Command::Gram { n, c } => on_domain!(domain()?, d => {
            let rep = build(*n, *c, &d, norm)?;
            Report::new(
                rep.gram.to_string().trim_end(),
                json!({"gram": matrix_json(&rep.gram), "full_rank": rep.full_gram_rank, "full_dimension": rep.full_basis.len()}),
            )
        }),
        Command::Charpoly { n, c, word } => {
            let w = parse_braid_word(word)?;
            let dom = domain()?;
            if let ExactDomain::Generic(_) = dom {
                let p = generic_char_poly(*n, *c, &w, norm)?;
                let f = format_factored(&p);
                Report::new(
                    f.clone(),
                    json!({"word": w, "char_poly": p.to_string(), "factored": f}),
                )
            } else {
                on_domain!(dom, d => {
                    let p = build(*n, *c, &d, norm)?.word_matrix(&w)?.char_poly();
                    Report::new(p.to_string(), json!({"word": w, "char_poly": p.to_string()}))
                })
            }
        }
        Command::Fingerprint { n, c } => on_domain!(domain()?, d => {
            let f = fingerprint(&build(*n, *c, &d, norm)?)?;
            Report::new(f.to_string(), serde_json::to_value(&f).expect("serializable"))
        }),
        Command::Connectivity { n, c, adjoint } => on_domain!(domain()?, d => {
            Report::from_serialize(&connectivity(&build(*n, *c, &d, norm)?, *adjoint)?)
        }),
        Command::Irreducible {
            n,
            c,
            adjoint,
            max_len,
        } => {
            let dom = domain()?;
            // span at s = 2 is a lower bound for the generic span
            let (dom, note) = match dom {
                ExactDomain::Generic(_) => (
                    ExactDomain::Rational(RationalPoint::from_s(q_int(2))?),
                    "computed at s = 2; a full span there implies a full span generically",
                ),
                other => (other, ""),
            };
            let (rep_json, verdict) = on_domain!(dom, d => {
                let rep = build(*n, *c, &d, norm)?;
                let r = if *adjoint {
                    adjoint_irreducible(&rep.generators, &rep.generators_inv, *max_len)
                } else {
                    algebra_span(&rep.generators, rep.dim(), &rep.zero(), *max_len)
                };
                (span_report_json(if *adjoint { "adjoint" } else { "defining" }, &r), r.verdict)
            });
            let mut j = rep_json;
            if !note.is_empty() {
                j["note"] = Value::String(note.into());
                if verdict == SpanVerdict::Reducible {
                    j["verdict"] = json!(SpanVerdict::Inconclusive);
                }
            }
            Report::new(key_value_text(&j), j)
        }
        Command::ImageOrder { n, c, cap } => on_domain!(domain()?, d => {
            let o = projective_image_order(&build(*n, *c, &d, norm)?.generators, *cap);
            let text = match &o {
                ImageOrder::Finite { order, simple } => format!("order {order}, simple: {simple}"),
                ImageOrder::ExceedsCap { cap } => format!("exceeds cap {cap}"),
            };
            Report::new(text, serde_json::to_value(&o).expect("serializable"))
        }),
        Command::Elliptic { n, c, word } => {
            let w = parse_braid_word(word)?;
            let witness = match spec()? {
                ParameterSpec::RootOfUnity { r, k } => elliptic_at_root(*n, *c, &w, r, k)?,
                ParameterSpec::UnitCircle(Angle::RationalPi(f)) => {
                    let (r, k) = theta_to_root(&f);
                    elliptic_at_root(*n, *c, &w, r, k)?
                }
                ParameterSpec::Trace(TraceValue::OnePlusTwoCos(m)) => {
                    elliptic_at_trace(*n, *c, &w, m)?
                }
                other => {
                    return Err(Error::Unsupported(format!(
                        "elliptic needs a root of unity or --trace-cos, got {other}"
                    )))
                }
            };
            Report::from_serialize(&witness)
        }
        Command::Discrete => {
            let s = spec()?;
            if s == ParameterSpec::Generic {
                return Err(Error::InvalidParameter(
                    "discrete needs a parameter value".into(),
                ));
            }
            Report::from_serialize(&classify_discreteness(&s)?)
        }
        Command::Bracket { pdfile } => {
            let pd = PdCode::parse_json(&read_file(pdfile)?)?;
            let b = bracket_state_sum(&pd)?;
            Report::new(
                b.to_string(),
                json!({"crossings": pd.crossings.len(), "bracket": b.to_string()}),
            )
        }
        Command::Potts { graphfile, colors } => {
            let g = PlanarGraph::parse_json(&read_file(graphfile)?)?;
            match colors {
                Some(n) => {
                    let (z, o) = potts_with_colors(&g, *n)?;
                    Report::new(
                        format!("Z = {z}\noracle = {o}"),
                        json!({"n": n, "z_skein": z.to_string(), "z_oracle": o.to_string()}),
                    )
                }
                None => {
                    on_domain!(domain()?, d => Report::from_serialize(&potts_partition(&g, &d)?))
                }
            }
        }
        Command::Cob { c } => on_domain!(domain()?, d => {
            let m = cob_data(*c, &d)?.matrix;
            let ok = cob_identity_check(*c, &d)?;
            Report::new(
                format!("{}identity holds: {ok}", m),
                json!({"c": c, "matrix": matrix_json(&m), "identity_holds": ok}),
            )
        }),
        Command::Selftest { only } => {
            let outcomes = match only {
                Some(id) => vec![selftest::run(*id)
                    .ok_or_else(|| Error::InvalidParameter(format!("no criterion {id}")))?],
                None => selftest::run_all(),
            };
            let passed = outcomes.iter().all(|o| o.passed);
            let text = outcomes
                .iter()
                .map(|o| o.line())
                .collect::<Vec<_>>()
                .join("\n");
            let json = json!({"passed": passed, "criteria": outcomes});
            return Ok((Report::new(text, json), passed));
        }
    };
    Ok((report, true))
}

/// Parses `args` (including the program name), runs, writes to `out` and
/// `err`, and returns the exit code.
pub fn dispatch<I, S>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok((report, ok)) => {
            let body = if cli.json {
                serde_json::to_string_pretty(&report.json).expect("serializable")
            } else {
                report.text
            };
            let _ = writeln!(out, "{body}");
            if ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String, String) {
        let (mut o, mut e) = (Vec::new(), Vec::new());
        let code = dispatch(
            std::iter::once("jonesrep").chain(args.iter().copied()),
            &mut o,
            &mut e,
        );
        (
            code,
            String::from_utf8(o).unwrap(),
            String::from_utf8(e).unwrap(),
        )
    }

    #[test]
    fn dims() {
        assert_eq!(run(&["dim", "5", "1"]), (0, "5\n".into(), String::new()));
        assert_eq!(run(&["dim", "0", "0"]).1, "1\n");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(&["dim"]).0, 2);
        assert_eq!(run(&["frobnicate"]).0, 2);
        assert_eq!(
            run(&["--generic", "--root-of-unity", "5", "dim", "1", "1"]).0,
            2
        );
        assert_eq!(run(&["basis", "3", "2"]).0, 1);
        assert_eq!(run(&["discrete"]).0, 1);
        assert_eq!(run(&["--help"]).0, 0);
    }

    #[test]
    fn commutator_output() {
        let (code, out, _) = run(&["charpoly", "4", "2", "[2,2 3 3 3 2 -1]"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("(x - 1) * (x^2 + (t^3 - 3*t^2"), "{out}");
    }

    #[test]
    fn theta_maps_to_roots() {
        assert_eq!(theta_to_root(&parse_q("1/5").unwrap()), (10, 1));
        assert_eq!(theta_to_root(&parse_q("-1/5").unwrap()), (10, 9));
        assert_eq!(theta_to_root(&parse_q("3/4").unwrap()), (8, 3));
    }

    #[test]
    fn deterministic_json() {
        let a = run(&["--json", "--root-of-unity", "10", "image-order", "3", "1"]);
        let b = run(&["--json", "--root-of-unity", "10", "image-order", "3", "1"]);
        assert_eq!(a, b);
        assert!(a.1.contains("60"));
    }

    #[test]
    fn discrete_theta() {
        let (code, out, _) = run(&["--theta", "3/5", "discrete"]);
        assert_eq!(code, 0);
        assert!(out.contains("discrete: true"), "{out}");
    }
}
