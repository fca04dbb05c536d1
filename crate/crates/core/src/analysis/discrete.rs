//! Discreteness of the three-strand action for real `t` and `|t| = 1`.
//!
//! For real `t > 0` the commutator `gamma = [sigma3, sigma4]` fixes a vertex
//! of a reflection triangle; `t - 1 + 1/t = 2 cos theta` decides whether the
//! vertex is hyperideal, ideal or a cone point. On the unit circle the first
//! generator rotates by `pi - |theta|`.

use std::f64::consts::PI;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::arith::{q_int, q_to_f64, Angle, ParameterSpec, TraceValue, Q};
use crate::{Error, Result};

/// Largest `n` tried when matching a float against `2 pi / n`.
pub const SCAN_BOUND: u64 = 1_000_000;
const MATCH_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Regime {
    Real,
    UnitCompact,
    UnitEuclidean,
    UnitNoncompact,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum VertexType {
    Hyperideal,
    Ideal,
    /// Cone angle `2 pi / n`.
    Angle(u64),
}

/// Result of matching a float against `2 cos(2 pi / n)` for `n <= bound`.
#[derive(Clone, Debug, Serialize)]
pub struct ScanEvidence {
    pub bound: u64,
    pub closest_n: u64,
    pub gap: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct DiscretenessVerdict {
    pub parameter: String,
    pub regime: Regime,
    pub discrete: bool,
    /// Exact form of `2 cos` of the relevant rotation angle.
    pub two_cos_theta: String,
    pub two_cos_theta_value: f64,
    pub vertex: Option<VertexType>,
    /// `(2, 3, s)`, with `s = None` for an ideal or hyperideal vertex.
    pub triangle: Option<(u64, u64, Option<u64>)>,
    /// Whether the verdict rests on exact arithmetic alone.
    pub exact: bool,
    pub evidence: Option<ScanEvidence>,
    pub note: String,
}

/// The `s` of the `(2, 3, s)` triangle group at `t = exp(2 pi i / r)`.
pub fn s_rule(r: u64) -> u64 {
    if r % 2 == 1 {
        2 * r
    } else if r % 4 == 2 {
        r / 2
    } else {
        r
    }
}

/// Closest `n <= bound` with `2 cos(2 pi / n)` near `value`.
pub fn scan_two_cos(value: f64, bound: u64) -> ScanEvidence {
    let (mut best, mut gap) = (1, f64::INFINITY);
    for n in 1..=bound {
        let g = (2.0 * (2.0 * PI / n as f64).cos() - value).abs();
        if g < gap {
            best = n;
            gap = g;
        }
    }
    ScanEvidence {
        bound,
        closest_n: best,
        gap,
    }
}

struct Builder {
    parameter: String,
}

impl Builder {
    #[allow(clippy::too_many_arguments)]
    fn verdict(
        &self,
        regime: Regime,
        discrete: bool,
        two_cos: String,
        value: f64,
        vertex: Option<VertexType>,
        triangle: Option<(u64, u64, Option<u64>)>,
        exact: bool,
        evidence: Option<ScanEvidence>,
        note: &str,
    ) -> DiscretenessVerdict {
        DiscretenessVerdict {
            parameter: self.parameter.clone(),
            regime,
            discrete,
            two_cos_theta: two_cos,
            two_cos_theta_value: value,
            vertex,
            triangle,
            exact,
            evidence,
            note: note.to_string(),
        }
    }

    fn negative_t(&self, t: String) -> DiscretenessVerdict {
        self.verdict(
            Regime::Real,
            true,
            format!("t - 1 + 1/t = {t}"),
            f64::NAN,
            Some(VertexType::Hyperideal),
            Some((2, 3, None)),
            true,
            None,
            "t < 0: tau1 is a translation; orientation-preserving tiling symmetries",
        )
    }

    fn minus_one(&self) -> DiscretenessVerdict {
        self.verdict(
            Regime::Real,
            true,
            "t - 1 + 1/t = -3".into(),
            -3.0,
            Some(VertexType::Ideal),
            Some((2, 3, None)),
            true,
            None,
            "t = -1: the action is that of PSL(2, Z)",
        )
    }

    /// Real `t > 0` from an exact rational trace `u = t + 1/t >= 2`.
    fn real_rational(&self, u: &Q) -> DiscretenessVerdict {
        let c = u - q_int(1);
        let text = format!("t - 1 + 1/t = {c}");
        let value = q_to_f64(&c);
        let three = q_int(3);
        if *u > three {
            self.verdict(
                Regime::Real,
                true,
                text,
                value,
                Some(VertexType::Hyperideal),
                Some((2, 3, None)),
                true,
                None,
                "gamma is hyperbolic",
            )
        } else if *u == three {
            self.verdict(
                Regime::Real,
                true,
                text,
                value,
                Some(VertexType::Ideal),
                Some((2, 3, None)),
                true,
                None,
                "gamma is parabolic",
            )
        } else if *u == q_int(2) {
            self.verdict(
                Regime::Real,
                true,
                text,
                value,
                Some(VertexType::Angle(6)),
                Some((2, 3, Some(6))),
                true,
                None,
                "t = 1: the action is finite",
            )
        } else {
            // a rational 2cos(2 pi/n) lies in {0, +-1, +-2}, so 1 < c < 2 never matches
            let ev = scan_two_cos(value, SCAN_BOUND);
            self.verdict(
                Regime::Real,
                false,
                text,
                value,
                None,
                None,
                true,
                Some(ev),
                "indiscrete: the cone angle is not 2 pi / n (rational 2cos values are integers)",
            )
        }
    }

    /// Real `t > 0` with `t + 1/t = 1 + 2 cos(2 pi / n)`, `n >= 7`.
    fn real_cone(&self, n: u64) -> DiscretenessVerdict {
        self.verdict(
            Regime::Real,
            true,
            format!("t - 1 + 1/t = 2cos(2pi/{n})"),
            2.0 * (2.0 * PI / n as f64).cos(),
            Some(VertexType::Angle(n)),
            Some((2, 3, Some(n))),
            true,
            None,
            "compact triangle tiles the hyperbolic plane",
        )
    }

    /// Real `t > 0` known only numerically, `u = t + 1/t`.
    fn real_float(&self, u: f64) -> DiscretenessVerdict {
        let c = u - 1.0;
        let text = format!("t - 1 + 1/t = {c}");
        if (u - 3.0).abs() <= MATCH_TOL {
            return self.verdict(
                Regime::Real,
                true,
                text,
                c,
                Some(VertexType::Ideal),
                Some((2, 3, None)),
                false,
                None,
                "gamma is parabolic",
            );
        }
        if u > 3.0 {
            return self.verdict(
                Regime::Real,
                true,
                text,
                c,
                Some(VertexType::Hyperideal),
                Some((2, 3, None)),
                true,
                None,
                "gamma is hyperbolic",
            );
        }
        let ev = scan_two_cos(c, SCAN_BOUND);
        if ev.gap <= MATCH_TOL {
            let n = ev.closest_n;
            let mut v = self.real_cone(n);
            v.exact = false;
            v.evidence = Some(ev);
            return v;
        }
        self.verdict(
            Regime::Real,
            false,
            text,
            c,
            None,
            None,
            false,
            Some(ev),
            "indiscrete per the orbifold classification; the scan is evidence, not proof",
        )
    }

    /// `t = exp(i q pi)` with `0 < |q| < 1` exact.
    fn unit_rational(&self, q: &Q) -> DiscretenessVerdict {
        let a = q.abs();
        let rho = (Q::one() - a.clone()) / q_int(2);
        let text = format!("2cos(rho) = -(2cos({a} pi) - 1), rho = 2pi * {rho}");
        let value = 2.0 * (2.0 * PI * q_to_f64(&rho)).cos();
        let two_thirds = Q::new(2.into(), 3.into());
        let s = rho.denom().to_u64().unwrap_or(u64::MAX);
        let k = rho.numer().to_u64().unwrap_or(u64::MAX);
        if a == two_thirds {
            return self.verdict(
                Regime::UnitEuclidean,
                true,
                text,
                value,
                Some(VertexType::Angle(3)),
                Some((2, 3, Some(6))),
                true,
                None,
                "Euclidean tiling by equilateral triangles",
            );
        }
        if a < two_thirds {
            let discrete = s <= 5;
            let note = if discrete {
                "compact: the image is a finite (2,3,s) rotation group"
            } else {
                "compact: tau1 has order beyond any finite (2,3,s) group"
            };
            return self.verdict(
                Regime::UnitCompact,
                discrete,
                text,
                value,
                Some(VertexType::Angle(s)),
                discrete.then_some((2, 3, Some(s))),
                true,
                None,
                note,
            );
        }
        let discrete = k == 1;
        let note = if discrete {
            "non-compact: tau1 rotates by 2 pi / n"
        } else {
            "non-compact: rotation 2 pi k / n with k > 1 is not a cone angle"
        };
        self.verdict(
            Regime::UnitNoncompact,
            discrete,
            text,
            value,
            Some(VertexType::Angle(s)),
            discrete.then_some((2, 3, Some(s))),
            true,
            None,
            note,
        )
    }

    /// `t = exp(i theta)` from a float angle in `(0, pi)`.
    fn unit_float(&self, theta: f64) -> DiscretenessVerdict {
        let a = theta.abs();
        let rho = PI - a;
        let text = format!("2cos(rho) = {}, rho = pi - |theta|", 2.0 * rho.cos());
        let value = 2.0 * rho.cos();
        if (a - 2.0 * PI / 3.0).abs() <= MATCH_TOL {
            return self.verdict(
                Regime::UnitEuclidean,
                true,
                text,
                value,
                Some(VertexType::Angle(3)),
                Some((2, 3, Some(6))),
                false,
                None,
                "Euclidean tiling by equilateral triangles",
            );
        }
        if a < 2.0 * PI / 3.0 {
            for s in 2..=5u64 {
                for k in 1..s {
                    if k.gcd(&s) == 1 && (rho - 2.0 * PI * k as f64 / s as f64).abs() <= MATCH_TOL {
                        return self.verdict(
                            Regime::UnitCompact,
                            true,
                            text,
                            value,
                            Some(VertexType::Angle(s)),
                            Some((2, 3, Some(s))),
                            false,
                            None,
                            "compact: the image is a finite (2,3,s) rotation group",
                        );
                    }
                }
            }
            return self.verdict(
                Regime::UnitCompact,
                false,
                text,
                value,
                None,
                None,
                false,
                None,
                "compact: tau1 does not have order at most 5",
            );
        }
        let ev = scan_two_cos(value, SCAN_BOUND);
        if ev.gap <= MATCH_TOL {
            let n = ev.closest_n;
            return self.verdict(
                Regime::UnitNoncompact,
                true,
                text,
                value,
                Some(VertexType::Angle(n)),
                Some((2, 3, Some(n))),
                false,
                Some(ev),
                "non-compact: tau1 rotates by 2 pi / n",
            );
        }
        self.verdict(
            Regime::UnitNoncompact,
            false,
            text,
            value,
            None,
            None,
            false,
            Some(ev),
            "indiscrete per the orbifold classification; the scan is evidence, not proof",
        )
    }

    fn trace_rational(&self, u: &Q) -> Result<DiscretenessVerdict> {
        let two = q_int(2);
        if *u == -two.clone() {
            return Ok(self.minus_one());
        }
        if *u < -two.clone() {
            return Ok(self.negative_t(format!("{}", u - q_int(1))));
        }
        if *u >= two {
            return Ok(self.real_rational(u));
        }
        // |t| = 1 with 2cos(theta) = u; theta is a rational multiple of pi only
        // for u in {0, 1, -1}
        let q = if u.is_zero() {
            Some(Q::new(1.into(), 2.into()))
        } else if *u == q_int(1) {
            Some(Q::new(1.into(), 3.into()))
        } else if *u == q_int(-1) {
            Some(Q::new(2.into(), 3.into()))
        } else {
            None
        };
        Ok(match q {
            Some(q) => self.unit_rational(&q),
            None => {
                let mut v = self.unit_float((q_to_f64(u) / 2.0).acos());
                v.exact = true;
                v.note = format!("{}; theta / pi is irrational since 2cos(theta) = {u} is a non-integer rational", v.note);
                v
            }
        })
    }
}

pub fn classify_discreteness(spec: &ParameterSpec) -> Result<DiscretenessVerdict> {
    spec.validate()?;
    let b = Builder {
        parameter: spec.to_string(),
    };
    match spec {
        ParameterSpec::Generic => Err(Error::InvalidParameter(
            "discreteness needs a specific t".into(),
        )),
        ParameterSpec::RationalValue(t) => {
            if *t == q_int(-1) {
                Ok(b.minus_one())
            } else if t.is_negative() {
                Ok(b.negative_t(format!("{}", t - q_int(1) + t.recip())))
            } else {
                b.trace_rational(&(t + t.recip()))
            }
        }
        ParameterSpec::Trace(TraceValue::Rational(u)) => b.trace_rational(u),
        ParameterSpec::Trace(TraceValue::OnePlusTwoCos(n)) => match n {
            0 => Err(Error::InvalidParameter("n must be positive".into())),
            1 => b.trace_rational(&q_int(3)),
            2 => b.trace_rational(&q_int(-1)),
            3 => b.trace_rational(&q_int(0)),
            4 => b.trace_rational(&q_int(1)),
            // 1 + 2cos(2pi/5) = 2cos(pi/5)
            5 => Ok(b.unit_rational(&Q::new(1.into(), 5.into()))),
            6 => b.trace_rational(&q_int(2)),
            _ => Ok(b.real_cone(*n)),
        },
        ParameterSpec::RootOfUnity { r, k } => {
            let q = Q::new((2 * k).into(), (*r).into());
            b.unit_angle(&q)
        }
        ParameterSpec::UnitCircle(Angle::RationalPi(q)) => b.unit_angle(q),
        ParameterSpec::UnitCircle(Angle::Radians(x)) => {
            let a = x.rem_euclid(2.0 * PI);
            let a = if a > PI { a - 2.0 * PI } else { a };
            if a.abs() <= MATCH_TOL {
                b.trace_rational(&q_int(2))
            } else if (a.abs() - PI).abs() <= MATCH_TOL {
                Ok(b.minus_one())
            } else {
                Ok(b.unit_float(a))
            }
        }
        ParameterSpec::NumericComplex { re, im } => {
            let norm = re.hypot(*im);
            if im.abs() <= MATCH_TOL {
                if *re < 0.0 {
                    Ok(b.negative_t(format!("{}", re - 1.0 + 1.0 / re)))
                } else if *re == 0.0 {
                    Err(Error::InvalidParameter("t must be nonzero".into()))
                } else {
                    Ok(b.real_float(re + 1.0 / re))
                }
            } else if (norm - 1.0).abs() <= MATCH_TOL {
                classify_discreteness(&ParameterSpec::UnitCircle(Angle::Radians(im.atan2(*re))))
            } else {
                Err(Error::Unsupported(
                    "t must be real or on the unit circle".into(),
                ))
            }
        }
    }
}

impl Builder {
    /// `t = exp(i q pi)` with `q` reduced into `(-1, 1]`.
    fn unit_angle(&self, q: &Q) -> Result<DiscretenessVerdict> {
        let two = q_int(2);
        let mut q = q.clone() - (q.clone() / two.clone()).floor() * two.clone();
        if q > Q::one() {
            q -= two;
        }
        if q.is_zero() {
            self.trace_rational(&q_int(2))
        } else if q == Q::one() {
            Ok(self.minus_one())
        } else {
            Ok(self.unit_rational(&q))
        }
    }
}
