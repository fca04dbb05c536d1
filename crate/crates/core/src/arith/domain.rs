//! Parameter specifications and the coefficient domains they select.

use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use num_traits::Zero;
use serde::Serialize;

use super::cyclo::{Cyclo, CycloCtx};
use super::laurent::Laurent;
use super::qpoly::{q_to_f64, Q};
use super::ratfunc::RatFunc;
use super::scalar::{Rational, Scalar};
use crate::{Error, Result};

/// An angle, either an exact rational multiple of `pi` or a float in radians.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum Angle {
    /// `theta = q * pi`
    RationalPi(#[serde(serialize_with = "ser_display")] Q),
    Radians(f64),
}

impl Angle {
    pub fn radians(&self) -> f64 {
        match self {
            Angle::RationalPi(q) => q_to_f64(q) * PI,
            Angle::Radians(x) => *x,
        }
    }

    pub fn negate(&self) -> Angle {
        match self {
            Angle::RationalPi(q) => Angle::RationalPi(-q.clone()),
            Angle::Radians(x) => Angle::Radians(-x),
        }
    }
}

/// An exact value of `t + t^{-1}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum TraceValue {
    Rational(#[serde(serialize_with = "ser_display")] Q),
    /// `1 + 2 cos(2 pi / n)`
    OnePlusTwoCos(u64),
}

impl TraceValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            TraceValue::Rational(q) => q_to_f64(q),
            TraceValue::OnePlusTwoCos(n) => 1.0 + 2.0 * (2.0 * PI / *n as f64).cos(),
        }
    }
}

fn ser_display<S: serde::Serializer, T: fmt::Display>(
    v: &T,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// Which value of `t` (and of `s = t^{1/4}`) a computation uses.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum ParameterSpec {
    /// `s` is an indeterminate.
    Generic,
    /// `t = exp(2 pi i k / r)`, with the recorded choice `s = exp(2 pi i k / 4r)`.
    RootOfUnity {
        r: u64,
        k: u64,
    },
    RationalValue(#[serde(serialize_with = "ser_display")] Q),
    /// `t = exp(i theta)`
    UnitCircle(Angle),
    NumericComplex {
        re: f64,
        im: f64,
    },
    /// `t` is specified through `t + t^{-1}`.
    Trace(TraceValue),
}

impl ParameterSpec {
    pub fn principal_root(r: u64) -> Self {
        ParameterSpec::RootOfUnity { r, k: 1 }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            ParameterSpec::RootOfUnity { r, k } => {
                if *r == 0 {
                    return Err(Error::InvalidParameter(
                        "root of unity order must be >= 1".into(),
                    ));
                }
                if num_integer::gcd(*r, *k) != 1 {
                    return Err(Error::InvalidParameter(format!(
                        "exponent {k} is not coprime to the order {r}"
                    )));
                }
                Ok(())
            }
            ParameterSpec::RationalValue(t) if t.is_zero() => {
                Err(Error::InvalidParameter("t must be nonzero".into()))
            }
            _ => Ok(()),
        }
    }

    /// Order of `t` when it is a root of unity given exactly.
    pub fn root_order(&self) -> Option<u64> {
        match self {
            ParameterSpec::RootOfUnity { r, .. } => Some(*r),
            _ => None,
        }
    }

    /// The numeric value of `s = t^{1/4}` (principal branch unless the parameter
    /// records a choice).
    pub fn numeric_s(&self) -> Result<Complex64> {
        match self {
            ParameterSpec::Generic => Err(Error::InvalidParameter(
                "generic parameter has no numeric value".into(),
            )),
            ParameterSpec::RootOfUnity { r, k } => Ok(Complex64::from_polar(
                1.0,
                2.0 * PI * *k as f64 / (4 * r) as f64,
            )),
            ParameterSpec::RationalValue(t) => Ok(Complex64::new(q_to_f64(t), 0.0).powf(0.25)),
            ParameterSpec::UnitCircle(a) => Ok(Complex64::from_polar(1.0, a.radians() / 4.0)),
            ParameterSpec::NumericComplex { re, im } => Ok(Complex64::new(*re, *im).powf(0.25)),
            ParameterSpec::Trace(u) => {
                let t = trace_to_t(u.to_f64());
                Ok(t.powf(0.25))
            }
        }
    }
}

/// The root of `t^2 - u t + 1` with `|t| >= 1` (upper half plane on the circle).
pub fn trace_to_t(u: f64) -> Complex64 {
    let disc = Complex64::new(u * u - 4.0, 0.0).sqrt();
    let a = (Complex64::new(u, 0.0) + disc) / 2.0;
    let b = (Complex64::new(u, 0.0) - disc) / 2.0;
    if (a.norm() - b.norm()).abs() < 1e-12 {
        if a.im >= 0.0 {
            a
        } else {
            b
        }
    } else if a.norm() > b.norm() {
        a
    } else {
        b
    }
}

impl fmt::Display for ParameterSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParameterSpec::Generic => write!(f, "generic"),
            ParameterSpec::RootOfUnity { r, k } => write!(f, "t = exp(2 pi i * {k}/{r})"),
            ParameterSpec::RationalValue(t) => write!(f, "t = {t}"),
            ParameterSpec::UnitCircle(Angle::RationalPi(q)) => write!(f, "t = exp(i pi * {q})"),
            ParameterSpec::UnitCircle(Angle::Radians(x)) => write!(f, "t = exp(i * {x})"),
            ParameterSpec::NumericComplex { re, im } => write!(f, "t = {re} + {im}i"),
            ParameterSpec::Trace(TraceValue::Rational(u)) => write!(f, "t + 1/t = {u}"),
            ParameterSpec::Trace(TraceValue::OnePlusTwoCos(n)) => {
                write!(f, "t + 1/t = 1 + 2cos(2pi/{n})")
            }
        }
    }
}

/// A concrete exact coefficient domain: where `s` lives and how Laurent
/// polynomials in `s` map into it.
pub trait Domain: Send + Sync {
    type F: Scalar;

    fn spec(&self) -> ParameterSpec;
    fn embed(&self, l: &Laurent) -> Self::F;
    fn to_complex(&self, x: &Self::F) -> Option<Complex64>;

    /// A numeric image of `x`, used only to screen candidates before an exact
    /// check. Generic domains sample at a fixed non-special point.
    fn sample(&self, x: &Self::F) -> Option<Complex64> {
        self.to_complex(x)
    }

    fn zero(&self) -> Self::F {
        self.embed(&Laurent::zero())
    }
    fn one(&self) -> Self::F {
        self.embed(&Laurent::one())
    }
    fn s_pow(&self, e: i64) -> Self::F {
        self.embed(&Laurent::s_pow(e))
    }
    /// Loop value `-t^{1/2} - t^{-1/2}`.
    fn delta(&self) -> Self::F {
        self.embed(&super::quantum::delta())
    }
    fn root_order(&self) -> Option<u64> {
        self.spec().root_order()
    }
}

fn sample_point() -> Complex64 {
    Complex64::from_polar(1.07, 0.713)
}

/// Laurent polynomials themselves; a ring, so no projectors beyond color 1.
#[derive(Clone, Debug, Default)]
pub struct LaurentRing;

impl Domain for LaurentRing {
    type F = Laurent;
    fn spec(&self) -> ParameterSpec {
        ParameterSpec::Generic
    }
    fn embed(&self, l: &Laurent) -> Laurent {
        l.clone()
    }
    fn to_complex(&self, _: &Laurent) -> Option<Complex64> {
        None
    }
    fn sample(&self, x: &Laurent) -> Option<Complex64> {
        Some(x.eval_complex(sample_point()))
    }
}

/// The rational function field `Q(s)`.
#[derive(Clone, Debug, Default)]
pub struct GenericField;

impl Domain for GenericField {
    type F = RatFunc;
    fn spec(&self) -> ParameterSpec {
        ParameterSpec::Generic
    }
    fn embed(&self, l: &Laurent) -> RatFunc {
        RatFunc::from_laurent(l)
    }
    fn to_complex(&self, _: &RatFunc) -> Option<Complex64> {
        None
    }
    fn sample(&self, x: &RatFunc) -> Option<Complex64> {
        Some(x.eval_complex(sample_point()))
    }
}

/// `Q(zeta_{4r})` with `s = zeta_{4r}^k`, so `t = zeta_r^k`.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    r: u64,
    k: u64,
    ctx: Arc<CycloCtx>,
}

impl Cyclotomic {
    pub fn new(r: u64, k: u64) -> Result<Self> {
        ParameterSpec::RootOfUnity { r, k }.validate()?;
        Ok(Cyclotomic {
            r,
            k,
            ctx: CycloCtx::new(4 * r),
        })
    }

    pub fn principal(r: u64) -> Result<Self> {
        Self::new(r, 1)
    }

    pub fn ctx(&self) -> &Arc<CycloCtx> {
        &self.ctx
    }

    pub fn order(&self) -> u64 {
        self.r
    }

    pub fn t(&self) -> Cyclo {
        self.embed(&Laurent::t_pow(1))
    }
}

impl Domain for Cyclotomic {
    type F = Cyclo;
    fn spec(&self) -> ParameterSpec {
        ParameterSpec::RootOfUnity {
            r: self.r,
            k: self.k,
        }
    }
    fn embed(&self, l: &Laurent) -> Cyclo {
        Cyclo::from_laurent(&self.ctx, l, self.k as i64)
    }
    fn to_complex(&self, x: &Cyclo) -> Option<Complex64> {
        Some(x.to_complex())
    }
}

/// A rational point where `s` itself is rational: `t = s^4`.
#[derive(Clone, Debug)]
pub struct RationalPoint {
    s: Q,
}

impl RationalPoint {
    pub fn from_s(s: Q) -> Result<Self> {
        if s.is_zero() {
            return Err(Error::InvalidParameter("s must be nonzero".into()));
        }
        Ok(RationalPoint { s })
    }

    /// Requires `t` to be the fourth power of a positive rational.
    pub fn from_t(t: &Q) -> Result<Self> {
        let root = super::qpoly::q_sqrt(t).and_then(|r| super::qpoly::q_sqrt(&r));
        match root {
            Some(s) => Self::from_s(s),
            None => Err(Error::InvalidParameter(format!(
                "t = {t} has no rational fourth root; use the generic parameter"
            ))),
        }
    }

    pub fn s(&self) -> &Q {
        &self.s
    }
}

impl Domain for RationalPoint {
    type F = Rational;
    fn spec(&self) -> ParameterSpec {
        let t = &self.s * &self.s * &self.s * &self.s;
        ParameterSpec::RationalValue(t)
    }
    fn embed(&self, l: &Laurent) -> Rational {
        Rational(l.eval_rational(&self.s).expect("s is nonzero"))
    }
    fn to_complex(&self, x: &Rational) -> Option<Complex64> {
        Some(Complex64::new(q_to_f64(&x.0), 0.0))
    }
}

/// Numeric value of a Laurent polynomial in `s` at the point `p`.
pub fn evaluate(x: &Laurent, p: &ParameterSpec) -> Result<Complex64> {
    p.validate()?;
    let s = p.numeric_s()?;
    Ok(x.eval_complex(s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::qpoly::q_int;
    use crate::arith::quantum::quantum_integer;

    #[test]
    fn evaluate_examples() {
        let two = quantum_integer(2);
        let v = evaluate(&two, &ParameterSpec::RationalValue(q_int(4))).unwrap();
        assert!((v - Complex64::new(2.5, 0.0)).norm() < 1e-12);

        let d = crate::arith::quantum::delta();
        let v = evaluate(&d, &ParameterSpec::RationalValue(q_int(1))).unwrap();
        assert!((v - Complex64::new(-2.0, 0.0)).norm() < 1e-12);

        let five = quantum_integer(5);
        let v = evaluate(&five, &ParameterSpec::principal_root(5)).unwrap();
        assert!(v.norm() < 1e-12);

        assert!(evaluate(&five, &ParameterSpec::Generic).is_err());
    }

    #[test]
    fn rational_point_needs_fourth_power() {
        assert!(RationalPoint::from_t(&q_int(16)).is_ok());
        assert!(RationalPoint::from_t(&q_int(2)).is_err());
        let d = RationalPoint::from_t(&q_int(1)).unwrap();
        assert_eq!(d.delta(), Rational::int(-2));
    }

    #[test]
    fn cyclotomic_records_fourth_root() {
        let d = Cyclotomic::principal(10).unwrap();
        assert_eq!(d.ctx().order(), 40);
        assert!(d.t().pow(10).is_one());
        assert!(!d.t().pow(5).is_one());
        assert!(Cyclotomic::new(10, 2).is_err());
    }
}
