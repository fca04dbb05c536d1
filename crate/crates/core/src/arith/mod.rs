//! Exact scalars: rationals, Laurent polynomials in `s = t^{1/4}`, rational
//! functions, cyclotomic fields and algebraic numbers.

mod algebraic;
mod cyclo;
mod domain;
mod laurent;
mod poly;
mod qpoly;
mod quantum;
mod ratfunc;
mod scalar;

pub use algebraic::{durand_kerner, root_of_unity_order, AlgebraicNumber, RootOrder};
pub use cyclo::{Cyclo, CycloCtx};
pub use domain::{
    evaluate, trace_to_t, Angle, Cyclotomic, Domain, GenericField, LaurentRing, ParameterSpec,
    RationalPoint, TraceValue,
};
pub use laurent::Laurent;
pub use poly::{Embedded, Poly};
pub use qpoly::{cyclotomic, q_int, q_sqrt, q_to_f64, totient, QPoly, Q};
pub use quantum::{delta, quantum_integer, quantum_integer_in};
pub use ratfunc::RatFunc;
pub use scalar::{Field, Rational, Scalar};
