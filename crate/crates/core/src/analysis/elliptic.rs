//! Elliptic elements of infinite order.
//!
//! After removing the eigenvalue 1, an eigenvalue on the unit circle is
//! tested against every root of unity its degree allows. The degree over
//! `Q` is bounded by the factor degree times the degree of the field its
//! coefficients generate.

use num_complex::Complex64;
use serde::Serialize;

use super::charpoly::{generic_char_poly, specialize_poly, strip_unit_root};
use crate::arith::{
    durand_kerner, root_of_unity_order, AlgebraicNumber, Cyclo, CycloCtx, Cyclotomic, Embedded,
    Field, Poly, Rational, RootOrder,
};
use crate::linalg::SpanBuilder;
use crate::rep::Representation;
use crate::skein::Normalization;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EllipticVerdict {
    InfiniteOrder,
    FiniteOrder(u64),
    /// Some remaining eigenvalue lies off the unit circle.
    NotElliptic,
}

#[derive(Clone, Debug, Serialize)]
pub struct EllipticWitness {
    pub char_poly: String,
    pub factor: String,
    pub unit_eigenvalue_multiplicity: usize,
    pub eigenvalue: (f64, f64),
    pub radius: f64,
    pub angle_degrees: f64,
    pub degree_bound: u64,
    pub verdict: EllipticVerdict,
}

const UNIT_TOL: f64 = 1e-9;

/// Decides the order of an eigenvalue of `p` other than 1. `coefficient_degree`
/// is the degree over `Q` of the field generated by the coefficients.
pub fn elliptic_from_charpoly<F: Field + Embedded>(
    p: &Poly<F>,
    coefficient_degree: u64,
) -> Result<EllipticWitness> {
    let (mult, q) = strip_unit_root(p);
    let deg = q.degree().unwrap_or(0);
    if deg == 0 {
        return Err(Error::Numeric("every eigenvalue equals 1".into()));
    }
    let roots = durand_kerner(&q.to_complex_coeffs());
    let off_circle = roots.iter().any(|z| (z.norm() - 1.0).abs() > 1e-6);
    // upper half plane first, then largest imaginary part
    let guess = roots
        .iter()
        .copied()
        .max_by(|a, b| a.im.total_cmp(&b.im).then(b.re.total_cmp(&a.re)))
        .unwrap_or(Complex64::new(1.0, 0.0));
    let lambda = AlgebraicNumber::new(&q, guess)?;
    let degree_bound = deg as u64 * coefficient_degree;
    let verdict = if off_circle || (lambda.approx().norm() - 1.0).abs() > lambda.radius() + UNIT_TOL
    {
        EllipticVerdict::NotElliptic
    } else {
        match root_of_unity_order(&lambda, degree_bound)? {
            RootOrder::Finite(m) => EllipticVerdict::FiniteOrder(m),
            RootOrder::InfiniteOrder => EllipticVerdict::InfiniteOrder,
        }
    };
    let z = lambda.approx();
    Ok(EllipticWitness {
        char_poly: p.to_string(),
        factor: q.to_string(),
        unit_eigenvalue_multiplicity: mult,
        eigenvalue: (z.re, z.im),
        radius: lambda.radius(),
        angle_degrees: lambda.angle_degrees().abs(),
        degree_bound,
        verdict,
    })
}

/// Degree over `Q` of the subfield of a cyclotomic field generated by `xs`.
pub fn generated_degree(xs: &[Cyclo], ctx: &std::sync::Arc<CycloCtx>) -> u64 {
    let width = ctx.degree();
    let coords = |x: &Cyclo| -> Vec<Rational> {
        (0..width).map(|i| Rational(x.residue().coeff(i))).collect()
    };
    let mut span = SpanBuilder::new();
    let one = Cyclo::one(ctx);
    span.insert(coords(&one));
    let mut frontier = vec![one];
    while let Some(v) = frontier.pop() {
        for x in xs {
            let p = v.clone() * x.clone();
            if span.insert(coords(&p)) {
                frontier.push(p);
            }
        }
    }
    span.dim() as u64
}

/// Witness at `t = exp(2 pi i k / r)`, computed in `Q(zeta_{4r})`.
pub fn elliptic_at_root(
    n: usize,
    c: usize,
    word: &[i64],
    r: u64,
    k: u64,
) -> Result<EllipticWitness> {
    let d = Cyclotomic::new(r, k)?;
    let rep = Representation::build(n, c, &d, Normalization::Bracket)?;
    let p = rep.word_matrix(word)?.char_poly();
    let (_, q) = strip_unit_root(&p);
    let deg = generated_degree(q.coeffs(), d.ctx());
    elliptic_from_charpoly(&p, deg)
}

/// Witness at `t + 1/t = 1 + 2 cos(2 pi / m)`. The generic characteristic
/// polynomial is specialized through `t + 1/t`, landing in `Q(zeta_m)`.
pub fn elliptic_at_trace(n: usize, c: usize, word: &[i64], m: u64) -> Result<EllipticWitness> {
    let p = generic_char_poly(n, c, word, Normalization::Bracket)?;
    let ctx = CycloCtx::new(m);
    let u = Cyclo::one(&ctx) + Cyclo::zeta_pow(&ctx, 1) + Cyclo::zeta_pow(&ctx, -1);
    let ps = specialize_poly(&p, &u)?;
    let (_, q) = strip_unit_root(&ps);
    let deg = generated_degree(q.coeffs(), &ctx);
    elliptic_from_charpoly(&ps, deg)
}

/// Multiplicative order of an exact nonzero cyclotomic number, if finite.
pub fn cyclo_order(x: &Cyclo) -> Result<RootOrder> {
    let lin = Poly::linear_root(x.clone());
    let a = AlgebraicNumber::new(&lin, x.to_complex())?;
    let deg = generated_degree(std::slice::from_ref(x), x.ctx());
    root_of_unity_order(&a, deg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Domain;
    use crate::skein::parse_braid_word;

    fn commutator() -> Vec<i64> {
        parse_braid_word("[2,2 3 3 3 2 -1]").unwrap()
    }

    #[test]
    fn tenth_root_witness() {
        let w = elliptic_at_root(4, 2, &commutator(), 10, 1).unwrap();
        assert_eq!(w.verdict, EllipticVerdict::InfiniteOrder);
        assert_eq!(w.degree_bound, 4);
        assert_eq!(w.unit_eigenvalue_multiplicity, 1);
        assert!(
            (w.angle_degrees - 96.778652).abs() < 1e-5,
            "{}",
            w.angle_degrees
        );
    }

    #[test]
    fn trace_witness() {
        let w = elliptic_at_trace(4, 2, &commutator(), 7).unwrap();
        assert_eq!(w.verdict, EllipticVerdict::InfiniteOrder);
        assert_eq!(w.degree_bound, 6);
        assert!(
            (w.angle_degrees - 165.812896).abs() < 1e-5,
            "{}",
            w.angle_degrees
        );
    }

    #[test]
    fn tau1_eigenvalue_ratio_has_order_five() {
        let d = Cyclotomic::principal(10).unwrap();
        let ratio = -d.t();
        assert_eq!(cyclo_order(&ratio).unwrap(), RootOrder::Finite(5));
        assert_eq!(cyclo_order(&d.s_pow(-3)).unwrap(), RootOrder::Finite(40));
    }

    #[test]
    fn finite_order_element() {
        // tau1 on three strands has finite order at a root of unity
        let w = elliptic_at_root(3, 1, &[1, 1], 5, 1).unwrap();
        assert!(matches!(w.verdict, EllipticVerdict::FiniteOrder(_)));
    }

    #[test]
    fn generated_degrees() {
        let ctx = CycloCtx::new(7);
        let u = Cyclo::zeta_pow(&ctx, 1) + Cyclo::zeta_pow(&ctx, -1);
        assert_eq!(generated_degree(&[u], &ctx), 3);
        assert_eq!(generated_degree(&[Cyclo::zeta_pow(&ctx, 1)], &ctx), 6);
        assert_eq!(generated_degree(&[], &ctx), 1);
    }
}
