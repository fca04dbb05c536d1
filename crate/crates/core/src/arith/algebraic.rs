//! Algebraic numbers given by a defining polynomial and an isolating disc,
//! and exact root-of-unity order detection.

use num_complex::Complex64;
use serde::Serialize;

use super::poly::{Embedded, Poly};
use super::qpoly::totient;
use super::scalar::Field;
use crate::{Error, Result};

/// All complex roots of the polynomial with the given coefficients (lowest
/// degree first) by Weierstrass iteration followed by Newton polishing.
pub fn durand_kerner(coeffs: &[Complex64]) -> Vec<Complex64> {
    let mut c: Vec<Complex64> = coeffs.to_vec();
    while c.last().is_some_and(|z| z.norm() == 0.0) {
        c.pop();
    }
    let n = c.len().saturating_sub(1);
    if n == 0 {
        return Vec::new();
    }
    let lead = c[n];
    let c: Vec<Complex64> = c.iter().map(|z| z / lead).collect();
    let eval = |z: Complex64| {
        c.iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, a| acc * z + a)
    };
    let deriv = |z: Complex64| {
        c.iter()
            .enumerate()
            .skip(1)
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, (k, a)| {
                acc * z + a * k as f64
            })
    };
    let bound = 1.0 + c[..n].iter().map(|z| z.norm()).fold(0.0, f64::max);
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..n)
        .map(|k| seed.powu(k as u32) * (bound / 2.0).max(0.5).min(bound))
        .collect();
    for _ in 0..2000 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    den *= roots[i] - roots[j];
                }
            }
            if den.norm() == 0.0 {
                roots[i] += Complex64::new(1e-9, 1e-9);
                continue;
            }
            let step = eval(roots[i]) / den;
            roots[i] -= step;
            moved = moved.max(step.norm());
        }
        if moved < 1e-15 {
            break;
        }
    }
    for z in roots.iter_mut() {
        for _ in 0..3 {
            let d = deriv(*z);
            if d.norm() == 0.0 {
                break;
            }
            let step = eval(*z) / d;
            if !step.is_finite() {
                break;
            }
            *z -= step;
        }
    }
    roots
}

fn derivative<F: Field>(p: &Poly<F>) -> Poly<F> {
    let proto = p.proto().clone();
    let v = p
        .coeffs()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c.clone() * proto.from_int_like(k as i64))
        .collect();
    Poly::new(v, proto)
}

/// A root of `poly`, singled out by an approximation and an error radius
/// small enough that the disc contains no other root.
#[derive(Clone, Debug)]
pub struct AlgebraicNumber<F: Field + Embedded> {
    poly: Poly<F>,
    approx: Complex64,
    radius: f64,
}

impl<F: Field + Embedded> AlgebraicNumber<F> {
    /// Picks the root of `poly` closest to `guess`. The stored polynomial is
    /// the squarefree part, so the chosen root is simple.
    pub fn new(poly: &Poly<F>, guess: Complex64) -> Result<Self> {
        if poly.degree().unwrap_or(0) == 0 {
            return Err(Error::Numeric(
                "defining polynomial must have positive degree".into(),
            ));
        }
        let g = Poly::gcd(poly, &derivative(poly));
        let sf = poly.monic().div_exact_monic(&g).expect("gcd divides");
        let cc = sf.to_complex_coeffs();
        let roots = durand_kerner(&cc);
        let (idx, _) = roots
            .iter()
            .enumerate()
            .map(|(i, z)| (i, (z - guess).norm()))
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .ok_or_else(|| Error::Numeric("no roots found".into()))?;
        let z = roots[idx];
        let n = roots.len() as f64;
        let p = cc
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, a| acc * z + a);
        let dp = cc
            .iter()
            .enumerate()
            .skip(1)
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, (k, a)| {
                acc * z + a * k as f64
            });
        let radius = (n * (p / dp).norm()).max(1e-12 * (1.0 + z.norm()));
        let sep = roots
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != idx)
            .map(|(_, w)| (w - z).norm())
            .fold(f64::INFINITY, f64::min);
        if sep.is_nan() || sep <= 2.0 * radius {
            return Err(Error::Numeric(
                "could not isolate the requested root".into(),
            ));
        }
        Ok(AlgebraicNumber {
            poly: sf,
            approx: z,
            radius,
        })
    }

    pub fn poly(&self) -> &Poly<F> {
        &self.poly
    }

    pub fn approx(&self) -> Complex64 {
        self.approx
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// Argument in degrees, in `(-180, 180]`.
    pub fn angle_degrees(&self) -> f64 {
        self.approx.arg().to_degrees()
    }

    /// Whether this root is also a root of `q`, decided exactly through
    /// `gcd(poly, q)` and the isolating disc.
    pub fn is_root_of(&self, q: &Poly<F>) -> bool {
        let g = Poly::gcd(&self.poly, q);
        if g.degree().unwrap_or(0) == 0 {
            return false;
        }
        durand_kerner(&g.to_complex_coeffs())
            .iter()
            .any(|w| (w - self.approx).norm() <= 2.0 * self.radius + 1e-9)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RootOrder {
    Finite(u64),
    InfiniteOrder,
}

/// The multiplicative order of `lambda`, assuming its degree over `Q` is at
/// most `degree_bound`. Any root of unity of order `m` has degree `phi(m)`,
/// so only `m` with `phi(m) <= degree_bound` are candidates.
pub fn root_of_unity_order<F: Field + Embedded>(
    lambda: &AlgebraicNumber<F>,
    degree_bound: u64,
) -> Result<RootOrder> {
    let modulus = lambda.approx.norm();
    if (modulus - 1.0).abs() > lambda.radius + 1e-9 {
        return Err(Error::NotUnitModulus(modulus));
    }
    let proto = lambda.poly.proto().clone();
    let one = Poly::constant(proto.one_like());
    // phi(m) >= sqrt(m/2)
    let max_m = 2 * degree_bound * degree_bound + 2;
    for m in 1..=max_m {
        if totient(m) > degree_bound {
            continue;
        }
        let r = Poly::x_pow_mod(m, &lambda.poly).sub(&one);
        let hit = lambda.is_root_of(&r);
        if hit {
            return Ok(RootOrder::Finite(m));
        }
    }
    Ok(RootOrder::InfiniteOrder)
}
