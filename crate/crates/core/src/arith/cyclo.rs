//! The cyclotomic field `Q(zeta_m)`, elements stored as residues modulo `Phi_m`.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::laurent::Laurent;
use super::qpoly::{cyclotomic, totient, QPoly, Q};
use super::scalar::{Field, Scalar};

#[derive(Debug)]
pub struct CycloCtx {
    m: u64,
    phi: QPoly,
}

impl CycloCtx {
    pub fn new(m: u64) -> Arc<Self> {
        Arc::new(CycloCtx {
            m,
            phi: cyclotomic(m),
        })
    }

    pub fn order(&self) -> u64 {
        self.m
    }

    /// `[Q(zeta_m) : Q]`
    pub fn degree(&self) -> usize {
        totient(self.m) as usize
    }

    pub fn modulus(&self) -> &QPoly {
        &self.phi
    }
}

#[derive(Clone)]
pub struct Cyclo {
    ctx: Arc<CycloCtx>,
    /// Reduced residue: degree < phi(m).
    rep: QPoly,
}

impl Cyclo {
    pub fn zero(ctx: &Arc<CycloCtx>) -> Self {
        Cyclo {
            ctx: ctx.clone(),
            rep: QPoly::zero(),
        }
    }

    pub fn one(ctx: &Arc<CycloCtx>) -> Self {
        Cyclo {
            ctx: ctx.clone(),
            rep: QPoly::one(),
        }
    }

    pub fn from_poly(ctx: &Arc<CycloCtx>, p: &QPoly) -> Self {
        Cyclo {
            ctx: ctx.clone(),
            rep: p.rem(&ctx.phi),
        }
    }

    /// `zeta^e` for any integer `e`.
    pub fn zeta_pow(ctx: &Arc<CycloCtx>, e: i64) -> Self {
        let k = e.rem_euclid(ctx.m as i64) as usize;
        Self::from_poly(ctx, &QPoly::monomial(Q::one(), k))
    }

    /// Image of a Laurent polynomial under `s -> zeta^k`.
    pub fn from_laurent(ctx: &Arc<CycloCtx>, l: &Laurent, k: i64) -> Self {
        let m = ctx.m as i64;
        let mut v = vec![Q::zero(); ctx.m as usize];
        for (e, c) in l.terms() {
            v[(e * k).rem_euclid(m) as usize] += c;
        }
        Self::from_poly(ctx, &QPoly::from_coeffs(v))
    }

    pub fn ctx(&self) -> &Arc<CycloCtx> {
        &self.ctx
    }

    pub fn residue(&self) -> &QPoly {
        &self.rep
    }

    /// Complex conjugation `zeta -> zeta^{-1}`.
    pub fn conj(&self) -> Self {
        let m = self.ctx.m as usize;
        let mut v = vec![Q::zero(); m];
        for (j, c) in self.rep.coeffs().iter().enumerate() {
            v[(m - j) % m] += c;
        }
        Self::from_poly(&self.ctx, &QPoly::from_coeffs(v))
    }

    /// Value at the principal embedding `zeta = exp(2 pi i / m)`.
    pub fn to_complex(&self) -> Complex64 {
        let z = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / self.ctx.m as f64);
        self.rep.eval_complex(z)
    }

    /// The rational value, when the residue is a constant.
    pub fn to_rational(&self) -> Option<Q> {
        match self.rep.degree() {
            None => Some(Q::zero()),
            Some(0) => Some(self.rep.coeffs()[0].clone()),
            _ => None,
        }
    }

    /// Coordinates in the power basis `1, zeta, ..., zeta^(phi-1)`.
    pub fn coordinates(&self) -> Vec<Q> {
        (0..self.ctx.degree()).map(|i| self.rep.coeff(i)).collect()
    }

    fn same_ctx(&self, o: &Self) {
        debug_assert_eq!(self.ctx.m, o.ctx.m, "mixed cyclotomic fields");
    }
}

impl PartialEq for Cyclo {
    fn eq(&self, o: &Self) -> bool {
        self.ctx.m == o.ctx.m && self.rep == o.rep
    }
}

impl Eq for Cyclo {}

impl Hash for Cyclo {
    fn hash<H: Hasher>(&self, h: &mut H) {
        self.ctx.m.hash(h);
        self.rep.hash(h);
    }
}

impl Add for Cyclo {
    type Output = Cyclo;
    fn add(self, o: Cyclo) -> Cyclo {
        self.same_ctx(&o);
        Cyclo {
            rep: self.rep.add(&o.rep),
            ctx: self.ctx,
        }
    }
}

impl Sub for Cyclo {
    type Output = Cyclo;
    fn sub(self, o: Cyclo) -> Cyclo {
        self.same_ctx(&o);
        Cyclo {
            rep: self.rep.sub(&o.rep),
            ctx: self.ctx,
        }
    }
}

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo {
            rep: self.rep.neg(),
            ctx: self.ctx,
        }
    }
}

impl Mul for Cyclo {
    type Output = Cyclo;
    fn mul(self, o: Cyclo) -> Cyclo {
        self.same_ctx(&o);
        let p = self.rep.mul(&o.rep);
        Cyclo::from_poly(&self.ctx, &p)
    }
}

impl Scalar for Cyclo {
    fn zero_like(&self) -> Self {
        Cyclo::zero(&self.ctx)
    }
    fn one_like(&self) -> Self {
        Cyclo::one(&self.ctx)
    }
    fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }
    fn from_rational_like(&self, q: &Q) -> Self {
        Cyclo {
            ctx: self.ctx.clone(),
            rep: QPoly::constant(q.clone()),
        }
    }
    fn try_inv(&self) -> Option<Self> {
        if self.rep.is_zero() {
            return None;
        }
        // Phi_m is irreducible, so the gcd is 1
        let (g, u, _) = QPoly::ext_gcd(&self.rep, &self.ctx.phi);
        debug_assert!(g.is_one());
        Some(Cyclo::from_poly(&self.ctx, &u))
    }
}

impl Field for Cyclo {}

/// Prints the residue as a polynomial in `z = zeta_m`.
impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = Laurent::from_shifted_poly(0, &self.rep);
        let text = l.to_string().replace('s', "z");
        write!(f, "{text}")
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclo[{}]({self})", self.ctx.m)
    }
}
