//! Full-twist fingerprints of `(n, c)` representations.

use std::fmt;

use serde::Serialize;

use crate::arith::{Domain, Field, Scalar};
use crate::linalg::Matrix;
use crate::rep::Representation;
use crate::{Error, Result};

/// Ratio of the two full-twist eigenvalues, `sign * s^exponent`, taken up to
/// inversion. At a root of unity the exponent is reduced mod the order of `s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TwistRatio {
    pub sign: i8,
    pub s_exponent: u64,
}

impl fmt::Display for TwistRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.sign < 0 { "-" } else { "" };
        if self.s_exponent.is_multiple_of(4) {
            write!(f, "{sign}t^{}", self.s_exponent / 4)
        } else {
            write!(f, "{sign}s^{}", self.s_exponent)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Fingerprint {
    pub n: usize,
    pub dim: usize,
    /// `None` when the twist acts by a single scalar.
    pub ratio: Option<TwistRatio>,
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.ratio {
            Some(r) => write!(f, "n={} dim={} twist-ratio={}", self.n, self.dim, r),
            None => write!(f, "n={} dim={} twist-ratio=none", self.n, self.dim),
        }
    }
}

fn twist_word(k: usize) -> Vec<i64> {
    let row: Vec<i64> = (1..k as i64).collect();
    (0..k).flat_map(|_| row.iter().copied()).collect()
}

/// Fingerprint from generator matrices alone, so it can be applied to any
/// equivalent copy of a representation.
pub fn fingerprint_from_generators<D: Domain>(
    n: usize,
    dim: usize,
    gens: &[Matrix<D::F>],
    domain: &D,
) -> Result<Fingerprint>
where
    D::F: Field,
{
    let zero = domain.zero();
    let mut twist = Matrix::identity(dim, &zero);
    if n >= 3 {
        for g in twist_word(n - 1) {
            twist = twist.mul(&gens[g as usize - 1]);
        }
    }
    let cp = twist.char_poly();
    let numeric: Option<Vec<_>> = cp.coeffs().iter().map(|c| domain.sample(c)).collect();
    let screen = |lam: &D::F| match (&numeric, domain.sample(lam)) {
        (Some(cs), Some(z)) => {
            let (mut acc, mut scale) = (num_complex::Complex64::new(0.0, 0.0), 0.0);
            for c in cs.iter().rev() {
                acc = acc * z + c;
                scale = scale * z.norm() + c.norm();
            }
            acc.norm() <= 1e-8 * scale
        }
        _ => cp.eval(lam).is_zero(),
    };
    let id = Matrix::identity(dim, &zero);
    let period = domain.root_order().map(|r| 4 * r as i64);
    let bound = match period {
        Some(p) => p,
        None => {
            let k = n as i64;
            4 * k * k + 8
        }
    };
    // candidates +-s^e; at a root of unity the sign is itself a power of s
    let mut found: Vec<(i8, i64, D::F)> = Vec::new();
    let mut total = 0;
    let range: Vec<i64> = match period {
        Some(p) => (0..p).collect(),
        None => (-bound..=bound).collect(),
    };
    let signs: &[i8] = if period.is_some() { &[1] } else { &[1, -1] };
    for e in range {
        for &sg in signs {
            let mut lam = domain.s_pow(e);
            if sg < 0 {
                lam = -lam;
            }
            if !screen(&lam) || found.iter().any(|(_, _, v)| *v == lam) {
                continue;
            }
            let nullity = dim - twist.sub(&id.scale(&lam)).rank();
            if nullity > 0 {
                total += nullity;
                found.push((sg, e, lam));
            }
        }
    }
    if total != dim {
        return Err(Error::Numeric(format!(
            "twist eigenspaces span {total} of {dim} dimensions"
        )));
    }
    let ratio = match found.len() {
        1 => None,
        2 => {
            let sign = found[0].0 * found[1].0;
            let d = found[0].1 - found[1].1;
            let s_exponent = match period {
                Some(p) => {
                    let m = d.rem_euclid(p);
                    m.min(p - m) as u64
                }
                None => d.unsigned_abs(),
            };
            Some(TwistRatio { sign, s_exponent })
        }
        k => {
            return Err(Error::Unsupported(format!(
                "full twist has {k} distinct eigenvalues"
            )))
        }
    };
    Ok(Fingerprint { n, dim, ratio })
}

pub fn fingerprint<D: Domain>(rep: &Representation<D>) -> Result<Fingerprint>
where
    D::F: Field,
{
    fingerprint_from_generators(rep.n, rep.dim(), &rep.generators, &rep.domain)
}
