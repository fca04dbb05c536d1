//! Univariate polynomials in `x` over any [`Scalar`].

use std::fmt;

use num_complex::Complex64;

use super::scalar::{Field, Scalar};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<T: Scalar> {
    /// Lowest degree first, no trailing zeros.
    coeffs: Vec<T>,
    zero: T,
}

impl<T: Scalar> Poly<T> {
    pub fn new(coeffs: Vec<T>, zero: T) -> Self {
        let mut p = Poly { coeffs, zero };
        p.trim();
        p
    }

    pub fn zero(proto: &T) -> Self {
        Poly {
            coeffs: Vec::new(),
            zero: proto.zero_like(),
        }
    }

    pub fn constant(c: T) -> Self {
        let zero = c.zero_like();
        Self::new(vec![c], zero)
    }

    /// `x - a`
    pub fn linear_root(a: T) -> Self {
        let one = a.one_like();
        let zero = a.zero_like();
        Self::new(vec![-a, one], zero)
    }

    /// `x^k`
    pub fn x_pow(proto: &T, k: usize) -> Self {
        let mut v = vec![proto.zero_like(); k + 1];
        v[k] = proto.one_like();
        Self::new(v, proto.zero_like())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.zero.clone())
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn proto(&self) -> &T {
        &self.zero
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new(
            (0..n).map(|i| self.coeff(i) + o.coeff(i)).collect(),
            self.zero.clone(),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new(
            (0..n).map(|i| self.coeff(i) - o.coeff(i)).collect(),
            self.zero.clone(),
        )
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(&self.zero);
        }
        let mut v = vec![self.zero.clone(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(v, self.zero.clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(
            self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
            self.zero.clone(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(self.zero.one_like());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = self.zero.clone();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Apply a ring map to every coefficient.
    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U, zero: U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect(), zero)
    }

    /// Divide by a monic divisor; returns `None` unless the division is exact.
    /// Works over rings because the divisor is monic.
    pub fn div_exact_monic(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem_monic(d);
        r.is_zero().then_some(q)
    }

    pub fn div_rem_monic(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        assert!(d.coeffs[dd].is_one(), "divisor must be monic");
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(&self.zero), self.clone());
        }
        let mut q = vec![self.zero.clone(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = r[k + dd].clone();
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] = r[k + j].clone() - c.clone() * dc.clone();
                }
                q[k] = c;
            }
        }
        r.truncate(dd);
        (
            Self::new(q, self.zero.clone()),
            Self::new(r, self.zero.clone()),
        )
    }
}

impl<T: Field> Poly<T> {
    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(l) => self.scale(&l.inv()),
        }
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem_monic(&d.monic()).1
    }

    pub fn gcd(a: &Self, b: &Self) -> Self {
        let (mut a, mut b) = (a.monic(), b.monic());
        while !b.is_zero() {
            let r = a.rem(&b).monic();
            a = b;
            b = r;
        }
        a
    }

    /// `x^e mod m`
    pub fn x_pow_mod(e: u64, m: &Self) -> Self {
        let m = m.monic();
        let proto = m.zero.clone();
        let mut acc = Self::constant(proto.one_like()).rem(&m);
        let mut base = Self::x_pow(&proto, 1).rem(&m);
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(&m);
            }
            base = base.mul(&base).rem(&m);
            e >>= 1;
        }
        acc
    }
}

/// Coefficients with a numeric embedding.
pub trait Embedded: Scalar {
    fn to_complex(&self) -> Complex64;
}

impl Embedded for super::cyclo::Cyclo {
    fn to_complex(&self) -> Complex64 {
        super::cyclo::Cyclo::to_complex(self)
    }
}

impl Embedded for super::scalar::Rational {
    fn to_complex(&self) -> Complex64 {
        Complex64::new(super::qpoly::q_to_f64(&self.0), 0.0)
    }
}

impl<T: Embedded> Poly<T> {
    pub fn to_complex_coeffs(&self) -> Vec<Complex64> {
        self.coeffs.iter().map(|c| c.to_complex()).collect()
    }
}

/// Prints as a polynomial in `x`, highest degree first; coefficients are
/// parenthesized unless they are a bare constant.
impl<T: Scalar> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let cs = c.to_string();
            let mono = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            if k == 0 {
                write!(f, "({cs})")?;
            } else if c.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "({cs})*{mono}")?;
            }
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::scalar::Rational;

    fn p(c: &[i64]) -> Poly<Rational> {
        Poly::new(
            c.iter().map(|&k| Rational::int(k)).collect(),
            Rational::int(0),
        )
    }

    #[test]
    fn exact_division() {
        let a = p(&[-1, 0, 0, 1]);
        let q = a.div_exact_monic(&p(&[-1, 1])).unwrap();
        assert_eq!(q, p(&[1, 1, 1]));
        assert!(a.div_exact_monic(&p(&[1, 0, 1])).is_none());
    }

    #[test]
    fn gcd_and_powmod() {
        let a = p(&[-1, 0, 0, 0, 1]);
        let b = p(&[-1, 0, 0, 0, 0, 0, 1]);
        assert_eq!(Poly::gcd(&a, &b), p(&[-1, 0, 1]));
        let r = Poly::x_pow_mod(12, &p(&[1, 0, 1]));
        assert_eq!(r, p(&[1]));
    }
}
