//! The fraction field `Q(s)` used for the generic parameter.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use super::laurent::Laurent;
use super::qpoly::{QPoly, Q};
use super::scalar::{Field, Scalar};

/// `num / den` with `gcd(num, den) = 1` and `den` monic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: QPoly,
    den: QPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc {
            num: QPoly::one(),
            den: QPoly::one(),
        }
    }

    pub fn new(num: QPoly, den: QPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        if den.degree() == Some(0) {
            let inv = den.coeffs()[0].recip();
            return RatFunc {
                num: num.scale(&inv),
                den: QPoly::one(),
            };
        }
        let g = QPoly::gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let lead = den.leading().unwrap().recip();
        RatFunc {
            num: num.scale(&lead),
            den: den.scale(&lead),
        }
    }

    pub fn from_laurent(l: &Laurent) -> Self {
        let (low, p) = l.to_shifted_poly();
        if low >= 0 {
            RatFunc {
                num: p.shift(low as usize),
                den: QPoly::one(),
            }
        } else {
            // p(0) != 0 so p and s^k are coprime
            RatFunc {
                num: p,
                den: QPoly::monomial(Q::from_integer(1.into()), (-low) as usize),
            }
        }
    }

    /// The Laurent polynomial this equals, if the denominator is a power of `s`.
    pub fn to_laurent(&self) -> Option<Laurent> {
        let k = self.den.degree()?;
        if self.den != QPoly::monomial(Q::from_integer(1.into()), k) {
            return None;
        }
        Some(Laurent::from_shifted_poly(-(k as i64), &self.num))
    }

    pub fn numer(&self) -> &QPoly {
        &self.num
    }

    pub fn denom(&self) -> &QPoly {
        &self.den
    }

    /// The bar involution `s -> s^{-1}`.
    pub fn bar(&self) -> Self {
        if self.num.is_zero() {
            return Self::zero();
        }
        let dn = self.num.degree().unwrap() as i64;
        let dd = self.den.degree().unwrap() as i64;
        // N(1/s)/D(1/s) = s^(dd-dn) * rev(N)/rev(D)
        let (n, d) = (self.num.reversed(), self.den.reversed());
        let shift = dd - dn;
        if shift >= 0 {
            Self::new(n.shift(shift as usize), d)
        } else {
            Self::new(n, d.shift((-shift) as usize))
        }
    }

    pub fn eval_complex(&self, s: Complex64) -> Complex64 {
        self.num.eval_complex(s) / self.den.eval_complex(s)
    }

    pub fn eval_rational(&self, s: &Q) -> Option<Q> {
        let d = self.den.eval(s);
        if num_traits::Zero::is_zero(&d) {
            return None;
        }
        Some(self.num.eval(s) / d)
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, o: RatFunc) -> RatFunc {
        if self.den == o.den {
            return RatFunc::new(self.num.add(&o.num), self.den);
        }
        RatFunc::new(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, o: RatFunc) -> RatFunc {
        self + (-o)
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den,
        }
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, o: RatFunc) -> RatFunc {
        if self.num.is_zero() || o.num.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFunc {
                num: self.num.mul(&o.num),
                den: QPoly::one(),
            };
        }
        RatFunc::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }
}

impl Scalar for RatFunc {
    fn zero_like(&self) -> Self {
        RatFunc::zero()
    }
    fn one_like(&self) -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn from_rational_like(&self, q: &Q) -> Self {
        RatFunc::new(QPoly::constant(q.clone()), QPoly::one())
    }
    fn try_inv(&self) -> Option<Self> {
        (!self.num.is_zero()).then(|| RatFunc::new(self.den.clone(), self.num.clone()))
    }
}

impl Field for RatFunc {}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(l) = self.to_laurent() {
            return write!(f, "{l}");
        }
        let n = Laurent::from_shifted_poly(0, &self.num);
        let d = Laurent::from_shifted_poly(0, &self.den);
        write!(f, "({n})/({d})")
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}
