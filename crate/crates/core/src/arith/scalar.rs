use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use super::qpoly::Q;

/// Exact coefficient ring used by matrices, skein vectors and polynomials.
///
/// Elements may carry context (a cyclotomic modulus, say), so constants are
/// produced from an existing element with `zero_like`/`one_like`.
pub trait Scalar:
    Clone
    + PartialEq
    + Eq
    + Hash
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    #[allow(clippy::wrong_self_convention)]
    fn from_rational_like(&self, q: &Q) -> Self;
    /// Multiplicative inverse, `None` when the element is not a unit.
    fn try_inv(&self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    #[allow(clippy::wrong_self_convention)]
    fn from_int_like(&self, k: i64) -> Self {
        self.from_rational_like(&super::qpoly::q_int(k))
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }
}

/// Marker for scalars where every nonzero element is invertible.
pub trait Field: Scalar {
    fn inv(&self) -> Self {
        self.try_inv().expect("inverse of zero")
    }

    fn div(&self, other: &Self) -> Self {
        self.clone() * other.inv()
    }
}

/// Rationals as a scalar type.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(pub Q);

impl Rational {
    pub fn new(q: Q) -> Self {
        Rational(q)
    }
    pub fn int(k: i64) -> Self {
        Rational(super::qpoly::q_int(k))
    }
}

impl Display for Rational {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Add for Rational {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Rational(self.0 + o.0)
    }
}
impl Sub for Rational {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Rational(self.0 - o.0)
    }
}
impl Mul for Rational {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Rational(self.0 * o.0)
    }
}
impl Neg for Rational {
    type Output = Self;
    fn neg(self) -> Self {
        Rational(-self.0)
    }
}

impl Scalar for Rational {
    fn zero_like(&self) -> Self {
        Rational::int(0)
    }
    fn one_like(&self) -> Self {
        Rational::int(1)
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(&self.0)
    }
    fn from_rational_like(&self, q: &Q) -> Self {
        Rational(q.clone())
    }
    fn try_inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| Rational(self.0.recip()))
    }
}

impl Field for Rational {}
