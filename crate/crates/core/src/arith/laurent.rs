//! Laurent polynomials in `s = t^{1/4}` with rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_complex::Complex64;
use num_traits::{One, Signed, Zero};

use super::qpoly::{q_int, q_to_f64, QPoly, Q};
use super::scalar::Scalar;
use crate::Error;

/// `sum_k coeffs[k] * s^(low + k)`, canonical: no zero at either end, and
/// the zero polynomial has `low == 0` and no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent {
    low: i64,
    coeffs: Vec<Q>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent {
            low: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(Q::one(), 0)
    }

    pub fn constant(c: Q) -> Self {
        Self::monomial(c, 0)
    }

    pub fn int(k: i64) -> Self {
        Self::constant(q_int(k))
    }

    /// `c * s^e`
    pub fn monomial(c: Q, e: i64) -> Self {
        Self::from_parts(e, vec![c])
    }

    /// `s^e`
    pub fn s_pow(e: i64) -> Self {
        Self::monomial(Q::one(), e)
    }

    /// `t^e = s^(4e)`
    pub fn t_pow(e: i64) -> Self {
        Self::s_pow(4 * e)
    }

    pub fn from_parts(low: i64, mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        Laurent {
            low: low + lead as i64,
            coeffs,
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Q)>>(terms: I) -> Self {
        terms
            .into_iter()
            .fold(Self::zero(), |acc, (e, c)| acc + Self::monomial(c, e))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn low(&self) -> i64 {
        self.low
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn high(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, e: i64) -> Q {
        let k = e - self.low;
        if k < 0 {
            return Q::zero();
        }
        self.coeffs.get(k as usize).cloned().unwrap_or_else(Q::zero)
    }

    /// Nonzero `(exponent, coefficient)` pairs, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Q)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.low + k as i64, c))
    }

    pub fn is_monomial(&self) -> bool {
        self.terms().count() == 1
    }

    /// The bar involution `s -> s^{-1}`.
    pub fn bar(&self) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (-e, c.clone())))
    }

    /// Substitute `s -> s^k` (k may be negative).
    pub fn substitute_power(&self, k: i64) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e * k, c.clone())))
    }

    /// Split as `s^low * P(s)` with `P(0) != 0`.
    pub fn to_shifted_poly(&self) -> (i64, QPoly) {
        (self.low, QPoly::from_coeffs(self.coeffs.clone()))
    }

    pub fn from_shifted_poly(low: i64, p: &QPoly) -> Self {
        Self::from_parts(low, p.coeffs().to_vec())
    }

    pub fn eval_complex(&self, s: Complex64) -> Complex64 {
        self.terms()
            .map(|(e, c)| s.powi(e as i32) * q_to_f64(c))
            .sum()
    }

    pub fn eval_rational(&self, s: &Q) -> Option<Q> {
        if s.is_zero() {
            return if self.low >= 0 {
                Some(self.coeff(0))
            } else {
                None
            };
        }
        let mut acc = Q::zero();
        for (e, c) in self.terms() {
            acc += c * pow_q(s, e);
        }
        Some(acc)
    }

    /// Exact division by a unit (a nonzero monomial).
    pub fn div_monomial(&self, m: &Laurent) -> Option<Self> {
        if !m.is_monomial() {
            return None;
        }
        let (e, c) = m.terms().next().map(|(e, c)| (e, c.clone()))?;
        let inv = c.recip();
        Some(Self::from_terms(
            self.terms().map(|(k, a)| (k - e, a * &inv)),
        ))
    }

    /// When every exponent is divisible by 4, view this as a Laurent
    /// polynomial in `t` (returned with exponents in units of `t`).
    pub fn as_t_laurent(&self) -> Option<Laurent> {
        if self.terms().all(|(e, _)| e % 4 == 0) {
            Some(Self::from_terms(
                self.terms().map(|(e, c)| (e / 4, c.clone())),
            ))
        } else {
            None
        }
    }
}

fn pow_q(s: &Q, e: i64) -> Q {
    let base = if e < 0 { s.recip() } else { s.clone() };
    let mut acc = Q::one();
    for _ in 0..e.unsigned_abs() {
        acc *= &base;
    }
    acc
}

impl Add for Laurent {
    type Output = Laurent;
    fn add(self, o: Laurent) -> Laurent {
        if self.is_zero() {
            return o;
        }
        if o.is_zero() {
            return self;
        }
        let low = self.low.min(o.low);
        let high = self.high().max(o.high());
        let v = (low..=high).map(|e| self.coeff(e) + o.coeff(e)).collect();
        Laurent::from_parts(low, v)
    }
}

impl Sub for Laurent {
    type Output = Laurent;
    fn sub(self, o: Laurent) -> Laurent {
        self + (-o)
    }
}

impl Neg for Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent {
            low: self.low,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for Laurent {
    type Output = Laurent;
    fn mul(self, o: Laurent) -> Laurent {
        if self.is_zero() || o.is_zero() {
            return Laurent::zero();
        }
        let mut v = vec![Q::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] += a * b;
                }
            }
        }
        Laurent::from_parts(self.low + o.low, v)
    }
}

impl Scalar for Laurent {
    fn zero_like(&self) -> Self {
        Laurent::zero()
    }
    fn one_like(&self) -> Self {
        Laurent::one()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn from_rational_like(&self, q: &Q) -> Self {
        Laurent::constant(q.clone())
    }
    fn try_inv(&self) -> Option<Self> {
        Laurent::one().div_monomial(self)
    }
}

fn fmt_term(f: &mut fmt::Formatter<'_>, first: bool, e: i64, c: &Q) -> fmt::Result {
    let neg = c.is_negative();
    let mag = c.abs();
    if first {
        if neg {
            write!(f, "-")?;
        }
    } else {
        write!(f, " {} ", if neg { '-' } else { '+' })?;
    }
    let mono = match e {
        0 => None,
        1 => Some("s".to_string()),
        _ => Some(format!("s^{e}")),
    };
    match mono {
        None => write!(f, "{mag}"),
        Some(m) if mag.is_one() => write!(f, "{m}"),
        Some(m) => write!(f, "{mag}*{m}"),
    }
}

/// Terms print with exponents in descending order, e.g. `-s^2 - s^-2`.
impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<_> = self.terms().collect();
        for (k, (e, c)) in terms.iter().rev().enumerate() {
            fmt_term(f, k == 0, *e, c)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({self})")
    }
}

/// Parses the printed grammar: signed terms `c`, `c*s^k`, `s^k`, `s`,
/// separated by `+`/`-`. Whitespace is ignored.
impl FromStr for Laurent {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self, Error> {
        let text: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(Error::Parse(format!("empty scalar {input:?}")));
        }
        let bad = || Error::Parse(format!("malformed scalar {input:?}"));
        // split into signed chunks, keeping exponent signs (after '^') attached
        let mut chunks: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        let chars: Vec<char> = text.chars().collect();
        for (i, &ch) in chars.iter().enumerate() {
            let after_caret = i > 0 && chars[i - 1] == '^';
            if (ch == '+' || ch == '-') && !after_caret {
                if !cur.is_empty() {
                    chunks.push((neg, std::mem::take(&mut cur)));
                } else if i > 0 {
                    return Err(bad());
                }
                neg = ch == '-';
            } else {
                cur.push(ch);
            }
        }
        if cur.is_empty() {
            return Err(bad());
        }
        chunks.push((neg, cur));

        let mut acc = Laurent::zero();
        for (neg, chunk) in chunks {
            let (coef_str, mono) = match chunk.find('s') {
                None => (chunk.as_str(), None),
                Some(pos) => {
                    let coef = chunk[..pos].trim_end_matches('*');
                    (coef, Some(&chunk[pos..]))
                }
            };
            let coef: Q = if coef_str.is_empty() {
                Q::one()
            } else {
                coef_str.parse::<Q>().map_err(|_| bad())?
            };
            let exp = match mono {
                None => 0,
                Some("s") => 1,
                Some(m) => {
                    let rest = m.strip_prefix("s^").ok_or_else(bad)?;
                    rest.parse::<i64>().map_err(|_| bad())?
                }
            };
            let c = if neg { -coef } else { coef };
            acc = acc + Laurent::monomial(c, exp);
        }
        Ok(acc)
    }
}
