//! Characteristic polynomials of braid words and their specializations.

use crate::arith::{Cyclo, Field, Laurent, Poly, Scalar};
use crate::linalg::Matrix;
use crate::skein::{Handedness, Normalization, SkeinSpace};
use crate::{Error, Result};

/// Matrix of a braid word on the generic space `W(n, c)` with Laurent entries.
pub fn laurent_word_matrix(
    space: &SkeinSpace,
    word: &[i64],
    norm: Normalization,
) -> Result<Matrix<Laurent>> {
    let mut m = Matrix::identity(space.dim(), &Laurent::zero());
    for &g in word {
        let i = g.unsigned_abs() as usize;
        if g == 0 || i >= space.n() {
            return Err(Error::IndexOutOfRange {
                index: g,
                max: space.n().saturating_sub(1) as u64,
            });
        }
        let h = if g > 0 {
            Handedness::Right
        } else {
            Handedness::Left
        };
        m = m.mul(&space.crossing_matrix(i, h, norm)?);
    }
    Ok(m)
}

/// Exact characteristic polynomial of a word acting on `X(n, c)` for
/// generic `t`, with coefficients Laurent polynomials in `s`.
pub fn generic_char_poly(
    n: usize,
    c: usize,
    word: &[i64],
    norm: Normalization,
) -> Result<Poly<Laurent>> {
    let space = SkeinSpace::new(n, c)?;
    Ok(laurent_word_matrix(&space, word, norm)?.char_poly())
}

/// `(x - 1)(x^2 + (t - 1 + t^-1)^3 x + 1)` with `t = s^4`.
pub fn commutator_expected() -> Poly<Laurent> {
    let z = Laurent::zero();
    let u: Laurent = "s^4 - 1 + s^-4".parse().expect("valid literal");
    let u3 = u.clone() * u.clone() * u;
    let quad = Poly::new(vec![Laurent::one(), u3, Laurent::one()], z.clone());
    Poly::linear_root(Laurent::one()).mul(&quad)
}

/// Splits off every factor `x - 1` of a monic polynomial; returns the
/// multiplicity and the cofactor.
pub fn strip_unit_root<F: Scalar>(p: &Poly<F>) -> (usize, Poly<F>) {
    let one = p.proto().one_like();
    let lin = Poly::linear_root(one);
    let mut q = p.clone();
    let mut k = 0;
    while q.degree().unwrap_or(0) > 0 {
        match q.div_exact_monic(&lin) {
            Some(r) => {
                q = r;
                k += 1;
            }
            None => break,
        }
    }
    (k, q)
}

/// Prints a polynomial with its `(x - 1)` factors pulled out and
/// coefficients shown in `t` when they only involve whole powers of `t`.
pub fn format_factored(p: &Poly<Laurent>) -> String {
    let (k, q) = strip_unit_root(p);
    let coef = |c: &Laurent| match c.as_t_laurent() {
        Some(t) => t.to_string().replace('s', "t"),
        None => c.to_string(),
    };
    let mut terms = Vec::new();
    for (i, c) in q.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => "x".into(),
            _ => format!("x^{i}"),
        };
        let cs = coef(c);
        terms.push(if i == 0 {
            format!("({cs})")
        } else if c.is_one() {
            mono
        } else {
            format!("({cs})*{mono}")
        });
    }
    let body = if terms.is_empty() {
        "1".to_string()
    } else {
        terms.join(" + ")
    };
    let mut parts = Vec::new();
    match k {
        0 => {}
        1 => parts.push("(x - 1)".to_string()),
        _ => parts.push(format!("(x - 1)^{k}")),
    }
    if q.degree().unwrap_or(0) > 0 || k == 0 {
        parts.push(format!("({body})"));
    }
    parts.join(" * ")
}

/// `t^k + t^-k` as a polynomial in `u = t + t^-1`, evaluated in a field.
fn chebyshev_values<F: Scalar>(u: &F, kmax: usize) -> Vec<F> {
    let two = u.from_int_like(2);
    let mut v = vec![two, u.clone()];
    while v.len() <= kmax {
        let k = v.len();
        let next = u.clone() * v[k - 1].clone() - v[k - 2].clone();
        v.push(next);
    }
    v
}

/// Rewrites a Laurent polynomial in `s` that is a symmetric Laurent
/// polynomial in `t` as a value at `t + t^-1 = u`.
pub fn specialize_symmetric<F: Scalar>(x: &Laurent, u: &F) -> Result<F> {
    let t = x
        .as_t_laurent()
        .ok_or_else(|| Error::Unsupported(format!("{x} involves fractional powers of t")))?;
    if t.is_zero() {
        return Ok(u.zero_like());
    }
    let kmax = t.high().max(-t.low()) as usize;
    for k in 1..=kmax as i64 {
        if t.coeff(k) != t.coeff(-k) {
            return Err(Error::Unsupported(format!(
                "{x} is not symmetric under t -> 1/t"
            )));
        }
    }
    let p = chebyshev_values(u, kmax);
    let mut acc = u.from_rational_like(&t.coeff(0));
    for (k, pk) in p.iter().enumerate().take(kmax + 1).skip(1) {
        acc = acc + pk.clone() * u.from_rational_like(&t.coeff(k as i64));
    }
    Ok(acc)
}

pub fn specialize_poly(p: &Poly<Laurent>, u: &Cyclo) -> Result<Poly<Cyclo>> {
    let coeffs = p
        .coeffs()
        .iter()
        .map(|c| specialize_symmetric(c, u))
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::new(coeffs, u.zero_like()))
}

/// Char poly over a field, for matrices already specialized.
pub fn char_poly<F: Field>(m: &Matrix<F>) -> Poly<F> {
    m.char_poly()
}
