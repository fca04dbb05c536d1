//! Temperley–Lieb diagrams on `c` strands and Jones–Wenzl projectors.
//!
//! A diagram is a noncrossing matching of `2c` points in the cyclic order
//! `in_0, ..., in_{c-1}, out_{c-1}, ..., out_0`, so `in_j = j` and
//! `out_j = 2c - 1 - j`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::arith::{quantum_integer, Domain, Field, QPoly, RatFunc, Scalar};
use crate::skein::{trace_strands, PlanarMatching, SkeinVector};
use crate::{Error, Result};

pub type Diagram = Vec<usize>;

pub fn identity_diagram(c: usize) -> Diagram {
    (0..2 * c).map(|j| 2 * c - 1 - j).collect()
}

/// `e_i` on `c` strands, joining strands `i-1` and `i` on both sides.
pub fn cap_cup_diagram(c: usize, i: usize) -> Diagram {
    let mut d = identity_diagram(c);
    let (a, b) = (i - 1, i);
    let (oa, ob) = (2 * c - 1 - a, 2 * c - 1 - b);
    d[a] = b;
    d[b] = a;
    d[oa] = ob;
    d[ob] = oa;
    d
}

/// Stack `a` then `b` (outputs of `a` fed into inputs of `b`); returns the
/// resulting diagram and the number of closed loops.
pub fn compose_diagrams(c: usize, a: &Diagram, b: &Diagram) -> (Diagram, usize) {
    let w = 2 * c;
    let mut edges = Vec::with_capacity(3 * c);
    for i in 0..w {
        if i < a[i] {
            edges.push((i, a[i]));
        }
        if i < b[i] {
            edges.push((w + i, w + b[i]));
        }
    }
    for j in 0..c {
        edges.push((w - 1 - j, w + j));
    }
    let (pairs, loops) = trace_strands(2 * w, &edges);
    let relabel = |v: usize| if v < c { v } else { v - w };
    let mut out = vec![0; w];
    for (x, y) in pairs {
        let (x, y) = (relabel(x), relabel(y));
        out[x] = y;
        out[y] = x;
    }
    (out, loops)
}

/// A linear combination of diagrams on `c` strands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TlElement<F: Scalar> {
    c: usize,
    terms: BTreeMap<Diagram, F>,
}

impl<F: Scalar> TlElement<F> {
    pub fn zero(c: usize) -> Self {
        TlElement {
            c,
            terms: BTreeMap::new(),
        }
    }

    pub fn diagram(c: usize, d: Diagram, coeff: F) -> Self {
        let mut e = Self::zero(c);
        e.add_term(d, coeff);
        e
    }

    pub fn strands(&self) -> usize {
        self.c
    }

    pub fn terms(&self) -> &BTreeMap<Diagram, F> {
        &self.terms
    }

    pub fn coeff(&self, d: &Diagram) -> Option<&F> {
        self.terms.get(d)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, d: Diagram, coeff: F) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&d) {
            Some(v) => {
                *v = v.clone() + coeff;
                if v.is_zero() {
                    self.terms.remove(&d);
                }
            }
            None => {
                self.terms.insert(d, coeff);
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (d, v) in &o.terms {
            out.add_term(d.clone(), v.clone());
        }
        out
    }

    pub fn scale(&self, k: &F) -> Self {
        let mut out = Self::zero(self.c);
        for (d, v) in &self.terms {
            out.add_term(d.clone(), v.clone() * k.clone());
        }
        out
    }

    /// `self` stacked on top of `o`; `delta` is the loop value.
    pub fn mul(&self, o: &Self, delta: &F) -> Self {
        assert_eq!(self.c, o.c);
        let mut out = Self::zero(self.c);
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let (d, loops) = compose_diagrams(self.c, a, b);
                out.add_term(d, x.clone() * y.clone() * delta.pow(loops as u64));
            }
        }
        out
    }

    /// `self` with one extra straight strand appended at the end.
    pub fn with_extra_strand(&self) -> Self {
        let c = self.c;
        let old_w = 2 * c;
        let lift = |p: usize| if p < c { p } else { p + 2 };
        let mut out = TlElement::zero(c + 1);
        for (d, v) in &self.terms {
            let mut e = vec![0; old_w + 2];
            for (i, &j) in d.iter().enumerate() {
                e[lift(i)] = lift(j);
            }
            e[c] = c + 1;
            e[c + 1] = c;
            out.add_term(e, v.clone());
        }
        out
    }
}

/// The Jones–Wenzl projector of a given color.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectorExpansion<F: Scalar> {
    pub color: usize,
    pub element: TlElement<F>,
}

/// Builds projectors `JW_0, ..., JW_c` by the recursion
/// `JW_k = JW_{k-1} + ([k-1]/[k]) JW_{k-1} e_{k-1} JW_{k-1}` (with `JW_{k-1}`
/// extended by a strand), caching every color computed.
pub struct ProjectorTable<'a, D: Domain>
where
    D::F: Field,
{
    domain: &'a D,
    delta: D::F,
    table: Vec<TlElement<D::F>>,
}

impl<'a, D: Domain> ProjectorTable<'a, D>
where
    D::F: Field,
{
    pub fn new(domain: &'a D) -> Self {
        let one = domain.one();
        ProjectorTable {
            domain,
            delta: domain.delta(),
            table: vec![TlElement::diagram(0, Vec::new(), one)],
        }
    }

    pub fn get(&mut self, c: usize) -> Result<&TlElement<D::F>> {
        while self.table.len() <= c {
            let k = self.table.len();
            let qk = self.domain.embed(&quantum_integer(k as i64));
            let Some(inv) = qk.try_inv() else {
                return Err(Error::Inadmissible {
                    c: k as u64,
                    r: self.domain.root_order().unwrap_or(0),
                });
            };
            let prev = self.table[k - 1].with_extra_strand();
            let next = if k == 1 {
                prev
            } else {
                let coef = self.domain.embed(&quantum_integer(k as i64 - 1)) * inv;
                let e = TlElement::diagram(k, cap_cup_diagram(k, k - 1), self.domain.one());
                let corr = prev
                    .mul(&e, &self.delta)
                    .mul(&prev, &self.delta)
                    .scale(&coef);
                prev.add(&corr)
            };
            self.table.push(next);
        }
        Ok(&self.table[c])
    }

    pub fn delta(&self) -> &D::F {
        &self.delta
    }
}

pub fn jones_wenzl<D: Domain>(c: usize, domain: &D) -> Result<ProjectorExpansion<D::F>>
where
    D::F: Field,
{
    let mut t = ProjectorTable::new(domain);
    let element = t.get(c)?.clone();
    Ok(ProjectorExpansion { color: c, element })
}

/// Composes the clasp side of every matching in `v` with `JW_c`. Terms that
/// acquire an arc between two clasp points vanish.
pub fn clasp_compose<D: Domain>(
    v: &BTreeMap<PlanarMatching, D::F>,
    n: usize,
    c: usize,
    table: &mut ProjectorTable<'_, D>,
) -> Result<BTreeMap<PlanarMatching, D::F>>
where
    D::F: Field,
{
    let jw = table.get(c)?.clone();
    let len = n + c;
    let mut out: BTreeMap<PlanarMatching, D::F> = BTreeMap::new();
    for (m, x) in v {
        for (d, y) in jw.terms() {
            // vertices: matching points 0..len, projector points len..len+2c
            let mut edges = Vec::new();
            for (a, b) in m.arcs() {
                edges.push((a, b));
            }
            for (i, &j) in d.iter().enumerate() {
                if i < j {
                    edges.push((len + i, len + j));
                }
            }
            for j in 0..c {
                edges.push((n + j, len + j));
            }
            let (pairs, loops) = trace_strands(len + 2 * c, &edges);
            let relabel = |p: usize| {
                if p < n {
                    p
                } else {
                    n + (2 * c - 1 - (p - len))
                }
            };
            let mut pairing = vec![0; len];
            let mut turnback = false;
            for (a, b) in pairs {
                let (a, b) = (relabel(a), relabel(b));
                if a >= n && b >= n {
                    turnback = true;
                }
                pairing[a] = b;
                pairing[b] = a;
            }
            if turnback {
                continue;
            }
            let coef = x.clone() * y.clone() * table.delta().pow(loops as u64);
            let key = PlanarMatching::new(n, c, pairing)?;
            let e = out.entry(key).or_insert_with(|| coef.zero_like());
            *e = e.clone() + coef;
        }
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

/// Laurent-coefficient skein vectors embedded into a domain.
pub fn embed_vector<D: Domain>(v: &SkeinVector, d: &D) -> BTreeMap<PlanarMatching, D::F> {
    v.terms()
        .iter()
        .map(|(m, x)| (m.clone(), d.embed(x)))
        .collect()
}

/// Polynomial in `s` with machine-integer coefficients; `None` marks overflow.
type ZPoly = Vec<i128>;

fn zpoly_mul(a: &[i128], b: &[i128]) -> Option<ZPoly> {
    if a.is_empty() || b.is_empty() {
        return Some(Vec::new());
    }
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].checked_add(x.checked_mul(*y)?)?;
        }
    }
    Some(out)
}

fn zpoly_add_shifted(acc: &mut ZPoly, b: &[i128], shift: usize) -> Option<()> {
    if acc.len() < b.len() + shift {
        acc.resize(b.len() + shift, 0);
    }
    for (j, y) in b.iter().enumerate() {
        acc[j + shift] = acc[j + shift].checked_add(*y)?;
    }
    Some(())
}

fn ztrim(mut p: ZPoly) -> ZPoly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

/// Exact test of `p * p == p` over `Q(s)`, carried out over a common
/// denominator with integer arithmetic. `None` if an intermediate value
/// overflows.
pub fn is_idempotent_generic(p: &TlElement<RatFunc>) -> Option<bool> {
    let c = p.strands();
    let mut den = QPoly::one();
    for v in p.terms().values() {
        let g = QPoly::gcd(&den, v.denom());
        den = den.mul(&v.denom().div_rem(&g).0);
    }
    let nums: Vec<(&Diagram, QPoly)> = p
        .terms()
        .iter()
        .map(|(d, v)| (d, v.numer().mul(&den.div_rem(v.denom()).0)))
        .collect();
    let mut scale = BigInt::from(1);
    for q in nums.iter().map(|(_, n)| n).chain([&den]) {
        for x in q.coeffs() {
            scale = scale.lcm(x.denom());
        }
    }
    let to_z = |q: &QPoly| -> Option<ZPoly> {
        q.coeffs()
            .iter()
            .map(|x| i128::try_from(x.numer() * (&scale / x.denom())).ok())
            .collect()
    };
    let den = to_z(&den)?;
    let nums: Vec<(&Diagram, ZPoly)> = nums
        .iter()
        .map(|(d, n)| Some((*d, to_z(n)?)))
        .collect::<Option<_>>()?;
    // s^2 * delta = -1 - s^4; every term is multiplied through by s^(2c)
    let mut delta_pows: Vec<ZPoly> = vec![vec![1]];
    for _ in 0..c {
        delta_pows.push(zpoly_mul(delta_pows.last()?, &[-1, 0, 0, 0, -1])?);
    }
    let mut grouped: BTreeMap<(Diagram, usize), ZPoly> = BTreeMap::new();
    for (a, x) in &nums {
        for (b, y) in &nums {
            let (d, loops) = compose_diagrams(c, a, b);
            zpoly_add_shifted(grouped.entry((d, loops)).or_default(), &zpoly_mul(x, y)?, 0)?;
        }
    }
    let mut lhs: BTreeMap<Diagram, ZPoly> = BTreeMap::new();
    for ((d, loops), v) in grouped {
        let term = zpoly_mul(&v, delta_pows.get(loops)?)?;
        zpoly_add_shifted(lhs.entry(d).or_default(), &term, 2 * (c - loops))?;
    }
    let mut rhs: BTreeMap<Diagram, ZPoly> = BTreeMap::new();
    for (d, x) in &nums {
        let mut v = Vec::new();
        zpoly_add_shifted(&mut v, &zpoly_mul(&den, x)?, 2 * c)?;
        rhs.insert((*d).clone(), v);
    }
    let clean = |m: BTreeMap<Diagram, ZPoly>| -> BTreeMap<Diagram, ZPoly> {
        m.into_iter()
            .map(|(d, v)| (d, ztrim(v)))
            .filter(|(_, v)| !v.is_empty())
            .collect()
    };
    Some(clean(lhs) == clean(rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Cyclotomic, GenericField, RatFunc};
    use crate::skein::enumerate_basis;

    #[test]
    fn integer_idempotence_matches_direct_product() {
        let g = GenericField;
        let mut t = ProjectorTable::new(&g);
        let delta = t.delta().clone();
        for c in 1..=4 {
            let p = t.get(c).unwrap().clone();
            assert_eq!(p.mul(&p, &delta), p);
            assert_eq!(is_idempotent_generic(&p), Some(true));
            let twice = p.scale(&RatFunc::from_laurent(&crate::arith::Laurent::int(2)));
            assert_eq!(is_idempotent_generic(&twice), Some(false));
            if c > 1 {
                let mut bent = p.clone();
                bent.add_term(cap_cup_diagram(c, 1), RatFunc::one());
                assert_eq!(is_idempotent_generic(&bent), Some(false));
            }
        }
    }

    #[test]
    fn small_projectors() {
        let d = GenericField;
        let jw1 = jones_wenzl(1, &d).unwrap();
        assert_eq!(jw1.element.terms().len(), 1);
        let jw2 = jones_wenzl(2, &d).unwrap();
        let inv2 = d.embed(&quantum_integer(2)).inv();
        assert_eq!(
            jw2.element.coeff(&identity_diagram(2)),
            Some(&RatFunc::one())
        );
        assert_eq!(jw2.element.coeff(&cap_cup_diagram(2, 1)), Some(&inv2));
    }

    #[test]
    fn idempotent_and_annihilated() {
        let d = GenericField;
        let mut t = ProjectorTable::new(&d);
        let delta = t.delta().clone();
        for c in 1..=4 {
            let p = t.get(c).unwrap().clone();
            assert_eq!(p.mul(&p, &delta), p, "c={c}");
            for i in 1..c {
                let e = TlElement::diagram(c, cap_cup_diagram(c, i), RatFunc::one());
                assert!(e.mul(&p, &delta).is_zero());
                assert!(p.mul(&e, &delta).is_zero());
            }
        }
    }

    #[test]
    fn inadmissible_color() {
        let d = Cyclotomic::principal(5).unwrap();
        assert!(jones_wenzl(4, &d).is_ok());
        assert!(matches!(
            jones_wenzl(5, &d),
            Err(Error::Inadmissible { c: 5, r: 5 })
        ));
    }

    #[test]
    fn clasp_compose_fixes_basis() {
        let d = GenericField;
        let mut t = ProjectorTable::new(&d);
        for (n, c) in [(3, 1), (4, 2), (5, 3)] {
            for m in enumerate_basis(n, c).unwrap() {
                let v: BTreeMap<_, _> = [(m.clone(), RatFunc::one())].into_iter().collect();
                assert_eq!(clasp_compose(&v, n, c, &mut t).unwrap(), v);
            }
        }
    }

    #[test]
    fn composition_counts_loops() {
        let e = cap_cup_diagram(3, 1);
        let (d, loops) = compose_diagrams(3, &e, &e);
        assert_eq!((d, loops), (e, 1));
        let id = identity_diagram(3);
        assert_eq!(
            compose_diagrams(3, &id, &cap_cup_diagram(3, 2)).0,
            cap_cup_diagram(3, 2)
        );
    }
}
