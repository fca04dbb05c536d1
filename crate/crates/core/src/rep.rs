//! Braid group representations on skein spaces: generator matrices, the
//! invariant pairing, reduction by its kernel at roots of unity, dimension
//! bookkeeping, full-twist eigenspaces and the two-clasp change of basis.

use std::collections::HashMap;

use serde_json::{json, Value};

use crate::arith::{quantum_integer, Domain, Field, Laurent, ParameterSpec, Scalar};
use crate::linalg::Matrix;
use crate::projector::{ProjectorTable, TlElement};
use crate::skein::{trace_strands, Handedness, Normalization, PlanarMatching, SkeinSpace};
use crate::{Error, Result};

/// Memoized `d(n, c, r)`; `r = None` means `t` is not a root of unity.
#[derive(Debug, Default)]
pub struct DimensionTable {
    memo: HashMap<(u64, u64, Option<u64>), u64>,
}

impl DimensionTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, n: u64, c: u64, r: Option<u64>) -> Result<u64> {
        if let Some(r) = r {
            if c + 2 > r {
                return Err(Error::Inadmissible { c, r });
            }
        }
        Ok(self.raw(n, c, r))
    }

    fn raw(&mut self, n: u64, c: u64, r: Option<u64>) -> u64 {
        if n == 0 {
            return u64::from(c == 0);
        }
        if let Some(&v) = self.memo.get(&(n, c, r)) {
            return v;
        }
        let max_c = r.map_or(u64::MAX, |r| r - 2);
        let mut v = 0;
        if c >= 1 {
            v += self.raw(n - 1, c - 1, r);
        }
        if c < max_c {
            v += self.raw(n - 1, c + 1, r);
        }
        self.memo.insert((n, c, r), v);
        v
    }

    /// `e(n, c, r) = d(n, c, r) - d(n, r-2-c, r)`
    pub fn excess(&mut self, n: u64, c: u64, r: u64) -> Result<i64> {
        let a = self.get(n, c, Some(r))? as i64;
        let b = self.get(n, r - 2 - c, Some(r))? as i64;
        Ok(a - b)
    }
}

/// `d(n, c, r)` from the truncated Bratteli recurrence.
pub fn dimension(n: u64, c: u64, r: Option<u64>) -> Result<u64> {
    DimensionTable::new().get(n, c, r)
}

/// `<A, B>`: glue the left sides of `a` and `b`, join their clasps through
/// the projector and evaluate the resulting loops.
pub fn pairing_value<F: Scalar>(
    a: &PlanarMatching,
    b: &PlanarMatching,
    jw: &TlElement<F>,
    delta: &F,
) -> F {
    let (n, c) = (a.n(), a.c());
    let big = n + c;
    let mut base = Vec::with_capacity(2 * big);
    for (x, y) in a.arcs() {
        base.push((x, y));
    }
    for (x, y) in b.arcs() {
        base.push((big + x, big + y));
    }
    for i in 0..n {
        base.push((i, big + i));
    }
    let map = |p: usize| {
        if p < c {
            n + p
        } else {
            big + n + (2 * c - 1 - p)
        }
    };
    let mut total = delta.zero_like();
    for (d, coef) in jw.terms() {
        let mut edges = base.clone();
        for (i, &j) in d.iter().enumerate() {
            if i < j {
                edges.push((map(i), map(j)));
            }
        }
        let (_, loops) = trace_strands(2 * big, &edges);
        total = total + coef.clone() * delta.pow(loops as u64);
    }
    total
}

/// Gram matrix of the pairing on a list of matchings.
pub fn gram_matrix<D: Domain>(
    basis: &[PlanarMatching],
    c: usize,
    table: &mut ProjectorTable<'_, D>,
) -> Result<Matrix<D::F>>
where
    D::F: Field,
{
    let jw = table.get(c)?.clone();
    let delta = table.delta().clone();
    let k = basis.len();
    let mut g = Matrix::zeros(k, k, &delta);
    for i in 0..k {
        for j in i..k {
            let v = pairing_value(&basis[i], &basis[j], &jw, &delta);
            g.set(i, j, v.clone());
            g.set(j, i, v);
        }
    }
    Ok(g)
}

type Reducer<F> = Box<dyn Fn(&Matrix<F>) -> Matrix<F>>;

/// A built braid representation on `X(n, c)`.
#[derive(Clone, Debug)]
pub struct Representation<D: Domain>
where
    D::F: Field,
{
    pub n: usize,
    pub c: usize,
    pub spec: ParameterSpec,
    pub normalization: Normalization,
    pub domain: D,
    /// Matchings whose classes form the basis of the (reduced) space.
    pub basis: Vec<PlanarMatching>,
    /// The full matching basis before reduction.
    pub full_basis: Vec<PlanarMatching>,
    /// Maps full coordinates to reduced coordinates.
    pub quotient: Matrix<D::F>,
    pub generators: Vec<Matrix<D::F>>,
    pub generators_inv: Vec<Matrix<D::F>>,
    /// Generator matrices with `s` replaced by `s^-1`.
    pub generators_bar: Vec<Matrix<D::F>>,
    pub gram: Matrix<D::F>,
    /// Rank of the Gram matrix on the full space.
    pub full_gram_rank: usize,
}

impl<D: Domain + Clone> Representation<D>
where
    D::F: Field,
{
    pub fn build(n: usize, c: usize, domain: &D, norm: Normalization) -> Result<Self> {
        let spec = domain.spec();
        if !(n + c).is_multiple_of(2) {
            return Err(Error::Parity {
                n: n as u64,
                c: c as u64,
            });
        }
        if let Some(r) = spec.root_order() {
            if c as u64 + 2 > r {
                return Err(Error::Inadmissible { c: c as u64, r });
            }
        }
        let space = SkeinSpace::new(n, c)?;
        let dim = space.dim();
        let lgens: Vec<Matrix<Laurent>> = (1..n)
            .map(|i| space.crossing_matrix(i, Handedness::Right, norm))
            .collect::<Result<_>>()?;
        let lbars: Vec<Matrix<Laurent>> = lgens
            .iter()
            .map(|m| m.map(&Laurent::zero(), |x| x.bar()))
            .collect();

        let mut table = ProjectorTable::new(domain);
        let mut gram = gram_matrix(space.basis(), c, &mut table)?;
        if norm == Normalization::Rescaled {
            let d: Vec<D::F> = space.rescaling().iter().map(|x| domain.embed(x)).collect();
            let db: Vec<D::F> = space
                .rescaling()
                .iter()
                .map(|x| domain.embed(&x.bar()))
                .collect();
            gram = Matrix::from_fn(dim, dim, &domain.zero(), |i, j| {
                db[i].clone() * gram.get(i, j).clone() * d[j].clone()
            });
        }
        let embed = |m: &Matrix<Laurent>| m.map(&domain.zero(), |x| domain.embed(x));
        let gens: Vec<_> = lgens.iter().map(embed).collect();
        let bars: Vec<_> = lbars.iter().map(embed).collect();

        let pivots = gram.rref().pivots;
        let full_gram_rank = pivots.len();
        let all: Vec<usize> = (0..dim).collect();
        let (quotient, reduce): (Matrix<D::F>, Reducer<D::F>) = if full_gram_rank == dim {
            (
                Matrix::identity(dim, &domain.zero()),
                Box::new(|m: &Matrix<D::F>| m.clone()),
            )
        } else {
            let sub = gram.submatrix(&pivots, &pivots);
            let inv = sub.inverse().ok_or_else(|| {
                Error::NotInvertible("principal Gram block on the pivot set".into())
            })?;
            let q = inv.mul(&gram.submatrix(&pivots, &all));
            let (q2, piv) = (q.clone(), pivots.clone());
            let all2 = all.clone();
            (
                q,
                Box::new(move |m: &Matrix<D::F>| q2.mul(&m.submatrix(&all2, &piv))),
            )
        };
        let generators: Vec<_> = gens.iter().map(&reduce).collect();
        let generators_bar: Vec<_> = bars.iter().map(reduce).collect();
        let reduced_gram = gram.submatrix(&pivots, &pivots);
        let basis = pivots.iter().map(|&i| space.basis()[i].clone()).collect();
        Ok(Representation {
            n,
            c,
            spec,
            normalization: norm,
            domain: domain.clone(),
            basis,
            full_basis: space.basis().to_vec(),
            quotient,
            generators_inv: generators_bar.clone(),
            generators,
            generators_bar,
            gram: reduced_gram,
            full_gram_rank,
        })
    }
}

impl<D: Domain> Representation<D>
where
    D::F: Field,
{
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn zero(&self) -> D::F {
        self.domain.zero()
    }

    pub fn identity(&self) -> Matrix<D::F> {
        Matrix::identity(self.dim(), &self.zero())
    }

    /// Matrix of `tau_i` (`i > 0`) or its inverse (`i < 0`).
    pub fn generator(&self, g: i64) -> Result<&Matrix<D::F>> {
        let i = g.unsigned_abs() as usize;
        if g == 0 || i >= self.n {
            return Err(Error::IndexOutOfRange {
                index: g,
                max: self.n.saturating_sub(1) as u64,
            });
        }
        Ok(if g > 0 {
            &self.generators[i - 1]
        } else {
            &self.generators_inv[i - 1]
        })
    }

    /// Product of generator matrices in the order written.
    pub fn word_matrix(&self, word: &[i64]) -> Result<Matrix<D::F>> {
        let mut m = self.identity();
        for &g in word {
            m = m.mul(self.generator(g)?);
        }
        Ok(m)
    }

    /// `M_i(s^-1)^T G M_i(s) = G` for every generator.
    pub fn invariance_check(&self) -> bool {
        form_is_invariant(&self.generators, &self.generators_bar, &self.gram)
    }

    /// The full twist `(tau_{o+1} ... tau_{o+k-1})^k` on `k` consecutive strands
    /// starting after `offset`.
    pub fn full_twist(&self, k: usize, offset: usize) -> Result<Matrix<D::F>> {
        if k == 0 || offset + k > self.n {
            return Err(Error::IndexOutOfRange {
                index: (offset + k) as i64,
                max: self.n as u64,
            });
        }
        let row: Vec<i64> = (offset + 1..offset + k).map(|i| i as i64).collect();
        let word: Vec<i64> = (0..k).flat_map(|_| row.iter().copied()).collect();
        self.word_matrix(&word)
    }

    /// The exact full-twist scalar on `k` strands fused to color `a`:
    /// `s^{a(a+2) - 3k}` (times `s^{k(k-1)}` when crossings are rescaled).
    pub fn twist_eigenvalue(&self, k: usize, a: usize) -> D::F {
        let mut e = (a * (a + 2)) as i64 - 3 * k as i64;
        if self.normalization == Normalization::Rescaled {
            e += (k * (k - 1)) as i64;
        }
        self.domain.s_pow(e)
    }

    /// Splits the space into eigenspaces of the full twist on `k` strands,
    /// testing each color the strands can fuse to.
    pub fn full_twist_split(&self, k: usize, offset: usize) -> Result<Vec<TwistBlock<D::F>>> {
        let t = self.full_twist(k, offset)?;
        let id = self.identity();
        let max_a = match self.spec.root_order() {
            Some(r) => (r as usize).saturating_sub(2).min(k),
            None => k,
        };
        let mut blocks = Vec::new();
        let mut total = 0;
        let colors: Vec<usize> = (k % 2..=max_a).step_by(2).collect();
        for &a in colors.iter().rev() {
            let lambda = self.twist_eigenvalue(k, a);
            let kernel = t.sub(&id.scale(&lambda)).kernel();
            if !kernel.is_empty() {
                total += kernel.len();
                blocks.push(TwistBlock {
                    color: a,
                    eigenvalue: lambda,
                    basis: kernel,
                });
            }
        }
        if total != self.dim() {
            return Err(Error::Numeric(format!(
                "twist eigenspaces span {total} of {} dimensions",
                self.dim()
            )));
        }
        Ok(blocks)
    }

    /// JSON export: basis, generator matrices and Gram matrix as strings.
    pub fn to_json(&self) -> Value {
        let mat = |m: &Matrix<D::F>| -> Value {
            Value::Array(
                m.to_rows()
                    .iter()
                    .map(|r| Value::Array(r.iter().map(|x| Value::String(x.to_string())).collect()))
                    .collect(),
            )
        };
        json!({
            "n": self.n,
            "c": self.c,
            "parameter": self.spec.to_string(),
            "normalization": format!("{:?}", self.normalization),
            "dimension": self.dim(),
            "basis": self.basis.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
            "generators": self.generators.iter().map(mat).collect::<Vec<_>>(),
            "gram": mat(&self.gram),
        })
    }
}

pub fn form_is_invariant<F: Scalar>(
    gens: &[Matrix<F>],
    bars: &[Matrix<F>],
    gram: &Matrix<F>,
) -> bool {
    gens.iter()
        .zip(bars)
        .all(|(m, mb)| mb.transpose().mul(gram).mul(m) == *gram)
}

/// An eigenspace of a full twist.
#[derive(Clone, Debug)]
pub struct TwistBlock<F: Scalar> {
    pub color: usize,
    pub eigenvalue: F,
    /// Column vectors spanning the eigenspace.
    pub basis: Vec<Vec<F>>,
}

/// Reverses the left points and the clasp: conjugates `tau_i` to `tau_{n-i}`.
pub fn flip_matrix(space: &SkeinSpace) -> Matrix<Laurent> {
    let order: Vec<PlanarMatching> = space.basis().iter().map(|m| m.flip()).collect();
    space.permutation_matrix(&order)
}

/// The four skeins of the two-clasp space and their change of basis.
#[derive(Clone, Debug)]
pub struct CobData<F: Scalar> {
    /// Coordinates of `v1, v2, w1, w2` in the matching basis `(m_A, m_B)`.
    pub v1: [F; 2],
    pub v2: [F; 2],
    pub w1: [F; 2],
    pub w2: [F; 2],
    /// Rows `v1, v2` expressed in the basis `(w1, w2)`.
    pub matrix: Matrix<F>,
}

/// Points of the two-clasp space, counterclockwise from the left strand.
struct CobPoints {
    c: usize,
}

impl CobPoints {
    // cyclic order: T1..Tc, R, Bc..B1, L
    fn t(&self, j: usize) -> usize {
        j - 1
    }
    fn r(&self) -> usize {
        self.c
    }
    fn b(&self, j: usize) -> usize {
        2 * self.c + 1 - j
    }
    fn l(&self) -> usize {
        2 * self.c + 1
    }
    fn len(&self) -> usize {
        2 * self.c + 2
    }
    fn same_clasp(&self, x: usize, y: usize) -> bool {
        let top = |p: usize| p < self.c;
        let bottom = |p: usize| p > self.c && p <= 2 * self.c;
        (top(x) && top(y)) || (bottom(x) && bottom(y))
    }
}

/// Expands a projector of color `ins.len()` joining `ins` to `outs`, with
/// extra local arcs, into coordinates on `(m_A, m_B)`.
fn expand_channel<D: Domain>(
    pts: &CobPoints,
    ins: &[usize],
    outs: &[usize],
    local: &[(usize, usize)],
    basis: &[Vec<usize>; 2],
    table: &mut ProjectorTable<'_, D>,
) -> Result<[D::F; 2]>
where
    D::F: Field,
{
    let k = ins.len();
    let jw = table.get(k)?.clone();
    let zero = table.delta().zero_like();
    let mut out = [zero.clone(), zero];
    let place = |p: usize| if p < k { ins[p] } else { outs[2 * k - 1 - p] };
    for (d, coef) in jw.terms() {
        let mut pairing = vec![usize::MAX; pts.len()];
        for (i, &j) in d.iter().enumerate() {
            pairing[place(i)] = place(j);
        }
        for &(x, y) in local {
            pairing[x] = y;
            pairing[y] = x;
        }
        if (0..pts.len()).any(|x| pts.same_clasp(x, pairing[x])) {
            continue;
        }
        let idx = basis
            .iter()
            .position(|b| *b == pairing)
            .ok_or_else(|| Error::Malformed("expansion left the two-dimensional space".into()))?;
        out[idx] = out[idx].clone() + coef.clone();
    }
    Ok(out)
}

/// Builds `v1, v2, w1, w2` for clasps of color `c` and solves for the
/// coefficients of `v1, v2` in terms of `w1, w2`.
pub fn cob_data<D: Domain>(c: usize, domain: &D) -> Result<CobData<D::F>>
where
    D::F: Field,
{
    if c == 0 {
        return Err(Error::InvalidParameter(
            "clasp color must be at least 1".into(),
        ));
    }
    if let Some(r) = domain.root_order() {
        if c as u64 + 3 > r {
            return Err(Error::Inadmissible { c: c as u64 + 1, r });
        }
    }
    let p = CobPoints { c };
    let mut m_a = vec![0; p.len()];
    let mut m_b = vec![0; p.len()];
    let join = |m: &mut Vec<usize>, x: usize, y: usize| {
        m[x] = y;
        m[y] = x;
    };
    join(&mut m_a, p.l(), p.t(1));
    join(&mut m_a, p.r(), p.b(c));
    for j in 2..=c {
        join(&mut m_a, p.t(j), p.b(j - 1));
    }
    join(&mut m_b, p.l(), p.b(1));
    join(&mut m_b, p.r(), p.t(c));
    for j in 1..c {
        join(&mut m_b, p.t(j), p.b(j + 1));
    }
    let basis = [m_a, m_b];
    let mut table = ProjectorTable::new(domain);

    let tops = |r: std::ops::RangeInclusive<usize>| r.map(|j| p.t(j)).collect::<Vec<_>>();
    let bots = |r: std::ops::RangeInclusive<usize>| r.map(|j| p.b(j)).collect::<Vec<_>>();

    let mut ins = vec![p.l()];
    ins.extend(bots(1..=c));
    let mut outs = tops(1..=c);
    outs.push(p.r());
    let v1 = expand_channel(&p, &ins, &outs, &[], &basis, &mut table)?;

    let v2 = expand_channel(
        &p,
        &bots(2..=c),
        &tops(1..=c - 1),
        &[(p.l(), p.b(1)), (p.t(c), p.r())],
        &basis,
        &mut table,
    )?;

    let w1 = expand_channel(
        &p,
        &tops(2..=c),
        &bots(1..=c - 1),
        &[(p.l(), p.t(1)), (p.b(c), p.r())],
        &basis,
        &mut table,
    )?;

    let mut ins = vec![p.l()];
    ins.extend(tops(1..=c));
    let mut outs = bots(1..=c);
    outs.push(p.r());
    let w2 = expand_channel(&p, &ins, &outs, &[], &basis, &mut table)?;

    let zero = domain.zero();
    let w = Matrix::from_rows(
        vec![
            vec![w1[0].clone(), w2[0].clone()],
            vec![w1[1].clone(), w2[1].clone()],
        ],
        &zero,
    );
    let v = Matrix::from_rows(
        vec![
            vec![v1[0].clone(), v2[0].clone()],
            vec![v1[1].clone(), v2[1].clone()],
        ],
        &zero,
    );
    let x = w
        .solve(&v)
        .ok_or_else(|| Error::NotInvertible("w1 and w2 are dependent".into()))?;
    Ok(CobData {
        v1,
        v2,
        w1,
        w2,
        matrix: x.transpose(),
    })
}

/// The predicted coefficients: `v1 = [c][c+2]/[c+1]^2 w1 + 1/[c+1] w2` and
/// `v2 = -1/[c+1] w1 + w2`.
pub fn cob_expected<D: Domain>(c: usize, domain: &D) -> Result<Matrix<D::F>>
where
    D::F: Field,
{
    let q = |k: usize| domain.embed(&quantum_integer(k as i64));
    let inv = q(c + 1).try_inv().ok_or_else(|| Error::Inadmissible {
        c: c as u64 + 1,
        r: domain.root_order().unwrap_or(0),
    })?;
    let a = q(c) * q(c + 2) * inv.clone() * inv.clone();
    let one = domain.one();
    Ok(Matrix::from_rows(
        vec![vec![a, inv.clone()], vec![-inv, one]],
        &domain.zero(),
    ))
}

/// Whether both linear identities among `v1, v2, w1, w2` hold exactly.
pub fn cob_identity_check<D: Domain>(c: usize, domain: &D) -> Result<bool>
where
    D::F: Field,
{
    Ok(cob_data(c, domain)?.matrix == cob_expected(c, domain)?)
}
