//! Planar matchings in a rectangle with `n` points on the left and a clasp of
//! `c` points on the right, and the Kauffman bracket rewriting rules on them.
//!
//! Boundary points are numbered cyclically: `0..n` run down the left side,
//! then `n..n+c` run up the clasp. A matching is stored as its partner vector.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{delta, Domain, Laurent, Scalar};
use crate::linalg::Matrix;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Handedness {
    Right,
    Left,
}

/// `Bracket` uses the crossing as drawn; `Rescaled` multiplies each crossing by
/// `t^{1/4}` and scales odd matchings by `t^{1/2}`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Normalization {
    #[default]
    Bracket,
    Rescaled,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanarMatching {
    n: usize,
    c: usize,
    pairing: Vec<usize>,
}

impl PlanarMatching {
    pub fn new(n: usize, c: usize, pairing: Vec<usize>) -> Result<Self> {
        let m = PlanarMatching { n, c, pairing };
        m.validate()?;
        Ok(m)
    }

    fn validate(&self) -> Result<()> {
        let len = self.n + self.c;
        if self.pairing.len() != len {
            return Err(Error::Malformed("pairing has the wrong length".into()));
        }
        for (i, &j) in self.pairing.iter().enumerate() {
            if j >= len || j == i || self.pairing[j] != i {
                return Err(Error::Malformed(
                    "pairing is not a fixed-point-free involution".into(),
                ));
            }
            if i >= self.n && j >= self.n {
                return Err(Error::Malformed("clasp points joined to each other".into()));
            }
            for (k, &l) in self.pairing.iter().enumerate() {
                let (a, b) = (i.min(j), i.max(j));
                let (x, y) = (k.min(l), k.max(l));
                if a < x && x < b && b < y {
                    return Err(Error::Malformed("pairing is not planar".into()));
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn pairing(&self) -> &[usize] {
        &self.pairing
    }

    pub fn partner(&self, i: usize) -> usize {
        self.pairing[i]
    }

    /// Pairs `(a, b)` with `a < b`, sorted.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.pairing.len())
            .filter(|&i| i < self.pairing[i])
            .map(|i| (i, self.pairing[i]))
            .collect()
    }

    /// Mirror top to bottom: left point `i` goes to `n-1-i`, clasp point
    /// `n+j` goes to `n+c-1-j`.
    pub fn flip(&self) -> PlanarMatching {
        let (n, c) = (self.n, self.c);
        let f = |p: usize| {
            if p < n {
                n - 1 - p
            } else {
                n + (c - 1 - (p - n))
            }
        };
        let mut pairing = vec![0; n + c];
        for (i, &j) in self.pairing.iter().enumerate() {
            pairing[f(i)] = f(j);
        }
        PlanarMatching { n, c, pairing }
    }

    /// Parity of the number of black regions when the complementary regions
    /// are colored alternately with the top region white.
    pub fn bicolor_parity(&self) -> Parity {
        let len = self.pairing.len();
        if len == 0 {
            return Parity::Even;
        }
        // segment k runs from point k to point k+1; segment len-1 is the top
        let mut parent: Vec<usize> = (0..len).collect();
        for k in 0..len {
            let other = self.pairing[(k + 1) % len];
            union(&mut parent, k, other);
        }
        let mut seen = vec![false; len];
        let mut black = 0;
        for k in 0..len {
            let r = find(&mut parent, k);
            if !seen[r] {
                seen[r] = true;
                if (len - 1 - k) % 2 == 1 {
                    black += 1;
                }
            }
        }
        if black % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for PlanarMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pairing.is_empty() {
            return write!(f, "()");
        }
        for (a, b) in self.arcs() {
            write!(f, "({} {})", a + 1, b + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for PlanarMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PlanarMatching({},{}){self}", self.n, self.c)
    }
}

pub(crate) fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

pub(crate) fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra] = rb;
    }
}

/// Follows strands through a graph of maximum degree two given by its edges.
/// Returns the pairs of degree-one endpoints joined by a strand and the
/// number of closed loops.
pub(crate) fn trace_strands(nv: usize, edges: &[(usize, usize)]) -> (Vec<(usize, usize)>, usize) {
    let mut adj: Vec<[usize; 2]> = vec![[usize::MAX; 2]; nv];
    let mut deg = vec![0usize; nv];
    for &(a, b) in edges {
        adj[a][deg[a]] = b;
        deg[a] += 1;
        adj[b][deg[b]] = a;
        deg[b] += 1;
    }
    let mut seen = vec![false; nv];
    let mut pairs = Vec::new();
    let walk = |start: usize, seen: &mut Vec<bool>| -> usize {
        let (mut prev, mut cur) = (usize::MAX, start);
        loop {
            seen[cur] = true;
            let next = if adj[cur][0] != prev || deg[cur] == 1 {
                adj[cur][0]
            } else {
                adj[cur][1]
            };
            if next == usize::MAX {
                return cur;
            }
            prev = cur;
            cur = next;
            if deg[cur] == 1 {
                seen[cur] = true;
                return cur;
            }
            if cur == start {
                return cur;
            }
        }
    };
    for v in 0..nv {
        if deg[v] == 1 && !seen[v] {
            let w = walk(v, &mut seen);
            pairs.push((v.min(w), v.max(w)));
        }
    }
    let mut loops = 0;
    for v in 0..nv {
        if deg[v] == 2 && !seen[v] {
            walk(v, &mut seen);
            loops += 1;
        }
    }
    (pairs, loops)
}

/// All noncrossing perfect matchings of `points` (in cyclic order).
fn noncrossing(points: &[usize]) -> Vec<Vec<(usize, usize)>> {
    if points.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    let first = points[0];
    for k in (1..points.len()).step_by(2) {
        let inner = noncrossing(&points[1..k]);
        let outer = noncrossing(&points[k + 1..]);
        for a in &inner {
            for b in &outer {
                let mut v = Vec::with_capacity(points.len() / 2);
                v.push((first, points[k]));
                v.extend_from_slice(a);
                v.extend_from_slice(b);
                out.push(v);
            }
        }
    }
    out
}

/// Basis of `W(n, c)`: noncrossing matchings with no clasp-to-clasp arc,
/// sorted lexicographically by partner vector.
pub fn enumerate_basis(n: usize, c: usize) -> Result<Vec<PlanarMatching>> {
    if !(n + c).is_multiple_of(2) {
        return Err(Error::Parity {
            n: n as u64,
            c: c as u64,
        });
    }
    let len = n + c;
    let pts: Vec<usize> = (0..len).collect();
    let mut out: Vec<PlanarMatching> = noncrossing(&pts)
        .into_iter()
        .filter(|arcs| arcs.iter().all(|&(a, b)| a < n || b < n))
        .map(|arcs| {
            let mut pairing = vec![0; len];
            for (a, b) in arcs {
                pairing[a] = b;
                pairing[b] = a;
            }
            PlanarMatching { n, c, pairing }
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Result of applying the cap-cup generator `e_i` to a matching.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CapCup {
    /// A closed loop was removed: the result is `delta` times the input.
    Loop,
    To(PlanarMatching),
    /// A turnback into the clasp was created.
    Zero,
}

/// `e_i` acting at left points `i-1, i` (1-based `i`).
pub fn apply_cap_cup(m: &PlanarMatching, i: usize) -> Result<CapCup> {
    if i == 0 || i >= m.n {
        return Err(Error::IndexOutOfRange {
            index: i as i64,
            max: m.n.saturating_sub(1) as u64,
        });
    }
    let (a, b) = (i - 1, i);
    let p = &m.pairing;
    if p[a] == b {
        return Ok(CapCup::Loop);
    }
    let (x, y) = (p[a], p[b]);
    if x >= m.n && y >= m.n {
        return Ok(CapCup::Zero);
    }
    let mut q = p.clone();
    q[a] = b;
    q[b] = a;
    q[x] = y;
    q[y] = x;
    Ok(CapCup::To(PlanarMatching {
        n: m.n,
        c: m.c,
        pairing: q,
    }))
}

/// A formal combination of matchings with Laurent coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeinVector {
    n: usize,
    c: usize,
    terms: BTreeMap<PlanarMatching, Laurent>,
}

impl SkeinVector {
    pub fn zero(n: usize, c: usize) -> Self {
        SkeinVector {
            n,
            c,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis_vector(m: &PlanarMatching) -> Self {
        let mut v = Self::zero(m.n, m.c);
        v.add_term(m.clone(), Laurent::one());
        v
    }

    pub fn add_term(&mut self, m: PlanarMatching, c: Laurent) {
        assert_eq!((m.n, m.c), (self.n, self.c), "mixed ambient spaces");
        let e = self.terms.entry(m).or_insert_with(Laurent::zero);
        *e = e.clone() + c;
        self.terms.retain(|_, v| !v.is_zero());
    }

    pub fn terms(&self) -> &BTreeMap<PlanarMatching, Laurent> {
        &self.terms
    }

    pub fn coeff(&self, m: &PlanarMatching) -> Laurent {
        self.terms.get(m).cloned().unwrap_or_else(Laurent::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, k: &Laurent) -> Self {
        let mut out = Self::zero(self.n, self.c);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v.clone() * k.clone());
        }
        out
    }

    pub fn apply_cap_cup(&self, i: usize) -> Result<Self> {
        let mut out = Self::zero(self.n, self.c);
        for (m, v) in &self.terms {
            match apply_cap_cup(m, i)? {
                CapCup::Loop => out.add_term(m.clone(), v.clone() * delta()),
                CapCup::To(m2) => out.add_term(m2, v.clone()),
                CapCup::Zero => {}
            }
        }
        Ok(out)
    }

    /// Resolves a crossing between strands `i` and `i+1` (1-based).
    pub fn apply_crossing(&self, i: usize, h: Handedness, norm: Normalization) -> Result<Self> {
        let (a, b) = crossing_coefficients(h);
        let e = self.apply_cap_cup(i)?;
        let mut out = self.scale(&a);
        for (m, v) in e.terms {
            out.add_term(m, v * b.clone());
        }
        Ok(match norm {
            Normalization::Bracket => out,
            Normalization::Rescaled => out.scale(&Laurent::s_pow(1)),
        })
    }
}

/// Coefficients of the identity smoothing and of the cap-cup smoothing.
pub fn crossing_coefficients(h: Handedness) -> (Laurent, Laurent) {
    match h {
        Handedness::Right => (-Laurent::s_pow(1), -Laurent::s_pow(-1)),
        Handedness::Left => (-Laurent::s_pow(-1), -Laurent::s_pow(1)),
    }
}

/// A basis together with a lookup table from matchings to indices.
#[derive(Clone, Debug)]
pub struct SkeinSpace {
    n: usize,
    c: usize,
    basis: Vec<PlanarMatching>,
    index: HashMap<PlanarMatching, usize>,
}

impl SkeinSpace {
    pub fn new(n: usize, c: usize) -> Result<Self> {
        let basis = enumerate_basis(n, c)?;
        let index = basis
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        Ok(SkeinSpace { n, c, basis, index })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[PlanarMatching] {
        &self.basis
    }

    pub fn index_of(&self, m: &PlanarMatching) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn to_coords(&self, v: &SkeinVector) -> Vec<Laurent> {
        let mut out = vec![Laurent::zero(); self.dim()];
        for (m, c) in v.terms() {
            out[self.index[m]] = c.clone();
        }
        out
    }

    /// Matrix of `e_i`; column `j` is the image of basis vector `j`.
    pub fn cap_cup_matrix(&self, i: usize) -> Result<Matrix<Laurent>> {
        let d = self.dim();
        let mut m = Matrix::zeros(d, d, &Laurent::zero());
        for (j, b) in self.basis.iter().enumerate() {
            match apply_cap_cup(b, i)? {
                CapCup::Loop => m.add_at(j, j, delta()),
                CapCup::To(b2) => m.add_at(self.index[&b2], j, Laurent::one()),
                CapCup::Zero => {}
            }
        }
        Ok(m)
    }

    /// Matrix of the crossing `tau_i`.
    pub fn crossing_matrix(
        &self,
        i: usize,
        h: Handedness,
        norm: Normalization,
    ) -> Result<Matrix<Laurent>> {
        let (a, b) = crossing_coefficients(h);
        let e = self.cap_cup_matrix(i)?;
        let id = Matrix::identity(self.dim(), &Laurent::zero());
        let m = id.scale(&a).add(&e.scale(&b));
        Ok(match norm {
            Normalization::Bracket => m,
            Normalization::Rescaled => {
                let d = self.rescaling();
                let dinv: Vec<Laurent> = d.iter().map(|x| x.bar()).collect();
                let s = Laurent::s_pow(1);
                Matrix::from_fn(self.dim(), self.dim(), &Laurent::zero(), |r, c| {
                    m.get(r, c).clone() * dinv[r].clone() * d[c].clone() * s.clone()
                })
            }
        })
    }

    /// Diagonal of the rescaled basis: `s^2` on odd matchings, `1` otherwise.
    pub fn rescaling(&self) -> Vec<Laurent> {
        self.basis
            .iter()
            .map(|m| match m.bicolor_parity() {
                Parity::Even => Laurent::one(),
                Parity::Odd => Laurent::s_pow(2),
            })
            .collect()
    }

    /// Permutation matrix `P` with `P e_j = e_{perm(j)}`, where `order` lists
    /// the basis of another convention in terms of ours.
    pub fn permutation_matrix(&self, order: &[PlanarMatching]) -> Matrix<Laurent> {
        let d = self.dim();
        let mut p = Matrix::zeros(d, d, &Laurent::zero());
        for (j, m) in order.iter().enumerate() {
            p.set(self.index[m], j, Laurent::one());
        }
        p
    }
}

/// `delta^loops` in the given domain.
pub fn evaluate_closed<D: Domain>(loops: usize, d: &D) -> D::F {
    d.delta().pow(loops as u64)
}

/// A link diagram in planar-diagram notation plus a number of extra
/// crossingless components.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PdCode {
    pub crossings: Vec<[usize; 4]>,
    pub unknotted_components: usize,
}

impl PdCode {
    pub fn parse_json(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Input {
            List(Vec<[usize; 4]>),
            Full {
                pd: Vec<[usize; 4]>,
                #[serde(default)]
                unknotted_components: usize,
            },
        }
        let input: Input =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("PD code: {e}")))?;
        let pd = match input {
            Input::List(v) => PdCode {
                crossings: v,
                unknotted_components: 0,
            },
            Input::Full {
                pd,
                unknotted_components,
            } => PdCode {
                crossings: pd,
                unknotted_components,
            },
        };
        pd.validate()?;
        Ok(pd)
    }

    pub fn validate(&self) -> Result<()> {
        let mut count: HashMap<usize, usize> = HashMap::new();
        for x in &self.crossings {
            for &l in x {
                *count.entry(l).or_default() += 1;
            }
        }
        if let Some((l, k)) = count.iter().find(|(_, &k)| k != 2) {
            return Err(Error::Malformed(format!(
                "edge label {l} appears {k} times, expected 2"
            )));
        }
        Ok(())
    }

    /// The closure of a braid word on `strands` strands.
    pub fn braid_closure(word: &[i64], strands: usize) -> Result<Self> {
        let mut cur: Vec<usize> = (0..strands).collect();
        let mut next = strands;
        let mut crossings = Vec::new();
        for &g in word {
            let i = g.unsigned_abs() as usize;
            if g == 0 || i >= strands {
                return Err(Error::IndexOutOfRange {
                    index: g,
                    max: strands.saturating_sub(1) as u64,
                });
            }
            let (a, b) = (cur[i - 1], cur[i]);
            let (c, d) = (next, next + 1);
            next += 2;
            crossings.push(if g > 0 { [b, d, c, a] } else { [a, b, d, c] });
            cur[i - 1] = c;
            cur[i] = d;
        }
        // close each strand: final label at position p is the initial label p
        let mut rename: HashMap<usize, usize> = HashMap::new();
        let mut free = 0;
        for (p, &l) in cur.iter().enumerate() {
            if l == p {
                free += 1;
            } else {
                rename.insert(l, p);
            }
        }
        for x in crossings.iter_mut() {
            for l in x.iter_mut() {
                if let Some(&r) = rename.get(l) {
                    *l = r;
                }
            }
        }
        Ok(PdCode {
            crossings,
            unknotted_components: free,
        })
    }
}

/// Kauffman bracket by summing over all `2^k` smoothings. For a crossing
/// `[i, j, k, l]` the A-smoothing joins `i-j` and `k-l` with weight `-s`, the
/// B-smoothing joins `i-l` and `j-k` with weight `-s^-1`.
pub fn bracket_state_sum(pd: &PdCode) -> Result<Laurent> {
    pd.validate()?;
    let k = pd.crossings.len();
    if k > 24 {
        return Err(Error::Unsupported(format!(
            "{k} crossings is too many for the state sum"
        )));
    }
    let mut labels: Vec<usize> = pd.crossings.iter().flatten().copied().collect();
    labels.sort_unstable();
    labels.dedup();
    let idx: HashMap<usize, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
    let d = delta();
    let mut total = Laurent::zero();
    for state in 0u32..(1u32 << k) {
        let mut parent: Vec<usize> = (0..labels.len()).collect();
        let mut a = 0i64;
        for (bit, x) in pd.crossings.iter().enumerate() {
            let [p, q, r, s] = x.map(|l| idx[&l]);
            if state >> bit & 1 == 0 {
                a += 1;
                union(&mut parent, p, q);
                union(&mut parent, r, s);
            } else {
                union(&mut parent, p, s);
                union(&mut parent, q, r);
            }
        }
        let loops = (0..labels.len())
            .filter(|&i| find(&mut parent, i) == i)
            .count()
            + pd.unknotted_components;
        let b = k as i64 - a;
        let sign = if k.is_multiple_of(2) { 1 } else { -1 };
        let weight = Laurent::s_pow(a - b) * Laurent::int(sign);
        total = total + weight * d.pow(loops as u64);
    }
    Ok(total)
}

/// Bracket of a braid closure through the rewriting engine: the braid acts
/// on the first `strands` of `2 * strands` points capped off by nested arcs,
/// and the result is closed against the same nested arcs.
pub fn braid_closure_bracket(word: &[i64], strands: usize) -> Result<Laurent> {
    let n = 2 * strands;
    let nested = PlanarMatching::new(n, 0, (0..n).map(|i| n - 1 - i).collect())?;
    let mut v = SkeinVector::basis_vector(&nested);
    for &g in word.iter().rev() {
        let i = g.unsigned_abs() as usize;
        if g == 0 || i >= strands {
            return Err(Error::IndexOutOfRange {
                index: g,
                max: strands.saturating_sub(1) as u64,
            });
        }
        let h = if g > 0 {
            Handedness::Right
        } else {
            Handedness::Left
        };
        v = v.apply_crossing(i, h, Normalization::Bracket)?;
    }
    let d = delta();
    let mut total = Laurent::zero();
    for (m, c) in v.terms() {
        let mut parent: Vec<usize> = (0..n).collect();
        for (a, b) in m.arcs().into_iter().chain(nested.arcs()) {
            union(&mut parent, a, b);
        }
        let loops = (0..n).filter(|&i| find(&mut parent, i) == i).count();
        total = total + c.clone() * d.pow(loops as u64);
    }
    Ok(total)
}

/// Parses a braid word: whitespace-separated nonzero integers, where `-i`
/// is the inverse of generator `i`. A bracket `[a,b]` expands to the
/// commutator `a b a^-1 b^-1`, and brackets may nest.
pub fn parse_braid_word(text: &str) -> Result<Vec<i64>> {
    let chars: Vec<char> = text.chars().collect();
    let mut pos = 0;
    let w = parse_word_until(&chars, &mut pos, &[])?;
    if pos != chars.len() {
        return Err(Error::Parse(format!(
            "unexpected '{}' in braid word",
            chars[pos]
        )));
    }
    Ok(w)
}

fn parse_word_until(chars: &[char], pos: &mut usize, stops: &[char]) -> Result<Vec<i64>> {
    let mut out = Vec::new();
    while *pos < chars.len() {
        let ch = chars[*pos];
        if ch.is_whitespace() {
            *pos += 1;
        } else if stops.contains(&ch) {
            break;
        } else if ch == '[' {
            *pos += 1;
            let a = parse_word_until(chars, pos, &[','])?;
            if chars.get(*pos) != Some(&',') {
                return Err(Error::Parse("commutator needs a comma".into()));
            }
            *pos += 1;
            let b = parse_word_until(chars, pos, &[']'])?;
            if chars.get(*pos) != Some(&']') {
                return Err(Error::Parse("unclosed commutator bracket".into()));
            }
            *pos += 1;
            out.extend_from_slice(&a);
            out.extend_from_slice(&b);
            out.extend(invert_word(&a));
            out.extend(invert_word(&b));
        } else if ch == '-' || ch == '+' || ch.is_ascii_digit() {
            let start = *pos;
            *pos += 1;
            while *pos < chars.len() && chars[*pos].is_ascii_digit() {
                *pos += 1;
            }
            let tok: String = chars[start..*pos].iter().collect();
            let v: i64 = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad generator '{tok}'")))?;
            if v == 0 {
                return Err(Error::Parse("generator index 0 is not allowed".into()));
            }
            out.push(v);
        } else {
            return Err(Error::Parse(format!("unexpected '{ch}' in braid word")));
        }
    }
    Ok(out)
}

pub fn invert_word(w: &[i64]) -> Vec<i64> {
    w.iter().rev().map(|g| -g).collect()
}
