//! Weighted Potts partition functions of planar graphs through the
//! Kauffman bracket.
//!
//! Each vertex is doubled into a circle and each edge of weight `y` becomes
//! `((1 - y)/[2])` times the smoothing that merges the two circles plus the
//! smoothing that keeps them apart. Loops are counted as boundary
//! components of ribbon subgraphs, read off the rotation system.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::arith::{q_int, Domain, Field, Laurent, Rational, Scalar, Q};
use crate::skein::{find, union, PlanarMatching};
use crate::{Error, Result};

/// Largest edge count expanded term by term.
pub const MAX_EDGES: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub weight: Laurent,
}

/// A graph with a rotation system: the cyclic order of edge ends at each
/// vertex. A loop edge appears twice at its vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarGraph {
    vertices: usize,
    edges: Vec<Edge>,
    rotations: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct GraphJson {
    vertices: usize,
    edges: Vec<(usize, usize, String)>,
    rotations: Option<BTreeMap<String, Vec<usize>>>,
}

impl PlanarGraph {
    pub fn new(vertices: usize, edges: Vec<Edge>, rotations: Vec<Vec<usize>>) -> Result<Self> {
        let g = PlanarGraph {
            vertices,
            edges,
            rotations,
        };
        g.validate()?;
        Ok(g)
    }

    /// Rotation at each vertex in increasing edge order. Orders that are not
    /// planar fail the Euler check like any other input.
    pub fn with_edge_order(vertices: usize, edges: Vec<Edge>) -> Result<Self> {
        let mut rot = vec![Vec::new(); vertices];
        for (i, e) in edges.iter().enumerate() {
            if e.u >= vertices || e.v >= vertices {
                return Err(Error::Malformed(format!(
                    "edge {i} has an endpoint out of range"
                )));
            }
            rot[e.u].push(i);
            rot[e.v].push(i);
        }
        Self::new(vertices, edges, rot)
    }

    /// Searches all rotation systems for a planar one.
    pub fn embed(vertices: usize, edges: Vec<Edge>) -> Result<Self> {
        let mut ends = vec![Vec::new(); vertices];
        for (i, e) in edges.iter().enumerate() {
            if e.u >= vertices || e.v >= vertices {
                return Err(Error::Malformed(format!(
                    "edge {i} has an endpoint out of range"
                )));
            }
            ends[e.u].push(i);
            ends[e.v].push(i);
        }
        // cyclic orders at each vertex: fix the first end, permute the rest
        let choices: Vec<Vec<Vec<usize>>> = ends.iter().map(|r| cyclic_orders(r)).collect();
        let total: usize = choices.iter().map(|c| c.len()).product();
        if total > 1 << 20 {
            return Err(Error::Unsupported(
                "too many rotation systems to search".into(),
            ));
        }
        for mut code in 0..total {
            let rot: Vec<Vec<usize>> = choices
                .iter()
                .map(|c| {
                    let pick = code % c.len();
                    code /= c.len();
                    c[pick].clone()
                })
                .collect();
            match Self::new(vertices, edges.clone(), rot) {
                Ok(g) => return Ok(g),
                Err(Error::Nonplanar) => continue,
                Err(e) => return Err(e),
            }
        }
        Err(Error::Nonplanar)
    }

    /// Reads `vertices`, `edges` and `rotations`; without `rotations` a
    /// planar rotation system is searched for.
    pub fn parse_json(text: &str) -> Result<Self> {
        let raw: GraphJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let edges = raw
            .edges
            .into_iter()
            .map(|(u, v, w)| {
                Ok(Edge {
                    u,
                    v,
                    weight: w.parse()?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let Some(given) = raw.rotations else {
            return Self::embed(raw.vertices, edges);
        };
        let mut rotations = vec![Vec::new(); raw.vertices];
        for (k, r) in given {
            let v: usize = k
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad vertex key {k:?}")))?;
            if v >= raw.vertices {
                return Err(Error::Malformed(format!(
                    "rotation given for missing vertex {v}"
                )));
            }
            rotations[v] = r;
        }
        Self::new(raw.vertices, edges, rotations)
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    fn validate(&self) -> Result<()> {
        let mut seen = vec![0usize; self.edges.len()];
        for (v, rot) in self.rotations.iter().enumerate() {
            for &e in rot {
                let edge = self.edges.get(e).ok_or_else(|| {
                    Error::Malformed(format!("rotation at {v} names missing edge {e}"))
                })?;
                if edge.u != v && edge.v != v {
                    return Err(Error::Malformed(format!(
                        "edge {e} is not incident to vertex {v}"
                    )));
                }
                seen[e] += 1;
            }
        }
        for (i, e) in self.edges.iter().enumerate() {
            if e.u >= self.vertices || e.v >= self.vertices {
                return Err(Error::Malformed(format!(
                    "edge {i} has an endpoint out of range"
                )));
            }
            if seen[i] != 2 {
                return Err(Error::Malformed(format!(
                    "edge {i} appears {} times in the rotations",
                    seen[i]
                )));
            }
        }
        if self.faces(&vec![true; self.edges.len()]).1 != 2 * self.components() as i64 {
            return Err(Error::Nonplanar);
        }
        Ok(())
    }

    fn components(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.vertices).collect();
        for e in &self.edges {
            union(&mut parent, e.u, e.v);
        }
        (0..self.vertices)
            .filter(|&v| find(&mut parent, v) == v)
            .count()
    }

    /// Darts at each vertex in rotation order, restricted to `keep`. Dart
    /// `2e` is the end of edge `e` at `u`, `2e + 1` the end at `v`.
    fn darts(&self, keep: &[bool]) -> Vec<Vec<usize>> {
        self.rotations
            .iter()
            .enumerate()
            .map(|(v, rot)| {
                let mut used = vec![false; self.edges.len()];
                rot.iter()
                    .filter(|&&e| keep[e])
                    .map(|&e| {
                        let edge = &self.edges[e];
                        if edge.u == edge.v {
                            let first = !used[e];
                            used[e] = true;
                            if first {
                                2 * e
                            } else {
                                2 * e + 1
                            }
                        } else if edge.u == v {
                            2 * e
                        } else {
                            2 * e + 1
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// Boundary components of the ribbon subgraph on edges `keep` (isolated
    /// vertices count once each), and `v - e + f` summed over components.
    fn faces(&self, keep: &[bool]) -> (usize, i64) {
        let darts = self.darts(keep);
        let nd = 2 * self.edges.len();
        let mut next = vec![usize::MAX; nd];
        for rot in &darts {
            for (i, &d) in rot.iter().enumerate() {
                next[d] = rot[(i + 1) % rot.len()];
            }
        }
        let mut seen = vec![false; nd];
        let mut faces = darts.iter().filter(|r| r.is_empty()).count();
        for start in 0..nd {
            if !keep[start / 2] || seen[start] {
                continue;
            }
            faces += 1;
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                d = next[d ^ 1];
            }
        }
        let e = keep.iter().filter(|&&k| k).count();
        (faces, (self.vertices + faces) as i64 - e as i64)
    }

    /// Loop count after merging along the edges in `keep`.
    pub fn loops(&self, keep: &[bool]) -> usize {
        self.faces(keep).0
    }
}

fn cyclic_orders(ends: &[usize]) -> Vec<Vec<usize>> {
    fn permute(rest: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>, head: usize) {
        if k == rest.len() {
            let mut v = vec![head];
            v.extend_from_slice(rest);
            out.push(v);
            return;
        }
        for i in k..rest.len() {
            rest.swap(k, i);
            permute(rest, k + 1, out, head);
            rest.swap(k, i);
        }
    }
    match ends.split_first() {
        None => vec![Vec::new()],
        Some((&head, rest)) => {
            let mut out = Vec::new();
            permute(&mut rest.to_vec(), 0, &mut out, head);
            out.sort();
            out.dedup();
            out
        }
    }
}

/// The two-term replacement of one edge on the four points where the doubled
/// edge meets its end circles: `1, 2` at one end and `3, 4` at the other,
/// in cyclic order. Merging joins `(1 4)(2 3)`; cutting joins `(1 2)(3 4)`.
pub fn edge_skein<F: Field>(y: &F, delta: &F) -> Result<BTreeMap<PlanarMatching, F>> {
    let bracket2 = -delta.clone();
    let coef = (y.one_like() - y.clone()) * bracket2.inv();
    let merge = PlanarMatching::new(4, 0, vec![3, 2, 1, 0])?;
    let cut = PlanarMatching::new(4, 0, vec![1, 0, 3, 2])?;
    let mut out = BTreeMap::new();
    if !coef.is_zero() {
        out.insert(merge, coef);
    }
    out.insert(cut, y.one_like());
    Ok(out)
}

/// One closed crossingless diagram of the expansion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkeinTerm {
    pub merged: Vec<usize>,
    pub loops: usize,
}

/// Every choice of merged edges with its loop count.
pub fn graph_to_skein(g: &PlanarGraph) -> Result<Vec<SkeinTerm>> {
    let e = g.edges.len();
    if e > MAX_EDGES {
        return Err(Error::Unsupported(format!(
            "{e} edges exceeds the expansion limit {MAX_EDGES}"
        )));
    }
    Ok((0u64..1 << e)
        .map(|mask| {
            let keep: Vec<bool> = (0..e).map(|i| mask >> i & 1 == 1).collect();
            SkeinTerm {
                merged: (0..e).filter(|&i| keep[i]).collect(),
                loops: g.loops(&keep),
            }
        })
        .collect())
}

/// Bracket of the replaced skein given each edge's merge coefficient.
pub fn bracket_value<F: Scalar>(g: &PlanarGraph, delta: &F, merge: &[F]) -> Result<F> {
    let mut acc = delta.zero_like();
    for term in graph_to_skein(g)? {
        let mut x = delta.pow(term.loops as u64);
        for &i in &term.merged {
            x = x * merge[i].clone();
        }
        acc = acc + x;
    }
    Ok(acc)
}

/// Sum over all colorings with `n` colors: an edge contributes its weight
/// when its ends share a color and 1 otherwise.
pub fn coloring_oracle<F: Scalar>(g: &PlanarGraph, n: usize, weights: &[F], proto: &F) -> F {
    let v = g.vertices;
    let mut acc = proto.zero_like();
    let mut colors = vec![0usize; v];
    loop {
        let mut term = proto.one_like();
        for (e, w) in g.edges.iter().zip(weights) {
            if colors[e.u] == colors[e.v] {
                term = term * w.clone();
            }
        }
        acc = acc + term;
        let mut i = 0;
        while i < v {
            colors[i] += 1;
            if colors[i] < n {
                break;
            }
            colors[i] = 0;
            i += 1;
        }
        if i == v {
            return acc;
        }
    }
}

/// Random-cluster expansion: the sum over edge subsets `A` of
/// `prod (y - 1) * n^{components(A)}`.
pub fn cluster_oracle<F: Scalar>(g: &PlanarGraph, n: &F, weights: &[F]) -> F {
    let e = g.edges.len();
    let mut acc = n.zero_like();
    for mask in 0u64..1 << e {
        let mut parent: Vec<usize> = (0..g.vertices).collect();
        let mut term = n.one_like();
        for i in (0..e).filter(|i| mask >> i & 1 == 1) {
            union(&mut parent, g.edges[i].u, g.edges[i].v);
            term = term * (weights[i].clone() - n.one_like());
        }
        let k = (0..g.vertices)
            .filter(|&v| find(&mut parent, v) == v)
            .count();
        acc = acc + term * n.pow(k as u64);
    }
    acc
}

#[derive(Clone, Debug, Serialize)]
pub struct PottsResult {
    pub n: String,
    pub bracket: String,
    pub prefactor: String,
    pub z_skein: String,
    pub z_oracle: Option<String>,
    pub oracle_note: Option<String>,
}

/// `Z = (-[2])^v <S>` at a parameter domain; the oracle runs when
/// `n = [2]^2` is a positive integer.
pub fn potts_partition<D: Domain>(g: &PlanarGraph, domain: &D) -> Result<PottsResult>
where
    D::F: Field,
{
    let delta = domain.delta();
    let weights: Vec<D::F> = g.edges.iter().map(|e| domain.embed(&e.weight)).collect();
    let inv2 = (-delta.clone())
        .try_inv()
        .ok_or_else(|| Error::NotInvertible("[2] vanishes".into()))?;
    let merge: Vec<D::F> = weights
        .iter()
        .map(|y| (y.one_like() - y.clone()) * inv2.clone())
        .collect();
    let bracket = bracket_value(g, &delta, &merge)?;
    let prefactor = delta.pow(g.vertices as u64);
    let z = prefactor.clone() * bracket.clone();
    let n = delta.clone() * delta.clone();
    let integer_n = domain
        .to_complex(&n)
        .map(|z| z.re.round())
        .filter(|&r| (1.0..=64.0).contains(&r))
        .map(|r| r as usize)
        .filter(|&m| n == n.from_int_like(m as i64));
    let (z_oracle, oracle_note) = match integer_n {
        Some(m) => (
            Some(coloring_oracle(g, m, &weights, &delta).to_string()),
            None,
        ),
        None => (
            None,
            Some("oracle skipped: n is not a positive integer".to_string()),
        ),
    };
    Ok(PottsResult {
        n: n.to_string(),
        bracket: bracket.to_string(),
        prefactor: prefactor.to_string(),
        z_skein: z.to_string(),
        z_oracle,
        oracle_note,
    })
}

/// `Z` with an integer number of colors `n` and rational weights, computed
/// with the loop value as an indeterminate `d` (`d^2 = n`); every term of
/// `(-[2])^v <S>` has even degree in `d`.
pub fn potts_with_colors(g: &PlanarGraph, n: u64) -> Result<(Q, Q)> {
    let weights: Vec<Q> = g
        .edges
        .iter()
        .map(|e| {
            if e.weight.is_zero() {
                Ok(q_int(0))
            } else if e.weight.is_monomial() && e.weight.low() == 0 {
                Ok(e.weight.coeff(0))
            } else {
                Err(Error::Unsupported(format!(
                    "weight {} must be rational with a fixed color count",
                    e.weight
                )))
            }
        })
        .collect::<Result<_>>()?;
    // Laurent in s, with s standing for d = -[2]
    let merge: Vec<Laurent> = weights
        .iter()
        .map(|y| Laurent::monomial(y - q_int(1), -1))
        .collect();
    let d = Laurent::s_pow(1);
    let z = d.pow(g.vertices as u64) * bracket_value(g, &d, &merge)?;
    let nq = q_int(n as i64);
    let mut total = q_int(0);
    for (e, c) in z.terms() {
        if e % 2 != 0 || e < 0 {
            return Err(Error::Numeric(format!(
                "odd or negative power d^{e} in the partition function"
            )));
        }
        let mut p = q_int(1);
        for _ in 0..e / 2 {
            p *= &nq;
        }
        total += c * p;
    }
    let wr: Vec<Rational> = weights.iter().cloned().map(Rational).collect();
    let oracle = coloring_oracle(g, n as usize, &wr, &Rational::int(0));
    Ok((total, oracle.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{GenericField, RationalPoint};

    fn edge(u: usize, v: usize, w: &str) -> Edge {
        Edge {
            u,
            v,
            weight: w.parse().unwrap(),
        }
    }

    fn rat(a: i64, b: i64) -> Q {
        Q::new(a.into(), b.into())
    }

    #[test]
    fn edge_skein_coefficients() {
        let d = Rational::int(-2);
        let one = edge_skein(&Rational::int(1), &d).unwrap();
        assert_eq!(one.len(), 1);
        let half = edge_skein(&Rational::int(0), &d).unwrap();
        assert!(half.values().any(|c| *c == Rational(rat(1, 2))));
        let unit = edge_skein(&Rational::int(-1), &d).unwrap();
        assert!(unit.values().all(|c| *c == Rational::int(1)));
    }

    #[test]
    fn single_vertex_and_edge() {
        let g = PlanarGraph::new(1, vec![], vec![vec![]]).unwrap();
        assert_eq!(
            graph_to_skein(&g).unwrap(),
            vec![SkeinTerm {
                merged: vec![],
                loops: 1
            }]
        );
        let g = PlanarGraph::with_edge_order(2, vec![edge(0, 1, "5")]).unwrap();
        let terms = graph_to_skein(&g).unwrap();
        assert_eq!(
            terms.iter().map(|t| t.loops).collect::<Vec<_>>(),
            vec![2, 1]
        );
        let p = RationalPoint::from_s(q_int(1)).unwrap();
        let r = potts_partition(&g, &p).unwrap();
        // n y + n (n - 1) at n = 4, y = 5
        assert_eq!(r.z_skein, "32");
        assert_eq!(r.z_oracle.as_deref(), Some("32"));
    }

    #[test]
    fn generic_single_edge_identity() {
        let g = PlanarGraph::with_edge_order(2, vec![edge(0, 1, "s^2")]).unwrap();
        let r = potts_partition(&g, &GenericField).unwrap();
        assert!(r.z_oracle.is_none());
        let n: Laurent = "s^4 + 2 + s^-4".parse().unwrap();
        let y: Laurent = "s^2".parse().unwrap();
        let expect = n.clone() * y + n.clone() * (n - Laurent::one());
        assert_eq!(
            r.z_skein,
            crate::arith::RatFunc::from_laurent(&expect).to_string()
        );
    }

    #[test]
    fn triangle_and_double_edge() {
        let tri = PlanarGraph::with_edge_order(
            3,
            vec![edge(0, 1, "3"), edge(1, 2, "3"), edge(2, 0, "3")],
        )
        .unwrap();
        let (z, o) = potts_with_colors(&tri, 4).unwrap();
        assert_eq!(z, o);
        let dbl =
            PlanarGraph::with_edge_order(2, vec![edge(0, 1, "2"), edge(0, 1, "-1/2")]).unwrap();
        for n in [2, 4, 9] {
            let (z, o) = potts_with_colors(&dbl, n).unwrap();
            assert_eq!(z, o);
        }
    }

    #[test]
    fn cluster_matches_colorings() {
        let g = PlanarGraph::with_edge_order(3, vec![edge(0, 1, "2"), edge(1, 2, "7/3")]).unwrap();
        let w = vec![Rational::int(2), Rational(rat(7, 3))];
        assert_eq!(
            cluster_oracle(&g, &Rational::int(5), &w),
            coloring_oracle(&g, 5, &w, &Rational::int(0))
        );
    }

    #[test]
    fn nonplanar_rotation_rejected() {
        // K4 with a rotation system of genus one
        let edges = vec![
            edge(0, 1, "1"),
            edge(0, 2, "1"),
            edge(0, 3, "1"),
            edge(1, 2, "1"),
            edge(1, 3, "1"),
            edge(2, 3, "1"),
        ];
        let bad = vec![vec![0, 1, 2], vec![0, 3, 4], vec![1, 3, 5], vec![2, 4, 5]];
        assert!(matches!(
            PlanarGraph::new(4, edges.clone(), bad),
            Err(Error::Nonplanar)
        ));
        let good = vec![vec![0, 1, 2], vec![0, 4, 3], vec![1, 3, 5], vec![2, 5, 4]];
        assert!(PlanarGraph::new(4, edges, good).is_ok());
    }

    #[test]
    fn json_input() {
        let text = r#"{"vertices": 2, "edges": [[0, 1, "2"]], "rotations": {"0": [0], "1": [0]}}"#;
        let g = PlanarGraph::parse_json(text).unwrap();
        assert_eq!(g.edges().len(), 1);
        assert!(PlanarGraph::parse_json(
            r#"{"vertices": 2, "edges": [[0, 1, "2"]], "rotations": {"0": [0]}}"#
        )
        .is_err());
        let k4 = r#"{"vertices": 4, "edges": [[0,1,"1"],[0,2,"1"],[0,3,"1"],[1,2,"1"],[1,3,"1"],[2,3,"1"]]}"#;
        assert!(PlanarGraph::parse_json(k4).is_ok());
    }
}
