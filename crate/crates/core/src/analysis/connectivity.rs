//! Connectivity certificates for pairs of subgroup decompositions.
//!
//! Two decompositions of the same space come from the full twists on the
//! first and on the last strands. A directed graph joins a summand of one
//! to a summand of the other whenever the projection between them is
//! nonzero; strong connectivity certifies irreducibility.

use serde::Serialize;

use crate::arith::{Domain, Field, Scalar};
use crate::linalg::Matrix;
use crate::rep::Representation;
use crate::{Error, Result};

/// Summands of a direct-sum decomposition, as basis vectors in ambient
/// coordinates.
#[derive(Clone, Debug)]
pub struct Decomposition<F: Scalar> {
    pub names: Vec<String>,
    pub blocks: Vec<Vec<Vec<F>>>,
}

impl<F: Field> Decomposition<F> {
    fn basis_matrix(&self, ambient: usize, extra: &[Vec<F>], proto: &F) -> Matrix<F> {
        let cols: Vec<Vec<F>> = self
            .blocks
            .iter()
            .flatten()
            .chain(extra.iter())
            .cloned()
            .collect();
        Matrix::from_columns(&cols, ambient, proto)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConnectivityCertificate {
    pub vertices: Vec<String>,
    pub edges: Vec<(usize, usize)>,
    pub components: Vec<Vec<usize>>,
    pub strongly_connected: bool,
}

/// Strongly connected components (Kosaraju), each sorted, in order of
/// their smallest vertex.
pub fn strongly_connected_components(nv: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut fwd = vec![Vec::new(); nv];
    let mut rev = vec![Vec::new(); nv];
    for &(a, b) in edges {
        fwd[a].push(b);
        rev[b].push(a);
    }
    let mut seen = vec![false; nv];
    let mut order = Vec::with_capacity(nv);
    for start in 0..nv {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut stack = vec![(start, 0usize)];
        while let Some((v, i)) = stack.pop() {
            if i < fwd[v].len() {
                stack.push((v, i + 1));
                let w = fwd[v][i];
                if !seen[w] {
                    seen[w] = true;
                    stack.push((w, 0));
                }
            } else {
                order.push(v);
            }
        }
    }
    let mut comp = vec![usize::MAX; nv];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for &root in order.iter().rev() {
        if comp[root] != usize::MAX {
            continue;
        }
        let id = comps.len();
        let mut members = vec![root];
        comp[root] = id;
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            for &w in &rev[v] {
                if comp[w] == usize::MAX {
                    comp[w] = id;
                    members.push(w);
                    stack.push(w);
                }
            }
        }
        members.sort_unstable();
        comps.push(members);
    }
    comps.sort();
    comps
}

/// Builds the bipartite projection graph between `g` and `h`. `extra`
/// completes both decompositions to a basis of the ambient space (the
/// identity, for decompositions of traceless operators).
pub fn certificate<F: Field>(
    g: &Decomposition<F>,
    h: &Decomposition<F>,
    ambient: usize,
    extra: &[Vec<F>],
    proto: &F,
) -> Result<ConnectivityCertificate> {
    let inv = |d: &Decomposition<F>| {
        d.basis_matrix(ambient, extra, proto)
            .inverse()
            .ok_or_else(|| Error::NotInvertible("summands do not form a basis".into()))
    };
    let (gi, hi) = (inv(g)?, inv(h)?);
    let ng = g.blocks.len();
    let mut edges = Vec::new();
    let mut link = |src: &Decomposition<F>,
                    dst: &Decomposition<F>,
                    dst_inv: &Matrix<F>,
                    so: usize,
                    doff: usize| {
        for (a, block) in src.blocks.iter().enumerate() {
            let coords: Vec<Vec<F>> = block.iter().map(|v| dst_inv.mul_vec(v)).collect();
            let mut start = 0;
            for (b, target) in dst.blocks.iter().enumerate() {
                let range = start..start + target.len();
                if coords
                    .iter()
                    .any(|c| c[range.clone()].iter().any(|x| !x.is_zero()))
                {
                    edges.push((so + a, doff + b));
                }
                start = range.end;
            }
        }
    };
    link(g, h, &hi, 0, ng);
    link(h, g, &gi, ng, 0);
    let vertices: Vec<String> = g.names.iter().chain(h.names.iter()).cloned().collect();
    let components = strongly_connected_components(vertices.len(), &edges);
    let strongly_connected = components.len() == 1;
    Ok(ConnectivityCertificate {
        vertices,
        edges,
        components,
        strongly_connected,
    })
}

/// Twist eigenspaces on `k` strands starting after `offset`.
pub fn twist_decomposition<D: Domain>(
    rep: &Representation<D>,
    k: usize,
    offset: usize,
    label: &str,
) -> Result<Decomposition<D::F>>
where
    D::F: Field,
{
    let split = rep.full_twist_split(k, offset)?;
    let names = split
        .iter()
        .enumerate()
        .map(|(i, b)| format!("{label}{}(a={})", i + 1, b.color))
        .collect();
    let blocks = split.into_iter().map(|b| b.basis).collect();
    Ok(Decomposition { names, blocks })
}

fn outer<F: Scalar>(u: &[F], w: &[F]) -> Vec<F> {
    u.iter()
        .flat_map(|x| w.iter().map(move |y| x.clone() * y.clone()))
        .collect()
}

/// The induced decomposition of traceless operators: `sl` of each block,
/// the off-diagonal `Hom` pieces, and the traceless block scalars.
pub fn adjoint_decomposition<F: Field>(
    d: &Decomposition<F>,
    dim: usize,
    label: &str,
    proto: &F,
) -> Result<Decomposition<F>> {
    let c = d.basis_matrix(dim, &[], proto);
    let ci = c
        .inverse()
        .ok_or_else(|| Error::NotInvertible("summands do not form a basis".into()))?;
    let mut idx = Vec::new();
    let mut start = 0;
    for b in &d.blocks {
        idx.push((start..start + b.len()).collect::<Vec<_>>());
        start += b.len();
    }
    let u = |i: usize| c.column(i);
    let w = |i: usize| ci.row(i).to_vec();
    let unit = |p: usize, q: usize| outer(&u(p), &w(q));
    let sub = |a: Vec<F>, b: Vec<F>| a.into_iter().zip(b).map(|(x, y)| x - y).collect::<Vec<F>>();
    let mut names = Vec::new();
    let mut blocks = Vec::new();
    for (j, ix) in idx.iter().enumerate() {
        if ix.len() < 2 {
            continue;
        }
        let mut basis = Vec::new();
        for &p in ix {
            for &q in ix {
                if p != q {
                    basis.push(unit(p, q));
                }
            }
        }
        for win in ix.windows(2) {
            basis.push(sub(unit(win[0], win[0]), unit(win[1], win[1])));
        }
        names.push(format!("sl({label}{})", j + 1));
        blocks.push(basis);
    }
    for (j, jx) in idx.iter().enumerate() {
        for (i, ix) in idx.iter().enumerate() {
            if i == j {
                continue;
            }
            let basis = jx
                .iter()
                .flat_map(|&p| ix.iter().map(move |&q| (p, q)))
                .map(|(p, q)| unit(p, q))
                .collect();
            names.push(format!("{label}{}⊗{label}{}*", j + 1, i + 1));
            blocks.push(basis);
        }
    }
    if idx.len() >= 2 {
        let proj = |ix: &[usize]| {
            ix.iter()
                .map(|&p| unit(p, p))
                .reduce(|a, b| a.into_iter().zip(b).map(|(x, y)| x + y).collect())
                .unwrap()
        };
        let p0 = proj(&idx[0]);
        let d0 = proto.from_int_like(idx[0].len() as i64);
        let basis = idx[1..]
            .iter()
            .map(|ix| {
                let dj = proto.from_int_like(ix.len() as i64);
                sub(
                    proj(ix).into_iter().map(|x| x * d0.clone()).collect(),
                    p0.iter().map(|x| x.clone() * dj.clone()).collect(),
                )
            })
            .collect();
        names.push(format!("I_{label}"));
        blocks.push(basis);
    }
    Ok(Decomposition { names, blocks })
}

fn identity_vector<F: Scalar>(dim: usize, proto: &F) -> Vec<F> {
    (0..dim * dim)
        .map(|i| {
            if i % (dim + 1) == 0 {
                proto.one_like()
            } else {
                proto.zero_like()
            }
        })
        .collect()
}

/// Certificate for `rep` from the twists on the first and last strands
/// (`n - 1` of them, or `n - 2` when there is no clasp).
pub fn connectivity<D: Domain>(
    rep: &Representation<D>,
    adjoint: bool,
) -> Result<ConnectivityCertificate>
where
    D::F: Field,
{
    if rep.n < 3 {
        return Err(Error::InvalidParameter(
            "connectivity needs at least 3 strands".into(),
        ));
    }
    let k = if rep.c == 0 { rep.n - 2 } else { rep.n - 1 };
    let g = twist_decomposition(rep, k, 0, "V")?;
    let h = twist_decomposition(rep, k, 1, "W")?;
    let dim = rep.dim();
    let proto = rep.zero();
    if adjoint {
        let ga = adjoint_decomposition(&g, dim, "V", &proto)?;
        let ha = adjoint_decomposition(&h, dim, "W", &proto)?;
        certificate(&ga, &ha, dim * dim, &[identity_vector(dim, &proto)], &proto)
    } else {
        certificate(&g, &h, dim, &[], &proto)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::GenericField;
    use crate::skein::Normalization;

    fn rep(n: usize, c: usize) -> Representation<GenericField> {
        Representation::build(n, c, &GenericField, Normalization::Bracket).unwrap()
    }

    #[test]
    fn scc_basics() {
        assert_eq!(
            strongly_connected_components(3, &[(0, 1), (1, 2), (2, 0)]),
            vec![vec![0, 1, 2]]
        );
        assert_eq!(
            strongly_connected_components(3, &[(0, 1), (1, 0), (1, 2)]),
            vec![vec![0, 1], vec![2]]
        );
    }

    #[test]
    fn plain_four_zero() {
        let cert = connectivity(&rep(4, 0), false).unwrap();
        assert!(cert.strongly_connected, "{cert:?}");
    }

    #[test]
    fn adjoint_four_two() {
        let cert = connectivity(&rep(4, 2), true).unwrap();
        assert_eq!(cert.vertices.len(), 8);
        assert!(cert.strongly_connected, "{cert:?}");
    }

    #[test]
    fn identical_decompositions_do_not_connect() {
        let r = rep(4, 2);
        let g = twist_decomposition(&r, 3, 0, "V").unwrap();
        let cert = certificate(&g, &g, r.dim(), &[], &r.zero()).unwrap();
        assert!(!cert.strongly_connected);
        assert_eq!(cert.components.len(), 2);
    }

    #[test]
    fn single_summand_is_connected() {
        let r = rep(3, 1);
        let one = Decomposition {
            names: vec!["A".into()],
            blocks: vec![vec![
                vec![r.domain.one(), r.zero()],
                vec![r.zero(), r.domain.one()],
            ]],
        };
        let cert = certificate(&one, &one, 2, &[], &r.zero()).unwrap();
        assert!(cert.strongly_connected);
    }
}
