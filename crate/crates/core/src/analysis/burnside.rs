//! Irreducibility by spanning: the algebra generated by the image must be
//! the full matrix algebra (Burnside), computed by closing word products.

use serde::Serialize;

use crate::arith::Field;
use crate::linalg::{Matrix, SpanBuilder};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SpanVerdict {
    Irreducible,
    Reducible,
    /// The word-length cap was reached before the span closed.
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpanReport {
    pub verdict: SpanVerdict,
    pub span_dim: usize,
    pub target_dim: usize,
    pub word_length: usize,
}

fn flatten<F: Field>(m: &Matrix<F>) -> Vec<F> {
    m.entries().to_vec()
}

/// Spans products of `gens` of length at most `max_len`.
pub fn algebra_span<F: Field>(
    gens: &[Matrix<F>],
    dim: usize,
    proto: &F,
    max_len: usize,
) -> SpanReport {
    let target = dim * dim;
    let mut span = SpanBuilder::new();
    let id = Matrix::identity(dim, proto);
    span.insert(flatten(&id));
    let mut frontier = vec![id];
    let mut len = 0;
    while !frontier.is_empty() && span.dim() < target && len < max_len {
        len += 1;
        let mut next = Vec::new();
        for m in &frontier {
            for g in gens {
                let p = m.mul(g);
                if span.insert(flatten(&p)) {
                    next.push(p);
                }
            }
        }
        frontier = next;
    }
    let verdict = if span.dim() == target {
        SpanVerdict::Irreducible
    } else if frontier.is_empty() {
        SpanVerdict::Reducible
    } else {
        SpanVerdict::Inconclusive
    };
    SpanReport {
        verdict,
        span_dim: span.dim(),
        target_dim: target,
        word_length: len,
    }
}

/// `g x g^-1` on traceless matrices, in the basis `E_pq` (`p != q`) followed
/// by `E_pp - E_NN`.
pub fn adjoint_matrix<F: Field>(g: &Matrix<F>, g_inv: &Matrix<F>) -> Matrix<F> {
    let n = g.rows();
    let proto = g.proto().clone();
    let mut basis = Vec::new();
    for p in 0..n {
        for q in 0..n {
            if p != q {
                basis.push((p, q));
            }
        }
    }
    let m = n * n - 1;
    let mut out = Matrix::zeros(m, m, &proto);
    let elem = |col: usize| {
        let mut x = Matrix::zeros(n, n, &proto);
        if col < basis.len() {
            let (p, q) = basis[col];
            x.set(p, q, proto.one_like());
        } else {
            let p = col - basis.len();
            x.set(p, p, proto.one_like());
            x.set(n - 1, n - 1, -proto.one_like());
        }
        x
    };
    for col in 0..m {
        let y = g.mul(&elem(col)).mul(g_inv);
        for (row, &(p, q)) in basis.iter().enumerate() {
            out.set(row, col, y.get(p, q).clone());
        }
        for p in 0..n - 1 {
            out.set(basis.len() + p, col, y.get(p, p).clone());
        }
    }
    out
}

/// Irreducibility of the adjoint action on traceless operators.
pub fn adjoint_irreducible<F: Field>(
    gens: &[Matrix<F>],
    gens_inv: &[Matrix<F>],
    max_len: usize,
) -> SpanReport {
    let proto = gens[0].proto().clone();
    let dim = gens[0].rows();
    let ads: Vec<Matrix<F>> = gens
        .iter()
        .zip(gens_inv)
        .map(|(g, gi)| adjoint_matrix(g, gi))
        .collect();
    algebra_span(&ads, dim * dim - 1, &proto, max_len)
}
