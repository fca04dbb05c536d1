//! Orders of projective images and a simplicity test for finite ones.

use std::collections::HashMap;

use serde::Serialize;

use crate::arith::Field;
use crate::linalg::Matrix;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ImageOrder {
    Finite {
        order: usize,
        simple: bool,
    },
    /// More than `cap` distinct projective classes were found.
    ExceedsCap {
        cap: usize,
    },
}

/// Scales a matrix so its first nonzero entry is 1.
pub fn projective_normal<F: Field>(m: &Matrix<F>) -> Matrix<F> {
    match m.entries().iter().find(|x| !x.is_zero()) {
        Some(x) => m.scale(&x.inv()),
        None => m.clone(),
    }
}

struct Group<F: Field> {
    elems: Vec<Matrix<F>>,
    index: HashMap<Matrix<F>, usize>,
}

/// Multiplication table of a closed group.
struct Table {
    mul: Vec<Vec<usize>>,
}

impl Table {
    fn new<F: Field>(g: &Group<F>) -> Self {
        let mul = g
            .elems
            .iter()
            .map(|a| {
                g.elems
                    .iter()
                    .map(|b| g.index[&projective_normal(&a.mul(b))])
                    .collect()
            })
            .collect();
        Table { mul }
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    fn len(&self) -> usize {
        self.mul.len()
    }
}

/// Breadth-first closure of the projective images of `gens`.
fn closure<F: Field>(gens: &[Matrix<F>], cap: usize) -> Option<Group<F>> {
    let proto = gens[0].proto().clone();
    let id = Matrix::identity(gens[0].rows(), &proto);
    let gens: Vec<Matrix<F>> = gens.iter().map(projective_normal).collect();
    let mut elems = vec![id.clone()];
    let mut index = HashMap::from([(id, 0)]);
    let mut head = 0;
    while head < elems.len() {
        for g in &gens {
            let p = projective_normal(&elems[head].mul(g));
            if !index.contains_key(&p) {
                if elems.len() == cap {
                    return None;
                }
                index.insert(p.clone(), elems.len());
                elems.push(p);
            }
        }
        head += 1;
    }
    Some(Group { elems, index })
}

fn inverse_table(g: &Table) -> Vec<usize> {
    (0..g.len())
        .map(|a| {
            (0..g.len())
                .find(|&b| g.mul(a, b) == 0)
                .expect("finite group")
        })
        .collect()
}

/// Subgroup generated by the conjugates of `x`.
fn normal_closure(g: &Table, inv: &[usize], x: usize) -> usize {
    let n = g.len();
    let conj: Vec<usize> = {
        let mut v: Vec<usize> = (0..n).map(|h| g.mul(g.mul(h, x), inv[h])).collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    let mut inside = vec![false; n];
    inside[0] = true;
    let mut members = vec![0];
    let mut head = 0;
    while head < members.len() {
        for &c in &conj {
            let p = g.mul(members[head], c);
            if !inside[p] {
                inside[p] = true;
                members.push(p);
            }
        }
        head += 1;
    }
    members.len()
}

/// A nontrivial group is simple when every nontrivial conjugacy class
/// generates the whole group.
fn is_simple(g: &Table) -> bool {
    let n = g.len();
    if n == 1 {
        return false;
    }
    let inv = inverse_table(g);
    (1..n).all(|x| normal_closure(g, &inv, x) == n)
}

pub fn projective_image_order<F: Field>(gens: &[Matrix<F>], cap: usize) -> ImageOrder {
    match closure(gens, cap) {
        Some(g) => {
            let order = g.elems.len();
            ImageOrder::Finite {
                order,
                simple: is_simple(&Table::new(&g)),
            }
        }
        None => ImageOrder::ExceedsCap { cap },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rational;

    fn perm(p: &[usize]) -> Matrix<Rational> {
        let z = Rational::int(0);
        Matrix::from_fn(p.len(), p.len(), &z, |i, j| {
            if p[j] == i {
                Rational::int(1)
            } else {
                Rational::int(0)
            }
        })
    }

    #[test]
    fn symmetric_and_alternating_groups() {
        // S4 from a transposition and a 4-cycle; not simple
        let s4 = projective_image_order(&[perm(&[1, 0, 2, 3]), perm(&[1, 2, 3, 0])], 100);
        assert_eq!(
            s4,
            ImageOrder::Finite {
                order: 24,
                simple: false
            }
        );
        // A5 from (123) and (12345)
        let a5 = projective_image_order(&[perm(&[1, 2, 0, 3, 4]), perm(&[1, 2, 3, 4, 0])], 100);
        assert_eq!(
            a5,
            ImageOrder::Finite {
                order: 60,
                simple: true
            }
        );
        assert_eq!(
            projective_image_order(&[perm(&[1, 2, 3, 4, 0])], 3),
            ImageOrder::ExceedsCap { cap: 3 }
        );
    }

    #[test]
    fn scalars_are_trivial() {
        let z = Rational::int(0);
        let g = Matrix::identity(2, &z).scale(&Rational::int(5));
        assert_eq!(
            projective_image_order(&[g], 10),
            ImageOrder::Finite {
                order: 1,
                simple: false
            }
        );
    }
}
