//! Dense matrices over exact scalars.

use std::fmt;

use crate::arith::{Field, Poly, Scalar, Q};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T: Scalar> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
    zero: T,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize, proto: &T) -> Self {
        let zero = proto.zero_like();
        Matrix {
            rows,
            cols,
            data: vec![zero.clone(); rows * cols],
            zero,
        }
    }

    pub fn identity(n: usize, proto: &T) -> Self {
        let mut m = Self::zeros(n, n, proto);
        for i in 0..n {
            m.data[i * n + i] = proto.one_like();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>, proto: &T) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
            zero: proto.zero_like(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, proto: &T, f: impl Fn(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            data,
            zero: proto.zero_like(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn proto(&self) -> &T {
        &self.zero
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: T) {
        let k = i * self.cols + j;
        self.data[k] = self.data[k].clone() + v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, o.cols, &self.zero);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        out.add_at(i, j, a.clone() * b.clone());
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(self.zero.clone(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let data = self
            .data
            .iter()
            .zip(&o.data)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        Matrix {
            data,
            ..self.clone()
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let data = self
            .data
            .iter()
            .zip(&o.data)
            .map(|(a, b)| a.clone() - b.clone())
            .collect();
        Matrix {
            data,
            ..self.clone()
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        let data = self.data.iter().map(|a| a.clone() * c.clone()).collect();
        Matrix {
            data,
            ..self.clone()
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, &self.zero, |i, j| {
            self.get(j, i).clone()
        })
    }

    pub fn map<U: Scalar>(&self, proto: &U, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
            zero: proto.zero_like(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| a.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let a = self.get(i, j);
                    if i == j {
                        a.is_one()
                    } else {
                        a.is_zero()
                    }
                })
            })
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(self.zero.clone(), |acc, i| acc + self.get(i, i).clone())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::identity(self.rows, &self.zero);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), &self.zero, |i, j| {
            self.get(rows[i], cols[j]).clone()
        })
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, o: &Self) -> Self {
        let (r, c) = (self.rows + o.rows, self.cols + o.cols);
        Self::from_fn(r, c, &self.zero, |i, j| {
            if i < self.rows && j < self.cols {
                self.get(i, j).clone()
            } else if i >= self.rows && j >= self.cols {
                o.get(i - self.rows, j - self.cols).clone()
            } else {
                self.zero.clone()
            }
        })
    }

    /// Columns of `self` followed by columns of `o`.
    pub fn hstack(&self, o: &Self) -> Self {
        assert_eq!(self.rows, o.rows);
        Self::from_fn(self.rows, self.cols + o.cols, &self.zero, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                o.get(i, j - self.cols).clone()
            }
        })
    }

    pub fn from_columns(cols: &[Vec<T>], rows: usize, proto: &T) -> Self {
        Self::from_fn(rows, cols.len(), proto, |i, j| cols[j][i].clone())
    }

    /// Characteristic polynomial `det(x I - A)` by the Faddeev–LeVerrier
    /// recursion, which only divides by integers.
    pub fn char_poly(&self) -> Poly<T> {
        assert!(self.is_square());
        let n = self.rows;
        let one = self.zero.one_like();
        let mut c = vec![self.zero.clone(); n + 1];
        c[n] = one.clone();
        let id = Self::identity(n, &self.zero);
        let mut m = Self::zeros(n, n, &self.zero);
        for k in 1..=n {
            m = self.mul(&m).add(&id.scale(&c[n - k + 1]));
            let am = self.mul(&m);
            let inv_k = one.from_rational_like(&Q::new((-1).into(), (k as i64).into()));
            c[n - k] = am.trace() * inv_k;
        }
        Poly::new(c, self.zero.clone())
    }
}

/// Result of Gaussian elimination.
pub struct Echelon<T: Scalar> {
    pub rref: Matrix<T>,
    pub pivots: Vec<usize>,
}

impl<T: Field> Matrix<T> {
    /// Reduced row echelon form with pivot columns.
    pub fn rref(&self) -> Echelon<T> {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a.get(i, col).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..a.cols {
                    a.data.swap(p * a.cols + j, r * a.cols + j);
                }
            }
            let inv = a.get(r, col).inv();
            for j in col..a.cols {
                let v = a.get(r, j).clone() * inv.clone();
                a.set(r, j, v);
            }
            for i in 0..a.rows {
                if i == r {
                    continue;
                }
                let f = a.get(i, col).clone();
                if f.is_zero() {
                    continue;
                }
                for j in col..a.cols {
                    let rj = a.get(r, j).clone();
                    if !rj.is_zero() {
                        let v = a.get(i, j).clone() - f.clone() * rj;
                        a.set(i, j, v);
                    }
                }
            }
            pivots.push(col);
            r += 1;
        }
        Echelon { rref: a, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of the right null space, as column vectors.
    pub fn kernel(&self) -> Vec<Vec<T>> {
        let Echelon { rref, pivots } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|j| !pivots.contains(j)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![self.zero.clone(); self.cols];
                v[f] = self.zero.one_like();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -rref.get(row, f).clone();
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Self::identity(n, &self.zero));
        let Echelon { rref, pivots } = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let idx: Vec<usize> = (0..n).collect();
        let cols: Vec<usize> = (n..2 * n).collect();
        Some(rref.submatrix(&idx, &cols))
    }

    /// Solves `self * X = b` for `X`, if consistent.
    pub fn solve(&self, b: &Self) -> Option<Self> {
        assert_eq!(self.rows, b.rows);
        let aug = self.hstack(b);
        let Echelon { rref, pivots } = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Self::zeros(self.cols, b.cols, &self.zero);
        for (row, &p) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(p, j, rref.get(row, self.cols + j).clone());
            }
        }
        Some(x)
    }
}

/// Incrementally maintained row-echelon basis of a subspace of `F^n`,
/// used to grow spans one vector at a time.
pub struct SpanBuilder<T: Field> {
    rows: Vec<(usize, Vec<T>)>,
}

impl<T: Field> Default for SpanBuilder<T> {
    fn default() -> Self {
        SpanBuilder { rows: Vec::new() }
    }
}

impl<T: Field> SpanBuilder<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v`; returns whether the span grew.
    pub fn insert(&mut self, mut v: Vec<T>) -> bool {
        for (p, row) in &self.rows {
            let f = v[*p].clone();
            if !f.is_zero() {
                for (a, b) in v.iter_mut().zip(row) {
                    if !b.is_zero() {
                        *a = a.clone() - f.clone() * b.clone();
                    }
                }
            }
        }
        let Some(p) = v.iter().position(|a| !a.is_zero()) else {
            return false;
        };
        let inv = v[p].inv();
        for a in v.iter_mut() {
            *a = a.clone() * inv.clone();
        }
        for (_, row) in self.rows.iter_mut() {
            let f = row[p].clone();
            if !f.is_zero() {
                for (a, b) in row.iter_mut().zip(&v) {
                    *a = a.clone() - f.clone() * b.clone();
                }
            }
        }
        self.rows.push((p, v));
        true
    }

    pub fn contains(&self, v: &[T]) -> bool {
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            let f = v[*p].clone();
            if !f.is_zero() {
                for (a, b) in v.iter_mut().zip(row) {
                    *a = a.clone() - f.clone() * b.clone();
                }
            }
        }
        v.iter().all(|a| a.is_zero())
    }
}

impl<T: Scalar> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{}\n{self}", self.rows, self.cols)
    }
}
