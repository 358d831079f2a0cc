//! Dense matrices over a finite field.

use std::fmt;

use super::field::{Elem, FieldRef};
use super::poly::Poly;
use crate::error::{Error, Result};

#[derive(Clone)]
pub struct Mat {
    field: FieldRef,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl PartialEq for Mat {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data && *self.field == *other.field
    }
}
impl Eq for Mat {}

impl std::hash::Hash for Mat {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.rows.hash(state);
        self.cols.hash(state);
        self.data.hash(state);
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat{:?}[", self.field)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        write!(f, "]")
    }
}

impl Mat {
    pub fn zero(field: &FieldRef, rows: usize, cols: usize) -> Self {
        Mat { field: field.clone(), rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: &FieldRef, n: usize) -> Self {
        let mut m = Mat::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn scalar(field: &FieldRef, n: usize, s: Elem) -> Self {
        let mut m = Mat::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, s);
        }
        m
    }

    pub fn diagonal(field: &FieldRef, diag: &[Elem]) -> Self {
        let mut m = Mat::zero(field, diag.len(), diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m.set(i, i, d);
        }
        m
    }

    /// Row-major field elements.
    pub fn from_elems(field: &FieldRef, rows: usize, cols: usize, data: Vec<Elem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {}x{} matrix",
                data.len(),
                rows,
                cols
            )));
        }
        if let Some(bad) = data.iter().find(|&&e| e >= field.order()) {
            return Err(Error::InvalidInput(format!("entry {bad} outside {:?}", field)));
        }
        Ok(Mat { field: field.clone(), rows, cols, data })
    }

    /// Row-major integers reduced into the prime subfield.
    pub fn from_ints(field: &FieldRef, rows: usize, cols: usize, ints: &[i64]) -> Result<Self> {
        let data = ints.iter().map(|&v| field.from_i64(v)).collect();
        Mat::from_elems(field, rows, cols, data)
    }

    pub fn square_from_ints(field: &FieldRef, ints: &[i64]) -> Result<Self> {
        let n = (ints.len() as f64).sqrt().round() as usize;
        if n * n != ints.len() {
            return Err(Error::DimensionMismatch(format!("{} entries is not a square", ints.len())));
        }
        Mat::from_ints(field, n, n, ints)
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: &FieldRef, rows: usize, cols: &[Vec<Elem>]) -> Self {
        let mut m = Mat::zero(field, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, &x) in c.iter().take(rows).enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    pub fn from_rows(field: &FieldRef, cols: usize, rows: &[Vec<Elem>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            data.extend_from_slice(&r[..cols]);
        }
        Mat { field: field.clone(), rows: rows.len(), cols, data }
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
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
    pub fn data(&self) -> &[Elem] {
        &self.data
    }
    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }
    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        self.data[r * self.cols + c] = v;
    }
    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }
    pub fn column(&self, c: usize) -> Vec<Elem> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }
    pub fn columns(&self) -> Vec<Vec<Elem>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&e| e == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == if i == j { 1 } else { 0 }))
    }

    pub fn is_scalar(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| if i == j { self.get(i, i) == self.get(0, 0) } else { self.get(i, j) == 0 })
            })
    }

    fn check_same_shape(&self, other: &Mat) {
        assert!(*self.field == *other.field, "field mismatch");
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
    }

    pub fn add(&self, other: &Mat) -> Mat {
        self.check_same_shape(other);
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Mat { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        self.check_same_shape(other);
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect();
        Mat { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: Elem) -> Mat {
        let f = &self.field;
        let data = self.data.iter().map(|&a| f.mul(a, s)).collect();
        Mat { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Mat {
        let f = &self.field;
        let data = self.data.iter().map(|&a| f.neg(a)).collect();
        Mat { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert!(*self.field == *other.field, "field mismatch");
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let f = &self.field;
        let mut out = vec![0; self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                let orow = other.row(k);
                let dst = &mut out[i * other.cols..(i + 1) * other.cols];
                for (d, &b) in dst.iter_mut().zip(orow) {
                    if b != 0 {
                        *d = f.add(*d, f.mul(a, b));
                    }
                }
            }
        }
        Mat { field: self.field.clone(), rows: self.rows, cols: other.cols, data: out }
    }

    pub fn mul_vec(&self, v: &[Elem]) -> Vec<Elem> {
        let f = &self.field;
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| if a == 0 || b == 0 { acc } else { f.add(acc, f.mul(a, b)) })
            })
            .collect()
    }

    pub fn transpose(&self) -> Mat {
        let mut m = Mat::zero(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.get(i, j));
            }
        }
        m
    }

    pub fn pow(&self, mut e: u128) -> Mat {
        assert!(self.is_square());
        let mut acc = Mat::identity(&self.field, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Row-reduced echelon form; returns the reduced matrix and its pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| m.get(i, c) != 0) else { continue };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = f.inv(m.get(r, c)).unwrap();
            for j in c..m.cols {
                let v = f.mul(m.get(r, j), inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor == 0 {
                    continue;
                }
                for j in c..m.cols {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{v : self · v = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<Elem>> {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![0; self.cols];
                v[fc] = 1;
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(r.get(row, fc));
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<Mat> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Mat::zero(&self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, 1);
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Mat::zero(&self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j));
            }
        }
        Some(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn det(&self) -> Elem {
        assert!(self.is_square());
        let f = &self.field;
        let mut m = self.clone();
        let n = self.rows;
        let mut det = 1;
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| m.get(i, c) != 0) else { return 0 };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                det = f.neg(det);
            }
            let pivot = m.get(c, c);
            det = f.mul(det, pivot);
            let inv = f.inv(pivot).unwrap();
            for i in c + 1..n {
                let factor = f.mul(m.get(i, c), inv);
                if factor == 0 {
                    continue;
                }
                for j in c..n {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(c, j)));
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    pub fn trace(&self) -> Elem {
        (0..self.rows).fold(0, |acc, i| self.field.add(acc, self.get(i, i)))
    }

    /// Characteristic polynomial `det(x·I - A)` via reduction to Hessenberg form.
    pub fn charpoly(&self) -> Poly {
        assert!(self.is_square());
        let f = &self.field;
        let n = self.rows;
        let mut h = self.clone();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| h.get(i, m - 1) != 0) else { continue };
            if i != m {
                for j in 0..n {
                    h.data.swap(i * n + j, m * n + j);
                }
                for r in 0..n {
                    h.data.swap(r * n + i, r * n + m);
                }
            }
            let inv = f.inv(h.get(m, m - 1)).unwrap();
            for i in m + 1..n {
                let u = f.mul(h.get(i, m - 1), inv);
                if u == 0 {
                    continue;
                }
                for j in 0..n {
                    let v = f.sub(h.get(i, j), f.mul(u, h.get(m, j)));
                    h.set(i, j, v);
                }
                for r in 0..n {
                    let v = f.add(h.get(r, m), f.mul(u, h.get(r, i)));
                    h.set(r, m, v);
                }
            }
        }
        // p_k = (x - h_{k,k}) p_{k-1} - Σ_{i=1}^{k-1} h_{k-i,k} (Π_{j=k-i+1}^{k} h_{j,j-1}) p_{k-i-1}
        let mut p: Vec<Poly> = vec![Poly::one()];
        for k in 0..n {
            let mut next = Poly::new(vec![f.neg(h.get(k, k)), 1]).mul(f, &p[k]);
            let mut prod = 1;
            for i in 1..=k {
                prod = f.mul(prod, h.get(k - i + 1, k - i));
                if prod == 0 {
                    break;
                }
                let coef = f.mul(h.get(k - i, k), prod);
                if coef != 0 {
                    next = next.sub(f, &p[k - i].scale(f, coef));
                }
            }
            p.push(next);
        }
        p.pop().unwrap()
    }

    /// `poly(A)` by Horner's rule.
    pub fn eval_poly(&self, poly: &Poly) -> Mat {
        let n = self.rows;
        let mut acc = Mat::zero(&self.field, n, n);
        for &c in poly.coeffs().iter().rev() {
            acc = acc.mul(self);
            for i in 0..n {
                let v = self.field.add(acc.get(i, i), c);
                acc.set(i, i, v);
            }
        }
        acc
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Mat) -> Mat {
        let (r, c) = (self.rows + other.rows, self.cols + other.cols);
        let mut m = Mat::zero(&self.field, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j));
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m.set(self.rows + i, self.cols + j, other.get(i, j));
            }
        }
        m
    }

    /// Kronecker product.
    pub fn kron(&self, other: &Mat) -> Mat {
        let f = &self.field;
        let mut m = Mat::zero(f, self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        m.set(i * other.rows + k, j * other.cols + l, f.mul(a, other.get(k, l)));
                    }
                }
            }
        }
        m
    }

    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Mat {
        let mut m = Mat::zero(&self.field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, self.get(r0 + i, c0 + j));
            }
        }
        m
    }

    /// Entry-wise image under a field embedding.
    pub fn map_field(&self, target: &FieldRef, map: impl Fn(Elem) -> Elem) -> Mat {
        Mat {
            field: target.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&e| map(e)).collect(),
        }
    }

    /// The commutator bracket `AB - BA`.
    pub fn bracket(&self, other: &Mat) -> Mat {
        self.mul(other).sub(&other.mul(self))
    }

    /// Entries as a flat vector, for use as a linear-algebra coordinate vector.
    pub fn to_vec(&self) -> Vec<Elem> {
        self.data.clone()
    }

    /// Integer entries (prime-field representatives) when the field is prime; otherwise encodings.
    pub fn to_ints(&self) -> Vec<i64> {
        self.data.iter().map(|&e| e as i64).collect()
    }
}

/// Dimension of the span of a list of vectors.
pub fn span_rank(field: &FieldRef, len: usize, vecs: &[Vec<Elem>]) -> usize {
    if vecs.is_empty() {
        return 0;
    }
    Mat::from_rows(field, len, vecs).rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fieldcore::field::Field;

    #[test]
    fn inverse_and_det() {
        let f = Field::new(7, 1).unwrap();
        let a = Mat::square_from_ints(&f, &[1, 2, 3, 0, 1, 4, 5, 6, 0]).unwrap();
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        // det = 1 over Z
        assert_eq!(a.det(), 1);
        let sing = Mat::square_from_ints(&f, &[1, 2, 2, 4]).unwrap();
        assert!(sing.inverse().is_none());
        assert_eq!(sing.nullspace().len(), 1);
    }

    #[test]
    fn charpoly_agrees_with_pointwise_determinant() {
        // Oracle: det(t·I - A) evaluated at every t of F_q.
        for (ell, d) in [(5u64, 1u32), (3, 2)] {
            let f = Field::new(ell, d).unwrap();
            let q = f.order();
            for seed in 0..15u32 {
                let n = 1 + (seed % 5) as usize;
                let data: Vec<u32> = (0..n * n).map(|i| (i as u32 * 7 + seed * 13 + i as u32 * i as u32) % q).collect();
                let a = Mat::from_elems(&f, n, n, data).unwrap();
                let cp = a.charpoly();
                assert_eq!(cp.degree(), Some(n));
                for t in f.elements() {
                    let m = Mat::scalar(&f, n, t).sub(&a);
                    assert_eq!(cp.eval(&f, t), m.det());
                }
                assert!(a.eval_poly(&cp).is_zero(), "Cayley-Hamilton");
            }
        }
    }
}
