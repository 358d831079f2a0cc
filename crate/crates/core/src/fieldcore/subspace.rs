//! Incrementally echelonised subspaces and spinning under matrix generators.

use super::field::{Elem, FieldRef};
use super::mat::Mat;

/// A subspace of `F^n` kept as reduced echelon rows.
#[derive(Clone, Debug)]
pub struct Subspace {
    field: FieldRef,
    n: usize,
    rows: Vec<Vec<Elem>>,
    pivots: Vec<usize>,
    /// Vectors in insertion order (the ones that enlarged the span).
    basis: Vec<Vec<Elem>>,
}

impl Subspace {
    pub fn new(field: &FieldRef, n: usize) -> Self {
        Subspace { field: field.clone(), n, rows: Vec::new(), pivots: Vec::new(), basis: Vec::new() }
    }

    pub fn from_vectors(field: &FieldRef, n: usize, vecs: &[Vec<Elem>]) -> Self {
        let mut s = Subspace::new(field, n);
        for v in vecs {
            s.insert(v);
        }
        s
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }
    pub fn dim(&self) -> usize {
        self.rows.len()
    }
    pub fn is_full(&self) -> bool {
        self.rows.len() == self.n
    }
    /// Echelon basis.
    pub fn echelon(&self) -> &[Vec<Elem>] {
        &self.rows
    }
    /// Basis in insertion order.
    pub fn basis(&self) -> &[Vec<Elem>] {
        &self.basis
    }

    /// Residual of `v` after clearing the pivot positions.
    pub fn reduce(&self, v: &[Elem]) -> Vec<Elem> {
        let f = &self.field;
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = w[p];
            if c == 0 {
                continue;
            }
            for (x, &r) in w.iter_mut().zip(row) {
                if r != 0 {
                    *x = f.sub(*x, f.mul(c, r));
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[Elem]) -> bool {
        let f = self.field.clone();
        let mut w = self.reduce(v);
        let Some(p) = w.iter().position(|&x| x != 0) else { return false };
        let inv = f.inv(w[p]).unwrap();
        for x in w.iter_mut() {
            *x = f.mul(*x, inv);
        }
        for row in self.rows.iter_mut() {
            let c = row[p];
            if c == 0 {
                continue;
            }
            for (x, &r) in row.iter_mut().zip(&w) {
                if r != 0 {
                    *x = f.sub(*x, f.mul(c, r));
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, w);
        self.basis.push(v.to_vec());
        true
    }

    /// Smallest subspace containing `self` and stable under every generator.
    pub fn spin(mut self, gens: &[Mat]) -> Self {
        let mut next = 0;
        while next < self.basis.len() {
            let v = self.basis[next].clone();
            for g in gens {
                let w = g.mul_vec(&v);
                self.insert(&w);
                if self.is_full() {
                    return self;
                }
            }
            next += 1;
        }
        self
    }

    pub fn is_invariant(&self, gens: &[Mat]) -> bool {
        gens.iter().all(|g| self.rows.iter().all(|r| self.contains(&g.mul_vec(r))))
    }

    /// `{w : w·v = 0 for all v in self}`.
    pub fn annihilator(&self) -> Subspace {
        let basis = if self.rows.is_empty() {
            (0..self.n)
                .map(|i| {
                    let mut e = vec![0; self.n];
                    e[i] = 1;
                    e
                })
                .collect()
        } else {
            Mat::from_rows(&self.field, self.n, &self.rows).nullspace()
        };
        Subspace::from_vectors(&self.field, self.n, &basis)
    }

    pub fn same_as(&self, other: &Subspace) -> bool {
        self.rows == other.rows
    }

    /// Extends the echelon basis to a basis of `F^n` with standard vectors.
    pub fn complement_basis(&self) -> Vec<Vec<Elem>> {
        (0..self.n)
            .filter(|c| !self.pivots.contains(c))
            .map(|c| {
                let mut e = vec![0; self.n];
                e[c] = 1;
                e
            })
            .collect()
    }
}

/// Spin a single vector under the generators.
pub fn spin_vector(field: &FieldRef, v: &[Elem], gens: &[Mat]) -> Subspace {
    Subspace::from_vectors(field, v.len(), &[v.to_vec()]).spin(gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fieldcore::field::Field;

    #[test]
    fn spin_of_fixed_vector_is_a_line() {
        let f = Field::new(7, 1).unwrap();
        // cyclic permutation of coordinates
        let p = Mat::square_from_ints(&f, &[0, 0, 1, 1, 0, 0, 0, 1, 0]).unwrap();
        let s = spin_vector(&f, &[1, 1, 1], std::slice::from_ref(&p));
        assert_eq!(s.dim(), 1);
        assert!(s.is_invariant(std::slice::from_ref(&p)));
        let t = spin_vector(&f, &[1, 0, 0], &[p]);
        assert!(t.is_full());
        let ann = s.annihilator();
        assert_eq!(ann.dim(), 2);
        assert!(ann.contains(&[1, 6, 0]));
    }
}
