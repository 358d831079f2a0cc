//! Simple root systems of classical type, in fundamental-weight coordinates.
//!
//! A weight is the vector of its pairings with the simple coroots, so the simple root
//! `α_j` is column `j` of the Cartan matrix. Inner products are carried doubled (`J = 2(·,·)`)
//! so that everything stays integral.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimpleType {
    pub family: Family,
    pub rank: usize,
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl SimpleType {
    /// Accepts `A_r (r≥1)`, `B_r (r≥2)`, `C_r (r≥3)`, `D_r (r≥4)`; smaller ranks duplicate other types.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let min = match family {
            Family::A => 1,
            Family::B => 2,
            Family::C => 3,
            Family::D => 4,
        };
        if rank < min {
            return Err(Error::OutOfRange(format!("{family:?}{rank} is not a distinct simple type")));
        }
        Ok(SimpleType { family, rank })
    }

    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("cannot parse simple type {s:?}"));
        let mut chars = s.chars();
        let family = match chars.next().ok_or_else(bad)?.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            _ => return Err(bad()),
        };
        let rank = chars.as_str().parse().map_err(|_| bad())?;
        SimpleType::new(family, rank)
    }

    pub fn cartan(&self) -> Vec<Vec<i64>> {
        let r = self.rank;
        let mut c = vec![vec![0; r]; r];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        let chain = if self.family == Family::D { r - 1 } else { r };
        for i in 0..chain.saturating_sub(1) {
            c[i][i + 1] = -1;
            c[i + 1][i] = -1;
        }
        match self.family {
            Family::A => {}
            Family::B => c[r - 1][r - 2] = -2,
            Family::C => c[r - 2][r - 1] = -2,
            Family::D => {
                c[r - 3][r - 1] = -1;
                c[r - 1][r - 3] = -1;
            }
        }
        c
    }

    /// Squared lengths of the simple roots, long roots of type A/B/D normalised to 2.
    pub fn root_norms(&self) -> Vec<i64> {
        let r = self.rank;
        let mut d = vec![2; r];
        match self.family {
            Family::B => d[r - 1] = 1,
            Family::C => d[r - 1] = 4,
            _ => {}
        }
        d
    }

    /// Dynkin diagram automorphisms acting on fundamental-weight coordinates.
    pub fn diagram_automorphisms(&self) -> Vec<Vec<usize>> {
        let r = self.rank;
        let id: Vec<usize> = (0..r).collect();
        match self.family {
            Family::A if r > 1 => vec![id, (0..r).rev().collect()],
            Family::D => {
                let mut swap = id.clone();
                swap.swap(r - 2, r - 1);
                vec![id, swap]
            }
            _ => vec![id],
        }
    }
}

/// One simple factor with its root system data precomputed.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub ty: SimpleType,
    pub cartan: Vec<Vec<i64>>,
    pub norms: Vec<i64>,
    /// Positive roots as nonnegative integer combinations of simple roots.
    pub positive_roots: Vec<Vec<i64>>,
}

impl RootSystem {
    pub fn new(ty: SimpleType) -> Self {
        let cartan = ty.cartan();
        let norms = ty.root_norms();
        let positive_roots = positive_roots(&cartan);
        RootSystem { ty, cartan, norms, positive_roots }
    }

    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    /// Fundamental-weight coordinates of `Σ k_j α_j`.
    pub fn root_to_weight(&self, k: &[i64]) -> Vec<i64> {
        let r = self.rank();
        (0..r).map(|i| (0..r).map(|j| self.cartan[i][j] * k[j]).sum()).collect()
    }

    /// `J(ν, Σ c_j α_j) = Σ c_j ν_j |α_j|^2`.
    pub fn pair_with_root(&self, nu: &[i64], c: &[i64]) -> i64 {
        (0..self.rank()).map(|j| c[j] * nu[j] * self.norms[j]).sum()
    }

    /// `J(Σ a_i α_i, Σ b_j α_j)`.
    pub fn pair_roots(&self, a: &[i64], b: &[i64]) -> i64 {
        let r = self.rank();
        let mut s = 0;
        for (i, &ai) in a.iter().enumerate().take(r) {
            for (j, &bj) in b.iter().enumerate().take(r) {
                s += ai * bj * self.cartan[i][j] * self.norms[i];
            }
        }
        s
    }

    pub fn reflect(&self, nu: &[i64], i: usize) -> Vec<i64> {
        let c = nu[i];
        (0..self.rank()).map(|j| nu[j] - c * self.cartan[j][i]).collect()
    }

    /// The dominant weight in the Weyl orbit of `nu`.
    pub fn dominant_conjugate(&self, nu: &[i64]) -> Vec<i64> {
        let mut v = nu.to_vec();
        while let Some(i) = v.iter().position(|&x| x < 0) {
            v = self.reflect(&v, i);
        }
        v
    }

    /// `-w_0 λ`.
    pub fn dual_weight(&self, lambda: &[i64]) -> Vec<i64> {
        let neg: Vec<i64> = lambda.iter().map(|x| -x).collect();
        self.dominant_conjugate(&neg)
    }
}

/// Positive roots by extending root strings height by height.
fn positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let r = cartan.len();
    let simple: Vec<Vec<i64>> = (0..r)
        .map(|i| {
            let mut e = vec![0; r];
            e[i] = 1;
            e
        })
        .collect();
    let mut all: Vec<Vec<i64>> = simple.clone();
    let mut known: HashSet<Vec<i64>> = all.iter().cloned().collect();
    let mut layer = simple;
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..r {
                // p: how far the α_i-string extends downwards from β
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..r).map(|j| cartan[i][j] * beta[j]).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up.clone());
                        all.push(up);
                    }
                }
            }
        }
        layer = next;
    }
    all
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbers_of_positive_roots() {
        let cases = [
            (Family::A, 1, 1),
            (Family::A, 3, 6),
            (Family::A, 5, 15),
            (Family::B, 2, 4),
            (Family::B, 3, 9),
            (Family::C, 3, 9),
            (Family::D, 4, 12),
            (Family::D, 5, 20),
        ];
        for (f, r, count) in cases {
            let rs = RootSystem::new(SimpleType::new(f, r).unwrap());
            assert_eq!(rs.positive_roots.len(), count, "{f:?}{r}");
        }
    }

    #[test]
    fn symmetrised_form_is_symmetric() {
        for (f, r) in [(Family::B, 3), (Family::C, 4), (Family::D, 5)] {
            let rs = RootSystem::new(SimpleType::new(f, r).unwrap());
            for i in 0..r {
                for j in 0..r {
                    assert_eq!(rs.cartan[i][j] * rs.norms[i], rs.cartan[j][i] * rs.norms[j]);
                }
            }
        }
    }

    #[test]
    fn types_below_their_range_are_rejected() {
        assert!(SimpleType::new(Family::C, 2).is_err());
        assert!(SimpleType::new(Family::D, 3).is_err());
        assert_eq!(SimpleType::parse("b2").unwrap(), SimpleType { family: Family::B, rank: 2 });
        assert!(SimpleType::parse("E6").is_err());
    }
}
