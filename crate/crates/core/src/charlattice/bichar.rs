//! Bi-characters: a weight multiset of a torus `T` together with restriction to a subtorus.

use serde::{Deserialize, Serialize};

use super::lattice::{coordinates, hnf, mat_mul, rational_rank, vec_mul, IntMat};
use super::{search_unimodular, Verdict, Weight};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormalBiCharacter {
    pub rank: usize,
    pub weights: Vec<Weight>,
    /// `s × r` matrix sending a character of `T` to its restriction, `w ↦ R·w`.
    pub restriction: IntMat,
}

/// Weights and restriction re-expressed in bases of the weight lattice and of its image.
struct Normalized {
    coords: Vec<Weight>,
    k: usize,
    /// `k × k'` restriction on normalized coordinates (surjective).
    phi: IntMat,
    kernel: IntMat,
    k_res: usize,
}

impl FormalBiCharacter {
    pub fn new(rank: usize, weights: Vec<Weight>, restriction: IntMat) -> Result<Self> {
        if weights.iter().any(|w| w.len() != rank) || restriction.iter().any(|r| r.len() != rank) {
            return Err(Error::DimensionMismatch("weight or restriction row of the wrong length".into()));
        }
        if rational_rank(&restriction, rank) != restriction.len() {
            return Err(Error::InvalidInput("restriction must have full row rank".into()));
        }
        Ok(FormalBiCharacter { rank, weights, restriction })
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    /// Restricted weights `R·w`.
    pub fn restricted_weights(&self) -> Vec<Weight> {
        self.weights
            .iter()
            .map(|w| self.restriction.iter().map(|row| row.iter().zip(w).map(|(a, b)| a * b).sum()).collect())
            .collect()
    }

    fn normalized(&self) -> Normalized {
        let h = hnf(&self.weights, self.rank);
        let basis = h.basis();
        let coords = self.weights.iter().map(|w| coordinates(&basis, &h.pivots, w).unwrap()).collect();
        let s = self.restriction.len();
        let rt: IntMat = (0..self.rank).map(|j| self.restriction.iter().map(|row| row[j]).collect()).collect();
        let br = if basis.is_empty() { Vec::new() } else { mat_mul(&basis, &rt) };
        let h2 = hnf(&br, s);
        let b2 = h2.basis();
        let phi: IntMat = br.iter().map(|row| coordinates(&b2, &h2.pivots, row).unwrap()).collect();
        let k_res = b2.len();
        let kernel = hnf(&phi, k_res).left_kernel();
        Normalized { coords, k: basis.len(), phi, kernel, k_res }
    }
}

/// Equivalence of bi-characters: a unimodular `g` on the weight lattice carrying weights to
/// weights, for which some unimodular `h` on the restricted lattice satisfies `g·Φ_b = Φ_a·h`.
///
/// With `Φ_a` surjective, `h` exists exactly when `g·Φ_b` kills `ker Φ_a`.
pub fn bifc_equivalent(a: &FormalBiCharacter, b: &FormalBiCharacter, budget: u64) -> Verdict {
    if a.dim() != b.dim() {
        return Verdict::Inequivalent;
    }
    let (na, nb) = (a.normalized(), b.normalized());
    if na.k != nb.k || na.k_res != nb.k_res {
        return Verdict::Inequivalent;
    }
    let k = na.k;
    let accept = |g: &IntMat| {
        let gphi = if k == 0 { Vec::new() } else { mat_mul(g, &nb.phi) };
        na.kernel.iter().all(|v| vec_mul(v, &gphi, nb.k_res).iter().all(|&x| x == 0))
    };
    search_unimodular(&na.coords, &nb.coords, k, budget, &accept)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charlattice::lattice::det;
    use crate::charlattice::{fc_equivalent, FormalCharacter, DEFAULT_BUDGET};

    fn all_unimodular(k: usize) -> Vec<IntMat> {
        let entries = k * k;
        let mut out = Vec::new();
        let range: Vec<i64> = (-2..=2).collect();
        let mut idx = vec![0usize; entries];
        loop {
            let m: IntMat = (0..k).map(|i| (0..k).map(|j| range[idx[i * k + j]]).collect()).collect();
            if det(&m).abs() == 1 {
                out.push(m);
            }
            let mut p = 0;
            while p < entries {
                idx[p] += 1;
                if idx[p] < range.len() {
                    break;
                }
                idx[p] = 0;
                p += 1;
            }
            if p == entries {
                return out;
            }
        }
    }

    /// Exhaustive search over small `g` and `h` on the normalized data.
    fn oracle(a: &FormalBiCharacter, b: &FormalBiCharacter) -> bool {
        let (na, nb) = (a.normalized(), b.normalized());
        if a.dim() != b.dim() || na.k != nb.k || na.k_res != nb.k_res {
            return false;
        }
        let mut target = nb.coords.clone();
        target.sort();
        for g in all_unimodular(na.k) {
            let mut img: Vec<Weight> = na.coords.iter().map(|w| vec_mul(w, &g, na.k)).collect();
            img.sort();
            if img != target {
                continue;
            }
            let lhs = mat_mul(&g, &nb.phi);
            if all_unimodular(na.k_res).iter().any(|h| mat_mul(&na.phi, h) == lhs) {
                return true;
            }
        }
        false
    }

    fn gl2_std() -> FormalBiCharacter {
        FormalBiCharacter::new(2, vec![vec![1, 0], vec![0, 1]], vec![vec![1, -1]]).unwrap()
    }

    #[test]
    fn self_equivalence_and_dimension_mismatch() {
        let a = gl2_std();
        assert!(bifc_equivalent(&a, &a, DEFAULT_BUDGET).is_equivalent());
        let b = FormalBiCharacter::new(2, vec![vec![1, 0], vec![0, 1], vec![0, 0]], vec![vec![1, -1]]).unwrap();
        assert_eq!(bifc_equivalent(&a, &b, DEFAULT_BUDGET), Verdict::Inequivalent);
    }

    #[test]
    fn gl2_against_a_product_presentation() {
        // SL_2 x G_m acting through (t, z) -> diag(tz, t^{-1}z): the same torus as GL_2.
        let prod = FormalBiCharacter::new(2, vec![vec![1, 1], vec![-1, 1]], vec![vec![1, 0]]).unwrap();
        assert!(bifc_equivalent(&gl2_std(), &prod, DEFAULT_BUDGET).is_equivalent());
        assert!(oracle(&gl2_std(), &prod));
        // Same full weights, but restricting to the first coordinate: {1, 0} instead of {1, -1}.
        let other = FormalBiCharacter::new(2, vec![vec![1, 0], vec![0, 1]], vec![vec![1, 0]]).unwrap();
        assert_eq!(bifc_equivalent(&gl2_std(), &other, DEFAULT_BUDGET), Verdict::Inequivalent);
        assert!(!oracle(&gl2_std(), &other));
        let full = |x: &FormalBiCharacter| FormalCharacter::new(x.rank, x.weights.clone()).unwrap();
        assert!(fc_equivalent(&full(&gl2_std()), &full(&other), DEFAULT_BUDGET).is_equivalent());
    }

    #[test]
    fn verdicts_agree_with_the_oracle_on_rank_two_data() {
        let weights = [
            vec![vec![1, 0], vec![0, 1], vec![-1, -1]],
            vec![vec![1, 0], vec![-1, 0], vec![0, 1]],
            vec![vec![2, 1], vec![1, 1], vec![0, 1]],
        ];
        let restrictions = [vec![vec![1, 0]], vec![vec![0, 1]], vec![vec![1, 1]], vec![vec![1, -1]]];
        let mut all = Vec::new();
        for w in &weights {
            for r in &restrictions {
                all.push(FormalBiCharacter::new(2, w.clone(), r.clone()).unwrap());
            }
        }
        for a in &all {
            for b in &all {
                let v = bifc_equivalent(a, b, DEFAULT_BUDGET);
                assert_eq!(v.decided(), Some(oracle(a, b)), "{a:?} vs {b:?}");
                if v.is_equivalent() {
                    let fa = FormalCharacter::new(2, a.weights.clone()).unwrap();
                    let fb = FormalCharacter::new(2, b.weights.clone()).unwrap();
                    assert!(fc_equivalent(&fa, &fb, DEFAULT_BUDGET).is_equivalent());
                    let ra = FormalCharacter::new(1, a.restricted_weights()).unwrap();
                    let rb = FormalCharacter::new(1, b.restricted_weights()).unwrap();
                    assert!(fc_equivalent(&ra, &rb, DEFAULT_BUDGET).is_equivalent());
                }
            }
        }
    }
}
