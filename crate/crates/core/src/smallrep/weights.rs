//! Highest-weight representations: Weyl dimension, Freudenthal multiplicities, duality.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use super::rootdata::{RootSystem, SimpleType};
use crate::charlattice::FormalCharacter;
use crate::error::{Error, Result};

/// An irreducible representation of a product of simple simply-connected groups:
/// one dominant highest weight per factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IrrepLabel {
    pub factors: Vec<(SimpleType, Vec<i64>)>,
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|(t, l)| format!("{t}{l:?}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

impl IrrepLabel {
    pub fn new(factors: Vec<(SimpleType, Vec<i64>)>) -> Result<Self> {
        for (t, l) in &factors {
            if l.len() != t.rank {
                return Err(Error::DimensionMismatch(format!("{t} needs {} coordinates, got {}", t.rank, l.len())));
            }
            if l.iter().any(|&x| x < 0) {
                return Err(Error::NotDominant);
            }
        }
        Ok(IrrepLabel { factors })
    }

    pub fn simple(ty: SimpleType, lambda: Vec<i64>) -> Result<Self> {
        IrrepLabel::new(vec![(ty, lambda)])
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(|(t, _)| t.rank).sum()
    }
}

fn check(rs: &RootSystem, lambda: &[i64]) -> Result<()> {
    if lambda.len() != rs.rank() {
        return Err(Error::DimensionMismatch("highest weight length".into()));
    }
    if lambda.iter().any(|&x| x < 0) {
        return Err(Error::NotDominant);
    }
    Ok(())
}

/// `∏_{α>0} (λ+ρ, α) / (ρ, α)`, exactly.
pub fn weyl_dimension_simple(rs: &RootSystem, lambda: &[i64]) -> Result<u64> {
    check(rs, lambda)?;
    let shifted: Vec<i64> = lambda.iter().map(|x| x + 1).collect();
    let rho = vec![1; rs.rank()];
    let mut q = Ratio::<i128>::from_integer(1);
    for a in &rs.positive_roots {
        q *= Ratio::new(rs.pair_with_root(&shifted, a) as i128, rs.pair_with_root(&rho, a) as i128);
    }
    if !q.is_integer() {
        return Err(Error::InvariantViolation(format!("Weyl dimension {q} is not integral")));
    }
    Ok(q.to_integer() as u64)
}

pub fn weyl_dimension(rep: &IrrepLabel) -> Result<u64> {
    rep.factors.iter().try_fold(1u64, |acc, (t, l)| Ok(acc * weyl_dimension_simple(&RootSystem::new(*t), l)?))
}

/// Weight multiplicities of `V(λ)` for one simple factor, by Freudenthal's recursion.
///
/// Weights are indexed by their depth `k` below `λ` (`μ = λ - Σ k_j α_j`) and handled
/// level by level; every weight other than `λ` is reached from a weight one level up.
pub fn freudenthal_simple(rs: &RootSystem, lambda: &[i64]) -> Result<BTreeMap<Vec<i64>, u64>> {
    check(rs, lambda)?;
    let r = rs.rank();
    let shifted: Vec<i64> = lambda.iter().map(|x| x + 1).collect();
    let mut mult: HashMap<Vec<i64>, i64> = HashMap::new();
    mult.insert(vec![0; r], 1);
    let mut level = vec![vec![0; r]];
    let weight_of = |k: &[i64]| -> Vec<i64> {
        let drop = rs.root_to_weight(k);
        lambda.iter().zip(&drop).map(|(a, b)| a - b).collect()
    };
    while !level.is_empty() {
        let mut cands: HashSet<Vec<i64>> = HashSet::new();
        for k in &level {
            for i in 0..r {
                let mut c = k.clone();
                c[i] += 1;
                cands.insert(c);
            }
        }
        let mut cands: Vec<Vec<i64>> = cands.into_iter().collect();
        cands.sort();
        let mut next = Vec::new();
        for k in cands {
            let den = 2 * rs.pair_with_root(&shifted, &k) - rs.pair_roots(&k, &k);
            if den <= 0 {
                continue;
            }
            let mu = weight_of(&k);
            let mut num = 0i64;
            for a in &rs.positive_roots {
                let base = rs.pair_with_root(&mu, a);
                let aa = rs.pair_roots(a, a);
                let mut j = 1;
                loop {
                    let up: Vec<i64> = k.iter().zip(a).map(|(x, y)| x - j * y).collect();
                    if up.iter().any(|&x| x < 0) {
                        break;
                    }
                    if let Some(&m) = mult.get(&up) {
                        num += m * (base + j * aa);
                    }
                    j += 1;
                }
            }
            let num = 2 * num;
            if num % den != 0 {
                return Err(Error::InvariantViolation(format!("Freudenthal quotient {num}/{den} at depth {k:?}")));
            }
            let m = num / den;
            if m > 0 {
                mult.insert(k.clone(), m);
                next.push(k);
            }
        }
        level = next;
    }
    Ok(mult.into_iter().map(|(k, m)| (weight_of(&k), m as u64)).collect())
}

/// Full weight multiset, in fundamental-weight coordinates concatenated across factors.
pub fn freudenthal_weights(rep: &IrrepLabel) -> Result<FormalCharacter> {
    let mut acc = FormalCharacter::new(0, vec![vec![]])?;
    for (t, l) in &rep.factors {
        let rs = RootSystem::new(*t);
        let mut ws = Vec::new();
        for (w, m) in freudenthal_simple(&rs, l)? {
            for _ in 0..m {
                ws.push(w.clone());
            }
        }
        acc = acc.tensor(&FormalCharacter::new(t.rank, ws)?);
    }
    Ok(acc)
}

pub fn dual_label(rep: &IrrepLabel) -> IrrepLabel {
    IrrepLabel {
        factors: rep.factors.iter().map(|(t, l)| (*t, RootSystem::new(*t).dual_weight(l))).collect(),
    }
}

/// `λ = -w_0 λ` on every factor.
pub fn is_self_dual(rep: &IrrepLabel) -> Result<bool> {
    IrrepLabel::new(rep.factors.clone())?;
    Ok(dual_label(rep) == *rep)
}
