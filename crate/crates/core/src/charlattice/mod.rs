//! Formal characters: multisets of integer weights of a diagonal torus, up to
//! unimodular change of the character lattice.

pub mod bichar;
pub mod lattice;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use lattice::{coordinates, det, hnf, rational_inverse, rational_rank, vec_mul, IntMat, Q};

pub use bichar::{bifc_equivalent, FormalBiCharacter};

pub type Weight = Vec<i64>;

pub const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FormalCharacter {
    rank: usize,
    weights: Vec<Weight>,
}

impl FormalCharacter {
    pub fn new(rank: usize, weights: Vec<Weight>) -> Result<Self> {
        if let Some(w) = weights.iter().find(|w| w.len() != rank) {
            return Err(Error::DimensionMismatch(format!("weight {w:?} in rank {rank}")));
        }
        Ok(FormalCharacter { rank, weights })
    }

    /// Rank-one character from scalar weights.
    pub fn from_scalars(ws: &[i64]) -> Self {
        FormalCharacter { rank: 1, weights: ws.iter().map(|&w| vec![w]).collect() }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
    pub fn dim(&self) -> usize {
        self.weights.len()
    }
    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    /// Rank of the lattice spanned by the weights.
    pub fn span_rank(&self) -> usize {
        rational_rank(&self.weights, self.rank)
    }

    /// Weights in a Hermite basis of their span, sorted by L1 norm and then lexicographically.
    pub fn normalize(&self) -> FormalCharacter {
        let h = hnf(&self.weights, self.rank);
        let basis = h.basis();
        let mut weights: Vec<Weight> = self
            .weights
            .iter()
            .map(|w| coordinates(&basis, &h.pivots, w).expect("weight lies in its own span"))
            .collect();
        sort_graded(&mut weights);
        FormalCharacter { rank: basis.len(), weights }
    }

    pub fn dual(&self) -> FormalCharacter {
        FormalCharacter { rank: self.rank, weights: self.weights.iter().map(|w| w.iter().map(|x| -x).collect()).collect() }
    }

    /// Direct sum of representations of a product of tori: weights are zero-padded.
    pub fn sum(&self, other: &FormalCharacter) -> FormalCharacter {
        let rank = self.rank + other.rank;
        let mut weights = Vec::with_capacity(self.dim() + other.dim());
        for w in &self.weights {
            let mut v = w.clone();
            v.resize(rank, 0);
            weights.push(v);
        }
        for w in &other.weights {
            let mut v = vec![0; self.rank];
            v.extend(w);
            weights.push(v);
        }
        FormalCharacter { rank, weights }
    }

    /// External tensor product: every pair of weights, coordinates concatenated.
    pub fn tensor(&self, other: &FormalCharacter) -> FormalCharacter {
        let mut weights = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.weights {
            for b in &other.weights {
                let mut v = a.clone();
                v.extend(b);
                weights.push(v);
            }
        }
        FormalCharacter { rank: self.rank + other.rank, weights }
    }

    /// Direct sum of two representations of the same torus.
    pub fn union(&self, other: &FormalCharacter) -> Result<FormalCharacter> {
        if self.rank != other.rank {
            return Err(Error::DimensionMismatch(format!("ranks {} and {}", self.rank, other.rank)));
        }
        let mut weights = self.weights.clone();
        weights.extend(other.weights.iter().cloned());
        Ok(FormalCharacter { rank: self.rank, weights })
    }

    pub fn predicates(&self) -> FcPredicates {
        let counts = multiset(&self.weights);
        let zero = vec![0; self.rank];
        let neg = |w: &Weight| -> Weight { w.iter().map(|x| -x).collect() };
        FcPredicates {
            zero_weight_count: counts.get(&zero).copied().unwrap_or(0),
            is_symmetric: counts.iter().all(|(w, c)| counts.get(&neg(w)) == Some(c)),
            antipodal_free: counts.keys().all(|w| *w == zero || !counts.contains_key(&neg(w))),
        }
    }

    /// Whether two distinct weights average to a third: `w1 + w2 = 2·w3`.
    pub fn has_midpoint_relation(&self) -> bool {
        let counts = multiset(&self.weights);
        let distinct: Vec<&Weight> = counts.keys().collect();
        for (i, a) in distinct.iter().enumerate() {
            for b in &distinct[i + 1..] {
                let s: Vec<i64> = a.iter().zip(b.iter()).map(|(x, y)| x + y).collect();
                if s.iter().all(|x| x % 2 == 0) {
                    let half: Weight = s.iter().map(|x| x / 2).collect();
                    if counts.contains_key(&half) {
                        return true;
                    }
                }
            }
        }
        false
    }

    /// Image under `w ↦ w · g`.
    pub fn transform(&self, g: &IntMat) -> FormalCharacter {
        let cols = g.first().map_or(0, |r| r.len());
        FormalCharacter { rank: cols, weights: self.weights.iter().map(|w| vec_mul(w, g, cols)).collect() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FcPredicates {
    pub zero_weight_count: usize,
    pub is_symmetric: bool,
    pub antipodal_free: bool,
}

pub fn sort_graded(ws: &mut [Weight]) {
    ws.sort_by(|a, b| {
        let na: i64 = a.iter().map(|x| x.abs()).sum();
        let nb: i64 = b.iter().map(|x| x.abs()).sum();
        na.cmp(&nb).then_with(|| a.cmp(b))
    });
}

fn multiset(ws: &[Weight]) -> BTreeMap<Weight, usize> {
    let mut m = BTreeMap::new();
    for w in ws {
        *m.entry(w.clone()).or_insert(0) += 1;
    }
    m
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    /// Carries the unimodular map, acting on normalized coordinates by `w ↦ w · g`.
    Equivalent { map: IntMat },
    Inequivalent,
    Undecided { candidates: u64 },
}

impl Verdict {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, Verdict::Equivalent { .. })
    }
    pub fn decided(&self) -> Option<bool> {
        match self {
            Verdict::Equivalent { .. } => Some(true),
            Verdict::Inequivalent => Some(false),
            Verdict::Undecided { .. } => None,
        }
    }
}

/// Search for a unimodular `g` with `a·g = b` as multisets, subject to `accept(g)`.
///
/// Both inputs are in normalized coordinates of the same rank `k`. An independent set of
/// `k` distinct weights of `a` must go to distinct weights of `b` of equal multiplicity,
/// and those images determine `g`.
pub(crate) fn search_unimodular(
    a: &[Weight],
    b: &[Weight],
    k: usize,
    budget: u64,
    accept: &dyn Fn(&IntMat) -> bool,
) -> Verdict {
    if a.len() != b.len() {
        return Verdict::Inequivalent;
    }
    let ma = multiset(a);
    let mb = multiset(b);
    let mut ca: Vec<usize> = ma.values().copied().collect();
    let mut cb: Vec<usize> = mb.values().copied().collect();
    ca.sort();
    cb.sort();
    if ca != cb {
        return Verdict::Inequivalent;
    }
    if k == 0 {
        let id: IntMat = Vec::new();
        return if accept(&id) { Verdict::Equivalent { map: id } } else { Verdict::Inequivalent };
    }
    let mut selected: Vec<(&Weight, usize)> = Vec::new();
    for (w, &c) in &ma {
        let mut rows: Vec<Weight> = selected.iter().map(|(v, _)| (*v).clone()).collect();
        rows.push(w.clone());
        if rational_rank(&rows, k) == rows.len() {
            selected.push((w, c));
        }
        if selected.len() == k {
            break;
        }
    }
    let a_sel: IntMat = selected.iter().map(|(w, _)| (*w).clone()).collect();
    let a_inv = rational_inverse(&a_sel).expect("independent selection");
    let targets: Vec<(&Weight, usize)> = mb.iter().map(|(w, &c)| (w, c)).collect();
    let mut b_sorted = b.to_vec();
    b_sorted.sort();

    let mut count = 0u64;
    let mut choice: Vec<usize> = Vec::with_capacity(k);
    let mut found: Option<IntMat> = None;
    enumerate(&selected, &targets, &mut choice, &mut |choice| {
        count += 1;
        if count > budget {
            return Step::Stop;
        }
        let b_sel: Vec<&Weight> = choice.iter().map(|&j| targets[j].0).collect();
        let Some(g) = solve_integral(&a_inv, &b_sel, k) else { return Step::Continue };
        if det(&g).abs() != 1 {
            return Step::Continue;
        }
        let mut img: Vec<Weight> = a.iter().map(|w| vec_mul(w, &g, k)).collect();
        img.sort();
        if img == b_sorted && accept(&g) {
            found = Some(g);
            return Step::Stop;
        }
        Step::Continue
    });
    match found {
        Some(map) => Verdict::Equivalent { map },
        None if count > budget => Verdict::Undecided { candidates: budget },
        None => Verdict::Inequivalent,
    }
}

enum Step {
    Continue,
    Stop,
}

/// Depth-first over injective, multiplicity-preserving assignments; returns false if stopped.
fn enumerate(
    selected: &[(&Weight, usize)],
    targets: &[(&Weight, usize)],
    choice: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]) -> Step,
) -> bool {
    if choice.len() == selected.len() {
        return matches!(visit(choice), Step::Continue);
    }
    let need = selected[choice.len()].1;
    for j in 0..targets.len() {
        if targets[j].1 != need || choice.contains(&j) {
            continue;
        }
        choice.push(j);
        let go_on = enumerate(selected, targets, choice, visit);
        choice.pop();
        if !go_on {
            return false;
        }
    }
    true
}

fn solve_integral(a_inv: &[Vec<Q>], b_sel: &[&Weight], k: usize) -> Option<IntMat> {
    let mut g = vec![vec![0i64; k]; k];
    for i in 0..k {
        for j in 0..k {
            let mut s = Q::from_integer(0);
            for (t, bt) in b_sel.iter().enumerate() {
                s += a_inv[i][t] * Q::from_integer(bt[j] as i128);
            }
            if !s.is_integer() {
                return None;
            }
            g[i][j] = s.to_integer() as i64;
        }
    }
    Some(g)
}

pub fn fc_equivalent(a: &FormalCharacter, b: &FormalCharacter, budget: u64) -> Verdict {
    if a.dim() != b.dim() {
        return Verdict::Inequivalent;
    }
    let (na, nb) = (a.normalize(), b.normalize());
    if na.rank != nb.rank {
        return Verdict::Inequivalent;
    }
    search_unimodular(&na.weights, &nb.weights, na.rank, budget, &|_| true)
}
