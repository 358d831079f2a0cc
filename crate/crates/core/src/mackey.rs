//! Induction and restriction between a finite group and a subgroup, Mackey's
//! irreducibility test and the Clifford decomposition over a normal subgroup.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fieldcore::hom::{commutant, hom_dim, intertwiners};
use crate::fieldcore::meataxe::{distinct_factors, is_irreducible, is_semisimple};
use crate::fieldcore::{Elem, FieldRef, FinMatGroup, Mat, MeatAxeConfig, ModuleRep, Subspace};

/// A subgroup of a materialised group with its left cosets.
#[derive(Clone, Debug)]
pub struct SubgroupDatum {
    ambient: FinMatGroup,
    subgroup: FinMatGroup,
    transversal: Vec<usize>,
    coset_of: Vec<usize>,
}

impl SubgroupDatum {
    /// `gens` must be elements of `ambient`, which must be materialised.
    pub fn new(ambient: &FinMatGroup, gens: &[Mat]) -> Result<Self> {
        let els = ambient.elements().ok_or_else(|| Error::InvalidInput("group not materialised".into()))?;
        if gens.iter().any(|g| els.index_of(g).is_none()) {
            return Err(Error::InvalidInput("subgroup generator outside the group".into()));
        }
        let subgroup = FinMatGroup::generated_by(ambient.field(), ambient.n(), gens, els.len() + 1)?;
        let mut coset_of = vec![usize::MAX; els.len()];
        let mut transversal = Vec::new();
        for (i, g) in els.list().iter().enumerate() {
            if coset_of[i] != usize::MAX {
                continue;
            }
            let k = transversal.len();
            transversal.push(i);
            for h in subgroup.element_list() {
                coset_of[els.index_of(&g.mul(h)).unwrap()] = k;
            }
        }
        let datum = SubgroupDatum { ambient: ambient.clone(), subgroup, transversal, coset_of };
        debug_assert_eq!(datum.index() * datum.subgroup.order().unwrap(), els.len());
        Ok(datum)
    }

    pub fn ambient(&self) -> &FinMatGroup {
        &self.ambient
    }
    pub fn subgroup(&self) -> &FinMatGroup {
        &self.subgroup
    }
    pub fn index(&self) -> usize {
        self.transversal.len()
    }
    /// Ambient element indices of the left coset representatives; the first is the identity.
    pub fn transversal(&self) -> &[usize] {
        &self.transversal
    }
    pub fn coset_of(&self, element: usize) -> usize {
        self.coset_of[element]
    }

    fn ambient_element(&self, i: usize) -> &Mat {
        &self.ambient.element_list()[i]
    }

    fn sub_index(&self, m: &Mat) -> Option<usize> {
        self.subgroup.elements().unwrap().index_of(m)
    }

    /// Representatives of the double cosets `HgH`, smallest element index first.
    pub fn double_coset_reps(&self) -> Vec<usize> {
        let els = self.ambient.elements().unwrap();
        let mut seen = vec![false; els.len()];
        let mut reps = Vec::new();
        for i in 0..els.len() {
            if seen[i] {
                continue;
            }
            reps.push(i);
            let g = &els.list()[i];
            for a in self.subgroup.element_list() {
                let ag = a.mul(g);
                for b in self.subgroup.element_list() {
                    seen[els.index_of(&ag.mul(b)).unwrap()] = true;
                }
            }
        }
        reps
    }
}

fn check_module_of(w: &ModuleRep, group: &FinMatGroup) -> Result<()> {
    if w.action().len() != group.generators().len() {
        return Err(Error::DimensionMismatch("module is not over the subgroup's generators".into()));
    }
    Ok(())
}

/// `Ind_H^G W` on `⊕ g_i W`: block `(j, i)` of `s` is `W(h)` where `s·g_i = g_j·h`.
pub fn induce(sub: &SubgroupDatum, w: &ModuleRep) -> Result<ModuleRep> {
    check_module_of(w, &sub.subgroup)?;
    let k = sub.index();
    let field = w.field();
    if (k as u64).is_multiple_of(field.ell() as u64) {
        return Err(Error::CharDividesIndex(k));
    }
    let table = w.image_table()?;
    let d = w.dim();
    let els = sub.ambient.elements().unwrap();
    let reps: Vec<&Mat> = sub.transversal.iter().map(|&i| sub.ambient_element(i)).collect();
    let rep_inv: Vec<Mat> = reps.iter().map(|g| g.inverse().unwrap()).collect();
    let mut action = Vec::new();
    for s in sub.ambient.generators() {
        let mut m = Mat::zero(field, k * d, k * d);
        for (i, gi) in reps.iter().enumerate() {
            let x = s.mul(gi);
            let j = sub.coset_of[els.index_of(&x).unwrap()];
            let h = rep_inv[j].mul(&x);
            let block = &table[sub.sub_index(&h).expect("coset decomposition")];
            for r in 0..d {
                for c in 0..d {
                    m.set(j * d + r, i * d + c, block.get(r, c));
                }
            }
        }
        action.push(m);
    }
    ModuleRep::new(&sub.ambient, field, k * d, action)
}

/// `(dim Hom_G(V, Ind W), dim Hom_H(Res V, W))`.
pub fn frobenius_reciprocity_dim(sub: &SubgroupDatum, w: &ModuleRep, v: &ModuleRep) -> Result<(usize, usize)> {
    let ind = induce(sub, w)?;
    let lhs = intertwiners(&ind, v)?.len();
    let res = v.restrict(&sub.subgroup)?;
    let rhs = intertwiners(w, &res)?.len();
    Ok((lhs, rhs))
}

pub fn invariants_dim(rho: &ModuleRep) -> usize {
    rho.fixed_space().len()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum MackeyCertificate {
    /// Condition (I) fails: the commutant of `W` has this dimension.
    NotAbsolutelyIrreducible { commutant_dim: usize },
    /// Condition (II′) fails at this ambient element, with a nonzero invariant vector of
    /// `W^g ⊗ W^∨` over `H ∩ gHg⁻¹`.
    InvariantsAt { element: usize, invariants_dim: usize, vector: Vec<Elem> },
    /// Both conditions hold; the list holds the double-coset representatives outside `H`.
    Irreducible { checked: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MackeyVerdict {
    pub irreducible: bool,
    pub certificate: MackeyCertificate,
}

/// `W` on `H ∩ gHg⁻¹` twisted by `g`: `x ↦ W(g⁻¹xg)`; returned together with `W` itself there.
fn conjugate_pair(sub: &SubgroupDatum, w_table: &[Mat], g: &Mat) -> Result<(ModuleRep, ModuleRep)> {
    let gi = g.inverse().unwrap();
    let inter: Vec<Mat> = sub
        .subgroup
        .element_list()
        .iter()
        .filter(|x| sub.sub_index(&gi.mul(x).mul(g)).is_some())
        .cloned()
        .collect();
    let f = sub.ambient.field();
    let hg = FinMatGroup::generated_by(f, sub.ambient.n(), &inter, inter.len() + 1)?;
    let lookup = |x: &Mat| w_table[sub.sub_index(x).unwrap()].clone();
    let field = w_table[0].field();
    let dim = w_table[0].rows();
    let plain = ModuleRep::new(&hg, field, dim, hg.generators().iter().map(lookup).collect())?;
    let twisted = ModuleRep::new(
        &hg,
        field,
        dim,
        hg.generators().iter().map(|x| lookup(&gi.mul(x).mul(g))).collect(),
    )?;
    Ok((twisted, plain))
}

pub fn mackey_irreducible(sub: &SubgroupDatum, w: &ModuleRep, cfg: &MeatAxeConfig) -> Result<MackeyVerdict> {
    check_module_of(w, &sub.subgroup)?;
    if !is_semisimple(w, cfg)? {
        return Err(Error::NotSemisimple);
    }
    let (_, c) = commutant(w)?;
    if c != 1 {
        return Ok(MackeyVerdict {
            irreducible: false,
            certificate: MackeyCertificate::NotAbsolutelyIrreducible { commutant_dim: c },
        });
    }
    let table = w.image_table()?;
    let mut checked = Vec::new();
    for g in sub.double_coset_reps() {
        if sub.coset_of[g] == 0 {
            continue;
        }
        let (twisted, plain) = conjugate_pair(sub, &table, sub.ambient_element(g))?;
        let fixed = twisted.tensor(&plain.dual())?.fixed_space();
        if let Some(v) = fixed.first() {
            return Ok(MackeyVerdict {
                irreducible: false,
                certificate: MackeyCertificate::InvariantsAt {
                    element: g,
                    invariants_dim: fixed.len(),
                    vector: v.clone(),
                },
            });
        }
        checked.push(g);
    }
    Ok(MackeyVerdict { irreducible: true, certificate: MackeyCertificate::Irreducible { checked } })
}

/// The brute-force side of the criterion: the induced module has a one-dimensional commutant.
pub fn induced_commutant_dim(sub: &SubgroupDatum, w: &ModuleRep) -> Result<usize> {
    Ok(commutant(&induce(sub, w)?)?.1)
}

#[derive(Clone, Debug)]
pub struct CliffordShape {
    pub e: usize,
    pub f: usize,
    pub factors: Vec<ModuleRep>,
    /// Isotypic components of the restriction, one per factor.
    pub blocks: Vec<Subspace>,
    /// For each generator of the ambient group, the induced permutation of the blocks.
    pub block_permutations: Vec<Vec<usize>>,
    pub transitive: bool,
}

impl CliffordShape {
    pub fn factor_dim(&self) -> usize {
        self.factors[0].dim()
    }
}

fn isotypic_block(u: &ModuleRep, res: &ModuleRep) -> Result<Subspace> {
    let mut block = Subspace::new(res.field(), res.dim());
    for x in intertwiners(res, u)? {
        for c in 0..x.cols() {
            block.insert(&x.column(c));
        }
    }
    Ok(block)
}

pub fn clifford_decompose(
    group: &FinMatGroup,
    normal_gens: &[Mat],
    v: &ModuleRep,
    cfg: &MeatAxeConfig,
) -> Result<CliffordShape> {
    let els = group.elements().ok_or_else(|| Error::InvalidInput("group not materialised".into()))?;
    let n = FinMatGroup::generated_by(group.field(), group.n(), normal_gens, els.len() + 1)?;
    if n.element_list().iter().any(|x| els.index_of(x).is_none()) {
        return Err(Error::InvalidInput("normal subgroup generator outside the group".into()));
    }
    if !n.is_normalized_by(group)? {
        return Err(Error::NotNormal);
    }
    if !is_irreducible(v, cfg)? {
        return Err(Error::NotIrreducible);
    }
    let res = v.restrict(&n)?;
    let classes = distinct_factors(&res, cfg)?;
    let e = classes.len();
    let f = classes[0].1;
    let dim_u = classes[0].0.dim();
    if classes.iter().any(|(u, m)| *m != f || u.dim() != dim_u) || e * f * dim_u != v.dim() {
        return Err(Error::InvariantViolation("restriction is not a Clifford shape".into()));
    }
    let factors: Vec<ModuleRep> = classes.into_iter().map(|(u, _)| u).collect();
    let blocks = factors.iter().map(|u| isotypic_block(u, &res)).collect::<Result<Vec<_>>>()?;
    if blocks.iter().any(|b| b.dim() != f * dim_u) {
        return Err(Error::InvariantViolation("isotypic block of the wrong dimension".into()));
    }

    let mut block_permutations = Vec::new();
    for a in v.action() {
        let mut perm = Vec::with_capacity(e);
        for b in &blocks {
            let image = Subspace::from_vectors(v.field(), v.dim(), &b.basis().iter().map(|x| a.mul_vec(x)).collect::<Vec<_>>());
            let target = blocks
                .iter()
                .position(|c| c.same_as(&image))
                .ok_or_else(|| Error::InvariantViolation("a generator does not permute the blocks".into()))?;
            perm.push(target);
        }
        block_permutations.push(perm);
    }
    let mut orbit = BTreeSet::from([0usize]);
    let mut frontier = vec![0usize];
    while let Some(b) = frontier.pop() {
        for p in &block_permutations {
            if orbit.insert(p[b]) {
                frontier.push(p[b]);
            }
        }
    }
    let transitive = orbit.len() == e;
    Ok(CliffordShape { e, f, factors, blocks, block_permutations, transitive })
}

/// Multiplication table of a materialised group: `table[i][j]` is the index of `g_i g_j`.
fn multiplication_table(group: &FinMatGroup) -> Vec<Vec<usize>> {
    let els = group.elements().unwrap();
    els.list()
        .iter()
        .map(|a| els.list().iter().map(|b| els.index_of(&a.mul(b)).unwrap()).collect())
        .collect()
}

fn close(table: &[Vec<usize>], seed: &BTreeSet<usize>) -> BTreeSet<usize> {
    let mut set = seed.clone();
    set.insert(0);
    let mut frontier: Vec<usize> = set.iter().copied().collect();
    while let Some(x) = frontier.pop() {
        let gens: Vec<usize> = seed.iter().copied().collect();
        for g in gens {
            let y = table[x][g];
            if set.insert(y) {
                frontier.push(y);
            }
        }
    }
    set
}

/// Every subgroup of a materialised group, as joins of cyclic subgroups, ordered by size.
pub fn subgroups(group: &FinMatGroup) -> Result<Vec<SubgroupDatum>> {
    if !group.is_materialized() {
        return Err(Error::InvalidInput("group not materialised".into()));
    }
    let table = multiplication_table(group);
    let order = table.len();
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut cyclic: Vec<BTreeSet<usize>> = Vec::new();
    for g in 0..order {
        let c = close(&table, &BTreeSet::from([g]));
        if found.insert(c.iter().copied().collect()) {
            cyclic.push(c);
        }
    }
    let mut layer: Vec<BTreeSet<usize>> = cyclic.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for a in &layer {
            for c in &cyclic {
                if c.is_subset(a) {
                    continue;
                }
                let joined = close(&table, &a.union(c).copied().collect());
                if found.insert(joined.iter().copied().collect()) {
                    next.push(joined);
                }
            }
        }
        layer = next;
    }
    let mut sets: Vec<Vec<usize>> = found.into_iter().collect();
    sets.sort_by_key(|s| (s.len(), s.clone()));
    let list = group.element_list();
    sets.iter()
        .map(|s| {
            let gens: Vec<Mat> = s.iter().map(|&i| list[i].clone()).collect();
            SubgroupDatum::new(group, &gens)
        })
        .collect()
}

pub fn is_normal(sub: &SubgroupDatum) -> Result<bool> {
    sub.subgroup.is_normalized_by(&sub.ambient)
}

/// Representatives of the irreducible modules over `field`, read off the regular module.
pub fn irreducible_modules(group: &FinMatGroup, field: &FieldRef, cfg: &MeatAxeConfig) -> Result<Vec<ModuleRep>> {
    let reg = ModuleRep::regular(group, field)?;
    let mut irr: Vec<ModuleRep> = distinct_factors(&reg, cfg)?.into_iter().map(|(m, _)| m).collect();
    irr.sort_by_key(|m| m.dim());
    Ok(irr)
}

/// Whether `Hom(a, b)` and `Hom(b, a)` vanish; used to compare isotypic components.
pub fn disjoint(a: &ModuleRep, b: &ModuleRep) -> Result<bool> {
    Ok(hom_dim(a, b)? == 0 && hom_dim(b, a)? == 0)
}
