//! Modules for finite groups: one action matrix per group generator.

use super::field::{Elem, FieldRef};
use super::group::FinMatGroup;
use super::mat::Mat;
use super::subspace::Subspace;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct ModuleRep {
    group: FinMatGroup,
    field: FieldRef,
    dim: usize,
    action: Vec<Mat>,
}

impl ModuleRep {
    pub fn new(group: &FinMatGroup, field: &FieldRef, dim: usize, action: Vec<Mat>) -> Result<Self> {
        if action.len() != group.generators().len() {
            return Err(Error::DimensionMismatch(format!(
                "{} action matrices for {} generators",
                action.len(),
                group.generators().len()
            )));
        }
        for a in &action {
            if a.rows() != dim || a.cols() != dim {
                return Err(Error::DimensionMismatch(format!("action matrix {}x{} in dimension {dim}", a.rows(), a.cols())));
            }
            if **a.field() != **field {
                return Err(Error::FieldMismatch(format!("action over {:?}, module over {:?}", a.field(), field)));
            }
            if !a.is_invertible() {
                return Err(Error::NotInvertible);
            }
        }
        Ok(ModuleRep { group: group.clone(), field: field.clone(), dim, action })
    }

    /// The group acting through its own matrices.
    pub fn natural(group: &FinMatGroup) -> Self {
        ModuleRep {
            group: group.clone(),
            field: group.field().clone(),
            dim: group.n(),
            action: group.generators().to_vec(),
        }
    }

    pub fn trivial(group: &FinMatGroup, field: &FieldRef, dim: usize) -> Self {
        let action = group.generators().iter().map(|_| Mat::identity(field, dim)).collect();
        ModuleRep { group: group.clone(), field: field.clone(), dim, action }
    }

    /// Left regular module over `field`: generator `s` sends `e_h` to `e_{s h}`.
    pub fn regular(group: &FinMatGroup, field: &FieldRef) -> Result<Self> {
        let els = group.elements().ok_or_else(|| Error::InvalidInput("group not materialised".into()))?;
        let n = els.len();
        let mut action = Vec::new();
        for s in group.generators() {
            let mut m = Mat::zero(field, n, n);
            for (i, h) in els.list().iter().enumerate() {
                let j = els.index_of(&s.mul(h)).expect("closure is closed");
                m.set(j, i, 1);
            }
            action.push(m);
        }
        ModuleRep::new(group, field, n, action)
    }

    pub fn group(&self) -> &FinMatGroup {
        &self.group
    }
    pub fn field(&self) -> &FieldRef {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn action(&self) -> &[Mat] {
        &self.action
    }

    pub fn with_group(&self, group: &FinMatGroup) -> Result<Self> {
        ModuleRep::new(group, &self.field, self.dim, self.action.clone())
    }

    fn check_compatible(&self, other: &ModuleRep) -> Result<()> {
        if self.action.len() != other.action.len() {
            return Err(Error::DimensionMismatch("generator lists differ in length".into()));
        }
        if *self.field != *other.field {
            return Err(Error::FieldMismatch(format!("{:?} vs {:?}", self.field, other.field)));
        }
        Ok(())
    }

    pub fn direct_sum(&self, other: &ModuleRep) -> Result<Self> {
        self.check_compatible(other)?;
        let action = self.action.iter().zip(&other.action).map(|(a, b)| a.direct_sum(b)).collect();
        Ok(ModuleRep { action, dim: self.dim + other.dim, ..self.clone() })
    }

    pub fn tensor(&self, other: &ModuleRep) -> Result<Self> {
        self.check_compatible(other)?;
        let action = self.action.iter().zip(&other.action).map(|(a, b)| a.kron(b)).collect();
        Ok(ModuleRep { action, dim: self.dim * other.dim, ..self.clone() })
    }

    /// Contragredient: `g ↦ (g^{-1})^T`.
    pub fn dual(&self) -> Self {
        let action = self.action.iter().map(|a| a.inverse().unwrap().transpose()).collect();
        ModuleRep { action, ..self.clone() }
    }

    /// Change of basis `P^{-1} A P`.
    pub fn conjugate_by(&self, p: &Mat) -> Result<Self> {
        let pi = p.inverse().ok_or(Error::NotInvertible)?;
        let action = self.action.iter().map(|a| pi.mul(a).mul(p)).collect();
        Ok(ModuleRep { action, ..self.clone() })
    }

    pub fn is_trivial(&self) -> bool {
        self.action.iter().all(|a| a.is_identity())
    }

    /// Action on an invariant subspace, in the subspace's insertion-order basis.
    pub fn submodule(&self, sub: &Subspace) -> Result<Self> {
        if !sub.is_invariant(&self.action) {
            return Err(Error::InvalidModule("subspace is not invariant".into()));
        }
        let k = sub.dim();
        let basis = sub.echelon().to_vec();
        let mut full = basis.clone();
        full.extend(sub.complement_basis());
        let p = Mat::from_columns(&self.field, self.dim, &full);
        let pi = p.inverse().expect("echelon basis plus complement is a basis");
        let action = self
            .action
            .iter()
            .map(|a| pi.mul(a).mul(&p).submatrix(0, 0, k, k))
            .collect();
        Ok(ModuleRep { action, dim: k, ..self.clone() })
    }

    /// Action on `V / sub`.
    pub fn quotient(&self, sub: &Subspace) -> Result<Self> {
        if !sub.is_invariant(&self.action) {
            return Err(Error::InvalidModule("subspace is not invariant".into()));
        }
        let k = sub.dim();
        let mut full = sub.echelon().to_vec();
        full.extend(sub.complement_basis());
        let p = Mat::from_columns(&self.field, self.dim, &full);
        let pi = p.inverse().expect("echelon basis plus complement is a basis");
        let m = self.dim - k;
        let action = self.action.iter().map(|a| pi.mul(a).mul(&p).submatrix(k, k, m, m)).collect();
        Ok(ModuleRep { action, dim: m, ..self.clone() })
    }

    /// Image of every materialised group element, in element order.
    ///
    /// Also validates that the action satisfies the group's relations: every edge
    /// `x → x·g` of the Cayley graph must be respected.
    pub fn image_table(&self) -> Result<Vec<Mat>> {
        let els = self
            .group
            .elements()
            .ok_or_else(|| Error::InvalidInput("group not materialised".into()))?;
        let mut images: Vec<Mat> = Vec::with_capacity(els.len());
        for i in 0..els.len() {
            let img = match els.parent(i) {
                None => Mat::identity(&self.field, self.dim),
                Some((j, g)) => images[j].mul(&self.action[g]),
            };
            images.push(img);
        }
        for (i, x) in els.list().iter().enumerate() {
            for (g, gen) in self.group.generators().iter().enumerate() {
                let j = els.index_of(&x.mul(gen)).expect("closure is closed");
                if images[i].mul(&self.action[g]) != images[j] {
                    return Err(Error::InvalidModule("action does not satisfy the group relations".into()));
                }
            }
        }
        Ok(images)
    }

    /// Restriction to a subgroup whose generators are elements of the (materialised) group.
    pub fn restrict(&self, sub: &FinMatGroup) -> Result<Self> {
        let table = self.image_table()?;
        self.restrict_with(&table, sub)
    }

    pub fn restrict_with(&self, table: &[Mat], sub: &FinMatGroup) -> Result<Self> {
        let els = self.group.elements().ok_or_else(|| Error::InvalidInput("group not materialised".into()))?;
        let action = sub
            .generators()
            .iter()
            .map(|h| {
                els.index_of(h)
                    .map(|i| table[i].clone())
                    .ok_or_else(|| Error::InvalidInput("subgroup generator outside the group".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        ModuleRep::new(sub, &self.field, self.dim, action)
    }

    /// Explicit scalar extension along the canonical embedding.
    pub fn extend_scalars(&self, target: &FieldRef) -> Result<Self> {
        let emb = self.field.embedding_into(target)?;
        let action = self.action.iter().map(|a| a.map_field(target, |e| emb.apply(e))).collect();
        Ok(ModuleRep { action, field: target.clone(), ..self.clone() })
    }

    /// Simultaneous fixed vectors of all generators.
    pub fn fixed_space(&self) -> Vec<Vec<Elem>> {
        if self.action.is_empty() {
            return (0..self.dim)
                .map(|i| {
                    let mut e = vec![0; self.dim];
                    e[i] = 1;
                    e
                })
                .collect();
        }
        let n = self.dim;
        let mut stacked = Mat::zero(&self.field, n * self.action.len(), n);
        for (k, a) in self.action.iter().enumerate() {
            for i in 0..n {
                for j in 0..n {
                    let v = if i == j { self.field.sub(a.get(i, j), 1) } else { a.get(i, j) };
                    stacked.set(k * n + i, j, v);
                }
            }
        }
        stacked.nullspace()
    }
}
