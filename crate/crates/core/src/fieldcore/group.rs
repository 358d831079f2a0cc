//! Finite matrix groups presented by generators, with explicit closure.

use std::collections::HashMap;
use std::sync::Arc;

use super::field::{Elem, FieldRef};
use super::mat::Mat;
use crate::error::{Error, Result};

/// Default element cap for explicit closures.
pub const DEFAULT_CAP: usize = 10_000_000;

/// Materialised elements in breadth-first order from the identity.
///
/// `parent[i] = Some((j, g))` records `elements[i] = elements[j] · generators[g]`,
/// a spanning tree used to evaluate representations on every element.
#[derive(Debug)]
pub struct Elements {
    list: Vec<Mat>,
    index: HashMap<Vec<Elem>, usize>,
    parent: Vec<Option<(usize, usize)>>,
}

impl Elements {
    pub fn list(&self) -> &[Mat] {
        &self.list
    }
    pub fn len(&self) -> usize {
        self.list.len()
    }
    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }
    pub fn index_of(&self, m: &Mat) -> Option<usize> {
        self.index.get(m.data()).copied()
    }
    pub fn parent(&self, i: usize) -> Option<(usize, usize)> {
        self.parent[i]
    }
}

#[derive(Clone, Debug)]
pub struct FinMatGroup {
    field: FieldRef,
    n: usize,
    generators: Vec<Mat>,
    elements: Option<Arc<Elements>>,
}

impl FinMatGroup {
    pub fn new(field: &FieldRef, n: usize, generators: Vec<Mat>) -> Result<Self> {
        for g in &generators {
            if g.rows() != n || g.cols() != n {
                return Err(Error::DimensionMismatch(format!("generator is {}x{}, expected {n}x{n}", g.rows(), g.cols())));
            }
            if **g.field() != **field {
                return Err(Error::FieldMismatch(format!("generator over {:?}, group over {:?}", g.field(), field)));
            }
            if !g.is_invertible() {
                return Err(Error::NotInvertible);
            }
        }
        Ok(FinMatGroup { field: field.clone(), n, generators, elements: None })
    }

    pub fn trivial(field: &FieldRef, n: usize) -> Self {
        FinMatGroup { field: field.clone(), n, generators: Vec::new(), elements: None }
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn generators(&self) -> &[Mat] {
        &self.generators
    }
    pub fn elements(&self) -> Option<&Elements> {
        self.elements.as_deref()
    }
    pub fn is_materialized(&self) -> bool {
        self.elements.is_some()
    }
    pub fn order(&self) -> Option<usize> {
        self.elements.as_ref().map(|e| e.len())
    }
    pub fn identity(&self) -> Mat {
        Mat::identity(&self.field, self.n)
    }

    /// Returns a copy with the explicit element closure attached.
    pub fn materialize(&self, cap: usize) -> Result<Self> {
        if self.elements.is_some() {
            return Ok(self.clone());
        }
        let elements = closure(&self.field, self.n, &self.generators, cap)?;
        Ok(FinMatGroup { elements: Some(Arc::new(elements)), ..self.clone() })
    }

    /// Materialised element list; panics if the closure is absent.
    pub fn element_list(&self) -> &[Mat] {
        self.elements.as_ref().expect("group closure not materialised").list()
    }

    pub fn contains(&self, m: &Mat) -> Option<bool> {
        self.elements.as_ref().map(|e| e.index_of(m).is_some())
    }

    /// Whether conjugation by every generator of `ambient` keeps the generators of `self` inside `self`.
    pub fn is_normalized_by(&self, ambient: &FinMatGroup) -> Result<bool> {
        let own = self.elements.as_ref().ok_or_else(|| Error::InvalidInput("subgroup not materialised".into()))?;
        for g in ambient.generators() {
            let gi = g.inverse().ok_or(Error::NotInvertible)?;
            for u in &self.generators {
                if own.index_of(&g.mul(u).mul(&gi)).is_none() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The subgroup generated by `gens`, materialised, with a greedily reduced generating set.
    pub fn generated_by(field: &FieldRef, n: usize, gens: &[Mat], cap: usize) -> Result<Self> {
        let mut kept: Vec<Mat> = Vec::new();
        let mut current = closure(field, n, &kept, cap)?;
        for g in gens {
            if current.index_of(g).is_some() {
                continue;
            }
            kept.push(g.clone());
            current = closure(field, n, &kept, cap)?;
        }
        let group = FinMatGroup::new(field, n, kept)?;
        Ok(FinMatGroup { elements: Some(Arc::new(current)), ..group })
    }

    /// Commutator subgroup: the normal closure of the generator commutators.
    pub fn derived_subgroup(&self, cap: usize) -> Result<Self> {
        let inv: Vec<Mat> = self.generators.iter().map(|g| g.inverse().unwrap()).collect();
        let mut seeds = Vec::new();
        for i in 0..self.generators.len() {
            for j in 0..i {
                let c = self.generators[i].mul(&self.generators[j]).mul(&inv[i]).mul(&inv[j]);
                if !c.is_identity() {
                    seeds.push(c);
                }
            }
        }
        let mut sub = FinMatGroup::generated_by(&self.field, self.n, &seeds, cap)?;
        loop {
            let mut extra = Vec::new();
            for (g, gi) in self.generators.iter().zip(&inv) {
                for u in sub.generators() {
                    let c = g.mul(u).mul(gi);
                    if sub.contains(&c) == Some(false) {
                        extra.push(c);
                    }
                }
            }
            if extra.is_empty() {
                return Ok(sub);
            }
            let mut all = sub.generators().to_vec();
            all.extend(extra);
            sub = FinMatGroup::generated_by(&self.field, self.n, &all, cap)?;
        }
    }
}

/// Breadth-first closure under right multiplication by the generators.
pub fn closure(field: &FieldRef, n: usize, gens: &[Mat], cap: usize) -> Result<Elements> {
    let id = Mat::identity(field, n);
    let mut list = vec![id.clone()];
    let mut index = HashMap::new();
    index.insert(id.data().to_vec(), 0);
    let mut parent = vec![None];
    let mut next = 0;
    while next < list.len() {
        let cur = list[next].clone();
        for (gi, g) in gens.iter().enumerate() {
            let prod = cur.mul(g);
            if index.contains_key(prod.data()) {
                continue;
            }
            if list.len() >= cap {
                return Err(Error::ClosureOverflow(cap));
            }
            index.insert(prod.data().to_vec(), list.len());
            list.push(prod);
            parent.push(Some((next, gi)));
        }
        next += 1;
    }
    Ok(Elements { list, index, parent })
}
