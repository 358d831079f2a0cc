//! Intertwiner spaces `Hom_G(σ, ρ)` and commutants.
//!
//! The domain is spun into a basis from a few seed vectors; an intertwiner is then
//! fixed by the images of the seeds, and every linear dependency met while spinning
//! becomes a linear condition on those images. The system has `seeds · dim ρ`
//! unknowns instead of `dim σ · dim ρ`.

use super::field::{Elem, FieldRef};
use super::mat::Mat;
use super::module::ModuleRep;
use super::subspace::Subspace;
use crate::error::{Error, Result};

enum Provenance {
    Seed(usize),
    Apply { gen: usize, from: usize },
}

struct Relation {
    gen: usize,
    from: usize,
    coeffs: Vec<Elem>,
}

/// Echelon rows annotated with their expression in the spinning basis.
struct TrackedEchelon {
    field: FieldRef,
    m: usize,
    rows: Vec<(usize, Vec<Elem>, Vec<Elem>)>,
    count: usize,
}

impl TrackedEchelon {
    fn new(field: &FieldRef, m: usize) -> Self {
        TrackedEchelon { field: field.clone(), m, rows: Vec::new(), count: 0 }
    }

    /// Either the coefficients of `v` in the basis, or the index of the newly added basis vector.
    fn insert(&mut self, v: &[Elem]) -> std::result::Result<Vec<Elem>, usize> {
        let f = self.field.clone();
        let mut w = v.to_vec();
        let mut alpha = vec![0; self.m];
        for (p, row, coef) in &self.rows {
            let c = w[*p];
            if c == 0 {
                continue;
            }
            for (x, &r) in w.iter_mut().zip(row) {
                if r != 0 {
                    *x = f.sub(*x, f.mul(c, r));
                }
            }
            for (a, &b) in alpha.iter_mut().zip(coef) {
                if b != 0 {
                    *a = f.add(*a, f.mul(c, b));
                }
            }
        }
        let Some(p) = w.iter().position(|&x| x != 0) else { return Ok(alpha) };
        let k = self.count;
        self.count += 1;
        let inv = f.inv(w[p]).unwrap();
        let mut coef: Vec<Elem> = alpha.iter().map(|&a| f.neg(a)).collect();
        coef[k] = f.add(coef[k], 1);
        for x in w.iter_mut() {
            *x = f.mul(*x, inv);
        }
        for x in coef.iter_mut() {
            *x = f.mul(*x, inv);
        }
        for (_, row, rc) in self.rows.iter_mut() {
            let c = row[p];
            if c == 0 {
                continue;
            }
            for (x, &r) in row.iter_mut().zip(&w) {
                if r != 0 {
                    *x = f.sub(*x, f.mul(c, r));
                }
            }
            for (x, &r) in rc.iter_mut().zip(&coef) {
                if r != 0 {
                    *x = f.sub(*x, f.mul(c, r));
                }
            }
        }
        self.rows.push((p, w, coef));
        Err(k)
    }
}

/// Basis of `{X : ρ(g)·X = X·σ(g) for every generator g}`; its length is `dim Hom(σ, ρ)`.
pub fn intertwiners(rho: &ModuleRep, sigma: &ModuleRep) -> Result<Vec<Mat>> {
    if rho.action().len() != sigma.action().len() {
        return Err(Error::DimensionMismatch("generator lists differ in length".into()));
    }
    if **rho.field() != **sigma.field() {
        return Err(Error::FieldMismatch(format!("{:?} vs {:?}", rho.field(), sigma.field())));
    }
    let field = rho.field().clone();
    let (n, m) = (rho.dim(), sigma.dim());
    if n == 0 || m == 0 {
        return Ok(Vec::new());
    }
    let s = sigma.action();
    let r = rho.action();

    // Spin the domain.
    let mut ech = TrackedEchelon::new(&field, m);
    let mut basis: Vec<Vec<Elem>> = Vec::new();
    let mut prov: Vec<Provenance> = Vec::new();
    let mut relations: Vec<Relation> = Vec::new();
    let mut seeds = 0;
    for j in 0..m {
        let mut e = vec![0; m];
        e[j] = 1;
        if ech.insert(&e).is_ok() {
            continue;
        }
        basis.push(e);
        prov.push(Provenance::Seed(seeds));
        seeds += 1;
        let mut next = basis.len() - 1;
        while next < basis.len() {
            for (gi, g) in s.iter().enumerate() {
                let v = g.mul_vec(&basis[next]);
                match ech.insert(&v) {
                    Ok(coeffs) => relations.push(Relation { gen: gi, from: next, coeffs }),
                    Err(_) => {
                        basis.push(v);
                        prov.push(Provenance::Apply { gen: gi, from: next });
                    }
                }
            }
            next += 1;
        }
        if basis.len() == m {
            break;
        }
    }

    // Images of the spinning basis as linear functions of the seed images.
    let unknowns = seeds * n;
    let mut images: Vec<Mat> = Vec::with_capacity(m);
    for p in &prov {
        let img = match *p {
            Provenance::Seed(sd) => {
                let mut mm = Mat::zero(&field, n, unknowns);
                for i in 0..n {
                    mm.set(i, sd * n + i, 1);
                }
                mm
            }
            Provenance::Apply { gen, from } => r[gen].mul(&images[from]),
        };
        images.push(img);
    }
    let mut equations = Subspace::new(&field, unknowns);
    for rel in &relations {
        let mut lhs = r[rel.gen].mul(&images[rel.from]);
        for (i, &c) in rel.coeffs.iter().enumerate() {
            if c != 0 {
                lhs = lhs.sub(&images[i].scale(c));
            }
        }
        for row in 0..n {
            equations.insert(lhs.row(row));
        }
        if equations.is_full() {
            return Ok(Vec::new());
        }
    }
    let solutions = equations.annihilator();
    let b = Mat::from_columns(&field, m, &basis);
    let binv = b.inverse().expect("spinning produced a basis");
    Ok(solutions
        .echelon()
        .iter()
        .map(|u| {
            let cols: Vec<Vec<Elem>> = images.iter().map(|img| img.mul_vec(u)).collect();
            Mat::from_columns(&field, n, &cols).mul(&binv)
        })
        .collect())
}

/// The commutant algebra of `ρ` and its dimension.
pub fn commutant(rho: &ModuleRep) -> Result<(Vec<Mat>, usize)> {
    let basis = intertwiners(rho, rho)?;
    let d = basis.len();
    Ok((basis, d))
}

pub fn hom_dim(rho: &ModuleRep, sigma: &ModuleRep) -> Result<usize> {
    Ok(intertwiners(rho, sigma)?.len())
}
