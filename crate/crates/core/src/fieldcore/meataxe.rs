//! Holt–Rees MeatAxe: submodule search with Norton's irreducibility certificate.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::{Elem, Field};
use super::hom::{hom_dim, intertwiners};
use super::mat::Mat;
use super::module::ModuleRep;
use super::poly::Poly;
use super::subspace::{spin_vector, Subspace};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MeatAxeConfig {
    pub seed: u64,
    /// Random algebra elements tried per split before giving up.
    pub budget: usize,
}

impl Default for MeatAxeConfig {
    fn default() -> Self {
        MeatAxeConfig { seed: 1, budget: 200 }
    }
}

impl MeatAxeConfig {
    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

/// Evidence of irreducibility: `p(θ)` has a kernel of dimension `deg p`, a nonzero
/// kernel vector spins to the whole module, and so does a kernel vector of the transpose.
#[derive(Clone, Debug)]
pub struct IrreducibleWitness {
    pub element: Mat,
    pub factor: Poly,
    pub kernel_vector: Vec<Elem>,
}

#[derive(Clone, Debug)]
pub enum Split {
    Proper(Subspace),
    Irreducible(IrreducibleWitness),
}

/// Random elements of the enveloping algebra, built from a growing pool of words.
struct AlgebraSampler<'a> {
    pool: Vec<Mat>,
    field: &'a Field,
}

impl<'a> AlgebraSampler<'a> {
    fn new(m: &'a ModuleRep) -> Self {
        let mut pool = m.action().to_vec();
        if pool.is_empty() {
            pool.push(Mat::identity(m.field(), m.dim()));
        }
        AlgebraSampler { pool, field: m.field() }
    }

    fn sample<R: Rng>(&mut self, rng: &mut R) -> Mat {
        if self.pool.len() < 12 {
            let i = rng.gen_range(0..self.pool.len());
            let j = rng.gen_range(0..self.pool.len());
            let w = self.pool[i].mul(&self.pool[j]);
            self.pool.push(w);
        }
        let q = self.field.order();
        let mut theta = Mat::zero(self.pool[0].field(), self.pool[0].rows(), self.pool[0].cols());
        for w in &self.pool {
            let c = rng.gen_range(0..q);
            if c != 0 {
                theta = theta.add(&w.scale(c));
            }
        }
        theta
    }
}

/// One MeatAxe pass: a proper nonzero submodule, or a certificate of irreducibility.
pub fn meataxe_split<R: Rng>(m: &ModuleRep, rng: &mut R, budget: usize) -> Result<Split> {
    let n = m.dim();
    if n == 0 {
        return Err(Error::InvalidModule("zero module".into()));
    }
    let field = m.field();
    let gens = m.action();
    if n == 1 {
        return Ok(Split::Irreducible(IrreducibleWitness {
            element: Mat::identity(field, 1),
            factor: Poly::new(vec![field.neg(1), 1]),
            kernel_vector: vec![1],
        }));
    }
    let transposed: Vec<Mat> = gens.iter().map(|g| g.transpose()).collect();
    let mut sampler = AlgebraSampler::new(m);
    for _ in 0..budget {
        let theta = sampler.sample(rng);
        let mut factors = theta.charpoly().factor(field, rng);
        factors.sort_by_key(|(p, _)| p.degree());
        for (p, _) in factors {
            let np = theta.eval_poly(&p);
            let kernel = np.nullspace();
            let Some(v) = kernel.first() else { continue };
            let sub = spin_vector(field, v, gens);
            if !sub.is_full() {
                return Ok(Split::Proper(sub));
            }
            if kernel.len() != p.degree().unwrap_or(0) {
                continue;
            }
            let tkernel = np.transpose().nullspace();
            let w = &tkernel[0];
            let tsub = spin_vector(field, w, &transposed);
            if !tsub.is_full() {
                return Ok(Split::Proper(tsub.annihilator()));
            }
            return Ok(Split::Irreducible(IrreducibleWitness {
                element: theta,
                factor: p,
                kernel_vector: v.clone(),
            }));
        }
    }
    Err(Error::RandomBudgetExceeded(budget))
}

pub fn is_irreducible(m: &ModuleRep, cfg: &MeatAxeConfig) -> Result<bool> {
    let mut rng = cfg.rng();
    Ok(matches!(meataxe_split(m, &mut rng, cfg.budget)?, Split::Irreducible(_)))
}

/// Composition factors, bottom of the series first.
pub fn composition_factors(m: &ModuleRep, cfg: &MeatAxeConfig) -> Result<Vec<ModuleRep>> {
    let mut rng = cfg.rng();
    let mut out = Vec::new();
    factor_into(m, &mut rng, cfg.budget, &mut out)?;
    Ok(out)
}

fn factor_into<R: Rng>(m: &ModuleRep, rng: &mut R, budget: usize, out: &mut Vec<ModuleRep>) -> Result<()> {
    match meataxe_split(m, rng, budget)? {
        Split::Irreducible(_) => out.push(m.clone()),
        Split::Proper(sub) => {
            factor_into(&m.submodule(&sub)?, rng, budget, out)?;
            factor_into(&m.quotient(&sub)?, rng, budget, out)?;
        }
    }
    Ok(())
}

/// Direct sum of the composition factors, block-diagonal in series order.
pub fn semisimplify(m: &ModuleRep, cfg: &MeatAxeConfig) -> Result<ModuleRep> {
    let factors = composition_factors(m, cfg)?;
    let mut it = factors.into_iter();
    let first = it.next().unwrap_or_else(|| m.clone());
    it.try_fold(first, |acc, f| acc.direct_sum(&f))
}

/// Composition factors grouped up to isomorphism, with multiplicities.
pub fn distinct_factors(m: &ModuleRep, cfg: &MeatAxeConfig) -> Result<Vec<(ModuleRep, usize)>> {
    let mut classes: Vec<(ModuleRep, usize)> = Vec::new();
    for f in composition_factors(m, cfg)? {
        let mut found = false;
        for (rep, mult) in classes.iter_mut() {
            if irreducibles_isomorphic(rep, &f)? {
                *mult += 1;
                found = true;
                break;
            }
        }
        if !found {
            classes.push((f, 1));
        }
    }
    Ok(classes)
}

/// Schur: two irreducible modules are isomorphic iff some nonzero intertwiner exists.
pub fn irreducibles_isomorphic(a: &ModuleRep, b: &ModuleRep) -> Result<bool> {
    Ok(a.dim() == b.dim() && hom_dim(a, b)? > 0)
}

/// An explicit isomorphism `X` with `b(g)·X = X·a(g)`, if the irreducibles agree.
pub fn isomorphism(a: &ModuleRep, b: &ModuleRep) -> Result<Option<Mat>> {
    if a.dim() != b.dim() {
        return Ok(None);
    }
    Ok(intertwiners(b, a)?.into_iter().find(|x| x.is_invertible()))
}

pub fn is_absolutely_irreducible(m: &ModuleRep, cfg: &MeatAxeConfig) -> Result<bool> {
    Ok(is_irreducible(m, cfg)? && hom_dim(m, m)? == 1)
}

/// Dimension of the socle, from `Hom(S, V)` for every irreducible `S` among the factors.
pub fn socle_dim(m: &ModuleRep, cfg: &MeatAxeConfig) -> Result<usize> {
    let mut total = 0;
    for (s, _) in distinct_factors(m, cfg)? {
        let e = hom_dim(&s, &s)?;
        total += hom_dim(m, &s)? / e * s.dim();
    }
    Ok(total)
}

pub fn is_semisimple(m: &ModuleRep, cfg: &MeatAxeConfig) -> Result<bool> {
    Ok(socle_dim(m, cfg)? == m.dim())
}

/// Smallest `k ≤ max_k` such that every composition factor is absolutely irreducible over
/// the degree-`k` extension of the module's field.
pub fn splitting_degree(m: &ModuleRep, cfg: &MeatAxeConfig, max_k: u32) -> Result<Option<u32>> {
    let base = m.field();
    for k in 1..=max_k {
        let target = match Field::new(base.ell() as u64, base.degree() * k) {
            Ok(f) => f,
            Err(Error::FieldTooLarge { .. }) => return Ok(None),
            Err(e) => return Err(e),
        };
        let ext = if k == 1 { m.clone() } else { m.extend_scalars(&target)? };
        let mut split = true;
        for f in composition_factors(&ext, cfg)? {
            if hom_dim(&f, &f)? != 1 {
                split = false;
                break;
            }
        }
        if split {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fieldcore::group::FinMatGroup;

    fn c3_rotation(q_ell: u64) -> ModuleRep {
        let f = Field::new(q_ell, 1).unwrap();
        // companion matrix of x^2 + x + 1: an element of order 3
        let r = Mat::square_from_ints(&f, &[0, -1, 1, -1]).unwrap();
        let g = FinMatGroup::new(&f, 2, vec![r]).unwrap();
        ModuleRep::natural(&g)
    }

    #[test]
    fn rotation_of_order_three_splits_only_when_cube_roots_exist() {
        let cfg = MeatAxeConfig::default();
        // x^2+x+1 is irreducible mod 5 and splits mod 7.
        let m5 = c3_rotation(5);
        assert!(is_irreducible(&m5, &cfg).unwrap());
        assert!(!is_absolutely_irreducible(&m5, &cfg).unwrap());
        assert_eq!(splitting_degree(&m5, &cfg, 6).unwrap(), Some(2));
        let m7 = c3_rotation(7);
        assert!(!is_irreducible(&m7, &cfg).unwrap());
        let fs = composition_factors(&m7, &cfg).unwrap();
        assert_eq!(fs.iter().map(|f| f.dim()).collect::<Vec<_>>(), vec![1, 1]);
        assert_eq!(distinct_factors(&m7, &cfg).unwrap().len(), 2);
    }

    #[test]
    fn unipotent_jordan_block_is_not_semisimple() {
        let f = Field::new(3, 1).unwrap();
        let u = Mat::square_from_ints(&f, &[1, 1, 0, 1]).unwrap();
        let g = FinMatGroup::new(&f, 2, vec![u]).unwrap();
        let m = ModuleRep::natural(&g);
        let cfg = MeatAxeConfig::default();
        assert_eq!(composition_factors(&m, &cfg).unwrap().len(), 2);
        assert_eq!(socle_dim(&m, &cfg).unwrap(), 1);
        assert!(!is_semisimple(&m, &cfg).unwrap());
    }

    #[test]
    fn semisimplification_of_a_nonsplit_extension() {
        let f = Field::new(5, 1).unwrap();
        let u = Mat::square_from_ints(&f, &[1, 1, 0, 1]).unwrap();
        let g = FinMatGroup::new(&f, 2, vec![u]).unwrap();
        let cfg = MeatAxeConfig::default();
        let ss = semisimplify(&ModuleRep::natural(&g), &cfg).unwrap();
        assert_eq!(ss.dim(), 2);
        assert!(ss.is_trivial());
        assert!(is_semisimple(&ss, &cfg).unwrap());

        let already = c3_rotation(5);
        let again = semisimplify(&already, &cfg).unwrap();
        assert_eq!(again.action(), already.action());
    }

    #[test]
    fn regular_module_of_s3_in_char_zero_like_field() {
        let f = Field::new(7, 1).unwrap();
        let t = Mat::square_from_ints(&f, &[0, 1, 0, 1, 0, 0, 0, 0, 1]).unwrap();
        let c = Mat::square_from_ints(&f, &[0, 0, 1, 1, 0, 0, 0, 1, 0]).unwrap();
        let g = FinMatGroup::new(&f, 3, vec![t, c]).unwrap().materialize(100).unwrap();
        let reg = ModuleRep::regular(&g, &f).unwrap();
        let cfg = MeatAxeConfig::default();
        let classes = distinct_factors(&reg, &cfg).unwrap();
        let mut shape: Vec<(usize, usize)> = classes.iter().map(|(m, k)| (m.dim(), *k)).collect();
        shape.sort();
        // dimension d appears d times: 1 + 1 + 2*2 = 6
        assert_eq!(shape, vec![(1, 1), (1, 1), (2, 2)]);
        assert!(is_semisimple(&reg, &cfg).unwrap());
    }
}
