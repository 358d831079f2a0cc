//! Exponential generation for finite subgroups of `GL_n(F_ℓ)`.
//!
//! For `ℓ ≥ n` the truncated series
//! `exp(N) = Σ_{i<ℓ} N^i / i!` and `log(x) = -Σ_{0<i<ℓ} (1-x)^i / i`
//! are mutually inverse bijections between nilpotent and unipotent matrices.

use rand::Rng;

use crate::error::{Error, Result};
use crate::fieldcore::group::{FinMatGroup, DEFAULT_CAP};
use crate::fieldcore::mat::{span_rank, Mat};
use crate::fieldcore::subspace::Subspace;
use crate::fieldcore::{Elem, FieldRef};

#[derive(Clone, Debug)]
pub struct NoriConfig {
    pub cap: usize,
    /// Characteristics below `ell_min_factor · n` get a warning.
    pub ell_min_factor: u32,
    pub rank_samples: usize,
    pub seed: u64,
}

impl Default for NoriConfig {
    fn default() -> Self {
        NoriConfig { cap: DEFAULT_CAP, ell_min_factor: 4, rank_samples: 16, seed: 1 }
    }
}

fn require_prime_field(field: &FieldRef) -> Result<()> {
    if field.is_prime_field() {
        Ok(())
    } else {
        Err(Error::NotPrimeField)
    }
}

fn check_char(x: &Mat) -> Result<()> {
    let ell = x.field().ell();
    if (ell as usize) < x.rows() {
        return Err(Error::CharTooSmall { ell, n: x.rows() });
    }
    Ok(())
}

pub fn is_unipotent(x: &Mat) -> bool {
    let n = x.rows();
    x.sub(&Mat::identity(x.field(), n)).pow(n as u128).is_zero()
}

pub fn unipotent_log(x: &Mat) -> Result<Mat> {
    require_prime_field(x.field())?;
    check_char(x)?;
    if !is_unipotent(x) {
        return Err(Error::NotUnipotent);
    }
    let f = x.field().clone();
    let n = x.rows();
    let u = Mat::identity(&f, n).sub(x);
    let mut power = u.clone();
    let mut acc = Mat::zero(&f, n, n);
    let top = (f.ell() as usize - 1).min(n);
    for i in 1..=top {
        acc = acc.add(&power.scale(f.inv(i as Elem).unwrap()));
        power = power.mul(&u);
    }
    Ok(acc.neg())
}

pub fn nilpotent_exp(nil: &Mat) -> Result<Mat> {
    require_prime_field(nil.field())?;
    check_char(nil)?;
    let f = nil.field().clone();
    let n = nil.rows();
    if !nil.pow(n as u128).is_zero() {
        return Err(Error::InvalidInput("matrix is not nilpotent".into()));
    }
    let mut term = Mat::identity(&f, n);
    let mut acc = term.clone();
    for i in 1..(f.ell() as usize).min(n + 1) {
        term = term.mul(nil).scale(f.inv(i as Elem).unwrap());
        acc = acc.add(&term);
    }
    Ok(acc)
}

/// `x^t = exp(t · log x)` for every `t ∈ F_ℓ`, indexed by `t`.
pub fn one_param_subgroup(x: &Mat) -> Result<Vec<Mat>> {
    let log = unipotent_log(x)?;
    let ell = x.field().ell();
    (0..ell).map(|t| nilpotent_exp(&log.scale(t))).collect()
}

/// The nontrivial unipotent elements `G[ℓ]`, in closure order.
pub fn order_ell_elements(g: &FinMatGroup, cap: usize) -> Result<Vec<Mat>> {
    let g = g.materialize(cap)?;
    Ok(g.element_list()
        .iter()
        .filter(|x| !x.is_identity() && is_unipotent(x))
        .cloned()
        .collect())
}

pub fn plus_subgroup(g: &FinMatGroup, cap: usize) -> Result<FinMatGroup> {
    let unip = order_ell_elements(g, cap)?;
    FinMatGroup::generated_by(g.field(), g.n(), &unip, cap)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieRank {
    pub dim: usize,
    pub derived_dim: usize,
    /// Minimum of `dim ker(ad x)` on the derived algebra over the sampled `x`; an upper bound.
    pub rank_estimate: usize,
    pub samples: usize,
}

#[derive(Clone, Debug)]
pub struct NoriResult {
    pub order: usize,
    pub plus_group: FinMatGroup,
    pub nori_points: FinMatGroup,
    pub lie_algebra: Vec<Mat>,
    pub quotient_order: usize,
    pub warnings: Vec<String>,
}

impl NoriResult {
    pub fn plus_order(&self) -> usize {
        self.plus_group.order().unwrap()
    }
    pub fn nori_order(&self) -> usize {
        self.nori_points.order().unwrap()
    }
}

pub fn threshold_warning(ell: u32, n: usize, factor: u32) -> Option<String> {
    let bound = factor as usize * n;
    ((ell as usize) < bound).then(|| format!("ell = {ell} is below the threshold {bound} for n = {n}; Nori's theorem is not guaranteed"))
}

pub fn nori_points(g: &FinMatGroup, cfg: &NoriConfig) -> Result<NoriResult> {
    require_prime_field(g.field())?;
    let n = g.n();
    let ell = g.field().ell();
    if (ell as usize) < n {
        return Err(Error::CharTooSmall { ell, n });
    }
    let mut warnings = Vec::new();
    warnings.extend(threshold_warning(ell, n, cfg.ell_min_factor));
    let g = g.materialize(cfg.cap)?;
    let unip = order_ell_elements(&g, cfg.cap)?;
    let plus = FinMatGroup::generated_by(g.field(), n, &unip, cfg.cap)?;
    if !plus.is_normalized_by(&g)? {
        return Err(Error::InvariantViolation("G+ is not normal".into()));
    }
    let mut family = Vec::new();
    let mut logs = Vec::new();
    for x in &unip {
        let log = unipotent_log(x)?;
        for t in 1..ell {
            family.push(nilpotent_exp(&log.scale(t))?);
        }
        logs.push(log);
    }
    let points = FinMatGroup::generated_by(g.field(), n, &family, cfg.cap)?;
    let (p, q) = (points.order().unwrap(), plus.order().unwrap());
    if p % q != 0 {
        return Err(Error::InvariantViolation(format!("|S(F_l)| = {p} not divisible by |G+| = {q}")));
    }
    Ok(NoriResult {
        order: g.order().unwrap(),
        plus_group: plus,
        nori_points: points,
        lie_algebra: lie_closure(g.field(), n, &logs),
        quotient_order: p / q,
        warnings,
    })
}

fn flat(m: &Mat) -> Vec<Elem> {
    m.data().to_vec()
}

/// Span of `gens` closed under the commutator bracket.
pub fn lie_closure(field: &FieldRef, n: usize, gens: &[Mat]) -> Vec<Mat> {
    let mut span = Subspace::new(field, n * n);
    let mut basis: Vec<Mat> = Vec::new();
    for g in gens {
        if span.insert(&flat(g)) {
            basis.push(g.clone());
        }
    }
    let mut i = 0;
    while i < basis.len() {
        for j in 0..i {
            let b = basis[i].bracket(&basis[j]);
            if span.insert(&flat(&b)) {
                basis.push(b);
            }
        }
        i += 1;
    }
    basis
}

pub fn lie_rank_estimate<R: Rng>(basis: &[Mat], samples: usize, rng: &mut R) -> Result<LieRank> {
    let first = basis.first().ok_or(Error::EmptyAlgebra)?;
    let field = first.field().clone();
    let n = first.rows();
    let flats: Vec<Vec<Elem>> = basis.iter().map(flat).collect();
    let dim = span_rank(&field, n * n, &flats);
    let mut derived_span = Subspace::new(&field, n * n);
    let mut derived: Vec<Mat> = Vec::new();
    for i in 0..basis.len() {
        for j in 0..i {
            let b = basis[i].bracket(&basis[j]);
            if derived_span.insert(&flat(&b)) {
                derived.push(b);
            }
        }
    }
    let k = derived.len();
    if k == 0 {
        return Ok(LieRank { dim, derived_dim: 0, rank_estimate: 0, samples });
    }
    let mut best = k;
    for _ in 0..samples {
        let mut x = Mat::zero(&field, n, n);
        for d in &derived {
            x = x.add(&d.scale(rng.gen_range(0..field.order())));
        }
        let images: Vec<Vec<Elem>> = derived.iter().map(|d| flat(&x.bracket(d))).collect();
        best = best.min(k - span_rank(&field, n * n, &images));
    }
    Ok(LieRank { dim, derived_dim: k, rank_estimate: best, samples })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fieldcore::Field;
    use crate::groups;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn log_and_exp_examples() {
        let f5 = Field::new(5, 1).unwrap();
        let x = Mat::square_from_ints(&f5, &[1, 1, 0, 1]).unwrap();
        assert_eq!(unipotent_log(&x).unwrap(), Mat::square_from_ints(&f5, &[0, 1, 0, 0]).unwrap());
        assert!(unipotent_log(&Mat::identity(&f5, 3)).unwrap().is_zero());
        let swap = Mat::square_from_ints(&f5, &[0, 1, 1, 0]).unwrap();
        assert_eq!(unipotent_log(&swap).unwrap_err(), Error::NotUnipotent);
        let f2 = Field::new(2, 1).unwrap();
        let j3 = Mat::square_from_ints(&f2, &[1, 1, 0, 0, 1, 1, 0, 0, 1]).unwrap();
        assert_eq!(unipotent_log(&j3).unwrap_err(), Error::CharTooSmall { ell: 2, n: 3 });

        let f7 = Field::new(7, 1).unwrap();
        let n2 = Mat::square_from_ints(&f7, &[0, 1, 0, 0]).unwrap();
        assert_eq!(nilpotent_exp(&n2).unwrap(), Mat::square_from_ints(&f7, &[1, 1, 0, 1]).unwrap());
        let n3 = Mat::square_from_ints(&f7, &[0, 1, 0, 0, 0, 1, 0, 0, 0]).unwrap();
        assert_eq!(nilpotent_exp(&n3).unwrap(), Mat::square_from_ints(&f7, &[1, 1, 4, 0, 1, 1, 0, 0, 1]).unwrap());
        assert!(nilpotent_exp(&Mat::zero(&f7, 2, 2)).unwrap().is_identity());
    }

    #[test]
    fn extension_fields_are_rejected() {
        let f = Field::new(5, 2).unwrap();
        assert_eq!(unipotent_log(&Mat::identity(&f, 2)).unwrap_err(), Error::NotPrimeField);
    }

    #[test]
    fn one_parameter_subgroup_of_a_transvection() {
        let f = Field::new(5, 1).unwrap();
        let x = Mat::square_from_ints(&f, &[1, 1, 0, 1]).unwrap();
        let fam = one_param_subgroup(&x).unwrap();
        for (t, m) in fam.iter().enumerate() {
            assert_eq!(*m, Mat::square_from_ints(&f, &[1, t as i64, 0, 1]).unwrap());
        }
        assert_eq!(one_param_subgroup(&Mat::identity(&f, 2)).unwrap().iter().filter(|m| m.is_identity()).count(), 5);
    }

    #[test]
    fn unipotent_counts() {
        let f7 = Field::new(7, 1).unwrap();
        assert!(order_ell_elements(&groups::diagonal_torus(&f7, 2), 1000).unwrap().is_empty());
        let f5 = Field::new(5, 1).unwrap();
        let u = FinMatGroup::new(&f5, 2, vec![Mat::square_from_ints(&f5, &[1, 1, 0, 1]).unwrap()]).unwrap();
        assert_eq!(order_ell_elements(&u, 1000).unwrap().len(), 4);
        let sl = groups::sl2(&f5);
        let all = sl.materialize(1000).unwrap();
        let brute = all.element_list().iter().filter(|m| !m.is_identity() && is_unipotent(m)).count();
        assert_eq!(order_ell_elements(&sl, 1000).unwrap().len(), 24);
        assert_eq!(brute, 24);
    }

    #[test]
    fn plus_subgroups() {
        let f5 = Field::new(5, 1).unwrap();
        assert_eq!(plus_subgroup(&groups::diagonal_torus(&f5, 2), 1000).unwrap().order(), Some(1));
        assert_eq!(plus_subgroup(&groups::borel2(&f5), 1000).unwrap().order(), Some(5));
        assert_eq!(plus_subgroup(&groups::sl2(&f5), 1000).unwrap().order(), Some(120));
    }

    #[test]
    fn nori_of_sl2_f7_and_a_jordan_block() {
        let f7 = Field::new(7, 1).unwrap();
        let r = nori_points(&groups::sl2(&f7), &NoriConfig::default()).unwrap();
        assert_eq!((r.order, r.plus_order(), r.nori_order(), r.quotient_order), (336, 336, 336, 1));
        assert_eq!(r.lie_algebra.len(), 3);
        assert!(r.warnings.len() == 1);

        let t = nori_points(&groups::diagonal_torus(&f7, 2), &NoriConfig::default()).unwrap();
        assert_eq!((t.nori_order(), t.quotient_order), (1, 1));

        // g = <J>: every log is a multiple of log J = N - N^2/2, so the algebra is a line.
        let j = Mat::square_from_ints(&f7, &[1, 1, 0, 0, 1, 1, 0, 0, 1]).unwrap();
        let cyc = FinMatGroup::new(&f7, 3, vec![j]).unwrap();
        let r = nori_points(&cyc, &NoriConfig::default()).unwrap();
        assert_eq!(r.nori_order(), 7);
        assert_eq!(r.lie_algebra.len(), 1);
    }

    #[test]
    fn rank_estimates() {
        let f11 = Field::new(11, 1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let r = nori_points(&groups::sl2(&f11), &NoriConfig::default()).unwrap();
        let lr = lie_rank_estimate(&r.lie_algebra, 16, &mut rng).unwrap();
        assert_eq!((lr.dim, lr.derived_dim, lr.rank_estimate), (3, 3, 1));

        let d1 = Mat::diagonal(&f11, &[1, 0]);
        let d2 = Mat::diagonal(&f11, &[0, 1]);
        let lr = lie_rank_estimate(&[d1, d2], 16, &mut rng).unwrap();
        assert_eq!((lr.dim, lr.derived_dim, lr.rank_estimate), (2, 0, 0));

        let block: Vec<Mat> = r
            .lie_algebra
            .iter()
            .flat_map(|x| {
                let z = Mat::zero(&f11, 2, 2);
                [x.direct_sum(&z), z.direct_sum(x)]
            })
            .collect();
        let lr = lie_rank_estimate(&block, 16, &mut rng).unwrap();
        assert_eq!((lr.dim, lr.derived_dim, lr.rank_estimate), (6, 6, 2));
        assert_eq!(lie_rank_estimate(&[], 4, &mut rng).unwrap_err(), Error::EmptyAlgebra);
    }
}
