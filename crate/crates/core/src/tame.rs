//! Characters of the tame inertia quotient and the tame inertia weights of a representation.
//!
//! The tame quotient is modelled by the image `g` of a topological generator. A character
//! of level `d` sends `g` to `γ_d^e`, where `γ_d` is the fixed generator of `F_{ℓ^d}^*`;
//! the generators are norm-compatible, so `θ_d = θ_{dd'}^{(ℓ^{dd'}-1)/(ℓ^d-1)}` holds on the nose.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fieldcore::field::is_prime;
use crate::fieldcore::{Field, Mat, MeatAxeConfig, Poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TameCharacter {
    pub ell: u64,
    pub level: u32,
    pub e: u64,
}

fn modulus(ell: u64, level: u32) -> Result<u64> {
    ell.checked_pow(level)
        .filter(|&q| q < (1 << 62))
        .map(|q| q - 1)
        .ok_or_else(|| Error::OutOfRange(format!("{ell}^{level} is too large")))
}

impl TameCharacter {
    pub fn new(ell: u64, level: u32, e: u64) -> Result<Self> {
        if !is_prime(ell) {
            return Err(Error::NotPrime(ell));
        }
        if level == 0 {
            return Err(Error::DegreeZero);
        }
        let m = modulus(ell, level)?;
        if e >= m {
            return Err(Error::OutOfRange(format!("exponent {e} must be below {m}")));
        }
        Ok(TameCharacter { ell, level, e })
    }

    /// Reduces an arbitrary integer exponent modulo `ℓ^d - 1`.
    pub fn from_exponent(ell: u64, level: u32, e: i128) -> Result<Self> {
        let m = modulus(ell, level)? as i128;
        TameCharacter::new(ell, level, e.rem_euclid(m) as u64)
    }

    /// Digits `m_j ∈ [0, ℓ-1]` with `e = Σ m_j ℓ^j`; never all equal to `ℓ-1`.
    pub fn digits(&self) -> Vec<u64> {
        let mut e = self.e;
        (0..self.level)
            .map(|_| {
                let d = e % self.ell;
                e /= self.ell;
                d
            })
            .collect()
    }

    pub fn from_digits(ell: u64, digits: &[u64]) -> Result<Self> {
        if digits.iter().any(|&m| m >= ell) {
            return Err(Error::OutOfRange(format!("digit outside [0, {}]", ell - 1)));
        }
        if !digits.is_empty() && digits.iter().all(|&m| m == ell - 1) {
            return Err(Error::OutOfRange("all digits equal to ell - 1".into()));
        }
        let e = digits.iter().rev().fold(0u64, |acc, &m| acc * ell + m);
        TameCharacter::new(ell, digits.len() as u32, e)
    }

    pub fn level_raise(&self, factor: u32) -> Result<Self> {
        if factor == 0 {
            return Err(Error::DegreeZero);
        }
        let big = modulus(self.ell, self.level * factor)?;
        let small = modulus(self.ell, self.level)?;
        TameCharacter::new(self.ell, self.level * factor, self.e * (big / small))
    }

    pub fn level_lower(&self, d: u32) -> Result<Self> {
        if d == 0 || !self.level.is_multiple_of(d) {
            return Err(Error::NotDivisor { d, level: self.level });
        }
        let ratio = modulus(self.ell, self.level)? / modulus(self.ell, d)?;
        if !self.e.is_multiple_of(ratio) {
            return Err(Error::NotCompatible);
        }
        TameCharacter::new(self.ell, d, self.e / ratio)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TameWeights {
    pub ell: u64,
    /// Sorted multiset of weights.
    pub digits: Vec<u64>,
    /// One character per composition factor.
    pub characters: Vec<TameCharacter>,
}

impl TameWeights {
    fn from_characters(ell: u64, mut characters: Vec<TameCharacter>) -> Self {
        characters.sort_by_key(|c| (c.level, c.e));
        let mut digits: Vec<u64> = characters.iter().flat_map(|c| c.digits()).collect();
        digits.sort();
        TameWeights { ell, digits, characters }
    }

    pub fn max(&self) -> Option<u64> {
        self.digits.last().copied()
    }
}

/// The `dn × dn` matrix over `F_ℓ` of an `n × n` matrix over `F_{ℓ^d}`, in the basis `1, x, …, x^{d-1}`.
pub fn restrict_scalars(g: &Mat) -> Result<Mat> {
    let f = g.field();
    let d = f.degree() as usize;
    if d == 1 {
        return Ok(g.clone());
    }
    let prime = Field::new(f.ell() as u64, 1)?;
    let n = g.rows();
    let mut out = Mat::zero(&prime, n * d, n * d);
    for r in 0..n {
        for c in 0..n {
            let a = g.get(r, c);
            let mut basis_elem: u32 = 1;
            for j in 0..d {
                let coeffs = f.coeffs(f.mul(a, basis_elem));
                for (i, &v) in coeffs.iter().enumerate() {
                    out.set(r * d + i, c * d + j, v);
                }
                basis_elem *= f.ell();
            }
        }
    }
    Ok(out)
}

fn distinct_factors(p: &Poly, f: &Field, cfg: &MeatAxeConfig) -> Vec<(Poly, usize)> {
    let mut rng = cfg.rng();
    p.factor(f, &mut rng)
}

/// The order of `g` is prime to `ℓ` exactly when `g` is semisimple.
fn ensure_semisimple(g: &Mat, cfg: &MeatAxeConfig) -> Result<Vec<(Poly, usize)>> {
    let f = g.field();
    let factors = distinct_factors(&g.charpoly(), f, cfg);
    let rad = factors.iter().fold(Poly::one(), |acc, (p, _)| acc.mul(f, p));
    if !g.eval_poly(&rad).is_zero() {
        return Err(Error::OrderDivisibleByEll);
    }
    Ok(factors)
}

/// The exponent `e` of the least `γ^e` that is a root of `p`, where `γ` generates the
/// multiplicative group of the degree-`deg p` extension of `p`'s coefficient field.
fn character_of_factor(p: &Poly, coeff_field: &Field) -> Result<TameCharacter> {
    let ell = coeff_field.ell() as u64;
    let level = coeff_field.degree() * p.degree().unwrap() as u32;
    let ext = Field::new(ell, level)?;
    let base = Field::new(ell, coeff_field.degree())?;
    let emb = base.embedding_into(&ext)?;
    let lifted = Poly::new(p.coeffs().iter().map(|&c| emb.apply(c)).collect());
    let order = ext.order() as u64 - 1;
    for e in 0..order {
        if lifted.eval(&ext, ext.exp(e)) == 0 {
            return TameCharacter::new(ell, level, e);
        }
    }
    Err(Error::InvariantViolation("irreducible factor without a root in its splitting field".into()))
}

/// Weights of `g` viewed as an `F_ℓ`-representation: the digits of the characters of its
/// composition factors, one digit per dimension.
pub fn tame_weights_of_rep(g: &Mat, cfg: &MeatAxeConfig) -> Result<TameWeights> {
    ensure_semisimple(g, cfg)?;
    let h = restrict_scalars(g)?;
    let f = h.field().clone();
    let mut chars = Vec::new();
    for (p, mult) in distinct_factors(&h.charpoly(), &f, cfg) {
        let chi = character_of_factor(&p, &f)?;
        chars.extend(std::iter::repeat_n(chi, mult));
    }
    Ok(TameWeights::from_characters(f.ell() as u64, chars))
}

/// Digit strings at the level of the coefficient field: one character per composition
/// factor over `F_q`, at level `[F_q : F_ℓ] · dim`.
pub fn tame_weight_strings(g: &Mat, cfg: &MeatAxeConfig) -> Result<TameWeights> {
    let factors = ensure_semisimple(g, cfg)?;
    let f = g.field();
    let mut chars = Vec::new();
    for (p, mult) in factors {
        let chi = character_of_factor(&p, f)?;
        chars.extend(std::iter::repeat_n(chi, mult));
    }
    Ok(TameWeights::from_characters(f.ell() as u64, chars))
}

/// Whether the twist by the `N1`-th power of the cyclotomic character has all weights in `[0, N2]`.
///
/// The cyclotomic character is `θ_1`, which sends the generator to `γ_1`, so twisting is
/// multiplication by that scalar.
pub fn bounded_weights_check(g: &Mat, n1: u64, n2: u64, cfg: &MeatAxeConfig) -> Result<bool> {
    let f = g.field();
    let prime = Field::new(f.ell() as u64, 1)?;
    let gamma1 = f.pow(prime.generator(), n1);
    let twisted = g.scale(gamma1);
    Ok(tame_weights_of_rep(&twisted, cfg)?.max().is_none_or(|m| m <= n2))
}

/// Unramified model: the semisimplified inertia action is trivial, i.e. every eigenvalue is 1.
pub fn is_unramified(inertia: &[Mat]) -> bool {
    inertia.iter().all(|g| {
        let f = g.field();
        let n = g.rows();
        g.sub(&Mat::identity(f, n)).pow(n as u128).is_zero()
    })
}
