//! Finite fields `F_{ℓ^d}` with table-driven arithmetic.
//!
//! Elements are encoded as integers `Σ c_i ℓ^i` where `c_i` is the coefficient of
//! `x^i` in the residue class modulo the defining polynomial. The prime subfield is
//! therefore `0..ℓ` in every extension.
//!
//! Every field carries a distinguished primitive element. Across levels these are
//! chosen norm-compatibly: the generator of `F_{ℓ^d}` raised to `(ℓ^d-1)/(ℓ^k-1)` is a
//! conjugate of the generator of `F_{ℓ^k}` for every `k | d`. This is what makes
//! discrete logarithms at different levels agree and gives canonical embeddings.

use std::fmt;
use std::sync::Arc;

use super::poly::Poly;
use crate::error::{Error, Result};

pub type Elem = u32;
pub type FieldRef = Arc<Field>;

/// Largest field order for which log/exp tables are built.
pub const MAX_ORDER: u64 = 1 << 22;

pub struct Field {
    ell: u32,
    degree: u32,
    order: u32,
    modulus: Vec<Elem>,
    generator: Elem,
    exp: Vec<Elem>,
    log: Vec<u32>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}^{}", self.ell, self.degree)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.ell == other.ell && self.degree == other.degree
    }
}
impl Eq for Field {}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            return false;
        }
        p += 1;
    }
    true
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Polynomial arithmetic modulo the defining polynomial, used only while the
/// tables are being built.
struct RawExt {
    ell: u64,
    degree: usize,
    modulus: Vec<u64>,
}

impl RawExt {
    fn digits(&self, mut a: u32) -> [u64; 8] {
        let mut out = [0u64; 8];
        for slot in out.iter_mut().take(self.degree) {
            *slot = (a as u64) % self.ell;
            a /= self.ell as u32;
        }
        out
    }

    fn encode(&self, d: &[u64]) -> u32 {
        let mut acc = 0u64;
        for i in (0..self.degree).rev() {
            acc = acc * self.ell + d[i];
        }
        acc as u32
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        let (da, db) = (self.digits(a), self.digits(b));
        let n = self.degree;
        let mut prod = [0u64; 16];
        for i in 0..n {
            if da[i] == 0 {
                continue;
            }
            for j in 0..n {
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % self.ell;
            }
        }
        for k in (n..2 * n - 1).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for i in 0..n {
                let sub = c * self.modulus[i] % self.ell;
                prod[k - n + i] = (prod[k - n + i] + self.ell - sub) % self.ell;
            }
        }
        self.encode(&prod)
    }

    fn pow(&self, base: u32, mut e: u64) -> u32 {
        let mut acc = 1u32;
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }
}

impl Field {
    /// Builds `F_{ℓ^d}` with the least monic irreducible modulus of degree `d`.
    pub fn new(ell: u64, degree: u32) -> Result<FieldRef> {
        if !is_prime(ell) {
            return Err(Error::NotPrime(ell));
        }
        if degree < 1 {
            return Err(Error::DegreeZero);
        }
        let order = (ell as u128).pow(degree);
        if order > MAX_ORDER as u128 {
            return Err(Error::FieldTooLarge { ell: ell as u32, degree });
        }
        if degree == 1 {
            return Ok(Arc::new(Self::prime(ell as u32)));
        }
        let prime = Arc::new(Self::prime(ell as u32));
        let modulus = least_irreducible(&prime, degree as usize);
        let raw = RawExt {
            ell,
            degree: degree as usize,
            modulus: modulus.iter().map(|&c| c as u64).collect(),
        };
        let q = order as u64;
        let factors = prime_factors(q - 1);
        let is_primitive = |a: u32| factors.iter().all(|&p| raw.pow(a, (q - 1) / p) != 1);
        let g0 = (1..q as u32).find(|&a| is_primitive(a)).expect("multiplicative group is cyclic");
        let mut exp0 = Vec::with_capacity((q - 1) as usize);
        let mut cur = 1u32;
        for _ in 0..q - 1 {
            exp0.push(cur);
            cur = raw.mul(cur, g0);
        }
        let mut log0 = vec![0u32; q as usize];
        for (i, &v) in exp0.iter().enumerate() {
            log0[v as usize] = i as u32;
        }
        let provisional = Field::from_tables(ell as u32, degree, modulus.clone(), g0, &exp0, log0);

        // Exponents j for which g0^j is norm-compatible with every proper subfield.
        let mut allowed: Vec<(u64, Vec<u64>)> = Vec::new();
        for k in (1..degree).filter(|k| degree.is_multiple_of(*k)) {
            let sub = Field::new(ell, k)?;
            let minpoly = sub.minimal_polynomial(sub.generator());
            let sub_units = sub.order() as u64 - 1;
            let stride = (q - 1) / sub_units;
            let root = (0..sub_units)
                .map(|i| (i * stride) % (q - 1))
                .find(|&e| {
                    let beta = exp0[e as usize];
                    minpoly.eval(&provisional, beta) == 0
                })
                .expect("subfield generator has a root in the extension");
            let conj: Vec<u64> = (0..k)
                .map(|t| (root as u128 * (ell as u128).pow(t) % (q as u128 - 1)) as u64)
                .collect();
            allowed.push((stride, conj));
        }
        let mut best: Option<(u32, u64)> = None;
        for j in 1..q - 1 {
            if gcd_u64(j, q - 1) != 1 {
                continue;
            }
            let ok = allowed
                .iter()
                .all(|(stride, conj)| conj.contains(&((j as u128 * *stride as u128 % (q as u128 - 1)) as u64)));
            if !ok {
                continue;
            }
            let enc = exp0[j as usize];
            if best.is_none_or(|(b, _)| enc < b) {
                best = Some((enc, j));
            }
        }
        let (generator, j) = best.expect("norm-compatible generator exists");
        let exp: Vec<u32> = (0..q - 1).map(|i| exp0[((j as u128 * i as u128) % (q as u128 - 1)) as usize]).collect();
        let mut log = vec![0u32; q as usize];
        for (i, &v) in exp.iter().enumerate() {
            log[v as usize] = i as u32;
        }
        Ok(Arc::new(Field::from_tables(ell as u32, degree, modulus, generator, &exp, log)))
    }

    fn prime(ell: u32) -> Self {
        let q = ell as u64;
        let factors = prime_factors(q - 1);
        let pw = |a: u64, mut e: u64| {
            let (mut acc, mut b) = (1u64, a % q);
            while e > 0 {
                if e & 1 == 1 {
                    acc = acc * b % q;
                }
                b = b * b % q;
                e >>= 1;
            }
            acc
        };
        let g = if ell == 2 {
            1
        } else {
            (2..q).find(|&a| factors.iter().all(|&p| pw(a, (q - 1) / p) != 1)).unwrap()
        };
        let mut exp = Vec::with_capacity((q - 1) as usize);
        let mut cur = 1u64;
        for _ in 0..q - 1 {
            exp.push(cur as u32);
            cur = cur * g % q;
        }
        let mut log = vec![0u32; q as usize];
        for (i, &v) in exp.iter().enumerate() {
            log[v as usize] = i as u32;
        }
        Field::from_tables(ell, 1, vec![0, 1], g as u32, &exp, log)
    }

    fn from_tables(ell: u32, degree: u32, modulus: Vec<Elem>, generator: Elem, exp: &[Elem], log: Vec<u32>) -> Self {
        let order = ell.pow(degree);
        let mut doubled = Vec::with_capacity(exp.len() * 2);
        doubled.extend_from_slice(exp);
        doubled.extend_from_slice(exp);
        Field { ell, degree, order, modulus, generator, exp: doubled, log }
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }
    pub fn degree(&self) -> u32 {
        self.degree
    }
    /// Number of elements `q = ℓ^d`.
    pub fn order(&self) -> u32 {
        self.order
    }
    /// Monic defining polynomial as a low-to-high coefficient list over `F_ℓ`.
    pub fn modulus(&self) -> &[Elem] {
        &self.modulus
    }
    /// The distinguished primitive element.
    pub fn generator(&self) -> Elem {
        self.generator
    }
    pub fn is_prime_field(&self) -> bool {
        self.degree == 1
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.degree == 1 {
            let s = a + b;
            return if s >= self.ell { s - self.ell } else { s };
        }
        let (mut a, mut b) = (a, b);
        let mut acc = 0;
        let mut place = 1;
        while a > 0 || b > 0 {
            let s = (a % self.ell + b % self.ell) % self.ell;
            acc += s * place;
            place *= self.ell;
            a /= self.ell;
            b /= self.ell;
        }
        acc
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        if self.degree == 1 {
            return if a == 0 { 0 } else { self.ell - a };
        }
        let mut a = a;
        let mut acc = 0;
        let mut place = 1;
        while a > 0 {
            let c = a % self.ell;
            acc += ((self.ell - c) % self.ell) * place;
            place *= self.ell;
            a /= self.ell;
        }
        acc
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
    }

    pub fn inv(&self, a: Elem) -> Option<Elem> {
        if a == 0 {
            return None;
        }
        let l = self.log[a as usize];
        Some(if l == 0 { 1 } else { self.exp[(self.order - 1 - l) as usize] })
    }

    pub fn div(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.inv(b).map(|ib| self.mul(a, ib))
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let units = (self.order - 1) as u64;
        let l = (self.log[a as usize] as u64 * (e % units)) % units;
        self.exp[l as usize]
    }

    /// Discrete logarithm to the distinguished generator.
    pub fn log(&self, a: Elem) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    /// `generator^i`.
    pub fn exp(&self, i: u64) -> Elem {
        self.exp[(i % (self.order as u64 - 1)) as usize]
    }

    /// Reduces an integer into the prime subfield.
    pub fn from_i64(&self, v: i64) -> Elem {
        v.rem_euclid(self.ell as i64) as Elem
    }

    /// Builds an element from its coefficient vector in the polynomial basis.
    pub fn from_coeffs(&self, coeffs: &[i64]) -> Result<Elem> {
        if coeffs.len() > self.degree as usize {
            return Err(Error::InvalidInput(format!(
                "coefficient vector of length {} for a degree-{} field",
                coeffs.len(),
                self.degree
            )));
        }
        let mut acc = 0u32;
        for &c in coeffs.iter().rev() {
            acc = acc * self.ell + self.from_i64(c);
        }
        Ok(acc)
    }

    pub fn coeffs(&self, mut a: Elem) -> Vec<u32> {
        (0..self.degree)
            .map(|_| {
                let c = a % self.ell;
                a /= self.ell;
                c
            })
            .collect()
    }

    /// Canonical integer representative when `a` lies in the prime subfield.
    pub fn to_prime(&self, a: Elem) -> Option<u32> {
        (a < self.ell).then_some(a)
    }

    pub fn frobenius(&self, a: Elem) -> Elem {
        self.pow(a, self.ell as u64)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.order
    }

    /// Minimal polynomial over `F_ℓ`; the coefficients are prime-subfield encodings.
    pub fn minimal_polynomial(&self, a: Elem) -> Poly {
        let mut conj = vec![a];
        let mut cur = self.frobenius(a);
        while cur != a {
            conj.push(cur);
            cur = self.frobenius(cur);
        }
        let mut p = Poly::one();
        for c in conj {
            p = p.mul(self, &Poly::new(vec![self.neg(c), 1]));
        }
        p
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: Elem) -> Option<u64> {
        let l = self.log(a)? as u64;
        let units = self.order as u64 - 1;
        Some(units / gcd_u64(l, units))
    }

    /// The canonical embedding `F_{ℓ^k} -> F_{ℓ^D}` for `k | D`, sending the
    /// distinguished generator to the norm-compatible power of the target's generator.
    pub fn embedding_into(self: &FieldRef, target: &FieldRef) -> Result<Embedding> {
        if self.ell != target.ell || !target.degree.is_multiple_of(self.degree) {
            return Err(Error::FieldMismatch(format!("{:?} does not embed in {:?}", self, target)));
        }
        let stride = (target.order as u64 - 1) / (self.order as u64 - 1);
        let table = self
            .elements()
            .map(|a| match self.log(a) {
                None => 0,
                Some(l) => target.exp(l as u64 * stride),
            })
            .collect();
        Ok(Embedding { source: self.clone(), target: target.clone(), table })
    }
}

/// Field homomorphism between two levels of the same characteristic.
#[derive(Clone, Debug)]
pub struct Embedding {
    pub source: FieldRef,
    pub target: FieldRef,
    table: Vec<Elem>,
}

impl Embedding {
    pub fn apply(&self, a: Elem) -> Elem {
        self.table[a as usize]
    }
}

/// Least monic irreducible polynomial of degree `d` over the prime field, in the
/// order of the integer `Σ c_i ℓ^i` formed from its non-leading coefficients.
pub(crate) fn least_irreducible(prime: &Field, d: usize) -> Vec<Elem> {
    let ell = prime.ell() as u64;
    let count = ell.pow(d as u32);
    for code in 0..count {
        let mut coeffs = Vec::with_capacity(d + 1);
        let mut c = code;
        for _ in 0..d {
            coeffs.push((c % ell) as Elem);
            c /= ell;
        }
        coeffs.push(1);
        if coeffs[0] == 0 && d > 1 {
            continue;
        }
        let poly = Poly::new(coeffs.clone());
        if poly.is_irreducible(prime) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}
