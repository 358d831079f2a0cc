//! Dense univariate polynomials over a [`Field`], with factorisation
//! (square-free, distinct-degree and Cantor–Zassenhaus equal-degree splitting).

use rand::Rng;

use super::field::{Elem, Field};

/// Coefficients from low to high degree, without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    coeffs: Vec<Elem>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Elem>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { coeffs }
    }
    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }
    pub fn one() -> Self {
        Poly { coeffs: vec![1] }
    }
    pub fn x() -> Self {
        Poly { coeffs: vec![0, 1] }
    }
    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }
    /// Degree; the zero polynomial has degree `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }
    fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }
    pub fn lead(&self) -> Elem {
        *self.coeffs.last().unwrap_or(&0)
    }

    pub fn add(&self, f: &Field, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| f.add(*self.coeffs.get(i).unwrap_or(&0), *other.coeffs.get(i).unwrap_or(&0)))
            .collect();
        Poly::new(c)
    }

    pub fn sub(&self, f: &Field, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| f.sub(*self.coeffs.get(i).unwrap_or(&0), *other.coeffs.get(i).unwrap_or(&0)))
            .collect();
        Poly::new(c)
    }

    pub fn scale(&self, f: &Field, s: Elem) -> Poly {
        Poly::new(self.coeffs.iter().map(|&c| f.mul(c, s)).collect())
    }

    pub fn mul(&self, f: &Field, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::new(out)
    }

    /// Quotient and remainder. Panics when dividing by zero.
    pub fn divrem(&self, f: &Field, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        if self.coeffs.len() < divisor.coeffs.len() {
            return (Poly::zero(), self.clone());
        }
        let dl = divisor.coeffs.len();
        let inv_lead = f.inv(divisor.lead()).unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0; rem.len() - dl + 1];
        for k in (0..quot.len()).rev() {
            let c = f.mul(rem[k + dl - 1], inv_lead);
            quot[k] = c;
            if c == 0 {
                continue;
            }
            for (i, &d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = f.sub(rem[k + i], f.mul(c, d));
            }
        }
        rem.truncate(dl - 1);
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn rem(&self, f: &Field, divisor: &Poly) -> Poly {
        self.divrem(f, divisor).1
    }

    pub fn div_exact(&self, f: &Field, divisor: &Poly) -> Poly {
        let (q, r) = self.divrem(f, divisor);
        debug_assert!(r.is_zero());
        q
    }

    pub fn monic(&self, f: &Field) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(f, f.inv(self.lead()).unwrap())
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, f: &Field, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(f, &b);
            a = b;
            b = r;
        }
        a.monic(f)
    }

    pub fn derivative(&self, f: &Field) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| f.mul(c, f.from_i64(i as i64)))
                .collect(),
        )
    }

    pub fn eval(&self, f: &Field, x: Elem) -> Elem {
        self.coeffs.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn mulmod(&self, f: &Field, other: &Poly, m: &Poly) -> Poly {
        self.mul(f, other).rem(f, m)
    }

    pub fn powmod(&self, f: &Field, mut e: u64, m: &Poly) -> Poly {
        let mut acc = Poly::one().rem(f, m);
        let mut base = self.rem(f, m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mulmod(f, &base, m);
            }
            base = base.mulmod(f, &base, m);
            e >>= 1;
        }
        acc
    }

    /// Ben-Or test: `gcd(f, x^{q^k} - x) = 1` for all `k ≤ deg/2`.
    pub fn is_irreducible(&self, f: &Field) -> bool {
        let d = match self.degree() {
            None | Some(0) => return false,
            Some(d) => d,
        };
        let m = self.monic(f);
        let q = f.order() as u64;
        let mut h = Poly::x();
        for _ in 0..d / 2 {
            h = h.powmod(f, q, &m);
            if !m.gcd(f, &h.sub(f, &Poly::x())).is_one() {
                return false;
            }
        }
        true
    }

    /// Monic irreducible factors with multiplicities, sorted by (degree, coefficients).
    pub fn factor<R: Rng>(&self, f: &Field, rng: &mut R) -> Vec<(Poly, usize)> {
        let mut out = Vec::new();
        if self.deg() == 0 {
            return out;
        }
        for (sf, mult) in self.monic(f).squarefree(f) {
            for (block, d) in sf.distinct_degree(f) {
                for irr in block.equal_degree(f, d, rng) {
                    out.push((irr, mult));
                }
            }
        }
        out.sort_by(|a, b| (a.0.deg(), &a.0.coeffs).cmp(&(b.0.deg(), &b.0.coeffs)));
        // Merge repeats (possible when the same factor shows up under several multiplicities).
        let mut merged: Vec<(Poly, usize)> = Vec::new();
        for (p, m) in out {
            match merged.last_mut() {
                Some((last, lm)) if *last == p => *lm += m,
                _ => merged.push((p, m)),
            }
        }
        merged
    }

    fn squarefree(&self, f: &Field) -> Vec<(Poly, usize)> {
        let p = f.ell() as usize;
        let mut result = Vec::new();
        let fp = self.derivative(f);
        let mut c = self.gcd(f, &fp);
        let mut w = self.div_exact(f, &c);
        let mut i = 1;
        while !w.is_one() && !w.is_zero() {
            let y = w.gcd(f, &c);
            let fac = w.div_exact(f, &y);
            if fac.deg() > 0 {
                result.push((fac, i));
            }
            w = y;
            c = c.div_exact(f, &w);
            i += 1;
        }
        if c.deg() > 0 {
            // c is a p-th power: take coefficient-wise p-th roots of x^{ip} terms.
            let root_exp = (f.order() / f.ell()) as u64;
            let root = Poly::new(
                c.coeffs.iter().step_by(p).map(|&a| f.pow(a, root_exp)).collect(),
            );
            for (fac, m) in root.squarefree(f) {
                result.push((fac, m * p));
            }
        }
        result
    }

    fn distinct_degree(&self, f: &Field) -> Vec<(Poly, usize)> {
        let q = f.order() as u64;
        let mut out = Vec::new();
        let mut rest = self.clone();
        let mut h = Poly::x();
        let mut i = 1;
        while rest.deg() >= 2 * i {
            h = h.powmod(f, q, &rest);
            let g = rest.gcd(f, &h.sub(f, &Poly::x()));
            if !g.is_one() {
                rest = rest.div_exact(f, &g);
                h = h.rem(f, &rest);
                out.push((g, i));
            }
            i += 1;
        }
        if rest.deg() > 0 {
            let d = rest.deg();
            out.push((rest, d));
        }
        out
    }

    fn equal_degree<R: Rng>(&self, f: &Field, d: usize, rng: &mut R) -> Vec<Poly> {
        let n = self.deg();
        if n == d {
            return vec![self.clone()];
        }
        let q = f.order() as u64;
        loop {
            let a = Poly::new((0..n).map(|_| rng.gen_range(0..f.order())).collect());
            if a.deg() == 0 {
                continue;
            }
            let b = if q % 2 == 1 {
                // a^{(q^d-1)/2} = (a^{1+q+...+q^{d-1}})^{(q-1)/2}
                let mut t = a.rem(f, self);
                let mut acc = t.clone();
                for _ in 1..d {
                    t = t.powmod(f, q, self);
                    acc = acc.mulmod(f, &t, self);
                }
                acc.powmod(f, (q - 1) / 2, self).sub(f, &Poly::one())
            } else {
                let k = f.degree() as usize * d;
                let mut t = a.rem(f, self);
                let mut acc = t.clone();
                for _ in 1..k {
                    t = t.mulmod(f, &t, self);
                    acc = acc.add(f, &t);
                }
                acc
            };
            let g = self.gcd(f, &b);
            if g.deg() > 0 && g.deg() < n {
                let other = self.div_exact(f, &g);
                let mut out = g.equal_degree(f, d, rng);
                out.extend(other.equal_degree(f, d, rng));
                return out;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fieldcore::field::Field;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn p(c: &[u32]) -> Poly {
        Poly::new(c.to_vec())
    }

    #[test]
    fn division_and_gcd() {
        let f = Field::new(7, 1).unwrap();
        // (x+1)(x+2) = x^2 + 3x + 2
        let a = p(&[2, 3, 1]);
        let (q, r) = a.divrem(&f, &p(&[1, 1]));
        assert_eq!(q, p(&[2, 1]));
        assert!(r.is_zero());
        assert_eq!(a.gcd(&f, &p(&[2, 1]).mul(&f, &p(&[3, 1]))), p(&[2, 1]));
    }

    #[test]
    fn factors_multiply_back() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for (ell, d) in [(2u64, 1u32), (3, 1), (5, 1), (7, 1), (3, 2), (2, 3)] {
            let f = Field::new(ell, d).unwrap();
            for trial in 0..20u32 {
                let n = 3 + (trial % 6) as usize;
                let mut c: Vec<u32> = (0..n).map(|_| rng.gen_range(0..f.order())).collect();
                c.push(1);
                // force a repeated factor sometimes
                let base = Poly::new(c);
                let poly = if trial % 3 == 0 { base.mul(&f, &base) } else { base };
                let facs = poly.factor(&f, &mut rng);
                let mut prod = Poly::one();
                for (g, m) in &facs {
                    assert!(g.is_irreducible(&f), "{g:?} not irreducible over {f:?}");
                    for _ in 0..*m {
                        prod = prod.mul(&f, g);
                    }
                }
                assert_eq!(prod, poly.monic(&f));
            }
        }
    }

    #[test]
    fn irreducibility_matches_root_search_for_cubics() {
        let f = Field::new(5, 1).unwrap();
        for a in 0..5 {
            for b in 0..5 {
                for c in 0..5 {
                    let poly = p(&[c, b, a, 1]);
                    let has_root = (0..5).any(|t| poly.eval(&f, t) == 0);
                    assert_eq!(poly.is_irreducible(&f), !has_root);
                }
            }
        }
    }
}
