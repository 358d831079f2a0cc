//! Integer row reduction: Hermite normal form, coordinates in a lattice basis, left kernels.

use num_rational::Ratio;

pub type IntMat = Vec<Vec<i64>>;

/// Row-style Hermite normal form with the unimodular transform: `U · M = H`.
///
/// The first `rank` rows of `H` are nonzero with strictly increasing pivot columns,
/// positive pivots and entries above each pivot reduced into `[0, pivot)`.
pub struct Hnf {
    pub h: IntMat,
    pub u: IntMat,
    pub pivots: Vec<usize>,
}

impl Hnf {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Nonzero rows: a basis of the row lattice.
    pub fn basis(&self) -> IntMat {
        self.h[..self.rank()].to_vec()
    }

    /// Rows `v` of `U` with `v · M = 0`, a basis of the integer left kernel.
    pub fn left_kernel(&self) -> IntMat {
        self.u[self.rank()..].to_vec()
    }
}

fn axpy(target: &mut [i64], c: i64, src: &[i64]) {
    for (t, s) in target.iter_mut().zip(src) {
        *t -= c * s;
    }
}

pub fn hnf(m: &IntMat, cols: usize) -> Hnf {
    let rows = m.len();
    let mut h = m.clone();
    let mut u: IntMat = (0..rows)
        .map(|i| {
            let mut e = vec![0; rows];
            e[i] = 1;
            e
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        loop {
            let best = (r..rows).filter(|&i| h[i][c] != 0).min_by_key(|&i| h[i][c].abs());
            let Some(p) = best else { break };
            h.swap(r, p);
            u.swap(r, p);
            let mut done = true;
            for i in r + 1..rows {
                if h[i][c] != 0 {
                    let q = h[i][c] / h[r][c];
                    let (hr, ur) = (h[r].clone(), u[r].clone());
                    axpy(&mut h[i], q, &hr);
                    axpy(&mut u[i], q, &ur);
                    if h[i][c] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if h[r][c] == 0 {
            continue;
        }
        if h[r][c] < 0 {
            h[r].iter_mut().for_each(|x| *x = -*x);
            u[r].iter_mut().for_each(|x| *x = -*x);
        }
        let (hr, ur) = (h[r].clone(), u[r].clone());
        for i in 0..r {
            let q = h[i][c].div_euclid(hr[c]);
            axpy(&mut h[i], q, &hr);
            axpy(&mut u[i], q, &ur);
        }
        pivots.push(c);
        r += 1;
    }
    Hnf { h, u, pivots }
}

/// Coordinates of `w` in an echelon basis; `None` if `w` is outside the lattice.
pub fn coordinates(basis: &IntMat, pivots: &[usize], w: &[i64]) -> Option<Vec<i64>> {
    let mut rest = w.to_vec();
    let mut out = Vec::with_capacity(basis.len());
    for (b, &p) in basis.iter().zip(pivots) {
        if rest[p] % b[p] != 0 {
            return None;
        }
        let c = rest[p] / b[p];
        axpy(&mut rest, c, b);
        out.push(c);
    }
    rest.iter().all(|&x| x == 0).then_some(out)
}

pub type Q = Ratio<i128>;

/// Inverse of a square matrix over the rationals.
pub fn rational_inverse(m: &[Vec<i64>]) -> Option<Vec<Vec<Q>>> {
    let k = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Q> = row.iter().map(|&x| Q::from_integer(x as i128)).collect();
            r.extend((0..k).map(|j| Q::from_integer((i == j) as i128)));
            r
        })
        .collect();
    for c in 0..k {
        let p = (c..k).find(|&i| a[i][c] != Q::from_integer(0))?;
        a.swap(c, p);
        let inv = a[c][c].recip();
        a[c].iter_mut().for_each(|x| *x *= inv);
        let pr = a[c].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != c && row[c] != Q::from_integer(0) {
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&pr) {
                    *x -= f * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[k..].to_vec()).collect())
}

pub fn rational_rank(rows: &[Vec<i64>], cols: usize) -> usize {
    hnf(&rows.to_vec(), cols).rank()
}

pub fn det(m: &[Vec<i64>]) -> i128 {
    let k = m.len();
    let mut a: Vec<Vec<Q>> = m.iter().map(|r| r.iter().map(|&x| Q::from_integer(x as i128)).collect()).collect();
    let mut d = Q::from_integer(1);
    for c in 0..k {
        let Some(p) = (c..k).find(|&i| a[i][c] != Q::from_integer(0)) else { return 0 };
        if p != c {
            a.swap(c, p);
            d = -d;
        }
        d *= a[c][c];
        let pr = a[c].clone();
        for row in a.iter_mut().skip(c + 1) {
            let f = row[c] / pr[c];
            for (x, &y) in row.iter_mut().zip(&pr) {
                *x -= f * y;
            }
        }
    }
    d.to_integer()
}

pub fn mat_mul(a: &IntMat, b: &IntMat) -> IntMat {
    a.iter()
        .map(|row| {
            (0..b.first().map_or(0, |r| r.len()))
                .map(|j| row.iter().zip(b).map(|(&x, br)| x * br[j]).sum())
                .collect()
        })
        .collect()
}

pub fn vec_mul(v: &[i64], b: &IntMat, cols: usize) -> Vec<i64> {
    (0..cols).map(|j| v.iter().zip(b).map(|(&x, br)| x * br[j]).sum()).collect()
}
