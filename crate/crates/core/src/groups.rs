//! Concrete matrix groups: classical examples and a corpus of small groups.

use crate::fieldcore::{Field, FieldRef, FinMatGroup, Mat};

/// `SL_2(F_ℓ)` from the two elementary transvections.
pub fn sl2(f: &FieldRef) -> FinMatGroup {
    let a = Mat::square_from_ints(f, &[1, 1, 0, 1]).unwrap();
    let b = Mat::square_from_ints(f, &[1, 0, 1, 1]).unwrap();
    FinMatGroup::new(f, 2, vec![a, b]).unwrap()
}

pub fn gl2(f: &FieldRef) -> FinMatGroup {
    let mut gens = sl2(f).generators().to_vec();
    gens.push(Mat::diagonal(f, &[f.generator(), 1]));
    FinMatGroup::new(f, 2, gens).unwrap()
}

pub fn diagonal_torus(f: &FieldRef, n: usize) -> FinMatGroup {
    let gens = (0..n)
        .map(|i| {
            let mut d = vec![1; n];
            d[i] = f.generator();
            Mat::diagonal(f, &d)
        })
        .collect();
    FinMatGroup::new(f, n, gens).unwrap()
}

/// Upper-triangular matrices in `GL_2`.
pub fn borel2(f: &FieldRef) -> FinMatGroup {
    let mut gens = diagonal_torus(f, 2).generators().to_vec();
    gens.push(Mat::square_from_ints(f, &[1, 1, 0, 1]).unwrap());
    FinMatGroup::new(f, 2, gens).unwrap()
}

/// Block-diagonal `SL_2 × SL_2` inside `GL_4`.
pub fn sl2_times_sl2(f: &FieldRef) -> FinMatGroup {
    let i2 = Mat::identity(f, 2);
    let gens = sl2(f)
        .generators()
        .iter()
        .flat_map(|g| [g.direct_sum(&i2), i2.direct_sum(g)])
        .collect();
    FinMatGroup::new(f, 4, gens).unwrap()
}

/// Permutation matrix sending `e_i` to `e_{perm[i]}`.
pub fn perm_matrix(f: &FieldRef, perm: &[usize]) -> Mat {
    let n = perm.len();
    let mut m = Mat::zero(f, n, n);
    for (i, &j) in perm.iter().enumerate() {
        m.set(j, i, 1);
    }
    m
}

pub fn perm_group(f: &FieldRef, perms: &[Vec<usize>]) -> FinMatGroup {
    let n = perms[0].len();
    FinMatGroup::new(f, n, perms.iter().map(|p| perm_matrix(f, p)).collect()).unwrap()
}

fn rotation(m: usize) -> Vec<usize> {
    (0..m).map(|i| (i + 1) % m).collect()
}

fn reflection(m: usize) -> Vec<usize> {
    (0..m).map(|i| (m - i) % m).collect()
}

pub fn cyclic(f: &FieldRef, m: usize) -> FinMatGroup {
    perm_group(f, &[rotation(m)])
}

/// Dihedral group of order `2m`, acting on the vertices of an `m`-gon.
pub fn dihedral(f: &FieldRef, m: usize) -> FinMatGroup {
    perm_group(f, &[rotation(m), reflection(m)])
}

pub fn symmetric(f: &FieldRef, m: usize) -> FinMatGroup {
    let mut t: Vec<usize> = (0..m).collect();
    t.swap(0, 1);
    perm_group(f, &[t, rotation(m)])
}

pub fn alternating4(f: &FieldRef) -> FinMatGroup {
    perm_group(f, &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]])
}

pub fn klein4(f: &FieldRef) -> FinMatGroup {
    perm_group(f, &[vec![1, 0, 3, 2], vec![2, 3, 0, 1]])
}

/// Quaternion group inside `SL_2(F_3)`.
pub fn quaternion8() -> FinMatGroup {
    let f = Field::new(3, 1).unwrap();
    let i = Mat::square_from_ints(&f, &[0, -1, 1, 0]).unwrap();
    let j = Mat::square_from_ints(&f, &[1, 1, 1, -1]).unwrap();
    FinMatGroup::new(&f, 2, vec![i, j]).unwrap()
}

/// Extraspecial group of order 27 and exponent 3, as affine maps of `F_3^2`.
pub fn heisenberg27(f: &FieldRef) -> FinMatGroup {
    let idx = |x: usize, y: usize| 3 * x + y;
    let mut a = vec![0; 9];
    let mut b = vec![0; 9];
    for x in 0..3 {
        for y in 0..3 {
            a[idx(x, y)] = idx((x + 1) % 3, y);
            b[idx(x, y)] = idx(x, (y + x) % 3);
        }
    }
    perm_group(f, &[a, b])
}

/// A named finite group together with a module field that splits it.
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub group: FinMatGroup,
    pub module_field: FieldRef,
}

/// Groups of order at most 48, each paired with a field of size ≤ 121 that is coprime
/// to the order and contains enough roots of unity.
pub fn corpus() -> Vec<CorpusEntry> {
    let f2 = Field::new(2, 1).unwrap();
    let f3 = Field::new(3, 1).unwrap();
    let field = |q: u64, d: u32| Field::new(q, d).unwrap();
    let entries: Vec<(&'static str, FinMatGroup, FieldRef)> = vec![
        ("C2", cyclic(&f2, 2), field(3, 1)),
        ("C3", cyclic(&f2, 3), field(7, 1)),
        ("C4", cyclic(&f2, 4), field(5, 1)),
        ("C2xC2", klein4(&f2), field(3, 1)),
        ("C6", cyclic(&f2, 6), field(7, 1)),
        ("S3", symmetric(&f2, 3), field(7, 1)),
        ("D8", dihedral(&f2, 4), field(5, 1)),
        ("Q8", quaternion8(), field(5, 1)),
        ("D10", dihedral(&f2, 5), field(11, 1)),
        ("A4", alternating4(&f2), field(7, 1)),
        ("D12", dihedral(&f2, 6), field(7, 1)),
        ("S4", symmetric(&f2, 4), field(13, 1)),
        ("SL2(3)", sl2(&f3), field(13, 1)),
        ("Heis27", heisenberg27(&f2), field(7, 1)),
        ("GL2(3)", gl2(&f3), field(7, 2)),
    ];
    entries
        .into_iter()
        .map(|(name, g, module_field)| CorpusEntry {
            name,
            group: g.materialize(1000).unwrap(),
            module_field,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_orders() {
        let orders: Vec<(&str, usize)> = corpus().iter().map(|e| (e.name, e.group.order().unwrap())).collect();
        assert_eq!(
            orders,
            vec![
                ("C2", 2),
                ("C3", 3),
                ("C4", 4),
                ("C2xC2", 4),
                ("C6", 6),
                ("S3", 6),
                ("D8", 8),
                ("Q8", 8),
                ("D10", 10),
                ("A4", 12),
                ("D12", 12),
                ("S4", 24),
                ("SL2(3)", 24),
                ("Heis27", 27),
                ("GL2(3)", 48)
            ]
        );
    }

    #[test]
    fn classical_orders() {
        let f5 = Field::new(5, 1).unwrap();
        assert_eq!(gl2(&f5).materialize(10_000).unwrap().order(), Some(480));
        assert_eq!(borel2(&f5).materialize(10_000).unwrap().order(), Some(80));
        assert_eq!(diagonal_torus(&f5, 2).materialize(10_000).unwrap().order(), Some(16));
        assert_eq!(sl2_times_sl2(&f5).materialize(100_000).unwrap().order(), Some(14_400));
    }
}
