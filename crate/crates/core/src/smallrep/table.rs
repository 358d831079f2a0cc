//! Irreducible connected semisimple subgroups of `GL_n` for small `n`, as highest-weight data.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::rootdata::{Family, RootSystem, SimpleType};
use super::weights::{freudenthal_weights, is_self_dual, weyl_dimension_simple, IrrepLabel};
use crate::charlattice::FormalCharacter;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableARow {
    pub n: usize,
    pub label: String,
    pub group: String,
    pub rep: String,
    pub highest_weight: IrrepLabel,
    pub self_dual: bool,
    pub rank: usize,
    pub zero_weight_count: usize,
    pub formal_char: FormalCharacter,
}

/// Nontrivial irreducible representations of one simple type with dimension at most `n`.
pub fn small_irreps(ty: SimpleType, n: u64) -> Vec<(Vec<i64>, u64)> {
    let rs = RootSystem::new(ty);
    let mut out = Vec::new();
    let mut lambda = vec![0; ty.rank];
    extend(&rs, &mut lambda, 0, n, &mut out);
    out.retain(|(l, _)| l.iter().any(|&x| x > 0));
    out
}

fn extend(rs: &RootSystem, lambda: &mut Vec<i64>, i: usize, n: u64, out: &mut Vec<(Vec<i64>, u64)>) {
    if i == lambda.len() {
        let d = weyl_dimension_simple(rs, lambda).unwrap();
        out.push((lambda.clone(), d));
        return;
    }
    loop {
        if weyl_dimension_simple(rs, lambda).unwrap() > n {
            break;
        }
        extend(rs, lambda, i + 1, n, out);
        lambda[i] += 1;
    }
    lambda[i] = 0;
}

fn simple_types(max_rank: usize) -> Vec<SimpleType> {
    let mut out = Vec::new();
    for family in [Family::A, Family::B, Family::C, Family::D] {
        for r in 1..=max_rank {
            if let Ok(t) = SimpleType::new(family, r) {
                out.push(t);
            }
        }
    }
    out
}

fn canonical_factor(ty: SimpleType, lambda: &[i64]) -> Vec<i64> {
    ty.diagram_automorphisms()
        .iter()
        .map(|p| p.iter().map(|&j| lambda[j]).collect::<Vec<i64>>())
        .max()
        .unwrap()
}

fn subscript_name(ty: SimpleType) -> String {
    let r = ty.rank;
    match ty.family {
        Family::A => format!("SL_{}", r + 1),
        Family::B => format!("Spin_{}", 2 * r + 1),
        Family::C => format!("Sp_{}", 2 * r),
        Family::D => format!("Spin_{}", 2 * r),
    }
}

/// Names of the faithful image and representation for one factor.
fn factor_names(ty: SimpleType, lambda: &[i64]) -> (String, String) {
    let r = ty.rank;
    let first = |k: i64| lambda[0] == k && lambda[1..].iter().all(|&x| x == 0);
    let std = String::from("std");
    match ty.family {
        Family::A if r == 1 && lambda[0] == 1 => ("SL_2".into(), std),
        Family::A if r == 1 => ("SL_2".into(), format!("S^{}(std)", lambda[0])),
        Family::A if first(1) => (subscript_name(ty), std),
        Family::A if first(2) => (subscript_name(ty), "S^2(std)".into()),
        Family::A if r == 3 && lambda == [0, 1, 0] => ("SO_6".into(), std),
        Family::B if r == 2 && lambda == [0, 1] => ("Sp_4".into(), std),
        Family::B if first(1) => (format!("SO_{}", 2 * r + 1), std),
        Family::C if first(1) => (subscript_name(ty), std),
        Family::D if first(1) => (format!("SO_{}", 2 * r), std),
        _ => (subscript_name(ty), format!("V{lambda:?}")),
    }
}

fn family_letter(f: Family) -> char {
    match f {
        Family::A => 'A',
        Family::B => 'B',
        Family::C => 'C',
        Family::D => 'D',
    }
}

fn make_row(n: usize, mut factors: Vec<(SimpleType, Vec<i64>, u64)>) -> Result<TableARow> {
    factors.sort_by(|a, b| (a.2, a.0, &a.1).cmp(&(b.2, b.0, &b.1)));
    let label = format!(
        "({})",
        factors
            .iter()
            .map(|(t, _, d)| format!("{d}{}{}", family_letter(t.family), t.rank))
            .collect::<Vec<_>>()
            .join("⊗")
    );
    let names: Vec<(String, String)> = factors.iter().map(|(t, l, _)| factor_names(*t, l)).collect();
    let two_std = factors.len() == 2
        && factors.iter().all(|(t, l, _)| t.family == Family::A && t.rank == 1 && l[0] == 1);
    let (group, rep) = if two_std {
        ("SO_4".to_string(), "std".to_string())
    } else {
        (
            names.iter().map(|(g, _)| g.as_str()).collect::<Vec<_>>().join("×"),
            names.iter().map(|(_, r)| r.as_str()).collect::<Vec<_>>().join("⊗"),
        )
    };
    let highest_weight = IrrepLabel::new(factors.iter().map(|(t, l, _)| (*t, l.clone())).collect())?;
    let fc = freudenthal_weights(&highest_weight)?;
    if fc.dim() != n {
        return Err(Error::InvariantViolation(format!("{label} has {} weights", fc.dim())));
    }
    Ok(TableARow {
        n,
        label,
        group,
        rep,
        self_dual: is_self_dual(&highest_weight)?,
        rank: highest_weight.rank(),
        zero_weight_count: fc.predicates().zero_weight_count,
        formal_char: fc.normalize(),
        highest_weight,
    })
}

/// Rows for dimension `n`: tensor products of nontrivial irreducibles of simple factors,
/// total rank below `n`, identified under diagram automorphisms and permutation of factors.
pub fn table_a(n: usize) -> Result<Vec<TableARow>> {
    if !(2..=6).contains(&n) {
        return Err(Error::OutOfRange(format!("table_a is defined for 2 <= n <= 6, got {n}")));
    }
    let mut pieces: Vec<(SimpleType, Vec<i64>, u64)> = Vec::new();
    for ty in simple_types(n - 1) {
        for (l, d) in small_irreps(ty, n as u64) {
            if (n as u64).is_multiple_of(d) {
                pieces.push((ty, l, d));
            }
        }
    }
    let mut seen: BTreeSet<Vec<(SimpleType, Vec<i64>)>> = BTreeSet::new();
    let mut rows = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    combine(&pieces, n as u64, n - 1, 0, &mut stack, &mut |chosen| {
        let mut key: Vec<(SimpleType, Vec<i64>)> =
            chosen.iter().map(|&i| (pieces[i].0, canonical_factor(pieces[i].0, &pieces[i].1))).collect();
        key.sort();
        if seen.insert(key) {
            rows.push(
                chosen
                    .iter()
                    .map(|&i| (pieces[i].0, canonical_factor(pieces[i].0, &pieces[i].1), pieces[i].2))
                    .collect::<Vec<_>>(),
            );
        }
    });
    let mut out = rows.into_iter().map(|f| make_row(n, f)).collect::<Result<Vec<_>>>()?;
    out.sort_by(|a, b| {
        let fam = |r: &TableARow| r.highest_weight.factors.iter().map(|(t, _)| t.family).collect::<Vec<_>>();
        (!a.self_dual, a.rank, fam(a), &a.label).cmp(&(!b.self_dual, b.rank, fam(b), &b.label))
    });
    Ok(out)
}

fn combine(
    pieces: &[(SimpleType, Vec<i64>, u64)],
    remaining: u64,
    rank_left: usize,
    start: usize,
    stack: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if remaining == 1 {
        if !stack.is_empty() {
            emit(stack);
        }
        return;
    }
    for i in start..pieces.len() {
        let (t, _, d) = &pieces[i];
        if !remaining.is_multiple_of(*d) || t.rank > rank_left {
            continue;
        }
        stack.push(i);
        combine(pieces, remaining / d, rank_left - t.rank, i, stack, emit);
        stack.pop();
    }
}
