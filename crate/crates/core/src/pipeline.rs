//! Envelope reports for finite matrix groups, and case elimination over Table A.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fieldcore::group::DEFAULT_CAP;
use crate::fieldcore::hom::commutant;
use crate::fieldcore::meataxe::{composition_factors, socle_dim};
use crate::fieldcore::{FinMatGroup, MeatAxeConfig, ModuleRep};
use crate::io::{parse_matrix, GroupInput};
use crate::nori::{lie_rank_estimate, nori_points, LieRank, NoriConfig};
use crate::smallrep::{table_a, TableARow};
use crate::tame::{tame_weight_strings, tame_weights_of_rep};

pub const REPORT_VERSION: &str = "1";

#[derive(Clone, Debug)]
pub struct PipelineConfig {
    pub seed: u64,
    pub cap: usize,
    pub ell_min_factor: u32,
    pub rank_samples: usize,
    pub meataxe_budget: usize,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig { seed: 1, cap: DEFAULT_CAP, ell_min_factor: 4, rank_samples: 16, meataxe_budget: 200 }
    }
}

impl PipelineConfig {
    fn nori(&self) -> NoriConfig {
        NoriConfig { cap: self.cap, ell_min_factor: self.ell_min_factor, rank_samples: self.rank_samples, seed: self.seed }
    }
    fn meataxe(&self) -> MeatAxeConfig {
        MeatAxeConfig { seed: self.seed, budget: self.meataxe_budget }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NoriSummary {
    pub plus_order: usize,
    pub nori_order: usize,
    pub quotient_order: usize,
    pub quotient_bound: u64,
    pub lie_dim: usize,
    pub derived_lie_dim: usize,
    pub rank_estimate: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommutantDims {
    pub group: usize,
    pub nori_points: Option<usize>,
    pub derived_subgroup: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TameSection {
    /// The weights of the `F_ℓ`-restriction, one digit per `F_ℓ`-dimension.
    pub convention: String,
    pub digits: Vec<u64>,
    /// Digit strings of the composition factors over the coefficient field.
    pub strings: Vec<Vec<u64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub stage: String,
    pub kind: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnvelopeReport {
    pub version: String,
    pub input_digest: String,
    pub seed: u64,
    pub cap: usize,
    pub ell: u64,
    pub d: u32,
    pub n: usize,
    pub group_order: usize,
    pub derived_order: Option<usize>,
    pub nori: Option<NoriSummary>,
    pub commutant_dims: CommutantDims,
    pub factor_dims: Vec<usize>,
    pub socle_dim: Option<usize>,
    pub expected_rank: Option<usize>,
    pub tame: Option<TameSection>,
    pub predicates: BTreeMap<String, bool>,
    pub warnings: Vec<String>,
    pub failures: Vec<Failure>,
}

struct Collector {
    failures: Vec<Failure>,
}

impl Collector {
    fn run<T>(&mut self, stage: &str, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.failures.push(Failure { stage: stage.into(), kind: e.kind().into(), message: e.to_string() });
                None
            }
        }
    }
}

fn commutant_dim(g: &FinMatGroup) -> Result<usize> {
    Ok(commutant(&ModuleRep::natural(g))?.1)
}

/// Runs every stage on the natural module of the input group.
///
/// Only a failure to enumerate the group itself is an error; later stages record their
/// errors in `failures` and leave their fields empty.
pub fn envelope_report(group: &GroupInput, cfg: &PipelineConfig) -> Result<EnvelopeReport> {
    let g = group.build()?.materialize(cfg.cap)?;
    let field = g.field().clone();
    let n = g.n();
    let mut c = Collector { failures: Vec::new() };
    let mut warnings = Vec::new();
    let mc = cfg.meataxe();

    let nori = c.run("nori", nori_points(&g, &cfg.nori()));
    let nori_summary = nori.as_ref().and_then(|r| {
        warnings.extend(r.warnings.iter().cloned());
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let lie = if r.lie_algebra.is_empty() {
            LieRank { dim: 0, derived_dim: 0, rank_estimate: 0, samples: 0 }
        } else {
            c.run("lie_rank", lie_rank_estimate(&r.lie_algebra, cfg.rank_samples, &mut rng))?
        };
        Some(NoriSummary {
            plus_order: r.plus_order(),
            nori_order: r.nori_order(),
            quotient_order: r.quotient_order,
            quotient_bound: 1u64 << (n - 1).min(63),
            lie_dim: lie.dim,
            derived_lie_dim: lie.derived_dim,
            rank_estimate: lie.rank_estimate,
        })
    });

    let derived = c.run("derived_subgroup", g.derived_subgroup(cfg.cap));
    let natural = ModuleRep::natural(&g);
    let group_comm = commutant(&natural)?.1;
    let commutant_dims = CommutantDims {
        group: group_comm,
        nori_points: nori.as_ref().and_then(|r| c.run("commutant_nori", commutant_dim(&r.nori_points))),
        derived_subgroup: derived.as_ref().and_then(|d| c.run("commutant_derived", commutant_dim(d))),
    };

    let mut factor_dims: Vec<usize> = c
        .run("composition_factors", composition_factors(&natural, &mc))
        .map(|fs| fs.iter().map(|f| f.dim()).collect())
        .unwrap_or_default();
    factor_dims.sort();
    let socle = c.run("socle", socle_dim(&natural, &mc));

    let tame = group.inertia.as_ref().and_then(|m| {
        let mat = c.run("tame", parse_matrix(&field, m, n))?;
        let weights = c.run("tame", tame_weights_of_rep(&mat, &mc))?;
        let strings = c.run("tame", tame_weight_strings(&mat, &mc))?;
        Some(TameSection {
            convention: "f_ell_restriction".into(),
            digits: weights.digits,
            strings: strings.characters.iter().map(|ch| ch.digits()).collect(),
        })
    });

    let mut predicates = BTreeMap::new();
    if !factor_dims.is_empty() {
        predicates.insert("natural_irreducible".into(), factor_dims.len() == 1);
        predicates.insert("natural_absolutely_irreducible".into(), factor_dims.len() == 1 && group_comm == 1);
    }
    if let Some(s) = socle {
        predicates.insert("natural_semisimple".into(), s == n);
    }
    if let Some(nc) = commutant_dims.nori_points {
        predicates.insert("commutant_equals_nori_commutant".into(), nc == group_comm);
    }
    if let Some(dc) = commutant_dims.derived_subgroup {
        predicates.insert("commutant_equals_derived_commutant".into(), dc == group_comm);
    }
    if let Some(ns) = &nori_summary {
        predicates.insert("quotient_bound".into(), ns.quotient_order as u64 <= ns.quotient_bound);
        if let Some(r) = group.expected_rank {
            predicates.insert("rank_matches_expected".into(), ns.rank_estimate == r);
        }
    }

    Ok(EnvelopeReport {
        version: REPORT_VERSION.into(),
        input_digest: group.digest(),
        seed: cfg.seed,
        cap: cfg.cap,
        ell: field.ell() as u64,
        d: field.degree(),
        n,
        group_order: g.order().unwrap(),
        derived_order: derived.as_ref().and_then(|d| d.order()),
        nori: nori_summary,
        commutant_dims,
        factor_dims,
        socle_dim: socle,
        expected_rank: group.expected_rank,
        tame,
        predicates,
        warnings,
        failures: c.failures,
    })
}

pub fn summary(r: &EnvelopeReport) -> String {
    let mut s = String::new();
    let opt = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
    let _ = writeln!(s, "group of order {} in GL_{}(F_{}^{})", r.group_order, r.n, r.ell, r.d);
    if let Some(nori) = &r.nori {
        let _ = writeln!(
            s,
            "G+ order {}, Nori points order {}, quotient {} (bound {})",
            nori.plus_order, nori.nori_order, nori.quotient_order, nori.quotient_bound
        );
        let _ = writeln!(
            s,
            "Lie algebra dim {}, derived dim {}, rank estimate {}",
            nori.lie_dim, nori.derived_lie_dim, nori.rank_estimate
        );
    }
    let cd = &r.commutant_dims;
    let _ = writeln!(
        s,
        "commutant dims: group {}, Nori points {}, derived subgroup {}",
        cd.group,
        opt(cd.nori_points),
        opt(cd.derived_subgroup)
    );
    let _ = writeln!(s, "composition factor dims: {:?}", r.factor_dims);
    if let Some(t) = &r.tame {
        let _ = writeln!(s, "tame inertia weights ({}): {:?}", t.convention, t.digits);
    }
    for (k, v) in &r.predicates {
        let _ = writeln!(s, "{k}: {v}");
    }
    for w in &r.warnings {
        let _ = writeln!(s, "warning: {w}");
    }
    for f in &r.failures {
        let _ = writeln!(s, "failure in {}: {} ({})", f.stage, f.kind, f.message);
    }
    s
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Constraint {
    SelfDual(bool),
    Rank(usize),
    ZeroWeightCount(usize),
    Symmetric(bool),
    AntipodalFree(bool),
    MidpointRelation(bool),
}

impl Constraint {
    /// Parses `self_dual`, `not_self_dual`, `rank=K`, `zero_weight_count=K`, `symmetric`,
    /// `antipodal_free`, `midpoint_relation` and their `not_` forms.
    pub fn parse(s: &str) -> Result<Constraint> {
        let unknown = || Error::UnknownPredicate(s.to_string());
        let s = s.trim();
        if let Some((key, val)) = s.split_once('=') {
            let k: usize = val.trim().parse().map_err(|_| unknown())?;
            return match key.trim() {
                "rank" => Ok(Constraint::Rank(k)),
                "zero_weight_count" => Ok(Constraint::ZeroWeightCount(k)),
                _ => Err(unknown()),
            };
        }
        let (negated, name) = match s.strip_prefix("not_") {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let c = match name {
            "self_dual" => Constraint::SelfDual(!negated),
            "symmetric" => Constraint::Symmetric(!negated),
            "antipodal_free" => Constraint::AntipodalFree(!negated),
            "midpoint_relation" => Constraint::MidpointRelation(!negated),
            _ => return Err(unknown()),
        };
        Ok(c)
    }

    pub fn holds(&self, row: &TableARow) -> bool {
        let fc = &row.formal_char;
        match *self {
            Constraint::SelfDual(b) => row.self_dual == b,
            Constraint::Rank(k) => row.rank == k,
            Constraint::ZeroWeightCount(k) => fc.predicates().zero_weight_count == k,
            Constraint::Symmetric(b) => fc.predicates().is_symmetric == b,
            Constraint::AntipodalFree(b) => fc.predicates().antipodal_free == b,
            Constraint::MidpointRelation(b) => fc.has_midpoint_relation() == b,
        }
    }
}

pub fn eliminate_cases<S: AsRef<str>>(n: usize, constraints: &[S]) -> Result<Vec<TableARow>> {
    let parsed = constraints.iter().map(|c| Constraint::parse(c.as_ref())).collect::<Result<Vec<_>>>()?;
    Ok(table_a(n)?.into_iter().filter(|row| parsed.iter().all(|c| c.holds(row))).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fieldcore::{Field, Mat};
    use crate::groups;

    fn labels(rows: &[TableARow]) -> Vec<&str> {
        rows.iter().map(|r| r.label.as_str()).collect()
    }

    #[test]
    fn elimination_examples() {
        assert_eq!(labels(&eliminate_cases(4, &["rank=1"]).unwrap()), vec!["(4A1)"]);
        assert_eq!(labels(&eliminate_cases(6, &["self_dual", "rank=3"]).unwrap()), vec!["(6A3)", "(6C3)"]);
        assert_eq!(labels(&eliminate_cases(5, &["zero_weight_count=0"]).unwrap()), vec!["(5A4)"]);
        let none: [&str; 0] = [];
        for n in 2..=6 {
            assert_eq!(eliminate_cases(n, &none).unwrap(), table_a(n).unwrap());
        }
        assert_eq!(eliminate_cases(4, &["rank=x"]).unwrap_err(), Error::UnknownPredicate("rank=x".into()));
        assert_eq!(eliminate_cases(4, &["bogus"]).unwrap_err(), Error::UnknownPredicate("bogus".into()));
        assert!(eliminate_cases(7, &none).is_err());
    }

    #[test]
    fn sl2_report() {
        let f11 = Field::new(11, 1).unwrap();
        let group = GroupInput { expected_rank: Some(1), ..GroupInput::from_group(&groups::sl2(&f11)) };
        let r = envelope_report(&group, &PipelineConfig::default()).unwrap();
        assert_eq!(r.group_order, 1320);
        let nori = r.nori.as_ref().unwrap();
        assert_eq!((nori.plus_order, nori.nori_order, nori.quotient_order), (1320, 1320, 1));
        assert_eq!(nori.rank_estimate, 1);
        assert_eq!(r.commutant_dims, CommutantDims { group: 1, nori_points: Some(1), derived_subgroup: Some(1) });
        assert_eq!(r.factor_dims, vec![2]);
        assert!(r.predicates.values().all(|&b| b), "{:?}", r.predicates);
        assert!(r.failures.is_empty());
        assert_eq!(r, envelope_report(&group, &PipelineConfig::default()).unwrap());
    }

    #[test]
    fn torus_report() {
        let f11 = Field::new(11, 1).unwrap();
        let group = GroupInput::from_group(&groups::diagonal_torus(&f11, 2));
        let r = envelope_report(&group, &PipelineConfig::default()).unwrap();
        let nori = r.nori.as_ref().unwrap();
        assert_eq!((nori.plus_order, nori.nori_order), (1, 1));
        assert_eq!(r.commutant_dims.group, 2);
        assert_eq!(r.commutant_dims.nori_points, Some(4));
        assert_eq!(r.factor_dims, vec![1, 1]);
        assert!(!r.predicates["commutant_equals_nori_commutant"]);
        assert!(r.predicates["natural_semisimple"]);
    }

    #[test]
    fn tensor_square_report_flags_reducibility() {
        let f11 = Field::new(11, 1).unwrap();
        let scramble = Mat::square_from_ints(&f11, &[1, 2, 0, 3, 0, 1, 4, 0, 5, 0, 1, 2, 1, 1, 1, 1]).unwrap();
        let si = scramble.inverse().unwrap();
        let gens = groups::sl2(&f11).generators().iter().map(|g| si.mul(&g.kron(g)).mul(&scramble)).collect();
        let g = FinMatGroup::new(&f11, 4, gens).unwrap();
        let mut group = GroupInput::from_group(&g);
        group.inertia = Some(crate::io::matrix_rows(&Mat::diagonal(&f11, &[2, 1, 1, 1])));
        let r = envelope_report(&group, &PipelineConfig::default()).unwrap();
        assert_eq!(r.factor_dims, vec![1, 3]);
        assert!(!r.predicates["natural_irreducible"]);
        assert_eq!(r.tame.as_ref().unwrap().digits, vec![0, 0, 0, 1]);
        assert!(summary(&r).contains("composition factor dims: [1, 3]"));
    }

    #[test]
    fn stage_errors_become_failures() {
        let f9 = Field::new(3, 2).unwrap();
        let group = GroupInput::from_group(&FinMatGroup::new(&f9, 1, vec![Mat::diagonal(&f9, &[f9.generator()])]).unwrap());
        let r = envelope_report(&group, &PipelineConfig::default()).unwrap();
        assert!(r.nori.is_none());
        assert_eq!(r.failures[0].kind, "NotPrimeField");
        let cfg = PipelineConfig { cap: 10, ..Default::default() };
        let f11 = Field::new(11, 1).unwrap();
        let big = GroupInput::from_group(&groups::sl2(&f11));
        assert_eq!(envelope_report(&big, &cfg).unwrap_err(), Error::ClosureOverflow(10));
    }
}
