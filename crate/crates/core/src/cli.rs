//! The `envlab` command line. Every subcommand reads JSON (or flags) and writes one report.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::charlattice::{fc_equivalent, FcPredicates, FormalCharacter, Verdict, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::fieldcore::group::DEFAULT_CAP;
use crate::fieldcore::{MeatAxeConfig, ModuleRep};
use crate::io::{from_json, matrix_rows, parse_matrix, CliffordCase, GroupInput, MackeyCase, MatrixInput, MatrixRows};
use crate::mackey::{clifford_decompose, induced_commutant_dim, mackey_irreducible, MackeyCertificate, SubgroupDatum};
use crate::nori::{nori_points, NoriConfig};
use crate::pipeline::{eliminate_cases, envelope_report, summary, PipelineConfig};
use crate::smallrep::{freudenthal_weights, is_self_dual, table_a, IrrepLabel, SimpleType, TableARow};
use crate::tame::{bounded_weights_check, tame_weight_strings, tame_weights_of_rep, TameCharacter};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_RESOURCE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    #[arg(long, global = true, env = "ENVLAB_INPUT")]
    input: Option<PathBuf>,
    #[arg(long, global = true, env = "ENVLAB_OUTPUT")]
    output: Option<PathBuf>,
    #[arg(long, global = true, env = "ENVLAB_SEED", default_value_t = 1)]
    seed: u64,
    #[arg(long, global = true, env = "ENVLAB_CAP", default_value_t = DEFAULT_CAP, value_parser = positive)]
    cap: usize,
    #[arg(long, global = true, env = "ENVLAB_FORMAT", value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Warn when ell is below this multiple of n.
    #[arg(long, global = true, env = "ENVLAB_ELL_MIN_FACTOR", default_value_t = 4)]
    ell_min_factor: u32,
}

fn positive(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Parser, Debug)]
#[command(name = "envlab", version, about = "Finite-level computations with matrix groups over finite fields")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// G+, the Nori points and the Lie algebra of a group read from --input.
    Nori,
    /// Full envelope report for a group read from --input.
    Envelope,
    /// Formal character of an irreducible (--rep), or equivalence of two characters from --input.
    FormalChar {
        /// One simple factor as TYPE:WEIGHT, e.g. B2:0,1; repeat for products.
        #[arg(long = "rep")]
        reps: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Irreducible semisimple subgroups of GL_n by highest weight.
    TableA {
        #[arg(long)]
        n: usize,
    },
    /// Digits of a tame character, or tame inertia weights of a matrix from --input.
    Tame {
        #[arg(long)]
        ell: Option<u64>,
        #[arg(long, default_value_t = 1)]
        d: u32,
        #[arg(long)]
        e: Option<i64>,
        /// With --n2, check the weights of the twist by the n1-th cyclotomic power.
        #[arg(long, default_value_t = 0)]
        n1: u64,
        #[arg(long)]
        n2: Option<u64>,
    },
    /// Mackey's irreducibility criterion on every case in --input.
    Mackey,
    /// Clifford decomposition of the module in --input over the normal subgroup given there.
    Clifford,
    /// Table A rows of dimension n that satisfy every --constraint.
    Eliminate {
        #[arg(long)]
        n: usize,
        #[arg(long = "constraint")]
        constraints: Vec<String>,
    },
}

enum Output {
    Json(serde_json::Value),
    Text(String),
}

fn read_input(common: &Common) -> Result<String> {
    let path = common.input.as_ref().ok_or_else(|| Error::InvalidInput("--input is required".into()))?;
    std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
}

fn to_value<T: Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).expect("report types serialise")
}

fn csv_text<R: Serialize>(rows: &[R]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(|e| Error::InvalidInput(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::InvalidInput(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

#[derive(Serialize, Deserialize)]
pub struct NoriReport {
    pub seed: u64,
    pub cap: usize,
    pub order: usize,
    pub plus_order: usize,
    pub nori_order: usize,
    pub quotient_order: usize,
    pub lie_dim: usize,
    pub warnings: Vec<String>,
}

fn cmd_nori(common: &Common) -> Result<Output> {
    let group: GroupInput = from_json(&read_input(common)?)?;
    let g = group.build()?;
    let cfg = NoriConfig { cap: common.cap, ell_min_factor: common.ell_min_factor, seed: common.seed, ..Default::default() };
    let r = nori_points(&g, &cfg)?;
    let report = NoriReport {
        seed: common.seed,
        cap: common.cap,
        order: r.order,
        plus_order: r.plus_order(),
        nori_order: r.nori_order(),
        quotient_order: r.quotient_order,
        lie_dim: r.lie_algebra.len(),
        warnings: r.warnings.clone(),
    };
    Ok(match common.format {
        Format::Text => Output::Text(format!(
            "order {}\nG+ order {}\nNori points order {}\nquotient order {}\nLie algebra dim {}\n",
            report.order, report.plus_order, report.nori_order, report.quotient_order, report.lie_dim
        )),
        _ => Output::Json(to_value(&report)),
    })
}

fn cmd_envelope(common: &Common) -> Result<Output> {
    let group: GroupInput = from_json(&read_input(common)?)?;
    let cfg = PipelineConfig { seed: common.seed, cap: common.cap, ell_min_factor: common.ell_min_factor, ..Default::default() };
    let report = envelope_report(&group, &cfg)?;
    Ok(match common.format {
        Format::Text => Output::Text(summary(&report)),
        _ => Output::Json(to_value(&report)),
    })
}

fn parse_rep(s: &str) -> Result<(SimpleType, Vec<i64>)> {
    let bad = || Error::InvalidInput(format!("expected TYPE:WEIGHT such as B2:0,1, got {s}"));
    let (ty, w) = s.split_once(':').ok_or_else(bad)?;
    let ty = SimpleType::parse(ty.trim())?;
    let w = w.split(',').map(|x| x.trim().parse::<i64>().map_err(|_| bad())).collect::<Result<Vec<_>>>()?;
    Ok((ty, w))
}

#[derive(Serialize, Deserialize)]
pub struct FormalCharReport {
    pub label: Option<IrrepLabel>,
    pub dim: usize,
    pub self_dual: Option<bool>,
    pub formal_char: FormalCharacter,
    pub predicates: FcPredicates,
    pub midpoint_relation: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FcPair {
    a: FormalCharacter,
    #[serde(default)]
    b: Option<FormalCharacter>,
}

fn fc_report(label: Option<IrrepLabel>, fc: &FormalCharacter) -> Result<FormalCharReport> {
    let self_dual = label.as_ref().map(is_self_dual).transpose()?;
    let normalized = fc.normalize();
    Ok(FormalCharReport {
        label,
        dim: fc.dim(),
        self_dual,
        predicates: normalized.predicates(),
        midpoint_relation: normalized.has_midpoint_relation(),
        formal_char: normalized,
    })
}

fn cmd_formal_char(common: &Common, reps: &[String], budget: u64) -> Result<Output> {
    if !reps.is_empty() {
        let factors = reps.iter().map(|s| parse_rep(s)).collect::<Result<Vec<_>>>()?;
        let label = IrrepLabel::new(factors)?;
        let fc = freudenthal_weights(&label)?;
        return Ok(Output::Json(to_value(&fc_report(Some(label), &fc)?)));
    }
    let pair: FcPair = from_json(&read_input(common)?)?;
    let check = |fc: &FormalCharacter| FormalCharacter::new(fc.rank(), fc.weights().to_vec());
    let a = check(&pair.a)?;
    match pair.b {
        None => Ok(Output::Json(to_value(&fc_report(None, &a)?))),
        Some(b) => {
            let b = check(&b)?;
            let v: Verdict = fc_equivalent(&a, &b, budget);
            Ok(Output::Json(to_value(&v)))
        }
    }
}

#[derive(Serialize)]
struct TableCsvRow<'a> {
    n: usize,
    label: &'a str,
    group: &'a str,
    rep: &'a str,
    highest_weight: String,
    self_dual: bool,
    rank: usize,
    zero_weight_count: usize,
}

fn render_rows(rows: &[TableARow], format: Format) -> Result<Output> {
    Ok(match format {
        Format::Json => Output::Json(to_value(&rows)),
        Format::Csv => {
            let flat: Vec<TableCsvRow> = rows
                .iter()
                .map(|r| TableCsvRow {
                    n: r.n,
                    label: &r.label,
                    group: &r.group,
                    rep: &r.rep,
                    highest_weight: r.highest_weight.to_string(),
                    self_dual: r.self_dual,
                    rank: r.rank,
                    zero_weight_count: r.zero_weight_count,
                })
                .collect();
            Output::Text(csv_text(&flat)?)
        }
        Format::Text => {
            let mut s = String::new();
            for r in rows {
                s.push_str(&format!(
                    "{:<12} {:<16} {:<12} self-dual: {:<3} rank {} zeros {}\n",
                    r.label,
                    r.group,
                    r.rep,
                    if r.self_dual { "yes" } else { "no" },
                    r.rank,
                    r.zero_weight_count
                ));
            }
            Output::Text(s)
        }
    })
}

#[derive(Serialize, Deserialize)]
pub struct TameReport {
    pub ell: u64,
    pub d: u32,
    pub e: u64,
    pub digits: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
pub struct TameMatrixReport {
    pub convention: String,
    pub digits: Vec<u64>,
    pub strings: Vec<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounded: Option<bool>,
}

fn cmd_tame(common: &Common, ell: Option<u64>, d: u32, e: Option<i64>, n1: u64, n2: Option<u64>) -> Result<Output> {
    let mc = MeatAxeConfig { seed: common.seed, ..Default::default() };
    if let (Some(ell), Some(e)) = (ell, e) {
        let chi = TameCharacter::from_exponent(ell, d, e as i128)?;
        return Ok(Output::Json(to_value(&TameReport { ell, d, e: chi.e, digits: chi.digits() })));
    }
    if ell.is_some() || e.is_some() {
        return Err(Error::InvalidInput("--ell and --e must be given together".into()));
    }
    let input: MatrixInput = from_json(&read_input(common)?)?;
    let g = input.build()?;
    let weights = tame_weights_of_rep(&g, &mc)?;
    let strings = tame_weight_strings(&g, &mc)?;
    let bounded = n2.map(|n2| bounded_weights_check(&g, n1, n2, &mc)).transpose()?;
    Ok(Output::Json(to_value(&TameMatrixReport {
        convention: "f_ell_restriction".into(),
        digits: weights.digits,
        strings: strings.characters.iter().map(|c| c.digits()).collect(),
        bounded,
    })))
}

#[derive(Serialize, Deserialize)]
pub struct MackeyRow {
    pub case: usize,
    pub index: usize,
    pub irreducible: bool,
    pub induced_commutant_dim: usize,
    pub agrees: bool,
    pub reason: String,
    pub witness_element: Option<usize>,
}

fn mackey_row(i: usize, case: &MackeyCase, mc: &MeatAxeConfig, cap: usize) -> Result<MackeyRow> {
    let g = case.group.build()?.materialize(cap)?;
    let f = case.group.field()?;
    let gens = case
        .subgroup
        .iter()
        .map(|m| parse_matrix(&f, m, case.group.n))
        .collect::<Result<Vec<_>>>()?;
    let sub = SubgroupDatum::new(&g, &gens)?;
    let w = case.module.build(sub.subgroup())?;
    let verdict = mackey_irreducible(&sub, &w, mc)?;
    let brute = induced_commutant_dim(&sub, &w)?;
    let (reason, witness) = match &verdict.certificate {
        MackeyCertificate::NotAbsolutelyIrreducible { .. } => ("condition_i".to_string(), None),
        MackeyCertificate::InvariantsAt { element, .. } => ("condition_ii".to_string(), Some(*element)),
        MackeyCertificate::Irreducible { .. } => ("irreducible".to_string(), None),
    };
    Ok(MackeyRow {
        case: i,
        index: sub.index(),
        irreducible: verdict.irreducible,
        induced_commutant_dim: brute,
        agrees: verdict.irreducible == (brute == 1),
        reason,
        witness_element: witness,
    })
}

fn cmd_mackey(common: &Common) -> Result<Output> {
    let text = read_input(common)?;
    let cases: Vec<MackeyCase> = match from_json::<Vec<MackeyCase>>(&text) {
        Ok(list) => list,
        Err(_) => vec![from_json::<MackeyCase>(&text)?],
    };
    let mc = MeatAxeConfig { seed: common.seed, ..Default::default() };
    let rows = cases.iter().enumerate().map(|(i, c)| mackey_row(i, c, &mc, common.cap)).collect::<Result<Vec<_>>>()?;
    Ok(match common.format {
        Format::Csv => Output::Text(csv_text(&rows)?),
        Format::Text => Output::Text(
            rows.iter()
                .map(|r| format!("case {}: index {}, irreducible {} ({})\n", r.case, r.index, r.irreducible, r.reason))
                .collect(),
        ),
        Format::Json => Output::Json(to_value(&rows)),
    })
}

#[derive(Serialize, Deserialize)]
pub struct CliffordReport {
    pub e: usize,
    pub f: usize,
    pub factor_dim: usize,
    pub transitive: bool,
    pub block_dims: Vec<usize>,
    pub block_permutations: Vec<Vec<usize>>,
    pub factors: Vec<Vec<MatrixRows>>,
}

fn cmd_clifford(common: &Common) -> Result<Output> {
    let case: CliffordCase = from_json(&read_input(common)?)?;
    let g = case.group.build()?.materialize(common.cap)?;
    let f = case.group.field()?;
    let normal = case.normal.iter().map(|m| parse_matrix(&f, m, case.group.n)).collect::<Result<Vec<_>>>()?;
    let v = match &case.module {
        Some(m) => m.build(&g)?,
        None => ModuleRep::natural(&g),
    };
    let mc = MeatAxeConfig { seed: common.seed, ..Default::default() };
    let shape = clifford_decompose(&g, &normal, &v, &mc)?;
    let report = CliffordReport {
        e: shape.e,
        f: shape.f,
        factor_dim: shape.factor_dim(),
        transitive: shape.transitive,
        block_dims: shape.blocks.iter().map(|b| b.dim()).collect(),
        block_permutations: shape.block_permutations.clone(),
        factors: shape.factors.iter().map(|u| u.action().iter().map(matrix_rows).collect()).collect(),
    };
    Ok(match common.format {
        Format::Text => Output::Text(format!(
            "e = {}, f = {}, factor dim {}, transitive {}\n",
            report.e, report.f, report.factor_dim, report.transitive
        )),
        _ => Output::Json(to_value(&report)),
    })
}

fn dispatch(cli: &Cli) -> Result<Output> {
    let common = &cli.common;
    match &cli.command {
        Command::Nori => cmd_nori(common),
        Command::Envelope => cmd_envelope(common),
        Command::FormalChar { reps, budget } => cmd_formal_char(common, reps, *budget),
        Command::TableA { n } => render_rows(&table_a(*n)?, common.format),
        Command::Tame { ell, d, e, n1, n2 } => cmd_tame(common, *ell, *d, *e, *n1, *n2),
        Command::Mackey => cmd_mackey(common),
        Command::Clifford => cmd_clifford(common),
        Command::Eliminate { n, constraints } => render_rows(&eliminate_cases(*n, constraints)?, common.format),
    }
}

fn write_output(common: &Common, out: Output) -> std::io::Result<()> {
    let text = match out {
        Output::Json(v) => serde_json::to_string_pretty(&v).expect("json values serialise") + "\n",
        Output::Text(s) => s,
    };
    match &common.output {
        Some(path) => std::fs::write(path, text),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(text.as_bytes())
        }
    }
}

fn error_object(e: &Error) -> serde_json::Value {
    json!({ "error": e.kind(), "message": e.to_string(), "resource": e.is_resource() })
}

/// Parses `argv` (program name first), runs the subcommand and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(out) => match write_output(&cli.common, out) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                eprintln!("{}", json!({ "error": "Io", "message": e.to_string(), "resource": false }));
                EXIT_INVALID
            }
        },
        Err(e) => {
            eprintln!("{}", error_object(&e));
            if e.is_resource() {
                EXIT_RESOURCE
            } else {
                EXIT_INVALID
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fieldcore::{Elem, Field, Mat};

    #[test]
    fn rep_parsing() {
        let (ty, w) = parse_rep("B2: 0, 1").unwrap();
        assert_eq!((ty.to_string(), w), ("B2".to_string(), vec![0, 1]));
        assert!(parse_rep("B2").is_err());
        assert!(parse_rep("B2:x").is_err());
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run(["envlab"]), EXIT_USAGE);
        assert_eq!(run(["envlab", "frobnicate"]), EXIT_USAGE);
        assert_eq!(run(["envlab", "--help"]), EXIT_OK);
        assert_eq!(run(["envlab", "table-a", "--n", "7"]), EXIT_INVALID);
    }

    #[test]
    fn element_encodings_survive_the_round_trip() {
        let f = Field::new(3, 2).unwrap();
        let m = Mat::diagonal(&f, &[f.generator(), 1 as Elem]);
        assert_eq!(parse_matrix(&f, &matrix_rows(&m), 2).unwrap(), m);
    }
}
