//! JSON input formats. Matrix entries are field elements in their integer encoding
//! `Σ c_i ℓ^i` (for a prime field, just the residue); rows are listed top to bottom.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::fieldcore::{Field, FieldRef, FinMatGroup, Mat, ModuleRep};

pub type MatrixRows = Vec<Vec<i64>>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupInput {
    pub ell: u64,
    #[serde(default = "one")]
    pub d: u32,
    pub n: usize,
    pub generators: Vec<MatrixRows>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_rank: Option<usize>,
    /// Image of a generator of tame inertia, for the weight section of a report.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inertia: Option<MatrixRows>,
}

fn one() -> u32 {
    1
}

/// Matrices for the generators of some group, over `F_{ℓ^d}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleInput {
    pub ell: u64,
    #[serde(default = "one")]
    pub d: u32,
    pub matrices: Vec<MatrixRows>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MackeyCase {
    pub group: GroupInput,
    /// Elements of the group generating `H`.
    pub subgroup: Vec<MatrixRows>,
    /// Action of the subgroup generators, in the order listed.
    pub module: ModuleInput,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CliffordCase {
    pub group: GroupInput,
    pub normal: Vec<MatrixRows>,
    /// Action of the group generators; defaults to the natural module.
    #[serde(default)]
    pub module: Option<ModuleInput>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixInput {
    pub ell: u64,
    #[serde(default = "one")]
    pub d: u32,
    pub matrix: MatrixRows,
}

pub fn parse_matrix(field: &FieldRef, rows: &MatrixRows, n: usize) -> Result<Mat> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Error::DimensionMismatch(format!("expected a {n}x{n} matrix")));
    }
    let mut m = Mat::zero(field, n, n);
    for (i, row) in rows.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if field.is_prime_field() {
                m.set(i, j, field.from_i64(v));
            } else if v < 0 || v >= field.order() as i64 {
                return Err(Error::InvalidInput(format!("entry {v} is not an element encoding")));
            } else {
                m.set(i, j, v as u32);
            }
        }
    }
    Ok(m)
}

pub fn matrix_rows(m: &Mat) -> MatrixRows {
    (0..m.rows()).map(|i| m.row(i).iter().map(|&x| x as i64).collect()).collect()
}

impl GroupInput {
    pub fn field(&self) -> Result<FieldRef> {
        Field::new(self.ell, self.d)
    }

    pub fn build(&self) -> Result<FinMatGroup> {
        let f = self.field()?;
        let gens = self.generators.iter().map(|g| parse_matrix(&f, g, self.n)).collect::<Result<Vec<_>>>()?;
        FinMatGroup::new(&f, self.n, gens)
    }

    pub fn from_group(g: &FinMatGroup) -> Self {
        GroupInput {
            ell: g.field().ell() as u64,
            d: g.field().degree(),
            n: g.n(),
            generators: g.generators().iter().map(matrix_rows).collect(),
            name: None,
            expected_rank: None,
            inertia: None,
        }
    }

    /// SHA-256 of the compact JSON serialisation.
    pub fn digest(&self) -> String {
        let bytes = serde_json::to_vec(self).expect("serialisable");
        let hash = Sha256::digest(&bytes);
        hash.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl ModuleInput {
    pub fn build(&self, group: &FinMatGroup) -> Result<ModuleRep> {
        let f = Field::new(self.ell, self.d)?;
        let dim = self.matrices.first().map_or(0, |m| m.len());
        let action = self.matrices.iter().map(|m| parse_matrix(&f, m, dim)).collect::<Result<Vec<_>>>()?;
        ModuleRep::new(group, &f, dim, action)
    }
}

impl MatrixInput {
    pub fn build(&self) -> Result<Mat> {
        let f = Field::new(self.ell, self.d)?;
        parse_matrix(&f, &self.matrix, self.matrix.len())
    }
}

pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::InvalidInput(e.to_string()))
}
