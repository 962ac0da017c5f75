//! JSON input documents and their exact, validated form.

use std::path::Path;

use orbihh_core::arith::parse_scalar;
use orbihh_core::group::DEFAULT_CAP;
use orbihh_core::linalg::Mat;
use orbihh_core::symplectic::SymplecticStructure;
use orbihh_core::CycloMat;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const DEFAULT_MAXDEG: usize = 10;
pub const DEFAULT_TRIALS: usize = 50;
pub const DEFAULT_SEED: u64 = 0;

/// The document as written, scalars still strings.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawInput {
    pub name: String,
    pub cyclotomic_order: u32,
    pub dimension: usize,
    pub generators: Vec<Vec<Vec<String>>>,
    #[serde(default)]
    pub symplectic_form: Option<RawForm>,
    #[serde(default)]
    pub options: RawOptions,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RawForm {
    Named(String),
    Matrix(Vec<Vec<String>>),
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawOptions {
    pub cap: Option<usize>,
    pub maxdeg: Option<usize>,
    pub seed: Option<u64>,
    pub trials: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Options {
    pub cap: usize,
    pub maxdeg: usize,
    pub seed: u64,
    pub trials: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            cap: DEFAULT_CAP,
            maxdeg: DEFAULT_MAXDEG,
            seed: DEFAULT_SEED,
            trials: DEFAULT_TRIALS,
        }
    }
}

/// A validated input: exact generators over `Q(ζ_N)` and an optional form.
#[derive(Clone, Debug, PartialEq)]
pub struct InputSpec {
    pub name: String,
    pub cyclotomic_order: u32,
    pub dimension: usize,
    pub generators: Vec<CycloMat>,
    pub symplectic_form: Option<SymplecticStructure>,
    pub options: Options,
}

pub fn parse_input_file(path: &Path) -> Result<InputSpec, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_input(&text)
}

pub fn parse_input(text: &str) -> Result<InputSpec, CliError> {
    let raw: RawInput = serde_json::from_str(text).map_err(CliError::Json)?;
    resolve(raw)
}

fn matrix(rows: &[Vec<String>], dim: usize, order: u32, field: &str) -> Result<CycloMat, CliError> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(CliError::Schema {
            field: field.to_string(),
            message: format!("expected a {dim}x{dim} matrix"),
        });
    }
    let mut entries = Vec::with_capacity(dim * dim);
    for (i, row) in rows.iter().enumerate() {
        for (j, s) in row.iter().enumerate() {
            let x = parse_scalar(s, order).map_err(|source| CliError::Scalar {
                field: format!("{field}[{i}][{j}]"),
                text: s.clone(),
                source,
            })?;
            entries.push(x);
        }
    }
    Ok(Mat::new(dim, dim, entries).expect("shape checked"))
}

pub fn resolve(raw: RawInput) -> Result<InputSpec, CliError> {
    let schema = |field: &str, message: String| CliError::Schema {
        field: field.to_string(),
        message,
    };
    if raw.cyclotomic_order == 0 {
        return Err(schema("cyclotomic_order", "must be at least 1".into()));
    }
    if raw.dimension == 0 {
        return Err(schema("dimension", "must be at least 1".into()));
    }
    if raw.generators.is_empty() {
        return Err(schema(
            "generators",
            "at least one generator is required".into(),
        ));
    }
    let (order, dim) = (raw.cyclotomic_order, raw.dimension);
    let generators = raw
        .generators
        .iter()
        .enumerate()
        .map(|(i, g)| matrix(g, dim, order, &format!("generators[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    let symplectic_form = match &raw.symplectic_form {
        None => None,
        Some(RawForm::Named(n)) if n == "standard" => Some(
            SymplecticStructure::standard(dim)
                .map_err(|e| schema("symplectic_form", e.to_string()))?,
        ),
        Some(RawForm::Named(n)) => {
            return Err(schema(
                "symplectic_form",
                format!("unknown form {n:?}, expected \"standard\" or a matrix"),
            ))
        }
        Some(RawForm::Matrix(m)) => {
            let j = matrix(m, dim, order, "symplectic_form")?;
            Some(
                SymplecticStructure::new(j)
                    .map_err(|e| schema("symplectic_form", e.to_string()))?,
            )
        }
    };
    let d = Options::default();
    let o = raw.options;
    if o.trials == Some(0) {
        return Err(schema("options.trials", "must be at least 1".into()));
    }
    Ok(InputSpec {
        name: raw.name,
        cyclotomic_order: order,
        dimension: dim,
        generators,
        symplectic_form,
        options: Options {
            cap: o.cap.unwrap_or(d.cap),
            maxdeg: o.maxdeg.unwrap_or(d.maxdeg),
            seed: o.seed.unwrap_or(d.seed),
            trials: o.trials.unwrap_or(d.trials),
        },
    })
}
