//! The skew-system file format consumed by the CLI.
//!
//! ```json
//! {
//!   "field": {"type": "fp", "p": 32003},
//!   "matrices": [ five 6x6 integer arrays ]
//! }
//! ```
//!
//! `{"type": "q"}` selects the rationals. The integers are interpreted in
//! the field; skew-symmetry is validated after interpretation, never
//! symmetrized (so `1` and `p - 1` are a legal pair over `F_p`).

use crate::field::{Field, FieldElement, FieldError};
use crate::skew::{SkewSystem, SkewSystemError, MATRIX_SIZE, SYSTEM_SIZE};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum ReadError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    System(#[from] SkewSystemError),
    #[error("expected {SYSTEM_SIZE} matrices of {MATRIX_SIZE}x{MATRIX_SIZE} integers")]
    BadShape,
}

#[derive(Debug, thiserror::Error)]
pub enum WriteError {
    #[error("entry ({row},{col}) of matrix {matrix} is not an integer")]
    NonIntegerEntry {
        matrix: usize,
        row: usize,
        col: usize,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
enum FieldSpec {
    Fp { p: u64 },
    Q,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct SystemFile {
    field: FieldSpec,
    matrices: Vec<Vec<Vec<i64>>>,
}

/// Parse a system from its JSON description.
pub fn parse_system(text: &str) -> Result<SkewSystem, ReadError> {
    let file: SystemFile = serde_json::from_str(text)?;
    let field = match file.field {
        FieldSpec::Fp { p } => Field::prime(p)?,
        FieldSpec::Q => Field::rational(),
    };
    if file.matrices.len() != SYSTEM_SIZE
        || file
            .matrices
            .iter()
            .any(|m| m.len() != MATRIX_SIZE || m.iter().any(|r| r.len() != MATRIX_SIZE))
    {
        return Err(ReadError::BadShape);
    }
    let data = file
        .matrices
        .iter()
        .map(|m| {
            m.iter()
                .map(|r| r.iter().map(|&n| field.from_i64(n)).collect())
                .collect()
        })
        .collect();
    Ok(SkewSystem::new(field, data)?)
}

/// Render a system back to JSON. Over `Q` the entries must be integers;
/// over `F_p` the canonical residues are written.
pub fn render_system(sys: &SkewSystem) -> Result<String, WriteError> {
    let field = match sys.field() {
        Field::Prime(p) => FieldSpec::Fp { p },
        Field::Rational => FieldSpec::Q,
    };
    let mut matrices = Vec::with_capacity(SYSTEM_SIZE);
    for (k, m) in sys.matrices().iter().enumerate() {
        let mut rows = Vec::with_capacity(MATRIX_SIZE);
        for (i, row) in m.iter().enumerate() {
            let mut out = Vec::with_capacity(MATRIX_SIZE);
            for (j, e) in row.iter().enumerate() {
                out.push(entry_to_i64(e).ok_or(WriteError::NonIntegerEntry {
                    matrix: k,
                    row: i,
                    col: j,
                })?);
            }
            rows.push(out);
        }
        matrices.push(rows);
    }
    let file = SystemFile { field, matrices };
    Ok(serde_json::to_string_pretty(&file).expect("plain data serializes"))
}

fn entry_to_i64(e: &FieldElement) -> Option<i64> {
    match e {
        FieldElement::Prime { value, .. } => Some(*value as i64),
        FieldElement::Rational(x) => rational_to_i64(x),
    }
}

fn rational_to_i64(x: &BigRational) -> Option<i64> {
    // num-rational keeps fractions reduced with a positive denominator.
    if !x.denom().is_one() {
        return None;
    }
    x.numer().to_i64()
}
