//! File formats and constructor strings.
//!
//! Matroid files are JSON in one of two forms:
//!
//! ```json
//! {"n": 4, "bases": [[0, 1], [0, 2], [1, 2]], "label": "example"}
//! {"n": 6, "k": 3, "circuit_hyperplanes": [[0, 1, 3], [0, 2, 4]]}
//! ```
//!
//! Elements are 0-indexed. The second form denotes a sparse paving matroid
//! by its circuit-hyperplanes.
//!
//! Constructor strings: `uniform:k,n`, `boolean:n`, `wheel:k`, `whirl:k`,
//! `minimal:k,n`, `graph:v;a-b,c-d,...`.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::matroid::{Matroid, MatroidError, SparsePavingSpec};
use crate::poly::{BiPoly, IntPoly};
use crate::subset::Subset;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unknown constructor {0:?} (expected uniform:k,n | boolean:n | wheel:k | whirl:k | minimal:k,n | graph:v;a-b,...)")]
    UnknownConstructor(String),
    #[error("bad constructor argument in {input:?}: {reason}")]
    BadConstructorArgument { input: String, reason: String },
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

/// A parsed matroid input: either an explicit matroid or a sparse paving
/// description (which carries enough structure for the closed forms
/// without expansion).
#[derive(Debug, Clone)]
pub enum MatroidInput {
    Explicit(Matroid),
    Sparse(SparsePavingSpec),
}

impl MatroidInput {
    /// Expand into an explicit matroid (validating sparse specs).
    pub fn into_matroid(self) -> Result<Matroid, MatroidError> {
        match self {
            MatroidInput::Explicit(m) => Ok(m),
            MatroidInput::Sparse(spec) => spec.to_matroid(),
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum MatroidFile {
    Bases {
        n: usize,
        bases: Vec<Vec<usize>>,
        #[serde(default)]
        label: Option<String>,
    },
    Sparse {
        n: usize,
        k: usize,
        circuit_hyperplanes: Vec<Vec<usize>>,
    },
}

/// Parse a matroid from JSON text (either accepted form).
pub fn matroid_from_json(text: &str) -> Result<MatroidInput, IoError> {
    let file: MatroidFile = serde_json::from_str(text)?;
    match file {
        MatroidFile::Bases { n, bases, label } => {
            let bases = bases.into_iter().map(Subset::from_elements).collect();
            let mut m = Matroid::from_bases(n, bases)?;
            if let Some(l) = label {
                m = m.with_label(l);
            }
            Ok(MatroidInput::Explicit(m))
        }
        MatroidFile::Sparse {
            n,
            k,
            circuit_hyperplanes,
        } => {
            let chs = circuit_hyperplanes
                .into_iter()
                .map(Subset::from_elements)
                .collect();
            let spec = SparsePavingSpec::new(n, k, chs);
            spec.validate()?;
            Ok(MatroidInput::Sparse(spec))
        }
    }
}

#[derive(Serialize)]
struct MatroidOut<'a> {
    n: usize,
    bases: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<&'a str>,
}

/// Serialize a matroid in the bases form.
pub fn matroid_to_json(m: &Matroid) -> serde_json::Value {
    serde_json::to_value(MatroidOut {
        n: m.size(),
        bases: m.bases().iter().map(|b| b.elements()).collect(),
        label: m.label(),
    })
    .expect("matroid serialization cannot fail")
}

/// Parse a constructor string.
pub fn matroid_from_constructor(input: &str) -> Result<MatroidInput, IoError> {
    let (head, rest) = input
        .split_once(':')
        .ok_or_else(|| IoError::UnknownConstructor(input.to_string()))?;
    let bad = |reason: &str| IoError::BadConstructorArgument {
        input: input.to_string(),
        reason: reason.to_string(),
    };
    let parse_num = |s: &str| -> Result<usize, IoError> {
        s.trim()
            .parse::<usize>()
            .map_err(|e| bad(&format!("{s:?}: {e}")))
    };
    let m = match head {
        "uniform" => {
            let (k, n) = rest
                .split_once(',')
                .ok_or_else(|| bad("expected uniform:k,n"))?;
            Matroid::uniform(parse_num(k)?, parse_num(n)?)?
        }
        "boolean" => Matroid::boolean(parse_num(rest)?)?,
        "wheel" => Matroid::wheel(parse_num(rest)?)?,
        "whirl" => Matroid::whirl(parse_num(rest)?)?,
        "minimal" => {
            let (k, n) = rest
                .split_once(',')
                .ok_or_else(|| bad("expected minimal:k,n"))?;
            Matroid::minimal_relaxed(parse_num(k)?, parse_num(n)?)?
        }
        "graph" => {
            let (v, edge_list) = rest
                .split_once(';')
                .ok_or_else(|| bad("expected graph:v;a-b,c-d,..."))?;
            let vertices = parse_num(v)?;
            let mut edges = Vec::new();
            for e in edge_list.split(',').filter(|e| !e.trim().is_empty()) {
                let (a, b) = e
                    .split_once('-')
                    .ok_or_else(|| bad(&format!("edge {e:?} is not of the form a-b")))?;
                edges.push((parse_num(a)?, parse_num(b)?));
            }
            Matroid::graphic(vertices, &edges)?
        }
        _ => return Err(IoError::UnknownConstructor(input.to_string())),
    };
    Ok(MatroidInput::Explicit(m))
}

fn bigint_number(c: &BigInt) -> serde_json::Number {
    serde_json::Number::from_string_unchecked(c.to_string())
}

/// Polynomial as a JSON array of exact integers, ascending degree:
/// `[1, 11, 5]` is `1 + 11t + 5t^2`.
pub fn poly_to_json(p: &IntPoly) -> serde_json::Value {
    serde_json::Value::Array(
        p.coeffs()
            .iter()
            .map(|c| serde_json::Value::Number(bigint_number(c)))
            .collect(),
    )
}

/// Bivariate polynomial as nested arrays; rows indexed by x-degree.
pub fn bipoly_to_json(p: &BiPoly) -> serde_json::Value {
    serde_json::Value::Array(
        p.rows()
            .iter()
            .map(|row| {
                serde_json::Value::Array(
                    row.iter()
                        .map(|c| serde_json::Value::Number(bigint_number(c)))
                        .collect(),
                )
            })
            .collect(),
    )
}
