// Copyright 2026 The purity-semigroup Authors
// SPDX-License-Identifier: Apache-2.0

//! JSON model documents.
//!
//! Complex numbers are `[re, im]` pairs and matrices are arrays of rows.
//! Floats are written in shortest round-trip form, so parsing a serialized
//! model reproduces it exactly. Unknown fields are rejected.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gks::{diagonalize_gks, GksModel, LindbladModel};
use crate::operator::{c, DensityMatrix, Operator, C64};
use crate::zoo::{ModelMeta, ZooModel};

pub const SCHEMA_VERSION: &str = "1";

/// Row-major matrix of `[re, im]` pairs.
pub type MatrixDocument = Vec<Vec<[f64; 2]>>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelDocument {
    pub schema_version: String,
    pub dim: usize,
    pub hamiltonian: MatrixDocument,
    /// Takes precedence over `gks` when both are present.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lindblad_ops: Option<Vec<MatrixDocument>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gks: Option<GksDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<MetadataDocument>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GksDocument {
    pub coupling_ops: Vec<MatrixDocument>,
    pub coeff_matrix: MatrixDocument,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MetadataDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace_preserving: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub guard_level: Option<usize>,
}

pub fn matrix_to_document(m: &DMatrix<C64>) -> MatrixDocument {
    (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| [m[(i, j)].re, m[(i, j)].im]).collect())
        .collect()
}

pub fn operator_to_document(op: &Operator) -> MatrixDocument {
    matrix_to_document(op.matrix())
}

fn document_to_matrix(doc: &MatrixDocument, dim: usize, what: &str) -> Result<DMatrix<C64>> {
    if doc.len() != dim || doc.iter().any(|r| r.len() != dim) {
        let cols = doc.iter().map(Vec::len).find(|&l| l != dim).unwrap_or(dim);
        return Err(Error::Document(format!(
            "{what}: expected a {dim}x{dim} matrix, got {} row(s) (row length {cols})",
            doc.len()
        )));
    }
    Ok(DMatrix::from_fn(dim, dim, |i, j| c(doc[i][j][0], doc[i][j][1])))
}

pub fn document_to_operator(doc: &MatrixDocument, dim: usize, what: &str) -> Result<Operator> {
    Operator::from_matrix(document_to_matrix(doc, dim, what)?)
        .map_err(|e| Error::Document(format!("{what}: {e}")))
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse { line: e.line(), column: e.column(), message: e.to_string() }
}

/// A model read from a document, with the GKS block kept when present.
#[derive(Clone, Debug, PartialEq)]
pub struct LoadedModel {
    pub model: LindbladModel,
    pub meta: ModelMeta,
    pub gks: Option<GksModel>,
}

impl ModelDocument {
    pub fn from_model(model: &LindbladModel, meta: Option<&ModelMeta>) -> Self {
        ModelDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            dim: model.dim(),
            hamiltonian: operator_to_document(model.hamiltonian()),
            lindblad_ops: Some(model.lindblad_ops().iter().map(operator_to_document).collect()),
            gks: None,
            metadata: meta.map(|m| MetadataDocument {
                name: Some(m.name.clone()),
                trace_preserving: Some(m.trace_preserving),
                guard_level: m.guard_level,
            }),
        }
    }

    pub fn from_zoo(z: &ZooModel) -> Self {
        Self::from_model(&z.model, Some(&z.meta))
    }

    pub fn from_gks(gks: &GksModel) -> Self {
        ModelDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            dim: gks.dim(),
            hamiltonian: operator_to_document(gks.hamiltonian()),
            lindblad_ops: None,
            gks: Some(GksDocument {
                coupling_ops: gks.coupling_ops().iter().map(operator_to_document).collect(),
                coeff_matrix: matrix_to_document(gks.coeff_matrix()),
            }),
            metadata: None,
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(json_error)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("documents always serialize")
    }

    /// Validates the document and builds the model it describes.
    pub fn to_model(&self) -> Result<LoadedModel> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(Error::Document(format!(
                "schema_version must be \"{SCHEMA_VERSION}\", got \"{}\"",
                self.schema_version
            )));
        }
        if self.dim == 0 {
            return Err(Error::Document("dim must be positive".into()));
        }
        let d = self.dim;
        let h = document_to_operator(&self.hamiltonian, d, "hamiltonian")?;
        let gks = match &self.gks {
            None => None,
            Some(g) => {
                let ops = g
                    .coupling_ops
                    .iter()
                    .enumerate()
                    .map(|(k, op)| document_to_operator(op, d, &format!("gks.coupling_ops[{k}]")))
                    .collect::<Result<Vec<_>>>()?;
                let n = ops.len();
                let coeff = if n == 0 && g.coeff_matrix.is_empty() {
                    DMatrix::zeros(0, 0)
                } else {
                    document_to_matrix(&g.coeff_matrix, n, "gks.coeff_matrix")?
                };
                Some(GksModel::new(h.clone(), ops, coeff)?)
            }
        };
        let model = match (&self.lindblad_ops, &gks) {
            (Some(ops), _) => {
                let ops = ops
                    .iter()
                    .enumerate()
                    .map(|(k, op)| document_to_operator(op, d, &format!("lindblad_ops[{k}]")))
                    .collect::<Result<Vec<_>>>()?;
                LindbladModel::new(h, ops)?
            }
            (None, Some(g)) => diagonalize_gks(g)?,
            (None, None) => {
                return Err(Error::Document("one of lindblad_ops or gks is required".into()))
            }
        };
        let md = self.metadata.clone().unwrap_or_default();
        if let Some(g) = md.guard_level {
            if g == 0 || g > d {
                return Err(Error::Document(format!("metadata.guard_level {g} outside 1..={d}")));
            }
        }
        let meta = ModelMeta {
            name: md.name.unwrap_or_default(),
            trace_preserving: md.trace_preserving.unwrap_or(true),
            guard_level: md.guard_level,
        };
        Ok(LoadedModel { model, meta, gks })
    }
}

/// Reads a state stored as a bare matrix document.
pub fn parse_state(text: &str) -> Result<DensityMatrix> {
    let doc: MatrixDocument = serde_json::from_str(text).map_err(json_error)?;
    let op = document_to_operator(&doc, doc.len(), "state")?;
    DensityMatrix::new(op)
}
