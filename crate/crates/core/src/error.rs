// Copyright 2026 The purity-semigroup Authors
// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

/// Everything that can go wrong in the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("operator entries must be a {expected}x{expected} array, got {rows} row(s) of length {cols}")]
    Shape {
        expected: usize,
        rows: usize,
        cols: usize,
    },

    #[error("operator contains a non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("{what} is not Hermitian (defect {defect:.3e})")]
    NotHermitian { what: &'static str, defect: f64 },

    #[error("invalid density matrix: {0}")]
    InvalidState(String),

    #[error("coefficient matrix is not completely positive (min eigenvalue {min_eig:.3e})")]
    NotCompletelyPositive { min_eig: f64 },

    #[error("dimension {dim} exceeds the limit {limit} (superoperator of size dim^2 <= 4096)")]
    TooLarge { dim: usize, limit: usize },

    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid document: {0}")]
    Document(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("non-finite state encountered at t = {t}")]
    NonFiniteResult { t: f64 },

    #[error("step size underflow (stiffness failure) after last good time t = {t}")]
    StepUnderflow { t: f64 },

    #[error("purity rate forms disagree: pdot1 = {first}, pdot2 = {second}")]
    RateFormsDisagree { first: f64, second: f64 },

    #[error("witness search exhausted {iterations} halvings with first-order rate {first_order:.3e}")]
    ProbeExhausted { iterations: usize, first_order: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
