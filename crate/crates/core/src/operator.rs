// Copyright 2026 The purity-semigroup Authors
// SPDX-License-Identifier: Apache-2.0

//! Dense complex operators and density matrices.
//!
//! Every matrix in the crate (Hamiltonians, Lindblad operators, states,
//! generator outputs) is an [`Operator`]: a square, finite, column-major
//! `nalgebra` matrix of `Complex64`. Spectral routines always act on the
//! Hermitized input `(x + x†)/2` and report the asymmetry separately.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;

/// Tolerance for algebraic identities.
pub const ALGEBRAIC_TOL: f64 = 1e-12;
/// Tolerance on eigenvalue-based positivity checks.
pub const SPECTRAL_TOL: f64 = 1e-10;

#[inline]
pub(crate) fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// Square complex matrix with finite entries.
#[derive(Clone, PartialEq)]
pub struct Operator {
    m: DMatrix<C64>,
}

impl fmt::Debug for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Operator({}x{}) {}", self.dim(), self.dim(), self.m)
    }
}

impl Operator {
    pub fn from_matrix(m: DMatrix<C64>) -> Result<Self> {
        if m.nrows() != m.ncols() || m.nrows() == 0 {
            return Err(Error::Shape {
                expected: m.nrows().max(1),
                rows: m.nrows(),
                cols: m.ncols(),
            });
        }
        for j in 0..m.ncols() {
            for i in 0..m.nrows() {
                let z = m[(i, j)];
                if !z.re.is_finite() || !z.im.is_finite() {
                    return Err(Error::NonFinite { row: i, col: j });
                }
            }
        }
        Ok(Operator { m })
    }

    /// Wraps a matrix produced by arithmetic on already-valid operators.
    pub(crate) fn wrap(m: DMatrix<C64>) -> Self {
        debug_assert_eq!(m.nrows(), m.ncols());
        Operator { m }
    }

    /// Builds from row-major rows. Every row must have `rows.len()` entries.
    pub fn from_rows(rows: &[Vec<C64>]) -> Result<Self> {
        let d = rows.len();
        if d == 0 {
            return Err(Error::Shape { expected: 1, rows: 0, cols: 0 });
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != d) {
            return Err(Error::Shape { expected: d, rows: d, cols: bad.len() });
        }
        Self::from_matrix(DMatrix::from_fn(d, d, |i, j| rows[i][j]))
    }

    pub fn from_fn(dim: usize, f: impl FnMut(usize, usize) -> C64) -> Result<Self> {
        Self::from_matrix(DMatrix::from_fn(dim, dim, f))
    }

    pub fn zeros(dim: usize) -> Self {
        Operator { m: DMatrix::zeros(dim, dim) }
    }

    pub fn identity(dim: usize) -> Self {
        Operator { m: DMatrix::identity(dim, dim) }
    }

    pub fn diag(values: &[f64]) -> Self {
        let d = values.len();
        Operator {
            m: DMatrix::from_fn(d, d, |i, j| if i == j { c(values[i], 0.0) } else { C64::default() }),
        }
    }

    /// `|i⟩⟨j|` in dimension `dim`.
    pub fn basis(dim: usize, i: usize, j: usize) -> Self {
        let mut m = DMatrix::zeros(dim, dim);
        m[(i, j)] = c(1.0, 0.0);
        Operator { m }
    }

    /// `|ψ⟩⟨ψ|` (not normalized).
    pub fn outer(psi: &[C64]) -> Self {
        let v = DVector::from_column_slice(psi);
        Operator { m: &v * v.adjoint() }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    #[inline]
    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.m
    }

    pub fn into_matrix(self) -> DMatrix<C64> {
        self.m
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.m[(i, j)]
    }

    pub fn adjoint(&self) -> Operator {
        Operator { m: self.m.adjoint() }
    }

    pub fn trace(&self) -> C64 {
        self.m.trace()
    }

    /// `Tr(self · other)` without forming the product.
    pub fn trace_product(&self, other: &Operator) -> C64 {
        assert_eq!(self.dim(), other.dim(), "trace_product dimension mismatch");
        let d = self.dim();
        let mut acc = C64::default();
        for i in 0..d {
            for k in 0..d {
                acc += self.m[(i, k)] * other.m[(k, i)];
            }
        }
        acc
    }

    pub fn scale(&self, factor: C64) -> Operator {
        Operator { m: &self.m * factor }
    }

    pub fn scale_real(&self, factor: f64) -> Operator {
        self.scale(c(factor, 0.0))
    }

    pub fn max_abs(&self) -> f64 {
        self.m.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest singular value.
    pub fn operator_norm(&self) -> f64 {
        self.m
            .clone()
            .singular_values()
            .iter()
            .copied()
            .fold(0.0, f64::max)
    }

    /// `max |x − x†|` over entries.
    pub fn hermitian_defect(&self) -> f64 {
        let d = self.dim();
        let mut worst: f64 = 0.0;
        for j in 0..d {
            for i in 0..=j {
                worst = worst.max((self.m[(i, j)] - self.m[(j, i)].conj()).norm());
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermitian_defect() <= tol * (1.0 + self.max_abs())
    }

    pub fn hermitize(&self) -> Operator {
        Operator { m: (&self.m + self.m.adjoint()) * c(0.5, 0.0) }
    }

    /// Ascending eigenvalues of the Hermitized operator.
    pub fn hermitian_eigenvalues(&self) -> Vec<f64> {
        let mut ev: Vec<f64> = self.hermitize().m.symmetric_eigenvalues().iter().copied().collect();
        ev.sort_by(f64::total_cmp);
        ev
    }

    /// Eigen-decomposition of the Hermitized operator, ascending.
    /// Column `k` of the returned matrix is the eigenvector for `values[k]`.
    pub fn hermitian_eigen(&self) -> (Vec<f64>, DMatrix<C64>) {
        let eig = SymmetricEigen::new(self.hermitize().m);
        let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
        order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
        let values = order.iter().map(|&k| eig.eigenvalues[k]).collect();
        let d = self.dim();
        let vectors = DMatrix::from_fn(d, d, |i, k| eig.eigenvectors[(i, order[k])]);
        (values, vectors)
    }

    /// Restriction to the leading `levels × levels` block.
    pub fn leading_block(&self, levels: usize) -> Operator {
        Operator { m: self.m.view((0, 0), (levels, levels)).into_owned() }
    }

    /// Column-stacked vectorization.
    pub fn vec(&self) -> DVector<C64> {
        DVector::from_column_slice(self.m.as_slice())
    }

    pub fn unvec(v: &DVector<C64>, dim: usize) -> Result<Operator> {
        if v.len() != dim * dim {
            return Err(Error::DimensionMismatch { left: v.len(), right: dim * dim });
        }
        Operator::from_matrix(DMatrix::from_column_slice(dim, dim, v.as_slice()))
    }

    pub(crate) fn check_same_dim(&self, other: &Operator) -> Result<()> {
        if self.dim() == other.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { left: self.dim(), right: other.dim() })
        }
    }
}

impl<'a> Add<&'a Operator> for &'a Operator {
    type Output = Operator;
    fn add(self, rhs: &'a Operator) -> Operator {
        Operator { m: &self.m + &rhs.m }
    }
}

impl<'a> Sub<&'a Operator> for &'a Operator {
    type Output = Operator;
    fn sub(self, rhs: &'a Operator) -> Operator {
        Operator { m: &self.m - &rhs.m }
    }
}

impl<'a> Mul<&'a Operator> for &'a Operator {
    type Output = Operator;
    fn mul(self, rhs: &'a Operator) -> Operator {
        Operator { m: &self.m * &rhs.m }
    }
}

impl Neg for &Operator {
    type Output = Operator;
    fn neg(self) -> Operator {
        Operator { m: -&self.m }
    }
}

/// `xy − yx`.
pub fn commutator(x: &Operator, y: &Operator) -> Result<Operator> {
    x.check_same_dim(y)?;
    Ok(&(x * y) - &(y * x))
}

/// `xy + yx`.
pub fn anticommutator(x: &Operator, y: &Operator) -> Result<Operator> {
    x.check_same_dim(y)?;
    Ok(&(x * y) + &(y * x))
}

/// Smallest eigenvalue of `(x + x†)/2`, rejecting inputs whose Hermiticity
/// defect exceeds `1e-10 · (1 + max|entry|)`.
pub fn min_eigenvalue_hermitian(x: &Operator) -> Result<f64> {
    let defect = x.hermitian_defect();
    if defect > SPECTRAL_TOL * (1.0 + x.max_abs()) {
        return Err(Error::NotHermitian { what: "operator", defect });
    }
    Ok(x.hermitian_eigenvalues()[0])
}

/// Validation thresholds for [`DensityMatrix`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StateTolerance {
    /// Relative to `1 + max|entry|`.
    pub hermitian: f64,
    pub trace: f64,
    /// Most negative eigenvalue allowed, as a magnitude.
    pub psd: f64,
}

impl StateTolerance {
    pub const STRICT: StateTolerance = StateTolerance {
        hermitian: ALGEBRAIC_TOL,
        trace: ALGEBRAIC_TOL,
        psd: SPECTRAL_TOL,
    };

    /// Thresholds for integrated states, which carry solver drift.
    pub const EVOLVED: StateTolerance = StateTolerance {
        hermitian: ALGEBRAIC_TOL,
        trace: 1e-9,
        psd: 1e-8,
    };
}

/// Hermitian, positive semidefinite, unit-trace operator.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    op: Operator,
}

impl DensityMatrix {
    pub fn new(op: Operator) -> Result<Self> {
        Self::with_tolerance(op, StateTolerance::STRICT)
    }

    pub fn with_tolerance(op: Operator, tol: StateTolerance) -> Result<Self> {
        let defect = op.hermitian_defect();
        if defect > tol.hermitian * (1.0 + op.max_abs()) {
            return Err(Error::InvalidState(format!("not Hermitian (defect {defect:.3e})")));
        }
        let tr = op.trace();
        if (tr - c(1.0, 0.0)).norm() > tol.trace {
            return Err(Error::InvalidState(format!("trace {tr} differs from 1")));
        }
        let min_eig = op.hermitian_eigenvalues()[0];
        if min_eig < -tol.psd {
            return Err(Error::InvalidState(format!("negative eigenvalue {min_eig:.3e}")));
        }
        Ok(DensityMatrix { op })
    }

    /// Divides a nonzero positive semidefinite operator by its trace.
    pub fn normalized(op: Operator) -> Result<Self> {
        let tr = op.trace().re;
        if !(tr > 0.0) {
            return Err(Error::InvalidState(format!("trace {tr} is not positive")));
        }
        Self::new(op.scale_real(1.0 / tr).hermitize())
    }

    pub fn maximally_mixed(dim: usize) -> Self {
        DensityMatrix { op: Operator::identity(dim).scale_real(1.0 / dim as f64) }
    }

    pub fn diagonal(probabilities: &[f64]) -> Result<Self> {
        Self::new(Operator::diag(probabilities))
    }

    /// `|ψ⟩⟨ψ|/⟨ψ|ψ⟩`.
    pub fn pure(psi: &[C64]) -> Result<Self> {
        Self::normalized(Operator::outer(psi))
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.op.dim()
    }

    #[inline]
    pub fn as_operator(&self) -> &Operator {
        &self.op
    }

    pub fn into_operator(self) -> Operator {
        self.op
    }

    /// Embeds into a larger space by zero padding (levels `dim..target` empty).
    pub fn embed(&self, target: usize) -> Result<Self> {
        if target < self.dim() {
            return Err(Error::InvalidArgument(format!(
                "cannot embed dimension {} into {target}",
                self.dim()
            )));
        }
        let d = self.dim();
        let op = Operator::from_fn(target, |i, j| {
            if i < d && j < d {
                self.op.get(i, j)
            } else {
                C64::default()
            }
        })?;
        Ok(DensityMatrix { op })
    }
}

impl AsRef<Operator> for DensityMatrix {
    fn as_ref(&self) -> &Operator {
        &self.op
    }
}
