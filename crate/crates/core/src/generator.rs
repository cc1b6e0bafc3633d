// Copyright 2026 The purity-semigroup Authors
// SPDX-License-Identifier: Apache-2.0

//! The Lindblad generator, its superoperator matrix, the unitality defect
//! `L(I) = Σ[F_α, F_α†]` and the purity-monotonicity classification built
//! on its spectrum.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gks::LindbladModel;
use crate::operator::{c, commutator, Operator, C64};
use crate::probe::{self, ProbeOptions, ProbeResult};

/// Largest Hilbert-space dimension for which the `dim² × dim²` superoperator
/// is assembled.
pub const MAX_LIOUVILLIAN_DIM: usize = 64;
/// Default classification tolerance, scaled by `1 + norm_scale`.
pub const DEFAULT_TOL: f64 = 1e-10;

/// `Σ_α F_α x F_α† − ½{F_α†F_α, x}`.
pub fn apply_dissipator(m: &LindbladModel, x: &Operator) -> Result<Operator> {
    m.hamiltonian().check_same_dim(x)?;
    let mut acc = Operator::zeros(m.dim());
    for f in m.lindblad_ops() {
        let f_dag = f.adjoint();
        let fdf = &f_dag * f;
        let jump = &(f * x) * &f_dag;
        let anti = &(&fdf * x) + &(x * &fdf);
        acc = &acc + &(&jump - &anti.scale_real(0.5));
    }
    Ok(acc)
}

/// `−i[H, ρ] + D(ρ)`.
pub fn apply_generator(m: &LindbladModel, rho: &Operator) -> Result<Operator> {
    let ham = commutator(m.hamiltonian(), rho)?.scale(c(0.0, -1.0));
    Ok(&ham + &apply_dissipator(m, rho)?)
}

/// Superoperator `M` with `vec(L(X)) = M vec(X)` under column stacking,
/// using `vec(AXB) = (Bᵀ ⊗ A) vec(X)`.
pub fn liouvillian_matrix(m: &LindbladModel) -> Result<DMatrix<C64>> {
    let d = m.dim();
    if d > MAX_LIOUVILLIAN_DIM {
        return Err(Error::TooLarge { dim: d, limit: MAX_LIOUVILLIAN_DIM });
    }
    let id = DMatrix::<C64>::identity(d, d);
    let h = m.hamiltonian().matrix();
    let mut super_op = (id.kronecker(h) - h.transpose().kronecker(&id)) * c(0.0, -1.0);
    for f in m.lindblad_ops() {
        let f = f.matrix();
        let fdf = f.adjoint() * f;
        super_op += f.conjugate().kronecker(f);
        super_op -= (id.kronecker(&fdf) + fdf.transpose().kronecker(&id)) * c(0.5, 0.0);
    }
    Ok(super_op)
}

/// `L(I)` together with its extreme eigenvalues.
#[derive(Clone, Debug, PartialEq)]
pub struct UnitalityDefect {
    pub defect: Operator,
    pub min_eig: f64,
    pub max_eig: f64,
    /// `max|entry|` of `Σ F_αF_α† + Σ F_α†F_α`.
    pub norm_scale: f64,
}

impl UnitalityDefect {
    fn from_parts(defect: Operator, norm_scale: f64) -> Self {
        let ev = defect.hermitian_eigenvalues();
        UnitalityDefect {
            min_eig: ev[0],
            max_eig: ev[ev.len() - 1],
            defect,
            norm_scale,
        }
    }

    /// The defect restricted to levels `0..levels`.
    pub fn restricted(&self, levels: usize) -> Self {
        Self::from_parts(self.defect.leading_block(levels), self.norm_scale)
    }

    pub fn threshold(&self, tol: f64) -> f64 {
        tol * (1.0 + self.norm_scale)
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.min_eig.abs().max(self.max_eig.abs()) <= self.threshold(tol)
    }

    pub fn classify(&self, tol: f64) -> Classification {
        if self.is_zero(tol) {
            Classification::Unital
        } else if self.max_eig <= self.threshold(tol) {
            Classification::NonunitalNegative
        } else {
            Classification::Indefinite
        }
    }
}

/// `Σ_α [F_α, F_α†]`. The Hamiltonian does not enter.
pub fn generator_on_identity(m: &LindbladModel) -> UnitalityDefect {
    let d = m.dim();
    let mut forward = Operator::zeros(d);
    let mut backward = Operator::zeros(d);
    for f in m.lindblad_ops() {
        let f_dag = f.adjoint();
        forward = &forward + &(f * &f_dag);
        backward = &backward + &(&f_dag * f);
    }
    let norm_scale = (&forward + &backward).max_abs();
    UnitalityDefect::from_parts((&forward - &backward).hermitize(), norm_scale)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Classification {
    /// `L(I) = 0`: purity never increases.
    Unital,
    /// `L(I) ≤ 0` and nonzero: still purity-decreasing.
    NonunitalNegative,
    /// `L(I)` has a positive eigenvalue: some state gains purity.
    Indefinite,
}

impl Classification {
    /// Stable identifier used in reports.
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::Unital => "UNITAL",
            Classification::NonunitalNegative => "NONUNITAL_NEGATIVE",
            Classification::Indefinite => "INDEFINITE",
        }
    }

    pub fn is_purity_decreasing(self) -> bool {
        !matches!(self, Classification::Indefinite)
    }
}

/// Boundary information for Fock-truncated models.
#[derive(Clone, Debug, PartialEq)]
pub struct GuardNote {
    /// Levels `guard_level..` are excluded from the classification.
    pub guard_level: usize,
    pub full_min_eig: f64,
    pub full_max_eig: f64,
    /// What the raw, unrestricted defect would have said.
    pub full_classification: Classification,
}

impl GuardNote {
    pub fn describe(&self) -> String {
        format!(
            "defect restricted to levels below {}; full truncated spectrum [{:.6e}, {:.6e}] ({}) includes cutoff artifacts",
            self.guard_level,
            self.full_min_eig,
            self.full_max_eig,
            self.full_classification.as_str()
        )
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct MonotonicityReport {
    pub classification: Classification,
    /// The defect the classification was computed from (restricted for
    /// guarded models).
    pub defect: UnitalityDefect,
    /// Present iff `classification` is `Indefinite` and the search succeeded.
    pub witness: Option<ProbeResult>,
    pub guard: Option<GuardNote>,
    pub diagnostic: Option<String>,
}

fn attach_witness(
    report: &mut MonotonicityReport,
    search: Result<Option<ProbeResult>>,
) {
    match search {
        Ok(Some(w)) => report.witness = Some(w),
        Ok(None) => {
            report.diagnostic = Some("defect is indefinite but the probe found it zero".into())
        }
        Err(e) => report.diagnostic = Some(e.to_string()),
    }
}

/// Classifies `m` by the spectrum of `L(I)`, attaching a purity-increasing
/// witness when it has a positive eigenvalue. `probe_budget` bounds the
/// number of ε-halvings in the witness search.
pub fn classify_model(m: &LindbladModel, tol: f64, probe_budget: usize) -> Result<MonotonicityReport> {
    check_tol(tol)?;
    let defect = generator_on_identity(m);
    let classification = defect.classify(tol);
    let mut report = MonotonicityReport {
        classification,
        defect,
        witness: None,
        guard: None,
        diagnostic: None,
    };
    if classification == Classification::Indefinite {
        let opts = ProbeOptions { max_halvings: probe_budget, ..ProbeOptions::default() };
        attach_witness(&mut report, probe::find_purity_increasing_state_with(m, tol, &opts));
    }
    Ok(report)
}

/// Classification of a truncated model on levels `0..guard_level`, with the
/// full-matrix spectrum reported in the guard note.
pub fn classify_guarded(
    m: &LindbladModel,
    guard_level: usize,
    tol: f64,
    probe_budget: usize,
) -> Result<MonotonicityReport> {
    check_tol(tol)?;
    if guard_level == 0 || guard_level > m.dim() {
        return Err(Error::InvalidArgument(format!(
            "guard level {guard_level} outside 1..={}",
            m.dim()
        )));
    }
    let full = generator_on_identity(m);
    let defect = full.restricted(guard_level);
    let classification = defect.classify(tol);
    let guard = GuardNote {
        guard_level,
        full_min_eig: full.min_eig,
        full_max_eig: full.max_eig,
        full_classification: full.classify(tol),
    };
    let mut report = MonotonicityReport {
        classification,
        defect,
        witness: None,
        guard: Some(guard),
        diagnostic: None,
    };
    if classification == Classification::Indefinite {
        let opts = ProbeOptions { max_halvings: probe_budget, ..ProbeOptions::default() };
        attach_witness(&mut report, probe::find_guarded(m, guard_level, tol, &opts));
    }
    Ok(report)
}

fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")))
    }
}
