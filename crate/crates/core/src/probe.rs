// Copyright 2026 The purity-semigroup Authors
// SPDX-License-Identifier: Apache-2.0

//! Purity-increasing witnesses near the maximally mixed state.
//!
//! For `ρ = (I ± εA)/Tr[I ± εA]` the purity rate expands as
//!
//! ```text
//! ṗ = ±2ε Tr(A L(I)) / d² + O(ε²)
//! ```
//!
//! because `Σ Tr[F_α, F_α†] = 0` kills the zeroth order. Whenever `L(I) ≠ 0`,
//! choosing `A ∝ L(I)` makes the first-order term positive, and shrinking ε
//! until the exact rate is positive yields an explicit witness.

use crate::error::{Error, Result};
use crate::generator::{generator_on_identity, UnitalityDefect};
use crate::gks::LindbladModel;
use crate::operator::{DensityMatrix, Operator, ALGEBRAIC_TOL, SPECTRAL_TOL, C64};
use crate::purity::purity_rate;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProbeResult {
    /// Hermitian, operator norm at most one.
    pub perturbation: Operator,
    pub epsilon: f64,
    pub sign: Sign,
    pub state: DensityMatrix,
    /// `2 sign · Tr(A L(I)) / d²`, the ε-derivative of `ṗ` at `ε = 0`.
    pub first_order_rate: f64,
    /// `ṗ` at `state`.
    pub exact_rate: f64,
}

/// Search parameters for [`find_purity_increasing_state_with`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProbeOptions {
    /// First ε tried; halved after every non-positive exact rate.
    pub initial_epsilon: f64,
    pub max_halvings: usize,
}

impl Default for ProbeOptions {
    fn default() -> Self {
        ProbeOptions { initial_epsilon: 0.2, max_halvings: 60 }
    }
}

fn check_hermitian(a: &Operator) -> Result<()> {
    let defect = a.hermitian_defect();
    if defect > ALGEBRAIC_TOL * (1.0 + a.max_abs()) {
        return Err(Error::NotHermitian { what: "perturbation", defect });
    }
    Ok(())
}

fn spectral_norm_hermitian(a: &Operator) -> f64 {
    let ev = a.hermitian_eigenvalues();
    ev[0].abs().max(ev[ev.len() - 1].abs())
}

/// `(I + sign·ε·a) / Tr(I + sign·ε·a)`.
pub fn perturbed_mixed_state(a: &Operator, epsilon: f64, sign: Sign) -> Result<DensityMatrix> {
    check_hermitian(a)?;
    let norm = spectral_norm_hermitian(a);
    if norm > 1.0 + SPECTRAL_TOL {
        return Err(Error::InvalidArgument(format!("perturbation norm {norm} exceeds 1")));
    }
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::InvalidArgument(format!("epsilon {epsilon} outside (0, 1)")));
    }
    let shifted = &Operator::identity(a.dim()) + &a.hermitize().scale_real(sign.value() * epsilon);
    let tr = shifted.trace().re;
    DensityMatrix::new(shifted.scale_real(1.0 / tr).hermitize())
}

/// `Tr(a · L(I))`, the unnormalized first-order coefficient.
pub fn first_order_rate(m: &LindbladModel, a: &Operator) -> Result<f64> {
    check_hermitian(a)?;
    m.hamiltonian().check_same_dim(a)?;
    Ok(a.trace_product(&generator_on_identity(m).defect).re)
}

/// Factor relating [`first_order_rate`] to `dṗ/dε` at `ε = 0`.
pub fn first_order_normalization(dim: usize) -> f64 {
    2.0 / (dim as f64).powi(2)
}

/// Orthonormal Hermitian basis of `d×d` matrices (Hilbert–Schmidt inner
/// product): `E_kk`, `(E_jk + E_kj)/√2` and `i(E_jk − E_kj)/√2` for `j < k`.
pub fn hermitian_basis(dim: usize) -> Vec<Operator> {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let mut out = Vec::with_capacity(dim * dim);
    for k in 0..dim {
        out.push(Operator::basis(dim, k, k));
    }
    for j in 0..dim {
        for k in (j + 1)..dim {
            let sym = &Operator::basis(dim, j, k) + &Operator::basis(dim, k, j);
            out.push(sym.scale_real(s));
            let anti = &Operator::basis(dim, j, k) - &Operator::basis(dim, k, j);
            out.push(anti.scale(C64::new(0.0, s)));
        }
    }
    out
}

/// [`find_purity_increasing_state_with`] using default options.
pub fn find_purity_increasing_state(m: &LindbladModel, tol: f64) -> Result<Option<ProbeResult>> {
    find_purity_increasing_state_with(m, tol, &ProbeOptions::default())
}

/// Returns `None` iff `L(I)` vanishes within `tol · (1 + norm_scale)`.
pub fn find_purity_increasing_state_with(
    m: &LindbladModel,
    tol: f64,
    opts: &ProbeOptions,
) -> Result<Option<ProbeResult>> {
    let defect = generator_on_identity(m);
    if defect.is_zero(tol) {
        return Ok(None);
    }
    search_along(m, &defect.defect, opts).map(Some)
}

/// Guarded variant for truncated models: `None` when the defect restricted to
/// levels `0..guard_level` has no positive eigenvalue, otherwise the same
/// search as the unguarded probe.
pub fn find_guarded(
    m: &LindbladModel,
    guard_level: usize,
    tol: f64,
    opts: &ProbeOptions,
) -> Result<Option<ProbeResult>> {
    if guard_level == 0 || guard_level > m.dim() {
        return Err(Error::InvalidArgument(format!("guard level {guard_level} outside 1..={}", m.dim())));
    }
    let full: UnitalityDefect = generator_on_identity(m);
    let restricted = full.restricted(guard_level);
    if restricted.max_eig <= restricted.threshold(tol) {
        return Ok(None);
    }
    search_along(m, &full.defect, opts).map(Some)
}

fn search_along(m: &LindbladModel, direction: &Operator, opts: &ProbeOptions) -> Result<ProbeResult> {
    let norm = spectral_norm_hermitian(direction);
    let perturbation = direction.scale_real(1.0 / norm).hermitize();
    let sign = Sign::Plus;
    let first_order = sign.value() * first_order_rate(m, &perturbation)? * first_order_normalization(m.dim());
    let mut epsilon = opts.initial_epsilon;
    for _ in 0..=opts.max_halvings {
        let state = perturbed_mixed_state(&perturbation, epsilon, sign)?;
        let exact = purity_rate(m, &state)?.total;
        if exact > 0.0 {
            return Ok(ProbeResult {
                perturbation,
                epsilon,
                sign,
                state,
                first_order_rate: first_order,
                exact_rate: exact,
            });
        }
        epsilon *= 0.5;
    }
    Err(Error::ProbeExhausted { iterations: opts.max_halvings, first_order })
}
