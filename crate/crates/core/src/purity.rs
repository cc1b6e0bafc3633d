// Copyright 2026 The purity-semigroup Authors
// SPDX-License-Identifier: Apache-2.0

//! Purity, its exact rate of change and the operator quantities used by the
//! monotonicity arguments.
//!
//! `ṗ = 2 Tr(ρ L(ρ))` is evaluated in two algebraically independent ways:
//!
//! * jump/drain form: `2 Σ_α Tr[ρF_αρF_α†] − 2 Σ_α Tr[ρ²F_α†F_α]`
//! * commutator form: `−Σ_α ‖ρF_α − F_αρ‖²_HS + Σ_α Tr(ρ²[F_α, F_α†])`
//!
//! The first summand of the commutator form is never positive, so the sign of
//! the second, governed by `L(I)`, bounds the rate.
//!
//! The maximally mixed state `I/d` has purity `1/d`, which is the lower bound
//! enforced here.

use crate::error::{Error, Result};
use crate::gks::LindbladModel;
use crate::generator::apply_dissipator;
use crate::operator::{commutator, DensityMatrix, Operator, ALGEBRAIC_TOL};

/// Relative agreement required between the two rate forms.
pub const FORM_AGREEMENT_TOL: f64 = 1e-11;

/// `Tr(ρ²)`.
pub fn purity(rho: &DensityMatrix) -> f64 {
    let op = rho.as_operator();
    op.trace_product(op).re
}

/// Rényi entropy of order two, `−ln Tr(ρ²)`.
pub fn renyi2_entropy(rho: &DensityMatrix) -> f64 {
    -purity(rho).ln()
}

/// Both algebraic decompositions of `ṗ`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PurityRateBreakdown {
    /// `ṗ`, taken from the jump/drain form.
    pub total: f64,
    /// `2 Σ_α Tr[ρF_αρF_α†]`
    pub jump_gain: f64,
    /// `−2 Σ_α Tr[ρ²F_α†F_α]`
    pub drain: f64,
    /// `−Σ_α Tr[(ρF_α − F_αρ)†(ρF_α − F_αρ)]`
    pub neg_part: f64,
    /// `Σ_α Tr(ρ²[F_α, F_α†])`
    pub comm_part: f64,
}

impl PurityRateBreakdown {
    pub fn pdot2_total(&self) -> f64 {
        self.neg_part + self.comm_part
    }
}

/// Exact purity rate. Fails with [`Error::RateFormsDisagree`] if the two
/// decompositions differ by more than `1e-11 · (1 + Σ‖F_α‖²_F)`.
pub fn purity_rate(m: &LindbladModel, rho: &DensityMatrix) -> Result<PurityRateBreakdown> {
    let r = rho.as_operator();
    m.hamiltonian().check_same_dim(r)?;
    let r2 = r * r;
    let (mut jump, mut drain, mut neg, mut comm) = (0.0, 0.0, 0.0, 0.0);
    for f in m.lindblad_ops() {
        let f_dag = f.adjoint();
        let fdf = &f_dag * f;
        let ffd = f * &f_dag;
        let rf = r * f;
        jump += 2.0 * rf.trace_product(&(r * &f_dag)).re;
        drain -= 2.0 * r2.trace_product(&fdf).re;
        let k = &rf - &(f * r);
        neg -= k.frobenius_norm().powi(2);
        comm += r2.trace_product(&(&ffd - &fdf)).re;
    }
    let total = jump + drain;
    let second = neg + comm;
    if (total - second).abs() > FORM_AGREEMENT_TOL * m.rate_scale() {
        return Err(Error::RateFormsDisagree { first: total, second });
    }
    Ok(PurityRateBreakdown {
        total,
        jump_gain: jump,
        drain,
        neg_part: neg,
        comm_part: comm,
    })
}

/// Contribution of the Hamiltonian to `ṗ`, `Re(−2i Tr(ρ[H, ρ]))`; zero up to
/// round-off for every Hermitian `H`.
pub fn hamiltonian_rate_term(h: &Operator, rho: &DensityMatrix) -> Result<f64> {
    let defect = h.hermitian_defect();
    if defect > ALGEBRAIC_TOL * (1.0 + h.max_abs()) {
        return Err(Error::NotHermitian { what: "hamiltonian", defect });
    }
    let r = rho.as_operator();
    let t = r.trace_product(&commutator(h, r)?);
    Ok(2.0 * t.im)
}

/// `L(a†a) + a†L(I)a − L(a†)a − a†L(a)` for the dissipator `L`. Positive
/// semidefinite for every completely positive generator.
pub fn dissipativity_residual(m: &LindbladModel, a: &Operator) -> Result<Operator> {
    m.hamiltonian().check_same_dim(a)?;
    let a_dag = a.adjoint();
    let l = |x: &Operator| apply_dissipator(m, x);
    let l_id = l(&Operator::identity(m.dim()))?;
    let t1 = l(&(&a_dag * a))?;
    let t2 = &(&a_dag * &l_id) * a;
    let t3 = &l(&a_dag)? * a;
    let t4 = &a_dag * &l(a)?;
    Ok(&(&t1 + &t2) - &(&t3 + &t4))
}

/// `2Tr[X_αY_α] − Tr[Y_αY_α†] − Tr[X_αX_α†]` with `X_α = ρF_α`,
/// `Y_α = ρF_α†`, one entry per Lindblad operator.
pub fn schwarz_gap(m: &LindbladModel, rho: &DensityMatrix) -> Result<Vec<f64>> {
    let r = rho.as_operator();
    m.hamiltonian().check_same_dim(r)?;
    Ok(m.lindblad_ops()
        .iter()
        .map(|f| {
            let x = r * f;
            let y = r * &f.adjoint();
            2.0 * x.trace_product(&y).re - y.frobenius_norm().powi(2) - x.frobenius_norm().powi(2)
        })
        .collect())
}

/// `Tr[X_αY_α] = Tr[ρF_αρF_α†]` per Lindblad operator; nonnegative because
/// it equals `‖√ρ F_α √ρ‖²_HS`.
pub fn jump_overlaps(m: &LindbladModel, rho: &DensityMatrix) -> Result<Vec<f64>> {
    let r = rho.as_operator();
    m.hamiltonian().check_same_dim(r)?;
    Ok(m.lindblad_ops()
        .iter()
        .map(|f| (r * f).trace_product(&(r * &f.adjoint())).re)
        .collect())
}
