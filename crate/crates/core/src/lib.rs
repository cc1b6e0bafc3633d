// Copyright 2026 The purity-semigroup Authors
// SPDX-License-Identifier: Apache-2.0

//! Purity monotonicity of finite-dimensional quantum dynamical semigroups.
//!
//! A Lindblad generator `L(ρ) = Σ_α F_αρF_α† − ½{F_α†F_α, ρ}` never raises
//! the purity `Tr ρ²` of any state when its unitality defect
//! `L(I) = Σ_α [F_α, F_α†]` is negative semidefinite. In finite dimension
//! `Tr L(I) = 0`, so this happens exactly when `L(I) = 0`; every other
//! generator admits a state close to `I/d` whose purity grows.
//!
//! The crate provides the pieces to check this numerically:
//!
//! * [`operator`] and [`random`]: dense complex matrices, density matrices
//!   and seeded random fixtures
//! * [`gks`]: models in GKS coefficient form and their diagonalization
//! * [`generator`]: generator action, Liouvillian, `L(I)` and classification
//! * [`purity`]: exact purity rates and related operator inequalities
//! * [`evolution`]: trajectories via matrix exponential or adaptive RK
//! * [`probe`]: constructive purity-increasing witnesses
//! * [`zoo`]: canonical channels including truncated bosonic ladders
//! * [`io`] and [`cli`]: JSON model documents and the `purity` command

pub mod cli;
pub mod error;
pub mod evolution;
pub mod generator;
pub mod gks;
pub mod io;
pub mod operator;
pub mod probe;
pub mod purity;
pub mod random;
pub mod zoo;

pub use error::{Error, Result};
pub use evolution::{check_monotonicity, evolve_expm, evolve_rk, Trajectory, Verdict};
pub use generator::{
    apply_dissipator, apply_generator, classify_guarded, classify_model, generator_on_identity,
    liouvillian_matrix, Classification, MonotonicityReport, UnitalityDefect,
};
pub use gks::{diagonalize_gks, GksModel, LindbladModel};
pub use operator::{commutator, min_eigenvalue_hermitian, DensityMatrix, Operator, C64};
pub use probe::{find_purity_increasing_state, perturbed_mixed_state, ProbeResult};
pub use purity::{purity, purity_rate, PurityRateBreakdown};
pub use random::{random_density_matrix, random_perturbation};
pub use zoo::{build_model, Family, ZooModel, ZooSpec};
