// Copyright 2026 The purity-semigroup Authors
// SPDX-License-Identifier: Apache-2.0

//! Seeded, platform-independent random operators and states.
//!
//! The uniform stream comes from ChaCha20 seeded through `seed_from_u64`;
//! Gaussians are produced from it with the Box–Muller transform so that the
//! same seed reproduces the same fixtures on every platform.

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

use crate::error::{Error, Result};
use crate::operator::{c, DensityMatrix, Operator, C64};

/// Gaussian sampler over a ChaCha20 uniform stream.
#[derive(Clone, Debug)]
pub struct GaussianSource {
    rng: ChaCha20Rng,
    spare: Option<f64>,
}

impl GaussianSource {
    pub fn new(seed: u64) -> Self {
        GaussianSource { rng: ChaCha20Rng::seed_from_u64(seed), spare: None }
    }

    /// Uniform on `[0, 1)`.
    pub fn uniform(&mut self) -> f64 {
        self.rng.random::<f64>()
    }

    /// Uniform on `[lo, hi)`.
    pub fn uniform_in(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.uniform()
    }

    /// Uniform integer on `lo..=hi`.
    pub fn index_in(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.random_range(lo..=hi)
    }

    pub fn standard_normal(&mut self) -> f64 {
        if let Some(z) = self.spare.take() {
            return z;
        }
        // 1 - u lies in (0, 1], keeping the logarithm finite.
        let u1 = 1.0 - self.uniform();
        let u2 = self.uniform();
        let r = (-2.0 * u1.ln()).sqrt();
        let theta = std::f64::consts::TAU * u2;
        self.spare = Some(r * theta.sin());
        r * theta.cos()
    }

    /// Standard complex Gaussian, `E|z|² = 1`.
    pub fn complex_normal(&mut self) -> C64 {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        c(s * self.standard_normal(), s * self.standard_normal())
    }

    /// Matrix with i.i.d. standard complex Gaussian entries.
    pub fn ginibre(&mut self, rows: usize, cols: usize) -> DMatrix<C64> {
        DMatrix::from_fn(rows, cols, |_, _| self.complex_normal())
    }

    /// `(G + G†)/2` for a square Ginibre `G`.
    pub fn hermitian(&mut self, dim: usize) -> Operator {
        Operator::wrap(self.ginibre(dim, dim)).hermitize()
    }

    /// Haar-distributed unitary from the QR decomposition of a Ginibre matrix,
    /// with the phases of `R`'s diagonal moved into `Q`.
    pub fn unitary(&mut self, dim: usize) -> Operator {
        let qr = self.ginibre(dim, dim).qr();
        let (mut q, r) = qr.unpack();
        for k in 0..dim {
            let d = r[(k, k)];
            let phase = if d.norm() > 0.0 { d / d.norm() } else { c(1.0, 0.0) };
            let mut col = q.column_mut(k);
            col *= phase;
        }
        Operator::wrap(q)
    }

    /// General complex operator with i.i.d. complex Gaussian entries.
    pub fn operator(&mut self, dim: usize) -> Operator {
        Operator::wrap(self.ginibre(dim, dim))
    }
}

fn check_dim(dim: usize) -> Result<()> {
    if dim < 2 {
        Err(Error::InvalidArgument(format!("dimension must be at least 2, got {dim}")))
    } else {
        Ok(())
    }
}

/// Ginibre state `GG†/Tr(GG†)`.
pub fn random_density_matrix(dim: usize, seed: u64) -> Result<DensityMatrix> {
    check_dim(dim)?;
    let g = GaussianSource::new(seed).ginibre(dim, dim);
    let gg = &g * g.adjoint();
    DensityMatrix::normalized(Operator::wrap(gg))
}

/// Ginibre state drawn from an existing source.
pub fn ginibre_state(src: &mut GaussianSource, dim: usize) -> Result<DensityMatrix> {
    check_dim(dim)?;
    let g = src.ginibre(dim, dim);
    DensityMatrix::normalized(Operator::wrap(&g * g.adjoint()))
}

/// Random Hermitian operator of operator norm exactly one.
pub fn random_perturbation(dim: usize, seed: u64) -> Result<Operator> {
    check_dim(dim)?;
    let h = GaussianSource::new(seed).hermitian(dim);
    let ev = h.hermitian_eigenvalues();
    let norm = ev[0].abs().max(ev[ev.len() - 1].abs());
    Ok(h.scale_real(1.0 / norm).hermitize())
}
