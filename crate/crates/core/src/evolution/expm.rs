// Copyright 2026 The purity-semigroup Authors
// SPDX-License-Identifier: Apache-2.0

use nalgebra::{DMatrix, DVector};

use super::{validate_times, Trajectory};
use crate::error::{Error, Result};
use crate::generator::liouvillian_matrix;
use crate::gks::LindbladModel;
use crate::operator::{c, DensityMatrix, Operator, C64};

/// Propagator `exp(M·dt)` reused while consecutive increments agree.
struct Propagator<'a> {
    generator: &'a DMatrix<C64>,
    dt: f64,
    matrix: DMatrix<C64>,
}

impl<'a> Propagator<'a> {
    fn new(generator: &'a DMatrix<C64>) -> Self {
        let n = generator.nrows();
        Propagator { generator, dt: 0.0, matrix: DMatrix::identity(n, n) }
    }

    fn step(&mut self, dt: f64) -> &DMatrix<C64> {
        if (dt - self.dt).abs() > 1e-12 * dt.abs() {
            // nalgebra's exp is scaling-and-squaring with a Padé approximant.
            self.matrix = (self.generator * c(dt, 0.0)).exp();
            self.dt = dt;
        }
        &self.matrix
    }
}

/// Samples `ρ(t_k) = unvec(exp(M t_k) vec ρ0)` on the given ascending times,
/// with `M` the Liouvillian. Requires `dim ≤ 64`.
pub fn evolve_expm(m: &LindbladModel, rho0: &DensityMatrix, times: &[f64]) -> Result<Trajectory> {
    m.hamiltonian().check_same_dim(rho0.as_operator())?;
    validate_times(times)?;
    let d = m.dim();
    let generator = liouvillian_matrix(m)?;
    let mut prop = Propagator::new(&generator);
    let mut v: DVector<C64> = rho0.as_operator().vec();
    let mut raw = Vec::with_capacity(times.len());
    let mut t_prev = 0.0;
    for &t in times {
        if t > t_prev {
            v = prop.step(t - t_prev) * &v;
        }
        t_prev = t;
        let op = Operator::unvec(&v, d).map_err(|_| Error::NonFiniteResult { t })?;
        raw.push(op);
    }
    Trajectory::assemble(m, times.to_vec(), raw)
}
