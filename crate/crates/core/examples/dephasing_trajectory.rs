// Copyright 2026 The purity-semigroup Authors
// SPDX-License-Identifier: Apache-2.0

//! Dephasing of |+⟩ compared with the closed form ½(1 + e^{−4t}); the
//! trajectory is written as CSV to stdout.

use purity_semigroup::evolution::uniform_grid;
use purity_semigroup::zoo::{sigma_x, sigma_z};
use purity_semigroup::{check_monotonicity, evolve_expm, DensityMatrix, LindbladModel, Operator};

fn main() -> purity_semigroup::Result<()> {
    let m = LindbladModel::dissipative(2, vec![sigma_z()])?;
    let plus = DensityMatrix::new((&Operator::identity(2) + &sigma_x()).scale_real(0.5))?;
    let traj = evolve_expm(&m, &plus, &uniform_grid(2.0, 200))?;
    let worst = traj
        .times
        .iter()
        .zip(&traj.purities)
        .map(|(t, p)| (p - 0.5 * (1.0 + (-4.0 * t).exp())).abs())
        .fold(0.0, f64::max);
    eprintln!("max deviation from closed form: {worst:.2e}");
    eprintln!("{:?}", check_monotonicity(&traj, 1e-10));
    traj.write_csv(std::io::stdout().lock())
}
