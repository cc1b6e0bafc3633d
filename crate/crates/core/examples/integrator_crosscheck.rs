// Copyright 2026 The purity-semigroup Authors
// SPDX-License-Identifier: Apache-2.0

//! Matrix-exponential propagation against adaptive Dormand–Prince on the
//! whole zoo. The stiff cubic model is slow without optimization, so prefer
//! `cargo run --release --example integrator_crosscheck`.

use std::time::Instant;

use purity_semigroup::evolution::{evolve_rk_on, uniform_grid, RkOptions};
use purity_semigroup::{build_model, evolve_expm, random_density_matrix, Family, ZooSpec};

fn main() -> purity_semigroup::Result<()> {
    let times = uniform_grid(5.0, 200);
    let opts = RkOptions::new(1e-8, 1e-10);
    for family in Family::ALL {
        let z = build_model(&ZooSpec::new(family))?;
        let rho = random_density_matrix(z.model.dim(), 1)?;
        let t0 = Instant::now();
        let a = evolve_expm(&z.model, &rho, &times)?;
        let t1 = Instant::now();
        let b = evolve_rk_on(&z.model, &rho, &times, &opts)?;
        let gap = a.purities.iter().zip(&b.purities).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
        println!(
            "{:<26} d = {:>2}  gap {gap:.1e}  expm {:>6.1} ms  rk {:>6.1} ms",
            z.meta.name,
            z.model.dim(),
            (t1 - t0).as_secs_f64() * 1e3,
            t1.elapsed().as_secs_f64() * 1e3
        );
    }
    Ok(())
}
