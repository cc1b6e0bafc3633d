// Copyright 2026 The purity-semigroup Authors
// SPDX-License-Identifier: Apache-2.0

//! Truncated ladder models: L(I) = −γI on the trusted levels even though the
//! truncated raising operator is not unital on the full space.

use purity_semigroup::evolution::{uniform_grid, LEAKAGE_THRESHOLD};
use purity_semigroup::generator::DEFAULT_TOL;
use purity_semigroup::random::{ginibre_state, GaussianSource};
use purity_semigroup::{build_model, check_monotonicity, classify_guarded, evolve_expm, Family, ZooSpec};

fn main() -> purity_semigroup::Result<()> {
    let z = build_model(&ZooSpec::new(Family::BosonicRaising).with_cutoff(16))?;
    let guard = z.meta.guard_level.unwrap();
    let report = classify_guarded(&z.model, guard, DEFAULT_TOL, 60)?;
    println!("{}: {}", z.meta.name, report.classification.as_str());
    println!("{}", report.guard.as_ref().unwrap().describe());

    let mut src = GaussianSource::new(3);
    let rho = ginibre_state(&mut src, 3)?.embed(z.model.dim())?;
    let traj = evolve_expm(&z.model, &rho, &uniform_grid(3.0, 61))?.with_top_level_population();
    let trusted = traj.below_leakage(LEAKAGE_THRESHOLD);
    println!("trusted up to t = {:.2}: {:?}", trusted.times.last().unwrap(), check_monotonicity(&trusted, 1e-9));
    for k in (0..traj.len()).step_by(10) {
        let top = traj.top_level_pop.as_ref().unwrap()[k];
        println!("t = {:4.2}  purity {:.6}  top level {top:.2e}", traj.times[k], traj.purities[k]);
    }
    Ok(())
}
