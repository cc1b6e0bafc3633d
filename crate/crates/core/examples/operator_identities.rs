// Copyright 2026 The purity-semigroup Authors
// SPDX-License-Identifier: Apache-2.0

//! Numerical checks of the operator identities behind purity monotonicity:
//! trace annihilation, the dissipativity residual and the Schwarz gap.

use purity_semigroup::purity::{dissipativity_residual, jump_overlaps, schwarz_gap};
use purity_semigroup::random::{ginibre_state, GaussianSource};
use purity_semigroup::{apply_generator, min_eigenvalue_hermitian, LindbladModel, Operator};

fn main() -> purity_semigroup::Result<()> {
    let mut src = GaussianSource::new(2024);
    for dim in 2..=5 {
        let ops: Vec<Operator> = (0..2).map(|_| src.operator(dim)).collect();
        let m = LindbladModel::new(src.hermitian(dim), ops)?;
        let x = src.operator(dim);
        let a = src.hermitian(dim);
        let rho = ginibre_state(&mut src, dim)?;
        let tr = apply_generator(&m, &x)?.trace().norm();
        let resid = min_eigenvalue_hermitian(&dissipativity_residual(&m, &a)?.hermitize())?;
        let gaps = schwarz_gap(&m, &rho)?;
        let overlaps = jump_overlaps(&m, &rho)?;
        println!(
            "d = {dim}: |Tr L(X)| {tr:.1e}  residual min eig {resid:+.3e}  schwarz {:+.3e}  overlaps {:.3e}",
            gaps.iter().cloned().fold(f64::NEG_INFINITY, f64::max),
            overlaps.iter().cloned().fold(f64::INFINITY, f64::min)
        );
    }
    Ok(())
}
