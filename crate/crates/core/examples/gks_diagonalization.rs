// Copyright 2026 The purity-semigroup Authors
// SPDX-License-Identifier: Apache-2.0

//! Turning a GKS coefficient matrix into diagonal Lindblad operators.

use nalgebra::DMatrix;
use purity_semigroup::gks::GksModel;
use purity_semigroup::random::GaussianSource;
use purity_semigroup::zoo::{sigma_x, sigma_y};
use purity_semigroup::{apply_generator, diagonalize_gks, Operator, C64};

fn main() -> purity_semigroup::Result<()> {
    // Rank-one coupling matrix on (σx, σy): a single lowering channel.
    let i = C64::new(0.0, 1.0);
    let one = C64::new(1.0, 0.0);
    let a = DMatrix::from_row_slice(2, 2, &[one, -i, i, one]);
    let g = GksModel::new(Operator::zeros(2), vec![sigma_x(), sigma_y()], a)?;
    let m = diagonalize_gks(&g)?;
    println!("{} Lindblad operator(s)", m.lindblad_ops().len());
    for f in m.lindblad_ops() {
        println!("F =\n{}", f.matrix());
    }

    // A random full-rank example and the largest discrepancy between forms.
    let mut src = GaussianSource::new(11);
    let couplings: Vec<Operator> = (0..3).map(|_| src.operator(3)).collect();
    let b = src.ginibre(3, 3);
    let g = GksModel::new(src.hermitian(3), couplings, &b * b.adjoint())?;
    let m = diagonalize_gks(&g)?;
    let x = src.operator(3);
    let gap = (&g.apply_generator(&x)? - &apply_generator(&m, &x)?).max_abs();
    println!("random model: {} channels, generator gap {gap:.2e}", m.lindblad_ops().len());
    Ok(())
}
