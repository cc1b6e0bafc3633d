// Copyright 2026 The purity-semigroup Authors
// SPDX-License-Identifier: Apache-2.0

//! Purity, Rényi-2 entropy and the two algebraic forms of the purity rate.
//!
//! Run with `cargo run --example purity_basics`.

use purity_semigroup::purity::renyi2_entropy;
use purity_semigroup::zoo::sigma_minus;
use purity_semigroup::{purity, purity_rate, random_density_matrix, DensityMatrix, LindbladModel};

fn main() -> purity_semigroup::Result<()> {
    for dim in [2, 4, 8] {
        let mixed = DensityMatrix::maximally_mixed(dim);
        let rho = random_density_matrix(dim, 7)?;
        println!(
            "d = {dim}: p(I/d) = {:.4}  p(ginibre) = {:.4}  S2(ginibre) = {:.4}",
            purity(&mixed),
            purity(&rho),
            renyi2_entropy(&rho)
        );
    }

    let ad = LindbladModel::dissipative(2, vec![sigma_minus()])?;
    let rho = DensityMatrix::diagonal(&[0.6, 0.4])?;
    let b = purity_rate(&ad, &rho)?;
    println!("amplitude damping at diag(0.6, 0.4):");
    println!("  jump gain {:+.4}  drain {:+.4}  total {:+.4}", b.jump_gain, b.drain, b.total);
    println!("  commutator form {:+.4} = {:+.4} (negative part) {:+.4} (defect part)", b.pdot2_total(), b.neg_part, b.comm_part);
    Ok(())
}
