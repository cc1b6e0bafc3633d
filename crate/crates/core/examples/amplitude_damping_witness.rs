// Copyright 2026 The purity-semigroup Authors
// SPDX-License-Identifier: Apache-2.0

//! Constructing a state whose purity grows under amplitude damping, and
//! watching the ε-expansion of the rate converge.

use purity_semigroup::probe::{first_order_normalization, first_order_rate, Sign};
use purity_semigroup::zoo::sigma_minus;
use purity_semigroup::{find_purity_increasing_state, perturbed_mixed_state, purity_rate, LindbladModel};

fn main() -> purity_semigroup::Result<()> {
    let m = LindbladModel::dissipative(2, vec![sigma_minus()])?;
    let w = find_purity_increasing_state(&m, 1e-10)?.expect("amplitude damping is not unital");
    println!("ε = {}, rate {:.6}, first-order {:.6}", w.epsilon, w.exact_rate, w.first_order_rate);
    println!("state =\n{}", w.state.as_operator().matrix());

    let slope = first_order_rate(&m, &w.perturbation)? * first_order_normalization(2);
    for eps in [1e-1, 1e-2, 1e-3, 1e-4] {
        let rho = perturbed_mixed_state(&w.perturbation, eps, Sign::Plus)?;
        let r = purity_rate(&m, &rho)?.total;
        println!("ε = {eps:.0e}: rate/ε = {:.8}  (limit {slope})", r / eps);
    }
    Ok(())
}
