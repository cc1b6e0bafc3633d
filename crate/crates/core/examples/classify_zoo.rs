// Copyright 2026 The purity-semigroup Authors
// SPDX-License-Identifier: Apache-2.0

//! Classify every canonical model by the spectrum of L(I).

use purity_semigroup::generator::DEFAULT_TOL;
use purity_semigroup::{build_model, classify_guarded, classify_model, Family, ZooSpec};

fn main() -> purity_semigroup::Result<()> {
    println!("{:<26} {:<20} {:>12} {:>12}", "model", "class", "min eig", "max eig");
    for family in Family::ALL {
        let z = build_model(&ZooSpec::new(family))?;
        let report = match z.meta.guard_level {
            Some(g) => classify_guarded(&z.model, g, DEFAULT_TOL, 60)?,
            None => classify_model(&z.model, DEFAULT_TOL, 60)?,
        };
        println!(
            "{:<26} {:<20} {:>12.4e} {:>12.4e}",
            z.meta.name,
            report.classification.as_str(),
            report.defect.min_eig,
            report.defect.max_eig
        );
        if let Some(note) = &report.guard {
            println!("{:<26} {}", "", note.describe());
        }
    }
    Ok(())
}
