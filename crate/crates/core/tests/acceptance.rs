// Copyright 2026 The purity-semigroup Authors
// SPDX-License-Identifier: Apache-2.0

//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use purity_semigroup::evolution::{evolve_rk_on, uniform_grid, RkOptions, LEAKAGE_THRESHOLD};
use purity_semigroup::gks::GksModel;
use purity_semigroup::purity::{dissipativity_residual, hamiltonian_rate_term};
use purity_semigroup::random::{ginibre_state, GaussianSource};
use purity_semigroup::zoo::{sigma_minus, sigma_x, sigma_z};
use purity_semigroup::{
    apply_dissipator, apply_generator, check_monotonicity, classify_guarded, classify_model,
    diagonalize_gks, evolve_expm, find_purity_increasing_state, min_eigenvalue_hermitian,
    purity_rate, build_model, Classification, DensityMatrix, Family, LindbladModel, Operator, C64,
    ZooSpec,
};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn unital_sufficiency() -> Outcome {
    let mut src = GaussianSource::new(1001);
    let times = uniform_grid(5.0, 200);
    let (mut worst_rate, mut states) = (f64::NEG_INFINITY, 0);
    for k in 0..100 {
        let dim = 2 + k % 5;
        let m = common::random_unital(&mut src, dim, k);
        let defect = purity_semigroup::generator_on_identity(&m);
        ensure(defect.classify(1e-10) == Classification::Unital, || format!("model {k} not unital"))?;
        for s in 0..10 {
            let rho = ginibre_state(&mut src, dim).map_err(err)?;
            let rate = purity_rate(&m, &rho).map_err(err)?.total;
            worst_rate = worst_rate.max(rate);
            ensure(rate <= 1e-10, || format!("model {k} state {s}: rate {rate:e}"))?;
            let traj = evolve_expm(&m, &rho, &times).map_err(err)?;
            let verdict = check_monotonicity(&traj, 1e-10);
            ensure(verdict.is_monotone(), || format!("model {k} state {s}: {verdict:?}"))?;
            states += 1;
        }
    }
    Ok(format!("{states} states, max rate {worst_rate:.3e}"))
}

fn nonunital_necessity() -> Outcome {
    let mut min_rate = f64::INFINITY;
    for k in 0..100u64 {
        let dim = 2 + (k % 3) as usize;
        let m = common::random_gks(5000 + k, dim);
        let w = find_purity_increasing_state(&m, 1e-10)
            .map_err(err)?
            .ok_or_else(|| format!("model {k}: no witness"))?;
        ensure(w.exact_rate > 0.0, || format!("model {k}: exact rate {:e}", w.exact_rate))?;
        let recomputed = purity_rate(&m, &w.state).map_err(err)?.total;
        ensure((recomputed - w.exact_rate).abs() <= 1e-11 * m.rate_scale(), || {
            format!("model {k}: witness rate {} recomputes to {recomputed}", w.exact_rate)
        })?;
        let report = classify_model(&m, 1e-10, 60).map_err(err)?;
        ensure(report.classification == Classification::Indefinite, || {
            format!("model {k}: classified {}", report.classification.as_str())
        })?;
        let cw = report.witness.ok_or_else(|| format!("model {k}: classify has no witness"))?;
        ensure(cw.exact_rate > 0.0 && (cw.exact_rate - w.exact_rate).abs() <= 1e-11 * m.rate_scale(), || {
            format!("model {k}: classify witness {} vs probe {}", cw.exact_rate, w.exact_rate)
        })?;
        min_rate = min_rate.min(w.exact_rate);
    }
    Ok(format!("100 witnesses, min exact rate {min_rate:.3e}"))
}

fn raising_beyond_unitality() -> Outcome {
    let z = build_model(&ZooSpec::new(Family::BosonicRaising).with_rate(1.0).with_cutoff(16)).map_err(err)?;
    let guard = z.meta.guard_level.ok_or("raising model has no guard level")?;
    let report = classify_guarded(&z.model, guard, 1e-10, 60).map_err(err)?;
    ensure(report.classification == Classification::NonunitalNegative, || {
        format!("guarded classification {}", report.classification.as_str())
    })?;
    let mut src = GaussianSource::new(3003);
    let times = uniform_grid(2.0, 200);
    let mut shortest = usize::MAX;
    for s in 0..50 {
        let rho = ginibre_state(&mut src, 4).map_err(err)?.embed(z.model.dim()).map_err(err)?;
        let traj = evolve_expm(&z.model, &rho, &times).map_err(err)?.with_top_level_population();
        let trusted = traj.below_leakage(LEAKAGE_THRESHOLD);
        ensure(trusted.len() >= 20, || format!("state {s}: only {} trusted samples", trusted.len()))?;
        let verdict = check_monotonicity(&trusted, 1e-9);
        ensure(verdict.is_monotone(), || format!("state {s}: {verdict:?}"))?;
        shortest = shortest.min(trusted.len());
    }
    Ok(format!("NONUNITAL_NEGATIVE at guard {guard}; 50 states, >= {shortest} trusted samples each"))
}

fn amplitude_damping() -> Outcome {
    let m = LindbladModel::dissipative(2, vec![sigma_minus()]).map_err(err)?;
    let mut worst = 0.0f64;
    for &p0 in &[0.6, 0.9, 0.75, 0.55, 0.3] {
        let rho = DensityMatrix::diagonal(&[p0, 1.0 - p0]).map_err(err)?;
        let oracle = 2.0 * (1.0 - p0) * (p0 - (1.0 - p0));
        let got = purity_rate(&m, &rho).map_err(err)?.total;
        worst = worst.max((got - oracle).abs());
        ensure((got - oracle).abs() <= 1e-12, || format!("diag({p0}): {got} vs {oracle}"))?;
    }
    let canonical = purity_rate(&m, &DensityMatrix::diagonal(&[0.6, 0.4]).map_err(err)?).map_err(err)?.total;
    ensure((canonical - 0.16).abs() <= 1e-12, || format!("diag(.6,.4) rate {canonical}"))?;
    let traj = evolve_expm(&m, &DensityMatrix::maximally_mixed(2), &uniform_grid(20.0, 200)).map_err(err)?;
    let p = *traj.purities.last().unwrap();
    ensure(p >= 1.0 - 1e-6, || format!("purity at t=20 is {p}"))?;
    Ok(format!("rate 0.16 (max oracle error {worst:.1e}); purity(20) = {p:.12}"))
}

fn dephasing_closed_form() -> Outcome {
    let m = LindbladModel::dissipative(2, vec![sigma_z()]).map_err(err)?;
    let rho0 = DensityMatrix::new((&Operator::identity(2) + &sigma_x()).scale_real(0.5)).map_err(err)?;
    let rate = purity_rate(&m, &rho0).map_err(err)?.total;
    ensure((rate + 2.0).abs() <= 1e-10, || format!("initial rate {rate}"))?;
    let traj = evolve_expm(&m, &rho0, &uniform_grid(2.0, 200)).map_err(err)?;
    ensure(traj.len() == 200, || format!("{} samples", traj.len()))?;
    let worst = traj
        .times
        .iter()
        .zip(&traj.purities)
        .map(|(t, p)| (p - 0.5 * (1.0 + (-4.0 * t).exp())).abs())
        .fold(0.0, f64::max);
    ensure(worst <= 1e-8, || format!("max deviation {worst:e}"))?;
    Ok(format!("initial rate {rate}; max deviation {worst:.1e} over 200 samples"))
}

fn form_equivalence() -> Outcome {
    let mut src = GaussianSource::new(6006);
    let (mut worst, mut max_neg) = (0.0f64, f64::NEG_INFINITY);
    for k in 0..1000 {
        let dim = 2 + k % 5;
        let m = common::random_model(&mut src, dim);
        let rho = ginibre_state(&mut src, dim).map_err(err)?;
        let b = purity_rate(&m, &rho).map_err(err)?;
        let gap = (b.total - b.pdot2_total()).abs();
        worst = worst.max(gap);
        max_neg = max_neg.max(b.neg_part);
        ensure(gap <= 1e-11, || format!("pair {k}: forms differ by {gap:e}"))?;
        ensure(b.neg_part <= 1e-12, || format!("pair {k}: neg_part {}", b.neg_part))?;
    }
    Ok(format!("1000 pairs, max form gap {worst:.1e}, max neg_part {max_neg:.1e}"))
}

fn dissipativity() -> Outcome {
    let mut src = GaussianSource::new(7007);
    let (mut min_eig, mut ham_gap) = (f64::INFINITY, 0.0f64);
    for k in 0..100 {
        let dim = 2 + k % 4;
        let m = common::random_model(&mut src, dim);
        let a = src.hermitian(dim);
        let r = dissipativity_residual(&m, &a).map_err(err)?;
        let e = min_eigenvalue_hermitian(&r.hermitize()).map_err(err)?;
        min_eig = min_eig.min(e);
        ensure(e >= -1e-10, || format!("model {k}: residual min eigenvalue {e:e}"))?;
        let l = |x: &Operator| apply_generator(&m, x).unwrap();
        let id = Operator::identity(dim);
        let full = &(&l(&(&a * &a)) + &(&(&a * &l(&id)) * &a)) - &(&(&l(&a) * &a) + &(&a * &l(&a)));
        let gap = (&full - &r).max_abs();
        ham_gap = ham_gap.max(gap);
        ensure(gap <= 1e-12, || format!("model {k}: Hamiltonian part leaves {gap:e}"))?;
    }
    Ok(format!("min residual eigenvalue {min_eig:.3e}; Hamiltonian cancellation {ham_gap:.1e}"))
}

fn structure_identities() -> Outcome {
    let mut src = GaussianSource::new(8008);
    let (mut tr, mut ham, mut gks) = (0.0f64, 0.0f64, 0.0f64);
    for k in 0..100 {
        let dim = 2 + k % 4;
        let m = common::random_model(&mut src, dim);
        let x = src.operator(dim);
        let t = apply_generator(&m, &x).map_err(err)?.trace().norm();
        tr = tr.max(t);
        ensure(t <= 1e-12, || format!("model {k}: |Tr L(X)| = {t:e}"))?;
        let rho = ginibre_state(&mut src, dim).map_err(err)?;
        let h = hamiltonian_rate_term(m.hamiltonian(), &rho).map_err(err)?.abs();
        ham = ham.max(h);
        ensure(h <= 1e-12, || format!("model {k}: Hamiltonian rate term {h:e}"))?;

        let n = src.index_in(1, 4);
        let couplings: Vec<Operator> = (0..n).map(|_| src.operator(dim)).collect();
        let b = src.ginibre(n, n);
        let coeff = &b * b.adjoint() / C64::new(n as f64, 0.0);
        let g = GksModel::new(src.hermitian(dim), couplings, coeff).map_err(err)?;
        let diag = diagonalize_gks(&g).map_err(err)?;
        let d = (&g.apply_generator(&x).map_err(err)? - &apply_generator(&diag, &x).map_err(err)?).max_abs();
        let dd = (&g.apply_dissipator(&x).map_err(err)? - &apply_dissipator(&diag, &x).map_err(err)?).max_abs();
        gks = gks.max(d.max(dd));
        ensure(d.max(dd) <= 1e-11, || format!("model {k}: GKS forms differ by {:e}", d.max(dd)))?;
    }
    Ok(format!("max |Tr L(X)| {tr:.1e}; max Hamiltonian term {ham:.1e}; GKS gap {gks:.1e}"))
}

fn integrator_crosscheck() -> Outcome {
    let times = uniform_grid(5.0, 200);
    let opts = RkOptions::new(1e-8, 1e-10);
    let mut lines = Vec::new();
    for (k, family) in Family::ALL.into_iter().enumerate() {
        let z = build_model(&ZooSpec::new(family)).map_err(err)?;
        let rho = purity_semigroup::random_density_matrix(z.model.dim(), 900 + k as u64).map_err(err)?;
        let a = evolve_expm(&z.model, &rho, &times).map_err(err)?;
        let b = evolve_rk_on(&z.model, &rho, &times, &opts).map_err(|e| format!("{}: {e}", family.name()))?;
        let gap = a.purities.iter().zip(&b.purities).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
        ensure(gap <= 1e-7, || format!("{}: purity gap {gap:e}", family.name()))?;
        lines.push(format!("{} {gap:.0e}", family.name()));
    }
    Ok(lines.join(", "))
}

fn finite_differences() -> Outcome {
    let mut src = GaussianSource::new(10010);
    let times = uniform_grid(0.02, 201);
    let mut worst = 0.0f64;
    for k in 0..100 {
        let dim = 2 + k % 7;
        let m = common::random_model(&mut src, dim);
        let rho = ginibre_state(&mut src, dim).map_err(err)?;
        let traj = evolve_expm(&m, &rho, &times).map_err(err)?;
        for (i, fd) in traj.centered_differences() {
            let exact = traj.rates[i];
            let rel = (fd - exact).abs() / exact.abs().max(1e-12);
            worst = worst.max(rel);
            ensure(rel <= 1e-6, || format!("case {k} sample {i}: fd {fd} vs rate {exact}"))?;
        }
    }
    Ok(format!("100 cases, dims 2..=8, max relative error {worst:.1e}"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("unital models never raise purity", unital_sufficiency),
        ("non-unital models admit a purity-increasing state", nonunital_necessity),
        ("truncated raising is monotone below the guard", raising_beyond_unitality),
        ("amplitude damping counterexample and purification", amplitude_damping),
        ("dephasing closed-form decay", dephasing_closed_form),
        ("purity-rate forms agree", form_equivalence),
        ("dissipativity residual is positive", dissipativity),
        ("trace, Hamiltonian and GKS identities", structure_identities),
        ("expm and adaptive RK agree on the zoo", integrator_crosscheck),
        ("finite differences match the analytic rate", finite_differences),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {:>2}: {name} ({detail}) [{secs:.1}s]", i + 1),
            Err(detail) => {
                failures += 1;
                println!("FAIL criterion {:>2}: {name}: {detail} [{secs:.1}s]", i + 1)
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
