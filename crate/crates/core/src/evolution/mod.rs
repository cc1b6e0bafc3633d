// Copyright 2026 The purity-semigroup Authors
// SPDX-License-Identifier: Apache-2.0

//! Time evolution of the master equation and purity trajectories.
//!
//! Two independent integrators are provided: propagation with the matrix
//! exponential of the Liouvillian ([`evolve_expm`], authoritative up to
//! dimension 64) and an adaptive Dormand–Prince 5(4) pair acting directly on
//! the density matrix ([`evolve_rk`]).

mod expm;
mod rk;

use std::io::Write;

pub use expm::evolve_expm;
pub use rk::{evolve_rk, evolve_rk_on, RkOptions};

use crate::error::{Error, Result};
use crate::gks::LindbladModel;
use crate::operator::{DensityMatrix, Operator, StateTolerance};
use crate::purity::{purity, purity_rate};

/// Samples on the default grid.
pub const DEFAULT_SAMPLES: usize = 200;
/// Top-level population below which truncated models are trusted.
pub const LEAKAGE_THRESHOLD: f64 = 1e-6;

/// `n` uniformly spaced times from 0 to `t_max` inclusive.
pub fn uniform_grid(t_max: f64, n: usize) -> Vec<f64> {
    let last = (n.max(2) - 1) as f64;
    (0..n.max(2)).map(|k| t_max * k as f64 / last).collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct Trajectory {
    pub times: Vec<f64>,
    pub states: Vec<DensityMatrix>,
    pub purities: Vec<f64>,
    /// Exact `ṗ` at each sample.
    pub rates: Vec<f64>,
    /// `Re Tr ρ − 1`.
    pub trace_drift: Vec<f64>,
    /// Smallest eigenvalue of each (Hermitized) state.
    pub min_eig_drift: Vec<f64>,
    /// `max|ρ − ρ†|` before re-Hermitization.
    pub herm_defect: Vec<f64>,
    /// Population of the highest level, recorded for Fock-truncated models.
    pub top_level_pop: Option<Vec<f64>>,
}

impl Trajectory {
    /// Builds the per-sample diagnostics from raw integrator output.
    pub(crate) fn assemble(m: &LindbladModel, times: Vec<f64>, raw: Vec<Operator>) -> Result<Self> {
        let n = times.len();
        let mut traj = Trajectory {
            times,
            states: Vec::with_capacity(n),
            purities: Vec::with_capacity(n),
            rates: Vec::with_capacity(n),
            trace_drift: Vec::with_capacity(n),
            min_eig_drift: Vec::with_capacity(n),
            herm_defect: Vec::with_capacity(n),
            top_level_pop: None,
        };
        for (t, op) in traj.times.iter().zip(raw) {
            traj.herm_defect.push(op.hermitian_defect());
            let h = op.hermitize();
            traj.trace_drift.push(h.trace().re - 1.0);
            traj.min_eig_drift.push(h.hermitian_eigenvalues()[0]);
            let state = DensityMatrix::with_tolerance(h, StateTolerance::EVOLVED)
                .map_err(|e| Error::InvalidState(format!("at t = {t}: {e}")))?;
            traj.purities.push(purity(&state));
            traj.rates.push(purity_rate(m, &state)?.total);
            traj.states.push(state);
        }
        Ok(traj)
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    /// Records the population of the highest basis level at every sample.
    pub fn with_top_level_population(mut self) -> Self {
        let pops = self
            .states
            .iter()
            .map(|s| {
                let d = s.dim();
                s.as_operator().get(d - 1, d - 1).re
            })
            .collect();
        self.top_level_pop = Some(pops);
        self
    }

    /// First `n` samples.
    pub fn prefix(&self, n: usize) -> Trajectory {
        let n = n.min(self.len());
        Trajectory {
            times: self.times[..n].to_vec(),
            states: self.states[..n].to_vec(),
            purities: self.purities[..n].to_vec(),
            rates: self.rates[..n].to_vec(),
            trace_drift: self.trace_drift[..n].to_vec(),
            min_eig_drift: self.min_eig_drift[..n].to_vec(),
            herm_defect: self.herm_defect[..n].to_vec(),
            top_level_pop: self.top_level_pop.as_ref().map(|p| p[..n].to_vec()),
        }
    }

    /// Leading samples whose top-level population stays below `threshold`;
    /// the whole trajectory when no population was recorded.
    pub fn below_leakage(&self, threshold: f64) -> Trajectory {
        match &self.top_level_pop {
            None => self.clone(),
            Some(p) => self.prefix(p.iter().take_while(|&&x| x < threshold).count()),
        }
    }

    /// Centered differences of the purity at interior samples, paired with
    /// the sample index.
    pub fn centered_differences(&self) -> Vec<(usize, f64)> {
        (1..self.len().saturating_sub(1))
            .map(|k| {
                let dt = self.times[k + 1] - self.times[k - 1];
                (k, (self.purities[k + 1] - self.purities[k - 1]) / dt)
            })
            .collect()
    }

    /// Writes the trajectory as CSV with header
    /// `t,purity,rate,trace_re,min_eig,herm_defect,top_level_pop`.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let io = |e: csv::Error| Error::InvalidArgument(format!("csv output failed: {e}"));
        let mut w = csv::Writer::from_writer(out);
        w.write_record(CSV_HEADER).map_err(io)?;
        for k in 0..self.len() {
            let top = match &self.top_level_pop {
                Some(p) => p[k].to_string(),
                None => String::new(),
            };
            w.write_record([
                self.times[k].to_string(),
                self.purities[k].to_string(),
                self.rates[k].to_string(),
                (self.trace_drift[k] + 1.0).to_string(),
                self.min_eig_drift[k].to_string(),
                self.herm_defect[k].to_string(),
                top,
            ])
            .map_err(io)?;
        }
        w.flush().map_err(|e| Error::InvalidArgument(format!("csv output failed: {e}")))?;
        Ok(())
    }
}

pub const CSV_HEADER: [&str; 7] = [
    "t",
    "purity",
    "rate",
    "trace_re",
    "min_eig",
    "herm_defect",
    "top_level_pop",
];

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Verdict {
    MonotoneNonincreasing,
    /// First sample `index` at which the purity rises by `jump` to the next
    /// sample, or at which the rate is positive.
    Violation { index: usize, jump: f64, rate: f64 },
}

impl Verdict {
    pub fn is_monotone(&self) -> bool {
        matches!(self, Verdict::MonotoneNonincreasing)
    }
}

/// Monotone iff every increment satisfies `Δp ≤ tol · (1 + p_k)` and every
/// sampled rate is at most `tol`.
pub fn check_monotonicity(traj: &Trajectory, tol: f64) -> Verdict {
    let n = traj.len();
    for k in 0..n {
        let jump = if k + 1 < n { traj.purities[k + 1] - traj.purities[k] } else { 0.0 };
        let rate = traj.rates[k];
        if jump > tol * (1.0 + traj.purities[k]) || rate > tol {
            return Verdict::Violation { index: k, jump, rate };
        }
    }
    Verdict::MonotoneNonincreasing
}

pub(crate) fn validate_times(times: &[f64]) -> Result<()> {
    if times.len() < 2 {
        return Err(Error::InvalidArgument("at least two sample times are required".into()));
    }
    if !(times[0] >= 0.0) || times.iter().any(|t| !t.is_finite()) {
        return Err(Error::InvalidArgument("sample times must be finite and start at t >= 0".into()));
    }
    if times.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidArgument("sample times must be strictly ascending".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operator::c;
    use crate::random::{random_density_matrix, GaussianSource};

    fn amplitude_damping() -> LindbladModel {
        LindbladModel::dissipative(2, vec![Operator::basis(2, 0, 1)]).unwrap()
    }

    fn dephasing() -> LindbladModel {
        LindbladModel::dissipative(2, vec![Operator::diag(&[1.0, -1.0])]).unwrap()
    }

    fn plus_state() -> DensityMatrix {
        DensityMatrix::new(Operator::from_fn(2, |_, _| c(0.5, 0.0)).unwrap()).unwrap()
    }

    fn raising(cutoff: usize) -> Operator {
        Operator::from_fn(cutoff + 1, |i, j| {
            if i == j + 1 {
                c((i as f64).sqrt(), 0.0)
            } else {
                c(0.0, 0.0)
            }
        })
        .unwrap()
    }

    #[test]
    fn unitary_evolution_keeps_purity() {
        let m = LindbladModel::new(Operator::diag(&[1.0, -1.0]), vec![]).unwrap();
        let traj = evolve_expm(&m, &plus_state(), &uniform_grid(10.0, 200)).unwrap();
        assert!(traj.purities.iter().all(|p| (p - 1.0).abs() < 1e-10));
        assert!(check_monotonicity(&traj, 1e-10).is_monotone());
    }

    #[test]
    fn amplitude_damping_purifies() {
        let traj = evolve_expm(&amplitude_damping(), &DensityMatrix::maximally_mixed(2), &uniform_grid(20.0, 200)).unwrap();
        assert!(*traj.purities.last().unwrap() >= 1.0 - 1e-6);
        match check_monotonicity(&traj, 1e-10) {
            Verdict::Violation { index, jump, .. } => {
                assert_eq!(index, 0);
                assert!(jump > 0.0);
            }
            v => panic!("expected violation, got {v:?}"),
        }
    }

    #[test]
    fn dephasing_closed_form() {
        let grid = uniform_grid(2.0, 200);
        let traj = evolve_expm(&dephasing(), &plus_state(), &grid).unwrap();
        for (t, p) in grid.iter().zip(&traj.purities) {
            assert!((p - 0.5 * (1.0 + (-4.0 * t).exp())).abs() < 1e-8);
        }
        assert!(check_monotonicity(&traj, 1e-10).is_monotone());
    }

    #[test]
    fn rk_matches_expm_on_amplitude_damping() {
        let rho0 = random_density_matrix(2, 3).unwrap();
        let a = evolve_expm(&amplitude_damping(), &rho0, &uniform_grid(5.0, 200)).unwrap();
        let b = evolve_rk(&amplitude_damping(), &rho0, 5.0, 1e-8, 1e-10).unwrap();
        assert_eq!(a.times, b.times);
        let dev = a.purities.iter().zip(&b.purities).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
        assert!(dev <= 1e-7, "{dev}");
    }

    #[test]
    fn zero_generator_is_constant() {
        let m = LindbladModel::dissipative(3, vec![]).unwrap();
        let rho0 = random_density_matrix(3, 1).unwrap();
        let traj = evolve_rk(&m, &rho0, 3.0, 1e-8, 1e-10).unwrap();
        assert!(traj.states.iter().all(|s| s == &rho0));
        let traj = evolve_expm(&m, &rho0, &uniform_grid(3.0, 50)).unwrap();
        assert!(traj.purities.windows(2).all(|w| w[1] == w[0]));
        assert_eq!(check_monotonicity(&traj, 1e-10), Verdict::MonotoneNonincreasing);
    }

    #[test]
    fn truncated_raising_stays_a_state() {
        let n = 16;
        let m = LindbladModel::dissipative(n + 1, vec![raising(n)]).unwrap();
        let rho0 = random_density_matrix(n + 1, 5).unwrap();
        let traj = evolve_rk(&m, &rho0, 2.0, 1e-8, 1e-10).unwrap().with_top_level_population();
        assert!(*traj.min_eig_drift.last().unwrap() >= -1e-8);
        assert!(traj.trace_drift.iter().all(|d| d.abs() <= 1e-9));
        assert_eq!(traj.top_level_pop.as_ref().unwrap().len(), traj.len());
    }

    #[test]
    fn finite_differences_track_rates() {
        let mut src = GaussianSource::new(99);
        let ops = (0..2).map(|_| src.operator(3).scale_real(0.5)).collect();
        let m = LindbladModel::new(src.hermitian(3), ops).unwrap();
        let rho0 = random_density_matrix(3, 2).unwrap();
        let traj = evolve_expm(&m, &rho0, &uniform_grid(0.02, 201)).unwrap();
        for (k, fd) in traj.centered_differences() {
            assert!((fd - traj.rates[k]).abs() <= 1e-6 * traj.rates[k].abs());
        }
    }

    #[test]
    fn times_validated() {
        let rho0 = DensityMatrix::maximally_mixed(2);
        assert!(evolve_expm(&dephasing(), &rho0, &[0.0]).is_err());
        assert!(evolve_expm(&dephasing(), &rho0, &[0.0, 1.0, 0.5]).is_err());
        assert!(evolve_expm(&dephasing(), &rho0, &[-1.0, 1.0]).is_err());
        assert!(evolve_rk(&dephasing(), &rho0, 0.0, 1e-8, 1e-10).is_err());
        assert!(evolve_rk(&dephasing(), &rho0, 1.0, 0.0, 1e-10).is_err());
        assert!(evolve_expm(&dephasing(), &DensityMatrix::maximally_mixed(3), &[0.0, 1.0]).is_err());
    }

    #[test]
    fn csv_layout() {
        let traj = evolve_expm(&dephasing(), &plus_state(), &uniform_grid(1.0, 5)).unwrap();
        let mut buf = Vec::new();
        traj.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "t,purity,rate,trace_re,min_eig,herm_defect,top_level_pop");
        assert_eq!(lines.len(), 6);
        assert!(lines[1].starts_with("0,1,-2,"));
        assert!(lines[1].ends_with(','));
    }

    #[test]
    fn leakage_prefix() {
        let n = 6;
        let m = LindbladModel::dissipative(n + 1, vec![raising(n)]).unwrap();
        let rho0 = DensityMatrix::diagonal(&[1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]).unwrap();
        let traj = evolve_expm(&m, &rho0, &uniform_grid(3.0, 100)).unwrap().with_top_level_population();
        let safe = traj.below_leakage(LEAKAGE_THRESHOLD);
        assert!(safe.len() > 1 && safe.len() < traj.len());
        assert!(safe.top_level_pop.unwrap().iter().all(|&p| p < LEAKAGE_THRESHOLD));
    }
}
