// Copyright 2026 The purity-semigroup Authors
// SPDX-License-Identifier: Apache-2.0

//! Dormand–Prince 5(4) with Hairer's continuous extension.

use nalgebra::DMatrix;

use super::{uniform_grid, validate_times, Trajectory, DEFAULT_SAMPLES};
use crate::error::{Error, Result};
use crate::generator::apply_generator;
use crate::gks::LindbladModel;
use crate::operator::{DensityMatrix, Operator, C64};

const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const A71: f64 = 35.0 / 384.0;
const A73: f64 = 500.0 / 1113.0;
const A74: f64 = 125.0 / 192.0;
const A75: f64 = -2187.0 / 6784.0;
const A76: f64 = 11.0 / 84.0;

const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;

const D1: f64 = -12715105075.0 / 11282082432.0;
const D3: f64 = 87487479700.0 / 32700410799.0;
const D4: f64 = -10690763975.0 / 1880347072.0;
const D5: f64 = 701980252875.0 / 199316789632.0;
const D6: f64 = -1453857185.0 / 822651844.0;
const D7: f64 = 69997945.0 / 29380423.0;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RkOptions {
    pub rtol: f64,
    pub atol: f64,
    pub max_steps: usize,
}

impl RkOptions {
    pub fn new(rtol: f64, atol: f64) -> Self {
        RkOptions { rtol, atol, max_steps: 5_000_000 }
    }
}

type Mat = DMatrix<C64>;

fn lin(y: &Mat, terms: &[(f64, &Mat)]) -> Mat {
    let mut out = y.clone();
    for &(w, k) in terms {
        if w != 0.0 {
            out.zip_apply(k, |o, x| *o += x * w);
        }
    }
    out
}

fn combo(terms: &[(f64, &Mat)]) -> Mat {
    let mut out = Mat::zeros(terms[0].1.nrows(), terms[0].1.ncols());
    for &(w, k) in terms {
        out.zip_apply(k, |o, x| *o += x * w);
    }
    out
}

/// Weighted RMS norm with per-entry scale `atol + rtol·max(|a|, |b|)`.
fn error_norm(err: &Mat, a: &Mat, b: &Mat, opts: &RkOptions) -> f64 {
    let n = err.len() as f64;
    let sum: f64 = err
        .iter()
        .zip(a.iter().zip(b.iter()))
        .map(|(e, (x, y))| {
            let sc = opts.atol + opts.rtol * x.norm().max(y.norm());
            (e.norm() / sc).powi(2)
        })
        .sum();
    (sum / n).sqrt()
}

/// Adaptive integration to `t_max`, sampled on the default 200-point grid.
pub fn evolve_rk(m: &LindbladModel, rho0: &DensityMatrix, t_max: f64, rtol: f64, atol: f64) -> Result<Trajectory> {
    if !(t_max > 0.0) || !t_max.is_finite() {
        return Err(Error::InvalidArgument(format!("t_max must be positive, got {t_max}")));
    }
    evolve_rk_on(m, rho0, &uniform_grid(t_max, DEFAULT_SAMPLES), &RkOptions::new(rtol, atol))
}

/// Adaptive integration sampled at `times` through dense output.
pub fn evolve_rk_on(m: &LindbladModel, rho0: &DensityMatrix, times: &[f64], opts: &RkOptions) -> Result<Trajectory> {
    m.hamiltonian().check_same_dim(rho0.as_operator())?;
    validate_times(times)?;
    if !(opts.rtol > 0.0 && opts.atol > 0.0) {
        return Err(Error::InvalidArgument("rtol and atol must be positive".into()));
    }
    let f = |y: &Mat| -> Mat {
        apply_generator(m, &Operator::wrap(y.clone()))
            .expect("dimension checked")
            .into_matrix()
    };
    let t_end = *times.last().unwrap();
    let mut samples: Vec<Mat> = Vec::with_capacity(times.len());
    let mut next = 0;
    let mut t = 0.0;
    let mut y: Mat = rho0.as_operator().matrix().clone();
    while next < times.len() && times[next] <= t {
        samples.push(y.clone());
        next += 1;
    }
    let mut k1 = f(&y);

    let d0 = error_norm(&y, &y, &y, opts);
    let d1 = error_norm(&k1, &y, &y, opts);
    let mut h = if d0 < 1e-5 || d1 < 1e-5 { 1e-6 } else { 0.01 * d0 / d1 };
    h = h.min(t_end - t).max(1e-12);

    let mut steps = 0;
    let mut rejected_last = false;
    while next < times.len() {
        steps += 1;
        if steps > opts.max_steps {
            return Err(Error::StepUnderflow { t });
        }
        if h < 1e-14 * t.abs().max(1.0) {
            return Err(Error::StepUnderflow { t });
        }
        if t + h > t_end {
            h = t_end - t;
        }
        let k2 = f(&lin(&y, &[(h * A21, &k1)]));
        let k3 = f(&lin(&y, &[(h * A31, &k1), (h * A32, &k2)]));
        let k4 = f(&lin(&y, &[(h * A41, &k1), (h * A42, &k2), (h * A43, &k3)]));
        let k5 = f(&lin(&y, &[(h * A51, &k1), (h * A52, &k2), (h * A53, &k3), (h * A54, &k4)]));
        let k6 = f(&lin(
            &y,
            &[(h * A61, &k1), (h * A62, &k2), (h * A63, &k3), (h * A64, &k4), (h * A65, &k5)],
        ));
        let y1 = lin(
            &y,
            &[(h * A71, &k1), (h * A73, &k3), (h * A74, &k4), (h * A75, &k5), (h * A76, &k6)],
        );
        let k7 = f(&y1);
        let err = combo(&[
            (h * E1, &k1),
            (h * E3, &k3),
            (h * E4, &k4),
            (h * E5, &k5),
            (h * E6, &k6),
            (h * E7, &k7),
        ]);
        let en = error_norm(&err, &y, &y1, opts);
        if !en.is_finite() {
            return Err(Error::NonFiniteResult { t: t + h });
        }
        if en <= 1.0 {
            let t1 = t + h;
            if next < times.len() && times[next] <= t1 {
                let r2 = &y1 - &y;
                let r3 = &k1 * C64::new(h, 0.0) - &r2;
                let r4 = &r2 - &k7 * C64::new(h, 0.0) - &r3;
                let r5 = combo(&[
                    (h * D1, &k1),
                    (h * D3, &k3),
                    (h * D4, &k4),
                    (h * D5, &k5),
                    (h * D6, &k6),
                    (h * D7, &k7),
                ]);
                while next < times.len() && times[next] <= t1 {
                    let s = if times[next] == t1 { 1.0 } else { (times[next] - t) / h };
                    let s1 = 1.0 - s;
                    let inner = lin(&r4, &[(s1, &r5)]);
                    let inner = lin(&r3, &[(s, &inner)]);
                    let inner = lin(&r2, &[(s1, &inner)]);
                    samples.push(lin(&y, &[(s, &inner)]));
                    next += 1;
                }
            }
            t = t1;
            y = y1;
            k1 = k7;
            let mut factor = if en == 0.0 { 5.0 } else { (0.9 * en.powf(-0.2)).clamp(0.2, 5.0) };
            if rejected_last {
                factor = factor.min(1.0);
            }
            rejected_last = false;
            h *= factor;
        } else {
            rejected_last = true;
            h *= (0.9 * en.powf(-0.2)).clamp(0.2, 1.0);
        }
    }
    let raw = samples
        .into_iter()
        .zip(times)
        .map(|(s, &t)| Operator::from_matrix(s).map_err(|_| Error::NonFiniteResult { t }))
        .collect::<Result<Vec<_>>>()?;
    debug_assert_eq!(raw.len(), times.len());
    Trajectory::assemble(m, times.to_vec(), raw)
}
