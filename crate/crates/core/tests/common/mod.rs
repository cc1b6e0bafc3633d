// Copyright 2026 The purity-semigroup Authors
// SPDX-License-Identifier: Apache-2.0

//! Fixtures and independent oracles shared by the integration tests.

#![allow(dead_code)]

use purity_semigroup::random::GaussianSource;
use purity_semigroup::zoo::{build_model, Family, ZooSpec};
use purity_semigroup::{LindbladModel, Operator, C64};

/// Unital model from one of three constructions: Hermitian `F`s, normal
/// `F = U diag(z) U†`, or adjoint pairs `{F, F†}`.
pub fn random_unital(src: &mut GaussianSource, dim: usize, family: usize) -> LindbladModel {
    let norm = 1.0 / (dim as f64).sqrt();
    let n = src.index_in(1, 3);
    let h = src.hermitian(dim).scale_real(norm);
    let ops: Vec<Operator> = match family % 3 {
        0 => (0..n).map(|_| src.hermitian(dim).scale_real(norm)).collect(),
        1 => (0..n)
            .map(|_| {
                let u = src.unitary(dim);
                let z: Vec<C64> = (0..dim).map(|_| src.complex_normal()).collect();
                let diag = Operator::from_fn(dim, |i, j| if i == j { z[i] } else { C64::new(0.0, 0.0) }).unwrap();
                (&(&u * &diag) * &u.adjoint()).scale_real(norm)
            })
            .collect(),
        _ => (0..n)
            .flat_map(|_| {
                let f = src.operator(dim).scale_real(norm);
                let fd = f.adjoint();
                [f, fd]
            })
            .collect(),
    };
    LindbladModel::new(h, ops).unwrap()
}

/// Generic model with random Hamiltonian and operators of unit-order norm.
pub fn random_model(src: &mut GaussianSource, dim: usize) -> LindbladModel {
    let norm = 1.0 / (dim as f64).sqrt();
    let n = src.index_in(1, 3);
    let ops = (0..n).map(|_| src.operator(dim).scale_real(norm)).collect();
    LindbladModel::new(src.hermitian(dim).scale_real(norm), ops).unwrap()
}

/// Non-unital GKS-derived model from the zoo.
pub fn random_gks(seed: u64, dim: usize) -> LindbladModel {
    build_model(&ZooSpec::new(Family::RandomGks).with_seed(seed).with_dim(dim).with_ops(3))
        .unwrap()
        .model
}

/// Characteristic polynomial `det(λI − X)` coefficients (ascending powers)
/// by the Faddeev–LeVerrier recursion.
pub fn characteristic_polynomial(x: &Operator) -> Vec<C64> {
    let n = x.dim();
    let a = x.matrix();
    let id = nalgebra::DMatrix::<C64>::identity(n, n);
    let mut coeffs = vec![C64::new(0.0, 0.0); n + 1];
    coeffs[n] = C64::new(1.0, 0.0);
    let mut m = nalgebra::DMatrix::<C64>::zeros(n, n);
    for k in 1..=n {
        m = a * &m + &id * coeffs[n - k + 1];
        let am = a * &m;
        coeffs[n - k] = -am.trace() / C64::new(k as f64, 0.0);
    }
    coeffs
}

/// Smallest eigenvalue of a Hermitian matrix as the smallest root of its
/// characteristic polynomial, found by Newton's method from the left of a
/// Gershgorin bound (monotone for real-rooted polynomials).
pub fn smallest_root_oracle(x: &Operator) -> f64 {
    let p: Vec<f64> = characteristic_polynomial(x).iter().map(|z| z.re).collect();
    let n = x.dim();
    let bound = (0..n)
        .map(|i| (0..n).map(|j| x.get(i, j).norm()).sum::<f64>())
        .fold(0.0, f64::max);
    let eval = |l: f64| {
        let (mut v, mut dv) = (0.0, 0.0);
        for &c in p.iter().rev() {
            dv = dv * l + v;
            v = v * l + c;
        }
        (v, dv)
    };
    let mut l = -bound - 1.0;
    for _ in 0..500 {
        let (v, dv) = eval(l);
        if dv == 0.0 {
            break;
        }
        let next = l - v / dv;
        if (next - l).abs() <= 1e-15 * (1.0 + l.abs()) {
            l = next;
            break;
        }
        l = next;
    }
    l
}
