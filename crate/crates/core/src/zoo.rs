// Copyright 2026 The purity-semigroup Authors
// SPDX-License-Identifier: Apache-2.0

//! Canonical channels: qubit noise models, truncated bosonic ladders and
//! seeded random generators.
//!
//! Fock levels are ordered `|0⟩ … |N⟩` with the ground state first, so
//! `σ₋ = |0⟩⟨1|` and amplitude damping relaxes towards index 0.

use std::fmt;

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::gks::{diagonalize_gks, GksModel, LindbladModel};
use crate::operator::{c, Operator, C64};
use crate::random::GaussianSource;

pub const DEFAULT_CUTOFF: usize = 16;

pub fn sigma_x() -> Operator {
    let (z, one) = (c(0.0, 0.0), c(1.0, 0.0));
    Operator::from_rows(&[vec![z, one], vec![one, z]]).expect("2x2")
}

pub fn sigma_y() -> Operator {
    let (z, i) = (c(0.0, 0.0), c(0.0, 1.0));
    Operator::from_rows(&[vec![z, -i], vec![i, z]]).expect("2x2")
}

pub fn sigma_z() -> Operator {
    Operator::diag(&[1.0, -1.0])
}

/// `|0⟩⟨1|`.
pub fn sigma_minus() -> Operator {
    Operator::basis(2, 0, 1)
}

/// Truncated annihilation operator on levels `0..=cutoff`:
/// `a|n⟩ = √n |n−1⟩`.
pub fn lowering_operator(cutoff: usize) -> Operator {
    let d = cutoff + 1;
    let mut m = DMatrix::<C64>::zeros(d, d);
    for n in 1..d {
        m[(n - 1, n)] = c((n as f64).sqrt(), 0.0);
    }
    Operator::from_matrix(m).expect("finite")
}

/// Adjoint of [`lowering_operator`].
pub fn raising_operator(cutoff: usize) -> Operator {
    lowering_operator(cutoff).adjoint()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    DepolarizingQubit,
    DephasingQubit,
    AmplitudeDampingQubit,
    PauliChannel,
    BosonicLowering,
    BosonicRaising,
    CubicRaising,
    RandomUnital,
    RandomGks,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::DepolarizingQubit,
        Family::DephasingQubit,
        Family::AmplitudeDampingQubit,
        Family::PauliChannel,
        Family::BosonicLowering,
        Family::BosonicRaising,
        Family::CubicRaising,
        Family::RandomUnital,
        Family::RandomGks,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::DepolarizingQubit => "depolarizing_qubit",
            Family::DephasingQubit => "dephasing_qubit",
            Family::AmplitudeDampingQubit => "amplitude_damping_qubit",
            Family::PauliChannel => "pauli_channel",
            Family::BosonicLowering => "bosonic_lowering",
            Family::BosonicRaising => "bosonic_raising",
            Family::CubicRaising => "cubic_raising",
            Family::RandomUnital => "random_unital",
            Family::RandomGks => "random_gks",
        }
    }

    pub fn from_name(name: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == name)
    }

    /// Identifiers in lexicographic order.
    pub fn sorted_names() -> Vec<&'static str> {
        let mut names: Vec<_> = Family::ALL.iter().map(|f| f.name()).collect();
        names.sort_unstable();
        names
    }

    pub fn is_bosonic(self) -> bool {
        matches!(self, Family::BosonicLowering | Family::BosonicRaising | Family::CubicRaising)
    }

    pub fn is_random(self) -> bool {
        matches!(self, Family::RandomUnital | Family::RandomGks)
    }

    fn rate_count(self) -> usize {
        if self == Family::PauliChannel {
            3
        } else {
            1
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parameters for [`build_model`]. Fields irrelevant to the family are ignored.
#[derive(Clone, Debug, PartialEq)]
pub struct ZooSpec {
    pub family: Family,
    /// One rate, or `(γx, γy, γz)` for the Pauli channel.
    pub rates: Vec<f64>,
    /// Highest Fock level (bosonic families).
    pub cutoff: usize,
    /// Hilbert-space dimension (random families).
    pub dim: usize,
    /// Number of Lindblad or coupling operators (random families).
    pub n_ops: usize,
    pub seed: u64,
}

impl ZooSpec {
    pub fn new(family: Family) -> Self {
        let rates = if family == Family::PauliChannel { vec![1.0, 0.5, 0.25] } else { vec![1.0] };
        ZooSpec { family, rates, cutoff: DEFAULT_CUTOFF, dim: 3, n_ops: 2, seed: 0 }
    }

    pub fn with_rate(mut self, gamma: f64) -> Self {
        self.rates = vec![gamma];
        self
    }

    pub fn with_rates(mut self, rates: Vec<f64>) -> Self {
        self.rates = rates;
        self
    }

    pub fn with_cutoff(mut self, cutoff: usize) -> Self {
        self.cutoff = cutoff;
        self
    }

    pub fn with_dim(mut self, dim: usize) -> Self {
        self.dim = dim;
        self
    }

    pub fn with_ops(mut self, n_ops: usize) -> Self {
        self.n_ops = n_ops;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidArgument(msg));
        let want = self.family.rate_count();
        if self.rates.len() != want {
            return bad(format!("rates: {} expects {want} value(s), got {}", self.family, self.rates.len()));
        }
        if let Some(r) = self.rates.iter().find(|r| !(r.is_finite() && **r > 0.0)) {
            return bad(format!("rates: every rate must be positive, got {r}"));
        }
        if self.family.is_bosonic() && self.cutoff < 2 {
            return bad(format!("cutoff: must be at least 2, got {}", self.cutoff));
        }
        if self.family.is_bosonic() && self.cutoff + 1 > crate::generator::MAX_LIOUVILLIAN_DIM {
            return bad(format!("cutoff: at most {}, got {}", crate::generator::MAX_LIOUVILLIAN_DIM - 1, self.cutoff));
        }
        if self.family.is_random() {
            if !(2..=crate::generator::MAX_LIOUVILLIAN_DIM).contains(&self.dim) {
                return bad(format!("dim: must lie in 2..=64, got {}", self.dim));
            }
            if self.n_ops == 0 {
                return bad("ops: at least one operator is required".into());
            }
        }
        Ok(())
    }
}

/// Descriptive data that travels with a model.
#[derive(Clone, Debug, PartialEq)]
pub struct ModelMeta {
    pub name: String,
    pub trace_preserving: bool,
    /// First truncation-affected level: claims are restricted to
    /// `0..guard_level`.
    pub guard_level: Option<usize>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ZooModel {
    pub model: LindbladModel,
    pub meta: ModelMeta,
}

pub fn build_model(spec: &ZooSpec) -> Result<ZooModel> {
    spec.validate()?;
    let root = |g: f64| g.sqrt();
    let g = spec.rates[0];
    let qubit = |ops: Vec<Operator>| LindbladModel::dissipative(2, ops);
    let model = match spec.family {
        Family::DepolarizingQubit => {
            let s = root(g / 4.0);
            qubit(vec![sigma_x().scale_real(s), sigma_y().scale_real(s), sigma_z().scale_real(s)])?
        }
        Family::DephasingQubit => qubit(vec![sigma_z().scale_real(root(g))])?,
        Family::AmplitudeDampingQubit => qubit(vec![sigma_minus().scale_real(root(g))])?,
        Family::PauliChannel => qubit(vec![
            sigma_x().scale_real(root(spec.rates[0])),
            sigma_y().scale_real(root(spec.rates[1])),
            sigma_z().scale_real(root(spec.rates[2])),
        ])?,
        Family::BosonicLowering => LindbladModel::dissipative(
            spec.cutoff + 1,
            vec![lowering_operator(spec.cutoff).scale_real(root(g))],
        )?,
        Family::BosonicRaising => LindbladModel::dissipative(
            spec.cutoff + 1,
            vec![raising_operator(spec.cutoff).scale_real(root(g))],
        )?,
        Family::CubicRaising => {
            let a = lowering_operator(spec.cutoff);
            let ad = a.adjoint();
            let f = &(&ad * &a) * &ad;
            LindbladModel::dissipative(spec.cutoff + 1, vec![f.scale_real(root(g))])?
        }
        Family::RandomUnital => {
            let mut src = GaussianSource::new(spec.seed);
            let d = spec.dim;
            let norm = 1.0 / (d as f64).sqrt();
            let h = src.hermitian(d).scale_real(norm);
            let ops = (0..spec.n_ops)
                .map(|_| src.hermitian(d).scale_real(norm * root(g)))
                .collect();
            LindbladModel::new(h, ops)?
        }
        Family::RandomGks => {
            let mut src = GaussianSource::new(spec.seed);
            let (d, n) = (spec.dim, spec.n_ops);
            let norm = 1.0 / (d as f64).sqrt();
            let h = src.hermitian(d).scale_real(norm);
            let ops = (0..n).map(|_| src.operator(d).scale_real(norm)).collect();
            let b = src.ginibre(n, n);
            let coeff = (&b * b.adjoint()) * c(g / n as f64, 0.0);
            let coeff = (&coeff + coeff.adjoint()) * c(0.5, 0.0);
            diagonalize_gks(&GksModel::new(h, ops, coeff)?)?
        }
    };
    let guard_level = match spec.family {
        Family::BosonicLowering | Family::BosonicRaising => Some(spec.cutoff),
        Family::CubicRaising => Some(spec.cutoff - 1),
        _ => None,
    };
    Ok(ZooModel {
        model,
        meta: ModelMeta {
            name: spec.family.name().to_string(),
            trace_preserving: spec.family != Family::CubicRaising,
            guard_level,
        },
    })
}
