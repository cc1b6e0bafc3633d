// Copyright 2026 The purity-semigroup Authors
// SPDX-License-Identifier: Apache-2.0

//! Lindblad models in diagonal form and in GKS coefficient-matrix form.

use log::warn;
use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::{Error, Result};
use crate::operator::{c, commutator, Operator, C64, ALGEBRAIC_TOL, SPECTRAL_TOL};

fn check_hamiltonian(h: &Operator) -> Result<()> {
    let defect = h.hermitian_defect();
    if defect > ALGEBRAIC_TOL * (1.0 + h.max_abs()) {
        return Err(Error::NotHermitian { what: "hamiltonian", defect });
    }
    Ok(())
}

fn check_dims(h: &Operator, ops: &[Operator]) -> Result<()> {
    for op in ops {
        h.check_same_dim(op)?;
    }
    Ok(())
}

/// Hamiltonian plus Lindblad operators `F_α` with their rates absorbed.
#[derive(Clone, Debug, PartialEq)]
pub struct LindbladModel {
    hamiltonian: Operator,
    lindblad_ops: Vec<Operator>,
}

impl LindbladModel {
    pub fn new(hamiltonian: Operator, lindblad_ops: Vec<Operator>) -> Result<Self> {
        check_hamiltonian(&hamiltonian)?;
        check_dims(&hamiltonian, &lindblad_ops)?;
        Ok(LindbladModel { hamiltonian, lindblad_ops })
    }

    /// Model with `H = 0`.
    pub fn dissipative(dim: usize, lindblad_ops: Vec<Operator>) -> Result<Self> {
        Self::new(Operator::zeros(dim), lindblad_ops)
    }

    pub fn dim(&self) -> usize {
        self.hamiltonian.dim()
    }

    pub fn hamiltonian(&self) -> &Operator {
        &self.hamiltonian
    }

    pub fn lindblad_ops(&self) -> &[Operator] {
        &self.lindblad_ops
    }

    /// Same dissipator, different Hamiltonian.
    pub fn with_hamiltonian(&self, hamiltonian: Operator) -> Result<Self> {
        Self::new(hamiltonian, self.lindblad_ops.clone())
    }

    /// `1 + Σ_α ‖F_α‖_F²`, the natural scale of purity rates.
    pub fn rate_scale(&self) -> f64 {
        1.0 + self
            .lindblad_ops
            .iter()
            .map(|f| f.frobenius_norm().powi(2))
            .sum::<f64>()
    }
}

/// Pre-diagonal form: coupling operators `G_α` and a PSD coefficient
/// matrix `a_αβ`.
#[derive(Clone, Debug, PartialEq)]
pub struct GksModel {
    hamiltonian: Operator,
    coupling_ops: Vec<Operator>,
    coeff_matrix: DMatrix<C64>,
}

impl GksModel {
    pub fn new(
        hamiltonian: Operator,
        coupling_ops: Vec<Operator>,
        coeff_matrix: DMatrix<C64>,
    ) -> Result<Self> {
        check_hamiltonian(&hamiltonian)?;
        check_dims(&hamiltonian, &coupling_ops)?;
        let n = coupling_ops.len();
        if coeff_matrix.nrows() != n || coeff_matrix.ncols() != n {
            return Err(Error::Shape {
                expected: n,
                rows: coeff_matrix.nrows(),
                cols: coeff_matrix.ncols(),
            });
        }
        if coeff_matrix.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::InvalidArgument("coefficient matrix has non-finite entries".into()));
        }
        let model = GksModel { hamiltonian, coupling_ops, coeff_matrix };
        model.coefficient_spectrum()?;
        Ok(model)
    }

    pub fn dim(&self) -> usize {
        self.hamiltonian.dim()
    }

    pub fn hamiltonian(&self) -> &Operator {
        &self.hamiltonian
    }

    pub fn coupling_ops(&self) -> &[Operator] {
        &self.coupling_ops
    }

    pub fn coeff_matrix(&self) -> &DMatrix<C64> {
        &self.coeff_matrix
    }

    /// Eigen-decomposition of the coefficient matrix after checking it is
    /// Hermitian and positive semidefinite.
    fn coefficient_spectrum(&self) -> Result<SymmetricEigen<C64, nalgebra::Dyn>> {
        let a = &self.coeff_matrix;
        let scale = 1.0 + a.iter().map(|z| z.norm()).fold(0.0, f64::max);
        let defect = (a - a.adjoint()).iter().map(|z| z.norm()).fold(0.0, f64::max);
        if defect > ALGEBRAIC_TOL * scale {
            return Err(Error::NotHermitian { what: "coefficient matrix", defect });
        }
        let eig = SymmetricEigen::new((a + a.adjoint()) * c(0.5, 0.0));
        let min_eig = eig.eigenvalues.iter().copied().fold(f64::INFINITY, f64::min);
        if min_eig < -SPECTRAL_TOL {
            return Err(Error::NotCompletelyPositive { min_eig });
        }
        Ok(eig)
    }

    /// Dissipator in the double-sum form
    /// `½ Σ_αβ a_αβ ([G_α, x G_β†] + [G_α x, G_β†])`.
    pub fn apply_dissipator(&self, x: &Operator) -> Result<Operator> {
        self.hamiltonian.check_same_dim(x)?;
        let d = self.dim();
        let mut acc = Operator::zeros(d);
        for (alpha, g_a) in self.coupling_ops.iter().enumerate() {
            for (beta, g_b) in self.coupling_ops.iter().enumerate() {
                let a = self.coeff_matrix[(alpha, beta)];
                if a == C64::default() {
                    continue;
                }
                let g_b_dag = g_b.adjoint();
                let t1 = commutator(g_a, &(x * &g_b_dag))?;
                let t2 = commutator(&(g_a * x), &g_b_dag)?;
                acc = &acc + &(&t1 + &t2).scale(a * 0.5);
            }
        }
        Ok(acc)
    }

    /// `−i[H, x]` plus the double-sum dissipator.
    pub fn apply_generator(&self, x: &Operator) -> Result<Operator> {
        let ham = commutator(&self.hamiltonian, x)?.scale(c(0.0, -1.0));
        Ok(&ham + &self.apply_dissipator(x)?)
    }

    /// `Σ_αβ a_αβ [G_α, G_β†]`, the double-sum form evaluated at the identity.
    pub fn generator_on_identity(&self) -> Operator {
        let d = self.dim();
        let mut acc = Operator::zeros(d);
        for (alpha, g_a) in self.coupling_ops.iter().enumerate() {
            for (beta, g_b) in self.coupling_ops.iter().enumerate() {
                let a = self.coeff_matrix[(alpha, beta)];
                let comm = commutator(g_a, &g_b.adjoint()).expect("dims checked at construction");
                acc = &acc + &comm.scale(a);
            }
        }
        acc
    }
}

/// Rates below this fraction of the largest rate are treated as zero.
pub const NULL_RATE_FRACTION: f64 = 1e-12;

/// Diagonalizes `A = U diag(γ) U†` and emits `F_k = √γ_k Σ_β U_βk G_β`,
/// dropping null channels. Eigenvalues in `[−1e-10, 0)` are clamped to zero.
pub fn diagonalize_gks(model: &GksModel) -> Result<LindbladModel> {
    let eig = model.coefficient_spectrum()?;
    let gamma_max = eig.eigenvalues.iter().copied().fold(0.0, f64::max);
    let d = model.dim();
    let mut ops = Vec::new();
    for (k, &gamma) in eig.eigenvalues.iter().enumerate() {
        if gamma < 0.0 {
            warn!("clamping coefficient eigenvalue {gamma:.3e} to zero");
            continue;
        }
        if gamma_max == 0.0 || gamma < NULL_RATE_FRACTION * gamma_max {
            continue;
        }
        let mut f = Operator::zeros(d);
        for (beta, g) in model.coupling_ops.iter().enumerate() {
            let w = eig.eigenvectors[(beta, k)];
            if w != C64::default() {
                f = &f + &g.scale(w);
            }
        }
        ops.push(f.scale_real(gamma.sqrt()));
    }
    LindbladModel::new(model.hamiltonian.clone(), ops)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::{apply_dissipator, apply_generator, generator_on_identity};
    use crate::random::GaussianSource;

    fn paulis() -> [Operator; 3] {
        let z = C64::default();
        let one = c(1.0, 0.0);
        let i = c(0.0, 1.0);
        [
            Operator::from_rows(&[vec![z, one], vec![one, z]]).unwrap(),
            Operator::from_rows(&[vec![z, -i], vec![i, z]]).unwrap(),
            Operator::diag(&[1.0, -1.0]),
        ]
    }

    fn basis_matrices(d: usize) -> Vec<Operator> {
        (0..d).flat_map(|i| (0..d).map(move |j| Operator::basis(d, i, j))).collect()
    }

    fn assert_same_action(gks: &GksModel, lind: &LindbladModel, tol: f64) {
        for x in basis_matrices(gks.dim()) {
            let a = gks.apply_generator(&x).unwrap();
            let b = apply_generator(lind, &x).unwrap();
            assert!((&a - &b).max_abs() < tol, "generator actions differ by {}", (&a - &b).max_abs());
        }
    }

    #[test]
    fn diagonal_coefficients_scale_operators() {
        let [sx, _, sz] = paulis();
        let a = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![c(0.3, 0.0), c(1.7, 0.0)]));
        let gks = GksModel::new(Operator::zeros(2), vec![sx, sz], a).unwrap();
        let lind = diagonalize_gks(&gks).unwrap();
        assert_eq!(lind.lindblad_ops().len(), 2);
        assert_same_action(&gks, &lind, 1e-12);
    }

    #[test]
    fn circular_combination_survives_alone() {
        let [sx, sy, _] = paulis();
        let a = DMatrix::from_row_slice(2, 2, &[c(1.0, 0.0), c(0.0, -1.0), c(0.0, 1.0), c(1.0, 0.0)]);
        let gks = GksModel::new(Operator::zeros(2), vec![sx, sy], a).unwrap();
        let lind = diagonalize_gks(&gks).unwrap();
        assert_eq!(lind.lindblad_ops().len(), 1);
        // √2 · (σx + iσy)/√2 = 2|0⟩⟨1| up to a phase.
        let f = &lind.lindblad_ops()[0];
        assert!((f.frobenius_norm().powi(2) - 4.0).abs() < 1e-12);
        assert!(f.get(0, 1).norm() > 1.99 && f.get(1, 0).norm() < 1e-12);
        assert_same_action(&gks, &lind, 1e-12);
    }

    #[test]
    fn zero_coefficients_give_hamiltonian_model() {
        let [sx, sy, sz] = paulis();
        let gks = GksModel::new(sz.clone(), vec![sx, sy], DMatrix::zeros(2, 2)).unwrap();
        let lind = diagonalize_gks(&gks).unwrap();
        assert!(lind.lindblad_ops().is_empty());
        assert_eq!(lind.hamiltonian(), &sz);
    }

    #[test]
    fn rejects_non_cp_and_non_hermitian() {
        let [sx, sy, _] = paulis();
        let neg = DMatrix::from_row_slice(2, 2, &[c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-0.5, 0.0)]);
        let err = GksModel::new(Operator::zeros(2), vec![sx.clone(), sy.clone()], neg).unwrap_err();
        assert!(matches!(err, Error::NotCompletelyPositive { .. }));
        let skew = DMatrix::from_row_slice(2, 2, &[c(1.0, 0.0), c(0.5, 0.0), c(0.0, 0.0), c(1.0, 0.0)]);
        let err = GksModel::new(Operator::zeros(2), vec![sx, sy], skew).unwrap_err();
        assert!(matches!(err, Error::NotHermitian { .. }));
    }

    #[test]
    fn tiny_negative_eigenvalues_are_clamped() {
        let [sx, sy, _] = paulis();
        let a = DMatrix::from_row_slice(2, 2, &[c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-1e-11, 0.0)]);
        let gks = GksModel::new(Operator::zeros(2), vec![sx, sy], a).unwrap();
        assert_eq!(diagonalize_gks(&gks).unwrap().lindblad_ops().len(), 1);
    }

    fn random_gks(src: &mut GaussianSource) -> GksModel {
        let d = src.index_in(2, 6);
        let n = src.index_in(1, 4);
        let ops: Vec<Operator> = (0..n).map(|_| src.operator(d)).collect();
        let rank = src.index_in(1, n);
        let b = src.ginibre(n, rank);
        let a = &b * b.adjoint();
        GksModel::new(src.hermitian(d), ops, a).unwrap()
    }

    #[test]
    fn random_gks_generator_equivalence() {
        let mut src = GaussianSource::new(2024);
        for _ in 0..100 {
            let gks = random_gks(&mut src);
            let lind = diagonalize_gks(&gks).unwrap();
            for _ in 0..3 {
                let x = src.hermitian(gks.dim());
                let a = gks.apply_generator(&x).unwrap();
                let b = apply_generator(&lind, &x).unwrap();
                assert!((&a - &b).max_abs() < 1e-11);
                let da = gks.apply_dissipator(&x).unwrap();
                let db = apply_dissipator(&lind, &x).unwrap();
                assert!((&da - &db).max_abs() < 1e-11);
            }
            let li_gks = gks.generator_on_identity();
            let li = generator_on_identity(&lind).defect;
            let scale = 1.0 + li_gks.max_abs();
            assert!((&li_gks - &li).max_abs() < 1e-11 * scale);
        }
    }

    #[test]
    fn rejects_mismatched_hamiltonian() {
        let err = LindbladModel::new(Operator::identity(2), vec![Operator::identity(3)]).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { left: 2, right: 3 });
        let [sx, ..] = paulis();
        let err = LindbladModel::new(Operator::basis(2, 0, 1), vec![sx]).unwrap_err();
        assert!(matches!(err, Error::NotHermitian { what: "hamiltonian", .. }));
    }
}
