//! Norms, decompositions, and residuals on [`ComplexMatrix`].
//!
//! The SVD here follows the convention `T = U * diag(s) * V` with the right
//! factor *not* adjointed. Code adapting a standard `T = W * S * X^H` routine
//! therefore takes `V = X^H`, which is exactly what the backing nalgebra
//! decomposition stores.

use nalgebra::{DMatrix, SymmetricEigen, SVD};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;

/// Relative tolerances used by decomposition-backed validation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Accepted relative residual of a decomposition (SVD, polar).
    pub decomposition_tol: f64,
    /// Accepted relative reconstruction residual (e.g. sqrt(P)^2 = P).
    pub residual_tol: f64,
    /// Accepted scaled commutation / hermiticity residual.
    pub commutation_tol: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            decomposition_tol: 1e-10,
            residual_tol: 1e-10,
            commutation_tol: 1e-10,
        }
    }
}

impl Tolerances {
    pub fn new(decomposition_tol: f64, residual_tol: f64, commutation_tol: f64) -> Result<Self> {
        for (name, value) in [
            ("decomposition_tol", decomposition_tol),
            ("residual_tol", residual_tol),
            ("commutation_tol", commutation_tol),
        ] {
            if !(value > 0.0) || !value.is_finite() {
                return Err(Error::InvalidInput(format!(
                    "{name} must be strictly positive, got {value}"
                )));
            }
        }
        Ok(Self {
            decomposition_tol,
            residual_tol,
            commutation_tol,
        })
    }

    /// Uniform tolerance across all three fields.
    pub fn uniform(tol: f64) -> Result<Self> {
        Self::new(tol, tol, tol)
    }
}

/// Singular value decomposition `T = left * diag(singulars) * right`.
///
/// Both factors are unitary and `singulars` is sorted non-increasing.
#[derive(Debug, Clone)]
pub struct SvdFactors {
    pub left: ComplexMatrix,
    pub singulars: Vec<f64>,
    pub right: ComplexMatrix,
}

impl SvdFactors {
    /// Multiplies the factors back together.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let s = ComplexMatrix::diagonal_real(&self.singulars);
        &(&self.left * &s) * &self.right
    }
}

/// Polar decomposition `T = unitary_part * psd_part`.
#[derive(Debug, Clone)]
pub struct PolarFactors {
    pub unitary_part: ComplexMatrix,
    pub psd_part: ComplexMatrix,
}

impl PolarFactors {
    pub fn reconstruct(&self) -> ComplexMatrix {
        &self.unitary_part * &self.psd_part
    }
}

/// Hilbert-Schmidt (Frobenius) norm.
pub fn frobenius_norm(t: &ComplexMatrix) -> f64 {
    t.frobenius_norm()
}

/// Operator norm: the largest singular value.
pub fn operator_norm(t: &ComplexMatrix) -> f64 {
    singular_values(t).first().copied().unwrap_or(0.0)
}

/// Singular values sorted non-increasing; length is min(rows, cols).
pub fn singular_values(t: &ComplexMatrix) -> Vec<f64> {
    let svd = SVD::new(t.inner().clone(), false, false);
    svd.singular_values.iter().copied().collect()
}

/// Full SVD of a square matrix in the `T = U * diag(s) * V` convention.
pub fn svd(t: &ComplexMatrix) -> Result<SvdFactors> {
    if !t.is_square() {
        return Err(Error::ShapeMismatch {
            context: "svd needs a square matrix",
            rows: t.rows(),
            cols: t.cols(),
        });
    }
    let svd = SVD::try_new(t.inner().clone(), true, true, f64::EPSILON * 5.0, 100_000)
        .ok_or_else(|| Error::InvalidInput("svd did not converge".into()))?;
    let left = ComplexMatrix::from_inner(svd.u.expect("u requested"));
    let right = ComplexMatrix::from_inner(svd.v_t.expect("v_t requested"));
    let singulars = svd.singular_values.iter().copied().collect();
    Ok(SvdFactors {
        left,
        singulars,
        right,
    })
}

/// Polar decomposition `T = U * P` of a square matrix.
///
/// The unitary factor is gauge-fixed through the SVD: `U = left * right`,
/// `P = right^adj * diag(s) * right`. For invertible input this is the unique
/// polar decomposition; for singular input it picks one deterministically.
pub fn polar(t: &ComplexMatrix) -> Result<PolarFactors> {
    let f = svd(t)?;
    let unitary_part = &f.left * &f.right;
    let s = ComplexMatrix::diagonal_real(&f.singulars);
    let psd_part = &(&f.right.adjoint() * &s) * &f.right;
    Ok(PolarFactors {
        unitary_part,
        psd_part: hermitian_average(&psd_part),
    })
}

/// Hermitian PSD square root.
///
/// Eigenvalues in `[-tol_eff, 0)` are clamped to zero, where
/// `tol_eff = decomposition_tol * max(1, |lambda|_max)`; anything below
/// that is rejected as significantly indefinite.
pub fn psd_sqrt(p: &ComplexMatrix, tols: &Tolerances) -> Result<ComplexMatrix> {
    if !p.is_square() {
        return Err(Error::ShapeMismatch {
            context: "psd_sqrt needs a square matrix",
            rows: p.rows(),
            cols: p.cols(),
        });
    }
    let herm = p.hermitian_residual();
    if herm > tols.commutation_tol {
        return Err(Error::validation(
            "psd_sqrt input must be hermitian",
            herm,
            tols.commutation_tol,
        ));
    }
    let sym = hermitian_average(p);
    let eigen = SymmetricEigen::new(sym.inner().clone());
    let lambda_max = eigen
        .eigenvalues
        .iter()
        .fold(0.0_f64, |acc, &l| acc.max(l.abs()));
    let tol_eff = tols.decomposition_tol * 1.0_f64.max(lambda_max);
    let mut roots = Vec::with_capacity(eigen.eigenvalues.len());
    for &l in eigen.eigenvalues.iter() {
        if l < -tol_eff {
            return Err(Error::validation(
                "psd_sqrt input must be positive semidefinite",
                -l,
                tol_eff,
            ));
        }
        roots.push(l.max(0.0).sqrt());
    }
    let v = ComplexMatrix::from_inner(eigen.eigenvectors);
    let d = ComplexMatrix::diagonal_real(&roots);
    let root = &(&v * &d) * &v.adjoint();
    Ok(hermitian_average(&root))
}

/// Scaled self-commutator residual
/// `||T^adj T - T T^adj||_F / max(1, ||T||_F^2)`.
///
/// Zero exactly when `T` is normal. Panics if `t` is not square.
pub fn normality_residual(t: &ComplexMatrix) -> f64 {
    assert!(t.is_square(), "normality_residual needs a square matrix");
    let g = self_commutator(t);
    g.frobenius_norm() / 1.0_f64.max(t.frobenius_norm().powi(2))
}

/// `T^adj T - T T^adj`.
pub fn self_commutator(t: &ComplexMatrix) -> ComplexMatrix {
    let ta = t.adjoint();
    &(&ta * t) - &(t * &ta)
}

/// Scaled commutation residual `||XY - YX||_F / max(1, ||X||_F ||Y||_F)`.
pub fn commutation_residual(x: &ComplexMatrix, y: &ComplexMatrix) -> Result<f64> {
    if !x.is_square() || x.rows() != y.rows() || x.cols() != y.cols() {
        return Err(Error::ShapeMismatch {
            context: "commutation_residual needs equal square shapes",
            rows: y.rows(),
            cols: y.cols(),
        });
    }
    let comm = &(x * y) - &(y * x);
    Ok(comm.frobenius_norm() / 1.0_f64.max(x.frobenius_norm() * y.frobenius_norm()))
}

/// Unitarity deviation `||T^adj T - I||_F`. Panics if `t` is not square.
pub fn unitarity_residual(t: &ComplexMatrix) -> f64 {
    assert!(t.is_square(), "unitarity_residual needs a square matrix");
    let gram = &t.adjoint() * t;
    (&gram - &ComplexMatrix::identity(t.rows())).frobenius_norm()
}

/// Dimension of the intersection of the column spans of `bases`.
///
/// Each basis matrix must have the same number of rows n; columns may be
/// linearly dependent (ranks are computed internally). A vector lies in the
/// intersection exactly when it is annihilated by every subspace's
/// orthogonal complement, so the result is `n - rank` of the stacked
/// complement constraints. Satisfies `dim >= sum(dim V_j) - (k-1) n`.
pub fn subspace_intersection_dimension(bases: &[ComplexMatrix]) -> Result<usize> {
    let first = bases
        .first()
        .ok_or_else(|| Error::InvalidInput("subspace intersection of an empty list".into()))?;
    let n = first.rows();
    if n == 0 {
        return Err(Error::InvalidInput(
            "subspaces of a 0-dimensional space".into(),
        ));
    }
    for b in bases {
        if b.rows() != n {
            return Err(Error::ShapeMismatch {
                context: "subspace bases must share the ambient row count",
                rows: b.rows(),
                cols: b.cols(),
            });
        }
    }

    let mut constraint_rows: Vec<DMatrix<Complex64>> = Vec::new();
    let mut total_rows = 0;
    for basis in bases {
        let w = orthogonal_complement_basis(basis);
        if w.ncols() > 0 {
            total_rows += w.ncols();
            constraint_rows.push(w.adjoint());
        }
    }
    if total_rows == 0 {
        // every subspace is the whole space
        return Ok(n);
    }
    let mut stacked = DMatrix::<Complex64>::zeros(total_rows, n);
    let mut offset = 0;
    for rows in &constraint_rows {
        stacked
            .view_mut((offset, 0), (rows.nrows(), n))
            .copy_from(rows);
        offset += rows.nrows();
    }

    let rank = numerical_rank(&stacked);
    Ok(n - rank)
}

/// Orthonormal basis of the orthogonal complement of the column span.
///
/// Works on a square zero-padded copy so the left factor is a full n x n
/// unitary whose trailing columns span the complement.
fn orthogonal_complement_basis(m: &ComplexMatrix) -> DMatrix<Complex64> {
    let n = m.rows();
    let padded = if m.cols() >= n {
        m.inner().clone()
    } else {
        let mut p = DMatrix::<Complex64>::zeros(n, n);
        p.view_mut((0, 0), (n, m.cols())).copy_from(m.inner());
        p
    };
    let svd = SVD::new(padded, true, false);
    let u = svd.u.expect("u requested");
    let s1 = svd.singular_values.iter().copied().fold(0.0, f64::max);
    let cutoff = rank_cutoff(m.rows(), m.cols(), s1);
    let rank = svd.singular_values.iter().filter(|&&s| s > cutoff).count();
    u.columns(rank, n - rank).into_owned()
}

fn numerical_rank(m: &DMatrix<Complex64>) -> usize {
    let svd = SVD::new(m.clone(), false, false);
    let s1 = svd.singular_values.iter().copied().fold(0.0, f64::max);
    let cutoff = rank_cutoff(m.nrows(), m.ncols(), s1);
    svd.singular_values.iter().filter(|&&s| s > cutoff).count()
}

fn rank_cutoff(rows: usize, cols: usize, s1: f64) -> f64 {
    rows.max(cols) as f64 * f64::EPSILON * s1
}

fn hermitian_average(m: &ComplexMatrix) -> ComplexMatrix {
    (&(m + &m.adjoint())).scale(0.5)
}
