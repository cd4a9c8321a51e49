//! Constructive completions with prescribed off-diagonal corners.
//!
//! Four families are covered, each returning a [`CompletionResult`] whose
//! certificate records measured residuals instead of trusting the algebra:
//!
//! * `B = C`: the normal completion `[[B^adj, B], [B, B^adj]]`, the unitary
//!   dilation of a contraction via `A = U (i sqrt(I - S^2)) V`, and the
//!   least-operator-norm completion obtained by scaling that dilation;
//! * equal singular values: a completion that is a scalar multiple of a
//!   unitary matrix, built from shared singular values of B and C;
//! * `C = B^adj`: the normal recipe parameterized by hermitian (K0, K2,
//!   H1, H2) commuting with the polar factor of B, and the unitary recipe
//!   with the additional coupling constraints `(K0 - K2) P = 0` and
//!   `(H0 + H2) P = 0`.
//!
//! The published unitary recipe for the `C = B^adj` case omits those two
//! coupling constraints, and without them the off-diagonal block of
//! `N^adj N` need not vanish: with `P = (1/sqrt 2) I`, `K0 = K2 = 0` and
//! `H0 = H2 = (I - P^2)^(1/2)` the output is hermitian with square != I.
//! [`hermitian_corner_unitary_completion_unchecked`] skips the two coupling
//! constraints so the gap can be reproduced and measured.

use num_complex::Complex64;

use crate::block::BlockMatrix;
use crate::error::{Error, Result};
use crate::linalg::{
    commutation_residual, frobenius_norm, normality_residual, operator_norm, polar, psd_sqrt, svd,
    Tolerances,
};
use crate::matrix::ComplexMatrix;

/// Hermitian parameters for the `C = B^adj` recipes.
///
/// `h_first` plays H1 in the normal recipe and H0 in the unitary recipe.
/// All four must be hermitian; the recipes validate that together with
/// their commutation preconditions.
#[derive(Debug, Clone)]
pub struct HermitianCornerParams {
    pub k0: ComplexMatrix,
    pub k2: ComplexMatrix,
    pub h_first: ComplexMatrix,
    pub h2: ComplexMatrix,
}

impl HermitianCornerParams {
    pub fn new(
        k0: ComplexMatrix,
        k2: ComplexMatrix,
        h_first: ComplexMatrix,
        h2: ComplexMatrix,
    ) -> Self {
        Self {
            k0,
            k2,
            h_first,
            h2,
        }
    }

    /// All-zero parameters of block size n.
    pub fn zeros(n: usize) -> Self {
        Self {
            k0: ComplexMatrix::zeros(n, n),
            k2: ComplexMatrix::zeros(n, n),
            h_first: ComplexMatrix::zeros(n, n),
            h2: ComplexMatrix::zeros(n, n),
        }
    }

    fn validate_shapes(&self, n: usize) -> Result<()> {
        for (m, _name) in [
            (&self.k0, "K0"),
            (&self.k2, "K2"),
            (&self.h_first, "H_first"),
            (&self.h2, "H2"),
        ] {
            if m.rows() != n || m.cols() != n {
                return Err(Error::ShapeMismatch {
                    context: "hermitian corner parameters must match the block size",
                    rows: m.rows(),
                    cols: m.cols(),
                });
            }
        }
        Ok(())
    }

    fn validate_hermitian(&self, tol: f64) -> Result<()> {
        for (m, name) in [
            (&self.k0, "K0 must be hermitian"),
            (&self.k2, "K2 must be hermitian"),
            (&self.h_first, "H_first must be hermitian"),
            (&self.h2, "H2 must be hermitian"),
        ] {
            let r = m.hermitian_residual();
            if r > tol {
                return Err(Error::validation(name, r, tol));
            }
        }
        Ok(())
    }
}

/// Measured residuals of a constructed completion.
#[derive(Debug, Clone, PartialEq)]
pub struct CompletionCertificate {
    /// Scaled self-commutator residual of the assembled matrix.
    pub normality_residual: f64,
    /// `||N^adj N - s^2 I||_F / max(1, s^2)` for recipes claiming N is s
    /// times a unitary matrix (s = 1 for the unitary recipes); `None` when
    /// no such claim is made.
    pub unitarity_residual: Option<f64>,
    /// `||N_12 - B||_F` against the prescribed top-right corner.
    pub corner_residual_b: f64,
    /// `||N_21 - C||_F` against the prescribed bottom-left corner.
    pub corner_residual_c: f64,
}

/// A completion together with its certificate.
#[derive(Debug, Clone)]
pub struct CompletionResult {
    pub completion: BlockMatrix,
    pub certificate: CompletionCertificate,
}

fn certify(
    blocks: BlockMatrix,
    b: &ComplexMatrix,
    c: &ComplexMatrix,
    unitary_scale: Option<f64>,
) -> CompletionResult {
    let assembled = blocks.to_matrix();
    let unitarity_residual = unitary_scale.map(|s| scaled_gram_residual(&assembled, s));
    CompletionResult {
        certificate: CompletionCertificate {
            normality_residual: normality_residual(&assembled),
            unitarity_residual,
            corner_residual_b: (&blocks.b - b).frobenius_norm(),
            corner_residual_c: (&blocks.c - c).frobenius_norm(),
        },
        completion: blocks,
    }
}

/// `||N^adj N - s^2 I||_F / max(1, s^2)`.
fn scaled_gram_residual(n: &ComplexMatrix, s: f64) -> f64 {
    let gram = &n.adjoint() * n;
    let target = ComplexMatrix::identity(n.rows()).scale(s * s);
    (&gram - &target).frobenius_norm() / 1.0_f64.max(s * s)
}

fn require_square(b: &ComplexMatrix, context: &'static str) -> Result<()> {
    if !b.is_square() {
        return Err(Error::ShapeMismatch {
            context,
            rows: b.rows(),
            cols: b.cols(),
        });
    }
    Ok(())
}

/// Normal completion `[[B^adj, B], [B, B^adj]]` for the symmetric corner
/// case B = C.
///
/// Its operator norm is `max(||B + B^adj||, ||B - B^adj||)`: conjugating by
/// the unitary `(1/sqrt 2) [[I, I], [-I, I]]` block-diagonalizes the
/// completion into `diag(B^adj + B, B^adj - B)`.
pub fn symmetric_completion(b: &ComplexMatrix) -> Result<CompletionResult> {
    require_square(b, "symmetric_completion needs a square corner")?;
    let adj = b.adjoint();
    let blocks = BlockMatrix::from_blocks(adj.clone(), b.clone(), b.clone(), adj)?;
    Ok(certify(blocks, b, b, None))
}

/// Unitary completion `[[A, B], [B, A]]` of a contraction, with
/// `A = U (i (I - S^2)^(1/2)) V` for the SVD `B = U S V`.
pub fn symmetric_unitary_completion(
    b: &ComplexMatrix,
    tols: &Tolerances,
) -> Result<CompletionResult> {
    require_square(b, "symmetric_unitary_completion needs a square corner")?;
    let a = dilation_diagonal_block(b, tols)?;
    let blocks = BlockMatrix::from_blocks(a.clone(), b.clone(), b.clone(), a)?;
    Ok(certify(blocks, b, b, Some(1.0)))
}

/// The `A` block of the unitary dilation; shared with the least-norm
/// completion.
fn dilation_diagonal_block(b: &ComplexMatrix, tols: &Tolerances) -> Result<ComplexMatrix> {
    let norm = operator_norm(b);
    if norm > 1.0 + tols.decomposition_tol {
        return Err(Error::validation(
            "operator norm of B must be at most 1",
            norm - 1.0,
            tols.decomposition_tol,
        ));
    }
    let f = svd(b)?;
    // clamp round-off above 1 so I - S^2 stays PSD
    let clamped: Vec<f64> = f.singulars.iter().map(|&s| s.min(1.0)).collect();
    let gap: Vec<f64> = clamped.iter().map(|&s| 1.0 - s * s).collect();
    let q = psd_sqrt(&ComplexMatrix::diagonal_real(&gap), tols)?;
    Ok(&(&f.left * &q.scale_complex(Complex64::I)) * &f.right)
}

/// Least-operator-norm normal completion of the symmetric corner case:
/// `||B||` times the unitary dilation of `B / ||B||`.
///
/// The result is normal with `||N|| = ||B||`, which is optimal because any
/// completion contains B as a submatrix.
pub fn least_norm_symmetric_completion(
    b: &ComplexMatrix,
    tols: &Tolerances,
) -> Result<CompletionResult> {
    require_square(b, "least_norm_symmetric_completion needs a square corner")?;
    let norm = operator_norm(b);
    if norm == 0.0 {
        let z = ComplexMatrix::zeros(b.rows(), b.cols());
        let blocks = BlockMatrix::from_blocks(z.clone(), b.clone(), b.clone(), z)?;
        return Ok(certify(blocks, b, b, None));
    }
    let a = dilation_diagonal_block(&b.scale(1.0 / norm), tols)?.scale(norm);
    let blocks = BlockMatrix::from_blocks(a.clone(), b.clone(), b.clone(), a)?;
    Ok(certify(blocks, b, b, Some(norm)))
}

/// Completion that is `s_1` times a unitary matrix, for corners with equal
/// singular values.
///
/// The shared diagonal `S` is taken from B's SVD; C contributes only its
/// unitary factors. With `shat = S / s_1` and `Q = (I - shat^2)^(1/2)` the
/// diagonal blocks are `A = s_1 U_1 Q V_2` and `D = -s_1 V_1 Q U_2`.
pub fn equal_singular_value_completion(
    b: &ComplexMatrix,
    c: &ComplexMatrix,
    tols: &Tolerances,
) -> Result<CompletionResult> {
    require_square(b, "equal_singular_value_completion needs square corners")?;
    if b.rows() != c.rows() || b.cols() != c.cols() {
        return Err(Error::ShapeMismatch {
            context: "corners must have equal shapes",
            rows: c.rows(),
            cols: c.cols(),
        });
    }
    let fb = svd(b)?;
    let fc = svd(c)?;
    let gap = fb
        .singulars
        .iter()
        .zip(fc.singulars.iter())
        .map(|(x, y)| (x - y).abs())
        .fold(0.0_f64, f64::max);
    let s1 = fb.singulars[0];
    let tol_eff = tols.decomposition_tol * 1.0_f64.max(s1);
    if gap > tol_eff {
        return Err(Error::validation(
            "singular values of B and C must agree",
            gap,
            tol_eff,
        ));
    }
    if s1 == 0.0 {
        let z = ComplexMatrix::zeros(b.rows(), b.cols());
        let blocks = BlockMatrix::from_blocks(z.clone(), b.clone(), c.clone(), z)?;
        return Ok(certify(blocks, b, c, None));
    }
    let shat: Vec<f64> = fb.singulars.iter().map(|&s| (s / s1).min(1.0)).collect();
    let gap_diag: Vec<f64> = shat.iter().map(|&s| 1.0 - s * s).collect();
    let q = psd_sqrt(&ComplexMatrix::diagonal_real(&gap_diag), tols)?;
    let a = (&(&fb.left * &q) * &fc.right).scale(s1);
    let d = (&(&fc.left * &q) * &fb.right).scale(-s1);
    let blocks = BlockMatrix::from_blocks(a, b.clone(), c.clone(), d)?;
    Ok(certify(blocks, b, c, Some(s1)))
}

/// Residuals of the three conditions characterizing normality of
/// `[[A, B], [B^adj, D]]`: A normal, D normal, and
/// `(A - A^adj) B = B (D - D^adj)`.
///
/// The assembled matrix is normal exactly when all three vanish.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianCornerCheck {
    pub normality_residual_a: f64,
    pub normality_residual_d: f64,
    /// `||(A - A^adj) B - B (D - D^adj)||_F / max(1, ||B||_F (||A||_F + ||D||_F))`.
    pub coupling_residual: f64,
}

impl HermitianCornerCheck {
    pub fn all_below(&self, tol: f64) -> bool {
        self.normality_residual_a <= tol
            && self.normality_residual_d <= tol
            && self.coupling_residual <= tol
    }
}

/// Measures the three normality conditions for the `C = B^adj` block form.
pub fn hermitian_corner_normality_check(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    d: &ComplexMatrix,
) -> Result<HermitianCornerCheck> {
    for m in [a, b, d] {
        require_square(m, "hermitian corner check needs square blocks")?;
        if m.rows() != a.rows() {
            return Err(Error::ShapeMismatch {
                context: "hermitian corner check needs equal block sizes",
                rows: m.rows(),
                cols: m.cols(),
            });
        }
    }
    let skew_a = &(a - &a.adjoint()) * b;
    let skew_d = b * &(d - &d.adjoint());
    let scale = 1.0_f64.max(frobenius_norm(b) * (frobenius_norm(a) + frobenius_norm(d)));
    Ok(HermitianCornerCheck {
        normality_residual_a: normality_residual(a),
        normality_residual_d: normality_residual(d),
        coupling_residual: (&skew_a - &skew_d).frobenius_norm() / scale,
    })
}

/// `||X Y||_F / max(1, ||X||_F ||Y||_F)`; the product-must-vanish residual.
fn product_residual(x: &ComplexMatrix, y: &ComplexMatrix) -> f64 {
    (x * y).frobenius_norm() / 1.0_f64.max(x.frobenius_norm() * y.frobenius_norm())
}

/// Normal completion `[[H1 + iK1, B], [B^adj, H2 + iK2]]` from hermitian
/// parameters.
///
/// With the polar decomposition `B = U P`, the parameters must satisfy
/// `[K0, P] = [K2, P] = 0`, `(K0 - K2) P = 0`, `[H1, K1] = [H2, K2] = 0`
/// where `K1 = U K0 U^adj`; those conditions make `K1 B = B K2`, which is
/// the coupling equation for normality.
pub fn hermitian_corner_completion(
    b: &ComplexMatrix,
    params: &HermitianCornerParams,
    tols: &Tolerances,
) -> Result<CompletionResult> {
    require_square(b, "hermitian_corner_completion needs a square corner")?;
    params.validate_shapes(b.rows())?;
    params.validate_hermitian(tols.commutation_tol)?;
    let tol = tols.commutation_tol;
    let pf = polar(b)?;
    let p = &pf.psd_part;

    let r = commutation_residual(&params.k0, p)?;
    if r > tol {
        return Err(Error::validation("K0 must commute with P", r, tol));
    }
    let r = commutation_residual(&params.k2, p)?;
    if r > tol {
        return Err(Error::validation("K2 must commute with P", r, tol));
    }
    let r = product_residual(&(&params.k0 - &params.k2), p);
    if r > tol {
        return Err(Error::validation("(K0 - K2) P must vanish", r, tol));
    }
    let k1 = &(&pf.unitary_part * &params.k0) * &pf.unitary_part.adjoint();
    let r = commutation_residual(&params.h_first, &k1)?;
    if r > tol {
        return Err(Error::validation("H1 must commute with K1", r, tol));
    }
    let r = commutation_residual(&params.h2, &params.k2)?;
    if r > tol {
        return Err(Error::validation("H2 must commute with K2", r, tol));
    }

    let a = &params.h_first + &k1.scale_complex(Complex64::I);
    let d = &params.h2 + &params.k2.scale_complex(Complex64::I);
    let c = b.adjoint();
    let blocks = BlockMatrix::from_blocks(a, b.clone(), c.clone(), d)?;
    Ok(certify(blocks, b, &c, None))
}

/// Unitary completion `[[U (H0 + iK0) U^adj, B], [B^adj, H2 + iK2]]` of a
/// contraction, with the full (corrected) constraint set enforced.
pub fn hermitian_corner_unitary_completion(
    b: &ComplexMatrix,
    params: &HermitianCornerParams,
    tols: &Tolerances,
) -> Result<CompletionResult> {
    hermitian_corner_unitary_impl(b, params, tols, true)
}

/// Same construction but skipping the two coupling constraints
/// `(K0 - K2) P = 0` and `(H0 + H2) P = 0` that the published recipe
/// omits. The certificate then reports whatever unitarity residual the
/// output actually has, which can be large.
pub fn hermitian_corner_unitary_completion_unchecked(
    b: &ComplexMatrix,
    params: &HermitianCornerParams,
    tols: &Tolerances,
) -> Result<CompletionResult> {
    hermitian_corner_unitary_impl(b, params, tols, false)
}

fn hermitian_corner_unitary_impl(
    b: &ComplexMatrix,
    params: &HermitianCornerParams,
    tols: &Tolerances,
    enforce_coupling: bool,
) -> Result<CompletionResult> {
    require_square(b, "hermitian_corner_unitary_completion needs a square corner")?;
    params.validate_shapes(b.rows())?;
    params.validate_hermitian(tols.commutation_tol)?;
    let tol = tols.commutation_tol;
    let norm = operator_norm(b);
    if norm > 1.0 + tols.decomposition_tol {
        return Err(Error::validation(
            "operator norm of B must be at most 1",
            norm - 1.0,
            tols.decomposition_tol,
        ));
    }
    let pf = polar(b)?;
    let p = &pf.psd_part;

    for (m, name) in [
        (&params.k0, "K0 must commute with P"),
        (&params.k2, "K2 must commute with P"),
        (&params.h_first, "H0 must commute with P"),
        (&params.h2, "H2 must commute with P"),
    ] {
        let r = commutation_residual(m, p)?;
        if r > tol {
            return Err(Error::validation(name, r, tol));
        }
    }
    let r = commutation_residual(&params.h_first, &params.k0)?;
    if r > tol {
        return Err(Error::validation("H0 must commute with K0", r, tol));
    }
    let r = commutation_residual(&params.h2, &params.k2)?;
    if r > tol {
        return Err(Error::validation("H2 must commute with K2", r, tol));
    }

    // defect operator I - P^2
    let gap = &ComplexMatrix::identity(b.rows()) - &(p * p);
    let gap_scale = 1.0_f64.max(gap.frobenius_norm());
    for (h, k, name) in [
        (
            &params.h_first,
            &params.k0,
            "H0^2 + K0^2 must equal I - P^2",
        ),
        (&params.h2, &params.k2, "H2^2 + K2^2 must equal I - P^2"),
    ] {
        let sum = &(h * h) + &(k * k);
        let r = (&sum - &gap).frobenius_norm() / gap_scale;
        if r > tol {
            return Err(Error::validation(name, r, tol));
        }
    }

    if enforce_coupling {
        let r = product_residual(&(&params.k0 - &params.k2), p);
        if r > tol {
            return Err(Error::validation("(K0 - K2) P must vanish", r, tol));
        }
        let r = product_residual(&(&params.h_first + &params.h2), p);
        if r > tol {
            return Err(Error::validation("(H0 + H2) P must vanish", r, tol));
        }
    }

    let core = &params.h_first + &params.k0.scale_complex(Complex64::I);
    let a = &(&pf.unitary_part * &core) * &pf.unitary_part.adjoint();
    let d = &params.h2 + &params.k2.scale_complex(Complex64::I);
    let c = b.adjoint();
    let blocks = BlockMatrix::from_blocks(a, b.clone(), c.clone(), d)?;
    Ok(certify(blocks, b, &c, Some(1.0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{singular_values, unitarity_residual};
    use crate::random::{random_unitary, rng_from_seed};

    fn cm(rows: usize, cols: usize, entries: &[f64]) -> ComplexMatrix {
        ComplexMatrix::from_real(rows, cols, entries).unwrap()
    }

    fn tols() -> Tolerances {
        Tolerances::default()
    }

    #[test]
    fn symmetric_completion_norms() {
        // nilpotent corner: the completion has the same operator norm
        let b = cm(2, 2, &[0.0, 1.0, 0.0, 0.0]);
        let r = symmetric_completion(&b).unwrap();
        assert!(r.certificate.normality_residual < 1e-12);
        let n = r.completion.to_matrix();
        assert!((operator_norm(&n) - 1.0).abs() < 1e-12);

        // hermitian corner: the completion doubles the norm
        let b = ComplexMatrix::diagonal_real(&[1.0, 2.0]);
        let r = symmetric_completion(&b).unwrap();
        let n = r.completion.to_matrix();
        assert!((operator_norm(&n) - 4.0).abs() < 1e-12);

        // zero corner
        let r = symmetric_completion(&ComplexMatrix::zeros(2, 2)).unwrap();
        assert!(r.completion.to_matrix().is_zero());
        assert_eq!(r.certificate.normality_residual, 0.0);
    }

    #[test]
    fn symmetric_completion_norm_identity() {
        let mut rng = rng_from_seed(17);
        for _ in 0..20 {
            let b = crate::random::random_matrix(3, 3, &mut rng);
            let r = symmetric_completion(&b).unwrap();
            let n = r.completion.to_matrix();
            let plus = operator_norm(&(&b + &b.adjoint()));
            let minus = operator_norm(&(&b - &b.adjoint()));
            assert!((operator_norm(&n) - plus.max(minus)).abs() < 1e-10);
        }
    }

    #[test]
    fn unitary_dilation_scalar_case() {
        // direct 2x2 multiplication oracle
        let b = cm(1, 1, &[0.5]);
        let r = symmetric_unitary_completion(&b, &tols()).unwrap();
        let n = r.completion.to_matrix();
        assert!(unitarity_residual(&n) < 1e-12);
        assert!((n.get(0, 0) - Complex64::new(0.0, 0.75_f64.sqrt())).norm() < 1e-12);
        assert!((n.get(0, 1) - Complex64::new(0.5, 0.0)).norm() < 1e-15);
        assert!((n.get(1, 0) - Complex64::new(0.5, 0.0)).norm() < 1e-15);
        assert!((n.get(1, 1) - Complex64::new(0.0, 0.75_f64.sqrt())).norm() < 1e-12);
    }

    #[test]
    fn unitary_dilation_cases() {
        // zero corner: S = 0, so A = i U V is unitary
        let b = ComplexMatrix::zeros(2, 2);
        let r = symmetric_unitary_completion(&b, &tols()).unwrap();
        assert!(unitarity_residual(&r.completion.to_matrix()) < 1e-12);
        assert!(r.completion.b.is_zero());

        let b = cm(2, 2, &[0.0, 1.0, 0.0, 0.0]);
        let r = symmetric_unitary_completion(&b, &tols()).unwrap();
        assert!(unitarity_residual(&r.completion.to_matrix()) < 1e-12);
        assert_eq!(r.completion.b, b);
        assert_eq!(r.completion.c, b);

        // rejects expansive corners
        let too_big = ComplexMatrix::diagonal_real(&[2.0, 1.0]);
        assert!(matches!(
            symmetric_unitary_completion(&too_big, &tols()),
            Err(Error::Validation { .. })
        ));
    }

    #[test]
    fn least_norm_attains_corner_norm() {
        let b = ComplexMatrix::diagonal_real(&[2.0, 1.0]);
        let r = least_norm_symmetric_completion(&b, &tols()).unwrap();
        let n = r.completion.to_matrix();
        assert!((operator_norm(&n) - 2.0).abs() < 1e-11);
        assert!(r.certificate.unitarity_residual.unwrap() < 1e-11);

        let r = least_norm_symmetric_completion(&ComplexMatrix::zeros(3, 3), &tols()).unwrap();
        assert!(r.completion.to_matrix().is_zero());

        let b = cm(2, 2, &[0.0, 1.0, 0.0, 0.0]);
        let r = least_norm_symmetric_completion(&b, &tols()).unwrap();
        assert!((operator_norm(&r.completion.to_matrix()) - 1.0).abs() < 1e-11);
    }

    #[test]
    fn equal_singular_value_cases() {
        let b = ComplexMatrix::diagonal_real(&[1.0, 0.0]);
        let r = equal_singular_value_completion(&b, &b, &tols()).unwrap();
        let n = r.completion.to_matrix();
        assert!(unitarity_residual(&n) < 1e-10);
        assert_eq!(r.completion.b, b);
        assert_eq!(r.completion.c, b);

        let z = ComplexMatrix::zeros(2, 2);
        let r = equal_singular_value_completion(&z, &z, &tols()).unwrap();
        assert!(r.completion.to_matrix().is_zero());

        // random unitary factors around a shared singular spectrum
        let mut rng = rng_from_seed(41);
        let s = ComplexMatrix::diagonal_real(&[0.9, 0.3]);
        let b = &(&random_unitary(2, &mut rng) * &s) * &random_unitary(2, &mut rng);
        let c = &(&random_unitary(2, &mut rng) * &s) * &random_unitary(2, &mut rng);
        let r = equal_singular_value_completion(&b, &c, &tols()).unwrap();
        assert!(r.certificate.normality_residual < 1e-10);
        assert!(r.certificate.corner_residual_b < 1e-12);
        assert!(r.certificate.corner_residual_c < 1e-12);
        assert!(r.certificate.unitarity_residual.unwrap() < 1e-10);
    }

    #[test]
    fn equal_singular_value_rejects_mismatched_spectra() {
        // the non-completable pair: singular values (sqrt 1.25, 0) vs (1, 0.5)
        let b = cm(2, 2, &[1.0, 0.5, 0.0, 0.0]);
        let c = ComplexMatrix::diagonal_real(&[1.0, 0.5]);
        let sb = singular_values(&b);
        let sc = singular_values(&c);
        assert!((sb[0] - 1.25_f64.sqrt()).abs() < 1e-14 && sb[1] < 1e-14);
        assert!((sc[0] - 1.0).abs() < 1e-14 && (sc[1] - 0.5).abs() < 1e-14);
        assert!(matches!(
            equal_singular_value_completion(&b, &c, &tols()),
            Err(Error::Validation {
                constraint: "singular values of B and C must agree",
                ..
            })
        ));
    }

    #[test]
    fn normality_check_cases() {
        let mut rng = rng_from_seed(53);
        let b = crate::random::random_matrix(2, 2, &mut rng);
        let z = ComplexMatrix::zeros(2, 2);
        let check = hermitian_corner_normality_check(&z, &b, &z).unwrap();
        assert!(check.all_below(1e-14));
        let n = BlockMatrix::from_blocks(z.clone(), b.clone(), b.adjoint(), z.clone())
            .unwrap()
            .to_matrix();
        assert!(normality_residual(&n) < 1e-14);

        // A = iI, D = 0, B = I: coupling term is 2iI
        let a = ComplexMatrix::identity(2).scale_complex(Complex64::I);
        let i2 = ComplexMatrix::identity(2);
        let check = hermitian_corner_normality_check(&a, &i2, &z).unwrap();
        assert!(check.normality_residual_a < 1e-14);
        assert!(check.coupling_residual > 0.1);
        let n = BlockMatrix::from_blocks(a, i2.clone(), i2.adjoint(), z)
            .unwrap()
            .to_matrix();
        assert!(normality_residual(&n) > 1e-3);
    }

    #[test]
    fn hermitian_corner_completion_cases() {
        // hermitian PSD corner with zero parameters
        let b = ComplexMatrix::diagonal_real(&[1.0, 2.0]);
        let r =
            hermitian_corner_completion(&b, &HermitianCornerParams::zeros(2), &tols()).unwrap();
        assert!(r.certificate.normality_residual < 1e-12);
        assert!(r.completion.a.is_zero());
        assert_eq!(r.completion.c, b.adjoint());

        // K0 = K2 = I with a diagonal H1
        let params = HermitianCornerParams::new(
            ComplexMatrix::identity(2),
            ComplexMatrix::identity(2),
            ComplexMatrix::diagonal_real(&[3.0, 4.0]),
            ComplexMatrix::zeros(2, 2),
        );
        let r = hermitian_corner_completion(&b, &params, &tols()).unwrap();
        assert!(r.certificate.normality_residual < 1e-12);
        let expected_a =
            &ComplexMatrix::diagonal_real(&[3.0, 4.0]) + &ComplexMatrix::identity(2).scale_complex(Complex64::I);
        assert!((&r.completion.a - &expected_a).frobenius_norm() < 1e-12);
        let expected_d = ComplexMatrix::identity(2).scale_complex(Complex64::I);
        assert!((&r.completion.d - &expected_d).frobenius_norm() < 1e-12);

        // (K0 - K2) P = diag(-1, 0) diag(1, 2) has norm 1: rejected
        let params = HermitianCornerParams::new(
            ComplexMatrix::diagonal_real(&[1.0, 0.0]),
            ComplexMatrix::diagonal_real(&[2.0, 0.0]),
            ComplexMatrix::zeros(2, 2),
            ComplexMatrix::zeros(2, 2),
        );
        match hermitian_corner_completion(&b, &params, &tols()) {
            Err(Error::Validation {
                constraint,
                residual,
                ..
            }) => {
                assert_eq!(constraint, "(K0 - K2) P must vanish");
                // ||(K0-K2)P|| = 1 scaled by ||K0-K2||_F ||P||_F = sqrt(5)
                assert!((residual - 1.0 / 5.0_f64.sqrt()).abs() < 1e-12);
            }
            other => panic!("expected coupling rejection, got {other:?}"),
        }
    }

    #[test]
    fn hermitian_corner_unitary_cases() {
        // unitary corner forces all parameters to zero
        let mut rng = rng_from_seed(67);
        let b = random_unitary(3, &mut rng);
        let r = hermitian_corner_unitary_completion(&b, &HermitianCornerParams::zeros(3), &tols())
            .unwrap();
        assert!(r.certificate.unitarity_residual.unwrap() < 1e-11);
        assert!(r.completion.a.frobenius_norm() < 1e-12);

        // P = (1/sqrt 2) I with H0 = Q, H2 = -Q is unitary
        let q = ComplexMatrix::identity(2).scale(1.0 / 2.0_f64.sqrt());
        let b = q.clone();
        let params = HermitianCornerParams::new(
            ComplexMatrix::zeros(2, 2),
            ComplexMatrix::zeros(2, 2),
            q.clone(),
            (&q).scale(-1.0),
        );
        let r = hermitian_corner_unitary_completion(&b, &params, &tols()).unwrap();
        assert!(r.certificate.unitarity_residual.unwrap() < 1e-12);
    }

    #[test]
    fn published_unitary_recipe_gap() {
        // H0 = H2 = Q passes every published constraint but gives a
        // hermitian completion whose square is not the identity
        let q = ComplexMatrix::identity(2).scale(1.0 / 2.0_f64.sqrt());
        let b = q.clone();
        let params = HermitianCornerParams::new(
            ComplexMatrix::zeros(2, 2),
            ComplexMatrix::zeros(2, 2),
            q.clone(),
            q.clone(),
        );
        match hermitian_corner_unitary_completion(&b, &params, &tols()) {
            Err(Error::Validation { constraint, .. }) => {
                assert_eq!(constraint, "(H0 + H2) P must vanish");
            }
            other => panic!("expected coupling rejection, got {other:?}"),
        }
        let r = hermitian_corner_unitary_completion_unchecked(&b, &params, &tols()).unwrap();
        let res = r.certificate.unitarity_residual.unwrap();
        assert!(res >= 0.5, "unitarity residual {res} should expose the gap");
        // the output is hermitian, hence normal, just not unitary
        assert!(r.certificate.normality_residual < 1e-12);
    }

    #[test]
    fn validation_order_names_first_violation() {
        // non-hermitian K0 must be reported before any commutation check
        let b = ComplexMatrix::diagonal_real(&[1.0, 2.0]);
        let mut params = HermitianCornerParams::zeros(2);
        params.k0 = cm(2, 2, &[0.0, 1.0, 0.0, 0.0]);
        match hermitian_corner_completion(&b, &params, &tols()) {
            Err(Error::Validation { constraint, .. }) => {
                assert_eq!(constraint, "K0 must be hermitian");
            }
            other => panic!("expected hermiticity rejection, got {other:?}"),
        }
    }
}
