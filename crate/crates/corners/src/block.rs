//! The 2x2-block data model and necessary-condition checks on the corners
//! of normal matrices.
//!
//! A 2n x 2n matrix is partitioned into n x n blocks
//!
//! ```text
//!     N = | A  B |
//!         | C  D |
//! ```
//!
//! For normal N the off-diagonal corners obey `||B||_2 = ||C||_2` (equal
//! Frobenius norms, because row and column norms of a normal matrix agree
//! index-wise) and consequently `||B|| <= sqrt(n) ||C||` in the operator
//! norm. These are necessary conditions only; [`corner_report`] measures
//! them and [`check_normal_corner_conditions`] turns them into verdicts.

use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::{frobenius_norm, normality_residual, operator_norm, singular_values};
use crate::matrix::ComplexMatrix;
use crate::random::{complex_gaussian, random_unitary, rng_from_seed};

/// A 2n x 2n matrix carried as its four n x n blocks.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockMatrix {
    n: usize,
    pub a: ComplexMatrix,
    pub b: ComplexMatrix,
    pub c: ComplexMatrix,
    pub d: ComplexMatrix,
}

impl BlockMatrix {
    /// Assembles four equally sized square blocks.
    pub fn from_blocks(
        a: ComplexMatrix,
        b: ComplexMatrix,
        c: ComplexMatrix,
        d: ComplexMatrix,
    ) -> Result<Self> {
        let n = a.rows();
        for block in [&a, &b, &c, &d] {
            if block.rows() != n || block.cols() != n {
                return Err(Error::ShapeMismatch {
                    context: "all four blocks must be n x n with equal n",
                    rows: block.rows(),
                    cols: block.cols(),
                });
            }
        }
        Ok(Self { n, a, b, c, d })
    }

    /// Splits an even-dimension square matrix into its four blocks.
    /// Exact: `partition` followed by [`BlockMatrix::to_matrix`] is the
    /// identity.
    pub fn partition(m: &ComplexMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::ShapeMismatch {
                context: "partition needs a square matrix",
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        let size = m.rows();
        if size % 2 != 0 {
            return Err(Error::OddDimension { size });
        }
        let n = size / 2;
        Ok(Self {
            n,
            a: m.block(0, 0, n, n),
            b: m.block(0, n, n, n),
            c: m.block(n, 0, n, n),
            d: m.block(n, n, n, n),
        })
    }

    /// Block size n (the assembled matrix is 2n x 2n).
    pub fn block_size(&self) -> usize {
        self.n
    }

    /// The assembled 2n x 2n matrix.
    pub fn to_matrix(&self) -> ComplexMatrix {
        let n = self.n;
        ComplexMatrix::from_fn(2 * n, 2 * n, |i, j| match (i < n, j < n) {
            (true, true) => self.a.get(i, j),
            (true, false) => self.b.get(i, j - n),
            (false, true) => self.c.get(i - n, j),
            (false, false) => self.d.get(i - n, j - n),
        })
        .expect("blocks hold finite entries")
    }
}

/// Measurements of every corner-related necessary condition.
#[derive(Debug, Clone, PartialEq)]
pub struct CornerReport {
    /// `| ||B||_2 - ||C||_2 |`, zero for normal matrices.
    pub frobenius_gap: f64,
    /// Operator-norm ratio `||B|| / ||C||`; `+inf` when only C vanishes,
    /// 1 when both vanish.
    pub ratio: f64,
    /// The bound sqrt(n) from the norm chain.
    pub ratio_bound: f64,
    /// Scaled self-commutator residual of the assembled matrix.
    pub normality_residual: f64,
    /// `max_j |s_j(B) - s_j(C)|`; zero for unitary (and hermitian) matrices.
    pub singular_value_gap: f64,
}

/// Per-condition verdicts produced by [`check_normal_corner_conditions`].
///
/// These are necessary conditions: a normal matrix passes all of them, but
/// passing proves nothing (equal Frobenius corners exist with no normal
/// completion).
#[derive(Debug, Clone, PartialEq)]
pub struct CornerConditions {
    pub report: CornerReport,
    /// Residual at or below the supplied tolerance.
    pub is_normal: bool,
    /// `frobenius_gap <= tol * max(1, ||N||_F)`.
    pub frobenius_equality: bool,
    /// `ratio <= sqrt(n) + tol`.
    pub ratio_within_bound: bool,
}

impl CornerConditions {
    /// True when every measured necessary condition holds.
    pub fn all_necessary_hold(&self) -> bool {
        self.frobenius_equality && self.ratio_within_bound
    }
}

/// Measures the corner conditions of an even-dimension square matrix.
pub fn corner_report(m: &ComplexMatrix) -> Result<CornerReport> {
    let blocks = BlockMatrix::partition(m)?;
    let fb = frobenius_norm(&blocks.b);
    let fc = frobenius_norm(&blocks.c);
    let ob = operator_norm(&blocks.b);
    let oc = operator_norm(&blocks.c);
    let ratio = if oc > 0.0 {
        ob / oc
    } else if ob > 0.0 {
        f64::INFINITY
    } else {
        1.0
    };
    let sb = singular_values(&blocks.b);
    let sc = singular_values(&blocks.c);
    let singular_value_gap = sb
        .iter()
        .zip(sc.iter())
        .map(|(x, y)| (x - y).abs())
        .fold(0.0_f64, f64::max);
    Ok(CornerReport {
        frobenius_gap: (fb - fc).abs(),
        ratio,
        ratio_bound: (blocks.block_size() as f64).sqrt(),
        normality_residual: normality_residual(m),
        singular_value_gap,
    })
}

/// Evaluates the necessary corner conditions at tolerance `tol`.
///
/// Never fails on condition violations; the verdicts are data for
/// diagnostic screening of completion candidates.
pub fn check_normal_corner_conditions(m: &ComplexMatrix, tol: f64) -> Result<CornerConditions> {
    let report = corner_report(m)?;
    let scale = 1.0_f64.max(frobenius_norm(m));
    Ok(CornerConditions {
        is_normal: report.normality_residual <= tol,
        frobenius_equality: report.frobenius_gap <= tol * scale,
        ratio_within_bound: report.ratio <= report.ratio_bound + tol,
        report,
    })
}

/// Seeded random normal matrix `W diag(z) W^adj` with `W` a random unitary
/// and `z` complex gaussian eigenvalues. Deterministic per (size, seed).
pub fn random_normal(size: usize, seed: u64) -> ComplexMatrix {
    let mut rng = rng_from_seed(seed);
    random_normal_with(size, &mut rng)
}

/// Same construction as [`random_normal`] driven by a caller-owned RNG.
pub fn random_normal_with<R: Rng>(size: usize, rng: &mut R) -> ComplexMatrix {
    assert!(size >= 1, "random_normal needs size >= 1");
    let w = random_unitary(size, rng);
    let z: Vec<Complex64> = (0..size).map(|_| complex_gaussian(rng)).collect();
    let d = ComplexMatrix::diagonal(&z);
    &(&w * &d) * &w.adjoint()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{random_matrix, rng_from_seed};

    fn cm(rows: usize, cols: usize, entries: &[f64]) -> ComplexMatrix {
        ComplexMatrix::from_real(rows, cols, entries).unwrap()
    }

    #[test]
    fn assemble_scalar_blocks() {
        let one = |x: f64| cm(1, 1, &[x]);
        let m = BlockMatrix::from_blocks(one(1.0), one(2.0), one(3.0), one(4.0))
            .unwrap()
            .to_matrix();
        assert_eq!(m, cm(2, 2, &[1.0, 2.0, 3.0, 4.0]));
    }

    #[test]
    fn assemble_rejects_mismatched_blocks() {
        let a = ComplexMatrix::zeros(2, 2);
        let b = ComplexMatrix::zeros(2, 2);
        let c = ComplexMatrix::zeros(2, 2);
        let d = ComplexMatrix::zeros(3, 3);
        assert!(matches!(
            BlockMatrix::from_blocks(a, b, c, d),
            Err(Error::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn assemble_zero_blocks() {
        let z = ComplexMatrix::zeros(2, 2);
        let m = BlockMatrix::from_blocks(z.clone(), z.clone(), z.clone(), z)
            .unwrap()
            .to_matrix();
        assert!(m.is_zero());
    }

    #[test]
    fn partition_round_trips() {
        let mut rng = rng_from_seed(23);
        let m = random_matrix(6, 6, &mut rng);
        let blocks = BlockMatrix::partition(&m).unwrap();
        assert_eq!(blocks.to_matrix(), m);
    }

    #[test]
    fn partition_identity() {
        let blocks = BlockMatrix::partition(&ComplexMatrix::identity(4)).unwrap();
        assert_eq!(blocks.a, ComplexMatrix::identity(2));
        assert_eq!(blocks.d, ComplexMatrix::identity(2));
        assert!(blocks.b.is_zero());
        assert!(blocks.c.is_zero());
    }

    #[test]
    fn partition_rejects_odd_dimension() {
        let m = ComplexMatrix::zeros(3, 3);
        assert!(matches!(
            BlockMatrix::partition(&m),
            Err(Error::OddDimension { size: 3 })
        ));
    }

    #[test]
    fn hermitian_corner_report() {
        let mut rng = rng_from_seed(31);
        let g = random_matrix(6, 6, &mut rng);
        let h = (&(&g + &g.adjoint())).scale(0.5);
        let report = corner_report(&h).unwrap();
        // C = B^adj, so both ratios and singular values agree
        assert!(report.ratio <= 1.0 + 1e-12);
        assert!(report.singular_value_gap < 1e-10);
        assert!(report.frobenius_gap < 1e-12);
    }

    #[test]
    fn zero_corner_ratio_conventions() {
        let report = corner_report(&ComplexMatrix::identity(4)).unwrap();
        assert_eq!(report.ratio, 1.0);

        // B nonzero, C zero: ratio is +inf and the matrix cannot be normal
        let mut m = ComplexMatrix::zeros(4, 4);
        m = m.with_entry(0, 2, Complex64::new(1.0, 0.0));
        let report = corner_report(&m).unwrap();
        assert!(report.ratio.is_infinite());
        assert!(report.normality_residual > 0.0);
    }

    #[test]
    fn conditions_pass_on_random_normal() {
        for seed in 0..10u64 {
            let m = random_normal(6, seed);
            let verdicts = check_normal_corner_conditions(&m, 1e-10).unwrap();
            assert!(verdicts.is_normal);
            assert!(verdicts.all_necessary_hold(), "seed {seed}: {verdicts:?}");
        }
    }

    #[test]
    fn random_normal_is_deterministic_and_normal() {
        let a = random_normal(6, 99);
        let b = random_normal(6, 99);
        assert_eq!(a, b);
        assert!(normality_residual(&a) < 1e-12);
        assert!(normality_residual(&random_normal(8, 5)) < 1e-12);
        // size 1 is trivially normal
        assert_eq!(normality_residual(&random_normal(1, 0)), 0.0);
    }
}
