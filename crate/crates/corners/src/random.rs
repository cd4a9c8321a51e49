//! Seeded generators for test corpora and multistart searches.
//!
//! Everything here is deterministic per (seed, stream): the same inputs
//! produce bit-identical matrices on every platform.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::matrix::ComplexMatrix;

/// Deterministic RNG for a seed.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent RNG stream for (seed, stream); used for per-restart draws
/// whose results must not depend on execution order.
pub fn rng_for_stream(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Standard complex gaussian: independent N(0,1) real and imaginary parts.
pub fn complex_gaussian<R: Rng>(rng: &mut R) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im)
}

/// Matrix of independent standard complex gaussians, filled row-major.
pub fn random_matrix<R: Rng>(rows: usize, cols: usize, rng: &mut R) -> ComplexMatrix {
    let entries: Vec<Complex64> = (0..rows * cols).map(|_| complex_gaussian(rng)).collect();
    ComplexMatrix::new(rows, cols, entries).expect("gaussian entries are finite")
}

/// Random unitary: QR orthonormalization of a complex gaussian matrix,
/// with column phases fixed so the R factor has a positive diagonal.
pub fn random_unitary<R: Rng>(n: usize, rng: &mut R) -> ComplexMatrix {
    let g = random_matrix(n, n, rng);
    let qr = g.inner().clone().qr();
    let mut q: DMatrix<Complex64> = qr.q();
    let r = qr.r();
    for j in 0..n {
        let d = r[(j, j)];
        if d.norm() > 0.0 {
            let phase = d / d.norm();
            for i in 0..n {
                q[(i, j)] *= phase;
            }
        }
    }
    ComplexMatrix::from_inner(q)
}

/// Random hermitian matrix (G + G^adj) / 2.
pub fn random_hermitian<R: Rng>(n: usize, rng: &mut R) -> ComplexMatrix {
    let g = random_matrix(n, n, rng);
    (&(&g + &g.adjoint())).scale(0.5)
}
