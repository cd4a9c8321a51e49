//! Completions of 2x2-block matrices with prescribed off-diagonal corners.
//!
//! Given n x n corner blocks `B` (top right) and `C` (bottom left), this crate
//! decides necessary conditions for, constructs, and numerically searches for
//! diagonal blocks `A`, `D` making
//!
//! ```text
//!     N = | A  B |
//!         | C  D |
//! ```
//!
//! normal (or unitary). It provides:
//!
//! * dense complex linear algebra ([`matrix`], [`linalg`]): norms, SVD, polar
//!   decomposition, PSD square roots, commutation/normality residuals, and
//!   subspace intersection dimensions;
//! * the block data model and corner diagnostics ([`block`]);
//! * every constructive completion recipe ([`completions`]): the symmetric
//!   case B = C, unitary dilation of a contraction, the equal-singular-value
//!   case, and the hermitian-corner case C = B^*;
//! * extremal examples and seeded multistart searches ([`search`]) for the
//!   best corner-norm ratio at a given block size and for feasibility of a
//!   prescribed corner pair.

pub mod block;
pub mod completions;
pub mod error;
pub mod linalg;
pub mod matrix;
pub mod random;
pub mod search;

pub use block::{BlockMatrix, CornerConditions, CornerReport};
pub use completions::{CompletionCertificate, CompletionResult, HermitianCornerParams};
pub use error::{Error, Result};
pub use linalg::{PolarFactors, SvdFactors, Tolerances};
pub use matrix::ComplexMatrix;
pub use search::{FeasibilityReport, SearchConfig, SearchResult};
