//! Exact rational linear algebra, Lie algebras, Rota–Baxter operators and
//! post-Lie structures.

pub mod catalog;
pub mod classify;
pub mod error;
pub mod lie;
pub mod linalg;
pub mod post_lie;
pub mod rota_baxter;

pub use error::{Error, Result};
pub use lie::{Fingerprint, LieAlgebra};
pub use linalg::{int, parse_rational, rat, Matrix, Polynomial, Rational, Subspace, Vector};
pub use rota_baxter::{DoubleVariant, RBOperator, TriangularSplitSpec};
pub use post_lie::{BracketTower, PAProduct, TripleDecomposition};
pub use classify::{classify3, is_lie_isomorphism, Class3, Class3Tag};
