//! Exact construction and analysis of Palatini quartic hypersurfaces.
//!
//! A 5-tuple of linearly independent skew-symmetric 6x6 matrices determines a
//! 5x6 matrix of linear forms on P^5 whose rank-4 degeneracy locus is a
//! quartic hypersurface, the Palatini quartic, singular along a degree-25
//! genus-26 curve. This crate builds those quartics exactly (over `Q` or
//! `F_p`), analyses the graded ideal of the singular curve by exact linear
//! algebra, reconstructs the quartic from its jacobian space, samples the
//! kernel lines of the dual pfaffian cubic, and reproduces the matching
//! intersection-theoretic invariants with Chern/Schubert calculus.
//!
//! Every value is immutable after construction and freely shareable across
//! threads; all operations are pure functions of their inputs (and a seed,
//! where randomness is involved).

pub mod dual;
pub mod enumerative;
pub mod field;
pub mod fixture;
pub mod io;
pub mod linalg;
pub mod matrix;
pub mod monomial;
pub mod poly;
pub mod profile;
pub mod quartic;
pub mod skew;
pub mod space;

pub use field::{Field, FieldElement, FieldError};
pub use matrix::{hessian_matrix, jacobian_matrix, MatrixError, PolyMatrix};
pub use monomial::{monomial_basis, Monomial};
pub use poly::{PolyError, Polynomial};
pub use quartic::PalatiniQuartic;
pub use skew::{SkewSystem, SkewSystemError};
pub use space::PolySpace;
