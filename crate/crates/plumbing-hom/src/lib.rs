//! Graded endomorphism algebras of the cocore Lagrangians of ADE plumbings.
//!
//! Starting from an ADE Dynkin quiver `Q`, this crate constructs the graded
//! quiver `Ω_Q` with its relation ideal `J`, computes exact degreewise
//! dimensions and bases of the path algebra `KΩ_Q/J` (the wrapped side), and
//! builds the quotient `KΩ̄_Q/J̄` obtained by inverting the `v`-arrows (the
//! Rabinowitz / cluster-category side).  Independent cross-checks are
//! provided by the cohomology of the Ginzburg dg algebra and by closed-form
//! generator-and-relation presentations in type A.
//!
//! All linear algebra is over exact rationals; there is no floating point
//! anywhere in the computational path.

pub mod dynkin;
pub mod error;
pub mod ginzburg;
pub mod homalg;
pub mod linalg;
pub mod parser;
pub mod path;
pub mod quiver;
pub mod quotient;

pub use dynkin::{DynkinQuiver, Involution, Series};
pub use error::Error;
pub use homalg::HomAlgebra;
pub use path::{GradedElement, Path};
pub use quiver::{GradedQuiver, RelationSet};
pub use quotient::QuotientAlgebra;

/// Exact scalar type used throughout.
pub type Coef = num_rational::BigRational;

/// Result alias over the crate error type.
pub type Result<T> = std::result::Result<T, Error>;
