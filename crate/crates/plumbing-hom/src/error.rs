use thiserror::Error;

/// Errors produced by quiver construction and algebra operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("edge set is not the Dynkin tree of the requested type: {0}")]
    NonDynkinShape(String),

    #[error("duplicate edge between vertices {0} and {1}")]
    DuplicateEdge(usize, usize),

    #[error("the nontrivial diagram involution is incompatible with this orientation")]
    OrientationNotPhiCompatible,

    #[error("Coxeter iteration failed: {0}")]
    ConventionFailure(String),

    #[error("quiver admits a degree-0 cycle or unbounded path enumeration: {0}")]
    ZeroDegreeCycle(String),

    #[error("elements are not composable: {0}")]
    NotComposable(String),

    #[error("path is not a u-arrow path: {0}")]
    NotAUPath(String),

    #[error("element is not homogeneous: {0}")]
    NonHomogeneous(String),

    #[error("configuration not handled by the normal-form machinery: {0}")]
    UnsupportedShape(String),

    #[error("operation is only defined for type A quivers")]
    NotTypeA,

    #[error("degree or endpoint mismatch: {0}")]
    DegreeMismatch(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("parse error: {0}")]
    Parse(String),
}
