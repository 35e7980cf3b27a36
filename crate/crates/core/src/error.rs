use thiserror::Error;

/// Errors produced by the library.
///
/// Variants are grouped into two broad classes, mirrored by the CLI exit
/// codes: malformed data (bad files, inconsistent shapes) and mathematical
/// preconditions (characteristic too small, non-admissible presentations,
/// objects over mismatched algebras).
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrices live over different prime fields ({0} vs {1})")]
    FieldMismatch(u64, u64),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),

    #[error("path basis exceeds cap of {cap}: algebra is infinite-dimensional or too large")]
    PathBasisOverflow { cap: usize },

    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),

    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),

    #[error("objects live over different algebras")]
    AlgebraMismatch,

    #[error("characteristic too small for trace-form radical (p = {p}, dim = {dim})")]
    CharTooSmall { p: u64, dim: usize },

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("subspace is not closed under End(C)-precomposition")]
    NotGammaClosed,

    #[error("module is not indecomposable: {0}")]
    NotIndecomposable(String),

    #[error("invalid poset: {0}")]
    InvalidPoset(String),

    #[error("{0}")]
    Unsupported(String),

    #[error("enumeration exceeds cap of {cap}; use smaller bounds")]
    EnumerationOverflow { cap: usize },

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors that signal a violated mathematical precondition
    /// rather than structurally malformed input.
    pub fn is_math_precondition(&self) -> bool {
        matches!(
            self,
            Error::NotPrime(_)
                | Error::PathBasisOverflow { .. }
                | Error::AlgebraMismatch
                | Error::CharTooSmall { .. }
                | Error::NotGammaClosed
                | Error::NotIndecomposable(_)
                | Error::Unsupported(_)
                | Error::EnumerationOverflow { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
