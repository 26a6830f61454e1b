use thiserror::Error;

use crate::matroid::Violation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the universe must contain at least one element")]
    EmptyUniverse,

    #[error("universe of {size} elements exceeds the supported maximum of {max}")]
    UniverseTooLarge { size: usize, max: usize },

    #[error("expected {expected} element names, got {found}")]
    NameCount { expected: usize, found: usize },

    #[error("duplicate element name `{0}`")]
    DuplicateName(String),

    #[error("element {element} appears in more than one block")]
    Overlap { element: usize },

    #[error("element {element} is not covered by any block")]
    Coverage { element: usize },

    #[error("partition blocks must be nonempty")]
    EmptyBlock,

    #[error("element {element} is outside a universe of size {size}")]
    OutOfUniverse { element: usize, size: usize },

    #[error("subset over a universe of size {found} used where size {expected} is required")]
    UniverseMismatch { expected: usize, found: usize },

    #[error("{what} refuses universes larger than {cap} (got {size})")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("family violates the independence axioms: {0}")]
    NotAMatroid(Violation),

    #[error("family violates the base axioms: {0}")]
    BaseAxiom(Violation),

    #[error("{0} is not a base of the restriction to the contracted set")]
    NotABase(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
