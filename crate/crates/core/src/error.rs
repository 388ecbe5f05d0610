use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

/// Coarse classification used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed or inconsistent input structure.
    Input,
    /// An enumeration bound would be exceeded.
    Cap,
    /// The input is well formed but a hypothesis of the requested identity fails.
    Precondition,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{what}: size {size} exceeds the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("circuit #{0} is empty")]
    EmptyCircuit(usize),
    #[error("circuit #{0} is not a subset of the ground set")]
    CircuitOutsideGround(usize),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("relation is not a partial order: {0}")]
    NotAPartialOrder(String),
    #[error("`{0}` and `{1}` have no least upper bound")]
    NotASemilattice(String, String),
    #[error("not a lattice: `{0}` and `{1}` lack a unique meet or join")]
    NotALattice(String, String),
    #[error("lattice is trivial (no elements strictly between bottom and top)")]
    TrivialLattice,
    #[error("not a crosscut: {0}")]
    NotACrosscut(String),
    #[error("not a closure system: {0}")]
    NotAClosureSystem(String),
    #[error("not a convex geometry: {0}")]
    NotAConvexGeometry(String),
    #[error("set is not closed")]
    NotClosed,
    #[error("not a matroid: {0}")]
    NotAMatroid(String),
    #[error("precondition `{condition}` violated: {detail}")]
    Precondition { condition: &'static str, detail: String },
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::CapExceeded { .. } => ErrorKind::Cap,
            Error::Precondition { .. } | Error::TrivialLattice => ErrorKind::Precondition,
            _ => ErrorKind::Input,
        }
    }

    pub(crate) fn precondition(condition: &'static str, detail: impl Into<String>) -> Error {
        Error::Precondition {
            condition,
            detail: detail.into(),
        }
    }

    pub(crate) fn cap(what: &'static str, size: usize, cap: usize) -> Error {
        Error::CapExceeded { what, size, cap }
    }
}

pub(crate) fn check_cap(what: &'static str, size: usize, cap: usize) -> Result<()> {
    if size > cap {
        Err(Error::cap(what, size, cap))
    } else {
        Ok(())
    }
}
