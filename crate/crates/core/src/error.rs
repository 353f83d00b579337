use thiserror::Error;

/// Errors raised anywhere in the library.
///
/// The CLI maps these onto process exit codes via [`Error::exit_code`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed root datum config: {0}")]
    MalformedConfig(String),
    #[error("Cartan data is not of finite type: {0}")]
    NotFiniteType(String),
    #[error("diagram automorphism is incompatible with the root datum: {0}")]
    BadAutomorphism(String),
    #[error("coweight is not dominant: {0}")]
    NotDominant(String),
    #[error("elements belong to different root data (rank {left} vs {right})")]
    DatumMismatch { left: usize, right: usize },
    #[error("finite Weyl group has more than {cap} elements")]
    GroupTooLarge { cap: usize },
    #[error("eta decomposition failed: {0}")]
    DecompositionFailure(String),
    #[error("X/Q^vee is infinite; Omega cannot be enumerated")]
    InfinitePi1,
    #[error("exploration budget of {budget} nodes exceeded")]
    ExplorationBudgetExceeded { budget: usize },
    #[error("no ux decomposition found for {0}")]
    DecompositionNotFound(String),
    #[error("virtual dimension is not integral: {twice}/2")]
    NonIntegralHalf { twice: i64 },
    #[error("dimension is not integral: {0}")]
    NonIntegralDimension(String),
    #[error("dimension is negative: {0}")]
    NegativeDimension(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("oracle inconclusive: minimum still decreasing at radius {radius}")]
    Inconclusive { radius: usize },
    #[error("no straight class with the given invariants: {0}")]
    UnknownClass(String),
    #[error("invalid element: {0}")]
    InvalidElement(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Process exit code used by the `weylcalc` binary.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::HypothesisViolated(_) => 2,
            Error::ExplorationBudgetExceeded { .. } | Error::GroupTooLarge { .. } => 3,
            Error::DecompositionFailure(_)
            | Error::DecompositionNotFound(_)
            | Error::NonIntegralDimension(_)
            | Error::Internal(_) => 4,
            _ => 1,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
