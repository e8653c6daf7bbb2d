use thiserror::Error;

/// Domain errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed diagram token `{0}`")]
    MalformedToken(String),
    #[error("invalid family/rank combination {0}{1}")]
    InvalidRank(char, usize),
    #[error("not a Cartan matrix: {0}")]
    NotACartanMatrix(String),
    #[error("diagram is not connected")]
    NotConnected,
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("node index {0} out of range for rank {1}")]
    IndexOutOfRange(usize, usize),
    #[error("Weyl group exceeds enumeration limit {limit}; stopped after {partial} elements")]
    GroupTooLarge { limit: usize, partial: usize },
    #[error("weight is not dominant")]
    NotDominant,
    #[error("vector is not a member of the lattice")]
    NotInLattice,
    #[error("invalid lattice basis: {0}")]
    BadLattice(String),
    #[error("tag has a negative entry")]
    NegativeTag,
    #[error("models have different diagrams or lattices")]
    ModelMismatch,
    #[error("connected component {0:?} contains no node of I")]
    ComponentMissesI(Vec<usize>),
    #[error("rank {0} exceeds the report bound {1}")]
    RankTooLarge(usize, usize),
}

impl Error {
    /// Stable machine-readable name, used in CLI reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::MalformedToken(_) => "malformed-token",
            Error::InvalidRank(_, _) => "invalid-rank",
            Error::NotACartanMatrix(_) => "not-a-cartan-matrix",
            Error::NotConnected => "not-connected",
            Error::RankMismatch { .. } => "rank-mismatch",
            Error::IndexOutOfRange(_, _) => "index-out-of-range",
            Error::GroupTooLarge { .. } => "group-too-large",
            Error::NotDominant => "not-dominant",
            Error::NotInLattice => "not-in-lattice",
            Error::BadLattice(_) => "bad-lattice",
            Error::NegativeTag => "negative-tag",
            Error::ModelMismatch => "model-mismatch",
            Error::ComponentMissesI(_) => "component-misses-I",
            Error::RankTooLarge(_, _) => "rank-too-large",
        }
    }
}
