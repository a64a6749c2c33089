use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown Lie family `{0}`")]
    UnknownFamily(String),
    #[error("rank {rank} is outside the classification for family {family}")]
    RankOutOfRange { family: char, rank: usize },
    #[error("invalid group parameters: {0}")]
    InvalidParameters(String),
    #[error("cocharacter lattice does not contain the coroot lattice: {0}")]
    LatticeMissingCoroots(String),
    #[error("cocharacter lattice has rank {got}, torus has rank {expected}")]
    LatticeRank { got: usize, expected: usize },
    #[error("dimension mismatch: expected {expected} coordinates, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("{0} is not in the character lattice of this group")]
    WeightNotInLattice(String),
    #[error("{0} is not in the cocharacter lattice of this group")]
    CocharNotInLattice(String),
    #[error("highest weight {0} is not orthogonal")]
    NotOrthogonal(String),
    #[error("highest weight {0} does not annihilate the connected center")]
    CentralCharacter(String),
    #[error("operation requires a simple Lie algebra: {0}")]
    NotSimple(String),
    #[error("integrality violation: {0}")]
    Integrality(String),
    #[error("dimension guard exceeded: {dim} > {guard}")]
    GuardExceeded { dim: String, guard: u64 },
    #[error("Weyl group order {order} exceeds bound {bound}")]
    WeylGroupTooLarge { order: String, bound: u64 },
    #[error("cocharacter {0} is not regular")]
    NotRegular(String),
    #[error("representation does not descend: {0}")]
    DoesNotDescend(String),
    #[error("generator list is empty (trivial fundamental group)")]
    EmptyGenerators,
    #[error("so(V) is not simple for dim V = {0}")]
    OrthogonalNotSimple(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
