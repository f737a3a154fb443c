use thiserror::Error;

/// Every failure mode of the library. Verification outcomes are reported
/// through [`crate::report::Report`] rather than through this type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid conductor {0}")]
    InvalidConductor(i64),
    #[error("not a root of unity: {0}")]
    NotRootOfUnity(String),
    #[error("inconsistent linear system")]
    Inconsistent,
    #[error("cannot parse scalar: {0}")]
    ScalarParse(String),
    #[error("zero root has no coroot")]
    ZeroRoot,
    #[error("unsupported root system type {0}")]
    UnsupportedType(String),
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("invalid quantum matrix: {0}")]
    InvalidQuantumMatrix(String),
    #[error("parameter is not a root of unity: {0}")]
    NonRootOfUnityParameter(String),
    #[error("bad semilattice: {0}")]
    BadSemilattice(String),
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error("element is zero")]
    ZeroElement,
    #[error("anti-involution kind incompatible with algebra: {0}")]
    IncompatibleKind(String),
    #[error("operator kinds incompatible with the algebra variety: {0}")]
    IncompatibleVariety(String),
    #[error("invalid structure-constant table: {0}")]
    InvalidTable(String),
    #[error("Lie algebra is not closed under transpose")]
    NotTransposeClosed,
    #[error("coordinate algebra is not associative")]
    NotAssociative,
    #[error("rank too small: {0}")]
    RankTooSmall(String),
    #[error("coordinate algebra is not alternative")]
    NotAlternative,
    #[error("coordinate algebra is not a Jordan torus")]
    NotJordan,
    #[error("bad Peirce data: {0}")]
    BadPeirce(String),
    #[error("octonion Hermitian matrices require size 3")]
    OctonionRankNot3,
    #[error("bad tau list: {0}")]
    BadTauList(String),
    #[error("automorphisms do not commute")]
    NonCommutingAutomorphisms,
    #[error("not diagonalizable: {0}")]
    NotDiagonalizable(String),
    #[error("elements belong to different Lie tori")]
    TorusMismatch,
    #[error("missing anti-involution: {0}")]
    MissingAntiInvolution(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("degree {0} is not in the centroid support")]
    UnsupportedCentroidDegree(String),
    #[error("derivation subalgebra is not permissible: {0}")]
    NotPermissible(String),
    #[error("invalid affine cocycle: {0}")]
    InvalidCocycle(String),
    #[error("map is not a pre-Chevalley involution: {0}")]
    NotPreChevalley(String),
    #[error("invalid input: {0}")]
    Spec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
