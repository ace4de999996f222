use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("generator {index} is not a permutation of 0..{degree}")]
    NotAPermutation { index: usize, degree: usize },

    #[error("group closure exceeds the size cap of {cap} elements")]
    SizeLimit { cap: usize },

    #[error("generator search exhausted its budget of {budget} tuples; minimal generator count is at least {lower_bound}")]
    SearchBudget { budget: u64, lower_bound: usize },

    #[error("enumeration budget exceeded: {needed} candidates requested, budget {budget}")]
    EnumerationBudget { needed: u128, budget: u128 },

    #[error("spinning cap exceeded: {size} vectors, cap {cap}")]
    SpinCap { size: u128, cap: u128 },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("matrix is not invertible")]
    Singular,

    #[error("generator assignment does not define a representation: {0}")]
    NotARepresentation(String),

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("subgroup is not abelian")]
    NotAbelian,

    #[error("not an elementary abelian group: {0}")]
    NotElementaryAbelian(String),

    #[error("group is not solvable")]
    NotSolvable,

    #[error("map is not a group homomorphism: {0}")]
    NotAHomomorphism(String),

    #[error("cochain is not a normalized cocycle")]
    NotACocycle,

    #[error("module and group do not match")]
    GroupMismatch,

    #[error("extension is split")]
    SplitExtension,

    #[error("extension is not split")]
    NonSplitExtension,

    #[error("map is not H-equivariant")]
    NotEquivariant,

    #[error("module is reducible")]
    Reducible,

    #[error("module has dimension 0")]
    ZeroModule,

    #[error("order {order} is divisible by the characteristic {p}")]
    DivisibleByCharacteristic { order: usize, p: u64 },

    #[error("coefficient prime l = {0} equals the characteristic")]
    CoefficientIsCharacteristic(u64),

    #[error("group is not solvable; the realizability claim is only proven algebraically for solvable groups (pass the non-solvable override to accept the transcendental statement)")]
    OutOfScope,

    #[error("tameness was not asserted; no algebraic criterion is available")]
    TamenessNotAsserted,

    #[error("dimension formula produced a negative value {0}")]
    NegativeDimension(i64),

    #[error("Euler characteristic total {0} is not an integer")]
    NonIntegral(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
