use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    DegreeZero,
    #[error("field of order {ell}^{degree} exceeds the supported table size")]
    FieldTooLarge { ell: u32, degree: u32 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("no certificate found after {0} random algebra elements")]
    RandomBudgetExceeded(usize),
    #[error("matrix is not unipotent")]
    NotUnipotent,
    #[error("characteristic {ell} is smaller than the dimension {n}")]
    CharTooSmall { ell: u32, n: usize },
    #[error("group closure exceeded the cap of {0} elements")]
    ClosureOverflow(usize),
    #[error("Lie algebra basis is empty")]
    EmptyAlgebra,
    #[error("highest weight is not dominant")]
    NotDominant,
    #[error("value out of range: {0}")]
    OutOfRange(String),
    #[error("{d} does not divide the level {level}")]
    NotDivisor { d: u32, level: u32 },
    #[error("character is not a level-raising of a lower-level character")]
    NotCompatible,
    #[error("generator order is divisible by the characteristic")]
    OrderDivisibleByEll,
    #[error("characteristic divides the index {0}")]
    CharDividesIndex(usize),
    #[error("module is not semisimple")]
    NotSemisimple,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("module is not absolutely irreducible")]
    NotIrreducible,
    #[error("unknown predicate `{0}`")]
    UnknownPredicate(String),
    #[error("the group is not defined over a prime field")]
    NotPrimeField,
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}

impl Error {
    /// Errors caused by exhausting a configured cap or budget rather than by bad input.
    pub fn is_resource(&self) -> bool {
        matches!(
            self,
            Error::ClosureOverflow(_) | Error::RandomBudgetExceeded(_) | Error::FieldTooLarge { .. }
        )
    }

    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "NotPrime",
            Error::DegreeZero => "DegreeZero",
            Error::FieldTooLarge { .. } => "FieldTooLarge",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::FieldMismatch(_) => "FieldMismatch",
            Error::NotInvertible => "NotInvertible",
            Error::RandomBudgetExceeded(_) => "RandomBudgetExceeded",
            Error::NotUnipotent => "NotUnipotent",
            Error::CharTooSmall { .. } => "CharTooSmall",
            Error::ClosureOverflow(_) => "ClosureOverflow",
            Error::EmptyAlgebra => "EmptyAlgebra",
            Error::NotDominant => "NotDominant",
            Error::OutOfRange(_) => "OutOfRange",
            Error::NotDivisor { .. } => "NotDivisor",
            Error::NotCompatible => "NotCompatible",
            Error::OrderDivisibleByEll => "OrderDivisibleByEll",
            Error::CharDividesIndex(_) => "CharDividesIndex",
            Error::NotSemisimple => "NotSemisimple",
            Error::NotNormal => "NotNormal",
            Error::NotIrreducible => "NotIrreducible",
            Error::UnknownPredicate(_) => "UnknownPredicate",
            Error::NotPrimeField => "NotPrimeField",
            Error::InvalidModule(_) => "InvalidModule",
            Error::InvalidInput(_) => "InvalidInput",
            Error::InvariantViolation(_) => "InvariantViolation",
        }
    }
}
