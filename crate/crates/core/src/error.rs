use thiserror::Error;

/// Everything that can go wrong across the library.
///
/// Messages name the violated condition directly; the CLI prints them verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be positive and non-increasing, got {0:?}")]
    NotAPartition(Vec<u64>),
    #[error("({row}, {col}) is not a cell")]
    NotACell { row: usize, col: u64 },
    #[error("t must be at least 1, got {0}")]
    NonPositiveModulus(u64),
    #[error("every modulus must be at least 2, got {0}")]
    ModulusTooSmall(u64),
    #[error("the list of moduli must not be empty")]
    EmptyModuli,
    #[error("a must be at least 2, got {0}")]
    AbacusTooSmall(usize),
    #[error("not an {a}-core")]
    NotACore { a: usize },
    #[error("coordinates must have length a = {expected}, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("c-coordinates must sum to 0, got {0}")]
    NonZeroSum(i64),
    #[error("x-coordinates must sum to 0, got {0}/(2a)")]
    NonZeroXSum(i64),
    #[error("x_{index} has the wrong fractional part for a = {a}")]
    BadFractionalPart { index: usize, a: usize },
    #[error("{a} and {b} must be coprime")]
    NotCoprime { a: u64, b: u64 },
    #[error("{b} must not be a multiple of a = {a}")]
    MultipleOfA { a: u64, b: u64 },
    #[error("z-coordinates must sum to b0 = {b0}, got {got}")]
    WrongZSum { b0: u64, got: u64 },
    #[error("a = {a} must divide sum of m*z_m = {weighted}")]
    ZNotDivisible { a: u64, weighted: u64 },
    #[error("x is not a {b0}-core point: z_{index} would be negative")]
    NegativeZ { b0: u64, index: usize },
    #[error("predicate is not stable under rotation at {0:?}")]
    NotRotationStable(Vec<u64>),
    #[error("weight is not invariant under rotation at {0:?}")]
    NotRotationInvariant(Vec<u64>),
    #[error("a must divide {what} (a = {a}, {what} = {value})")]
    NotDivisible { a: u64, what: &'static str, value: u64 },
    #[error("a must satisfy 3 < a, got {0}")]
    ATooSmall(u64),
    #[error("a must be less than b, got a = {a}, b = {b}")]
    ANotLessThanB { a: u64, b: u64 },
    #[error("c must satisfy c > ab/2 - 2b, got a = {a}, b = {b}, c = {c}")]
    CTooSmall { a: u64, b: u64, c: u64 },
    #[error("{name} must be at least {min}, got {value}")]
    BelowMinimum { name: &'static str, min: u64, value: u64 },
    #[error("second largest part must satisfy 1 <= y <= x, got x = {x}, y = {y}")]
    SecondPartOutOfRange { x: u64, y: u64 },
    #[error("s must be odd, got {0}")]
    EvenS(u64),
    #[error("no coprime pair among the moduli and no explicit budget: possibly infinite family")]
    PossiblyInfinite,
    #[error("enumeration bound {bound} for {params} exceeds the ceiling {ceiling}")]
    BudgetExceeded { params: String, bound: u64, ceiling: u64 },
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
