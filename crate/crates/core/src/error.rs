use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("field degree {0} is outside 1..=8")]
    UnsupportedDegree(u32),
    #[error("{modulus:#b} is not an irreducible polynomial of degree {degree}")]
    NotIrreducible { degree: u32, modulus: u16 },
    #[error("bits {bits:#x} do not encode an element of GF(2^{degree})")]
    ElementOutOfRange { bits: u8, degree: u32 },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,

    #[error("space of dimension 2*{m} over GF(2^{f}) does not fit a 64-bit packed vector")]
    SpaceTooLarge { m: usize, f: u32 },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("polarization of the quadratic form is degenerate")]
    DegeneratePolarization,
    #[error("quadratic form does not polarize to the standard alternating form")]
    NonStandardPolarization,
    #[error("partial basis cannot be extended to a hyperbolic basis: {0}")]
    NotExtendable(String),
    #[error("Witt extension precondition violated: {0}")]
    WittPrecondition(String),
    #[error("zero vector where a nonzero vector is required")]
    ZeroVector,
    #[error("vector is singular for the quadratic form")]
    SingularVector,
    #[error("matrix is singular")]
    SingularMatrix,

    #[error("{what} needs {needed} items, above the configured bound {bound}")]
    BoundExceeded { what: String, needed: u128, bound: u128 },
    #[error("generation shortfall for {label}: closure has order {achieved}, expected {claimed}")]
    GenerationShortfall { label: String, achieved: u128, claimed: u128 },
    #[error("group order does not fit in 128 bits")]
    OrderOverflow,
    #[error("invalid generator set request: {0}")]
    InvalidLabel(String),
    #[error("group element moves a point outside the domain")]
    DomainNotClosed,

    #[error("graph is not strongly regular: {0}")]
    NotStronglyRegular(String),
    #[error("degenerate case: {0}")]
    Degenerate(String),
    #[error("eigenvalue multiplicities are not integral: {0}")]
    NonIntegralMultiplicity(String),
}
