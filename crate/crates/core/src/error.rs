use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("p = {0} is not congruent to 3 mod 4, so j^2 = -1 is a residue and GL(p) is undefined")]
    RequiresComplexPrime(u64),
    #[error("operands live over different moduli ({left} vs {right})")]
    ModulusMismatch { left: u64, right: u64 },
    #[error("operands live in different extension fields")]
    FieldMismatch,
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("argument must be nonzero")]
    ZeroArgument,
    #[error("{0} is a quadratic non-residue")]
    NotAResidue(u64),
    #[error("polynomial is not irreducible over GF({0})")]
    Reducible(u64),
    #[error("field size exceeds 64 bits")]
    TooLarge,
    #[error("length {n} does not divide the group order {group_order}")]
    InvalidLength { n: u64, group_order: u64 },
    #[error("expected {expected} components, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("element has order {actual}, expected {expected}")]
    OrderMismatch { expected: u64, actual: u64 },
    #[error("component {0} does not lie in the input alphabet GF(q)")]
    NotInAlphabet(usize),
    #[error("element is not in the real subfield")]
    NotReal,
    #[error("{0} must be nonempty")]
    Empty(&'static str),
    #[error("unsupported sequence: {0}")]
    UnsupportedSequence(&'static str),
    #[error("spectrum diverges at theta = {0}")]
    DivergentSpectrum(usize),
    #[error("inverse transform has a nonzero imaginary part at n = {0}")]
    NonRealResult(usize),
    #[error("spectrum has {got} entries, expected 2(p+1) = {expected}")]
    SpectrumLength { expected: usize, got: usize },
    #[error("transform length {n} is shorter than the linear convolution length {needed}")]
    PlanTooShort { needed: usize, n: usize },
}

impl Error {
    /// Stable machine-readable identifier, used in the CLI's error JSON.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotOddPrime(_) => "not_odd_prime",
            Error::RequiresComplexPrime(_) => "requires_complex_prime",
            Error::ModulusMismatch { .. } => "modulus_mismatch",
            Error::FieldMismatch => "field_mismatch",
            Error::ZeroInverse => "zero_inverse",
            Error::ZeroArgument => "zero_argument",
            Error::NotAResidue(_) => "not_a_residue",
            Error::Reducible(_) => "reducible",
            Error::TooLarge => "too_large",
            Error::InvalidLength { .. } => "invalid_length",
            Error::LengthMismatch { .. } => "length_mismatch",
            Error::OrderMismatch { .. } => "order_mismatch",
            Error::NotInAlphabet(_) => "not_in_alphabet",
            Error::NotReal => "not_real",
            Error::Empty(_) => "empty",
            Error::UnsupportedSequence(_) => "unsupported_sequence",
            Error::DivergentSpectrum(_) => "divergent_spectrum",
            Error::NonRealResult(_) => "non_real_result",
            Error::SpectrumLength { .. } => "spectrum_length",
            Error::PlanTooShort { .. } => "plan_too_short",
        }
    }
}
