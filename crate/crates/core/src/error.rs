use thiserror::Error;

/// Errors produced by group construction and the anyon pipeline.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("malformed cycle notation {text:?}: {reason}")]
    Parse { text: String, reason: String },

    #[error("generators must share a common degree (found {expected} and {found})")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("at least one generator is required")]
    NoGenerators,

    #[error("group order exceeds the cap of {cap} elements")]
    OrderCapExceeded { cap: usize },

    #[error("unsupported group family {0:?}")]
    UnsupportedFamily(String),

    #[error("invalid group parameter: {0}")]
    InvalidParameter(String),

    #[error("permutation {0} is not an element of the group")]
    NotInGroup(String),

    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: usize, limit: usize },

    #[error("eigenvalues failed to separate after {attempts} attempts")]
    EigenSeparation { attempts: usize },

    #[error("irreducible representation decomposition failed after {attempts} attempts")]
    Decomposition { attempts: usize },

    #[error("character degree {value} is not within tolerance of an integer")]
    NonIntegralDegree { value: f64 },

    #[error("spin of particle {particle} cannot be reconstructed as a rational (phase {phase})")]
    SpinReconstruction { particle: String, phase: f64 },

    #[error("S^2 does not round to a permutation matrix (row {row})")]
    ConjugationNotPermutation { row: usize },

    #[error("fusion coefficient N[{a}][{b}][{c}] = {value} is not a nonnegative integer")]
    NonIntegralFusion { a: usize, b: usize, c: usize, value: f64 },

    #[error("vacuum-row S entry for particle {0} is zero")]
    ZeroDenominator(usize),

    #[error("charge conjugation sends {particle} to {from_s}, fusion sends it to {from_fusion:?}")]
    AntiparticleMismatch {
        particle: usize,
        from_s: usize,
        from_fusion: Option<usize>,
    },

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("moduli differ: {0} vs {1}")]
    ModulusMismatch(u32, u32),

    #[error("argument out of domain: {0}")]
    Domain(String),

    #[error("search space exceeds the cap: {0}")]
    SearchCap(String),
}

pub type Result<T> = std::result::Result<T, Error>;
