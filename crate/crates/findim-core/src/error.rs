//! Error type shared by all modules of the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two vectors (or a vector and an ambient context) disagree on length.
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    /// A nonzero vector was required.
    #[error("zero vector where a nonzero one is required")]
    ZeroVector,

    #[error("variable index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    /// Exponent vectors of polynomial derivations must be componentwise >= 0.
    #[error("exponent vector must be componentwise non-negative")]
    NegativeExponent,

    /// A type I generator x^a d_i must not mention its own variable: a_i = 0.
    #[error("type I exponent vector must vanish at its own variable")]
    ExponentAtOwnVariable,

    #[error("generator {index} is not of type I")]
    NotTypeI { index: usize },

    #[error("generator {index} is not of type II")]
    NotTypeII { index: usize },

    /// Orientation tests are only defined for non-proportional coefficient vectors.
    #[error(
        "coefficient vectors are proportional; the orientation test needs a non-proportional pair"
    )]
    ProportionalCoefficients,

    /// ad-power order must be at least 1.
    #[error("ad-power order must be at least 1")]
    AdPowerOrder,

    /// Closure caps must admit the generators themselves.
    #[error("weight cap {max_weight} is below the weight of a generator")]
    WeightCapBelowGenerators { max_weight: u32 },

    #[error("element cap {max_elements} is below the generator count {generators}")]
    ElementCapBelowGenerators {
        max_elements: usize,
        generators: usize,
    },

    /// Structure constants, series data and the filiform test need a closed result.
    #[error("operation needs a closed result, not a cap-exceeded one")]
    NotClosed,

    /// A bracket of basis elements failed to reduce against a supposedly closed basis.
    #[error("internal saturation check failed")]
    SaturationFailed,

    #[error("model filiform test needs dimension >= 3, got {dim}")]
    FiliformDimension { dim: usize },

    /// Two-generator hypothesis: the second coefficient vector must annihilate
    /// the first degree.
    #[error("two-generator hypothesis failed: <beta, q> must vanish")]
    SecondPairingNonzero,

    /// Two-generator hypothesis: no r >= 0 annihilates the pair.
    #[error("two-generator hypothesis failed: no annihilating exponent r exists")]
    NoAnnihilatingExponent,

    /// The two generators span a line; the two-generator description assumes
    /// they are independent.
    #[error("two-generator input degenerate: the generators are proportional")]
    ProportionalGenerators,

    /// An exponent produced by the theory does not fit a machine word, so the
    /// requested explicit object cannot be materialized.
    #[error("annihilating exponent too large to enumerate a basis")]
    ExponentTooLarge,
}
