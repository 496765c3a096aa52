use num_bigint::BigInt;
use thiserror::Error;

use crate::rational::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("endpoint {value} lies outside [{min}, {max}]")]
    Domain {
        value: Rational,
        min: Rational,
        max: Rational,
    },

    #[error("malformed interval [{lo}, {hi}): lower endpoint must be below upper endpoint")]
    MalformedInterval { lo: Rational, hi: Rational },

    #[error("negative array half-length {0}")]
    NegativeLength(Rational),

    #[error("genie expansion undefined: |{0}| has zero measure")]
    DegenerateExpansion(&'static str),

    #[error(
        "atom [{lo}, {hi}) of {space} has non-integral dimension {dimension}; \
         rescale array lengths by {suggested_scale}"
    )]
    Quantization {
        space: &'static str,
        lo: Rational,
        hi: Rational,
        dimension: Rational,
        suggested_scale: BigInt,
    },

    #[error("invalid rank tolerance {0}: must be positive and finite")]
    RankTolerance(f64),
}
