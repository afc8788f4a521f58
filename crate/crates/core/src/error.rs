use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {index} out of range for text of length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("permutation rank table is not a bijection: rank {rank} assigned twice")]
    InvalidPermutation { rank: u8 },

    #[error("invalid NSS array at position {position}: {reason}")]
    InvalidNss { position: usize, reason: &'static str },

    #[error("oracle input of length {len} exceeds the cap of {cap}")]
    OracleInputTooLarge { len: usize, cap: usize },

    #[error("generated output of size {requested} exceeds the cap of {cap}")]
    GeneratorTooLarge { requested: u128, cap: usize },

    #[error("invalid generator parameter: {0}")]
    InvalidParameter(&'static str),
}
