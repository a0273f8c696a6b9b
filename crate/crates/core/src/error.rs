use thiserror::Error;

/// Errors raised by the library.
///
/// `Domain` errors mean the input violates a precondition of the operation
/// (a periodic multisegment handed to a crystal operator, a multicharge
/// outside the FLOTW range, ...). The CLI maps them to exit code 1.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("multisegment {0} is not aperiodic")]
    NotAperiodic(String),
    #[error("invalid multicharge: {0}")]
    InvalidMulticharge(String),
    #[error("invalid multipartition: {0}")]
    InvalidPartition(String),
    #[error("invalid multisegment: {0}")]
    InvalidMultisegment(String),
    #[error("multicharge {0} is not in V_l (need v_0 <= ... <= v_(l-1) < v_0 + e)")]
    NotInVl(String),
    #[error("{0} is not a FLOTW multipartition for multicharge {1}")]
    NotFlotw(String, String),
    #[error("nodes {0} and {1} have different residues")]
    ResidueMismatch(String, String),
    #[error("element not in the highest-weight component (descent stopped at {0})")]
    NotInComponent(String),
    #[error("{0} is not a module over this cyclotomic quotient")]
    NotCyclotomic(String),
    #[error("realizations have different highest weights: {0} vs {1}")]
    WeightMismatch(String, String),
    #[error("element does not belong to realization {0}")]
    WrongElement(String),
    #[error("rank {rank} exceeds the bound {bound}")]
    RankBound { rank: usize, bound: usize },
    #[error("total dimension {0} exceeds the desk-scale limit of {1}")]
    DimensionLimit(usize, usize),
    #[error("inconsistent rank table: {0}")]
    InconsistentRanks(String),
    #[error("Hall polynomial did not stabilise within {0} primes")]
    Interpolation(usize),
    #[error("canonical basis: {0}")]
    CanonicalBasis(String),
    #[error("cannot parse {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
