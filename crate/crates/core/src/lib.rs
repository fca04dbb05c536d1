//! Exact computations with Temperley–Lieb and Kauffman-bracket skein
//! representations of braid groups.

pub mod analysis;
pub mod arith;
pub mod cli;
pub mod linalg;
pub mod potts;
pub mod projector;
pub mod rep;
pub mod selftest;
pub mod skein;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("color {c} is not admissible at r = {r}")]
    Inadmissible { c: u64, r: u64 },
    #[error("n = {n} and c = {c} have different parity")]
    Parity { n: u64, c: u64 },
    #[error("generator index {index} out of range 1..={max}")]
    IndexOutOfRange { index: i64, max: u64 },
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("graph is not planar with the given rotation system")]
    Nonplanar,
    #[error("|lambda| = {0} is not 1")]
    NotUnitModulus(f64),
    #[error("numeric failure: {0}")]
    Numeric(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
