//! Computational engine for the parafermion planar para algebra at circle
//! parameter √N.
//!
//! The crate is `no_std` and only needs `alloc`. Everything runs over
//! [`Scalar`], which is an exact element of a cyclotomic field or a
//! double-precision complex number depending on the [`Context`].

#![no_std]

extern crate alloc;

pub mod braid;
pub mod check;
pub mod clifford;
pub mod index;
pub mod operator;
pub mod pauli;
pub mod pf;
pub mod rp;
pub mod scalar;
pub mod suite;
pub mod tangle;

pub use operator::DenseOperator;
pub use pf::{Grade, Lifted, PfElement};
pub use scalar::{Context, Mode, Scalar};

use alloc::string::String;
use core::fmt;

#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    InvalidParameter(String),
    Dimension(String),
    Arithmetic(String),
    InvalidLift(String),
    InvalidCoupling(String),
    Parse { line: usize, column: usize, message: String },
    Unrepresentable(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameter(m) => write!(f, "invalid parameter: {}", m),
            Error::Dimension(m) => write!(f, "dimension error: {}", m),
            Error::Arithmetic(m) => write!(f, "arithmetic error: {}", m),
            Error::InvalidLift(m) => write!(f, "invalid lift: {}", m),
            Error::InvalidCoupling(m) => write!(f, "invalid coupling: {}", m),
            Error::Parse { line, column, message } => write!(f, "{}:{}: {}", line, column, message),
            Error::Unrepresentable(m) => write!(f, "unrepresentable: {}", m),
        }
    }
}

impl core::error::Error for Error {}
