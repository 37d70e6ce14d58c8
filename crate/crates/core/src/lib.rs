//! Linear codes in the b-symbol metric, over exact finite-field arithmetic.
//!
//! Everything here is exact integer / table arithmetic; there is no floating
//! point anywhere. The crate is `no_std` (with `alloc`) so the algorithmic
//! layer stays free of IO; file formats and the CLI live in the companion
//! `bsymbol-cli` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod bsymbol;
pub mod codes;
pub mod construct;
mod error;
pub mod galois;
mod linalg;
pub mod rng;

pub use error::Error;

/// Default cap on field order p^r.
pub const FIELD_ORDER_CAP: u64 = 1 << 20;

/// Default cap on q^k for full codeword enumeration.
pub const ENUMERATION_CAP: u64 = 1 << 22;
