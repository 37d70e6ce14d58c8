//! IO, file formats, parallel enumeration driver, and verification suites
//! for the b-symbol code toolkit. The exact arithmetic lives in
//! `bsymbol-core`; this crate only moves bytes and threads.

pub mod formats;
pub mod parallel;
pub mod suites;
