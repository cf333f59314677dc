//! Exact combinatorics and arithmetic of skein-TQFT representations on
//! trivalent graphs: admissible colorings and conformal-block dimensions,
//! quantum integers in the 2p-th cyclotomic field, Dehn-twist eigenvalue
//! exponents and projective orders, and Hermitian-form signatures.
//!
//! Everything is computed exactly: dimensions by backtracking enumeration
//! over dual graphs of pants decompositions, cyclotomic numbers as reduced
//! polynomials over exact rationals, and signs of real cyclotomic numbers
//! by rational interval arithmetic after a symbolic nonzero check. The
//! closed-form lemma values (`delta`, `genus0_nonzero`, `dim_genus1_pair`,
//! `predicted_order`) are claims that can be checked against the
//! enumeration oracle; the CLI crate wires those sweeps up.
//!
//! The crate is `no_std` (with `alloc`): it performs no IO and uses no
//! floating point.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod blocks;
pub mod cyclo;
pub mod error;
pub mod form;
pub mod graph;
pub mod level;
pub mod twist;

pub use error::Error;
pub use level::{Color, LevelSpec, Parity};

/// Convenience alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;
