//! Exact arithmetic for Simon Newcomb numbers and the Segre embeddings
//! `P^{b_1} x ... x P^{b_n}`.
//!
//! The h-vector of the Segre ring `R_[b]` coincides with the multiset
//! Eulerian polynomial of the specification `[b]`. This crate computes it
//! five independent ways ([`newcomb`]), together with the supporting
//! Hilbert-series machinery ([`series`]), the sorted-monomial Gröbner basis
//! and initial complex ([`toric`]), and the closed-form quadratic strand of
//! the Betti diagram ([`betti`]).
//!
//! Everything is exact (`BigUint` / `BigRational`); nothing here touches
//! floating point or performs IO, so the crate is `no_std` with `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod betti;
pub mod combinatorics;
mod error;
pub mod newcomb;
pub mod series;
pub mod toric;

pub use combinatorics::{MultisetPermutation, Spec};
pub use error::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;
