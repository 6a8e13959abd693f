//! Invariant length functions and metrics on free groups and free monoids.
//!
//! The crate is organised around exact word arithmetic ([`words`]) and a
//! collection of length functions built on top of it: weighted word length,
//! cyclic length, monoid edit distance, the non-crossing-matching length
//! ([`length`]), Brooks counting quasimorphisms ([`quasi`]), rotation-angle
//! local lengths on balls ([`rotation`]), and the quantitative inequality
//! checks tying them together ([`analysis`]).
//!
//! Everything here is `no_std` + `alloc`; IO, CLI, and report formats live in
//! the companion `freemetric-cli` crate.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod analysis;
mod error;
mod fmath;
pub mod length;
mod limits;
pub mod quasi;
pub mod rotation;
pub mod seed;
pub mod words;

pub use error::Error;
pub use limits::Limits;
