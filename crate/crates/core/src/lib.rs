#![cfg_attr(not(test), no_std)]

//! Goldman bracket and Turaev cobracket on reduced cyclic words.
//!
//! The crate works over the free group alphabet `a1, ..., an` together with
//! the inverse letters `A1, ..., An`.  Fixing a surface symbol (a reduced
//! cyclic word using every letter exactly once) turns the free module on
//! non-empty reduced cyclic words into an involutive Lie bialgebra; the
//! bracket and cobracket are computed by enumerating linked pairs of subword
//! occurrences and cutting or merging the word(s) at the pair.
//!
//! Everything is exact integer (or rational) arithmetic; all operations are
//! pure and deterministic.

extern crate alloc;

pub mod axioms;
pub mod bialgebra;
pub mod error;
pub mod linked_pairs;
pub mod orientation;
pub mod words;

pub use error::Error;
pub use words::{Alphabet, CyclicWord, Letter, LinearWord, Occurrence};

pub use bialgebra::{FormalSum, Tensor2, Tensor3};
pub use linked_pairs::{LinkedPair, PairKind};
pub use orientation::{Orientation, SurfaceSymbol};
