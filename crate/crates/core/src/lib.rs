//! Algorithms for surface braid groups given by finite presentations.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the
//! command-line front end and anything touching the filesystem live in the
//! `braidforge` crate.
#![no_std]

extern crate alloc;

pub mod braidlab;
pub mod enumeration;
pub mod intlinalg;
pub mod oracles;
pub mod perm;
pub mod presentations;
pub mod words;

pub use intlinalg::{abelian_invariants, rational_rank, smith_normal_form, AbelianInvariants, IntMatrix, SmithForm};
pub use words::{
    commutator, format_word, parse_word, parse_word_any, reduce, Alphabet, GenSym, SymKind, Word, WordError,
};
