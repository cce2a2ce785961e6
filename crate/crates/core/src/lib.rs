//! Palindromic structure of two-dimensional words.
//!
//! The crate covers 2D palindromes (words equal to their 180° rotation) and
//! HV-palindromes (every row and column a palindrome): predicates, the HV
//! structure decomposition, factor enumeration, conjugacy classes under
//! cyclic rotations, closed-form counts and bounds, extremal constructions,
//! and an exhaustive search harness.

pub mod bounds;
pub mod cli;
pub mod conjugacy;
pub mod error;
pub mod palindromes;
pub mod search;
pub mod word2d;

pub use error::{Error, Result};
pub use palindromes::FactorKind;
pub use word2d::{Axis, Symbol, Word2D};
