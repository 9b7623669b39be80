//! Executable finite-category models of universal arrows, extension-form
//! (Kleisli-triple) monads, and the 2-adjunction between them.
//!
//! Everything is decided by enumeration: categories carry total composition
//! tables, universal witnesses are found by exhaustive search, monad and
//! algebra laws are checked at every instance, and the classical
//! correspondences with adjunctions and monads are verified as extensional
//! round trips.

pub mod bridge;
pub mod classical;
pub mod emnd;
pub mod error;
pub mod fincat;
pub mod fixtures;
pub mod square;
pub mod uarr;

pub use error::{CheckError, Result};
