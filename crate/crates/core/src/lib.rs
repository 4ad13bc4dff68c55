//! Topology types of two-parameter families of real plane algebraic curves.

pub mod cli;
pub mod curvetopo;
pub mod elim;
pub mod error;
pub mod family1d;
pub mod family2d;
pub mod poly;
pub mod realalg;
pub mod upoly;

pub use error::{Error, Result};
pub use poly::{MPoly, Rational, Var};
