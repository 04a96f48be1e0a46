//! Construction and analysis of neutral points-based voting rules whose
//! outcomes are cyclic orders (seatings around a table), in exact arithmetic.

pub mod analysis;
pub mod ballots;
pub mod cli;
pub mod cyclic_orders;
pub mod error;
pub mod linalg;
pub mod rational;
pub mod representation;
pub mod scoring;
pub mod symmetric_group;

pub use error::{Error, Result};
pub use rational::Q;
