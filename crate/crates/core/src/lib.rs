//! Finite-dimensional Hopf algebras, partial actions and coactions, their
//! globalizations, smash products and duality isomorphisms, all in exact
//! arithmetic over ℚ or a prime field.

pub mod algcore;
pub mod bundle;
pub mod catalog;
pub mod duality;
pub mod error;
pub mod examples;
pub mod exactlin;
pub mod globalize;
pub mod partial;
pub mod report;

pub use error::{Error, Result};
pub use report::{Check, VerificationReport};
