//! Twisted weak orders of Coxeter groups.
//!
//! Systems are built from Cartan data ([`system`]); elements are exact integer
//! matrices with canonical words ([`group`]); roots, inversion sets and
//! translations live in [`roots`]. Biclosed sets of positive roots, finite or
//! infinite, are membership oracles ([`closure::Biclosed`]) and the twisted
//! weak order they define is [`order::TwistedOrder`].

pub mod error;
mod linalg;
pub mod system;
pub mod group;
pub mod roots;
pub mod cone;
pub mod closure;
pub mod words;
pub mod order;
pub mod oracle;
pub mod selftest;
pub mod figures;
pub mod cli;

pub use closure::{parse_biclosed, Biclosed};
pub use error::{Error, Result};
pub use group::GroupElement;
pub use order::TwistedOrder;
pub use roots::Root;
pub use system::CoxeterSystem;
