//! Exact Schubert calculus on complete flag varieties of types A–D and G2,
//! with the Belkale–Kumar deformed product and an exhaustive checker for
//! its multiplicity-one property.
//!
//! The crate is `no_std` and needs only `alloc`. IO, caching and the
//! command-line front end live in the `bkmult` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bk;
pub mod error;
pub mod fibration;
pub mod inversion;
pub mod poly;
pub mod root_system;
pub mod schubert;
pub mod subset;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use root_system::{Family, Rational, RootSystem, SignedRoot, SystemId, Weight};
pub use subset::RootSubset;
pub use weyl::{ReducedWord, WeylElement, WeylGroup, DEFAULT_GROUP_CAP};
