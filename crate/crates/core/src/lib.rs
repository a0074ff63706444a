//! Orbit stratification of the wonderful compactification of an adjoint
//! semisimple group, and the degenerations of the diagonal in `G/P x G/P`,
//! computed through Weyl group combinatorics.
//!
//! The pipeline is `rootsys` (Dynkin type to root system) -> `weyl` (group
//! enumeration and Bruhat order) -> `cosets` (parabolic quotients) ->
//! `wonderful` / `degen` (orbits and fiber components), with `projgor`
//! giving closed forms for `P^n` and `oracle` holding brute-force routes
//! used to cross-check everything else.

pub mod cli;
pub mod cosets;
pub mod degen;
pub mod error;
pub mod oracle;
pub mod projgor;
pub mod rootsys;
pub mod sweep;
pub mod weyl;
pub mod wonderful;

pub use error::{Error, Result};
pub use rootsys::{DynkinType, Root, RootSystem, SimpleSubset};
pub use weyl::{ElementId, WeylGroup};
