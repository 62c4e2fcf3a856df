//! Exact representation theory of the category of finite surjections.
//!
//! Objects are `0..=n`, morphisms `r -> k` are surjections, and simple
//! modules of its rational algebra are labelled by partitions of `k <= n`.
//! The crate computes Cartan matrices (by characters, by box-move rules
//! for nearby levels, or by building the algebra), the quiver, minimal
//! projective resolutions and the global dimension, all over `Q`.
//!
//! The algebra oracle in [`oracle`] certifies every structural fact it
//! relies on (idempotents, radical, associativity) when it is built.

pub mod cartan;
pub mod characters;
pub mod cli;
pub mod error;
pub mod group_algebra;
pub mod linalg;
pub mod oracle;
pub mod partitions;
pub mod perm;
pub mod quiver;
pub mod surjections;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
pub use partitions::Partition;
