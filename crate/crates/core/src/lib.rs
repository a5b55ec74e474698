//! Structure of the superextension `λ(X)` of a finite group `X`: the
//! semigroup of maximal linked systems on `X`, its minimal left ideals and
//! maximal subgroups.

pub mod error;
pub mod group;
pub mod mask;
pub mod semigroup;
pub mod setfam;
pub mod spec;
pub mod structure;
pub mod twin;

pub use error::{Error, Result};
pub use group::FiniteGroup;
pub use mask::SubsetMask;
pub use setfam::{FamilyOfSets, MlsSignature, PowerSet};
