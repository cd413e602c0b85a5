//! Exhaustive computations on finite groups, finite Boolean rings and the
//! structures built from them.

pub mod caps;
pub mod corpus;
pub mod error;
pub mod exact;
pub mod algebra;
pub mod boolean;
pub mod field;
pub mod gfp;
pub mod group;
pub mod measure;
pub mod module_ring;
pub mod power;
pub mod tower;

pub use caps::Caps;
pub use error::{Error, Result};
pub use group::{FiniteGroup, GroupHom, Subgroup};
