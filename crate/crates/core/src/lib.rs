//! Crossed simplicial groups: the symmetric and braid instances, the action
//! groupoid and its nerve, operadic structure, Kan filling and the
//! equivariant cyclic bar construction.

pub mod barcx;
pub mod braid;
pub mod csg;
pub mod error;
pub mod groupoid;
pub mod kan;
pub mod operad;
pub mod random;
pub mod simplicial;
pub mod suites;
pub mod symm;
pub mod word;

pub use braid::{braids_equal, permutation_braid, BraidWord};
pub use csg::{boxplus, pad, CheckReport, CsgElement, SimplicialSection, Violation};
pub use error::{CsgError, Result};
pub use symm::Perm;
