//! Modules over racks and quandles, the wring, and (co)homology of racks
//! and quandles with coefficients in a module.

pub mod abgroup;
pub mod rack;
pub mod rmod;
pub mod wring;
pub mod homology;
