//! Finitely generated abelian groups given by presentations, their
//! homomorphisms, and Smith normal form over the integers.

mod enumerate;
mod group;
mod hom;
mod matrix;
mod snf;
mod subquotient;

pub use enumerate::{enumerate_elements, enumerate_homs, hom_count};
pub use group::{ints, FgAbGroup, GroupRepr, Invariants, InvariantsRepr};
pub use hom::{check_hom, direct_sum, solve_integer, DirectSum, GroupHom};
pub use matrix::{BigIntRepr, IntMatrix};
pub use snf::{normalize_invariants, rank_mod_p, rank_rational, smith, snf, SmithForm, Transforms};
pub use subquotient::{homology_at, image, kernel, Subquotient};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AbError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("endpoint mismatch: {0}")]
    Endpoint(String),
    #[error("map is not well defined: relator {relator} is not sent to zero")]
    NotWellDefined { relator: usize },
    #[error("map is not an isomorphism")]
    NotIso,
    #[error("composite of consecutive maps is not zero")]
    CompositeNotZero,
    #[error("vector does not lie in the spanning lattice")]
    NotSubgroup,
    #[error("group is infinite")]
    Infinite,
    #[error("enumeration of {size} items exceeds the limit {limit}")]
    TooLarge { size: String, limit: u64 },
}
