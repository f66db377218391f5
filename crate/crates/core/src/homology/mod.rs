//! The standard complex of a rack with module coefficients; rack and quandle
//! homology and cohomology, derivations and `Ext`, with brute-force oracles.

mod basis;
mod complex;
mod groups;
mod oracle;
mod sparse;

pub use basis::{enumerate_basis, BasisTuple, Direction, Theory};
pub use complex::{boundary_homology, coboundary, complex, faces, ChainComplexZ, ChainGroup, Face, FaceMap};
pub use groups::{
    cohomology, derivations, ext_group, first_cohomology, homology, homology_groups, principal_derivations,
    z_independence_report, DegreeGroup, HomologyResult, ZIndependence, ZReport,
};
pub use oracle::{oracle_factor_sets, oracle_mod_p_ranks, oracle_trivial_boundary, RankRow, RankTable};
pub use sparse::SparseMatrix;

use crate::abgroup::AbError;
use crate::rmod::{ModuleError, Variance};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum HomologyError {
    #[error("expected a {expected} module, found a {found} module")]
    Variance { expected: Variance, found: Variance },
    #[error("the rack is not a quandle")]
    NotQuandle,
    #[error("the module does not satisfy the quandle condition")]
    NotQuandleModule,
    #[error("base point {0} is not an element of the rack")]
    BadBase(usize),
    #[error("boundary composed with boundary is nonzero at degree {degree}")]
    NotComplex { degree: usize },
    #[error("degenerate tuple {tuple:?} in degree {degree} has boundary outside the degenerate span")]
    QuotientNotWellDefined { degree: usize, tuple: Vec<usize> },
    #[error("the oracle needs free coefficient groups")]
    NotFree,
    #[error(transparent)]
    Group(#[from] AbError),
    #[error(transparent)]
    Module(#[from] ModuleError),
}
