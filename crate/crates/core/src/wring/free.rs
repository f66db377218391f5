use crate::abgroup::{direct_sum, DirectSum};
use crate::rmod::{LeftModule, RightModule};

/// `Hom_X(F S, A) ≅ ∏_s A_{x(s)}` for a finite family of points labelled
/// by elements of the rack.
pub fn free_hom_space(labels: &[usize], a: &LeftModule) -> DirectSum {
    direct_sum(&labels.iter().map(|&x| a.group(x).clone()).collect::<Vec<_>>())
}

/// `F S ⊗_X A ≅ ⊕_s A_{x(s)}`.
pub fn free_tensor(labels: &[usize], a: &RightModule) -> DirectSum {
    direct_sum(&labels.iter().map(|&x| a.group(x).clone()).collect::<Vec<_>>())
}
