use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::group::FgAbGroup;
use super::matrix::IntMatrix;
use super::snf::{smith, Transforms};
use super::subquotient::kernel;
use super::AbError;

/// A homomorphism of presented groups, acting on generator coordinates:
/// column `j` of `matrix` is the image of source generator `j`.
///
/// Shapes are checked on construction. Well-definedness (relators map into
/// the target's relation lattice) is checked by [`GroupHom::new`] and
/// [`check_hom`]; [`GroupHom::raw`] skips it so invalid data can be
/// represented and diagnosed.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupHom {
    source: FgAbGroup,
    target: FgAbGroup,
    matrix: IntMatrix,
}

impl GroupHom {
    pub fn new(source: &FgAbGroup, target: &FgAbGroup, matrix: IntMatrix) -> Result<Self, AbError> {
        let h = Self::raw(source, target, matrix)?;
        check_hom(&h)?;
        Ok(h)
    }

    pub fn raw(source: &FgAbGroup, target: &FgAbGroup, matrix: IntMatrix) -> Result<Self, AbError> {
        if matrix.rows() != target.gens() || matrix.cols() != source.gens() {
            return Err(AbError::Shape(format!(
                "hom matrix is {}x{} but expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.gens(),
                source.gens()
            )));
        }
        Ok(GroupHom {
            source: source.clone(),
            target: target.clone(),
            matrix,
        })
    }

    pub(crate) fn raw_unchecked(source: &FgAbGroup, target: &FgAbGroup, matrix: IntMatrix) -> Self {
        debug_assert_eq!((matrix.rows(), matrix.cols()), (target.gens(), source.gens()));
        GroupHom {
            source: source.clone(),
            target: target.clone(),
            matrix,
        }
    }

    pub fn identity(g: &FgAbGroup) -> Self {
        Self::raw_unchecked(g, g, IntMatrix::identity(g.gens()))
    }

    pub fn zero(source: &FgAbGroup, target: &FgAbGroup) -> Self {
        Self::raw_unchecked(source, target, IntMatrix::zeros(target.gens(), source.gens()))
    }

    /// Multiplication by an integer on a group.
    pub fn scalar(g: &FgAbGroup, k: impl Into<BigInt>) -> Self {
        Self::raw_unchecked(g, g, IntMatrix::scalar(g.gens(), k))
    }

    pub fn source(&self) -> &FgAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FgAbGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.matrix.mul_vec(v)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &GroupHom) -> Result<GroupHom, AbError> {
        if inner.target != self.source {
            return Err(AbError::Endpoint("compose: inner target differs from outer source".into()));
        }
        Ok(Self::raw_unchecked(&inner.source, &self.target, self.matrix.mul(&inner.matrix)))
    }

    pub fn add(&self, other: &GroupHom) -> Result<GroupHom, AbError> {
        self.same_endpoints(other, "add")?;
        Ok(Self::raw_unchecked(&self.source, &self.target, self.matrix.add(&other.matrix)))
    }

    pub fn sub(&self, other: &GroupHom) -> Result<GroupHom, AbError> {
        self.same_endpoints(other, "sub")?;
        Ok(Self::raw_unchecked(&self.source, &self.target, self.matrix.sub(&other.matrix)))
    }

    pub fn negate(&self) -> GroupHom {
        Self::raw_unchecked(&self.source, &self.target, self.matrix.neg())
    }

    fn same_endpoints(&self, other: &GroupHom, what: &str) -> Result<(), AbError> {
        if self.source != other.source || self.target != other.target {
            return Err(AbError::Endpoint(format!("{what}: homomorphisms have different endpoints")));
        }
        Ok(())
    }

    /// Zero modulo the target's relations.
    pub fn is_zero_hom(&self) -> bool {
        self.matrix.columns().all(|c| self.target.is_zero_element(&c))
    }

    /// Equality modulo the target's relations.
    pub fn equals(&self, other: &GroupHom) -> bool {
        self.source == other.source
            && self.target == other.target
            && self.matrix.columns().zip(other.matrix.columns()).all(|(a, b)| self.target.elements_equal(&a, &b))
    }

    /// Matrix with every column replaced by its canonical representative.
    pub fn canonical_matrix(&self) -> IntMatrix {
        let cols: Vec<Vec<BigInt>> = self.matrix.columns().map(|c| self.target.reduce(&c)).collect();
        IntMatrix::from_columns(self.target.gens(), &cols)
    }

    pub fn is_surjective(&self) -> bool {
        let m = self.matrix.hcat(self.target.rels());
        let s = smith(&m, Transforms::NONE);
        s.rank() == self.target.gens() && s.diagonal.iter().all(One::is_one)
    }

    pub fn is_injective(&self) -> bool {
        kernel(self).map(|k| k.group().is_trivial()).unwrap_or(false)
    }

    pub fn is_iso(&self) -> bool {
        self.is_surjective() && self.is_injective()
    }

    /// Some `a` with `self(a) = w` modulo target relations.
    pub fn preimage(&self, w: &[BigInt]) -> Option<Vec<BigInt>> {
        let m = self.matrix.hcat(self.target.rels());
        let x = solve_integer(&m, w)?;
        Some(x[..self.source.gens()].to_vec())
    }

    /// Inverse of an isomorphism.
    pub fn inverse(&self) -> Result<GroupHom, AbError> {
        if !self.is_iso() {
            return Err(AbError::NotIso);
        }
        let cols: Vec<Vec<BigInt>> = (0..self.target.gens())
            .map(|j| self.preimage(&self.target.generator(j)).expect("surjective"))
            .collect();
        Ok(Self::raw_unchecked(
            &self.target,
            &self.source,
            IntMatrix::from_columns(self.source.gens(), &cols),
        ))
    }
}

impl fmt::Debug for GroupHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupHom({} -> {}, {:?})", self.source, self.target, self.matrix)
    }
}

/// Certificate `U` with `matrix * source.rels = target.rels * U`, or the
/// index of the first source relator whose image is not a target relation.
pub fn check_hom(f: &GroupHom) -> Result<IntMatrix, AbError> {
    let images = f.matrix.mul(f.source.rels());
    let mut cols = Vec::with_capacity(images.cols());
    for (k, c) in images.columns().enumerate() {
        match f.target.solve_relations(&c) {
            Some(w) => cols.push(w),
            None => return Err(AbError::NotWellDefined { relator: k }),
        }
    }
    Ok(IntMatrix::from_columns(f.target.rels().cols(), &cols))
}

/// Solves `m x = w` over the integers.
pub fn solve_integer(m: &IntMatrix, w: &[BigInt]) -> Option<Vec<BigInt>> {
    let s = smith(m, Transforms { u: true, v: true, ..Transforms::NONE });
    let y = s.u.as_ref().unwrap().mul_vec(w);
    let r = s.rank();
    let mut z = vec![BigInt::zero(); m.cols()];
    for (i, yi) in y.iter().enumerate() {
        if i < r {
            if !(yi % &s.diagonal[i]).is_zero() {
                return None;
            }
            z[i] = yi / &s.diagonal[i];
        } else if !yi.is_zero() {
            return None;
        }
    }
    Some(s.v.as_ref().unwrap().mul_vec(&z))
}

/// A direct sum with its structure maps.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub group: FgAbGroup,
    pub injections: Vec<GroupHom>,
    pub projections: Vec<GroupHom>,
    /// First generator index of each summand.
    pub offsets: Vec<usize>,
}

pub fn direct_sum(groups: &[FgAbGroup]) -> DirectSum {
    let rels: Vec<&IntMatrix> = groups.iter().map(|g| g.rels()).collect();
    let gens: usize = groups.iter().map(|g| g.gens()).sum();
    let group = FgAbGroup::from_parts(gens, IntMatrix::block_diag(&rels));
    let mut offsets = Vec::with_capacity(groups.len());
    let mut injections = Vec::with_capacity(groups.len());
    let mut projections = Vec::with_capacity(groups.len());
    let mut off = 0;
    for g in groups {
        offsets.push(off);
        let mut inj = IntMatrix::zeros(gens, g.gens());
        let mut proj = IntMatrix::zeros(g.gens(), gens);
        for i in 0..g.gens() {
            inj[(off + i, i)] = BigInt::one();
            proj[(i, off + i)] = BigInt::one();
        }
        injections.push(GroupHom::raw_unchecked(g, &group, inj));
        projections.push(GroupHom::raw_unchecked(&group, g, proj));
        off += g.gens();
    }
    DirectSum {
        group,
        injections,
        projections,
        offsets,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abgroup::group::Invariants;

    fn z(m: u64) -> FgAbGroup {
        FgAbGroup::cyclic(m)
    }

    #[test]
    fn well_definedness() {
        let z4 = z(4);
        let two = GroupHom::scalar(&z4, 2);
        assert!(check_hom(&two).is_ok());

        let f = GroupHom::raw(&z(2), &z(0), IntMatrix::from_rows(&[[1]])).unwrap();
        assert_eq!(check_hom(&f).unwrap_err(), AbError::NotWellDefined { relator: 0 });

        let f = GroupHom::raw(&z(2), &z4, IntMatrix::from_rows(&[[1]])).unwrap();
        assert!(matches!(check_hom(&f), Err(AbError::NotWellDefined { relator: 0 })));
        let f = GroupHom::new(&z(2), &z4, IntMatrix::from_rows(&[[2]])).unwrap();
        let cert = check_hom(&f).unwrap();
        assert_eq!(f.matrix().mul(f.source().rels()), f.target().rels().mul(&cert));
    }

    #[test]
    fn shape_errors() {
        assert!(matches!(
            GroupHom::raw(&z(2), &z(4), IntMatrix::zeros(2, 1)),
            Err(AbError::Shape(_))
        ));
    }

    #[test]
    fn arithmetic() {
        let z4 = z(4);
        let f = GroupHom::scalar(&z4, 3);
        let id = GroupHom::identity(&z4);
        assert!(id.compose(&f).unwrap().equals(&f));
        assert!(f.sub(&f).unwrap().is_zero_hom());
        assert!(GroupHom::scalar(&z4, 4).is_zero_hom());
        assert!(!GroupHom::scalar(&z4, 2).is_iso());
        assert!(f.is_iso());
        let inv = f.inverse().unwrap();
        assert!(inv.compose(&f).unwrap().equals(&id));
        assert!(matches!(
            f.compose(&GroupHom::identity(&z(3))),
            Err(AbError::Endpoint(_))
        ));
    }

    #[test]
    fn iso_between_presentations() {
        // Z/6 presented on two generators versus one
        let a = FgAbGroup::from_moduli(&[2, 3]);
        let b = z(6);
        let f = GroupHom::new(&a, &b, IntMatrix::from_rows(&[[3, 2]])).unwrap();
        assert!(f.is_iso());
        let g = f.inverse().unwrap();
        assert!(f.compose(&g).unwrap().equals(&GroupHom::identity(&b)));
        assert!(g.compose(&f).unwrap().equals(&GroupHom::identity(&a)));
    }

    #[test]
    fn direct_sum_examples() {
        let s = direct_sum(&[]);
        assert!(s.group.is_trivial());
        let s = direct_sum(&[z(0), z(2)]);
        assert_eq!(s.group.invariants(), &Invariants::from_small(1, &[2]));
        let s = direct_sum(&[z(3), z(3), z(3)]);
        assert_eq!(s.group.invariants(), &Invariants::from_small(0, &[3, 3, 3]));
        for i in 0..3 {
            for j in 0..3 {
                let c = s.projections[j].compose(&s.injections[i]).unwrap();
                if i == j {
                    assert!(c.equals(&GroupHom::identity(&z(3))));
                } else {
                    assert!(c.is_zero_hom());
                }
            }
        }
    }
}
