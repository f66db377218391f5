//! The wring `ZX`: a ringoid with one object per rack element, whose left
//! modules are the rack modules. Also tensor products, `Hom` modules and the
//! collapse `ZX ⊗_X A ≅ A`.

mod collapse;
mod element;
mod free;
mod tensor;

pub use collapse::{collapse_report, words_up_to, CollapseReport, Collapser};
pub use element::{WringElement, WringError, WringTerm};
pub use free::{free_hom_space, free_tensor};
pub use tensor::{
    adjunction_check, hom_count_to_cyclic, hom_module, oracle_biadditive_count, tensor, AdjunctionReport, TensorGroup,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abgroup::{FgAbGroup, Invariants};
    use crate::rack::{OperatorWord, RackTable};
    use crate::rmod::{LeftModule, RightModule};
    use num_bigint::BigInt;

    fn w(s: &[(usize, i8)]) -> OperatorWord {
        OperatorWord::from_signed(s)
    }

    #[test]
    fn rho_products_concatenate() {
        let r = RackTable::dihedral(3).unwrap();
        // rho at base 0 with word [1]: source 0^{1'} = 2
        let p = WringElement::rho(0, w(&[(1, 1)]));
        let q = WringElement::rho(2, w(&[(2, 1)]));
        let pq = p.mul(&q, &r).unwrap();
        assert_eq!(pq, WringElement::rho(0, w(&[(2, 1), (1, 1)])));
        assert!(WringElement::rho(0, w(&[(1, 1)])).mul(&WringElement::unit(0), &r).is_err());
    }

    #[test]
    fn augmentation_is_multiplicative() {
        let r = RackTable::dihedral(3).unwrap();
        let a = WringElement::rho_lambda(0, w(&[(1, 1)]), 2)
            .add(&WringElement::rho(0, w(&[(0, 1)])).scale(3))
            .unwrap();
        assert!(a.source(&r).is_err());
        let b = WringElement::rho_lambda(0, OperatorWord::empty(), 1);
        let c = WringElement::rho(0, w(&[(2, -1), (1, 1)])).scale(5);
        for x in [&b, &c] {
            let s = x.source(&r).unwrap().unwrap();
            let y = WringElement::rho_lambda(s, w(&[(0, 1)]), 1)
                .add(&WringElement::rho(s, w(&[(1, -1)])).scale(2))
                .unwrap();
            let p = x.mul(&y, &r).unwrap();
            assert_eq!(p.augmentation(), x.augmentation() * y.augmentation());
        }
    }

    #[test]
    fn tensor_of_trivial_integers_counts_orbits() {
        let z = FgAbGroup::free(1);
        for (r, orbits) in [(RackTable::dihedral(3).unwrap(), 1), (RackTable::trivial(2).unwrap(), 2)] {
            let t = tensor(&RightModule::trivial(&r, &z), &LeftModule::trivial(&r, &z)).unwrap();
            assert_eq!(t.group.invariants(), &Invariants::new(orbits, vec![]));
        }
    }

    #[test]
    fn tensor_agrees_with_biadditive_oracle() {
        let r = RackTable::dihedral(3).unwrap();
        let a = RightModule::dihedral(&r, 3).unwrap();
        let b = LeftModule::dihedral(&r, 3).unwrap();
        let t = tensor(&a, &b).unwrap();
        for m in [2, 3, 9] {
            assert_eq!(oracle_biadditive_count(&a, &b, m, 1_000_000).unwrap(), hom_count_to_cyclic(&t.group, m));
        }
    }

    #[test]
    fn hom_into_trivial_module_is_trivial() {
        let r = RackTable::dihedral(3).unwrap();
        let c = FgAbGroup::cyclic(3);
        let h = hom_module(&LeftModule::trivial(&r, &c), &c).unwrap();
        for x in 0..3 {
            assert_eq!(h.group(x).invariants(), &Invariants::new(0, vec![BigInt::from(3)]));
            assert!(h.phi(x, 1).equals(&crate::abgroup::GroupHom::identity(h.group(x))));
            assert!(h.psi(x, 1).is_zero_hom());
        }
    }

    #[test]
    fn adjunction_small() {
        let r = RackTable::dihedral(3).unwrap();
        let a = RightModule::dihedral(&r, 3).unwrap();
        let b = LeftModule::dihedral(&r, 3).unwrap();
        let rep = adjunction_check(&a, &b, &FgAbGroup::cyclic(3), 1_000_000).unwrap();
        assert!(rep.bijective(), "{rep:?}");
        assert!(rep.module_homs > 1);
    }

    #[test]
    fn collapse_recovers_the_module() {
        let r = RackTable::dihedral(3).unwrap();
        let a = LeftModule::alexander(&r, 5, 3).unwrap();
        let rep = collapse_report(&a, 2).unwrap();
        assert!(rep.passed(), "{rep:?}");
    }

    #[test]
    fn unreduced_letter_sequences_collapse_like_reduced_words() {
        let r = RackTable::dihedral(3).unwrap();
        let a = LeftModule::alexander(&r, 5, 2).unwrap();
        let col = Collapser::new(&a);
        let seq = [crate::rack::Letter::pos(1), crate::rack::Letter::pos(2), crate::rack::Letter::neg(2)];
        let reduced = OperatorWord::new(seq);
        for c in 0..3 {
            let m1 = col.letters_map(c, &seq);
            let m2 = col.letters_map(c, reduced.letters());
            assert!(m1.equals(&m2));
        }
    }

    #[test]
    fn collapse_respects_the_associated_group() {
        // x^y acts like y' x y
        let r = RackTable::dihedral(3).unwrap();
        let a = LeftModule::alexander(&r, 7, 3).unwrap();
        let col = Collapser::new(&a);
        for c in 0..3 {
            for x in 0..3 {
                for y in 0..3 {
                    let lhs = col.letters_map(c, w(&[(r.op(x, y), 1)]).letters());
                    let rhs = col.letters_map(c, w(&[(y, -1), (x, 1), (y, 1)]).letters());
                    assert!(lhs.equals(&rhs), "c={c} x={x} y={y}");
                }
            }
        }
    }
}
