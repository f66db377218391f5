//! Left and right modules over a finite rack, their axioms, constructors,
//! homomorphisms and the equivalence with modules over the inverted rack.

mod construct;
mod hom;
mod module;
mod spec;

pub use hom::ModuleHom;
pub use module::{
    Axiom, AxiomFailure, AxiomReport, LeftModule, MapKind, ModuleError, RackModule, RightModule, Variance,
};
pub use spec::{ModuleKind, ModuleSpec};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abgroup::{FgAbGroup, GroupHom};
    use crate::rack::RackTable;

    fn r3() -> RackTable {
        RackTable::dihedral(3).unwrap()
    }

    #[test]
    fn named_modules_validate() {
        let x = r3();
        LeftModule::trivial(&x, &FgAbGroup::cyclic(2));
        let a = LeftModule::alexander(&x, 3, 2).unwrap();
        assert!(a.check_quandle().unwrap().passed());
        let d = LeftModule::dihedral(&x, 5).unwrap();
        assert!(d.check_quandle().unwrap().passed());
        assert!(matches!(LeftModule::alexander(&x, 4, 2), Err(ModuleError::InvalidParams(_))));
        RightModule::alexander(&RackTable::cyclic(4).unwrap(), 5, 2).unwrap();
    }

    #[test]
    fn wrong_psi_breaks_the_sum_identity() {
        let x = r3();
        let g = FgAbGroup::cyclic(3);
        let n = x.order();
        let bad = RackModule::new(
            x.clone(),
            Variance::Left,
            vec![g.clone(); n],
            vec![vec![GroupHom::scalar(&g, 2); n]; n],
            vec![vec![GroupHom::scalar(&g, 1); n]; n],
        )
        .unwrap();
        let rep = bad.check();
        assert!(rep.fails(Axiom::PsiSum));
        assert!(matches!(LeftModule::validate(bad), Err(ModuleError::Axioms(_))));
    }

    #[test]
    fn quandle_check_needs_quandle() {
        let c3 = RackTable::cyclic(3).unwrap();
        let m = LeftModule::trivial(&c3, &FgAbGroup::free(1));
        assert_eq!(m.check_quandle().unwrap_err(), ModuleError::NotQuandle);
    }

    #[test]
    fn functors_round_trip() {
        for x in [r3(), RackTable::cyclic(4).unwrap(), RackTable::conjugation_symmetric(3).unwrap()] {
            let m = LeftModule::alexander(&x, 7, 3).unwrap();
            let r = m.to_right_over_inverted();
            assert_eq!(r.rack(), &x.invert());
            assert_eq!(r.to_left_over_inverted(), m);
            let back = RightModule::alexander(&x, 5, 2).unwrap();
            assert_eq!(back.to_left_over_inverted().to_right_over_inverted(), back);
        }
    }

    #[test]
    fn trivial_functor_image() {
        let t2 = RackTable::trivial(2).unwrap();
        let r = LeftModule::trivial(&t2, &FgAbGroup::free(1)).to_right_over_inverted();
        assert_eq!(r.data(), RightModule::trivial(&t2, &FgAbGroup::free(1)).data());
    }

    #[test]
    fn module_homs() {
        let m = LeftModule::alexander(&r3(), 5, 2).unwrap();
        assert!(ModuleHom::identity(&m).check().passed());
        assert!(ModuleHom::zero(&m, &m).unwrap().check().passed());
        assert!(ModuleHom::scalar(&m, 2).check().passed());
        // Z/5 -> Z/5 trivial to Alexander with identity components does not commute
        let t = LeftModule::trivial(&r3(), &FgAbGroup::cyclic(5));
        let maps = (0..3).map(|x| GroupHom::identity(t.group(x))).collect();
        assert!(!ModuleHom::new(&t, &m, maps).unwrap().check().passed());
    }

    #[test]
    fn direct_sum_and_transport() {
        use crate::abgroup::IntMatrix;
        let x = r3();
        let a = RackModule::alexander(&x, Variance::Left, 3, 2).unwrap();
        let b = RackModule::trivial(&x, Variance::Left, &FgAbGroup::free(1));
        let s = RackModule::direct_sum(&[a, b]).unwrap();
        assert!(s.check().passed());
        let p = IntMatrix::from_rows(&[[1, 2], [0, 1]]);
        let pi = IntMatrix::from_rows(&[[1, -2], [0, 1]]);
        let t = s.transport(&vec![p; 3], &vec![pi; 3]).unwrap();
        assert!(t.check().passed());
        assert_eq!(t.group(0).invariants(), s.group(0).invariants());
    }

    #[test]
    fn json_forms() {
        let x = r3();
        let spec: ModuleSpec = serde_json::from_str(r#"{"variance": "left", "kind": "alexander", "m": 3, "t": 2}"#).unwrap();
        let m = spec.build_left(&x).unwrap();
        assert_eq!(m, LeftModule::alexander(&x, 3, 2).unwrap());
        let explicit = ModuleSpec::from_module(&m);
        let text = serde_json::to_string(&explicit).unwrap();
        let back: ModuleSpec = serde_json::from_str(&text).unwrap();
        assert_eq!(back.build_left(&x).unwrap(), m);
        assert_eq!(
            ModuleKind::parse_shorthand("alexander-Z/3-t2"),
            Some(ModuleKind::Alexander { m: 3, t: 2 })
        );
        assert_eq!(ModuleKind::parse_shorthand("trivial-Z"), Some(ModuleKind::Trivial { m: Some(0), group: None }));
        assert_eq!(ModuleKind::parse_shorthand("dihedral-Z/5"), Some(ModuleKind::Dihedral { m: 5 }));
        assert_eq!(ModuleKind::parse_shorthand("bogus"), None);
    }
}
