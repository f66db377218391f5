mod common;

use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use rackhom::abgroup::FgAbGroup;
use rackhom::homology::{
    complex, ext_group, homology, homology_groups, oracle_factor_sets, oracle_mod_p_ranks, oracle_trivial_boundary,
    principal_derivations, BasisTuple, Direction, Theory,
};
use rackhom::rack::RackTable;
use rackhom::rmod::{LeftModule, RackModule, RightModule, Variance};

fn builtins() -> Vec<RackTable> {
    vec![
        RackTable::dihedral(3).unwrap(),
        RackTable::trivial(2).unwrap(),
        RackTable::cyclic(4).unwrap(),
        RackTable::alexander(5, 2).unwrap(),
        RackTable::conjugation_symmetric(3).unwrap(),
    ]
}

fn constructor_modules(x: &RackTable, v: Variance) -> Vec<RackModule> {
    vec![
        RackModule::trivial(x, v, &FgAbGroup::free(1)),
        RackModule::trivial(x, v, &FgAbGroup::from_moduli(&[2, 0])),
        RackModule::alexander(x, v, 5, 3).unwrap(),
        RackModule::dihedral(x, v, 4).unwrap(),
    ]
}

#[test]
fn boundaries_square_to_zero_on_builtins() {
    for x in builtins() {
        let top = if x.order() > 5 { 4 } else { 5 };
        for (dir, v) in [(Direction::Homology, Variance::Right), (Direction::Cohomology, Variance::Left)] {
            for m in constructor_modules(&x, v) {
                complex(&m, x.order() - 1, top, Theory::Rack, dir).unwrap();
                if x.is_quandle() {
                    complex(&m, 0, top.min(4), Theory::Quandle, dir).unwrap();
                }
            }
        }
    }
}

#[test]
fn trivial_coefficients_have_zero_augmentation_and_match_the_oracle() {
    for x in builtins() {
        let cx = complex(&RightModule::trivial(&x, &FgAbGroup::free(1)), 0, 4, Theory::Rack, Direction::Homology).unwrap();
        assert!(cx.map(1).nnz() == 0);
        for n in 1..=4 {
            let d = cx.map(n).to_dense();
            assert_eq!(d, oracle_trivial_boundary(&x, n));
            for j in 0..d.cols() {
                assert!(d.column(j).iter().sum::<BigInt>().is_zero());
            }
        }
    }
}

#[test]
fn degenerate_degree_two_columns_vanish_on_quandle_modules() {
    let x = RackTable::dihedral(3).unwrap();
    for m in constructor_modules(&x, Variance::Right) {
        let cx = complex(&m, 0, 2, Theory::Rack, Direction::Homology).unwrap();
        let d = cx.map_hom(2);
        for a in 0..3 {
            let k = cx.chain(2).position(&BasisTuple::new(&x, vec![a, a])).unwrap();
            let off = cx.chain(2).offset(k);
            for g in 0..m.group(a).gens() {
                let mut v = vec![BigInt::zero(); d.source().gens()];
                v[off + g] = 1.into();
                assert!(d.target().is_zero_element(&d.apply(&v)));
            }
        }
    }
}

#[test]
fn trivial_modules_have_no_principal_derivations() {
    for x in builtins() {
        for g in [FgAbGroup::free(1), FgAbGroup::cyclic(6)] {
            let a = LeftModule::trivial(&x, &g);
            for z in 0..x.order() {
                assert!(principal_derivations(&a, z).unwrap().is_trivial());
            }
        }
    }
}

#[test]
fn runs_are_deterministic() {
    let x = RackTable::conjugation_symmetric(3).unwrap();
    let a = RightModule::alexander(&x, 5, 2).unwrap();
    let first = serde_json::to_string(&homology(&a, 2, 1, Theory::Quandle).unwrap()).unwrap();
    for _ in 0..3 {
        assert_eq!(serde_json::to_string(&homology(&a, 2, 1, Theory::Quandle).unwrap()).unwrap(), first);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn random_modules_give_complexes(seed in any::<u64>(), which in 0usize..4) {
        let mut rng = StdRng::seed_from_u64(seed);
        let x = &builtins()[which];
        let m = common::random_module(x, Variance::Right, &mut rng);
        let cx = complex(&m, 0, 4, Theory::Rack, Direction::Homology);
        prop_assert!(cx.is_ok(), "{:?}", cx.err());
        let l = common::random_module(x, Variance::Left, &mut rng);
        prop_assert!(complex(&l, 0, 4, Theory::Rack, Direction::Cohomology).is_ok());
    }

    #[test]
    fn ext_matches_factor_sets(which in 0usize..3, m in 2u64..5, t in 1i64..4) {
        let x = [RackTable::trivial(2).unwrap(), RackTable::dihedral(3).unwrap(), RackTable::cyclic(3).unwrap()][which].clone();
        prop_assume!(num_integer::Integer::gcd(&(t as u64), &m) == 1);
        let a = LeftModule::alexander(&x, m, t).unwrap();
        prop_assume!((m as f64).powi((x.order() * x.order()) as i32) <= 1e6);
        let e = ext_group(&a).unwrap();
        prop_assert_eq!(e.order().unwrap(), BigInt::from(oracle_factor_sets(&a, 1_000_000).unwrap()));
    }

    #[test]
    fn rank_oracle_agrees_with_smith(which in 0usize..5, quandle in any::<bool>()) {
        let x = &builtins()[which];
        let theory = if quandle && x.is_quandle() { Theory::Quandle } else { Theory::Rack };
        let top = if x.order() > 5 { 3 } else { 4 };
        for (dir, v) in [(Direction::Homology, Variance::Right), (Direction::Cohomology, Variance::Left)] {
            let m = RackModule::trivial(x, v, &FgAbGroup::free(1));
            let cx = complex(&m, 0, top, theory, dir).unwrap();
            let h = homology_groups(&cx).unwrap();
            prop_assert!(oracle_mod_p_ranks(&cx, &[2, 3, 5]).unwrap().agrees_with(&h));
        }
    }
}
