use proptest::prelude::*;

use rackhom::rack::{Letter, OperatorWord, RackTable};

fn builtins() -> Vec<RackTable> {
    vec![
        RackTable::dihedral(3).unwrap(),
        RackTable::dihedral(5).unwrap(),
        RackTable::trivial(1).unwrap(),
        RackTable::trivial(3).unwrap(),
        RackTable::cyclic(4).unwrap(),
        RackTable::alexander(5, 2).unwrap(),
        RackTable::alexander(7, 3).unwrap(),
        RackTable::conjugation_symmetric(3).unwrap(),
    ]
}

#[test]
fn single_letters_recover_the_table() {
    for x in builtins() {
        let t = x.table();
        for a in 0..x.order() {
            for b in 0..x.order() {
                assert_eq!(x.act(a, &OperatorWord::letter(Letter::pos(b))), t[a][b]);
                assert_eq!(x.act(t[a][b], &OperatorWord::letter(Letter::neg(b))), a);
            }
        }
    }
}

#[test]
fn invert_is_an_involution() {
    for x in builtins() {
        let y = x.invert();
        assert_eq!(y.invert(), x);
        assert_eq!(y.is_quandle(), x.is_quandle());
        assert_eq!(y.orbits(), x.orbits());
        if x.is_quandle() {
            for a in 0..x.order() {
                assert_eq!(x.op(a, a), a);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    /// A table passing validation has bijective columns; a table with a
    /// non-bijective column is rejected.
    #[test]
    fn r1_iff_columns_bijective(n in 1usize..4, cells in proptest::collection::vec(0usize..3, 9)) {
        let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| cells[a * 3 + b] % n).collect()).collect();
        let bijective = (0..n).all(|b| {
            let mut col: Vec<usize> = (0..n).map(|a| table[a][b]).collect();
            col.sort();
            col == (0..n).collect::<Vec<_>>()
        });
        match RackTable::validate(&table) {
            Ok(_) => prop_assert!(bijective),
            Err(_) => {
                if bijective {
                    // then it must be self-distributivity that fails
                    let r2 = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| {
                        table[table[a][b]][c] == table[table[a][c]][table[b][c]]
                    })));
                    prop_assert!(!r2);
                }
            }
        }
    }

    #[test]
    fn words_act_by_composition(m in 3usize..8, t in 1i64..7, w1 in proptest::collection::vec((0usize..8, any::<bool>()), 0..5),
                                 w2 in proptest::collection::vec((0usize..8, any::<bool>()), 0..5)) {
        prop_assume!(num_integer::Integer::gcd(&(t as usize), &m) == 1);
        let x = RackTable::alexander(m, t).unwrap();
        let word = |v: &[(usize, bool)]| OperatorWord::new(v.iter().map(|&(e, s)| if s { Letter::pos(e % m) } else { Letter::neg(e % m) }));
        let (u, v) = (word(&w1), word(&w2));
        for a in 0..m {
            prop_assert_eq!(x.act(a, &u.concat(&v)), x.act(x.act(a, &u), &v));
            prop_assert_eq!(x.act(x.act(a, &u), &u.inverse()), a);
        }
    }
}
