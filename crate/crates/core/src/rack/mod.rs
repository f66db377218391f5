//! Finite racks and quandles.

mod table;
mod word;

pub use table::{RackError, RackSpec, RackTable, WordKey};
pub use word::{Letter, OperatorWord};

#[cfg(test)]
mod tests {
    use super::*;

    fn r3() -> RackTable {
        RackTable::dihedral(3).unwrap()
    }

    #[test]
    fn dihedral_three_table() {
        assert_eq!(r3().table(), vec![vec![0, 2, 1], vec![2, 1, 0], vec![1, 0, 2]]);
        assert!(r3().is_quandle());
        assert_eq!(RackTable::trivial(2).unwrap().table(), vec![vec![0, 0], vec![1, 1]]);
    }

    #[test]
    fn cyclic_is_rack_not_quandle() {
        let c3 = RackTable::cyclic(3).unwrap();
        assert!(!c3.is_quandle());
        assert_eq!(c3.invert().table(), vec![vec![2, 2, 2], vec![0, 0, 0], vec![1, 1, 1]]);
    }

    #[test]
    fn validation_errors() {
        let mut t = r3().table();
        t[0][1] = 0;
        assert_eq!(RackTable::validate(&t).unwrap_err(), RackError::R1 { column: 1 });
        assert_eq!(RackTable::validate(&[]).unwrap_err(), RackError::Empty);
        assert!(matches!(
            RackTable::validate(&[vec![0, 3], vec![1, 0]]).unwrap_err(),
            RackError::OutOfRange { row: 0, col: 1, value: 3 }
        ));
        assert!(matches!(RackTable::alexander(4, 2).unwrap_err(), RackError::InvalidParams(_)));
    }

    #[test]
    fn conjugation_s3_orbits() {
        let s3 = RackTable::conjugation_symmetric(3).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(s3.is_quandle());
        let mut sizes: Vec<usize> = s3.orbits().iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 3]);
        assert_eq!(s3.invert().invert(), s3);
    }

    #[test]
    fn acting_by_words() {
        let x = r3();
        assert_eq!(x.act(0, &OperatorWord::empty()), 0);
        assert_eq!(x.act(0, &OperatorWord::from_signed(&[(1, 1), (2, -1)])), 2);
        assert_eq!(x.act_tuple(&[0, 1, 2]), x.op(x.op(0, 1), 2));
    }

    #[test]
    fn homomorphisms() {
        let x = r3();
        assert!(RackTable::is_homomorphism(&[0, 1, 2], &x, &x));
        assert!(RackTable::is_homomorphism(&[0, 0, 0], &x, &RackTable::trivial(1).unwrap()));
        // x -> 1 - x is affine, hence an automorphism
        assert!(RackTable::is_homomorphism(&[1, 0, 2], &x, &x));
        assert!(!RackTable::is_homomorphism(&[0, 0, 1], &x, &x));
    }

    #[test]
    fn shorthand_and_json() {
        let spec = RackSpec::parse_shorthand("alexander5,2").unwrap();
        assert_eq!(spec.build().unwrap(), RackTable::alexander(5, 2).unwrap());
        assert_eq!(RackSpec::parse_shorthand("conjS3").unwrap().build().unwrap().order(), 6);
        let x: RackTable = serde_json::from_str(r#"{"builtin": "dihedral", "n": 3}"#).unwrap();
        assert_eq!(x, r3());
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"order":3,"table":[[0,2,1],[2,1,0],[1,0,2]]}"#);
        let back: RackTable = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn word_keys_respect_relations() {
        // x^y = y^-1 x y in the associated group
        let x = RackTable::conjugation_symmetric(3).unwrap();
        for a in 0..6 {
            for b in 0..6 {
                let lhs = OperatorWord::letter(Letter::pos(x.op(a, b)));
                let rhs = OperatorWord::new([Letter::neg(b), Letter::pos(a), Letter::pos(b)]);
                assert_eq!(x.word_key(&lhs), x.word_key(&rhs));
            }
        }
    }
}
