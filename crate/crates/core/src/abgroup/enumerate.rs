//! Brute-force enumeration over finite groups, used by oracles.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::group::FgAbGroup;
use super::hom::GroupHom;
use super::matrix::IntMatrix;
use super::AbError;

/// Every element of a finite group, as canonical representatives, in a
/// fixed order. Fails when the group is infinite or larger than `limit`.
pub fn enumerate_elements(g: &FgAbGroup, limit: u64) -> Result<Vec<Vec<BigInt>>, AbError> {
    let order = g.order().ok_or(AbError::Infinite)?;
    if order > BigInt::from(limit) {
        return Err(AbError::TooLarge { size: order.to_string(), limit });
    }
    let moduli: Vec<u64> = g
        .smith_moduli()
        .iter()
        .map(|m| m.to_u64().expect("finite group modulus"))
        .collect();
    let mut out = Vec::with_capacity(order.to_usize().unwrap_or(0));
    let mut y = vec![0u64; moduli.len()];
    loop {
        let big: Vec<BigInt> = y.iter().map(|&c| BigInt::from(c)).collect();
        out.push(g.reduce(&g.from_smith_coordinates(&big)));
        // odometer over the Smith coordinates
        let mut i = 0;
        loop {
            if i == y.len() {
                return Ok(out);
            }
            y[i] += 1;
            if y[i] < moduli[i] {
                break;
            }
            y[i] = 0;
            i += 1;
        }
    }
}

/// Number of homomorphisms `A -> B` for `B` finite, from invariant factors.
pub fn hom_count(a: &FgAbGroup, b: &FgAbGroup) -> Result<BigInt, AbError> {
    if !b.is_finite() {
        return Err(AbError::Infinite);
    }
    let mut count = BigInt::one();
    let a_mod = invariant_list(a);
    for m in &a_mod {
        for n in b.torsion() {
            count *= m.gcd(n);
        }
    }
    Ok(count)
}

fn invariant_list(a: &FgAbGroup) -> Vec<BigInt> {
    let mut v = a.torsion().to_vec();
    v.extend(std::iter::repeat_n(BigInt::zero(), a.free_rank()));
    v
}

/// Every homomorphism `A -> B` for `B` finite, at most `limit` of them.
pub fn enumerate_homs(a: &FgAbGroup, b: &FgAbGroup, limit: u64) -> Result<Vec<GroupHom>, AbError> {
    let count = hom_count(a, b)?;
    if count > BigInt::from(limit) {
        return Err(AbError::TooLarge { size: count.to_string(), limit });
    }
    let elems = enumerate_elements(b, limit.max(1))?;
    let moduli = a.smith_moduli();
    // choices for the image of each Smith generator of A
    let choices: Vec<Vec<&Vec<BigInt>>> = moduli
        .iter()
        .map(|m| {
            if m.is_zero() {
                elems.iter().collect()
            } else {
                elems
                    .iter()
                    .filter(|e| b.is_zero_element(&e.iter().map(|x| x * m).collect::<Vec<_>>()))
                    .collect()
            }
        })
        .collect();
    let u = smith_u(a);
    let mut out = Vec::new();
    let mut idx = vec![0usize; choices.len()];
    if choices.iter().any(Vec::is_empty) {
        return Ok(out);
    }
    loop {
        let cols: Vec<Vec<BigInt>> = idx.iter().zip(&choices).map(|(&i, c)| c[i].clone()).collect();
        let images = IntMatrix::from_columns(b.gens(), &cols);
        out.push(GroupHom::raw_unchecked(a, b, images.mul(&u)));
        let mut i = 0;
        loop {
            if i == idx.len() {
                return Ok(out);
            }
            idx[i] += 1;
            if idx[i] < choices[i].len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

fn smith_u(a: &FgAbGroup) -> IntMatrix {
    let n = a.gens();
    let mut u = IntMatrix::zeros(n, n);
    for j in 0..n {
        let mut e = vec![BigInt::zero(); n];
        e[j] = BigInt::one();
        let col = a.smith_coordinates(&e);
        for i in 0..n {
            u[(i, j)] = col[i].clone();
        }
    }
    u
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abgroup::hom::check_hom;

    #[test]
    fn element_counts() {
        let g = FgAbGroup::from_moduli(&[2, 6]);
        let e = enumerate_elements(&g, 100).unwrap();
        assert_eq!(e.len(), 12);
        let mut sorted = e.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 12);
        assert_eq!(enumerate_elements(&FgAbGroup::free(1), 100).unwrap_err(), AbError::Infinite);
        assert_eq!(enumerate_elements(&FgAbGroup::trivial(), 1).unwrap().len(), 1);
    }

    #[test]
    fn homs_match_count() {
        let cases: &[(&[u64], &[u64])] = &[(&[4], &[6]), (&[2, 2], &[4]), (&[0], &[3]), (&[6], &[2, 3]), (&[], &[5])];
        for (am, bm) in cases {
            let a = FgAbGroup::from_moduli(am);
            let b = FgAbGroup::from_moduli(bm);
            let homs = enumerate_homs(&a, &b, 1000).unwrap();
            assert_eq!(BigInt::from(homs.len()), hom_count(&a, &b).unwrap());
            for h in &homs {
                check_hom(h).unwrap();
            }
            for i in 0..homs.len() {
                for j in 0..i {
                    assert!(!homs[i].equals(&homs[j]));
                }
            }
        }
    }
}
