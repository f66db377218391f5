#![allow(dead_code)]

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;

use rackhom::abgroup::{FgAbGroup, IntMatrix};
use rackhom::rack::{Letter, OperatorWord, RackTable};
use rackhom::rmod::{RackModule, Variance};
use rackhom::wring::{WringElement, WringTerm};

/// A random unimodular matrix with its inverse.
pub fn unimodular(n: usize, rng: &mut impl Rng) -> (IntMatrix, IntMatrix) {
    let mut p = IntMatrix::identity(n);
    let mut q = IntMatrix::identity(n);
    if n < 2 {
        if n == 1 && rng.gen_bool(0.5) {
            p = IntMatrix::scalar(1, -1);
            q = p.clone();
        }
        return (p, q);
    }
    for _ in 0..3 * n {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n);
        while j == i {
            j = rng.gen_range(0..n);
        }
        let c = BigInt::from(rng.gen_range(-2i64..=2));
        // p <- E p with E = I + c e_ij;  q <- q E^{-1}
        for col in 0..n {
            let v = &p[(j, col)] * &c;
            p[(i, col)] += v;
        }
        for row in 0..n {
            let v = &q[(row, i)] * &c;
            q[(row, j)] -= v;
        }
    }
    (p, q)
}

fn random_part(rack: &RackTable, variance: Variance, rng: &mut impl Rng) -> RackModule {
    match rng.gen_range(0..4) {
        0 => RackModule::trivial(rack, variance, &FgAbGroup::free(1)),
        1 => RackModule::trivial(rack, variance, &FgAbGroup::cyclic(rng.gen_range(2..6))),
        2 => {
            let (m, t) = *[(3u64, 2i64), (5, 2), (5, 3), (7, 3), (4, 3), (0, -1)].choose(rng).unwrap();
            RackModule::alexander(rack, variance, m, t).unwrap()
        }
        _ => RackModule::dihedral(rack, variance, rng.gen_range(2..6)).unwrap(),
    }
}

/// A direct sum of named modules, with generators changed at random.
pub fn random_module(rack: &RackTable, variance: Variance, rng: &mut impl Rng) -> RackModule {
    let parts: Vec<RackModule> = (0..rng.gen_range(1..=3)).map(|_| random_part(rack, variance, rng)).collect();
    let sum = RackModule::direct_sum(&parts).unwrap();
    let (ps, qs): (Vec<_>, Vec<_>) = (0..rack.order()).map(|x| unimodular(sum.group(x).gens(), rng)).unzip();
    sum.transport(&ps, &qs).unwrap()
}

pub fn random_word(n: usize, max_len: usize, rng: &mut impl Rng) -> OperatorWord {
    let len = rng.gen_range(0..=max_len);
    OperatorWord::new((0..len).map(|_| {
        let e = rng.gen_range(0..n);
        if rng.gen_bool(0.5) {
            Letter::pos(e)
        } else {
            Letter::neg(e)
        }
    }))
}

/// A random wring element at `base` whose terms all have source `source`.
pub fn random_element(rack: &RackTable, base: usize, source: usize, rng: &mut impl Rng) -> WringElement {
    let n = rack.order();
    let mut e = WringElement::zero(base);
    for _ in 0..rng.gen_range(1..=3) {
        let c = rng.gen_range(-3i64..=3);
        // rejection sample a word carrying `base` back to `source`
        let rho = rng.gen_bool(0.5).then(|| {
            (0..200).map(|_| random_word(n, 2, rng)).find(|w| rack.act(base, &w.inverse()) == source)
        });
        let t = match rho.flatten() {
            Some(w) => WringTerm::Rho(w),
            None => WringTerm::RhoLambda(random_word(n, 2, rng), source),
        };
        e = e.add(&WringElement::term(base, t, c)).unwrap();
    }
    e
}
