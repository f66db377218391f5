use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::abgroup::{enumerate_elements, rank_mod_p, rank_rational, AbError, IntMatrix};
use crate::rack::RackTable;
use crate::rmod::LeftModule;

use super::basis::Direction;
use super::complex::ChainComplexZ;
use super::groups::HomologyResult;
use super::HomologyError;

/// `|Z(X, A)| / |B(X, A)|` by brute force over all factor sets.
pub fn oracle_factor_sets(a: &LeftModule, budget: u64) -> Result<u64, HomologyError> {
    let rack = a.rack();
    let k = rack.order();
    if !a.is_finite() {
        return Err(AbError::Infinite.into());
    }
    let elems: Vec<Vec<Vec<BigInt>>> =
        (0..k).map(|x| enumerate_elements(a.group(x), budget)).collect::<Result<_, _>>()?;
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|x| (0..k).map(move |y| (x, y))).collect();
    let candidates: f64 = pairs.iter().map(|&(x, y)| elems[rack.op(x, y)].len() as f64).product();
    if candidates > budget as f64 {
        return Err(AbError::TooLarge { size: format!("{candidates}"), limit: budget }.into());
    }
    let slot = |x: usize, y: usize| x * k + y;
    let add = |g: usize, u: &[BigInt], v: &[BigInt]| -> Vec<BigInt> {
        a.group(g).reduce(&u.iter().zip(v).map(|(p, q)| p + q).collect::<Vec<_>>())
    };
    let is_cocycle = |sigma: &[&Vec<BigInt>]| -> bool {
        for x in 0..k {
            for y in 0..k {
                let xy = rack.op(x, y);
                for z in 0..k {
                    let (xz, yz) = (rack.op(x, z), rack.op(y, z));
                    let t = rack.op(xy, z);
                    // σ_{x^y,z} + φ_{x^y,z}(σ_{x,y})
                    let lhs = add(t, sigma[slot(xy, z)], &a.phi(xy, z).apply(sigma[slot(x, y)]));
                    // ψ_{y^z,x^z}(σ_{y,z}) + σ_{x^z,y^z} + φ_{x^z,y^z}(σ_{x,z})
                    let rhs = add(
                        t,
                        &add(t, &a.psi(yz, xz).apply(sigma[slot(y, z)]), sigma[slot(xz, yz)]),
                        &a.phi(xz, yz).apply(sigma[slot(x, z)]),
                    );
                    if !a.group(t).elements_equal(&lhs, &rhs) {
                        return false;
                    }
                }
            }
        }
        true
    };
    let mut idx = vec![0usize; pairs.len()];
    let mut cocycles = 0u64;
    'outer: loop {
        let sigma: Vec<&Vec<BigInt>> =
            pairs.iter().zip(&idx).map(|(&(x, y), &i)| &elems[rack.op(x, y)][i]).collect();
        if is_cocycle(&sigma) {
            cocycles += 1;
        }
        for (p, i) in idx.iter_mut().enumerate() {
            *i += 1;
            if *i < elems[rack.op(pairs[p].0, pairs[p].1)].len() {
                continue 'outer;
            }
            *i = 0;
        }
        break;
    }
    // coboundaries σ_{x,y} = ψ_{y,x}(υ_y) − υ_{x^y} + φ_{x,y}(υ_x)
    let mut seen: HashSet<Vec<Vec<BigInt>>> = HashSet::new();
    let mut ups = vec![0usize; k];
    'ups: loop {
        let sigma: Vec<Vec<BigInt>> = pairs
            .iter()
            .map(|&(x, y)| {
                let t = rack.op(x, y);
                let s = a.psi(y, x).apply(&elems[y][ups[y]]);
                let p = a.phi(x, y).apply(&elems[x][ups[x]]);
                let v: Vec<BigInt> = s.iter().zip(&p).zip(&elems[t][ups[t]]).map(|((s, p), u)| s + p - u).collect();
                canonical(a, t, &v)
            })
            .collect();
        seen.insert(sigma);
        for (x, i) in ups.iter_mut().enumerate() {
            *i += 1;
            if *i < elems[x].len() {
                continue 'ups;
            }
            *i = 0;
        }
        break;
    }
    Ok(cocycles / seen.len() as u64)
}

/// A canonical representative: the enumerated element equal to `v`.
fn canonical(a: &LeftModule, x: usize, v: &[BigInt]) -> Vec<BigInt> {
    let g = a.group(x);
    enumerate_elements(g, u64::MAX)
        .expect("finite group")
        .into_iter()
        .find(|e| g.elements_equal(e, v))
        .expect("every element is enumerated")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankRow {
    /// `None` for the rationals.
    pub prime: Option<u64>,
    /// Rank of map `n` at index `n` (index 0 and `top + 1` are zero).
    pub ranks: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankTable {
    pub chain_ranks: Vec<usize>,
    pub rows: Vec<RankRow>,
}

impl RankTable {
    /// Dimension of degree-`n` (co)homology over the field of `row`.
    pub fn dimension(&self, row: &RankRow, n: usize, direction: Direction) -> usize {
        let (out, inc) = match direction {
            Direction::Homology => (n, n + 1),
            Direction::Cohomology => (n + 1, n),
        };
        self.chain_ranks[n] - row.ranks[out] - row.ranks[inc]
    }

    /// Whether the invariant factors in `result` predict every dimension
    /// in the table: over `Q` the Betti number, over `F_p` the Betti number
    /// plus the `p`-divisible factors of the two groups the universal
    /// coefficient theorem involves. Degrees whose neighbour is missing
    /// from `result` are checked over `Q` only.
    pub fn agrees_with(&self, result: &HomologyResult) -> bool {
        let count = |n: Option<usize>, p: u64| -> usize {
            n.and_then(|n| result.degree(n))
                .map_or(0, |inv| inv.torsion.iter().filter(|d| (*d % p).is_zero()).count())
        };
        result.groups.iter().all(|g| {
            let inv = g.invariants();
            self.rows.iter().all(|row| {
                let dim = self.dimension(row, g.n, result.direction);
                let predicted = match row.prime {
                    None => inv.free_rank,
                    Some(p) => {
                        let other = match result.direction {
                            Direction::Homology => g.n.checked_sub(1),
                            Direction::Cohomology => Some(g.n + 1),
                        };
                        if other.is_some_and(|k| result.degree(k).is_none()) {
                            // the neighbour was not computed; nothing to predict
                            return true;
                        }
                        inv.free_rank + count(Some(g.n), p) + count(other, p)
                    }
                };
                dim == predicted
            })
        })
    }
}

/// Ranks of every map of a complex of free groups over `Q` and `F_p`.
pub fn oracle_mod_p_ranks(cx: &ChainComplexZ, primes: &[u64]) -> Result<RankTable, HomologyError> {
    if !cx.is_free() {
        return Err(HomologyError::NotFree);
    }
    let top = cx.top();
    let dense: Vec<IntMatrix> = (1..=top).map(|n| cx.map(n).to_dense()).collect();
    let mut rows = Vec::new();
    let row = |f: &dyn Fn(&IntMatrix) -> usize| {
        let mut r = vec![0];
        r.extend(dense.iter().map(f));
        r.push(0);
        r
    };
    rows.push(RankRow { prime: None, ranks: row(&rank_rational) });
    for &p in primes {
        rows.push(RankRow { prime: Some(p), ranks: row(&|m| rank_mod_p(m, p)) });
    }
    Ok(RankTable { chain_ranks: cx.ranks(), rows })
}

/// `∂_n` with trivial `Z` coefficients, straight from the alternating sum
/// `Σ_{i=2}^{n} (-1)^i [(x_1..x̂_i..x_n) - (x_1^{x_i}, .., x_{i-1}^{x_i}, x_{i+1}, .., x_n)]`.
pub fn oracle_trivial_boundary(rack: &RackTable, n: usize) -> IntMatrix {
    let k = rack.order();
    let cols = k.pow(n as u32);
    if n == 1 {
        // one point per element in degree 0
        return IntMatrix::zeros(k, cols);
    }
    let mut m = IntMatrix::zeros(k.pow(n as u32 - 1), cols);
    let encode = |t: &[usize]| t.iter().fold(0, |acc, &v| acc * k + v);
    for c in 0..cols {
        let mut t = vec![0; n];
        let mut r = c;
        for slot in t.iter_mut().rev() {
            *slot = r % k;
            r /= k;
        }
        for i in 2..=n {
            let sign: i64 = if i % 2 == 0 { 1 } else { -1 };
            let hat: Vec<usize> = t.iter().enumerate().filter(|&(j, _)| j != i - 1).map(|(_, &v)| v).collect();
            let xi = t[i - 1];
            let shifted: Vec<usize> =
                t[..i - 1].iter().map(|&v| rack.op(v, xi)).chain(t[i..].iter().copied()).collect();
            m[(encode(&hat), c)] += sign;
            m[(encode(&shifted), c)] -= sign;
        }
    }
    m
}
