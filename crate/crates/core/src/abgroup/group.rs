use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::{BigIntRepr, IntMatrix};
use super::snf::{normalize_invariants, smith, Transforms};
use super::AbError;

/// Isomorphism type of a finitely generated abelian group: `Z^free_rank`
/// plus cyclic factors `Z/d` with `d_1 | d_2 | ...`, every `d >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Invariants {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl Invariants {
    pub fn new(free_rank: usize, torsion: Vec<BigInt>) -> Self {
        Invariants {
            free_rank,
            torsion: normalize_invariants(&torsion),
        }
    }

    pub fn from_small(free_rank: usize, torsion: &[i64]) -> Self {
        Self::new(free_rank, torsion.iter().map(|&t| BigInt::from(t)).collect())
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Order of the group, `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        (self.free_rank == 0).then(|| self.torsion.iter().product())
    }

    pub fn torsion_u64(&self) -> Vec<u64> {
        self.torsion.iter().map(|t| t.to_u64().expect("torsion fits u64")).collect()
    }
}

impl fmt::Display for Invariants {
    /// Canonical rendering `Z^r + Z/d1 + Z/d2`, free part first, `0` for the
    /// trivial group.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Serializable form of [`Invariants`], matching the CLI's JSON layout.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsRepr {
    pub free: usize,
    pub torsion: Vec<BigIntRepr>,
}

impl From<&Invariants> for InvariantsRepr {
    fn from(i: &Invariants) -> Self {
        InvariantsRepr {
            free: i.free_rank,
            torsion: i.torsion.iter().cloned().map(BigIntRepr).collect(),
        }
    }
}

impl From<InvariantsRepr> for Invariants {
    fn from(r: InvariantsRepr) -> Self {
        Invariants::new(r.free, r.torsion.into_iter().map(|t| t.0).collect())
    }
}

struct Diagonalized {
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    /// Nonzero Smith diagonal; coordinates past its length are free.
    diagonal: Vec<BigInt>,
    invariants: Invariants,
}

struct Inner {
    gens: usize,
    rels: IntMatrix,
    diag: OnceLock<Diagonalized>,
}

/// A finitely generated abelian group `Z^gens / colspan(rels)`.
///
/// Relators are the columns of `rels`. Values are immutable and cheap to
/// clone; the Smith data used for canonical forms is computed on first use.
#[derive(Clone)]
pub struct FgAbGroup(Arc<Inner>);

impl FgAbGroup {
    pub fn new(gens: usize, rels: IntMatrix) -> Result<Self, AbError> {
        if rels.rows() != gens {
            return Err(AbError::Shape(format!(
                "relation matrix has {} rows but group has {gens} generators",
                rels.rows()
            )));
        }
        Ok(Self::from_parts(gens, rels))
    }

    pub(crate) fn from_parts(gens: usize, rels: IntMatrix) -> Self {
        debug_assert_eq!(rels.rows(), gens);
        FgAbGroup(Arc::new(Inner {
            gens,
            rels,
            diag: OnceLock::new(),
        }))
    }

    /// `Z^n`.
    pub fn free(n: usize) -> Self {
        Self::from_parts(n, IntMatrix::zeros(n, 0))
    }

    /// The group with no generators.
    pub fn trivial() -> Self {
        Self::free(0)
    }

    /// `Z/m` on one generator; `m = 0` gives `Z`.
    pub fn cyclic(m: u64) -> Self {
        if m == 0 {
            Self::free(1)
        } else {
            Self::from_parts(1, IntMatrix::from_rows(&[[m as i64]]))
        }
    }

    /// Direct sum of cyclic groups `Z/m_i` (0 meaning `Z`), one generator each.
    pub fn from_moduli(moduli: &[u64]) -> Self {
        let n = moduli.len();
        let nz: Vec<usize> = (0..n).filter(|&i| moduli[i] != 0).collect();
        let mut rels = IntMatrix::zeros(n, nz.len());
        for (c, &i) in nz.iter().enumerate() {
            rels[(i, c)] = BigInt::from(moduli[i]);
        }
        Self::from_parts(n, rels)
    }

    pub fn gens(&self) -> usize {
        self.0.gens
    }

    pub fn rels(&self) -> &IntMatrix {
        &self.0.rels
    }

    fn diag(&self) -> &Diagonalized {
        self.0.diag.get_or_init(|| {
            let s = smith(&self.0.rels, Transforms { u: true, u_inv: true, v: true, v_inv: false });
            let free_rank = self.0.gens - s.rank();
            let invariants = Invariants::new(free_rank, s.diagonal.clone());
            Diagonalized {
                u: s.u.unwrap(),
                u_inv: s.u_inv.unwrap(),
                v: s.v.unwrap(),
                diagonal: s.diagonal,
                invariants,
            }
        })
    }

    pub fn invariants(&self) -> &Invariants {
        &self.diag().invariants
    }

    pub fn free_rank(&self) -> usize {
        self.invariants().free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.invariants().torsion
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank() == 0
    }

    pub fn is_trivial(&self) -> bool {
        self.invariants().is_trivial()
    }

    pub fn order(&self) -> Option<BigInt> {
        self.invariants().order()
    }

    /// Smith coordinates `U v` of an element.
    pub(crate) fn smith_coordinates(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.diag().u.mul_vec(v)
    }

    /// Modulus of each Smith coordinate; 0 marks a free coordinate.
    pub(crate) fn smith_moduli(&self) -> Vec<BigInt> {
        let d = &self.diag().diagonal;
        (0..self.gens())
            .map(|i| d.get(i).cloned().unwrap_or_else(BigInt::zero))
            .collect()
    }

    /// Element of `Z^gens` with the given Smith coordinates.
    pub(crate) fn from_smith_coordinates(&self, y: &[BigInt]) -> Vec<BigInt> {
        self.diag().u_inv.mul_vec(y)
    }

    /// Canonical representative of the class of `v`: equal classes give
    /// identical vectors.
    pub fn reduce(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.gens(), "element length mismatch");
        let dg = self.diag();
        if dg.diagonal.is_empty() {
            return v.to_vec();
        }
        let mut y = dg.u.mul_vec(v);
        for (yi, d) in y.iter_mut().zip(&dg.diagonal) {
            *yi = yi.mod_floor(d);
        }
        dg.u_inv.mul_vec(&y)
    }

    pub fn is_zero_element(&self, v: &[BigInt]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    pub fn elements_equal(&self, a: &[BigInt], b: &[BigInt]) -> bool {
        let diff: Vec<BigInt> = a.iter().zip(b).map(|(x, y)| x - y).collect();
        self.is_zero_element(&diff)
    }

    /// Solves `rels * w = v`; `None` when `v` is not in the relation lattice.
    pub fn solve_relations(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let dg = self.diag();
        let y = dg.u.mul_vec(v);
        let r = dg.diagonal.len();
        let mut z = Vec::with_capacity(r);
        for (i, yi) in y.iter().enumerate() {
            if i < r {
                let (q, rem) = yi.div_rem(&dg.diagonal[i]);
                if !rem.is_zero() {
                    return None;
                }
                z.push(q);
            } else if !yi.is_zero() {
                return None;
            }
        }
        let ncols = self.rels().cols();
        Some(
            (0..ncols)
                .map(|c| {
                    let mut acc = BigInt::zero();
                    for (k, zk) in z.iter().enumerate() {
                        acc += &dg.v[(c, k)] * zk;
                    }
                    acc
                })
                .collect(),
        )
    }

    /// Additive order of an element; `None` when infinite.
    pub fn element_order(&self, v: &[BigInt]) -> Option<BigInt> {
        let y = self.smith_coordinates(v);
        let moduli = self.smith_moduli();
        let mut ord = BigInt::one();
        for (yi, m) in y.iter().zip(&moduli) {
            if m.is_zero() {
                if !yi.is_zero() {
                    return None;
                }
                continue;
            }
            let r = yi.mod_floor(m);
            if !r.is_zero() {
                let o = m / m.gcd(&r);
                ord = ord.lcm(&o);
            }
        }
        Some(ord)
    }

    pub fn zero_element(&self) -> Vec<BigInt> {
        vec![BigInt::zero(); self.gens()]
    }

    pub fn generator(&self, i: usize) -> Vec<BigInt> {
        let mut v = self.zero_element();
        v[i] = BigInt::one();
        v
    }

}

impl PartialEq for FgAbGroup {
    /// Exact equality of presentations, not isomorphism.
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.gens() == other.gens() && self.rels() == other.rels())
    }
}

impl Eq for FgAbGroup {}

impl fmt::Debug for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FgAbGroup")
            .field("gens", &self.gens())
            .field("rels", self.rels())
            .finish()
    }
}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.invariants().fmt(f)
    }
}

/// JSON form `{"gens": g, "rels": [[...], ...]}` with relators listed as
/// columns (each of length `gens`).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GroupRepr {
    pub gens: usize,
    #[serde(default)]
    pub rels: Vec<Vec<BigIntRepr>>,
}

impl From<&FgAbGroup> for GroupRepr {
    fn from(g: &FgAbGroup) -> Self {
        GroupRepr {
            gens: g.gens(),
            rels: g
                .rels()
                .columns()
                .map(|c| c.into_iter().map(BigIntRepr).collect())
                .collect(),
        }
    }
}

impl TryFrom<GroupRepr> for FgAbGroup {
    type Error = AbError;
    fn try_from(r: GroupRepr) -> Result<Self, AbError> {
        let mut cols = Vec::with_capacity(r.rels.len());
        for (k, c) in r.rels.into_iter().enumerate() {
            if c.len() != r.gens {
                return Err(AbError::Shape(format!(
                    "relator {k} has length {} but group has {} generators",
                    c.len(),
                    r.gens
                )));
            }
            cols.push(c.into_iter().map(|x| x.0).collect());
        }
        FgAbGroup::new(r.gens, IntMatrix::from_columns(r.gens, &cols))
    }
}

impl Serialize for FgAbGroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GroupRepr::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for FgAbGroup {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = GroupRepr::deserialize(d)?;
        FgAbGroup::try_from(r).map_err(serde::de::Error::custom)
    }
}

/// Small helper used throughout: a vector of `BigInt` from small integers.
pub fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}
