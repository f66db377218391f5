use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::abgroup::{direct_sum, FgAbGroup, GroupHom, IntMatrix};
use crate::rack::RackTable;
use crate::rmod::{LeftModule, RackModule, RightModule, Variance};

use super::basis::{enumerate_basis, BasisIndex, BasisTuple, Direction, Theory};
use super::sparse::SparseMatrix;
use super::HomologyError;

/// How a face acts on coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FaceMap {
    Identity,
    /// `φ` indexed `(x', v)`.
    Phi(usize, usize),
    /// `ψ` indexed `(y, x')`.
    Psi(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub target: BasisTuple,
    pub sign: i64,
    pub map: FaceMap,
}

/// The terms of the boundary of a tuple of degree `n >= 1`.
pub fn faces(rack: &RackTable, s: &BasisTuple, z: usize) -> Vec<Face> {
    let e = &s.entries;
    let n = e.len();
    assert!(n >= 1, "degree 0 has no faces");
    if n == 1 {
        return vec![Face { target: BasisTuple::point(z), sign: 1, map: FaceMap::Psi(z, rack.op_inv(e[0], z)) }];
    }
    let mut out = Vec::with_capacity(2 * n - 1);
    for i in 1..n {
        let sign = if i % 2 == 1 { 1 } else { -1 };
        let mut elided = e.clone();
        elided.remove(i);
        let elided = BasisTuple::new(rack, elided);
        let v = rack.act_tuple(&e[i..]);
        let map = FaceMap::Phi(elided.base, v);
        out.push(Face { target: elided, sign, map });
        let shifted: Vec<usize> =
            e[..i].iter().map(|&a| rack.op(a, e[i])).chain(e[i + 1..].iter().copied()).collect();
        out.push(Face { target: BasisTuple::new(rack, shifted), sign: -sign, map: FaceMap::Identity });
    }
    let tail = BasisTuple::new(rack, e[1..].to_vec());
    let mut head = vec![e[0]];
    head.extend_from_slice(&e[2..]);
    let x1 = rack.act_tuple(&head);
    let map = FaceMap::Psi(tail.base, x1);
    out.push(Face { target: tail, sign: 1, map });
    out
}

/// One degree of the complex: `⊕_s A_{x(s)}` over its basis tuples.
#[derive(Clone, Debug)]
pub struct ChainGroup {
    basis: BasisIndex,
    offsets: Vec<usize>,
    owner: Vec<usize>,
}

impl ChainGroup {
    fn new(module: &RackModule, tuples: Vec<BasisTuple>) -> Self {
        let mut offsets = Vec::with_capacity(tuples.len());
        let mut owner = Vec::new();
        for (k, t) in tuples.iter().enumerate() {
            offsets.push(owner.len());
            owner.extend(std::iter::repeat_n(k, module.group(t.base).gens()));
        }
        ChainGroup { basis: BasisIndex::new(tuples), offsets, owner }
    }

    pub fn tuples(&self) -> &[BasisTuple] {
        &self.basis.tuples
    }

    /// Number of generators.
    pub fn gens(&self) -> usize {
        self.owner.len()
    }

    pub fn offset(&self, k: usize) -> usize {
        self.offsets[k]
    }

    pub fn position(&self, t: &BasisTuple) -> Option<usize> {
        self.basis.position(t)
    }

    /// The presented group (block-diagonal relations).
    pub fn group(&self, module: &RackModule) -> FgAbGroup {
        direct_sum(&self.tuples().iter().map(|t| module.group(t.base).clone()).collect::<Vec<_>>()).group
    }

    fn column_is_zero(&self, module: &RackModule, col: &[(usize, BigInt)]) -> bool {
        let mut i = 0;
        while i < col.len() {
            let k = self.owner[col[i].0];
            let t = &self.tuples()[k];
            let g = module.group(t.base);
            let mut v = vec![BigInt::zero(); g.gens()];
            while i < col.len() && self.owner[col[i].0] == k {
                v[col[i].0 - self.offsets[k]] = col[i].1.clone();
                i += 1;
            }
            if !g.is_zero_element(&v) {
                return false;
            }
        }
        true
    }
}

/// The standard complex of a finite rack with coefficients in a module,
/// stored column-sparse. Degrees `0..=top`.
#[derive(Clone, Debug)]
pub struct ChainComplexZ {
    module: RackModule,
    z: usize,
    theory: Theory,
    direction: Direction,
    chains: Vec<ChainGroup>,
    /// `maps[n-1]`: `∂_n: C_n -> C_{n-1}` or `d^n: C^{n-1} -> C^n`.
    maps: Vec<SparseMatrix>,
}

impl ChainComplexZ {
    pub fn module(&self) -> &RackModule {
        &self.module
    }

    pub fn rack(&self) -> &RackTable {
        self.module.rack()
    }

    pub fn z(&self) -> usize {
        self.z
    }

    pub fn theory(&self) -> Theory {
        self.theory
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn top(&self) -> usize {
        self.chains.len() - 1
    }

    pub fn chain(&self, n: usize) -> &ChainGroup {
        &self.chains[n]
    }

    /// Generator counts per degree.
    pub fn ranks(&self) -> Vec<usize> {
        self.chains.iter().map(ChainGroup::gens).collect()
    }

    /// Tuple counts per degree.
    pub fn basis_sizes(&self) -> Vec<usize> {
        self.chains.iter().map(|c| c.tuples().len()).collect()
    }

    /// `∂_n` (homology) or `d^n` (cohomology), `1 <= n <= top`.
    pub fn map(&self, n: usize) -> &SparseMatrix {
        &self.maps[n - 1]
    }

    pub fn chain_group(&self, n: usize) -> FgAbGroup {
        self.chains[n].group(&self.module)
    }

    /// `∂_n` or `d^n` as a homomorphism of presented groups. Degree `0`
    /// and `top + 1` give zero maps to or from the trivial group.
    pub fn map_hom(&self, n: usize) -> GroupHom {
        let (src, tgt) = self.endpoints(n);
        let (s, t) = (self.group_or_trivial(src), self.group_or_trivial(tgt));
        if n == 0 || n > self.top() {
            return GroupHom::zero(&s, &t);
        }
        GroupHom::raw(&s, &t, self.maps[n - 1].to_dense()).expect("boundary shape")
    }

    /// Degrees of source and target of map `n` (`None` for the zero group).
    fn endpoints(&self, n: usize) -> (Option<usize>, Option<usize>) {
        let inside = |k: usize| (k <= self.top()).then_some(k);
        match self.direction {
            Direction::Homology => (inside(n), n.checked_sub(1).and_then(inside)),
            Direction::Cohomology => (n.checked_sub(1).and_then(inside), inside(n)),
        }
    }

    fn group_or_trivial(&self, d: Option<usize>) -> FgAbGroup {
        d.map_or_else(FgAbGroup::trivial, |k| self.chain_group(k))
    }

    /// Whether every coefficient group is presented without relations.
    pub fn is_free(&self) -> bool {
        self.module.groups().iter().all(|g| g.rels().cols() == 0)
    }
}

/// Accumulated blocks `s -> t` of a tuple's boundary, keyed by target.
fn blocks(module: &RackModule, s: &BasisTuple, z: usize) -> BTreeMap<BasisTuple, IntMatrix> {
    let mut acc: BTreeMap<BasisTuple, IntMatrix> = BTreeMap::new();
    for f in faces(module.rack(), s, z) {
        let m = match f.map {
            FaceMap::Identity => IntMatrix::identity(module.group(s.base).gens()),
            FaceMap::Phi(p, q) => module.phi(p, q).matrix().clone(),
            FaceMap::Psi(p, q) => module.psi(p, q).matrix().clone(),
        };
        let m = m.scale(&BigInt::from(f.sign));
        match acc.get_mut(&f.target) {
            Some(b) => *b = b.add(&m),
            None => {
                acc.insert(f.target, m);
            }
        }
    }
    acc
}

/// The block from `s` to `t` as a homomorphism of coefficient groups.
fn block_hom(module: &RackModule, s: &BasisTuple, t: &BasisTuple, m: &IntMatrix) -> GroupHom {
    let (gs, gt) = (module.group(s.base), module.group(t.base));
    match module.variance() {
        Variance::Right => GroupHom::raw(gs, gt, m.clone()),
        Variance::Left => GroupHom::raw(gt, gs, m.clone()),
    }
    .expect("block shape")
}

/// Assembles map `n` between `lower` (degree `n-1`) and `upper` (degree `n`).
fn assemble(
    module: &RackModule,
    z: usize,
    lower: &ChainGroup,
    upper: &ChainGroup,
) -> Result<SparseMatrix, HomologyError> {
    let per_tuple: Vec<Vec<Vec<(usize, BigInt)>>> = upper
        .tuples()
        .par_iter()
        .map(|s| {
            let gs = module.group(s.base).gens();
            let mut cols = vec![Vec::new(); gs];
            for (t, m) in blocks(module, s, z) {
                let Some(k) = lower.position(&t) else { continue };
                let off = lower.offset(k);
                for (c, col) in cols.iter_mut().enumerate() {
                    for r in 0..module.group(t.base).gens() {
                        let v = match module.variance() {
                            Variance::Right => &m[(r, c)],
                            Variance::Left => &m[(c, r)],
                        };
                        if !v.is_zero() {
                            col.push((off + r, v.clone()));
                        }
                    }
                }
            }
            cols
        })
        .collect();
    // columns indexed by generators of `upper`, rows by `lower`
    let down = SparseMatrix::from_columns(lower.gens(), per_tuple.into_iter().flatten().collect());
    Ok(match module.variance() {
        Variance::Right => down,
        Variance::Left => down.transpose(),
    })
}

/// Checks that degenerate tuples of degree `n` have no boundary component
/// on nondegenerate tuples.
fn check_degenerate(module: &RackModule, z: usize, n: usize, lower: &ChainGroup) -> Result<(), HomologyError> {
    let bad = enumerate_basis(module.rack(), n, Theory::Rack)
        .into_par_iter()
        .filter(BasisTuple::is_degenerate)
        .find_map_any(|s| {
            blocks(module, &s, z).into_iter().find_map(|(t, m)| {
                (lower.position(&t).is_some() && !block_hom(module, &s, &t, &m).is_zero_hom()).then(|| s.clone())
            })
        });
    match bad {
        Some(s) => Err(HomologyError::QuotientNotWellDefined { degree: n, tuple: s.entries }),
        None => Ok(()),
    }
}

/// Builds the complex in degrees `0..=top` and verifies `∂∂ = 0`.
pub fn complex(
    module: &RackModule,
    z: usize,
    top: usize,
    theory: Theory,
    direction: Direction,
) -> Result<ChainComplexZ, HomologyError> {
    let expected = match direction {
        Direction::Homology => Variance::Right,
        Direction::Cohomology => Variance::Left,
    };
    if module.variance() != expected {
        return Err(HomologyError::Variance { expected, found: module.variance() });
    }
    let rack = module.rack();
    if z >= rack.order() {
        return Err(HomologyError::BadBase(z));
    }
    if theory == Theory::Quandle {
        if !rack.is_quandle() {
            return Err(HomologyError::NotQuandle);
        }
        if !module.is_quandle_module() {
            return Err(HomologyError::NotQuandleModule);
        }
    }
    let chains: Vec<ChainGroup> =
        (0..=top).map(|n| ChainGroup::new(module, enumerate_basis(rack, n, theory))).collect();
    let mut maps = Vec::with_capacity(top);
    for n in 1..=top {
        if theory == Theory::Quandle && n >= 2 {
            check_degenerate(module, z, n, &chains[n - 1])?;
        }
        maps.push(assemble(module, z, &chains[n - 1], &chains[n])?);
    }
    let cx = ChainComplexZ { module: module.clone(), z, theory, direction, chains, maps };
    for n in 2..=top {
        let (outer, inner, target) = match direction {
            Direction::Homology => (cx.map(n - 1), cx.map(n), cx.chain(n - 2)),
            Direction::Cohomology => (cx.map(n), cx.map(n - 1), cx.chain(n)),
        };
        let p = outer.compose(inner);
        if !(0..p.cols()).into_par_iter().all(|j| target.column_is_zero(module, p.column(j))) {
            return Err(HomologyError::NotComplex { degree: n });
        }
    }
    Ok(cx)
}

/// `∂_n` of the rack complex with right-module coefficients.
pub fn boundary_homology(a: &RightModule, n: usize, z: usize) -> Result<GroupHom, HomologyError> {
    Ok(complex(a, z, n, Theory::Rack, Direction::Homology)?.map_hom(n))
}

/// `d^n` of the rack cochain complex with left-module coefficients.
pub fn coboundary(a: &LeftModule, n: usize, z: usize) -> Result<GroupHom, HomologyError> {
    Ok(complex(a, z, n, Theory::Rack, Direction::Cohomology)?.map_hom(n))
}
