use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::abgroup::{
    enumerate_elements, enumerate_homs, kernel, AbError, FgAbGroup, GroupHom, IntMatrix, Subquotient,
};
use crate::rmod::{LeftModule, ModuleError, ModuleHom, RackModule, RightModule, Variance};

/// A presentation of `A ⊗_X B` with generators `(x, i, j)` standing for
/// `a_i ⊗ b_j` in the summand at `x`.
#[derive(Clone, Debug)]
pub struct TensorGroup {
    pub group: FgAbGroup,
    pub labels: Vec<(usize, usize, usize)>,
    offsets: Vec<usize>,
    b_gens: Vec<usize>,
}

impl TensorGroup {
    /// Index of the generator `a_i ⊗ b_j` at `x`.
    pub fn index(&self, x: usize, i: usize, j: usize) -> usize {
        self.offsets[x] + i * self.b_gens[x] + j
    }
}

/// `A ⊗_X B` for a right module `A` and a left module `B` over one rack.
pub fn tensor(a: &RightModule, b: &LeftModule) -> Result<TensorGroup, ModuleError> {
    tensor_of(a, b)
}

pub(crate) fn tensor_of(a: &RackModule, b: &RackModule) -> Result<TensorGroup, ModuleError> {
    if a.rack() != b.rack() {
        return Err(ModuleError::RackMismatch);
    }
    let rack = a.rack();
    let n = rack.order();
    let mut offsets = Vec::with_capacity(n);
    let mut labels = Vec::new();
    let b_gens: Vec<usize> = (0..n).map(|x| b.group(x).gens()).collect();
    for x in 0..n {
        offsets.push(labels.len());
        for i in 0..a.group(x).gens() {
            for j in 0..b_gens[x] {
                labels.push((x, i, j));
            }
        }
    }
    let total = labels.len();
    let idx = |x: usize, i: usize, j: usize| offsets[x] + i * b_gens[x] + j;
    let mut rels: Vec<Vec<BigInt>> = Vec::new();
    let mut push = |col: Vec<BigInt>| {
        if col.iter().any(|v| !v.is_zero()) {
            rels.push(col);
        }
    };
    for x in 0..n {
        let (ga, gb) = (a.group(x), b.group(x));
        for r in ga.rels().columns() {
            for j in 0..gb.gens() {
                let mut col = vec![BigInt::zero(); total];
                for (i, v) in r.iter().enumerate() {
                    col[idx(x, i, j)] += v;
                }
                push(col);
            }
        }
        for r in gb.rels().columns() {
            for i in 0..ga.gens() {
                let mut col = vec![BigInt::zero(); total];
                for (j, v) in r.iter().enumerate() {
                    col[idx(x, i, j)] += v;
                }
                push(col);
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            let xy = rack.op(x, y);
            // (phi^{x,y} e, f)_x = (e, chi_{x,y} f)_{x^y}, e in A_{x^y}, f in B_x
            let pa = a.phi(x, y).matrix();
            let pb = b.phi(x, y).matrix();
            for k in 0..a.group(xy).gens() {
                for j in 0..b.group(x).gens() {
                    let mut col = vec![BigInt::zero(); total];
                    for i in 0..a.group(x).gens() {
                        col[idx(x, i, j)] += &pa[(i, k)];
                    }
                    for l in 0..b.group(xy).gens() {
                        col[idx(xy, k, l)] -= &pb[(l, j)];
                    }
                    push(col);
                }
            }
            // (psi^{y,x} c, d)_y = (c, omega_{y,x} d)_{x^y}, c in A_{x^y}, d in B_y
            let sa = a.psi(y, x).matrix();
            let sb = b.psi(y, x).matrix();
            for k in 0..a.group(xy).gens() {
                for j in 0..b.group(y).gens() {
                    let mut col = vec![BigInt::zero(); total];
                    for i in 0..a.group(y).gens() {
                        col[idx(y, i, j)] += &sa[(i, k)];
                    }
                    for l in 0..b.group(xy).gens() {
                        col[idx(xy, k, l)] -= &sb[(l, j)];
                    }
                    push(col);
                }
            }
        }
    }
    let group = FgAbGroup::new(total, IntMatrix::from_columns(total, &rels))?;
    Ok(TensorGroup { group, labels, offsets, b_gens })
}

/// Counts families of biadditive maps `β_x: A_x × B_x -> Z/N` satisfying the
/// two balancing identities, by trying every assignment on generator pairs
/// and testing well-definedness and balancing on all pairs of elements.
/// Equals `|Hom(A ⊗_X B, Z/N)|`.
pub fn oracle_biadditive_count(a: &RightModule, b: &LeftModule, modulus: u64, budget: u64) -> Result<u64, AbError> {
    let n = a.order();
    let slots: Vec<(usize, usize)> = (0..n).map(|x| (a.group(x).gens(), b.group(x).gens())).collect();
    let total: usize = slots.iter().map(|(p, q)| p * q).sum();
    let candidates = (modulus as f64).powi(total as i32);
    if candidates > budget as f64 {
        return Err(AbError::TooLarge { size: format!("{candidates}"), limit: budget });
    }
    let ea: Vec<Vec<Vec<BigInt>>> = (0..n).map(|x| enumerate_elements(a.group(x), budget)).collect::<Result<_, _>>()?;
    let eb: Vec<Vec<Vec<BigInt>>> = (0..n).map(|x| enumerate_elements(b.group(x), budget)).collect::<Result<_, _>>()?;
    let m = BigInt::from(modulus);
    let mut values = vec![0u64; total];
    let mut count = 0u64;
    let offsets: Vec<usize> = slots
        .iter()
        .scan(0, |acc, (p, q)| {
            let o = *acc;
            *acc += p * q;
            Some(o)
        })
        .collect();
    let beta = |values: &[u64], x: usize, u: &[BigInt], v: &[BigInt]| -> BigInt {
        let q = slots[x].1;
        let mut s = BigInt::zero();
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                s += ui * vj * values[offsets[x] + i * q + j];
            }
        }
        s.mod_floor(&m)
    };
    loop {
        let mut ok = true;
        // well defined: relators pair to zero against every element
        'wd: for x in 0..n {
            for r in a.group(x).rels().columns() {
                for v in &eb[x] {
                    if !beta(&values, x, &r, v).is_zero() {
                        ok = false;
                        break 'wd;
                    }
                }
            }
            for r in b.group(x).rels().columns() {
                for u in &ea[x] {
                    if !beta(&values, x, u, &r).is_zero() {
                        ok = false;
                        break 'wd;
                    }
                }
            }
        }
        if ok {
            'bal: for x in 0..n {
                for y in 0..n {
                    let xy = a.rack().op(x, y);
                    for e in &ea[xy] {
                        let pe = a.phi(x, y).apply(e);
                        for f in &eb[x] {
                            if beta(&values, x, &pe, f) != beta(&values, xy, e, &b.phi(x, y).apply(f)) {
                                ok = false;
                                break 'bal;
                            }
                        }
                        let se = a.psi(y, x).apply(e);
                        for d in &eb[y] {
                            if beta(&values, y, &se, d) != beta(&values, xy, e, &b.psi(y, x).apply(d)) {
                                ok = false;
                                break 'bal;
                            }
                        }
                    }
                }
            }
        }
        if ok {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == total {
                return Ok(count);
            }
            values[i] += 1;
            if values[i] < modulus {
                break;
            }
            values[i] = 0;
            i += 1;
        }
    }
}

/// `Hom(B_x, C)` as a subquotient of `C^{gens B_x}`: a matrix `M` is stored
/// column-major, column `j` being the image of generator `j`.
struct HomSpace {
    sub: Subquotient,
    c_gens: usize,
    b_gens: usize,
}

impl HomSpace {
    fn new(bx: &FgAbGroup, c: &FgAbGroup) -> Result<Self, AbError> {
        let (g, cg) = (bx.gens(), c.gens());
        let copies = vec![c.clone(); g];
        let src = crate::abgroup::direct_sum(&copies).group;
        let rcopies = vec![c.clone(); bx.rels().cols()];
        let tgt = crate::abgroup::direct_sum(&rcopies).group;
        // M -> M R_B
        let mut m = IntMatrix::zeros(cg * bx.rels().cols(), cg * g);
        for (k, r) in bx.rels().columns().enumerate() {
            for (j, v) in r.iter().enumerate() {
                for i in 0..cg {
                    m[(k * cg + i, j * cg + i)] = v.clone();
                }
            }
        }
        let f = GroupHom::raw(&src, &tgt, m)?;
        Ok(HomSpace { sub: kernel(&f)?, c_gens: cg, b_gens: g })
    }

    fn matrix_of(&self, v: &[BigInt]) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.c_gens, self.b_gens);
        for j in 0..self.b_gens {
            for i in 0..self.c_gens {
                m[(i, j)] = v[j * self.c_gens + i].clone();
            }
        }
        m
    }

    fn vec_of(m: &IntMatrix) -> Vec<BigInt> {
        let mut v = Vec::with_capacity(m.rows() * m.cols());
        for j in 0..m.cols() {
            for i in 0..m.rows() {
                v.push(m[(i, j)].clone());
            }
        }
        v
    }
}

/// The right module `x ↦ Hom(B_x, C)` with `η^{x,y}(f) = f χ_{x,y}` and
/// `ζ^{y,x}(f) = f ω_{y,x}`.
pub fn hom_module(b: &LeftModule, c: &FgAbGroup) -> Result<RightModule, ModuleError> {
    Ok(hom_module_parts(b, c)?.0)
}

fn hom_module_parts(b: &LeftModule, c: &FgAbGroup) -> Result<(RightModule, Vec<HomSpace>), ModuleError> {
    if !c.is_finite() {
        return Err(ModuleError::Group(AbError::Infinite));
    }
    let rack = b.rack();
    let n = rack.order();
    let spaces: Vec<HomSpace> = (0..n).map(|x| HomSpace::new(b.group(x), c)).collect::<Result<_, _>>()?;
    let groups: Vec<FgAbGroup> = spaces.iter().map(|s| s.sub.group().clone()).collect();
    // precompose generators of H_src with `map: B_t -> B_src`, landing in H_t
    let pre = |map: &GroupHom, from: usize, to: usize| -> Result<GroupHom, ModuleError> {
        let hs = &spaces[from];
        let ht = &spaces[to];
        let mut cols = Vec::with_capacity(hs.sub.group().gens());
        for k in 0..hs.sub.group().gens() {
            let f = hs.matrix_of(&hs.sub.generator(k));
            let g = f.mul(map.matrix());
            cols.push(ht.sub.coordinates(&HomSpace::vec_of(&g))?);
        }
        Ok(GroupHom::raw(&groups[from], &groups[to], IntMatrix::from_columns(groups[to].gens(), &cols))?)
    };
    let mut phi = Vec::with_capacity(n);
    let mut psi = Vec::with_capacity(n);
    for x in 0..n {
        let mut row = Vec::with_capacity(n);
        for y in 0..n {
            // eta^{x,y}: H_{x^y} -> H_x
            row.push(pre(b.phi(x, y), rack.op(x, y), x)?);
        }
        phi.push(row);
    }
    for y in 0..n {
        let mut row = Vec::with_capacity(n);
        for x in 0..n {
            // zeta^{y,x}: H_{x^y} -> H_y
            row.push(pre(b.psi(y, x), rack.op(x, y), y)?);
        }
        psi.push(row);
    }
    let data = RackModule::new(rack.clone(), Variance::Right, groups, phi, psi)?;
    Ok((RightModule::validate(data)?, spaces))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjunctionReport {
    /// `|Hom_X(A, Hom(B, C))|`.
    pub module_homs: u64,
    /// `|Hom(A ⊗_X B, C)|`.
    pub tensor_homs: u64,
    /// Whether every `τ(f)` is a well-defined homomorphism.
    pub well_defined: bool,
    /// Whether `τ` is injective.
    pub injective: bool,
}

impl AdjunctionReport {
    pub fn bijective(&self) -> bool {
        self.well_defined && self.injective && self.module_homs == self.tensor_homs
    }
}

/// Enumerates both sides of `Hom_X(A, Hom(B, C)) ≅ Hom(A ⊗_X B, C)` and
/// checks that `τ: f ↦ (a ⊗ b ↦ f_x(a)(b))` is a bijection.
pub fn adjunction_check(a: &RightModule, b: &LeftModule, c: &FgAbGroup, budget: u64) -> Result<AdjunctionReport, ModuleError> {
    if a.rack() != b.rack() {
        return Err(ModuleError::RackMismatch);
    }
    if !a.is_finite() || !b.is_finite() || !c.is_finite() {
        return Err(ModuleError::Group(AbError::Infinite));
    }
    let (h, spaces) = hom_module_parts(b, c)?;
    let t = tensor(a, b)?;
    let n = a.order();
    let per_x: Vec<Vec<GroupHom>> = (0..n).map(|x| enumerate_homs(a.group(x), h.group(x), budget)).collect::<Result<_, _>>()?;
    let families: f64 = per_x.iter().map(|v| v.len() as f64).product();
    if families > budget as f64 {
        return Err(ModuleError::Group(AbError::TooLarge { size: format!("{families}"), limit: budget }));
    }
    let tensor_homs = enumerate_homs(&t.group, c, budget)?.len() as u64;
    let mut seen = HashSet::new();
    let mut module_homs = 0u64;
    let mut well_defined = true;
    let mut injective = true;
    let mut idx = vec![0usize; n];
    if per_x.iter().any(Vec::is_empty) {
        return Ok(AdjunctionReport { module_homs: 0, tensor_homs, well_defined, injective });
    }
    loop {
        let maps: Vec<GroupHom> = idx.iter().enumerate().map(|(x, &i)| per_x[x][i].clone()).collect();
        let f = ModuleHom::new(a.data(), h.data(), maps)?;
        if f.check().passed() {
            module_homs += 1;
            let mut cols = vec![Vec::new(); t.labels.len()];
            for x in 0..n {
                for i in 0..a.group(x).gens() {
                    let img = f.component(x).apply(&a.group(x).generator(i));
                    let m = spaces[x].matrix_of(&spaces[x].sub.lift(&img));
                    for j in 0..b.group(x).gens() {
                        cols[t.index(x, i, j)] = m.column(j);
                    }
                }
            }
            let tau = GroupHom::raw(&t.group, c, IntMatrix::from_columns(c.gens(), &cols))?;
            if crate::abgroup::check_hom(&tau).is_err() {
                well_defined = false;
            }
            if !seen.insert(tau.canonical_matrix().entries().to_vec()) {
                injective = false;
            }
        }
        let mut k = 0;
        loop {
            if k == n {
                return Ok(AdjunctionReport { module_homs, tensor_homs, well_defined, injective });
            }
            idx[k] += 1;
            if idx[k] < per_x[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// `|Hom(G, Z/N)|` from invariant factors.
pub fn hom_count_to_cyclic(g: &FgAbGroup, modulus: u64) -> u64 {
    let m = BigInt::from(modulus);
    let mut c = BigInt::from(1);
    for d in g.torsion() {
        c *= d.gcd(&m);
    }
    for _ in 0..g.free_rank() {
        c *= &m;
    }
    c.to_u64().unwrap_or(u64::MAX)
}
