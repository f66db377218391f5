//! Subquotients `P / Q` of a free module `Z^n`, where `P` is spanned by a
//! set of vectors and `Q ⊆ P`. Kernels, images and homology at a spot are
//! all instances.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::group::FgAbGroup;
use super::hom::GroupHom;
use super::matrix::IntMatrix;
use super::snf::{smith, Transforms};
use super::AbError;

/// A subquotient presented in reduced form: generators are independent
/// Smith generators, relators are `d_i >= 2` on single generators.
#[derive(Clone, Debug)]
pub struct Subquotient {
    ambient_dim: usize,
    group: FgAbGroup,
    /// Ambient representatives of the generators (`ambient_dim x k`).
    generators: IntMatrix,
    /// Smith transform of the spanning set (lattice coordinates).
    lattice_u: IntMatrix,
    lattice_d: Vec<BigInt>,
    /// Rows of the quotient transform kept as generators.
    quotient_u: IntMatrix,
    moduli: Vec<BigInt>,
}

impl Subquotient {
    /// Builds `span(spanning) / span(relations)` inside `Z^ambient_dim`.
    pub fn new(ambient_dim: usize, spanning: &IntMatrix, relations: &IntMatrix) -> Result<Self, AbError> {
        assert_eq!(spanning.rows(), ambient_dim);
        assert_eq!(relations.rows(), ambient_dim);
        let sk = smith(spanning, Transforms::LEFT);
        let p = sk.rank();
        let u = sk.u.unwrap();
        let u_inv = sk.u_inv.unwrap();
        let lattice_d = sk.diagonal;

        // coordinates of the relations in the lattice basis
        let mut ycols = Vec::with_capacity(relations.cols());
        for c in relations.columns() {
            ycols.push(lattice_coords(&u, &lattice_d, &c).ok_or(AbError::NotSubgroup)?);
        }
        let y = IntMatrix::from_columns(p, &ycols);
        let sy = smith(&y, Transforms::LEFT);
        let r = sy.rank();
        let uy = sy.u.unwrap();
        let uy_inv = sy.u_inv.unwrap();

        let mut kept = Vec::new();
        let mut moduli = Vec::new();
        for i in 0..p {
            if i < r {
                if sy.diagonal[i].is_one() {
                    continue;
                }
                moduli.push(sy.diagonal[i].clone());
            } else {
                moduli.push(BigInt::zero());
            }
            kept.push(i);
        }
        // lattice basis B = U^-1[:, :p] diag(d); generators = B * Uy^-1[:, kept]
        let mut basis = IntMatrix::zeros(ambient_dim, p);
        for i in 0..ambient_dim {
            for j in 0..p {
                basis[(i, j)] = &u_inv[(i, j)] * &lattice_d[j];
            }
        }
        let generators = basis.mul(&uy_inv.select_columns(&kept));
        let quotient_u = uy.select_rows(&kept);

        let k = kept.len();
        let nz: Vec<usize> = (0..k).filter(|&i| !moduli[i].is_zero()).collect();
        let mut rels = IntMatrix::zeros(k, nz.len());
        for (c, &i) in nz.iter().enumerate() {
            rels[(i, c)] = moduli[i].clone();
        }
        Ok(Subquotient {
            ambient_dim,
            group: FgAbGroup::from_parts(k, rels),
            generators,
            lattice_u: u,
            lattice_d,
            quotient_u,
            moduli,
        })
    }

    pub fn group(&self) -> &FgAbGroup {
        &self.group
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Ambient representative of generator `i`.
    pub fn generator(&self, i: usize) -> Vec<BigInt> {
        self.generators.column(i)
    }

    pub fn generators(&self) -> &IntMatrix {
        &self.generators
    }

    /// Whether an ambient vector lies in the spanning lattice.
    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.coordinates(v).is_ok()
    }

    /// Canonical coordinates of an ambient vector of the spanning lattice in
    /// terms of [`Subquotient::group`]'s generators.
    pub fn coordinates(&self, v: &[BigInt]) -> Result<Vec<BigInt>, AbError> {
        assert_eq!(v.len(), self.ambient_dim);
        let c = lattice_coords(&self.lattice_u, &self.lattice_d, v).ok_or(AbError::NotSubgroup)?;
        let mut out = self.quotient_u.mul_vec(&c);
        for (o, m) in out.iter_mut().zip(&self.moduli) {
            if !m.is_zero() {
                *o = o.mod_floor(m);
            }
        }
        Ok(out)
    }

    /// Ambient representative of a class given in generator coordinates.
    pub fn lift(&self, coords: &[BigInt]) -> Vec<BigInt> {
        self.generators.mul_vec(coords)
    }
}

fn lattice_coords(u: &IntMatrix, d: &[BigInt], v: &[BigInt]) -> Option<Vec<BigInt>> {
    let y = u.mul_vec(v);
    let p = d.len();
    if y[p..].iter().any(|x| !x.is_zero()) {
        return None;
    }
    let mut c = Vec::with_capacity(p);
    for (yi, di) in y.iter().zip(d) {
        let (q, r) = yi.div_rem(di);
        if !r.is_zero() {
            return None;
        }
        c.push(q);
    }
    Some(c)
}

/// Generators of `{ v : g v ∈ span(target relations) }`, the preimage of
/// zero under `g` in source coordinates.
fn preimage_of_zero(g: &GroupHom) -> IntMatrix {
    let b = g.source().gens();
    let c = g.target().gens();
    if c == 0 {
        return IntMatrix::identity(b);
    }
    let m = g.matrix().hcat(g.target().rels());
    let s = smith(&m, Transforms::RIGHT);
    let r = s.rank();
    let v = s.v.unwrap();
    v.submatrix(0..b, r..m.cols())
}

/// `ker g / im f` for `A --f--> B --g--> C` with `g ∘ f = 0`.
pub fn homology_at(f: &GroupHom, g: &GroupHom) -> Result<Subquotient, AbError> {
    if f.target() != g.source() {
        return Err(AbError::Endpoint("homology_at: f target differs from g source".into()));
    }
    let gf = g.compose(f)?;
    if !gf.is_zero_hom() {
        return Err(AbError::CompositeNotZero);
    }
    let b = g.source().gens();
    let spanning = preimage_of_zero(g);
    let relations = f.matrix().hcat(g.source().rels());
    Subquotient::new(b, &spanning, &relations)
}

/// `ker f` as a subquotient of the source presentation.
pub fn kernel(f: &GroupHom) -> Result<Subquotient, AbError> {
    let spanning = preimage_of_zero(f);
    Subquotient::new(f.source().gens(), &spanning, f.source().rels())
}

/// `im f` as a subquotient of the target presentation.
pub fn image(f: &GroupHom) -> Result<Subquotient, AbError> {
    let spanning = f.matrix().hcat(f.target().rels());
    Subquotient::new(f.target().gens(), &spanning, f.target().rels())
}
