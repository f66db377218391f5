use num_bigint::BigInt;

use crate::abgroup::{check_hom, direct_sum, AbError, GroupHom, IntMatrix, Invariants};
use crate::rack::{Letter, OperatorWord};
use crate::rmod::LeftModule;

use super::element::WringTerm;

/// Rewrites `τ(*) ⊗ a` to `(*) ⊗ a'` using `ρ_{x,y}(*) ⊗ a = (*) ⊗ φ_{x,y}(a)`
/// and `λ_{y,x}(*) ⊗ b = (*) ⊗ ψ_{y,x}(b)`, one letter at a time.
pub struct Collapser<'a> {
    module: &'a LeftModule,
    inverses: Vec<Vec<GroupHom>>,
}

impl<'a> Collapser<'a> {
    pub fn new(module: &'a LeftModule) -> Self {
        let n = module.order();
        let inverses = (0..n)
            .map(|x| (0..n).map(|y| module.phi(x, y).inverse().expect("phi is invertible")).collect())
            .collect();
        Collapser { module, inverses }
    }

    /// The map `A_c -> A_{c^l}` of a single letter at the point `c`.
    pub fn letter_map(&self, c: usize, l: Letter) -> &GroupHom {
        let rack = self.module.rack();
        if l.inv {
            &self.inverses[rack.op_inv(c, l.elem)][l.elem]
        } else {
            self.module.phi(c, l.elem)
        }
    }

    /// Composite of the letter maps of a (not necessarily reduced) letter
    /// sequence starting at `c`.
    pub fn letters_map(&self, c: usize, letters: &[Letter]) -> GroupHom {
        let rack = self.module.rack();
        let mut point = c;
        let mut acc = GroupHom::identity(self.module.group(c));
        for &l in letters {
            acc = self.letter_map(point, l).compose(&acc).expect("letter maps compose");
            point = rack.apply_letter(point, l);
        }
        acc
    }

    /// The map `A_{source} -> A_base` that the symbol `τ` at `base` induces.
    pub fn term_map(&self, base: usize, term: &WringTerm) -> GroupHom {
        let rack = self.module.rack();
        match term {
            WringTerm::Rho(w) => self.letters_map(term.source(rack, base), w.letters()),
            WringTerm::RhoLambda(v, t) => {
                let c = rack.act(base, &v.inverse().concat(&OperatorWord::letter(Letter::neg(*t))));
                let start = self.module.psi(*t, c);
                self.letters_map(rack.op(c, *t), v.letters()).compose(start).expect("psi then letters")
            }
        }
    }

    /// `τ(*) ⊗ a ↦ a'`.
    pub fn collapse(&self, base: usize, term: &WringTerm, a: &[BigInt]) -> Vec<BigInt> {
        let m = self.term_map(base, term);
        m.target().reduce(&m.apply(a))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollapseReport {
    /// Invariants of the presented summand `(ZX ⊗ A)_x` (from words up to
    /// the chosen length), per element.
    pub tensor_invariants: Vec<Invariants>,
    pub module_invariants: Vec<Invariants>,
    /// Whether the collapse map `(ZX ⊗ A)_x -> A_x` is a well-defined
    /// isomorphism for every `x`.
    pub isomorphic: bool,
    /// Whether the induced structure maps equal `φ` and `ψ`.
    pub structure_maps_match: bool,
    pub symbols: usize,
}

impl CollapseReport {
    pub fn passed(&self) -> bool {
        self.isomorphic && self.structure_maps_match && self.tensor_invariants == self.module_invariants
    }
}

/// All freely reduced words of length at most `len` over `n` letters.
pub fn words_up_to(n: usize, len: usize) -> Vec<OperatorWord> {
    let mut out = vec![OperatorWord::empty()];
    let mut frontier = vec![OperatorWord::empty()];
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &frontier {
            for e in 0..n {
                for l in [Letter::pos(e), Letter::neg(e)] {
                    if w.letters().last() == Some(&l.inverse()) {
                        continue;
                    }
                    let mut v = w.clone();
                    v.push(l);
                    next.push(v);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Presents `(ZX ⊗_X A)_x` on the symbols with words of length at most
/// `len`, related by the two rewrite rules, and compares it with `A_x`.
pub fn collapse_report(a: &LeftModule, len: usize) -> Result<CollapseReport, AbError> {
    let rack = a.rack();
    let n = rack.order();
    let col = Collapser::new(a);
    let words = words_up_to(n, len);
    let mut terms: Vec<WringTerm> = words.iter().cloned().map(WringTerm::Rho).collect();
    for w in &words {
        for t in 0..n {
            terms.push(WringTerm::RhoLambda(w.clone(), t));
        }
    }
    let position = |t: &WringTerm| terms.iter().position(|u| u == t).expect("symbol in family");
    let mut tensor_invariants = Vec::with_capacity(n);
    let mut isomorphic = true;
    let mut structure_maps_match = true;
    for x in 0..n {
        let summands: Vec<_> = terms.iter().map(|t| a.group(t.source(rack, x)).clone()).collect();
        let ds = direct_sum(&summands);
        let total = ds.group.gens();
        let mut rels: Vec<Vec<BigInt>> = ds.group.rels().columns().collect();
        for (k, t) in terms.iter().enumerate() {
            // the symbol minus its one-step rewrite
            let (target, map) = match t {
                WringTerm::Rho(w) if w.is_empty() => continue,
                WringTerm::Rho(w) => {
                    let first = w.letters()[0];
                    let rest = OperatorWord::new(w.letters()[1..].iter().copied());
                    let s = t.source(rack, x);
                    (position(&WringTerm::Rho(rest)), col.letter_map(s, first).clone())
                }
                WringTerm::RhoLambda(v, s) => {
                    let c = rack.act(x, &v.inverse().concat(&OperatorWord::letter(Letter::neg(*s))));
                    (position(&WringTerm::Rho(v.clone())), a.psi(*s, c).clone())
                }
            };
            for i in 0..summands[k].gens() {
                let mut colv = vec![BigInt::from(0); total];
                colv[ds.offsets[k] + i] += 1;
                for (r, v) in map.matrix().column(i).into_iter().enumerate() {
                    colv[ds.offsets[target] + r] -= v;
                }
                rels.push(colv);
            }
        }
        let bx = crate::abgroup::FgAbGroup::new(total, IntMatrix::from_columns(total, &rels))?;
        let mut kcols = Vec::with_capacity(total);
        for (k, t) in terms.iter().enumerate() {
            let m = col.term_map(x, t);
            for i in 0..summands[k].gens() {
                kcols.push(m.matrix().column(i));
            }
        }
        let kappa = GroupHom::raw(&bx, a.group(x), IntMatrix::from_columns(a.group(x).gens(), &kcols))?;
        isomorphic &= check_hom(&kappa).is_ok() && kappa.is_iso();
        tensor_invariants.push(bx.invariants().clone());
        for y in 0..n {
            let xy = rack.op(x, y);
            let chi = col.term_map(xy, &WringTerm::Rho(OperatorWord::letter(Letter::pos(y))));
            structure_maps_match &= chi.equals(a.phi(x, y));
            let omega = col.term_map(xy, &WringTerm::RhoLambda(OperatorWord::empty(), y));
            structure_maps_match &= omega.source() == a.group(y) && omega.equals(a.psi(y, x));
        }
    }
    Ok(CollapseReport {
        tensor_invariants,
        module_invariants: a.groups().iter().map(|g| g.invariants().clone()).collect(),
        isomorphic,
        structure_maps_match,
        symbols: terms.len(),
    })
}
