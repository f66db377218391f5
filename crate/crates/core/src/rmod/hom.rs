use crate::abgroup::GroupHom;

use super::module::{Axiom, AxiomReport, ModuleError, RackModule};

/// A family of group homomorphisms `f_x: A_x -> B_x` between two modules of
/// the same variance over the same rack.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleHom {
    source: RackModule,
    target: RackModule,
    maps: Vec<GroupHom>,
}

impl ModuleHom {
    pub fn new(source: &RackModule, target: &RackModule, maps: Vec<GroupHom>) -> Result<Self, ModuleError> {
        if source.variance() != target.variance() {
            return Err(ModuleError::Variance { expected: source.variance(), found: target.variance() });
        }
        if source.rack() != target.rack() {
            return Err(ModuleError::RackMismatch);
        }
        if maps.len() != source.order() {
            return Err(ModuleError::Shape(format!("{} component maps for {} elements", maps.len(), source.order())));
        }
        for (x, f) in maps.iter().enumerate() {
            if f.source() != source.group(x) || f.target() != target.group(x) {
                return Err(ModuleError::Shape(format!("component {x} has the wrong endpoints")));
            }
        }
        Ok(ModuleHom { source: source.clone(), target: target.clone(), maps })
    }

    pub fn identity(m: &RackModule) -> Self {
        let maps = m.groups().iter().map(GroupHom::identity).collect();
        ModuleHom { source: m.clone(), target: m.clone(), maps }
    }

    pub fn zero(source: &RackModule, target: &RackModule) -> Result<Self, ModuleError> {
        let maps = (0..source.order()).map(|x| GroupHom::zero(source.group(x), target.group(x))).collect();
        Self::new(source, target, maps)
    }

    /// Multiplication by `k` in every component.
    pub fn scalar(m: &RackModule, k: i64) -> Self {
        let maps = m.groups().iter().map(|g| GroupHom::scalar(g, k)).collect();
        ModuleHom { source: m.clone(), target: m.clone(), maps }
    }

    pub fn source(&self) -> &RackModule {
        &self.source
    }

    pub fn target(&self) -> &RackModule {
        &self.target
    }

    pub fn component(&self, x: usize) -> &GroupHom {
        &self.maps[x]
    }

    /// Checks that every component is well defined and that every structure
    /// map commutes with the family: `f_t ∘ m = m' ∘ f_s` for each map
    /// `m: A_s -> A_t` of the source and its partner `m'` in the target.
    pub fn check(&self) -> AxiomReport {
        let mut rep = AxiomReport::default();
        for f in &self.maps {
            rep.record(crate::abgroup::check_hom(f).is_ok(), Axiom::Naturality, &[]);
        }
        if !rep.passed() {
            return rep;
        }
        let n = self.source.order();
        for i in 0..n {
            for j in 0..n {
                let (s, t) = self.source.phi_endpoints(i, j);
                rep.record(self.commutes(self.source.phi(i, j), self.target.phi(i, j), s, t), Axiom::Naturality, &[i, j]);
                let (s, t) = self.source.psi_endpoints(i, j);
                rep.record(self.commutes(self.source.psi(i, j), self.target.psi(i, j), s, t), Axiom::Naturality, &[i, j]);
            }
        }
        rep
    }

    fn commutes(&self, m: &GroupHom, m2: &GroupHom, s: usize, t: usize) -> bool {
        match (self.maps[t].compose(m), m2.compose(&self.maps[s])) {
            (Ok(a), Ok(b)) => a.equals(&b),
            _ => false,
        }
    }
}
