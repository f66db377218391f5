use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::abgroup::{check_hom, AbError, FgAbGroup, GroupHom};
use crate::rack::{RackError, RackTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variance {
    Left,
    Right,
}

impl fmt::Display for Variance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variance::Left => "left",
            Variance::Right => "right",
        })
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ModuleError {
    #[error("malformed module data: {0}")]
    Shape(String),
    #[error("expected a {expected} module, got a {found} module")]
    Variance { expected: Variance, found: Variance },
    #[error("modules live over different racks")]
    RackMismatch,
    #[error("the base rack is not a quandle")]
    NotQuandle,
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("module axioms fail:\n{0}")]
    Axioms(AxiomReport),
    #[error(transparent)]
    Rack(#[from] RackError),
    #[error(transparent)]
    Group(#[from] AbError),
}

/// Module data over a rack, not yet checked against the module axioms.
///
/// For a left module `phi[x][y]: A_x -> A_{x^y}` and `psi[y][x]: A_y -> A_{x^y}`.
/// For a right module `phi[x][y]: A_{x^y} -> A_x` and `psi[y][x]: A_{x^y} -> A_y`.
/// Endpoints are checked on construction; well-definedness and the axioms
/// are left to [`RackModule::check`].
#[derive(Clone, Debug, PartialEq)]
pub struct RackModule {
    rack: RackTable,
    variance: Variance,
    groups: Vec<FgAbGroup>,
    phi: Vec<Vec<GroupHom>>,
    psi: Vec<Vec<GroupHom>>,
}

impl RackModule {
    pub fn new(
        rack: RackTable,
        variance: Variance,
        groups: Vec<FgAbGroup>,
        phi: Vec<Vec<GroupHom>>,
        psi: Vec<Vec<GroupHom>>,
    ) -> Result<Self, ModuleError> {
        let n = rack.order();
        if groups.len() != n {
            return Err(ModuleError::Shape(format!("{} groups for a rack of order {n}", groups.len())));
        }
        for (name, maps) in [("phi", &phi), ("psi", &psi)] {
            if maps.len() != n || maps.iter().any(|r| r.len() != n) {
                return Err(ModuleError::Shape(format!("{name} must be an {n}x{n} array of maps")));
            }
        }
        let m = RackModule { rack, variance, groups, phi, psi };
        for i in 0..n {
            for j in 0..n {
                let (s, t) = m.phi_endpoints(i, j);
                if m.phi[i][j].source() != &m.groups[s] || m.phi[i][j].target() != &m.groups[t] {
                    return Err(ModuleError::Shape(format!("phi[{i}][{j}] has the wrong endpoints")));
                }
                let (s, t) = m.psi_endpoints(i, j);
                if m.psi[i][j].source() != &m.groups[s] || m.psi[i][j].target() != &m.groups[t] {
                    return Err(ModuleError::Shape(format!("psi[{i}][{j}] has the wrong endpoints")));
                }
            }
        }
        Ok(m)
    }

    /// Source and target element of `phi[x][y]`.
    pub fn phi_endpoints(&self, x: usize, y: usize) -> (usize, usize) {
        let xy = self.rack.op(x, y);
        match self.variance {
            Variance::Left => (x, xy),
            Variance::Right => (xy, x),
        }
    }

    /// Source and target element of `psi[y][x]`.
    pub fn psi_endpoints(&self, y: usize, x: usize) -> (usize, usize) {
        let xy = self.rack.op(x, y);
        match self.variance {
            Variance::Left => (y, xy),
            Variance::Right => (xy, y),
        }
    }

    pub fn rack(&self) -> &RackTable {
        &self.rack
    }

    pub fn variance(&self) -> Variance {
        self.variance
    }

    pub fn group(&self, x: usize) -> &FgAbGroup {
        &self.groups[x]
    }

    pub fn groups(&self) -> &[FgAbGroup] {
        &self.groups
    }

    /// `phi_{x,y}` (left) or `phi^{x,y}` (right).
    pub fn phi(&self, x: usize, y: usize) -> &GroupHom {
        &self.phi[x][y]
    }

    /// `psi_{y,x}` (left) or `psi^{y,x}` (right).
    pub fn psi(&self, y: usize, x: usize) -> &GroupHom {
        &self.psi[y][x]
    }

    pub fn order(&self) -> usize {
        self.rack.order()
    }

    /// Whether every `A_x` is finite.
    pub fn is_finite(&self) -> bool {
        self.groups.iter().all(FgAbGroup::is_finite)
    }

    /// Whether every `A_x` is free abelian.
    pub fn is_free(&self) -> bool {
        self.groups.iter().all(|g| g.torsion().is_empty())
    }

    /// Replaces one structure map, keeping the endpoints. Used to build
    /// deliberately broken data.
    pub fn with_map(&self, which: MapKind, i: usize, j: usize, map: GroupHom) -> Result<Self, ModuleError> {
        let mut phi = self.phi.clone();
        let mut psi = self.psi.clone();
        match which {
            MapKind::Phi => phi[i][j] = map,
            MapKind::Psi => psi[i][j] = map,
        }
        RackModule::new(self.rack.clone(), self.variance, self.groups.clone(), phi, psi)
    }

    /// Checks every module axiom for this variance.
    pub fn check(&self) -> AxiomReport {
        let mut rep = AxiomReport::default();
        let n = self.order();
        for i in 0..n {
            for j in 0..n {
                rep.record(check_hom(&self.phi[i][j]).is_ok(), Axiom::PhiWellDefined, &[i, j]);
                rep.record(check_hom(&self.psi[i][j]).is_ok(), Axiom::PsiWellDefined, &[i, j]);
            }
        }
        if !rep.passed() {
            return rep;
        }
        for x in 0..n {
            for y in 0..n {
                rep.record(self.phi[x][y].is_iso(), Axiom::PhiIso, &[x, y]);
            }
        }
        let r = &self.rack;
        let eq = |a: Result<GroupHom, AbError>, b: Result<GroupHom, AbError>| match (a, b) {
            (Ok(a), Ok(b)) => a.equals(&b),
            _ => false,
        };
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let (xy, xz, yz) = (r.op(x, y), r.op(x, z), r.op(y, z));
                    let (t1, t2, e1) = match self.variance {
                        Variance::Left => (
                            eq(self.phi[xy][z].compose(&self.phi[x][y]), self.phi[xz][yz].compose(&self.phi[x][z])),
                            eq(self.phi[xy][z].compose(&self.psi[y][x]), self.psi[yz][xz].compose(&self.phi[y][z])),
                            eq(Ok(self.psi[z][xy].clone()), sum(
                                self.phi[xz][yz].compose(&self.psi[z][x]),
                                self.psi[yz][xz].compose(&self.psi[z][y]),
                            )),
                        ),
                        Variance::Right => (
                            eq(self.phi[x][y].compose(&self.phi[xy][z]), self.phi[x][z].compose(&self.phi[xz][yz])),
                            eq(self.psi[y][x].compose(&self.phi[xy][z]), self.phi[y][z].compose(&self.psi[yz][xz])),
                            eq(Ok(self.psi[z][xy].clone()), sum(
                                self.psi[z][x].compose(&self.phi[xz][yz]),
                                self.psi[z][y].compose(&self.psi[yz][xz]),
                            )),
                        ),
                    };
                    rep.record(t1, Axiom::PhiSquare, &[x, y, z]);
                    rep.record(t2, Axiom::MixedSquare, &[x, y, z]);
                    rep.record(e1, Axiom::PsiSum, &[x, y, z]);
                }
            }
        }
        rep
    }

    /// Checks `psi_{x,x} + phi_{x,x} = id` for every `x`.
    pub fn check_quandle(&self) -> Result<AxiomReport, ModuleError> {
        if !self.rack.is_quandle() {
            return Err(ModuleError::NotQuandle);
        }
        let mut rep = AxiomReport::default();
        for x in 0..self.order() {
            let ok = match self.psi[x][x].add(&self.phi[x][x]) {
                Ok(s) => s.equals(&GroupHom::identity(&self.groups[x])),
                Err(_) => false,
            };
            rep.record(ok, Axiom::QuandleCondition, &[x]);
        }
        Ok(rep)
    }

    /// The full check: module axioms, plus the quandle condition when the
    /// base rack is a quandle and `with_quandle` is set.
    pub fn check_all(&self, with_quandle: bool) -> AxiomReport {
        let mut rep = self.check();
        if with_quandle && self.rack.is_quandle() && rep.passed() {
            rep.merge(self.check_quandle().expect("quandle base"));
        }
        rep
    }

    /// Whether this module satisfies the quandle condition (false when the
    /// base is not a quandle).
    pub fn is_quandle_module(&self) -> bool {
        self.check_quandle().map(|r| r.passed()).unwrap_or(false)
    }
}

fn sum(a: Result<GroupHom, AbError>, b: Result<GroupHom, AbError>) -> Result<GroupHom, AbError> {
    a?.add(&b?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapKind {
    Phi,
    Psi,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    PhiWellDefined,
    PsiWellDefined,
    PhiIso,
    /// The square of `phi` maps.
    PhiSquare,
    /// The square mixing `phi` and `psi`.
    MixedSquare,
    /// `psi` of a product as a sum of two composites.
    PsiSum,
    QuandleCondition,
    Naturality,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::PhiWellDefined => "phi well defined",
            Axiom::PsiWellDefined => "psi well defined",
            Axiom::PhiIso => "phi invertible",
            Axiom::PhiSquare => "phi square",
            Axiom::MixedSquare => "phi/psi square",
            Axiom::PsiSum => "psi sum identity",
            Axiom::QuandleCondition => "quandle condition",
            Axiom::Naturality => "naturality",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomFailure {
    pub axiom: Axiom,
    pub indices: Vec<usize>,
}

impl fmt::Display for AxiomFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.indices.iter().map(ToString::to_string).collect();
        write!(f, "{} fails at ({})", self.axiom, idx.join(", "))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub checked: usize,
    pub failures: Vec<AxiomFailure>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub(crate) fn record(&mut self, ok: bool, axiom: Axiom, indices: &[usize]) {
        self.checked += 1;
        if !ok {
            self.failures.push(AxiomFailure { axiom, indices: indices.to_vec() });
        }
    }

    pub fn merge(&mut self, other: AxiomReport) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }

    pub fn fails(&self, axiom: Axiom) -> bool {
        self.failures.iter().any(|f| f.axiom == axiom)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "all {} checks pass", self.checked);
        }
        for (i, fail) in self.failures.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{fail}")?;
        }
        Ok(())
    }
}

macro_rules! validated {
    ($name:ident, $variance:expr, $doc:literal) => {
        #[doc = $doc]
        #[derive(Clone, Debug, PartialEq)]
        pub struct $name(Arc<RackModule>);

        impl $name {
            /// Validates the data against the module axioms.
            pub fn validate(data: RackModule) -> Result<Self, ModuleError> {
                if data.variance != $variance {
                    return Err(ModuleError::Variance { expected: $variance, found: data.variance });
                }
                let rep = data.check();
                if !rep.passed() {
                    return Err(ModuleError::Axioms(rep));
                }
                Ok($name(Arc::new(data)))
            }

            pub fn data(&self) -> &RackModule {
                &self.0
            }
        }

        impl Deref for $name {
            type Target = RackModule;

            fn deref(&self) -> &RackModule {
                &self.0
            }
        }
    };
}

validated!(LeftModule, Variance::Left, "A left module over a rack whose axioms have been verified.");
validated!(RightModule, Variance::Right, "A right module over a rack whose axioms have been verified.");
