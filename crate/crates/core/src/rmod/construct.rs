use num_bigint::BigInt;
use num_integer::Integer;

use crate::abgroup::{direct_sum, FgAbGroup, GroupHom, IntMatrix};
use crate::rack::{Letter, OperatorWord, RackTable};

use super::module::{LeftModule, ModuleError, RackModule, RightModule, Variance};

impl RackModule {
    /// `A_x = G` for all `x`, `phi = id`, `psi = 0`.
    pub fn trivial(rack: &RackTable, variance: Variance, g: &FgAbGroup) -> Self {
        let n = rack.order();
        let phi = vec![vec![GroupHom::identity(g); n]; n];
        let psi = vec![vec![GroupHom::zero(g, g); n]; n];
        RackModule::new(rack.clone(), variance, vec![g.clone(); n], phi, psi).expect("trivial module shape")
    }

    /// `A_x = Z/m` (`Z` when `m = 0`), `phi = t`, `psi = 1 - t`.
    pub fn alexander(rack: &RackTable, variance: Variance, m: u64, t: i64) -> Result<Self, ModuleError> {
        let g = FgAbGroup::cyclic(m);
        let (t, s) = if m == 0 {
            if t != 1 && t != -1 {
                return Err(ModuleError::InvalidParams(format!("t = {t} is not a unit of Z")));
            }
            (BigInt::from(t), BigInt::from(1 - t))
        } else {
            let mb = BigInt::from(m);
            let t = BigInt::from(t).mod_floor(&mb);
            if t.gcd(&mb) != BigInt::from(1) {
                return Err(ModuleError::InvalidParams(format!("t = {t} is not a unit mod {m}")));
            }
            let s = (BigInt::from(1) - &t).mod_floor(&mb);
            (t, s)
        };
        let n = rack.order();
        let phi = vec![vec![GroupHom::scalar(&g, t); n]; n];
        let psi = vec![vec![GroupHom::scalar(&g, s); n]; n];
        RackModule::new(rack.clone(), variance, vec![g; n], phi, psi)
    }

    /// The Alexander module with `t = -1`.
    pub fn dihedral(rack: &RackTable, variance: Variance, m: u64) -> Result<Self, ModuleError> {
        Self::alexander(rack, variance, m, -1)
    }

    /// Componentwise direct sum of modules of one variance over one rack.
    pub fn direct_sum(parts: &[RackModule]) -> Result<Self, ModuleError> {
        let first = parts.first().ok_or_else(|| ModuleError::Shape("empty direct sum".into()))?;
        let (rack, variance) = (first.rack().clone(), first.variance());
        for p in parts {
            if p.rack() != &rack {
                return Err(ModuleError::RackMismatch);
            }
            if p.variance() != variance {
                return Err(ModuleError::Variance { expected: variance, found: p.variance() });
            }
        }
        let n = rack.order();
        let groups: Vec<FgAbGroup> = (0..n)
            .map(|x| direct_sum(&parts.iter().map(|p| p.group(x).clone()).collect::<Vec<_>>()).group)
            .collect();
        let block = |get: &dyn Fn(&RackModule) -> &GroupHom, s: usize, t: usize| {
            let mats: Vec<&IntMatrix> = parts.iter().map(|p| get(p).matrix()).collect();
            GroupHom::raw(&groups[s], &groups[t], IntMatrix::block_diag(&mats)).expect("block shape")
        };
        let mut phi = Vec::with_capacity(n);
        let mut psi = Vec::with_capacity(n);
        for i in 0..n {
            let mut prow = Vec::with_capacity(n);
            let mut srow = Vec::with_capacity(n);
            for j in 0..n {
                let (s, t) = first.phi_endpoints(i, j);
                prow.push(block(&|p: &RackModule| p.phi(i, j), s, t));
                let (s, t) = first.psi_endpoints(i, j);
                srow.push(block(&|p: &RackModule| p.psi(i, j), s, t));
            }
            phi.push(prow);
            psi.push(srow);
        }
        RackModule::new(rack, variance, groups, phi, psi)
    }

    /// Changes generators of every `A_x` by the unimodular matrix `p[x]`
    /// (with inverse `p_inv[x]`); the result is isomorphic to `self`.
    pub fn transport(&self, p: &[IntMatrix], p_inv: &[IntMatrix]) -> Result<Self, ModuleError> {
        let n = self.order();
        if p.len() != n || p_inv.len() != n {
            return Err(ModuleError::Shape("one change of basis per element is needed".into()));
        }
        let mut groups = Vec::with_capacity(n);
        for x in 0..n {
            let g = self.group(x).gens();
            if p[x].rows() != g || p[x].cols() != g || p[x].mul(&p_inv[x]) != IntMatrix::identity(g) {
                return Err(ModuleError::Shape(format!("change of basis at {x} is not an invertible {g}x{g} matrix")));
            }
            groups.push(FgAbGroup::new(g, p[x].mul(self.group(x).rels()))?);
        }
        let conj = |h: &GroupHom, s: usize, t: usize| {
            GroupHom::raw(&groups[s], &groups[t], p[t].mul(h.matrix()).mul(&p_inv[s])).expect("conjugated shape")
        };
        let mut phi = Vec::with_capacity(n);
        let mut psi = Vec::with_capacity(n);
        for i in 0..n {
            phi.push(
                (0..n)
                    .map(|j| {
                        let (s, t) = self.phi_endpoints(i, j);
                        conj(self.phi(i, j), s, t)
                    })
                    .collect(),
            );
            psi.push(
                (0..n)
                    .map(|j| {
                        let (s, t) = self.psi_endpoints(i, j);
                        conj(self.psi(i, j), s, t)
                    })
                    .collect(),
            );
        }
        RackModule::new(self.rack().clone(), self.variance(), groups, phi, psi)
    }
}

impl LeftModule {
    pub fn trivial(rack: &RackTable, g: &FgAbGroup) -> Self {
        Self::validate(RackModule::trivial(rack, Variance::Left, g)).expect("trivial modules satisfy the axioms")
    }

    pub fn alexander(rack: &RackTable, m: u64, t: i64) -> Result<Self, ModuleError> {
        Self::validate(RackModule::alexander(rack, Variance::Left, m, t)?)
    }

    pub fn dihedral(rack: &RackTable, m: u64) -> Result<Self, ModuleError> {
        Self::validate(RackModule::dihedral(rack, Variance::Left, m)?)
    }

    /// The right module over the inverted rack with the same groups,
    /// `chi^{x,y} = phi_{x^ȳ,y}` and `omega^{y,x} = psi_{x^ȳ, y^{y x̄ ȳ}}`.
    pub fn to_right_over_inverted(&self) -> RightModule {
        let x = self.rack();
        let y = x.invert();
        let n = x.order();
        let mut chi = Vec::with_capacity(n);
        let mut omega = Vec::with_capacity(n);
        for a in 0..n {
            chi.push((0..n).map(|b| self.phi(x.op_inv(a, b), b).clone()).collect::<Vec<_>>());
        }
        for b in 0..n {
            omega.push(
                (0..n)
                    .map(|a| {
                        let q = x.act(b, &OperatorWord::new([Letter::pos(b), Letter::neg(a), Letter::neg(b)]));
                        self.psi(x.op_inv(a, b), q).clone()
                    })
                    .collect::<Vec<_>>(),
            );
        }
        let data = RackModule::new(y, Variance::Right, self.groups().to_vec(), chi, omega)
            .expect("functor preserves endpoints");
        RightModule::validate(data).expect("functor preserves the module axioms")
    }
}

impl RightModule {
    pub fn trivial(rack: &RackTable, g: &FgAbGroup) -> Self {
        Self::validate(RackModule::trivial(rack, Variance::Right, g)).expect("trivial modules satisfy the axioms")
    }

    pub fn alexander(rack: &RackTable, m: u64, t: i64) -> Result<Self, ModuleError> {
        Self::validate(RackModule::alexander(rack, Variance::Right, m, t)?)
    }

    pub fn dihedral(rack: &RackTable, m: u64) -> Result<Self, ModuleError> {
        Self::validate(RackModule::dihedral(rack, Variance::Right, m)?)
    }

    /// Inverse of [`LeftModule::to_right_over_inverted`]: the left module over
    /// the inverted rack with `phi_{x,y} = chi^{x^y,y}` and
    /// `psi_{y,x} = omega^{x^y, y^{ȳ x y}}`.
    pub fn to_left_over_inverted(&self) -> LeftModule {
        let y = self.rack();
        let x = y.invert();
        let n = x.order();
        let mut phi = Vec::with_capacity(n);
        let mut psi = Vec::with_capacity(n);
        for a in 0..n {
            phi.push((0..n).map(|b| self.phi(x.op(a, b), b).clone()).collect::<Vec<_>>());
        }
        for b in 0..n {
            psi.push(
                (0..n)
                    .map(|a| {
                        let q = x.act(b, &OperatorWord::new([Letter::neg(b), Letter::pos(a), Letter::pos(b)]));
                        self.psi(x.op(a, b), q).clone()
                    })
                    .collect::<Vec<_>>(),
            );
        }
        let data = RackModule::new(x, Variance::Left, self.groups().to_vec(), phi, psi)
            .expect("functor preserves endpoints");
        LeftModule::validate(data).expect("functor preserves the module axioms")
    }
}
