use serde::{Deserialize, Serialize};

use crate::abgroup::{BigIntRepr, FgAbGroup, GroupHom, IntMatrix};
use crate::rack::RackTable;

use super::module::{LeftModule, ModuleError, RackModule, RightModule, Variance};

/// Module description independent of the variance, as accepted by
/// [`ModuleSpec`] and the command-line shorthand.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ModuleKind {
    /// `m = 0` means `Z`; alternatively an explicit `group`.
    Trivial {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        m: Option<u64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        group: Option<FgAbGroup>,
    },
    Alexander { m: u64, t: i64 },
    Dihedral { m: u64 },
    /// Matrices are lists of rows; `phi[x][y]` and `psi[y][x]`.
    Explicit {
        groups: Vec<FgAbGroup>,
        phi: Vec<Vec<Vec<Vec<BigIntRepr>>>>,
        psi: Vec<Vec<Vec<Vec<BigIntRepr>>>>,
    },
}

/// JSON module file: `{"variance": "left" | "right", "kind": ..., ...}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModuleSpec {
    pub variance: Variance,
    #[serde(flatten)]
    pub kind: ModuleKind,
}

impl ModuleKind {
    /// Whether the description makes sense in either variance.
    pub fn is_variance_free(&self) -> bool {
        !matches!(self, ModuleKind::Explicit { .. })
    }

    /// Builds unvalidated module data over `rack`.
    pub fn build(&self, rack: &RackTable, variance: Variance) -> Result<RackModule, ModuleError> {
        match self {
            ModuleKind::Trivial { m, group } => {
                let g = match (m, group) {
                    (Some(m), None) => FgAbGroup::cyclic(*m),
                    (None, Some(g)) => g.clone(),
                    _ => return Err(ModuleError::InvalidParams("trivial module needs exactly one of m, group".into())),
                };
                Ok(RackModule::trivial(rack, variance, &g))
            }
            ModuleKind::Alexander { m, t } => RackModule::alexander(rack, variance, *m, *t),
            ModuleKind::Dihedral { m } => RackModule::dihedral(rack, variance, *m),
            ModuleKind::Explicit { groups, phi, psi } => {
                let n = rack.order();
                if groups.len() != n {
                    return Err(ModuleError::Shape(format!("{} groups for a rack of order {n}", groups.len())));
                }
                let ends = |kind: &str, i: usize, j: usize| {
                    let xy = match kind {
                        "phi" => rack.op(i, j),
                        _ => rack.op(j, i),
                    };
                    match variance {
                        Variance::Left => (i, xy),
                        Variance::Right => (xy, i),
                    }
                };
                let mut maps = Vec::new();
                for (kind, data) in [("phi", phi), ("psi", psi)] {
                    if data.len() != n || data.iter().any(|r| r.len() != n) {
                        return Err(ModuleError::Shape(format!("{kind} must be an {n}x{n} array of matrices")));
                    }
                    let mut arr = Vec::with_capacity(n);
                    for i in 0..n {
                        let mut row = Vec::with_capacity(n);
                        for j in 0..n {
                            let (s, t) = ends(kind, i, j);
                            let m = rows_to_matrix(&data[i][j], groups[t].gens(), groups[s].gens())
                                .map_err(|e| ModuleError::Shape(format!("{kind}[{i}][{j}]: {e}")))?;
                            row.push(GroupHom::raw(&groups[s], &groups[t], m)?);
                        }
                        arr.push(row);
                    }
                    maps.push(arr);
                }
                let psi = maps.pop().unwrap();
                let phi = maps.pop().unwrap();
                RackModule::new(rack.clone(), variance, groups.clone(), phi, psi)
            }
        }
    }

    /// Parses the command-line shorthand `trivial-Z`, `trivial-Z/3`,
    /// `dihedral-Z/5`, `alexander-Z/3-t2`.
    pub fn parse_shorthand(s: &str) -> Option<ModuleKind> {
        let mut parts = s.split('-');
        let kind = parts.next()?;
        let group = parts.next()?;
        let m: u64 = match group {
            "Z" => 0,
            g => g.strip_prefix("Z/")?.parse().ok()?,
        };
        let rest: Vec<&str> = parts.collect();
        match (kind, rest.as_slice()) {
            ("trivial", []) => Some(ModuleKind::Trivial { m: Some(m), group: None }),
            ("dihedral", []) => Some(ModuleKind::Dihedral { m }),
            ("alexander", [t]) => Some(ModuleKind::Alexander { m, t: t.strip_prefix('t')?.parse().ok()? }),
            // a negative t splits as "t", "1"
            ("alexander", ["t", t]) => Some(ModuleKind::Alexander { m, t: -t.parse::<i64>().ok()? }),
            _ => None,
        }
    }

    /// The explicit description of existing module data.
    pub fn explicit(m: &RackModule) -> ModuleKind {
        let n = m.order();
        let conv = |h: &GroupHom| -> Vec<Vec<BigIntRepr>> {
            (0..h.matrix().rows())
                .map(|i| h.matrix().row(i).iter().cloned().map(BigIntRepr).collect())
                .collect()
        };
        ModuleKind::Explicit {
            groups: m.groups().to_vec(),
            phi: (0..n).map(|i| (0..n).map(|j| conv(m.phi(i, j))).collect()).collect(),
            psi: (0..n).map(|i| (0..n).map(|j| conv(m.psi(i, j))).collect()).collect(),
        }
    }
}

fn rows_to_matrix(rows: &[Vec<BigIntRepr>], r: usize, c: usize) -> Result<IntMatrix, String> {
    if rows.len() != r || rows.iter().any(|row| row.len() != c) {
        return Err(format!("expected a {r}x{c} matrix"));
    }
    Ok(IntMatrix::from_vec(r, c, rows.iter().flatten().map(|x| x.0.clone()).collect()))
}

impl ModuleSpec {
    pub fn build(&self, rack: &RackTable) -> Result<RackModule, ModuleError> {
        self.kind.build(rack, self.variance)
    }

    pub fn build_left(&self, rack: &RackTable) -> Result<LeftModule, ModuleError> {
        LeftModule::validate(self.build(rack)?)
    }

    pub fn build_right(&self, rack: &RackTable) -> Result<RightModule, ModuleError> {
        RightModule::validate(self.build(rack)?)
    }

    pub fn from_module(m: &RackModule) -> Self {
        ModuleSpec { variance: m.variance(), kind: ModuleKind::explicit(m) }
    }
}
