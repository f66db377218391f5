use std::fmt::Write;

use serde::{Deserialize, Serialize};

use rackhom::abgroup::{Invariants, InvariantsRepr};
use rackhom::homology::{DegreeGroup, Direction, Theory};
use rackhom::rmod::Variance;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCheck {
    /// `|Z| / |B|` by enumeration.
    pub count: u64,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleCheck {
    pub variance: Variance,
    pub checked: usize,
    pub failures: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quandle_condition: Option<bool>,
}

impl ModuleCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.quandle_condition != Some(false)
    }
}

/// Everything a command prints. Text output is rendered from this value, so
/// the JSON form carries all of it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Report {
    Validate {
        rack: String,
        valid: bool,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        quandle: Option<bool>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        orbits: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        error: Option<String>,
    },
    Info {
        rack: String,
        order: usize,
        quandle: bool,
        orbits: Vec<Vec<usize>>,
        inverted: Vec<Vec<usize>>,
    },
    Homology(GroupsReport),
    Cohomology(GroupsReport),
    Ext {
        rack: String,
        module: String,
        ext: InvariantsRepr,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        oracle: Option<OracleCheck>,
    },
    Derivations {
        rack: String,
        module: String,
        z: usize,
        der: InvariantsRepr,
        pder: InvariantsRepr,
        h1: InvariantsRepr,
    },
    Tensor {
        rack: String,
        right: String,
        left: String,
        tensor: InvariantsRepr,
    },
    CheckModule {
        rack: String,
        module: String,
        checks: Vec<ModuleCheck>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupsReport {
    pub rack: String,
    pub module: String,
    pub theory: Theory,
    pub direction: Direction,
    pub z: usize,
    #[serde(rename = "H")]
    pub groups: Vec<DegreeGroup>,
}

fn show(i: &InvariantsRepr) -> String {
    Invariants::from(i.clone()).to_string()
}

fn plural(n: usize, word: &str) -> String {
    if n == 1 {
        format!("{n} {word}")
    } else {
        format!("{n} {word}s")
    }
}

impl Report {
    pub fn render_text(&self) -> String {
        let mut s = String::new();
        match self {
            Report::Validate { rack, valid: true, quandle, orbits, .. } => {
                let kind = if *quandle == Some(true) { "quandle" } else { "rack" };
                let _ = writeln!(s, "{rack}: valid {kind}, {}", plural(orbits.unwrap_or(0), "orbit"));
            }
            Report::Validate { rack, error, .. } => {
                let _ = writeln!(s, "{rack}: invalid: {}", error.as_deref().unwrap_or("unknown failure"));
            }
            Report::Info { rack, order, quandle, orbits, inverted } => {
                let _ = writeln!(s, "rack {rack}");
                let _ = writeln!(s, "order {order}");
                let _ = writeln!(s, "quandle {}", if *quandle { "yes" } else { "no" });
                let orbs: Vec<String> = orbits
                    .iter()
                    .map(|o| format!("{{{}}}", o.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")))
                    .collect();
                let _ = writeln!(s, "orbits {}", orbs.join(" "));
                let _ = writeln!(s, "inverted rack:");
                for row in inverted {
                    let _ = writeln!(s, "  {}", row.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "));
                }
            }
            Report::Homology(g) | Report::Cohomology(g) => {
                let (what, mark) = match g.direction {
                    Direction::Homology => ("homology", "_"),
                    Direction::Cohomology => ("cohomology", "^"),
                };
                let theory = match g.theory {
                    Theory::Rack => "rack",
                    Theory::Quandle => "quandle",
                };
                let _ = writeln!(s, "{theory} {what} of {} with coefficients {} (z = {})", g.rack, g.module, g.z);
                for d in &g.groups {
                    let _ = writeln!(s, "H{mark}{} = {}", d.n, show(&d.group));
                }
            }
            Report::Ext { rack, module, ext, oracle } => {
                let _ = writeln!(s, "Ext({rack}; {module}) = {}", show(ext));
                if let Some(o) = oracle {
                    let verdict = if o.agrees { "PASS" } else { "FAIL" };
                    let _ = writeln!(s, "factor-set oracle |Z|/|B| = {}: {verdict}", o.count);
                }
            }
            Report::Derivations { rack, module, z, der, pder, h1 } => {
                let _ = writeln!(s, "derivations of {rack} into {module} (z = {z})");
                let _ = writeln!(s, "Der = {}", show(der));
                let _ = writeln!(s, "PDer = {}", show(pder));
                let _ = writeln!(s, "H^1 = {}", show(h1));
            }
            Report::Tensor { rack, right, left, tensor } => {
                let _ = writeln!(s, "{right} (x) {left} over {rack} = {}", show(tensor));
            }
            Report::CheckModule { rack, module, checks } => {
                for c in checks {
                    let verdict = if c.passed() { "PASS" } else { "FAIL" };
                    let _ = writeln!(s, "{module} as a {} module over {rack}: {verdict} ({} checks)", c.variance, c.checked);
                    for f in &c.failures {
                        let _ = writeln!(s, "  {f}");
                    }
                    match c.quandle_condition {
                        Some(true) => {
                            let _ = writeln!(s, "  quandle condition holds");
                        }
                        Some(false) => {
                            let _ = writeln!(s, "  quandle condition fails");
                        }
                        None => {}
                    }
                }
            }
        }
        s
    }

    /// Whether the report records a mathematical failure.
    pub fn failed(&self) -> bool {
        match self {
            Report::Validate { valid, .. } => !valid,
            Report::Ext { oracle: Some(o), .. } => !o.agrees,
            Report::CheckModule { checks, .. } => checks.iter().any(|c| !c.passed()),
            _ => false,
        }
    }
}
