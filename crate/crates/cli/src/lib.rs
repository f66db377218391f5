//! Command-line front end for rack and quandle (co)homology.

pub mod input;
pub mod report;

use clap::{Parser, ValueEnum};

use rackhom::homology::{
    cohomology, derivations, ext_group, first_cohomology, homology, oracle_factor_sets, principal_derivations, Theory,
};
use rackhom::rack::RackTable;
use rackhom::rmod::{LeftModule, RightModule, Variance};
use rackhom::wring::tensor;

pub use input::CliError;
pub use report::{GroupsReport, ModuleCheck, OracleCheck, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Validate,
    Info,
    Homology,
    Cohomology,
    Ext,
    Derivations,
    Tensor,
    CheckModule,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TheoryArg {
    Rack,
    Quandle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Homology and cohomology of finite racks and quandles with coefficients
/// in a rack module.
///
/// Racks are JSON files or shorthands (dihedral3, trivial2, cyclic4,
/// alexander5,2, conjS3, optionally prefixed by builtin:). Modules are JSON
/// files or shorthands (trivial-Z, trivial-Z/3, dihedral-Z/5,
/// alexander-Z/3-t2).
#[derive(Debug, Parser)]
#[command(name = "rackhom", version)]
pub struct Cli {
    #[arg(value_enum)]
    pub command: Command,
    /// Rack, then module(s): tensor takes a right and a left module.
    #[arg(required = true)]
    pub files: Vec<String>,
    #[arg(long, default_value_t = 3)]
    pub max_degree: usize,
    /// Base point z.
    #[arg(long, default_value_t = 0)]
    pub base: usize,
    #[arg(long, value_enum, default_value_t = TheoryArg::Rack)]
    pub theory: TheoryArg,
    /// Cross-check against the brute-force factor-set count.
    #[arg(long)]
    pub oracle: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

/// Size limits, overridable by `RACKHOM_BUDGET="max_degree=8,max_order=10,oracle=1e9"`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Budget {
    pub max_degree: usize,
    pub max_order: usize,
    pub oracle: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_degree: 6, max_order: 8, oracle: 100_000_000 }
    }
}

impl Budget {
    pub fn parse(s: &str) -> Result<Self, CliError> {
        let mut b = Budget::default();
        for item in s.split(',').map(str::trim).filter(|i| !i.is_empty()) {
            let bad = || CliError::Parse(format!("RACKHOM_BUDGET: cannot parse '{item}'"));
            let (k, v) = item.split_once('=').ok_or_else(bad)?;
            let v: f64 = v.trim().parse().map_err(|_| bad())?;
            if v < 0.0 {
                return Err(bad());
            }
            match k.trim() {
                "max_degree" => b.max_degree = v as usize,
                "max_order" => b.max_order = v as usize,
                "oracle" => b.oracle = v as u64,
                _ => return Err(bad()),
            }
        }
        Ok(b)
    }

    pub fn from_env() -> Result<Self, CliError> {
        match std::env::var("RACKHOM_BUDGET") {
            Ok(s) => Self::parse(&s),
            Err(_) => Ok(Budget::default()),
        }
    }
}

fn need(files: &[String], k: usize, usage: &str) -> Result<(), CliError> {
    if files.len() != k {
        return Err(CliError::Parse(format!("expected {usage}")));
    }
    Ok(())
}

fn check_order(x: &RackTable, budget: &Budget) -> Result<(), CliError> {
    if x.order() > budget.max_order {
        return Err(CliError::Precondition(format!(
            "rack of order {} exceeds the budget of {}",
            x.order(),
            budget.max_order
        )));
    }
    Ok(())
}

fn theory(t: TheoryArg) -> Theory {
    match t {
        TheoryArg::Rack => Theory::Rack,
        TheoryArg::Quandle => Theory::Quandle,
    }
}

/// Runs one job. `Ok` reports may still record a mathematical failure
/// (see [`Report::failed`]).
pub fn run(cli: &Cli, budget: &Budget) -> Result<Report, CliError> {
    let files = &cli.files;
    let name = |i: usize| files[i].clone();
    match cli.command {
        Command::Validate => {
            need(files, 1, "one rack")?;
            let spec = input::rack_spec(&files[0])?;
            Ok(match spec.build() {
                Ok(x) => Report::Validate {
                    rack: name(0),
                    valid: true,
                    quandle: Some(x.is_quandle()),
                    orbits: Some(x.orbits().len()),
                    error: None,
                },
                Err(e) => match CliError::from(e) {
                    CliError::Math(m) => Report::Validate { rack: name(0), valid: false, quandle: None, orbits: None, error: Some(m) },
                    other => return Err(other),
                },
            })
        }
        Command::Info => {
            need(files, 1, "one rack")?;
            let x = input::rack(&files[0])?;
            Ok(Report::Info {
                rack: name(0),
                order: x.order(),
                quandle: x.is_quandle(),
                orbits: x.orbits(),
                inverted: x.invert().table(),
            })
        }
        Command::Homology | Command::Cohomology => {
            need(files, 2, "a rack and a module")?;
            let x = input::rack(&files[0])?;
            check_order(&x, budget)?;
            if cli.max_degree > budget.max_degree {
                return Err(CliError::Precondition(format!(
                    "degree {} exceeds the budget of {}",
                    cli.max_degree, budget.max_degree
                )));
            }
            let src = input::module_source(&files[1])?;
            let t = theory(cli.theory);
            if cli.command == Command::Homology {
                let a = RightModule::validate(input::module(&src, &x, Variance::Right)?)?;
                let r = homology(&a, cli.max_degree, cli.base, t)?;
                Ok(Report::Homology(GroupsReport {
                    rack: name(0),
                    module: name(1),
                    theory: r.theory,
                    direction: r.direction,
                    z: r.z,
                    groups: r.groups,
                }))
            } else {
                let a = LeftModule::validate(input::module(&src, &x, Variance::Left)?)?;
                let r = cohomology(&a, cli.max_degree, cli.base, t)?;
                Ok(Report::Cohomology(GroupsReport {
                    rack: name(0),
                    module: name(1),
                    theory: r.theory,
                    direction: r.direction,
                    z: r.z,
                    groups: r.groups,
                }))
            }
        }
        Command::Ext => {
            need(files, 2, "a rack and a module")?;
            let x = input::rack(&files[0])?;
            check_order(&x, budget)?;
            let a = LeftModule::validate(input::module(&input::module_source(&files[1])?, &x, Variance::Left)?)?;
            let ext = ext_group(&a)?;
            let oracle = if cli.oracle {
                let count = oracle_factor_sets(&a, budget.oracle)?;
                let agrees = ext.order().is_some_and(|o| o == count.into());
                Some(OracleCheck { count, agrees })
            } else {
                None
            };
            Ok(Report::Ext { rack: name(0), module: name(1), ext: ext.invariants().into(), oracle })
        }
        Command::Derivations => {
            need(files, 2, "a rack and a module")?;
            let x = input::rack(&files[0])?;
            check_order(&x, budget)?;
            let a = LeftModule::validate(input::module(&input::module_source(&files[1])?, &x, Variance::Left)?)?;
            Ok(Report::Derivations {
                rack: name(0),
                module: name(1),
                z: cli.base,
                der: derivations(&a)?.invariants().into(),
                pder: principal_derivations(&a, cli.base)?.invariants().into(),
                h1: first_cohomology(&a, cli.base)?.invariants().into(),
            })
        }
        Command::Tensor => {
            need(files, 3, "a rack, a right module and a left module")?;
            let x = input::rack(&files[0])?;
            check_order(&x, budget)?;
            let a = RightModule::validate(input::module(&input::module_source(&files[1])?, &x, Variance::Right)?)?;
            let b = LeftModule::validate(input::module(&input::module_source(&files[2])?, &x, Variance::Left)?)?;
            let t = tensor(&a, &b)?;
            Ok(Report::Tensor { rack: name(0), right: name(1), left: name(2), tensor: t.group.invariants().into() })
        }
        Command::CheckModule => {
            need(files, 2, "a rack and a module")?;
            let x = input::rack(&files[0])?;
            let src = input::module_source(&files[1])?;
            let variances = match &src {
                input::ModuleSource::Shorthand(_) => vec![Variance::Left, Variance::Right],
                input::ModuleSource::File(spec) => vec![spec.variance],
            };
            let mut checks = Vec::new();
            for v in variances {
                let m = input::module_data(&src, &x, v)?;
                let report = m.check();
                let quandle_condition = if x.is_quandle() { Some(m.check_quandle()?.passed()) } else { None };
                checks.push(ModuleCheck {
                    variance: v,
                    checked: report.checked,
                    failures: report.failures.iter().map(ToString::to_string).collect(),
                    quandle_condition,
                });
            }
            Ok(Report::CheckModule { rack: name(0), module: name(1), checks })
        }
    }
}

/// Renders a report in the requested format.
pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Text => report.render_text(),
        Format::Json => serde_json::to_string_pretty(report).expect("reports serialize") + "\n",
    }
}
