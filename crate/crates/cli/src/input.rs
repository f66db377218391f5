use std::path::Path;

use rackhom::abgroup::AbError;
use rackhom::homology::HomologyError;
use rackhom::rack::{RackError, RackSpec, RackTable};
use rackhom::rmod::{ModuleError, ModuleKind, ModuleSpec, RackModule, Variance};

/// A failure with its exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Malformed or unreadable input; exit 2.
    Parse(String),
    /// Axiom failure or internal inconsistency; exit 1.
    Math(String),
    /// Unmet precondition or exceeded budget; exit 3.
    Precondition(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Math(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Precondition(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Parse(m) | CliError::Math(m) | CliError::Precondition(m) => m,
        }
    }
}

impl From<RackError> for CliError {
    fn from(e: RackError) -> Self {
        match e {
            RackError::R1 { .. } | RackError::R2 { .. } | RackError::NotQuandle { .. } => CliError::Math(e.to_string()),
            _ => CliError::Parse(e.to_string()),
        }
    }
}

impl From<AbError> for CliError {
    fn from(e: AbError) -> Self {
        match e {
            AbError::TooLarge { .. } | AbError::Infinite => CliError::Precondition(e.to_string()),
            _ => CliError::Math(e.to_string()),
        }
    }
}

impl From<ModuleError> for CliError {
    fn from(e: ModuleError) -> Self {
        match e {
            ModuleError::Axioms(_) | ModuleError::NotQuandle => CliError::Math(e.to_string()),
            ModuleError::Variance { .. } | ModuleError::RackMismatch => CliError::Precondition(e.to_string()),
            ModuleError::Rack(r) => r.into(),
            ModuleError::Group(g) => g.into(),
            ModuleError::Shape(_) | ModuleError::InvalidParams(_) => CliError::Parse(e.to_string()),
        }
    }
}

impl From<HomologyError> for CliError {
    fn from(e: HomologyError) -> Self {
        match e {
            HomologyError::Variance { .. }
            | HomologyError::NotQuandle
            | HomologyError::NotQuandleModule
            | HomologyError::BadBase(_)
            | HomologyError::NotFree => CliError::Precondition(e.to_string()),
            HomologyError::NotComplex { .. } | HomologyError::QuotientNotWellDefined { .. } => {
                CliError::Math(e.to_string())
            }
            HomologyError::Group(g) => g.into(),
            HomologyError::Module(m) => m.into(),
        }
    }
}

fn read(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Parse(format!("cannot read {path}: {e}")))
}

/// A rack from a JSON file or a shorthand such as `dihedral3` or
/// `builtin:conjS3`. Only parsing happens here; axioms are checked by
/// [`RackSpec::build`].
pub fn rack_spec(arg: &str) -> Result<RackSpec, CliError> {
    if let Some(short) = arg.strip_prefix("builtin:") {
        return Ok(RackSpec::parse_shorthand(short)?);
    }
    if Path::new(arg).exists() {
        return serde_json::from_str(&read(arg)?).map_err(|e| CliError::Parse(format!("{arg}: {e}")));
    }
    RackSpec::parse_shorthand(arg).map_err(|_| CliError::Parse(format!("{arg}: no such file or builtin rack")))
}

pub fn rack(arg: &str) -> Result<RackTable, CliError> {
    Ok(rack_spec(arg)?.build()?)
}

/// A module description: shorthand (no variance) or JSON file.
pub enum ModuleSource {
    Shorthand(ModuleKind),
    File(ModuleSpec),
}

pub fn module_source(arg: &str) -> Result<ModuleSource, CliError> {
    if let Some(k) = ModuleKind::parse_shorthand(arg) {
        return Ok(ModuleSource::Shorthand(k));
    }
    if !Path::new(arg).exists() {
        return Err(CliError::Parse(format!("{arg}: no such file or module shorthand")));
    }
    serde_json::from_str(&read(arg)?).map(ModuleSource::File).map_err(|e| CliError::Parse(format!("{arg}: {e}")))
}

/// Module data of the requested variance, not yet checked against the
/// axioms. Named modules convert freely; explicit ones must already have
/// the right variance.
pub fn module_data(src: &ModuleSource, x: &RackTable, variance: Variance) -> Result<RackModule, CliError> {
    let kind = match src {
        ModuleSource::Shorthand(k) => k,
        ModuleSource::File(spec) => {
            if spec.variance != variance && !spec.kind.is_variance_free() {
                return Err(CliError::Precondition(format!(
                    "this computation needs a {variance} module but the file describes an explicit {} module",
                    spec.variance
                )));
            }
            &spec.kind
        }
    };
    Ok(kind.build(x, variance)?)
}

/// As [`module_data`], rejecting data that fails the axioms.
pub fn module(src: &ModuleSource, x: &RackTable, variance: Variance) -> Result<RackModule, CliError> {
    let m = module_data(src, x, variance)?;
    let report = m.check();
    if !report.passed() {
        return Err(CliError::Math(format!("module axioms fail:\n{report}")));
    }
    Ok(m)
}
