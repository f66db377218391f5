use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rack::{Letter, OperatorWord, RackTable, WordKey};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WringError {
    #[error("bases do not compose: left factor has source {source_elem}, right factor has base {base}")]
    Incompatible { source_elem: usize, base: usize },
    #[error("left factor has terms with different sources")]
    MixedSources,
    #[error("elements live at different bases ({0} and {1})")]
    BaseMismatch(usize, usize),
}

/// A basis symbol of the wring at a base `x`: `ρ_{x^{w̄},w}(*)` or
/// `ρ_{x^{v̄},v} λ_{t, x^{v̄t̄}}(*)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WringTerm {
    Rho(OperatorWord),
    RhoLambda(OperatorWord, usize),
}

impl WringTerm {
    pub fn word(&self) -> &OperatorWord {
        match self {
            WringTerm::Rho(w) | WringTerm::RhoLambda(w, _) => w,
        }
    }

    /// Where the generator `*` sits: `x^{w̄}` for a `ρ` symbol, `t` for a
    /// `ρλ` symbol.
    pub fn source(&self, rack: &RackTable, base: usize) -> usize {
        match self {
            WringTerm::Rho(w) => rack.act(base, &w.inverse()),
            WringTerm::RhoLambda(_, t) => *t,
        }
    }
}

/// An integer combination of wring symbols at one base.
#[derive(Clone, PartialEq, Eq)]
pub struct WringElement {
    base: usize,
    terms: BTreeMap<WringTerm, BigInt>,
}

impl WringElement {
    pub fn zero(base: usize) -> Self {
        WringElement { base, terms: BTreeMap::new() }
    }

    pub fn term(base: usize, t: WringTerm, coeff: impl Into<BigInt>) -> Self {
        let mut e = Self::zero(base);
        e.add_term(t, coeff.into());
        e
    }

    /// `ρ_{x^{w̄},w}(*)` at base `x`.
    pub fn rho(base: usize, w: OperatorWord) -> Self {
        Self::term(base, WringTerm::Rho(w), 1)
    }

    /// `ρ_{x^{v̄},v} λ_{t,x^{v̄t̄}}(*)` at base `x`.
    pub fn rho_lambda(base: usize, v: OperatorWord, t: usize) -> Self {
        Self::term(base, WringTerm::RhoLambda(v, t), 1)
    }

    /// The identity `(*)` at base `x`.
    pub fn unit(base: usize) -> Self {
        Self::rho(base, OperatorWord::empty())
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WringTerm, &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, t: WringTerm, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(t) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &WringElement) -> Result<WringElement, WringError> {
        if self.base != other.base {
            return Err(WringError::BaseMismatch(self.base, other.base));
        }
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(t.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, k: impl Into<BigInt>) -> WringElement {
        let k = k.into();
        let mut out = Self::zero(self.base);
        for (t, c) in &self.terms {
            out.add_term(t.clone(), c * &k);
        }
        out
    }

    pub fn neg(&self) -> WringElement {
        self.scale(-1)
    }

    /// The common source of all terms, if there is one.
    pub fn source(&self, rack: &RackTable) -> Result<Option<usize>, WringError> {
        let mut src = None;
        for t in self.terms.keys() {
            let s = t.source(rack, self.base);
            match src {
                None => src = Some(s),
                Some(s0) if s0 != s => return Err(WringError::MixedSources),
                _ => {}
            }
        }
        Ok(src)
    }

    /// The product `self · other`; `other` must sit at the source of
    /// every term of `self`. The result sits at `self`'s base.
    pub fn mul(&self, other: &WringElement, rack: &RackTable) -> Result<WringElement, WringError> {
        if let Some(s) = self.source(rack)? {
            if s != other.base {
                return Err(WringError::Incompatible { source_elem: s, base: other.base });
            }
        }
        let mut out = Self::zero(self.base);
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                let c = a * b;
                for (t, sign) in mul_terms(p, q, rack) {
                    out.add_term(t, &c * sign);
                }
            }
        }
        Ok(out)
    }

    /// The augmentation: the sum of the coefficients of the `ρ` symbols.
    pub fn augmentation(&self) -> BigInt {
        self.terms
            .iter()
            .filter(|(t, _)| matches!(t, WringTerm::Rho(_)))
            .map(|(_, c)| c.clone())
            .sum()
    }

    /// Coefficients collected by the image of each word in a quotient of
    /// the associated group (see [`RackTable::word_key`]). Elements equal in
    /// the wring have equal keyed forms.
    pub fn keyed(&self, rack: &RackTable) -> BTreeMap<(WordKey, Option<usize>), BigInt> {
        let mut out: BTreeMap<(WordKey, Option<usize>), BigInt> = BTreeMap::new();
        for (t, c) in &self.terms {
            let k = match t {
                WringTerm::Rho(w) => (rack.word_key(w), None),
                WringTerm::RhoLambda(w, s) => (rack.word_key(w), Some(*s)),
            };
            *out.entry(k).or_insert_with(BigInt::zero) += c;
        }
        out.retain(|_, v| !v.is_zero());
        out
    }
}

/// Product of two composable symbols, as signed result symbols.
fn mul_terms(p: &WringTerm, q: &WringTerm, rack: &RackTable) -> Vec<(WringTerm, i64)> {
    match (p, q) {
        (WringTerm::Rho(v), WringTerm::Rho(u)) => vec![(WringTerm::Rho(u.concat(v)), 1)],
        (WringTerm::Rho(v), WringTerm::RhoLambda(u, s)) => vec![(WringTerm::RhoLambda(u.concat(v), *s), 1)],
        (WringTerm::RhoLambda(v, t), WringTerm::Rho(u)) => {
            vec![(WringTerm::RhoLambda(u.concat(v), rack.act(*t, &u.inverse())), 1)]
        }
        (WringTerm::RhoLambda(v, t), WringTerm::RhoLambda(u, s)) => {
            let utv = u.concat(&OperatorWord::letter(Letter::pos(*t))).concat(v);
            vec![(WringTerm::RhoLambda(u.concat(v), *s), 1), (WringTerm::RhoLambda(utv, *s), -1)]
        }
    }
}

impl fmt::Debug for WringElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for WringElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0@{}", self.base);
        }
        for (i, (t, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if !c.is_one() {
                write!(f, "{c}*")?;
            }
            match t {
                WringTerm::Rho(w) => write!(f, "rho[{w}]")?,
                WringTerm::RhoLambda(w, s) => write!(f, "rho[{w}]lambda[{s}]")?,
            }
        }
        write!(f, "@{}", self.base)
    }
}
