use std::fmt;

use serde::{Deserialize, Serialize};

use super::word::{Letter, OperatorWord};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RackError {
    #[error("a rack must have at least one element")]
    Empty,
    #[error("table is not square: row {row} has length {len}, expected {order}")]
    NotSquare { row: usize, len: usize, order: usize },
    #[error("entry table[{row}][{col}] = {value} is out of range")]
    OutOfRange { row: usize, col: usize, value: usize },
    #[error("R1 violated at column {column}: a -> a^{column} is not a permutation")]
    R1 { column: usize },
    #[error("R2 violated at (a, b, c) = ({a}, {b}, {c}): (a^b)^c != (a^c)^(b^c)")]
    R2 { a: usize, b: usize, c: usize },
    #[error("not a quandle: {a}^{a} != {a}")]
    NotQuandle { a: usize },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("unknown builtin rack '{0}'")]
    UnknownBuiltin(String),
}

/// A finite rack stored as its full operation table, `a^b = table[a][b]`.
///
/// Values of this type have passed [`RackTable::validate`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RackTable {
    order: usize,
    op: Vec<usize>,
    inv: Vec<usize>,
    quandle: bool,
}

impl RackTable {
    /// Checks the rack axioms, reporting the first violation found.
    pub fn validate(table: &[Vec<usize>]) -> Result<Self, RackError> {
        let n = table.len();
        if n == 0 {
            return Err(RackError::Empty);
        }
        for (row, r) in table.iter().enumerate() {
            if r.len() != n {
                return Err(RackError::NotSquare { row, len: r.len(), order: n });
            }
            for (col, &value) in r.iter().enumerate() {
                if value >= n {
                    return Err(RackError::OutOfRange { row, col, value });
                }
            }
        }
        let mut inv = vec![usize::MAX; n * n];
        for b in 0..n {
            for a in 0..n {
                let c = table[a][b];
                if inv[c * n + b] != usize::MAX {
                    return Err(RackError::R1 { column: b });
                }
                inv[c * n + b] = a;
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[table[a][c]][table[b][c]] {
                        return Err(RackError::R2 { a, b, c });
                    }
                }
            }
        }
        let quandle = (0..n).all(|a| table[a][a] == a);
        Ok(RackTable {
            order: n,
            op: table.iter().flatten().copied().collect(),
            inv,
            quandle,
        })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self, RackError> {
        let t: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| f(a, b)).collect()).collect();
        Self::validate(&t)
    }

    /// `a^b = a`.
    pub fn trivial(n: usize) -> Result<Self, RackError> {
        Self::from_fn(n, |a, _| a)
    }

    /// `a^b = 2b - a mod n`.
    pub fn dihedral(n: usize) -> Result<Self, RackError> {
        Self::from_fn(n, |a, b| (2 * b + n - a) % n)
    }

    /// `a^b = a + 1 mod n`.
    pub fn cyclic(n: usize) -> Result<Self, RackError> {
        Self::from_fn(n, |a, _| (a + 1) % n)
    }

    /// `a^b = t a + (1 - t) b mod m`, for `t` a unit mod `m`.
    pub fn alexander(m: usize, t: i64) -> Result<Self, RackError> {
        if m == 0 {
            return Err(RackError::Empty);
        }
        let mi = m as i64;
        let t = t.rem_euclid(mi);
        if num_integer::gcd(t, mi) != 1 {
            return Err(RackError::InvalidParams(format!("t = {t} is not a unit mod {m}")));
        }
        let s = (1 - t).rem_euclid(mi);
        Self::from_fn(m, |a, b| ((t * a as i64 + s * b as i64).rem_euclid(mi)) as usize)
    }

    /// The conjugation quandle `a^b = b⁻¹ a b` of a group given by its
    /// multiplication table `mult[a][b] = ab`.
    pub fn conjugation(mult: &[Vec<usize>]) -> Result<Self, RackError> {
        let n = mult.len();
        if n == 0 {
            return Err(RackError::Empty);
        }
        if mult.iter().any(|r| r.len() != n || r.iter().any(|&v| v >= n)) {
            return Err(RackError::InvalidParams("group table is malformed".into()));
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|a| mult[e][a] == a && mult[a][e] == a))
            .ok_or_else(|| RackError::InvalidParams("group table has no identity".into()))?;
        let mut inverse = vec![0; n];
        for a in 0..n {
            inverse[a] = (0..n)
                .find(|&b| mult[a][b] == e)
                .ok_or_else(|| RackError::InvalidParams(format!("element {a} has no inverse")))?;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mult[mult[a][b]][c] != mult[a][mult[b][c]] {
                        return Err(RackError::InvalidParams("group table is not associative".into()));
                    }
                }
            }
        }
        Self::from_fn(n, |a, b| mult[mult[inverse[b]][a]][b])
    }

    /// Conjugation quandle of the symmetric group on `k` letters, elements
    /// ordered lexicographically as permutations (the identity is element 0).
    pub fn conjugation_symmetric(k: usize) -> Result<Self, RackError> {
        let perms = permutations(k);
        let index = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
        let mult: Vec<Vec<usize>> = perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| {
                        // apply p then q
                        let r: Vec<usize> = (0..k).map(|i| q[p[i]]).collect();
                        index(&r)
                    })
                    .collect()
            })
            .collect();
        Self::conjugation(&mult)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_quandle(&self) -> bool {
        self.quandle
    }

    /// `a^b`.
    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.op[a * self.order + b]
    }

    /// `a^{b̄}`, the unique `c` with `c^b = a`.
    #[inline]
    pub fn op_inv(&self, a: usize, b: usize) -> usize {
        self.inv[a * self.order + b]
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.op.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    /// `x^w`, letters applied left to right.
    pub fn act(&self, x: usize, w: &OperatorWord) -> usize {
        w.letters().iter().fold(x, |a, l| self.apply_letter(a, *l))
    }

    #[inline]
    pub fn apply_letter(&self, a: usize, l: Letter) -> usize {
        if l.inv {
            self.op_inv(a, l.elem)
        } else {
            self.op(a, l.elem)
        }
    }

    /// `x₁^{x₂…xₙ}`, the base point of a tuple.
    pub fn act_tuple(&self, tuple: &[usize]) -> usize {
        let mut it = tuple.iter();
        let first = *it.next().expect("nonempty tuple");
        it.fold(first, |a, &b| self.op(a, b))
    }

    /// The inverted rack: `a^b` replaced by `a^{b̄}`.
    pub fn invert(&self) -> RackTable {
        RackTable {
            order: self.order,
            op: self.inv.clone(),
            inv: self.op.clone(),
            quandle: self.quandle,
        }
    }

    /// Orbits under the action of all columns, each sorted, ordered by least
    /// element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.order;
        let mut label = vec![usize::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if label[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![start];
            let mut members = vec![start];
            label[start] = id;
            while let Some(a) = stack.pop() {
                for b in 0..n {
                    for c in [self.op(a, b), self.op_inv(a, b)] {
                        if label[c] == usize::MAX {
                            label[c] = id;
                            members.push(c);
                            stack.push(c);
                        }
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Orbit index of every element, matching the order of [`RackTable::orbits`].
    pub fn orbit_labels(&self) -> Vec<usize> {
        let mut label = vec![0; self.order];
        for (i, orb) in self.orbits().iter().enumerate() {
            for &a in orb {
                label[a] = i;
            }
        }
        label
    }

    /// Whether `f` satisfies `f(a^b) = f(a)^{f(b)}`.
    pub fn is_homomorphism(f: &[usize], x: &RackTable, y: &RackTable) -> bool {
        if f.len() != x.order || f.iter().any(|&v| v >= y.order) {
            return false;
        }
        (0..x.order).all(|a| (0..x.order).all(|b| f[x.op(a, b)] == y.op(f[a], f[b])))
    }

    /// An invariant of the image of `w` in the associated group: the
    /// permutation it induces on the rack together with its exponent sum on
    /// each orbit. Words equal in the associated group have equal keys.
    pub fn word_key(&self, w: &OperatorWord) -> WordKey {
        let perm = (0..self.order).map(|x| self.act(x, w)).collect();
        let labels = self.orbit_labels();
        let mut exps = vec![0i64; labels.iter().max().map_or(0, |m| m + 1)];
        for l in w.letters() {
            exps[labels[l.elem]] += l.sign();
        }
        WordKey { perm, exps }
    }
}

/// See [`RackTable::word_key`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WordKey {
    pub perm: Vec<usize>,
    pub exps: Vec<i64>,
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    let mut used = vec![false; k];
    fn go(k: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                go(k, cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    go(k, &mut cur, &mut used, &mut out);
    out
}

impl fmt::Debug for RackTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RackTable")
            .field("order", &self.order)
            .field("table", &self.table())
            .field("quandle", &self.quandle)
            .finish()
    }
}

/// On-disk form of a rack: an explicit table or a builtin family.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RackSpec {
    Table { order: usize, table: Vec<Vec<usize>> },
    Builtin {
        builtin: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        t: Option<i64>,
    },
}

impl RackSpec {
    pub fn build(&self) -> Result<RackTable, RackError> {
        match self {
            RackSpec::Table { order, table } => {
                if table.len() != *order {
                    return Err(RackError::InvalidParams(format!(
                        "order is {order} but the table has {} rows",
                        table.len()
                    )));
                }
                RackTable::validate(table)
            }
            RackSpec::Builtin { builtin, n, t } => {
                let need_n = || n.ok_or_else(|| RackError::InvalidParams(format!("builtin '{builtin}' needs n")));
                match builtin.as_str() {
                    "trivial" => RackTable::trivial(need_n()?),
                    "dihedral" => RackTable::dihedral(need_n()?),
                    "cyclic" => RackTable::cyclic(need_n()?),
                    "alexander" => {
                        let t = t.ok_or_else(|| RackError::InvalidParams("builtin 'alexander' needs t".into()))?;
                        RackTable::alexander(need_n()?, t)
                    }
                    "conjugation" | "symmetric" => RackTable::conjugation_symmetric(need_n()?),
                    other => Err(RackError::UnknownBuiltin(other.to_string())),
                }
            }
        }
    }

    pub fn from_table(r: &RackTable) -> Self {
        RackSpec::Table { order: r.order(), table: r.table() }
    }

    /// Parses the command-line shorthand: `dihedral3`, `trivial2`, `cyclic4`,
    /// `alexander5,2`, `conjS3`.
    pub fn parse_shorthand(s: &str) -> Result<Self, RackError> {
        let bad = || RackError::UnknownBuiltin(s.to_string());
        let split = s.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?;
        let (name, rest) = s.split_at(split);
        let builtin = |b: &str, n: usize, t: Option<i64>| RackSpec::Builtin { builtin: b.to_string(), n: Some(n), t };
        match name {
            "trivial" | "dihedral" | "cyclic" => Ok(builtin(name, rest.parse().map_err(|_| bad())?, None)),
            "conjS" => Ok(builtin("conjugation", rest.parse().map_err(|_| bad())?, None)),
            "alexander" => {
                let (m, t) = rest.split_once(',').ok_or_else(bad)?;
                Ok(builtin("alexander", m.parse().map_err(|_| bad())?, Some(t.parse().map_err(|_| bad())?)))
            }
            _ => Err(bad()),
        }
    }
}

impl Serialize for RackTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RackSpec::from_table(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for RackTable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        RackSpec::deserialize(d)?.build().map_err(serde::de::Error::custom)
    }
}
