use std::fmt;

use serde::{Deserialize, Serialize};

/// One letter `(x, ±1)` of an operator word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter {
    pub elem: usize,
    /// `true` for the inverse letter `x̄`.
    pub inv: bool,
}

impl Letter {
    pub fn pos(elem: usize) -> Self {
        Letter { elem, inv: false }
    }

    pub fn neg(elem: usize) -> Self {
        Letter { elem, inv: true }
    }

    pub fn inverse(self) -> Self {
        Letter { elem: self.elem, inv: !self.inv }
    }

    pub fn sign(self) -> i64 {
        if self.inv {
            -1
        } else {
            1
        }
    }
}

/// A freely reduced word in the letters `x`, `x̄`. Words act on rack
/// elements from the right, left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<(usize, i8)>", into = "Vec<(usize, i8)>")]
pub struct OperatorWord {
    letters: Vec<Letter>,
}

impl OperatorWord {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn letter(l: Letter) -> Self {
        OperatorWord { letters: vec![l] }
    }

    /// Builds a word from letters, cancelling adjacent inverse pairs.
    pub fn new(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut w = Self::empty();
        for l in letters {
            w.push(l);
        }
        w
    }

    /// From `(element, exponent)` pairs with exponent `±1`.
    pub fn from_signed(pairs: &[(usize, i8)]) -> Self {
        Self::new(pairs.iter().map(|&(x, s)| {
            assert!(s == 1 || s == -1, "letter exponent must be +1 or -1");
            Letter { elem: x, inv: s < 0 }
        }))
    }

    pub fn push(&mut self, l: Letter) {
        if self.letters.last() == Some(&l.inverse()) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &OperatorWord) -> OperatorWord {
        let mut w = self.clone();
        for &l in &other.letters {
            w.push(l);
        }
        w
    }

    pub fn inverse(&self) -> OperatorWord {
        OperatorWord {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn max_elem(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.elem).max()
    }
}

impl From<Vec<(usize, i8)>> for OperatorWord {
    fn from(v: Vec<(usize, i8)>) -> Self {
        Self::new(v.into_iter().map(|(x, s)| Letter { elem: x, inv: s < 0 }))
    }
}

impl From<OperatorWord> for Vec<(usize, i8)> {
    fn from(w: OperatorWord) -> Self {
        w.letters.iter().map(|l| (l.elem, if l.inv { -1 } else { 1 })).collect()
    }
}

impl fmt::Display for OperatorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}{}", l.elem, if l.inv { "'" } else { "" })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_reduction() {
        let w = OperatorWord::from_signed(&[(1, 1), (2, 1), (2, -1), (1, -1)]);
        assert!(w.is_empty());
        let w = OperatorWord::from_signed(&[(1, 1), (2, -1)]);
        assert_eq!(w.len(), 2);
        assert!(w.concat(&w.inverse()).is_empty());
    }

    #[test]
    fn serde_pairs() {
        let w = OperatorWord::from_signed(&[(0, 1), (3, -1)]);
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(s, "[[0,1],[3,-1]]");
        let back: OperatorWord = serde_json::from_str(&s).unwrap();
        assert_eq!(back, w);
    }
}
