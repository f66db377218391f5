use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::rack::RackTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Theory {
    Rack,
    Quandle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Homology,
    Cohomology,
}

/// A tuple `(x_1, ..., x_n)` sitting at `x_1^{x_2 ... x_n}`; in degree 0
/// the point `(*)` at `base`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BasisTuple {
    pub entries: Vec<usize>,
    pub base: usize,
}

impl BasisTuple {
    pub fn point(x: usize) -> Self {
        BasisTuple { entries: Vec::new(), base: x }
    }

    pub fn new(rack: &RackTable, entries: Vec<usize>) -> Self {
        assert!(!entries.is_empty(), "use BasisTuple::point in degree 0");
        let base = rack.act_tuple(&entries);
        BasisTuple { entries, base }
    }

    pub fn degree(&self) -> usize {
        self.entries.len()
    }

    /// Has two equal adjacent entries.
    pub fn is_degenerate(&self) -> bool {
        self.entries.windows(2).any(|w| w[0] == w[1])
    }
}

/// Tuples of degree `n` in lexicographic order (degree 0: one point per
/// element, in order).
pub fn enumerate_basis(rack: &RackTable, n: usize, theory: Theory) -> Vec<BasisTuple> {
    let k = rack.order();
    if n == 0 {
        return (0..k).map(BasisTuple::point).collect();
    }
    let mut out = Vec::new();
    let mut cur = vec![0usize; n];
    loop {
        let t = BasisTuple::new(rack, cur.clone());
        if theory == Theory::Rack || !t.is_degenerate() {
            out.push(t);
        }
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < k {
                break;
            }
            cur[i] = 0;
        }
    }
}

/// A basis of one degree with a reverse index.
#[derive(Clone, Debug)]
pub(crate) struct BasisIndex {
    pub tuples: Vec<BasisTuple>,
    index: HashMap<Vec<usize>, usize>,
}

impl BasisIndex {
    pub fn new(tuples: Vec<BasisTuple>) -> Self {
        let index = tuples.iter().enumerate().map(|(i, t)| (t.entries.clone(), i)).collect();
        BasisIndex { tuples, index }
    }

    pub fn position(&self, t: &BasisTuple) -> Option<usize> {
        if t.entries.is_empty() {
            // degree 0 points are listed by element
            return Some(t.base);
        }
        self.index.get(&t.entries).copied()
    }
}
