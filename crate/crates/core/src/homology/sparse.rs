use num_bigint::BigInt;
use num_traits::Zero;

use crate::abgroup::IntMatrix;

/// Column-sparse integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    columns: Vec<Vec<(usize, BigInt)>>,
}

impl SparseMatrix {
    /// Builds from per-column entry lists; duplicate rows are summed.
    pub fn from_columns(rows: usize, columns: Vec<Vec<(usize, BigInt)>>) -> Self {
        let columns = columns
            .into_iter()
            .map(|mut c| {
                c.sort_by_key(|e| e.0);
                let mut out: Vec<(usize, BigInt)> = Vec::with_capacity(c.len());
                for (r, v) in c {
                    assert!(r < rows, "row {r} out of range");
                    match out.last_mut() {
                        Some((lr, lv)) if *lr == r => *lv += v,
                        _ => out.push((r, v)),
                    }
                }
                out.retain(|(_, v)| !v.is_zero());
                out
            })
            .collect();
        SparseMatrix { rows, columns }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, j: usize) -> &[(usize, BigInt)] {
        &self.columns[j]
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn to_dense(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rows, self.cols());
        for (j, c) in self.columns.iter().enumerate() {
            for (i, v) in c {
                m[(*i, j)] = v.clone();
            }
        }
        m
    }

    /// Transposed copy.
    pub fn transpose(&self) -> SparseMatrix {
        let mut cols = vec![Vec::new(); self.rows];
        for (j, c) in self.columns.iter().enumerate() {
            for (i, v) in c {
                cols[*i].push((j, v.clone()));
            }
        }
        SparseMatrix::from_columns(self.cols(), cols)
    }

    /// `self · inner`.
    pub fn compose(&self, inner: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols(), inner.rows, "shape mismatch in sparse product");
        let cols = inner
            .columns
            .iter()
            .map(|c| {
                let mut acc = Vec::new();
                for (k, v) in c {
                    for (i, w) in &self.columns[*k] {
                        acc.push((*i, v * w));
                    }
                }
                acc
            })
            .collect();
        SparseMatrix::from_columns(self.rows, cols)
    }
}
