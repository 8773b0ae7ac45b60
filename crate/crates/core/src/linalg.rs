//! Dense matrices over GF(q): row reduction, null spaces and dual generators.

use std::fmt;

use thiserror::Error;

use crate::gf::{FieldElement, FiniteField, GfError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("matrix needs at least one column")]
    NoColumns,
    #[error("expected {expected} entries for a {rows}x{cols} matrix, got {got}")]
    Shape {
        rows: usize,
        cols: usize,
        expected: usize,
        got: usize,
    },
    #[error("row {row} has {got} entries, expected {expected}")]
    RowLength {
        row: usize,
        expected: usize,
        got: usize,
    },
    #[error("entry {value} at ({row}, {col}) is not in GF({q})")]
    Entry {
        row: usize,
        col: usize,
        value: u64,
        q: u32,
    },
    #[error("generator has rank {rank} but {rows} rows")]
    RankDeficient { rows: usize, rank: usize },
    #[error(transparent)]
    Field(#[from] GfError),
}

/// A row-major matrix with entries in a finite field.
#[derive(Clone, PartialEq, Eq)]
pub struct MatrixGF {
    field: FiniteField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Output of [`MatrixGF::rref`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub matrix: MatrixGF,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl MatrixGF {
    pub fn new(
        field: &FiniteField,
        rows: usize,
        cols: usize,
        data: Vec<u32>,
    ) -> Result<Self, LinalgError> {
        if cols == 0 {
            return Err(LinalgError::NoColumns);
        }
        if data.len() != rows * cols {
            return Err(LinalgError::Shape {
                rows,
                cols,
                expected: rows * cols,
                got: data.len(),
            });
        }
        if let Some(pos) = data.iter().position(|&v| v >= field.q()) {
            return Err(LinalgError::Entry {
                row: pos / cols,
                col: pos % cols,
                value: data[pos] as u64,
                q: field.q(),
            });
        }
        Ok(MatrixGF {
            field: field.clone(),
            rows,
            cols,
            data,
        })
    }

    pub fn from_rows<R: AsRef<[u32]>>(
        field: &FiniteField,
        cols: usize,
        rows: &[R],
    ) -> Result<Self, LinalgError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(LinalgError::RowLength {
                    row: i,
                    expected: cols,
                    got: row.len(),
                });
            }
            data.extend_from_slice(row);
        }
        Self::new(field, rows.len(), cols, data)
    }

    pub fn identity(field: &FiniteField, n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        MatrixGF {
            field: field.clone(),
            rows: n,
            cols: n,
            data,
        }
    }

    /// A matrix with no rows; generator of the zero code.
    pub fn empty(field: &FiniteField, cols: usize) -> Self {
        MatrixGF {
            field: field.clone(),
            rows: 0,
            cols,
            data: Vec::new(),
        }
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> FieldElement {
        self.field
            .element(self.data[row * self.cols + col] as u64)
            .expect("entries are validated at construction")
    }

    pub(crate) fn raw(&self, row: usize, col: usize) -> u32 {
        self.data[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[u32] {
        &self.data[row * self.cols..(row + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[u32]> {
        // `chunks` on an empty slice yields nothing, which is what 0-row matrices need.
        self.data.chunks(self.cols)
    }

    /// `self · otherᵀ`, i.e. all pairwise inner products of rows.
    /// Returns a `self.rows x other.rows` table of raw entries.
    pub fn inner_products(&self, other: &MatrixGF) -> Result<Vec<Vec<u32>>, LinalgError> {
        if self.field != other.field {
            return Err(
                GfError::MixedFields(self.field.to_string(), other.field.to_string()).into(),
            );
        }
        if self.cols != other.cols {
            return Err(LinalgError::RowLength {
                row: 0,
                expected: self.cols,
                got: other.cols,
            });
        }
        Ok(self
            .row_iter()
            .map(|a| other.row_iter().map(|b| dot(&self.field, a, b)).collect())
            .collect())
    }

    /// True when every row of `self` is orthogonal to every row of `other`.
    pub fn is_orthogonal_to(&self, other: &MatrixGF) -> Result<bool, LinalgError> {
        Ok(self
            .inner_products(other)?
            .iter()
            .all(|row| row.iter().all(|&v| v == 0)))
    }

    /// Gauss-Jordan elimination without column swaps.
    pub fn rref(&self) -> Rref {
        let f = &self.field;
        let mut m = self.data.clone();
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut lead = 0;
        for col in 0..cols {
            if lead == self.rows {
                break;
            }
            let Some(pr) = (lead..self.rows).find(|&r| m[r * cols + col] != 0) else {
                continue;
            };
            if pr != lead {
                for c in 0..cols {
                    m.swap(pr * cols + c, lead * cols + c);
                }
            }
            let inv = f.inv_raw(m[lead * cols + col]).expect("pivot is nonzero");
            for c in 0..cols {
                m[lead * cols + c] = f.mul_raw(m[lead * cols + c], inv);
            }
            for r in 0..self.rows {
                let factor = m[r * cols + col];
                if r == lead || factor == 0 {
                    continue;
                }
                for c in 0..cols {
                    let sub = f.mul_raw(factor, m[lead * cols + c]);
                    m[r * cols + c] = f.sub_raw(m[r * cols + c], sub);
                }
            }
            pivots.push(col);
            lead += 1;
        }
        Rref {
            matrix: MatrixGF {
                field: f.clone(),
                rows: self.rows,
                cols,
                data: m,
            },
            rank: pivots.len(),
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// The nonzero rows of the reduced row echelon form: a canonical basis of the row space.
    pub fn row_space_basis(&self) -> MatrixGF {
        let Rref { matrix, rank, .. } = self.rref();
        MatrixGF {
            field: matrix.field,
            rows: rank,
            cols: self.cols,
            data: matrix.data[..rank * self.cols].to_vec(),
        }
    }

    pub fn same_row_space(&self, other: &MatrixGF) -> bool {
        self.cols == other.cols
            && self.field == other.field
            && self.row_space_basis() == other.row_space_basis()
    }

    /// A basis of `{v : M vᵀ = 0}`, one row per free column of the RREF.
    pub fn nullspace_basis(&self) -> MatrixGF {
        let f = &self.field;
        let Rref { matrix, pivots, .. } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut data = Vec::with_capacity(free.len() * self.cols);
        for &fc in &free {
            let mut v = vec![0; self.cols];
            v[fc] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg_raw(matrix.raw(i, fc));
            }
            data.extend(v);
        }
        MatrixGF {
            field: f.clone(),
            rows: free.len(),
            cols: self.cols,
            data,
        }
    }

    /// Generator of the dual code. `self` must have full row rank.
    pub fn dual_generator(&self) -> Result<MatrixGF, LinalgError> {
        let rank = self.rank();
        if rank != self.rows {
            return Err(LinalgError::RankDeficient {
                rows: self.rows,
                rank,
            });
        }
        Ok(self.nullspace_basis())
    }
}

pub(crate) fn dot(field: &FiniteField, a: &[u32], b: &[u32]) -> u32 {
    a.iter()
        .zip(b)
        .fold(0, |acc, (&x, &y)| field.add_raw(acc, field.mul_raw(x, y)))
}

impl fmt::Debug for MatrixGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MatrixGF<{}>{}x{}[", self.field, self.rows, self.cols)?;
        for (i, row) in self.row_iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{row:?}")?;
        }
        write!(f, "]")
    }
}

/// One row per line, entries separated by single spaces.
impl fmt::Display for MatrixGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.row_iter() {
            let line: Vec<String> = row.iter().map(u32::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}
