//! Matrices with polynomial entries: determinants and minors by memoized
//! Laplace expansion, pfaffians of skew-symmetric matrices, jacobian and
//! hessian matrices.
//!
//! Sizes are capped at 8: every matrix in this crate is at most 6x6 or 5x6,
//! and at that scale memoized cofactor expansion over sparse entries beats
//! elimination in the polynomial ring.

use crate::field::{Field, FieldElement};
use crate::poly::Polynomial;
use std::collections::HashMap;

/// Determinant/pfaffian expansion is limited to this many rows.
pub const MAX_EXPANSION_SIZE: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatrixError {
    #[error("matrix is {rows}x{cols}, not square")]
    NonSquare { rows: usize, cols: usize },
    #[error("size {0} exceeds the expansion limit {MAX_EXPANSION_SIZE}")]
    TooLarge(usize),
    #[error("pfaffian requires even size, got {0}")]
    OddSize(usize),
    #[error("entry ({row},{col}) violates skew-symmetry")]
    NotSkewSymmetric { row: usize, col: usize },
    #[error("maximal minors require rows + 1 = cols, got {rows}x{cols}")]
    BadShapeForMinors { rows: usize, cols: usize },
    #[error("minor size {k} out of range for a {rows}x{cols} matrix")]
    MinorOutOfRange { k: usize, rows: usize, cols: usize },
}

/// Row-major matrix of polynomials over a common field and variable set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    field: Field,
    nvars: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn from_rows(field: Field, nvars: usize, rows: Vec<Vec<Polynomial>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for row in rows {
            assert_eq!(row.len(), ncols, "ragged rows");
            for e in row {
                assert_eq!(e.field(), field);
                assert_eq!(e.nvars(), nvars);
                entries.push(e);
            }
        }
        PolyMatrix {
            rows: nrows,
            cols: ncols,
            field,
            nvars,
            entries,
        }
    }

    /// Matrix of constants from scalar entries.
    pub fn from_scalars(field: Field, nvars: usize, rows: &[Vec<FieldElement>]) -> Self {
        let data = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|c| Polynomial::constant(field, nvars, c.clone()))
                    .collect()
            })
            .collect();
        Self::from_rows(field, nvars, data)
    }

    pub fn identity(field: Field, nvars: usize, n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            Polynomial::one(field, nvars)
                        } else {
                            Polynomial::zero(field, nvars)
                        }
                    })
                    .collect()
            })
            .collect();
        Self::from_rows(field, nvars, rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }

    pub fn transpose(&self) -> Self {
        let rows = (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.entry(i, j).clone()).collect())
            .collect();
        Self::from_rows(self.field, self.nvars, rows)
    }

    pub fn is_skew_symmetric(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        self.skew_violation().is_none()
    }

    fn skew_violation(&self) -> Option<(usize, usize)> {
        for i in 0..self.rows {
            if !self.entry(i, i).is_zero() {
                return Some((i, i));
            }
            for j in i + 1..self.cols {
                if *self.entry(i, j) != self.entry(j, i).negated() {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Matrix product.
    pub fn mul_matrix(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let rows = (0..self.rows)
            .map(|i| {
                (0..other.cols)
                    .map(|j| {
                        let mut acc = Polynomial::zero(self.field, self.nvars);
                        for k in 0..self.cols {
                            acc = &acc + &(self.entry(i, k) * other.entry(k, j));
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        Self::from_rows(self.field, self.nvars, rows)
    }

    /// Matrix-vector product.
    pub fn mul_vector(&self, v: &[Polynomial]) -> Vec<Polynomial> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = Polynomial::zero(self.field, self.nvars);
                for j in 0..self.cols {
                    acc = &acc + &(self.entry(i, j) * &v[j]);
                }
                acc
            })
            .collect()
    }

    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> Self {
        let rows = row_idx
            .iter()
            .map(|&i| col_idx.iter().map(|&j| self.entry(i, j).clone()).collect())
            .collect();
        Self::from_rows(self.field, self.nvars, rows)
    }

    /// Exact determinant by Laplace expansion with memoized sub-minors.
    pub fn determinant(&self) -> Result<Polynomial, MatrixError> {
        if self.rows != self.cols {
            return Err(MatrixError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if self.rows > MAX_EXPANSION_SIZE {
            return Err(MatrixError::TooLarge(self.rows));
        }
        let full: u32 = if self.cols == 32 {
            u32::MAX
        } else {
            (1u32 << self.cols) - 1
        };
        let mut memo: HashMap<u32, Polynomial> = HashMap::new();
        Ok(self.det_on_columns(full, &mut memo))
    }

    /// Determinant of the square block formed by the last `popcount(mask)`
    /// rows and the column set `mask`.
    fn det_on_columns(&self, mask: u32, memo: &mut HashMap<u32, Polynomial>) -> Polynomial {
        let size = mask.count_ones() as usize;
        if size == 0 {
            return Polynomial::one(self.field, self.nvars);
        }
        if let Some(p) = memo.get(&mask) {
            return p.clone();
        }
        let row = self.rows - size;
        let mut acc = Polynomial::zero(self.field, self.nvars);
        let mut positive = true;
        for j in 0..self.cols {
            if mask & (1 << j) == 0 {
                continue;
            }
            let e = self.entry(row, j);
            if !e.is_zero() {
                let sub = self.det_on_columns(mask & !(1 << j), memo);
                let term = e * &sub;
                acc = if positive { &acc + &term } else { &acc - &term };
            }
            positive = !positive;
        }
        memo.insert(mask, acc.clone());
        acc
    }

    /// The `cols` maximal minors of a `(c-1) x c` matrix; entry `i` is the
    /// determinant after deleting column `i`.
    pub fn maximal_minors(&self) -> Result<Vec<Polynomial>, MatrixError> {
        if self.rows + 1 != self.cols {
            return Err(MatrixError::BadShapeForMinors {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let all_rows: Vec<usize> = (0..self.rows).collect();
        (0..self.cols)
            .map(|del| {
                let kept: Vec<usize> = (0..self.cols).filter(|&j| j != del).collect();
                self.submatrix(&all_rows, &kept).determinant()
            })
            .collect()
    }

    /// Signed maximal minors `v_i = (-1)^i det(delete column i)`, chosen so
    /// that `A v = 0` holds identically.
    pub fn signed_maximal_minors(&self) -> Result<Vec<Polynomial>, MatrixError> {
        let mut minors = self.maximal_minors()?;
        for (i, m) in minors.iter_mut().enumerate() {
            if i % 2 == 1 {
                *m = m.negated();
            }
        }
        Ok(minors)
    }

    /// All `k x k` minors, enumerated by (row subset, column subset) in
    /// lexicographic order of index sets.
    pub fn k_minors(&self, k: usize) -> Result<Vec<Polynomial>, MatrixError> {
        if k > self.rows || k > self.cols {
            return Err(MatrixError::MinorOutOfRange {
                k,
                rows: self.rows,
                cols: self.cols,
            });
        }
        let row_sets = subsets(self.rows, k);
        let col_sets = subsets(self.cols, k);
        let mut out = Vec::with_capacity(row_sets.len() * col_sets.len());
        for rs in &row_sets {
            for cs in &col_sets {
                out.push(self.submatrix(rs, cs).determinant()?);
            }
        }
        Ok(out)
    }

    /// Pfaffian by expansion along the first active row, with the sign
    /// convention `pf([[0, a], [-a, 0]]) = a`.
    pub fn pfaffian(&self) -> Result<Polynomial, MatrixError> {
        if self.rows != self.cols {
            return Err(MatrixError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if self.rows % 2 != 0 {
            return Err(MatrixError::OddSize(self.rows));
        }
        if self.rows > MAX_EXPANSION_SIZE {
            return Err(MatrixError::TooLarge(self.rows));
        }
        if let Some((row, col)) = self.skew_violation() {
            return Err(MatrixError::NotSkewSymmetric { row, col });
        }
        let indices: Vec<usize> = (0..self.rows).collect();
        Ok(self.pfaffian_on(&indices))
    }

    fn pfaffian_on(&self, active: &[usize]) -> Polynomial {
        if active.is_empty() {
            return Polynomial::one(self.field, self.nvars);
        }
        let first = active[0];
        let mut acc = Polynomial::zero(self.field, self.nvars);
        let mut positive = true;
        for &j in &active[1..] {
            let e = self.entry(first, j);
            if !e.is_zero() {
                let rest: Vec<usize> = active[1..].iter().copied().filter(|&x| x != j).collect();
                let sub = self.pfaffian_on(&rest);
                let term = e * &sub;
                acc = if positive { &acc + &term } else { &acc - &term };
            }
            positive = !positive;
        }
        acc
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Jacobian matrix: entry `(i, j)` is `dF_i/dX_j`.
pub fn jacobian_matrix(fs: &[Polynomial]) -> PolyMatrix {
    assert!(!fs.is_empty());
    let field = fs[0].field();
    let nvars = fs[0].nvars();
    let rows = fs
        .iter()
        .map(|f| {
            (0..nvars)
                .map(|j| f.partial_derivative(j).unwrap())
                .collect()
        })
        .collect();
    PolyMatrix::from_rows(field, nvars, rows)
}

/// Hessian matrix of second partials; symmetric by construction of the
/// derivative, not by fiat.
pub fn hessian_matrix(f: &Polynomial) -> PolyMatrix {
    let nvars = f.nvars();
    let firsts: Vec<Polynomial> = (0..nvars)
        .map(|i| f.partial_derivative(i).unwrap())
        .collect();
    let rows = firsts
        .iter()
        .map(|fi| {
            (0..nvars)
                .map(|j| fi.partial_derivative(j).unwrap())
                .collect()
        })
        .collect();
    PolyMatrix::from_rows(f.field(), nvars, rows)
}
