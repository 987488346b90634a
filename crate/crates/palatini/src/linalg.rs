//! Exact linear algebra over a [`Field`].
//!
//! Rank uses fraction-free Bareiss elimination over the integers for `Q`
//! (rows are scaled by their denominator lcm first) and plain Gaussian
//! elimination on `u64` residues for `F_p`. Kernels come from a reduced
//! row-echelon form computed directly in the field. [`Echelon`] is an
//! incremental reduced echelon basis used for span-membership tests.

use crate::field::{Field, FieldElement};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

/// Rank of the matrix whose rows are `rows` (each of length `ncols`).
pub fn rank(field: Field, ncols: usize, rows: &[Vec<FieldElement>]) -> usize {
    check_shape(field, ncols, rows);
    match field {
        Field::Prime(p) => rank_fp(p, ncols, rows),
        Field::Rational => rank_bareiss(ncols, rows),
    }
}

/// Basis of `{x : M x = 0}` for the matrix with the given rows.
pub fn kernel(field: Field, ncols: usize, rows: &[Vec<FieldElement>]) -> Vec<Vec<FieldElement>> {
    check_shape(field, ncols, rows);
    let mut ech = Echelon::new(field, ncols);
    for r in rows {
        ech.insert(r.clone());
    }
    ech.kernel()
}

fn check_shape(field: Field, ncols: usize, rows: &[Vec<FieldElement>]) {
    for r in rows {
        assert_eq!(r.len(), ncols, "row length mismatch");
        debug_assert!(r.iter().all(|x| field.contains(x)));
    }
}

fn rank_fp(p: u64, ncols: usize, rows: &[Vec<FieldElement>]) -> usize {
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| match x {
                    FieldElement::Prime { value, .. } => *value,
                    FieldElement::Rational(_) => unreachable!(),
                })
                .collect()
        })
        .collect();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = mod_inv(m[rank][col], p);
        for i in rank + 1..m.len() {
            if m[i][col] == 0 {
                continue;
            }
            let factor = m[i][col] * inv % p;
            for j in col..ncols {
                let sub = factor * m[rank][j] % p;
                m[i][j] = (m[i][j] + p - sub) % p;
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // a^(p-2) mod p
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Fraction-free elimination on integer rows; never forms intermediate
/// fractions, all divisions are exact.
fn rank_bareiss(ncols: usize, rows: &[Vec<FieldElement>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            let lcm = r.iter().fold(BigInt::from(1), |acc, x| match x {
                FieldElement::Rational(q) => acc.lcm(q.denom()),
                FieldElement::Prime { .. } => unreachable!(),
            });
            r.iter()
                .map(|x| match x {
                    FieldElement::Rational(q) => q.numer() * (&lcm / q.denom()),
                    FieldElement::Prime { .. } => unreachable!(),
                })
                .collect()
        })
        .collect();
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for i in rank + 1..m.len() {
            for j in col + 1..ncols {
                let num = &m[i][j] * &m[rank][col] - &m[i][col] * &m[rank][j];
                debug_assert!((&num % &prev).is_zero());
                m[i][j] = num / &prev;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Incremental reduced row-echelon basis of a span of vectors.
#[derive(Debug, Clone)]
pub struct Echelon {
    field: Field,
    ncols: usize,
    rows: Vec<Vec<FieldElement>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(field: Field, ncols: usize) -> Self {
        Echelon {
            field,
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Pivot columns in increasing order of insertion position.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// The reduced echelon rows, ordered by pivot column.
    pub fn rows(&self) -> &[Vec<FieldElement>] {
        &self.rows
    }

    /// Residual of `v` after elimination against the current basis.
    pub fn reduce(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(v.len(), self.ncols);
        let mut v = v.to_vec();
        self.reduce_in_place(&mut v);
        v
    }

    fn reduce_in_place(&self, v: &mut [FieldElement]) {
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            if v[pc].is_zero() {
                continue;
            }
            let factor = v[pc].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = self.field.sub(x, &self.field.mul(&factor, r));
                }
            }
        }
    }

    pub fn contains(&self, v: &[FieldElement]) -> bool {
        self.reduce(v).iter().all(FieldElement::is_zero)
    }

    /// Insert a vector; returns true when it enlarged the span.
    pub fn insert(&mut self, mut v: Vec<FieldElement>) -> bool {
        assert_eq!(v.len(), self.ncols);
        self.reduce_in_place(&mut v);
        let Some(pc) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = self.field.inv(&v[pc]).expect("pivot is nonzero");
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = self.field.mul(x, &inv);
            }
        }
        // Eliminate the new pivot column from the existing rows.
        for row in self.rows.iter_mut() {
            if row[pc].is_zero() {
                continue;
            }
            let factor = row[pc].clone();
            for (x, r) in row.iter_mut().zip(&v) {
                if !r.is_zero() {
                    *x = self.field.sub(x, &self.field.mul(&factor, r));
                }
            }
        }
        let at = self
            .pivots
            .iter()
            .position(|&q| q > pc)
            .unwrap_or(self.pivots.len());
        self.pivots.insert(at, pc);
        self.rows.insert(at, v);
        true
    }

    /// Basis of the null space of the matrix whose row span this echelon is.
    pub fn kernel(&self) -> Vec<Vec<FieldElement>> {
        let mut basis = Vec::new();
        let zero = self.field.zero();
        for free in 0..self.ncols {
            if self.pivots.contains(&free) {
                continue;
            }
            let mut x = vec![zero.clone(); self.ncols];
            x[free] = self.field.one();
            for (row, &pc) in self.rows.iter().zip(&self.pivots) {
                x[pc] = self.field.neg(&row[free]);
            }
            basis.push(x);
        }
        basis
    }
}
