//! Five-tuples of skew-symmetric 6x6 scalar matrices and the 5x6 matrix of
//! linear forms they define on P^5.
//!
//! Row `k` of the contraction matrix is `M_k * X`; since `X^t M_k X = 0` for
//! skew `M_k`, the identity `A * X = 0` holds for every system.

use crate::field::{Field, FieldElement, FieldError};
use crate::linalg;
use crate::matrix::PolyMatrix;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use rand::Rng;

pub const MATRIX_SIZE: usize = 6;
pub const SYSTEM_SIZE: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SkewSystemError {
    #[error("expected {SYSTEM_SIZE} matrices, got {0}")]
    WrongCount(usize),
    #[error("matrix {matrix} is not {MATRIX_SIZE}x{MATRIX_SIZE}")]
    WrongShape { matrix: usize },
    #[error("matrix {matrix} entry ({row},{col}) violates skew-symmetry")]
    NotSkewSymmetric {
        matrix: usize,
        row: usize,
        col: usize,
    },
    #[error("matrix {matrix} entry ({row},{col}) does not belong to {field}")]
    ForeignEntry {
        matrix: usize,
        row: usize,
        col: usize,
        field: Field,
    },
    #[error("the five matrices are linearly dependent")]
    Dependent,
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Five linearly independent skew-symmetric 6x6 matrices over one field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewSystem {
    field: Field,
    matrices: Vec<Vec<Vec<FieldElement>>>,
}

impl SkewSystem {
    /// Validates shape, field membership, skew-symmetry (never symmetrizes)
    /// and linear independence of the five matrices.
    pub fn new(
        field: Field,
        matrices: Vec<Vec<Vec<FieldElement>>>,
    ) -> Result<Self, SkewSystemError> {
        if matrices.len() != SYSTEM_SIZE {
            return Err(SkewSystemError::WrongCount(matrices.len()));
        }
        for (k, m) in matrices.iter().enumerate() {
            if m.len() != MATRIX_SIZE || m.iter().any(|r| r.len() != MATRIX_SIZE) {
                return Err(SkewSystemError::WrongShape { matrix: k });
            }
            for (i, row) in m.iter().enumerate() {
                for (j, e) in row.iter().enumerate() {
                    if !field.contains(e) {
                        return Err(SkewSystemError::ForeignEntry {
                            matrix: k,
                            row: i,
                            col: j,
                            field,
                        });
                    }
                }
            }
            for i in 0..MATRIX_SIZE {
                if !m[i][i].is_zero() {
                    return Err(SkewSystemError::NotSkewSymmetric {
                        matrix: k,
                        row: i,
                        col: i,
                    });
                }
                for j in i + 1..MATRIX_SIZE {
                    if m[i][j] != field.neg(&m[j][i]) {
                        return Err(SkewSystemError::NotSkewSymmetric {
                            matrix: k,
                            row: i,
                            col: j,
                        });
                    }
                }
            }
        }
        let sys = SkewSystem { field, matrices };
        if linalg::rank(field, 15, &sys.upper_triangle_rows()) != SYSTEM_SIZE {
            return Err(SkewSystemError::Dependent);
        }
        Ok(sys)
    }

    pub fn from_integer_matrices(
        field: Field,
        matrices: &[[[i64; MATRIX_SIZE]; MATRIX_SIZE]; SYSTEM_SIZE],
    ) -> Result<Self, SkewSystemError> {
        let data = matrices
            .iter()
            .map(|m| {
                m.iter()
                    .map(|r| r.iter().map(|&n| field.from_i64(n)).collect())
                    .collect()
            })
            .collect();
        Self::new(field, data)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn matrices(&self) -> &[Vec<Vec<FieldElement>>] {
        &self.matrices
    }

    /// The strict upper triangles as rows of a 5x15 matrix; its rank tests
    /// linear independence.
    fn upper_triangle_rows(&self) -> Vec<Vec<FieldElement>> {
        self.matrices
            .iter()
            .map(|m| {
                let mut row = Vec::with_capacity(15);
                for i in 0..MATRIX_SIZE {
                    for j in i + 1..MATRIX_SIZE {
                        row.push(m[i][j].clone());
                    }
                }
                row
            })
            .collect()
    }

    /// The 5x6 matrix of linear forms with row `k = M_k * X`. Satisfies
    /// `A * X = 0` identically.
    pub fn contraction_matrix(&self) -> PolyMatrix {
        let rows = self
            .matrices
            .iter()
            .map(|m| {
                (0..MATRIX_SIZE)
                    .map(|j| {
                        let terms: Vec<(Monomial, FieldElement)> = (0..MATRIX_SIZE)
                            .filter(|&i| !m[j][i].is_zero())
                            .map(|i| (Monomial::variable(MATRIX_SIZE, i), m[j][i].clone()))
                            .collect();
                        Polynomial::from_terms(self.field, MATRIX_SIZE, terms)
                    })
                    .collect()
            })
            .collect();
        PolyMatrix::from_rows(self.field, MATRIX_SIZE, rows)
    }

    /// The scalar matrix `sum_k y_k M_k` at a point `y` of the dual P^4.
    pub fn evaluate_pencil(&self, y: &[FieldElement]) -> Vec<Vec<FieldElement>> {
        assert_eq!(y.len(), SYSTEM_SIZE);
        let mut out = vec![vec![self.field.zero(); MATRIX_SIZE]; MATRIX_SIZE];
        for (m, c) in self.matrices.iter().zip(y) {
            if c.is_zero() {
                continue;
            }
            for i in 0..MATRIX_SIZE {
                for j in 0..MATRIX_SIZE {
                    if !m[i][j].is_zero() {
                        let t = self.field.mul(c, &m[i][j]);
                        out[i][j] = self.field.add(&out[i][j], &t);
                    }
                }
            }
        }
        out
    }

    /// Replace the basis `M_1..M_5` by `N_k = sum_l C[k][l] M_l`.
    pub fn recombine(&self, coeffs: &[Vec<FieldElement>]) -> Result<Self, SkewSystemError> {
        assert_eq!(coeffs.len(), SYSTEM_SIZE);
        let matrices = coeffs
            .iter()
            .map(|crow| {
                assert_eq!(crow.len(), SYSTEM_SIZE);
                let mut m = vec![vec![self.field.zero(); MATRIX_SIZE]; MATRIX_SIZE];
                for (c, src) in crow.iter().zip(&self.matrices) {
                    if c.is_zero() {
                        continue;
                    }
                    for i in 0..MATRIX_SIZE {
                        for j in 0..MATRIX_SIZE {
                            if !src[i][j].is_zero() {
                                let t = self.field.mul(c, &src[i][j]);
                                m[i][j] = self.field.add(&m[i][j], &t);
                            }
                        }
                    }
                }
                m
            })
            .collect();
        Self::new(self.field, matrices)
    }

    /// Coefficient-wise reduction modulo `p` of a rational system.
    pub fn reduce_mod(&self, p: u64) -> Result<Self, SkewSystemError> {
        let target = Field::prime(p)?;
        let matrices = self
            .matrices
            .iter()
            .map(|m| {
                m.iter()
                    .map(|r| {
                        r.iter()
                            .map(|e| e.reduce_mod(p))
                            .collect::<Result<Vec<_>, _>>()
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(target, matrices)
    }

    /// Draw one candidate system: entries uniform in `[0, p)` over a prime
    /// field, uniform in `[-10, 10]` over the rationals. No genericity check.
    pub fn draw(field: Field, rng: &mut impl Rng) -> Result<Self, SkewSystemError> {
        let mut matrices = Vec::with_capacity(SYSTEM_SIZE);
        for _ in 0..SYSTEM_SIZE {
            let mut m = vec![vec![field.zero(); MATRIX_SIZE]; MATRIX_SIZE];
            for i in 0..MATRIX_SIZE {
                for j in i + 1..MATRIX_SIZE {
                    let e = match field {
                        Field::Prime(p) => field.from_i64(rng.random_range(0..p) as i64),
                        Field::Rational => field.from_i64(rng.random_range(-10i64..=10)),
                    };
                    m[j][i] = field.neg(&e);
                    m[i][j] = e;
                }
            }
            matrices.push(m);
        }
        Self::new(field, matrices)
    }
}
