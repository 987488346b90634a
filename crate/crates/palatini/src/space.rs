//! Finite-dimensional spaces of homogeneous polynomials of one degree,
//! with exact rank and relation-kernel services.
//!
//! A [`PolySpace`] is a generating list, not a basis: rank is the dimension
//! of the span, computed from the coefficient matrix in the fixed grevlex
//! monomial basis of the declared degree.

use crate::field::{Field, FieldElement};
use crate::linalg::{self, Echelon};
use crate::monomial::{monomial_basis, Monomial};
use crate::poly::Polynomial;
use std::collections::HashMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpaceError {
    #[error("generator {index} is not homogeneous of degree {degree}")]
    WrongDegree { index: usize, degree: u32 },
    #[error("generator {index} does not live in the declared field/variables")]
    Incompatible { index: usize },
}

/// A list of homogeneous polynomials of a common degree.
#[derive(Debug, Clone)]
pub struct PolySpace {
    field: Field,
    nvars: usize,
    degree: u32,
    generators: Vec<Polynomial>,
}

impl PolySpace {
    /// Zero polynomials are permitted as placeholders; they never contribute
    /// to the rank.
    pub fn new(
        field: Field,
        nvars: usize,
        degree: u32,
        generators: Vec<Polynomial>,
    ) -> Result<Self, SpaceError> {
        for (index, g) in generators.iter().enumerate() {
            if g.field() != field || g.nvars() != nvars {
                return Err(SpaceError::Incompatible { index });
            }
            if !g.is_homogeneous_of_degree(degree) {
                return Err(SpaceError::WrongDegree { index, degree });
            }
        }
        Ok(PolySpace {
            field,
            nvars,
            degree,
            generators,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// The grevlex monomial basis indexing the coefficient columns.
    pub fn monomials(&self) -> Vec<Monomial> {
        monomial_basis(self.nvars, self.degree)
    }

    /// Coefficient vector of `f` in the monomial basis of this space.
    pub fn coefficient_vector(&self, f: &Polynomial) -> Vec<FieldElement> {
        let basis = self.monomials();
        coefficient_vector(&self.field, &basis, f)
    }

    /// Rows of the coefficient matrix, one per generator.
    pub fn coefficient_matrix(&self) -> Vec<Vec<FieldElement>> {
        let basis = self.monomials();
        self.generators
            .iter()
            .map(|g| coefficient_vector(&self.field, &basis, g))
            .collect()
    }

    /// Dimension of the span.
    pub fn rank(&self) -> usize {
        let basis_len = self.monomials().len();
        linalg::rank(self.field, basis_len, &self.coefficient_matrix())
    }

    /// Basis of linear relations among the generators: vectors `c` with
    /// `sum_i c_i * g_i = 0`.
    pub fn relation_kernel(&self) -> Vec<Vec<FieldElement>> {
        let rows = self.coefficient_matrix();
        let ncols = self.monomials().len();
        // Relations are the kernel of the transpose.
        let n = self.generators.len();
        let transposed: Vec<Vec<FieldElement>> = (0..ncols)
            .map(|j| (0..n).map(|i| rows[i][j].clone()).collect())
            .collect();
        linalg::kernel(self.field, n, &transposed)
    }

    /// Reduced echelon basis of the span, for membership tests.
    pub fn echelon(&self) -> Echelon {
        let mut ech = Echelon::new(self.field, self.monomials().len());
        for row in self.coefficient_matrix() {
            ech.insert(row);
        }
        ech
    }

    /// Does `f` (homogeneous of the same degree) lie in the span?
    pub fn contains(&self, f: &Polynomial) -> bool {
        self.echelon().contains(&self.coefficient_vector(f))
    }
}

/// Coefficient vector of `f` with respect to an explicit monomial basis.
pub fn coefficient_vector(field: &Field, basis: &[Monomial], f: &Polynomial) -> Vec<FieldElement> {
    let index: HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut row = vec![field.zero(); basis.len()];
    for (m, c) in f.terms() {
        let i = *index.get(m).expect("monomial outside the declared degree");
        row[i] = c.clone();
    }
    row
}
