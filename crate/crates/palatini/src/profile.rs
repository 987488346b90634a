//! Graded pieces of the singular-curve ideal, computed by exact linear
//! algebra only.
//!
//! For a system with quartic `W` and contraction matrix `A`:
//! - the degree-3 piece is the span of the six partials of `W`;
//! - the degree-4 piece is the span of the 75 4x4 minors of `A`;
//! - the degree-5 piece is the span of the coordinate multiples of a basis
//!   of the degree-4 piece;
//! - the degree-2 piece is the space of quadrics `q` with `q * X_i` inside
//!   the degree-3 piece for every `i`, one linear system in 21 unknowns.
//!
//! A nonsingular generic curve of this family has Hilbert polynomial
//! `25t - 25`, giving dimensions (0, 6, 51, 152) and Hilbert function values
//! (21, 50, 75, 100) in degrees 2..5. The profile reports whatever it finds;
//! genericity is never assumed.

use crate::field::Field;
use crate::linalg::{self, Echelon};
use crate::monomial::{binomial, monomial_basis};
use crate::poly::Polynomial;
use crate::quartic::{catalecticant_rank, ExtractError, PalatiniQuartic};
use crate::skew::SkewSystem;
use crate::space::coefficient_vector;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

/// Dimensions of the graded ideal pieces in degrees 2..5 expected of a
/// generic system.
pub const EXPECTED_DIMS: [usize; 4] = [0, 6, 51, 152];

/// Graded dimensions and Hilbert function values of the singular-curve
/// ideal, degrees 2 through 5.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularCurveProfile {
    dims: [usize; 4],
    hilbert: [usize; 4],
    products_contained: bool,
}

impl SingularCurveProfile {
    /// `dim I_d` for `d` in 2..=5.
    pub fn dim(&self, d: u32) -> usize {
        assert!((2..=5).contains(&d));
        self.dims[(d - 2) as usize]
    }

    pub fn dims(&self) -> [usize; 4] {
        self.dims
    }

    /// `HF(d) = C(d+5, 5) - dim I_d` for `d` in 2..=5.
    pub fn hilbert_function(&self, d: u32) -> usize {
        assert!((2..=5).contains(&d));
        self.hilbert[(d - 2) as usize]
    }

    /// Whether every product `X_j * dW/dX_i` lies in the span of the minors.
    pub fn products_contained(&self) -> bool {
        self.products_contained
    }

    /// True exactly when the dimensions match [`EXPECTED_DIMS`] and the
    /// containment holds.
    pub fn is_generic(&self) -> bool {
        self.dims == EXPECTED_DIMS && self.products_contained
    }
}

impl SkewSystem {
    /// Full graded profile; propagates extraction failures of degenerate
    /// systems.
    pub fn singular_profile(&self) -> Result<SingularCurveProfile, ExtractError> {
        let quartic = self.quartic()?;
        Ok(profile_of(&quartic))
    }
}

fn profile_of(quartic: &PalatiniQuartic) -> SingularCurveProfile {
    let field = quartic.field();
    let n = 6usize;
    let w = quartic.poly();
    let partials: Vec<Polynomial> = (0..n).map(|i| w.partial_derivative(i).unwrap()).collect();

    // Degree 3: span of the partials.
    let cubic_basis = monomial_basis(n, 3);
    let mut i3 = Echelon::new(field, cubic_basis.len());
    for p in &partials {
        i3.insert(coefficient_vector(&field, &cubic_basis, p));
    }

    // Degree 4: span of the 75 4x4 minors of the contraction matrix.
    let minors = quartic
        .system()
        .contraction_matrix()
        .k_minors(4)
        .expect("4x4 minors of a 5x6 matrix");
    let quartic_basis = monomial_basis(n, 4);
    let mut i4 = Echelon::new(field, quartic_basis.len());
    let mut i4_polys: Vec<Polynomial> = Vec::new();
    for m in &minors {
        if i4.insert(coefficient_vector(&field, &quartic_basis, m)) {
            i4_polys.push(m.clone());
        }
    }

    // Containment: X_j * dW/dX_i inside the minor span.
    let products_contained = partials.iter().all(|p| {
        (0..n).all(|j| {
            i4.contains(&coefficient_vector(
                &field,
                &quartic_basis,
                &p.mul_variable(j),
            ))
        })
    });

    // Degree 5: coordinate multiples of an independent set of minors.
    let quintic_basis = monomial_basis(n, 5);
    let mut i5 = Echelon::new(field, quintic_basis.len());
    for q in &i4_polys {
        for j in 0..n {
            i5.insert(coefficient_vector(
                &field,
                &quintic_basis,
                &q.mul_variable(j),
            ));
        }
    }

    // Degree 2: quadrics q with q * X_i in I_3 for all i. For each quadric
    // monomial the residual of X_i * m against the echelon of I_3 is linear
    // in the unknown coefficients; stacking the residuals gives one system
    // in 21 unknowns.
    let quad_basis = monomial_basis(n, 2);
    let mut residuals: Vec<Vec<Vec<crate::field::FieldElement>>> = Vec::new();
    for m in &quad_basis {
        let mut per_i = Vec::with_capacity(n);
        for i in 0..n {
            let shifted = Polynomial::from_terms(field, n, [(m.mul_variable(i), field.one())]);
            per_i.push(i3.reduce(&coefficient_vector(&field, &cubic_basis, &shifted)));
        }
        residuals.push(per_i);
    }
    let mut rows = Vec::with_capacity(n * cubic_basis.len());
    for i in 0..n {
        for mu in 0..cubic_basis.len() {
            rows.push(
                (0..quad_basis.len())
                    .map(|a| residuals[a][i][mu].clone())
                    .collect(),
            );
        }
    }
    let i2_dim = linalg::kernel(field, quad_basis.len(), &rows).len();

    let dims = [i2_dim, i3.rank(), i4.rank(), i5.rank()];
    let hilbert = [
        binomial(7, 5) - dims[0],
        binomial(8, 5) - dims[1],
        binomial(9, 5) - dims[2],
        binomial(10, 5) - dims[3],
    ];
    SingularCurveProfile {
        dims,
        hilbert,
        products_contained,
    }
}

/// The two cheap open conditions used to accept a random system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenericityCertificate {
    pub catalecticant_rank: usize,
    pub dim_i4: usize,
}

impl GenericityCertificate {
    pub fn passes(&self) -> bool {
        self.catalecticant_rank == 21 && self.dim_i4 == 51
    }
}

/// Catalecticant rank and minor-span dimension of a system's quartic.
/// Rank-only computations go through the fraction-free elimination, which
/// keeps rational systems fast.
pub fn genericity_certificate(sys: &SkewSystem) -> Result<GenericityCertificate, ExtractError> {
    let quartic = sys.quartic()?;
    let field = sys.field();
    let minors = sys
        .contraction_matrix()
        .k_minors(4)
        .expect("4x4 minors of a 5x6 matrix");
    let basis = monomial_basis(6, 4);
    let rows: Vec<Vec<crate::field::FieldElement>> = minors
        .iter()
        .map(|m| coefficient_vector(&field, &basis, m))
        .collect();
    Ok(GenericityCertificate {
        catalecticant_rank: catalecticant_rank(quartic.poly()),
        dim_i4: linalg::rank(field, basis.len(), &rows),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RandomSystemError {
    #[error("no draw passed the genericity certificate in {attempts} attempts")]
    GenericityFailure { attempts: usize },
}

pub const DEFAULT_MAX_RETRIES: usize = 8;

/// Draw systems from a seeded stream until one passes the genericity
/// certificate (catalecticant 21 and minor span of dimension 51).
pub fn random_system(
    seed: u64,
    field: Field,
    max_retries: usize,
) -> Result<SkewSystem, RandomSystemError> {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    for _ in 0..max_retries {
        let Ok(sys) = SkewSystem::draw(field, &mut rng) else {
            continue; // dependent draw, vanishingly rare
        };
        if let Ok(cert) = genericity_certificate(&sys) {
            if cert.passes() {
                return Ok(sys);
            }
        }
    }
    Err(RandomSystemError::GenericityFailure {
        attempts: max_retries,
    })
}
