//! The quartic of a skew system and everything derived from a single
//! quartic: jacobian space, catalecticant rank, hessian commutant and
//! reconstruction from the jacobian space.
//!
//! Extraction never computes a polynomial gcd. The signed maximal minors
//! `v_i` of the 5x6 contraction matrix `A` satisfy `A v = 0`; since `A X = 0`
//! as well and the kernel of a rank-5 `A` over the rational function field is
//! a line, `v = c * W * X` for a quartic `W` and a constant `c`. `W` is then
//! the exact quotient `v_i / X_i` for any index with `v_i != 0`, checked
//! against the cross identities `X_j v_i = X_i v_j`.

use crate::field::{Field, FieldElement};
use crate::linalg;
use crate::matrix::hessian_matrix;
use crate::monomial::monomial_basis;
use crate::poly::Polynomial;
use crate::skew::SkewSystem;
use crate::space::{coefficient_vector, PolySpace};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExtractError {
    #[error("all maximal minors vanish; the system is degenerate")]
    AllMinorsZero,
    #[error("minor cross-compatibility failed; this is a bug, not bad input")]
    DivisionFailure,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReconstructError {
    #[error("the space has rank {0}, expected 6")]
    RankDeficient(usize),
    #[error("the symmetry constraints admit only the zero solution")]
    NoSolution,
    #[error("the solution space has dimension {0}, the quartic is not unique")]
    NotUnique(usize),
}

/// A monic homogeneous quartic extracted from a skew system, together with
/// the system that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PalatiniQuartic {
    poly: Polynomial,
    system: SkewSystem,
}

impl SkewSystem {
    /// Extract the quartic of this system; see the module notes for the
    /// minor-quotient route.
    pub fn quartic(&self) -> Result<PalatiniQuartic, ExtractError> {
        let a = self.contraction_matrix();
        let minors = a
            .signed_maximal_minors()
            .expect("contraction matrix is 5x6");
        let Some(pivot) = minors.iter().position(|m| !m.is_zero()) else {
            return Err(ExtractError::AllMinorsZero);
        };
        // Cross identities X_j v_i = X_i v_j guarantee exact division.
        for i in 0..minors.len() {
            for j in i + 1..minors.len() {
                if minors[i].mul_variable(j) != minors[j].mul_variable(i) {
                    return Err(ExtractError::DivisionFailure);
                }
            }
        }
        let w = minors[pivot]
            .div_variable(pivot)
            .ok_or(ExtractError::DivisionFailure)?;
        debug_assert!(w.is_homogeneous_of_degree(4));
        Ok(PalatiniQuartic {
            poly: w.monic(),
            system: self.clone(),
        })
    }
}

impl PalatiniQuartic {
    /// The monic quartic equation.
    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    /// The skew system the quartic came from.
    pub fn system(&self) -> &SkewSystem {
        &self.system
    }

    pub fn field(&self) -> Field {
        self.poly.field()
    }

    /// Span of the six first partials as a degree-3 space.
    pub fn jacobian_space(&self) -> PolySpace {
        jacobian_space(&self.poly)
    }

    /// Rank of the 21 second partials as a degree-2 space.
    pub fn catalecticant_rank(&self) -> usize {
        catalecticant_rank(&self.poly)
    }

    /// Dimension of the hessian commutant (1 means the quartic is the only
    /// one with its jacobian space).
    pub fn hessian_commutant_dim(&self) -> usize {
        hessian_commutant_dim(&self.poly)
    }
}

/// Span of the six first partials of a degree-4 form.
pub fn jacobian_space(f: &Polynomial) -> PolySpace {
    assert!(
        f.is_homogeneous_of_degree(4),
        "expected a homogeneous quartic"
    );
    let partials = (0..f.nvars())
        .map(|i| f.partial_derivative(i).unwrap())
        .collect();
    PolySpace::new(f.field(), f.nvars(), 3, partials).expect("partials of a quartic are cubics")
}

/// Rank of the 21 second partials `d^2 f / dX_i dX_j` (`i <= j`) as a
/// degree-2 space. 21 means `f` is apolar to no quadric.
pub fn catalecticant_rank(f: &Polynomial) -> usize {
    assert!(
        f.is_homogeneous_of_degree(4),
        "expected a homogeneous quartic"
    );
    let n = f.nvars();
    let mut seconds = Vec::with_capacity(n * (n + 1) / 2);
    for i in 0..n {
        let fi = f.partial_derivative(i).unwrap();
        for j in i..n {
            seconds.push(fi.partial_derivative(j).unwrap());
        }
    }
    PolySpace::new(f.field(), n, 2, seconds)
        .expect("second partials of a quartic are quadrics")
        .rank()
}

/// Dimension of `{A : A H = H A^t}` for `H` the hessian of `f`, solved as
/// one linear system in the 36 entries of `A` (36 polynomial entries times
/// 21 quadric coefficients gives 756 equations).
pub fn hessian_commutant_dim(f: &Polynomial) -> usize {
    assert!(
        f.is_homogeneous_of_degree(4),
        "expected a homogeneous quartic"
    );
    let n = f.nvars();
    let field = f.field();
    let h = hessian_matrix(f);
    let basis = monomial_basis(n, 2);
    let index = |i: usize, k: usize| i * n + k;
    let mut rows: Vec<Vec<FieldElement>> = Vec::with_capacity(n * n * basis.len());
    // Entry (i,j) of A*H - H*A^t is sum_k a_ik H[k][j] - sum_k a_jk H[i][k].
    for i in 0..n {
        for j in 0..n {
            let mut columns: Vec<Polynomial> = vec![Polynomial::zero(field, n); n * n];
            for k in 0..n {
                columns[index(i, k)] = &columns[index(i, k)] + h.entry(k, j);
                columns[index(j, k)] = &columns[index(j, k)] - h.entry(i, k);
            }
            let coeff_rows: Vec<Vec<FieldElement>> = columns
                .iter()
                .map(|p| coefficient_vector(&field, &basis, p))
                .collect();
            for (m, _) in basis.iter().enumerate() {
                rows.push((0..n * n).map(|u| coeff_rows[u][m].clone()).collect());
            }
        }
    }
    linalg::kernel(field, n * n, &rows).len()
}

/// Reconstruct the unique quartic whose jacobian space is `space`.
///
/// With a basis `G_0..G_5` of the space, solves for scalar `A` such that
/// `F_i = sum_a A[i][a] G_a` has symmetric partials `dF_i/dX_j = dF_j/dX_i`;
/// when the solution space is a line the Euler sum `sum_i X_i F_i` recovers
/// the quartic up to scale.
pub fn reconstruct_from_jacobian(space: &PolySpace) -> Result<Polynomial, ReconstructError> {
    let n = space.nvars();
    let field = space.field();
    assert_eq!(space.degree(), 3, "expected a space of cubics");
    let ech = space.echelon();
    if ech.rank() != n {
        return Err(ReconstructError::RankDeficient(ech.rank()));
    }
    // The echelon rows are the canonical basis G_0..G_5.
    let basis_polys = echelon_polynomials(space);

    let quad_basis = monomial_basis(n, 2);
    let npairs = n * (n - 1) / 2;
    let mut rows: Vec<Vec<FieldElement>> = Vec::with_capacity(npairs * quad_basis.len());
    // d(G_a)/dX_j as coefficient vectors, indexed [a][j].
    let dg: Vec<Vec<Vec<FieldElement>>> = basis_polys
        .iter()
        .map(|g| {
            (0..n)
                .map(|j| coefficient_vector(&field, &quad_basis, &g.partial_derivative(j).unwrap()))
                .collect()
        })
        .collect();
    for i in 0..n {
        for j in i + 1..n {
            for (m, _) in quad_basis.iter().enumerate() {
                // Unknowns A[r][a] at column r*n + a.
                let mut row = vec![field.zero(); n * n];
                for a in 0..n {
                    row[i * n + a] = field.add(&row[i * n + a], &dg[a][j][m]);
                    row[j * n + a] = field.sub(&row[j * n + a], &dg[a][i][m]);
                }
                rows.push(row);
            }
        }
    }
    let kernel = linalg::kernel(field, n * n, &rows);
    match kernel.len() {
        0 => Err(ReconstructError::NoSolution),
        1 => {
            let a = &kernel[0];
            let mut w = Polynomial::zero(field, n);
            for i in 0..n {
                let mut fi = Polynomial::zero(field, n);
                for (alpha, g) in basis_polys.iter().enumerate() {
                    let c = &a[i * n + alpha];
                    if !c.is_zero() {
                        fi = &fi + &g.scaled(c);
                    }
                }
                w = &w + &fi.mul_variable(i);
            }
            if w.is_zero() {
                return Err(ReconstructError::NoSolution);
            }
            // The Euler sum is deg(W) * W; monic normalization absorbs it.
            Ok(w.monic())
        }
        d => Err(ReconstructError::NotUnique(d)),
    }
}

/// The echelon basis of a space, as polynomials.
fn echelon_polynomials(space: &PolySpace) -> Vec<Polynomial> {
    let field = space.field();
    let basis = space.monomials();
    space
        .echelon()
        .rows()
        .iter()
        .map(|row| {
            Polynomial::from_terms(
                field,
                space.nvars(),
                basis
                    .iter()
                    .cloned()
                    .zip(row.iter().cloned())
                    .filter(|(_, c)| !c.is_zero()),
            )
        })
        .collect()
}
