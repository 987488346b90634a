//! The dual pfaffian cubic of a skew system, kernel-line point sampling and
//! quartic interpolation.
//!
//! Points `y` of the dual P^4 with `pf(sum_k y_k M_k) = 0` index pencil
//! members of rank 4 (skew ranks are even); the two-dimensional kernel of
//! such a member spans a line inside the quartic. Sampling random points on
//! random kernel lines and intersecting one linear condition per point
//! recovers the quartic by interpolation, an independent route to the
//! minor-quotient extraction.

use crate::field::{Field, FieldElement};
use crate::linalg;
use crate::matrix::PolyMatrix;
use crate::monomial::{monomial_basis, Monomial};
use crate::poly::Polynomial;
use crate::skew::{SkewSystem, MATRIX_SIZE, SYSTEM_SIZE};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DualCubicError {
    #[error("the pfaffian vanishes identically; the system is degenerate")]
    IdenticallyZero,
}

/// Homogeneous cubic in the dual coordinates `u1..u5` cutting out the
/// rank-4 locus of the pencil.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualCubic {
    pf: Polynomial,
}

impl DualCubic {
    pub fn poly(&self) -> &Polynomial {
        &self.pf
    }

    /// Value at a scalar dual point.
    pub fn evaluate(&self, y: &[FieldElement]) -> FieldElement {
        self.pf
            .evaluate(y)
            .expect("dual point has 5 coordinates in the field")
    }

    /// Rendered with the 1-indexed dual variable names `u1..u5`.
    pub fn render(&self) -> String {
        self.pf.to_string_with_vars(&["u1", "u2", "u3", "u4", "u5"])
    }
}

impl SkewSystem {
    /// Pfaffian of `sum_k u_k M_k` with the `u_k` as formal variables.
    pub fn dual_cubic(&self) -> Result<DualCubic, DualCubicError> {
        let field = self.field();
        let rows: Vec<Vec<Polynomial>> = (0..MATRIX_SIZE)
            .map(|i| {
                (0..MATRIX_SIZE)
                    .map(|j| {
                        let terms: Vec<(Monomial, FieldElement)> = self
                            .matrices()
                            .iter()
                            .enumerate()
                            .filter(|(_, m)| !m[i][j].is_zero())
                            .map(|(k, m)| (Monomial::variable(SYSTEM_SIZE, k), m[i][j].clone()))
                            .collect();
                        Polynomial::from_terms(field, SYSTEM_SIZE, terms)
                    })
                    .collect()
            })
            .collect();
        let pencil = PolyMatrix::from_rows(field, SYSTEM_SIZE, rows);
        let pf = pencil
            .pfaffian()
            .expect("the pencil of a skew system is skew");
        if pf.is_zero() {
            return Err(DualCubicError::IdenticallyZero);
        }
        debug_assert!(pf.is_homogeneous_of_degree(3));
        Ok(DualCubic { pf })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SampleError {
    #[error("kernel-line sampling requires a prime field, got {0}")]
    RequiresPrimeField(Field),
    #[error(transparent)]
    DegenerateDual(#[from] DualCubicError),
    #[error("gave up after {draws} draws while collecting {wanted} points")]
    ExhaustedRetries { draws: usize, wanted: usize },
    #[error("a sampled point failed to lie on the quartic; this is a bug")]
    PointNotOnQuartic,
}

/// Default draws allowed per requested point before giving up.
pub const DRAWS_PER_POINT: usize = 100;

/// Sample `count` points of P^5 lying on kernel lines of the dual cubic,
/// with the default retry cap of `100 * count` draws.
///
/// Each draw fixes the first four dual coordinates at random, scans `F_p`
/// for roots of the remaining univariate cubic (fine for word-sized primes),
/// keeps the dual point when the pencil member has rank exactly 4, and
/// emits a random combination of the two kernel vectors. When `expect_on`
/// is given, every point is checked to lie on that quartic.
pub fn sample_kernel_line_points(
    sys: &SkewSystem,
    seed: u64,
    count: usize,
    expect_on: Option<&Polynomial>,
) -> Result<Vec<Vec<FieldElement>>, SampleError> {
    sample_kernel_line_points_with_cap(
        sys,
        seed,
        count,
        DRAWS_PER_POINT.saturating_mul(count),
        expect_on,
    )
}

/// [`sample_kernel_line_points`] with an explicit draw cap.
pub fn sample_kernel_line_points_with_cap(
    sys: &SkewSystem,
    seed: u64,
    count: usize,
    cap: usize,
    expect_on: Option<&Polynomial>,
) -> Result<Vec<Vec<FieldElement>>, SampleError> {
    let field = sys.field();
    let Field::Prime(p) = field else {
        return Err(SampleError::RequiresPrimeField(field));
    };
    let dual = sys.dual_cubic()?;
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut points = Vec::with_capacity(count);
    let mut draws = 0;
    while points.len() < count {
        if draws >= cap {
            return Err(SampleError::ExhaustedRetries {
                draws,
                wanted: count,
            });
        }
        draws += 1;
        let partial: Vec<u64> = (0..SYSTEM_SIZE - 1)
            .map(|_| rng.random_range(0..p))
            .collect();
        let roots = last_coordinate_roots(&dual, &partial, p);
        let t = match roots.len() {
            0 => continue,
            n => roots[rng.random_range(0..n)],
        };
        let y: Vec<FieldElement> = partial
            .iter()
            .copied()
            .chain([t])
            .map(|v| field.from_i64(v as i64))
            .collect();
        let member = sys.evaluate_pencil(&y);
        if linalg::rank(field, MATRIX_SIZE, &member) != 4 {
            continue;
        }
        let kernel = linalg::kernel(field, MATRIX_SIZE, &member);
        debug_assert_eq!(kernel.len(), 2);
        let (alpha, beta) = loop {
            let a = rng.random_range(0..p);
            let b = rng.random_range(0..p);
            if a != 0 || b != 0 {
                break (field.from_i64(a as i64), field.from_i64(b as i64));
            }
        };
        let point: Vec<FieldElement> = (0..MATRIX_SIZE)
            .map(|i| {
                field.add(
                    &field.mul(&alpha, &kernel[0][i]),
                    &field.mul(&beta, &kernel[1][i]),
                )
            })
            .collect();
        if let Some(w) = expect_on {
            if !w
                .evaluate(&point)
                .expect("point lives in the quartic's field")
                .is_zero()
            {
                return Err(SampleError::PointNotOnQuartic);
            }
        }
        points.push(point);
    }
    Ok(points)
}

/// Roots `t` of `pf(y_1, .., y_4, t) = 0` over `F_p`, found by direct scan.
/// When the substituted polynomial vanishes identically every `t` is a root;
/// a handful of representatives is returned for the caller to choose from.
fn last_coordinate_roots(dual: &DualCubic, partial: &[u64], p: u64) -> Vec<u64> {
    // Collect coefficients of t^0..t^3 by substituting the fixed coordinates.
    let mut coeffs = [0u64; 4];
    for (m, c) in dual.poly().terms() {
        let FieldElement::Prime { value, .. } = c else {
            unreachable!()
        };
        let mut v = *value;
        for (i, &y) in partial.iter().enumerate() {
            for _ in 0..m.exponent(i) {
                v = v * (y % p) % p;
            }
        }
        let e = m.exponent(SYSTEM_SIZE - 1) as usize;
        coeffs[e] = (coeffs[e] + v) % p;
    }
    if coeffs.iter().all(|&c| c == 0) {
        // Identically zero in t: the whole line lies on the cubic.
        return (0..p.min(4)).collect();
    }
    let mut roots = Vec::new();
    for t in 0..p {
        // Horner evaluation.
        let mut acc = coeffs[3];
        for k in (0..3).rev() {
            acc = (acc * t + coeffs[k]) % p;
        }
        if acc == 0 {
            roots.push(t);
        }
    }
    roots
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InterpolateError {
    #[error("no quartic vanishes on all the points")]
    KernelEmpty,
    #[error("the space of quartics through the points has dimension {0}")]
    KernelTooBig(usize),
    #[error("no points given")]
    NoPoints,
}

/// The unique monic quartic through the given points of P^5, when the
/// evaluation matrix of the 126 degree-4 monomials has a one-dimensional
/// kernel. Needs at least 125 independent point conditions, so 130+ points
/// in practice.
pub fn interpolate_quartic(
    field: Field,
    points: &[Vec<FieldElement>],
) -> Result<Polynomial, InterpolateError> {
    if points.is_empty() {
        return Err(InterpolateError::NoPoints);
    }
    let basis = monomial_basis(MATRIX_SIZE, 4);
    let rows: Vec<Vec<FieldElement>> = points
        .iter()
        .map(|pt| {
            assert_eq!(pt.len(), MATRIX_SIZE);
            // Power table: powers[i][e] = pt[i]^e for e <= 4.
            let powers: Vec<[FieldElement; 5]> = pt
                .iter()
                .map(|x| {
                    let mut row = [
                        field.one(),
                        x.clone(),
                        field.zero(),
                        field.zero(),
                        field.zero(),
                    ];
                    for e in 2..5 {
                        row[e] = field.mul(&row[e - 1], x);
                    }
                    row
                })
                .collect();
            basis
                .iter()
                .map(|m| {
                    let mut acc = field.one();
                    for (i, &e) in m.exponents().iter().enumerate() {
                        if e > 0 {
                            acc = field.mul(&acc, &powers[i][e as usize]);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect();
    let kernel = linalg::kernel(field, basis.len(), &rows);
    match kernel.len() {
        0 => Err(InterpolateError::KernelEmpty),
        1 => {
            let coeffs = &kernel[0];
            let poly = Polynomial::from_terms(
                field,
                MATRIX_SIZE,
                basis
                    .iter()
                    .cloned()
                    .zip(coeffs.iter().cloned())
                    .filter(|(_, c)| !c.is_zero()),
            );
            Ok(poly.monic())
        }
        d => Err(InterpolateError::KernelTooBig(d)),
    }
}
