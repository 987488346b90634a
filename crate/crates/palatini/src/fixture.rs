//! The classical degenerate reference example: five sparse skew matrices
//! whose quartic is the reducible hypersurface
//! `W_M = X1*X2*X3*X4 - X0*X3*X4*X5 = X3*X4*(X1*X2 - X0*X5)`.
//!
//! `W_M` is not a generic quartic of this family, but it is the one example
//! where the hessian-commutant computation classically gives dimension 1,
//! so it anchors the reconstruction checks.

use crate::field::Field;
use crate::poly::Polynomial;
use crate::quartic::PalatiniQuartic;
use crate::skew::SkewSystem;

/// The five reference matrices: `M1` couples coordinates (0,1), `M2`
/// couples (0,5) negatively and (1,2) positively, `M3..M5` couple the
/// consecutive pairs (2,3), (3,4), (4,5).
pub const FIXTURE_MATRICES: [[[i64; 6]; 6]; 5] = [
    [
        [0, 1, 0, 0, 0, 0],
        [-1, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [0, 0, 0, 0, 0, -1],
        [0, 0, 1, 0, 0, 0],
        [0, -1, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [1, 0, 0, 0, 0, 0],
    ],
    [
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 0],
        [0, 0, -1, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, 0],
        [0, 0, 0, -1, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, -1, 0],
    ],
];

/// The reference system over the given field.
pub fn fixture_system(field: Field) -> SkewSystem {
    SkewSystem::from_integer_matrices(field, &FIXTURE_MATRICES)
        .expect("the reference matrices are skew and independent")
}

/// `W_M = X1*X2*X3*X4 - X0*X3*X4*X5`, already monic in grevlex.
pub fn fixture_quartic(field: Field) -> Polynomial {
    Polynomial::from_integer_terms(
        field,
        6,
        &[(1, &[0, 1, 1, 1, 1, 0]), (-1, &[1, 0, 0, 1, 1, 1])],
    )
}

/// The reference system together with its extracted quartic.
pub fn fixture(field: Field) -> (SkewSystem, PalatiniQuartic) {
    let sys = fixture_system(field);
    let quartic = sys
        .quartic()
        .expect("the reference system has a nonzero quartic");
    (sys, quartic)
}

/// Hand-differentiated gradient of `W_M`, frozen as expected values:
/// `(-X3*X4*X5, X2*X3*X4, X1*X3*X4, X4*(X1*X2 - X0*X5), X3*(X1*X2 - X0*X5),
/// -X0*X3*X4)`.
///
/// Classical tabulations of this gradient print the first entry with the
/// opposite sign; comparisons against such tables must allow a per-entry
/// nonzero scale.
pub fn fixture_partials(field: Field) -> [Polynomial; 6] {
    let t = |terms: &[(i64, &[u16])]| Polynomial::from_integer_terms(field, 6, terms);
    [
        t(&[(-1, &[0, 0, 0, 1, 1, 1])]),
        t(&[(1, &[0, 0, 1, 1, 1, 0])]),
        t(&[(1, &[0, 1, 0, 1, 1, 0])]),
        t(&[(1, &[0, 1, 1, 0, 1, 0]), (-1, &[1, 0, 0, 0, 1, 1])]),
        t(&[(1, &[0, 1, 1, 1, 0, 0]), (-1, &[1, 0, 0, 1, 0, 1])]),
        t(&[(-1, &[1, 0, 0, 1, 1, 0])]),
    ]
}

/// Five independent skew matrices supported on the top-left 4x4 block. The
/// contraction matrix has two identically-zero columns, so every maximal
/// minor vanishes: quartic extraction must fail, and the dual pfaffian is
/// identically zero (the pencil has rank at most 4 everywhere).
pub fn degenerate_system(field: Field) -> SkewSystem {
    let mut mats = [[[0i64; 6]; 6]; 5];
    // Five of the six elementary skew 4x4 supports.
    let supports = [(0usize, 1usize), (0, 2), (0, 3), (1, 2), (1, 3)];
    for (k, (i, j)) in supports.into_iter().enumerate() {
        mats[k][i][j] = 1;
        mats[k][j][i] = -1;
    }
    SkewSystem::from_integer_matrices(field, &mats)
        .expect("block-supported matrices are skew and independent")
}
