//! Acceptance suite: one test per exit criterion. Each test prints a
//! pass/fail line (visible with `--nocapture`) and enforces the stated
//! runtime budget. All comparisons are exact; there are no tolerances to
//! tune anywhere in this suite.

use num_bigint::BigInt;
use palatini::dual::{interpolate_quartic, sample_kernel_line_points};
use palatini::enumerative::{
    chi_o, cotangent_chern, fano_scheme_class, genus_from_hilbert_polynomial, gn_chi_ideal,
    porteous_degrees, twist_chern, CurveInvariants, SchubertExpr,
};
use palatini::field::{Field, FieldElement};
use palatini::fixture;
use palatini::matrix::PolyMatrix;
use palatini::monomial::monomial_basis;
use palatini::profile::{random_system, DEFAULT_MAX_RETRIES, EXPECTED_DIMS};
use palatini::quartic::{reconstruct_from_jacobian, ReconstructError};
use palatini::space::PolySpace;
use palatini::{Polynomial, SkewSystem};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use std::time::{Duration, Instant};

const GENERIC_SEEDS: [u64; 5] = [1, 2, 3, 4, 5];
const PRIMES: [u64; 2] = [32003, 31991];

fn finish(criterion: &str, description: &str, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    println!(
        "acceptance {criterion} ({description}): PASS in {} ms (budget {} ms)",
        elapsed.as_millis(),
        budget.as_millis()
    );
    assert!(
        elapsed <= budget,
        "{criterion} exceeded its runtime budget: {elapsed:?}"
    );
}

#[test]
fn criterion_1_fixture_suite() {
    let started = Instant::now();
    let q = Field::rational();
    let (sys, quartic) = fixture::fixture(q);
    let w = quartic.poly().clone();

    // Exact quartic, monic.
    assert_eq!(w, fixture::fixture_quartic(q));

    // The six signed minors are X_i * W_M up to one global sign.
    let minors = sys.contraction_matrix().signed_maximal_minors().unwrap();
    let mut global: Option<FieldElement> = None;
    for (i, v) in minors.iter().enumerate() {
        let xi_w = w.mul_variable(i);
        let plus = *v == xi_w;
        let minus = *v == xi_w.negated();
        assert!(plus || minus, "minor {i} is not +-X{i} * W");
        let sign = if plus { q.one() } else { q.from_i64(-1) };
        match &global {
            None => global = Some(sign),
            Some(g) => assert_eq!(g, &sign, "minor {i} has a different sign"),
        }
    }

    assert_eq!(quartic.hessian_commutant_dim(), 1);

    let rebuilt = reconstruct_from_jacobian(&quartic.jacobian_space()).unwrap();
    assert_eq!(rebuilt, w);

    finish(
        "criterion 1",
        "fixture suite",
        started,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_2_generic_profile_at_two_primes() {
    let overall = Instant::now();
    for p in PRIMES {
        let field = Field::prime(p).unwrap();
        for seed in GENERIC_SEEDS {
            let per_seed = Instant::now();
            let sys = random_system(seed, field, DEFAULT_MAX_RETRIES).unwrap();
            let profile = sys.singular_profile().unwrap();
            assert_eq!(profile.dims(), EXPECTED_DIMS, "seed {seed} mod {p}");
            assert_eq!(profile.hilbert_function(3), 50, "seed {seed} mod {p}");
            assert_eq!(profile.hilbert_function(4), 75, "seed {seed} mod {p}");
            assert!(
                per_seed.elapsed() <= Duration::from_secs(30),
                "seed {seed} mod {p} exceeded 30 s"
            );
        }
    }
    finish(
        "criterion 2",
        "generic profile (0, 6, 51, 152), seeds 1..5, two primes",
        overall,
        Duration::from_secs(300),
    );
}

#[test]
fn criterion_3_catalecticant_rank() {
    let overall = Instant::now();
    let field = Field::prime(32003).unwrap();
    for seed in GENERIC_SEEDS {
        let per_seed = Instant::now();
        let sys = random_system(seed, field, DEFAULT_MAX_RETRIES).unwrap();
        let quartic = sys.quartic().unwrap();
        assert_eq!(quartic.catalecticant_rank(), 21, "seed {seed}");
        assert!(
            per_seed.elapsed() <= Duration::from_secs(5),
            "seed {seed} exceeded 5 s"
        );
    }
    finish(
        "criterion 3",
        "catalecticant rank 21 on generic seeds",
        overall,
        Duration::from_secs(25),
    );
}

#[test]
fn criterion_4_reconstruction() {
    let started = Instant::now();
    let q = Field::rational();
    let (_, fixture_quartic) = fixture::fixture(q);
    let rebuilt = reconstruct_from_jacobian(&fixture_quartic.jacobian_space()).unwrap();
    assert_eq!(&rebuilt, fixture_quartic.poly());

    let field = Field::prime(32003).unwrap();
    for seed in GENERIC_SEEDS {
        let sys = random_system(seed, field, DEFAULT_MAX_RETRIES).unwrap();
        let quartic = sys.quartic().unwrap();
        let rebuilt = reconstruct_from_jacobian(&quartic.jacobian_space()).unwrap();
        assert_eq!(&rebuilt, quartic.poly(), "seed {seed}");
    }

    // Decoupled cubes: the symmetry constraints decouple and leave a
    // 6-dimensional solution space.
    let cubes: Vec<Polynomial> = (0..6)
        .map(|i| {
            let mut e = [0u16; 6];
            e[i] = 3;
            Polynomial::from_integer_terms(q, 6, &[(1, &e)])
        })
        .collect();
    let space = PolySpace::new(q, 6, 3, cubes).unwrap();
    assert_eq!(
        reconstruct_from_jacobian(&space),
        Err(ReconstructError::NotUnique(6))
    );

    finish(
        "criterion 4",
        "reconstruction round-trips and counterexample",
        started,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_5_cross_route_interpolation() {
    let overall = Instant::now();
    let field = Field::prime(32003).unwrap();
    for seed in [1u64, 2, 3] {
        let per_seed = Instant::now();
        let sys = random_system(seed, field, DEFAULT_MAX_RETRIES).unwrap();
        let quartic = sys.quartic().unwrap();
        let points = sample_kernel_line_points(&sys, seed, 200, Some(quartic.poly())).unwrap();
        assert!(points.len() >= 200);
        let rebuilt = interpolate_quartic(field, &points).unwrap();
        assert_eq!(&rebuilt, quartic.poly(), "seed {seed}");
        assert!(
            per_seed.elapsed() <= Duration::from_secs(30),
            "seed {seed} exceeded 30 s"
        );
    }
    finish(
        "criterion 5",
        "interpolated quartic equals extracted quartic",
        overall,
        Duration::from_secs(90),
    );
}

#[test]
fn criterion_6_enumerative_table() {
    let started = Instant::now();

    let twisted = twist_chern(&cotangent_chern(5), 5, 2);
    for (i, expect) in [1i64, 4, 7, 6].into_iter().enumerate() {
        assert_eq!(twisted.coeff(i), BigInt::from(expect));
    }
    let (deg_w, deg_curve) = porteous_degrees(&twisted);
    assert_eq!(deg_w, BigInt::from(4));
    assert_eq!(deg_curve, BigInt::from(25));

    assert_eq!(
        SchubertExpr::one(4).plucker_degree().unwrap(),
        BigInt::from(2)
    );
    assert_eq!(
        SchubertExpr::one(5).plucker_degree().unwrap(),
        BigInt::from(5)
    );
    assert_eq!(
        SchubertExpr::one(6).plucker_degree().unwrap(),
        BigInt::from(14)
    );

    let (class, degree) = fano_scheme_class();
    assert_eq!(class.coeff(4, 1), BigInt::from(96));
    assert_eq!(class.coeff(3, 2), BigInt::from(320));
    assert_eq!(degree, BigInt::from(736));

    let component = |x: i64, y: i64| {
        SchubertExpr::class(6, 3, 2)
            .scale(&x.into())
            .add(&SchubertExpr::class(6, 4, 1).scale(&y.into()))
            .plucker_degree()
            .unwrap()
    };
    assert_eq!(component(5, 4), BigInt::from(14));
    assert_eq!(component(10, 4), BigInt::from(24));
    assert_eq!(component(45, 0), BigInt::from(90));

    let gamma = CurveInvariants {
        degree: 25,
        genus: 26,
        ambient_dim: 5,
    };
    assert_eq!(gamma.chi_normal_bundle(), 100);
    assert_eq!(genus_from_hilbert_polynomial(-25), 26);

    finish(
        "criterion 6",
        "enumerative invariant table",
        started,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_7_resolution_chi_validation() {
    let started = Instant::now();
    for k in -2i64..=12 {
        let value = gn_chi_ideal(k);
        assert_eq!(value, chi_o(k, 5) - BigInt::from(25 * k - 25), "k = {k}");
    }
    assert_eq!(gn_chi_ideal(3), BigInt::from(6));
    assert_eq!(gn_chi_ideal(4), BigInt::from(51));
    finish(
        "criterion 7",
        "resolution chi equals Hilbert arithmetic on [-2, 12]",
        started,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_8_property_suites() {
    let started = Instant::now();
    let field = Field::prime(32003).unwrap();
    let mut cases = 0usize;

    // Euler identity on 400 random quartics.
    let mut rng = ChaCha12Rng::seed_from_u64(801);
    let basis = monomial_basis(6, 4);
    for _ in 0..400 {
        let f = random_homogeneous(field, &basis, &mut rng);
        let mut acc = Polynomial::zero(field, 6);
        for i in 0..6 {
            acc = &acc + &f.partial_derivative(i).unwrap().mul_variable(i);
        }
        assert_eq!(acc, f.scaled(&field.from_i64(4)), "Euler identity");
        cases += 1;
    }

    // pf^2 = det on 100 random skew matrices of each size 2, 4, 6.
    let mut rng = ChaCha12Rng::seed_from_u64(802);
    for size in [2usize, 4, 6] {
        for _ in 0..100 {
            let m = random_skew(field, size, &mut rng);
            let pm = PolyMatrix::from_scalars(field, 1, &m);
            let pf = pm.pfaffian().unwrap();
            assert_eq!(
                &pf * &pf,
                pm.determinant().unwrap(),
                "pf^2 = det at size {size}"
            );
            cases += 1;
        }
    }

    // Contraction and minor identities on 200 random systems.
    let mut rng = ChaCha12Rng::seed_from_u64(803);
    let x: Vec<Polynomial> = (0..6).map(|i| Polynomial::variable(field, 6, i)).collect();
    for _ in 0..200 {
        let sys = SkewSystem::draw(field, &mut rng).unwrap();
        let a = sys.contraction_matrix();
        for e in a.mul_vector(&x) {
            assert!(e.is_zero(), "A X != 0");
        }
        let v = a.signed_maximal_minors().unwrap();
        for i in 0..6 {
            for j in i + 1..6 {
                assert_eq!(v[i].mul_variable(j), v[j].mul_variable(i), "cross identity");
            }
        }
        cases += 1;
    }

    // Basis recombination leaves the monic quartic unchanged: 100 cases.
    let mut rng = ChaCha12Rng::seed_from_u64(804);
    let mut done = 0;
    while done < 100 {
        let sys = SkewSystem::draw(field, &mut rng).unwrap();
        let coeffs: Vec<Vec<FieldElement>> = (0..5)
            .map(|_| {
                (0..5)
                    .map(|_| field.from_i64(rng.random_range(0..32003)))
                    .collect()
            })
            .collect();
        let Ok(recombined) = sys.recombine(&coeffs) else {
            continue;
        };
        let (Ok(a), Ok(b)) = (sys.quartic(), recombined.quartic()) else {
            continue;
        };
        assert_eq!(a.poly(), b.poly(), "recombination changed the quartic");
        done += 1;
        cases += 1;
    }

    assert!(cases >= 1000, "only {cases} randomized cases ran");

    // Deterministic byte-identical CLI reruns.
    for args in [
        ["fixture", "--no-timings", "--json"].as_slice(),
        ["random", "--seed", "9", "--count", "1", "--no-timings"].as_slice(),
    ] {
        let run = || {
            std::process::Command::new(env!("CARGO_BIN_EXE_palatini"))
                .args(args)
                .output()
                .expect("binary runs")
        };
        let (a, b) = (run(), run());
        assert!(a.status.success(), "{}", String::from_utf8_lossy(&a.stdout));
        assert_eq!(a.stdout, b.stdout, "CLI reruns differ for {args:?}");
    }

    finish(
        "criterion 8",
        &format!("{cases} randomized cases and CLI determinism"),
        started,
        Duration::from_secs(60),
    );
}

fn random_homogeneous(
    field: Field,
    basis: &[palatini::Monomial],
    rng: &mut ChaCha12Rng,
) -> Polynomial {
    let terms: Vec<(palatini::Monomial, FieldElement)> = (0..rng.random_range(1..10))
        .map(|_| {
            let m = basis[rng.random_range(0..basis.len())].clone();
            (m, field.from_i64(rng.random_range(0..32003)))
        })
        .collect();
    Polynomial::from_terms(field, 6, terms)
}

fn random_skew(field: Field, size: usize, rng: &mut ChaCha12Rng) -> Vec<Vec<FieldElement>> {
    let mut m = vec![vec![field.zero(); size]; size];
    for i in 0..size {
        for j in i + 1..size {
            let e = field.from_i64(rng.random_range(0..32003));
            m[j][i] = field.neg(&e);
            m[i][j] = e;
        }
    }
    m
}
