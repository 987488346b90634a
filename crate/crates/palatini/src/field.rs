//! Exact coefficient fields: arbitrary-precision rationals and prime fields.
//!
//! Every scalar in this crate is a [`FieldElement`] belonging to a [`Field`],
//! either `Q` (reduced arbitrary-precision fractions) or `F_p` for a prime
//! modulus `p < 2^31`. Elements of different fields never combine; the checked
//! entry points return [`FieldError::Mismatch`] instead of coercing.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

/// Largest admissible prime modulus. Keeps `(p-1)^2` inside `u64`.
pub const MAX_MODULUS: u64 = 1 << 31;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} exceeds the 2^31 limit")]
    ModulusTooLarge(u64),
    #[error("cannot combine elements of {0} and {1}")]
    Mismatch(Field, Field),
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes modulo {0}")]
    BadReduction(u64),
}

/// A field descriptor: `Q` or `F_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl Field {
    /// The rationals.
    pub fn rational() -> Self {
        Field::Rational
    }

    /// The prime field `F_p`. Primality is checked by trial division.
    pub fn prime(p: u64) -> Result<Self, FieldError> {
        if p >= MAX_MODULUS {
            return Err(FieldError::ModulusTooLarge(p));
        }
        if !is_prime_u64(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(&self) -> FieldElement {
        match self {
            Field::Rational => FieldElement::Rational(BigRational::zero()),
            Field::Prime(p) => FieldElement::Prime {
                value: 0,
                modulus: *p,
            },
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> FieldElement {
        match self {
            Field::Rational => FieldElement::Rational(BigRational::from(BigInt::from(n))),
            Field::Prime(p) => {
                let p = *p as i128;
                let r = ((n as i128 % p) + p) % p;
                FieldElement::Prime {
                    value: r as u64,
                    modulus: p as u64,
                }
            }
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> FieldElement {
        match self {
            Field::Rational => FieldElement::Rational(BigRational::from(n.clone())),
            Field::Prime(p) => {
                let m = BigInt::from(*p);
                let mut r = n % &m;
                if r.is_negative() {
                    r += &m;
                }
                FieldElement::Prime {
                    value: r.to_u64().unwrap(),
                    modulus: *p,
                }
            }
        }
    }

    pub fn contains(&self, a: &FieldElement) -> bool {
        *self == a.field()
    }

    fn expect_member(&self, a: &FieldElement) {
        assert!(
            self.contains(a),
            "element of {} used in {}",
            a.field(),
            self
        );
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.expect_member(a);
        self.expect_member(b);
        match (a, b) {
            (FieldElement::Rational(x), FieldElement::Rational(y)) => FieldElement::Rational(x + y),
            (
                FieldElement::Prime {
                    value: x,
                    modulus: p,
                },
                FieldElement::Prime { value: y, .. },
            ) => {
                let s = x + y;
                FieldElement::Prime {
                    value: if s >= *p { s - p } else { s },
                    modulus: *p,
                }
            }
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        self.expect_member(a);
        match a {
            FieldElement::Rational(x) => FieldElement::Rational(-x),
            FieldElement::Prime { value, modulus } => FieldElement::Prime {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.expect_member(a);
        self.expect_member(b);
        match (a, b) {
            (FieldElement::Rational(x), FieldElement::Rational(y)) => FieldElement::Rational(x * y),
            (
                FieldElement::Prime {
                    value: x,
                    modulus: p,
                },
                FieldElement::Prime { value: y, .. },
            ) => FieldElement::Prime {
                value: x * y % p,
                modulus: *p,
            },
            _ => unreachable!(),
        }
    }

    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement, FieldError> {
        self.expect_member(a);
        if a.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(match a {
            FieldElement::Rational(x) => FieldElement::Rational(x.recip()),
            FieldElement::Prime { value, modulus } => FieldElement::Prime {
                value: mod_inverse(*value, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn div(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement, FieldError> {
        Ok(self.mul(a, &self.inv(b)?))
    }
}

/// Inverse of `a` modulo the prime `p`, `0 < a < p`.
fn mod_inverse(a: u64, p: u64) -> u64 {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "{a} not invertible mod {p}");
    (((t % p as i128) + p as i128) % p as i128) as u64
}

/// An exact scalar: a reduced rational or a residue modulo a prime.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Rational(BigRational),
    Prime { value: u64, modulus: u64 },
}

impl FieldElement {
    pub fn field(&self) -> Field {
        match self {
            FieldElement::Rational(_) => Field::Rational,
            FieldElement::Prime { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(x) => x.is_zero(),
            FieldElement::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Rational(x) => x.is_one(),
            FieldElement::Prime { value, .. } => *value == 1,
        }
    }

    fn same_field(&self, other: &Self) -> Result<Field, FieldError> {
        let f = self.field();
        if f != other.field() {
            return Err(FieldError::Mismatch(f, other.field()));
        }
        Ok(f)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, FieldError> {
        Ok(self.same_field(other)?.add(self, other))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, FieldError> {
        Ok(self.same_field(other)?.sub(self, other))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, FieldError> {
        Ok(self.same_field(other)?.mul(self, other))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_field(other)?.div(self, other)
    }

    /// Image of a rational element in `F_p`; prime elements must already
    /// live modulo `p`. Fails when the reduced denominator is divisible by `p`.
    pub fn reduce_mod(&self, p: u64) -> Result<FieldElement, FieldError> {
        let target = Field::prime(p)?;
        match self {
            FieldElement::Prime { modulus, .. } => {
                if *modulus == p {
                    Ok(self.clone())
                } else {
                    Err(FieldError::Mismatch(self.field(), target))
                }
            }
            FieldElement::Rational(x) => {
                let den = target.from_bigint(x.denom());
                if den.is_zero() {
                    return Err(FieldError::BadReduction(p));
                }
                target.div(&target.from_bigint(x.numer()), &den)
            }
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(x) => write!(f, "{x}"),
            FieldElement::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_checked_at_construction() {
        assert!(Field::prime(2).is_ok());
        assert!(Field::prime(32003).is_ok());
        assert!(Field::prime(31991).is_ok());
        assert_eq!(Field::prime(4), Err(FieldError::NotPrime(4)));
        assert_eq!(Field::prime(1), Err(FieldError::NotPrime(1)));
        assert_eq!(Field::prime(32001), Err(FieldError::NotPrime(32001))); // 3 * 10667
        assert!(matches!(
            Field::prime(1 << 32),
            Err(FieldError::ModulusTooLarge(_))
        ));
    }

    #[test]
    fn rational_arithmetic_is_reduced() {
        let q = Field::rational();
        let half = q.div(&q.from_i64(1), &q.from_i64(2)).unwrap();
        let third = q.div(&q.from_i64(1), &q.from_i64(3)).unwrap();
        let sum = q.add(&half, &third);
        assert_eq!(sum.to_string(), "5/6");
        assert_eq!(q.sub(&sum, &sum), q.zero());
    }

    #[test]
    fn prime_field_arithmetic_wraps() {
        let f = Field::prime(7).unwrap();
        assert_eq!(f.from_i64(-1), f.from_i64(6));
        assert_eq!(f.add(&f.from_i64(5), &f.from_i64(4)), f.from_i64(2));
        assert_eq!(f.mul(&f.from_i64(3), &f.from_i64(5)), f.one());
        assert_eq!(f.inv(&f.from_i64(3)).unwrap(), f.from_i64(5));
    }

    #[test]
    fn inverses_over_large_prime() {
        let f = Field::prime(32003).unwrap();
        for n in [1i64, 2, 17, 31999, 4096] {
            let a = f.from_i64(n);
            let inv = f.inv(&a).unwrap();
            assert!(f.mul(&a, &inv).is_one());
        }
        assert_eq!(f.inv(&f.zero()), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn mixed_fields_refuse_to_combine() {
        let a = Field::rational().one();
        let b = Field::prime(5).unwrap().one();
        assert!(matches!(a.checked_add(&b), Err(FieldError::Mismatch(_, _))));
        let c = Field::prime(7).unwrap().one();
        assert!(matches!(b.checked_mul(&c), Err(FieldError::Mismatch(_, _))));
    }

    #[test]
    fn reduction_mod_prime() {
        let q = Field::rational();
        let x = q.div(&q.from_i64(-3), &q.from_i64(2)).unwrap();
        let f = Field::prime(7).unwrap();
        // -3/2 = 4 * inv(2) = 4 * 4 = 16 = 2 mod 7
        assert_eq!(x.reduce_mod(7).unwrap(), f.from_i64(2));
        let bad = q.div(&q.from_i64(1), &q.from_i64(7)).unwrap();
        assert_eq!(bad.reduce_mod(7), Err(FieldError::BadReduction(7)));
    }
}
