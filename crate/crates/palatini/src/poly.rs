//! Sparse multivariate polynomials over an exact coefficient field.
//!
//! Terms are kept in a `BTreeMap` ordered by grevlex, so iteration order,
//! leading terms and the serialized form are all deterministic. No zero
//! coefficient is ever stored.
//!
//! The `+`, `-`, `*` operators on references panic when the operands live in
//! different fields or variable counts; the `checked_*` methods return the
//! mismatch as an error instead.

use crate::field::{Field, FieldElement, FieldError};
use crate::monomial::Monomial;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("variable counts differ: {0} vs {1}")]
    VariableCountMismatch(usize, usize),
    #[error("variable index {index} out of range for {nvars} variables")]
    IndexOutOfRange { index: usize, nvars: usize },
    #[error("evaluation point has length {got}, expected {want}")]
    PointLength { got: usize, want: usize },
}

/// A sparse polynomial with exact coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    field: Field,
    nvars: usize,
    terms: BTreeMap<Monomial, FieldElement>,
}

impl Polynomial {
    pub fn zero(field: Field, nvars: usize) -> Self {
        Polynomial {
            field,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: Field, nvars: usize, c: FieldElement) -> Self {
        let mut p = Self::zero(field, nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn one(field: Field, nvars: usize) -> Self {
        Self::constant(field, nvars, field.one())
    }

    /// The coordinate `X_i`.
    pub fn variable(field: Field, nvars: usize, i: usize) -> Self {
        let mut p = Self::zero(field, nvars);
        p.add_term(Monomial::variable(nvars, i), field.one());
        p
    }

    /// Build from `(integer coefficient, exponent vector)` pairs.
    pub fn from_integer_terms(field: Field, nvars: usize, terms: &[(i64, &[u16])]) -> Self {
        let mut p = Self::zero(field, nvars);
        for (c, exps) in terms {
            assert_eq!(exps.len(), nvars);
            p.add_term(Monomial::new(exps.to_vec()), field.from_i64(*c));
        }
        p
    }

    pub fn from_terms(
        field: Field,
        nvars: usize,
        terms: impl IntoIterator<Item = (Monomial, FieldElement)>,
    ) -> Self {
        let mut p = Self::zero(field, nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars);
            assert!(field.contains(&c));
            p.add_term(m, c);
        }
        p
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending grevlex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &FieldElement)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&FieldElement> {
        self.terms.get(m)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// True when all terms share one degree. The zero polynomial is
    /// homogeneous of every degree.
    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    pub fn is_homogeneous_of_degree(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    /// Largest monomial in grevlex, with its coefficient.
    pub fn leading_term(&self) -> Option<(&Monomial, &FieldElement)> {
        self.terms.iter().next_back()
    }

    fn add_term(&mut self, m: Monomial, c: FieldElement) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = self.field.add(e.get(), &c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn compatible(&self, other: &Self) -> Result<(), PolyError> {
        if self.field != other.field {
            return Err(FieldError::Mismatch(self.field, other.field).into());
        }
        if self.nvars != other.nvars {
            return Err(PolyError::VariableCountMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), self.field.neg(c));
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.compatible(other)?;
        let mut out = Self::zero(self.field, self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), self.field.mul(ca, cb));
            }
        }
        Ok(out)
    }

    pub fn negated(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = self.field.neg(c);
        }
        out
    }

    pub fn scaled(&self, s: &FieldElement) -> Self {
        assert!(self.field.contains(s));
        if s.is_zero() {
            return Self::zero(self.field, self.nvars);
        }
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = self.field.mul(c, s);
        }
        out
    }

    /// Multiply by the coordinate `X_i`.
    pub fn mul_variable(&self, i: usize) -> Self {
        assert!(i < self.nvars);
        let mut out = Self::zero(self.field, self.nvars);
        for (m, c) in &self.terms {
            out.terms.insert(m.mul_variable(i), c.clone());
        }
        out
    }

    /// Exact division by `X_i`; `None` unless every term is divisible.
    pub fn div_variable(&self, i: usize) -> Option<Self> {
        assert!(i < self.nvars);
        let mut out = Self::zero(self.field, self.nvars);
        for (m, c) in &self.terms {
            out.terms.insert(m.div_variable(i)?, c.clone());
        }
        Some(out)
    }

    /// Formal partial derivative with respect to `X_i`.
    pub fn partial_derivative(&self, i: usize) -> Result<Self, PolyError> {
        if i >= self.nvars {
            return Err(PolyError::IndexOutOfRange {
                index: i,
                nvars: self.nvars,
            });
        }
        let mut out = Self::zero(self.field, self.nvars);
        for (m, c) in &self.terms {
            if let Some((dm, e)) = m.derivative(i) {
                out.add_term(dm, self.field.mul(c, &self.field.from_i64(e as i64)));
            }
        }
        Ok(out)
    }

    pub fn evaluate(&self, point: &[FieldElement]) -> Result<FieldElement, PolyError> {
        if point.len() != self.nvars {
            return Err(PolyError::PointLength {
                got: point.len(),
                want: self.nvars,
            });
        }
        for v in point {
            if !self.field.contains(v) {
                return Err(FieldError::Mismatch(self.field, v.field()).into());
            }
        }
        let mut acc = self.field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    t = self.field.mul(&t, &point[i]);
                }
            }
            acc = self.field.add(&acc, &t);
        }
        Ok(acc)
    }

    /// Scale so the grevlex-leading coefficient is 1. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = self.field.inv(c).expect("leading coefficient is nonzero");
                self.scaled(&inv)
            }
        }
    }

    /// Image under coefficient-wise reduction modulo `p`.
    pub fn reduce_mod(&self, p: u64) -> Result<Self, FieldError> {
        let field = Field::prime(p)?;
        let mut out = Self::zero(field, self.nvars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.reduce_mod(p)?);
        }
        Ok(out)
    }

    /// Render with custom variable names (e.g. `u1..u5` for dual coordinates).
    pub fn to_string_with_vars(&self, names: &[&str]) -> String {
        assert_eq!(names.len(), self.nvars);
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (m, c) in self.terms() {
            let mono = if m.is_constant() {
                "1".to_string()
            } else {
                m.exponents()
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| {
                        if e == 1 {
                            names[i].to_string()
                        } else {
                            format!("{}^{}", names[i], e)
                        }
                    })
                    .collect::<Vec<_>>()
                    .join("*")
            };
            parts.push(format!("{c} {mono}"));
        }
        parts.join(" ")
    }
}

/// Serialized form: terms as `coeff monomial` pairs, descending grevlex,
/// e.g. `1 X1*X2*X3*X4 -1 X0*X3*X4*X5`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms() {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "{c} {m}")?;
        }
        Ok(())
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs)
                    .expect("polynomial operands are incompatible")
            }
        }
    };
}
impl_binop!(Add, add, checked_add);
impl_binop!(Sub, sub, checked_sub);
impl_binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.negated()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::rational()
    }

    /// W_M = X1*X2*X3*X4 - X0*X3*X4*X5, the degenerate reference quartic.
    pub(crate) fn wm(field: Field) -> Polynomial {
        Polynomial::from_integer_terms(
            field,
            6,
            &[(1, &[0, 1, 1, 1, 1, 0]), (-1, &[1, 0, 0, 1, 1, 1])],
        )
    }

    #[test]
    fn monomial_product() {
        let x1x2 = Polynomial::from_integer_terms(q(), 6, &[(1, &[0, 1, 1, 0, 0, 0])]);
        let x3x4 = Polynomial::from_integer_terms(q(), 6, &[(1, &[0, 0, 0, 1, 1, 0])]);
        let expect = Polynomial::from_integer_terms(q(), 6, &[(1, &[0, 1, 1, 1, 1, 0])]);
        assert_eq!(&x1x2 * &x3x4, expect);
    }

    #[test]
    fn subtraction_cancels() {
        let f = Polynomial::from_integer_terms(
            q(),
            6,
            &[(1, &[4, 0, 0, 0, 0, 0]), (3, &[0, 1, 3, 0, 0, 0])],
        );
        assert!((&f - &f).is_zero());
    }

    #[test]
    fn product_with_binomial() {
        // (X1*X2 - X0*X5) * (X3*X4) = X1*X2*X3*X4 - X0*X3*X4*X5
        let a = Polynomial::from_integer_terms(
            q(),
            6,
            &[(1, &[0, 1, 1, 0, 0, 0]), (-1, &[1, 0, 0, 0, 0, 1])],
        );
        let b = Polynomial::from_integer_terms(q(), 6, &[(1, &[0, 0, 0, 1, 1, 0])]);
        assert_eq!(&a * &b, wm(q()));
    }

    #[test]
    fn field_mismatch_is_an_error() {
        let a = Polynomial::one(q(), 6);
        let b = Polynomial::one(Field::prime(7).unwrap(), 6);
        assert!(matches!(
            a.checked_add(&b),
            Err(PolyError::Field(FieldError::Mismatch(_, _)))
        ));
        let c = Polynomial::one(q(), 5);
        assert!(matches!(
            a.checked_mul(&c),
            Err(PolyError::VariableCountMismatch(6, 5))
        ));
    }

    #[test]
    fn partial_derivatives_of_reference_quartic() {
        let w = wm(q());
        // d/dX0 = -X3*X4*X5 (direct differentiation)
        let d0 = w.partial_derivative(0).unwrap();
        assert_eq!(
            d0,
            Polynomial::from_integer_terms(q(), 6, &[(-1, &[0, 0, 0, 1, 1, 1])])
        );
        // d/dX3 = X4*(X1*X2 - X0*X5)
        let d3 = w.partial_derivative(3).unwrap();
        let expect = Polynomial::from_integer_terms(
            q(),
            6,
            &[(1, &[0, 1, 1, 0, 1, 0]), (-1, &[1, 0, 0, 0, 1, 1])],
        );
        assert_eq!(d3, expect);
        // power rule
        let x0sq = Polynomial::from_integer_terms(q(), 6, &[(1, &[2, 0, 0, 0, 0, 0])]);
        let two_x0 = Polynomial::from_integer_terms(q(), 6, &[(2, &[1, 0, 0, 0, 0, 0])]);
        assert_eq!(x0sq.partial_derivative(0).unwrap(), two_x0);
        assert!(matches!(
            w.partial_derivative(6),
            Err(PolyError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn evaluation_points_of_reference_quartic() {
        let w = wm(q());
        let ones: Vec<_> = (0..6).map(|_| q().one()).collect();
        assert!(w.evaluate(&ones).unwrap().is_zero());
        let pt: Vec<_> = [0i64, 1, 1, 1, 1, 0]
            .iter()
            .map(|&n| q().from_i64(n))
            .collect();
        assert_eq!(w.evaluate(&pt).unwrap(), q().one());
        let origin: Vec<_> = (0..6).map(|_| q().zero()).collect();
        assert!(w.evaluate(&origin).unwrap().is_zero());
        assert!(matches!(
            w.evaluate(&ones[..4]),
            Err(PolyError::PointLength { .. })
        ));
    }

    #[test]
    fn homogeneity_and_degree() {
        let w = wm(q());
        assert!(w.is_homogeneous());
        assert!(w.is_homogeneous_of_degree(4));
        assert_eq!(w.degree(), Some(4));
        let zero = Polynomial::zero(q(), 6);
        assert!(zero.is_homogeneous());
        assert!(zero.is_homogeneous_of_degree(0) && zero.is_homogeneous_of_degree(7));
        assert_eq!(zero.degree(), None);
        let mixed = Polynomial::from_integer_terms(
            q(),
            6,
            &[(1, &[1, 0, 0, 0, 0, 0]), (1, &[0, 0, 0, 0, 0, 2])],
        );
        assert!(!mixed.is_homogeneous());
    }

    #[test]
    fn monic_normalization_divides_by_leading_coefficient() {
        let f = Polynomial::from_integer_terms(
            q(),
            6,
            &[(-3, &[0, 1, 1, 1, 1, 0]), (3, &[1, 0, 0, 1, 1, 1])],
        );
        assert_eq!(f.monic(), wm(q()).monic());
        assert_eq!(wm(q()).monic(), wm(q()));
    }

    #[test]
    fn exact_division_by_variable() {
        let w = wm(q());
        let x0w = w.mul_variable(0);
        assert_eq!(x0w.div_variable(0).unwrap(), w);
        assert_eq!(w.div_variable(0), None); // X1*X2*X3*X4 has no X0
    }

    #[test]
    fn serialization_matches_term_list_format() {
        assert_eq!(wm(q()).to_string(), "1 X1*X2*X3*X4 -1 X0*X3*X4*X5");
        assert_eq!(Polynomial::zero(q(), 6).to_string(), "0");
        let c = Polynomial::from_integer_terms(q(), 6, &[(5, &[0; 6])]);
        assert_eq!(c.to_string(), "5 1");
    }

    #[test]
    fn reduction_mod_p_matches_field_reduction() {
        let f = Polynomial::from_integer_terms(
            q(),
            6,
            &[(7, &[1, 0, 0, 0, 0, 0]), (1, &[0, 0, 0, 0, 0, 1])],
        );
        let r = f.reduce_mod(7).unwrap();
        assert_eq!(r.num_terms(), 1); // the 7*X0 term dies mod 7
        assert_eq!(r, Polynomial::variable(Field::prime(7).unwrap(), 6, 5));
    }
}
