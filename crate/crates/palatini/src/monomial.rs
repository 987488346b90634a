//! Monomials in a fixed number of variables, ordered by graded reverse
//! lexicographic order (grevlex).
//!
//! The comparison used everywhere in this crate: higher total degree is
//! larger; on equal degrees the monomial whose rightmost differing exponent
//! is *smaller* is larger. With six variables this sorts the degree-2
//! monomials as `X0^2 > X0*X1 > X1^2 > X0*X2 > ...`, matching the usual
//! computer-algebra convention, and makes coefficient matrices reproducible.

use std::cmp::Ordering;
use std::fmt;

/// Exponent vector with cached total degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u16>,
    degree: u32,
}

impl Monomial {
    pub fn new(exponents: Vec<u16>) -> Self {
        let degree = exponents.iter().map(|&e| e as u32).sum();
        Monomial { exponents, degree }
    }

    /// The constant monomial 1.
    pub fn one(nvars: usize) -> Self {
        Monomial::new(vec![0; nvars])
    }

    /// The single variable `X_i`.
    pub fn variable(nvars: usize, i: usize) -> Self {
        assert!(
            i < nvars,
            "variable index {i} out of range for {nvars} variables"
        );
        let mut e = vec![0u16; nvars];
        e[i] = 1;
        Monomial::new(e)
    }

    pub fn nvars(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exponents
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.exponents[i]
    }

    pub fn is_constant(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.nvars(), other.nvars());
        Monomial::new(
            self.exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn mul_variable(&self, i: usize) -> Monomial {
        let mut e = self.exponents.clone();
        e[i] += 1;
        Monomial::new(e)
    }

    /// Divide by `X_i`; `None` when the exponent of `X_i` is zero.
    pub fn div_variable(&self, i: usize) -> Option<Monomial> {
        if self.exponents[i] == 0 {
            return None;
        }
        let mut e = self.exponents.clone();
        e[i] -= 1;
        Some(Monomial::new(e))
    }

    /// Formal derivative data for `d/dX_i`: the dropped monomial and the
    /// integer factor, or `None` when the exponent is zero.
    pub fn derivative(&self, i: usize) -> Option<(Monomial, u16)> {
        let e = self.exponents[i];
        if e == 0 {
            return None;
        }
        Some((self.div_variable(i).unwrap(), e))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.nvars(), other.nvars());
        if self.degree != other.degree {
            return self.degree.cmp(&other.degree);
        }
        // Equal degree: scan from the right, the first difference decides.
        // A smaller rightmost exponent means a *larger* monomial.
        for (a, b) in self.exponents.iter().zip(&other.exponents).rev() {
            match a.cmp(b) {
                Ordering::Equal => continue,
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_constant() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "X{i}")?;
            } else {
                write!(f, "X{i}^{e}")?;
            }
        }
        Ok(())
    }
}

/// All monomials of degree `d` in `nvars` variables, largest first in
/// grevlex. Length is `C(d + nvars - 1, nvars - 1)`.
pub fn monomial_basis(nvars: usize, d: u32) -> Vec<Monomial> {
    assert!(nvars > 0);
    let mut out = Vec::new();
    let mut current = vec![0u16; nvars];
    fill_exponents(&mut out, &mut current, 0, d);
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

fn fill_exponents(out: &mut Vec<Monomial>, current: &mut Vec<u16>, var: usize, remaining: u32) {
    if var + 1 == current.len() {
        current[var] = remaining as u16;
        out.push(Monomial::new(current.clone()));
        return;
    }
    for e in 0..=remaining {
        current[var] = e as u16;
        fill_exponents(out, current, var + 1, remaining - e);
    }
    current[var] = 0;
}

/// Binomial coefficient as `usize`; the sizes used here stay small.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_sizes_match_binomials() {
        assert_eq!(monomial_basis(6, 4).len(), 126);
        assert_eq!(monomial_basis(6, 2).len(), 21);
        assert_eq!(monomial_basis(6, 3).len(), 56);
        assert_eq!(monomial_basis(6, 5).len(), 252);
        let unit = monomial_basis(6, 0);
        assert_eq!(unit.len(), 1);
        assert!(unit[0].is_constant());
        for d in 0..=5 {
            assert_eq!(monomial_basis(6, d).len(), binomial(d as usize + 5, 5));
        }
    }

    #[test]
    fn grevlex_order_on_three_variables() {
        let names: Vec<String> = monomial_basis(3, 2).iter().map(|m| m.to_string()).collect();
        assert_eq!(
            names,
            vec!["X0^2", "X0*X1", "X1^2", "X0*X2", "X1*X2", "X2^2"]
        );
    }

    #[test]
    fn basis_is_strictly_decreasing_and_unique() {
        let basis = monomial_basis(6, 3);
        for w in basis.windows(2) {
            assert!(w[0] > w[1]);
        }
    }

    #[test]
    fn degree_tracks_exponent_sum() {
        let m = Monomial::new(vec![1, 0, 2, 0, 0, 1]);
        assert_eq!(m.degree(), 4);
        assert_eq!(m.mul_variable(3).degree(), 5);
        assert_eq!(m.div_variable(2).unwrap().degree(), 3);
        assert_eq!(m.div_variable(1), None);
        let (dm, factor) = m.derivative(2).unwrap();
        assert_eq!(factor, 2);
        assert_eq!(dm.exponent(2), 1);
    }

    #[test]
    fn display_omits_unit_exponents() {
        let m = Monomial::new(vec![0, 1, 1, 1, 1, 0]);
        assert_eq!(m.to_string(), "X1*X2*X3*X4");
        let m = Monomial::new(vec![2, 0, 0, 0, 0, 1]);
        assert_eq!(m.to_string(), "X0^2*X5");
    }
}
