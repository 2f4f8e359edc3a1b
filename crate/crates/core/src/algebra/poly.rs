//! Dense univariate polynomials with cyclotomic coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::cyclo::{rational_string, CycloNumber};
use crate::error::{Error, Result};

/// A polynomial, lowest degree first, with no trailing zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QPoly {
    var: char,
    coeffs: Vec<CycloNumber>,
}

impl QPoly {
    pub fn new(var: char, coeffs: Vec<CycloNumber>) -> Self {
        let mut p = QPoly { var, coeffs };
        p.normalize();
        p
    }

    pub fn zero(var: char) -> Self {
        QPoly { var, coeffs: Vec::new() }
    }

    pub fn one(var: char) -> Self {
        Self::constant(var, CycloNumber::one())
    }

    pub fn constant(var: char, c: CycloNumber) -> Self {
        Self::new(var, vec![c])
    }

    /// c·var^k
    pub fn monomial(var: char, c: CycloNumber, k: usize) -> Self {
        let mut v = vec![CycloNumber::zero(); k + 1];
        v[k] = c;
        Self::new(var, v)
    }

    pub fn from_ints(var: char, coeffs: &[i64]) -> Self {
        Self::new(var, coeffs.iter().map(|&c| CycloNumber::from_int(c)).collect())
    }

    /// [n]_q = 1 + q + … + q^{n−1}.
    pub fn q_number(var: char, n: usize) -> Self {
        Self::new(var, vec![CycloNumber::one(); n])
    }

    /// [n]_q! as a product.
    pub fn q_factorial(var: char, n: usize) -> Self {
        (1..=n).fold(Self::one(var), |acc, k| &acc * &Self::q_number(var, k))
    }

    /// Gaussian binomial [n choose k]_q; zero when k > n.
    pub fn q_binomial(var: char, n: usize, k: usize) -> Self {
        if k > n {
            return Self::zero(var);
        }
        let num = Self::q_factorial(var, n);
        let den = &Self::q_factorial(var, k) * &Self::q_factorial(var, n - k);
        num.div_exact(&den).expect("q-binomial division is exact")
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn var(&self) -> char {
        self.var
    }

    pub fn with_var(mut self, var: char) -> Self {
        self.var = var;
        self
    }

    pub fn coeffs(&self) -> &[CycloNumber] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> CycloNumber {
        self.coeffs.get(k).cloned().unwrap_or_else(CycloNumber::zero)
    }

    pub fn scale(&self, c: &CycloNumber) -> Self {
        Self::new(self.var, self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Multiply by var^k.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![CycloNumber::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Self::new(self.var, v)
    }

    /// Substitute var ↦ var^k.
    pub fn compose_power(&self, k: usize) -> Self {
        assert!(k > 0);
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![CycloNumber::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i * k] = c.clone();
        }
        Self::new(self.var, v)
    }

    /// Substitute var ↦ var + a.
    pub fn translate(&self, a: &CycloNumber) -> Self {
        let lin = Self::new(self.var, vec![a.clone(), CycloNumber::one()]);
        let mut acc = Self::zero(self.var);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Self::constant(self.var, c.clone());
        }
        acc
    }

    pub fn eval(&self, x: &CycloNumber) -> CycloNumber {
        let mut acc = CycloNumber::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.var), |acc, _| &acc * self)
    }

    /// Quotient and remainder by a nonzero divisor.
    pub fn div_rem(&self, d: &QPoly) -> Result<(QPoly, QPoly)> {
        let dd = d.degree().ok_or_else(|| Error::InexactDivision("division by zero polynomial".into()))?;
        let lead_inv = d.coeffs[dd].inv().expect("nonzero leading coefficient");
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Self::zero(self.var), self.clone()));
        }
        let mut q = vec![CycloNumber::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                r[k + j] = &r[k + j] - &(&c * dj);
            }
            q[k] = c;
        }
        Ok((Self::new(self.var, q), Self::new(self.var, r)))
    }

    /// Exact quotient; reports non-divisibility.
    pub fn div_exact(&self, d: &QPoly) -> Result<QPoly> {
        let (q, r) = self.div_rem(d)?;
        if !r.is_zero() {
            return Err(Error::InexactDivision(format!("{self} is not divisible by {d}")));
        }
        Ok(q)
    }

    /// All coefficients as integers, if they are.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs.iter().map(|c| c.to_integer()).collect()
    }

    pub fn to_rationals(&self) -> Option<Vec<BigRational>> {
        self.coeffs.iter().map(|c| c.to_rational()).collect()
    }

    /// Integer coefficients as i64, if they fit.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.to_integers()?.iter().map(|c| c.to_i64()).collect()
    }

    pub fn has_nonnegative_integer_coeffs(&self) -> bool {
        self.to_integers().is_some_and(|v| v.iter().all(|c| *c >= BigInt::zero()))
    }

    pub fn eval_at_one(&self) -> CycloNumber {
        self.eval(&CycloNumber::one())
    }
}

impl std::ops::Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let v = (0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect();
        QPoly::new(self.var, v)
    }
}

impl std::ops::Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let v = (0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect();
        QPoly::new(self.var, v)
    }
}

impl std::ops::Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero(self.var);
        }
        let mut v = vec![CycloNumber::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] = &v[i + j] + &(a * b);
            }
        }
        QPoly::new(self.var, v)
    }
}

impl std::ops::Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly::new(self.var, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let body = match c.to_rational() {
                Some(q) => {
                    let neg = q < BigRational::zero();
                    let a = if neg { -q.clone() } else { q.clone() };
                    let sign = if neg { "-" } else if first { "" } else { "+" };
                    let mag = if a.is_one() && k > 0 { String::new() } else { rational_string(&a) };
                    format!("{sign}{mag}")
                }
                None => format!("{}({c})", if first { "" } else { "+" }),
            };
            write!(f, "{body}")?;
            match k {
                0 => {}
                1 => write!(f, "{}", self.var)?,
                _ => write!(f, "{}^{}", self.var, k)?,
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn q_binomial_small() {
        let b = QPoly::q_binomial('q', 4, 2);
        assert_eq!(b, QPoly::from_ints('q', &[1, 1, 2, 1, 1]));
        assert!(QPoly::q_binomial('q', 2, 3).is_zero());
    }

    #[test]
    fn catalan_a2_by_division() {
        let num = &QPoly::q_number('q', 5) * &QPoly::q_number('q', 6);
        let den = &QPoly::q_number('q', 2) * &QPoly::q_number('q', 3);
        assert_eq!(num.div_exact(&den).unwrap(), QPoly::from_ints('q', &[1, 0, 1, 1, 1, 0, 1]));
    }

    #[test]
    fn inexact_division_reported() {
        let a = QPoly::q_number('q', 3);
        let b = QPoly::q_number('q', 2);
        assert!(a.div_exact(&b).is_err());
    }

    #[test]
    fn translate_by_one() {
        let nar = QPoly::from_ints('t', &[1, 3, 1]);
        assert_eq!(nar.translate(&CycloNumber::one()), QPoly::from_ints('t', &[5, 5, 1]));
    }

    #[test]
    fn display_form() {
        assert_eq!(QPoly::from_ints('q', &[1, 0, -2, 1]).to_string(), "1-2q^2+q^3");
    }

    proptest! {
        #[test]
        fn division_roundtrip(a in prop::collection::vec(-4i64..5, 0..6), b in prop::collection::vec(-4i64..5, 1..4)) {
            let a = QPoly::from_ints('q', &a);
            let b = QPoly::from_ints('q', &b);
            prop_assume!(!b.is_zero());
            let p = &a * &b;
            prop_assert_eq!(p.div_exact(&b).unwrap(), a.clone());
            let (q, r) = a.div_rem(&b).unwrap();
            prop_assert_eq!(&(&q * &b) + &r, a);
        }

        #[test]
        fn translate_inverts(a in prop::collection::vec(-4i64..5, 0..6), c in -3i64..4) {
            let a = QPoly::from_ints('t', &a);
            let c = CycloNumber::from_int(c);
            prop_assert_eq!(a.translate(&c).translate(&-&c), a);
        }
    }
}
