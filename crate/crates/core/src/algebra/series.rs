//! Truncated power series in q whose coefficients are polynomials in a second
//! variable (written u) of bounded degree.

use num_rational::BigRational;

use super::cyclo::CycloNumber;
use super::poly::QPoly;
use crate::error::{Error, Result};

/// Σ_{i<order} Σ_{j≤u_degree} c_{ij} q^i u^j.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QUSeries {
    order: usize,
    u_degree: usize,
    coeffs: Vec<Vec<CycloNumber>>,
}

impl QUSeries {
    pub fn zero(order: usize, u_degree: usize) -> Self {
        QUSeries { order, u_degree, coeffs: vec![vec![CycloNumber::zero(); u_degree + 1]; order] }
    }

    pub fn one(order: usize, u_degree: usize) -> Self {
        let mut s = Self::zero(order, u_degree);
        if order > 0 {
            s.coeffs[0][0] = CycloNumber::one();
        }
        s
    }

    /// Embed a polynomial in q (constant in u).
    pub fn from_q_poly(p: &QPoly, order: usize, u_degree: usize) -> Self {
        let mut s = Self::zero(order, u_degree);
        for (i, c) in p.coeffs().iter().enumerate().take(order) {
            s.coeffs[i][0] = c.clone();
        }
        s
    }

    /// Embed a polynomial in u (constant in q).
    pub fn from_u_poly(p: &QPoly, order: usize, u_degree: usize) -> Result<Self> {
        let mut s = Self::zero(order, u_degree);
        if p.degree().is_some_and(|d| d > u_degree) {
            return Err(Error::Capability(format!("u-degree {} exceeds bound {u_degree}", p.degree().unwrap())));
        }
        if order > 0 {
            for (j, c) in p.coeffs().iter().enumerate() {
                s.coeffs[0][j] = c.clone();
            }
        }
        Ok(s)
    }

    /// c·q^i·u^j
    pub fn monomial(order: usize, u_degree: usize, c: CycloNumber, i: usize, j: usize) -> Self {
        let mut s = Self::zero(order, u_degree);
        if i < order {
            s.coeffs[i][j] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn u_degree(&self) -> usize {
        self.u_degree
    }

    pub fn coeff(&self, i: usize, j: usize) -> &CycloNumber {
        &self.coeffs[i][j]
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::TruncationMismatch(self.order, other.order));
        }
        if self.u_degree != other.u_degree {
            return Err(Error::Capability(format!("u-degree bounds differ: {} vs {}", self.u_degree, other.u_degree)));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
            .collect();
        Ok(QUSeries { order: self.order, u_degree: self.u_degree, coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&CycloNumber::from_int(-1)))
    }

    pub fn scale(&self, c: &CycloNumber) -> Self {
        let coeffs = self.coeffs.iter().map(|row| row.iter().map(|x| x * c).collect()).collect();
        QUSeries { order: self.order, u_degree: self.u_degree, coeffs }
    }

    /// Product truncated at the common order; fails if the u-degree overflows.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.order, self.u_degree);
        for i1 in 0..self.order {
            for j1 in 0..=self.u_degree {
                let a = &self.coeffs[i1][j1];
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..self.order - i1 {
                    for j2 in 0..=self.u_degree {
                        let b = &other.coeffs[i2][j2];
                        if b.is_zero() {
                            continue;
                        }
                        if j1 + j2 > self.u_degree {
                            return Err(Error::Capability("u-degree bound exceeded in product".into()));
                        }
                        out.coeffs[i1 + i2][j1 + j2] = &out.coeffs[i1 + i2][j1 + j2] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse of a series that does not involve u; the q⁰
    /// coefficient must be nonzero.
    pub fn inverse(&self) -> Result<Self> {
        if self.order == 0 {
            return Ok(self.clone());
        }
        if self.coeffs.iter().any(|row| row[1..].iter().any(|c| !c.is_zero())) {
            return Err(Error::Capability("inverse of a series involving u".into()));
        }
        let a0 = self.coeffs[0][0].inv().ok_or(Error::NotInvertible)?;
        let mut x = Self::zero(self.order, self.u_degree);
        x.coeffs[0][0] = a0.clone();
        for i in 1..self.order {
            let mut acc = CycloNumber::zero();
            for k in 1..=i {
                let a = &self.coeffs[k][0];
                let b = &x.coeffs[i - k][0];
                if !a.is_zero() && !b.is_zero() {
                    acc = &acc + &(a * b);
                }
            }
            x.coeffs[i][0] = -(&acc * &a0);
        }
        Ok(x)
    }

    /// Coefficient of u^j as a polynomial in q (of degree < order).
    pub fn u_coefficient(&self, j: usize) -> QPoly {
        QPoly::new('q', self.coeffs.iter().map(|row| row[j].clone()).collect())
    }

    /// Substitute u ↦ c·q^k, giving a series with u-degree 0.
    pub fn substitute_u(&self, c: &CycloNumber, k: usize) -> Self {
        let mut out = Self::zero(self.order, 0);
        for i in 0..self.order {
            for j in 0..=self.u_degree {
                let t = i + j * k;
                if t < self.order && !self.coeffs[i][j].is_zero() {
                    out.coeffs[t][0] = &out.coeffs[t][0] + &(&self.coeffs[i][j] * &c.pow(j as u32));
                }
            }
        }
        out
    }

    /// True when every coefficient at q-degree > `degree` vanishes.
    pub fn tail_vanishes_after(&self, degree: usize) -> bool {
        self.coeffs.iter().skip(degree + 1).all(|row| row.iter().all(|c| c.is_zero()))
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().flatten().all(|c| c.to_integer().is_some())
    }
}

/// Exact weighted average (1/total)·Σ size_i·term_i.
///
/// With `integral` set, every coefficient of the result must be an integer.
pub fn series_sum_over_classes(terms: &[QUSeries], sizes: &[u64], total: u64, integral: bool) -> Result<QUSeries> {
    let first = terms.first().ok_or_else(|| Error::Invalid("no class terms".into()))?;
    if terms.len() != sizes.len() {
        return Err(Error::Invalid("terms and sizes differ in length".into()));
    }
    let mut acc = QUSeries::zero(first.order, first.u_degree);
    for (t, &s) in terms.iter().zip(sizes) {
        acc = acc.add(&t.scale(&CycloNumber::from_int(s as i64)))?;
    }
    let avg = acc.scale(&CycloNumber::from_rational(BigRational::new(1.into(), (total as i64).into())));
    if integral && !avg.is_integral() {
        return Err(Error::NonIntegral("class average has a non-integral coefficient".into()));
    }
    Ok(avg)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn geometric(order: usize, ratio: i64) -> QUSeries {
        // 1/(1 − ratio·q)
        let d = QPoly::from_ints('q', &[1, -ratio]);
        QUSeries::from_q_poly(&d, order, 0).inverse().unwrap()
    }

    #[test]
    fn average_of_two_geometric_series() {
        let s = series_sum_over_classes(&[geometric(8, 1), geometric(8, -1)], &[1, 1], 2, true).unwrap();
        let expect = QUSeries::from_q_poly(&QPoly::from_ints('q', &[1, 0, -1]), 8, 0).inverse().unwrap();
        assert_eq!(s, expect);
    }

    #[test]
    fn single_class_constant_one() {
        let s = series_sum_over_classes(&[QUSeries::one(5, 2)], &[6], 6, true).unwrap();
        assert_eq!(s, QUSeries::one(5, 2));
    }

    #[test]
    fn mismatched_orders_rejected() {
        assert!(QUSeries::one(5, 1).add(&QUSeries::one(6, 1)).is_err());
    }

    #[test]
    fn inverse_round_trip_with_u() {
        let p = QUSeries::one(6, 2)
            .add(&QUSeries::monomial(6, 2, CycloNumber::from_int(3), 1, 1))
            .unwrap()
            .add(&QUSeries::monomial(6, 2, CycloNumber::from_int(-1), 2, 0))
            .unwrap();
        // u-degree grows under inversion, so only check the truncated identity at u-degree 0
        let q_only = p.substitute_u(&CycloNumber::zero(), 1);
        let inv = q_only.inverse().unwrap();
        assert_eq!(q_only.mul(&inv).unwrap(), QUSeries::one(6, 0));
    }
}
