//! Exact arithmetic in cyclotomic fields Q(ζ_N).
//!
//! An element is stored as its residue modulo the cyclotomic polynomial Φ_N,
//! i.e. as φ(N) rational coefficients on the power basis 1, ζ, …, ζ^{φ(N)−1}.
//! Rationals are the case N = 1. Binary operations on elements of different
//! fields move both operands into Q(ζ_lcm) first.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The field Q(ζ_N) together with its defining polynomial.
#[derive(Debug)]
pub struct CycloField {
    conductor: u32,
    /// Monic Φ_N, lowest degree first.
    modulus: Vec<i64>,
}

static RATIONALS: OnceLock<Arc<CycloField>> = OnceLock::new();

impl CycloField {
    pub fn new(conductor: u32) -> Arc<CycloField> {
        assert!(conductor > 0, "conductor must be positive");
        if conductor == 1 {
            return Self::rationals();
        }
        Arc::new(CycloField { conductor, modulus: cyclotomic_polynomial(conductor) })
    }

    /// Q itself.
    pub fn rationals() -> Arc<CycloField> {
        RATIONALS
            .get_or_init(|| Arc::new(CycloField { conductor: 1, modulus: vec![-1, 1] }))
            .clone()
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// φ(N), the dimension over Q.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[i64] {
        &self.modulus
    }
}

/// Integer coefficients of Φ_n, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    let divisors: Vec<u32> = (1..=n).filter(|d| n % d == 0).collect();
    let mut known: Vec<(u32, Vec<i64>)> = Vec::new();
    for &d in &divisors {
        let mut p = vec![0i64; d as usize + 1];
        p[0] = -1;
        p[d as usize] = 1;
        for (e, phi) in &known {
            if d % e == 0 {
                p = divide_monic_int(&p, phi);
            }
        }
        known.push((d, p));
    }
    known.pop().map(|(_, p)| p).unwrap_or_else(|| vec![-1, 1])
}

fn divide_monic_int(p: &[i64], m: &[i64]) -> Vec<i64> {
    let dm = m.len() - 1;
    let mut r = p.to_vec();
    let mut q = vec![0i64; p.len() - dm];
    for i in (dm..p.len()).rev() {
        let c = r[i];
        if c != 0 {
            q[i - dm] = c;
            for j in 0..=dm {
                r[i - dm + j] -= c * m[j];
            }
        }
    }
    debug_assert!(r.iter().all(|&x| x == 0), "cyclotomic division left a remainder");
    q
}

/// An exact element of Q(ζ_N).
#[derive(Clone)]
pub struct CycloNumber {
    field: Arc<CycloField>,
    coeffs: Vec<BigRational>,
}

fn reduce(mut p: Vec<BigRational>, field: &CycloField) -> Vec<BigRational> {
    let phi = field.degree();
    let m = &field.modulus;
    if p.len() > phi {
        for i in (phi..p.len()).rev() {
            if p[i].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut p[i], BigRational::zero());
            for j in 0..phi {
                if m[j] != 0 {
                    let t = &c * BigRational::from_integer(BigInt::from(m[j]));
                    p[i - phi + j] -= t;
                }
            }
        }
        p.truncate(phi);
    }
    p.resize(phi, BigRational::zero());
    p
}

fn lcm(a: u32, b: u32) -> u32 {
    a / a.gcd(&b) * b
}

impl CycloNumber {
    pub fn from_rational(q: BigRational) -> Self {
        CycloNumber { field: CycloField::rationals(), coeffs: vec![q] }
    }

    pub fn from_int(k: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(k)))
    }

    pub fn from_bigint(k: BigInt) -> Self {
        Self::from_rational(BigRational::from_integer(k))
    }

    pub fn from_frac(p: i64, q: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// Element with the given power-basis coefficients, reduced mod Φ_N.
    pub fn from_coeffs(field: &Arc<CycloField>, coeffs: Vec<BigRational>) -> Self {
        CycloNumber { field: field.clone(), coeffs: reduce(coeffs, field) }
    }

    /// ζ_N^k in the field Q(ζ_N).
    pub fn zeta_in(field: &Arc<CycloField>, k: i64) -> Self {
        let n = field.conductor as i64;
        let e = k.rem_euclid(n) as usize;
        let mut p = vec![BigRational::zero(); e + 1];
        p[e] = BigRational::one();
        Self::from_coeffs(field, p)
    }

    /// ζ_n^k, building Q(ζ_n).
    pub fn zeta(n: u32, k: i64) -> Self {
        Self::zeta_in(&CycloField::new(n), k)
    }

    /// 2cos(2πk/n) = ζ_n^k + ζ_n^{−k}.
    pub fn two_cos(n: u32, k: i64) -> Self {
        let f = CycloField::new(n);
        &Self::zeta_in(&f, k) + &Self::zeta_in(&f, -k)
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn conductor(&self) -> u32 {
        self.field.conductor
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// The value as a rational number, if it is one.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational().filter(|q| q.is_integer()).map(|q| q.to_integer())
    }

    pub fn is_rational(&self) -> bool {
        self.to_rational().is_some()
    }

    /// Embed into a field whose conductor is a multiple of ours.
    pub fn lift_to(&self, field: &Arc<CycloField>) -> Self {
        let from = self.field.conductor;
        let to = field.conductor;
        if from == to {
            return self.clone();
        }
        assert!(to % from == 0, "cannot embed Q(ζ_{from}) into Q(ζ_{to})");
        let step = (to / from) as usize;
        let mut p = vec![BigRational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            p[k * step] = c.clone();
        }
        Self::from_coeffs(field, p)
    }

    fn aligned<'a>(
        a: &'a CycloNumber,
        b: &'a CycloNumber,
    ) -> (std::borrow::Cow<'a, CycloNumber>, std::borrow::Cow<'a, CycloNumber>) {
        use std::borrow::Cow;
        let (na, nb) = (a.field.conductor, b.field.conductor);
        if na == nb {
            (Cow::Borrowed(a), Cow::Borrowed(b))
        } else if nb % na == 0 {
            (Cow::Owned(a.lift_to(&b.field)), Cow::Borrowed(b))
        } else if na % nb == 0 {
            (Cow::Borrowed(a), Cow::Owned(b.lift_to(&a.field)))
        } else {
            let f = CycloField::new(lcm(na, nb));
            (Cow::Owned(a.lift_to(&f)), Cow::Owned(b.lift_to(&f)))
        }
    }

    /// Complex conjugate, ζ ↦ ζ^{−1}.
    pub fn conj(&self) -> Self {
        let n = self.field.conductor as usize;
        if n == 1 {
            return self.clone();
        }
        let mut p = vec![BigRational::zero(); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            p[(n - k) % n] += c;
        }
        Self::from_coeffs(&self.field, p)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        CycloNumber { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = CycloNumber::from_rational(BigRational::one()).lift_to(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.field.conductor == 1 {
            return Some(Self::from_rational(self.coeffs[0].recip()));
        }
        let m: Vec<BigRational> =
            self.field.modulus.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect();
        let a = trim(self.coeffs.clone());
        let (mut r0, mut r1) = (m, a);
        let (mut s0, mut s1) = (Vec::<BigRational>::new(), vec![BigRational::one()]);
        while !r1.is_empty() {
            let (q, r) = divmod(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        debug_assert_eq!(r0.len(), 1, "Φ_N is irreducible, gcd must be constant");
        let g = r0[0].clone();
        let s: Vec<BigRational> = s0.into_iter().map(|c| c / &g).collect();
        Some(Self::from_coeffs(&self.field, s))
    }

    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self * &i)
    }
}

fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            r[i + j] += x * y;
        }
    }
    trim(r)
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        r[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        r[i] -= y;
    }
    trim(r)
}

fn divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead = b[db].clone();
    let mut q = vec![BigRational::zero(); r.len() - db];
    while r.len() >= b.len() {
        let k = r.len() - 1 - db;
        let c = r.last().unwrap() / &lead;
        for j in 0..=db {
            let t = &c * &b[j];
            r[k + j] -= t;
        }
        q[k] = c;
        r = trim(r);
    }
    (trim(q), r)
}

impl PartialEq for CycloNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.field.conductor == other.field.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = Self::aligned(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycloNumber {}

/// Rationals hash by value regardless of the field they sit in; other values
/// hash by (conductor, coefficients), so hashed collections should hold values
/// from a single field.
impl Hash for CycloNumber {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self.to_rational() {
            Some(q) => {
                0u32.hash(state);
                q.hash(state);
            }
            None => {
                self.field.conductor.hash(state);
                self.coeffs.hash(state);
            }
        }
    }
}

/// A total order for canonical sorting: rationals by value, everything else
/// lexicographically by (conductor, coefficients). Not the real order.
impl Ord for CycloNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.to_rational(), other.to_rational()) {
            (Some(a), Some(b)) => a.cmp(&b),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => self
                .field
                .conductor
                .cmp(&other.field.conductor)
                .then_with(|| self.coeffs.cmp(&other.coeffs)),
        }
    }
}

impl PartialOrd for CycloNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.to_rational() {
            return write!(f, "{q}");
        }
        write!(f, "cyclo{}[", self.field.conductor)?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl<'a> Add<&'a CycloNumber> for &'a CycloNumber {
    type Output = CycloNumber;
    fn add(self, rhs: &'a CycloNumber) -> CycloNumber {
        let (a, b) = CycloNumber::aligned(self, rhs);
        CycloNumber {
            field: a.field.clone(),
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }
}

impl<'a> Sub<&'a CycloNumber> for &'a CycloNumber {
    type Output = CycloNumber;
    fn sub(self, rhs: &'a CycloNumber) -> CycloNumber {
        let (a, b) = CycloNumber::aligned(self, rhs);
        CycloNumber {
            field: a.field.clone(),
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect(),
        }
    }
}

impl<'a> Mul<&'a CycloNumber> for &'a CycloNumber {
    type Output = CycloNumber;
    fn mul(self, rhs: &'a CycloNumber) -> CycloNumber {
        if self.field.conductor == 1 && rhs.field.conductor == 1 {
            return CycloNumber { field: self.field.clone(), coeffs: vec![&self.coeffs[0] * &rhs.coeffs[0]] };
        }
        if let Some(q) = self.to_rational() {
            return rhs.scale(&q).lift_to_at_least(&self.field);
        }
        if let Some(q) = rhs.to_rational() {
            return self.scale(&q).lift_to_at_least(&rhs.field);
        }
        let (a, b) = CycloNumber::aligned(self, rhs);
        let mut p = vec![BigRational::zero(); a.coeffs.len() * 2 - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    p[i + j] += x * y;
                }
            }
        }
        CycloNumber::from_coeffs(&a.field, p)
    }
}

impl CycloNumber {
    /// Lift into the compositum with `field` (used so that a product always
    /// lands in the larger of the two operand fields).
    fn lift_to_at_least(self, field: &Arc<CycloField>) -> Self {
        let (a, b) = (self.field.conductor, field.conductor);
        if a == b || a % b == 0 {
            self
        } else if b % a == 0 {
            self.lift_to(field)
        } else {
            let f = CycloField::new(lcm(a, b));
            self.lift_to(&f)
        }
    }
}

impl Neg for &CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        CycloNumber { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<CycloNumber> for CycloNumber {
            type Output = CycloNumber;
            fn $m(self, rhs: CycloNumber) -> CycloNumber {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a CycloNumber> for CycloNumber {
            type Output = CycloNumber;
            fn $m(self, rhs: &'a CycloNumber) -> CycloNumber {
                (&self).$m(rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl From<i64> for CycloNumber {
    fn from(k: i64) -> Self {
        CycloNumber::from_int(k)
    }
}

impl From<BigRational> for CycloNumber {
    fn from(q: BigRational) -> Self {
        CycloNumber::from_rational(q)
    }
}

/// Render a rational as "p/q" (or "p" when integral).
pub fn rational_string(q: &BigRational) -> String {
    if q.is_integer() {
        q.to_integer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Sign of a rational as -1, 0 or 1.
pub fn rational_sign(q: &BigRational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(5), vec![1, 1, 1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn zeta_has_exact_order() {
        for n in [3u32, 4, 5, 8, 10, 12, 30] {
            let z = CycloNumber::zeta(n, 1);
            for k in 1..n {
                assert!(!z.pow(k).is_one(), "ζ_{n}^{k} = 1");
            }
            assert!(z.pow(n).is_one());
        }
    }

    #[test]
    fn golden_ratio_identity() {
        // 2cos(π/5) = φ satisfies φ² = φ + 1
        let phi = CycloNumber::two_cos(10, 1);
        assert_eq!(&phi * &phi, &phi + &CycloNumber::one());
    }

    #[test]
    fn sum_of_primitive_cube_roots() {
        let z = CycloNumber::zeta(3, 1);
        let s = &z + &z.pow(2);
        assert_eq!(s.to_rational(), Some(BigRational::from_integer((-1).into())));
    }

    #[test]
    fn mixed_fields_lift() {
        let i = CycloNumber::zeta(4, 1);
        let w = CycloNumber::zeta(3, 1);
        let p = &i * &w;
        assert_eq!(p.conductor(), 12);
        assert_eq!(p, CycloNumber::zeta(12, 7));
        assert_eq!(&CycloNumber::from_int(2) * &i, &i + &i);
    }

    #[test]
    fn conjugation_inverts_roots() {
        let z = CycloNumber::zeta(7, 3);
        assert!((&z * &z.conj()).is_one());
    }

    fn arb_elem(n: u32) -> impl Strategy<Value = CycloNumber> {
        let f = CycloField::new(n);
        let d = f.degree();
        prop::collection::vec((-5i64..6, 1i64..4), d).prop_map(move |v| {
            let c = v.into_iter().map(|(p, q)| BigRational::new(p.into(), q.into())).collect();
            CycloNumber::from_coeffs(&f, c)
        })
    }

    proptest! {
        #[test]
        fn field_axioms_q_zeta_12(a in arb_elem(12), b in arb_elem(12), c in arb_elem(12)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn conj_is_a_ring_map(a in arb_elem(10), b in arb_elem(10)) {
            prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
            prop_assert_eq!(a.conj().conj(), a);
        }

        #[test]
        fn rationals_embed(p in -20i64..20, q in 1i64..9, r in -20i64..20) {
            let a = CycloNumber::from_frac(p, q);
            let b = CycloNumber::from_int(r);
            let f = CycloField::new(5);
            prop_assert_eq!((&a * &b).lift_to(&f), &a.lift_to(&f) * &b.lift_to(&f));
            prop_assert_eq!((&a + &b).lift_to(&f), &a.lift_to(&f) + &b.lift_to(&f));
        }
    }
}
