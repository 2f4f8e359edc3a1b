//! Square matrices over cyclotomic fields and the linear algebra the group
//! code needs: canonical kernels, characteristic polynomials, eigenvalue
//! multiplicities.

use std::fmt;

use num_rational::BigRational;

use super::cyclo::{CycloField, CycloNumber};
use super::poly::QPoly;

/// Row-major n×n matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    n: usize,
    entries: Vec<CycloNumber>,
}

impl ExactMatrix {
    pub fn zero(n: usize) -> Self {
        ExactMatrix { n, entries: vec![CycloNumber::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.entries[i * n + i] = CycloNumber::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<CycloNumber>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        ExactMatrix { n, entries: rows.into_iter().flatten().collect() }
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| CycloNumber::from_int(x)).collect()).collect())
    }

    /// Matrix whose j-th column is `cols[j]`.
    pub fn from_columns(cols: &[Vec<CycloNumber>]) -> Self {
        let n = cols.len();
        let mut m = Self::zero(n);
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), n);
            for (i, x) in c.iter().enumerate() {
                m.entries[i * n + j] = x.clone();
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &CycloNumber {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: CycloNumber) {
        self.entries[i * self.n + j] = x;
    }

    pub fn rows(&self) -> Vec<Vec<CycloNumber>> {
        self.entries.chunks(self.n.max(1)).take(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut m = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                m.entries[j * n + i] = self.get(i, j).clone();
            }
        }
        m
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.n;
        let mut m = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        m.entries[i * n + j] = &m.entries[i * n + j] + &(a * b);
                    }
                }
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[CycloNumber]) -> Vec<CycloNumber> {
        (0..self.n)
            .map(|i| {
                let mut acc = CycloNumber::zero();
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() && !x.is_zero() {
                        acc = &acc + &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        ExactMatrix { n: self.n, entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        ExactMatrix { n: self.n, entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, c: &CycloNumber) -> Self {
        ExactMatrix { n: self.n, entries: self.entries.iter().map(|a| a * c).collect() }
    }

    /// M − ζ·I
    pub fn minus_scalar(&self, z: &CycloNumber) -> Self {
        let mut m = self.clone();
        for i in 0..self.n {
            m.entries[i * self.n + i] = &m.entries[i * self.n + i] - z;
        }
        m
    }

    pub fn trace(&self) -> CycloNumber {
        (0..self.n).fold(CycloNumber::zero(), |acc, i| &acc + self.get(i, i))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::identity(self.n), |acc, _| acc.mul(self))
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    pub fn lift_to(&self, field: &std::sync::Arc<CycloField>) -> Self {
        ExactMatrix { n: self.n, entries: self.entries.iter().map(|x| x.lift_to(field)).collect() }
    }

    /// Conductor of the smallest field among those holding the entries that
    /// contains all of them (the lcm of entry conductors).
    pub fn conductor(&self) -> u32 {
        use num_integer::Integer;
        self.entries.iter().fold(1u32, |acc, x| acc.lcm(&x.conductor()))
    }

    pub fn rank(&self) -> usize {
        rref(self.rows(), self.n).len()
    }

    /// Coefficients c_0..c_n of det(x·I − M), lowest degree first.
    pub fn charpoly(&self) -> QPoly {
        // Faddeev–LeVerrier: M_k = A·M_{k−1} + c_{n−k+1}·I, c_{n−k} = −tr(A·M_k)/k
        let n = self.n;
        let mut c = vec![CycloNumber::zero(); n + 1];
        c[n] = CycloNumber::one();
        let mut mk = Self::zero(n);
        for k in 1..=n {
            let prev = self.mul(&mk);
            mk = prev.minus_scalar(&-&c[n - k + 1]);
            let t = self.mul(&mk).trace();
            let kinv = CycloNumber::from_rational(BigRational::new((-1).into(), (k as i64).into()));
            c[n - k] = &t * &kinv;
        }
        QPoly::new('x', c)
    }

    pub fn det(&self) -> CycloNumber {
        let c = self.charpoly().coeff(0);
        if self.n % 2 == 0 {
            c
        } else {
            -c
        }
    }

    /// Solve for a canonical basis of {v : M·v = 0}.
    pub fn kernel_basis(&self) -> Vec<Vec<CycloNumber>> {
        nullspace(&self.rows(), self.n)
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in self.rows() {
            writeln!(f, "{r:?}")?;
        }
        Ok(())
    }
}

/// Reduced row echelon form of the span of `rows` (zero rows dropped).
///
/// The output depends only on the row space, which makes it a canonical
/// representative of a subspace.
pub fn rref(mut rows: Vec<Vec<CycloNumber>>, ncols: usize) -> Vec<Vec<CycloNumber>> {
    let mut pivot_row = 0;
    for col in 0..ncols {
        let Some(p) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, p);
        let inv = rows[pivot_row][col].inv().expect("nonzero pivot");
        let prow: Vec<CycloNumber> = rows[pivot_row].iter().map(|x| x * &inv).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != pivot_row && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, y) in row.iter_mut().zip(&prow) {
                    if !y.is_zero() {
                        *x = &*x - &(&f * y);
                    }
                }
            }
        }
        rows[pivot_row] = prow;
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    rows.truncate(pivot_row);
    rows
}

/// Canonical basis (rows in reduced echelon form) of the kernel of the
/// linear map given by `rows` on column vectors of length `ncols`.
pub fn nullspace(rows: &[Vec<CycloNumber>], ncols: usize) -> Vec<Vec<CycloNumber>> {
    let r = rref(rows.to_vec(), ncols);
    let mut pivots = Vec::new();
    for row in &r {
        pivots.push(row.iter().position(|x| !x.is_zero()).expect("rref rows are nonzero"));
    }
    let mut basis = Vec::new();
    for f in 0..ncols {
        if pivots.contains(&f) {
            continue;
        }
        let mut v = vec![CycloNumber::zero(); ncols];
        v[f] = CycloNumber::one();
        for (row, &p) in r.iter().zip(&pivots) {
            v[p] = -&row[f];
        }
        basis.push(v);
    }
    rref(basis, ncols)
}

/// Canonical kernel basis of M.
pub fn kernel_basis(m: &ExactMatrix) -> Vec<Vec<CycloNumber>> {
    m.kernel_basis()
}

/// dim ker(M − ζ·I), working in the compositum of the entry field and ζ's field.
pub fn eigen_multiplicity(m: &ExactMatrix, zeta: &CycloNumber) -> usize {
    use num_integer::Integer;
    let n = m.conductor().lcm(&zeta.conductor());
    let f = CycloField::new(n);
    let lifted = m.lift_to(&f);
    let z = zeta.lift_to(&f);
    m.dim() - lifted.minus_scalar(&z).rank()
}

/// det(I − q·M) as a polynomial in q.
pub fn det_one_minus_q_m(m: &ExactMatrix) -> QPoly {
    let c = m.charpoly();
    let n = m.dim();
    QPoly::new('q', (0..=n).map(|k| c.coeff(n - k)).collect())
}

/// det(I + t·M) as a polynomial in t; its t^k coefficient is the trace of M on ∧^k.
pub fn det_one_plus_t_m(m: &ExactMatrix) -> QPoly {
    let c = m.charpoly();
    let n = m.dim();
    QPoly::new(
        't',
        (0..=n)
            .map(|j| {
                let x = c.coeff(n - j);
                if j % 2 == 0 {
                    x
                } else {
                    -x
                }
            })
            .collect(),
    )
}

/// det(t·I + (1−t)·M) as a polynomial in t.
pub fn det_t_plus_one_minus_t_m(m: &ExactMatrix) -> QPoly {
    // Σ_k c_k (−1)^n (−t)^k (1−t)^{n−k} where det(xI − M) = Σ c_k x^k
    let c = m.charpoly();
    let n = m.dim();
    let one_minus_t = QPoly::from_ints('t', &[1, -1]);
    let minus_t = QPoly::from_ints('t', &[0, -1]);
    let mut acc = QPoly::zero('t');
    for k in 0..=n {
        let term = (&minus_t.pow(k as u32) * &one_minus_t.pow((n - k) as u32)).scale(&c.coeff(k));
        acc = &acc + &term;
    }
    if n % 2 == 1 {
        acc = -&acc;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rot3() -> ExactMatrix {
        // Coxeter element of A2 in the simple-root basis: s1 s2
        ExactMatrix::from_int_rows(&[vec![-1, 1], vec![0, 1]])
            .mul(&ExactMatrix::from_int_rows(&[vec![1, 0], vec![1, -1]]))
    }

    #[test]
    fn zero_matrix_kernel_is_everything() {
        let k = ExactMatrix::zero(2).kernel_basis();
        assert_eq!(k, vec![vec![CycloNumber::one(), CycloNumber::zero()], vec![CycloNumber::zero(), CycloNumber::one()]]);
    }

    #[test]
    fn reflection_fixes_a_line() {
        let s = ExactMatrix::from_int_rows(&[vec![-1, 1], vec![0, 1]]);
        assert_eq!(s.minus_scalar(&CycloNumber::one()).kernel_basis().len(), 1);
        assert_eq!(eigen_multiplicity(&s, &CycloNumber::from_int(-1)), 1);
        assert_eq!(det_one_minus_q_m(&s), QPoly::from_ints('q', &[1, 0, -1]));
    }

    #[test]
    fn coxeter_element_of_a2() {
        let c = rot3();
        assert!(c.minus_scalar(&CycloNumber::one()).kernel_basis().is_empty());
        assert_eq!(det_one_minus_q_m(&c), QPoly::from_ints('q', &[1, 1, 1]));
        assert_eq!(eigen_multiplicity(&c, &CycloNumber::zeta(3, 1)), 1);
        assert_eq!(eigen_multiplicity(&c, &CycloNumber::zeta(3, 2)), 1);
        assert!(c.pow(3).is_identity());
    }

    #[test]
    fn identity_det_forms() {
        let i = ExactMatrix::identity(2);
        assert_eq!(det_one_minus_q_m(&i), QPoly::from_ints('q', &[1, -2, 1]));
        assert_eq!(det_one_plus_t_m(&i), QPoly::from_ints('t', &[1, 2, 1]));
        assert_eq!(det_t_plus_one_minus_t_m(&i), QPoly::one('t'));
        assert_eq!(eigen_multiplicity(&i, &CycloNumber::one()), 2);
    }

    fn cofactor_det(m: &ExactMatrix) -> CycloNumber {
        let n = m.dim();
        if n == 1 {
            return m.get(0, 0).clone();
        }
        let mut acc = CycloNumber::zero();
        for j in 0..n {
            let minor = ExactMatrix::from_rows(
                (1..n).map(|i| (0..n).filter(|&k| k != j).map(|k| m.get(i, k).clone()).collect()).collect(),
            );
            let term = m.get(0, j) * &cofactor_det(&minor);
            acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    fn arb_int_matrix(n: usize) -> impl Strategy<Value = ExactMatrix> {
        prop::collection::vec(prop::collection::vec(-3i64..4, n), n).prop_map(|r| ExactMatrix::from_int_rows(&r))
    }

    proptest! {
        #[test]
        fn kernel_vectors_are_killed(m in arb_int_matrix(4)) {
            let k = m.kernel_basis();
            prop_assert_eq!(k.len() + m.rank(), 4);
            for v in &k {
                prop_assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
            }
            prop_assert_eq!(rref(k.clone(), 4), k);
        }

        #[test]
        fn charpoly_matches_direct_det_forms(m in arb_int_matrix(3), t in -3i64..4) {
            // det(I + tM) evaluated at an integer t equals the determinant of I + tM
            let tm = ExactMatrix::identity(3).add(&m.scale(&CycloNumber::from_int(t)));
            prop_assert_eq!(det_one_plus_t_m(&m).eval(&CycloNumber::from_int(t)), cofactor_det(&tm));
            let mixed = ExactMatrix::identity(3).scale(&CycloNumber::from_int(t))
                .add(&m.scale(&CycloNumber::from_int(1 - t)));
            prop_assert_eq!(det_t_plus_one_minus_t_m(&m).eval(&CycloNumber::from_int(t)), cofactor_det(&mixed));
        }

        #[test]
        fn det_is_multiplicative(a in arb_int_matrix(3), b in arb_int_matrix(3)) {
            prop_assert_eq!(a.mul(&b).det(), &a.det() * &b.det());
            prop_assert_eq!(a.det(), cofactor_det(&a));
        }
    }
}
