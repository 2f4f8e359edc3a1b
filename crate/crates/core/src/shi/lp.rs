//! Exact feasibility of strict linear systems by Fourier–Motzkin elimination
//! with a slack variable.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// a·y < b.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Strict {
    pub a: Vec<i64>,
    pub b: i64,
}

impl Strict {
    pub fn new(a: Vec<i64>, b: i64) -> Self {
        Strict { a, b }
    }

    pub fn flipped(&self) -> Self {
        Strict { a: self.a.iter().map(|x| -x).collect(), b: -self.b }
    }

    pub fn holds_at(&self, y: &[BigRational]) -> bool {
        dot(&self.a, y) < BigRational::from_integer(self.b.into())
    }
}

pub fn dot(a: &[i64], y: &[BigRational]) -> BigRational {
    a.iter().zip(y).fold(BigRational::zero(), |acc, (c, x)| acc + x * BigInt::from(*c))
}

/// Σ a_j y_j + t ≤ b, with the coefficient of t scaled to one.
type Row = (Vec<BigRational>, BigRational);

/// Keeps one row per normal direction, the tightest.
fn dedupe(rows: Vec<Row>) -> Vec<Row> {
    let mut best: BTreeMap<Vec<BigRational>, BigRational> = BTreeMap::new();
    for (a, b) in rows {
        match best.get_mut(&a) {
            Some(old) if *old <= b => {}
            Some(old) => *old = b,
            None => {
                best.insert(a, b);
            }
        }
    }
    best.into_iter().collect()
}

/// A point satisfying every inequality strictly, with the largest slack
/// t ≤ 1 reached along the way, or None if the system is infeasible.
pub fn strict_witness(system: &[Strict], dim: usize) -> Option<Vec<BigRational>> {
    let one = BigRational::one();
    let mut rows: Vec<Row> = system
        .iter()
        .map(|s| (s.a.iter().map(|&x| BigRational::from_integer(x.into())).collect(), BigRational::from_integer(s.b.into())))
        .collect();
    rows.push((vec![BigRational::zero(); dim], one.clone()));
    rows = dedupe(rows);
    let mut levels = Vec::with_capacity(dim);
    for k in 0..dim {
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for row in rows.iter() {
            match row.0[k].partial_cmp(&BigRational::zero()) {
                Some(std::cmp::Ordering::Greater) => pos.push(row),
                Some(std::cmp::Ordering::Less) => neg.push(row),
                _ => rest.push(row.clone()),
            }
        }
        // p·x_k ≤ …, n·x_k ≤ … with p > 0 > n combine with weights −n, p;
        // the t-coefficient becomes p − n, rescaled back to one.
        for (ap, bp) in &pos {
            for (an, bn) in &neg {
                let (p, n) = (&ap[k], &an[k]);
                let s = p - n;
                let a: Vec<BigRational> = ap.iter().zip(an).map(|(x, y)| (x * -n + y * p) / &s).collect();
                rest.push((a, (bp * -n + bn * p) / &s));
            }
        }
        levels.push(rows);
        rows = dedupe(rest);
    }
    let t = rows.iter().map(|(_, b)| b.clone()).min()?;
    if !t.is_positive() {
        return None;
    }
    let mut y = vec![BigRational::zero(); dim];
    for k in (0..dim).rev() {
        let (mut lo, mut hi): (Option<BigRational>, Option<BigRational>) = (None, None);
        for (a, b) in &levels[k] {
            if a[k].is_zero() {
                continue;
            }
            let mut r = b - &t;
            for j in k + 1..dim {
                r -= &a[j] * &y[j];
            }
            let bound = r / &a[k];
            if a[k].is_positive() {
                hi = Some(hi.map_or(bound.clone(), |h| h.min(bound)));
            } else {
                lo = Some(lo.map_or(bound.clone(), |l| l.max(bound)));
            }
        }
        y[k] = match (lo, hi) {
            (Some(l), Some(h)) => (l + h) / BigRational::from_integer(2.into()),
            (Some(l), None) => l + &one,
            (None, Some(h)) => h - &one,
            (None, None) => BigRational::zero(),
        };
    }
    debug_assert!(system.iter().all(|s| s.holds_at(&y)));
    Some(y)
}

pub fn feasible(system: &[Strict], dim: usize) -> bool {
    strict_witness(system, dim).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        // 0 < x, 0 < y, x + y < 1
        let sys = vec![Strict::new(vec![-1, 0], 0), Strict::new(vec![0, -1], 0), Strict::new(vec![1, 1], 1)];
        let w = strict_witness(&sys, 2).unwrap();
        assert!(sys.iter().all(|s| s.holds_at(&w)));
        let mut bad = sys.clone();
        bad.push(Strict::new(vec![-1, -1], -1));
        assert!(!feasible(&bad, 2));
    }

    #[test]
    fn open_strip_is_not_closed_strip() {
        // 0 < x < 0 is empty even though 0 ≤ x ≤ 0 is not
        let sys = vec![Strict::new(vec![1], 0), Strict::new(vec![-1], 0)];
        assert!(!feasible(&sys, 1));
        assert!(feasible(&[Strict::new(vec![1, 0], 5)], 2));
    }
}
