//! Signed permutations of ±[n] stored as the images of +1, …, +n.

pub type SignedPerm = Vec<i32>;

pub fn apply(w: &[i32], x: i32) -> i32 {
    let y = w[x.unsigned_abs() as usize - 1];
    if x > 0 {
        y
    } else {
        -y
    }
}

/// (a ∘ b)(x) = a(b(x)).
pub fn compose(a: &[i32], b: &[i32]) -> SignedPerm {
    (1..=b.len() as i32).map(|i| apply(a, apply(b, i))).collect()
}

pub fn inverse(a: &[i32]) -> SignedPerm {
    let mut out = vec![0; a.len()];
    for (i, &y) in a.iter().enumerate() {
        let x = i as i32 + 1;
        out[y.unsigned_abs() as usize - 1] = if y > 0 { x } else { -x };
    }
    out
}

pub fn power(a: &[i32], k: i64) -> SignedPerm {
    let base = if k < 0 { inverse(a) } else { a.to_vec() };
    let mut out: SignedPerm = (1..=a.len() as i32).collect();
    for _ in 0..k.unsigned_abs() {
        out = compose(&base, &out);
    }
    out
}

/// Number of i with w(+i) negative.
pub fn negatives(w: &[i32]) -> usize {
    w.iter().filter(|&&y| y < 0).count()
}

/// codim V^w: n minus the number of pairs of cycles C, −C with C ≠ −C.
pub fn reflection_length(w: &[i32]) -> usize {
    let n = w.len();
    let idx = |x: i32| if x > 0 { x as usize - 1 } else { n + (-x) as usize - 1 };
    let mut seen = vec![false; 2 * n];
    let mut positive = 0;
    for s in (1..=n as i32).chain((1..=n as i32).map(|x| -x)) {
        if seen[idx(s)] {
            continue;
        }
        let mut x = s;
        let mut meets_negative = false;
        while !seen[idx(x)] {
            seen[idx(x)] = true;
            meets_negative |= x == -s;
            x = apply(w, x);
        }
        if !meets_negative {
            positive += 1;
        }
    }
    n - positive / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_and_inverse() {
        let c = vec![2, 3, -1];
        assert_eq!(power(&c, 6), vec![1, 2, 3]);
        assert_eq!(power(&c, 3), vec![-1, -2, -3]);
        assert_eq!(compose(&c, &inverse(&c)), vec![1, 2, 3]);
        assert_eq!(power(&c, -1), inverse(&c));
    }

    #[test]
    fn lengths() {
        assert_eq!(reflection_length(&[1, 2, 3]), 0);
        assert_eq!(reflection_length(&[-1, 2, 3]), 1);
        assert_eq!(reflection_length(&[2, 1, 3]), 1);
        assert_eq!(reflection_length(&[-2, -1, 3]), 1);
        assert_eq!(reflection_length(&[2, 3, -1]), 3);
        assert_eq!(reflection_length(&[2, 3, -1, -4]), 4);
    }
}
