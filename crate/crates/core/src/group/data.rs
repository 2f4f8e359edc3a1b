//! Static root data: Gram matrices of simple roots, standard-coordinate
//! embeddings where one is used, and degree tables.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::label::{Family, GroupLabel};
use crate::algebra::CycloNumber;

pub(crate) struct RootData {
    /// ⟨α_i, α_j⟩ for simple roots.
    pub gram: Vec<Vec<CycloNumber>>,
    /// Simple roots in standard coordinates (one vector per simple root).
    pub embedding: Option<Vec<Vec<BigRational>>>,
    /// Whether elements carry signed permutations of the ambient coordinates.
    pub classical: bool,
    pub degrees: Vec<u32>,
    /// Conductor of a cyclotomic field containing the root coordinates.
    pub conductor: u32,
}

fn q(k: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(k))
}

fn unit(m: usize, i: usize) -> Vec<BigRational> {
    let mut v = vec![q(0); m];
    v[i] = q(1);
    v
}

fn combo(m: usize, terms: &[(usize, i64)]) -> Vec<BigRational> {
    let mut v = vec![q(0); m];
    for &(i, c) in terms {
        v[i] += q(c);
    }
    v
}

fn gram_of(emb: &[Vec<BigRational>]) -> Vec<Vec<CycloNumber>> {
    emb.iter()
        .map(|a| {
            emb.iter()
                .map(|b| CycloNumber::from_rational(a.iter().zip(b).fold(q(0), |acc, (x, y)| acc + x * y)))
                .collect()
        })
        .collect()
}

/// Gram matrix from Coxeter labels m_ij with all roots of squared length 2.
fn coxeter_gram(n: usize, edges: &[(usize, usize, usize)]) -> Vec<Vec<CycloNumber>> {
    let mut g = vec![vec![CycloNumber::zero(); n]; n];
    for (i, row) in g.iter_mut().enumerate() {
        row[i] = CycloNumber::from_int(2);
    }
    for &(i, j, m) in edges {
        // −2cos(π/m) = −(ζ_{2m} + ζ_{2m}^{−1})
        let c = -CycloNumber::two_cos(2 * m as u32, 1);
        g[i][j] = c.clone();
        g[j][i] = c;
    }
    g
}

pub(crate) fn root_data(label: &GroupLabel) -> RootData {
    match label.family {
        Family::A(n) => {
            let m = n + 1;
            let emb: Vec<_> = (0..n).map(|i| combo(m, &[(i, 1), (i + 1, -1)])).collect();
            RootData {
                gram: gram_of(&emb),
                embedding: Some(emb),
                classical: true,
                degrees: (2..=n as u32 + 1).collect(),
                conductor: 1,
            }
        }
        Family::B(n) => {
            let mut emb = vec![unit(n, 0)];
            emb.extend((1..n).map(|i| combo(n, &[(i, 1), (i - 1, -1)])));
            RootData {
                gram: gram_of(&emb),
                embedding: Some(emb),
                classical: true,
                degrees: (1..=n as u32).map(|k| 2 * k).collect(),
                conductor: 1,
            }
        }
        Family::D(n) => {
            let mut emb: Vec<_> = (0..n - 1).map(|i| combo(n, &[(i, 1), (i + 1, -1)])).collect();
            emb.push(combo(n, &[(n - 2, 1), (n - 1, 1)]));
            let mut degrees: Vec<u32> = (1..n as u32).map(|k| 2 * k).collect();
            degrees.push(n as u32);
            degrees.sort_unstable();
            RootData { gram: gram_of(&emb), embedding: Some(emb), classical: true, degrees, conductor: 1 }
        }
        Family::G2 => {
            let emb = vec![combo(3, &[(0, 1), (1, -1)]), combo(3, &[(0, -2), (1, 1), (2, 1)])];
            RootData { gram: gram_of(&emb), embedding: Some(emb), classical: false, degrees: vec![2, 6], conductor: 1 }
        }
        Family::F4 => {
            let half = BigRational::new(1.into(), 2.into());
            let emb = vec![
                combo(4, &[(1, 1), (2, -1)]),
                combo(4, &[(2, 1), (3, -1)]),
                unit(4, 3),
                vec![half.clone(), -half.clone(), -half.clone(), -half],
            ];
            RootData {
                gram: gram_of(&emb),
                embedding: Some(emb),
                classical: false,
                degrees: vec![2, 6, 8, 12],
                conductor: 1,
            }
        }
        Family::E6 => {
            // Bourbaki numbering: 1-3-4-5-6 with 2 attached to 4
            let edges = [(0, 2, 3), (2, 3, 3), (3, 4, 3), (4, 5, 3), (1, 3, 3)];
            RootData {
                gram: coxeter_gram(6, &edges),
                embedding: None,
                classical: false,
                degrees: vec![2, 5, 6, 8, 9, 12],
                conductor: 1,
            }
        }
        Family::H3 => RootData {
            gram: coxeter_gram(3, &[(0, 1, 5), (1, 2, 3)]),
            embedding: None,
            classical: false,
            degrees: vec![2, 6, 10],
            conductor: 10,
        },
        Family::H4 => RootData {
            gram: coxeter_gram(4, &[(0, 1, 5), (1, 2, 3), (2, 3, 3)]),
            embedding: None,
            classical: false,
            degrees: vec![2, 12, 20, 30],
            conductor: 10,
        },
        Family::I2(m) => RootData {
            gram: coxeter_gram(2, &[(0, 1, m)]),
            embedding: None,
            classical: false,
            degrees: vec![2, m as u32],
            conductor: 2 * m as u32,
        },
    }
}
