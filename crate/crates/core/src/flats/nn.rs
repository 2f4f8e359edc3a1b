//! Root poset and nonnesting partitions.

use super::FlatId;
use crate::error::{Error, Result};
use crate::group::CoxeterGroup;

/// Positive roots ordered by α ≤ β iff β − α is a nonnegative combination
/// of simple roots.
pub struct RootPoset {
    coords: Vec<Vec<i64>>,
    leq: Vec<Vec<bool>>,
}

/// A set of pairwise incomparable positive roots and its flat ∩ H_α.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Antichain {
    pub roots: Vec<usize>,
    pub flat: FlatId,
}

impl RootPoset {
    pub fn new(group: &CoxeterGroup) -> Result<Self> {
        if !group.is_crystallographic() {
            return Err(Error::NotCrystallographic(format!("root poset of {}", group.label())));
        }
        let npos = group.num_positive_roots();
        let coords: Vec<Vec<i64>> = (0..npos)
            .map(|r| {
                group
                    .root(r)
                    .iter()
                    .map(|x| {
                        x.to_integer()
                            .and_then(|k| i64::try_from(k).ok())
                            .ok_or_else(|| Error::Verification("non-integral root coordinate".into()))
                    })
                    .collect::<Result<Vec<i64>>>()
            })
            .collect::<Result<_>>()?;
        let leq = (0..npos)
            .map(|a| (0..npos).map(|b| coords[b].iter().zip(&coords[a]).all(|(y, x)| y >= x)).collect())
            .collect();
        Ok(RootPoset { coords, leq })
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Simple-root coordinates of positive root r.
    pub fn coords(&self, r: usize) -> &[i64] {
        &self.coords[r]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq[a][b] || self.leq[b][a]
    }

    fn index_of(&self, v: &[i64]) -> Option<usize> {
        self.coords.iter().position(|c| c.as_slice() == v)
    }

    /// Pairs (α, β) with β − α a positive root.
    pub fn root_differences(&self) -> Vec<(usize, usize)> {
        let m = self.len();
        let mut out = Vec::new();
        for a in 0..m {
            for b in 0..m {
                let diff: Vec<i64> = self.coords[b].iter().zip(&self.coords[a]).map(|(y, x)| y - x).collect();
                if self.index_of(&diff).is_some() {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Reflexive-transitive closure of the root-difference relation.
    pub fn closure_of_root_differences(&self) -> Vec<Vec<bool>> {
        let m = self.len();
        let mut rel = vec![vec![false; m]; m];
        for (a, row) in rel.iter_mut().enumerate() {
            row[a] = true;
        }
        for (a, b) in self.root_differences() {
            rel[a][b] = true;
        }
        for k in 0..m {
            for a in 0..m {
                if rel[a][k] {
                    for b in 0..m {
                        if rel[k][b] {
                            rel[a][b] = true;
                        }
                    }
                }
            }
        }
        rel
    }

    /// Whether β − α is a sum of positive roots, by exhaustive search.
    pub fn in_positive_root_monoid(&self, a: usize, b: usize) -> bool {
        let target: Vec<i64> = self.coords[b].iter().zip(&self.coords[a]).map(|(y, x)| y - x).collect();
        fn rec(rest: &[i64], roots: &[Vec<i64>]) -> bool {
            if rest.iter().any(|&x| x < 0) {
                return false;
            }
            if rest.iter().all(|&x| x == 0) {
                return true;
            }
            roots.iter().any(|r| {
                let next: Vec<i64> = rest.iter().zip(r).map(|(x, y)| x - y).collect();
                rec(&next, roots)
            })
        }
        rec(&target, &self.coords)
    }

    /// Indices of the minimal elements.
    pub fn minimal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&b| (0..self.len()).all(|a| a == b || !self.leq[a][b])).collect()
    }

    /// All antichains, each sorted by root index.
    pub fn antichains(&self) -> Vec<Vec<usize>> {
        fn rec(p: &RootPoset, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            out.push(cur.clone());
            for r in start..p.len() {
                if cur.iter().all(|&a| !p.comparable(a, r)) {
                    cur.push(r);
                    rec(p, r + 1, cur, out);
                    cur.pop();
                }
            }
        }
        let mut out = Vec::new();
        rec(self, 0, &mut Vec::new(), &mut out);
        out
    }

    pub fn is_antichain(&self, roots: &[usize]) -> bool {
        roots.iter().enumerate().all(|(i, &a)| roots[i + 1..].iter().all(|&b| !self.comparable(a, b)))
    }

    /// Antichains together with their flats.
    pub fn nonnesting(&self, group: &CoxeterGroup) -> Result<Vec<Antichain>> {
        self.antichains()
            .into_iter()
            .map(|roots| {
                let flat = group
                    .flat_orthogonal_to(&roots)
                    .ok_or_else(|| Error::Verification("antichain flat is not a fixed space".into()))?;
                Ok(Antichain { roots, flat })
            })
            .collect()
    }
}
