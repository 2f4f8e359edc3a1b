//! Set partitions of [n] and centrally symmetric partitions of ±[n], read
//! off from flats through coordinate equalities.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::FlatId;
use crate::algebra::CycloNumber;
use crate::error::{Error, Result};
use crate::group::{CoxeterGroup, Family};

/// Blocks of a set partition of [n], 1-based, sorted.
pub type SetPartition = Vec<Vec<usize>>;

pub fn normalize_set_partition(mut blocks: SetPartition) -> SetPartition {
    for b in blocks.iter_mut() {
        b.sort_unstable();
    }
    blocks.retain(|b| !b.is_empty());
    blocks.sort();
    blocks
}

pub fn format_set_partition(blocks: &[Vec<usize>]) -> String {
    let inner: Vec<String> =
        blocks.iter().map(|b| b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")).collect();
    format!("{{{}}}", inner.join("|"))
}

pub fn parse_set_partition(s: &str) -> Result<SetPartition> {
    let body = s.trim().strip_prefix('{').and_then(|t| t.strip_suffix('}')).ok_or_else(|| Error::Parse(s.into()))?;
    let blocks = body
        .split('|')
        .map(|b| b.split(',').map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(s.into()))).collect())
        .collect::<Result<Vec<Vec<usize>>>>()?;
    Ok(normalize_set_partition(blocks))
}

/// Cycles of a permutation of [n] given by its 1-based images.
pub fn cycle_partition(images: &[usize]) -> SetPartition {
    let n = images.len();
    let mut seen = vec![false; n];
    let mut blocks = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut b = Vec::new();
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            b.push(i + 1);
            i = images[i] - 1;
        }
        blocks.push(b);
    }
    normalize_set_partition(blocks)
}

/// A partition π = −π of ±[n] with at most one self-opposite block.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPartition {
    pub n: usize,
    /// Nonzero blocks, both B and −B listed.
    pub blocks: Vec<Vec<i32>>,
    /// Coordinates of the zero block.
    pub zero: Vec<usize>,
}

fn block_key(b: &[i32]) -> (u32, bool) {
    let m = b.iter().min_by_key(|x| (x.unsigned_abs(), **x < 0)).expect("nonempty block");
    (m.unsigned_abs(), *m < 0)
}

impl SignedPartition {
    pub fn new(n: usize, mut blocks: Vec<Vec<i32>>, mut zero: Vec<usize>) -> Self {
        for b in blocks.iter_mut() {
            b.sort_by_key(|x| (x.unsigned_abs(), *x < 0));
        }
        blocks.sort_by_key(|b| block_key(b));
        zero.sort_unstable();
        SignedPartition { n, blocks, zero }
    }

    /// Index of the nonzero block containing x, or None for the zero block.
    pub fn block_of(&self, x: i32) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(&x))
    }

    pub fn opposite(&self, i: usize) -> usize {
        let neg: Vec<i32> = self.blocks[i].iter().map(|x| -x).collect();
        self.block_of(neg[0]).expect("π = −π")
    }

    /// Whether the blocks cover ±[n] exactly once and π = −π.
    pub fn is_valid(&self) -> bool {
        let mut seen = vec![0u8; 2 * self.n + 1];
        let mut mark = |x: i32| {
            let i = (x + self.n as i32) as usize;
            if x == 0 || x.unsigned_abs() as usize > self.n {
                return false;
            }
            seen[i] += 1;
            true
        };
        for b in &self.blocks {
            if !b.iter().all(|&x| mark(x)) {
                return false;
            }
            let neg: Vec<i32> = b.iter().map(|x| -x).collect();
            if neg.iter().any(|x| b.contains(x)) {
                return false;
            }
        }
        for &z in &self.zero {
            if !mark(z as i32) || !mark(-(z as i32)) {
                return false;
            }
        }
        seen.iter().enumerate().all(|(i, &k)| i == self.n || k == 1)
            && (0..self.blocks.len()).all(|i| {
                let neg: Vec<i32> = self.blocks[i].iter().map(|x| -x).collect();
                self.block_of(neg[0]).is_some_and(|j| {
                    let mut a = self.blocks[j].clone();
                    let mut b = neg.clone();
                    a.sort_unstable();
                    b.sort_unstable();
                    a == b
                })
            })
    }
}

fn signed(x: i32) -> String {
    if x > 0 {
        format!("+{x}")
    } else {
        x.to_string()
    }
}

impl fmt::Display for SignedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<((u32, bool), String)> = self
            .blocks
            .iter()
            .map(|b| (block_key(b), b.iter().map(|&x| signed(x)).collect::<Vec<_>>().join(",")))
            .collect();
        if let Some(&m) = self.zero.first() {
            let z: Vec<String> = self.zero.iter().map(|k| format!("±{k}")).collect();
            parts.push(((m as u32, false), format!("0:{}", z.join(","))));
        }
        parts.sort_by_key(|p| p.0);
        let inner: Vec<String> = parts.into_iter().map(|p| p.1).collect();
        write!(f, "{{{}}}", inner.join("|"))
    }
}

impl FromStr for SignedPartition {
    type Err = Error;

    /// Parses the text form; `n` is the largest coordinate mentioned.
    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse(s.to_string());
        let body = s.trim().strip_prefix('{').and_then(|t| t.strip_suffix('}')).ok_or_else(err)?;
        let mut blocks = Vec::new();
        let mut zero = Vec::new();
        for part in body.split('|').filter(|p| !p.trim().is_empty()) {
            let part = part.trim();
            if let Some(z) = part.strip_prefix("0:") {
                for t in z.split(',') {
                    let k = t.trim().trim_start_matches('±').parse::<usize>().map_err(|_| err())?;
                    zero.push(k);
                }
            } else {
                let b = part.split(',').map(|t| t.trim().parse::<i32>().map_err(|_| err())).collect::<Result<Vec<_>>>()?;
                blocks.push(b);
            }
        }
        let n = blocks.iter().flatten().map(|x| x.unsigned_abs() as usize).chain(zero.iter().copied()).max().unwrap_or(0);
        let p = SignedPartition::new(n, blocks, zero);
        if !p.is_valid() {
            return Err(err());
        }
        Ok(p)
    }
}

fn standard_basis(group: &CoxeterGroup, x: FlatId) -> Option<Vec<Vec<CycloNumber>>> {
    group.flat(x).basis.iter().map(|b| group.root_to_standard(b)).collect()
}

/// Set partition of [n+1] for a flat of A_n.
pub fn set_partition_of_flat(group: &CoxeterGroup, x: FlatId) -> Option<SetPartition> {
    if !matches!(group.label().family, Family::A(_)) {
        return None;
    }
    let basis = standard_basis(group, x)?;
    let m = group.ambient_dim();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for i in 0..m {
        match blocks.iter_mut().find(|b| basis.iter().all(|v| v[b[0] - 1] == v[i])) {
            Some(b) => b.push(i + 1),
            None => blocks.push(vec![i + 1]),
        }
    }
    Some(normalize_set_partition(blocks))
}

/// Signed partition of ±[n] for a flat of B_n or D_n.
pub fn signed_partition_of_flat(group: &CoxeterGroup, x: FlatId) -> Option<SignedPartition> {
    if !matches!(group.label().family, Family::B(_) | Family::D(_)) {
        return None;
    }
    let basis = standard_basis(group, x)?;
    let n = group.ambient_dim();
    let zero: Vec<usize> = (0..n).filter(|&i| basis.iter().all(|v| v[i].is_zero())).map(|i| i + 1).collect();
    let mut blocks: Vec<Vec<i32>> = Vec::new();
    for i in 0..n {
        if zero.contains(&(i + 1)) {
            continue;
        }
        for s in [1i32, -1] {
            let elem = s * (i as i32 + 1);
            // value of coordinate elem on v is s·v_i
            let value = |v: &Vec<CycloNumber>, e: i32| {
                let c = &v[e.unsigned_abs() as usize - 1];
                if e > 0 {
                    c.clone()
                } else {
                    -c
                }
            };
            match blocks.iter_mut().find(|b| basis.iter().all(|v| value(v, b[0]) == value(v, elem))) {
                Some(b) => b.push(elem),
                None => blocks.push(vec![elem]),
            }
        }
    }
    Some(SignedPartition::new(n, blocks, zero))
}

fn lookup_standard(group: &CoxeterGroup, vectors: Vec<Vec<BigRational>>) -> Option<FlatId> {
    let coords: Vec<Vec<CycloNumber>> = vectors.iter().map(|v| group.standard_to_root(v)).collect::<Option<_>>()?;
    group.flat_spanned_by(coords)
}

fn rat(k: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(k))
}

/// Flat of A_n where coordinates agree on blocks.
pub fn flat_of_set_partition(group: &CoxeterGroup, blocks: &[Vec<usize>]) -> Option<FlatId> {
    let m = group.ambient_dim();
    let last = blocks.last()?;
    let vectors = blocks[..blocks.len() - 1]
        .iter()
        .map(|b| {
            let mut v = vec![rat(0); m];
            for &i in b {
                v[i - 1] = rat(last.len() as i64);
            }
            for &i in last {
                v[i - 1] = rat(-(b.len() as i64));
            }
            v
        })
        .collect();
    lookup_standard(group, vectors)
}

/// Flat of B_n or D_n described by a signed partition.
pub fn flat_of_signed_partition(group: &CoxeterGroup, p: &SignedPartition) -> Option<FlatId> {
    let n = group.ambient_dim();
    let mut vectors = Vec::new();
    for (i, b) in p.blocks.iter().enumerate() {
        if p.opposite(i) < i {
            continue;
        }
        let mut v = vec![rat(0); n];
        for &x in b {
            v[x.unsigned_abs() as usize - 1] = rat(x.signum() as i64);
        }
        vectors.push(v);
    }
    lookup_standard(group, vectors)
}
