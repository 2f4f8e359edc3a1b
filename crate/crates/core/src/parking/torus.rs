//! W acting on the finite torus Q/pQ of the root lattice.

use std::collections::{BTreeMap, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::flats::FlatId;
use crate::group::{CoxeterGroup, Elem, Family};

#[derive(Clone, Debug, Serialize)]
pub struct TorusOrbit {
    /// Smallest point of the orbit, in simple-root coordinates mod p.
    pub rep: Vec<u32>,
    pub size: usize,
    pub stabilizer_order: usize,
    /// Whether the stabilizer is the parabolic subgroup W_X of its fixed flat X.
    pub parabolic: bool,
    /// W-orbit of X when the stabilizer is parabolic.
    pub flat_orbit: Option<FlatId>,
    /// dim X, i.e. n − rank of the stabilizer.
    pub fixed_dim: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TorusReport {
    pub group: String,
    pub p: u64,
    pub points: u64,
    pub orbits: Vec<TorusOrbit>,
    /// (1/|W|) Σ_w p^{dim V^w}
    pub burnside: String,
    pub burnside_matches: bool,
    pub coprime_to_h: bool,
}

impl TorusReport {
    /// Multiset of stabilizer conjugacy types, keyed by flat orbit.
    pub fn stabilizer_census(&self) -> Option<BTreeMap<FlatId, usize>> {
        let mut out = BTreeMap::new();
        for o in &self.orbits {
            *out.entry(o.flat_orbit?).or_insert(0) += 1;
        }
        Some(out)
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.orbits.iter().map(|o| o.size).collect();
        s.sort_unstable();
        s
    }
}

fn integer_matrix(group: &CoxeterGroup, w: Elem) -> Result<Vec<Vec<i64>>> {
    let m = group.matrix(w);
    let n = group.rank();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    m.get(i, j)
                        .to_integer()
                        .and_then(|k| k.to_i64())
                        .ok_or_else(|| Error::NotCrystallographic("integer action on the root lattice".into()))
                })
                .collect()
        })
        .collect()
}

fn apply(m: &[Vec<i64>], x: &[u32], p: i64) -> Vec<u32> {
    m.iter()
        .map(|row| row.iter().zip(x).map(|(a, &b)| a * b as i64).sum::<i64>().rem_euclid(p) as u32)
        .collect()
}

fn encode(x: &[u32], p: u64) -> usize {
    x.iter().rev().fold(0usize, |acc, &c| acc * p as usize + c as usize)
}

fn decode(mut k: usize, n: usize, p: u64) -> Vec<u32> {
    (0..n)
        .map(|_| {
            let c = (k % p as usize) as u32;
            k /= p as usize;
            c
        })
        .collect()
}

const MAX_POINTS: u64 = 5_000_000;

pub fn torus_orbits(group: &CoxeterGroup, p: u64) -> Result<TorusReport> {
    if !group.is_crystallographic() {
        return Err(Error::NotCrystallographic(format!("finite torus of {}", group.label())));
    }
    if p == 0 {
        return Err(Error::Invalid("p must be positive".into()));
    }
    let n = group.rank();
    let points = p.checked_pow(n as u32).filter(|&k| k <= MAX_POINTS).ok_or_else(|| {
        Error::Capability(format!("{p}^{n} torus points"))
    })?;
    let mats: Vec<Vec<Vec<i64>>> =
        group.elements().collect::<Vec<_>>().par_iter().map(|&w| integer_matrix(group, w)).collect::<Result<_>>()?;
    let gens: Vec<&Vec<Vec<i64>>> = group.simple_reflections().iter().map(|&s| &mats[s as usize]).collect();

    let mut orbit_of = vec![u32::MAX; points as usize];
    let mut reps = Vec::new();
    let mut sizes = Vec::new();
    for start in 0..points as usize {
        if orbit_of[start] != u32::MAX {
            continue;
        }
        let id = reps.len() as u32;
        orbit_of[start] = id;
        let mut queue = VecDeque::from([start]);
        let mut size = 0;
        while let Some(k) = queue.pop_front() {
            size += 1;
            let x = decode(k, n, p);
            for m in &gens {
                let y = encode(&apply(m, &x, p as i64), p);
                if orbit_of[y] == u32::MAX {
                    orbit_of[y] = id;
                    queue.push_back(y);
                }
            }
        }
        reps.push(decode(start, n, p));
        sizes.push(size);
    }

    let orbits: Vec<TorusOrbit> = reps
        .par_iter()
        .zip(sizes.par_iter())
        .map(|(x, &size)| {
            let stab: Vec<Elem> = group.elements().filter(|&w| apply(&mats[w as usize], x, p as i64) == *x).collect();
            let roots: Vec<usize> = group
                .reflections()
                .iter()
                .enumerate()
                .filter(|(_, t)| stab.binary_search(t).is_ok())
                .map(|(r, _)| r)
                .collect();
            let flat = group.flat_orthogonal_to(&roots);
            let parabolic = flat.is_some_and(|f| group.stabilizer(f).members() == stab.as_slice());
            TorusOrbit {
                rep: x.clone(),
                size,
                stabilizer_order: stab.len(),
                parabolic,
                flat_orbit: flat.filter(|_| parabolic).map(|f| group.flat_orbit(f)),
                fixed_dim: flat.filter(|_| parabolic).map(|f| group.flat(f).dim()),
            }
        })
        .collect();

    let burnside = burnside_count(group, p);
    let burnside_matches = burnside == BigRational::from_integer(BigInt::from(orbits.len()));
    Ok(TorusReport {
        group: group.label().to_string(),
        p,
        points,
        orbits,
        burnside: crate::algebra::cyclo::rational_string(&burnside),
        burnside_matches,
        coprime_to_h: num_integer::gcd(p, group.coxeter_number() as u64) == 1,
    })
}

/// (1/|W|) Σ_w p^{dim V^w}.
pub fn burnside_count(group: &CoxeterGroup, p: u64) -> BigRational {
    let c = group.classes();
    let total: BigInt = (0..c.reps.len())
        .map(|i| BigInt::from(c.sizes[i]) * BigInt::from(p).pow(group.flat(group.fixed_space(c.reps[i])).dim() as u32))
        .sum();
    BigRational::new(total, BigInt::from(group.order()))
}

/// Orbit sizes of S_m on (Z/p)^m modulo the diagonal, for A_{m-1}.
pub fn type_a_quotient_orbit_sizes(group: &CoxeterGroup, p: u64) -> Result<Vec<usize>> {
    let Family::A(r) = group.label().family else {
        return Err(Error::Invalid("the quotient model is for type A".into()));
    };
    let m = r + 1;
    // canonical point: shift so that the last coordinate is 0
    let total = p.pow(r as u32) as usize;
    let canon = |x: &[u32]| -> usize {
        let s = x[m - 1];
        let y: Vec<u32> = x[..m - 1].iter().map(|&c| (c + p as u32 - s) % p as u32).collect();
        encode(&y, p)
    };
    let perms: Vec<Vec<i16>> = group.elements().map(|w| group.signed_perm(w).expect("type A").to_vec()).collect();
    let mut seen = vec![false; total];
    let mut sizes = Vec::new();
    for k in 0..total {
        if seen[k] {
            continue;
        }
        let mut x = decode(k, r, p);
        x.push(0);
        let mut orbit = std::collections::BTreeSet::new();
        for sp in &perms {
            let mut y = vec![0u32; m];
            for i in 0..m {
                y[sp[i] as usize - 1] = x[i];
            }
            orbit.insert(canon(&y));
        }
        for &o in &orbit {
            seen[o] = true;
        }
        sizes.push(orbit.len());
    }
    sizes.sort_unstable();
    Ok(sizes)
}
