//! Noncrossing and nonnesting parking spaces, their characters, and the
//! finite torus Q/pQ.

mod torus;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::matrix::det_one_plus_t_m;
use crate::algebra::CycloNumber;
use crate::error::{Error, Result};
use crate::flats::partition::set_partition_of_flat;
use crate::flats::{FlatId, NoncrossingSet, RootPoset};
use crate::group::{CoxeterGroup, Elem, Family};
use crate::util::{fast_map, BitSet, FastMap};

pub use torus::{burnside_count, torus_orbits, type_a_quotient_orbit_sizes, TorusOrbit, TorusReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Variant {
    Noncrossing,
    Nonnesting,
}

/// [w, X] with w the least element index of its coset wW_X.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParkClass {
    pub rep: Elem,
    pub flat: FlatId,
}

pub struct ParkingSpace<'g> {
    group: &'g CoxeterGroup,
    variant: Variant,
    flats: Vec<FlatId>,
    flat_pos: FastMap<FlatId, usize>,
    reps: Vec<Vec<Elem>>,
    classes: Vec<ParkClass>,
    index: FastMap<ParkClass, u32>,
}

impl<'g> ParkingSpace<'g> {
    pub fn noncrossing(group: &'g CoxeterGroup) -> Self {
        let nc = NoncrossingSet::new(group);
        Self::from_flats(group, Variant::Noncrossing, nc.flats().to_vec())
    }

    pub fn nonnesting(group: &'g CoxeterGroup) -> Result<Self> {
        let poset = RootPoset::new(group)?;
        let flats = poset.nonnesting(group)?.into_iter().map(|a| a.flat).collect();
        Ok(Self::from_flats(group, Variant::Nonnesting, flats))
    }

    pub fn build(group: &'g CoxeterGroup, variant: Variant) -> Result<Self> {
        match variant {
            Variant::Noncrossing => Ok(Self::noncrossing(group)),
            Variant::Nonnesting => Self::nonnesting(group),
        }
    }

    fn from_flats(group: &'g CoxeterGroup, variant: Variant, flats: Vec<FlatId>) -> Self {
        let order = group.order();
        let reps: Vec<Vec<Elem>> = flats
            .par_iter()
            .map(|&x| {
                let stab = group.stabilizer(x);
                let mut seen = BitSet::new(order);
                let mut out = Vec::new();
                for w in group.elements() {
                    if seen.contains(w as usize) {
                        continue;
                    }
                    out.push(w);
                    for &s in stab.members() {
                        seen.insert(group.mul(w, s) as usize);
                    }
                }
                out
            })
            .collect();
        let mut classes = Vec::new();
        for (i, rs) in reps.iter().enumerate() {
            classes.extend(rs.iter().map(|&rep| ParkClass { rep, flat: flats[i] }));
        }
        let mut index = fast_map();
        for (i, c) in classes.iter().enumerate() {
            index.insert(*c, i as u32);
        }
        let flat_pos = crate::flats::position_map(&flats);
        ParkingSpace { group, variant, flats, flat_pos, reps, classes, index }
    }

    pub fn group(&self) -> &'g CoxeterGroup {
        self.group
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn flats(&self) -> &[FlatId] {
        &self.flats
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[ParkClass] {
        &self.classes
    }

    /// Coset representatives for the flat at position i.
    pub fn coset_reps(&self, i: usize) -> &[Elem] {
        &self.reps[i]
    }

    /// Number of W-orbits, one per flat.
    pub fn num_w_orbits(&self) -> usize {
        self.flats.len()
    }

    pub fn contains_flat(&self, x: FlatId) -> bool {
        self.flat_pos.contains_key(&x)
    }

    /// The class [w, X] for any w.
    pub fn canonical(&self, w: Elem, x: FlatId) -> ParkClass {
        let stab = self.group.stabilizer(x);
        let rep = stab.members().iter().map(|&s| self.group.mul(w, s)).min().expect("identity in W_X");
        ParkClass { rep, flat: x }
    }

    pub fn index_of(&self, pc: &ParkClass) -> Option<usize> {
        self.index.get(pc).map(|&i| i as usize)
    }

    /// (v, c^d)·[w, X] = [v w c^{-d}, c^d X].
    pub fn act(&self, v: Elem, d: i64, pc: &ParkClass) -> ParkClass {
        let g = self.group;
        let cd = g.coxeter_power(d);
        let w = g.mul(g.mul(v, pc.rep), g.inv(cd));
        self.canonical(w, g.flat_image(cd, pc.flat))
    }

    /// Number of classes fixed by (u, c^d).
    pub fn fixed_count(&self, u: Elem, d: i64) -> u64 {
        let g = self.group;
        let cd = g.coxeter_power(d);
        let cinv = g.inv(cd);
        let mut total = 0u64;
        for (i, &x) in self.flats.iter().enumerate() {
            if g.flat_image(cd, x) != x {
                continue;
            }
            let stab = g.stabilizer(x);
            total += self.reps[i]
                .iter()
                .filter(|&&w| stab.contains(g.mul(g.conjugate(g.inv(w), u), cinv)))
                .count() as u64;
        }
        total
    }

    /// Stabilizer of a class inside W × C, as (v, d) pairs.
    pub fn stabilizer_of(&self, pc: &ParkClass) -> Vec<(Elem, u32)> {
        let g = self.group;
        let mut out = Vec::new();
        for d in 0..g.coxeter_number() {
            for v in g.elements() {
                if self.act(v, d as i64, pc) == *pc {
                    out.push((v, d));
                }
            }
        }
        out
    }
}

/// (h+1)^{mult_u(ω^d)}.
pub fn park_alg_character(group: &CoxeterGroup, u: Elem, d: i64) -> u64 {
    (group.coxeter_number() as u64 + 1).pow(group.mult_eigen(u, d) as u32)
}

pub fn park_nc_character(park: &ParkingSpace<'_>, u: Elem, d: i64) -> u64 {
    park.fixed_count(u, d)
}

#[derive(Clone, Debug, Serialize)]
pub struct CharacterPair {
    pub class_rep: Elem,
    pub class_size: u64,
    pub d: u32,
    pub chi_nc: u64,
    pub chi_alg: u64,
    pub equal: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct WeakConjectureReport {
    pub group: String,
    pub pairs: Vec<CharacterPair>,
    pub all_equal: bool,
}

/// Compare the two W × C characters on every (class, d).
pub fn verify_weak_conjecture(group: &CoxeterGroup) -> WeakConjectureReport {
    let park = ParkingSpace::noncrossing(group);
    let classes = group.classes();
    let h = group.coxeter_number();
    let jobs: Vec<(usize, u32)> = (0..classes.reps.len()).flat_map(|i| (0..h).map(move |d| (i, d))).collect();
    let pairs: Vec<CharacterPair> = jobs
        .par_iter()
        .map(|&(i, d)| {
            let u = classes.reps[i];
            let chi_nc = park.fixed_count(u, d as i64);
            let chi_alg = park_alg_character(group, u, d as i64);
            CharacterPair { class_rep: u, class_size: classes.sizes[i], d, chi_nc, chi_alg, equal: chi_nc == chi_alg }
        })
        .collect();
    let all_equal = pairs.iter().all(|p| p.equal);
    WeakConjectureReport { group: group.label().to_string(), pairs, all_equal }
}

/// ⟨χ_{∧^k V}, χ_Park⟩_W for k = 0..n, using the W-character (d = 0).
pub fn exterior_multiplicities(park: &ParkingSpace<'_>) -> Result<Vec<BigInt>> {
    let g = park.group();
    let classes = g.classes();
    let n = g.rank();
    let terms: Vec<(Vec<CycloNumber>, u64, u64)> = (0..classes.reps.len())
        .into_par_iter()
        .map(|i| {
            let u = classes.reps[i];
            let ext = det_one_plus_t_m(&g.matrix(u));
            ((0..=n).map(|k| ext.coeff(k)).collect(), classes.sizes[i], park.fixed_count(u, 0))
        })
        .collect();
    (0..=n)
        .map(|k| {
            let mut acc = CycloNumber::zero();
            for (ext, size, chi) in &terms {
                acc = &acc + &ext[k].scale(&BigRational::from_integer(BigInt::from(size * chi)));
            }
            let avg = acc.scale(&BigRational::new(BigInt::one(), BigInt::from(g.order())));
            avg.to_integer().ok_or_else(|| Error::NonIntegral(format!("⟨∧^{k} V, Park⟩ = {avg}")))
        })
        .collect()
}

/// One partition λ per W-orbit of Park(A_{n-1}): the block sizes of its flat.
pub fn frobenius_characteristic(park: &ParkingSpace<'_>) -> Result<BTreeMap<Vec<usize>, usize>> {
    let g = park.group();
    if !matches!(g.label().family, Family::A(_)) {
        return Err(Error::Invalid("Frobenius characteristic is only defined in type A".into()));
    }
    let mut out = BTreeMap::new();
    for &x in park.flats() {
        let blocks = set_partition_of_flat(g, x).expect("type A flat");
        let mut lambda: Vec<usize> = blocks.iter().map(|b| b.len()).collect();
        lambda.sort_unstable_by(|a, b| b.cmp(a));
        *out.entry(lambda).or_insert(0) += 1;
    }
    Ok(out)
}

/// Σ_u χ(u) over all of W for a class function given on representatives.
pub fn class_sum(group: &CoxeterGroup, f: impl Fn(Elem) -> u64 + Sync) -> u64 {
    let c = group.classes();
    (0..c.reps.len()).into_par_iter().map(|i| c.sizes[i] * f(c.reps[i])).sum()
}

/// (h+1)^n as u64.
pub fn expected_size(group: &CoxeterGroup) -> u64 {
    (group.coxeter_number() as u64 + 1).pow(group.rank() as u32)
}

#[cfg(test)]
mod tests;
