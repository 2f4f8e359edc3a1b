//! Flats of the reflection arrangement, noncrossing and nonnesting
//! partitions, and set-partition encodings.

mod nc;
mod nn;
pub mod partition;
mod plane;

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::algebra::CycloNumber;
use crate::group::Elem;
use crate::util::{fast_map, BitSet, FastMap};

pub use nc::NoncrossingSet;
pub use nn::{Antichain, RootPoset};
pub use plane::{coxeter_plane, CoxeterPlane};

pub type FlatId = u32;

/// A subspace of V stored by its canonical reduced-echelon basis.
#[derive(Debug)]
pub struct Flat {
    pub basis: Vec<Vec<CycloNumber>>,
    witness: Elem,
    orbit: FlatId,
    stabilizer: OnceLock<Stabilizer>,
}

impl Flat {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Some element w with V^w equal to this flat.
    pub fn witness(&self) -> Elem {
        self.witness
    }

    /// Id of the canonical flat in the W-orbit.
    pub fn orbit(&self) -> FlatId {
        self.orbit
    }

    pub(crate) fn stabilizer_cell(&self) -> &OnceLock<Stabilizer> {
        &self.stabilizer
    }
}

/// Pointwise stabilizer W_X as a sorted list plus a membership bitset.
#[derive(Clone, Debug)]
pub struct Stabilizer {
    members: Vec<Elem>,
    bits: BitSet,
}

impl Stabilizer {
    pub fn new(mut members: Vec<Elem>, order: usize) -> Self {
        members.sort_unstable();
        let mut bits = BitSet::new(order);
        for &m in &members {
            bits.insert(m as usize);
        }
        Stabilizer { members, bits }
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn contains(&self, w: Elem) -> bool {
        self.bits.contains(w as usize)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Interned flats of the form V^w.
#[derive(Default, Debug)]
pub struct FlatTable {
    flats: Vec<Flat>,
    index: FastMap<Vec<Vec<CycloNumber>>, FlatId>,
}

impl FlatTable {
    pub(crate) fn intern(&mut self, basis: Vec<Vec<CycloNumber>>, witness: Elem) -> FlatId {
        if let Some(&id) = self.index.get(&basis) {
            return id;
        }
        let id = self.flats.len() as FlatId;
        self.index.insert(basis.clone(), id);
        self.flats.push(Flat { basis, witness, orbit: id, stabilizer: OnceLock::new() });
        id
    }

    pub(crate) fn set_orbit(&mut self, id: FlatId, orbit: FlatId) {
        self.flats[id as usize].orbit = orbit;
    }

    pub fn lookup(&self, basis: &[Vec<CycloNumber>]) -> Option<FlatId> {
        self.index.get(basis).copied()
    }

    pub fn get(&self, id: FlatId) -> &Flat {
        &self.flats[id as usize]
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn ids(&self) -> impl Iterator<Item = FlatId> {
        0..self.flats.len() as FlatId
    }
}

/// Flats grouped by W-orbit: orbit id to multiplicity.
pub fn orbit_census(group: &crate::group::CoxeterGroup, flats: &[FlatId]) -> BTreeMap<FlatId, usize> {
    let mut out = BTreeMap::new();
    for &x in flats {
        *out.entry(group.flat_orbit(x)).or_insert(0) += 1;
    }
    out
}

/// Position of each flat id inside a list.
pub(crate) fn position_map(flats: &[FlatId]) -> FastMap<FlatId, usize> {
    let mut m = fast_map();
    for (i, &x) in flats.iter().enumerate() {
        m.insert(x, i);
    }
    m
}
