//! Regions of the Shi arrangement {⟨v, α⟩ = 0, 1 : α ∈ Φ⁺} and their
//! labelling by nonnesting parking classes.
//!
//! A point v is recorded by y_i = ⟨v, α_i⟩, so ⟨v, α⟩ = Σ c_i y_i for a root
//! α = Σ c_i α_i and every hyperplane has an integer equation.

pub mod lp;

use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::flats::{FlatId, RootPoset};
use crate::group::{CoxeterGroup, Elem};
use crate::parking::{ParkClass, ParkingSpace};
use lp::{feasible, strict_witness, Strict};

/// Position of ⟨v, α⟩ relative to 0 and 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Side {
    Negative,
    Between,
    Above,
}

#[derive(Clone, Debug)]
pub struct ShiRegion {
    /// One entry per positive root.
    pub signs: Vec<Side>,
    pub witness: Vec<BigRational>,
    /// R ⊆ wC.
    pub chamber: Elem,
    /// Positive roots α with H_{α,1} a ceiling.
    pub ceilings: Vec<usize>,
}

/// A region for output: roots in simple-root coordinates, rationals as
/// "p/q", and λ(R) = [w, X] given by a word for the least coset
/// representative and the antichain cutting out X.
#[derive(Clone, Debug, Serialize)]
pub struct RegionRecord {
    pub signs: Vec<Side>,
    pub witness: Vec<String>,
    pub chamber_word: Vec<usize>,
    pub ceilings: Vec<Vec<i64>>,
    pub antichain: Vec<Vec<i64>>,
    pub label_word: Vec<usize>,
}

/// The root data needed for the geometry, with integer coordinates.
pub struct ShiData<'g> {
    group: &'g CoxeterGroup,
    /// Simple-root coordinates of every root, positive ones first.
    roots: Vec<Vec<i64>>,
    simple: Vec<usize>,
}

impl<'g> ShiData<'g> {
    pub fn new(group: &'g CoxeterGroup) -> Result<Self> {
        if !group.is_crystallographic() {
            return Err(Error::NotCrystallographic(format!("Shi arrangement of {}", group.label())));
        }
        if group.rank() > 3 {
            return Err(Error::Unsupported {
                label: group.label().to_string(),
                reason: "Shi regions are enumerated in rank at most 3".into(),
            });
        }
        let roots = group
            .roots()
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| x.to_integer().and_then(|k| i64::try_from(k).ok()))
                    .collect::<Option<Vec<i64>>>()
                    .ok_or_else(|| Error::Verification("non-integral root".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let n = group.rank();
        let simple = (0..n)
            .map(|i| {
                roots
                    .iter()
                    .position(|r| r.iter().enumerate().all(|(j, &c)| c == (i == j) as i64))
                    .ok_or_else(|| Error::Verification("simple root missing".into()))
            })
            .collect::<Result<_>>()?;
        Ok(ShiData { group, roots, simple })
    }

    pub fn root_coords(&self, r: usize) -> &[i64] {
        &self.roots[r]
    }

    pub fn group(&self) -> &'g CoxeterGroup {
        self.group
    }

    fn npos(&self) -> usize {
        self.group.num_positive_roots()
    }

    fn rank(&self) -> usize {
        self.group.rank()
    }

    /// ⟨v, α⟩ < k or ⟨v, α⟩ > k.
    fn half(&self, r: usize, k: i64, below: bool) -> Strict {
        let s = Strict::new(self.roots[r].clone(), k);
        if below {
            s
        } else {
            s.flipped()
        }
    }

    fn system(&self, signs: &[Side]) -> Vec<Strict> {
        let mut out = Vec::new();
        for (r, s) in signs.iter().enumerate() {
            match s {
                Side::Negative => out.push(self.half(r, 0, true)),
                Side::Between => {
                    out.push(self.half(r, 0, false));
                    out.push(self.half(r, 1, true));
                }
                Side::Above => out.push(self.half(r, 1, false)),
            }
        }
        out
    }

    /// The open chamber wC: ⟨v, w(α_i)⟩ > 0 for every simple α_i.
    pub fn chamber_system(&self, w: Elem) -> Vec<Strict> {
        self.simple.iter().map(|&s| self.half(self.group.act_on_root(w, s), 0, false)).collect()
    }

    fn pairing(&self, r: usize, y: &[BigRational]) -> BigRational {
        lp::dot(&self.roots[r], y)
    }

    fn chamber_of(&self, y: &[BigRational]) -> Option<Elem> {
        let npos = self.npos();
        self.group.elements().find(|&w| (0..npos).all(|a| self.pairing(self.group.act_on_root(w, a), y).is_positive()))
    }

    fn ceilings(&self, signs: &[Side]) -> Vec<usize> {
        let sys = self.system(signs);
        (0..signs.len())
            .filter(|&r| signs[r] == Side::Between)
            .filter(|&r| {
                let upper = self.half(r, 1, true);
                let mut relaxed: Vec<Strict> = sys.iter().filter(|s| **s != upper).cloned().collect();
                relaxed.push(self.half(r, 1, false));
                feasible(&relaxed, self.rank())
            })
            .collect()
    }

    fn finish(&self, signs: Vec<Side>) -> Result<ShiRegion> {
        let witness = strict_witness(&self.system(&signs), self.rank())
            .ok_or_else(|| Error::Verification("empty Shi region".into()))?;
        let chamber = self.chamber_of(&witness).ok_or_else(|| Error::Verification("witness on a wall".into()))?;
        let ceilings = self.ceilings(&signs);
        Ok(ShiRegion { signs, witness, chamber, ceilings })
    }

    /// All regions, built by inserting the hyperplanes H_{α,0} and then
    /// H_{α,1} one at a time and splitting every region they cut.
    pub fn regions(&self) -> Result<Vec<ShiRegion>> {
        let npos = self.npos();
        let dim = self.rank();
        // partial regions: the inequalities so far and a witness
        let mut parts: Vec<(Vec<Strict>, Vec<BigRational>)> = vec![(Vec::new(), vec![BigRational::zero(); dim])];
        for k in [0i64, 1] {
            for r in 0..npos {
                let mut next = Vec::with_capacity(parts.len() * 2);
                for (sys, y) in parts {
                    for below in [true, false] {
                        let h = self.half(r, k, below);
                        if h.holds_at(&y) {
                            let mut s = sys.clone();
                            s.push(h);
                            next.push((s, y.clone()));
                            continue;
                        }
                        let mut s = sys.clone();
                        s.push(h);
                        if let Some(w) = strict_witness(&s, dim) {
                            next.push((s, w));
                        }
                    }
                }
                parts = next;
            }
        }
        let mut regions: Vec<ShiRegion> = parts
            .into_par_iter()
            .map(|(_, y)| {
                let signs = (0..npos)
                    .map(|r| {
                        let p = self.pairing(r, &y);
                        if p.is_negative() {
                            Side::Negative
                        } else if p < BigRational::from_integer(1.into()) {
                            Side::Between
                        } else {
                            Side::Above
                        }
                    })
                    .collect();
                self.finish(signs)
            })
            .collect::<Result<_>>()?;
        regions.sort_by(|a, b| a.signs.cmp(&b.signs));
        Ok(regions)
    }

    /// A reduced word for w in the simple reflections, 1-based.
    pub fn reduced_word(&self, mut w: Elem) -> Vec<usize> {
        let g = self.group;
        let mut word = Vec::new();
        while let Some(i) = (0..self.rank()).find(|&i| g.act_on_root(w, self.simple[i]) >= self.npos()) {
            word.push(i + 1);
            w = g.mul(w, g.simple_reflections()[i]);
        }
        word.reverse();
        word
    }

    pub fn record(&self, park: &ParkingSpace<'_>, region: &ShiRegion) -> Result<RegionRecord> {
        let label = self.label(park, region)?;
        Ok(RegionRecord {
            signs: region.signs.clone(),
            witness: region.witness.iter().map(|x| x.to_string()).collect(),
            chamber_word: self.reduced_word(region.chamber),
            ceilings: region.ceilings.iter().map(|&r| self.roots[r].clone()).collect(),
            antichain: self.antichain_of(region).iter().map(|&r| self.roots[r].clone()).collect(),
            label_word: self.reduced_word(label.rep),
        })
    }

    /// A = w⁻¹(ceiling roots).
    pub fn antichain_of(&self, region: &ShiRegion) -> Vec<usize> {
        let winv = self.group.inv(region.chamber);
        let mut a: Vec<usize> = region.ceilings.iter().map(|&r| self.group.act_on_root(winv, r)).collect();
        a.sort_unstable();
        a
    }

    /// λ(R) = [w, ∩_{α ∈ A} H_α].
    pub fn label(&self, park: &ParkingSpace<'_>, region: &ShiRegion) -> Result<ParkClass> {
        let a = self.antichain_of(region);
        let x = self.flat_of(&a)?;
        Ok(park.canonical(region.chamber, x))
    }

    fn flat_of(&self, roots: &[usize]) -> Result<FlatId> {
        self.group.flat_orthogonal_to(roots).ok_or_else(|| Error::Verification("ceiling roots do not cut out a flat".into()))
    }

    /// μ([w, X]): take the representative with w(α) > 0 on the roots of W_X
    /// and the antichain A of X; the region is the part of wC under every
    /// H_{w(α),1}, α ∈ A, lying above every other H_{β,1} it can.
    pub fn unlabel(&self, poset: &RootPoset, antichains: &BTreeMap<FlatId, Vec<usize>>, pc: &ParkClass) -> Result<Vec<Side>> {
        let g = self.group;
        let npos = self.npos();
        let a = antichains.get(&pc.flat).ok_or_else(|| Error::Invalid("flat is not nonnesting".into()))?;
        debug_assert!(poset.is_antichain(a));
        let stab = g.stabilizer(pc.flat);
        // α ⊥ X exactly when the reflection s_α lies in W_X
        let fixes = |r: usize| stab.members().iter().any(|&s| g.reflection_length(s) == 1 && g.act_on_root(s, r) == r + npos);
        let w = stab
            .members()
            .iter()
            .map(|&s| g.mul(pc.rep, s))
            .find(|&w| (0..npos).filter(|&r| fixes(r)).all(|r| g.act_on_root(w, r) < npos))
            .ok_or_else(|| Error::Verification("no positive coset representative".into()))?;
        let mut base = self.chamber_system(w);
        for &r in a {
            base.push(self.half(g.act_on_root(w, r), 1, true));
        }
        let winv = g.inv(w);
        (0..npos)
            .map(|r| {
                if g.act_on_root(winv, r) >= npos {
                    return Ok(Side::Negative);
                }
                let mut s = base.clone();
                s.push(self.half(r, 1, false));
                Ok(if feasible(&s, self.rank()) { Side::Above } else { Side::Between })
            })
            .collect()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ShiReport {
    pub group: String,
    pub regions: usize,
    pub expected: u64,
    pub labels_distinct: bool,
    pub labels_are_park_nn: bool,
    pub inverse_ok: bool,
    pub antichains_ok: bool,
    /// |A| = codim X for every region
    pub simple_systems_ok: bool,
    pub shi_cox_ok: bool,
    pub ok: bool,
}

/// Enumerates the regions and checks λ, μ and the facts used along the way.
pub fn verify_shi(group: &CoxeterGroup) -> Result<ShiReport> {
    let data = ShiData::new(group)?;
    let regions = data.regions()?;
    let park = ParkingSpace::nonnesting(group)?;
    let poset = RootPoset::new(group)?;
    let antichains: BTreeMap<FlatId, Vec<usize>> =
        poset.nonnesting(group)?.into_iter().map(|a| (a.flat, a.roots)).collect();
    let rows: Vec<(ParkClass, bool, bool, bool)> = regions
        .par_iter()
        .map(|r| {
            let a = data.antichain_of(r);
            let label = data.label(&park, r)?;
            let positive = a.iter().all(|&x| x < group.num_positive_roots());
            let codim = group.rank() - group.flat(label.flat).dim();
            let back = data.unlabel(&poset, &antichains, &label)?;
            Ok((label, positive && poset.is_antichain(&a), positive && a.len() == codim, back == r.signs))
        })
        .collect::<Result<_>>()?;
    let labels: BTreeSet<ParkClass> = rows.iter().map(|r| r.0).collect();
    let classes: BTreeSet<ParkClass> = park.classes().iter().copied().collect();
    let expected = (group.coxeter_number() as u64 + 1).pow(group.rank() as u32);
    let shi_cox_ok = verify_shi_cox(&data);
    let report = ShiReport {
        group: group.label().to_string(),
        regions: regions.len(),
        expected,
        labels_distinct: labels.len() == regions.len(),
        labels_are_park_nn: labels == classes,
        inverse_ok: rows.iter().all(|r| r.3),
        antichains_ok: rows.iter().all(|r| r.1),
        simple_systems_ok: rows.iter().all(|r| r.2),
        shi_cox_ok,
        ok: false,
    };
    let ok = report.regions as u64 == expected
        && report.labels_distinct
        && report.labels_are_park_nn
        && report.inverse_ok
        && report.antichains_ok
        && report.simple_systems_ok
        && report.shi_cox_ok;
    Ok(ShiReport { ok, ..report })
}

/// H_{β,1} meets wC exactly when w⁻¹(β) is positive, for every w and β.
pub fn verify_shi_cox(data: &ShiData<'_>) -> bool {
    let g = data.group();
    let npos = data.npos();
    g.elements().all(|w| {
        let chamber = data.chamber_system(w);
        let winv = g.inv(w);
        (0..npos).all(|b| {
            let meets = [true, false].iter().all(|&below| {
                let mut s = chamber.clone();
                s.push(data.half(b, 1, below));
                feasible(&s, data.rank())
            });
            meets == (g.act_on_root(winv, b) < npos)
        })
    })
}

#[cfg(test)]
mod tests;
