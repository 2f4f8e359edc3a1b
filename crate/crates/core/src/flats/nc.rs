//! Noncrossing partitions NC(W) = [1, c]_T.

use std::collections::BTreeSet;

use super::FlatId;
use crate::group::{CoxeterGroup, Elem};
use crate::util::FastMap;

pub struct NoncrossingSet {
    elements: Vec<Elem>,
    flats: Vec<FlatId>,
    position: FastMap<FlatId, usize>,
    /// Index of c·w·c⁻¹ for each w.
    rotate: Vec<usize>,
}

impl NoncrossingSet {
    pub fn new(group: &CoxeterGroup) -> Self {
        let n = group.rank();
        let c = group.coxeter_element();
        let elements: Vec<Elem> = group
            .elements()
            .filter(|&w| group.reflection_length(w) + group.reflection_length(group.mul(group.inv(w), c)) == n)
            .collect();
        let flats: Vec<FlatId> = elements.iter().map(|&w| group.fixed_space(w)).collect();
        let position = super::position_map(&flats);
        let by_elem: FastMap<Elem, usize> = elements.iter().enumerate().map(|(i, &w)| (w, i)).collect();
        let rotate = elements.iter().map(|&w| by_elem[&group.conjugate(c, w)]).collect();
        NoncrossingSet { elements, flats, position, rotate }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn flats(&self) -> &[FlatId] {
        &self.flats
    }

    /// Index of the noncrossing element whose fixed space is `x`.
    pub fn position(&self, x: FlatId) -> Option<usize> {
        self.position.get(&x).copied()
    }

    pub fn contains_flat(&self, x: FlatId) -> bool {
        self.position.contains_key(&x)
    }

    /// Index of c^d w c^{-d} where w is the i-th element.
    pub fn rotate(&self, i: usize, d: i64, h: u32) -> usize {
        (0..d.rem_euclid(h as i64)).fold(i, |j, _| self.rotate[j])
    }

    /// Number of flats X with c^d X = X.
    pub fn fixed_by_rotation(&self, d: i64, h: u32) -> usize {
        (0..self.len()).filter(|&i| self.rotate(i, d, h) == i).count()
    }

    /// Injectivity of w ↦ V^w on NC.
    pub fn embedding_is_injective(&self) -> bool {
        self.position.len() == self.elements.len()
    }

    /// Indices of one-dimensional noncrossing flats.
    pub fn lines(&self, group: &CoxeterGroup) -> Vec<usize> {
        (0..self.len()).filter(|&i| group.flat(self.flats[i]).dim() == 1).collect()
    }

    /// Graded by ℓ_T with bottom 1 and top c, and conjugation by c is a
    /// poset automorphism.
    pub fn check_poset(&self, group: &CoxeterGroup) -> bool {
        let c = group.coxeter_element();
        let below = |u: Elem, v: Elem| {
            group.reflection_length(v) == group.reflection_length(u) + group.reflection_length(group.mul(group.inv(u), v))
        };
        if !self.elements.contains(&group.identity()) || !self.elements.contains(&c) {
            return false;
        }
        if !self.elements.iter().all(|&w| below(group.identity(), w) && below(w, c)) {
            return false;
        }
        let m = self.len();
        (0..m).all(|i| {
            (0..m).all(|j| {
                let (u, v) = (self.elements[i], self.elements[j]);
                let (cu, cv) = (self.elements[self.rotate[i]], self.elements[self.rotate[j]]);
                below(u, v) == below(cu, cv)
            })
        })
    }

    /// Every fixed space V^w is a W-translate of a noncrossing flat.
    pub fn check_conjugate_to_noncrossing(&self, group: &CoxeterGroup) -> bool {
        let nc_orbits: BTreeSet<FlatId> = self.flats.iter().map(|&x| group.flat_orbit(x)).collect();
        group.flats().ids().all(|x| nc_orbits.contains(&group.flat_orbit(x)))
    }

    /// For each noncrossing line X the noncrossing lines in W·X form C·X.
    pub fn check_w_c_orbits(&self, group: &CoxeterGroup) -> bool {
        let h = group.coxeter_number();
        let lines = self.lines(group);
        lines.iter().all(|&i| {
            let x = self.flats[i];
            let same_w: BTreeSet<usize> =
                lines.iter().copied().filter(|&j| group.flat_orbit(self.flats[j]) == group.flat_orbit(x)).collect();
            let c_orbit: BTreeSet<usize> = (0..h as i64).map(|d| self.rotate(i, d, h)).collect();
            same_w == c_orbit
        })
    }

    /// t ↦ V^{ct} is a bijection from reflections onto noncrossing lines.
    pub fn check_reflection_bijection(&self, group: &CoxeterGroup) -> bool {
        let c = group.coxeter_element();
        let lines: BTreeSet<FlatId> = self.lines(group).into_iter().map(|i| self.flats[i]).collect();
        let images: BTreeSet<FlatId> =
            group.reflections().iter().map(|&t| group.fixed_space(group.mul(c, t))).collect();
        images.len() == group.reflections().len() && images == lines
    }
}
