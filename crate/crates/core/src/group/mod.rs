//! Finite real reflection groups, fully materialized.
//!
//! Vectors of V are written in the basis of simple roots. Every element is
//! stored as the permutation it induces on the root system, which makes
//! multiplication a table lookup; its matrix is read off from the images of
//! the simple roots.

mod data;
pub mod label;

use std::sync::Arc;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::algebra::matrix::{eigen_multiplicity, nullspace, rref};
use crate::algebra::{CycloField, CycloNumber, ExactMatrix};
use crate::error::{Error, Result};
use crate::flats::{Flat, FlatId, FlatTable, Stabilizer};
use crate::util::{fast_map, FastMap, UnionFind};
pub use label::{Family, GroupLabel};

/// Index of an element in the group's table; the identity is 0.
pub type Elem = u32;

const MAX_ELEMENTS: usize = 60_000;
const MAX_POSITIVE_ROOTS: usize = 127;

/// How the Coxeter element is formed from the simple reflections.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CoxeterChoice {
    /// s_1 s_2 ⋯ s_n in generator order.
    #[default]
    Standard,
    /// c_+ c_− for a proper two-colouring of the Coxeter graph.
    Bipartite,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct BuildOptions {
    pub coxeter: CoxeterChoice,
    pub allow_stretch: bool,
}

/// Conjugacy classes with their smallest-index representatives.
#[derive(Clone, Debug)]
pub struct Classes {
    pub class_of: Vec<u32>,
    pub reps: Vec<Elem>,
    pub sizes: Vec<u64>,
}

pub struct CoxeterGroup {
    label: GroupLabel,
    rank: usize,
    field: Arc<CycloField>,
    working_field: Arc<CycloField>,
    gram: Vec<Vec<CycloNumber>>,
    embedding: Option<Vec<Vec<BigRational>>>,
    roots: Vec<Vec<CycloNumber>>,
    npos: usize,
    degrees: Vec<u32>,
    h: u32,
    nroots: usize,
    size: usize,
    perms: Vec<u8>,
    index: FastMap<u64, Elem>,
    inverse: Vec<Elem>,
    ambient: usize,
    signed: Option<Vec<i16>>,
    simple: Vec<Elem>,
    reflections: Vec<Elem>,
    coxeter: Elem,
    coxeter_word: Vec<usize>,
    choice: CoxeterChoice,
    classes: Classes,
    flats: FlatTable,
    fixed: Vec<FlatId>,
}

fn pack(images: impl Iterator<Item = u8>) -> u64 {
    images.enumerate().fold(0u64, |k, (i, b)| k | (b as u64) << (8 * i))
}

impl CoxeterGroup {
    pub fn build(label: &GroupLabel, opts: &BuildOptions) -> Result<CoxeterGroup> {
        if label.is_stretch() && !opts.allow_stretch {
            return Err(Error::Unsupported {
                label: label.to_string(),
                reason: "stretch type; enable it explicitly".into(),
            });
        }
        let rd = data::root_data(label);
        let n = label.rank();
        let field = CycloField::new(rd.conductor);
        let gram: Vec<Vec<CycloNumber>> =
            rd.gram.iter().map(|r| r.iter().map(|x| into_field(x, &field)).collect()).collect();

        let reflect = |v: &[CycloNumber], j: usize| -> Vec<CycloNumber> {
            let pair = (0..n).fold(CycloNumber::zero().lift_to(&field), |acc, k| &acc + &(&v[k] * &gram[k][j]));
            let coef = &(&pair * &CycloNumber::from_int(2)) * &gram[j][j].inv().expect("nonzero root length");
            let mut w = v.to_vec();
            w[j] = &w[j] - &coef;
            w
        };

        // Positive roots: closure of Δ under s_j, never applying s_j to α_j.
        let unit = |i: usize| -> Vec<CycloNumber> {
            (0..n).map(|k| CycloNumber::from_int((k == i) as i64).lift_to(&field)).collect()
        };
        let mut pos: Vec<Vec<CycloNumber>> = (0..n).map(unit).collect();
        let mut seen: std::collections::HashMap<Vec<CycloNumber>, usize> =
            pos.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        let mut head = 0;
        while head < pos.len() {
            for j in 0..n {
                if head == j {
                    continue;
                }
                let r = reflect(&pos[head], j);
                if !seen.contains_key(&r) {
                    seen.insert(r.clone(), pos.len());
                    pos.push(r);
                    if pos.len() > MAX_POSITIVE_ROOTS {
                        return Err(Error::Capability("root system too large".into()));
                    }
                }
            }
            head += 1;
        }
        let npos = pos.len();
        let mut roots = pos.clone();
        roots.extend(pos.iter().map(|v| v.iter().map(|x| -x).collect::<Vec<_>>()));
        let nroots = roots.len();
        let root_index: std::collections::HashMap<Vec<CycloNumber>, usize> =
            roots.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        let lookup = |v: &Vec<CycloNumber>| -> Result<usize> {
            root_index.get(v).copied().ok_or_else(|| Error::Verification("root system not closed".into()))
        };

        let mut gen_perms: Vec<Vec<u8>> = Vec::with_capacity(n);
        for j in 0..n {
            let p = roots.iter().map(|r| lookup(&reflect(r, j)).map(|i| i as u8)).collect::<Result<Vec<u8>>>()?;
            gen_perms.push(p);
        }

        // Signed permutations of the generators on standard coordinates.
        let ambient = rd.embedding.as_ref().map_or(0, |e| e.first().map_or(1, |v| v.len()));
        let gen_signed: Option<Vec<Vec<i16>>> = if rd.classical {
            let emb = rd.embedding.as_ref().expect("classical types are embedded");
            Some(emb.iter().map(|alpha| signed_reflection(alpha, ambient)).collect::<Result<_>>()?)
        } else {
            None
        };

        // Breadth-first closure from the identity.
        let identity: Vec<u8> = (0..nroots as u8).collect();
        let mut perms = identity.clone();
        let mut index: FastMap<u64, Elem> = fast_map();
        index.insert(pack(identity[..n].iter().copied()), 0);
        let mut signed = gen_signed.as_ref().map(|_| (1..=ambient as i16).collect::<Vec<i16>>());
        let mut count = 1usize;
        let mut w = 0usize;
        while w < count {
            for j in 0..n {
                let base = w * nroots;
                let new: Vec<u8> = (0..nroots).map(|r| gen_perms[j][perms[base + r] as usize]).collect();
                let key = pack(new[..n].iter().copied());
                if index.contains_key(&key) {
                    continue;
                }
                index.insert(key, count as Elem);
                perms.extend_from_slice(&new);
                if let (Some(sg), Some(s)) = (gen_signed.as_ref(), signed.as_mut()) {
                    let old: Vec<i16> = s[w * ambient..(w + 1) * ambient].to_vec();
                    s.extend(old.iter().map(|&x| apply_signed(&sg[j], x)));
                }
                count += 1;
                if count > MAX_ELEMENTS {
                    return Err(Error::Capability("element-count guard exceeded".into()));
                }
            }
            w += 1;
        }

        let degrees = rd.degrees.clone();
        let h = degrees.iter().copied().max().unwrap_or(1);
        let order: u64 = degrees.iter().map(|&d| d as u64).product();
        if order != count as u64 {
            return Err(Error::Verification(format!("|W| = {count} but Π d_i = {order}")));
        }
        if 2 * npos != h as usize * n {
            return Err(Error::Verification(format!("2|T| = {} but hn = {}", 2 * npos, h as usize * n)));
        }

        let mut group = CoxeterGroup {
            label: *label,
            rank: n,
            working_field: CycloField::new(rd.conductor.lcm(&h)),
            field,
            gram,
            embedding: rd.embedding,
            roots,
            npos,
            degrees,
            h,
            nroots,
            size: count,
            perms,
            index,
            inverse: Vec::new(),
            ambient,
            signed,
            simple: Vec::new(),
            reflections: Vec::new(),
            coxeter: 0,
            coxeter_word: Vec::new(),
            choice: opts.coxeter,
            classes: Classes { class_of: Vec::new(), reps: Vec::new(), sizes: Vec::new() },
            flats: FlatTable::default(),
            fixed: Vec::new(),
        };
        group.inverse = (0..count as Elem).map(|w| group.compute_inverse(w)).collect();
        group.simple = (0..n).map(|j| group.lookup_perm(&gen_perms[j]).expect("generator present")).collect();
        group.reflections = (0..npos).map(|r| group.reflection_of_root(r)).collect::<Result<_>>()?;
        group.coxeter_word = match opts.coxeter {
            CoxeterChoice::Standard => (0..n).collect(),
            CoxeterChoice::Bipartite => group.bipartite_word(),
        };
        group.coxeter = group.word_element(&group.coxeter_word);
        group.classes = group.compute_classes();
        group.compute_fixed_spaces();
        if group.element_order(group.coxeter) != h as usize {
            return Err(Error::Verification("Coxeter element does not have order h".into()));
        }
        Ok(group)
    }

    pub fn build_default(label: &GroupLabel) -> Result<CoxeterGroup> {
        Self::build(label, &BuildOptions { allow_stretch: true, ..Default::default() })
    }

    fn lookup_perm(&self, p: &[u8]) -> Option<Elem> {
        self.index.get(&pack(p[..self.rank].iter().copied())).copied()
    }

    fn perm(&self, w: Elem) -> &[u8] {
        let b = w as usize * self.nroots;
        &self.perms[b..b + self.nroots]
    }

    fn compute_inverse(&self, w: Elem) -> Elem {
        let p = self.perm(w);
        let mut inv = vec![0u8; self.rank];
        for (r, &img) in p.iter().enumerate() {
            if (img as usize) < self.rank {
                inv[img as usize] = r as u8;
            }
        }
        self.index[&pack(inv.into_iter())]
    }

    fn reflection_of_root(&self, r: usize) -> Result<Elem> {
        let alpha = &self.roots[r];
        let len = self.inner(alpha, alpha);
        let two_over = &CycloNumber::from_int(2) * &len.inv().expect("nonzero root");
        let mut images = Vec::with_capacity(self.rank);
        for j in 0..self.rank {
            let beta = &self.roots[j];
            let c = &self.inner(beta, alpha) * &two_over;
            let img: Vec<CycloNumber> = beta.iter().zip(alpha).map(|(b, a)| b - &(&c * a)).collect();
            let idx = self
                .roots
                .iter()
                .position(|x| *x == img)
                .ok_or_else(|| Error::Verification("reflection image is not a root".into()))?;
            images.push(idx as u8);
        }
        self.index
            .get(&pack(images.into_iter()))
            .copied()
            .ok_or_else(|| Error::Verification("reflection not in the group".into()))
    }

    fn bipartite_word(&self) -> Vec<usize> {
        let n = self.rank;
        let mut colour = vec![usize::MAX; n];
        for start in 0..n {
            if colour[start] != usize::MAX {
                continue;
            }
            colour[start] = 0;
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                for j in 0..n {
                    if j != i && !self.gram[i][j].is_zero() && colour[j] == usize::MAX {
                        colour[j] = 1 - colour[i];
                        stack.push(j);
                    }
                }
            }
        }
        let mut word: Vec<usize> = (0..n).filter(|&i| colour[i] == 0).collect();
        word.extend((0..n).filter(|&i| colour[i] == 1));
        word
    }

    fn compute_classes(&self) -> Classes {
        let size = self.order();
        let mut uf = UnionFind::new(size);
        for w in 0..size as Elem {
            for &s in &self.simple {
                uf.union(w, self.mul(self.mul(s, w), s));
            }
        }
        let mut rep_slot: FastMap<u32, u32> = fast_map();
        let mut class_of = vec![0u32; size];
        let mut reps = Vec::new();
        let mut sizes = Vec::new();
        for w in 0..size as Elem {
            let root = uf.find(w);
            let slot = *rep_slot.entry(root).or_insert_with(|| {
                reps.push(root);
                sizes.push(0);
                (reps.len() - 1) as u32
            });
            class_of[w as usize] = slot;
            sizes[slot as usize] += 1;
        }
        Classes { class_of, reps, sizes }
    }

    fn compute_fixed_spaces(&mut self) {
        let kernels: Vec<Vec<Vec<CycloNumber>>> = (0..self.order() as Elem)
            .into_par_iter()
            .map(|w| self.matrix(w).minus_scalar(&CycloNumber::one()).kernel_basis())
            .collect();
        let mut table = FlatTable::default();
        let fixed: Vec<FlatId> = kernels.into_iter().enumerate().map(|(w, k)| table.intern(k, w as Elem)).collect();
        self.fixed = fixed;
        // W-orbits of flats: g·V^w = V^{g w g^{-1}}
        let mut uf = UnionFind::new(table.len());
        for w in 0..self.order() as Elem {
            for &s in &self.simple {
                uf.union(self.fixed[w as usize], self.fixed[self.mul(self.mul(s, w), s) as usize]);
            }
        }
        let mut best: FastMap<u32, FlatId> = fast_map();
        for f in 0..table.len() as FlatId {
            let root = uf.find(f);
            let e = best.entry(root).or_insert(f);
            if table.get(f).basis < table.get(*e).basis {
                *e = f;
            }
        }
        for f in 0..table.len() as FlatId {
            let root = uf.find(f);
            table.set_orbit(f, best[&root]);
        }
        self.flats = table;
    }

    pub fn label(&self) -> &GroupLabel {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.size
    }

    pub fn coxeter_number(&self) -> u32 {
        self.h
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn exponents(&self) -> Vec<u32> {
        self.degrees.iter().map(|d| d - 1).collect()
    }

    pub fn is_crystallographic(&self) -> bool {
        self.label.is_crystallographic()
    }

    /// Field holding root coordinates and element matrices.
    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    /// Q(ζ_N) with N = lcm(h, conductor of the root field).
    pub fn working_field(&self) -> &Arc<CycloField> {
        &self.working_field
    }

    /// ω = e^{2πi/h} in the working field.
    pub fn omega(&self) -> CycloNumber {
        CycloNumber::zeta_in(&self.working_field, (self.working_field.conductor() / self.h) as i64)
    }

    pub fn gram(&self) -> &[Vec<CycloNumber>] {
        &self.gram
    }

    pub fn embedding(&self) -> Option<&[Vec<BigRational>]> {
        self.embedding.as_deref()
    }

    /// Number of positive roots (= number of reflections).
    pub fn num_positive_roots(&self) -> usize {
        self.npos
    }

    /// Roots in simple-root coordinates; index r < |Φ⁺| is positive and
    /// r + |Φ⁺| is its negative.
    pub fn roots(&self) -> &[Vec<CycloNumber>] {
        &self.roots
    }

    pub fn root(&self, r: usize) -> &[CycloNumber] {
        &self.roots[r]
    }

    pub fn is_positive_root(&self, r: usize) -> bool {
        r < self.npos
    }

    /// Index of the root w(α_r).
    pub fn act_on_root(&self, w: Elem, r: usize) -> usize {
        self.perm(w)[r] as usize
    }

    pub fn root_index(&self, v: &[CycloNumber]) -> Option<usize> {
        self.roots.iter().position(|x| x.as_slice() == v)
    }

    /// ⟨a, b⟩ for vectors in simple-root coordinates.
    pub fn inner(&self, a: &[CycloNumber], b: &[CycloNumber]) -> CycloNumber {
        let mut acc = CycloNumber::zero();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() && !self.gram[i][j].is_zero() {
                    acc = &acc + &(&(x * y) * &self.gram[i][j]);
                }
            }
        }
        acc
    }

    pub fn identity(&self) -> Elem {
        0
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        let pa = self.perm(a);
        let pb = self.perm(b);
        self.index[&pack((0..self.rank).map(|j| pa[pb[j] as usize]))]
    }

    pub fn inv(&self, w: Elem) -> Elem {
        self.inverse[w as usize]
    }

    pub fn pow(&self, w: Elem, k: i64) -> Elem {
        let base = if k < 0 { self.inv(w) } else { w };
        (0..k.unsigned_abs()).fold(0, |acc, _| self.mul(acc, base))
    }

    /// c^d for any integer d.
    pub fn coxeter_power(&self, d: i64) -> Elem {
        self.pow(self.coxeter, d.rem_euclid(self.h as i64))
    }

    pub fn element_order(&self, w: Elem) -> usize {
        let mut x = w;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, w);
            k += 1;
        }
        k
    }

    pub fn simple_reflections(&self) -> &[Elem] {
        &self.simple
    }

    /// Reflections indexed by positive root.
    pub fn reflections(&self) -> &[Elem] {
        &self.reflections
    }

    pub fn coxeter_element(&self) -> Elem {
        self.coxeter
    }

    pub fn coxeter_word(&self) -> &[usize] {
        &self.coxeter_word
    }

    pub fn coxeter_choice(&self) -> CoxeterChoice {
        self.choice
    }

    /// Product of simple reflections s_{w[0]} s_{w[1]} ⋯.
    pub fn word_element(&self, word: &[usize]) -> Elem {
        word.iter().fold(0, |acc, &j| self.mul(acc, self.simple[j]))
    }

    pub fn conjugate(&self, g: Elem, w: Elem) -> Elem {
        self.mul(self.mul(g, w), self.inv(g))
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.order() as Elem
    }

    pub fn classes(&self) -> &Classes {
        &self.classes
    }

    /// Exact matrix of w on V in the simple-root basis.
    pub fn matrix(&self, w: Elem) -> ExactMatrix {
        let p = self.perm(w);
        let cols: Vec<Vec<CycloNumber>> = (0..self.rank).map(|j| self.roots[p[j] as usize].clone()).collect();
        ExactMatrix::from_columns(&cols)
    }

    /// Element with the given matrix, if any.
    pub fn element_of_matrix(&self, m: &ExactMatrix) -> Option<Elem> {
        let mut images = Vec::with_capacity(self.rank);
        for j in 0..self.rank {
            let col: Vec<CycloNumber> = (0..self.rank).map(|i| m.get(i, j).clone()).collect();
            images.push(self.root_index(&col)? as u8);
        }
        self.index.get(&pack(images.into_iter())).copied()
    }

    /// n − dim V^w.
    pub fn reflection_length(&self, w: Elem) -> usize {
        self.rank - self.flat(self.fixed_space(w)).dim()
    }

    /// det(w) = (−1)^{ℓ_T(w)}.
    pub fn det_sign(&self, w: Elem) -> i64 {
        if self.reflection_length(w) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// dim ker(ρ(w) − ω^d).
    pub fn mult_eigen(&self, w: Elem, d: i64) -> usize {
        let z = self.omega().pow(d.rem_euclid(self.h as i64) as u32);
        eigen_multiplicity(&self.matrix(w), &z)
    }

    /// The same multiplicity read off from the cycle type (types A, B, D).
    pub fn mult_eigen_from_cycles(&self, w: Elem, d: i64) -> Option<usize> {
        let cycles = self.signed_cycles(w)?;
        let h = self.h as i64;
        let o = (h / d.rem_euclid(h).gcd(&h)) as usize;
        match self.label.family {
            Family::A(_) => {
                let c = cycles.iter().filter(|(len, _)| len % o == 0).count();
                Some(if o == 1 { c - 1 } else { c })
            }
            Family::B(_) | Family::D(_) => Some(
                cycles
                    .iter()
                    .filter(|&&(len, neg)| if neg { (2 * len) % o == 0 && len % o != 0 } else { len % o == 0 })
                    .count(),
            ),
            _ => None,
        }
    }

    /// Number of ambient standard coordinates (n+1 in type A_n).
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Signed permutation of w on ±[m]: entry i is w(+(i+1)) as ±(j+1).
    pub fn signed_perm(&self, w: Elem) -> Option<&[i16]> {
        let s = self.signed.as_ref()?;
        Some(&s[w as usize * self.ambient..(w as usize + 1) * self.ambient])
    }

    /// Element acting as the given signed permutation, if any.
    pub fn element_of_signed_perm(&self, sp: &[i16]) -> Option<Elem> {
        let emb = self.embedding.as_ref()?;
        let mut images = Vec::with_capacity(self.rank);
        for alpha in emb.iter() {
            let mut img = vec![BigRational::zero(); self.ambient];
            for (i, c) in alpha.iter().enumerate() {
                let t = sp[i];
                let j = t.unsigned_abs() as usize - 1;
                if t > 0 {
                    img[j] += c;
                } else {
                    img[j] -= c;
                }
            }
            let coords = self.standard_to_root(&img)?;
            images.push(self.root_index(&coords)? as u8);
        }
        self.index.get(&pack(images.into_iter())).copied()
    }

    /// Cycles of |w| with a flag for an odd number of sign changes.
    pub fn signed_cycles(&self, w: Elem) -> Option<Vec<(usize, bool)>> {
        let sp = self.signed_perm(w)?;
        let m = sp.len();
        let mut seen = vec![false; m];
        let mut out = Vec::new();
        for start in 0..m {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut neg = false;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                len += 1;
                neg ^= sp[i] < 0;
                i = sp[i].unsigned_abs() as usize - 1;
            }
            out.push((len, neg));
        }
        Some(out)
    }

    /// Standard coordinates of a vector given in simple-root coordinates.
    pub fn root_to_standard(&self, v: &[CycloNumber]) -> Option<Vec<CycloNumber>> {
        let emb = self.embedding.as_ref()?;
        let mut out = vec![CycloNumber::zero(); self.ambient];
        for (j, alpha) in emb.iter().enumerate() {
            for (i, c) in alpha.iter().enumerate() {
                if !c.is_zero() && !v[j].is_zero() {
                    out[i] = &out[i] + &(&v[j] * &CycloNumber::from_rational(c.clone()));
                }
            }
        }
        Some(out)
    }

    /// Inverse of [`root_to_standard`] on the span of the roots.
    pub fn standard_to_root(&self, x: &[BigRational]) -> Option<Vec<CycloNumber>> {
        let emb = self.embedding.as_ref()?;
        let n = self.rank;
        // Solve Σ_j v_j α_j = x by elimination on the augmented system.
        let rows: Vec<Vec<CycloNumber>> = (0..self.ambient)
            .map(|i| {
                let mut r: Vec<CycloNumber> = (0..n).map(|j| CycloNumber::from_rational(emb[j][i].clone())).collect();
                r.push(CycloNumber::from_rational(x[i].clone()));
                r
            })
            .collect();
        let red = rref(rows, n + 1);
        let mut v = vec![CycloNumber::zero(); n];
        for row in &red {
            let p = row.iter().position(|c| !c.is_zero())?;
            if p == n {
                return None;
            }
            v[p] = row[n].clone();
        }
        Some(v.iter().map(|c| into_field(c, &self.field)).collect())
    }

    pub fn flats(&self) -> &FlatTable {
        &self.flats
    }

    pub fn flat(&self, id: FlatId) -> &Flat {
        self.flats.get(id)
    }

    pub fn fixed_space(&self, w: Elem) -> FlatId {
        self.fixed[w as usize]
    }

    /// The whole space V.
    pub fn full_flat(&self) -> FlatId {
        self.fixed[0]
    }

    /// The flat {0}.
    pub fn zero_flat(&self) -> FlatId {
        self.fixed[self.coxeter as usize]
    }

    /// g·X, computed as V^{g w g^{-1}} for a witness w with V^w = X.
    pub fn flat_image(&self, g: Elem, x: FlatId) -> FlatId {
        let w = self.flat(x).witness();
        self.fixed[self.conjugate(g, w) as usize]
    }

    /// Canonical W-orbit representative of a flat.
    pub fn flat_orbit(&self, x: FlatId) -> FlatId {
        self.flat(x).orbit()
    }

    /// The flat spanned by `vectors`, if it is one.
    pub fn flat_spanned_by(&self, vectors: Vec<Vec<CycloNumber>>) -> Option<FlatId> {
        let basis = rref(vectors, self.rank);
        self.flats.lookup(&basis)
    }

    /// ∩_{r} α_r^⊥ for the given roots.
    pub fn flat_orthogonal_to(&self, root_ids: &[usize]) -> Option<FlatId> {
        let rows: Vec<Vec<CycloNumber>> = root_ids
            .iter()
            .map(|&r| (0..self.rank).map(|k| self.inner(&self.roots[r], &unit_vector(self.rank, k))).collect())
            .collect();
        let basis = nullspace(&rows, self.rank);
        self.flats.lookup(&basis)
    }

    /// Pointwise stabilizer W_X, computed once by scanning W.
    pub fn stabilizer(&self, x: FlatId) -> &Stabilizer {
        self.flat(x).stabilizer_cell().get_or_init(|| self.compute_stabilizer(x))
    }

    fn compute_stabilizer(&self, x: FlatId) -> Stabilizer {
        // w fixes b iff ⟨b, w^{-1}α_j⟩ = ⟨b, α_j⟩ for every simple root α_j.
        let basis = &self.flat(x).basis;
        let mut ids: FastMap<CycloNumber, u32> = fast_map();
        let pairing: Vec<Vec<u32>> = basis
            .iter()
            .map(|b| {
                self.roots
                    .iter()
                    .map(|r| {
                        let v = self.inner(b, r);
                        let next = ids.len() as u32;
                        *ids.entry(v).or_insert(next)
                    })
                    .collect()
            })
            .collect();
        let members: Vec<Elem> = (0..self.order() as Elem)
            .into_par_iter()
            .filter(|&w| {
                let p = self.perm(self.inv(w));
                pairing.iter().all(|pid| (0..self.rank).all(|j| pid[p[j] as usize] == pid[j]))
            })
            .collect();
        Stabilizer::new(members, self.order())
    }
}

/// Move x into f, going through Q when x is rational.
fn into_field(x: &CycloNumber, f: &Arc<CycloField>) -> CycloNumber {
    match x.to_rational() {
        Some(q) => CycloNumber::from_rational(q).lift_to(f),
        None => x.lift_to(f),
    }
}

fn unit_vector(n: usize, k: usize) -> Vec<CycloNumber> {
    (0..n).map(|i| CycloNumber::from_int((i == k) as i64)).collect()
}

/// The reflection in α as a signed permutation of the ambient coordinates.
fn signed_reflection(alpha: &[BigRational], m: usize) -> Result<Vec<i16>> {
    let len: BigRational = alpha.iter().map(|x| x * x).sum();
    let mut out = Vec::with_capacity(m);
    for i in 0..m {
        let c = &alpha[i] * BigRational::from_integer(2.into()) / &len;
        let img: Vec<BigRational> = (0..m)
            .map(|k| {
                let e = BigRational::from_integer(((k == i) as i64).into());
                e - &c * &alpha[k]
            })
            .collect();
        let nz: Vec<usize> = (0..m).filter(|&k| !img[k].is_zero()).collect();
        if nz.len() != 1 || img[nz[0]].abs() != BigRational::from_integer(1.into()) {
            return Err(Error::Verification("reflection is not a signed permutation".into()));
        }
        let s = img[nz[0]].to_i64().expect("unit entry") as i16;
        out.push(s * (nz[0] as i16 + 1));
    }
    Ok(out)
}

fn apply_signed(s: &[i16], x: i16) -> i16 {
    let y = s[x.unsigned_abs() as usize - 1];
    if x > 0 {
        y
    } else {
        -y
    }
}

#[cfg(test)]
mod tests;
