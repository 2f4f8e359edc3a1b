//! Explicit W × C-equivariant bijections between noncrossing parking
//! functions of types B and D and the points of V^Θ for Θ = (x_i^{h+1}),
//! and the counting apparatus behind the weak conjecture in type A.
//!
//! Everything here works on signed permutations and signed partitions
//! directly, so it runs at ranks where the group itself is too large to
//! build. The group-level wrappers translate through flats.

mod signed;
mod type_a;

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::CycloNumber;
use crate::error::{Error, Result};
use crate::flats::partition::{flat_of_signed_partition, signed_partition_of_flat, SignedPartition};
use crate::group::{CoxeterGroup, Family, GroupLabel};
use crate::parking::{ParkClass, ParkingSpace};

pub use signed::{apply, compose, inverse, negatives, power, reflection_length, SignedPerm};
pub use type_a::{
    admissible_census, athanasiadis_count, count_equivariant_brute, count_equivariant_formula, cycle_type, r_d,
    verify_athanasiadis, verify_type_a_counts, AdmissiblePartition, ThreeWayReport, ThreeWayRow,
};

/// B_n or D_n acting on ±[n].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SignedType {
    B(usize),
    D(usize),
}

impl SignedType {
    pub fn from_label(label: &GroupLabel) -> Option<Self> {
        match label.family {
            Family::B(n) => Some(SignedType::B(n)),
            Family::D(n) => Some(SignedType::D(n)),
            _ => None,
        }
    }

    pub fn n(self) -> usize {
        match self {
            SignedType::B(n) | SignedType::D(n) => n,
        }
    }

    /// Number of positive letters drawn on the circle: n, or n − 1 in type D.
    pub fn circle(self) -> usize {
        match self {
            SignedType::B(n) => n,
            SignedType::D(n) => n - 1,
        }
    }

    /// Coxeter number, also the order of ω.
    pub fn h(self) -> u32 {
        2 * self.circle() as u32
    }

    /// c = (+1, …, +m, −1, …, −m), times (+n, −n) in type D.
    pub fn coxeter(self) -> SignedPerm {
        let m = self.circle() as i32;
        (1..=self.n() as i32).map(|i| if i < m { i + 1 } else if i == m { -1 } else { -i }).collect()
    }

    /// Position 1..2m of a letter on the circle; None for ±n in type D.
    pub fn position(self, x: i32) -> Option<usize> {
        let m = self.circle();
        let a = x.unsigned_abs() as usize;
        if a > m {
            return None;
        }
        Some(if x > 0 { a } else { a + m })
    }

    pub fn at_position(self, p: usize) -> i32 {
        let m = self.circle();
        if p <= m {
            p as i32
        } else {
            -((p - m) as i32)
        }
    }

    /// (h + 1)^n.
    pub fn num_points(self) -> u64 {
        (self.h() as u64 + 1).pow(self.n() as u32)
    }

    fn is_d(self) -> bool {
        matches!(self, SignedType::D(_))
    }
}

impl fmt::Display for SignedType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SignedType::B(n) => write!(f, "B{n}"),
            SignedType::D(n) => write!(f, "D{n}"),
        }
    }
}

/// A point of V^Θ: each coordinate 0 or ω^e with ω of order h.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ThetaPoint {
    pub h: u32,
    /// None for 0, Some(e) for ω^e with 0 ≤ e < h.
    pub coords: Vec<Option<u32>>,
}

impl ThetaPoint {
    pub fn origin(h: u32, n: usize) -> Self {
        ThetaPoint { h, coords: vec![None; n] }
    }

    pub fn is_origin(&self) -> bool {
        self.coords.iter().all(|c| c.is_none())
    }

    pub fn zeros(&self) -> usize {
        self.coords.iter().filter(|c| c.is_none()).count()
    }

    /// (u, c^d)·v: coordinates permuted and signed by u, then scaled by ω^d.
    pub fn act(&self, u: &[i32], d: i64) -> Self {
        let half = self.h / 2;
        let shift = d.rem_euclid(self.h as i64) as u32;
        let mut coords = vec![None; self.coords.len()];
        for (k, c) in self.coords.iter().enumerate() {
            let y = u[k];
            coords[y.unsigned_abs() as usize - 1] =
                c.map(|e| (e + shift + if y < 0 { half } else { 0 }) % self.h);
        }
        ThetaPoint { h: self.h, coords }
    }

    /// Exact coordinates in Q(ζ_h).
    pub fn to_vector(&self) -> Vec<CycloNumber> {
        self.coords
            .iter()
            .map(|c| match c {
                None => CycloNumber::zero(),
                Some(e) => CycloNumber::zeta(self.h, *e as i64),
            })
            .collect()
    }

    /// Parses the comma list of "0", "+w^j", "-w^j".
    pub fn parse(s: &str, h: u32) -> Result<Self> {
        let err = || Error::Invalid(format!("cannot parse point {s:?}"));
        let half = h / 2;
        let coords = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .split(',')
            .map(|t| {
                let t = t.trim();
                if t == "0" {
                    return Ok(None);
                }
                let (neg, rest) = match t.as_bytes().first() {
                    Some(b'+') => (false, &t[1..]),
                    Some(b'-') => (true, &t[1..]),
                    _ => (false, t),
                };
                let j: u32 = match rest.strip_prefix("w^") {
                    Some(e) => e.parse().map_err(|_| err())?,
                    None if rest == "w" => 1,
                    None if rest == "1" => 0,
                    None => return Err(err()),
                };
                Ok(Some((j + if neg { half } else { 0 }) % h))
            })
            .collect::<Result<_>>()?;
        Ok(ThetaPoint { h, coords })
    }

    /// All (h + 1)^n points.
    pub fn all(ty: SignedType) -> Vec<ThetaPoint> {
        let n = ty.n();
        let h = ty.h();
        let base = h as u64 + 1;
        (0..ty.num_points())
            .map(|mut k| {
                let coords = (0..n)
                    .map(|_| {
                        let c = (k % base) as u32;
                        k /= base;
                        c.checked_sub(1)
                    })
                    .collect();
                ThetaPoint { h, coords }
            })
            .collect()
    }
}

/// V^Θ for the type of a group.
pub fn theta_points(ty: SignedType) -> Result<Vec<ThetaPoint>> {
    if ty.n() < 2 || (ty.is_d() && ty.n() < 3) {
        return Err(Error::Invalid(format!("{ty} is too small")));
    }
    if ty.num_points() > 20_000_000 {
        return Err(Error::Capability(format!("{} points of {ty}", ty.num_points())));
    }
    Ok(ThetaPoint::all(ty))
}

impl fmt::Display for ThetaPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let half = self.h / 2;
        let parts: Vec<String> = self
            .coords
            .iter()
            .map(|c| match c {
                None => "0".to_string(),
                Some(e) if (1..=half).contains(e) => format!("+w^{e}"),
                Some(e) => format!("-w^{}", if *e == 0 { half } else { e - half }),
            })
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

fn signed_key(x: &i32) -> (u32, bool) {
    (x.unsigned_abs(), *x < 0)
}

/// A coset wW_X recorded as the labels w(B) of the blocks of X.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedParkClass {
    pub partition: SignedPartition,
    /// w(B) for each block, parallel to `partition.blocks`.
    pub labels: Vec<Vec<i32>>,
    /// |w(z)| for the coordinates z of the zero block.
    pub zero_label: Vec<usize>,
}

impl SignedParkClass {
    /// From (block, label) pairs.
    pub fn from_pairs(n: usize, pairs: Vec<(Vec<i32>, Vec<i32>)>, zero: Vec<usize>, mut zero_label: Vec<usize>) -> Self {
        let partition = SignedPartition::new(n, pairs.iter().map(|p| p.0.clone()).collect(), zero);
        let normalized: Vec<(Vec<i32>, Vec<i32>)> = pairs
            .into_iter()
            .map(|(mut b, mut l)| {
                b.sort_by_key(signed_key);
                l.sort_by_key(signed_key);
                (b, l)
            })
            .collect();
        let labels = partition
            .blocks
            .iter()
            .map(|b| normalized.iter().find(|p| &p.0 == b).expect("block present").1.clone())
            .collect();
        zero_label.sort_unstable();
        SignedParkClass { partition, labels, zero_label }
    }

    /// The class [w, X] with X given by its partition.
    pub fn from_perm(partition: SignedPartition, w: &[i32]) -> Self {
        let labels = partition
            .blocks
            .iter()
            .map(|b| {
                let mut l: Vec<i32> = b.iter().map(|&x| apply(w, x)).collect();
                l.sort_by_key(signed_key);
                l
            })
            .collect();
        let mut zero_label: Vec<usize> = partition.zero.iter().map(|&z| w[z - 1].unsigned_abs() as usize).collect();
        zero_label.sort_unstable();
        SignedParkClass { partition, labels, zero_label }
    }

    fn raw_representative(&self) -> SignedPerm {
        let mut w = vec![0i32; self.partition.n];
        for (b, l) in self.partition.blocks.iter().zip(&self.labels) {
            for (&x, &y) in b.iter().zip(l) {
                if x > 0 {
                    w[x as usize - 1] = y;
                }
            }
        }
        for (&z, &y) in self.partition.zero.iter().zip(&self.zero_label) {
            w[z - 1] = y as i32;
        }
        w
    }

    /// Some w in the coset; in type D the sign of one zero-block coordinate
    /// is chosen to make w even.
    pub fn representative(&self, ty: SignedType) -> SignedPerm {
        let mut w = self.raw_representative();
        if ty.is_d() && negatives(&w) % 2 == 1 {
            if let Some(&z) = self.partition.zero.first() {
                w[z - 1] = -w[z - 1];
            }
        }
        w
    }

    /// Whether the labels come from an element of the group.
    pub fn is_consistent(&self, ty: SignedType) -> bool {
        let w = self.raw_representative();
        let mut seen = vec![false; w.len()];
        for &y in &w {
            let a = y.unsigned_abs() as usize;
            if a == 0 || a > w.len() || seen[a - 1] {
                return false;
            }
            seen[a - 1] = true;
        }
        let back = SignedParkClass::from_perm(self.partition.clone(), &w);
        &back == self && (!ty.is_d() || !self.partition.zero.is_empty() || negatives(&w) % 2 == 0)
    }

    /// (u, c^d)·[w, X] = [u w c^{−d}, c^d X].
    pub fn act(&self, ty: SignedType, u: &[i32], d: i64) -> Self {
        let cd = power(&ty.coxeter(), d);
        let pairs = self
            .partition
            .blocks
            .iter()
            .zip(&self.labels)
            .map(|(b, l)| (b.iter().map(|&x| apply(&cd, x)).collect(), l.iter().map(|&y| apply(u, y)).collect()))
            .collect();
        let zero = self.partition.zero.iter().map(|&z| cd[z - 1].unsigned_abs() as usize).collect();
        let zero_label = self.zero_label.iter().map(|&k| u[k - 1].unsigned_abs() as usize).collect();
        SignedParkClass::from_pairs(self.partition.n, pairs, zero, zero_label)
    }
}

impl fmt::Display for SignedParkClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fmt_list = |v: &[i32]| v.iter().map(|&x| if x > 0 { format!("+{x}") } else { x.to_string() }).collect::<Vec<_>>().join(",");
        let mut parts: Vec<String> =
            self.partition.blocks.iter().zip(&self.labels).map(|(b, l)| format!("{}->{}", fmt_list(b), fmt_list(l))).collect();
        if !self.partition.zero.is_empty() {
            let z: Vec<String> = self.partition.zero.iter().map(|k| format!("±{k}")).collect();
            let zl: Vec<String> = self.zero_label.iter().map(|k| format!("±{k}")).collect();
            parts.push(format!("0:{}->{}", z.join(","), zl.join(",")));
        }
        write!(f, "[{}]", parts.join(" | "))
    }
}

/// Circle position of the opener of a nonzero block: the first letter after
/// the gap between consecutive letters of B that holds −B. None for the
/// type D singletons {+n}, {−n}.
pub fn opener(ty: SignedType, block: &[i32]) -> Option<usize> {
    let mut ps: Vec<usize> = block.iter().filter_map(|&x| ty.position(x)).collect();
    ps.sort_unstable();
    let neg: Vec<usize> = block.iter().filter_map(|&x| ty.position(-x)).collect();
    let k = ps.len();
    (0..k).find_map(|i| {
        let (a, b) = (ps[i], ps[(i + 1) % k]);
        let inside = |p: &usize| if a < b { a < *p && *p < b } else { *p > a || *p < b };
        neg.iter().any(inside).then_some(b)
    })
}

/// f([w, X]).
pub fn forward(ty: SignedType, pc: &SignedParkClass) -> ThetaPoint {
    let m = ty.circle() as u32;
    let h = ty.h();
    let mut coords = vec![None; ty.n()];
    for (b, l) in pc.partition.blocks.iter().zip(&pc.labels) {
        if let Some(p) = opener(ty, b) {
            for &y in l {
                let e = (p as u32 + if y < 0 { m } else { 0 }) % h;
                coords[y.unsigned_abs() as usize - 1] = Some(e);
            }
        }
    }
    ThetaPoint { h, coords }
}

/// Rebuilds the parenthesization from block sizes mult[p] (p = 1..m) of the
/// blocks opened at ±p. Blocks are closed innermost first: an opener is
/// closed once the next size − 1 free letters after it hold no opener still
/// waiting. Returns (opener, letters) per block and the free positions.
fn parenthesize(m: usize, mult: &[usize]) -> Result<(Vec<(usize, Vec<usize>)>, Vec<usize>)> {
    let h = 2 * m;
    let mut size = vec![0usize; h + 1];
    for p in 1..=m {
        size[p] = mult[p];
        size[p + m] = mult[p];
    }
    let mut consumed = vec![false; h + 1];
    let mut open: Vec<usize> = (1..=h).filter(|&p| size[p] > 0).collect();
    let mut blocks = Vec::new();
    while !open.is_empty() {
        let span_of = |o: usize| -> Option<Vec<usize>> {
            let mut span = vec![o];
            let mut q = o;
            for _ in 1..size[o] {
                loop {
                    q = q % h + 1;
                    if q == o {
                        return None;
                    }
                    if !consumed[q] {
                        break;
                    }
                }
                if open.contains(&q) {
                    return None;
                }
                span.push(q);
            }
            Some(span)
        };
        let (i, span) = open
            .iter()
            .enumerate()
            .find_map(|(i, &o)| span_of(o).map(|s| (i, s)))
            .ok_or_else(|| Error::Verification(format!("no closable block for multiplicities {mult:?}")))?;
        for &q in &span {
            consumed[q] = true;
        }
        blocks.push((open.remove(i), span));
    }
    let free = (1..=h).filter(|&p| !consumed[p]).collect();
    Ok((blocks, free))
}

fn multiplicities(ty: SignedType, v: &ThetaPoint) -> Vec<usize> {
    let m = ty.circle();
    let mut mult = vec![0usize; m + 1];
    for e in v.coords.iter().flatten() {
        let pos = if *e == 0 { 2 * m } else { *e as usize };
        mult[if pos > m { pos - m } else { pos }] += 1;
    }
    mult
}

/// {+k : v_k = ω^o} ∪ {−k : v_k = −ω^o}.
fn label_at(ty: SignedType, v: &ThetaPoint, o: usize) -> Vec<i32> {
    let h = ty.h();
    let e = o as u32 % h;
    let f = (o + ty.circle()) as u32 % h;
    let mut out = Vec::new();
    for (k, c) in v.coords.iter().enumerate() {
        match c {
            Some(x) if *x == e => out.push(k as i32 + 1),
            Some(x) if *x == f => out.push(-(k as i32 + 1)),
            _ => {}
        }
    }
    out
}

fn nonzero_pairs(ty: SignedType, v: &ThetaPoint, blocks: &[(usize, Vec<usize>)]) -> Vec<(Vec<i32>, Vec<i32>)> {
    blocks
        .iter()
        .map(|(o, ps)| (ps.iter().map(|&p| ty.at_position(p)).collect(), label_at(ty, v, *o)))
        .collect()
}

fn zero_coords(v: &ThetaPoint) -> Vec<usize> {
    (0..v.coords.len()).filter(|&k| v.coords[k].is_none()).map(|k| k + 1).collect()
}

fn check_point(ty: SignedType, v: &ThetaPoint) -> Result<()> {
    if v.h != ty.h() || v.coords.len() != ty.n() || v.coords.iter().flatten().any(|&e| e >= v.h) {
        return Err(Error::Invalid(format!("{v} is not a point of V^Θ for {ty}")));
    }
    Ok(())
}

fn inverse_b(ty: SignedType, v: &ThetaPoint) -> Result<SignedParkClass> {
    let m = ty.circle();
    let mult = multiplicities(ty, v);
    if mult.iter().sum::<usize>() > m {
        return Err(Error::Invalid(format!("multiplicities of {v} exceed {m}")));
    }
    let (blocks, free) = parenthesize(m, &mult)?;
    let zero: Vec<usize> = free.into_iter().filter(|&p| p <= m).collect();
    Ok(SignedParkClass::from_pairs(ty.n(), nonzero_pairs(ty, v, &blocks), zero, zero_coords(v)))
}

fn inverse_d(ty: SignedType, v: &ThetaPoint) -> Result<SignedParkClass> {
    let n = ty.n();
    let m = ty.circle();
    let mult = multiplicities(ty, v);
    let zeros = zero_coords(v);
    let ni = n as i32;
    match zeros.len() {
        1 => {
            let (blocks, _) = parenthesize(m, &mult)?;
            let j0 = zeros[0] as i32;
            let mut pairs = nonzero_pairs(ty, v, &blocks);
            pairs.push((vec![ni], vec![j0]));
            pairs.push((vec![-ni], vec![-j0]));
            let pc = SignedParkClass::from_pairs(n, pairs.clone(), vec![], vec![]);
            if negatives(&pc.raw_representative()) % 2 == 0 {
                return Ok(pc);
            }
            let k = pairs.len();
            pairs[k - 2].1 = vec![-j0];
            pairs[k - 1].1 = vec![j0];
            Ok(SignedParkClass::from_pairs(n, pairs, vec![], vec![]))
        }
        0 => {
            let mut found = Vec::new();
            for p in (1..=m).filter(|&p| mult[p] >= 2) {
                let mut reduced = mult.clone();
                reduced[p] -= 1;
                let (blocks, _) = parenthesize(m, &reduced)?;
                let mut pairs = nonzero_pairs(ty, v, &blocks);
                let plus = blocks.iter().position(|(o, _)| *o == p).expect("opener +p");
                let minus = blocks.iter().position(|(o, _)| *o == p + m).expect("opener −p");
                pairs[plus].0.push(ni);
                pairs[minus].0.push(-ni);
                let pc = SignedParkClass::from_pairs(n, pairs.clone(), vec![], vec![]);
                if !is_noncrossing(ty, &pc.partition) {
                    continue;
                }
                if negatives(&pc.raw_representative()) % 2 == 0 {
                    found.push(pc);
                } else {
                    pairs[plus].0.pop();
                    pairs[minus].0.pop();
                    pairs[plus].0.push(-ni);
                    pairs[minus].0.push(ni);
                    found.push(SignedParkClass::from_pairs(n, pairs, vec![], vec![]));
                }
            }
            if found.len() != 1 {
                return Err(Error::Verification(format!("{} admissible insertions of ±n for {v}", found.len())));
            }
            Ok(found.pop().expect("one"))
        }
        _ => {
            let (blocks, free) = parenthesize(m, &mult)?;
            let mut zero: Vec<usize> = free.into_iter().filter(|&p| p <= m).collect();
            zero.push(n);
            Ok(SignedParkClass::from_pairs(n, nonzero_pairs(ty, v, &blocks), zero, zeros))
        }
    }
}

/// f⁻¹(v).
pub fn inverse_point(ty: SignedType, v: &ThetaPoint) -> Result<SignedParkClass> {
    check_point(ty, v)?;
    match ty {
        SignedType::B(_) => inverse_b(ty, v),
        SignedType::D(_) => inverse_d(ty, v),
    }
}

fn set_cycle(w: &mut [i32], cycle: &[i32]) {
    let k = cycle.len();
    for i in 0..k {
        let (x, y) = (cycle[i], cycle[(i + 1) % k]);
        if x > 0 {
            w[x as usize - 1] = y;
        } else {
            w[(-x) as usize - 1] = -y;
        }
    }
}

fn in_circle_order(ty: SignedType, b: &[i32]) -> Vec<i32> {
    let mut v: Vec<i32> = b.iter().copied().filter(|&x| ty.position(x).is_some()).collect();
    v.sort_by_key(|&x| ty.position(x));
    v
}

/// Whether the partition is the fixed-space partition of some w ≤_T c. The
/// candidates orient each block along the circle; in type D the central
/// letter ±n may sit at any place in its block's cycle.
pub fn is_noncrossing(ty: SignedType, p: &SignedPartition) -> bool {
    let n = ty.n();
    let ni = n as i32;
    if !p.is_valid() || p.n != n {
        return false;
    }
    let mut base: SignedPerm = (1..=ni).collect();
    let mut central: Option<Vec<i32>> = None;
    for (i, b) in p.blocks.iter().enumerate() {
        if p.opposite(i) < i {
            continue;
        }
        let cyc = in_circle_order(ty, b);
        if cyc.len() < b.len() {
            let c = b.iter().copied().find(|x| x.abs() == ni).expect("central letter");
            if cyc.is_empty() {
                continue;
            }
            let mut with_c = cyc.clone();
            with_c.insert(0, c);
            central = Some(with_c);
            continue;
        }
        set_cycle(&mut base, &cyc);
    }
    if !p.zero.is_empty() {
        let zero_letters: Vec<i32> = p.zero.iter().flat_map(|&z| [z as i32, -(z as i32)]).collect();
        if ty.is_d() {
            if !p.zero.contains(&n) || p.zero.len() < 2 {
                return false;
            }
            set_cycle(&mut base, &[ni, -ni]);
        }
        set_cycle(&mut base, &in_circle_order(ty, &zero_letters));
    }
    let c = ty.coxeter();
    let ok = |w: &SignedPerm| reflection_length(w) + reflection_length(&compose(&inverse(w), &c)) == n;
    match central {
        None => ok(&base),
        Some(cyc) => (0..cyc.len()).any(|r| {
            // move the central letter to slot r
            let mut order = cyc[1..].to_vec();
            order.insert(r, cyc[0]);
            let mut w = base.clone();
            set_cycle(&mut w, &order);
            ok(&w)
        }),
    }
}

/// The class of a group parking class as labelled blocks.
pub fn class_of_park(group: &CoxeterGroup, pc: &ParkClass) -> Option<SignedParkClass> {
    let partition = signed_partition_of_flat(group, pc.flat)?;
    let w: Vec<i32> = group.signed_perm(pc.rep)?.iter().map(|&x| x as i32).collect();
    Some(SignedParkClass::from_perm(partition, &w))
}

pub fn park_of_class(park: &ParkingSpace<'_>, spc: &SignedParkClass) -> Option<ParkClass> {
    let g = park.group();
    let ty = SignedType::from_label(g.label())?;
    let x = flat_of_signed_partition(g, &spc.partition)?;
    let w: Vec<i16> = spc.representative(ty).iter().map(|&y| y as i16).collect();
    let e = g.element_of_signed_perm(&w)?;
    Some(park.canonical(e, x))
}

fn group_type(park: &ParkingSpace<'_>, want_d: bool) -> Result<SignedType> {
    let ty = SignedType::from_label(park.group().label())
        .filter(|t| t.is_d() == want_d)
        .ok_or_else(|| Error::Invalid(format!("{} is not of type {}", park.group().label(), if want_d { "D" } else { "B" })))?;
    Ok(ty)
}

fn forward_park(park: &ParkingSpace<'_>, pc: &ParkClass, want_d: bool) -> Result<ThetaPoint> {
    let ty = group_type(park, want_d)?;
    let spc = class_of_park(park.group(), pc).ok_or_else(|| Error::Verification("flat without a signed partition".into()))?;
    Ok(forward(ty, &spc))
}

fn inverse_park(park: &ParkingSpace<'_>, v: &ThetaPoint, want_d: bool) -> Result<ParkClass> {
    let ty = group_type(park, want_d)?;
    let spc = inverse_point(ty, v)?;
    park_of_class(park, &spc).ok_or_else(|| Error::Verification(format!("{spc} is not a parking class")))
}

pub fn bc_forward(park: &ParkingSpace<'_>, pc: &ParkClass) -> Result<ThetaPoint> {
    forward_park(park, pc, false)
}

pub fn bc_inverse(park: &ParkingSpace<'_>, v: &ThetaPoint) -> Result<ParkClass> {
    inverse_park(park, v, false)
}

pub fn d_forward(park: &ParkingSpace<'_>, pc: &ParkClass) -> Result<ThetaPoint> {
    forward_park(park, pc, true)
}

pub fn d_inverse(park: &ParkingSpace<'_>, v: &ThetaPoint) -> Result<ParkClass> {
    inverse_park(park, v, true)
}

#[derive(Clone, Debug, Serialize)]
pub struct BijectionReport {
    pub group: String,
    pub classes: usize,
    pub points: usize,
    /// f⁻¹ ∘ f = id on Park^NC
    pub inverse_after_forward: bool,
    /// f ∘ f⁻¹ = id on V^Θ
    pub forward_after_inverse: bool,
    /// f commutes with every simple reflection and with c, on every class
    pub equivariant_generators: bool,
    pub random_samples: usize,
    pub equivariant_random: bool,
    /// the combinatorial action matches the group action on classes
    pub actions_agree: bool,
    /// f([1, {0}]) is the origin, the only point fixed by W × C
    pub origin: bool,
    /// f maps {[w, V]} onto the points with nonzero coordinates of distinct
    /// moduli, and f([1, V]) has trivial stabilizer in W
    pub regular_orbit: bool,
    pub ok: bool,
}

/// Exhaustive checks of f and f⁻¹ on the group's parking space, with
/// `samples` extra random (u, d, class) triples.
pub fn verify_bijection(group: &CoxeterGroup, samples: usize, seed: u64) -> Result<BijectionReport> {
    let ty = SignedType::from_label(group.label())
        .ok_or_else(|| Error::Invalid(format!("bijections exist for types B and D, not {}", group.label())))?;
    let park = ParkingSpace::noncrossing(group);
    let spcs: Vec<SignedParkClass> = park
        .classes()
        .iter()
        .map(|pc| class_of_park(group, pc).ok_or_else(|| Error::Verification("flat without a signed partition".into())))
        .collect::<Result<_>>()?;
    let images: Vec<ThetaPoint> = spcs.iter().map(|s| forward(ty, s)).collect();
    let inverse_after_forward = images
        .iter()
        .zip(park.classes())
        .all(|(v, pc)| inverse_point(ty, v).ok().and_then(|s| park_of_class(&park, &s)) == Some(*pc));
    let points = theta_points(ty)?;
    let forward_after_inverse =
        points.iter().all(|v| inverse_point(ty, v).map(|s| forward(ty, &s) == *v).unwrap_or(false));

    let perm = |e| group.signed_perm(e).expect("signed").iter().map(|&x| x as i32).collect::<Vec<i32>>();
    let mut gens: Vec<(u32, i64)> = group.simple_reflections().iter().map(|&s| (s, 0)).collect();
    gens.push((group.identity(), 1));
    let mut actions_agree = true;
    let mut equivariant_generators = true;
    for (i, pc) in park.classes().iter().enumerate() {
        for &(u, d) in &gens {
            let moved = park.act(u, d, pc);
            let spc_moved = spcs[i].act(ty, &perm(u), d);
            actions_agree &= park_of_class(&park, &spc_moved) == Some(moved);
            equivariant_generators &= forward(ty, &spc_moved) == images[i].act(&perm(u), d);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut equivariant_random = true;
    for _ in 0..samples {
        let u = rng.gen_range(0..group.order() as u32);
        let d = rng.gen_range(0..group.coxeter_number() as i64);
        let i = rng.gen_range(0..park.len());
        let moved = park.act(u, d, &park.classes()[i]);
        let lhs = forward(ty, &class_of_park(group, &moved).expect("signed partition"));
        equivariant_random &= lhs == images[i].act(&perm(u), d);
    }

    let zero_class = park.canonical(group.identity(), group.zero_flat());
    let fixed_points: Vec<&ThetaPoint> =
        points.iter().filter(|v| gens.iter().all(|&(u, d)| v.act(&perm(u), d) == **v)).collect();
    let origin = fixed_points.len() == 1
        && fixed_points[0].is_origin()
        && images[park.index_of(&zero_class).expect("zero class")].is_origin();

    let m = ty.circle() as u32;
    // in type D the coordinate labelling {±n} is always 0
    let regular_points: std::collections::BTreeSet<&ThetaPoint> = points
        .iter()
        .filter(|v| {
            let mut mods: Vec<u32> = v.coords.iter().flatten().map(|e| e % m).collect();
            mods.sort_unstable();
            mods.dedup();
            mods.len() == m as usize && v.zeros() == ty.n() - m as usize
        })
        .collect();
    let full = group.full_flat();
    let regular_images: std::collections::BTreeSet<&ThetaPoint> =
        park.classes().iter().zip(&images).filter(|(pc, _)| pc.flat == full).map(|(_, v)| v).collect();
    let base = &images[park.index_of(&park.canonical(group.identity(), full)).expect("[1, V]")];
    let trivial_stabilizer = group.elements().filter(|&u| base.act(&perm(u), 0) == *base).count() == 1;
    let regular_orbit = regular_points == regular_images && trivial_stabilizer;

    let ok = inverse_after_forward
        && forward_after_inverse
        && equivariant_generators
        && equivariant_random
        && actions_agree
        && origin
        && regular_orbit
        && images.len() == points.len();
    Ok(BijectionReport {
        group: group.label().to_string(),
        classes: park.len(),
        points: points.len(),
        inverse_after_forward,
        forward_after_inverse,
        equivariant_generators,
        random_samples: samples,
        equivariant_random,
        actions_agree,
        origin,
        regular_orbit,
        ok,
    })
}

/// Round trip f ∘ f⁻¹ over every point, with noncrossing and distinctness of
/// the recovered classes, without building the group.
pub fn verify_points_combinatorially(ty: SignedType) -> Result<bool> {
    let points = theta_points(ty)?;
    let mut seen = std::collections::HashSet::with_capacity(points.len());
    for v in &points {
        let spc = inverse_point(ty, v)?;
        if forward(ty, &spc) != *v
            || !spc.is_consistent(ty)
            || !is_noncrossing(ty, &spc.partition)
            || !seen.insert(spc)
        {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests;
