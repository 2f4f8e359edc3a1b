//! q-Catalan, Narayana and Kirkman polynomials, cyclic sieving, Fuss
//! h-polynomials and the near-boundary generating functions.

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::matrix::{det_one_minus_q_m, det_one_plus_t_m, det_t_plus_one_minus_t_m};
use crate::algebra::series::series_sum_over_classes;
use crate::algebra::{CycloNumber, QPoly, QUSeries};
use crate::error::{Error, Result};
use crate::flats::NoncrossingSet;
use crate::group::{CoxeterGroup, Family, GroupLabel};

/// Π [e_i + p]_q / Π [e_i + 1]_q, divided exactly.
pub fn cat_q(group: &CoxeterGroup, p: u32) -> Result<QPoly> {
    if p == 0 {
        return Err(Error::Invalid("Fuss parameter must be positive".into()));
    }
    let exps = group.exponents();
    let num = exps.iter().fold(QPoly::one('q'), |acc, &e| &acc * &QPoly::q_number('q', (e + p) as usize));
    let den = exps.iter().fold(QPoly::one('q'), |acc, &e| &acc * &QPoly::q_number('q', (e + 1) as usize));
    num.div_exact(&den)
}

/// Cat(W) = Cat(W, 1).
pub fn catalan_number(group: &CoxeterGroup) -> u64 {
    let c = cat_q(group, group.coxeter_number() + 1).expect("q-Catalan division is exact");
    coeffs_i64(&c).iter().sum::<i64>() as u64
}

/// Integer coefficients, lowest degree first; panics on non-integers.
pub fn coeffs_i64(p: &QPoly) -> Vec<i64> {
    p.to_i64s().unwrap_or_else(|| panic!("non-integral polynomial {p}"))
}

fn int_poly(p: &QPoly) -> Result<Vec<i64>> {
    p.to_i64s().ok_or_else(|| Error::NonIntegral(format!("{p}")))
}

/// Codegree generating function Σ q^{e_i − 1}.
pub fn n_q(group: &CoxeterGroup) -> QPoly {
    group
        .exponents()
        .iter()
        .fold(QPoly::zero('q'), |acc, &e| &acc + &QPoly::monomial('q', CycloNumber::one(), e as usize - 1))
}

/// 2|Φ⁺| + h + 2: past the top degree nh of Cat(W, q).
pub fn default_truncation(group: &CoxeterGroup) -> usize {
    2 * group.num_positive_roots() + group.coxeter_number() as usize + 2
}

#[derive(Clone, Debug, Serialize)]
pub struct CspEntry {
    pub d: u32,
    pub fixed: usize,
    /// Cat(W, ω^d) as an exact number.
    pub evaluation: String,
    pub integral: bool,
    pub equal: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CspReport {
    pub group: String,
    pub h: u32,
    pub catalan_q: Vec<i64>,
    pub entries: Vec<CspEntry>,
    pub all_equal: bool,
}

/// #{X ∈ NC : c^d X = X} against Cat(W, ω^d) for every d.
pub fn csp_check(group: &CoxeterGroup, nc: &NoncrossingSet) -> Result<CspReport> {
    let h = group.coxeter_number();
    let cat = cat_q(group, h + 1)?;
    let omega = group.omega();
    let entries: Vec<CspEntry> = (0..h)
        .map(|d| {
            let value = cat.eval(&omega.pow(d));
            let fixed = nc.fixed_by_rotation(d as i64, h);
            let int = value.to_integer();
            CspEntry {
                d,
                fixed,
                evaluation: value.to_string(),
                integral: int.as_ref().is_some_and(|k| *k >= BigInt::from(0)),
                equal: int == Some(BigInt::from(fixed)),
            }
        })
        .collect();
    let all_equal = entries.iter().all(|e| e.equal && e.integral);
    Ok(CspReport { group: group.label().to_string(), h, catalan_q: int_poly(&cat)?, entries, all_equal })
}

/// Nar_W(t) = Σ_{X ∈ NC} t^{dim X} and Kirk_W(t) = Nar_W(t + 1).
#[derive(Clone, Debug)]
pub struct NarayanaKirkman {
    pub narayana: QPoly,
    pub kirkman: QPoly,
}

pub fn narayana_kirkman(group: &CoxeterGroup, nc: &NoncrossingSet) -> NarayanaKirkman {
    let mut counts = vec![0i64; group.rank() + 1];
    for &x in nc.flats() {
        counts[group.flat(x).dim()] += 1;
    }
    let narayana = QPoly::from_ints('t', &counts);
    let kirkman = narayana.translate(&CycloNumber::one());
    NarayanaKirkman { narayana, kirkman }
}

/// Kirk(W, k; q) for k = 0..n from
/// (1/|W|) Σ_w det(1 + tw) det(1 − q^{h+1} w) / det(1 − qw).
pub fn q_kirkman_all(group: &CoxeterGroup, truncation: usize) -> Result<Vec<QPoly>> {
    let n = group.rank();
    let h = group.coxeter_number() as usize;
    let top = n * h;
    if truncation <= top + 1 {
        return Err(Error::Capability(format!("truncation {truncation} does not reach past degree {top}")));
    }
    let classes = group.classes();
    let terms: Vec<QUSeries> = classes
        .reps
        .par_iter()
        .map(|&w| {
            let m = group.matrix(w);
            let d = det_one_minus_q_m(&m);
            let ext = QUSeries::from_u_poly(&det_one_plus_t_m(&m), truncation, n)?;
            let num = QUSeries::from_q_poly(&d.compose_power(h + 1), truncation, n);
            let den = QUSeries::from_q_poly(&d, truncation, n).inverse()?;
            ext.mul(&num)?.mul(&den)
        })
        .collect::<Result<_>>()?;
    let avg = series_sum_over_classes(&terms, &classes.sizes, group.order() as u64, true)?;
    if !avg.tail_vanishes_after(top) {
        let degree = (top + 1..truncation).find(|&i| (0..=n).any(|j| !avg.coeff(i, j).is_zero())).unwrap_or(top);
        return Err(Error::NonzeroTail { degree, order: truncation });
    }
    Ok((0..=n).map(|k| avg.u_coefficient(k)).collect())
}

pub fn q_kirkman(group: &CoxeterGroup, k: usize, truncation: usize) -> Result<QPoly> {
    if k > group.rank() {
        return Err(Error::Invalid(format!("k = {k} exceeds the rank {}", group.rank())));
    }
    Ok(q_kirkman_all(group, truncation)?.swap_remove(k))
}

fn qbin2(n: usize, k: usize) -> QPoly {
    QPoly::q_binomial('q', n, k).compose_power(2)
}

fn q_pow(k: usize) -> QPoly {
    QPoly::monomial('q', CycloNumber::one(), k)
}

/// Product formulas for Kirk(W, k; q) in types A, B, D and the dihedral k = 1 case.
pub fn kirkman_closed_form(label: &GroupLabel, k: usize) -> Option<QPoly> {
    match label.family {
        Family::A(r) => {
            let n = r + 1;
            if k >= n {
                return None;
            }
            let num = &(&q_pow(k * (k + 1) / 2) * &QPoly::q_binomial('q', n, k))
                * &QPoly::q_binomial('q', 2 * n - k, n - k - 1);
            Some(num.div_exact(&QPoly::q_number('q', n)).expect("type A Kirkman division is exact"))
        }
        Family::B(n) => {
            if k > n {
                return None;
            }
            Some(&(&q_pow(k * k) * &qbin2(n, k)) * &qbin2(2 * n - k, n - k))
        }
        Family::D(n) => {
            if k > n {
                return None;
            }
            let first = &(&q_pow(k * k) * &qbin2(n - 1, k)) * &qbin2(2 * n - k - 1, n - k);
            let second = &(&q_pow(k * k + n - 2 * k) * &qbin2(n, k)) * &qbin2((2 * n - k).saturating_sub(2), n - k);
            Some(&first + &second)
        }
        Family::I2(m) => dihedral_kirkman_one(m as usize, k),
        Family::G2 => dihedral_kirkman_one(6, k),
        _ => None,
    }
}

fn dihedral_kirkman_one(m: usize, k: usize) -> Option<QPoly> {
    (k == 1).then(|| {
        &(&q_pow(1) * &QPoly::q_number('q', m).compose_power(2))
            + &(&q_pow(m - 1) * &QPoly::q_number('q', 2).compose_power(2))
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct KirkmanRow {
    pub k: usize,
    pub intertwiner: Vec<i64>,
    pub closed_form: Option<Vec<i64>>,
    pub matches: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct QKirkmanReport {
    pub group: String,
    pub truncation: usize,
    pub rows: Vec<KirkmanRow>,
    /// Kirk(W, n; q) = q^{|Φ⁺|}
    pub top_is_q_power: bool,
    /// Kirk(W, 0; q) = Cat(W, q)
    pub bottom_is_catalan: bool,
    /// Σ_k Kirk(W, k; 1)(t − 1)^k = Nar_W(t)
    pub at_one_gives_narayana: bool,
    pub all_ok: bool,
}

pub fn q_kirkman_check(group: &CoxeterGroup, nc: &NoncrossingSet, truncation: usize) -> Result<QKirkmanReport> {
    let n = group.rank();
    let kirk = q_kirkman_all(group, truncation)?;
    let rows: Vec<KirkmanRow> = kirk
        .iter()
        .enumerate()
        .map(|(k, p)| {
            let closed = kirkman_closed_form(group.label(), k);
            Ok(KirkmanRow {
                k,
                intertwiner: int_poly(p)?,
                matches: closed.as_ref().map(|c| c == p),
                closed_form: closed.as_ref().map(int_poly).transpose()?,
            })
        })
        .collect::<Result<_>>()?;
    let top_is_q_power = kirk[n] == q_pow(group.num_positive_roots());
    let bottom_is_catalan = kirk[0] == cat_q(group, group.coxeter_number() + 1)?;
    let t_minus_one = QPoly::from_ints('t', &[-1, 1]);
    let mut at_one = QPoly::zero('t');
    for (k, p) in kirk.iter().enumerate() {
        at_one = &at_one + &t_minus_one.pow(k as u32).scale(&p.eval_at_one());
    }
    let at_one_gives_narayana = at_one == narayana_kirkman(group, nc).narayana;
    let all_ok =
        top_is_q_power && bottom_is_catalan && at_one_gives_narayana && rows.iter().all(|r| r.matches != Some(false));
    Ok(QKirkmanReport {
        group: group.label().to_string(),
        truncation,
        rows,
        top_is_q_power,
        bottom_is_catalan,
        at_one_gives_narayana,
        all_ok,
    })
}

/// (1/|W|) Σ_w det(t + (1 − t)w) p^{dim V^w}. This counts W-orbits x on
/// Q/pQ by t^{rank W_x}; the constant term is the number of free orbits.
pub fn h_poly_fuss(group: &CoxeterGroup, p: u64) -> Result<QPoly> {
    let classes = group.classes();
    let terms: Vec<QPoly> = (0..classes.reps.len())
        .into_par_iter()
        .map(|i| {
            let w = classes.reps[i];
            let dim = group.flat(group.fixed_space(w)).dim();
            let weight = BigInt::from(classes.sizes[i]) * BigInt::from(p).pow(dim as u32);
            det_t_plus_one_minus_t_m(&group.matrix(w)).scale(&CycloNumber::from_bigint(weight))
        })
        .collect();
    let sum = terms.iter().fold(QPoly::zero('t'), |acc, t| &acc + t);
    let avg = sum.scale(&CycloNumber::from_rational(BigRational::new(1.into(), BigInt::from(group.order()))));
    if !avg.has_nonnegative_integer_coeffs() {
        return Err(Error::NonIntegral(format!("h-polynomial {avg}")));
    }
    Ok(avg)
}

/// τ̃(χ_{∧^k V}; q, u) = (1/|W|) Σ_w χ_{∧^k V}(w) det(1 + uw)/det(1 − qw),
/// for every k at once.
pub fn tau_tilde_exterior(group: &CoxeterGroup, truncation: usize) -> Result<Vec<QUSeries>> {
    let n = group.rank();
    let classes = group.classes();
    let per_class: Vec<(QPoly, QUSeries)> = classes
        .reps
        .par_iter()
        .map(|&w| {
            let m = group.matrix(w);
            let ext = det_one_plus_t_m(&m);
            let base = QUSeries::from_u_poly(&ext, truncation, n)?
                .mul(&QUSeries::from_q_poly(&det_one_minus_q_m(&m), truncation, n).inverse()?)?;
            Ok((ext, base))
        })
        .collect::<Result<_>>()?;
    (0..=n)
        .map(|k| {
            let terms: Vec<QUSeries> = per_class.iter().map(|(ext, base)| base.scale(&ext.coeff(k))).collect();
            series_sum_over_classes(&terms, &classes.sizes, group.order() as u64, true)
        })
        .collect()
}

fn series_product(factors: &[QUSeries]) -> Result<QUSeries> {
    let (first, rest) = factors.split_first().expect("at least one factor");
    rest.iter().try_fold(first.clone(), |acc, f| acc.mul(f))
}

fn linear_u(order: usize, n: usize, const_deg: usize, u_deg_q: usize) -> QUSeries {
    // q^{const_deg} + q^{u_deg_q} u
    QUSeries::monomial(order, n, CycloNumber::one(), const_deg, 0)
        .add(&QUSeries::monomial(order, n, CycloNumber::one(), u_deg_q, 1))
        .expect("same shape")
}

/// 1 / Π (1 − q^{e_i+1}).
fn invariant_hilbert(group: &CoxeterGroup, order: usize, n: usize) -> Result<QUSeries> {
    let den = group
        .exponents()
        .iter()
        .fold(QPoly::one('q'), |acc, &e| &acc * &(&QPoly::one('q') - &q_pow(e as usize + 1)));
    QUSeries::from_q_poly(&den, order, n).inverse()
}

#[derive(Clone, Debug, Serialize)]
pub struct NearBoundaryReport {
    pub group: String,
    pub truncation: usize,
    pub n_q: Vec<i64>,
    /// τ̃(1) = Π (1 + q^{e_i} u)/(1 − q^{e_i+1})
    pub trivial: bool,
    /// τ̃(det) = Π (u + q^{e_i})/(1 − q^{e_i+1})
    pub determinant: bool,
    /// τ̃(χ_V) = n_q (q + u) Π_{i<n} (1 + q^{e_i} u)/Π (1 − q^{e_i+1})
    pub reflection: bool,
    /// τ̃(χ_{∧^{n−1} V}) = n_q (1 + qu) Π_{i<n} (u + q^{e_i})/Π (1 − q^{e_i+1})
    pub co_reflection: bool,
    /// First (q-degree, u-degree) where τ̃(χ_V) and the product differ.
    pub first_mismatch: Option<(usize, usize)>,
    pub confirmed: bool,
}

pub fn near_boundary_check(group: &CoxeterGroup, truncation: usize) -> Result<NearBoundaryReport> {
    let n = group.rank();
    let tau = tau_tilde_exterior(group, truncation)?;
    let mut exps = group.exponents();
    exps.sort_unstable();
    let inv = invariant_hilbert(group, truncation, n)?;
    let nq = n_q(group);
    let nq_series = QUSeries::from_q_poly(&nq, truncation, n);

    let mut triv = vec![inv.clone()];
    let mut det = vec![inv.clone()];
    for &e in &exps {
        triv.push(linear_u(truncation, n, 0, e as usize));
        det.push(linear_u(truncation, n, e as usize, 0));
    }
    let mut refl = vec![inv.clone(), nq_series.clone(), linear_u(truncation, n, 1, 0)];
    let mut corefl = vec![inv, nq_series, linear_u(truncation, n, 0, 1)];
    for &e in &exps[..n - 1] {
        refl.push(linear_u(truncation, n, 0, e as usize));
        corefl.push(linear_u(truncation, n, e as usize, 0));
    }
    let refl_product = series_product(&refl)?;
    let first_mismatch = (0..truncation)
        .flat_map(|i| (0..=n).map(move |j| (i, j)))
        .find(|&(i, j)| tau[1].coeff(i, j) != refl_product.coeff(i, j));
    let trivial = tau[0] == series_product(&triv)?;
    let determinant = tau[n] == series_product(&det)?;
    let reflection = first_mismatch.is_none();
    let co_reflection = tau[n - 1] == series_product(&corefl)?;
    Ok(NearBoundaryReport {
        group: group.label().to_string(),
        truncation,
        n_q: int_poly(&nq)?,
        trivial,
        determinant,
        reflection,
        co_reflection,
        first_mismatch,
        confirmed: trivial && determinant && reflection && co_reflection,
    })
}

/// Kirk(W, 1; q) = q n_q [h]_q/[2h]_q Cat(W, q) and
/// Kirk(W, n−1; q) = q^{|Φ⁺|−h+1} n_q [h+2]_q/[2]_q, the specializations at
/// u = −q^{h+1}. Returns whether each holds.
pub fn near_boundary_kirkman(group: &CoxeterGroup, kirk: &[QPoly]) -> Result<(bool, bool)> {
    let n = group.rank();
    let h = group.coxeter_number() as usize;
    let nq = n_q(group);
    let cat = cat_q(group, h as u32 + 1)?;
    let one = (&(&(&q_pow(1) * &nq) * &QPoly::q_number('q', h)) * &cat)
        .div_exact(&QPoly::q_number('q', 2 * h))
        .map(|p| p == kirk[1])
        .unwrap_or(false);
    let shift = group.num_positive_roots() + 1 - h;
    let top = (&(&q_pow(shift) * &nq) * &QPoly::q_number('q', h + 2))
        .div_exact(&QPoly::q_number('q', 2))
        .map(|p| p == kirk[n - 1])
        .unwrap_or(false);
    Ok((one, top))
}

#[cfg(test)]
mod tests;
