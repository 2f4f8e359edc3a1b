//! Identities that every supported group must satisfy, checked exactly.

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::matrix::det_one_minus_q_m;
use crate::algebra::{CycloNumber, QPoly};
use crate::error::Result;
use crate::flats::{coxeter_plane, NoncrossingSet, RootPoset};
use crate::group::{BuildOptions, CoxeterChoice, CoxeterGroup};

/// Σ_w det(w) t^{dim V^w} and Π (t − e_i).
pub fn orlik_solomon(group: &CoxeterGroup) -> (QPoly, QPoly) {
    let n = group.rank();
    let classes = group.classes();
    let mut coeffs = vec![0i64; n + 1];
    for (&rep, &size) in classes.reps.iter().zip(&classes.sizes) {
        coeffs[n - group.reflection_length(rep)] += group.det_sign(rep) * size as i64;
    }
    let lhs = QPoly::from_ints('t', &coeffs);
    let rhs = group
        .exponents()
        .iter()
        .fold(QPoly::one('t'), |acc, &e| &acc * &QPoly::from_ints('t', &[-(e as i64), 1]));
    (lhs, rhs)
}

/// (1/|W|) Σ_w det(w) (h+1)^{dim V^w}, the multiplicity of det in Park.
pub fn det_multiplicity(group: &CoxeterGroup) -> BigRational {
    let n = group.rank();
    let h = BigInt::from(group.coxeter_number() + 1);
    let classes = group.classes();
    let mut total = BigInt::zero();
    for (&rep, &size) in classes.reps.iter().zip(&classes.sizes) {
        let dim = n - group.reflection_length(rep);
        total += BigInt::from(group.det_sign(rep) * size as i64) * h.pow(dim as u32);
    }
    BigRational::new(total, BigInt::from(group.order()))
}

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    BigRational::new(BigInt::from(rng.gen_range(-9i64..=9)), BigInt::from(rng.gen_range(1i64..=9)))
}

/// Σ_{α ∈ Φ⁺} 2⟨a, α⟩⟨b, α⟩/⟨α, α⟩ = h⟨a, b⟩ for `pairs` random rational
/// vectors a, b in simple-root coordinates. Returns the number that held.
pub fn etingof_sum(group: &CoxeterGroup, pairs: usize, seed: u64) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = group.rank();
    let h = CycloNumber::from_int(group.coxeter_number() as i64);
    let two = CycloNumber::from_int(2);
    let weights: Vec<CycloNumber> = (0..group.num_positive_roots())
        .map(|r| {
            let a = group.root(r);
            &two * &group.inner(a, a).inv().expect("nonzero root")
        })
        .collect();
    (0..pairs)
        .filter(|_| {
            let a: Vec<CycloNumber> = (0..n).map(|_| random_rational(&mut rng).into()).collect();
            let b: Vec<CycloNumber> = (0..n).map(|_| random_rational(&mut rng).into()).collect();
            let lhs = (0..group.num_positive_roots()).fold(CycloNumber::zero(), |acc, r| {
                let alpha = group.root(r);
                acc + &(&(&group.inner(&a, alpha) * &group.inner(&b, alpha)) * &weights[r])
            });
            lhs == &h * &group.inner(&a, &b)
        })
        .count()
}

/// Products of the simple reflections in every order, as elements.
pub fn coxeter_elements_of_all_orders(group: &CoxeterGroup) -> Vec<u32> {
    let s = group.simple_reflections();
    (0..s.len())
        .permutations(s.len())
        .map(|p| p.iter().fold(group.identity(), |acc, &i| group.mul(acc, s[i])))
        .collect()
}

/// det(1 − qc) = Π (1 − ω^{e_i} q).
pub fn coxeter_char_poly_ok(group: &CoxeterGroup) -> bool {
    let lhs = det_one_minus_q_m(&group.matrix(group.coxeter_element()));
    let omega = group.omega();
    let rhs = group.exponents().iter().fold(QPoly::one('q'), |acc, &e| {
        let z = omega.pow(e);
        &acc * &QPoly::new('q', vec![CycloNumber::one(), -z])
    });
    lhs == rhs
}

#[derive(Clone, Debug, Serialize)]
pub struct InvariantsReport {
    pub group: String,
    pub order: usize,
    pub degrees: Vec<u32>,
    pub exponents: Vec<u32>,
    pub coxeter_number: u32,
    pub reflections: usize,
    /// |W| = Π d_i
    pub order_is_degree_product: bool,
    /// 2|T| = hn and |T| = |Φ⁺|
    pub reflection_count: bool,
    /// e_i + e_{n+1−i} = h
    pub exponent_duality: bool,
    /// c has order h and V^c = 0
    pub coxeter_element: bool,
    pub coxeter_char_poly: bool,
    /// Coxeter elements of every ordering are conjugate (rank ≤ 4)
    pub coxeter_orderings_conjugate: Option<bool>,
    pub orlik_solomon_lhs: Vec<String>,
    pub orlik_solomon: bool,
    pub etingof_pairs: usize,
    pub etingof_holds: usize,
    pub det_multiplicity: String,
    /// eigenvalue multiplicities from cycle types agree with the matrices
    pub eigen_fast_path: Option<bool>,
    pub nc_poset: bool,
    pub conjugate_to_noncrossing: bool,
    pub w_c_orbits_of_lines: bool,
    pub reflections_to_lines: bool,
    /// noncrossing lines project to nonzero vectors in the Coxeter plane
    pub lines_not_perpendicular: bool,
    /// root-difference closure = root order = ℕΦ⁺ order (crystallographic)
    pub root_poset_orders: Option<bool>,
    pub ok: bool,
}

/// Runs the whole identity suite.
pub fn verify_invariants(group: &CoxeterGroup, etingof_pairs: usize, seed: u64) -> Result<InvariantsReport> {
    let n = group.rank();
    let h = group.coxeter_number();
    let exps = group.exponents();
    let degree_product: u64 = group.degrees().iter().map(|&d| d as u64).product();
    let t = group.reflections().len();
    let c = group.coxeter_element();

    let classes = group.classes();
    let coxeter_orderings_conjugate = (n <= 4).then(|| {
        let cls = classes.class_of[c as usize];
        coxeter_elements_of_all_orders(group).iter().all(|&e| classes.class_of[e as usize] == cls)
    });
    let (os_lhs, os_rhs) = orlik_solomon(group);
    let etingof_holds = etingof_sum(group, etingof_pairs, seed);
    let det = det_multiplicity(group);
    let eigen_fast_path = group.signed_perm(group.identity()).map(|_| {
        classes.reps.iter().all(|&w| (0..h as i64).all(|d| group.mult_eigen_from_cycles(w, d) == Some(group.mult_eigen(w, d))))
    });

    let nc = NoncrossingSet::new(group);
    let lines_not_perpendicular = if group.coxeter_choice() == CoxeterChoice::Bipartite {
        coxeter_plane(group, &nc)?.all_lines_project_nonzero()
    } else {
        let bip = CoxeterGroup::build(
            group.label(),
            &BuildOptions { coxeter: CoxeterChoice::Bipartite, allow_stretch: true },
        )?;
        let nc_bip = NoncrossingSet::new(&bip);
        coxeter_plane(&bip, &nc_bip)?.all_lines_project_nonzero()
    };

    let root_poset_orders = if group.is_crystallographic() {
        let poset = RootPoset::new(group)?;
        let closure = poset.closure_of_root_differences();
        let m = poset.len();
        Some((0..m).all(|a| (0..m).all(|b| closure[a][b] == poset.leq(a, b) && poset.in_positive_root_monoid(a, b) == poset.leq(a, b))))
    } else {
        None
    };

    let report = InvariantsReport {
        group: group.label().to_string(),
        order: group.order(),
        degrees: group.degrees().to_vec(),
        exponents: exps.clone(),
        coxeter_number: h,
        reflections: t,
        order_is_degree_product: degree_product == group.order() as u64,
        reflection_count: 2 * t == h as usize * n && t == group.num_positive_roots(),
        exponent_duality: (0..n).all(|i| exps[i] + exps[n - 1 - i] == h),
        coxeter_element: group.element_order(c) == h as usize && group.reflection_length(c) == n,
        coxeter_char_poly: coxeter_char_poly_ok(group),
        coxeter_orderings_conjugate,
        orlik_solomon_lhs: os_lhs.coeffs().iter().map(|x| x.to_string()).collect(),
        orlik_solomon: os_lhs == os_rhs,
        etingof_pairs,
        etingof_holds,
        det_multiplicity: det.to_string(),
        eigen_fast_path,
        nc_poset: nc.check_poset(group),
        conjugate_to_noncrossing: nc.check_conjugate_to_noncrossing(group),
        w_c_orbits_of_lines: nc.check_w_c_orbits(group),
        reflections_to_lines: nc.check_reflection_bijection(group),
        lines_not_perpendicular,
        root_poset_orders,
        ok: false,
    };
    let ok = report.order_is_degree_product
        && report.reflection_count
        && report.exponent_duality
        && report.coxeter_element
        && report.coxeter_char_poly
        && report.coxeter_orderings_conjugate != Some(false)
        && report.orlik_solomon
        && etingof_holds == etingof_pairs
        && det.is_one()
        && report.eigen_fast_path != Some(false)
        && report.nc_poset
        && report.conjugate_to_noncrossing
        && report.w_c_orbits_of_lines
        && report.reflections_to_lines
        && report.lines_not_perpendicular
        && report.root_poset_orders != Some(false);
    Ok(InvariantsReport { ok, ..report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupLabel;

    fn group(s: &str) -> CoxeterGroup {
        CoxeterGroup::build_default(&s.parse::<GroupLabel>().unwrap()).unwrap()
    }

    #[test]
    fn orlik_solomon_a2() {
        let (lhs, rhs) = orlik_solomon(&group("A2"));
        // (t − 1)(t − 2)
        assert_eq!(lhs, QPoly::from_ints('t', &[2, -3, 1]));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn det_appears_once() {
        for s in ["A1", "A4", "B3", "D4", "I2:9", "H3", "F4"] {
            assert!(det_multiplicity(&group(s)).is_one(), "{s}");
        }
    }

    #[test]
    fn etingof_with_seed() {
        let g = group("H3");
        assert_eq!(etingof_sum(&g, 20, 11), 20);
        assert_eq!(etingof_sum(&group("G2"), 20, 3), 20);
    }

    #[test]
    fn orderings_give_conjugate_elements() {
        let g = group("B3");
        let all = coxeter_elements_of_all_orders(&g);
        assert_eq!(all.len(), 6);
        let cls = &g.classes().class_of;
        assert!(all.iter().all(|&e| cls[e as usize] == cls[g.coxeter_element() as usize]));
    }

    #[test]
    fn full_suite() {
        for s in ["A1", "A3", "B2", "B4", "D4", "G2", "I2:5", "I2:12", "H3", "F4"] {
            let r = verify_invariants(&group(s), 20, 1).unwrap();
            assert!(r.ok, "{s}: {r:?}");
        }
    }
}
