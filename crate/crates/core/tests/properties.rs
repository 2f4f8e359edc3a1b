use std::sync::OnceLock;

use num_rational::BigRational;
use proptest::prelude::*;

use parkspace::algebra::poly::QPoly;
use parkspace::bijections::{
    compose, count_equivariant_brute, count_equivariant_formula, forward, inverse, inverse_point, negatives, power,
    theta_points, SignedType, ThetaPoint,
};
use parkspace::group::{CoxeterGroup, GroupLabel};
use parkspace::parking::ParkingSpace;
use parkspace::shi::lp::{strict_witness, Strict};

fn points(ty: SignedType) -> &'static [ThetaPoint] {
    static B5: OnceLock<Vec<ThetaPoint>> = OnceLock::new();
    static D5: OnceLock<Vec<ThetaPoint>> = OnceLock::new();
    match ty {
        SignedType::B(5) => B5.get_or_init(|| theta_points(ty).unwrap()),
        SignedType::D(5) => D5.get_or_init(|| theta_points(ty).unwrap()),
        _ => unreachable!(),
    }
}

fn b3() -> &'static CoxeterGroup {
    static G: OnceLock<CoxeterGroup> = OnceLock::new();
    G.get_or_init(|| CoxeterGroup::build_default(&"B3".parse::<GroupLabel>().unwrap()).unwrap())
}

/// A signed permutation of 1..=n from a shuffle and a sign mask.
fn signed_perm(n: usize) -> impl Strategy<Value = Vec<i32>> {
    (Just((1..=n as i32).collect::<Vec<_>>()).prop_shuffle(), prop::collection::vec(any::<bool>(), n))
        .prop_map(|(p, s)| p.into_iter().zip(s).map(|(x, neg)| if neg { -x } else { x }).collect())
}

fn even_signed_perm(n: usize) -> impl Strategy<Value = Vec<i32>> {
    signed_perm(n).prop_map(|mut w| {
        if negatives(&w) % 2 == 1 {
            w[0] = -w[0];
        }
        w
    })
}

fn int_poly() -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-5i64..=5, 0..6).prop_map(|c| QPoly::from_ints('q', &c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn b5_inverse_is_equivariant(i in 0usize..161_051, u in signed_perm(5), d in -20i64..20) {
        let ty = SignedType::B(5);
        let v = &points(ty)[i];
        let pc = inverse_point(ty, v).unwrap();
        prop_assert_eq!(&forward(ty, &pc), v);
        prop_assert_eq!(inverse_point(ty, &v.act(&u, d)).unwrap(), pc.act(ty, &u, d));
    }

    #[test]
    fn d5_inverse_is_equivariant(i in 0usize..59_049, u in even_signed_perm(5), d in -20i64..20) {
        let ty = SignedType::D(5);
        let v = &points(ty)[i];
        let pc = inverse_point(ty, v).unwrap();
        prop_assert_eq!(&forward(ty, &pc), v);
        prop_assert_eq!(inverse_point(ty, &v.act(&u, d)).unwrap(), pc.act(ty, &u, d));
    }

    #[test]
    fn signed_perms_form_a_group(a in signed_perm(6), b in signed_perm(6), k in -7i64..7, l in -7i64..7) {
        prop_assert_eq!(inverse(&compose(&a, &b)), compose(&inverse(&b), &inverse(&a)));
        prop_assert_eq!(power(&a, k + l), compose(&power(&a, k), &power(&a, l)));
    }

    #[test]
    fn park_action_composes(i in 0usize..343, u in 0u32..48, v in 0u32..48, d in -6i64..6, e in -6i64..6) {
        let g = b3();
        let park = ParkingSpace::noncrossing(g);
        let pc = park.classes()[i];
        let twice = park.act(u, d, &park.act(v, e, &pc));
        prop_assert_eq!(twice, park.act(g.mul(u, v), d + e, &pc));
        prop_assert!(park.index_of(&twice).is_some());
    }

    #[test]
    fn equivariant_count_formula(w in Just((1..=6usize).collect::<Vec<_>>()).prop_shuffle(), l in 1i64..7) {
        if let (Ok(a), Ok(b)) = (count_equivariant_formula(&w, l), count_equivariant_brute(&w, l)) {
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn strict_witness_satisfies_system(
        rows in prop::collection::vec((prop::collection::vec(-3i64..=3, 3), -4i64..=4), 1..9),
    ) {
        let system: Vec<Strict> = rows.into_iter().map(|(a, b)| Strict::new(a, b)).collect();
        if let Some(y) = strict_witness(&system, 3) {
            prop_assert!(system.iter().all(|s| s.holds_at(&y)));
        }
    }

    #[test]
    fn systems_with_a_known_point_are_feasible(
        point in prop::collection::vec(-3i64..=3, 3),
        rows in prop::collection::vec((prop::collection::vec(-3i64..=3, 3), 1i64..4), 1..9),
    ) {
        // each row a·y < a·point + gap holds at the integer point
        let system: Vec<Strict> = rows
            .into_iter()
            .map(|(a, gap)| {
                let at: i64 = a.iter().zip(&point).map(|(x, y)| x * y).sum();
                Strict::new(a, at + gap)
            })
            .collect();
        let y = strict_witness(&system, 3);
        prop_assert!(y.is_some());
        let y: Vec<BigRational> = y.unwrap();
        prop_assert!(system.iter().all(|s| s.holds_at(&y)));
    }

    #[test]
    fn polynomial_division_undoes_multiplication(a in int_poly(), b in int_poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn q_binomials(n in 1usize..9, k in 0usize..9) {
        prop_assume!(k <= n);
        prop_assert_eq!(QPoly::q_binomial('q', n, k), QPoly::q_binomial('q', n, n - k));
        if k >= 1 && k < n {
            // q-Pascal: [n,k] = [n−1,k−1] + q^k [n−1,k]
            let rhs = &QPoly::q_binomial('q', n - 1, k - 1) + &QPoly::q_binomial('q', n - 1, k).shift(k);
            prop_assert_eq!(QPoly::q_binomial('q', n, k), rhs);
        }
    }
}
