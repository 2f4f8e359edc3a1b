//! One PASS/FAIL line per acceptance criterion. Runs without the libtest
//! harness so the lines always reach the terminal.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::gcd;
use num_rational::BigRational;
use num_traits::One;

use parkspace::bijections::{
    forward, inverse_point, is_noncrossing, verify_bijection, verify_points_combinatorially, verify_type_a_counts,
    SignedParkClass, SignedType, ThetaPoint,
};
use parkspace::catalan::{
    catalan_number, coeffs_i64, csp_check, default_truncation, h_poly_fuss, narayana_kirkman, near_boundary_check,
    near_boundary_kirkman, q_kirkman_all, q_kirkman_check,
};
use parkspace::flats::partition::SignedPartition;
use parkspace::flats::{orbit_census, NoncrossingSet};
use parkspace::group::{CoxeterGroup, GroupLabel};
use parkspace::invariants::verify_invariants;
use parkspace::parking::{
    burnside_count, expected_size, exterior_multiplicities, frobenius_characteristic, torus_orbits,
    verify_weak_conjecture, ParkingSpace,
};
use parkspace::shi::{verify_shi, ShiData};

fn group(s: &str) -> CoxeterGroup {
    CoxeterGroup::build_default(&s.parse::<GroupLabel>().unwrap()).unwrap()
}

fn dihedral(upto: u32) -> Vec<String> {
    (3..=upto).map(|m| format!("I2:{m}")).collect()
}

fn labels(fixed: &[&str], upto_m: u32) -> Vec<String> {
    fixed.iter().map(|s| s.to_string()).chain(dihedral(upto_m)).collect()
}

/// Every group the library supports without stretch options.
fn supported() -> Vec<String> {
    labels(&["A1", "A2", "A3", "A4", "A5", "A6", "B2", "B3", "B4", "B5", "D4", "D5", "G2", "H3", "F4"], 12)
}

/// Runs `check` on each label and returns the labels that failed.
fn failures(labels: &[String], check: impl Fn(&CoxeterGroup) -> bool) -> Vec<String> {
    labels.iter().filter(|s| !check(&group(s))).cloned().collect()
}

fn fuss_catalan(g: &CoxeterGroup, p: u64) -> BigRational {
    let num: BigInt = g.exponents().iter().map(|&e| BigInt::from(p + e as u64)).product();
    let den: BigInt = g.degrees().iter().map(|&d| BigInt::from(d)).product();
    BigRational::new(num, den)
}

fn weak_conjecture() -> Vec<String> {
    let list = labels(&["A1", "A2", "A3", "A4", "A5", "A6", "B2", "B3", "B4", "D4", "H3", "F4"], 12);
    failures(&list, |g| verify_weak_conjecture(g).all_equal)
}

fn sizes_and_orbits() -> Vec<String> {
    let mut bad = failures(&supported(), |g| {
        let park = ParkingSpace::noncrossing(g);
        park.len() as u64 == expected_size(g) && park.num_w_orbits() as u64 == catalan_number(g)
    });
    let g = group("A2");
    let park = ParkingSpace::noncrossing(&g);
    let mut orbit_sizes: Vec<usize> = (0..park.flats().len()).map(|i| park.coset_reps(i).len()).collect();
    orbit_sizes.sort_unstable();
    let frob = frobenius_characteristic(&park).unwrap();
    let expected: BTreeMap<Vec<usize>, usize> = [(vec![3], 1), (vec![2, 1], 3), (vec![1, 1, 1], 1)].into();
    if park.len() != 16 || orbit_sizes != [1, 3, 3, 3, 6] || frob != expected {
        bad.push("A2 table".into());
    }
    bad
}

fn cyclic_sieving() -> Vec<String> {
    failures(&supported(), |g| csp_check(g, &NoncrossingSet::new(g)).unwrap().all_equal)
}

fn q_kirkman() -> Vec<String> {
    // closed forms exist for these; the boundary rows and t = 1 are checked everywhere
    let closed = labels(&["A2", "A3", "A4", "A5", "B2", "B3", "B4", "D4"], 12);
    let mut bad = failures(&closed, |g| {
        let r = q_kirkman_check(g, &NoncrossingSet::new(g), default_truncation(g)).unwrap();
        r.all_ok && r.rows.iter().any(|row| row.matches == Some(true))
    });
    bad.extend(failures(&labels(&["A1", "A6", "B5", "D5", "G2", "H3", "F4"], 0), |g| {
        q_kirkman_check(g, &NoncrossingSet::new(g), default_truncation(g)).unwrap().all_ok
    }));
    bad
}

fn exterior_powers() -> Vec<String> {
    failures(&supported(), |g| {
        let nc = NoncrossingSet::new(g);
        let kirk = coeffs_i64(&narayana_kirkman(g, &nc).kirkman);
        let ext = exterior_multiplicities(&ParkingSpace::noncrossing(g)).unwrap();
        let n = g.rank();
        ext.len() == n + 1
            && ext.iter().enumerate().all(|(k, m)| *m == BigInt::from(kirk.get(k).copied().unwrap_or(0)))
            && ext[n].is_one()
    })
}

fn class(n: usize, blocks: &[&[i32]], zero: &[usize], w: &[i32]) -> SignedParkClass {
    let p = SignedPartition::new(n, blocks.iter().map(|b| b.to_vec()).collect(), zero.to_vec());
    SignedParkClass::from_perm(p, w)
}

fn worked_examples() -> bool {
    let b9 = SignedType::B(9);
    let pc = class(
        9,
        &[&[1, -6, -9], &[-1, 6, 9], &[3, 4], &[-3, -4], &[7, 8], &[-7, -8]],
        &[2, 5],
        &[-6, -3, 5, -9, 2, -8, -1, -4, 7],
    );
    let img = ThetaPoint::parse("(-w^7,0,0,-w^7,+w^3,+w^6,+w^6,-w^6,-w^3)", 18).unwrap();
    let mut ok = is_noncrossing(b9, &pc.partition) && forward(b9, &pc) == img && inverse_point(b9, &img).unwrap() == pc;

    let d7 = SignedType::D(7);
    let w = [-1, -5, 2, -7, -6, -4, -3];
    let cases = [
        (
            class(7, &[&[1, 2, -5], &[-1, -2, 5], &[3, 4], &[-3, -4], &[6], &[-6], &[7], &[-7]], &[], &w),
            "(+w^5,+w^3,0,-w^6,+w^5,-w^5,-w^3)",
        ),
        (
            class(7, &[&[1, 2, -5, -7], &[-1, -2, 5, 7], &[3, 4], &[-3, -4], &[6], &[-6]], &[], &w),
            "(+w^5,+w^3,-w^5,-w^6,+w^5,-w^5,-w^3)",
        ),
        (class(7, &[&[3, 4], &[-3, -4], &[6], &[-6]], &[1, 2, 5, 7], &w), "(0,+w^3,0,-w^6,0,0,-w^3)"),
    ];
    for (pc, s) in cases {
        let img = ThetaPoint::parse(s, 12).unwrap();
        ok &= is_noncrossing(d7, &pc.partition) && forward(d7, &pc) == img && inverse_point(d7, &img).unwrap() == pc;
    }
    ok
}

fn bijections() -> Vec<String> {
    let list: Vec<String> = ["B2", "B3", "B4", "D3", "D4"].iter().map(|s| s.to_string()).collect();
    let mut bad = failures(&list, |g| verify_bijection(g, 200, 2024).unwrap().ok);
    for ty in [SignedType::B(5), SignedType::D(5)] {
        if !verify_points_combinatorially(ty).unwrap() {
            bad.push(format!("{ty:?} points"));
        }
    }
    if !worked_examples() {
        bad.push("worked examples".into());
    }
    bad
}

fn type_a_three_ways() -> Vec<String> {
    let list = labels(&["A1", "A2", "A3", "A4", "A5"], 0);
    failures(&list, |g| verify_type_a_counts(g).unwrap().all_equal)
}

fn shi() -> Vec<String> {
    let expected = [("A1", 3), ("A2", 16), ("B2", 25), ("G2", 49), ("A3", 125), ("B3", 343)];
    let mut bad = Vec::new();
    for (s, count) in expected {
        let g = group(s);
        let r = verify_shi(&g).unwrap();
        let regions = ShiData::new(&g).unwrap().regions().unwrap().len();
        if !(r.ok && r.regions == count && regions == count && r.antichains_ok && r.inverse_ok) {
            bad.push(s.to_string());
        }
    }
    bad
}

fn torus() -> Vec<String> {
    let list = labels(&["A2", "A3", "A4", "B2", "B3", "D4"], 0);
    failures(&list, |g| {
        let h = g.coxeter_number() as u64;
        let nn = ParkingSpace::nonnesting(g).unwrap();
        let at_h1 = torus_orbits(g, h + 1).unwrap();
        let census = at_h1.stabilizer_census() == Some(orbit_census(g, nn.flats()));
        let coprime: Vec<u64> = (2..).filter(|&p| gcd(p, h) == 1).take(3).collect();
        let burnside = coprime.iter().all(|&p| {
            let r = torus_orbits(g, p).unwrap();
            let count = BigRational::from_integer(BigInt::from(r.orbits.len()));
            r.burnside_matches && burnside_count(g, p) == count && fuss_catalan(g, p) == count
        });
        let nar = coeffs_i64(&narayana_kirkman(g, &NoncrossingSet::new(g)).narayana);
        let hpoly = coeffs_i64(&h_poly_fuss(g, h + 1).unwrap());
        census && burnside && hpoly == nar
    })
}

fn identities() -> Vec<String> {
    failures(&supported(), |g| verify_invariants(g, 20, 99).unwrap().ok)
}

fn near_boundary() -> Vec<String> {
    let list = labels(&["A1", "A2", "A3", "A4", "B2", "B3", "D4", "H3"], 10);
    failures(&list, |g| {
        let t = default_truncation(g);
        let r = near_boundary_check(g, t).unwrap();
        let kirk = q_kirkman_all(g, t).unwrap();
        let (first, last) = near_boundary_kirkman(g, &kirk).unwrap();
        r.confirmed && first && last
    })
}

fn main() {
    let criteria: [(&str, fn() -> Vec<String>); 11] = [
        ("weak conjecture: W x C characters agree", weak_conjecture),
        ("|Park^NC| = (h+1)^n, Cat(W) orbits, A2 table", sizes_and_orbits),
        ("cyclic sieving for NC under c", cyclic_sieving),
        ("q-Kirkman closed forms and boundary rows", q_kirkman),
        ("exterior power multiplicities, det once", exterior_powers),
        ("explicit bijections in types B and D", bijections),
        ("type A equivariant count three ways", type_a_three_ways),
        ("Shi regions and nonnesting labels", shi),
        ("finite torus orbits and Fuss h-polynomial", torus),
        ("identity suite", identities),
        ("near-boundary product formulas", near_boundary),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let bad = check();
        let secs = start.elapsed().as_secs_f64();
        if bad.is_empty() {
            println!("PASS {:>2} {name} ({secs:.1}s)", i + 1);
        } else {
            println!("FAIL {:>2} {name}: {}", i + 1, bad.join(", "));
            failed.push(i + 1);
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
