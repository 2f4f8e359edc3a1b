use super::*;
use crate::group::GroupLabel;

fn group(s: &str) -> CoxeterGroup {
    CoxeterGroup::build_default(&s.parse::<GroupLabel>().unwrap()).unwrap()
}

fn ints(p: &QPoly) -> Vec<i64> {
    coeffs_i64(p)
}

#[test]
fn q_catalan_of_a2() {
    let g = group("A2");
    assert_eq!(ints(&cat_q(&g, 4).unwrap()), vec![1, 0, 1, 1, 1, 0, 1]);
    assert_eq!(ints(&cat_q(&g, 1).unwrap()), vec![1]);
    assert!(cat_q(&g, 0).is_err());
}

#[test]
fn catalan_numbers_match_degree_product() {
    for (s, cat) in [("A1", 2), ("A3", 14), ("B3", 20), ("D4", 50), ("I2:7", 9), ("H3", 32), ("F4", 105)] {
        let g = group(s);
        assert_eq!(catalan_number(&g), cat, "{s}");
        let h = g.coxeter_number() as u64;
        let num: u64 = g.degrees().iter().map(|&d| h + d as u64).product();
        let den: u64 = g.degrees().iter().map(|&d| d as u64).product();
        assert_eq!(num / den, cat);
    }
}

#[test]
fn cyclic_sieving() {
    let g = group("A2");
    let nc = NoncrossingSet::new(&g);
    let r = csp_check(&g, &nc).unwrap();
    assert_eq!(r.entries[1].fixed, 2);
    assert_eq!(r.entries[0].fixed, 5);
    for s in ["A1", "A4", "B2", "B3", "D4", "G2", "I2:5", "I2:8", "H3"] {
        let g = group(s);
        let nc = NoncrossingSet::new(&g);
        assert!(csp_check(&g, &nc).unwrap().all_equal, "{s}");
    }
}

#[test]
fn narayana_and_kirkman() {
    for (s, nar, kirk) in [
        ("A1", vec![1, 1], vec![2, 1]),
        ("A2", vec![1, 3, 1], vec![5, 5, 1]),
        ("B2", vec![1, 4, 1], vec![6, 6, 1]),
    ] {
        let g = group(s);
        let nk = narayana_kirkman(&g, &NoncrossingSet::new(&g));
        assert_eq!(ints(&nk.narayana), nar, "{s}");
        assert_eq!(ints(&nk.kirkman), kirk, "{s}");
    }
}

#[test]
fn q_kirkman_a2() {
    let g = group("A2");
    let k1 = q_kirkman(&g, 1, default_truncation(&g)).unwrap();
    assert_eq!(ints(&k1), vec![0, 1, 1, 1, 1, 1]);
    assert!(q_kirkman(&g, 3, default_truncation(&g)).is_err());
    // too short to see past the top degree
    assert!(q_kirkman_all(&g, 6).is_err());
}

#[test]
fn q_kirkman_closed_forms() {
    for s in ["A1", "A2", "A3", "B2", "B3", "D4", "G2", "I2:5", "I2:8"] {
        let g = group(s);
        let nc = NoncrossingSet::new(&g);
        let r = q_kirkman_check(&g, &nc, default_truncation(&g)).unwrap();
        assert!(r.all_ok, "{s}: {r:?}");
        assert!(r.rows.iter().any(|row| row.matches == Some(true)), "{s}");
    }
}

#[test]
fn dihedral_formula_at_one() {
    // q[m]_{q²} + q^{m−1}[2]_{q²} at q = 1 is m + 2
    for m in 3..12 {
        let p = kirkman_closed_form(&format!("I2:{m}").parse().unwrap(), 1).unwrap();
        assert_eq!(ints(&p).iter().sum::<i64>(), m as i64 + 2);
    }
}

#[test]
fn fuss_h_polynomial() {
    let g = group("A2");
    let nar = narayana_kirkman(&g, &NoncrossingSet::new(&g)).narayana;
    assert_eq!(h_poly_fuss(&g, 4).unwrap(), nar);
    // the one-point torus: a single orbit whose stabilizer has full rank
    assert_eq!(ints(&h_poly_fuss(&g, 1).unwrap()), vec![0, 0, 1]);
    for (s, p) in [("A2", 7), ("B2", 3), ("A3", 5)] {
        let g = group(s);
        let torus = crate::parking::torus_orbits(&g, p).unwrap();
        let mut census = vec![0i64; g.rank() + 1];
        for o in &torus.orbits {
            census[g.rank() - o.fixed_dim.unwrap()] += 1;
        }
        assert_eq!(ints(&h_poly_fuss(&g, p).unwrap()), census, "{s} p={p}");
    }
}

#[test]
fn intertwiner_at_minus_q_power_is_catalan() {
    let g = group("A2");
    let t = default_truncation(&g);
    let tau = tau_tilde_exterior(&g, t).unwrap();
    let s = tau[0].substitute_u(&CycloNumber::from_int(-1), 4);
    let cat = cat_q(&g, 4).unwrap();
    assert_eq!(s.u_coefficient(0), cat);
}

#[test]
fn near_boundary() {
    assert_eq!(ints(&n_q(&group("A2"))), vec![1, 1]);
    for s in ["A1", "A2", "A3", "B2", "D4", "I2:5", "H3"] {
        let g = group(s);
        let r = near_boundary_check(&g, default_truncation(&g)).unwrap();
        assert!(r.confirmed, "{s}: {r:?}");
        let kirk = q_kirkman_all(&g, default_truncation(&g)).unwrap();
        assert_eq!(near_boundary_kirkman(&g, &kirk).unwrap(), (true, true), "{s}");
    }
}
