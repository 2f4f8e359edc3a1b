use super::*;

fn build(s: &str) -> CoxeterGroup {
    CoxeterGroup::build_default(&s.parse().unwrap()).unwrap()
}

#[test]
fn a2_table() {
    let g = build("A2");
    let park = ParkingSpace::noncrossing(&g);
    assert_eq!(park.len(), 16);
    assert_eq!(park.num_w_orbits(), 5);
    let frob = frobenius_characteristic(&park).unwrap();
    let expect: BTreeMap<Vec<usize>, usize> = [(vec![3], 1), (vec![2, 1], 3), (vec![1, 1, 1], 1)].into_iter().collect();
    assert_eq!(frob, expect);
}

#[test]
fn a1_orbits() {
    let g = build("A1");
    let park = ParkingSpace::noncrossing(&g);
    assert_eq!(park.len(), 3);
    let zero = ParkClass { rep: 0, flat: g.zero_flat() };
    assert!(park.index_of(&zero).is_some());
    let s = g.simple_reflections()[0];
    let v1 = ParkClass { rep: 0, flat: g.full_flat() };
    assert_eq!(park.act(s, 0, &v1), ParkClass { rep: s, flat: g.full_flat() });
    assert_eq!(park.act(0, 1, &v1), ParkClass { rep: s, flat: g.full_flat() });
}

#[test]
fn sizes_match_h_plus_one_to_n() {
    for s in ["A3", "B2", "B3", "D4", "G2", "I2:7", "H3"] {
        let g = build(s);
        assert_eq!(ParkingSpace::noncrossing(&g).len() as u64, expected_size(&g), "{s}");
    }
    for s in ["A3", "B3", "D4", "G2"] {
        let g = build(s);
        assert_eq!(ParkingSpace::nonnesting(&g).unwrap().len() as u64, expected_size(&g), "{s}");
    }
    assert!(ParkingSpace::nonnesting(&build("H3")).is_err());
}

#[test]
fn small_character_values() {
    let g = build("A2");
    let park = ParkingSpace::noncrossing(&g);
    let c = g.coxeter_element();
    assert_eq!(park_nc_character(&park, 0, 0), 16);
    assert_eq!(park_nc_character(&park, 0, 1), 1);
    assert_eq!(park_nc_character(&park, c, 0), 1);
    assert_eq!(park_alg_character(&g, c, 1), 4);
    assert_eq!(park_alg_character(&g, g.reflections()[0], 0), 4);
}

#[test]
fn weak_conjecture_small() {
    for s in ["A1", "A2", "A3", "B2", "B3", "D4", "I2:5", "G2", "H3"] {
        let r = verify_weak_conjecture(&build(s));
        assert!(r.all_equal, "{s}");
    }
}

#[test]
fn action_is_a_group_action() {
    let g = build("B2");
    let park = ParkingSpace::noncrossing(&g);
    for pc in park.classes() {
        for a in g.elements() {
            for b in [1, 3, 5] {
                let lhs = park.act(g.mul(a, b), 0, pc);
                let rhs = park.act(a, 0, &park.act(b, 0, pc));
                assert_eq!(lhs, rhs);
            }
            let lhs = park.act(a, 3, pc);
            let rhs = park.act(a, 1, &park.act(0, 2, pc));
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn extreme_orbits() {
    let g = build("A3");
    let park = ParkingSpace::noncrossing(&g);
    let one_v = ParkClass { rep: 0, flat: g.full_flat() };
    let stab = park.stabilizer_of(&one_v);
    let expect: Vec<(Elem, u32)> = (0..g.coxeter_number()).map(|d| (g.coxeter_power(d as i64), d)).collect();
    let mut stab_sorted = stab.clone();
    stab_sorted.sort_by_key(|x| x.1);
    assert_eq!(stab_sorted, expect);
    let fixed_by_all: Vec<&ParkClass> = park
        .classes()
        .iter()
        .filter(|pc| g.simple_reflections().iter().all(|&s| park.act(s, 0, pc) == **pc) && park.act(0, 1, pc) == **pc)
        .collect();
    assert_eq!(fixed_by_all, vec![&ParkClass { rep: 0, flat: g.zero_flat() }]);
}

#[test]
fn exterior_powers_a2() {
    let g = build("A2");
    let park = ParkingSpace::noncrossing(&g);
    let m: Vec<i64> = exterior_multiplicities(&park).unwrap().iter().map(|x| x.try_into().unwrap()).collect();
    assert_eq!(m, vec![5, 5, 1]);
}

#[test]
fn nonnesting_matches_noncrossing_at_d0() {
    let g = build("B3");
    let nc = ParkingSpace::noncrossing(&g);
    let nn = ParkingSpace::nonnesting(&g).unwrap();
    for &u in &g.classes().reps {
        assert_eq!(nc.fixed_count(u, 0), nn.fixed_count(u, 0));
    }
}

#[test]
fn torus_small() {
    let g = build("A2");
    let r = torus_orbits(&g, 4).unwrap();
    assert_eq!(r.orbits.len(), 5);
    assert!(r.burnside_matches);
    assert_eq!(torus_orbits(&g, 1).unwrap().orbits.len(), 1);
    let nn = ParkingSpace::nonnesting(&g).unwrap();
    assert_eq!(r.stabilizer_census().unwrap(), crate::flats::orbit_census(&g, nn.flats()));
    assert_eq!(r.orbit_sizes(), type_a_quotient_orbit_sizes(&g, 4).unwrap());
    let g = build("B2");
    assert_eq!(torus_orbits(&g, 5).unwrap().orbits.len(), 6);
}
