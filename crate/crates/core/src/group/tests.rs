use super::*;

fn build(s: &str) -> CoxeterGroup {
    CoxeterGroup::build_default(&s.parse().unwrap()).unwrap()
}

fn sorted_sizes(g: &CoxeterGroup) -> Vec<u64> {
    let mut s = g.classes().sizes.clone();
    s.sort_unstable();
    s
}

#[test]
fn small_orders_and_classes() {
    let g = build("A2");
    assert_eq!((g.order(), g.coxeter_number(), g.reflections().len()), (6, 3, 3));
    assert_eq!(g.degrees(), &[2, 3]);
    assert_eq!(sorted_sizes(&g), vec![1, 2, 3]);
    let g = build("B2");
    assert_eq!((g.order(), g.coxeter_number()), (8, 4));
    assert_eq!(g.classes().reps.len(), 5);
    let g = build("A1");
    assert_eq!((g.order(), g.coxeter_number()), (2, 2));
    assert_eq!(sorted_sizes(&g), vec![1, 1]);
}

#[test]
fn all_supported_groups_build() {
    for (s, order) in [("A0", 1), ("A3", 24), ("B3", 48), ("D4", 192), ("G2", 12), ("I2:5", 10), ("H3", 120), ("F4", 1152)] {
        let g = build(s);
        assert_eq!(g.order(), order, "{s}");
        assert_eq!(g.element_order(g.coxeter_element()), g.coxeter_number() as usize);
        assert_eq!(g.reflection_length(g.coxeter_element()), g.rank());
        assert_eq!(g.flat(g.zero_flat()).dim(), 0);
    }
}

#[test]
fn stretch_needs_opt_in() {
    let l: GroupLabel = "H4".parse().unwrap();
    assert!(CoxeterGroup::build(&l, &BuildOptions::default()).is_err());
}

#[test]
fn reflection_lengths() {
    let g = build("B3");
    assert_eq!(g.reflection_length(g.identity()), 0);
    assert!(g.reflections().iter().all(|&t| g.reflection_length(t) == 1));
    for (i, c) in g.classes().reps.iter().enumerate() {
        let l = g.reflection_length(*c);
        assert!(g.elements().filter(|&w| g.classes().class_of[w as usize] as usize == i).all(|w| g.reflection_length(w) == l));
    }
}

#[test]
fn coxeter_elements_as_signed_permutations() {
    // type B: (+1,+2,…,+n,−1,…,−n)
    let g = build("B3");
    assert_eq!(g.signed_perm(g.coxeter_element()).unwrap(), &[2, 3, -1]);
    // type D: (+1,…,+(n−1),−1,…)(+n,−n)
    let g = build("D4");
    assert_eq!(g.signed_perm(g.coxeter_element()).unwrap(), &[2, 3, -1, -4]);
    // type A: the (n+1)-cycle
    let g = build("A3");
    assert_eq!(g.signed_perm(g.coxeter_element()).unwrap(), &[2, 3, 4, 1]);
}

#[test]
fn signed_perm_round_trip() {
    let g = build("D4");
    for w in g.elements() {
        let sp = g.signed_perm(w).unwrap().to_vec();
        assert_eq!(g.element_of_signed_perm(&sp), Some(w));
    }
}

#[test]
fn eigen_multiplicities() {
    let g = build("A2");
    let c = g.coxeter_element();
    assert_eq!(g.mult_eigen(g.identity(), 0), 2);
    assert_eq!(g.mult_eigen(c, 1), 1);
    let t = g.reflections()[0];
    let minus_one = CycloNumber::from_int(-1);
    assert_eq!(eigen_multiplicity(&g.matrix(t), &minus_one), 1);
    for name in ["A4", "B3", "D4"] {
        let g = build(name);
        for w in g.elements() {
            for d in 0..g.coxeter_number() as i64 {
                assert_eq!(g.mult_eigen_from_cycles(w, d), Some(g.mult_eigen(w, d)), "{name} {w} {d}");
            }
        }
    }
}

#[test]
fn fixed_space_of_reflection_is_mirror() {
    let g = build("H3");
    for (r, &t) in g.reflections().iter().enumerate() {
        let x = g.fixed_space(t);
        assert_eq!(g.flat(x).dim(), 2);
        assert!(g.flat(x).basis.iter().all(|b| g.inner(b, g.root(r)).is_zero()));
        assert_eq!(g.flat_orthogonal_to(&[r]), Some(x));
    }
}

#[test]
fn bipartite_coxeter_element_has_order_h() {
    let l: GroupLabel = "F4".parse().unwrap();
    let g = CoxeterGroup::build(&l, &BuildOptions { coxeter: CoxeterChoice::Bipartite, allow_stretch: false }).unwrap();
    assert_eq!(g.element_order(g.coxeter_element()), 12);
    assert_eq!(g.coxeter_word(), &[0, 2, 1, 3]);
}

#[test]
fn stabilizers_are_subgroups() {
    let g = build("B3");
    for x in g.flats().ids() {
        let s = g.stabilizer(x);
        assert!(s.members().iter().all(|&a| s.members().iter().all(|&b| s.contains(g.mul(a, b)))));
        assert!(s.contains(g.flat(x).witness()));
    }
    assert_eq!(g.stabilizer(g.full_flat()).len(), 1);
    assert_eq!(g.stabilizer(g.zero_flat()).len(), 48);
}
