use super::*;
use crate::group::GroupLabel;

fn group(s: &str) -> CoxeterGroup {
    CoxeterGroup::build_default(&s.parse::<GroupLabel>().unwrap()).unwrap()
}

fn class(n: usize, blocks: &[&[i32]], zero: &[usize], w: &[i32]) -> SignedParkClass {
    let p = SignedPartition::new(n, blocks.iter().map(|b| b.to_vec()).collect(), zero.to_vec());
    assert!(p.is_valid());
    SignedParkClass::from_perm(p, w)
}

#[test]
fn coxeter_elements() {
    assert_eq!(SignedType::B(3).coxeter(), vec![2, 3, -1]);
    assert_eq!(SignedType::D(4).coxeter(), vec![2, 3, -1, -4]);
    assert_eq!(SignedType::D(4).h(), 6);
    assert_eq!(power(&SignedType::D(5).coxeter(), 8), vec![1, 2, 3, 4, 5]);
}

#[test]
fn point_text() {
    let v = ThetaPoint::parse("(-w^7,0,+w^3,-w^9,+w^1)", 18).unwrap();
    assert_eq!(v.coords, vec![Some(16), None, Some(3), Some(0), Some(1)]);
    assert_eq!(v.to_string(), "(-w^7,0,+w^3,-w^9,+w^1)");
    assert!(ThetaPoint::parse("(x)", 4).is_err());
}

#[test]
fn type_b_example() {
    let ty = SignedType::B(9);
    let pc = class(
        9,
        &[&[1, -6, -9], &[-1, 6, 9], &[3, 4], &[-3, -4], &[7, 8], &[-7, -8]],
        &[2, 5],
        &[-6, -3, 5, -9, 2, -8, -1, -4, 7],
    );
    assert!(is_noncrossing(ty, &pc.partition));
    let v = forward(ty, &pc);
    assert_eq!(v, ThetaPoint::parse("(-w^7,0,0,-w^7,+w^3,+w^6,+w^6,-w^6,-w^3)", 18).unwrap());
    assert_eq!(inverse_point(ty, &v).unwrap(), pc);
}

#[test]
fn type_d_examples() {
    let ty = SignedType::D(7);
    let w = [-1, -5, 2, -7, -6, -4, -3];
    let x1 = class(7, &[&[1, 2, -5], &[-1, -2, 5], &[3, 4], &[-3, -4], &[6], &[-6], &[7], &[-7]], &[], &w);
    let x2 = class(7, &[&[1, 2, -5, -7], &[-1, -2, 5, 7], &[3, 4], &[-3, -4], &[6], &[-6]], &[], &w);
    let x3 = class(7, &[&[3, 4], &[-3, -4], &[6], &[-6]], &[1, 2, 5, 7], &w);
    for (pc, img) in [
        (&x1, "(+w^5,+w^3,0,-w^6,+w^5,-w^5,-w^3)"),
        (&x2, "(+w^5,+w^3,-w^5,-w^6,+w^5,-w^5,-w^3)"),
        (&x3, "(0,+w^3,0,-w^6,0,0,-w^3)"),
    ] {
        assert!(is_noncrossing(ty, &pc.partition), "{pc}");
        let v = forward(ty, pc);
        assert_eq!(v, ThetaPoint::parse(img, 12).unwrap());
        assert_eq!(&inverse_point(ty, &v).unwrap(), pc);
    }
}

#[test]
fn crossing_partitions_rejected() {
    let ty = SignedType::B(3);
    let p = SignedPartition::new(3, vec![vec![1, 3], vec![-1, -3], vec![2], vec![-2]], vec![]);
    assert!(is_noncrossing(ty, &p));
    let p = SignedPartition::new(3, vec![vec![1, -2], vec![-1, 2], vec![3], vec![-3]], vec![]);
    assert!(is_noncrossing(ty, &p));
    // {+1,+3} with {+2,−1}… crossing chords on the circle 1 2 3 −1 −2 −3
    let p = SignedPartition::new(3, vec![vec![1, 3], vec![-1, -3]], vec![2]);
    assert!(!is_noncrossing(ty, &p));
    let p = SignedPartition::new(4, vec![vec![4], vec![-4]], vec![1, 2, 3]);
    assert!(!is_noncrossing(SignedType::D(4), &p));
}

#[test]
fn extreme_points() {
    let ty = SignedType::B(4);
    let zero = class(4, &[], &[1, 2, 3, 4], &[1, 2, 3, 4]);
    assert!(forward(ty, &zero).is_origin());
    let singles = class(4, &[&[1], &[-1], &[2], &[-2], &[3], &[-3], &[4], &[-4]], &[], &[1, 2, 3, 4]);
    assert_eq!(forward(ty, &singles).coords, vec![Some(1), Some(2), Some(3), Some(4)]);
    let ty = SignedType::D(4);
    let zero = class(4, &[], &[1, 2, 3, 4], &[1, 2, 3, 4]);
    assert!(forward(ty, &zero).is_origin());
}

#[test]
fn point_counts() {
    assert_eq!(theta_points(SignedType::B(2)).unwrap().len(), 25);
    assert_eq!(theta_points(SignedType::D(4)).unwrap().len(), 2401);
    assert_eq!(theta_points(SignedType::B(4)).unwrap().len(), 6561);
    assert!(theta_points(SignedType::B(1)).is_err());
}

#[test]
fn bijection_on_groups() {
    for s in ["B2", "B3", "B4", "D3", "D4"] {
        let g = group(s);
        let r = verify_bijection(&g, 100, 7).unwrap();
        assert!(r.ok, "{s}: {r:?}");
        assert_eq!(r.classes, r.points);
    }
    assert!(verify_bijection(&group("A3"), 1, 0).is_err());
}

#[test]
fn group_wrappers() {
    let g = group("B3");
    let park = ParkingSpace::noncrossing(&g);
    for pc in park.classes().iter().step_by(17) {
        let v = bc_forward(&park, pc).unwrap();
        assert_eq!(bc_inverse(&park, &v).unwrap(), *pc);
    }
    assert!(d_forward(&park, &park.classes()[0]).is_err());
}

#[test]
fn rank_five_without_the_group() {
    assert!(verify_points_combinatorially(SignedType::B(5)).unwrap());
    assert!(verify_points_combinatorially(SignedType::D(5)).unwrap());
}

#[test]
fn equivariant_counts_small() {
    assert_eq!(count_equivariant_brute(&[1, 2, 3], 1).unwrap(), 1);
    assert_eq!(count_equivariant_brute(&[2, 3, 1], 1).unwrap(), 4);
    assert_eq!(count_equivariant_formula(&[2, 3, 1], 1).unwrap(), 4);
    // cycles of length 2 and 1 in S_3 with d = 3
    assert_eq!(count_equivariant_brute(&[2, 1, 3], 1).unwrap(), 1);
    assert!(count_equivariant_brute(&[1, 2, 3], 3).is_err());
    assert_eq!(r_d(&[2, 1, 4, 3, 5], 2), 2);
}

#[test]
fn admissible_examples() {
    let c = admissible_census(&[2, 3, 1], 3).unwrap();
    assert_eq!(c.iter().map(|a| a.weight).sum::<u64>(), 4);
    let id = admissible_census(&[1, 2, 3, 4], 2).unwrap();
    assert_eq!(id.len(), 1);
    assert_eq!(id[0].blocks, vec![vec![1, 2, 3, 4]]);
    assert_eq!(id[0].weight, 1);
    let big_d = admissible_census(&[2, 1, 3], 5).unwrap();
    assert_eq!(big_d.len(), 1);
}

#[test]
fn symmetric_noncrossing_by_type() {
    for (n, d) in [(4, 2), (6, 2), (6, 3), (8, 4), (9, 3)] {
        assert!(verify_athanasiadis(n, d).unwrap(), "n={n} d={d}");
    }
}

#[test]
fn three_way_counts() {
    for s in ["A1", "A2", "A3", "A4", "A5"] {
        let r = verify_type_a_counts(&group(s)).unwrap();
        assert!(r.all_equal, "{s}: {:?}", r.rows.iter().find(|x| !x.equal));
    }
}
