use super::*;
use crate::group::GroupLabel;

fn group(s: &str) -> CoxeterGroup {
    CoxeterGroup::build_default(&s.parse::<GroupLabel>().unwrap()).unwrap()
}

#[test]
fn region_counts() {
    for (s, n) in [("A1", 3), ("A2", 16), ("B2", 25), ("G2", 49)] {
        let g = group(s);
        let regions = ShiData::new(&g).unwrap().regions().unwrap();
        assert_eq!(regions.len(), n, "{s}");
    }
}

#[test]
fn dominant_regions_of_a2() {
    let g = group("A2");
    let data = ShiData::new(&g).unwrap();
    let regions = data.regions().unwrap();
    let dominant: Vec<&ShiRegion> = regions.iter().filter(|r| r.chamber == g.identity()).collect();
    assert_eq!(dominant.len(), 5);
    // all ⟨v, α⟩ in (0, 1): only the highest root gives a ceiling
    let low = dominant.iter().find(|r| r.signs.iter().all(|s| *s == Side::Between)).unwrap();
    assert_eq!(low.ceilings.len(), 1);
    assert_eq!(data.root_coords(low.ceilings[0]), &[1, 1]);
    // unbounded region above every H_{α,1}
    let top = dominant.iter().find(|r| r.signs.iter().all(|s| *s == Side::Above)).unwrap();
    assert!(top.ceilings.is_empty());
    let park = ParkingSpace::nonnesting(&g).unwrap();
    assert_eq!(data.label(&park, top).unwrap(), park.canonical(g.identity(), g.full_flat()));
}

#[test]
fn labelling_is_a_bijection() {
    for s in ["A2", "B2", "G2"] {
        let r = verify_shi(&group(s)).unwrap();
        assert!(r.ok, "{s}: {r:?}");
    }
}

#[test]
fn rejects_unsupported() {
    assert!(ShiData::new(&group("H3")).is_err());
    assert!(ShiData::new(&group("A4")).is_err());
}

#[test]
fn rank_three() {
    for (s, n) in [("A3", 125), ("B3", 343)] {
        let r = verify_shi(&group(s)).unwrap();
        assert_eq!(r.regions, n);
        assert!(r.ok, "{s}: {r:?}");
    }
}

#[test]
fn words_and_records() {
    let g = group("B2");
    let data = ShiData::new(&g).unwrap();
    for w in g.elements() {
        let word = data.reduced_word(w);
        let back = word.iter().fold(g.identity(), |acc, &i| g.mul(acc, g.simple_reflections()[i - 1]));
        assert_eq!(back, w);
    }
    assert_eq!(data.reduced_word(g.identity()), Vec::<usize>::new());
    let park = ParkingSpace::nonnesting(&g).unwrap();
    let regions = data.regions().unwrap();
    let rec = data.record(&park, &regions[0]).unwrap();
    assert_eq!(rec.signs.len(), 4);
    assert_eq!(rec.witness.len(), 2);
}
