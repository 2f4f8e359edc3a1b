use serde_json::{json, Value};

use parkspace::bijections::{verify_bijection, verify_type_a_counts, SignedType};
use parkspace::catalan::{
    catalan_number, coeffs_i64, csp_check, default_truncation, h_poly_fuss, narayana_kirkman, near_boundary_check,
    near_boundary_kirkman, q_kirkman_all, q_kirkman_check,
};
use parkspace::flats::{orbit_census, NoncrossingSet};
use parkspace::group::{BuildOptions, CoxeterGroup, GroupLabel};
use parkspace::invariants::verify_invariants;
use parkspace::parking::{expected_size, exterior_multiplicities, torus_orbits, verify_weak_conjecture, ParkingSpace};
use parkspace::shi::{verify_shi, ShiData};
use parkspace::{Error, Result};

use crate::config::{Command, RunConfig};
use crate::report::Report;

pub fn build_group(config: &RunConfig) -> Result<CoxeterGroup> {
    let label = GroupLabel::parse_with(&config.group, config.allow_stretch)?;
    CoxeterGroup::build(&label, &BuildOptions { allow_stretch: config.allow_stretch, ..Default::default() })
}

fn value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable report")
}

/// Π (p + e_i)/d_i, when it is an integer.
fn fuss_catalan(group: &CoxeterGroup, p: u64) -> Option<u64> {
    let num: u128 = group.exponents().iter().map(|&e| p as u128 + e as u128).product();
    let den: u128 = group.degrees().iter().map(|&d| d as u128).product();
    (num % den == 0).then(|| (num / den) as u64)
}

pub fn execute(config: &RunConfig) -> Result<Report> {
    let group = build_group(config)?;
    let g = &group;
    let name = config.command.name();
    let label = g.label().to_string();
    let h = g.coxeter_number();
    let truncation = config.truncation.unwrap_or_else(|| default_truncation(g));
    let report = |ok: bool, summary: String, result: Value| Report { command: name, group: label.clone(), ok, summary, result };

    Ok(match config.command {
        Command::WeakConjecture => {
            let r = verify_weak_conjecture(g);
            let park = ParkingSpace::noncrossing(g);
            let size_ok = park.len() as u64 == expected_size(g);
            let orbits_ok = park.num_w_orbits() as u64 == catalan_number(g);
            let mismatches = r.pairs.iter().filter(|p| !p.equal).count();
            report(
                r.all_equal && size_ok && orbits_ok,
                format!("{} (class, d) pairs compared, {mismatches} mismatches", r.pairs.len()),
                json!({
                    "park_nc_size": park.len(),
                    "expected_size": expected_size(g),
                    "w_orbits": park.num_w_orbits(),
                    "catalan": catalan_number(g),
                    "characters": value(&r),
                }),
            )
        }
        Command::Csp => {
            let nc = NoncrossingSet::new(g);
            let r = csp_check(g, &nc)?;
            report(r.all_equal, format!("h = {h}, {} rotation powers checked", r.entries.len()), value(&r))
        }
        Command::Qkirkman => {
            let nc = NoncrossingSet::new(g);
            let r = q_kirkman_check(g, &nc, truncation)?;
            let selected = match config.k {
                Some(k) => Some(
                    r.rows
                        .iter()
                        .find(|row| row.k == k)
                        .ok_or_else(|| Error::Invalid(format!("k = {k} exceeds the rank {}", g.rank())))?
                        .clone(),
                ),
                None => None,
            };
            let checked = r.rows.iter().filter(|row| row.matches.is_some()).count();
            let mut v = value(&r);
            v["selected"] = value(&selected);
            report(r.all_ok, format!("{checked} closed forms compared at truncation {truncation}"), v)
        }
        Command::Narayana => {
            let nc = NoncrossingSet::new(g);
            let nk = narayana_kirkman(g, &nc);
            let park = ParkingSpace::noncrossing(g);
            let ext = exterior_multiplicities(&park)?;
            let kirk = coeffs_i64(&nk.kirkman);
            let matches = ext.iter().enumerate().all(|(k, m)| *m == kirk.get(k).copied().unwrap_or(0).into());
            let det_once = ext.last().is_some_and(|m| *m == 1.into());
            report(
                matches && det_once,
                "⟨∧^k V, Park⟩ against the t^k coefficient of Kirk_W(t)".into(),
                json!({
                    "narayana": coeffs_i64(&nk.narayana),
                    "kirkman": kirk,
                    "exterior_multiplicities": ext.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                    "multiplicities_match": matches,
                    "det_once": det_once,
                }),
            )
        }
        Command::Bijection => {
            if SignedType::from_label(g.label()).is_none() {
                return Err(Error::Invalid(format!(
                    "the explicit bijection exists in types B and D; use equivariant-count for type A, not {}",
                    g.label()
                )));
            }
            let r = verify_bijection(g, 100, config.seed)?;
            report(r.ok, format!("{} classes, {} points", r.classes, r.points), value(&r))
        }
        Command::EquivariantCount => {
            let r = verify_type_a_counts(g)?;
            report(r.all_equal, format!("{} (cycle type, ℓ) rows", r.rows.len()), value(&r))
        }
        Command::Shi => {
            let r = verify_shi(g)?;
            let data = ShiData::new(g)?;
            let park = ParkingSpace::nonnesting(g)?;
            let regions = data.regions()?.iter().map(|reg| data.record(&park, reg)).collect::<Result<Vec<_>>>()?;
            let mut v = value(&r);
            v["region_list"] = value(&regions);
            report(r.ok, format!("{} regions, expected {}", r.regions, r.expected), v)
        }
        Command::Torus => {
            let p = config.p.unwrap_or(h as u64 + 1);
            let r = torus_orbits(g, p)?;
            let census = if p == h as u64 + 1 {
                let nn = ParkingSpace::nonnesting(g)?;
                Some(r.stabilizer_census().as_ref() == Some(&orbit_census(g, nn.flats())))
            } else {
                None
            };
            let fuss = if r.coprime_to_h { fuss_catalan(g, p) } else { None };
            let count_ok = fuss.is_none_or(|f| f == r.orbits.len() as u64);
            let mut v = value(&r);
            v["census_matches_park_nn"] = value(&census);
            v["fuss_catalan"] = value(&fuss);
            report(
                r.burnside_matches && census != Some(false) && count_ok,
                format!("{} orbits on {} points", r.orbits.len(), r.points),
                v,
            )
        }
        Command::Fuss => {
            let p = config.p.unwrap_or(h as u64 + 1);
            let hp = h_poly_fuss(g, p)?;
            let coeffs = coeffs_i64(&hp);
            let total: i64 = coeffs.iter().sum();
            let fuss = fuss_catalan(g, p);
            let total_ok = fuss.is_none_or(|f| f as i64 == total);
            let narayana = (p == h as u64 + 1).then(|| coeffs_i64(&narayana_kirkman(g, &NoncrossingSet::new(g)).narayana));
            let nar_ok = narayana.as_ref().is_none_or(|n| *n == coeffs);
            report(
                total_ok && nar_ok,
                format!("p = {p}, Cat^(p) = {}", fuss.map_or("-".into(), |f| f.to_string())),
                json!({
                    "p": p,
                    "h_polynomial": coeffs,
                    "value_at_one": total,
                    "fuss_catalan": fuss,
                    "narayana": narayana,
                    "equals_narayana": narayana.as_ref().map(|_| nar_ok),
                }),
            )
        }
        Command::NearBoundary => {
            let r = near_boundary_check(g, truncation)?;
            let kirk = q_kirkman_all(g, truncation)?;
            let (k1, kn1) = near_boundary_kirkman(g, &kirk)?;
            let ok = r.confirmed && k1 && kn1;
            let mut v = value(&r);
            v["kirkman_first"] = json!(k1);
            v["kirkman_last"] = json!(kn1);
            let summary = if ok {
                format!("conjecture confirmed at desk scale through order {truncation}")
            } else {
                format!("mismatch at {:?}", r.first_mismatch)
            };
            report(ok, summary, v)
        }
        Command::Invariants => {
            let r = verify_invariants(g, 20, config.seed)?;
            report(r.ok, format!("|W| = {}, h = {h}, degrees {:?}", r.order, r.degrees), value(&r))
        }
    })
}
