//! The type A count behind (n+1)^{r_d(u)} = |(Park^NC)^{(u, c^ℓ)}| for
//! W = S_n and c = (1, 2, …, n).

use std::collections::BTreeMap;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{CoxeterGroup, Family};
use crate::parking::ParkingSpace;
use crate::util::set_partitions;

/// Cycle lengths of a permutation of [n] given by its 1-based images.
pub fn cycle_type(u: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; u.len()];
    let mut out = Vec::new();
    for s in 0..u.len() {
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = u[x] - 1;
            len += 1;
        }
        if len > 0 {
            out.push(len);
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Number of cycles of u of length divisible by d.
pub fn r_d(u: &[usize], d: usize) -> usize {
    cycle_type(u).into_iter().filter(|k| k % d == 0).count()
}

fn order_of_shift(n: usize, l: i64) -> Result<usize> {
    let l = l.rem_euclid(n as i64) as usize;
    if l == 0 {
        return Err(Error::Invalid(format!("c^{l} is the identity in S_{n}")));
    }
    Ok(n / l.gcd(&n))
}

/// (n + 1)^{r_d(u)} with d the order of c^ℓ.
pub fn count_equivariant_formula(u: &[usize], l: i64) -> Result<u64> {
    let d = order_of_shift(u.len(), l)?;
    Ok((u.len() as u64 + 1).pow(r_d(u, d) as u32))
}

/// Number of f : [n] → [n] ∪ {0} with f(u(j)) = c^ℓ f(j), where c^ℓ adds ℓ
/// mod n and fixes 0. Enumerates all (n + 1)^n functions.
pub fn count_equivariant_brute(u: &[usize], l: i64) -> Result<u64> {
    let n = u.len();
    order_of_shift(n, l)?;
    if n > 7 {
        return Err(Error::Capability(format!("brute force over {}^{n} functions", n + 1)));
    }
    let shift = |v: usize| if v == 0 { 0 } else { (v - 1 + l.rem_euclid(n as i64) as usize) % n + 1 };
    let total = (n as u64 + 1).pow(n as u32);
    let mut f = vec![0usize; n];
    let mut count = 0;
    for mut code in 0..total {
        for x in f.iter_mut() {
            *x = (code % (n as u64 + 1)) as usize;
            code /= n as u64 + 1;
        }
        if (0..n).all(|j| f[u[j] - 1] == shift(f[j])) {
            count += 1;
        }
    }
    Ok(count)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdmissiblePartition {
    /// Blocks of a set partition of [n], 1-based and sorted.
    pub blocks: Vec<Vec<usize>>,
    pub stable_block: Option<Vec<usize>>,
    /// One block from each u-orbit of length d.
    pub orbit_reps: Vec<Vec<usize>>,
    pub k: usize,
    /// n(n − d)…(n − (k − 1)d)
    pub weight: u64,
}

/// All (u, d)-admissible set partitions of [n] with their weights.
pub fn admissible_census(u: &[usize], d: usize) -> Result<Vec<AdmissiblePartition>> {
    let n = u.len();
    if d < 2 {
        return Err(Error::Invalid("admissibility needs d ≥ 2".into()));
    }
    if n > 9 {
        return Err(Error::Capability(format!("set partitions of {n} elements")));
    }
    let mut out = Vec::new();
    for rgs in set_partitions(n) {
        let nb = rgs.iter().max().map_or(0, |m| m + 1);
        // image block of each block, if u maps blocks to blocks
        let mut image = vec![usize::MAX; nb];
        let mut stable = true;
        for j in 0..n {
            let b = rgs[j];
            let c = rgs[u[j] - 1];
            if image[b] == usize::MAX {
                image[b] = c;
            } else if image[b] != c {
                stable = false;
                break;
            }
        }
        if !stable {
            continue;
        }
        let mut fixed = Vec::new();
        let mut reps = Vec::new();
        let mut ok = true;
        let mut visited = vec![false; nb];
        for b in 0..nb {
            if visited[b] {
                continue;
            }
            let mut len = 0;
            let mut x = b;
            while !visited[x] {
                visited[x] = true;
                x = image[x];
                len += 1;
            }
            if len == 1 {
                fixed.push(b);
            } else if len == d {
                reps.push(b);
            } else {
                ok = false;
            }
        }
        if !ok || fixed.len() > 1 {
            continue;
        }
        let block = |b: usize| -> Vec<usize> { (0..n).filter(|&j| rgs[j] == b).map(|j| j + 1).collect() };
        let k = reps.len();
        let weight = (0..k).map(|i| n.saturating_sub(i * d) as u64).product();
        out.push(AdmissiblePartition {
            blocks: (0..nb).map(block).collect(),
            stable_block: fixed.first().map(|&b| block(b)),
            orbit_reps: reps.iter().map(|&b| block(b)).collect(),
            k,
            weight,
        });
    }
    Ok(out)
}

/// The number of d-fold symmetric noncrossing partitions of [n] with μ_j
/// rotation orbits of blocks of size j: n̂(n̂ − 1)…(n̂ − k + 1)/Π μ_j!.
pub fn athanasiadis_count(n: usize, d: usize, mu: &BTreeMap<usize, usize>) -> u64 {
    let nh = (n / d) as u64;
    let k: u64 = mu.values().map(|&x| x as u64).sum();
    if k > nh {
        return 0;
    }
    let num: u64 = (0..k).map(|i| nh - i).product();
    let den: u64 = mu.values().map(|&x| (1..=x as u64).product::<u64>()).product();
    num / den
}

fn is_noncrossing_rgs(rgs: &[usize]) -> bool {
    let n = rgs.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for e in c + 1..n {
                    if rgs[a] == rgs[c] && rgs[b] == rgs[e] && rgs[a] != rgs[b] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Tallies the d-fold symmetric noncrossing partitions of [n] by type and
/// compares each tally with the closed form.
pub fn verify_athanasiadis(n: usize, d: usize) -> Result<bool> {
    if d < 2 || n % d != 0 || n > 10 {
        return Err(Error::Invalid(format!("need d ≥ 2 dividing n ≤ 10, got n={n}, d={d}")));
    }
    let step = n / d;
    let mut tally: BTreeMap<BTreeMap<usize, usize>, u64> = BTreeMap::new();
    for rgs in set_partitions(n) {
        if !is_noncrossing_rgs(&rgs) {
            continue;
        }
        let nb = rgs.iter().max().map_or(0, |m| m + 1);
        let blocks: Vec<Vec<usize>> = (0..nb).map(|b| (0..n).filter(|&j| rgs[j] == b).collect()).collect();
        let rotate = |b: &Vec<usize>| {
            let mut r: Vec<usize> = b.iter().map(|&j| (j + step) % n).collect();
            r.sort_unstable();
            r
        };
        if !blocks.iter().all(|b| blocks.contains(&rotate(b))) {
            continue;
        }
        let mut mu = BTreeMap::new();
        for b in &blocks {
            if rotate(b) != *b {
                *mu.entry(b.len()).or_insert(0) += 1;
            }
        }
        for v in mu.values_mut() {
            *v /= d;
        }
        *tally.entry(mu).or_insert(0) += 1;
    }
    Ok(tally.iter().all(|(mu, &c)| athanasiadis_count(n, d, mu) == c))
}

#[derive(Clone, Debug, Serialize)]
pub struct ThreeWayRow {
    pub cycle_type: Vec<usize>,
    pub l: i64,
    pub d: usize,
    pub formula: u64,
    pub brute: Option<u64>,
    pub census: u64,
    pub park_fixed: u64,
    pub equal: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ThreeWayReport {
    pub group: String,
    pub rows: Vec<ThreeWayRow>,
    pub all_equal: bool,
}

/// For one u per conjugacy class of S_n and every ℓ with c^ℓ ≠ 1: the
/// formula, the brute-force count (n ≤ 7), the weighted admissible census
/// and the number of Park^NC classes fixed by (u, c^ℓ).
pub fn verify_type_a_counts(group: &CoxeterGroup) -> Result<ThreeWayReport> {
    let Family::A(rank) = group.label().family else {
        return Err(Error::Invalid(format!("{} is not of type A", group.label())));
    };
    let n = rank + 1;
    let park = ParkingSpace::noncrossing(group);
    let mut by_type: BTreeMap<Vec<usize>, u32> = BTreeMap::new();
    for w in group.elements() {
        let u: Vec<usize> = group.signed_perm(w).ok_or_else(|| Error::Verification("no permutation".into()))?.iter().map(|&x| x as usize).collect();
        by_type.entry(cycle_type(&u)).or_insert(w);
    }
    let mut rows = Vec::new();
    for (ct, &w) in by_type.iter().rev() {
        let u: Vec<usize> = group.signed_perm(w).expect("permutation").iter().map(|&x| x as usize).collect();
        for l in 1..n as i64 {
            let d = order_of_shift(n, l)?;
            let formula = count_equivariant_formula(&u, l)?;
            let brute = if n <= 7 { Some(count_equivariant_brute(&u, l)?) } else { None };
            let census = admissible_census(&u, d)?.iter().map(|a| a.weight).sum();
            let park_fixed = park.fixed_count(w, l);
            let equal = brute.is_none_or(|b| b == formula) && census == formula && park_fixed == formula;
            rows.push(ThreeWayRow { cycle_type: ct.clone(), l, d, formula, brute, census, park_fixed, equal });
        }
    }
    let all_equal = rows.iter().all(|r| r.equal);
    Ok(ThreeWayReport { group: group.label().to_string(), rows, all_equal })
}
