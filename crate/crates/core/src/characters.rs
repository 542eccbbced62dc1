//! Verma weight-space dimensions by truncated partition counting and the
//! alternating Weyl sum for typical characters.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::highestweight::{is_finite_dim, is_typical, WeightCharacter, DEFAULT_STATE_CAP};
use crate::lattice::{Bicharacter, Weight};
use crate::rootsystem::{compute_roots, RootSystemData, DEFAULT_OBJECT_CAP};
use crate::weyl::{dot_zero_orbit, generate_weyl_group, DEFAULT_WEYL_CAP};
use crate::{Error, Result};

/// A point `ν ∈ 𝔄_π^+`, standing for the weight `−ν`. Ordered by height,
/// then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Depth(pub Vec<i64>);

impl Depth {
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl Ord for Depth {
    fn cmp(&self, o: &Self) -> Ordering {
        self.height().cmp(&o.height()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Depth {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// All `ν ≥ 0` with `ht ν ≤ height` and, if given, `ν ≤ bounds` entrywise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    pub ell: usize,
    pub height: i64,
    pub bounds: Option<Vec<i64>>,
}

impl Region {
    pub fn new(ell: usize, height: i64) -> Self {
        Region { ell, height, bounds: None }
    }

    /// The downward closure of a single point.
    pub fn below(nu: &[i64]) -> Self {
        Region { ell: nu.len(), height: nu.iter().sum(), bounds: Some(nu.to_vec()) }
    }

    pub fn contains(&self, nu: &[i64]) -> bool {
        nu.len() == self.ell
            && nu.iter().all(|&x| x >= 0)
            && nu.iter().sum::<i64>() <= self.height
            && self.bounds.as_ref().map_or(true, |b| nu.iter().zip(b).all(|(x, y)| x <= y))
    }

    /// Points in height-then-lex order.
    pub fn points(&self) -> Vec<Depth> {
        let mut out = Vec::new();
        let mut cur = vec![0i64; self.ell];
        self.fill(0, self.height, &mut cur, &mut out);
        out.sort();
        out
    }

    fn fill(&self, i: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Depth>) {
        if i == self.ell {
            out.push(Depth(cur.clone()));
            return;
        }
        let hi = self.bounds.as_ref().map_or(left, |b| b[i].min(left));
        for x in 0..=hi {
            cur[i] = x;
            self.fill(i + 1, left - x, cur, out);
        }
        cur[i] = 0;
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct DimTable {
    pub entries: BTreeMap<Depth, i64>,
}

impl DimTable {
    /// Zero off the table.
    pub fn get(&self, nu: &[i64]) -> i64 {
        self.entries.get(&Depth(nu.to_vec())).copied().unwrap_or(0)
    }
}

/// Number of `f: R₊ → ℤ≥0` with `Σ f(β)β = ν` and `f(β) < c_β` when
/// `c_β ≥ 2`; one root at a time.
pub fn verma_dims(rs: &RootSystemData, region: &Region) -> DimTable {
    let pts = region.points();
    let mut cur: BTreeMap<Depth, i64> = pts.iter().map(|p| (p.clone(), i64::from(p.height() == 0))).collect();
    for r in &rs.roots {
        let beta = r.root.pi_part(rs.ell);
        let cap = if r.c >= 2 { r.c as i64 - 1 } else { i64::MAX };
        let mut next = BTreeMap::new();
        for p in &pts {
            let mut total = 0;
            let mut v = p.0.clone();
            let mut k = 0;
            while k <= cap && v.iter().all(|&x| x >= 0) {
                total += cur[&Depth(v.clone())];
                v.iter_mut().zip(beta).for_each(|(x, b)| *x -= b);
                k += 1;
            }
            next.insert(p.clone(), total);
        }
        cur = next;
    }
    DimTable { entries: cur }
}

/// One line of the orbit report: `(w, sgn w, w·0)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitEntry {
    pub word: Vec<usize>,
    pub sign: i64,
    pub point: Weight,
}

pub fn weyl_orbit_report(b: &Bicharacter, rs: &RootSystemData, l: &WeightCharacter) -> Result<Vec<OrbitEntry>> {
    let group = generate_weyl_group(b, rs, DEFAULT_WEYL_CAP)?;
    let orbit = dot_zero_orbit(b, rs, l, &group)?;
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(orbit.len());
    for (w, p) in orbit {
        if !seen.insert(p.clone()) {
            return Err(Error::DuplicateOrbitPoint(p.to_string()));
        }
        out.push(OrbitEntry { word: w.word, sign: w.sign, point: p });
    }
    Ok(out)
}

fn typical_irreducible(b: &Bicharacter, rs: &RootSystemData, l: &WeightCharacter, region: &Region) -> Result<DimTable> {
    if !is_finite_dim(b, rs, l, DEFAULT_STATE_CAP)? {
        return Err(Error::NotFiniteDim);
    }
    if !is_typical(b, rs, l) {
        let lam: Vec<String> = l.pi_lambdas(b.ell).iter().map(|x| x.to_string()).collect();
        return Err(Error::NotTypical(format!("lambda = ({})", lam.join(", "))));
    }
    let orbit = weyl_orbit_report(b, rs, l)?;
    // ν + w·0 ≤ ν, so the region itself covers every lookup
    let verma = verma_dims(rs, region);
    let mut entries = BTreeMap::new();
    for p in region.points() {
        let mut s = 0;
        for e in &orbit {
            let v: Vec<i64> = p.0.iter().zip(e.point.pi_part(b.ell)).map(|(x, y)| x + y).collect();
            s += e.sign * verma.get(&v);
        }
        entries.insert(p, s);
    }
    Ok(DimTable { entries })
}

/// `dim L(Λ)_{−ν} = Σ_w sgn(w)·dim M_{−ν−w·0}` on the region, factored over
/// connected components when `(χ, π)` is reducible.
pub fn typical_character(b: &Bicharacter, rs: &RootSystemData, l: &WeightCharacter, region: &Region) -> Result<DimTable> {
    let comps = b.components();
    if comps.len() == 1 {
        return typical_irreducible(b, rs, l, region);
    }
    let lam = l.pi_lambdas(b.ell);
    let mut tables = Vec::with_capacity(comps.len());
    for c in &comps {
        let sub = b.restrict(c);
        let sub_rs = compute_roots(&sub, DEFAULT_OBJECT_CAP)?;
        let sub_l = WeightCharacter::from_lambdas(c.len(), &c.iter().map(|&i| lam[i]).collect::<Vec<_>>());
        tables.push(typical_irreducible(&sub, &sub_rs, &sub_l, &Region::new(c.len(), region.height))?);
    }
    let mut entries = BTreeMap::new();
    for p in region.points() {
        let v = comps
            .iter()
            .zip(&tables)
            .map(|(c, t)| t.get(&c.iter().map(|&i| p.0[i]).collect::<Vec<_>>()))
            .product();
        entries.insert(p, v);
    }
    Ok(DimTable { entries })
}

fn truncated_mul(a: &BTreeMap<Depth, i64>, terms: &[(Vec<i64>, i64)], region: &Region) -> BTreeMap<Depth, i64> {
    let mut out: BTreeMap<Depth, i64> = BTreeMap::new();
    for (p, &x) in a {
        if x == 0 {
            continue;
        }
        for (s, c) in terms {
            let v: Vec<i64> = p.0.iter().zip(s).map(|(a, b)| a + b).collect();
            if region.contains(&v) {
                *out.entry(Depth(v)).or_default() += x * c;
            }
        }
    }
    out
}

/// `∏_{c_β = 0}(e_0 − e_{−β})·[[0]] = ∏_{c_α ≥ 2}(e_0 + … + e_{−(c_α−1)α})`
/// coefficientwise on the region. Truncation is exact because every factor
/// only lowers weights and the region is downward closed.
pub fn check_key_identity(rs: &RootSystemData, region: &Region) -> bool {
    let zero = Depth(vec![0; rs.ell]);
    let mut lhs = verma_dims(rs, region).entries;
    let mut rhs = BTreeMap::from([(zero.clone(), 1i64)]);
    for r in &rs.roots {
        let beta = r.root.pi_part(rs.ell).to_vec();
        if r.c >= 2 {
            let terms: Vec<(Vec<i64>, i64)> =
                (0..r.c as i64).map(|k| (beta.iter().map(|b| b * k).collect(), 1)).collect();
            rhs = truncated_mul(&rhs, &terms, region);
        } else {
            lhs = truncated_mul(&lhs, &[(zero.0.clone(), 1), (beta, -1)], region);
        }
    }
    region.points().iter().all(|p| lhs.get(p).copied().unwrap_or(0) == rhs.get(p).copied().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build_catalog, standard_entries, CatalogParams, Family, SuperType};
    use crate::scalars::MonomialScalar;

    fn setup(f: Family) -> (Bicharacter, RootSystemData) {
        let c = build_catalog(f, CatalogParams::default()).unwrap();
        let rs = compute_roots(&c.bichar, DEFAULT_OBJECT_CAP).unwrap();
        (c.bichar, rs)
    }

    /// Direct enumeration of capped partitions.
    fn brute(rs: &RootSystemData, nu: &[i64]) -> i64 {
        fn go(roots: &[(Vec<i64>, i64)], nu: &mut Vec<i64>) -> i64 {
            let Some(((beta, cap), rest)) = roots.split_first() else {
                return i64::from(nu.iter().all(|&x| x == 0));
            };
            let mut total = 0;
            let mut k = 0;
            let start = nu.clone();
            while k <= *cap && nu.iter().all(|&x| x >= 0) {
                total += go(rest, nu);
                nu.iter_mut().zip(beta).for_each(|(x, b)| *x -= b);
                k += 1;
            }
            *nu = start;
            total
        }
        let roots: Vec<(Vec<i64>, i64)> = rs
            .roots
            .iter()
            .map(|r| (r.root.pi_part(rs.ell).to_vec(), if r.c >= 2 { r.c as i64 - 1 } else { 64 }))
            .collect();
        go(&roots, &mut nu.to_vec())
    }

    #[test]
    fn region_points_are_sorted_and_closed() {
        let r = Region::new(2, 2);
        let pts: Vec<Vec<i64>> = r.points().into_iter().map(|d| d.0).collect();
        assert_eq!(pts, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![0, 2], vec![1, 1], vec![2, 0]]);
        assert_eq!(Region::below(&[1, 2]).points().len(), 6);
    }

    #[test]
    fn verma_matches_enumeration() {
        for f in standard_entries(3) {
            let (_, rs) = setup(f);
            let t = verma_dims(&rs, &Region::new(rs.ell, 5));
            assert_eq!(t.get(&vec![0; rs.ell]), 1);
            for (p, &v) in &t.entries {
                assert_eq!(v, brute(&rs, &p.0), "{f} {:?}", p.0);
            }
        }
    }

    #[test]
    fn b11_null_root_count() {
        let (_, rs) = setup(Family::Pibar2 { kind: SuperType::II, m: 1, n: 1, a: 0 });
        let t = verma_dims(&rs, &Region::new(2, 4));
        // ε1+ε2 = α1+2α2
        assert_eq!(t.get(&[1, 2]), brute(&rs, &[1, 2]));
        assert_eq!(t.get(&[1, 0]), 1);
    }

    #[test]
    fn a1_character() {
        let (b, rs) = setup(Family::Pibar1 { kind: 'A', rank: 1 });
        for t in 0..4 {
            let l = WeightCharacter::from_lambdas(1, &[MonomialScalar::q_pow(2 * t)]);
            let ch = typical_character(&b, &rs, &l, &Region::new(1, 6)).unwrap();
            for k in 0..=6 {
                assert_eq!(ch.get(&[k]), i64::from(k <= t), "t={t} k={k}");
            }
            let rep = weyl_orbit_report(&b, &rs, &l).unwrap();
            assert_eq!(rep.len(), 2);
            assert_eq!((rep[0].sign, rep[0].point.clone()), (1, Weight(vec![0])));
            assert_eq!((rep[1].sign, rep[1].point.clone()), (-1, Weight(vec![-(t + 1)])));
        }
    }

    #[test]
    fn preconditions_are_reported() {
        let (b, rs) = setup(Family::Pibar1 { kind: 'A', rank: 1 });
        let l = WeightCharacter::from_lambdas(1, &[MonomialScalar::q_pow(1)]);
        assert_eq!(typical_character(&b, &rs, &l, &Region::new(1, 3)), Err(Error::NotFiniteDim));
        let (b, rs) = setup(Family::Pibar2 { kind: SuperType::II, m: 1, n: 1, a: 0 });
        let l = WeightCharacter::trivial(2);
        assert!(matches!(typical_character(&b, &rs, &l, &Region::new(2, 3)), Err(Error::NotTypical(_))));
    }

    #[test]
    fn reducible_factorizes() {
        let q = |e| MonomialScalar::q_pow(e);
        let b = Bicharacter::new(vec![vec![q(2), q(1)], vec![q(-1), q(2)]], 2, 0).unwrap();
        let rs = compute_roots(&b, 100).unwrap();
        let l = WeightCharacter::from_lambdas(2, &[q(2), q(4)]);
        let ch = typical_character(&b, &rs, &l, &Region::new(2, 5)).unwrap();
        for (p, &v) in &ch.entries {
            assert_eq!(v, i64::from(p.0[0] <= 1 && p.0[1] <= 2), "{:?}", p.0);
        }
    }

    #[test]
    fn key_identity_small_cases() {
        for f in standard_entries(3) {
            let (_, rs) = setup(f);
            assert!(check_key_identity(&rs, &Region::new(rs.ell, 5)), "{f}");
        }
    }

    #[test]
    fn key_identity_rank_one() {
        let real = Bicharacter::new(vec![vec![MonomialScalar::q_pow(2)]], 1, 0).unwrap();
        let null = Bicharacter::new(vec![vec![MonomialScalar::MINUS_ONE]], 1, 0).unwrap();
        for b in [real, null] {
            let rs = compute_roots(&b, 10).unwrap();
            assert!(check_key_identity(&rs, &Region::new(1, 8)));
        }
    }
}
