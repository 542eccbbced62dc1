//! Weyl group of the real roots, the dot action and the sets `X_f`.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::Serialize;

use crate::catalog::int_det;
use crate::highestweight::{n_beta, WeightCharacter};
use crate::lattice::{Bicharacter, Weight};
use crate::rootsystem::RootSystemData;
use crate::scalars::discrete_log;
use crate::{Error, Result};

pub const DEFAULT_WEYL_CAP: usize = 100_000;

pub type IntMatrix = Vec<Vec<i64>>;

/// A group element as an integer matrix acting on column vectors, with the
/// word (indices into the real positive roots) that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeylElement {
    pub matrix: IntMatrix,
    pub sign: i64,
    pub word: Vec<usize>,
}

impl WeylElement {
    pub fn apply(&self, v: &Weight) -> Weight {
        mat_vec(&self.matrix, v)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WeylGroup {
    /// The real positive roots, in root-system order.
    pub generators: Vec<Weight>,
    pub reflections: Vec<IntMatrix>,
    /// Breadth-first order; the identity comes first.
    pub elements: Vec<WeylElement>,
}

impl WeylGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

fn identity(n: usize) -> IntMatrix {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
}

fn mat_vec(a: &IntMatrix, v: &Weight) -> Weight {
    Weight(a.iter().map(|row| row.iter().zip(&v.0).map(|(x, y)| x * y).sum()).collect())
}

/// `s_β(λ) = λ − ŝ_β(λ)·β` with `χ(β,λ)χ(λ,β) = q_β^{ŝ_β(λ)}`.
pub fn reflection(b: &Bicharacter, beta: &Weight) -> Result<IntMatrix> {
    let n = b.dim();
    let qb = b.q_beta(beta);
    let mut k = Vec::with_capacity(n);
    for c in 0..n {
        let v = b.sym(beta, &Weight::basis(n, c));
        let e = discrete_log(qb, v)?.ok_or(Error::NoDiscreteLog { root: beta.to_string(), base: qb, value: v })?;
        k.push(e);
    }
    let mut m = identity(n);
    for (r, row) in m.iter_mut().enumerate() {
        for (c, x) in row.iter_mut().enumerate() {
            *x -= beta.0[r] * k[c];
        }
    }
    Ok(m)
}

pub fn apply_reflection(b: &Bicharacter, beta: &Weight, v: &Weight) -> Result<Weight> {
    Ok(mat_vec(&reflection(b, beta)?, v))
}

pub fn generate_weyl_group(b: &Bicharacter, rs: &RootSystemData, cap: usize) -> Result<WeylGroup> {
    let generators: Vec<Weight> = rs.real_roots().map(|r| r.root.clone()).collect();
    let reflections = generators.iter().map(|g| reflection(b, g)).collect::<Result<Vec<_>>>()?;
    let n = b.dim();
    let mut elements = vec![WeylElement { matrix: identity(n), sign: 1, word: vec![] }];
    let mut index: HashMap<IntMatrix, usize> = HashMap::from([(identity(n), 0)]);
    let mut k = 0;
    while k < elements.len() {
        for (g, s) in reflections.iter().enumerate() {
            let m = mat_mul(&elements[k].matrix, s);
            if index.contains_key(&m) {
                continue;
            }
            if elements.len() >= cap {
                return Err(Error::CapExceeded { what: "Weyl group", cap });
            }
            let mut word = elements[k].word.clone();
            word.push(g);
            let sign = int_det(&m);
            if sign != if word.len() % 2 == 0 { 1 } else { -1 } {
                return Err(Error::Internal(format!("det {sign} disagrees with word length {}", word.len())));
            }
            index.insert(m.clone(), elements.len());
            elements.push(WeylElement { matrix: m, sign, word });
        }
        k += 1;
    }
    Ok(WeylGroup { generators, reflections, elements })
}

/// `r_β` with `Σ_{α ∈ R(β)} (1 − c_α)α = r_β·β`, cross-checked against
/// `hρ(β) = q_β^{r_β}`.
pub fn r_beta(b: &Bicharacter, rs: &RootSystemData, beta: &Weight) -> Result<i64> {
    let s = reflection(b, beta)?;
    let pos: HashSet<&Weight> = rs.positive_roots().collect();
    let mut sum = Weight::zero(b.dim());
    for rec in &rs.roots {
        if pos.contains(&mat_vec(&s, &rec.root).neg()) {
            sum = sum.add(&rec.root.scale(1 - rec.c as i64));
        }
    }
    let p = beta.0.iter().position(|&x| x != 0).ok_or_else(|| Error::InvalidInput("zero root".into()))?;
    let r = sum.0[p] / beta.0[p];
    if sum != beta.scale(r) {
        return Err(Error::Internal(format!("R({beta}) sums to {sum}, not a multiple of {beta}")));
    }
    let from_rho = discrete_log(b.q_beta(beta), b.hrho(beta))?;
    if from_rho != Some(r) {
        return Err(Error::Internal(format!("r_beta = {r} but hrho gives {from_rho:?} for {beta}")));
    }
    Ok(r)
}

/// `w·0` for every `w`, via affine maps `s_β·μ = s_β(μ) − (r_β + n_β)β`.
/// Fails if two words for the same `w` disagree.
pub fn dot_zero_orbit(
    b: &Bicharacter,
    rs: &RootSystemData,
    l: &WeightCharacter,
    group: &WeylGroup,
) -> Result<Vec<(WeylElement, Weight)>> {
    let n = b.dim();
    let mut shifts = Vec::with_capacity(group.generators.len());
    for beta in &group.generators {
        shifts.push(beta.scale(-(r_beta(b, rs, beta)? + n_beta(b, l, beta)?)));
    }
    let index: HashMap<&IntMatrix, usize> = group.elements.iter().enumerate().map(|(i, e)| (&e.matrix, i)).collect();
    let mut offset: Vec<Option<Weight>> = vec![None; group.elements.len()];
    offset[0] = Some(Weight::zero(n));
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        let w = &group.elements[k];
        let bw = offset[k].clone().expect("visited");
        for (g, s) in group.reflections.iter().enumerate() {
            let m = mat_mul(&w.matrix, s);
            let j = *index.get(&m).ok_or_else(|| Error::Internal("group not closed".into()))?;
            let bnew = w.apply(&shifts[g]).add(&bw);
            match &offset[j] {
                Some(prev) if prev != &bnew => {
                    return Err(Error::Internal(format!("dot action not well defined: {prev} vs {bnew}")));
                }
                Some(_) => {}
                None => {
                    offset[j] = Some(bnew);
                    queue.push_back(j);
                }
            }
        }
    }
    Ok(group.elements.iter().cloned().zip(offset.into_iter().map(|o| o.expect("connected"))).collect())
}

fn positive_for(rs: &RootSystemData, f: &[i64]) -> Result<Vec<Weight>> {
    let eval = |w: &Weight| -> i64 { w.0.iter().zip(f).map(|(a, b)| a * b).sum() };
    rs.real_roots()
        .map(|r| match eval(&r.root) {
            0 => Err(Error::DegenerateFunctional(r.root.to_string())),
            v if v > 0 => Ok(r.root.clone()),
            _ => Ok(r.root.neg()),
        })
        .collect()
}

/// `X'_f = {β real : f(β) > 0}`.
pub fn positive_real_roots(rs: &RootSystemData, f: &[i64]) -> Result<Vec<Weight>> {
    positive_for(rs, f)
}

/// `X_f`: the elements of `X'_f` that are not sums of two or more of them.
pub fn simple_real_system(rs: &RootSystemData, f: &[i64]) -> Result<Vec<Weight>> {
    let pos = positive_for(rs, f)?;
    let eval = |w: &Weight| -> i64 { w.0.iter().zip(f).map(|(a, b)| a * b).sum() };
    let top = pos.iter().map(eval).max().unwrap_or(0);
    let mut sums: HashSet<Weight> = pos.iter().cloned().collect();
    let mut queue: VecDeque<Weight> = pos.iter().cloned().collect();
    let mut multi: HashSet<Weight> = HashSet::new();
    while let Some(s) = queue.pop_front() {
        for p in &pos {
            let t = s.add(p);
            if eval(&t) > top {
                continue;
            }
            multi.insert(t.clone());
            if sums.insert(t.clone()) {
                queue.push_back(t);
            }
        }
    }
    Ok(pos.into_iter().filter(|p| !multi.contains(p)).collect())
}

/// `δ̂_f = Σ X'_f`.
pub fn hatdelta(rs: &RootSystemData, f: &[i64]) -> Result<Weight> {
    let pos = positive_for(rs, f)?;
    let n = rs.roots.first().map_or(rs.ell, |r| r.root.len());
    Ok(pos.iter().fold(Weight::zero(n), |acc, p| acc.add(p)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build_catalog, standard_entries, CatalogConfig, CatalogParams, Family, SuperType};
    use crate::rootsystem::{compute_roots, DEFAULT_OBJECT_CAP};
    use proptest::prelude::*;

    fn setup(f: Family) -> (CatalogConfig, RootSystemData) {
        let c = build_catalog(f, CatalogParams::default()).unwrap();
        let rs = compute_roots(&c.bichar, DEFAULT_OBJECT_CAP).unwrap();
        (c, rs)
    }

    fn w(v: &[i64]) -> Weight {
        Weight::from_slice(v)
    }

    #[test]
    fn group_orders() {
        for (f, order) in [
            (Family::Pibar1 { kind: 'A', rank: 2 }, 6),
            (Family::Pibar1 { kind: 'B', rank: 2 }, 8),
            (Family::Pibar1 { kind: 'G', rank: 2 }, 12),
            (Family::Pibar1 { kind: 'A', rank: 3 }, 24),
            (Family::Pibar2 { kind: SuperType::II, m: 1, n: 1, a: 0 }, 4),
            (Family::Pibar3 { second: false }, 8),
            (Family::Pibar4, 36),
            (Family::Pibar5, 4),
        ] {
            let (c, rs) = setup(f);
            let g = generate_weyl_group(&c.bichar, &rs, DEFAULT_WEYL_CAP).unwrap();
            assert_eq!(g.order(), order, "{f}");
        }
    }

    #[test]
    fn b11_reflection_of_eps() {
        // ε1 = α1+α2, ε2 = α2
        let (c, _) = setup(Family::Pibar2 { kind: SuperType::II, m: 1, n: 1, a: 0 });
        assert_eq!(apply_reflection(&c.bichar, &w(&[1, 1]), &w(&[0, 1])).unwrap(), w(&[0, 1]));
        assert_eq!(apply_reflection(&c.bichar, &w(&[1, 1]), &w(&[1, 1])).unwrap(), w(&[-1, -1]));
    }

    #[test]
    fn reflection_needs_a_log() {
        let b = Bicharacter::new(vec![vec!["q^2".parse().unwrap(), "q".parse().unwrap()], vec!["1".parse().unwrap(), "q^2".parse().unwrap()]], 2, 0).unwrap();
        assert!(matches!(reflection(&b, &w(&[1, 0])), Err(Error::NoDiscreteLog { .. })));
    }

    #[test]
    fn r_beta_examples() {
        let (c, rs) = setup(Family::Pibar1 { kind: 'A', rank: 2 });
        assert_eq!(r_beta(&c.bichar, &rs, &w(&[1, 0])).unwrap(), 1);
        assert_eq!(r_beta(&c.bichar, &rs, &w(&[1, 1])).unwrap(), 2);
    }

    #[test]
    fn r_beta_all_entries() {
        for f in standard_entries(4) {
            let (c, rs) = setup(f);
            for r in rs.real_roots() {
                r_beta(&c.bichar, &rs, &r.root).unwrap_or_else(|e| panic!("{f}: {e}"));
            }
        }
    }

    #[test]
    fn x_f_examples() {
        let (_, rs) = setup(Family::Pibar1 { kind: 'A', rank: 2 });
        assert_eq!(simple_real_system(&rs, &[1, 1]).unwrap(), vec![w(&[0, 1]), w(&[1, 0])]);
        assert_eq!(hatdelta(&rs, &[1, 1]).unwrap(), w(&[2, 2]));
        let (_, rs) = setup(Family::Pibar3 { second: false });
        let mut x = simple_real_system(&rs, &[1, 1, 1]).unwrap();
        x.sort();
        assert_eq!(x, vec![w(&[0, 0, 1]), w(&[1, 0, 0]), w(&[1, 2, 1])]);
        assert!(matches!(simple_real_system(&rs, &[1, 0, -1]), Err(Error::DegenerateFunctional(_))));
    }

    #[test]
    fn hatdelta_reflection_and_injectivity() {
        for f in standard_entries(4) {
            let (c, rs) = setup(f);
            let ell = c.ell();
            let func: Vec<i64> = (0..c.bichar.dim()).map(|i| if i < ell { 1 + 7 * i as i64 } else { 0 }).collect();
            let Ok(x) = simple_real_system(&rs, &func) else { continue };
            let d = hatdelta(&rs, &func).unwrap();
            for a in &x {
                assert_eq!(apply_reflection(&c.bichar, a, &d).unwrap(), d.sub(&a.scale(2)), "{f} {a}");
            }
            let g = generate_weyl_group(&c.bichar, &rs, DEFAULT_WEYL_CAP).unwrap();
            let images: HashSet<Weight> = g.elements.iter().map(|e| e.apply(&d)).collect();
            assert_eq!(images.len(), g.order(), "{f}");
        }
    }

    #[test]
    fn dot_orbit_is_well_defined() {
        for f in standard_entries(3) {
            let (c, rs) = setup(f);
            let g = generate_weyl_group(&c.bichar, &rs, DEFAULT_WEYL_CAP).unwrap();
            let orbit = dot_zero_orbit(&c.bichar, &rs, &WeightCharacter::trivial(c.bichar.dim()), &g).unwrap();
            assert_eq!(orbit.len(), g.order());
            assert!(orbit[0].1.is_zero());
        }
    }

    proptest! {
        #[test]
        fn reflections_preserve_chi(idx in 0usize..16, u in prop::collection::vec(-3i64..=3, 4), v in prop::collection::vec(-3i64..=3, 4)) {
            let (c, rs) = setup(Family::Pibar4);
            let b = &c.bichar;
            let g = generate_weyl_group(b, &rs, DEFAULT_WEYL_CAP).unwrap();
            let beta = &g.generators[idx % g.generators.len()];
            let s = reflection(b, beta).unwrap();
            let (x, y) = (Weight(u), Weight(v));
            let (sx, sy) = (mat_vec(&s, &x), mat_vec(&s, &y));
            prop_assert_eq!(b.sym(&sx, &sy), b.sym(&x, &y));
            prop_assert_eq!(b.q_beta(&sx), b.q_beta(&x));
            prop_assert_eq!(mat_vec(&s, &sx), x);
            prop_assert_eq!(mat_vec(&s, beta), beta.neg());
        }
    }
}
