//! Positive root systems via the Weyl groupoid: breadth-first closure over
//! reflected bases, collecting every simple root that lies in the positive
//! cone.

use std::collections::HashMap;

use serde::Serialize;

use crate::lattice::{Bicharacter, Weight};
use crate::scalars::{discrete_log, qchar, MonomialScalar};
use crate::{Error, Result};

pub const DEFAULT_OBJECT_CAP: usize = 10_000;

/// A Cartan entry: finite or infinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CartanEntry {
    Finite(u32),
    Infinite,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupoidObject {
    /// Full-length weights with zero ε-block.
    pub simples: Vec<Weight>,
    /// `(parent object, reflecting index)`; `None` for the initial object.
    pub parent: Option<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootRecord {
    pub root: Weight,
    pub q: MonomialScalar,
    pub c: u32,
    pub real: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RootSystemData {
    pub ell: usize,
    /// Sorted by height, then coordinates.
    pub roots: Vec<RootRecord>,
    pub objects: Vec<GroupoidObject>,
    /// `cartan[o][i][j] = N_ij` of object `o` (diagonal 2).
    pub cartan: Vec<Vec<Vec<u32>>>,
    /// `neighbors[o][i]` is the object reached from `o` by reflecting at `i`.
    pub neighbors: Vec<Vec<usize>>,
}

impl RootSystemData {
    pub fn positive_roots(&self) -> impl Iterator<Item = &Weight> {
        self.roots.iter().map(|r| &r.root)
    }

    pub fn real_roots(&self) -> impl Iterator<Item = &RootRecord> {
        self.roots.iter().filter(|r| r.real)
    }

    pub fn null_roots(&self) -> impl Iterator<Item = &RootRecord> {
        self.roots.iter().filter(|r| !r.real)
    }

    pub fn record(&self, beta: &Weight) -> Option<&RootRecord> {
        self.roots.iter().find(|r| &r.root == beta)
    }

    pub fn contains(&self, beta: &Weight) -> bool {
        self.record(beta).is_some()
    }
}

/// `N_ij` for `x = q_ii`, `y = q_ij q_ji`.
pub fn cartan_entry(x: MonomialScalar, y: MonomialScalar) -> CartanEntry {
    if x.is_one() {
        return if y.is_one() { CartanEntry::Finite(0) } else { CartanEntry::Infinite };
    }
    let target = y.inv();
    match qchar(x) {
        0 => match discrete_log(x, target).expect("x != 1") {
            Some(k) if k >= 0 => CartanEntry::Finite(k as u32),
            _ => CartanEntry::Infinite,
        },
        c => {
            let k = (0..c as i64 - 1).find(|&k| x.pow(k) == target);
            CartanEntry::Finite(k.map_or(c - 1, |k| k as u32))
        }
    }
}

/// `N_ij` of the object with the given simples.
pub fn cartan_n(b: &Bicharacter, simples: &[Weight], i: usize, j: usize) -> CartanEntry {
    let (ai, aj) = (&simples[i], &simples[j]);
    cartan_entry(b.q_beta(ai), b.sym(ai, aj))
}

fn cartan_row(b: &Bicharacter, simples: &[Weight], i: usize) -> Result<Vec<u32>> {
    (0..simples.len())
        .map(|j| {
            if i == j {
                return Ok(2);
            }
            match cartan_n(b, simples, i, j) {
                CartanEntry::Finite(n) => Ok(n),
                CartanEntry::Infinite => Err(Error::InfiniteType(format!(
                    "N_{}{} is infinite at the object with simples {}",
                    i + 1,
                    j + 1,
                    fmt_simples(simples)
                ))),
            }
        })
        .collect()
}

fn fmt_simples(s: &[Weight]) -> String {
    s.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" ")
}

/// `τ_i`: `α_i ↦ −α_i`, `α_j ↦ α_j + N_ij α_i`.
pub fn reflect_object(b: &Bicharacter, simples: &[Weight], i: usize) -> Result<Vec<Weight>> {
    let row = cartan_row(b, simples, i)?;
    Ok(simples
        .iter()
        .enumerate()
        .map(|(j, a)| if j == i { a.neg() } else { a.add(&simples[i].scale(row[j] as i64)) })
        .collect())
}

pub fn initial_simples(b: &Bicharacter) -> Vec<Weight> {
    (0..b.ell).map(|i| Weight::basis(b.dim(), i)).collect()
}

pub fn compute_roots(b: &Bicharacter, object_cap: usize) -> Result<RootSystemData> {
    let ell = b.ell;
    let start = initial_simples(b);
    let mut index: HashMap<Vec<Weight>, usize> = HashMap::new();
    index.insert(start.clone(), 0);
    let mut objects = vec![GroupoidObject { simples: start, parent: None }];
    let mut cartan = Vec::new();
    let mut neighbors = Vec::new();
    let mut k = 0;
    while k < objects.len() {
        let simples = objects[k].simples.clone();
        let mut rows = Vec::with_capacity(ell);
        let mut nbr = Vec::with_capacity(ell);
        for i in 0..ell {
            let row = cartan_row(b, &simples, i)?;
            let next: Vec<Weight> = simples
                .iter()
                .enumerate()
                .map(|(j, a)| if j == i { a.neg() } else { a.add(&simples[i].scale(row[j] as i64)) })
                .collect();
            rows.push(row);
            let id = match index.get(&next) {
                Some(&id) => id,
                None => {
                    if objects.len() >= object_cap {
                        return Err(Error::CapExceeded { what: "object", cap: object_cap });
                    }
                    let id = objects.len();
                    index.insert(next.clone(), id);
                    objects.push(GroupoidObject { simples: next, parent: Some((k, i)) });
                    id
                }
            };
            nbr.push(id);
        }
        cartan.push(rows);
        neighbors.push(nbr);
        k += 1;
    }
    let mut set = std::collections::BTreeSet::new();
    for o in &objects {
        for a in &o.simples {
            if a.is_nonneg_pi(ell) {
                set.insert(a.clone());
            } else if !a.neg().is_nonneg_pi(ell) {
                return Err(Error::Internal(format!("simple root {a} is neither positive nor negative")));
            }
        }
    }
    let mut roots: Vec<RootRecord> = set
        .into_iter()
        .map(|root| {
            let q = b.q_beta(&root);
            RootRecord { c: qchar(q), real: q.q_exp() != 0, q, root }
        })
        .collect();
    roots.sort_by(|x, y| (x.root.height(ell), &x.root).cmp(&(y.root.height(ell), &y.root)));
    Ok(RootSystemData { ell, roots, objects, cartan, neighbors })
}

/// Coordinates of `λ` (π-block) in the basis `τ_i π` of the initial object.
fn coords_after_reflection(rs: &RootSystemData, i: usize, lambda: &[i64]) -> Vec<i64> {
    let row = &rs.cartan[0][i];
    let mut c = lambda.to_vec();
    c[i] = -lambda[i] + (0..lambda.len()).filter(|&j| j != i).map(|j| row[j] as i64 * lambda[j]).sum::<i64>();
    c
}

/// Checks `χ(α_i,λ)^{c_i−1} χ(λ,α_i)^{c_i−1} = hρ^{τ_i π}(λ) / hρ^π(λ)` at the
/// initial object.
pub fn check_rcrho(b: &Bicharacter, rs: &RootSystemData, i: usize, lambda: &Weight) -> bool {
    let ell = b.ell;
    let ai = Weight::basis(b.dim(), i);
    let ci = qchar(b.q_beta(&ai)) as i64;
    let lhs = b.sym(&ai, lambda).pow(ci - 1);
    let reflected = &rs.objects[rs.neighbors[0][i]].simples;
    let c2 = coords_after_reflection(rs, i, lambda.pi_part(ell));
    let h2 = reflected
        .iter()
        .zip(&c2)
        .fold(MonomialScalar::ONE, |acc, (a, &c)| acc.mul(b.q_beta(a).pow(c)));
    lhs == h2.div(b.hrho(lambda))
}
