//! Weight characters `Λ`, their shifts, the finite-dimensionality test and
//! typicality, plus the classification for catalog objects.

use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::catalog::{CatalogConfig, Family, SuperType};
use crate::lattice::{Bicharacter, Weight};
use crate::rootsystem::RootSystemData;
use crate::scalars::{discrete_log, qchar, MonomialScalar};
use crate::{Error, Result};

pub const DEFAULT_STATE_CAP: usize = 100_000;

/// `Λ(K_λ L_μ) = ∏ k_i^{λ_i} ∏ l_j^{μ_j}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightCharacter {
    pub k: Vec<MonomialScalar>,
    pub l: Vec<MonomialScalar>,
}

impl WeightCharacter {
    pub fn trivial(dim: usize) -> Self {
        WeightCharacter { k: vec![MonomialScalar::ONE; dim], l: vec![MonomialScalar::ONE; dim] }
    }

    /// The character with `k_i = λ_i` on the π-block and all other values 1.
    pub fn from_lambdas(dim: usize, lambdas: &[MonomialScalar]) -> Self {
        let mut w = Self::trivial(dim);
        w.k[..lambdas.len()].copy_from_slice(lambdas);
        w
    }

    pub fn dim(&self) -> usize {
        self.k.len()
    }

    pub fn eval(&self, kw: &Weight, lw: &Weight) -> MonomialScalar {
        let a = self.k.iter().zip(&kw.0).fold(MonomialScalar::ONE, |acc, (x, &e)| acc.mul(x.pow(e)));
        self.l.iter().zip(&lw.0).fold(a, |acc, (x, &e)| acc.mul(x.pow(e)))
    }

    /// `λ_β = Λ(K_β L_{−β})`.
    pub fn lambda_beta(&self, beta: &Weight) -> MonomialScalar {
        self.k
            .iter()
            .zip(&self.l)
            .zip(&beta.0)
            .fold(MonomialScalar::ONE, |acc, ((k, l), &e)| acc.mul(k.div(*l).pow(e)))
    }

    /// `λ_{α_i}` for `i < ell`.
    pub fn pi_lambdas(&self, ell: usize) -> Vec<MonomialScalar> {
        (0..ell).map(|i| self.k[i].div(self.l[i])).collect()
    }
}

pub fn lambda_beta(l: &WeightCharacter, beta: &Weight) -> MonomialScalar {
    l.lambda_beta(beta)
}

/// `n^Λ_β` with `λ_β = q_β^{n}`.
pub fn n_beta(b: &Bicharacter, l: &WeightCharacter, beta: &Weight) -> Result<i64> {
    let (base, value) = (b.q_beta(beta), l.lambda_beta(beta));
    discrete_log(base, value)?.ok_or(Error::NoIntegerExponent { root: beta.to_string(), base, value })
}

/// `Λ^{+ν}`.
pub fn shift(b: &Bicharacter, l: &WeightCharacter, nu: &Weight) -> WeightCharacter {
    let n = b.dim();
    let k = (0..n).map(|i| b.chi(&Weight::basis(n, i), nu).mul(l.k[i])).collect();
    let ll = (0..n).map(|j| b.chi(nu, &Weight::basis(n, j)).inv().mul(l.l[j])).collect();
    WeightCharacter { k, l: ll }
}

/// `max{m : (m)_x!(m; x^{−1}, λ)! ≠ 0}`, or `None` when unbounded.
pub fn h_value(x: MonomialScalar, lambda: MonomialScalar) -> Option<u32> {
    if x.is_one() {
        return lambda.is_one().then_some(0);
    }
    match qchar(x) {
        0 => match discrete_log(x, lambda).expect("x != 1") {
            Some(t) if t >= 0 => Some(t as u32),
            _ => None,
        },
        c => {
            let t = (0..c as i64 - 1).find(|&t| x.pow(t) == lambda);
            Some(t.map_or(c - 1, |t| t as u32))
        }
    }
}

/// `τ_{i,Λ}` at the object with the given simples; `None` stands for `O`.
pub fn tau_shift(b: &Bicharacter, simples: &[Weight], l: &WeightCharacter, i: usize) -> Option<WeightCharacter> {
    let a = &simples[i];
    let h = h_value(b.q_beta(a), l.lambda_beta(a))?;
    Some(shift(b, l, &a.scale(-(h as i64))))
}

/// Breadth-first search over `(object, Λ)` states. States are keyed by the
/// object and the values `λ_{α_j}`, which is all that later steps read.
pub fn is_finite_dim(b: &Bicharacter, rs: &RootSystemData, l: &WeightCharacter, state_cap: usize) -> Result<bool> {
    let ell = b.ell;
    let sym: Vec<Vec<Vec<MonomialScalar>>> = rs
        .objects
        .iter()
        .map(|o| {
            o.simples
                .iter()
                .map(|a| (0..ell).map(|j| b.sym(&Weight::basis(b.dim(), j), a)).collect())
                .collect()
        })
        .collect();
    let qs: Vec<Vec<MonomialScalar>> = rs.objects.iter().map(|o| o.simples.iter().map(|a| b.q_beta(a)).collect()).collect();
    let start = (0usize, l.pi_lambdas(ell));
    let mut seen: HashSet<(usize, Vec<MonomialScalar>)> = HashSet::new();
    seen.insert(start.clone());
    let mut queue = VecDeque::from([start]);
    while let Some((o, lam)) = queue.pop_front() {
        for i in 0..ell {
            let a = &rs.objects[o].simples[i];
            let la = lam.iter().zip(&a.0).fold(MonomialScalar::ONE, |acc, (x, &e)| acc.mul(x.pow(e)));
            let Some(h) = h_value(qs[o][i], la) else { return Ok(false) };
            let next: Vec<MonomialScalar> =
                lam.iter().zip(&sym[o][i]).map(|(x, s)| x.mul(s.pow(-(h as i64)))).collect();
            let key = (rs.neighbors[o][i], next);
            if !seen.contains(&key) {
                if seen.len() >= state_cap {
                    return Err(Error::CapExceeded { what: "state", cap: state_cap });
                }
                seen.insert(key.clone());
                queue.push_back(key);
            }
        }
    }
    Ok(true)
}

/// `Λ(P̂) ≠ 0`: for every null `β` and `t ∈ [1, c_β−1]`,
/// `(hρ(β)λ_β)^{±1} ≠ q_β^t`; false if some null root has `q_β = 1`.
pub fn is_typical(b: &Bicharacter, rs: &RootSystemData, l: &WeightCharacter) -> bool {
    rs.null_roots().all(|r| {
        if r.q.is_one() {
            return false;
        }
        let y = b.hrho(&r.root).mul(l.lambda_beta(&r.root));
        (1..r.c as i64).all(|t| {
            let qt = r.q.pow(t);
            y != qt && y.inv() != qt
        })
    })
}

/// How to read (C10), whose printed form repeats an index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
pub enum C10Reading {
    /// `λ_3 = 1` only.
    #[default]
    Verbatim,
    /// `λ_i = λ_j = 1` for the given 1-based indices.
    Pair(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TValue {
    pub beta: Weight,
    pub lambda: MonomialScalar,
    pub q_beta: MonomialScalar,
    pub t: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub family: String,
    pub passes_integrality: bool,
    pub t_values: Vec<TValue>,
    pub t_alpha0: Option<i64>,
    pub c_pibar: u32,
    pub finite: bool,
    /// `C1`..`C11`, `t0>=c`, `pibar0` or `none`.
    pub matched_condition: String,
}

pub fn classify_pibar(cfg: &CatalogConfig, l: &WeightCharacter, reading: C10Reading) -> Result<Verdict> {
    let b = &cfg.bichar;
    if l.dim() != b.dim() {
        return Err(Error::InvalidInput(format!("weight character has {} entries, expected {}", l.dim(), b.dim())));
    }
    let ell = b.ell;
    let lam = l.pi_lambdas(ell);
    let q = cfg.q;
    let mut verdict = Verdict {
        family: cfg.family.to_string(),
        passes_integrality: true,
        t_values: Vec::new(),
        t_alpha0: None,
        c_pibar: cfg.c_pibar,
        finite: false,
        matched_condition: "none".into(),
    };
    if let Family::Pibar0 = cfg.family {
        // q̄_11 = 1: F_1 v = 0 iff λ_{α_1} = 1, and otherwise no F_1^m v vanishes
        verdict.finite = lam[0].is_one();
        verdict.matched_condition = "pibar0".into();
        return Ok(verdict);
    }
    let mut betas = cfg.pi0.clone();
    if !cfg.alpha0.is_zero() && !betas.contains(&cfg.alpha0) {
        betas.push(cfg.alpha0.clone());
    }
    for beta in &betas {
        let qb = b.q_beta(beta);
        let lb = l.lambda_beta(beta);
        let t = discrete_log(qb, lb)?.filter(|&t| t >= 0);
        verdict.passes_integrality &= t.is_some();
        if beta == &cfg.alpha0 {
            verdict.t_alpha0 = t;
        }
        verdict.t_values.push(TValue { beta: beta.clone(), lambda: lb, q_beta: qb, t });
    }
    if cfg.alpha0.is_zero() {
        verdict.t_alpha0 = Some(0);
    }
    if !verdict.passes_integrality {
        return Ok(verdict);
    }
    let t0 = verdict.t_alpha0.expect("integrality checked");
    if t0 >= cfg.c_pibar as i64 {
        verdict.finite = true;
        verdict.matched_condition = "t0>=c".into();
        return Ok(verdict);
    }
    let one = |i: usize| lam[i - 1].is_one();
    let prod = |r: std::ops::RangeInclusive<usize>| r.fold(MonomialScalar::ONE, |acc, i| acc.mul(lam[i - 1]));
    let mut hit: Option<&str> = None;
    match cfg.family {
        Family::Pibar2 { kind: SuperType::II, m, n, .. } => {
            if t0 % 2 == 0 && t0 <= 2 * m as i64 - 2 && (n + t0 as usize / 2 + 1..=ell).all(one) {
                hit = Some("C1");
            }
        }
        Family::Pibar2 { kind: SuperType::IV, m, n, .. } => {
            let t = t0 as usize;
            if t0 <= m as i64 - 2 && prod(n..=n + t) == q.pow(-2 * t0) && (n + t + 1..=ell).all(one) {
                hit = Some("C2");
            } else if t0 == m as i64 - 1 && prod(n..=ell - 1) == q.pow(-2 * (m as i64 - 1)) {
                hit = Some("C3");
            }
        }
        Family::Pibar2 { kind: SuperType::V, .. } => {
            if t0 == 2 && one(2) && one(4) && lam[0].mul(lam[2]) == q.pow(-6) {
                hit = Some("C5");
            } else if t0 == 3 && lam[0].mul(lam[2]).mul(lam[3].pow(2)) == q.pow(-12) && lam[1] == q.pow(2).mul(lam[2]) {
                hit = Some("C6");
            }
        }
        Family::Pibar2 { kind: SuperType::VI, .. } => {
            if t0 == 4 && one(2) {
                hit = Some("C7");
            }
        }
        Family::Pibar2 { kind: SuperType::VII, .. } => {
            if t0 == 1 && (one(2) || lam[0].mul(lam[1]) == q.pow(2)) {
                hit = Some("C8");
            }
        }
        Family::Pibar3 { second: false } => {
            let xy = cfg.x.expect("pibar3 has x").mul(cfg.y.expect("pibar3 has y"));
            if t0 == 1 && (one(2) || lam[0].mul(lam[1]) == xy.inv()) {
                hit = Some("C9");
            }
        }
        Family::Pibar4 => {
            let c10 = match reading {
                C10Reading::Verbatim => one(3),
                C10Reading::Pair(i, j) => one(i) && one(j),
            };
            if t0 == 1 && c10 {
                hit = Some("C10");
            } else if t0 == 2 && (one(3) || lam[0].mul(lam[2]).mul(lam[3]).is_one()) {
                hit = Some("C11");
            }
        }
        _ => {}
    }
    if hit.is_none() && t0 == 0 && (1..=ell).all(one) {
        hit = Some("C4");
    }
    if let Some(c) = hit {
        verdict.finite = true;
        verdict.matched_condition = c.into();
    }
    Ok(verdict)
}
