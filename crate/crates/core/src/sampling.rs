//! Random weight characters for catalog entries, for cross-checking the
//! closed-form classification against the breadth-first test.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::catalog::CatalogConfig;
use crate::highestweight::WeightCharacter;
use crate::lattice::Weight;
use crate::scalars::MonomialScalar;

fn biased_t<R: Rng>(rng: &mut R, hi: i64) -> i64 {
    if rng.gen_bool(0.5) {
        0
    } else {
        rng.gen_range(1..=hi)
    }
}

fn free_value<R: Rng>(rng: &mut R) -> MonomialScalar {
    MonomialScalar::new(rng.gen_range(0..12), rng.gen_range(-8..=8))
}

fn in_pi0(cfg: &CatalogConfig) -> Vec<bool> {
    (0..cfg.ell()).map(|i| cfg.pi0.contains(&Weight::basis(cfg.bichar.dim(), i))).collect()
}

/// Every `λ` for the free simple root `f` with `λ_{ᾱ_0} = q_{ᾱ_0}^{t_0}`, the
/// other values fixed.
fn solve_free(cfg: &CatalogConfig, lam: &[MonomialScalar], f: usize, t0: i64) -> Vec<MonomialScalar> {
    let rest = (0..cfg.ell())
        .filter(|&i| i != f)
        .fold(MonomialScalar::ONE, |acc, i| acc.mul(lam[i].pow(cfg.alpha0.0[i])));
    let target = cfg.bichar.q_beta(&cfg.alpha0).pow(t0).div(rest);
    let k = cfg.alpha0.0[f];
    if target.q_exp() % k != 0 {
        return vec![];
    }
    let e = target.q_exp() / k;
    (0..12).map(|r| MonomialScalar::new(r, e)).filter(|x| x.pow(k) == target).collect()
}

/// All characters with `λ_{α_i} = q_{α_i}^{t_i}` on the simple roots of
/// `Π̄_0` and `t_{ᾱ_0} = t0`, solving for the remaining simple root. Entries of
/// `t` at other indices are ignored.
pub fn characters_with_t(cfg: &CatalogConfig, t: &[i64], t0: i64) -> Vec<WeightCharacter> {
    let b = &cfg.bichar;
    let pi0 = in_pi0(cfg);
    let mut lam: Vec<MonomialScalar> = (0..cfg.ell())
        .map(|i| if pi0[i] { b.q_beta(&cfg.simple(i)).pow(t[i]) } else { MonomialScalar::ONE })
        .collect();
    let free: Vec<usize> = (0..cfg.ell()).filter(|&i| !pi0[i] && cfg.alpha0.0[i] != 0).collect();
    let [f] = free[..] else { return vec![] };
    solve_free(cfg, &lam, f, t0)
        .into_iter()
        .map(|x| {
            lam[f] = x;
            WeightCharacter::from_lambdas(b.dim(), &lam)
        })
        .collect()
}

/// A character meant to pass integrality on `Π̄_0 ∪ {ᾱ_0}`; `None` when the
/// drawn `t_0` has no solution for the free simple root.
pub fn sample_integral<R: Rng>(cfg: &CatalogConfig, rng: &mut R) -> Option<WeightCharacter> {
    let b = &cfg.bichar;
    let ell = b.ell;
    let pi0 = in_pi0(cfg);
    let mut lam: Vec<MonomialScalar> = (0..ell)
        .map(|i| if pi0[i] { b.q_beta(&cfg.simple(i)).pow(biased_t(rng, 3)) } else { free_value(rng) })
        .collect();
    if !cfg.alpha0.is_zero() {
        let solve: Vec<usize> = (0..ell).filter(|&i| !pi0[i] && cfg.alpha0.0[i] != 0).collect();
        if let Some(&f) = solve.choose(rng) {
            let t0 = if rng.gen_bool(0.3) { 0 } else { rng.gen_range(1..=cfg.c_pibar as i64 + 1) };
            lam[f] = *solve_free(cfg, &lam, f, t0).choose(rng)?;
        }
    }
    Some(WeightCharacter::from_lambdas(b.dim(), &lam))
}

/// Perturbs one `λ_{α_i}` so that integrality usually breaks.
pub fn perturb<R: Rng>(cfg: &CatalogConfig, l: &WeightCharacter, rng: &mut R) -> WeightCharacter {
    let ell = cfg.ell();
    let mut lam = l.pi_lambdas(ell);
    let i = rng.gen_range(0..ell);
    let qi = cfg.bichar.q_beta(&cfg.simple(i));
    let factor = match rng.gen_range(0..4) {
        0 => MonomialScalar::q_pow(if rng.gen_bool(0.5) { 1 } else { -1 }),
        1 => MonomialScalar::new(rng.gen_range(1..12), 0),
        2 => qi.pow(-rng.gen_range(1..=3)),
        _ => MonomialScalar::new(rng.gen_range(0..12), rng.gen_range(-3..=3)),
    };
    lam[i] = lam[i].mul(factor);
    WeightCharacter::from_lambdas(cfg.bichar.dim(), &lam)
}

/// `n` integral draws followed by `n` perturbed ones, deterministic in `seed`.
pub fn sample_characters(cfg: &CatalogConfig, n: usize, seed: u64) -> Vec<WeightCharacter> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut good = Vec::with_capacity(n);
    let mut tries = 0;
    while good.len() < n && tries < 100 * n {
        tries += 1;
        if let Some(l) = sample_integral(cfg, &mut rng) {
            good.push(l);
        }
    }
    let bad: Vec<WeightCharacter> = good.iter().map(|l| perturb(cfg, l, &mut rng)).collect();
    good.extend(bad);
    good
}
