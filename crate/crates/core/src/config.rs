//! Config and weight files, in JSON or TOML.
//!
//! A config names a catalog family or gives the bicharacter matrix:
//!
//! ```toml
//! family = "pibar2.iv"
//! m = 2
//! n = 1
//! ```
//!
//! ```json
//! {"matrix": [["q^2", "q^-2"], ["1", "q^2"]], "ell": 2, "ext_rank": 0}
//! ```
//!
//! A weight file gives `Λ` in one of three ways: `k` and `l` lists over the
//! whole lattice basis, `lambda` values `λ_{α_i}` on the simple roots, or
//! `lambda_beta` entries `{beta = [...], value = "..."}` that determine the
//! `λ_{α_i}` (for instance on `Π̄_0 ∪ {ᾱ_0}` plus any remaining simple root).

use std::path::Path;

use serde::Deserialize;

use crate::catalog::{build_catalog, family_from_tag, CatalogConfig, CatalogParams};
use crate::highestweight::WeightCharacter;
use crate::lattice::{Bicharacter, Weight};
use crate::scalars::monomial::{ADMISSIBLE_ORDERS, DEFAULT_ORDER};
use crate::scalars::MonomialScalar;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FileFormat {
    Json,
    Toml,
}

impl FileFormat {
    /// By extension; anything other than `.toml` is read as JSON.
    pub fn from_path(p: &Path) -> Self {
        match p.extension().and_then(|e| e.to_str()) {
            Some("toml") => FileFormat::Toml,
            _ => FileFormat::Json,
        }
    }
}

fn decode<T: for<'de> Deserialize<'de>>(text: &str, fmt: FileFormat) -> Result<T> {
    match fmt {
        FileFormat::Json => serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string())),
        FileFormat::Toml => toml::from_str(text).map_err(|e| Error::Parse(e.to_string())),
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
}

fn mono(s: &str, order: u32) -> Result<MonomialScalar> {
    MonomialScalar::parse_with_order(s, order)
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    family: Option<String>,
    kind: Option<String>,
    rank: Option<usize>,
    m: Option<usize>,
    n: Option<usize>,
    a: Option<i64>,
    q: Option<String>,
    x: Option<String>,
    y: Option<String>,
    matrix: Option<Vec<Vec<String>>>,
    ell: Option<usize>,
    ext_rank: Option<usize>,
    order: Option<u32>,
}

/// A parsed config: a catalog entry or a bare bicharacter.
#[derive(Clone, Debug)]
pub struct Config {
    pub bichar: Bicharacter,
    pub catalog: Option<CatalogConfig>,
    /// Cyclotomic order used for `z` in this run.
    pub order: u32,
}

pub fn parse_config(text: &str, fmt: FileFormat, order: Option<u32>) -> Result<Config> {
    let raw: RawConfig = decode(text, fmt)?;
    let order = order.or(raw.order).unwrap_or(DEFAULT_ORDER);
    if !ADMISSIBLE_ORDERS.contains(&order) {
        return Err(Error::InvalidInput(format!("cyclotomic order {order} is not one of 1,2,3,4,6,12")));
    }
    match (&raw.family, &raw.matrix) {
        (Some(tag), None) => {
            let kind = raw.kind.as_deref().and_then(|s| s.chars().next());
            let family = family_from_tag(tag, kind, raw.rank, raw.m, raw.n, raw.a)?;
            let opt = |s: &Option<String>| s.as_deref().map(|s| mono(s, order)).transpose();
            let params = CatalogParams { q: opt(&raw.q)?.unwrap_or(MonomialScalar::q_pow(1)), x: opt(&raw.x)?, y: opt(&raw.y)? };
            let cat = build_catalog(family, params)?;
            Ok(Config { bichar: cat.bichar.clone(), catalog: Some(cat), order })
        }
        (None, Some(rows)) => {
            let ext = raw.ext_rank.unwrap_or(0);
            let ell = raw.ell.unwrap_or(rows.len().saturating_sub(ext));
            let matrix = rows
                .iter()
                .map(|r| r.iter().map(|s| mono(s, order)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            Ok(Config { bichar: Bicharacter::new(matrix, ell, ext)?, catalog: None, order })
        }
        _ => Err(Error::InvalidInput("config needs exactly one of `family` or `matrix`".into())),
    }
}

pub fn load_config(path: &Path, order: Option<u32>) -> Result<Config> {
    parse_config(&read(path)?, FileFormat::from_path(path), order)
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct BetaValue {
    beta: Vec<i64>,
    value: String,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawWeight {
    k: Option<Vec<String>>,
    l: Option<Vec<String>>,
    lambda: Option<Vec<String>>,
    lambda_beta: Option<Vec<BetaValue>>,
}

/// Solves `λ_β = ∏ λ_i^{β_i}` for the `λ_i`. Fails unless the solution is
/// unique.
pub fn solve_lambdas(ell: usize, eqs: &[(Vec<i64>, MonomialScalar)]) -> Result<Vec<MonomialScalar>> {
    if eqs.iter().any(|(b, _)| b.len() != ell) {
        return Err(Error::InvalidInput(format!("every beta needs {ell} coordinates")));
    }
    // pick ℓ independent rows
    let mut chosen: Vec<usize> = Vec::new();
    for i in 0..eqs.len() {
        let mut trial: Vec<Vec<i64>> = chosen.iter().map(|&j| eqs[j].0.clone()).collect();
        trial.push(eqs[i].0.clone());
        if int_rank(&trial) == trial.len() {
            chosen.push(i);
        }
    }
    if chosen.len() < ell {
        return Err(Error::InvalidInput(format!("lambda_beta determines only {} of {ell} simple values", chosen.len())));
    }
    let m: Vec<Vec<i64>> = chosen.iter().map(|&j| eqs[j].0.clone()).collect();
    let det = crate::catalog::int_det(&m);
    let adj = crate::catalog::int_adjugate(&m);
    // λ_i^{det} = ∏_r λ_{β_r}^{adj[i][r]}
    let mut cands: Vec<Vec<MonomialScalar>> = Vec::with_capacity(ell);
    for row in adj.iter() {
        let target = row.iter().zip(&chosen).fold(MonomialScalar::ONE, |acc, (&a, &j)| acc.mul(eqs[j].1.pow(a)));
        if target.q_exp() % det != 0 {
            return Err(Error::InvalidInput("lambda_beta values have no solution".into()));
        }
        let e = target.q_exp() / det;
        cands.push((0..12).map(|r| MonomialScalar::new(r, e)).filter(|x| x.pow(det) == target).collect());
    }
    let mut sols = Vec::new();
    let mut cur = vec![MonomialScalar::ONE; ell];
    search(&cands, eqs, 0, &mut cur, &mut sols);
    match sols.len() {
        1 => Ok(sols.pop().expect("one")),
        0 => Err(Error::InvalidInput("lambda_beta values are inconsistent".into())),
        k => Err(Error::InvalidInput(format!("lambda_beta values leave {k} choices; give more roots"))),
    }
}

fn search(
    cands: &[Vec<MonomialScalar>],
    eqs: &[(Vec<i64>, MonomialScalar)],
    i: usize,
    cur: &mut Vec<MonomialScalar>,
    out: &mut Vec<Vec<MonomialScalar>>,
) {
    if out.len() > 1 {
        return;
    }
    if i == cands.len() {
        let ok = eqs.iter().all(|(b, v)| b.iter().zip(cur.iter()).fold(MonomialScalar::ONE, |acc, (&e, x)| acc.mul(x.pow(e))) == *v);
        if ok {
            out.push(cur.clone());
        }
        return;
    }
    for &c in &cands[i] {
        cur[i] = c;
        search(cands, eqs, i + 1, cur, out);
    }
}

fn int_rank(m: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&r| a[r][c] != 0) else { continue };
        a.swap(rank, p);
        for r in rank + 1..a.len() {
            let (x, y) = (a[rank][c], a[r][c]);
            for k in 0..cols {
                a[r][k] = a[r][k] * x - a[rank][k] * y;
            }
        }
        rank += 1;
    }
    rank
}

pub fn parse_weight(text: &str, fmt: FileFormat, b: &Bicharacter, order: u32) -> Result<WeightCharacter> {
    let raw: RawWeight = decode(text, fmt)?;
    let list = |v: &[String]| v.iter().map(|s| mono(s, order)).collect::<Result<Vec<_>>>();
    let n = b.dim();
    let w = match (&raw.k, &raw.l, &raw.lambda, &raw.lambda_beta) {
        (Some(k), l, None, None) => {
            let k = list(k)?;
            let l = match l {
                Some(l) => list(l)?,
                None => vec![MonomialScalar::ONE; n],
            };
            if k.len() != n || l.len() != n {
                return Err(Error::InvalidInput(format!("k and l need {n} entries")));
            }
            WeightCharacter { k, l }
        }
        (None, None, Some(lam), None) => {
            let lam = list(lam)?;
            if lam.len() != b.ell {
                return Err(Error::InvalidInput(format!("lambda needs {} entries", b.ell)));
            }
            WeightCharacter::from_lambdas(n, &lam)
        }
        (None, None, None, Some(eqs)) => {
            let eqs = eqs
                .iter()
                .map(|e| Ok((e.beta.clone(), mono(&e.value, order)?)))
                .collect::<Result<Vec<_>>>()?;
            WeightCharacter::from_lambdas(n, &solve_lambdas(b.ell, &eqs)?)
        }
        _ => return Err(Error::InvalidInput("weight file needs exactly one of k/l, lambda, lambda_beta".into())),
    };
    Ok(w)
}

pub fn load_weight(path: &Path, b: &Bicharacter, order: u32) -> Result<WeightCharacter> {
    parse_weight(&read(path)?, FileFormat::from_path(path), b, order)
}

/// A weight given as a comma-separated coordinate list such as `1,2,1`.
pub fn parse_coords(s: &str) -> Result<Weight> {
    s.trim_matches(|c| c == '(' || c == ')')
        .split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad coordinate list {s:?}"))))
        .collect::<Result<Vec<_>>>()
        .map(Weight)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::Family;

    fn m(s: &str) -> MonomialScalar {
        s.parse().unwrap()
    }

    #[test]
    fn catalog_config_in_both_formats() {
        let a = parse_config(r#"{"family": "pibar2.iv", "m": 2, "n": 1}"#, FileFormat::Json, None).unwrap();
        let b = parse_config("family = \"pibar2.iv\"\nm = 2\nn = 1\n", FileFormat::Toml, None).unwrap();
        assert_eq!(a.bichar, b.bichar);
        assert_eq!(a.catalog.unwrap().family.tag(), "pibar2.iv");
        let c = parse_config("family = \"pibar1\"\nkind = \"G\"\nrank = 2\n", FileFormat::Toml, None).unwrap();
        assert!(matches!(c.catalog.unwrap().family, Family::Pibar1 { kind: 'G', rank: 2 }));
    }

    #[test]
    fn matrix_config() {
        let c = parse_config(r#"{"matrix": [["q^2", "q^-2"], ["1", "q^2"]], "ell": 2, "ext_rank": 0}"#, FileFormat::Json, None).unwrap();
        assert!(c.catalog.is_none());
        assert_eq!(c.bichar.entry(0, 1), m("q^-2"));
        let c = parse_config("matrix = [[\"z\"]]\norder = 3\n", FileFormat::Toml, None).unwrap();
        assert_eq!(c.bichar.entry(0, 0), MonomialScalar::root_of_unity(1, 3));
    }

    #[test]
    fn bad_configs() {
        assert!(matches!(parse_config("{}", FileFormat::Json, None), Err(Error::InvalidInput(_))));
        assert!(matches!(parse_config("{", FileFormat::Json, None), Err(Error::Parse(_))));
        assert!(matches!(parse_config(r#"{"family": "pibar9"}"#, FileFormat::Json, None), Err(Error::InvalidInput(_))));
        assert!(matches!(parse_config(r#"{"matrix": [["w"]]}"#, FileFormat::Json, None), Err(Error::Parse(_))));
        assert!(parse_config(r#"{"family": "pibar5", "order": 5}"#, FileFormat::Json, None).is_err());
    }

    #[test]
    fn weight_files() {
        let c = parse_config(r#"{"family": "pibar5"}"#, FileFormat::Json, None).unwrap();
        let a = parse_weight(r#"{"lambda": ["q^2", "z^2*q^-3"]}"#, FileFormat::Json, &c.bichar, 6).unwrap();
        let b = parse_weight("k = [\"q^2\", \"z^2*q^-3\"]\n", FileFormat::Toml, &c.bichar, 6).unwrap();
        assert_eq!(a, b);
        // ᾱ0 = α1+2α2 and α1 determine λ_2 only up to sign
        let amb = r#"{"lambda_beta": [{"beta": [1, 0], "value": "q^2"}, {"beta": [1, 2], "value": "z^4*q^-4"}]}"#;
        assert!(matches!(parse_weight(amb, FileFormat::Json, &c.bichar, 6), Err(Error::InvalidInput(_))));
        let ok = r#"{"lambda_beta": [{"beta": [1, 0], "value": "q^2"}, {"beta": [1, 1], "value": "z^2*q^-1"}]}"#;
        assert_eq!(parse_weight(ok, FileFormat::Json, &c.bichar, 6).unwrap(), a);
    }

    #[test]
    fn solver_unique_cases() {
        let eqs = vec![(vec![1, 1], m("q^3")), (vec![0, 1], m("q"))];
        assert_eq!(solve_lambdas(2, &eqs).unwrap(), vec![m("q^2"), m("q")]);
        let eqs = vec![(vec![2, 1], m("q^5")), (vec![0, 1], m("q")), (vec![1, 0], m("q^2"))];
        assert_eq!(solve_lambdas(2, &eqs).unwrap(), vec![m("q^2"), m("q")]);
        assert!(solve_lambdas(2, &[(vec![1, 1], m("q"))]).is_err());
    }

    #[test]
    fn coords() {
        assert_eq!(parse_coords("(1, 2,0)").unwrap(), Weight(vec![1, 2, 0]));
        assert!(parse_coords("1,x").is_err());
    }
}
