//! Brute-force checks: ranks of the Drinfeld pairing on free words give
//! `dim U^+_ν`, ranks of the contravariant form on a Verma module give
//! `dim L(Λ)_{−ν}`. Nothing here reads the root system.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::characters::{Depth, DimTable, Region};
use crate::highestweight::WeightCharacter;
use crate::lattice::Bicharacter;
use crate::scalars::{poly_rank, LaurentPoly, MonomialScalar};
use crate::{Error, Result};

pub const DEFAULT_WORD_CAP: usize = 400;

/// Letters are 0-based simple-root indices.
pub type Word = Vec<u8>;

pub fn word_weight(w: &[u8], ell: usize) -> Vec<i64> {
    let mut v = vec![0; ell];
    for &x in w {
        v[x as usize] += 1;
    }
    v
}

/// Every word of weight `ν`, lexicographically.
pub fn words_of_weight(nu: &[i64]) -> Vec<Word> {
    fn go(left: &mut Vec<i64>, cur: &mut Word, out: &mut Vec<Word>) {
        if left.iter().all(|&x| x == 0) {
            out.push(cur.clone());
            return;
        }
        for i in 0..left.len() {
            if left[i] > 0 {
                left[i] -= 1;
                cur.push(i as u8);
                go(left, cur, out);
                cur.pop();
                left[i] += 1;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut nu.to_vec(), &mut Vec::new(), &mut out);
    out
}

/// Which words index a weight space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
pub enum SpanMode {
    /// All words.
    Full,
    /// Rows `b·i` and columns `j·b'` with `b`, `b'` the pivot words one level
    /// down; both radicals are ideals, so these still span.
    #[default]
    Reduced,
}

/// A bilinear form on free words, evaluated recursively with a memo.
pub trait WordForm {
    fn ell(&self) -> usize;
    fn entry(&mut self, row: &[u8], col: &[u8]) -> LaurentPoly;
}

fn chi_letters(b: &Bicharacter, left: &[u8], right: &[u8]) -> MonomialScalar {
    let mut acc = MonomialScalar::ONE;
    for &x in left {
        for &y in right {
            acc = acc.mul(b.entry(x as usize, y as usize));
        }
    }
    acc
}

fn remove_at(w: &[u8], k: usize) -> Word {
    let mut v = Vec::with_capacity(w.len() - 1);
    v.extend_from_slice(&w[..k]);
    v.extend_from_slice(&w[k + 1..]);
    v
}

/// `ϑ(E_e, F_f)` via `ϑ(E_e, F_j F_{f''}) = Σ_{e_k = j} χ(wt e_{<k}, α_j)·ϑ(E_{e∖k}, F_{f''})`.
pub struct Pairing<'a> {
    b: &'a Bicharacter,
    memo: HashMap<(Word, Word), LaurentPoly>,
}

impl<'a> Pairing<'a> {
    pub fn new(b: &'a Bicharacter) -> Self {
        Pairing { b, memo: HashMap::new() }
    }
}

impl WordForm for Pairing<'_> {
    fn ell(&self) -> usize {
        self.b.ell
    }

    fn entry(&mut self, e: &[u8], f: &[u8]) -> LaurentPoly {
        if f.is_empty() {
            return if e.is_empty() { LaurentPoly::one() } else { LaurentPoly::zero() };
        }
        if e.len() != f.len() {
            return LaurentPoly::zero();
        }
        if let Some(v) = self.memo.get(&(e.to_vec(), f.to_vec())) {
            return v.clone();
        }
        let j = f[0];
        let mut acc = LaurentPoly::zero();
        for k in (0..e.len()).filter(|&k| e[k] == j) {
            let sub = self.entry(&remove_at(e, k), &f[1..]);
            if !sub.is_zero() {
                acc = acc.add(&sub.mul_monomial(chi_letters(self.b, &e[..k], &[j])));
            }
        }
        self.memo.insert((e.to_vec(), f.to_vec()), acc.clone());
        acc
    }
}

/// The coefficient of `v_Λ` in `E_{e_1}⋯E_{e_n}F_f v_Λ`, peeling the last
/// E-letter `i` against each `f_k = i` with factor
/// `−χ(α_i,ν)^{−1}Λ(K_{α_i}) + χ(ν,α_i)Λ(L_{α_i})`, `ν = wt f_{>k}`.
pub struct Gram<'a> {
    b: &'a Bicharacter,
    l: &'a WeightCharacter,
    memo: HashMap<(Word, Word), LaurentPoly>,
}

impl<'a> Gram<'a> {
    pub fn new(b: &'a Bicharacter, l: &'a WeightCharacter) -> Self {
        Gram { b, l, memo: HashMap::new() }
    }
}

impl WordForm for Gram<'_> {
    fn ell(&self) -> usize {
        self.b.ell
    }

    fn entry(&mut self, e: &[u8], f: &[u8]) -> LaurentPoly {
        if e.is_empty() {
            return if f.is_empty() { LaurentPoly::one() } else { LaurentPoly::zero() };
        }
        if e.len() != f.len() {
            return LaurentPoly::zero();
        }
        if let Some(v) = self.memo.get(&(e.to_vec(), f.to_vec())) {
            return v.clone();
        }
        let i = *e.last().expect("nonempty");
        let head = &e[..e.len() - 1];
        let (ki, li) = (self.l.k[i as usize], self.l.l[i as usize]);
        let mut acc = LaurentPoly::zero();
        for k in (0..f.len()).filter(|&k| f[k] == i) {
            let sub = self.entry(head, &remove_at(f, k));
            if sub.is_zero() {
                continue;
            }
            let tail = &f[k + 1..];
            let c = LaurentPoly::scaled_monomial(-1, chi_letters(self.b, &[i], tail).inv().mul(ki))
                .add(&LaurentPoly::monomial(chi_letters(self.b, tail, &[i]).mul(li)));
            acc = acc.add(&sub.mul(&c));
        }
        self.memo.insert((e.to_vec(), f.to_vec()), acc.clone());
        acc
    }
}

pub fn pairing_theta(b: &Bicharacter, e: &[u8], f: &[u8]) -> LaurentPoly {
    if word_weight(e, b.ell) != word_weight(f, b.ell) {
        return LaurentPoly::zero();
    }
    Pairing::new(b).entry(e, f)
}

/// A weight-space matrix with its row and column words.
#[derive(Clone, Debug, Serialize)]
pub struct GramMatrix {
    pub weight: Vec<i64>,
    pub rows: Vec<Word>,
    pub cols: Vec<Word>,
    #[serde(serialize_with = "ser_entries")]
    pub entries: Vec<Vec<LaurentPoly>>,
    pub rank: usize,
}

fn ser_entries<S: serde::Serializer>(m: &[Vec<LaurentPoly>], s: S) -> std::result::Result<S::Ok, S::Error> {
    let strs: Vec<Vec<String>> = m.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
    strs.serialize(s)
}

pub struct OracleRun {
    pub table: DimTable,
    pub matrices: Vec<GramMatrix>,
}

fn dedup(v: Vec<Word>) -> Vec<Word> {
    let mut seen = HashSet::new();
    v.into_iter().filter(|w| seen.insert(w.clone())).collect()
}

/// Ranks of `form` on every weight space of the region, lowest first.
pub fn rank_walk<F: WordForm>(form: &mut F, region: &Region, mode: SpanMode, cap: usize, keep: bool) -> Result<OracleRun> {
    let ell = form.ell();
    let mut row_basis: HashMap<Vec<i64>, Vec<Word>> = HashMap::new();
    let mut col_basis: HashMap<Vec<i64>, Vec<Word>> = HashMap::new();
    let mut table = DimTable::default();
    let mut matrices = Vec::new();
    for p in region.points() {
        let nu = p.0.clone();
        let (rows, cols) = if p.height() == 0 {
            (vec![vec![]], vec![vec![]])
        } else {
            match mode {
                SpanMode::Full => {
                    let w = words_of_weight(&nu);
                    (w.clone(), w)
                }
                SpanMode::Reduced => {
                    let (mut rows, mut cols) = (Vec::new(), Vec::new());
                    for i in (0..ell).filter(|&i| nu[i] > 0) {
                        let mut lower = nu.clone();
                        lower[i] -= 1;
                        for b in &row_basis[&lower] {
                            let mut w = b.clone();
                            w.push(i as u8);
                            rows.push(w);
                        }
                        for b in &col_basis[&lower] {
                            let mut w = vec![i as u8];
                            w.extend_from_slice(b);
                            cols.push(w);
                        }
                    }
                    (dedup(rows), dedup(cols))
                }
            }
        };
        if rows.len() > cap || cols.len() > cap {
            return Err(Error::CapExceeded { what: "words", cap });
        }
        let m: Vec<Vec<LaurentPoly>> = rows.iter().map(|r| cols.iter().map(|c| form.entry(r, c)).collect()).collect();
        let info = if rows.is_empty() || cols.is_empty() {
            crate::scalars::RankInfo { rank: 0, pivot_rows: vec![], pivot_cols: vec![] }
        } else {
            poly_rank(&m)
        };
        table.entries.insert(Depth(nu.clone()), info.rank as i64);
        row_basis.insert(nu.clone(), info.pivot_rows.iter().map(|&i| rows[i].clone()).collect());
        col_basis.insert(nu.clone(), info.pivot_cols.iter().map(|&j| cols[j].clone()).collect());
        if keep {
            matrices.push(GramMatrix { weight: nu, rows, cols, entries: m, rank: info.rank });
        }
    }
    Ok(OracleRun { table, matrices })
}

pub fn nichols_table(b: &Bicharacter, region: &Region, mode: SpanMode, cap: usize) -> Result<DimTable> {
    Ok(rank_walk(&mut Pairing::new(b), region, mode, cap, false)?.table)
}

pub fn irreducible_table(b: &Bicharacter, l: &WeightCharacter, region: &Region, mode: SpanMode, cap: usize) -> Result<DimTable> {
    Ok(rank_walk(&mut Gram::new(b, l), region, mode, cap, false)?.table)
}

/// `dim U^+_ν` as the rank of the pairing matrix.
pub fn nichols_dim(b: &Bicharacter, nu: &[i64]) -> Result<i64> {
    Ok(nichols_table(b, &Region::below(nu), SpanMode::Reduced, DEFAULT_WORD_CAP)?.get(nu))
}

/// `dim L(Λ)_{−ν}` as the rank of the contravariant form.
pub fn irreducible_dim(b: &Bicharacter, l: &WeightCharacter, nu: &[i64]) -> Result<i64> {
    Ok(irreducible_table(b, l, &Region::below(nu), SpanMode::Reduced, DEFAULT_WORD_CAP)?.get(nu))
}

/// The full-word Gram matrix at one weight.
pub fn gram_matrix(b: &Bicharacter, l: &WeightCharacter, nu: &[i64], cap: usize) -> Result<GramMatrix> {
    let words = words_of_weight(nu);
    if words.len() > cap {
        return Err(Error::CapExceeded { what: "words", cap });
    }
    let mut g = Gram::new(b, l);
    let entries: Vec<Vec<LaurentPoly>> = words.iter().map(|r| words.iter().map(|c| g.entry(r, c)).collect()).collect();
    let rank = poly_rank(&entries).rank;
    Ok(GramMatrix { weight: nu.to_vec(), rows: words.clone(), cols: words, entries, rank })
}

/// `Λ` far from every special value: `λ_{α_i} = q^{1000+97i}`.
pub fn deep_generic(dim: usize, ell: usize) -> WeightCharacter {
    let lam: Vec<MonomialScalar> = (0..ell).map(|i| MonomialScalar::q_pow(1000 + 97 * i as i64)).collect();
    WeightCharacter::from_lambdas(dim, &lam)
}
