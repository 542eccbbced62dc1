//! Exact rank by fraction-free (Bareiss) elimination with complete pivoting.

use rayon::prelude::*;

use super::field::FieldElement;
use super::poly::LaurentPoly;

/// Rank together with the pivot rows and columns, in elimination order. The
/// pivot submatrix is nonsingular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankInfo {
    pub rank: usize,
    pub pivot_rows: Vec<usize>,
    pub pivot_cols: Vec<usize>,
}

/// Rank of a matrix of Laurent polynomials over `Q(ζ)(q)`.
pub fn poly_rank(m: &[Vec<LaurentPoly>]) -> RankInfo {
    let n = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    assert!(m.iter().all(|r| r.len() == cols), "ragged matrix");
    let mut a: Vec<Vec<LaurentPoly>> = m.to_vec();
    let mut row_ix: Vec<usize> = (0..n).collect();
    let mut col_ix: Vec<usize> = (0..cols).collect();
    let mut prev = LaurentPoly::one();
    let mut rank = 0;
    for k in 0..n.min(cols) {
        let mut best: Option<(u64, usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(k) {
            for (j, x) in row.iter().enumerate().skip(k) {
                if !x.is_zero() {
                    let s = x.size();
                    if best.map_or(true, |b| s < b.0) {
                        best = Some((s, i, j));
                    }
                }
            }
        }
        let Some((_, pi, pj)) = best else { break };
        a.swap(k, pi);
        row_ix.swap(k, pi);
        for row in a.iter_mut() {
            row.swap(k, pj);
        }
        col_ix.swap(k, pj);
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let piv = &pivot_row[k];
        let step = |row: &mut Vec<LaurentPoly>| {
            let lead = row[k].clone();
            for j in k + 1..cols {
                let t = piv.mul(&row[j]);
                let t = if lead.is_zero() { t } else { t.sub(&lead.mul(&pivot_row[j])) };
                row[j] = t.exact_div(&prev).expect("Bareiss division must be exact");
            }
            row[k] = LaurentPoly::zero();
        };
        if rest.len() * (cols - k) > 64 {
            rest.par_iter_mut().for_each(step);
        } else {
            rest.iter_mut().for_each(step);
        }
        prev = a[k][k].clone();
        rank += 1;
    }
    RankInfo {
        rank,
        pivot_rows: row_ix[..rank].to_vec(),
        pivot_cols: col_ix[..rank].to_vec(),
    }
}

/// Rank of a matrix of field elements. Each row is first multiplied by the
/// product of its denominators, which does not change the rank.
pub fn matrix_rank(m: &[Vec<FieldElement>]) -> usize {
    let cleared: Vec<Vec<LaurentPoly>> = m
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .map(|(j, x)| {
                    row.iter()
                        .enumerate()
                        .filter(|&(i, _)| i != j)
                        .fold(x.numerator().clone(), |acc, (_, y)| acc.mul(y.denominator()))
                })
                .collect()
        })
        .collect();
    poly_rank(&cleared).rank
}

/// Plain Gaussian elimination over the fraction field, scanning rows and
/// columns from the last index backwards. Kept as an independent check on
/// [`matrix_rank`].
pub fn rank_by_fraction_elimination(m: &[Vec<FieldElement>]) -> usize {
    let mut a: Vec<Vec<FieldElement>> = m.to_vec();
    let n = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut used = vec![false; n];
    let mut rank = 0;
    for j in (0..cols).rev() {
        let Some(p) = (0..n).rev().find(|&i| !used[i] && !a[i][j].is_zero()) else { continue };
        used[p] = true;
        rank += 1;
        let pinv = a[p][j].inv();
        for i in 0..n {
            if used[i] || a[i][j].is_zero() {
                continue;
            }
            let f = a[i][j].mul(&pinv);
            for c in 0..cols {
                let t = a[i][c].sub(&f.mul(&a[p][c]));
                a[i][c] = t;
            }
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::monomial::MonomialScalar;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn fe(s: &str) -> FieldElement {
        FieldElement::from_monomial(s.parse().unwrap())
    }

    #[test]
    fn spec_examples() {
        let id: Vec<Vec<FieldElement>> = (0..3)
            .map(|i| (0..3).map(|j| FieldElement::from_int((i == j) as i64)).collect())
            .collect();
        assert_eq!(matrix_rank(&id), 3);
        let zero = vec![vec![FieldElement::zero(); 5]; 2];
        assert_eq!(matrix_rank(&zero), 0);
        let prop = vec![vec![fe("1"), fe("q")], vec![fe("q"), fe("q^2")]];
        assert_eq!(matrix_rank(&prop), 1);
    }

    #[test]
    fn cyclotomic_cancellation_is_seen() {
        // rows differ by the factor 1 + ζ_3 = −ζ_3^2
        let a = fe("1").add(&fe("z^2"));
        let b = fe("-z^4");
        let m = vec![vec![fe("q"), fe("z")], vec![a.mul(&fe("q")), b.mul(&fe("z"))]];
        assert_eq!(matrix_rank(&m), 1);
        assert_eq!(rank_by_fraction_elimination(&m), 1);
    }

    fn random_monomial(rng: &mut ChaCha8Rng) -> MonomialScalar {
        MonomialScalar::new(2 * rng.gen_range(0..6), rng.gen_range(-2..=2))
    }

    #[test]
    fn agrees_with_second_pivot_order_on_random_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let mut ranks = Vec::new();
        for t in 0..50 {
            let mut m: Vec<Vec<FieldElement>> = (0..6)
                .map(|_| (0..6).map(|_| FieldElement::from_monomial(random_monomial(&mut rng))).collect())
                .collect();
            // force dependencies in most samples: overwrite rows by combinations
            let deficiency = t % 4;
            for r in 0..deficiency {
                let (i, j) = (rng.gen_range(0..6), rng.gen_range(0..6));
                let (x, y) = (FieldElement::from_monomial(random_monomial(&mut rng)), FieldElement::from_monomial(random_monomial(&mut rng)));
                let combo: Vec<FieldElement> = (0..6).map(|c| m[i][c].mul(&x).add(&m[j][c].mul(&y))).collect();
                m[5 - r] = combo;
            }
            if t % 7 == 3 {
                // entries restricted to ±1 make rank drops frequent
                for row in m.iter_mut() {
                    for x in row.iter_mut() {
                        *x = FieldElement::from_int(if rng.gen_bool(0.5) { 1 } else { -1 });
                    }
                }
            }
            let r1 = matrix_rank(&m);
            let r2 = rank_by_fraction_elimination(&m);
            assert_eq!(r1, r2, "sample {t}");
            ranks.push(r1);
        }
        assert!(ranks.iter().any(|&r| r < 6) && ranks.iter().any(|&r| r == 6));
    }

    #[test]
    fn pivots_form_nonsingular_minor() {
        let rows = vec![
            vec![fe("1"), fe("q"), fe("q^2")],
            vec![fe("q"), fe("q^2"), fe("q^3")],
            vec![fe("1"), fe("-1"), fe("z")],
        ];
        let polys: Vec<Vec<LaurentPoly>> = rows.iter().map(|r| r.iter().map(|x| x.numerator().clone()).collect()).collect();
        let info = poly_rank(&polys);
        assert_eq!(info.rank, 2);
        let sub: Vec<Vec<FieldElement>> = info
            .pivot_rows
            .iter()
            .map(|&i| info.pivot_cols.iter().map(|&j| rows[i][j].clone()).collect())
            .collect();
        assert_eq!(matrix_rank(&sub), 2);
    }
}
