//! Lattice weights and bicharacters.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::scalars::{qchar, MonomialScalar};
use crate::{Error, Result};

/// Integer coordinates with respect to the basis `α_1..α_ℓ, ε_1..ε_r`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(len: usize) -> Self {
        Weight(vec![0; len])
    }

    pub fn basis(len: usize, i: usize) -> Self {
        let mut v = vec![0; len];
        v[i] = 1;
        Weight(v)
    }

    pub fn from_slice(v: &[i64]) -> Self {
        Weight(v.to_vec())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn add(&self, o: &Weight) -> Weight {
        assert_eq!(self.len(), o.len(), "weight length mismatch");
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Weight) -> Weight {
        assert_eq!(self.len(), o.len(), "weight length mismatch");
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    /// Coordinate sum over the first `ell` entries.
    pub fn height(&self, ell: usize) -> i64 {
        self.0[..ell].iter().sum()
    }

    /// The π-block projection.
    pub fn pi_part(&self, ell: usize) -> &[i64] {
        &self.0[..ell]
    }

    /// Whether the weight lies in the nonnegative span of `α_1..α_ℓ`.
    pub fn is_nonneg_pi(&self, ell: usize) -> bool {
        self.0[..ell].iter().all(|&x| x >= 0) && self.0[ell..].iter().all(|&x| x == 0)
    }

    /// Pads a π-block vector with zeros in the ε-block.
    pub fn extend(v: &[i64], len: usize) -> Weight {
        let mut w = v.to_vec();
        w.resize(len, 0);
        Weight(w)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A bicharacter on `Z^{ℓ'}` given by its values on basis pairs.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Bicharacter {
    pub matrix: Vec<Vec<MonomialScalar>>,
    pub ell: usize,
    pub ext_rank: usize,
}

impl Bicharacter {
    pub fn new(matrix: Vec<Vec<MonomialScalar>>, ell: usize, ext_rank: usize) -> Result<Self> {
        let n = ell + ext_rank;
        if ell == 0 {
            return Err(Error::InvalidInput("ell must be positive".into()));
        }
        if matrix.len() != n || matrix.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidInput(format!("bicharacter matrix must be {n}x{n}")));
        }
        Ok(Bicharacter { matrix, ell, ext_rank })
    }

    /// The lattice rank `ℓ'`.
    pub fn dim(&self) -> usize {
        self.ell + self.ext_rank
    }

    pub fn entry(&self, i: usize, j: usize) -> MonomialScalar {
        self.matrix[i][j]
    }

    pub fn chi(&self, a: &Weight, b: &Weight) -> MonomialScalar {
        self.try_chi(a, b).expect("weight length mismatch")
    }

    pub fn try_chi(&self, a: &Weight, b: &Weight) -> Result<MonomialScalar> {
        let n = self.dim();
        if a.len() != n || b.len() != n {
            return Err(Error::InvalidInput(format!(
                "weights of length {} and {} for a bicharacter of rank {n}",
                a.len(),
                b.len()
            )));
        }
        let (mut root, mut qe) = (0i64, 0i64);
        for (i, &x) in a.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let m = self.matrix[i][j];
                root += (x * y).rem_euclid(12) * m.root_twelfths();
                qe += x * y * m.q_exp();
            }
        }
        Ok(MonomialScalar::new(root, qe))
    }

    /// `χ(a,b)·χ(b,a)`.
    pub fn sym(&self, a: &Weight, b: &Weight) -> MonomialScalar {
        self.chi(a, b).mul(self.chi(b, a))
    }

    pub fn q_beta(&self, b: &Weight) -> MonomialScalar {
        self.chi(b, b)
    }

    pub fn c_beta(&self, b: &Weight) -> u32 {
        qchar(self.q_beta(b))
    }

    /// `hρ(β) = ∏_i q_ii^{β_i}` over the π-block.
    pub fn hrho(&self, b: &Weight) -> MonomialScalar {
        (0..self.ell).fold(MonomialScalar::ONE, |acc, i| acc.mul(self.matrix[i][i].pow(b.0[i])))
    }

    /// Connected components of the graph on `1..ℓ` with an edge whenever
    /// `q_ij q_ji ≠ 1`, each sorted, ordered by smallest index.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.ell;
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut k = 0;
            while k < comp.len() {
                let i = comp[k];
                k += 1;
                for j in 0..n {
                    if !seen[j] && !self.matrix[i][j].mul(self.matrix[j][i]).is_one() {
                        seen[j] = true;
                        comp.push(j);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_irreducible_pair(&self) -> bool {
        self.components().len() == 1
    }

    /// The π-block restricted to `idx`, with no ε-block.
    pub fn restrict(&self, idx: &[usize]) -> Bicharacter {
        let matrix = idx.iter().map(|&i| idx.iter().map(|&j| self.matrix[i][j]).collect()).collect();
        Bicharacter { matrix, ell: idx.len(), ext_rank: 0 }
    }
}

pub fn chi_eval(b: &Bicharacter, l: &Weight, m: &Weight) -> Result<MonomialScalar> {
    b.try_chi(l, m)
}

pub fn q_beta(b: &Bicharacter, beta: &Weight) -> MonomialScalar {
    b.q_beta(beta)
}

pub fn c_beta(b: &Bicharacter, beta: &Weight) -> u32 {
    b.c_beta(beta)
}

pub fn hrho(b: &Bicharacter, beta: &Weight) -> MonomialScalar {
    b.hrho(beta)
}

pub fn is_irreducible_pair(b: &Bicharacter) -> bool {
    b.is_irreducible_pair()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(s: &str) -> MonomialScalar {
        s.parse().unwrap()
    }

    fn a2() -> Bicharacter {
        Bicharacter::new(vec![vec![m("q^2"), m("q^-2")], vec![m("1"), m("q^2")]], 2, 0).unwrap()
    }

    #[test]
    fn chi_examples() {
        let b = Bicharacter::new(vec![vec![m("q^2")]], 1, 0).unwrap();
        assert_eq!(b.chi(&Weight(vec![0]), &Weight(vec![3])), MonomialScalar::ONE);
        assert_eq!(b.chi(&Weight(vec![1]), &Weight(vec![2])), m("q^4"));
        assert_eq!(b.q_beta(&Weight(vec![0])), MonomialScalar::ONE);
        assert_eq!(b.c_beta(&Weight(vec![0])), 0);
        assert!(b.try_chi(&Weight(vec![1, 0]), &Weight(vec![1])).is_err());
    }

    #[test]
    fn irreducibility() {
        assert!(a2().is_irreducible_pair());
        let split = Bicharacter::new(vec![vec![m("q^2"), m("q")], vec![m("q^-1"), m("q^2")]], 2, 0).unwrap();
        assert!(!split.is_irreducible_pair());
        assert_eq!(split.components(), vec![vec![0], vec![1]]);
    }

    fn arb_bichar() -> impl Strategy<Value = Bicharacter> {
        prop::collection::vec((0i64..12, -3i64..=3), 9).prop_map(|v| {
            let matrix = v.chunks(3).map(|r| r.iter().map(|&(a, b)| MonomialScalar::new(a, b)).collect()).collect();
            Bicharacter::new(matrix, 2, 1).unwrap()
        })
    }

    fn arb_weight() -> impl Strategy<Value = Weight> {
        prop::collection::vec(-4i64..=4, 3).prop_map(Weight)
    }

    proptest! {
        #[test]
        fn chi_is_biadditive(b in arb_bichar(), x in arb_weight(), y in arb_weight(), z in arb_weight()) {
            prop_assert_eq!(b.chi(&x.add(&y), &z), b.chi(&x, &z).mul(b.chi(&y, &z)));
            prop_assert_eq!(b.chi(&x, &y.add(&z)), b.chi(&x, &y).mul(b.chi(&x, &z)));
        }
    }
}
