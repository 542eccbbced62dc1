//! Laurent polynomials in `q` with coefficients in `Z[ζ_m]`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::cyclo::{self, Cyc};
use super::monomial::{MonomialScalar, ROOT_ORDER};

/// `Σ_k coeffs[k] q^{low+k}` over `Z[ζ_order]`. The coefficient window is
/// trimmed at both ends; the zero polynomial has no coefficients.
#[derive(Clone, Debug)]
pub struct LaurentPoly {
    order: u8,
    low: i64,
    coeffs: Vec<Cyc>,
}

/// Smallest admissible order whose roots of unity contain the root part of `m`.
pub fn order_of(m: MonomialScalar) -> u8 {
    m.root_order() as u8
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { order: 1, low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(v: i64) -> Self {
        LaurentPoly { order: 1, low: 0, coeffs: vec![cyclo::from_int(1, v)] }.trimmed()
    }

    pub fn monomial(m: MonomialScalar) -> Self {
        Self::scaled_monomial(1, m)
    }

    /// `c · m` for an integer `c`.
    pub fn scaled_monomial(c: i64, m: MonomialScalar) -> Self {
        let order = order_of(m);
        let k = m.root_twelfths() * order as i64 / ROOT_ORDER;
        let coeff: Cyc = cyclo::root_power(order, k).into_iter().map(|x| x * c).collect();
        LaurentPoly { order, low: m.q_exp(), coeffs: vec![coeff] }.trimmed()
    }

    pub fn order(&self) -> u8 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0
            && self.coeffs.len() == 1
            && self.coeffs[0][0].is_one()
            && self.coeffs[0][1..].iter().all(|x| x.is_zero())
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn low(&self) -> i64 {
        self.low
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn high(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, e: i64) -> Option<&Cyc> {
        let k = e - self.low;
        if k < 0 {
            return None;
        }
        self.coeffs.get(k as usize)
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !cyclo::is_zero(c)).count()
    }

    /// Heuristic size used to prefer small pivots.
    pub fn size(&self) -> u64 {
        self.coeffs.iter().map(|c| cyclo::bits(c) + 1).sum()
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last().is_some_and(|c| cyclo::is_zero(c)) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| cyclo::is_zero(c)).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
            self.order = 1;
        }
        self
    }

    fn lifted(&self, to: u8) -> LaurentPoly {
        if self.order == to {
            return self.clone();
        }
        LaurentPoly {
            order: to,
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| cyclo::lift(self.order, to, c)).collect(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let m = cyclo::lcm_order(self.order, o.order);
        let a = self.lifted(m);
        let b = o.lifted(m);
        let low = a.low.min(b.low);
        let high = a.high().max(b.high());
        let mut coeffs = vec![cyclo::zero(m); (high - low + 1) as usize];
        for (k, c) in a.coeffs.iter().enumerate() {
            cyclo::add_assign(&mut coeffs[(a.low - low) as usize + k], c);
        }
        for (k, c) in b.coeffs.iter().enumerate() {
            cyclo::add_assign(&mut coeffs[(b.low - low) as usize + k], c);
        }
        LaurentPoly { order: m, low, coeffs }.trimmed()
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            order: self.order,
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| cyclo::neg(c)).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let m = cyclo::lcm_order(self.order, o.order);
        let a = self.lifted(m);
        let b = o.lifted(m);
        let d = cyclo::degree(m);
        let mut coeffs = vec![cyclo::zero(m); a.coeffs.len() + b.coeffs.len() - 1];
        if d == 1 {
            for (i, x) in a.coeffs.iter().enumerate() {
                if x[0].is_zero() {
                    continue;
                }
                for (j, y) in b.coeffs.iter().enumerate() {
                    if !y[0].is_zero() {
                        coeffs[i + j][0] += &x[0] * &y[0];
                    }
                }
            }
        } else {
            // accumulate unreduced products, reduce once per coefficient
            let mut raw = vec![vec![BigInt::zero(); 2 * d - 1]; coeffs.len()];
            for (i, x) in a.coeffs.iter().enumerate() {
                if cyclo::is_zero(x) {
                    continue;
                }
                for (j, y) in b.coeffs.iter().enumerate() {
                    if cyclo::is_zero(y) {
                        continue;
                    }
                    let r = &mut raw[i + j];
                    for (s, xs) in x.iter().enumerate() {
                        if xs.is_zero() {
                            continue;
                        }
                        for (t, yt) in y.iter().enumerate() {
                            if !yt.is_zero() {
                                r[s + t] += xs * yt;
                            }
                        }
                    }
                }
            }
            for (k, r) in raw.into_iter().enumerate() {
                coeffs[k] = cyclo::reduce(m, r);
            }
        }
        LaurentPoly { order: m, low: a.low + b.low, coeffs }.trimmed()
    }

    /// Multiplies by a monomial (shift plus root-of-unity rotation).
    pub fn mul_monomial(&self, x: MonomialScalar) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let m = cyclo::lcm_order(self.order, order_of(x));
        let a = self.lifted(m);
        let k = x.root_twelfths() * m as i64 / ROOT_ORDER;
        LaurentPoly {
            order: m,
            low: a.low + x.q_exp(),
            coeffs: a.coeffs.iter().map(|c| cyclo::mul_root(m, c, k)).collect(),
        }
    }

    /// Exact quotient `self / d`; `None` if `d` does not divide `self`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.is_one() {
            return Some(self.clone());
        }
        let m = cyclo::lcm_order(self.order, d.order);
        let a = self.lifted(m);
        let b = d.lifted(m);
        if a.coeffs.len() < b.coeffs.len() {
            return None;
        }
        let lead = cyclo::Divisor::new(m, b.coeffs.last().unwrap());
        let mut rem = a.coeffs.clone();
        let qlen = a.coeffs.len() - b.coeffs.len() + 1;
        let mut quot = vec![cyclo::zero(m); qlen];
        for k in (0..qlen).rev() {
            let top = &rem[k + b.coeffs.len() - 1];
            if cyclo::is_zero(top) {
                continue;
            }
            let c = lead.div(top)?;
            for (j, bj) in b.coeffs.iter().enumerate() {
                if !cyclo::is_zero(bj) {
                    let p = cyclo::mul(m, &c, bj);
                    let slot = &mut rem[k + j];
                    *slot = cyclo::sub(slot, &p);
                }
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !cyclo::is_zero(c)) {
            return None;
        }
        Some(LaurentPoly { order: m, low: a.low - b.low, coeffs: quot }.trimmed())
    }
}

impl PartialEq for LaurentPoly {
    fn eq(&self, o: &Self) -> bool {
        if self.is_zero() || o.is_zero() {
            return self.is_zero() && o.is_zero();
        }
        let m = cyclo::lcm_order(self.order, o.order);
        let a = self.lifted(m);
        let b = o.lifted(m);
        a.low == b.low && a.coeffs == b.coeffs
    }
}

impl Eq for LaurentPoly {}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if cyclo::is_zero(c) {
                continue;
            }
            let e = self.low + k as i64;
            let parts: Vec<String> = c
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(j, x)| match j {
                    0 => x.to_string(),
                    1 => format!("{x}*w"),
                    _ => format!("{x}*w^{j}"),
                })
                .collect();
            let coeff = if parts.len() == 1 { parts[0].clone() } else { format!("({})", parts.join(" + ")) };
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "{coeff}")?,
                _ => write!(f, "{coeff}*q^{e}")?,
            }
        }
        if self.order > 2 {
            write!(f, " [w = zeta_{}]", self.order)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> MonomialScalar {
        s.parse().unwrap()
    }

    fn p(terms: &[(i64, &str)]) -> LaurentPoly {
        terms
            .iter()
            .fold(LaurentPoly::zero(), |acc, &(c, x)| acc.add(&LaurentPoly::scaled_monomial(c, m(x))))
    }

    #[test]
    fn monomial_embedding_is_multiplicative() {
        let xs = ["1", "-1", "z", "z^2*q^-1", "-q^3", "z12^5*q^2", "q^-4"];
        for a in xs {
            for b in xs {
                let lhs = LaurentPoly::monomial(m(a).mul(m(b)));
                let rhs = LaurentPoly::monomial(m(a)).mul(&LaurentPoly::monomial(m(b)));
                assert_eq!(lhs, rhs, "{a} * {b}");
                assert_eq!(LaurentPoly::monomial(m(a)).mul_monomial(m(b)), rhs);
                assert_eq!(m(a) == m(b), LaurentPoly::monomial(m(a)) == LaurentPoly::monomial(m(b)));
            }
        }
    }

    #[test]
    fn cyclotomic_relation_vanishes() {
        // 1 + ζ_3 + ζ_3^2 = 0, with ζ_3 = z^2 in order 6
        assert!(p(&[(1, "1"), (1, "z^2"), (1, "z^4")]).is_zero());
        // ζ_6 = 1 + ζ_6^2 ... i.e. z^2 - z + 1 = 0
        assert!(p(&[(1, "z^2"), (-1, "z"), (1, "1")]).is_zero());
    }

    #[test]
    fn division_inverts_multiplication() {
        let a = p(&[(1, "q^-2"), (-3, "z*q"), (2, "q^4")]);
        let b = p(&[(1, "1"), (1, "z^2*q^2")]);
        let prod = a.mul(&b);
        assert_eq!(prod.exact_div(&b).unwrap(), a);
        assert_eq!(prod.exact_div(&a).unwrap(), b);
        assert!(a.exact_div(&b).is_none());
        let two = LaurentPoly::constant(2);
        assert!(LaurentPoly::one().exact_div(&two).is_none());
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(p(&[(1, "q^2"), (-1, "1")]).to_string(), "-1 + 1*q^2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }
}
