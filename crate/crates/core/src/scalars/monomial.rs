//! Monomials `ζ^a q^b` in the group generated by a root of unity and the
//! generic parameter `q`.
//!
//! Root-of-unity exponents are stored in twelfths of a full turn, which covers
//! every admissible cyclotomic order (1, 2, 3, 4, 6, 12) at once. The order
//! `N` of a run only matters when parsing or printing `z`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::Error;

/// Least common multiple of the admissible cyclotomic orders.
pub const ROOT_ORDER: i64 = 12;

/// Cyclotomic orders accepted for `z`.
pub const ADMISSIBLE_ORDERS: [u32; 6] = [1, 2, 3, 4, 6, 12];

/// Default order used when a monomial string does not say otherwise.
pub const DEFAULT_ORDER: u32 = 6;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct MonomialScalar {
    root: u8,
    q: i64,
}

impl MonomialScalar {
    pub const ONE: MonomialScalar = MonomialScalar { root: 0, q: 0 };
    pub const MINUS_ONE: MonomialScalar = MonomialScalar { root: 6, q: 0 };

    /// `ζ_12^root · q^q_exp`.
    pub fn new(root_twelfths: i64, q_exp: i64) -> Self {
        MonomialScalar {
            root: root_twelfths.rem_euclid(ROOT_ORDER) as u8,
            q: q_exp,
        }
    }

    pub fn q_pow(e: i64) -> Self {
        Self::new(0, e)
    }

    /// `ζ_n^k` for an admissible order `n`.
    pub fn root_of_unity(k: i64, n: u32) -> Self {
        assert!(ROOT_ORDER % n as i64 == 0, "order {n} does not divide 12");
        Self::new(k * (ROOT_ORDER / n as i64), 0)
    }

    pub fn root_twelfths(&self) -> i64 {
        self.root as i64
    }

    pub fn q_exp(&self) -> i64 {
        self.q
    }

    pub fn is_one(&self) -> bool {
        self.root == 0 && self.q == 0
    }

    pub fn is_root_of_unity(&self) -> bool {
        self.q == 0
    }

    /// Multiplicative order of the root-of-unity part.
    pub fn root_order(&self) -> u32 {
        (ROOT_ORDER / (self.root as i64).gcd(&ROOT_ORDER)) as u32
    }

    pub fn mul(self, o: Self) -> Self {
        Self::new(self.root as i64 + o.root as i64, self.q + o.q)
    }

    pub fn div(self, o: Self) -> Self {
        self.mul(o.inv())
    }

    pub fn inv(self) -> Self {
        Self::new(-(self.root as i64), -self.q)
    }

    pub fn pow(self, k: i64) -> Self {
        Self::new((self.root as i64) * k.rem_euclid(ROOT_ORDER), self.q * k)
    }

    /// Renders the monomial with `z` read as a primitive `n`-th root of unity.
    /// Returns `None` if the root part is not a power of `ζ_n`.
    pub fn format_with_order(&self, n: u32) -> Option<String> {
        let r = self.root as i64;
        if (r * n as i64) % ROOT_ORDER != 0 {
            return None;
        }
        let k = r * n as i64 / ROOT_ORDER;
        let mut out = String::new();
        let mut root_part = false;
        if k != 0 {
            if n % 2 == 0 && k == n as i64 / 2 {
                out.push('-');
            } else {
                if k == 1 {
                    out.push('z');
                } else {
                    out.push_str(&format!("z^{k}"));
                }
                root_part = true;
            }
        }
        match self.q {
            0 => {
                if out.is_empty() || out == "-" {
                    out.push('1');
                }
            }
            e => {
                if root_part {
                    out.push('*');
                }
                if e == 1 {
                    out.push('q');
                } else {
                    out.push_str(&format!("q^{e}"));
                }
            }
        }
        Some(out)
    }

    /// Parses `[-] [z^<int>] [*] [q^<int>]` with `z = ζ_n`. Also accepts
    /// `z12^<int>` for an explicit twelfth root of unity.
    pub fn parse_with_order(s: &str, n: u32) -> Result<Self, Error> {
        if !ADMISSIBLE_ORDERS.contains(&n) {
            return Err(Error::InvalidInput(format!("cyclotomic order {n} is not one of 1,2,3,4,6,12")));
        }
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("cannot parse monomial {s:?}"));
        let mut rest = t.as_str();
        let mut root = 0i64;
        if let Some(r) = rest.strip_prefix('-') {
            root += ROOT_ORDER / 2;
            rest = r;
        }
        if rest == "1" {
            return Ok(Self::new(root, 0));
        }
        if rest.is_empty() {
            return Err(bad());
        }
        let mut seen = false;
        if let Some(r) = rest.strip_prefix("z12") {
            let (k, r) = parse_exponent(r).ok_or_else(bad)?;
            root += k;
            rest = r;
            seen = true;
        } else if let Some(r) = rest.strip_prefix('z') {
            let (k, r) = parse_exponent(r).ok_or_else(bad)?;
            root += k * (ROOT_ORDER / n as i64);
            rest = r;
            seen = true;
        }
        if seen {
            if let Some(r) = rest.strip_prefix('*') {
                rest = r;
                if rest.is_empty() {
                    return Err(bad());
                }
            }
        }
        let mut q = 0;
        if let Some(r) = rest.strip_prefix('q') {
            let (k, r) = parse_exponent(r).ok_or_else(bad)?;
            q = k;
            rest = r;
            seen = true;
        }
        if !rest.is_empty() || !seen {
            return Err(bad());
        }
        Ok(Self::new(root, q))
    }
}

fn parse_exponent(s: &str) -> Option<(i64, &str)> {
    match s.strip_prefix('^') {
        None => Some((1, s)),
        Some(r) => {
            let end = r
                .char_indices()
                .find(|&(i, c)| !(c.is_ascii_digit() || (i == 0 && (c == '-' || c == '+'))))
                .map(|(i, _)| i)
                .unwrap_or(r.len());
            let v = r[..end].parse().ok()?;
            Some((v, &r[end..]))
        }
    }
}

impl fmt::Display for MonomialScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.format_with_order(DEFAULT_ORDER) {
            Some(s) => f.write_str(&s),
            None => {
                let mut s = format!("z12^{}", self.root);
                if self.q != 0 {
                    s.push('*');
                    if self.q == 1 {
                        s.push('q');
                    } else {
                        s.push_str(&format!("q^{}", self.q));
                    }
                }
                f.write_str(&s)
            }
        }
    }
}

impl FromStr for MonomialScalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Self::parse_with_order(s, DEFAULT_ORDER)
    }
}

impl Serialize for MonomialScalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for MonomialScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Least `r ≥ 2` with `(r)_x! = 0`, or 0.
pub fn qchar(x: MonomialScalar) -> u32 {
    if x.q != 0 || x.root == 0 {
        0
    } else {
        x.root_order()
    }
}

/// Whether `(n)_x! ≠ 0`.
pub fn qfactorial_nonzero(x: MonomialScalar, n: u64) -> bool {
    match qchar(x) {
        0 => true,
        c => n < c as u64,
    }
}

/// Solves `base^k = value`. Unique when `base` involves `q`; for a pure root
/// of unity the least nonnegative solution is returned.
pub fn discrete_log(base: MonomialScalar, value: MonomialScalar) -> Result<Option<i64>, Error> {
    if base.is_one() {
        return Err(Error::AmbiguousLog);
    }
    if base.q != 0 {
        if value.q % base.q != 0 {
            return Ok(None);
        }
        let k = value.q / base.q;
        return Ok((base.pow(k) == value).then_some(k));
    }
    if value.q != 0 {
        return Ok(None);
    }
    Ok((0..base.root_order() as i64).find(|&k| base.pow(k) == value))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> MonomialScalar {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_print() {
        for s in ["1", "-1", "q", "-q^3", "z^2*q^-1", "z", "q^-7", "-q"] {
            assert_eq!(m(s).to_string(), s);
        }
        assert_eq!(m(" z^2 q^-1 "), m("z^2*q^-1"));
        assert_eq!(m("z^3"), MonomialScalar::MINUS_ONE);
        assert_eq!(MonomialScalar::parse_with_order("z", 3).unwrap(), m("z^2"));
        assert_eq!(MonomialScalar::parse_with_order("z^1", 12).unwrap().to_string(), "z12^1");
        assert_eq!(m("z12^1").to_string(), "z12^1");
        for bad in ["", "x", "q^", "z^a", "*q", "q*", "1q", "--1"] {
            assert!(bad.parse::<MonomialScalar>().is_err(), "{bad}");
        }
    }

    #[test]
    fn qchar_examples() {
        assert_eq!(qchar(MonomialScalar::ONE), 0);
        assert_eq!(qchar(MonomialScalar::MINUS_ONE), 2);
        assert_eq!(qchar(MonomialScalar::root_of_unity(1, 3)), 3);
        assert_eq!(qchar(m("q^5")), 0);
        assert_eq!(qchar(m("-q")), 0);
        assert_eq!(qchar(MonomialScalar::root_of_unity(1, 12)), 12);
    }

    #[test]
    fn qfactorial_examples() {
        assert!(qfactorial_nonzero(m("q^2"), 3));
        assert!(!qfactorial_nonzero(m("-1"), 2));
        let z3 = MonomialScalar::root_of_unity(1, 3);
        assert!(qfactorial_nonzero(z3, 2));
        assert!(!qfactorial_nonzero(z3, 3));
    }

    /// Brute-force `(n)_x!` over the monomial model: `(r)_x = 0` iff
    /// `x ≠ 1` and `x^r = 1`.
    fn qfactorial_brute(x: MonomialScalar, n: u64) -> bool {
        (1..=n as i64).all(|r| x.is_one() || !x.pow(r).is_one())
    }

    #[test]
    fn qfactorial_matches_brute_force() {
        for root in 0..12 {
            for q in -2..=2 {
                let x = MonomialScalar::new(root, q);
                for n in 0..15 {
                    assert_eq!(qfactorial_nonzero(x, n), qfactorial_brute(x, n), "{x} {n}");
                }
            }
        }
    }

    #[test]
    fn discrete_log_examples() {
        assert_eq!(discrete_log(m("q^2"), m("q^-6")).unwrap(), Some(-3));
        assert_eq!(discrete_log(m("-q^3"), m("q^6")).unwrap(), Some(2));
        assert_eq!(discrete_log(m("-q^3"), m("-q^6")).unwrap(), None);
        assert_eq!(discrete_log(MonomialScalar::root_of_unity(1, 3), MonomialScalar::ONE).unwrap(), Some(0));
        assert_eq!(discrete_log(m("z^2"), m("z^4")).unwrap(), Some(2));
        assert_eq!(discrete_log(m("-1"), m("z^2")).unwrap(), None);
        assert!(matches!(discrete_log(MonomialScalar::ONE, m("q")), Err(Error::AmbiguousLog)));
    }

    #[test]
    fn qchar_zero_iff_one_or_generic() {
        for root in 0..12 {
            for q in -3..=3 {
                let x = MonomialScalar::new(root, q);
                assert_eq!(qchar(x) == 0, x.is_one() || q != 0);
            }
        }
    }
}
