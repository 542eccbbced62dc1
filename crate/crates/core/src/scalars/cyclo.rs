//! Cyclotomic integers `Z[ζ_m]` for `m ∈ {1,2,3,4,6,12}`, stored as
//! coefficient vectors in the power basis `1, ζ, …, ζ^{φ(m)−1}`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Cyc = Vec<BigInt>;

/// Coefficients (low to high) of the monic cyclotomic polynomial `Φ_m`.
fn phi(m: u8) -> &'static [i64] {
    match m {
        1 => &[-1, 1],
        2 => &[1, 1],
        3 => &[1, 1, 1],
        4 => &[1, 0, 1],
        6 => &[1, -1, 1],
        12 => &[1, 0, -1, 0, 1],
        _ => panic!("unsupported cyclotomic order {m}"),
    }
}

pub fn degree(m: u8) -> usize {
    phi(m).len() - 1
}

pub fn lcm_order(a: u8, b: u8) -> u8 {
    (a as u32).lcm(&(b as u32)) as u8
}

pub fn zero(m: u8) -> Cyc {
    vec![BigInt::zero(); degree(m)]
}

pub fn from_int(m: u8, v: i64) -> Cyc {
    let mut c = zero(m);
    c[0] = BigInt::from(v);
    c
}

pub fn is_zero(a: &[BigInt]) -> bool {
    a.iter().all(|x| x.is_zero())
}

/// Reduces an arbitrary-length coefficient vector modulo `Φ_m`.
pub fn reduce(m: u8, mut v: Vec<BigInt>) -> Cyc {
    let p = phi(m);
    let d = p.len() - 1;
    while v.len() > d {
        let top = v.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let base = v.len() - d;
        for (k, &pk) in p[..d].iter().enumerate() {
            if pk != 0 {
                v[base + k] -= &top * pk;
            }
        }
    }
    v.resize(d, BigInt::zero());
    v
}

/// `ζ_m^k`.
pub fn root_power(m: u8, k: i64) -> Cyc {
    let e = k.rem_euclid(m as i64) as usize;
    let mut v = vec![BigInt::zero(); e + 1];
    v[e] = BigInt::one();
    reduce(m, v)
}

pub fn add(a: &[BigInt], b: &[BigInt]) -> Cyc {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[BigInt], b: &[BigInt]) -> Cyc {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn neg(a: &[BigInt]) -> Cyc {
    a.iter().map(|x| -x).collect()
}

pub fn add_assign(a: &mut [BigInt], b: &[BigInt]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
}

pub fn mul(m: u8, a: &[BigInt], b: &[BigInt]) -> Cyc {
    if a.len() == 1 {
        return vec![&a[0] * &b[0]];
    }
    let mut v = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                v[i + j] += x * y;
            }
        }
    }
    reduce(m, v)
}

/// Multiplies by `ζ_m^k` without general multiplication.
pub fn mul_root(m: u8, a: &[BigInt], k: i64) -> Cyc {
    let e = k.rem_euclid(m as i64) as usize;
    if e == 0 {
        return a.to_vec();
    }
    let mut v = vec![BigInt::zero(); e];
    v.extend(a.iter().cloned());
    reduce(m, v)
}

/// Embeds `Z[ζ_from]` into `Z[ζ_to]` (`from` divides `to`).
pub fn lift(from: u8, to: u8, a: &[BigInt]) -> Cyc {
    if from == to {
        return a.to_vec();
    }
    assert!(to % from == 0, "cannot lift order {from} into {to}");
    let step = (to / from) as usize;
    let mut v = vec![BigInt::zero(); (a.len() - 1) * step + 1];
    for (j, c) in a.iter().enumerate() {
        v[j * step] = c.clone();
    }
    reduce(to, v)
}

/// Galois automorphism `ζ ↦ ζ^k`.
fn galois(m: u8, a: &[BigInt], k: i64) -> Cyc {
    let mut v = vec![BigInt::zero(); m as usize];
    for (j, c) in a.iter().enumerate() {
        let e = (j as i64 * k).rem_euclid(m as i64) as usize;
        v[e] += c;
    }
    reduce(m, v)
}

/// Product of the nontrivial Galois conjugates; `a · conj(a)` is the norm.
fn conj_product(m: u8, a: &[BigInt]) -> Cyc {
    let mut p = from_int(m, 1);
    for k in 2..m as i64 {
        if k.gcd(&(m as i64)) == 1 {
            p = mul(m, &p, &galois(m, a, k));
        }
    }
    p
}

/// Divisor prepared for repeated exact division.
pub struct Divisor {
    m: u8,
    conj: Cyc,
    norm: BigInt,
}

impl Divisor {
    pub fn new(m: u8, b: &[BigInt]) -> Self {
        assert!(!is_zero(b), "division by zero");
        let conj = conj_product(m, b);
        let n = mul(m, b, &conj);
        debug_assert!(n[1..].iter().all(|x| x.is_zero()));
        Divisor { m, conj, norm: n[0].clone() }
    }

    /// `a / b`, or `None` when the quotient is not integral.
    pub fn div(&self, a: &[BigInt]) -> Option<Cyc> {
        let num = if self.conj.len() == 1 && self.conj[0].is_one() {
            a.to_vec()
        } else {
            mul(self.m, a, &self.conj)
        };
        let mut out = Vec::with_capacity(num.len());
        for c in num {
            let (q, r) = c.div_rem(&self.norm);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(out)
    }
}

/// A crude size measure used for pivot selection.
pub fn bits(a: &[BigInt]) -> u64 {
    a.iter().map(|x| x.abs().bits()).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: &[i64]) -> Cyc {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn root_powers_cycle() {
        for m in [1u8, 2, 3, 4, 6, 12] {
            assert_eq!(root_power(m, m as i64), from_int(m, 1));
            let z = root_power(m, 1);
            let mut acc = from_int(m, 1);
            for k in 0..(2 * m as i64) {
                assert_eq!(acc, root_power(m, k));
                acc = mul(m, &acc, &z);
            }
            // 1 + ζ + … + ζ^{m−1} = 0 for m > 1
            if m > 1 {
                let mut s = zero(m);
                for k in 0..m as i64 {
                    s = add(&s, &root_power(m, k));
                }
                assert!(is_zero(&s));
            }
        }
    }

    #[test]
    fn lift_respects_products() {
        for (from, to) in [(2u8, 6u8), (3, 6), (2, 4), (4, 12), (3, 12), (6, 12), (1, 3)] {
            let a = c(&(0..degree(from)).map(|i| i as i64 + 2).collect::<Vec<_>>());
            let b = root_power(from, 1);
            let lhs = lift(from, to, &mul(from, &a, &b));
            let rhs = mul(to, &lift(from, to, &a), &lift(from, to, &b));
            assert_eq!(lhs, rhs);
            assert_eq!(lift(from, to, &b), root_power(to, (to / from) as i64));
        }
    }

    #[test]
    fn exact_division_roundtrip() {
        for m in [2u8, 3, 4, 6, 12] {
            let d = degree(m);
            let a = c(&(0..d).map(|i| 3 * i as i64 - 1).collect::<Vec<_>>());
            let b = c(&(0..d).map(|i| if i == 0 { 2 } else { 1 - i as i64 }).collect::<Vec<_>>());
            let p = mul(m, &a, &b);
            assert_eq!(Divisor::new(m, &b).div(&p).unwrap(), a);
        }
        // 1 / 2 is not integral
        assert!(Divisor::new(3, &c(&[2, 0])).div(&c(&[1, 0])).is_none());
    }
}
