//! Elements of `Q(ζ)(q)` as unreduced fractions of Laurent polynomials.

use std::fmt;

use super::monomial::MonomialScalar;
use super::poly::LaurentPoly;

#[derive(Clone, Debug)]
pub struct FieldElement {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl FieldElement {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        FieldElement { num, den }
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_poly(LaurentPoly::constant(v))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        FieldElement { num: p, den: LaurentPoly::one() }
    }

    pub fn from_monomial(m: MonomialScalar) -> Self {
        Self::from_poly(LaurentPoly::monomial(m))
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return FieldElement { num: self.num.add(&o.num), den: self.den.clone() }.tidy();
        }
        FieldElement {
            num: self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            den: self.den.mul(&o.den),
        }
        .tidy()
    }

    pub fn neg(&self) -> Self {
        FieldElement { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        FieldElement { num: self.num.mul(&o.num), den: self.den.mul(&o.den) }.tidy()
    }

    pub fn inv(&self) -> Self {
        FieldElement::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &Self) -> Self {
        self.mul(&o.inv())
    }

    /// Cancels the denominator when it divides the numerator exactly.
    fn tidy(self) -> Self {
        if self.num.is_zero() {
            return Self::zero();
        }
        if !self.den.is_one() {
            if let Some(q) = self.num.exact_div(&self.den) {
                return Self::from_poly(q);
            }
        }
        self
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, o: &Self) -> bool {
        self.num.mul(&o.den) == o.num.mul(&self.den)
    }
}

impl Eq for FieldElement {}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(s: &str) -> FieldElement {
        FieldElement::from_monomial(s.parse().unwrap())
    }

    #[test]
    fn field_axioms_on_samples() {
        let xs = [fe("q"), fe("-q^-2").add(&fe("z")), fe("1").sub(&fe("q^3")), fe("z^2*q")];
        for a in &xs {
            assert_eq!(a.div(a), FieldElement::one());
            assert!(a.sub(a).is_zero());
            for b in &xs {
                assert_eq!(a.add(b), b.add(a));
                assert_eq!(a.mul(b).div(b), *a);
                for c in &xs {
                    assert_eq!(a.mul(&b.add(c)), a.mul(b).add(&a.mul(c)));
                }
            }
        }
    }

    #[test]
    fn unreduced_fractions_compare_equal() {
        let a = FieldElement::new(LaurentPoly::monomial("q".parse().unwrap()), LaurentPoly::monomial("q^2".parse().unwrap()));
        assert_eq!(a, fe("q^-1"));
    }
}
