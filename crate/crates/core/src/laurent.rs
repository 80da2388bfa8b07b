//! Exact arithmetic in `Z[v, v^-1]`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// An element of `Z[v, v^-1]`, stored as exponent -> nonzero coefficient.
///
/// Zero coefficients are never stored, so equality is structural.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `v`
    pub fn v() -> Self {
        Self::monomial(1, 1)
    }

    /// `v^-1`
    pub fn v_inv() -> Self {
        Self::monomial(1, -1)
    }

    /// `c * v^k`
    pub fn monomial(c: impl Into<BigInt>, k: i32) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        Self { terms }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// Builds from `(exponent, coefficient)` pairs, merging repeats.
    pub fn from_terms<I, C>(iter: I) -> Self
    where
        I: IntoIterator<Item = (i32, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c.into());
        }
        out
    }

    fn add_term(&mut self, k: i32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(k).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, k: i32) -> BigInt {
        self.terms.get(&k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Iterates `(exponent, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &BigInt)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// If this is `±v^k`, returns `(sign, k)`.
    pub fn as_unit(&self) -> Option<(i32, i32)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (k, c) = self.terms.iter().next().unwrap();
        if c.is_one() {
            Some((1, *k))
        } else if (-c).is_one() {
            Some((-1, *k))
        } else {
            None
        }
    }

    /// The ring involution `v -> -v`: `c v^k` becomes `(-1)^k c v^k`.
    pub fn substitute_neg_v(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(k, c)| (*k, if k % 2 == 0 { c.clone() } else { -c }))
            .collect();
        Self { terms }
    }

    /// Multiplies by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, x)| (*k, x * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Multiplicative inverse when this is a unit `±v^k`.
    pub fn inverse(&self) -> Option<Self> {
        self.as_unit().map(|(s, k)| Self::monomial(s, -k))
    }

    /// Renders for use as a factor: parenthesized when it has several terms.
    pub(crate) fn render_factor(&self) -> String {
        if self.terms.len() > 1 {
            format!("({self})")
        } else {
            self.to_string()
        }
    }
}

impl fmt::Display for LaurentPoly {
    /// Descending exponents, e.g. `v^2 - 2 + v^-2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (k, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let var = match *k {
                0 => String::new(),
                1 => "v".to_string(),
                k => format!("v^{k}"),
            };
            if var.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&var)?;
            } else {
                write!(f, "{abs}*{var}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, c.clone());
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v() -> LaurentPoly {
        LaurentPoly::v()
    }
    fn vi() -> LaurentPoly {
        LaurentPoly::v_inv()
    }
    fn c(n: i64) -> LaurentPoly {
        LaurentPoly::constant(n)
    }

    #[test]
    fn add_examples() {
        assert_eq!(&(&v() + &c(1)) + &c(-1), v());
        assert_eq!(&c(0) + &c(0), LaurentPoly::zero());
        assert_eq!(&(&v() - &vi()) + &vi(), v());
    }

    #[test]
    fn mul_examples() {
        let expect = &LaurentPoly::monomial(1, 2) - &LaurentPoly::monomial(1, -2);
        assert_eq!(&(&v() + &vi()) * &(&v() - &vi()), expect);
        assert_eq!(&v() * &vi(), LaurentPoly::one());
        let d = &v() - &vi();
        assert_eq!(&d * &d, LaurentPoly::from_terms([(2, 1), (0, -2), (-2, 1)]));
    }

    #[test]
    fn neg_v_examples() {
        assert_eq!(v().substitute_neg_v(), -v());
        let q1 = &LaurentPoly::monomial(1, 2) - &c(1);
        assert_eq!(q1.substitute_neg_v(), q1);
        assert_eq!((&v() - &vi()).substitute_neg_v(), &vi() - &v());
    }

    #[test]
    fn display() {
        let p = LaurentPoly::from_terms([(2, 1), (0, -2), (-2, 1)]);
        assert_eq!(p.to_string(), "v^2 - 2 + v^-2");
        assert_eq!(LaurentPoly::from_terms([(1, -3), (-1, 1)]).to_string(), "-3*v + v^-1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn canonical_form_drops_zeros() {
        let p = LaurentPoly::from_terms([(3, 2), (3, -2), (1, 1)]);
        assert_eq!(p.num_terms(), 1);
        assert_eq!(p, v());
    }

    #[test]
    fn no_overflow_on_large_powers() {
        let p = (&v() + &c(1)).pow(80);
        assert_eq!(p.coeff(40).to_string(), "107507208733336176461620");
    }

    pub(crate) fn arb_laurent() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-4i32..=4, -5i64..=5), 0..5).prop_map(LaurentPoly::from_terms)
    }

    proptest! {
        #[test]
        fn neg_v_is_involution(a in arb_laurent()) {
            prop_assert_eq!(a.substitute_neg_v().substitute_neg_v(), a);
        }

        #[test]
        fn neg_v_is_ring_hom(a in arb_laurent(), b in arb_laurent()) {
            prop_assert_eq!((&a + &b).substitute_neg_v(), &a.substitute_neg_v() + &b.substitute_neg_v());
            prop_assert_eq!((&a * &b).substitute_neg_v(), &a.substitute_neg_v() * &b.substitute_neg_v());
        }

        #[test]
        fn ring_axioms(a in arb_laurent(), b in arb_laurent(), c in arb_laurent()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        }
    }
}
