use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

use num_traits::Signed;

use crate::laurent::LaurentPoly;
use crate::rootdata::{Weight, WeylElt};

/// A finite sum `sum c_{x,w} theta_x T_w` with nonzero Laurent coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct HeckeElt {
    terms: BTreeMap<(Weight, WeylElt), LaurentPoly>,
}

impl HeckeElt {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(c: LaurentPoly, x: Weight, w: WeylElt) -> Self {
        let mut out = Self::zero();
        out.add_term(x, w, c);
        out
    }

    pub fn add_term(&mut self, x: Weight, w: WeylElt, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let key = (x, w);
        match self.terms.get_mut(&key) {
            Some(slot) => {
                *slot += &c;
                if slot.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Weight, WeylElt), &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, x: &Weight, w: &WeylElt) -> LaurentPoly {
        self.terms.get(&(x.clone(), w.clone())).cloned().unwrap_or_default()
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        for ((x, w), a) in &self.terms {
            out.add_term(x.clone(), w.clone(), a * c);
        }
        out
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Self {
        let mut out = Self::zero();
        for ((x, w), a) in &self.terms {
            out.add_term(x.clone(), w.clone(), f(a));
        }
        out
    }

    /// Terms in display order: by Weyl element (length, then word), then weight.
    fn display_order(&self) -> Vec<(&Weight, &WeylElt, &LaurentPoly)> {
        let mut v: Vec<_> = self.terms.iter().map(|((x, w), c)| (x, w, c)).collect();
        v.sort_by(|a, b| {
            (a.1.length(), a.1.word(), a.0).cmp(&(b.1.length(), b.1.word(), b.0))
        });
        v
    }
}

impl fmt::Display for HeckeElt {
    /// Renders as `coeff * theta[..] * T[..]` terms; `T` indices are 1-based.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (x, w, c)) in self.display_order().into_iter().enumerate() {
            let negative_mono = c.num_terms() == 1 && c.terms().next().unwrap().1.is_negative();
            let (sign, c) = if negative_mono { ("-", -c) } else { ("+", c.clone()) };
            match (idx, sign) {
                (0, "-") => f.write_str("-")?,
                (0, _) => {}
                (_, s) => write!(f, " {s} ")?,
            }
            if !c.is_one() {
                write!(f, "{} * ", c.render_factor())?;
            }
            let coords: Vec<String> = x.coords().iter().map(|k| k.to_string()).collect();
            let word: Vec<String> = w.word().iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "theta[{}] * T[{}]", coords.join(","), word.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for HeckeElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HeckeElt({self})")
    }
}

impl AddAssign<&HeckeElt> for HeckeElt {
    fn add_assign(&mut self, rhs: &HeckeElt) {
        for ((x, w), c) in &rhs.terms {
            self.add_term(x.clone(), w.clone(), c.clone());
        }
    }
}

impl Add<&HeckeElt> for &HeckeElt {
    type Output = HeckeElt;
    fn add(self, rhs: &HeckeElt) -> HeckeElt {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Neg for &HeckeElt {
    type Output = HeckeElt;
    fn neg(self) -> HeckeElt {
        self.map_coeffs(|c| -c)
    }
}

impl Sub<&HeckeElt> for &HeckeElt {
    type Output = HeckeElt;
    fn sub(self, rhs: &HeckeElt) -> HeckeElt {
        self + &(-rhs)
    }
}
