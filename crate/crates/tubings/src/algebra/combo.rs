//! Formal sums of basis elements with exact integer coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::BasisElement;

/// A finite formal sum of basis elements; zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct LinCombo {
    terms: BTreeMap<BasisElement, BigInt>,
}

impl LinCombo {
    pub fn zero() -> LinCombo {
        LinCombo::default()
    }

    pub fn basis(b: BasisElement) -> LinCombo {
        let mut c = LinCombo::zero();
        c.add_term(b, BigInt::from(1));
        c
    }

    pub fn from_terms<I: IntoIterator<Item = (BasisElement, BigInt)>>(terms: I) -> LinCombo {
        let mut c = LinCombo::zero();
        for (b, coeff) in terms {
            c.add_term(b, coeff);
        }
        c
    }

    pub fn add_term(&mut self, b: BasisElement, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BasisElement, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, b: &BasisElement) -> BigInt {
        self.terms.get(b).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeff_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    #[must_use]
    pub fn plus(&self, other: &LinCombo) -> LinCombo {
        let mut out = self.clone();
        for (b, c) in other.iter() {
            out.add_term(b.clone(), c.clone());
        }
        out
    }

    #[must_use]
    pub fn minus(&self, other: &LinCombo) -> LinCombo {
        let mut out = self.clone();
        for (b, c) in other.iter() {
            out.add_term(b.clone(), -c.clone());
        }
        out
    }

    #[must_use]
    pub fn scaled(&self, scalar: &BigInt) -> LinCombo {
        LinCombo::from_terms(self.terms.iter().map(|(b, c)| (b.clone(), c * scalar)))
    }

    /// Degree shared by every term, if the combo is homogeneous and nonempty.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(|b| b.degree());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Linear extension of a map on basis elements.
    pub fn map_basis<F>(&self, mut f: F) -> crate::Result<LinCombo>
    where
        F: FnMut(&BasisElement) -> crate::Result<BasisElement>,
    {
        let mut out = LinCombo::zero();
        for (b, c) in self.iter() {
            out.add_term(f(b)?, c.clone());
        }
        Ok(out)
    }
}

impl fmt::Display for LinCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (b, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{c} * {b}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LinCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite formal sum of basis tensor pairs.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct TensorCombo {
    terms: BTreeMap<(BasisElement, BasisElement), BigInt>,
}

impl TensorCombo {
    pub fn zero() -> TensorCombo {
        TensorCombo::default()
    }

    pub fn add_term(&mut self, left: BasisElement, right: BasisElement, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry((left, right)) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(BasisElement, BasisElement), &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, left: &BasisElement, right: &BasisElement) -> BigInt {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn coeff_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    #[must_use]
    pub fn plus(&self, other: &TensorCombo) -> TensorCombo {
        let mut out = self.clone();
        for ((l, r), c) in other.iter() {
            out.add_term(l.clone(), r.clone(), c.clone());
        }
        out
    }
}

impl fmt::Display for TensorCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, ((l, r), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{c} * {l} (x) {r}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TensorCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
