use std::collections::BTreeMap;
use std::fmt;

use crate::scalars::{CycloElem, ScalarError};

/// One of the four generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    X11,
    X12,
    X21,
    X22,
}

impl Gen {
    pub const ALL: [Gen; 4] = [Gen::X11, Gen::X12, Gen::X21, Gen::X22];

    pub fn name(self) -> &'static str {
        match self {
            Gen::X11 => "X11",
            Gen::X12 => "X12",
            Gen::X21 => "X21",
            Gen::X22 => "X22",
        }
    }

    /// Position in the PBW order `X11 < X12 < X21 < X22`.
    pub fn rank(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The ordered monomial `X11^a X12^b X21^c X22^d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PBWMonomial {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
}

impl PBWMonomial {
    pub const ONE: PBWMonomial = PBWMonomial {
        a: 0,
        b: 0,
        c: 0,
        d: 0,
    };

    pub fn new(a: u32, b: u32, c: u32, d: u32) -> Self {
        PBWMonomial { a, b, c, d }
    }

    pub fn generator(g: Gen) -> Self {
        Self::generator_power(g, 1)
    }

    pub fn generator_power(g: Gen, k: u32) -> Self {
        let mut m = Self::ONE;
        *m.exponent_mut(g) = k;
        m
    }

    pub fn exponent(&self, g: Gen) -> u32 {
        match g {
            Gen::X11 => self.a,
            Gen::X12 => self.b,
            Gen::X21 => self.c,
            Gen::X22 => self.d,
        }
    }

    fn exponent_mut(&mut self, g: Gen) -> &mut u32 {
        match g {
            Gen::X11 => &mut self.a,
            Gen::X12 => &mut self.b,
            Gen::X21 => &mut self.c,
            Gen::X22 => &mut self.d,
        }
    }

    pub fn degree(&self) -> u32 {
        self.a + self.b + self.c + self.d
    }

    /// All monomials of total degree at most `cap`, in increasing order.
    pub fn up_to_degree(cap: u32) -> Vec<PBWMonomial> {
        let mut out = Vec::new();
        for a in 0..=cap {
            for b in 0..=cap - a {
                for c in 0..=cap - a - b {
                    for d in 0..=cap - a - b - c {
                        out.push(PBWMonomial::new(a, b, c, d));
                    }
                }
            }
        }
        out
    }

    /// The word of generators this monomial spells.
    pub fn word(&self) -> Vec<Gen> {
        Gen::ALL
            .iter()
            .flat_map(|&g| std::iter::repeat(g).take(self.exponent(g) as usize))
            .collect()
    }
}

impl fmt::Display for PBWMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return f.write_str("1");
        }
        let mut first = true;
        for g in Gen::ALL {
            let e = self.exponent(g);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A finitely supported linear combination of PBW monomials over `Q(ζ_L)`.
#[derive(Clone, PartialEq, Eq)]
pub struct NCPoly {
    order: u32,
    terms: BTreeMap<PBWMonomial, CycloElem>,
}

impl NCPoly {
    pub fn zero(order: u32) -> Self {
        NCPoly {
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(order: u32) -> Self {
        Self::monomial(PBWMonomial::ONE, CycloElem::one(order))
    }

    pub fn generator(order: u32, g: Gen) -> Self {
        Self::monomial(PBWMonomial::generator(g), CycloElem::one(order))
    }

    pub fn monomial(m: PBWMonomial, coeff: CycloElem) -> Self {
        let mut p = NCPoly::zero(coeff.field_order());
        p.add_term(m, coeff);
        p
    }

    pub fn from_terms(
        order: u32,
        terms: impl IntoIterator<Item = (PBWMonomial, CycloElem)>,
    ) -> Result<Self, ScalarError> {
        let mut p = NCPoly::zero(order);
        for (m, c) in terms {
            if c.field_order() != order {
                return Err(ScalarError::FieldMismatch(order, c.field_order()));
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn field_order(&self) -> u32 {
        self.order
    }

    pub fn terms(&self) -> &BTreeMap<PBWMonomial, CycloElem> {
        &self.terms
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

    pub fn coeff(&self, m: &PBWMonomial) -> CycloElem {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| CycloElem::zero(self.order))
    }

    /// Largest total degree of a term, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(PBWMonomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(PBWMonomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Add `coeff * m` in place, dropping the term if it cancels.
    ///
    /// # Panics
    /// If `coeff` lives in another field.
    pub fn add_term(&mut self, m: PBWMonomial, coeff: CycloElem) {
        assert_eq!(coeff.field_order(), self.order, "scalar from another field");
        if coeff.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            Some(old) => {
                let s = &old + &coeff;
                if !s.is_zero() {
                    self.terms.insert(m, s);
                }
            }
            None => {
                self.terms.insert(m, coeff);
            }
        }
    }

    fn check(&self, other: &NCPoly) -> Result<(), ScalarError> {
        if self.order != other.order {
            return Err(ScalarError::FieldMismatch(self.order, other.order));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &NCPoly) -> Result<NCPoly, ScalarError> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &NCPoly) -> Result<NCPoly, ScalarError> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c);
        }
        Ok(out)
    }

    pub fn scale(&self, s: &CycloElem) -> NCPoly {
        assert_eq!(s.field_order(), self.order, "scalar from another field");
        if s.is_zero() {
            return NCPoly::zero(self.order);
        }
        NCPoly {
            order: self.order,
            terms: self.terms.iter().map(|(m, c)| (*m, c * s)).collect(),
        }
    }

    /// `Some(r)` with `self = r * other`, when such a scalar exists.
    pub fn ratio_to(&self, other: &NCPoly) -> Option<CycloElem> {
        if self.order != other.order {
            return None;
        }
        if other.is_zero() {
            return self.is_zero().then(|| CycloElem::zero(self.order));
        }
        let (m, c) = other.terms.iter().next()?;
        let r = self.coeff(m).try_div(c).ok()?;
        (other.scale(&r) == *self).then_some(r)
    }
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "{m}")?;
            } else if m.degree() == 0 {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NCPoly[L={}]({self})", self.order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_enumeration_counts() {
        // C(cap + 4, 4)
        assert_eq!(PBWMonomial::up_to_degree(0).len(), 1);
        assert_eq!(PBWMonomial::up_to_degree(6).len(), 210);
        assert_eq!(PBWMonomial::up_to_degree(12).len(), 1820);
    }

    #[test]
    fn cancellation_drops_terms() {
        let x = NCPoly::generator(6, Gen::X12);
        assert!(x.try_sub(&x).unwrap().is_zero());
        let two = x.try_add(&x).unwrap();
        assert_eq!(two.ratio_to(&x), Some(CycloElem::from_int(6, 2)));
        assert_eq!(x.ratio_to(&NCPoly::generator(6, Gen::X21)), None);
    }

    #[test]
    fn display_is_readable() {
        let m = PBWMonomial::new(2, 0, 1, 0);
        assert_eq!(m.to_string(), "X11^2*X21");
        assert_eq!(m.word(), vec![Gen::X11, Gen::X11, Gen::X21]);
        let p = NCPoly::monomial(m, CycloElem::from_int(3, -1));
        assert_eq!(p.to_string(), "(-1)*X11^2*X21");
    }

    #[test]
    fn field_mismatch_is_an_error() {
        let a = NCPoly::one(6);
        let b = NCPoly::one(4);
        assert!(a.try_add(&b).is_err());
    }
}
