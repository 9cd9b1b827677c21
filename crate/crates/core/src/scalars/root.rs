use std::fmt;

use num_integer::Integer;

use super::{CycloElem, ScalarError};

/// The root of unity `ζ_L^e`, stored by its exponent modulo the ambient order `L`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootExp {
    order: u32,
    exp: u32,
}

impl RootExp {
    /// `ζ_L^e` with `e` reduced modulo `L`.
    ///
    /// Panics if `L == 0`.
    pub fn new(order: u32, exp: i64) -> Self {
        assert!(order > 0, "ambient order must be positive");
        let exp = exp.rem_euclid(order as i64) as u32;
        RootExp { order, exp }
    }

    pub fn one(order: u32) -> Self {
        RootExp::new(order, 0)
    }

    /// The ambient order `L`.
    pub fn field_order(&self) -> u32 {
        self.order
    }

    pub fn exponent(&self) -> u32 {
        self.exp
    }

    pub fn is_one(&self) -> bool {
        self.exp == 0
    }

    /// Multiplicative order of this root: `L / gcd(e, L)`.
    pub fn root_order(&self) -> u32 {
        self.order / self.exp.gcd(&self.order)
    }

    pub fn try_mul(&self, other: &RootExp) -> Result<RootExp, ScalarError> {
        self.check(other)?;
        Ok(RootExp::new(self.order, self.exp as i64 + other.exp as i64))
    }

    pub fn inv(&self) -> RootExp {
        RootExp::new(self.order, -(self.exp as i64))
    }

    pub fn pow(&self, k: i64) -> RootExp {
        let e = (self.exp as i128 * k as i128).rem_euclid(self.order as i128);
        RootExp::new(self.order, e as i64)
    }

    /// Re-express this root inside `Q(ζ_M)` for a multiple `M` of the current order.
    pub fn lift(&self, order: u32) -> Result<RootExp, ScalarError> {
        if order == 0 || order % self.order != 0 {
            return Err(ScalarError::NotASubfield {
                from: self.order,
                to: order,
            });
        }
        Ok(RootExp::new(
            order,
            self.exp as i64 * (order / self.order) as i64,
        ))
    }

    /// The field element `ζ_L^e`.
    pub fn embed(&self) -> CycloElem {
        CycloElem::root(self.order, self.exp as i64)
    }

    fn check(&self, other: &RootExp) -> Result<(), ScalarError> {
        if self.order != other.order {
            return Err(ScalarError::FieldMismatch(self.order, other.order));
        }
        Ok(())
    }
}

impl std::ops::Mul for RootExp {
    type Output = RootExp;

    /// Panics when the ambient orders differ; use [`RootExp::try_mul`] to get an error instead.
    fn mul(self, rhs: RootExp) -> RootExp {
        match self.try_mul(&rhs) {
            Ok(r) => r,
            Err(e) => panic!("{e}"),
        }
    }
}

impl fmt::Display for RootExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "zeta({})^{}", self.order, self.exp)
    }
}

/// Order of the root of unity `r` (alias of [`RootExp::root_order`]).
pub fn root_order(r: &RootExp) -> u32 {
    r.root_order()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order_by_enumeration(r: RootExp) -> u32 {
        let mut acc = r;
        let mut k = 1;
        while !acc.is_one() {
            acc = acc * r;
            k += 1;
        }
        k
    }

    #[test]
    fn orders() {
        assert_eq!(RootExp::new(12, 8).root_order(), 3);
        assert_eq!(RootExp::new(6, 0).root_order(), 1);
        assert_eq!(RootExp::new(6, 5).root_order(), 6);
        for l in 1..30 {
            for e in 0..l {
                let r = RootExp::new(l, e as i64);
                assert_eq!(r.root_order(), order_by_enumeration(r));
            }
        }
    }

    #[test]
    fn negative_exponents_wrap() {
        assert_eq!(RootExp::new(6, -1), RootExp::new(6, 5));
        assert_eq!(RootExp::new(6, 1).inv(), RootExp::new(6, 5));
        assert_eq!(RootExp::new(6, 2).pow(-4), RootExp::new(6, 4));
    }

    #[test]
    fn lifting() {
        assert_eq!(RootExp::new(3, 1).lift(12).unwrap(), RootExp::new(12, 4));
        assert!(RootExp::new(4, 1).lift(6).is_err());
    }

    #[test]
    fn mixed_orders_rejected() {
        let err = RootExp::new(6, 1).try_mul(&RootExp::new(4, 1)).unwrap_err();
        assert_eq!(err, ScalarError::FieldMismatch(6, 4));
    }
}
