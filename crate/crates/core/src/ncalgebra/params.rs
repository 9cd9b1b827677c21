use num_integer::Integer;

use crate::error::{Error, Result};
use crate::scalars::{CycloElem, RootExp};

/// Parameters `(m, n, k1, k2)` with `α = ζ_m^{k1}` and `β = ζ_n^{k2}`, plus derived orders.
///
/// All roots live in one session field `Q(ζ_L)`; `L` defaults to `l = lcm(m, n)` and can be
/// enlarged with [`AlgebraParams::with_field_order`] to host other scalars.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgebraParams {
    m: u32,
    n: u32,
    k1: i64,
    k2: i64,
    l: u32,
    field_order: u32,
    alpha: RootExp,
    beta: RootExp,
    t1: u32,
    t2: u32,
    l1: u32,
}

impl AlgebraParams {
    pub fn new(m: u32, n: u32, k1: i64, k2: i64) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidParams(format!(
                "orders must be positive (m={m}, n={n})"
            )));
        }
        if k1.gcd(&(m as i64)) != 1 {
            return Err(Error::InvalidParams(format!(
                "gcd(k1, m) must be 1, got gcd({k1}, {m}) = {}",
                k1.gcd(&(m as i64))
            )));
        }
        if k2.gcd(&(n as i64)) != 1 {
            return Err(Error::InvalidParams(format!(
                "gcd(k2, n) must be 1, got gcd({k2}, {n}) = {}",
                k2.gcd(&(n as i64))
            )));
        }
        let l = m.lcm(&n);
        Ok(Self::build(m, n, k1, k2, l))
    }

    fn build(m: u32, n: u32, k1: i64, k2: i64, field_order: u32) -> Self {
        let l = m.lcm(&n);
        let alpha = RootExp::new(field_order, k1 * (field_order / m) as i64);
        let beta = RootExp::new(field_order, k2 * (field_order / n) as i64);
        let t1 = (alpha * beta).root_order();
        let t2 = (alpha * beta.inv()).root_order();
        let l1 = if (t1 * t2) % n == 0 { t1 } else { 2 * t1 };
        AlgebraParams {
            m,
            n,
            k1,
            k2,
            l,
            field_order,
            alpha,
            beta,
            t1,
            t2,
            l1,
        }
    }

    /// The same algebra with its scalars embedded in `Q(ζ_L)`; `l` must divide `L`.
    pub fn with_field_order(&self, order: u32) -> Result<Self> {
        if order == 0 || order % self.l != 0 {
            return Err(Error::InvalidParams(format!(
                "field order {order} is not a multiple of l = {}",
                self.l
            )));
        }
        Ok(Self::build(self.m, self.n, self.k1, self.k2, order))
    }

    /// Parameters of `M₂(β,α)`: `(m, k1)` and `(n, k2)` exchanged.
    pub fn swapped(&self) -> Self {
        Self::build(self.n, self.m, self.k2, self.k1, self.field_order)
    }

    pub fn m(&self) -> u32 {
        self.m
    }
    pub fn n(&self) -> u32 {
        self.n
    }
    pub fn k1(&self) -> i64 {
        self.k1
    }
    pub fn k2(&self) -> i64 {
        self.k2
    }
    /// `lcm(m, n)`, the order of the group generated by `α` and `β`.
    pub fn l(&self) -> u32 {
        self.l
    }
    pub fn s1(&self) -> u32 {
        self.n / self.m.gcd(&self.n)
    }
    pub fn s2(&self) -> u32 {
        self.m / self.m.gcd(&self.n)
    }
    /// Order `L` of the session field `Q(ζ_L)`.
    pub fn field_order(&self) -> u32 {
        self.field_order
    }
    pub fn alpha(&self) -> RootExp {
        self.alpha
    }
    pub fn beta(&self) -> RootExp {
        self.beta
    }
    /// `ord(αβ)`
    pub fn t1(&self) -> u32 {
        self.t1
    }
    /// `ord(αβ⁻¹)`
    pub fn t2(&self) -> u32 {
        self.t2
    }
    /// Range of the first module index: `ord(αβ)`, doubled unless `n | t1 t2`.
    pub fn l1(&self) -> u32 {
        self.l1
    }
    /// Range of the second module index: `ord(αβ⁻¹)`.
    pub fn l2(&self) -> u32 {
        self.t2
    }

    pub fn alpha_beta_is_one(&self) -> bool {
        (self.alpha * self.beta).is_one()
    }

    pub fn alpha_equals_beta(&self) -> bool {
        self.alpha == self.beta
    }

    /// Neither `α = β` nor `αβ = 1`.
    pub fn is_generic(&self) -> bool {
        !self.alpha_beta_is_one() && !self.alpha_equals_beta()
    }

    /// `ord(αβ) = ord(αβ⁻¹)` with `αβ^{±1} ≠ 1`, the regime where the center is known.
    pub fn center_hypothesis(&self) -> bool {
        self.is_generic() && self.t1 == self.t2
    }

    pub fn root(&self, exp: i64) -> RootExp {
        RootExp::new(self.field_order, exp)
    }

    pub fn one(&self) -> CycloElem {
        CycloElem::one(self.field_order)
    }

    pub fn zero(&self) -> CycloElem {
        CycloElem::zero(self.field_order)
    }

    /// `β - α⁻¹`, the coefficient of the only non-monomial relation.
    pub fn kappa(&self) -> CycloElem {
        &self.beta.embed() - &self.alpha.inv().embed()
    }
}
