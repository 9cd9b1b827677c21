use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{RootExp, ScalarError};

/// Integer coefficients (constant term first) of the cyclotomic polynomial `Φ_L`.
///
/// Computed by exact division of `x^L - 1` by every `Φ_d` with `d | L`, `d < L`.
pub fn cyclotomic_polynomial(order: u32) -> Vec<BigInt> {
    assert!(order >= 1, "cyclotomic polynomial needs a positive order");
    let mut memo = HashMap::new();
    cyclotomic_memo(order, &mut memo)
}

fn cyclotomic_memo(order: u32, memo: &mut HashMap<u32, Vec<BigInt>>) -> Vec<BigInt> {
    if let Some(p) = memo.get(&order) {
        return p.clone();
    }
    // x^L - 1
    let mut num = vec![BigInt::zero(); order as usize + 1];
    num[0] = BigInt::from(-1);
    num[order as usize] = BigInt::one();
    for d in 1..order {
        if order % d == 0 {
            let div = cyclotomic_memo(d, memo);
            num = exact_monic_division(&num, &div);
        }
    }
    memo.insert(order, num.clone());
    num
}

fn exact_monic_division(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = den.len() - 1;
    debug_assert!(den[dn].is_one());
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut quot = vec![BigInt::zero(); qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (i, di) in den.iter().enumerate() {
            rem[k + i] -= &c * di;
        }
        quot[k] = c;
    }
    assert!(
        rem.iter().all(Zero::is_zero),
        "cyclotomic division left a remainder"
    );
    quot
}

/// Euler's totient.
pub fn euler_phi(n: u32) -> u32 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// The field `Q(ζ_L) = Q[x]/(Φ_L)`. Shared between all elements of the field.
#[derive(Debug)]
pub struct CycloField {
    order: u32,
    /// `Φ_L`, constant term first; monic of degree `phi`.
    modulus: Vec<i64>,
}

impl CycloField {
    /// Interned field of order `L`.
    pub fn get(order: u32) -> Arc<CycloField> {
        static FIELDS: OnceLock<Mutex<HashMap<u32, Arc<CycloField>>>> = OnceLock::new();
        let fields = FIELDS.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = fields.lock().unwrap_or_else(|e| e.into_inner());
        guard
            .entry(order)
            .or_insert_with(|| {
                let modulus = cyclotomic_polynomial(order)
                    .into_iter()
                    .map(|c| i64::try_from(c).expect("cyclotomic coefficient overflows i64"))
                    .collect();
                Arc::new(CycloField { order, modulus })
            })
            .clone()
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Degree of the field over `Q`, i.e. `φ(L)`.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[i64] {
        &self.modulus
    }

    /// Reduce a polynomial in `ζ` modulo `Φ_L` in place, leaving `degree()` coefficients.
    fn reduce(&self, poly: &mut Vec<BigRational>) {
        let phi = self.degree();
        if poly.len() > phi {
            for k in (phi..poly.len()).rev() {
                if poly[k].is_zero() {
                    continue;
                }
                let c = std::mem::replace(&mut poly[k], BigRational::zero());
                for (i, &m) in self.modulus[..phi].iter().enumerate() {
                    match m {
                        0 => {}
                        1 => poly[k - phi + i] -= &c,
                        -1 => poly[k - phi + i] += &c,
                        m => poly[k - phi + i] -= &c * BigRational::from_integer(m.into()),
                    }
                }
            }
        }
        poly.resize(phi, BigRational::zero());
    }
}

/// An exact element of `Q(ζ_L)`, in coordinates of the power basis `1, ζ, …, ζ^{φ(L)-1}`.
#[derive(Clone)]
pub struct CycloElem {
    field: Arc<CycloField>,
    coeffs: Vec<BigRational>,
}

impl CycloElem {
    pub fn zero(order: u32) -> Self {
        let field = CycloField::get(order);
        let coeffs = vec![BigRational::zero(); field.degree()];
        CycloElem { field, coeffs }
    }

    pub fn one(order: u32) -> Self {
        Self::from_rational(order, BigRational::one())
    }

    pub fn from_int(order: u32, v: i64) -> Self {
        Self::from_rational(order, BigRational::from_integer(v.into()))
    }

    pub fn from_rational(order: u32, v: BigRational) -> Self {
        let mut z = Self::zero(order);
        z.coeffs[0] = v;
        z
    }

    /// Element given by a polynomial in `ζ_L` (any length; reduced modulo `Φ_L`).
    pub fn from_coeffs(order: u32, mut coeffs: Vec<BigRational>) -> Self {
        let field = CycloField::get(order);
        field.reduce(&mut coeffs);
        CycloElem { field, coeffs }
    }

    /// `ζ_L^e`.
    pub fn root(order: u32, exp: i64) -> Self {
        Self::one(order).mul_root(&RootExp::new(order, exp))
    }

    pub fn field_order(&self) -> u32 {
        self.field.order
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if this element lies in `Q`.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    pub fn zero_like(&self) -> Self {
        CycloElem {
            field: self.field.clone(),
            coeffs: vec![BigRational::zero(); self.coeffs.len()],
        }
    }

    pub fn one_like(&self) -> Self {
        let mut z = self.zero_like();
        z.coeffs[0] = BigRational::one();
        z
    }

    fn check(&self, other: &CycloElem) -> Result<(), ScalarError> {
        if self.field.order != other.field.order {
            return Err(ScalarError::FieldMismatch(
                self.field.order,
                other.field.order,
            ));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &CycloElem) -> Result<CycloElem, ScalarError> {
        self.check(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CycloElem {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn try_sub(&self, other: &CycloElem) -> Result<CycloElem, ScalarError> {
        self.check(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(CycloElem {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn try_mul(&self, other: &CycloElem) -> Result<CycloElem, ScalarError> {
        self.check(other)?;
        let phi = self.coeffs.len();
        if phi == 1 {
            return Ok(CycloElem {
                field: self.field.clone(),
                coeffs: vec![&self.coeffs[0] * &other.coeffs[0]],
            });
        }
        let mut prod = vec![BigRational::zero(); 2 * phi - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                prod[i + j] += a * b;
            }
        }
        self.field.reduce(&mut prod);
        Ok(CycloElem {
            field: self.field.clone(),
            coeffs: prod,
        })
    }

    pub fn try_div(&self, other: &CycloElem) -> Result<CycloElem, ScalarError> {
        self.try_mul(&other.inv()?)
    }

    /// Multiplicative inverse; zero is reported as an error.
    pub fn inv(&self) -> Result<CycloElem, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::ZeroInverse);
        }
        if let Some(q) = self.as_rational() {
            return Ok(CycloElem::from_rational(self.field.order, q.recip()));
        }
        let modulus: Vec<BigRational> = self
            .field
            .modulus
            .iter()
            .map(|&c| BigRational::from_integer(c.into()))
            .collect();
        let inv = poly_inverse_mod(&self.coeffs, &modulus);
        Ok(CycloElem::from_coeffs(self.field.order, inv))
    }

    /// Multiplication by a root of unity of the same field: a rotation followed by reduction.
    pub fn mul_root(&self, r: &RootExp) -> CycloElem {
        assert_eq!(
            r.field_order(),
            self.field.order,
            "root of unity from a different field"
        );
        let order = self.field.order as usize;
        let shift = r.exponent() as usize;
        if shift == 0 {
            return self.clone();
        }
        let mut buf = vec![BigRational::zero(); order];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                buf[(i + shift) % order] = c.clone();
            }
        }
        // ζ^L = 1 lets the rotation stay inside degree < L; reduce from there.
        self.field.reduce(&mut buf);
        CycloElem {
            field: self.field.clone(),
            coeffs: buf,
        }
    }

    pub fn scale(&self, q: &BigRational) -> CycloElem {
        CycloElem {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Integer power; negative exponents invert (error on zero base).
    pub fn pow(&self, k: i64) -> Result<CycloElem, ScalarError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = self.one_like();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }
}

/// Inverse of `f` modulo the irreducible `m` over `Q`, by the extended Euclidean algorithm.
fn poly_inverse_mod(f: &[BigRational], m: &[BigRational]) -> Vec<BigRational> {
    let mut r0 = trim(m.to_vec());
    let mut r1 = trim(f.to_vec());
    let mut s0: Vec<BigRational> = Vec::new();
    let mut s1 = vec![BigRational::one()];
    while !r1.is_empty() {
        let (q, r) = poly_divrem(&r0, &r1);
        let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    assert_eq!(r0.len(), 1, "element shares a factor with the cyclotomic modulus");
    let c = r0[0].recip();
    s0.iter().map(|x| x * &c).collect()
}

fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            match b.get(i) {
                Some(y) => x - y,
                None => x,
            }
        })
        .collect();
    trim(out)
}

fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = a.to_vec();
    if rem.len() < b.len() {
        return (Vec::new(), trim(rem));
    }
    let lead = b.last().expect("division by zero polynomial").recip();
    let mut quot = vec![BigRational::zero(); rem.len() - b.len() + 1];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + b.len() - 1] * &lead;
        if c.is_zero() {
            continue;
        }
        for (i, bi) in b.iter().enumerate() {
            rem[k + i] -= &c * bi;
        }
        quot[k] = c;
    }
    rem.truncate(b.len() - 1);
    (trim(quot), trim(rem))
}

impl PartialEq for CycloElem {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.coeffs == other.coeffs
    }
}

impl Eq for CycloElem {}

impl Hash for CycloElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.order.hash(state);
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloElem[L={}]({})", self.field.order, self)
    }
}

impl fmt::Display for CycloElem {
    /// Polynomial in `z = ζ_L`, lowest power first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            match (i, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (_, true) => {}
                (_, false) => write!(f, "{abs}*")?,
            }
            match i {
                0 => {}
                1 => write!(f, "z")?,
                _ => write!(f, "z^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&CycloElem> for &CycloElem {
            type Output = CycloElem;
            /// Panics on mismatched fields; the `try_*` methods return an error instead.
            fn $method(self, rhs: &CycloElem) -> CycloElem {
                match self.$try(rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("{e}"),
                }
            }
        }
        impl $trait<CycloElem> for CycloElem {
            type Output = CycloElem;
            fn $method(self, rhs: CycloElem) -> CycloElem {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&CycloElem> for CycloElem {
            type Output = CycloElem;
            fn $method(self, rhs: &CycloElem) -> CycloElem {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &CycloElem {
    type Output = CycloElem;
    fn neg(self) -> CycloElem {
        CycloElem {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CycloElem {
    type Output = CycloElem;
    fn neg(self) -> CycloElem {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn degree_is_totient() {
        for l in 1..=60 {
            assert_eq!(
                cyclotomic_polynomial(l).len() - 1,
                euler_phi(l) as usize,
                "L={l}"
            );
        }
    }

    #[test]
    fn phi_105_has_a_two() {
        // First cyclotomic polynomial with a coefficient outside {-1, 0, 1}.
        let p = cyclotomic_polynomial(105);
        assert!(p.iter().any(|c| *c == BigInt::from(-2)));
    }

    #[test]
    fn embedding_identities() {
        let z = CycloElem::root(6, 1);
        let z5 = CycloElem::root(6, 5);
        assert_eq!(&z + &z5, CycloElem::one(6));
        assert_eq!(z.inv().unwrap(), z5);
        assert_eq!(CycloElem::root(6, 3), CycloElem::from_int(6, -1));
    }

    #[test]
    fn zero_has_no_inverse() {
        assert_eq!(CycloElem::zero(5).inv(), Err(ScalarError::ZeroInverse));
    }

    #[test]
    fn mixed_fields_rejected() {
        let a = CycloElem::one(6);
        let b = CycloElem::one(4);
        assert_eq!(a.try_add(&b), Err(ScalarError::FieldMismatch(6, 4)));
        assert!(a.try_mul(&b).is_err());
    }

    #[test]
    fn inverse_of_non_unit_element() {
        // 1 + 2ζ in Q(ζ_5)
        let x = CycloElem::from_coeffs(
            5,
            vec![BigRational::one(), BigRational::from_integer(2.into())],
        );
        let y = x.inv().unwrap();
        assert!((&x * &y).is_one());
    }

    #[test]
    fn display() {
        let x = CycloElem::from_coeffs(
            6,
            vec![BigRational::from_integer((-1).into()), BigRational::new(2.into(), 3.into())],
        );
        assert_eq!(x.to_string(), "-1 + 2/3*z");
        assert_eq!(CycloElem::zero(6).to_string(), "0");
        assert_eq!(CycloElem::root(4, 3).to_string(), "-z");
    }
}
