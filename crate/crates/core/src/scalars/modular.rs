//! Reduction of `Q(ζ_L)` modulo a prime `p ≡ 1 (mod L)`.
//!
//! Sending `ζ_L` to a primitive `L`-th root of unity `ω ∈ F_p` is a ring homomorphism on
//! every element whose coefficient denominators are prime to `p`. Ranks can only drop
//! under it, so a full rank found modulo `p` is full rank over `Q(ζ_L)` as well.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::{CycloElem, CycloField};

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn pow_mod(base: u64, exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    let mut b = base % p;
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// The homomorphism `Z[ζ_L]_(p) → F_p`.
#[derive(Debug, Clone)]
pub struct ModularImage {
    order: u32,
    prime: u64,
    omega_powers: Vec<u64>,
}

impl ModularImage {
    /// Uses the largest prime `p ≡ 1 (mod L)` strictly below `bound` (at most `2^31`).
    pub fn below(order: u32, bound: u64) -> Self {
        assert!(bound <= 1 << 31, "modulus must fit 31 bits");
        let l = order as u64;
        let mut p = (bound - 1) / l * l + 1;
        if p >= bound {
            p -= l;
        }
        while !is_prime(p) {
            p -= l;
        }
        let factors = prime_factors(l);
        let omega = (2..p)
            .map(|x| pow_mod(x, (p - 1) / l, p))
            .find(|&w| factors.iter().all(|&q| pow_mod(w, l / q, p) != 1))
            .expect("F_p* is cyclic of order divisible by L");
        let phi = CycloField::get(order).degree();
        let mut omega_powers = Vec::with_capacity(phi);
        let mut acc = 1;
        for _ in 0..phi {
            omega_powers.push(acc);
            acc = acc * omega % p;
        }
        ModularImage {
            order,
            prime: p,
            omega_powers,
        }
    }

    pub fn new(order: u32) -> Self {
        Self::below(order, 1 << 31)
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    fn reduce_int(&self, v: &BigInt) -> u64 {
        v.mod_floor(&BigInt::from(self.prime))
            .to_u64()
            .expect("residue fits")
    }

    /// Image of `x`, or `None` when a denominator is divisible by `p`.
    pub fn map(&self, x: &CycloElem) -> Option<u64> {
        assert_eq!(x.field_order(), self.order, "element from another field");
        let p = self.prime;
        let mut acc = 0u64;
        for (c, w) in x.coeffs().iter().zip(&self.omega_powers) {
            if c.is_zero() {
                continue;
            }
            let num = self.reduce_int(c.numer());
            let den = self.reduce_int(c.denom());
            if den == 0 {
                return None;
            }
            let q = num * pow_mod(den, p - 2, p) % p;
            acc = (acc + q * w) % p;
        }
        Some(acc)
    }
}

/// Row echelon form over `F_p`: sparse rows, each led by its pivot column.
///
/// Spanning sets of weighted permutation matrices stay sparse under this reduction,
/// so the cost per insertion tracks the support sizes rather than the ambient dimension.
#[derive(Debug, Clone)]
pub struct ModEchelon {
    prime: u64,
    ncols: usize,
    rows: Vec<Vec<(usize, u64)>>,
    pivot_row: Vec<Option<usize>>,
}

impl ModEchelon {
    pub fn new(prime: u64, ncols: usize) -> Self {
        ModEchelon {
            prime,
            ncols,
            rows: Vec::new(),
            pivot_row: vec![None; ncols],
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Insert a sparse vector; returns whether the rank grew.
    pub fn insert(&mut self, v: &[(usize, u64)]) -> bool {
        let p = self.prime;
        let mut acc: std::collections::BTreeMap<usize, u64> = std::collections::BTreeMap::new();
        for &(c, x) in v {
            let e = acc.entry(c).or_insert(0);
            *e = (*e + x % p) % p;
        }
        acc.retain(|_, x| *x != 0);
        // eliminate pivots in increasing column order; rows only touch columns right of their pivot
        let mut cursor = 0;
        loop {
            let Some((&c, &x)) = acc.range(cursor..).find(|(c, _)| self.pivot_row[**c].is_some())
            else {
                break;
            };
            let r = self.pivot_row[c].expect("pivot present");
            let neg = p - x;
            for &(j, y) in &self.rows[r] {
                let e = acc.entry(j).or_insert(0);
                *e = (*e + neg * y) % p;
                if *e == 0 {
                    acc.remove(&j);
                }
            }
            cursor = c + 1;
        }
        let Some((&pcol, &lead)) = acc.iter().next() else {
            return false;
        };
        let inv = pow_mod(lead, p - 2, p);
        let row: Vec<(usize, u64)> = acc.into_iter().map(|(c, x)| (c, x * inv % p)).collect();
        self.pivot_row[pcol] = Some(self.rows.len());
        self.rows.push(row);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    #[test]
    fn image_is_a_ring_homomorphism() {
        let img = ModularImage::new(12);
        assert_eq!((img.prime() - 1) % 12, 0);
        let p = img.prime();
        let a = CycloElem::root(12, 5);
        let b = CycloElem::from_coeffs(
            12,
            vec![BigRational::new(1.into(), 3.into()), BigRational::from_integer(2.into())],
        );
        let ma = img.map(&a).unwrap();
        let mb = img.map(&b).unwrap();
        assert_eq!(img.map(&(&a * &b)).unwrap(), ma * mb % p);
        assert_eq!(img.map(&(&a + &b)).unwrap(), (ma + mb) % p);
        // ζ has order exactly 12
        assert_eq!(pow_mod(img.map(&CycloElem::root(12, 1)).unwrap(), 12, p), 1);
        assert_ne!(pow_mod(img.map(&CycloElem::root(12, 1)).unwrap(), 6, p), 1);
    }

    #[test]
    fn modular_rank() {
        let mut e = ModEchelon::new(101, 3);
        assert!(e.insert(&[(0, 1), (1, 2)]));
        assert!(e.insert(&[(1, 1), (2, 1)]));
        assert!(!e.insert(&[(0, 1), (1, 3), (2, 1)]));
        assert_eq!(e.rank(), 2);
    }
}
