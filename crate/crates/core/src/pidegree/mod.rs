//! PI degrees of `M₂(α,β)` and of its factor algebras.
//!
//! A quantum affine space with relations `x_i x_j = q^{h_ij} x_j x_i`, `q` a primitive `l`-th
//! root of unity, has PI degree `∏ l / gcd(h_i, l)` over the invariant factors `h_i` of `H`,
//! one per pair. [`pi_degree_snf`] applies this to the integer matrix of `M₂(α,β)`;
//! [`pi_degree_closed`] is the closed form in `ord(αβ)`, `ord(αβ⁻¹)` and `ord(β)`.

mod snf;

pub use snf::{smith_normal_form, IntMatrix, SNFResult};

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::ncalgebra::AlgebraParams;

/// The exponents `(s₁k₁, s₂k₂)` of `α` and `β` with respect to `g = ζ_l`.
fn exponents(p: &AlgebraParams) -> (i64, i64) {
    (p.s1() as i64 * p.k1(), p.s2() as i64 * p.k2())
}

fn skew4(a: i64, b: i64) -> IntMatrix {
    IntMatrix::from_i64(&[
        &[0, -a, -b, 0],
        &[a, 0, a - b, -b],
        &[b, -a + b, 0, -a],
        &[0, b, a, 0],
    ])
}

/// The skew-symmetric integer matrix attached to `M₂(α,β)` after erasing the derivation.
pub fn build_h(p: &AlgebraParams) -> Result<IntMatrix> {
    if p.alpha_beta_is_one() {
        return Err(Error::Hypothesis(
            "αβ = 1: the algebra is already a quantum affine space with another matrix".into(),
        ));
    }
    let (a, b) = exponents(p);
    Ok(skew4(a, b))
}

/// The matrix of `M₂(α,α⁻¹)` as a quantum affine space.
fn build_h_inverse_pair(p: &AlgebraParams) -> IntMatrix {
    let (a, _) = exponents(p);
    IntMatrix::from_i64(&[
        &[0, -a, a, 0],
        &[a, 0, 2 * a, a],
        &[-a, -2 * a, 0, -a],
        &[0, -a, a, 0],
    ])
}

/// `∏ l / gcd(h_i, l)`, taking one factor from each equal pair.
fn product_formula(snf: &SNFResult, l: u32) -> Result<u32> {
    if snf.rank() % 2 != 0 {
        return Err(Error::InvariantViolated(format!(
            "skew-symmetric matrix with odd rank {}",
            snf.rank()
        )));
    }
    let l_big = BigInt::from(l);
    let mut out = 1u32;
    for pair in snf.factors.chunks(2) {
        if pair[0] != pair[1] {
            return Err(Error::InvariantViolated(format!(
                "invariant factors do not pair up: {} vs {}",
                pair[0], pair[1]
            )));
        }
        let g = pair[0].gcd(&l_big).to_u32().expect("divides l");
        out *= l / g;
    }
    Ok(out)
}

/// Details of the invariant-factor computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiDegreeSnf {
    pub h: IntMatrix,
    pub snf: SNFResult,
    /// One invariant factor per pair.
    pub pairs: Vec<BigInt>,
    pub pi_degree: u32,
}

/// PI degree from the invariant factors of [`build_h`].
///
/// Parameters with `αβ = 1` or `α = β` are answered by [`pi_degree_special`].
pub fn pi_degree_snf(p: &AlgebraParams) -> Result<u32> {
    if !p.is_generic() {
        return pi_degree_special(p);
    }
    Ok(pi_degree_snf_details(p)?.pi_degree)
}

/// [`pi_degree_snf`] with the intermediate data, for `α ≠ β^{±1}`.
pub fn pi_degree_snf_details(p: &AlgebraParams) -> Result<PiDegreeSnf> {
    if !p.is_generic() {
        return Err(Error::Hypothesis("requires α ≠ β^{±1}".into()));
    }
    let h = build_h(p)?;
    let snf = smith_normal_form(&h);
    if snf.rank() != 4 {
        return Err(Error::InvariantViolated(format!(
            "matrix has rank {} instead of 4",
            snf.rank()
        )));
    }
    let (a, b) = exponents(p);
    let (h1, h2) = (&snf.factors[0], &snf.factors[2]);
    let l = BigInt::from(p.l());
    if !h1.gcd(&l).is_one() {
        return Err(Error::InvariantViolated(format!(
            "gcd(h1, l) = {} for h1 = {h1}, l = {l}",
            h1.gcd(&l)
        )));
    }
    let prod = BigInt::from(a * a - b * b);
    if h1 * h2 != prod.abs() {
        return Err(Error::InvariantViolated(format!(
            "h1 h2 = {} but (s1k1)^2 - (s2k2)^2 = {prod}",
            h1 * h2
        )));
    }
    let pi_degree = product_formula(&snf, p.l())?;
    Ok(PiDegreeSnf {
        pairs: vec![h1.clone(), h2.clone()],
        h,
        snf,
        pi_degree,
    })
}

/// `t₁t₂` if `n | t₁t₂`, else `2t₁t₂`.
pub fn pi_degree_closed(p: &AlgebraParams) -> Result<u32> {
    if !p.is_generic() {
        return Err(Error::Hypothesis("closed form requires α ≠ β^{±1}".into()));
    }
    let tt = p.t1() * p.t2();
    Ok(if tt % p.n() == 0 { tt } else { 2 * tt })
}

/// PI degree when `αβ = 1` or `α = β`, computed from the matching integer matrix and
/// checked against `ord(α)`.
pub fn pi_degree_special(p: &AlgebraParams) -> Result<u32> {
    let h = if p.alpha_beta_is_one() {
        build_h_inverse_pair(p)
    } else if p.alpha_equals_beta() {
        let (a, b) = exponents(p);
        skew4(a, b)
    } else {
        return Err(Error::Hypothesis("requires αβ = 1 or α = β".into()));
    };
    let snf = smith_normal_form(&h);
    if snf.rank() != 2 {
        return Err(Error::InvariantViolated(format!(
            "degenerate matrix has rank {} instead of 2",
            snf.rank()
        )));
    }
    let d = product_formula(&snf, p.l())?;
    let m = p.alpha().root_order();
    if d != m {
        return Err(Error::InvariantViolated(format!(
            "degenerate PI degree {d} differs from ord(α) = {m}"
        )));
    }
    Ok(d)
}

/// The three torsion cases of the classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TorsionFamily {
    X12Torsion,
    X21Torsion,
    DTorsion,
}

impl TorsionFamily {
    pub const ALL: [TorsionFamily; 3] = [
        TorsionFamily::X12Torsion,
        TorsionFamily::X21Torsion,
        TorsionFamily::DTorsion,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TorsionFamily::X12Torsion => "X12-torsion",
            TorsionFamily::X21Torsion => "X21-torsion",
            TorsionFamily::DTorsion => "D-torsion",
        }
    }
}

impl fmt::Display for TorsionFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for TorsionFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TorsionFamily::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                Error::InvalidParams(format!(
                    "unknown torsion family {s:?}; expected X12-torsion, X21-torsion or D-torsion"
                ))
            })
    }
}

/// Integer matrix of the quantum affine space the factor algebra reduces to.
pub fn factor_matrix(p: &AlgebraParams, family: TorsionFamily) -> IntMatrix {
    match family {
        TorsionFamily::X12Torsion => {
            // generators X11, X21, X22
            let (a, b) = exponents(p);
            IntMatrix::from_i64(&[&[0, -b, 0], &[b, 0, -a], &[0, a, 0]])
        }
        TorsionFamily::X21Torsion => factor_matrix(&p.swapped(), TorsionFamily::X12Torsion),
        TorsionFamily::DTorsion => {
            let (a, b) = exponents(p);
            IntMatrix::from_i64(&[
                &[0, -a, -b, -a - b],
                &[a, 0, a - b, -b],
                &[b, b - a, 0, -a],
                &[a + b, b, a, 0],
            ])
        }
    }
}

/// PI degree of the factor algebra by the torsion element; always `l`.
pub fn factor_pi_degree(p: &AlgebraParams, family: TorsionFamily) -> Result<u32> {
    let h = factor_matrix(p, family);
    let snf = smith_normal_form(&h);
    if snf.rank() != 2 {
        return Err(Error::InvariantViolated(format!(
            "{family} matrix has rank {} instead of 2",
            snf.rank()
        )));
    }
    let h1 = &snf.factors[0];
    if !h1.gcd(&BigInt::from(p.l())).is_one() {
        return Err(Error::InvariantViolated(format!(
            "{family}: gcd(h1, l) = {} for h1 = {h1}",
            h1.gcd(&BigInt::from(p.l()))
        )));
    }
    let d = product_formula(&snf, p.l())?;
    if d != p.l() {
        return Err(Error::InvariantViolated(format!(
            "{family} PI degree {d} differs from l = {}",
            p.l()
        )));
    }
    Ok(d)
}

/// Possible dimensions of torsion simple modules: `{l, ord(α), ord(β), 1}`, largest first.
pub fn dimension_menu(p: &AlgebraParams, family: TorsionFamily) -> Vec<u32> {
    let q = match family {
        TorsionFamily::X21Torsion => p.swapped(),
        _ => p.clone(),
    };
    let mut menu = vec![q.l(), q.beta().root_order(), q.alpha().root_order(), 1];
    menu.sort_unstable_by(|a, b| b.cmp(a));
    menu.dedup();
    menu
}

/// The invariant factors of `H` for generic parameters, as machine integers.
pub fn invariant_factor_pair(p: &AlgebraParams) -> Result<(u64, u64)> {
    let d = pi_degree_snf_details(p)?;
    let to = |x: &BigInt| x.to_u64().ok_or_else(|| Error::InvariantViolated("factor overflow".into()));
    Ok((to(&d.pairs[0])?, to(&d.pairs[1])?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn p(m: u32, n: u32, k1: i64, k2: i64) -> AlgebraParams {
        AlgebraParams::new(m, n, k1, k2).unwrap()
    }

    #[test]
    fn matrix_h_for_two_three() {
        let h = build_h(&p(2, 3, 1, 1)).unwrap();
        assert_eq!(
            h,
            IntMatrix::from_i64(&[&[0, -3, -2, 0], &[3, 0, 1, -2], &[2, -1, 0, -3], &[0, 2, 3, 0]])
        );
        assert!(h.is_skew_symmetric());
        assert_eq!(h.determinant(), BigInt::from(25));
        let s = smith_normal_form(&h);
        let f: Vec<i64> = s.factors.iter().map(|x| x.to_i64().unwrap()).collect();
        assert_eq!(f, vec![1, 1, 5, 5]);
        assert!(build_h(&p(5, 5, 1, 4)).is_err());
    }

    #[test]
    fn equal_parameters_give_rank_two() {
        let h = build_h(&p(7, 7, 1, 1)).unwrap();
        assert!(h.determinant().is_zero());
        assert_eq!(smith_normal_form(&h).rank(), 2);
    }

    #[test]
    fn spot_values() {
        for (m, n, k1, k2, d) in [
            (2, 3, 1, 1, 36),
            (2, 6, 1, 1, 18),
            (4, 12, 1, 1, 36),
            (3, 9, 1, 1, 81),
            (3, 9, 1, 2, 81),
        ] {
            let q = p(m, n, k1, k2);
            assert_eq!(pi_degree_snf(&q).unwrap(), d, "{m} {n} {k1} {k2}");
            assert_eq!(pi_degree_closed(&q).unwrap(), d, "{m} {n} {k1} {k2}");
        }
        assert_eq!(invariant_factor_pair(&p(2, 6, 1, 1)).unwrap(), (1, 8));
    }

    #[test]
    fn degenerate_regimes() {
        assert_eq!(pi_degree_special(&p(5, 5, 1, 4)).unwrap(), 5);
        assert_eq!(pi_degree_special(&p(7, 7, 1, 1)).unwrap(), 7);
        assert_eq!(pi_degree_special(&p(2, 2, 1, 1)).unwrap(), 2);
        assert_eq!(pi_degree_snf(&p(5, 5, 1, 4)).unwrap(), 5);
        assert!(pi_degree_closed(&p(7, 7, 1, 1)).is_err());
        assert!(pi_degree_special(&p(2, 3, 1, 1)).is_err());
    }

    #[test]
    fn snf_and_closed_form_agree_on_a_slice() {
        for m in 2..=6u32 {
            for n in 2..=6u32 {
                for k1 in 1..m as i64 {
                    for k2 in 1..n as i64 {
                        let Ok(q) = AlgebraParams::new(m, n, k1, k2) else {
                            continue;
                        };
                        if !q.is_generic() {
                            continue;
                        }
                        assert_eq!(pi_degree_snf(&q).unwrap(), pi_degree_closed(&q).unwrap());
                        assert_eq!(pi_degree_snf(&q).unwrap(), pi_degree_snf(&q.swapped()).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn factor_algebras() {
        let q = p(2, 3, 1, 1);
        for fam in TorsionFamily::ALL {
            assert_eq!(factor_pi_degree(&q, fam).unwrap(), 6);
            assert_eq!(dimension_menu(&q, fam), vec![6, 3, 2, 1]);
        }
        assert_eq!(dimension_menu(&p(4, 12, 1, 1), TorsionFamily::DTorsion), vec![12, 4, 1]);
        assert_eq!("d-torsion".parse::<TorsionFamily>().unwrap(), TorsionFamily::DTorsion);
    }
}
