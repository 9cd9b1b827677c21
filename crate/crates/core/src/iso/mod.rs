//! Isomorphism of torsionfree simple modules, by parameter criteria and by intertwiners.
//!
//! An intertwiner from `A` to `B` (right modules, row vectors) is a matrix `T` with
//! `A_g T = T B_g` for every generator `g`.

mod validate;

pub use validate::{cross_validate, CrossValidation, PairRecord};

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::Echelon;
use crate::ncalgebra::{AlgebraParams, Gen};
use crate::reps::{Family, ParamTuple, Representation};
use crate::scalars::{CycloElem, RootExp, ScalarMatrix};

/// The shift `(u, v)` relating two parameter tuples of the same family. For `V3` only `v`
/// is meaningful and `u` is always 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shift {
    pub u: u32,
    pub v: u32,
}

impl fmt::Display for Shift {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(u={}, v={})", self.u, self.v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Shift(Shift),
    Intertwiner(ScalarMatrix),
    DimensionMismatch { left: usize, right: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoVerdict {
    pub isomorphic: bool,
    pub witness: Option<Witness>,
}

fn check_pair(p: &AlgebraParams, mu: &ParamTuple, la: &ParamTuple, family: Family) -> Result<()> {
    for t in [mu, la] {
        if t.family() != family {
            return Err(Error::InvalidParams(format!(
                "expected {family} scalars, got {}",
                t.family()
            )));
        }
        if t.field_order() != p.field_order() {
            return Err(crate::scalars::ScalarError::FieldMismatch(p.field_order(), t.field_order()).into());
        }
    }
    Ok(())
}

fn pw(x: &CycloElem, k: i64) -> CycloElem {
    x.pow(k).expect("nonzero scalar")
}

/// `μ ≅ λ` for `V1`: the first `(u, v)` with `0 ≤ u < l₁`, `0 ≤ v < l₂` such that
/// `μ₁^{l₁} = λ₁^{l₁}β^{vl₁}`, `μ₂^{l₂} = λ₂^{l₂}β^{-ul₂}`, `μ₃ = λ₃(αβ)^{-u}(α⁻¹β)^v`,
/// `μ₄ = λ₄(α⁻¹β)^v`.
pub fn criteria_v1(p: &AlgebraParams, mu: &ParamTuple, la: &ParamTuple) -> Result<Option<Shift>> {
    check_pair(p, mu, la, Family::V1)?;
    let (l1, l2) = (p.l1() as i64, p.l2() as i64);
    let (alpha, beta) = (p.alpha(), p.beta());
    let ab = alpha * beta;
    let ba = beta * alpha.inv();
    let (m1, m2) = (pw(mu.get(1), l1), pw(mu.get(2), l2));
    let (n1, n2) = (pw(la.get(1), l1), pw(la.get(2), l2));
    for u in 0..l1 {
        for v in 0..l2 {
            let ok = m1 == n1.mul_root(&beta.pow(v * l1))
                && m2 == n2.mul_root(&beta.pow(-u * l2))
                && *mu.get(3) == la.get(3).mul_root(&(ab.pow(-u) * ba.pow(v)))
                && *mu.get(4) == la.get(4).mul_root(&ba.pow(v));
            if ok {
                return Ok(Some(Shift {
                    u: u as u32,
                    v: v as u32,
                }));
            }
        }
    }
    Ok(None)
}

/// Values of `u` tried for `V2`: `0` and `t₁`, the latter only when it is a nonzero shift.
pub fn v2_u_range(p: &AlgebraParams) -> Vec<u32> {
    let mut out = vec![0];
    if p.t1() < p.l1() {
        out.push(p.t1());
    }
    out
}

/// `μ ≅ λ` for `V2`: `u ∈ {0, t₁}`, `0 ≤ v < l₂` with `μ₁^{l₁} = λ₁^{l₁}α^{-vl₁}`,
/// `μ₂^{l₂} = λ₂^{l₂}α^{ul₂}`, `μ₃ = λ₃(αβ)^u(α⁻¹β)^v`.
pub fn criteria_v2(p: &AlgebraParams, mu: &ParamTuple, la: &ParamTuple) -> Result<Option<Shift>> {
    check_pair(p, mu, la, Family::V2)?;
    let (l1, l2) = (p.l1() as i64, p.l2() as i64);
    let (alpha, beta) = (p.alpha(), p.beta());
    let ab = alpha * beta;
    let ba = beta * alpha.inv();
    let (m1, m2) = (pw(mu.get(1), l1), pw(mu.get(2), l2));
    let (n1, n2) = (pw(la.get(1), l1), pw(la.get(2), l2));
    for u in v2_u_range(p) {
        let ui = u as i64;
        for v in 0..l2 {
            let ok = m1 == n1.mul_root(&alpha.pow(-v * l1))
                && m2 == n2.mul_root(&alpha.pow(ui * l2))
                && *mu.get(3) == la.get(3).mul_root(&(ab.pow(ui) * ba.pow(v)));
            if ok {
                return Ok(Some(Shift { u, v: v as u32 }));
            }
        }
    }
    Ok(None)
}

/// `μ ≅ λ` for `V3`: `0 ≤ v < l₂` with `μ₁^{l₂} = λ₁^{l₂}` and `μ₂ = λ₂(α⁻¹β)^v`.
pub fn criteria_v3(p: &AlgebraParams, mu: &ParamTuple, la: &ParamTuple) -> Result<Option<u32>> {
    check_pair(p, mu, la, Family::V3)?;
    let l2 = p.l2() as i64;
    let ba = p.beta() * p.alpha().inv();
    if pw(mu.get(1), l2) != pw(la.get(1), l2) {
        return Ok(None);
    }
    Ok((0..l2)
        .find(|&v| *mu.get(2) == la.get(2).mul_root(&ba.pow(v)))
        .map(|v| v as u32))
}

/// Criteria for two tuples of the same family; `None` for different families.
pub fn criteria(p: &AlgebraParams, mu: &ParamTuple, la: &ParamTuple) -> Result<Option<Shift>> {
    if mu.family() != la.family() {
        return Ok(None);
    }
    match mu.family() {
        Family::V1 => criteria_v1(p, mu, la),
        Family::V2 => criteria_v2(p, mu, la),
        Family::V3 => Ok(criteria_v3(p, mu, la)?.map(|v| Shift { u: 0, v })),
    }
}

/// The isomorphism `V(μ) → V(λ)` written down from a criteria shift:
///
/// - `V1`: `e(a,b) ↦ (μ₁⁻¹λ₁)^a (μ₂⁻¹λ₂)^b β^{av} e(a⊕u, b∔v)`, times `β^{-(a⊕u)l₂}` when `b∔v` wraps;
/// - `V2`: `e(a,b) ↦ (μ₁⁻¹λ₁)^a (μ₂⁻¹λ₂α^u)^b e(a⊕u, b∔v)`, times `α^{-(b∔v)l₁}` when `a⊕u` wraps;
/// - `V3`: `e(a,b) ↦ (μ₁⁻¹λ₁)^b e(a, b∔v)`.
pub fn explicit_intertwiner(
    p: &AlgebraParams,
    mu: &ParamTuple,
    la: &ParamTuple,
    shift: Shift,
) -> Result<ScalarMatrix> {
    if mu.family() != la.family() {
        return Err(Error::InvalidParams("explicit maps relate tuples of one family".into()));
    }
    check_pair(p, mu, la, mu.family())?;
    let (ra, rb) = mu.family().ranges(p);
    let (alpha, beta) = (p.alpha(), p.beta());
    let ratio = |i: usize| la.get(i) * &mu.get(i).inv().expect("nonzero scalar");
    let (u, v) = (shift.u, shift.v);
    let mut entries = Vec::new();
    for a in 0..ra {
        for b in 0..rb {
            let (a2, b2) = ((a + u) % ra, (b + v) % rb);
            let (ai, bi) = (a as i64, b as i64);
            let c = match mu.family() {
                Family::V1 => {
                    let mut r: RootExp = beta.pow(ai * v as i64);
                    if b + v >= rb {
                        r = r * beta.pow(-(a2 as i64) * rb as i64);
                    }
                    (&pw(&ratio(1), ai) * &pw(&ratio(2), bi)).mul_root(&r)
                }
                Family::V2 => {
                    let mut r: RootExp = alpha.pow(u as i64 * bi);
                    if a + u >= ra {
                        r = r * alpha.pow(-(b2 as i64) * ra as i64);
                    }
                    (&pw(&ratio(1), ai) * &pw(&ratio(2), bi)).mul_root(&r)
                }
                Family::V3 => pw(&ratio(1), bi),
            };
            entries.push(((a * rb + b) as usize, (a2 * rb + b2) as usize, c));
        }
    }
    let d = (ra * rb) as usize;
    Ok(ScalarMatrix::from_entries(d, d, p.field_order(), entries)?)
}

/// Whether `A_g T = T B_g` for all four generators.
pub fn is_intertwiner(a: &Representation, b: &Representation, t: &ScalarMatrix) -> bool {
    Gen::ALL.iter().all(|&g| {
        let lhs = a.matrix(g).try_mul(t);
        let rhs = t.try_mul(b.matrix(g));
        matches!((lhs, rhs), (Ok(l), Ok(r)) if l == r)
    })
}

/// Solution space of the intertwining equations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntertwinerSpace {
    pub basis: Vec<ScalarMatrix>,
    /// Set when the two modules have different dimensions; the space is then zero.
    pub dimension_mismatch: Option<(usize, usize)>,
}

impl IntertwinerSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// All `T` with `A_g T = T B_g`, by exact elimination on the `d²` entries of `T`.
pub fn intertwiner_space(a: &Representation, b: &Representation) -> Result<IntertwinerSpace> {
    if a.params() != b.params() {
        return Err(Error::InvalidParams("intertwiners between modules over different algebras".into()));
    }
    let d = a.dim();
    if b.dim() != d {
        return Ok(IntertwinerSpace {
            basis: Vec::new(),
            dimension_mismatch: Some((d, b.dim())),
        });
    }
    let var = |k: usize, j: usize| k * d + j;
    let mut eqs: BTreeMap<(usize, usize, usize), Vec<(usize, CycloElem)>> = BTreeMap::new();
    for g in Gen::ALL {
        let (ag, bg) = (a.matrix(g), b.matrix(g));
        for i in 0..d {
            // (A_g T)[i, j] = Σ_k A[i,k] T[k,j]
            for (k, x) in ag.row(i) {
                for j in 0..d {
                    eqs.entry((g.rank(), i, j)).or_default().push((var(*k, j), x.clone()));
                }
            }
            // (T B_g)[i, j] = Σ_k T[i,k] B[k,j]
            for k in 0..d {
                for (j, y) in bg.row(k) {
                    eqs.entry((g.rank(), i, *j)).or_default().push((var(i, k), -y));
                }
            }
        }
    }
    let mut ech = Echelon::new(d * d);
    for row in eqs.into_values() {
        let row = crate::linalg::normalize(row);
        if !row.is_empty() {
            ech.insert(&row);
        }
        if ech.rank() == d * d {
            break;
        }
    }
    let one = CycloElem::one(a.params().field_order());
    let basis = ech
        .nullspace(&one)
        .into_iter()
        .map(|v| {
            let entries = v.into_iter().map(|(c, x)| (c / d, c % d, x));
            ScalarMatrix::from_entries(d, d, a.params().field_order(), entries).expect("in range")
        })
        .collect();
    Ok(IntertwinerSpace {
        basis,
        dimension_mismatch: None,
    })
}

/// Decide `A ≅ B`. Same-family tagged modules use the criteria; anything else goes to the
/// intertwiner solve, which for simple modules is conclusive by Schur's lemma.
pub fn are_isomorphic(a: &Representation, b: &Representation) -> Result<IsoVerdict> {
    if a.dim() != b.dim() {
        return Ok(IsoVerdict {
            isomorphic: false,
            witness: Some(Witness::DimensionMismatch {
                left: a.dim(),
                right: b.dim(),
            }),
        });
    }
    if let (Some(mu), Some(la)) = (a.tuple(), b.tuple()) {
        let tagged = mu.family() == la.family() && !a.is_swapped() && !b.is_swapped();
        if tagged && a.params() == b.params() {
            let shift = criteria(a.params(), mu, la)?;
            return Ok(IsoVerdict {
                isomorphic: shift.is_some(),
                witness: shift.map(Witness::Shift),
            });
        }
    }
    let space = intertwiner_space(a, b)?;
    let t = space.basis.into_iter().find(ScalarMatrix::is_invertible);
    Ok(IsoVerdict {
        isomorphic: t.is_some(),
        witness: t.map(Witness::Intertwiner),
    })
}
