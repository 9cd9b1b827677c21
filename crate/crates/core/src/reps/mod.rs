//! The torsionfree simple modules `V1(μ)`, `V2(μ)`, `V3(μ)` as explicit matrices.
//!
//! Modules are right modules on row vectors: `e_i · X` is row `i` of the matrix of `X`, so a
//! word `x y` acts by the product `A_x A_y`. The basis vector `e(a, b)` has index
//! `a * range_b + b`.

mod burnside;

pub use burnside::{burnside_dimension, is_absolutely_simple, BurnsideMethod, BurnsideResult};

use std::fmt;

use crate::error::{Error, Result};
use crate::ncalgebra::{AlgebraParams, Gen};
use crate::scalars::{CycloElem, RootExp, ScalarError, ScalarMatrix};

/// One of the three module families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    V1,
    V2,
    V3,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::V1, Family::V2, Family::V3];

    /// Number of scalars `μ_i` the family takes.
    pub fn arity(self) -> usize {
        match self {
            Family::V1 => 4,
            Family::V2 => 3,
            Family::V3 => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::V1 => "V1",
            Family::V2 => "V2",
            Family::V3 => "V3",
        }
    }

    /// Index ranges `(range_a, range_b)` of the basis `e(a, b)`.
    pub fn ranges(self, p: &AlgebraParams) -> (u32, u32) {
        match self {
            Family::V1 | Family::V2 => (p.l1(), p.l2()),
            Family::V3 => (p.t1(), p.l2()),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParams(format!("unknown family {s:?}; expected V1, V2 or V3")))
    }
}

/// A family tag with its scalars `μ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamTuple {
    family: Family,
    mu: Vec<CycloElem>,
}

impl ParamTuple {
    pub fn new(family: Family, mu: Vec<CycloElem>) -> Result<Self> {
        if mu.len() != family.arity() {
            return Err(Error::InvalidParams(format!(
                "{family} takes {} scalars, got {}",
                family.arity(),
                mu.len()
            )));
        }
        if let Some(i) = mu.iter().position(CycloElem::is_zero) {
            return Err(Error::InvalidParams(format!("mu_{} must be nonzero", i + 1)));
        }
        if let Some(x) = mu.iter().find(|x| x.field_order() != mu[0].field_order()) {
            return Err(ScalarError::FieldMismatch(mu[0].field_order(), x.field_order()).into());
        }
        Ok(ParamTuple { family, mu })
    }

    /// All scalars are roots of unity `ζ_L^{e_i}`.
    pub fn roots(family: Family, roots: &[RootExp]) -> Result<Self> {
        Self::new(family, roots.iter().map(RootExp::embed).collect())
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn mu(&self) -> &[CycloElem] {
        &self.mu
    }

    /// `μ_i`, one-based as in the formulas.
    pub fn get(&self, i: usize) -> &CycloElem {
        &self.mu[i - 1]
    }

    pub fn field_order(&self) -> u32 {
        self.mu[0].field_order()
    }
}

/// Four action matrices with their provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    params: AlgebraParams,
    tuple: Option<ParamTuple>,
    ranges: Option<(u32, u32)>,
    /// Pulled back along `X12 ↔ X21` from a module over the swapped algebra.
    swapped: bool,
    mats: [ScalarMatrix; 4],
}

impl Representation {
    /// A representation given directly by its matrices, in the order `X11, X12, X21, X22`.
    pub fn from_matrices(params: &AlgebraParams, mats: [ScalarMatrix; 4]) -> Result<Self> {
        let d = mats[0].nrows();
        for m in &mats {
            if m.nrows() != d || m.ncols() != d {
                return Err(ScalarError::ShapeMismatch {
                    left: (d, d),
                    right: (m.nrows(), m.ncols()),
                }
                .into());
            }
            if m.field_order() != params.field_order() {
                return Err(ScalarError::FieldMismatch(params.field_order(), m.field_order()).into());
            }
        }
        Ok(Representation {
            params: params.clone(),
            tuple: None,
            ranges: None,
            swapped: false,
            mats,
        })
    }

    pub fn dim(&self) -> usize {
        self.mats[0].nrows()
    }

    pub fn params(&self) -> &AlgebraParams {
        &self.params
    }

    pub fn family(&self) -> Option<Family> {
        self.tuple.as_ref().map(ParamTuple::family)
    }

    pub fn tuple(&self) -> Option<&ParamTuple> {
        self.tuple.as_ref()
    }

    pub fn ranges(&self) -> Option<(u32, u32)> {
        self.ranges
    }

    pub fn is_swapped(&self) -> bool {
        self.swapped
    }

    pub fn matrix(&self, g: Gen) -> &ScalarMatrix {
        &self.mats[g.rank()]
    }

    pub fn matrices(&self) -> &[ScalarMatrix; 4] {
        &self.mats
    }

    /// Index of `e(a, b)`.
    pub fn index(&self, a: u32, b: u32) -> Option<usize> {
        let (ra, rb) = self.ranges?;
        (a < ra && b < rb).then(|| (a * rb + b) as usize)
    }

    /// Matrix of `D = X11 X22 - α⁻¹ X12 X21`.
    pub fn determinant_action(&self) -> ScalarMatrix {
        let ainv = self.params.alpha().inv();
        let a = self.matrix(Gen::X11).try_mul(self.matrix(Gen::X22)).expect("square");
        let b = self.matrix(Gen::X12).try_mul(self.matrix(Gen::X21)).expect("square");
        a.try_sub(&b.scale_root(&ainv)).expect("same shape")
    }

    /// Block-diagonal sum with another representation of the same algebra.
    pub fn direct_sum(&self, other: &Representation) -> Result<Representation> {
        if self.params != other.params {
            return Err(Error::InvalidParams("direct sum over different algebras".into()));
        }
        let mats = [0, 1, 2, 3].map(|i| self.mats[i].direct_sum(&other.mats[i]).expect("same field"));
        Representation::from_matrices(&self.params, mats)
    }

    /// Replace one matrix entry; for building negative controls.
    pub fn with_entry(&self, g: Gen, i: usize, j: usize, value: CycloElem) -> Result<Representation> {
        let m = self.matrix(g);
        let entries = m
            .entries()
            .filter(|&(r, c, _)| (r, c) != (i, j))
            .map(|(r, c, v)| (r, c, v.clone()))
            .chain(std::iter::once((i, j, value)));
        let replaced = ScalarMatrix::from_entries(m.nrows(), m.ncols(), m.field_order(), entries)?;
        let mut out = self.clone();
        out.mats[g.rank()] = replaced;
        out.tuple = None;
        Ok(out)
    }
}

fn check_tuple(p: &AlgebraParams, mu: &ParamTuple, family: Family) -> Result<()> {
    if mu.family() != family {
        return Err(Error::InvalidParams(format!(
            "scalars tagged {} passed to a {family} construction",
            mu.family()
        )));
    }
    if mu.field_order() != p.field_order() {
        return Err(ScalarError::FieldMismatch(p.field_order(), mu.field_order()).into());
    }
    if p.alpha_beta_is_one() {
        return Err(Error::Hypothesis("module families require αβ ≠ 1".into()));
    }
    Ok(())
}

struct Builder {
    order: u32,
    ra: u32,
    rb: u32,
    entries: [Vec<(usize, usize, CycloElem)>; 4],
}

impl Builder {
    fn new(p: &AlgebraParams, ra: u32, rb: u32) -> Self {
        Builder {
            order: p.field_order(),
            ra,
            rb,
            entries: Default::default(),
        }
    }

    fn idx(&self, a: u32, b: u32) -> usize {
        (a * self.rb + b) as usize
    }

    /// `e(a, b) · g = value · e(a2, b2)`.
    fn set(&mut self, g: Gen, (a, b): (u32, u32), (a2, b2): (u32, u32), value: CycloElem) {
        let (i, j) = (self.idx(a, b), self.idx(a2, b2));
        self.entries[g.rank()].push((i, j, value));
    }

    fn finish(self, p: &AlgebraParams, tuple: ParamTuple) -> Representation {
        let d = (self.ra * self.rb) as usize;
        let order = self.order;
        let [e11, e12, e21, e22] = self.entries;
        let mats = [e11, e12, e21, e22]
            .map(|e| ScalarMatrix::from_entries(d, d, order, e).expect("session field"));
        Representation {
            params: p.clone(),
            tuple: Some(tuple),
            ranges: Some((self.ra, self.rb)),
            swapped: false,
            mats,
        }
    }
}

fn inv(x: &CycloElem) -> CycloElem {
    x.inv().expect("nonzero scalar")
}

/// `V1(μ)`, `μ ∈ (K*)⁴`, of dimension `l₁l₂`.
pub fn build_v1(p: &AlgebraParams, mu: &ParamTuple) -> Result<Representation> {
    check_tuple(p, mu, Family::V1)?;
    let (l1, l2) = (p.l1(), p.l2());
    let (alpha, beta) = (p.alpha(), p.beta());
    let ab = alpha * beta;
    let ba = beta * alpha.inv();
    let (m1, m2, m3, m4) = (mu.get(1), mu.get(2), mu.get(3), mu.get(4));
    let m3_over_m2 = m3 * &inv(m2);
    let m1inv = inv(m1);
    let mut bld = Builder::new(p, l1, l2);
    for a in 0..l1 {
        let (ai, l2i) = (a as i64, l2 as i64);
        for b in 0..l2 {
            let bi = b as i64;
            bld.set(Gen::X11, (a, b), ((a + 1) % l1, b), m1.mul_root(&beta.pow(bi)));
            if b != 0 {
                let r = ba.pow(bi) * ab.pow(-ai);
                bld.set(Gen::X12, (a, b), (a, b - 1), m3_over_m2.mul_root(&r));
            } else {
                let r = beta.pow(ai * l2i) * ab.pow(-ai);
                bld.set(Gen::X12, (a, b), (a, l2 - 1), m3_over_m2.mul_root(&r));
            }
            if b != l2 - 1 {
                bld.set(Gen::X21, (a, b), (a, b + 1), m2.clone());
            } else {
                bld.set(Gen::X21, (a, b), (a, 0), m2.mul_root(&beta.pow(-ai * l2i)));
            }
            let bracket = m4 + &m3.mul_root(&(beta * ab.pow(-ai)));
            let c = (&m1inv * &bracket).mul_root(&alpha.pow(-bi));
            bld.set(Gen::X22, (a, b), ((a + l1 - 1) % l1, b), c);
        }
    }
    Ok(bld.finish(p, mu.clone()))
}

/// `V2(μ)`, `μ ∈ (K*)³`, of dimension `l₁l₂`.
pub fn build_v2(p: &AlgebraParams, mu: &ParamTuple) -> Result<Representation> {
    check_tuple(p, mu, Family::V2)?;
    let (l1, l2) = (p.l1(), p.l2());
    let (alpha, beta) = (p.alpha(), p.beta());
    let ab = alpha * beta;
    let ba = beta * alpha.inv();
    let (m1, m2, m3) = (mu.get(1), mu.get(2), mu.get(3));
    let m3_over_m1 = m3 * &inv(m1);
    let m3_over_m2 = m3 * &inv(m2);
    let mut bld = Builder::new(p, l1, l2);
    for a in 0..l1 {
        let ai = a as i64;
        for b in 0..l2 {
            let bi = b as i64;
            if a != 0 {
                let diff = &ab.pow(ai).embed() - &p.one();
                let c = (&m3_over_m1 * &diff).mul_root(&(alpha.inv() * ba.pow(bi)));
                bld.set(Gen::X11, (a, b), (a - 1, b), c);
            }
            let r = beta.pow(ai) * ba.pow(bi);
            bld.set(Gen::X12, (a, b), (a, (b + l2 - 1) % l2), m3_over_m2.mul_root(&r));
            bld.set(Gen::X21, (a, b), (a, (b + 1) % l2), m2.mul_root(&alpha.pow(ai)));
            if a != l1 - 1 {
                bld.set(Gen::X22, (a, b), (a + 1, b), m1.clone());
            } else {
                let r = alpha.pow(-bi * l1 as i64);
                bld.set(Gen::X22, (a, b), (0, b), m1.mul_root(&r));
            }
        }
    }
    Ok(bld.finish(p, mu.clone()))
}

/// `V3(μ)`, `μ ∈ (K*)²`, of dimension `t₁l₂`.
pub fn build_v3(p: &AlgebraParams, mu: &ParamTuple) -> Result<Representation> {
    check_tuple(p, mu, Family::V3)?;
    let (t1, l2) = (p.t1(), p.l2());
    let (alpha, beta) = (p.alpha(), p.beta());
    let ab = alpha * beta;
    let ba = beta * alpha.inv();
    let (m1, m2) = (mu.get(1), mu.get(2));
    let m2_over_m1 = m2 * &inv(m1);
    let mut bld = Builder::new(p, t1, l2);
    for a in 0..t1 {
        let ai = a as i64;
        for b in 0..l2 {
            let bi = b as i64;
            if a != 0 {
                let diff = &ab.pow(ai).embed() - &p.one();
                let c = (m2 * &diff).mul_root(&(alpha.inv() * ba.pow(bi)));
                bld.set(Gen::X11, (a, b), (a - 1, b), c);
            }
            let r = beta.pow(ai) * ba.pow(bi);
            bld.set(Gen::X12, (a, b), (a, (b + l2 - 1) % l2), m2_over_m1.mul_root(&r));
            bld.set(Gen::X21, (a, b), (a, (b + 1) % l2), m1.mul_root(&alpha.pow(ai)));
            if a != t1 - 1 {
                bld.set(Gen::X22, (a, b), (a + 1, b), p.one());
            }
        }
    }
    Ok(bld.finish(p, mu.clone()))
}

/// Dispatch on the tuple's family tag.
pub fn build(p: &AlgebraParams, mu: &ParamTuple) -> Result<Representation> {
    match mu.family() {
        Family::V1 => build_v1(p, mu),
        Family::V2 => build_v2(p, mu),
        Family::V3 => build_v3(p, mu),
    }
}

/// A relation whose matrix does not vanish.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub relation: &'static str,
    /// Number of nonzero entries of `lhs - rhs`.
    pub nonzero_entries: usize,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails ({} nonzero entries)", self.relation, self.nonzero_entries)
    }
}

/// Check the six defining relations and the four commutation rules of `D`.
pub fn verify_relations(r: &Representation) -> Vec<Violation> {
    let p = &r.params;
    let (alpha, beta) = (p.alpha(), p.beta());
    let [x11, x12, x21, x22] = &r.mats;
    let mul = |a: &ScalarMatrix, b: &ScalarMatrix| a.try_mul(b).expect("square");
    let one = RootExp::one(p.field_order());
    // lhs, q, rhs: lhs = q * rhs (+ extra)
    let checks: Vec<(&'static str, ScalarMatrix, RootExp, ScalarMatrix)> = vec![
        ("X12X11 = αX11X12", mul(x12, x11), alpha, mul(x11, x12)),
        ("X22X21 = αX21X22", mul(x22, x21), alpha, mul(x21, x22)),
        ("X21X11 = βX11X21", mul(x21, x11), beta, mul(x11, x21)),
        ("X22X12 = βX12X22", mul(x22, x12), beta, mul(x12, x22)),
        ("X21X12 = α⁻¹βX12X21", mul(x21, x12), alpha.inv() * beta, mul(x12, x21)),
    ];
    let mut out = Vec::new();
    let mut record = |name: &'static str, diff: ScalarMatrix| {
        if !diff.is_zero() {
            out.push(Violation {
                relation: name,
                nonzero_entries: diff.nnz(),
            });
        }
    };
    for (name, lhs, q, rhs) in checks {
        record(name, lhs.try_sub(&rhs.scale_root(&q)).expect("same shape"));
    }
    let x12x21 = mul(x12, x21);
    let lhs = mul(x22, x11).try_sub(&mul(x11, x22)).expect("same shape");
    record(
        "X22X11 - X11X22 = (β - α⁻¹)X12X21",
        lhs.try_sub(&x12x21.scale(&p.kappa())).expect("same shape"),
    );

    let d = r.determinant_action();
    let dchecks = [
        ("DX11 = X11D", x11, one),
        ("DX12 = α⁻¹βX12D", x12, alpha.inv() * beta),
        ("DX21 = αβ⁻¹X21D", x21, alpha * beta.inv()),
        ("DX22 = X22D", x22, one),
    ];
    for (name, x, q) in dchecks {
        record(name, mul(&d, x).try_sub(&mul(x, &d).scale_root(&q)).expect("same shape"));
    }
    out
}

/// Expected eigenvalues of `X12X21` and `D` on `e(a, b)`.
pub fn expected_eigenvalues(r: &Representation, a: u32, b: u32) -> Option<(CycloElem, CycloElem)> {
    let tuple = r.tuple.as_ref()?;
    if r.swapped {
        return None;
    }
    let p = &r.params;
    let (alpha, beta) = (p.alpha(), p.beta());
    let ab = alpha * beta;
    let ba = beta * alpha.inv();
    let (ai, bi) = (a as i64, b as i64);
    Some(match tuple.family() {
        Family::V1 => (
            tuple.get(3).mul_root(&(ba.pow(bi) * ab.pow(-ai))),
            tuple.get(4).mul_root(&ba.pow(bi)),
        ),
        Family::V2 => (
            tuple.get(3).mul_root(&(ab.pow(ai) * ba.pow(bi))),
            -tuple.get(3).mul_root(&(alpha.inv() * ba.pow(bi))),
        ),
        Family::V3 => (
            tuple.get(2).mul_root(&(ab.pow(ai) * ba.pow(bi))),
            -tuple.get(2).mul_root(&(alpha.inv() * ba.pow(bi))),
        ),
    })
}

/// Basis vectors that are not eigenvectors with the expected eigenvalues.
pub fn eigen_violations(r: &Representation) -> Vec<(u32, u32)> {
    let Some((ra, rb)) = r.ranges else {
        return Vec::new();
    };
    let n = r.matrix(Gen::X12).try_mul(r.matrix(Gen::X21)).expect("square");
    let d = r.determinant_action();
    let mut bad = Vec::new();
    for a in 0..ra {
        for b in 0..rb {
            let Some((en, ed)) = expected_eigenvalues(r, a, b) else {
                return Vec::new();
            };
            let i = (a * rb + b) as usize;
            let ok = |m: &ScalarMatrix, ev: &CycloElem| {
                let row = m.row(i);
                if ev.is_zero() {
                    row.is_empty()
                } else {
                    row.len() == 1 && row[0].0 == i && &row[0].1 == ev
                }
            };
            if !ok(&n, &en) || !ok(&d, &ed) {
                bad.push((a, b));
            }
        }
    }
    bad
}

/// How an operator acts on a module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Action {
    Zero,
    Invertible,
    Neither,
}

impl Action {
    pub fn of(m: &ScalarMatrix) -> Action {
        if m.is_zero() {
            Action::Zero
        } else if m.is_invertible() {
            Action::Invertible
        } else {
            Action::Neither
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Action::Zero => "zero",
            Action::Invertible => "invertible",
            Action::Neither => "neither",
        }
    }
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Actions of `X11^{l₁}`, `X22^{l₁}`, `X12`, `X21` and `D`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AnnihilatorProfile {
    pub x11_pow: Action,
    pub x22_pow: Action,
    pub x12: Action,
    pub x21: Action,
    pub d: Action,
}

impl AnnihilatorProfile {
    /// Profile of the torsionfree simple modules of each family.
    pub fn expected(family: Family) -> AnnihilatorProfile {
        let (x11_pow, x22_pow) = match family {
            Family::V1 => (Action::Invertible, Action::Neither),
            Family::V2 => (Action::Zero, Action::Invertible),
            Family::V3 => (Action::Zero, Action::Zero),
        };
        AnnihilatorProfile {
            x11_pow,
            x22_pow,
            x12: Action::Invertible,
            x21: Action::Invertible,
            d: Action::Invertible,
        }
    }

    /// Whether `self` agrees with the family's profile. For `V1` only `X11^{l₁}` is pinned
    /// down: `X22^{l₁}` may act either way.
    pub fn matches(&self, family: Family) -> bool {
        let e = AnnihilatorProfile::expected(family);
        let x22_ok = match family {
            Family::V1 => self.x22_pow != Action::Neither,
            _ => self.x22_pow == e.x22_pow,
        };
        self.x11_pow == e.x11_pow
            && x22_ok
            && self.x12 == e.x12
            && self.x21 == e.x21
            && self.d == e.d
    }

    pub fn entries(&self) -> [(&'static str, Action); 5] {
        [
            ("X11^l1", self.x11_pow),
            ("X22^l1", self.x22_pow),
            ("X12", self.x12),
            ("X21", self.x21),
            ("D", self.d),
        ]
    }
}

pub fn annihilator_profile(r: &Representation) -> AnnihilatorProfile {
    let l1 = r.params.l1();
    AnnihilatorProfile {
        x11_pow: Action::of(&r.matrix(Gen::X11).pow(l1)),
        x22_pow: Action::of(&r.matrix(Gen::X22).pow(l1)),
        x12: Action::of(r.matrix(Gen::X12)),
        x21: Action::of(r.matrix(Gen::X21)),
        d: Action::of(&r.determinant_action()),
    }
}

/// The module over `M₂(β,α)` obtained by exchanging the roles of `X12` and `X21`.
pub fn swap_transpose(r: &Representation) -> Representation {
    let [x11, x12, x21, x22] = r.mats.clone();
    Representation {
        params: r.params.swapped(),
        tuple: r.tuple.clone(),
        ranges: r.ranges,
        swapped: !r.swapped,
        mats: [x11, x21, x12, x22],
    }
}
