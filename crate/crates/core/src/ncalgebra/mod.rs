//! PBW normal-form arithmetic in `M₂(α,β)`.
//!
//! Relations, with generators ordered `X11 < X12 < X21 < X22`:
//!
//! ```text
//! X12 X11 = α X11 X12     X22 X21 = α X21 X22
//! X21 X11 = β X11 X21     X22 X12 = β X12 X22
//! X21 X12 = α⁻¹β X12 X21  X22 X11 = X11 X22 + (β - α⁻¹) X12 X21
//! ```

mod center;
mod params;
mod poly;

pub use center::{
    central_space, generator_product_span, span_contains, span_equal, CentralSpace,
};
pub use params::AlgebraParams;
pub use poly::{Gen, NCPoly, PBWMonomial};

use crate::error::{Error, Result};
use crate::scalars::{CycloElem, ScalarError};

fn check_field(f: &NCPoly, p: &AlgebraParams) -> Result<()> {
    if f.field_order() != p.field_order() {
        return Err(ScalarError::FieldMismatch(p.field_order(), f.field_order()).into());
    }
    Ok(())
}

/// Sum `1 + x + … + x^{k-1}` for the root `x = αβ`.
fn geometric_ab(p: &AlgebraParams, k: u32) -> CycloElem {
    let ab = p.alpha() * p.beta();
    let mut acc = p.zero();
    let mut pw = p.root(0);
    for _ in 0..k {
        acc = &acc + &pw.embed();
        pw = pw * ab;
    }
    acc
}

/// Normal form of `m · g` as a list of `(monomial, scalar)` terms.
///
/// Moving `X11` leftward through `X22^d` spawns the correction
/// `(β - α⁻¹) Σ_{j<d} (αβ)^j X12 X21 X22^{d-1}` (times the `X21^c` commutation factor).
pub fn monomial_times_generator(
    m: &PBWMonomial,
    g: Gen,
    p: &AlgebraParams,
) -> Vec<(PBWMonomial, CycloElem)> {
    let (alpha, beta) = (p.alpha(), p.beta());
    let PBWMonomial { a, b, c, d } = *m;
    let ba = beta * alpha.inv();
    match g {
        Gen::X22 => vec![(PBWMonomial::new(a, b, c, d + 1), p.one())],
        Gen::X21 => vec![(
            PBWMonomial::new(a, b, c + 1, d),
            alpha.pow(d as i64).embed(),
        )],
        Gen::X12 => vec![(
            PBWMonomial::new(a, b + 1, c, d),
            (beta.pow(d as i64) * ba.pow(c as i64)).embed(),
        )],
        Gen::X11 => {
            let lead = (
                PBWMonomial::new(a + 1, b, c, d),
                (alpha.pow(b as i64) * beta.pow(c as i64)).embed(),
            );
            if d == 0 {
                return vec![lead];
            }
            let corr = (&p.kappa() * &geometric_ab(p, d)).mul_root(&ba.pow(c as i64));
            let mut out = vec![lead];
            if !corr.is_zero() {
                out.push((PBWMonomial::new(a, b + 1, c + 1, d - 1), corr));
            }
            out
        }
    }
}

/// `f · g` for a single generator `g`.
pub fn times_generator(f: &NCPoly, g: Gen, p: &AlgebraParams) -> NCPoly {
    let mut out = NCPoly::zero(f.field_order());
    for (m, c) in f.terms() {
        for (m2, s) in monomial_times_generator(m, g, p) {
            out.add_term(m2, c * &s);
        }
    }
    out
}

/// Normal form of the product `f · g`.
pub fn multiply(f: &NCPoly, g: &NCPoly, p: &AlgebraParams) -> Result<NCPoly> {
    check_field(f, p)?;
    check_field(g, p)?;
    let mut out = NCPoly::zero(p.field_order());
    for (m, c) in g.terms() {
        let mut acc = f.clone();
        for gen in m.word() {
            acc = times_generator(&acc, gen, p);
        }
        for (m2, s) in acc.terms() {
            out.add_term(*m2, s * c);
        }
    }
    Ok(out)
}

/// Normal form of a word in the generators.
pub fn word(gens: &[Gen], p: &AlgebraParams) -> NCPoly {
    let mut acc = NCPoly::one(p.field_order());
    for &g in gens {
        acc = times_generator(&acc, g, p);
    }
    acc
}

pub fn generator(g: Gen, p: &AlgebraParams) -> NCPoly {
    NCPoly::generator(p.field_order(), g)
}

/// `f^k` by repeated multiplication.
pub fn power(f: &NCPoly, k: u32, p: &AlgebraParams) -> Result<NCPoly> {
    check_field(f, p)?;
    let mut acc = NCPoly::one(p.field_order());
    for _ in 0..k {
        acc = multiply(&acc, f, p)?;
    }
    Ok(acc)
}

/// `D = X11 X22 - α⁻¹ X12 X21`.
pub fn quantum_determinant(p: &AlgebraParams) -> NCPoly {
    let mut d = NCPoly::monomial(PBWMonomial::new(1, 0, 0, 1), p.one());
    d.add_term(PBWMonomial::new(0, 1, 1, 0), -p.alpha().inv().embed());
    d
}

/// Normal form of the second expression `X22 X11 - β X12 X21`.
pub fn quantum_determinant_alt(p: &AlgebraParams) -> NCPoly {
    let lhs = word(&[Gen::X22, Gen::X11], p);
    let rhs = word(&[Gen::X12, Gen::X21], p).scale(&p.beta().embed());
    lhs.try_sub(&rhs).expect("same field")
}

/// `fg - gf`.
pub fn commutator(f: &NCPoly, g: &NCPoly, p: &AlgebraParams) -> Result<NCPoly> {
    Ok(multiply(f, g, p)?.try_sub(&multiply(g, f, p)?)?)
}

/// Whether `f` commutes with all four generators.
pub fn is_central(f: &NCPoly, p: &AlgebraParams) -> Result<bool> {
    for g in Gen::ALL {
        if !commutator(f, &generator(g, p), p)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The candidate normal elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormalCandidate {
    X12,
    X21,
    D,
}

impl NormalCandidate {
    pub fn element(self, p: &AlgebraParams) -> NCPoly {
        match self {
            NormalCandidate::X12 => generator(Gen::X12, p),
            NormalCandidate::X21 => generator(Gen::X21, p),
            NormalCandidate::D => quantum_determinant(p),
        }
    }
}

/// `Some(q)` with `x·g = q·g·x`, if `x` q-commutes with `g`.
pub fn commutation_scalar(x: &NCPoly, g: Gen, p: &AlgebraParams) -> Result<Option<CycloElem>> {
    let xg = multiply(x, &generator(g, p), p)?;
    let gx = multiply(&generator(g, p), x, p)?;
    Ok(xg.ratio_to(&gx).filter(|q| !q.is_zero()))
}

/// Whether `x` q-commutes with every generator.
pub fn is_normal_generator(x: NormalCandidate, p: &AlgebraParams) -> Result<bool> {
    let e = x.element(p);
    for g in Gen::ALL {
        if commutation_scalar(&e, g, p)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `D^k` in normal form.
pub fn det_power_expand(k: u32, p: &AlgebraParams) -> Result<NCPoly> {
    if k == 0 {
        return Err(Error::InvalidParams("power of D must be positive".into()));
    }
    power(&quantum_determinant(p), k, p)
}

/// `(-1)^k α^{-k(k+1)/2} β^{k(k-1)/2}`, the coefficient of `X12^k X21^k` in `D^k`.
pub fn det_power_corner_coefficient(k: u32, p: &AlgebraParams) -> CycloElem {
    let k = k as i64;
    let r = p.alpha().pow(-k * (k + 1) / 2) * p.beta().pow(k * (k - 1) / 2);
    let e = r.embed();
    if k % 2 == 0 {
        e
    } else {
        -e
    }
}

/// The two-term expression `X11^t X22^t + c X12^t X21^t` that `D^t` equals when `t₁ = t₂ = t`.
pub fn dependency_relation(p: &AlgebraParams) -> Result<NCPoly> {
    if !p.center_hypothesis() {
        return Err(hypothesis_error(p));
    }
    let t = p.t1();
    let mut f = NCPoly::monomial(PBWMonomial::new(t, 0, 0, t), p.one());
    f.add_term(PBWMonomial::new(0, t, t, 0), det_power_corner_coefficient(t, p));
    Ok(f)
}

fn hypothesis_error(p: &AlgebraParams) -> Error {
    Error::Hypothesis(format!(
        "requires αβ ≠ 1, α ≠ β and ord(αβ) = ord(αβ⁻¹); got ord(αβ) = {}, ord(αβ⁻¹) = {}{}{}",
        p.t1(),
        p.t2(),
        if p.alpha_beta_is_one() { ", αβ = 1" } else { "" },
        if p.alpha_equals_beta() { ", α = β" } else { "" },
    ))
}

/// All `(a, b) ∈ [0, l)²` with `α^a β^b = 1 = α^b β^a`, each checked to be `(kt, kt)` mod `l`.
pub fn exponent_lemma_solutions(p: &AlgebraParams) -> Result<Vec<(u32, u32)>> {
    if !p.center_hypothesis() {
        return Err(hypothesis_error(p));
    }
    let (l, t) = (p.l(), p.t1());
    let (alpha, beta) = (p.alpha(), p.beta());
    let mut out = Vec::new();
    for a in 0..l {
        for b in 0..l {
            let one = alpha.pow(a as i64) * beta.pow(b as i64);
            let two = alpha.pow(b as i64) * beta.pow(a as i64);
            if one.is_one() && two.is_one() {
                let ok = (0..l / t).any(|k| a == (k * t) % l && b == (k * t) % l);
                if !ok {
                    return Err(Error::InvariantViolated(format!(
                        "solution ({a}, {b}) is not of the form (kt, kt) with t = {t}"
                    )));
                }
                out.push((a, b));
            }
        }
    }
    Ok(out)
}

/// `X11^l, X12^l, X21^l, X22^l, X11^t X22^t, X12^t X21^t`.
pub fn center_generators(p: &AlgebraParams) -> Result<Vec<NCPoly>> {
    if !p.center_hypothesis() {
        return Err(hypothesis_error(p));
    }
    let (l, t) = (p.l(), p.t1());
    let mono = |a, b, c, d| NCPoly::monomial(PBWMonomial::new(a, b, c, d), p.one());
    Ok(vec![
        mono(l, 0, 0, 0),
        mono(0, l, 0, 0),
        mono(0, 0, l, 0),
        mono(0, 0, 0, l),
        mono(t, 0, 0, t),
        mono(0, t, t, 0),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::RootExp;
    use proptest::prelude::*;

    /// Independent rewriting: scan words for the leftmost descent and apply one relation.
    fn naive_normal_form(words: Vec<(Vec<Gen>, CycloElem)>, p: &AlgebraParams) -> NCPoly {
        let (alpha, beta) = (p.alpha().embed(), p.beta().embed());
        let ainv = p.alpha().inv().embed();
        let mut todo = words;
        let mut out = NCPoly::zero(p.field_order());
        while let Some((w, c)) = todo.pop() {
            if c.is_zero() {
                continue;
            }
            let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| w[i].rank() > w[i + 1].rank())
            else {
                let mut m = PBWMonomial::ONE;
                for g in &w {
                    m = match g {
                        Gen::X11 => PBWMonomial { a: m.a + 1, ..m },
                        Gen::X12 => PBWMonomial { b: m.b + 1, ..m },
                        Gen::X21 => PBWMonomial { c: m.c + 1, ..m },
                        Gen::X22 => PBWMonomial { d: m.d + 1, ..m },
                    };
                }
                out.add_term(m, c);
                continue;
            };
            let (x, y) = (w[i], w[i + 1]);
            let swapped = || {
                let mut v = w.clone();
                v.swap(i, i + 1);
                v
            };
            let q = match (x, y) {
                (Gen::X12, Gen::X11) => alpha.clone(),
                (Gen::X22, Gen::X21) => alpha.clone(),
                (Gen::X21, Gen::X11) => beta.clone(),
                (Gen::X22, Gen::X12) => beta.clone(),
                (Gen::X21, Gen::X12) => &beta * &ainv,
                (Gen::X22, Gen::X11) => {
                    let mut v = w.clone();
                    v[i] = Gen::X12;
                    v[i + 1] = Gen::X21;
                    todo.push((v, &c * &(&beta - &ainv)));
                    p.one()
                }
                _ => unreachable!("not a descent"),
            };
            todo.push((swapped(), &c * &q));
        }
        out
    }

    fn sample_params() -> Vec<AlgebraParams> {
        [
            (2, 3, 1, 1),
            (4, 12, 1, 1),
            (3, 5, 1, 2),
            (5, 5, 1, 4),
            (6, 4, 5, 3),
            (7, 7, 3, 3),
        ]
        .iter()
        .map(|&(m, n, k1, k2)| AlgebraParams::new(m, n, k1, k2).unwrap())
        .collect()
    }

    #[test]
    fn defining_relations_by_engine() {
        for p in sample_params() {
            let a = p.alpha().embed();
            let b = p.beta().embed();
            let w = |g: &[Gen]| word(g, &p);
            use Gen::*;
            assert_eq!(w(&[X12, X11]), w(&[X11, X12]).scale(&a));
            assert_eq!(w(&[X22, X21]), w(&[X21, X22]).scale(&a));
            assert_eq!(w(&[X21, X11]), w(&[X11, X21]).scale(&b));
            assert_eq!(w(&[X22, X12]), w(&[X12, X22]).scale(&b));
            assert_eq!(
                w(&[X21, X12]),
                w(&[X12, X21]).scale(&(p.beta() * p.alpha().inv()).embed())
            );
            let lhs = w(&[X22, X11]).try_sub(&w(&[X11, X22])).unwrap();
            assert_eq!(lhs, w(&[X12, X21]).scale(&p.kappa()));
        }
    }

    #[test]
    fn engine_matches_naive_rewriting_on_short_words() {
        let p = AlgebraParams::new(4, 12, 1, 5).unwrap();
        let gens = Gen::ALL;
        for len in 0..=5u32 {
            for code in 0..4u32.pow(len) {
                let w: Vec<Gen> = (0..len)
                    .map(|i| gens[((code / 4u32.pow(i)) % 4) as usize])
                    .collect();
                let naive = naive_normal_form(vec![(w.clone(), p.one())], &p);
                assert_eq!(word(&w, &p), naive, "word {w:?}");
            }
        }
    }

    #[test]
    fn lemma_identities_up_to_twelve() {
        for p in sample_params() {
            let a = p.alpha();
            let b = p.beta();
            let ab = a * b;
            for k in 1..=12u32 {
                let x22k = NCPoly::monomial(PBWMonomial::new(0, 0, 0, k), p.one());
                let x11k = NCPoly::monomial(PBWMonomial::new(k, 0, 0, 0), p.one());
                let x11 = generator(Gen::X11, &p);
                let x22 = generator(Gen::X22, &p);

                let lhs = multiply(&x22k, &x11, &p).unwrap();
                let mut rhs = NCPoly::monomial(PBWMonomial::new(1, 0, 0, k), p.one());
                let c = &(&ab.pow(k as i64).embed() - &p.one()) * &a.inv().embed();
                rhs.add_term(PBWMonomial::new(0, 1, 1, k - 1), c);
                assert_eq!(lhs, rhs, "first identity, k={k}");

                let lhs = multiply(&x22, &x11k, &p).unwrap();
                // X12 X21 X11^{k-1} brought to normal form
                let mut tail = word(&[Gen::X12, Gen::X21], &p);
                for _ in 1..k {
                    tail = times_generator(&tail, Gen::X11, &p);
                }
                let c = &(&p.one() - &ab.pow(-(k as i64)).embed()) * &b.embed();
                let rhs = NCPoly::monomial(PBWMonomial::new(k, 0, 0, 1), p.one())
                    .try_add(&tail.scale(&c))
                    .unwrap();
                assert_eq!(lhs, rhs, "second identity, k={k}");
            }
        }
    }

    #[test]
    fn determinant_expressions_agree() {
        for p in sample_params() {
            assert_eq!(quantum_determinant(&p), quantum_determinant_alt(&p));
        }
        let p = AlgebraParams::new(2, 3, 1, 1).unwrap();
        let d = quantum_determinant(&p);
        assert_eq!(
            d.coeff(&PBWMonomial::new(0, 1, 1, 0)),
            CycloElem::from_int(6, 1)
        );
    }

    #[test]
    fn determinant_commutation_relations() {
        for p in sample_params() {
            let d = quantum_determinant(&p);
            let (a, b) = (p.alpha(), p.beta());
            let expected = [
                (Gen::X11, RootExp::one(p.field_order())),
                (Gen::X12, a.inv() * b),
                (Gen::X21, a * b.inv()),
                (Gen::X22, RootExp::one(p.field_order())),
            ];
            for (g, q) in expected {
                let x = generator(g, &p);
                let lhs = multiply(&d, &x, &p).unwrap();
                let rhs = multiply(&x, &d, &p).unwrap().scale(&q.embed());
                assert_eq!(lhs, rhs, "D {g} for {p:?}");
            }
            for x in [NormalCandidate::X12, NormalCandidate::X21, NormalCandidate::D] {
                assert!(is_normal_generator(x, &p).unwrap());
            }
            let c = commutator(&d, &generator(Gen::X12, &p), &p).unwrap();
            let x12d = multiply(&generator(Gen::X12, &p), &d, &p).unwrap();
            assert_eq!(c, x12d.scale(&(&(a.inv() * b).embed() - &p.one())));
        }
    }

    #[test]
    fn powers_of_generators_are_central() {
        for p in sample_params() {
            for g in Gen::ALL {
                let x = NCPoly::monomial(PBWMonomial::generator_power(g, p.l()), p.one());
                assert!(is_central(&x, &p).unwrap());
            }
            if p.alpha() != RootExp::one(p.field_order()) {
                assert!(!is_central(&generator(Gen::X11, &p), &p).unwrap());
            }
        }
    }

    #[test]
    fn dependency_relation_for_small_orders() {
        for (m, n) in [(2u32, 3u32), (3, 5)] {
            let p = AlgebraParams::new(m, n, 1, 1).unwrap();
            let t = p.t1();
            let dt = det_power_expand(t, &p).unwrap();
            assert_eq!(dt.len(), 2);
            assert_eq!(dt, dependency_relation(&p).unwrap());
        }
        let p = AlgebraParams::new(2, 3, 1, 1).unwrap();
        assert_eq!(det_power_corner_coefficient(6, &p), CycloElem::from_int(6, -1));
    }

    #[test]
    fn det_power_corner_term_general() {
        for p in sample_params() {
            for k in 1..=5 {
                let dk = det_power_expand(k, &p).unwrap();
                assert_eq!(
                    dk.coeff(&PBWMonomial::new(0, k, k, 0)),
                    det_power_corner_coefficient(k, &p)
                );
                assert_eq!(dk.coeff(&PBWMonomial::new(k, 0, 0, k)), p.one());
            }
        }
        let p = AlgebraParams::new(2, 3, 1, 1).unwrap();
        assert_eq!(det_power_expand(1, &p).unwrap(), quantum_determinant(&p));
    }

    #[test]
    fn exponent_lemma_matches_enumeration() {
        let p = AlgebraParams::new(2, 3, 1, 1).unwrap();
        assert_eq!(exponent_lemma_solutions(&p).unwrap(), vec![(0, 0)]);
        let p = AlgebraParams::new(3, 5, 1, 1).unwrap();
        assert_eq!(exponent_lemma_solutions(&p).unwrap(), vec![(0, 0)]);
        let p = AlgebraParams::new(4, 12, 1, 1).unwrap();
        assert!(matches!(
            exponent_lemma_solutions(&p),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn center_generators_are_central() {
        let p = AlgebraParams::new(2, 3, 1, 1).unwrap();
        let gens = center_generators(&p).unwrap();
        assert_eq!(gens.len(), 6);
        for g in &gens {
            assert!(is_central(g, &p).unwrap(), "{g}");
        }
        let bad = AlgebraParams::new(4, 12, 1, 1).unwrap();
        assert!(center_generators(&bad).is_err());
    }

    #[test]
    fn mixed_fields_are_rejected() {
        let p = AlgebraParams::new(2, 3, 1, 1).unwrap();
        let f = NCPoly::one(12);
        assert!(matches!(
            multiply(&f, &f, &p),
            Err(Error::Scalar(ScalarError::FieldMismatch(6, 12)))
        ));
    }

    fn arb_poly(order: u32) -> impl Strategy<Value = NCPoly> {
        prop::collection::vec(((0u32..3, 0u32..3, 0u32..3, 0u32..3), -3i64..=3, 0i64..12), 0..4)
            .prop_map(move |terms| {
                let mut f = NCPoly::zero(order);
                for ((a, b, c, d), k, e) in terms {
                    let s = CycloElem::root(order, e)
                        .scale(&num_rational::BigRational::from_integer(k.into()));
                    f.add_term(PBWMonomial::new(a, b, c, d), s);
                }
                f
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn multiplication_is_associative(
            f in arb_poly(12), g in arb_poly(12), h in arb_poly(12)
        ) {
            let p = AlgebraParams::new(4, 12, 1, 5).unwrap();
            let left = multiply(&multiply(&f, &g, &p).unwrap(), &h, &p).unwrap();
            let right = multiply(&f, &multiply(&g, &h, &p).unwrap(), &p).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn degree_is_additive(
            (a, b, c, d) in (0u32..4, 0u32..4, 0u32..4, 0u32..4),
            (e, f, g, h) in (0u32..4, 0u32..4, 0u32..4, 0u32..4),
        ) {
            let p = AlgebraParams::new(2, 3, 1, 1).unwrap();
            let x = NCPoly::monomial(PBWMonomial::new(a, b, c, d), p.one());
            let y = NCPoly::monomial(PBWMonomial::new(e, f, g, h), p.one());
            let xy = multiply(&x, &y, &p).unwrap();
            prop_assert!(!xy.is_zero());
            for m in xy.terms().keys() {
                prop_assert_eq!(m.degree(), a + b + c + d + e + f + g + h);
            }
        }

        #[test]
        fn engine_agrees_with_naive_on_monomial_products(
            x in (0u32..3, 0u32..3, 0u32..3, 0u32..3),
            y in (0u32..3, 0u32..3, 0u32..3, 0u32..3),
        ) {
            let p = AlgebraParams::new(6, 4, 5, 3).unwrap();
            let mx = PBWMonomial::new(x.0, x.1, x.2, x.3);
            let my = PBWMonomial::new(y.0, y.1, y.2, y.3);
            let mut w = mx.word();
            w.extend(my.word());
            let naive = naive_normal_form(vec![(w, p.one())], &p);
            let fast = multiply(
                &NCPoly::monomial(mx, p.one()),
                &NCPoly::monomial(my, p.one()),
                &p,
            ).unwrap();
            prop_assert_eq!(fast, naive);
        }
    }
}
