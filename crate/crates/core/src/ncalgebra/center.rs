use std::collections::BTreeMap;

use super::{center_generators, monomial_times_generator, multiply, AlgebraParams, Gen, NCPoly, PBWMonomial};
use crate::error::Result;
use crate::linalg::{Echelon, SparseVec};
use crate::scalars::CycloElem;

/// A basis of the central elements of degree at most `deg_cap`.
#[derive(Debug, Clone)]
pub struct CentralSpace {
    pub deg_cap: u32,
    /// Monomials surviving the `X12` / `X21` conjugation filter.
    pub candidates: Vec<PBWMonomial>,
    pub basis: Vec<NCPoly>,
}

impl CentralSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// `X12` and `X21` q-commute with every monomial; the scalar must be 1 for a central term.
fn passes_diagonal_filter(m: &PBWMonomial, p: &AlgebraParams) -> bool {
    let (alpha, beta) = (p.alpha(), p.beta());
    let ba = beta * alpha.inv();
    let (a, b, c, d) = (m.a as i64, m.b as i64, m.c as i64, m.d as i64);
    // X12·M = α^a (M X12 shape), M·X12 = β^d (β/α)^c (same shape)
    let x12 = alpha.pow(a) == beta.pow(d) * ba.pow(c);
    // X21·M = β^a (β/α)^b (...), M·X21 = α^d (...)
    let x21 = beta.pow(a) * ba.pow(b) == alpha.pow(d);
    x12 && x21
}

/// Central elements of total degree `≤ deg_cap`.
pub fn central_space(p: &AlgebraParams, deg_cap: u32) -> Result<CentralSpace> {
    let candidates: Vec<PBWMonomial> = PBWMonomial::up_to_degree(deg_cap)
        .into_iter()
        .filter(|m| passes_diagonal_filter(m, p))
        .collect();

    // equation key: (generator, output monomial) -> coefficients over the candidates
    let mut equations: BTreeMap<(Gen, PBWMonomial), Vec<(usize, CycloElem)>> = BTreeMap::new();
    let x22 = NCPoly::generator(p.field_order(), Gen::X22);
    for (i, m) in candidates.iter().enumerate() {
        let mut push = |g: Gen, terms: Vec<(PBWMonomial, CycloElem)>| {
            for (out, s) in terms {
                equations.entry((g, out)).or_default().push((i, s));
            }
        };
        let mut c11 = monomial_times_generator(m, Gen::X11, p);
        c11.push((PBWMonomial::new(m.a + 1, m.b, m.c, m.d), -p.one()));
        push(Gen::X11, c11);

        let left = multiply(&x22, &NCPoly::monomial(*m, p.one()), p)?;
        let mut c22 = vec![(PBWMonomial::new(m.a, m.b, m.c, m.d + 1), p.one())];
        c22.extend(left.terms().iter().map(|(k, v)| (*k, -v)));
        push(Gen::X22, c22);
    }

    let mut ech = Echelon::new(candidates.len());
    for row in equations.into_values() {
        ech.insert(&crate::linalg::normalize(row));
    }
    let basis = ech
        .nullspace(&p.one())
        .into_iter()
        .map(|v| {
            NCPoly::from_terms(
                p.field_order(),
                v.into_iter().map(|(i, s)| (candidates[i], s)),
            )
            .expect("same field")
        })
        .collect();
    Ok(CentralSpace {
        deg_cap,
        candidates,
        basis,
    })
}

/// All products of the center generators with total degree `≤ deg_cap`.
pub fn generator_product_span(p: &AlgebraParams, deg_cap: u32) -> Result<Vec<NCPoly>> {
    let gens = center_generators(p)?;
    let degs: Vec<u32> = gens.iter().map(|g| g.degree().unwrap_or(0)).collect();
    let mut out = Vec::new();
    let mut exps = vec![0u32; gens.len()];
    loop {
        let total: u32 = exps.iter().zip(&degs).map(|(e, d)| e * d).sum();
        if total <= deg_cap {
            let mut acc = NCPoly::one(p.field_order());
            for (g, &e) in gens.iter().zip(&exps) {
                for _ in 0..e {
                    acc = multiply(&acc, g, p)?;
                }
            }
            out.push(acc);
        }
        // odometer with a degree bound on each digit
        let mut i = 0;
        loop {
            if i == exps.len() {
                return Ok(out);
            }
            exps[i] += 1;
            if exps[i] * degs[i] <= deg_cap {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

/// Coordinates of polynomials against a shared monomial index.
struct MonomialIndex(BTreeMap<PBWMonomial, usize>);

impl MonomialIndex {
    fn over(sets: &[&[NCPoly]]) -> Self {
        let mut index = BTreeMap::new();
        for f in sets.iter().flat_map(|s| s.iter()) {
            for m in f.terms().keys() {
                let next = index.len();
                index.entry(*m).or_insert(next);
            }
        }
        MonomialIndex(index)
    }

    fn coords(&self, f: &NCPoly) -> SparseVec<CycloElem> {
        let mut v: SparseVec<CycloElem> = f
            .terms()
            .iter()
            .map(|(m, c)| (self.0[m], c.clone()))
            .collect();
        v.sort_by_key(|(i, _)| *i);
        v
    }

    fn echelon(&self, set: &[NCPoly]) -> Echelon<CycloElem> {
        let mut e = Echelon::new(self.0.len());
        for f in set {
            e.insert(&self.coords(f));
        }
        e
    }
}

/// Whether `f` lies in the span of `basis`.
pub fn span_contains(basis: &[NCPoly], f: &NCPoly) -> bool {
    let single = [f.clone()];
    let index = MonomialIndex::over(&[basis, &single]);
    index.echelon(basis).contains(&index.coords(f))
}

/// Whether two finite sets of polynomials span the same subspace.
pub fn span_equal(a: &[NCPoly], b: &[NCPoly]) -> bool {
    let index = MonomialIndex::over(&[a, b]);
    let (ea, eb) = (index.echelon(a), index.echelon(b));
    ea.rank() == eb.rank() && eb.rows().iter().all(|r| ea.contains(r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalgebra::is_central;

    /// Central elements by solving against all four generators, without any filtering.
    fn brute_central(p: &AlgebraParams, cap: u32) -> Vec<NCPoly> {
        let monos = PBWMonomial::up_to_degree(cap);
        let mut eqs: BTreeMap<(Gen, PBWMonomial), Vec<(usize, CycloElem)>> = BTreeMap::new();
        for (i, m) in monos.iter().enumerate() {
            let f = NCPoly::monomial(*m, p.one());
            for g in Gen::ALL {
                let x = NCPoly::generator(p.field_order(), g);
                let c = crate::ncalgebra::commutator(&f, &x, p).unwrap();
                for (k, v) in c.terms() {
                    eqs.entry((g, *k)).or_default().push((i, v.clone()));
                }
            }
        }
        let mut e = Echelon::new(monos.len());
        for row in eqs.into_values() {
            e.insert(&crate::linalg::normalize(row));
        }
        e.nullspace(&p.one())
            .into_iter()
            .map(|v| {
                NCPoly::from_terms(p.field_order(), v.into_iter().map(|(i, s)| (monos[i], s)))
                    .unwrap()
            })
            .collect()
    }

    #[test]
    fn degree_zero_is_scalars() {
        let p = AlgebraParams::new(2, 3, 1, 1).unwrap();
        let z = central_space(&p, 0).unwrap();
        assert!(span_equal(&z.basis, &[NCPoly::one(6)]));
    }

    #[test]
    fn filtered_solve_matches_brute_force() {
        let p = AlgebraParams::new(2, 3, 1, 1).unwrap();
        let z = central_space(&p, 6).unwrap();
        let brute = brute_central(&p, 6);
        assert!(span_equal(&z.basis, &brute));
        let mono = |a, b, c, d| NCPoly::monomial(PBWMonomial::new(a, b, c, d), p.one());
        let expected = [
            NCPoly::one(6),
            mono(6, 0, 0, 0),
            mono(0, 6, 0, 0),
            mono(0, 0, 6, 0),
            mono(0, 0, 0, 6),
        ];
        assert!(span_equal(&z.basis, &expected));
        for f in &z.basis {
            assert!(is_central(f, &p).unwrap());
        }

        let q = AlgebraParams::new(4, 12, 1, 1).unwrap();
        assert!(span_equal(
            &central_space(&q, 6).unwrap().basis,
            &brute_central(&q, 6)
        ));
    }

    #[test]
    fn products_of_generators_fill_the_center() {
        let p = AlgebraParams::new(2, 3, 1, 1).unwrap();
        let z = central_space(&p, 12).unwrap();
        let prods = generator_product_span(&p, 12).unwrap();
        assert!(span_equal(&z.basis, &prods));
        assert!(span_contains(
            &z.basis,
            &NCPoly::monomial(PBWMonomial::new(6, 0, 0, 6), p.one())
        ));
        assert!(!span_contains(
            &z.basis,
            &NCPoly::monomial(PBWMonomial::new(1, 0, 0, 0), p.one())
        ));
    }
}
