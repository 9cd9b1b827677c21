use qmatrix_core::iso::{are_isomorphic, criteria, explicit_intertwiner, is_intertwiner, Witness};
use qmatrix_core::ncalgebra::{center_generators, central_space, dependency_relation, is_central, span_contains};
use qmatrix_core::pidegree::{dimension_menu, pi_degree_closed, pi_degree_snf, TorsionFamily};
use qmatrix_core::reps::{build, is_absolutely_simple, verify_relations, Family, ParamTuple};
use qmatrix_core::scalars::CycloElem;
use qmatrix_core::{AlgebraParams, Error};

fn params(m: u32, n: u32, k1: i64, k2: i64) -> AlgebraParams {
    AlgebraParams::new(m, n, k1, k2).unwrap()
}

#[test]
fn rejects_non_primitive_exponents() {
    assert!(matches!(AlgebraParams::new(4, 3, 2, 1), Err(Error::InvalidParams(_))));
    assert!(AlgebraParams::new(0, 3, 1, 1).is_err());
}

#[test]
fn pi_degree_matches_the_largest_module() {
    for (m, n, k1, k2) in [(2, 3, 1, 1), (2, 6, 1, 1), (4, 12, 1, 1), (3, 4, 2, 3)] {
        let p = params(m, n, k1, k2);
        let d = pi_degree_snf(&p).unwrap();
        assert_eq!(d, pi_degree_closed(&p).unwrap());
        let v1 = build(&p, &ParamTuple::roots(Family::V1, &[p.root(0); 4]).unwrap()).unwrap();
        assert_eq!(v1.dim() as u32, d, "({m},{n},{k1},{k2})");
        assert!(verify_relations(&v1).is_empty());
    }
}

#[test]
fn center_generators_are_central_and_dependent() {
    let p = params(2, 3, 1, 1);
    let gens = center_generators(&p).unwrap();
    assert_eq!(gens.len(), 6);
    for g in &gens {
        assert!(is_central(g, &p).unwrap());
    }
    let z = central_space(&p, 12).unwrap();
    assert!(span_contains(&z.basis, &dependency_relation(&p).unwrap()));
}

#[test]
fn torsion_menus_are_bounded_by_the_pi_degree() {
    let p = params(4, 12, 1, 1);
    let d = pi_degree_snf(&p).unwrap();
    for family in TorsionFamily::ALL {
        let menu = dimension_menu(&p, family);
        assert!(!menu.is_empty());
        assert!(menu.iter().all(|&k| k <= d && k > 0), "{family}: {menu:?}");
    }
}

#[test]
fn isomorphism_by_criteria_and_by_intertwiner() {
    let p = params(2, 3, 1, 1);
    let ba = p.beta() * p.alpha().inv();
    let mu = ParamTuple::roots(Family::V3, &[p.root(1), p.root(2)]).unwrap();
    let la = ParamTuple::new(
        Family::V3,
        vec![p.root(1).embed(), p.root(2).embed().mul_root(&ba.pow(-2))],
    )
    .unwrap();
    let shift = criteria(&p, &mu, &la).unwrap().expect("isomorphic");
    let (a, b) = (build(&p, &mu).unwrap(), build(&p, &la).unwrap());
    assert!(is_intertwiner(&a, &b, &explicit_intertwiner(&p, &mu, &la, shift).unwrap()));
    let verdict = are_isomorphic(&a, &b).unwrap();
    assert!(verdict.isomorphic);

    let other = ParamTuple::new(Family::V3, vec![CycloElem::from_int(p.field_order(), 3), p.root(0).embed()]).unwrap();
    assert_eq!(criteria(&p, &mu, &other).unwrap(), None);
    assert!(!are_isomorphic(&a, &build(&p, &other).unwrap()).unwrap().isomorphic);
}

#[test]
fn modules_of_different_families_differ() {
    let p = params(2, 3, 1, 1);
    let one = p.root(0);
    let v1 = build(&p, &ParamTuple::roots(Family::V1, &[one; 4]).unwrap()).unwrap();
    let v3 = build(&p, &ParamTuple::roots(Family::V3, &[one; 2]).unwrap()).unwrap();
    assert!(is_absolutely_simple(&v1) && is_absolutely_simple(&v3));
    assert_eq!(v1.dim(), v3.dim());
    let verdict = are_isomorphic(&v1, &v3).unwrap();
    assert!(!verdict.isomorphic);
    assert!(!matches!(verdict.witness, Some(Witness::DimensionMismatch { .. })));
}
