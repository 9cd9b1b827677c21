use num_bigint::BigInt;
use num_traits::ToPrimitive;
use qmatrix_core::iso::{criteria, explicit_intertwiner, intertwiner_space, is_intertwiner};
use qmatrix_core::ncalgebra::{center_generators, central_space, generator_product_span, span_equal};
use qmatrix_core::pidegree::{
    dimension_menu, factor_pi_degree, pi_degree_closed, pi_degree_snf, pi_degree_snf_details, TorsionFamily,
};
use qmatrix_core::reps::{
    annihilator_profile, build, burnside_dimension, eigen_violations, verify_relations, Family, ParamTuple,
    Representation,
};
use qmatrix_core::scalars::{CycloElem, ScalarMatrix};
use qmatrix_core::AlgebraParams;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::config::{RepAction, RunConfig};
use crate::error::{CliError, CliResult};
use crate::literal::{common_order, format_elem, parse_list, Literal};

fn int(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

pub fn regime(p: &AlgebraParams) -> &'static str {
    if p.alpha_beta_is_one() {
        "alpha-beta-one"
    } else if p.alpha_equals_beta() {
        "alpha-equals-beta"
    } else {
        "generic"
    }
}

pub fn params_json(p: &AlgebraParams) -> Value {
    json!({
        "m": p.m(),
        "n": p.n(),
        "k1": p.k1(),
        "k2": p.k2(),
        "l": p.l(),
        "alpha": p.alpha().to_string(),
        "beta": p.beta().to_string(),
        "t1": p.t1(),
        "t2": p.t2(),
        "l1": p.l1(),
        "l2": p.l2(),
        "field_order": p.field_order(),
        "regime": regime(p),
    })
}

/// PI degree two ways; they must agree.
fn pideg_pair(p: &AlgebraParams) -> CliResult<(u32, u32, Value)> {
    let (snf, closed, factors) = if regime(p) == "generic" {
        let d = pi_degree_snf_details(p)?;
        let factors: Vec<Value> = d.snf.factors.iter().map(int).collect();
        (d.pi_degree, pi_degree_closed(p)?, Value::Array(factors))
    } else {
        (pi_degree_snf(p)?, p.alpha().root_order(), Value::Null)
    };
    if snf != closed {
        return Err(CliError::Invariant(format!(
            "PI degree by invariant factors {snf} differs from closed form {closed} at {}",
            point(p)
        )));
    }
    Ok((snf, closed, factors))
}

fn point(p: &AlgebraParams) -> String {
    format!("(m, n, k1, k2) = ({}, {}, {}, {})", p.m(), p.n(), p.k1(), p.k2())
}

pub fn cmd_pidegree(cfg: &RunConfig) -> CliResult<Value> {
    let p = cfg.params()?;
    let (snf, closed, factors) = pideg_pair(&p)?;
    Ok(json!({
        "params": params_json(&p),
        "snf": snf,
        "closed": closed,
        "invariant_factors": factors,
    }))
}

pub fn cmd_classify(cfg: &RunConfig) -> CliResult<Value> {
    let p = cfg.params()?;
    let (snf, closed, factors) = pideg_pair(&p)?;
    let generators = if p.center_hypothesis() {
        let gens = center_generators(&p)?;
        Value::Array(gens.iter().map(|g| json!(g.to_string())).collect())
    } else {
        Value::Null
    };
    let mut families = serde_json::Map::new();
    for f in Family::ALL {
        let dim = if p.alpha_beta_is_one() {
            Value::Null
        } else {
            let (a, b) = f.ranges(&p);
            json!(a * b)
        };
        families.insert(f.name().to_string(), dim);
    }
    let t1t2 = p.t1() * p.t2();
    let l = p.l();
    let divides = t1t2 % l == 0;
    let (branch, criterion) = if l == t1t2 {
        (
            "boundary",
            "l = ord(αβ)ord(αβ⁻¹): every X12, X21 and D-torsionfree simple module is maximal dimensional, and torsion simple modules can be maximal dimensional too",
        )
    } else if divides {
        (
            "proper-divisor",
            "maximal dimensional iff X12, X21 and D-torsionfree",
        )
    } else {
        (
            "non-divisor",
            "maximal dimensional iff X11, X12, X21, X22 and D-torsionfree",
        )
    };
    let mut torsion = Vec::new();
    for t in TorsionFamily::ALL {
        torsion.push(json!({
            "family": t.name(),
            "pi_degree": factor_pi_degree(&p, t)?,
            "menu": dimension_menu(&p, t),
        }));
    }
    Ok(json!({
        "params": params_json(&p),
        "pideg": {"snf": snf, "closed": closed, "invariant_factors": factors},
        "center": {"hypothesis": p.center_hypothesis(), "generators": generators},
        "families": families,
        "maximal_dimension": {
            "l": l,
            "t1t2": t1t2,
            "l_divides_t1t2": divides,
            "l_equals_t1t2": l == t1t2,
            "m_equals_n": p.m() == p.n(),
            "branch": branch,
            "criterion": criterion,
        },
        "torsion": torsion,
    }))
}

pub fn cmd_center(cfg: &RunConfig) -> CliResult<Value> {
    let p = cfg.params()?;
    let z = central_space(&p, cfg.deg_cap)?;
    let (generators, matched) = if p.center_hypothesis() {
        let gens = center_generators(&p)?;
        let prods = generator_product_span(&p, cfg.deg_cap)?;
        let matched = span_equal(&z.basis, &prods);
        if !matched {
            return Err(CliError::Invariant(format!(
                "central elements of degree <= {} differ from products of the generators at {}",
                cfg.deg_cap,
                point(&p)
            )));
        }
        (
            Value::Array(gens.iter().map(|g| json!(g.to_string())).collect()),
            json!(matched),
        )
    } else {
        (Value::Null, Value::Null)
    };
    Ok(json!({
        "params": params_json(&p),
        "deg_cap": cfg.deg_cap,
        "dimension": z.dim(),
        "basis": z.basis.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        "generators": generators,
        "brute_force_match": matched,
    }))
}

/// Parse one or two scalar tuples and enlarge the field to hold them.
fn tuples(
    p: &AlgebraParams,
    family: Family,
    lists: &[Option<&str>],
) -> CliResult<(AlgebraParams, Vec<ParamTuple>)> {
    let parsed: Vec<Vec<Literal>> = lists
        .iter()
        .map(|s| match s {
            Some(s) => parse_list(s),
            None => Ok(vec![Literal::parse("1")?; family.arity()]),
        })
        .collect::<CliResult<_>>()?;
    let order = parsed
        .iter()
        .fold(p.field_order(), |acc, lits| common_order(acc, lits));
    let q = p.with_field_order(order)?;
    let tuples = parsed
        .iter()
        .map(|lits| {
            let elems = lits
                .iter()
                .map(|l| l.to_elem(order))
                .collect::<CliResult<Vec<CycloElem>>>()?;
            Ok(ParamTuple::new(family, elems)?)
        })
        .collect::<CliResult<_>>()?;
    Ok((q, tuples))
}

fn tuple_json(t: &ParamTuple) -> Value {
    Value::Array(t.mu().iter().map(|x| json!(format_elem(x))).collect())
}

fn matrix_json(m: &ScalarMatrix) -> Value {
    Value::Array(
        m.entries()
            .map(|(i, j, v)| {
                let coeffs: Vec<String> = v.coeffs().iter().map(|c| c.to_string()).collect();
                json!([i, j, coeffs])
            })
            .collect(),
    )
}

fn rep_header(r: &Representation, t: &ParamTuple) -> serde_json::Map<String, Value> {
    let mut out = serde_json::Map::new();
    out.insert("params".into(), params_json(r.params()));
    out.insert("family".into(), json!(t.family().name()));
    out.insert("mu".into(), tuple_json(t));
    out.insert("dim".into(), json!(r.dim()));
    out
}

pub fn cmd_rep(cfg: &RunConfig, action: RepAction) -> CliResult<Value> {
    let p = cfg.params()?;
    let family = cfg.family()?;
    let (q, ts) = tuples(&p, family, &[cfg.mu.as_deref()])?;
    let t = &ts[0];
    let r = build(&q, t)?;
    let mut out = rep_header(&r, t);
    out.insert("action".into(), json!(action.name()));
    match action {
        RepAction::Build => {
            let mut mats = serde_json::Map::new();
            for (g, m) in qmatrix_core::ncalgebra::Gen::ALL.iter().zip(r.matrices()) {
                mats.insert(g.name().to_string(), matrix_json(m));
            }
            out.insert("field_order".into(), json!(q.field_order()));
            out.insert("matrices".into(), Value::Object(mats));
        }
        RepAction::Verify => {
            let v = verify_relations(&r);
            let e = eigen_violations(&r);
            out.insert(
                "violations".into(),
                Value::Array(v.iter().map(|x| json!(x.to_string())).collect()),
            );
            out.insert("eigen_violations".into(), json!(e.len()));
            out.insert("ok".into(), json!(v.is_empty() && e.is_empty()));
        }
        RepAction::Simple => {
            let b = burnside_dimension(&r);
            out.insert("burnside_dimension".into(), json!(b.dimension));
            out.insert("target".into(), json!(b.target));
            out.insert("method".into(), json!(b.method.name()));
            out.insert("absolutely_simple".into(), json!(b.is_full()));
        }
        RepAction::Profile => {
            let prof = annihilator_profile(&r);
            let mut m = serde_json::Map::new();
            for (k, a) in prof.entries() {
                m.insert(k.to_string(), json!(a.name()));
            }
            out.insert("profile".into(), Value::Object(m));
            out.insert("matches_family".into(), json!(prof.matches(family)));
        }
    }
    Ok(Value::Object(out))
}

pub fn cmd_iso(cfg: &RunConfig) -> CliResult<Value> {
    let p = cfg.params()?;
    let family = cfg.family()?;
    let lambda = cfg
        .lambda
        .as_deref()
        .ok_or_else(|| CliError::Usage("--lambda is required for iso".into()))?;
    let (q, ts) = tuples(&p, family, &[cfg.mu.as_deref(), Some(lambda)])?;
    let (mu, la) = (&ts[0], &ts[1]);
    let (a, b) = (build(&q, mu)?, build(&q, la)?);
    let shift = criteria(&q, mu, la)?;
    let space = intertwiner_space(&a, &b)?;
    let invertible = space.basis.first().is_some_and(|t| t.is_invertible());
    let oracle = space.dim() >= 1 && invertible;
    let explicit = match shift {
        Some(s) => json!(is_intertwiner(&a, &b, &explicit_intertwiner(&q, mu, la, s)?)),
        None => Value::Null,
    };
    if shift.is_some() != oracle || space.dim() > 1 || explicit == json!(false) {
        return Err(CliError::Invariant(format!(
            "criteria ({shift:?}) and intertwiner space (dim {}) disagree at {}",
            space.dim(),
            point(&q)
        )));
    }
    let (u, v) = match (family, shift) {
        (_, None) => (Value::Null, Value::Null),
        (Family::V3, Some(s)) => (Value::Null, json!(s.v)),
        (_, Some(s)) => (json!(s.u), json!(s.v)),
    };
    Ok(json!({
        "params": params_json(&q),
        "family": family.name(),
        "mu": tuple_json(mu),
        "lambda": tuple_json(la),
        "dim": a.dim(),
        "isomorphic": shift.is_some(),
        "criteria": {"u": u, "v": v},
        "oracle": {"intertwiner_dim": space.dim(), "invertible": invertible},
        "explicit_map_valid": explicit,
    }))
}

/// Every `(m, n, k1, k2)` with `2 ≤ m, n ≤ max` and `k_i` a unit modulo its order.
pub fn sweep_grid(max: u32) -> Vec<(u32, u32, i64, i64)> {
    let units = |m: u32| -> Vec<i64> {
        (1..m as i64)
            .filter(|k| num_integer::gcd(*k, m as i64) == 1)
            .collect()
    };
    let mut out = Vec::new();
    for m in 2..=max {
        for n in 2..=max {
            for &k1 in &units(m) {
                for &k2 in &units(n) {
                    out.push((m, n, k1, k2));
                }
            }
        }
    }
    out
}

fn sweep_point(m: u32, n: u32, k1: i64, k2: i64) -> CliResult<Value> {
    let p = AlgebraParams::new(m, n, k1, k2)?;
    let (snf, closed, _) = pideg_pair(&p).map_err(|e| match e {
        CliError::Core(err) => CliError::Invariant(format!("{} at {}", err, point(&p))),
        other => other,
    })?;
    Ok(json!({"m": m, "n": n, "k1": k1, "k2": k2, "regime": regime(&p), "snf": snf, "closed": closed}))
}

pub fn cmd_sweep(cfg: &RunConfig) -> CliResult<Value> {
    let grid = sweep_grid(cfg.grid_max);
    let run = || -> CliResult<Vec<Value>> {
        grid.par_iter()
            .map(|&(m, n, k1, k2)| sweep_point(m, n, k1, k2))
            .collect()
    };
    let records = match cfg.workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build()
            .map_err(|e| CliError::Usage(format!("cannot start {w} workers: {e}")))?
            .install(run)?,
        None => run()?,
    };
    let count = |r: &str| records.iter().filter(|x| x["regime"] == r).count();
    Ok(json!({
        "grid_max": cfg.grid_max,
        "points": records.len(),
        "generic": count("generic"),
        "alpha_beta_one": count("alpha-beta-one"),
        "alpha_equals_beta": count("alpha-equals-beta"),
        "failures": 0,
        "records": records,
    }))
}
