//! Exact scalar literals: `zeta(L)^e`, `cyc(L)[c0, c1, ...]` and rationals such as `-3/2`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use qmatrix_core::scalars::CycloElem;

use crate::error::{CliError, CliResult};

/// A parsed literal, not yet placed in a field: `Σ coeffs[i] ζ_order^i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Literal {
    pub order: u32,
    pub coeffs: Vec<BigRational>,
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn parse_rational(s: &str) -> CliResult<BigRational> {
    let s = s.trim();
    let bad = || usage(format!("invalid rational {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(usage(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(num, den))
}

fn parse_order(s: &str) -> CliResult<u32> {
    match s.trim().parse::<u32>() {
        Ok(l) if l > 0 => Ok(l),
        _ => Err(usage(format!("invalid field order {s:?}"))),
    }
}

impl Literal {
    pub fn parse(s: &str) -> CliResult<Literal> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("zeta(") {
            let (order, tail) = rest
                .split_once(')')
                .ok_or_else(|| usage(format!("unclosed zeta literal {s:?}")))?;
            let order = parse_order(order)?;
            let exp: i64 = match tail.trim() {
                "" => 1,
                t => t
                    .strip_prefix('^')
                    .and_then(|e| e.trim().parse().ok())
                    .ok_or_else(|| usage(format!("invalid exponent in {s:?}")))?,
            };
            let mut coeffs = vec![BigRational::zero(); order as usize];
            coeffs[exp.rem_euclid(order as i64) as usize] = BigRational::from_integer(1.into());
            return Ok(Literal { order, coeffs });
        }
        if let Some(rest) = s.strip_prefix("cyc(") {
            let (order, tail) = rest
                .split_once(')')
                .ok_or_else(|| usage(format!("unclosed cyc literal {s:?}")))?;
            let order = parse_order(order)?;
            let body = tail
                .trim()
                .strip_prefix('[')
                .and_then(|t| t.strip_suffix(']'))
                .ok_or_else(|| usage(format!("expected [c0, c1, ...] in {s:?}")))?;
            let coeffs = body
                .split(',')
                .filter(|c| !c.trim().is_empty())
                .map(parse_rational)
                .collect::<CliResult<Vec<_>>>()?;
            return Ok(Literal { order, coeffs });
        }
        Ok(Literal {
            order: 1,
            coeffs: vec![parse_rational(s)?],
        })
    }

    /// The image in `Q(ζ_field)`; `order` must divide `field`.
    pub fn to_elem(&self, field: u32) -> CliResult<CycloElem> {
        if field % self.order != 0 {
            return Err(usage(format!(
                "literal over Q(zeta({})) does not embed in Q(zeta({field}))",
                self.order
            )));
        }
        let step = (field / self.order) as i64;
        let mut acc = CycloElem::zero(field);
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = &acc + &CycloElem::root(field, i as i64 * step).scale(c);
            }
        }
        Ok(acc)
    }
}

/// Split a comma-separated list, ignoring commas inside brackets.
pub fn split_list(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            _ => {}
        }
        if ch == ',' && depth == 0 {
            out.push(cur.trim().to_string());
            cur.clear();
        } else {
            cur.push(ch);
        }
    }
    if !cur.trim().is_empty() {
        out.push(cur.trim().to_string());
    }
    out
}

pub fn parse_list(s: &str) -> CliResult<Vec<Literal>> {
    split_list(s).iter().map(|x| Literal::parse(x)).collect()
}

/// Least common field order of a set of literals and a base order.
pub fn common_order(base: u32, lits: &[Literal]) -> u32 {
    lits.iter().fold(base, |acc, l| acc.lcm(&l.order))
}

/// Canonical round-trippable literal of a field element.
pub fn format_elem(x: &CycloElem) -> String {
    let coeffs: Vec<String> = x.coeffs().iter().map(|c| c.to_string()).collect();
    format!("cyc({})[{}]", x.field_order(), coeffs.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_literals_embed() {
        let z = Literal::parse("zeta(3)^2").unwrap().to_elem(6).unwrap();
        assert_eq!(z, CycloElem::root(6, 4));
        let z = Literal::parse("zeta(6)").unwrap().to_elem(6).unwrap();
        assert_eq!(z, CycloElem::root(6, 1));
        assert!(Literal::parse("zeta(4)^1").unwrap().to_elem(6).is_err());
    }

    #[test]
    fn cyc_and_rational_literals() {
        let x = Literal::parse("cyc(6)[1/2, -1]").unwrap().to_elem(6).unwrap();
        let expect = &CycloElem::from_rational(6, BigRational::new(1.into(), 2.into())) - &CycloElem::root(6, 1);
        assert_eq!(x, expect);
        assert_eq!(Literal::parse("-3").unwrap().to_elem(12).unwrap(), CycloElem::from_int(12, -3));
        assert!(Literal::parse("1/0").is_err());
        assert!(Literal::parse("zeta(6)^x").is_err());
    }

    #[test]
    fn round_trip_and_lists() {
        let x = Literal::parse("cyc(12)[0,1,2/3]").unwrap().to_elem(12).unwrap();
        let back = Literal::parse(&format_elem(&x)).unwrap().to_elem(12).unwrap();
        assert_eq!(x, back);
        assert_eq!(split_list("zeta(6)^1, cyc(6)[1,2], 3"), vec!["zeta(6)^1", "cyc(6)[1,2]", "3"]);
        assert_eq!(common_order(6, &parse_list("zeta(4), 1").unwrap()), 12);
    }
}
