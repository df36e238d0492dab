//! Ideal-level queries on top of the basis engine: quotient dimension,
//! elimination, saturation, emptiness, and JSON import/export of ideals.

use super::buchberger::{buchberger, GroebnerBasis};
use super::mpoly::{MPoly, Mono, MonomialOrder};
use crate::coeff::{CoeffField, ModP, QQ};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

/// Dimension of the quotient ring as a vector space, when finite.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotientDim {
    Finite(u64),
    Infinite,
}

/// Counts standard monomials under the staircase of leading terms. The
/// ideal is zero-dimensional exactly when every variable has a pure power
/// among the leading terms.
pub fn quotient_dimension<F: CoeffField>(gb: &GroebnerBasis<F>) -> QuotientDim {
    if gb.is_trivial() {
        return QuotientDim::Finite(0);
    }
    if gb.gens.is_empty() {
        return QuotientDim::Infinite;
    }
    let arity = gb.gens[0].arity;
    let lts: Vec<&Mono> = gb.leading_monomials();
    // per-variable caps from pure powers
    let mut caps = vec![None::<u16>; arity];
    for lt in &lts {
        let nonzero: Vec<usize> = (0..arity).filter(|&i| lt.exps[i] > 0).collect();
        if nonzero.len() == 1 {
            let i = nonzero[0];
            let e = lt.exps[i];
            caps[i] = Some(caps[i].map_or(e, |c| c.min(e)));
        }
    }
    if caps.iter().any(|c| c.is_none()) {
        return QuotientDim::Infinite;
    }
    let caps: Vec<u16> = caps.into_iter().map(|c| c.unwrap()).collect();

    fn count(
        var: usize,
        current: &mut Vec<u16>,
        caps: &[u16],
        lts: &[&Mono],
    ) -> u64 {
        // prune: a monomial divisible by a leading term stays divisible
        // under any extension
        let covered = lts.iter().any(|lt| {
            lt.exps
                .iter()
                .enumerate()
                .all(|(i, &e)| if i < var { current[i] >= e } else { e == 0 })
        });
        if covered {
            return 0;
        }
        if var == caps.len() {
            return 1;
        }
        let mut total = 0;
        for e in 0..caps[var] {
            current[var] = e;
            total += count(var + 1, current, caps, lts);
        }
        current[var] = 0;
        total
    }
    let mut current = vec![0u16; arity];
    QuotientDim::Finite(count(0, &mut current, &caps, &lts))
}

/// Generators of the elimination ideal keeping only the flagged variables,
/// computed under a block order with the eliminated variables dominant.
/// The result is returned in the original variable numbering, grevlex.
pub fn eliminate<F: CoeffField>(gens: &[MPoly<F>], keep: &[bool]) -> Result<Vec<MPoly<F>>> {
    if gens.is_empty() {
        return Ok(Vec::new());
    }
    let arity = gens[0].arity;
    assert_eq!(keep.len(), arity);
    // remap: eliminated variables first
    let eliminated: Vec<usize> = (0..arity).filter(|&i| !keep[i]).collect();
    let kept: Vec<usize> = (0..arity).filter(|&i| keep[i]).collect();
    let mut var_map = vec![0usize; arity];
    for (new_i, &old) in eliminated.iter().chain(kept.iter()).enumerate() {
        var_map[old] = new_i;
    }
    let order = MonomialOrder::Block(eliminated.len());
    let mapped: Vec<MPoly<F>> = gens
        .iter()
        .map(|g| g.map_arity(arity, &var_map, order))
        .collect();
    let gb = buchberger(&mapped, order)?;
    // keep basis elements in the kept block only, then map back
    let allowed: Vec<bool> = (0..arity).map(|i| i >= eliminated.len()).collect();
    let mut inverse = vec![0usize; arity];
    for (old, &new_i) in var_map.iter().enumerate() {
        inverse[new_i] = old;
    }
    Ok(gb
        .gens
        .into_iter()
        .filter(|g| g.uses_only(&allowed))
        .map(|g| g.map_arity(arity, &inverse, MonomialOrder::GrevLex))
        .collect())
}

/// Saturation I : h^infinity, via the extra-variable trick
/// (I + (1 - w h)) intersected back down.
pub fn saturate<F: CoeffField>(gens: &[MPoly<F>], h: &MPoly<F>) -> Result<Vec<MPoly<F>>> {
    if gens.is_empty() {
        return Ok(Vec::new());
    }
    let field = gens[0].field.clone();
    let arity = gens[0].arity;
    let ord = MonomialOrder::GrevLex;
    // widen to arity + 1 with w as the last variable
    let widen: Vec<usize> = (0..arity).collect();
    let mut widened: Vec<MPoly<F>> = gens
        .iter()
        .map(|g| g.map_arity(arity + 1, &widen, ord))
        .collect();
    let h_wide = h.map_arity(arity + 1, &widen, ord);
    let w = MPoly::var(field.clone(), arity, arity + 1, ord);
    let one = MPoly::constant(field.clone(), field.one(), arity + 1, ord);
    widened.push(one.sub(&w.mul(&h_wide)));
    let mut keep = vec![true; arity + 1];
    keep[arity] = false;
    let eliminated = eliminate(&widened, &keep)?;
    // shrink back to the original arity
    let shrink: Vec<usize> = (0..=arity).map(|i| i.min(arity - 1)).collect();
    Ok(eliminated
        .into_iter()
        .map(|g| {
            debug_assert!(g.uses_only(&keep));
            g.map_arity(arity, &shrink, ord)
        })
        .collect())
}

/// True exactly when the reduced basis is {1}: no solutions over the
/// algebraic closure.
pub fn is_empty_variety<F: CoeffField>(gens: &[MPoly<F>]) -> Result<bool> {
    if gens.iter().all(|g| g.is_zero()) {
        return Ok(false);
    }
    Ok(buchberger(gens, MonomialOrder::GrevLex)?.is_trivial())
}

// ---------------------------------------------------------------------------
// JSON exchange format
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u16>,
    pub num: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub den: Option<i64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

pub fn poly_to_json<F: CoeffField>(
    p: &MPoly<F>,
    vars: &[&str],
    to_fraction: impl Fn(&F::El) -> (i64, Option<i64>),
) -> PolyJson {
    PolyJson {
        vars: vars.iter().map(|s| s.to_string()).collect(),
        terms: p
            .terms
            .iter()
            .map(|(m, c)| {
                let (num, den) = to_fraction(c);
                TermJson { exp: m.exps.clone(), num, den }
            })
            .collect(),
    }
}

pub fn modp_poly_to_json(p: &MPoly<ModP>, vars: &[&str]) -> PolyJson {
    poly_to_json(p, vars, |c| (*c as i64, None))
}

pub fn rat_poly_to_json(p: &MPoly<QQ>, vars: &[&str]) -> PolyJson {
    poly_to_json(p, vars, |c| {
        let num = i64::try_from(c.numer()).expect("numerator fits i64");
        if c.denom().is_one() {
            (num, None)
        } else {
            (num, Some(i64::try_from(c.denom()).expect("denominator fits i64")))
        }
    })
}

pub fn modp_poly_from_json(j: &PolyJson, field: ModP) -> Result<MPoly<ModP>> {
    let arity = j.vars.len();
    let mut terms = Vec::new();
    for t in &j.terms {
        if t.exp.len() != arity {
            return Err(Error::IdealFormat("exponent arity mismatch".into()));
        }
        let mut c = field.from_int(t.num);
        if let Some(d) = t.den {
            let dv = field.from_int(d);
            if dv == 0 {
                return Err(Error::IdealFormat(format!(
                    "denominator {d} vanishes modulo {}",
                    field.p
                )));
            }
            c = field.div(&c, &dv);
        }
        terms.push((Mono::new(t.exp.clone()), c));
    }
    Ok(MPoly::from_terms(field, arity, MonomialOrder::GrevLex, terms))
}

pub fn rat_poly_from_json(j: &PolyJson) -> Result<MPoly<QQ>> {
    let arity = j.vars.len();
    let mut terms = Vec::new();
    for t in &j.terms {
        if t.exp.len() != arity {
            return Err(Error::IdealFormat("exponent arity mismatch".into()));
        }
        let den = t.den.unwrap_or(1);
        if den == 0 {
            return Err(Error::IdealFormat("zero denominator".into()));
        }
        let c = BigRational::new(BigInt::from(t.num), BigInt::from(den));
        terms.push((Mono::new(t.exp.clone()), c));
    }
    Ok(MPoly::from_terms(QQ, arity, MonomialOrder::GrevLex, terms))
}
