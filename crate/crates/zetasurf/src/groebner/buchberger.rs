//! Buchberger's algorithm with the Gebauer-Moeller pair criteria and full
//! interreduction to the unique reduced basis.

use super::mpoly::{MPoly, Mono, MonomialOrder};
use crate::coeff::CoeffField;
use crate::error::{Error, Result};

/// A reduced Groebner basis: monic, interreduced, sorted by leading term.
#[derive(Clone, Debug, PartialEq)]
pub struct GroebnerBasis<F: CoeffField> {
    pub order: MonomialOrder,
    pub gens: Vec<MPoly<F>>,
}

/// Remainder of f on division by the given polynomials: no term of the
/// result is divisible by any divisor's leading term.
pub fn normal_form<F: CoeffField>(f: &MPoly<F>, divisors: &[MPoly<F>]) -> MPoly<F> {
    let field = f.field.clone();
    let mut rem = MPoly::zero(field.clone(), f.arity, f.order);
    let mut work = f.clone();
    'outer: while let Some((lm, lc)) = work.leading().map(|(m, c)| (m.clone(), c.clone())) {
        for g in divisors {
            if let Some((gm, gc)) = g.leading() {
                if let Some(q) = lm.div(gm) {
                    let factor = field.div(&lc, gc);
                    work = work.sub_mul_term(&q, &factor, g);
                    continue 'outer;
                }
            }
        }
        // move the irreducible leading term to the remainder
        rem.terms.push((lm, lc));
        work.terms.remove(0);
    }
    rem
}

fn s_poly<F: CoeffField>(f: &MPoly<F>, g: &MPoly<F>) -> MPoly<F> {
    let (fm, fc) = f.leading().expect("nonzero");
    let (gm, gc) = g.leading().expect("nonzero");
    let l = fm.lcm(gm);
    let uf = l.div(fm).unwrap();
    let ug = l.div(gm).unwrap();
    // cross-multiplied form avoids inverses and keeps Q-coefficients tame
    f.mul_term(&uf, gc).sub(&g.mul_term(&ug, fc))
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Mono,
}

/// The Gebauer-Moeller update: prunes the pending pair set against the new
/// element and generates its surviving pairs.
fn update_pairs<F: CoeffField>(
    basis: &[MPoly<F>],
    pairs: &mut Vec<Pair>,
    new_index: usize,
) {
    let lt_new = basis[new_index].leading().unwrap().0.clone();

    // candidate pairs (i, new)
    let mut candidates: Vec<Pair> = (0..new_index)
        .filter(|&i| !basis[i].is_zero())
        .map(|i| Pair { i, j: new_index, lcm: basis[i].leading().unwrap().0.lcm(&lt_new) })
        .collect();

    // drop (i, new) when another candidate's lcm properly divides its lcm
    let mut kept: Vec<Pair> = Vec::new();
    while let Some(cand) = candidates.pop() {
        let coprime = basis[cand.i].leading().unwrap().0.coprime(&lt_new);
        let dominated = candidates
            .iter()
            .chain(kept.iter())
            .any(|other| other.lcm.divides(&cand.lcm) && other.lcm != cand.lcm);
        if coprime || !dominated {
            kept.push(cand);
        }
    }
    // Buchberger's first criterion: coprime leading terms reduce to zero
    kept.retain(|p| !basis[p.i].leading().unwrap().0.coprime(&lt_new));

    // prune old pairs whose lcm is made redundant by the new element
    pairs.retain(|p| {
        let li = basis[p.i].leading().unwrap().0.lcm(&lt_new);
        let lj = basis[p.j].leading().unwrap().0.lcm(&lt_new);
        !(lt_new.divides(&p.lcm) && li != p.lcm && lj != p.lcm)
    });
    pairs.extend(kept);
}

/// Computes the reduced Groebner basis of the ideal generated by `gens`.
pub fn buchberger<F: CoeffField>(
    gens: &[MPoly<F>],
    order: MonomialOrder,
) -> Result<GroebnerBasis<F>> {
    let nonzero: Vec<&MPoly<F>> = gens.iter().filter(|g| !g.is_zero()).collect();
    if nonzero.is_empty() {
        return Ok(GroebnerBasis { order, gens: Vec::new() });
    }
    let field = nonzero[0].field.clone();
    let arity = nonzero[0].arity;
    if nonzero.iter().any(|g| g.arity != arity || g.field != field) {
        return Err(Error::RingMismatch);
    }

    let mut basis: Vec<MPoly<F>> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    for g in nonzero {
        let g = g.with_order(order).reduce_content();
        basis.push(g);
        update_pairs(&basis, &mut pairs, basis.len() - 1);
    }

    while !pairs.is_empty() {
        // normal strategy: smallest lcm in the active order
        let mut best = 0;
        for (k, p) in pairs.iter().enumerate().skip(1) {
            if order.cmp(&p.lcm, &pairs[best].lcm) == std::cmp::Ordering::Less {
                best = k;
            }
        }
        let pair = pairs.swap_remove(best);
        let s = s_poly(&basis[pair.i], &basis[pair.j]);
        let r = normal_form(&s, &basis).reduce_content();
        if r.is_zero() {
            continue;
        }
        basis.push(r);
        update_pairs(&basis, &mut pairs, basis.len() - 1);
    }

    Ok(GroebnerBasis { order, gens: interreduce(basis) })
}

/// Full interreduction: minimal leading terms, every generator fully reduced
/// against the others, monic, sorted ascending by leading term.
fn interreduce<F: CoeffField>(mut basis: Vec<MPoly<F>>) -> Vec<MPoly<F>> {
    // drop redundant generators (leading term divisible by another's)
    let mut keep: Vec<bool> = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        let lt_i = basis[i].leading().unwrap().0.clone();
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let lt_j = basis[j].leading().unwrap().0;
            if lt_j.divides(&lt_i) && (lt_i != *lt_j || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    basis = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| if k { Some(g) } else { None })
        .collect();

    // fully reduce each against the rest until stable
    loop {
        let mut changed = false;
        for i in 0..basis.len() {
            let others: Vec<MPoly<F>> = basis
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let r = normal_form(&basis[i], &others).reduce_content();
            if r != basis[i] {
                changed = true;
                basis[i] = r;
            }
        }
        basis.retain(|g| !g.is_zero());
        if !changed {
            break;
        }
    }

    let mut basis: Vec<MPoly<F>> = basis.into_iter().map(|g| g.monic()).collect();
    let order = basis.first().map(|g| g.order);
    if let Some(ord) = order {
        basis.sort_by(|a, b| ord.cmp(a.leading().unwrap().0, b.leading().unwrap().0));
    }
    basis
}

impl<F: CoeffField> GroebnerBasis<F> {
    /// True when the basis contains a nonzero constant (the whole ring).
    pub fn is_trivial(&self) -> bool {
        self.gens.iter().any(|g| g.is_constant())
    }

    /// Post-hoc Buchberger criterion, independent of construction shortcuts.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        for i in 0..self.gens.len() {
            for j in i + 1..self.gens.len() {
                let s = s_poly(&self.gens[i], &self.gens[j]);
                if !normal_form(&s, &self.gens).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    pub fn leading_monomials(&self) -> Vec<&Mono> {
        self.gens.iter().filter_map(|g| g.leading().map(|(m, _)| m)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{ModP, QQ};

    fn f7() -> ModP {
        ModP::new(7)
    }

    #[test]
    fn basis_of_two_variables() {
        let f = f7();
        let ord = MonomialOrder::Lex;
        let x = MPoly::var(f, 0, 2, ord);
        let y = MPoly::var(f, 1, 2, ord);
        let gb = buchberger(&[x.clone(), y.clone()], ord).unwrap();
        assert_eq!(gb.gens, vec![y, x]);
        assert!(gb.satisfies_buchberger_criterion());
    }

    #[test]
    fn textbook_lex_example() {
        // {x^2 - 1, xy - 1} under lex(x > y) reduces to {x - y, y^2 - 1}
        let f = f7();
        let ord = MonomialOrder::Lex;
        let x = MPoly::var(f, 0, 2, ord);
        let y = MPoly::var(f, 1, 2, ord);
        let one = MPoly::constant(f, 1, 2, ord);
        let g1 = x.mul(&x).sub(&one);
        let g2 = x.mul(&y).sub(&one);
        let gb = buchberger(&[g1.clone(), g2.clone()], ord).unwrap();
        let want1 = x.sub(&y);
        let want2 = y.mul(&y).sub(&one);
        assert_eq!(gb.gens, vec![want2.clone(), want1.clone()]);
        // ideal membership both ways
        assert!(normal_form(&g1, &gb.gens).is_zero());
        assert!(normal_form(&g2, &gb.gens).is_zero());
        let gb2 = buchberger(&[g1, g2, want1, want2], ord).unwrap();
        assert_eq!(gb.gens, gb2.gens);
    }

    #[test]
    fn constant_generator_gives_unit_ideal() {
        let f = f7();
        let ord = MonomialOrder::GrevLex;
        let x = MPoly::var(f, 0, 2, ord);
        let c = MPoly::constant(f, 3, 2, ord);
        let gb = buchberger(&[x, c], ord).unwrap();
        assert!(gb.is_trivial());
        assert_eq!(gb.gens.len(), 1);
        assert!(gb.gens[0].is_constant());
    }

    #[test]
    fn reduced_basis_is_unique_under_generator_shuffles() {
        let f = f7();
        let ord = MonomialOrder::GrevLex;
        let x = MPoly::var(f, 0, 3, ord);
        let y = MPoly::var(f, 1, 3, ord);
        let z = MPoly::var(f, 2, 3, ord);
        // a small nontrivial system
        let g1 = x.mul(&x).add(&y.mul(&z)).sub(&MPoly::constant(f, 2, 3, ord));
        let g2 = y.mul(&y).sub(&x.mul(&z));
        let g3 = z.mul(&z).add(&x.mul(&y));
        let gens = [g1, g2, g3];
        let gb = buchberger(&gens, ord).unwrap();
        assert!(gb.satisfies_buchberger_criterion());
        let mut shuffled = gens.to_vec();
        shuffled.reverse();
        let gb2 = buchberger(&shuffled, ord).unwrap();
        assert_eq!(gb.gens, gb2.gens);
        for g in &gens {
            assert!(normal_form(g, &gb.gens).is_zero());
        }
    }

    #[test]
    fn rational_coefficients_work() {
        let ord = MonomialOrder::Lex;
        let x = MPoly::var(QQ, 0, 2, ord);
        let y = MPoly::var(QQ, 1, 2, ord);
        let two = MPoly::constant(QQ, QQ.from_int(2), 2, ord);
        let g1 = x.mul(&x).sub(&two.mul(&y));
        let g2 = x.mul(&y).sub(&y);
        let gb = buchberger(&[g1.clone(), g2.clone()], ord).unwrap();
        assert!(gb.satisfies_buchberger_criterion());
        assert!(normal_form(&g1, &gb.gens).is_zero());
        assert!(normal_form(&g2, &gb.gens).is_zero());
    }

    #[test]
    fn normal_form_examples() {
        let f = f7();
        let ord = MonomialOrder::Lex;
        let x = MPoly::var(f, 0, 2, ord);
        let y = MPoly::var(f, 1, 2, ord);
        let one = MPoly::constant(f, 1, 2, ord);
        // normal_form(1, {x, y}) = 1
        assert_eq!(normal_form(&one, &[x.clone(), y.clone()]), one);
        // normal_form(x^2 y, {x - y}) = y^3
        let g = x.sub(&y);
        let f2 = x.mul(&x).mul(&y);
        assert_eq!(normal_form(&f2, &[g]), y.pow(3));
    }
}
