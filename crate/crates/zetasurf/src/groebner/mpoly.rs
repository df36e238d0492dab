//! Sparse multivariate polynomials over an exact coefficient field, with
//! lex, graded reverse lex, and block elimination orders.

use crate::coeff::CoeffField;
use std::cmp::Ordering;

/// A monomial: exponent vector with cached total degree.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mono {
    pub exps: Vec<u16>,
    pub degree: u32,
}

impl Mono {
    pub fn new(exps: Vec<u16>) -> Mono {
        let degree = exps.iter().map(|&e| e as u32).sum();
        Mono { exps, degree }
    }

    pub fn one(arity: usize) -> Mono {
        Mono { exps: vec![0; arity], degree: 0 }
    }

    pub fn var(arity: usize, i: usize, e: u16) -> Mono {
        let mut exps = vec![0; arity];
        exps[i] = e;
        Mono::new(exps)
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        Mono {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
            degree: self.degree + other.degree,
        }
    }

    pub fn divides(&self, other: &Mono) -> bool {
        self.degree <= other.degree
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn div(&self, other: &Mono) -> Option<Mono> {
        if !other.divides(self) {
            return None;
        }
        Some(Mono {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - b)
                .collect(),
            degree: self.degree - other.degree,
        })
    }

    pub fn lcm(&self, other: &Mono) -> Mono {
        Mono::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn coprime(&self, other: &Mono) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Total orders on monomials. Block(k) compares the first k variables by
/// grevlex first, so those variables are eliminated by a basis computation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    Block(usize),
}

fn grevlex_cmp(a: &[u16], b: &[u16], deg_a: u32, deg_b: u32) -> Ordering {
    match deg_a.cmp(&deg_b) {
        Ordering::Equal => {}
        other => return other,
    }
    // tie: smaller exponent in the last differing variable is larger
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Mono, b: &Mono) -> Ordering {
        match *self {
            MonomialOrder::Lex => {
                for (x, y) in a.exps.iter().zip(&b.exps) {
                    match x.cmp(y) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::GrevLex => grevlex_cmp(&a.exps, &b.exps, a.degree, b.degree),
            MonomialOrder::Block(k) => {
                let da: u32 = a.exps[..k].iter().map(|&e| e as u32).sum();
                let db: u32 = b.exps[..k].iter().map(|&e| e as u32).sum();
                match grevlex_cmp(&a.exps[..k], &b.exps[..k], da, db) {
                    Ordering::Equal => grevlex_cmp(
                        &a.exps[k..],
                        &b.exps[k..],
                        a.degree - da,
                        b.degree - db,
                    ),
                    other => other,
                }
            }
        }
    }
}

/// A polynomial with terms sorted strictly descending in its order.
#[derive(Clone, Debug)]
pub struct MPoly<F: CoeffField> {
    pub field: F,
    pub arity: usize,
    pub order: MonomialOrder,
    pub terms: Vec<(Mono, F::El)>,
}

impl<F: CoeffField> PartialEq for MPoly<F> {
    fn eq(&self, other: &Self) -> bool {
        self.arity == other.arity && self.terms == other.terms
    }
}

impl<F: CoeffField> MPoly<F> {
    pub fn zero(field: F, arity: usize, order: MonomialOrder) -> MPoly<F> {
        MPoly { field, arity, order, terms: Vec::new() }
    }

    pub fn constant(field: F, c: F::El, arity: usize, order: MonomialOrder) -> MPoly<F> {
        let mut p = MPoly::zero(field, arity, order);
        if !p.field.is_zero(&c) {
            p.terms.push((Mono::one(arity), c));
        }
        p
    }

    pub fn var(field: F, i: usize, arity: usize, order: MonomialOrder) -> MPoly<F> {
        let one = field.one();
        MPoly { field, arity, order, terms: vec![(Mono::var(arity, i, 1), one)] }
    }

    pub fn from_terms(
        field: F,
        arity: usize,
        order: MonomialOrder,
        terms: Vec<(Mono, F::El)>,
    ) -> MPoly<F> {
        let mut p = MPoly { field, arity, order, terms };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        let order = self.order;
        self.terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut merged: Vec<(Mono, F::El)> = Vec::with_capacity(self.terms.len());
        for (m, c) in self.terms.drain(..) {
            if let Some(last) = merged.last_mut() {
                if last.0 == m {
                    last.1 = self.field.add(&last.1, &c);
                    continue;
                }
            }
            merged.push((m, c));
        }
        merged.retain(|(_, c)| !self.field.is_zero(c));
        self.terms = merged;
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn leading(&self) -> Option<&(Mono, F::El)> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree).max().unwrap_or(0)
    }

    /// Re-sorts the terms under a different order.
    pub fn with_order(&self, order: MonomialOrder) -> MPoly<F> {
        let mut p = self.clone();
        p.order = order;
        p.terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        p
    }

    pub fn map_arity(
        &self,
        new_arity: usize,
        var_map: &[usize],
        order: MonomialOrder,
    ) -> MPoly<F> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0u16; new_arity];
                for (i, &e) in m.exps.iter().enumerate() {
                    if e != 0 {
                        exps[var_map[i]] = e;
                    }
                }
                (Mono::new(exps), c.clone())
            })
            .collect();
        MPoly::from_terms(self.field.clone(), new_arity, order, terms)
    }

    pub fn add(&self, other: &MPoly<F>) -> MPoly<F> {
        debug_assert_eq!(self.arity, other.arity);
        debug_assert_eq!(self.order, other.order);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match self.order.cmp(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = self.field.add(&self.terms[i].1, &other.terms[j].1);
                    if !self.field.is_zero(&c) {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        MPoly { field: self.field.clone(), arity: self.arity, order: self.order, terms: out }
    }

    pub fn neg(&self) -> MPoly<F> {
        let mut p = self.clone();
        for (_, c) in &mut p.terms {
            *c = self.field.neg(c);
        }
        p
    }

    pub fn sub(&self, other: &MPoly<F>) -> MPoly<F> {
        self.add(&other.neg())
    }

    /// self - (m, c) * other, the workhorse of division.
    pub fn sub_mul_term(&self, m: &Mono, c: &F::El, other: &MPoly<F>) -> MPoly<F> {
        self.sub(&other.mul_term(m, c))
    }

    pub fn mul_term(&self, m: &Mono, c: &F::El) -> MPoly<F> {
        if self.field.is_zero(c) {
            return MPoly::zero(self.field.clone(), self.arity, self.order);
        }
        let terms = self
            .terms
            .iter()
            .map(|(tm, tc)| (tm.mul(m), self.field.mul(tc, c)))
            .collect();
        // multiplying by a fixed monomial preserves the term order
        MPoly { field: self.field.clone(), arity: self.arity, order: self.order, terms }
    }

    pub fn scale(&self, c: &F::El) -> MPoly<F> {
        self.mul_term(&Mono::one(self.arity), c)
    }

    pub fn mul(&self, other: &MPoly<F>) -> MPoly<F> {
        let mut acc: std::collections::HashMap<Vec<u16>, F::El> =
            std::collections::HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let prod = self.field.mul(ca, cb);
                match acc.entry(m.exps) {
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        let v = self.field.add(e.get(), &prod);
                        *e.get_mut() = v;
                    }
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(prod);
                    }
                }
            }
        }
        let terms = acc.into_iter().map(|(e, c)| (Mono::new(e), c)).collect();
        MPoly::from_terms(self.field.clone(), self.arity, self.order, terms)
    }

    pub fn pow(&self, e: u32) -> MPoly<F> {
        let mut acc = MPoly::constant(self.field.clone(), self.field.one(), self.arity, self.order);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Partial derivative with respect to variable i.
    pub fn derivative(&self, i: usize) -> MPoly<F> {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exps[i] > 0)
            .map(|(m, c)| {
                let mut exps = m.exps.clone();
                let e = exps[i];
                exps[i] -= 1;
                (Mono::new(exps), self.field.mul(c, &self.field.from_int(e as i64)))
            })
            .collect();
        MPoly::from_terms(self.field.clone(), self.arity, self.order, terms)
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self) -> MPoly<F> {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => self.scale(&self.field.inv(c)),
        }
    }

    /// Applies the field's anti-swell rescaling (content removal over Q).
    pub fn reduce_content(&self) -> MPoly<F> {
        let cs: Vec<F::El> = self.terms.iter().map(|(_, c)| c.clone()).collect();
        match self.field.antiswell_scalar(&cs) {
            None => self.clone(),
            Some(s) => self.scale(&s),
        }
    }

    pub fn uses_only(&self, allowed: &[bool]) -> bool {
        self.terms.iter().all(|(m, _)| {
            m.exps
                .iter()
                .enumerate()
                .all(|(i, &e)| e == 0 || allowed[i])
        })
    }

    pub fn display(&self, var_names: &[&str]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                out.push_str(" + ");
            }
            out.push_str(&self.field.display(c));
            for (v, &e) in m.exps.iter().enumerate() {
                if e == 1 {
                    out.push_str(&format!("*{}", var_names[v]));
                } else if e > 1 {
                    out.push_str(&format!("*{}^{}", var_names[v], e));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::ModP;

    fn f7() -> ModP {
        ModP::new(7)
    }

    #[test]
    fn order_axioms_on_sampled_triples() {
        // total, multiplicative, 1 minimal
        let orders = [MonomialOrder::Lex, MonomialOrder::GrevLex, MonomialOrder::Block(2)];
        let mut state = 7u64;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(13);
            ((state >> 40) % 5) as u16
        };
        for _ in 0..300 {
            let a = Mono::new(vec![next(), next(), next(), next()]);
            let b = Mono::new(vec![next(), next(), next(), next()]);
            let c = Mono::new(vec![next(), next(), next(), next()]);
            for ord in orders {
                // 1 is minimal
                let one = Mono::one(4);
                assert_ne!(ord.cmp(&a.mul(&b), &one), Ordering::Less);
                // multiplicative
                let ab = ord.cmp(&a, &b);
                assert_eq!(ord.cmp(&a.mul(&c), &b.mul(&c)), ab);
                // antisymmetry
                assert_eq!(ord.cmp(&b, &a), ab.reverse());
            }
        }
    }

    #[test]
    fn grevlex_standard_example() {
        // x^2 y > x y^2 under grevlex with x before y? both degree 3:
        // last differing variable is y: x^2 y has smaller y-exponent, so it
        // is larger.
        let xxy = Mono::new(vec![2, 1]);
        let xyy = Mono::new(vec![1, 2]);
        assert_eq!(MonomialOrder::GrevLex.cmp(&xxy, &xyy), Ordering::Greater);
    }

    #[test]
    fn arithmetic_roundtrip() {
        let f = f7();
        let ord = MonomialOrder::GrevLex;
        let x = MPoly::var(f, 0, 2, ord);
        let y = MPoly::var(f, 1, 2, ord);
        let p = x.add(&y).pow(2); // x^2 + 2xy + y^2
        assert_eq!(p.terms.len(), 3);
        let q = p.sub(&x.mul(&x)).sub(&y.mul(&y));
        assert_eq!(q.terms.len(), 1);
        assert_eq!(q.leading().unwrap().1, 2);
        assert_eq!(p.derivative(0), x.scale(&2).add(&y.scale(&2)));
    }
}
