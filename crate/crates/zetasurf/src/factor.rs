//! Factorization of integer polynomials into irreducibles: squarefree
//! decomposition, Berlekamp factorization modulo a small prime, quadratic
//! Hensel lifting past the Mignotte bound, and exhaustive subset
//! recombination. Degrees in this crate stay below ~24, so the exhaustive
//! recombination is instant. Also exact cyclotomic-polynomial detection.

use crate::intpoly::IntPoly;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// input = content * prod factors[i].0 ^ factors[i].1, with primitive
/// irreducible factors normalized to positive leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub content: BigInt,
    pub factors: Vec<(IntPoly, u32)>,
}

impl Factorization {
    /// Multiplies the factorization back out.
    pub fn expand(&self) -> IntPoly {
        let mut acc = IntPoly::constant(self.content.clone());
        for (f, m) in &self.factors {
            acc = acc.mul(&f.pow(*m));
        }
        acc
    }

    /// Degrees with multiplicity, for subset-sum queries.
    pub fn degree_multiset(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (f, m) in &self.factors {
            for _ in 0..*m {
                out.push(f.degree());
            }
        }
        out
    }
}

pub fn factor_over_integers(f: &IntPoly) -> Factorization {
    assert!(!f.is_zero(), "cannot factor the zero polynomial");
    let content = f.content();
    let prim = f.primitive_part();
    if prim.degree() == 0 {
        return Factorization { content, factors: Vec::new() };
    }
    let mut factors: Vec<(IntPoly, u32)> = Vec::new();
    for (sqfree, mult) in squarefree_decomposition(&prim) {
        for irr in factor_squarefree(&sqfree) {
            factors.push((irr, mult));
        }
    }
    factors.sort_by(|a, b| {
        (a.0.degree(), a.0.coeffs()).cmp(&(b.0.degree(), b.0.coeffs()))
    });
    let result = Factorization { content, factors };
    debug_assert_eq!(result.expand(), *f, "factorization must re-multiply exactly");
    result
}

/// Yun's algorithm: primitive f = prod a_i^i with the a_i squarefree and
/// pairwise coprime.
pub fn squarefree_decomposition(f: &IntPoly) -> Vec<(IntPoly, u32)> {
    let mut out = Vec::new();
    let g = f.gcd(&f.derivative());
    if g.degree() == 0 {
        out.push((f.primitive_part(), 1));
        return out;
    }
    let mut b = f.try_div_exact(&g).expect("gcd divides");
    let mut c = f.derivative().try_div_exact(&g).expect("gcd divides derivative");
    let mut i = 1u32;
    loop {
        let d = c.sub(&b.derivative());
        if b.degree() == 0 {
            break;
        }
        let a = b.gcd(&d);
        if a.degree() > 0 {
            out.push((a.clone(), i));
        }
        b = b.try_div_exact(&a).expect("squarefree part divides");
        c = d.try_div_exact(&a).expect("squarefree part divides");
        i += 1;
    }
    out
}

// ---------------------------------------------------------------------------
// Polynomials over F_p (dense, constant first) for the modular stage
// ---------------------------------------------------------------------------

mod modp {
    pub fn trim(v: &mut Vec<u64>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    pub fn deg(v: &[u64]) -> usize {
        v.len().saturating_sub(1)
    }

    pub fn inv(a: u64, p: u64) -> u64 {
        let (mut t, mut new_t): (i128, i128) = (0, 1);
        let (mut r, mut new_r) = (p as i128, (a % p) as i128);
        while new_r != 0 {
            let q = r / new_r;
            (t, new_t) = (new_t, t - q * new_t);
            (r, new_r) = (new_r, r - q * new_r);
        }
        ((t % p as i128 + p as i128) % p as i128) as u64
    }

    pub fn monic(v: &[u64], p: u64) -> Vec<u64> {
        let mut v = v.to_vec();
        trim(&mut v);
        if let Some(&l) = v.last() {
            let li = inv(l, p);
            for c in &mut v {
                *c = *c * li % p;
            }
        }
        v
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        out
    }

    pub fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        let mut r = a.to_vec();
        trim(&mut r);
        let dm = deg(m);
        let li = inv(*m.last().unwrap(), p);
        while r.len() > dm {
            let dr = r.len() - 1;
            let c = r[dr] * li % p;
            for i in 0..=dm {
                let idx = dr - dm + i;
                r[idx] = (r[idx] + p - c * m[i] % p) % p;
            }
            trim(&mut r);
        }
        r
    }

    pub fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let n = a.len().max(b.len());
        let mut out = vec![0u64; n];
        for (i, slot) in out.iter_mut().enumerate() {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            *slot = (x + p - y) % p;
        }
        trim(&mut out);
        out
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut x = a.to_vec();
        let mut y = b.to_vec();
        trim(&mut x);
        trim(&mut y);
        while !y.is_empty() {
            let r = rem(&x, &y, p);
            x = y;
            y = r;
        }
        monic(&x, p)
    }

    pub fn deriv(a: &[u64], p: u64) -> Vec<u64> {
        if a.len() <= 1 {
            return Vec::new();
        }
        let mut out: Vec<u64> = a[1..]
            .iter()
            .enumerate()
            .map(|(i, &c)| c * ((i as u64 + 1) % p) % p)
            .collect();
        trim(&mut out);
        out
    }

    pub fn pow_mod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
        let mut acc = vec![1u64];
        let mut b = rem(base, m, p);
        while e > 0 {
            if e & 1 == 1 {
                acc = rem(&mul(&acc, &b, p), m, p);
            }
            b = rem(&mul(&b, &b, p), m, p);
            e >>= 1;
        }
        acc
    }

    /// Extended Euclid: returns (s, t) with s a + t b = 1; requires gcd 1.
    pub fn bezout(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
        let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
        trim(&mut r0);
        trim(&mut r1);
        let (mut s0, mut s1) = (vec![1u64], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
        while !r1.is_empty() {
            // long division quotient of r0 by r1
            let (q, r) = divmod(&r0, &r1, p);
            r0 = r1;
            r1 = r;
            let s_new = sub(&s0, &mul(&q, &s1, p), p);
            s0 = s1;
            s1 = s_new;
            let t_new = sub(&t0, &mul(&q, &t1, p), p);
            t0 = t1;
            t1 = t_new;
        }
        assert_eq!(deg(&r0), 0, "inputs must be coprime");
        let c = inv(r0[0], p);
        let scale = |v: &[u64]| -> Vec<u64> { v.iter().map(|&x| x * c % p).collect() };
        (scale(&s0), scale(&t0))
    }

    pub fn divmod(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
        let mut r = a.to_vec();
        trim(&mut r);
        let db = deg(b);
        let li = inv(*b.last().unwrap(), p);
        if r.len() <= db {
            return (Vec::new(), r);
        }
        let mut q = vec![0u64; r.len() - db];
        while r.len() > db {
            let dr = r.len() - 1;
            let c = r[dr] * li % p;
            q[dr - db] = c;
            for i in 0..=db {
                let idx = dr - db + i;
                r[idx] = (r[idx] + p - c * b[i] % p) % p;
            }
            trim(&mut r);
        }
        (q, r)
    }
}

/// Berlekamp factorization of a monic squarefree polynomial mod p into monic
/// irreducibles.
fn berlekamp(g: &[u64], p: u64) -> Vec<Vec<u64>> {
    let d = modp::deg(g);
    if d <= 1 {
        return vec![g.to_vec()];
    }
    // rows of Q: x^(p i) mod g
    let mut q_rows = Vec::with_capacity(d);
    let x = vec![0u64, 1];
    for i in 0..d {
        let mut row = modp::pow_mod(&x, p * i as u64, g, p);
        row.resize(d, 0);
        q_rows.push(row);
    }
    // nullspace of (Q - I)^T: vectors v with v Q = v
    let mut m = vec![vec![0u64; d]; d];
    for (i, row) in q_rows.iter().enumerate() {
        for (j, &c) in row.iter().enumerate() {
            m[j][i] = c; // transpose
        }
    }
    for i in 0..d {
        m[i][i] = (m[i][i] + p - 1) % p;
    }
    let basis = nullspace(&mut m, p);
    let r = basis.len();
    let mut factors: Vec<Vec<u64>> = vec![modp::monic(g, p)];
    if r == 1 {
        return factors;
    }
    for v in &basis {
        if factors.len() == r {
            break;
        }
        let mut vpoly = v.clone();
        modp::trim(&mut vpoly);
        if modp::deg(&vpoly) == 0 {
            continue; // the constant vector never splits
        }
        let mut next = Vec::new();
        for u in factors {
            if modp::deg(&u) <= 1 || next.len() + 1 == r {
                next.push(u);
                continue;
            }
            let mut pieces = vec![u];
            for c in 0..p {
                if pieces.iter().all(|w| modp::deg(w) <= 1) {
                    break;
                }
                let mut shifted = vpoly.clone();
                if shifted.is_empty() {
                    shifted.push(0);
                }
                shifted[0] = (shifted[0] + p - c) % p;
                let mut split_out = Vec::new();
                for w in pieces {
                    let h = modp::gcd(&w, &shifted, p);
                    if modp::deg(&h) > 0 && modp::deg(&h) < modp::deg(&w) {
                        let (quot, rem) = modp::divmod(&w, &h, p);
                        debug_assert!(rem.is_empty());
                        split_out.push(h);
                        split_out.push(modp::monic(&quot, p));
                    } else {
                        split_out.push(w);
                    }
                }
                pieces = split_out;
            }
            next.extend(pieces);
        }
        factors = next;
    }
    debug_assert_eq!(factors.len(), r, "Berlekamp splitting incomplete");
    factors
}

/// Right-nullspace basis of a matrix over F_p (destroys the input).
fn nullspace(m: &mut [Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivot_of_col = vec![usize::MAX; cols];
    let mut rank = 0;
    for col in 0..cols {
        if let Some(r) = (rank..rows).find(|&r| m[r][col] != 0) {
            m.swap(rank, r);
            let inv = modp::inv(m[rank][col], p);
            for c in 0..cols {
                m[rank][c] = m[rank][c] * inv % p;
            }
            for rr in 0..rows {
                if rr != rank && m[rr][col] != 0 {
                    let f = m[rr][col];
                    for c in 0..cols {
                        m[rr][c] = (m[rr][c] + p - f * m[rank][c] % p) % p;
                    }
                }
            }
            pivot_of_col[col] = rank;
            rank += 1;
        }
    }
    let mut basis = Vec::new();
    for col in 0..cols {
        if pivot_of_col[col] != usize::MAX {
            continue;
        }
        let mut v = vec![0u64; cols];
        v[col] = 1;
        for c in 0..cols {
            let piv = pivot_of_col[c];
            if piv != usize::MAX {
                v[c] = (p - m[piv][col] % p) % p;
            }
        }
        basis.push(v);
    }
    basis
}

// ---------------------------------------------------------------------------
// Hensel lifting
// ---------------------------------------------------------------------------

fn reduce_sym(f: &IntPoly, m: &BigInt) -> IntPoly {
    let half = m / 2;
    IntPoly::new(
        f.coeffs()
            .iter()
            .map(|c| {
                let mut r = c.mod_floor(m);
                if r > half {
                    r -= m;
                }
                r
            })
            .collect(),
    )
}

fn to_int(f: &[u64]) -> IntPoly {
    IntPoly::new(f.iter().map(|&c| BigInt::from(c)).collect())
}

/// Division with remainder by a monic divisor, coefficients mod m.
fn divmod_monic_mod(a: &IntPoly, b: &IntPoly, m: &BigInt) -> (IntPoly, IntPoly) {
    assert!(b.leading().is_one());
    let mut r = a.coeffs().to_vec();
    let db = b.degree();
    if r.len() <= db {
        return (IntPoly::zero(), reduce_sym(a, m));
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    for k in (0..q.len()).rev() {
        let c = r[k + db].mod_floor(m);
        if !c.is_zero() {
            for (i, bc) in b.coeffs().iter().enumerate() {
                let v = (&r[k + i] - &c * bc).mod_floor(m);
                r[k + i] = v;
            }
        }
        q[k] = c;
    }
    (reduce_sym(&IntPoly::new(q), m), reduce_sym(&IntPoly::new(r), m))
}

/// One quadratic Hensel step: from f = g h (mod m), s g + t h = 1 (mod m)
/// to the same congruences mod m^2, keeping g and h monic.
#[allow(clippy::too_many_arguments)]
fn hensel_step(
    f: &IntPoly,
    g: &IntPoly,
    h: &IntPoly,
    s: &IntPoly,
    t: &IntPoly,
    m: &BigInt,
) -> (IntPoly, IntPoly, IntPoly, IntPoly) {
    let m2 = m * m;
    let e = reduce_sym(&f.sub(&g.mul(h)), &m2);
    let (q, r) = divmod_monic_mod(&s.mul(&e), h, &m2);
    let g1 = reduce_sym(&g.add(&t.mul(&e)).add(&q.mul(g)), &m2);
    let h1 = reduce_sym(&h.add(&r), &m2);
    let b = reduce_sym(&s.mul(&g1).add(&t.mul(&h1)).sub(&IntPoly::one()), &m2);
    let (c, d) = divmod_monic_mod(&s.mul(&b), &h1, &m2);
    let s1 = reduce_sym(&s.sub(&d), &m2);
    let t1 = reduce_sym(&t.sub(&t.mul(&b)).sub(&c.mul(&g1)), &m2);
    (g1, h1, s1, t1)
}

/// Lifts the modular factorization of a monic squarefree f past `target`,
/// returning the factors modulo the final p-power together with that power.
fn hensel_tree(f: &IntPoly, modular: &[Vec<u64>], p: u64, target: &BigInt) -> (Vec<IntPoly>, BigInt) {
    // final modulus: smallest p^(2^j) >= target, shared by all leaves
    let mut final_m = BigInt::from(p);
    while &final_m < target {
        final_m = &final_m * &final_m;
    }
    let mut out = Vec::new();
    lift_rec(f, modular, p, &final_m, &mut out);
    (out, final_m)
}

fn lift_rec(f: &IntPoly, modular: &[Vec<u64>], p: u64, final_m: &BigInt, out: &mut Vec<IntPoly>) {
    if modular.len() == 1 {
        out.push(reduce_sym(f, final_m));
        return;
    }
    let (left, right) = modular.split_at(modular.len() / 2);
    let prod = |fs: &[Vec<u64>]| -> Vec<u64> {
        fs.iter().fold(vec![1u64], |acc, f| modp::mul(&acc, f, p))
    };
    let g0 = prod(left);
    let h0 = prod(right);
    let (s0, t0) = modp::bezout(&g0, &h0, p);
    let mut g = reduce_sym(&to_int(&g0), &BigInt::from(p));
    let mut h = reduce_sym(&to_int(&h0), &BigInt::from(p));
    let mut s = reduce_sym(&to_int(&s0), &BigInt::from(p));
    let mut t = reduce_sym(&to_int(&t0), &BigInt::from(p));
    let mut m = BigInt::from(p);
    while &m < final_m {
        let (g1, h1, s1, t1) = hensel_step(f, &g, &h, &s, &t, &m);
        g = g1;
        h = h1;
        s = s1;
        t = t1;
        m = &m * &m;
    }
    lift_rec(&g, left, p, final_m, out);
    lift_rec(&h, right, p, final_m, out);
}

// ---------------------------------------------------------------------------
// Zassenhaus driver
// ---------------------------------------------------------------------------

/// 2-norm bound: any factor of f has coefficients below 2^deg * |f|_2.
fn mignotte_bound(f: &IntPoly) -> BigInt {
    let norm_sq: BigInt = f.coeffs().iter().map(|c| c * c).sum();
    let norm = norm_sq.sqrt() + 1;
    (norm << f.degree()) + 1
}

/// Factors a primitive squarefree polynomial into primitive irreducibles
/// with positive leading coefficients.
fn factor_squarefree(g: &IntPoly) -> Vec<IntPoly> {
    let g = if g.leading().is_negative() { g.neg() } else { g.clone() };
    if g.degree() <= 1 {
        return vec![g];
    }
    // monicize: G(x) = lc^(d-1) g(x/lc) is monic with the same splitting
    let lc = g.leading();
    let monic_g = g
        .scale_argument_cleared(&lc)
        .try_div_exact(&IntPoly::constant(lc.clone()))
        .expect("monicization is exact");

    // smallest prime >= 5 keeping G squarefree
    let mut p = 5u64;
    let squarefree_mod = |p: u64| -> bool {
        let gp: Vec<u64> = monic_g
            .coeffs()
            .iter()
            .map(|c| c.mod_floor(&BigInt::from(p)).try_into().unwrap())
            .collect();
        let mut gp = gp;
        modp::trim(&mut gp);
        if modp::deg(&gp) != monic_g.degree() {
            return false; // cannot happen for monic, kept for clarity
        }
        let d = modp::deriv(&gp, p);
        if d.is_empty() {
            return false;
        }
        modp::deg(&modp::gcd(&gp, &d, p)) == 0
    };
    while !is_prime_u64(p) || !squarefree_mod(p) {
        p += 1;
    }

    let gp: Vec<u64> = monic_g
        .coeffs()
        .iter()
        .map(|c| c.mod_floor(&BigInt::from(p)).try_into().unwrap())
        .collect();
    let modular = berlekamp(&gp, p);
    if modular.len() == 1 {
        return vec![g];
    }

    // lift past twice the Mignotte bound of the monic model
    let bound = mignotte_bound(&monic_g) * 2;
    let (lifted, big_m) = hensel_tree(&monic_g, &modular, p, &bound);

    // exhaustive subset recombination
    let mut remaining = monic_g.clone();
    let mut avail = lifted;
    let mut monic_factors = Vec::new();
    let mut size = 1usize;
    'outer: while 2 * size <= avail.len() {
        let idxs: Vec<usize> = (0..avail.len()).collect();
        for combo in combinations(&idxs, size) {
            let mut cand = IntPoly::one();
            for &i in &combo {
                cand = reduce_sym(&cand.mul(&avail[i]), &big_m);
            }
            if let Some(quot) = remaining.try_div_exact(&cand) {
                monic_factors.push(cand);
                remaining = quot;
                let mut keep = Vec::new();
                for (i, f) in avail.into_iter().enumerate() {
                    if !combo.contains(&i) {
                        keep.push(f);
                    }
                }
                avail = keep;
                continue 'outer;
            }
        }
        size += 1;
    }
    if remaining.degree() > 0 {
        monic_factors.push(remaining);
    }

    // map factors of the monic model back to primitive factors of g
    let mut out: Vec<IntPoly> = monic_factors
        .into_iter()
        .map(|h| {
            let mapped = h.scale_variable(&lc).primitive_part();
            if mapped.leading().is_negative() {
                mapped.neg()
            } else {
                mapped
            }
        })
        .collect();
    out.sort_by(|a, b| (a.degree(), a.coeffs()).cmp(&(b.degree(), b.coeffs())));
    let product = out.iter().fold(IntPoly::one(), |acc, f| acc.mul(f));
    assert_eq!(product, g, "recombined factors must multiply back to the input");
    out
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut combo: Vec<usize> = (0..k).collect();
    if k == 0 || k > items.len() {
        return out;
    }
    loop {
        out.push(combo.iter().map(|&i| items[i]).collect());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if combo[i] != i + items.len() - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        combo[i] += 1;
        for j in i + 1..k {
            combo[j] = combo[j - 1] + 1;
        }
    }
}

fn is_prime_u64(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials
// ---------------------------------------------------------------------------

pub fn euler_phi(mut m: u64) -> u64 {
    let mut result = m;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            result -= result / d;
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// The m-th cyclotomic polynomial, by dividing x^m - 1 by the proper-divisor
/// cyclotomics.
pub fn cyclotomic_poly(m: u64) -> IntPoly {
    let mut xm1 = vec![BigInt::zero(); m as usize + 1];
    xm1[0] = -BigInt::one();
    xm1[m as usize] = BigInt::one();
    let mut acc = IntPoly::new(xm1);
    for d in 1..m {
        if m % d == 0 {
            acc = acc
                .try_div_exact(&cyclotomic_poly(d))
                .expect("cyclotomic division is exact");
        }
    }
    acc
}

/// Tests whether a monic irreducible polynomial equals some cyclotomic
/// polynomial; the bounded search uses phi(m) >= sqrt(m/2), i.e.
/// m <= 2 d^2 + 2.
pub fn cyclotomic_index(g: &IntPoly) -> Option<u64> {
    if g.is_zero() || !g.leading().is_one() {
        return None;
    }
    let d = g.degree() as u64;
    if d == 0 {
        return None;
    }
    for m in 1..=(2 * d * d + 2) {
        if euler_phi(m) == d && *g == cyclotomic_poly(m) {
            return Some(m);
        }
    }
    None
}
