//! Arithmetic in F_p and F_{p^n} for small odd p and p^n up to 2^20.
//!
//! Elements are stored as base-p packed codes (`Fq`); a [`FieldCtx`] owns the
//! defining modulus together with full discrete-log, antilog and Zech tables,
//! so multiplication is one index addition and addition is one table lookup.
//! The counting kernel works directly in the log domain (see `count`), every
//! other consumer goes through the code-level operations here.

use crate::error::{Error, Result};

/// Sentinel log index representing the zero element in the log domain.
pub const LOG_ZERO: u32 = u32::MAX;

/// Largest supported field size; all fields this crate needs stay below it.
pub const MAX_Q: u64 = 1 << 20;

/// An element of F_{p^n}, packed as sum(repr[i] * p^i) with digits in [0, p).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Fq(pub u32);

impl Fq {
    pub const ZERO: Fq = Fq(0);
    pub const ONE: Fq = Fq(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// A constructed finite field F_{p^n} with table-accelerated arithmetic.
///
/// Immutable after construction and freely shareable across threads.
#[derive(Debug)]
pub struct FieldCtx {
    p: u64,
    n: u32,
    q: u64,
    /// Monic irreducible modulus, constant term first, length n + 1.
    modulus: Vec<u64>,
    /// exp[i] = code of g^i for 0 <= i < 2*(q-1); doubled to skip reductions.
    exp: Vec<u32>,
    /// log[code] = i with g^i = code; log[0] = LOG_ZERO.
    log: Vec<u32>,
    /// zech[k] = log(1 + g^k), LOG_ZERO where 1 + g^k = 0.
    zech: Vec<u32>,
    generator: Fq,
}

fn is_prime(p: u64) -> bool {
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

fn factorize(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            out.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

// Dense polynomial helpers over F_p, constant term first. Only used during
// construction, so clarity beats speed here.
mod ppoly {
    pub fn trim(v: &mut Vec<u64>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    pub fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        let mut r: Vec<u64> = a.to_vec();
        trim(&mut r);
        let dm = m.len() - 1;
        let lead_inv = inv_mod(m[dm], p);
        while r.len() > dm {
            let dr = r.len() - 1;
            let c = (r[dr] * lead_inv) % p;
            for i in 0..=dm {
                let idx = dr - dm + i;
                r[idx] = (r[idx] + p - (c * m[i]) % p) % p;
            }
            trim(&mut r);
        }
        r
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

    pub fn mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        rem(&mul(a, b, p), m, p)
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
        if let Some(&lead) = x.last() {
            let li = inv_mod(lead, p);
            for c in &mut x {
                *c = (*c * li) % p;
            }
        }
        x
    }

    pub fn inv_mod(a: u64, p: u64) -> u64 {
        // p is a small prime; extended Euclid.
        let (mut t, mut new_t): (i64, i64) = (0, 1);
        let (mut r, mut new_r) = (p as i64, (a % p) as i64);
        while new_r != 0 {
            let quo = r / new_r;
            (t, new_t) = (new_t, t - quo * new_t);
            (r, new_r) = (new_r, r - quo * new_r);
        }
        ((t % p as i64 + p as i64) % p as i64) as u64
    }

    /// x^(p^k) mod m, by k successive p-th powers.
    pub fn pow_frob(k: u32, m: &[u64], p: u64) -> Vec<u64> {
        let mut cur = vec![0, 1]; // x
        for _ in 0..k {
            cur = pow(&cur, p, m, p);
        }
        cur
    }

    pub fn pow(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
        let mut acc = vec![1u64];
        let mut b = rem(base, m, p);
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(&acc, &b, m, p);
            }
            b = mulmod(&b, &b, m, p);
            e >>= 1;
        }
        acc
    }
}

/// Checks f (monic, degree n >= 2) for irreducibility over F_p. Returns the
/// degree k of a witness factor class when reducible.
fn irreducible_check(f: &[u64], p: u64) -> std::result::Result<(), usize> {
    let n = f.len() - 1;
    for k in 1..=n / 2 {
        // gcd(x^(p^k) - x, f) != 1 exactly when f has an irreducible factor
        // of degree dividing k.
        let xpk = ppoly::pow_frob(k as u32, f, p);
        let mut diff = xpk;
        if diff.len() < 2 {
            diff.resize(2, 0);
        }
        diff[1] = (diff[1] + p - 1) % p;
        ppoly::trim(&mut diff);
        let g = ppoly::gcd(f, &diff, p);
        if g.len() != 1 {
            return Err(k);
        }
    }
    Ok(())
}

impl FieldCtx {
    /// Builds F_{p^n}. When `modulus` is omitted the lexicographically
    /// smallest monic irreducible (ordered by packed code of the non-leading
    /// coefficients) is chosen, so repeated runs agree.
    pub fn new(p: u64, n: u32, modulus: Option<Vec<u64>>) -> Result<FieldCtx> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p == 2 {
            return Err(Error::CharTwo);
        }
        assert!(n >= 1, "extension degree must be at least 1");
        let mut q: u64 = 1;
        for _ in 0..n {
            q = q.checked_mul(p).filter(|&v| v <= MAX_Q).ok_or({
                Error::FieldTooLarge(p.saturating_pow(n))
            })?;
        }

        let modulus = match modulus {
            Some(m) => {
                let mut m = m;
                ppoly::trim(&mut m);
                if m.len() != n as usize + 1 || m[n as usize] != 1 {
                    return Err(Error::BadModulusShape {
                        expected: n as usize,
                        got: m.len().saturating_sub(1),
                    });
                }
                for c in &mut m {
                    *c %= p;
                }
                if n > 1 {
                    irreducible_check(&m, p)
                        .map_err(|k| Error::ReducibleModulus { factor_degree: k })?;
                }
                m
            }
            None => Self::smallest_irreducible(p, n),
        };

        let mut ctx = FieldCtx {
            p,
            n,
            q,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
            zech: Vec::new(),
            generator: Fq::ZERO,
        };
        ctx.build_tables();
        Ok(ctx)
    }

    fn smallest_irreducible(p: u64, n: u32) -> Vec<u64> {
        if n == 1 {
            return vec![0, 1]; // x
        }
        let q = p.pow(n);
        for code in 0..q {
            let mut f = Vec::with_capacity(n as usize + 1);
            let mut c = code;
            for _ in 0..n {
                f.push(c % p);
                c /= p;
            }
            f.push(1);
            if irreducible_check(&f, p).is_ok() {
                return f;
            }
        }
        unreachable!("an irreducible of every degree exists over F_p");
    }

    fn build_tables(&mut self) {
        let q = self.q as usize;
        let ord = q - 1;
        // Find the smallest generator of the multiplicative group.
        let factors = factorize(ord as u64);
        let gen = (2..self.q)
            .map(Fq::code)
            .find(|&g| {
                factors
                    .iter()
                    .all(|&r| self.pow_poly(g, ord as u64 / r) != Fq::ONE)
            })
            .expect("multiplicative group of a finite field is cyclic");
        self.generator = gen;

        let mut exp = vec![0u32; 2 * ord];
        let mut log = vec![LOG_ZERO; q];
        let mut cur = Fq::ONE;
        for (i, slot) in exp.iter_mut().enumerate().take(ord) {
            *slot = cur.0;
            log[cur.0 as usize] = i as u32;
            cur = self.mul_poly(cur, gen);
        }
        debug_assert_eq!(cur, Fq::ONE, "generator order mismatch");
        for i in 0..ord {
            exp[ord + i] = exp[i];
        }
        let mut zech = vec![LOG_ZERO; ord];
        for (k, slot) in zech.iter_mut().enumerate() {
            let s = self.add(Fq::ONE, Fq(exp[k]));
            *slot = log[s.0 as usize];
        }
        self.exp = exp;
        self.log = log;
        self.zech = zech;
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Multiplicative group order q - 1.
    pub fn ord(&self) -> u64 {
        self.q - 1
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn generator(&self) -> Fq {
        self.generator
    }

    pub fn elements(&self) -> impl Iterator<Item = Fq> {
        (0..self.q as u32).map(Fq)
    }

    pub fn decode(&self, a: Fq) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.n as usize);
        let mut c = a.0 as u64;
        for _ in 0..self.n {
            out.push(c % self.p);
            c /= self.p;
        }
        out
    }

    pub fn encode(&self, digits: &[u64]) -> Fq {
        assert!(digits.len() <= self.n as usize, "too many digits");
        let mut code = 0u64;
        for &d in digits.iter().rev() {
            code = code * self.p + d % self.p;
        }
        Fq(code as u32)
    }

    /// Image of an integer under Z -> F_p -> F_{p^n}.
    pub fn from_int(&self, v: i64) -> Fq {
        let r = v.rem_euclid(self.p as i64) as u32;
        Fq(r)
    }

    pub fn add(&self, a: Fq, b: Fq) -> Fq {
        let (mut x, mut y) = (a.0 as u64, b.0 as u64);
        let mut out = 0u64;
        let mut scale = 1u64;
        for _ in 0..self.n {
            let d = (x % self.p + y % self.p) % self.p;
            out += d * scale;
            scale *= self.p;
            x /= self.p;
            y /= self.p;
        }
        Fq(out as u32)
    }

    pub fn neg(&self, a: Fq) -> Fq {
        let mut x = a.0 as u64;
        let mut out = 0u64;
        let mut scale = 1u64;
        for _ in 0..self.n {
            let d = (self.p - x % self.p) % self.p;
            out += d * scale;
            scale *= self.p;
            x /= self.p;
        }
        Fq(out as u32)
    }

    pub fn sub(&self, a: Fq, b: Fq) -> Fq {
        self.add(a, self.neg(b))
    }

    /// Table-based multiplication: one index addition plus a lookup.
    pub fn mul(&self, a: Fq, b: Fq) -> Fq {
        if a.is_zero() || b.is_zero() {
            return Fq::ZERO;
        }
        let la = self.log[a.0 as usize] as usize;
        let lb = self.log[b.0 as usize] as usize;
        Fq(self.exp[la + lb])
    }

    /// Reference multiplication through the polynomial basis; the tables are
    /// validated against this path.
    pub fn mul_poly(&self, a: Fq, b: Fq) -> Fq {
        let da = self.decode(a);
        let db = self.decode(b);
        let prod = ppoly::mulmod(&da, &db, &self.modulus, self.p);
        self.encode(&prod)
    }

    pub fn inv(&self, a: Fq) -> Fq {
        assert!(!a.is_zero(), "inverse of zero");
        let l = self.log[a.0 as usize] as usize;
        let ord = self.q as usize - 1;
        Fq(self.exp[(ord - l) % ord])
    }

    pub fn div(&self, a: Fq, b: Fq) -> Fq {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: Fq, e: u64) -> Fq {
        if a.is_zero() {
            return if e == 0 { Fq::ONE } else { Fq::ZERO };
        }
        let ord = self.q - 1;
        let l = self.log[a.0 as usize] as u64;
        Fq(self.exp[(l * (e % ord) % ord) as usize])
    }

    fn pow_poly(&self, a: Fq, mut e: u64) -> Fq {
        let mut acc = Fq::ONE;
        let mut b = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_poly(acc, b);
            }
            b = self.mul_poly(b, b);
            e >>= 1;
        }
        acc
    }

    /// a^(p^k); the geometric Frobenius iterated k times.
    pub fn frobenius(&self, a: Fq, k: u32) -> Fq {
        if a.is_zero() {
            return a;
        }
        let ord = self.q - 1;
        let mut l = self.log[a.0 as usize] as u64;
        for _ in 0..k % self.n {
            l = l * self.p % ord;
        }
        Fq(self.exp[l as usize])
    }

    /// The quadratic character a^((q-1)/2) read in {-1, 0, +1}.
    pub fn quadratic_character(&self, a: Fq) -> i32 {
        if a.is_zero() {
            return 0;
        }
        let r = self.pow(a, (self.q - 1) / 2);
        if r == Fq::ONE {
            1
        } else {
            debug_assert_eq!(r, self.neg(Fq::ONE));
            -1
        }
    }

    /// A square root of `a`, when one exists. For nonzero `a` the returned
    /// root is g^(log(a)/2), which fixes a deterministic choice of sign.
    pub fn sqrt(&self, a: Fq) -> Option<Fq> {
        if a.is_zero() {
            return Some(Fq::ZERO);
        }
        let l = self.log[a.0 as usize];
        if l % 2 != 0 {
            return None;
        }
        Some(Fq(self.exp[(l / 2) as usize]))
    }

    /// Discrete log of a nonzero element; `LOG_ZERO` for zero.
    pub fn log_of(&self, a: Fq) -> u32 {
        self.log[a.0 as usize]
    }

    pub fn exp_of(&self, l: u64) -> Fq {
        Fq(self.exp[(l % (self.q - 1)) as usize])
    }

    /// Raw tables for the log-domain counting kernel.
    pub fn log_tables(&self) -> (&[u32], &[u32], &[u32]) {
        (&self.log, &self.exp, &self.zech)
    }
}

impl Fq {
    fn code(v: u64) -> Fq {
        Fq(v as u32)
    }
}

/// Ring embedding F_{p^m} -> F_{p^n} for m | n, determined by the smallest
/// root of the source modulus in the target field. The image of F_{p^m} is
/// exactly the fixed set of Frobenius^m.
pub struct Embedding<'a> {
    src: &'a FieldCtx,
    dst: &'a FieldCtx,
    root: Fq,
}

impl<'a> Embedding<'a> {
    pub fn new(src: &'a FieldCtx, dst: &'a FieldCtx) -> Result<Embedding<'a>> {
        if src.p != dst.p || dst.n % src.n != 0 {
            return Err(Error::NoEmbedding {
                p: src.p,
                m: src.n,
                n: dst.n,
            });
        }
        let root = dst
            .elements()
            .find(|&t| {
                // Horner evaluation of the source modulus at t.
                let mut acc = Fq::ZERO;
                for &c in src.modulus.iter().rev() {
                    acc = dst.add(dst.mul(acc, t), dst.from_int(c as i64));
                }
                acc.is_zero()
            })
            .expect("the source modulus splits in any extension of degree a multiple of m");
        Ok(Embedding { src, dst, root })
    }

    pub fn apply(&self, a: Fq) -> Fq {
        let digits = self.src.decode(a);
        let mut acc = Fq::ZERO;
        for &d in digits.iter().rev() {
            acc = self.dst.add(self.dst.mul(acc, self.root), self.dst.from_int(d as i64));
        }
        acc
    }
}
