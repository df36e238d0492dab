//! Short Weierstrass curves y^2 = c(x) over F_q: the group law, point
//! enumeration, and point counts via the trace recurrence.

use crate::error::{Error, Result};
use crate::field::{FieldCtx, Fq};

/// A curve y^2 = x^3 + c2 x^2 + c1 x + c0 over a fixed field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Curve {
    /// Non-leading coefficients of the monic cubic, constant term first.
    pub c: [Fq; 3],
}

/// A point on a curve: the group identity or an affine pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CurvePoint {
    Infinity,
    Affine(Fq, Fq),
}

impl CurvePoint {
    pub fn is_infinity(self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }
}

impl Curve {
    /// Validates that c(x) is squarefree over the given field.
    pub fn new(ctx: &FieldCtx, c: [Fq; 3]) -> Result<Curve> {
        let curve = Curve { c };
        if curve.discriminant(ctx).is_zero() {
            return Err(Error::BadReduction { q: ctx.q() });
        }
        Ok(curve)
    }

    pub fn from_ints(ctx: &FieldCtx, c: [i64; 3]) -> Result<Curve> {
        Curve::new(ctx, [ctx.from_int(c[0]), ctx.from_int(c[1]), ctx.from_int(c[2])])
    }

    /// Discriminant of the monic cubic x^3 + a x^2 + b x + c:
    /// 18abc - 4a^3 c + a^2 b^2 - 4b^3 - 27c^2.
    pub fn discriminant(&self, ctx: &FieldCtx) -> Fq {
        let [c0, c1, c2] = self.c;
        let t1 = ctx.mul(ctx.mul(ctx.from_int(18), c2), ctx.mul(c1, c0));
        let t2 = ctx.mul(ctx.from_int(4), ctx.mul(ctx.pow(c2, 3), c0));
        let t3 = ctx.mul(ctx.pow(c2, 2), ctx.pow(c1, 2));
        let t4 = ctx.mul(ctx.from_int(4), ctx.pow(c1, 3));
        let t5 = ctx.mul(ctx.from_int(27), ctx.pow(c0, 2));
        let mut d = ctx.sub(t1, t2);
        d = ctx.add(d, t3);
        d = ctx.sub(d, t4);
        ctx.sub(d, t5)
    }

    pub fn eval_cubic(&self, ctx: &FieldCtx, x: Fq) -> Fq {
        let [c0, c1, c2] = self.c;
        let mut acc = ctx.add(x, c2);
        acc = ctx.add(ctx.mul(acc, x), c1);
        ctx.add(ctx.mul(acc, x), c0)
    }

    /// c'(x) = 3x^2 + 2 c2 x + c1.
    pub fn eval_cubic_derivative(&self, ctx: &FieldCtx, x: Fq) -> Fq {
        let [_, c1, c2] = self.c;
        let mut acc = ctx.mul(ctx.from_int(3), x);
        acc = ctx.add(acc, ctx.mul(ctx.from_int(2), c2));
        ctx.add(ctx.mul(acc, x), c1)
    }

    pub fn contains(&self, ctx: &FieldCtx, pt: CurvePoint) -> bool {
        match pt {
            CurvePoint::Infinity => true,
            CurvePoint::Affine(x, y) => ctx.mul(y, y) == self.eval_cubic(ctx, x),
        }
    }

    pub fn negate(&self, ctx: &FieldCtx, pt: CurvePoint) -> CurvePoint {
        match pt {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine(x, y) => CurvePoint::Affine(x, ctx.neg(y)),
        }
    }

    /// Chord-tangent addition with Infinity as identity.
    pub fn add(&self, ctx: &FieldCtx, p: CurvePoint, q: CurvePoint) -> Result<CurvePoint> {
        if !self.contains(ctx, p) {
            if let CurvePoint::Affine(x, y) = p {
                return Err(Error::OffCurve { x: x.0 as u64, y: y.0 as u64 });
            }
        }
        if !self.contains(ctx, q) {
            if let CurvePoint::Affine(x, y) = q {
                return Err(Error::OffCurve { x: x.0 as u64, y: y.0 as u64 });
            }
        }
        Ok(self.add_unchecked(ctx, p, q))
    }

    pub fn add_unchecked(&self, ctx: &FieldCtx, p: CurvePoint, q: CurvePoint) -> CurvePoint {
        let (x1, y1, x2, y2) = match (p, q) {
            (CurvePoint::Infinity, _) => return q,
            (_, CurvePoint::Infinity) => return p,
            (CurvePoint::Affine(x1, y1), CurvePoint::Affine(x2, y2)) => (x1, y1, x2, y2),
        };
        let slope = if x1 == x2 {
            if y1 != y2 || y1.is_zero() {
                return CurvePoint::Infinity;
            }
            // tangent: (3x^2 + 2 c2 x + c1) / 2y
            let num = self.eval_cubic_derivative(ctx, x1);
            ctx.div(num, ctx.mul(ctx.from_int(2), y1))
        } else {
            ctx.div(ctx.sub(y2, y1), ctx.sub(x2, x1))
        };
        let x3 = ctx.sub(ctx.sub(ctx.mul(slope, slope), self.c[2]), ctx.add(x1, x2));
        let y3 = ctx.sub(ctx.mul(slope, ctx.sub(x1, x3)), y1);
        CurvePoint::Affine(x3, y3)
    }

    /// All points over the context field: Infinity first, then affine points
    /// by ascending x code, with the square root that is itself a square
    /// listed first whenever that distinguishes the two roots.
    pub fn enumerate_points(&self, ctx: &FieldCtx) -> Result<Vec<CurvePoint>> {
        if self.discriminant(ctx).is_zero() {
            return Err(Error::BadReduction { q: ctx.q() });
        }
        let mut out = vec![CurvePoint::Infinity];
        for x in ctx.elements() {
            let v = self.eval_cubic(ctx, x);
            if v.is_zero() {
                out.push(CurvePoint::Affine(x, Fq::ZERO));
            } else if let Some(r) = ctx.sqrt(v) {
                let nr = ctx.neg(r);
                let (first, second) =
                    if ctx.quadratic_character(r) == -1 && ctx.quadratic_character(nr) == 1 {
                        (nr, r)
                    } else {
                        (r, nr)
                    };
                out.push(CurvePoint::Affine(x, first));
                out.push(CurvePoint::Affine(x, second));
            }
        }
        Ok(out)
    }
}

/// Frobenius trace of a curve over F_p, together with the recurrence
/// u_n = a u_{n-1} - p u_{n-2} for power sums of the Frobenius eigenvalues.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct TracePair {
    pub a: i64,
    pub p: u64,
}

impl TracePair {
    pub fn new(a: i64, p: u64) -> TracePair {
        let pair = TracePair { a, p };
        assert!(
            pair.hasse_ok(),
            "trace {a} violates the Hasse bound for p = {p}"
        );
        pair
    }

    pub fn hasse_ok(&self) -> bool {
        (self.a as i128) * (self.a as i128) <= 4 * self.p as i128
    }

    /// From a brute-force count over the prime field: a = p + 1 - #E(F_p).
    pub fn from_prime_count(p: u64, count: u64) -> TracePair {
        TracePair::new(p as i64 + 1 - count as i64, p)
    }

    /// u_n = gamma_1^n + gamma_2^n for the inverse roots of 1 - a t + p t^2.
    pub fn power_sum(&self, n: u32) -> i128 {
        let (mut prev, mut cur) = (2i128, self.a as i128);
        if n == 0 {
            return prev;
        }
        for _ in 1..n {
            let next = self.a as i128 * cur - self.p as i128 * prev;
            prev = cur;
            cur = next;
        }
        cur
    }

    /// #E(F_{p^n}) = p^n + 1 - u_n.
    pub fn count(&self, n: u32) -> i128 {
        (self.p as i128).pow(n) + 1 - self.power_sum(n)
    }
}

/// #E(F_{p^n}) through the trace recurrence, seeded by brute force over F_p.
pub fn count_points(curve_ints: [i64; 3], p: u64, n: u32) -> Result<i128> {
    let base = FieldCtx::new(p, 1, None)?;
    let curve = Curve::from_ints(&base, curve_ints)?;
    let n1 = curve.enumerate_points(&base)?.len() as u64;
    Ok(TracePair::from_prime_count(p, n1).count(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// y^2 = (x-1)(x^2+1) = x^3 - x^2 + x - 1, the designated curve.
    pub const DESIGNATED_CUBIC: [i64; 3] = [-1, 1, -1];

    fn ctx(n: u32) -> FieldCtx {
        FieldCtx::new(3, n, None).unwrap()
    }

    #[test]
    fn designated_curve_over_f3_has_two_points() {
        let f3 = ctx(1);
        let e = Curve::from_ints(&f3, DESIGNATED_CUBIC).unwrap();
        let pts = e.enumerate_points(&f3).unwrap();
        // brute force over the 3 x-values: only (1, 0) plus Infinity
        assert_eq!(pts.len(), 2);
        assert!(pts.contains(&CurvePoint::Affine(Fq::ONE, Fq::ZERO)));
    }

    #[test]
    fn designated_curve_over_f9_has_twelve_points() {
        let f9 = ctx(2);
        let e = Curve::from_ints(&f9, DESIGNATED_CUBIC).unwrap();
        assert_eq!(e.enumerate_points(&f9).unwrap().len(), 12);
    }

    #[test]
    fn counts_match_trace_recurrence() {
        // n = 1: 2, n = 2: 12 (u_2 = -2), n = 10: 59532 (u_10 = -482)
        assert_eq!(count_points(DESIGNATED_CUBIC, 3, 1).unwrap(), 2);
        assert_eq!(count_points(DESIGNATED_CUBIC, 3, 2).unwrap(), 12);
        assert_eq!(count_points(DESIGNATED_CUBIC, 3, 10).unwrap(), 59532);
        let t = TracePair::new(2, 3);
        assert_eq!(t.power_sum(10), -482);
    }

    #[test]
    fn brute_force_agrees_with_recurrence_small_degrees() {
        for n in 1..=3u32 {
            let f = ctx(n);
            let e = Curve::from_ints(&f, DESIGNATED_CUBIC).unwrap();
            let brute = e.enumerate_points(&f).unwrap().len() as i128;
            assert_eq!(brute, count_points(DESIGNATED_CUBIC, 3, n).unwrap());
        }
        // random-ish curves over small prime fields
        let mut state = 12345u64;
        let mut next = |m: u64| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
            ((state >> 33) % m) as i64 - (m / 2) as i64
        };
        let mut tried = 0;
        while tried < 5 {
            let p = [3u64, 5, 7][tried % 3];
            let c = [next(2 * p), next(2 * p), next(2 * p)];
            let base = FieldCtx::new(p, 1, None).unwrap();
            if Curve::from_ints(&base, c).is_err() {
                continue;
            }
            for n in 1..=3u32 {
                let f = FieldCtx::new(p, n, None).unwrap();
                let e = Curve::from_ints(&f, c).unwrap();
                let brute = e.enumerate_points(&f).unwrap().len() as i128;
                assert_eq!(brute, count_points(c, p, n).unwrap(), "curve {c:?} over {p}^{n}");
            }
            tried += 1;
        }
    }

    #[test]
    fn hasse_bound_holds() {
        for &(p, n) in &[(3u64, 1u32), (3, 2), (3, 3), (5, 1), (7, 2)] {
            let f = FieldCtx::new(p, n, None).unwrap();
            let e = match Curve::from_ints(&f, DESIGNATED_CUBIC) {
                Ok(e) => e,
                Err(_) => continue,
            };
            let count = e.enumerate_points(&f).unwrap().len() as f64;
            let q = f.q() as f64;
            assert!((count - q - 1.0).abs() <= 2.0 * q.sqrt() + 1e-9);
        }
    }

    #[test]
    fn two_torsion_translation_is_a_fixed_point_free_involution() {
        let f9 = ctx(2);
        let e = Curve::from_ints(&f9, DESIGNATED_CUBIC).unwrap();
        let c_pt = CurvePoint::Affine(Fq::ONE, Fq::ZERO);
        assert_eq!(e.add(&f9, c_pt, c_pt).unwrap(), CurvePoint::Infinity);
        for pt in e.enumerate_points(&f9).unwrap() {
            let moved = e.add(&f9, pt, c_pt).unwrap();
            assert_ne!(moved, pt);
            assert_eq!(e.add(&f9, moved, c_pt).unwrap(), pt);
        }
    }

    #[test]
    fn identity_and_associativity() {
        let f9 = ctx(2);
        let e = Curve::from_ints(&f9, DESIGNATED_CUBIC).unwrap();
        let pts = e.enumerate_points(&f9).unwrap();
        for &p in &pts {
            assert_eq!(e.add(&f9, p, CurvePoint::Infinity).unwrap(), p);
        }
        let mut state = 99u64;
        let mut pick = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(7);
            pts[(state >> 33) as usize % pts.len()]
        };
        for _ in 0..100 {
            let (a, b, c) = (pick(), pick(), pick());
            let lhs = e.add(&f9, e.add(&f9, a, b).unwrap(), c).unwrap();
            let rhs = e.add(&f9, a, e.add(&f9, b, c).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn frobenius_commutes_with_addition() {
        let f9 = ctx(2);
        let e = Curve::from_ints(&f9, DESIGNATED_CUBIC).unwrap();
        let pts = e.enumerate_points(&f9).unwrap();
        let frob = |pt: CurvePoint| match pt {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine(x, y) => {
                CurvePoint::Affine(f9.frobenius(x, 1), f9.frobenius(y, 1))
            }
        };
        for &a in &pts {
            for &b in &pts {
                assert_eq!(
                    frob(e.add(&f9, a, b).unwrap()),
                    e.add(&f9, frob(a), frob(b)).unwrap()
                );
            }
        }
    }

    #[test]
    fn singular_curve_rejected() {
        let f3 = ctx(1);
        // y^2 = x^3 has zero discriminant
        assert!(Curve::from_ints(&f3, [0, 0, 0]).is_err());
    }

    #[test]
    fn off_curve_addition_rejected() {
        let f3 = ctx(1);
        let e = Curve::from_ints(&f3, DESIGNATED_CUBIC).unwrap();
        let bogus = CurvePoint::Affine(Fq::ZERO, Fq::ONE);
        assert!(e.add(&f3, bogus, CurvePoint::Infinity).is_err());
    }
}
