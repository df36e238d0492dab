//! Truncated Laurent series in one variable `t` over an exact coefficient
//! field, plus the local expansion of a Weierstrass curve at infinity.
//!
//! The series type tracks an absolute precision bound: coefficients of t^k
//! are known for all k < prec. That is enough to expand the fiber sections
//! through any fixed order, and mismatching precisions propagate safely.

use crate::coeff::CoeffField;

#[derive(Clone, Debug)]
pub struct Series<F: CoeffField> {
    field: F,
    /// Exponent of the first stored coefficient.
    val: i64,
    /// Coefficients of t^val, t^(val+1), ...; may include leading zeros.
    coeffs: Vec<F::El>,
    /// Coefficients are known for exponents < prec.
    prec: i64,
}

impl<F: CoeffField> Series<F> {
    pub fn zero(field: F, prec: i64) -> Series<F> {
        Series { field, val: prec, coeffs: Vec::new(), prec }
    }

    pub fn constant(field: F, c: F::El, prec: i64) -> Series<F> {
        Series::monomial(field, c, 0, prec)
    }

    /// c * t^k.
    pub fn monomial(field: F, c: F::El, k: i64, prec: i64) -> Series<F> {
        if k >= prec || field.is_zero(&c) {
            return Series::zero(field, prec);
        }
        Series { field, val: k, coeffs: vec![c], prec }
    }

    pub fn prec(&self) -> i64 {
        self.prec
    }

    /// Coefficient of t^k; panics if k is beyond the known precision.
    pub fn coeff(&self, k: i64) -> F::El {
        assert!(k < self.prec, "coefficient of t^{k} beyond precision {}", self.prec);
        if k < self.val || k - self.val >= self.coeffs.len() as i64 {
            self.field.zero()
        } else {
            self.coeffs[(k - self.val) as usize].clone()
        }
    }

    /// Smallest exponent with a nonzero known coefficient, if any.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs
            .iter()
            .position(|c| !self.field.is_zero(c))
            .map(|i| self.val + i as i64)
    }

    pub fn is_zero_to_prec(&self) -> bool {
        self.valuation().is_none()
    }

    pub fn shift(&self, k: i64) -> Series<F> {
        Series {
            field: self.field.clone(),
            val: self.val + k,
            coeffs: self.coeffs.clone(),
            prec: self.prec + k,
        }
    }

    pub fn truncate(&self, prec: i64) -> Series<F> {
        let prec = prec.min(self.prec);
        let keep = ((prec - self.val).max(0) as usize).min(self.coeffs.len());
        Series {
            field: self.field.clone(),
            val: self.val,
            coeffs: self.coeffs[..keep].to_vec(),
            prec,
        }
    }

    pub fn add(&self, other: &Series<F>) -> Series<F> {
        let f = &self.field;
        let prec = self.prec.min(other.prec);
        let val = self.val.min(other.val).min(prec);
        let len = (prec - val).max(0) as usize;
        let mut coeffs = vec![f.zero(); len];
        for (i, c) in coeffs.iter_mut().enumerate() {
            let k = val + i as i64;
            *c = f.add(&self.coeff_raw(k), &other.coeff_raw(k));
        }
        Series { field: f.clone(), val, coeffs, prec }
    }

    fn coeff_raw(&self, k: i64) -> F::El {
        if k < self.val || k - self.val >= self.coeffs.len() as i64 {
            self.field.zero()
        } else {
            self.coeffs[(k - self.val) as usize].clone()
        }
    }

    pub fn neg(&self) -> Series<F> {
        Series {
            field: self.field.clone(),
            val: self.val,
            coeffs: self.coeffs.iter().map(|c| self.field.neg(c)).collect(),
            prec: self.prec,
        }
    }

    pub fn sub(&self, other: &Series<F>) -> Series<F> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &F::El) -> Series<F> {
        Series {
            field: self.field.clone(),
            val: self.val,
            coeffs: self.coeffs.iter().map(|x| self.field.mul(x, c)).collect(),
            prec: self.prec,
        }
    }

    pub fn mul(&self, other: &Series<F>) -> Series<F> {
        let f = &self.field;
        // With unknown tails, the product is reliable to the smaller of
        // a.prec + b.val and b.prec + a.val (valuations of coefficient rows
        // that the unknown parts could disturb).
        let a_val = self.valuation().unwrap_or(self.prec);
        let b_val = other.valuation().unwrap_or(other.prec);
        let prec = (self.prec + b_val).min(other.prec + a_val);
        let val = a_val + b_val;
        if val >= prec {
            return Series::zero(f.clone(), prec);
        }
        let len = (prec - val) as usize;
        let mut coeffs = vec![f.zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            let ka = self.val + i as i64;
            for (j, b) in other.coeffs.iter().enumerate() {
                let k = ka + other.val + j as i64;
                if k < val || k >= prec {
                    continue;
                }
                let idx = (k - val) as usize;
                coeffs[idx] = f.add(&coeffs[idx], &f.mul(a, b));
            }
        }
        Series { field: f.clone(), val, coeffs, prec }
    }

    /// Multiplicative inverse; requires a nonzero leading coefficient.
    pub fn inverse(&self) -> Series<F> {
        let f = &self.field;
        let v = self.valuation().expect("cannot invert a series that is zero to precision");
        let n = (self.prec - v) as usize;
        let lead = self.coeff_raw(v);
        let lead_inv = f.inv(&lead);
        // u = self / (lead * t^v) has constant term 1; invert u by the
        // standard recursion, then shift back.
        let u: Vec<F::El> = (0..n)
            .map(|i| f.mul(&self.coeff_raw(v + i as i64), &lead_inv))
            .collect();
        let mut w = vec![f.zero(); n];
        w[0] = f.one();
        for k in 1..n {
            let mut acc = f.zero();
            for j in 1..=k {
                acc = f.add(&acc, &f.mul(&u[j], &w[k - j]));
            }
            w[k] = f.neg(&acc);
        }
        let coeffs: Vec<F::El> = w.into_iter().map(|c| f.mul(&c, &lead_inv)).collect();
        Series {
            field: f.clone(),
            val: -v,
            coeffs,
            prec: -v + n as i64,
        }
    }

}

/// Local expansion of y^2 = x^3 + c2 x^2 + c1 x + c0 at the point at
/// infinity, in the parameter t = x/y:
/// x = t^-2 (1 + O(t^2)), y = t^-3 (1 + O(t^2)).
pub struct CurveExpansion<F: CoeffField> {
    pub x: Series<F>,
    pub y: Series<F>,
}

pub fn curve_expansion<F: CoeffField>(field: F, cubic: &[i64; 3], prec: i64) -> CurveExpansion<F> {
    let f = field.clone();
    let c0 = Series::constant(f.clone(), f.from_int(cubic[0]), prec + 8);
    let c1 = Series::constant(f.clone(), f.from_int(cubic[1]), prec + 8);
    let c2 = Series::constant(f.clone(), f.from_int(cubic[2]), prec + 8);
    let one = Series::constant(f.clone(), f.one(), prec + 8);
    // Write x = t^-2 v with v = 1 + O(t^2); substituting into the curve and
    // clearing x^2 gives v = 1 - c2 t^2 - c1 t^4 / v - c0 t^6 / v^2, which
    // converges t-adically under iteration.
    let mut v = one.clone();
    for _ in 0..(prec / 2 + 4) {
        let vi = v.inverse();
        let vi2 = vi.mul(&vi);
        let t2 = c2.shift(2);
        let t4 = c1.shift(4).mul(&vi);
        let t6 = c0.shift(6).mul(&vi2);
        v = one.sub(&t2).sub(&t4).sub(&t6);
    }
    let x = v.shift(-2).truncate(prec);
    let y = v.shift(-3).truncate(prec);
    CurveExpansion { x, y }
}

/// Degree-6 binary forms in (Z0', Z1) with series coefficients: slot j holds
/// the coefficient of Z0'^j Z1^(6-j).
pub type FormSeries<F> = [Series<F>; 7];

/// The seven fiber sections, expanded near the fiber over the group identity
/// after the substitution Z0 = t Z0', and divided by t^2. Requires alpha to
/// be a root of the cubic; `a_const` is c'(alpha).
pub fn section_expansions<F: CoeffField>(
    field: F,
    cubic: &[i64; 3],
    alpha: i64,
    prec: i64,
) -> [FormSeries<F>; 7] {
    let f = field.clone();
    let CurveExpansion { x, y } = curve_expansion(f.clone(), cubic, prec + 10);
    let alpha_s = Series::constant(f.clone(), f.from_int(alpha), prec + 10);
    // c'(alpha) = 3 alpha^2 + 2 c2 alpha + c1
    let a_val = f.from_int(3 * alpha * alpha + 2 * cubic[2] * alpha + cubic[1]);

    let dx0 = x.sub(&alpha_s); // x - alpha
    let dx0_inv = dx0.inverse();
    let dx1 = dx0_inv.scale(&a_val); // A / (x - alpha)
    let y0 = y.clone();
    let y1 = y.mul(&dx0_inv).mul(&dx0_inv).scale(&f.neg(&a_val)); // -A y / (x-alpha)^2

    let zero = |p: i64| Series::zero(f.clone(), p);
    let pr = prec;
    let mut out: Vec<FormSeries<F>> = Vec::with_capacity(7);
    // psi_i written in slots of Z0^j Z1^(6-j); substituting Z0 = t Z0'
    // multiplies slot j by t^j, and chi_i = psi_i / t^2.
    let slotify = |entries: Vec<(usize, Series<F>)>| -> FormSeries<F> {
        let mut slots: FormSeries<F> = [
            zero(pr), zero(pr), zero(pr), zero(pr), zero(pr), zero(pr), zero(pr),
        ];
        for (j, s) in entries {
            slots[j] = s.shift(j as i64 - 2).truncate(pr);
        }
        slots
    };

    out.push(slotify(vec![(6, dx0.clone()), (0, dx1.clone())]));
    out.push(slotify(vec![(6, dx0.mul(&dx0)), (0, dx1.mul(&dx1))]));
    out.push(slotify(vec![(5, dx0.clone()), (1, dx1.clone())]));
    out.push(slotify(vec![(5, y0.clone()), (1, y1.clone())]));
    out.push(slotify(vec![
        (4, Series::constant(f.clone(), f.one(), prec + 10)),
        (2, Series::constant(f.clone(), f.one(), prec + 10)),
    ]));
    out.push(slotify(vec![(4, dx0.clone()), (2, dx1.clone())]));
    out.push(slotify(vec![(3, Series::constant(f.clone(), f.one(), prec + 10))]));

    out.try_into().ok().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::QQ;
    use num_rational::BigRational;
    use num_traits::{One, Zero};

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn curve_expansion_satisfies_the_curve() {
        // y^2 = x^3 - x^2 + x - 1
        let cubic = [-1i64, 1, -1];
        let CurveExpansion { x, y } = curve_expansion(QQ, &cubic, 10);
        let x2 = x.mul(&x);
        let x3 = x2.mul(&x);
        let rhs = x3
            .add(&x2.scale(&q(-1)))
            .add(&x.scale(&q(1)))
            .add(&Series::constant(QQ, q(-1), 10));
        let lhs = y.mul(&y);
        let diff = lhs.sub(&rhs);
        assert!(diff.is_zero_to_prec(), "curve relation fails: {diff:?}");
        // t = x / y must hold as well
        let t = x.mul(&y.inverse());
        assert_eq!(t.coeff(1), BigRational::one());
        for k in [-1i64, 0, 2, 3] {
            assert!(t.coeff(k).is_zero());
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let s = Series::monomial(QQ, q(3), -2, 6).add(&Series::monomial(QQ, q(5), 1, 6));
        let prod = s.mul(&s.inverse());
        assert_eq!(prod.coeff(0), BigRational::one());
        for k in 1..prod.prec() {
            assert!(prod.coeff(k).is_zero());
        }
    }
}
