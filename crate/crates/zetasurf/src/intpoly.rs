//! Dense univariate polynomials with exact arbitrary-precision integer
//! coefficients, constant term first.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// A polynomial over Z; `coeffs[i]` multiplies t^i and the last entry is
/// nonzero unless the polynomial is zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl std::fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                1 if a.is_one() => write!(f, "t")?,
                1 => write!(f, "{a} t")?,
                _ if a.is_one() => write!(f, "t^{i}")?,
                _ => write!(f, "{a} t^{i}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> IntPoly {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> IntPoly {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> IntPoly {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> IntPoly {
        IntPoly::new(vec![c])
    }

    pub fn from_i64s(cs: &[i64]) -> IntPoly {
        IntPoly::new(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The monomial c * t^k.
    pub fn monomial(c: BigInt, k: usize) -> IntPoly {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c;
        IntPoly::new(v)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        IntPoly::new(out)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - other.coeff(i));
        }
        IntPoly::new(out)
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, e: u32) -> IntPoly {
        let mut acc = IntPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact quotient self / divisor over Z, or None when the division has a
    /// fractional step or a nonzero remainder.
    pub fn try_div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if self.degree() < divisor.degree() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let dd = divisor.degree();
        let lead = divisor.leading();
        let mut quot = vec![BigInt::zero(); self.degree() - dd + 1];
        for k in (0..quot.len()).rev() {
            let top = rem[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * dc;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::new(quot))
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigInt::from(i + 1))
                .collect(),
        )
    }

    /// Content: gcd of the coefficients, with the sign of the leading one.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        if self.leading().is_negative() {
            -g
        } else {
            g
        }
    }

    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let c = self.content();
        IntPoly::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    /// t^deg * f(1/t): the coefficient sequence reversed.
    pub fn reciprocal(&self) -> IntPoly {
        let mut v = self.coeffs.clone();
        v.reverse();
        IntPoly::new(v)
    }

    /// s^deg * f(t/s) for an integer scale s: coeff_i -> coeff_i s^(deg-i).
    pub fn scale_argument_cleared(&self, s: &BigInt) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let d = self.degree();
        let mut out = Vec::with_capacity(d + 1);
        for (i, c) in self.coeffs.iter().enumerate() {
            out.push(c * s.pow((d - i) as u32));
        }
        IntPoly::new(out)
    }

    /// f(s * t): coeff_i -> coeff_i s^i.
    pub fn scale_variable(&self, s: &BigInt) -> IntPoly {
        let mut out = Vec::with_capacity(self.coeffs.len());
        let mut power = BigInt::one();
        for c in &self.coeffs {
            out.push(c * &power);
            power *= s;
        }
        IntPoly::new(out)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Primitive gcd via the subresultant-free remainder sequence; adequate
    /// for the small degrees this crate handles.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.is_zero() {
            return b;
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        // normalize to positive leading coefficient
        if a.leading().is_negative() {
            a.neg()
        } else {
            a
        }
    }

    /// Pseudo-remainder of self by other (lead(other)^k * self mod other).
    fn pseudo_rem(&self, other: &IntPoly) -> IntPoly {
        let d = other.degree();
        let lead = other.leading();
        let mut r = self.clone();
        while !r.is_zero() && r.degree() >= d {
            let k = r.degree() - d;
            let top = r.leading();
            let cancel = other.mul(&IntPoly::monomial(top, k));
            r = r.scale(&lead).sub(&cancel);
        }
        r
    }

    pub fn to_i128_vec(&self) -> Vec<i128> {
        self.coeffs
            .iter()
            .map(|c| i128::try_from(c).expect("coefficient exceeds i128"))
            .collect()
    }
}

impl Serialize for IntPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_i128_vec().serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<IntPoly, D::Error> {
        let v: Vec<i128> = Vec::deserialize(d)?;
        Ok(IntPoly::new(v.into_iter().map(BigInt::from).collect()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_division() {
        let f = IntPoly::from_i64s(&[1, -5, 6]); // (1-2t)(1-3t)
        let g = IntPoly::from_i64s(&[1, -2]);
        let q = f.try_div_exact(&g).unwrap();
        assert_eq!(q, IntPoly::from_i64s(&[1, -3]));
        assert!(f.try_div_exact(&IntPoly::from_i64s(&[1, -7])).is_none());
        // non-integral quotient step
        assert!(IntPoly::from_i64s(&[0, 1]).try_div_exact(&IntPoly::from_i64s(&[0, 2])).is_none());
    }

    #[test]
    fn gcd_of_products() {
        // gcd is normalized to a positive leading coefficient
        let a = IntPoly::from_i64s(&[1, -2]).mul(&IntPoly::from_i64s(&[3, 1]));
        let b = IntPoly::from_i64s(&[1, -2]).mul(&IntPoly::from_i64s(&[5, 7]));
        assert_eq!(a.gcd(&b), IntPoly::from_i64s(&[-1, 2]));
    }

    #[test]
    fn content_and_primitive_part() {
        let f = IntPoly::from_i64s(&[6, -12, 18]);
        assert_eq!(f.content(), BigInt::from(6));
        assert_eq!(f.primitive_part(), IntPoly::from_i64s(&[1, -2, 3]));
        // content carries the sign of the leading coefficient
        let g = IntPoly::from_i64s(&[6, -18]);
        assert_eq!(g.content(), BigInt::from(-6));
        assert_eq!(g.primitive_part(), IntPoly::from_i64s(&[-1, 3]));
    }

    #[test]
    fn argument_scaling() {
        // 9^2 * f(t/9) for f = 1 - t + t^2 is 81 - 9t + t^2
        let f = IntPoly::from_i64s(&[1, -1, 1]);
        assert_eq!(
            f.scale_argument_cleared(&BigInt::from(9)),
            IntPoly::from_i64s(&[81, -9, 1])
        );
        assert_eq!(f.scale_variable(&BigInt::from(3)), IntPoly::from_i64s(&[1, -3, 9]));
        assert_eq!(f.reciprocal(), IntPoly::from_i64s(&[1, -1, 1]));
    }
}
