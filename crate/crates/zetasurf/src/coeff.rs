//! Coefficient fields for the multivariate polynomial and series layers:
//! F_p with a runtime modulus, and exact rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub trait CoeffField: Clone + PartialEq + std::fmt::Debug + Send + Sync + 'static {
    type El: Clone + PartialEq + std::fmt::Debug + Send + Sync + 'static;

    fn zero(&self) -> Self::El;
    fn one(&self) -> Self::El;
    fn is_zero(&self, a: &Self::El) -> bool;
    fn add(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn sub(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn neg(&self, a: &Self::El) -> Self::El;
    fn mul(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn inv(&self, a: &Self::El) -> Self::El;
    fn from_int(&self, v: i64) -> Self::El;
    fn display(&self, a: &Self::El) -> String;

    fn div(&self, a: &Self::El, b: &Self::El) -> Self::El {
        self.mul(a, &self.inv(b))
    }

    /// Optional rescaling for freshly reduced polynomials (coefficient
    /// anti-swell); returns a multiplier to apply, or None to leave as is.
    fn antiswell_scalar(&self, _cs: &[Self::El]) -> Option<Self::El> {
        None
    }
}

/// The prime field F_p with elements reduced into [0, p).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ModP {
    pub p: u64,
}

impl ModP {
    pub fn new(p: u64) -> ModP {
        assert!(p >= 2);
        ModP { p }
    }
}

impl CoeffField for ModP {
    type El = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero in F_{}", self.p);
        let (mut t, mut new_t): (i128, i128) = (0, 1);
        let (mut r, mut new_r) = (self.p as i128, (*a % self.p) as i128);
        while new_r != 0 {
            let quo = r / new_r;
            (t, new_t) = (new_t, t - quo * new_t);
            (r, new_r) = (new_r, r - quo * new_r);
        }
        ((t % self.p as i128 + self.p as i128) % self.p as i128) as u64
    }
    fn from_int(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn display(&self, a: &u64) -> String {
        a.to_string()
    }
}

/// The rational numbers with exact arbitrary-precision arithmetic.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct QQ;

impl CoeffField for QQ {
    type El = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }
    fn from_int(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn display(&self, a: &BigRational) -> String {
        a.to_string()
    }

    fn antiswell_scalar(&self, cs: &[BigRational]) -> Option<BigRational> {
        if cs.is_empty() {
            return None;
        }
        let mut den_lcm = BigInt::one();
        let mut num_gcd = BigInt::zero();
        for c in cs {
            den_lcm = den_lcm.lcm(c.denom());
            num_gcd = num_gcd.gcd(c.numer());
        }
        if num_gcd.is_zero() {
            return None;
        }
        let scale = BigRational::new(den_lcm, num_gcd.abs());
        if scale.is_one() {
            None
        } else {
            Some(scale)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modp_inverse() {
        let f7 = ModP::new(7);
        for a in 1..7u64 {
            assert_eq!(f7.mul(&a, &f7.inv(&a)), 1);
        }
    }

    #[test]
    fn rational_antiswell_makes_integral_and_primitive() {
        let q = QQ;
        let cs = vec![
            BigRational::new(BigInt::from(4), BigInt::from(6)),
            BigRational::new(BigInt::from(-2), BigInt::from(9)),
        ];
        let s = q.antiswell_scalar(&cs).unwrap();
        let scaled: Vec<BigRational> = cs.iter().map(|c| c * &s).collect();
        assert!(scaled.iter().all(|c| c.denom().is_one()));
        let g = scaled
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c.numer()));
        assert!(g.is_one());
    }
}
