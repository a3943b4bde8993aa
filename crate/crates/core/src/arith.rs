//! Exact rationals with localization-at-p predicates and reduction to `F_p`.
//!
//! [`Rational`] wraps `num_rational::BigRational`, which keeps every value in
//! lowest terms with a positive denominator. Equality is therefore field
//! comparison.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Rational {
        assert!(den != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_int(v: i64) -> Rational {
        Rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_bigints(num: BigInt, den: BigInt) -> Result<Rational> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    pub fn zero() -> Rational {
        Rational(BigRational::zero())
    }

    pub fn one() -> Rational {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Rational {
        Rational(self.0.abs())
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Rational> {
        if self.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    pub fn pow(&self, e: u32) -> Rational {
        let mut acc = Rational::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `self * 2^k`, the loop factor of diagram multiplication.
    pub fn mul_pow2(&self, k: u32) -> Rational {
        if k == 0 {
            return self.clone();
        }
        let (n, d) = (self.numer().clone() << k as usize, self.denom().clone());
        Rational(BigRational::new(n, d))
    }

    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::zero()
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::from_int(v)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom().is_one() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Rational> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not a rational: {s:?}"));
        let (num, den) = match s.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (s, "1"),
        };
        let num = BigInt::from_str(num).map_err(|_| bad())?;
        let den = BigInt::from_str(den).map_err(|_| bad())?;
        if den.is_negative() {
            return Err(bad());
        }
        Rational::from_bigints(num, den)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Rational::from_str(&s).map_err(serde::de::Error::custom)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $asg:ident, $am:ident) => {
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $m(self, o: &Rational) -> Rational {
                Rational((&self.0).$m(&o.0))
            }
        }
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $m(self, o: Rational) -> Rational {
                Rational(self.0.$m(o.0))
            }
        }
        impl $tr<&Rational> for Rational {
            type Output = Rational;
            fn $m(self, o: &Rational) -> Rational {
                Rational(self.0.$m(&o.0))
            }
        }
        impl $tr<Rational> for &Rational {
            type Output = Rational;
            fn $m(self, o: Rational) -> Rational {
                Rational((&self.0).$m(o.0))
            }
        }
        impl $asg<&Rational> for Rational {
            fn $am(&mut self, o: &Rational) {
                self.0.$am(&o.0);
            }
        }
        impl $asg<Rational> for Rational {
            fn $am(&mut self, o: Rational) {
                self.0.$am(o.0);
            }
        }
    };
}

binop!(Add, add, AddAssign, add_assign);
binop!(Sub, sub, SubAssign, sub_assign);
binop!(Mul, mul, MulAssign, mul_assign);

impl Div<&Rational> for &Rational {
    type Output = Rational;
    fn div(self, o: &Rational) -> Rational {
        assert!(!o.is_zero(), "division by zero");
        Rational(&self.0 / &o.0)
    }
}

impl Div<Rational> for Rational {
    type Output = Rational;
    fn div(self, o: Rational) -> Rational {
        &self / &o
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |a, b| a + b)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |a, b| a + b)
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Accepts only odd primes.
pub fn check_prime(p: u64) -> Result<()> {
    if p > 2 && is_prime(p) {
        Ok(())
    } else {
        Err(Error::InvalidPrime(p))
    }
}

pub fn is_p_integral(q: &Rational, p: u64) -> Result<bool> {
    check_prime(p)?;
    Ok(!q.denom().is_multiple_of(&BigInt::from(p)))
}

/// `a * b^{-1} mod p` for `q = a/b` in lowest terms.
pub fn reduce_mod_p(q: &Rational, p: u64) -> Result<PrimeFieldScalar> {
    if !is_p_integral(q, p)? {
        return Err(Error::NotIntegral { value: q.to_string(), p });
    }
    let pb = BigInt::from(p);
    let a = q.numer().mod_floor(&pb).to_u64().expect("residue fits");
    let b = q.denom().mod_floor(&pb).to_u64().expect("residue fits");
    let a = PrimeFieldScalar { value: a, modulus: p };
    let b = PrimeFieldScalar { value: b, modulus: p };
    Ok(a * b.inv().expect("p does not divide the denominator"))
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PrimeFieldScalar {
    pub value: u64,
    pub modulus: u64,
}

impl PrimeFieldScalar {
    pub fn new(v: i64, p: u64) -> Result<PrimeFieldScalar> {
        check_prime(p)?;
        Ok(PrimeFieldScalar { value: v.rem_euclid(p as i64) as u64, modulus: p })
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn pow(self, mut e: u64) -> PrimeFieldScalar {
        let mut base = self;
        let mut acc = PrimeFieldScalar { value: 1 % self.modulus, modulus: self.modulus };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Inverse by Fermat; `None` for zero.
    pub fn inv(self) -> Option<PrimeFieldScalar> {
        if self.value == 0 {
            None
        } else {
            Some(self.pow(self.modulus - 2))
        }
    }

    pub fn to_rational(self) -> Rational {
        Rational::from_int(self.value as i64)
    }
}

impl fmt::Display for PrimeFieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for PrimeFieldScalar {
    type Output = PrimeFieldScalar;
    fn add(self, o: PrimeFieldScalar) -> PrimeFieldScalar {
        assert_eq!(self.modulus, o.modulus);
        PrimeFieldScalar { value: (self.value + o.value) % self.modulus, modulus: self.modulus }
    }
}

impl Mul for PrimeFieldScalar {
    type Output = PrimeFieldScalar;
    fn mul(self, o: PrimeFieldScalar) -> PrimeFieldScalar {
        assert_eq!(self.modulus, o.modulus);
        let v = (self.value as u128 * o.value as u128) % self.modulus as u128;
        PrimeFieldScalar { value: v as u64, modulus: self.modulus }
    }
}

impl Neg for PrimeFieldScalar {
    type Output = PrimeFieldScalar;
    fn neg(self) -> PrimeFieldScalar {
        PrimeFieldScalar { value: (self.modulus - self.value) % self.modulus, modulus: self.modulus }
    }
}

impl Sub for PrimeFieldScalar {
    type Output = PrimeFieldScalar;
    fn sub(self, o: PrimeFieldScalar) -> PrimeFieldScalar {
        self + (-o)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let q: Rational = "-6/4".parse().unwrap();
        assert_eq!(q.to_string(), "-3/2");
        assert_eq!("7".parse::<Rational>().unwrap().to_string(), "7");
        assert_eq!(Rational::zero().to_string(), "0");
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn pow2() {
        assert_eq!(Rational::new(3, 8).mul_pow2(3), Rational::from_int(3));
    }
}
