use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Field, FieldTag, Ring};
use crate::error::{Error, Result};

/// The rational numbers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Rational(pub BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn int(n: i64) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }
}

pub(crate) fn parse_ratio(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("malformed rational `{s}`"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(BigRational::new(n, d))
}

pub(crate) fn fmt_ratio(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_ratio(&self.0, f)
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Rational(BigRational::zero())
    }
    fn one() -> Self {
        Rational(BigRational::one())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        Rational(&self.0 + &rhs.0)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Rational(&self.0 * &rhs.0)
    }
    fn neg(&self) -> Self {
        Rational(-&self.0)
    }
    fn bar(&self) -> Self {
        self.clone()
    }
    fn unit_inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| Rational(self.0.recip()))
    }
}

impl Field for Rational {
    fn tag() -> FieldTag {
        FieldTag::Rational
    }
    fn characteristic() -> u64 {
        0
    }
    fn from_ratio(r: &BigRational) -> Option<Self> {
        Some(Rational(r.clone()))
    }
    fn parse(s: &str) -> Result<Self> {
        parse_ratio(s).map(Rational)
    }
    fn split_sign(&self) -> (bool, Self) {
        if self.is_negative() {
            (true, self.abs())
        } else {
            (false, self.clone())
        }
    }
    fn is_integral(&self) -> bool {
        self.0.is_integer()
    }
    fn tie_key(&self) -> (BigRational, bool) {
        (self.0.abs(), self.is_negative())
    }
}

crate::impl_ring_ops!([] Rational);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        for s in ["0", "-3", "7/4", "-12/5"] {
            assert_eq!(Rational::parse(s).unwrap().to_string(), s);
        }
        assert_eq!(Rational::parse("6/4").unwrap().to_string(), "3/2");
        assert!(Rational::parse("1/0").is_err());
        assert!(Rational::parse("x").is_err());
    }

    #[test]
    fn field_ops() {
        let a = Rational::new(3, 5);
        assert_eq!(&a * &a.inv().unwrap(), Rational::one());
        assert_eq!(Rational::zero().inv(), None);
        assert_eq!(Rational::new(-1, 2).pow(3), Rational::new(-1, 8));
    }
}
