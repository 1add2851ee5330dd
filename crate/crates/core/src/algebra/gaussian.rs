use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::rational::{fmt_ratio, parse_ratio};
use super::{Field, FieldTag, Rational, Ring};
use crate::error::{Error, Result};

/// Gaussian rationals `re + im*i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Gaussian {
    pub re: BigRational,
    pub im: BigRational,
}

impl Gaussian {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Gaussian { re, im }
    }

    pub fn from_parts(re: (i64, i64), im: (i64, i64)) -> Self {
        Gaussian { re: BigRational::new(re.0.into(), re.1.into()), im: BigRational::new(im.0.into(), im.1.into()) }
    }

    pub fn i() -> Self {
        Gaussian::from_parts((0, 1), (1, 1))
    }

    pub fn real(r: &Rational) -> Self {
        Gaussian { re: r.0.clone(), im: BigRational::zero() }
    }

    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }
}

impl fmt::Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return fmt_ratio(&self.re, f);
        }
        write!(f, "(")?;
        fmt_ratio(&self.re, f)?;
        write!(f, "{}", if self.im.is_negative() { "-" } else { "+" })?;
        fmt_ratio(&self.im.abs(), f)?;
        write!(f, "i)")
    }
}

impl Ring for Gaussian {
    fn zero() -> Self {
        Gaussian { re: BigRational::zero(), im: BigRational::zero() }
    }
    fn one() -> Self {
        Gaussian::from_parts((1, 1), (0, 1))
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        Gaussian { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
    fn mul(&self, rhs: &Self) -> Self {
        Gaussian { re: &self.re * &rhs.re - &self.im * &rhs.im, im: &self.re * &rhs.im + &self.im * &rhs.re }
    }
    fn neg(&self) -> Self {
        Gaussian { re: -&self.re, im: -&self.im }
    }
    fn bar(&self) -> Self {
        Gaussian { re: self.re.clone(), im: -&self.im }
    }
    fn unit_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(Gaussian { re: &self.re / &n, im: -&self.im / &n })
    }
}

impl Field for Gaussian {
    fn tag() -> FieldTag {
        FieldTag::Gaussian
    }
    fn characteristic() -> u64 {
        0
    }
    fn from_ratio(r: &BigRational) -> Option<Self> {
        Some(Gaussian { re: r.clone(), im: BigRational::zero() })
    }
    fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let Some(inner) = s.strip_prefix('(').and_then(|x| x.strip_suffix(')')) else {
            return Ok(Gaussian { re: parse_ratio(s)?, im: BigRational::zero() });
        };
        let bad = || Error::Parse(format!("malformed Gaussian rational `{s}`"));
        let body = inner.strip_suffix('i').ok_or_else(bad)?;
        let pos = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(k, _)| k)
            .last()
            .ok_or_else(bad)?;
        let re = parse_ratio(&body[..pos])?;
        let im_str = &body[pos..];
        let im = parse_ratio(im_str.strip_prefix('+').unwrap_or(im_str))?;
        Ok(Gaussian { re, im })
    }
    fn split_sign(&self) -> (bool, Self) {
        if self.im.is_zero() && self.re.is_negative() {
            (true, self.neg())
        } else {
            (false, self.clone())
        }
    }
    fn is_integral(&self) -> bool {
        self.re.is_integer() && self.im.is_integer()
    }
    fn is_atomic(&self) -> bool {
        self.im.is_zero()
    }
    fn tie_key(&self) -> (BigRational, bool) {
        (self.norm(), self.re.is_negative() || (self.re.is_zero() && self.im.is_negative()))
    }
}

crate::impl_ring_ops!([] Gaussian);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for s in ["(1/2+1/2i)", "(0-1i)", "(-3+2/7i)", "5", "-1/3"] {
            assert_eq!(Gaussian::parse(s).unwrap().to_string(), s);
        }
        assert!(Gaussian::parse("(1+2)").is_err());
    }

    #[test]
    fn conjugation_and_inverse() {
        let i = Gaussian::i();
        assert_eq!(&i * &i, Gaussian::from_i64(-1));
        assert_eq!(i.bar(), i.neg());
        let z = Gaussian::from_parts((1, 1), (-1, 1));
        assert_eq!(z.inv().unwrap(), Gaussian::from_parts((1, 2), (1, 2)));
    }
}
