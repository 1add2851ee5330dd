use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::rational::parse_ratio;
use super::{Field, FieldTag, Ring};
use crate::error::{Error, Result};

pub const fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Residues modulo the prime `P`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    const PRIME: () = assert!(is_prime(P), "modulus must be prime");

    pub fn new(v: i64) -> Self {
        #[allow(clippy::let_unit_value)]
        let _ = Self::PRIME;
        Fp(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(&self) -> u64 {
        self.0
    }

    fn reduce_big(n: &BigInt) -> u64 {
        n.mod_floor(&BigInt::from(P)).to_u64().expect("residue fits")
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Ring for Fp<P> {
    fn zero() -> Self {
        Fp::new(0)
    }
    fn one() -> Self {
        Fp::new(1)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, rhs: &Self) -> Self {
        Fp(((self.0 as u128 + rhs.0 as u128) % P as u128) as u64)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Fp(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
    fn neg(&self) -> Self {
        Fp((P - self.0) % P)
    }
    fn bar(&self) -> Self {
        *self
    }
    fn unit_inverse(&self) -> Option<Self> {
        (self.0 != 0).then(|| Field::pow(self, P - 2))
    }
}

impl<const P: u64> Field for Fp<P> {
    fn tag() -> FieldTag {
        FieldTag::Prime(P)
    }
    fn characteristic() -> u64 {
        P
    }
    fn from_ratio(r: &BigRational) -> Option<Self> {
        let d = Fp::<P>(Self::reduce_big(r.denom()));
        d.inv().map(|d| Fp::<P>(Self::reduce_big(r.numer())).mul(&d))
    }
    fn parse(s: &str) -> Result<Self> {
        let r = parse_ratio(s)?;
        Self::from_ratio(&r).ok_or_else(|| Error::Parse(format!("`{s}` has a denominator divisible by {P}")))
    }
    fn is_integral(&self) -> bool {
        true
    }
    fn tie_key(&self) -> (BigRational, bool) {
        let v = self.0.min(P - self.0);
        (BigRational::from_integer(v.into()), self.0 > P / 2)
    }
}

crate::impl_ring_ops!([const P: u64] Fp<P>);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residues() {
        type F7 = Fp<7>;
        assert_eq!(F7::parse("-1/2").unwrap(), F7::new(3));
        assert_eq!(F7::new(3).inv().unwrap(), F7::new(5));
        assert!(F7::parse("1/7").is_err());
        assert_eq!(Fp::<17>::parse("-7/13").unwrap(), Fp::<17>::new(6));
        assert!(is_prime(17) && !is_prime(15) && !is_prime(1));
    }

    #[test]
    fn frobenius_char_two() {
        let one = Fp::<2>::one();
        assert_eq!(one + one, Fp::<2>::zero());
    }
}
