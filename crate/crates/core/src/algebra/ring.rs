use std::fmt;
use std::hash::Hash;

use num_rational::BigRational;

use crate::error::Result;

/// Commutative ring with the bar involution.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn bar(&self) -> Self;
    /// Inverse when `self` is a unit of the ring.
    fn unit_inverse(&self) -> Option<Self>;

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldTag {
    Rational,
    Gaussian,
    Prime(u64),
    MultiQuad,
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTag::Rational => write!(f, "q"),
            FieldTag::Gaussian => write!(f, "qi"),
            FieldTag::Prime(p) => write!(f, "fp:{p}"),
            FieldTag::MultiQuad => write!(f, "mq"),
        }
    }
}

impl std::str::FromStr for FieldTag {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "q" => Ok(FieldTag::Rational),
            "qi" => Ok(FieldTag::Gaussian),
            "mq" => Ok(FieldTag::MultiQuad),
            _ => {
                let p = s
                    .strip_prefix("fp:")
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| crate::error::Error::Parse(format!("unknown field tag `{s}`")))?;
                if !super::prime::is_prime(p) {
                    return Err(crate::error::Error::InvalidParam(format!("{p} is not prime")));
                }
                Ok(FieldTag::Prime(p))
            }
        }
    }
}

/// Exact coefficient field.
pub trait Field: Ring + Eq + Hash {
    fn tag() -> FieldTag;
    fn characteristic() -> u64;
    /// Image of a rational number; `None` when the denominator vanishes.
    fn from_ratio(r: &BigRational) -> Option<Self>;
    fn parse(s: &str) -> Result<Self>;

    fn from_i64(n: i64) -> Self {
        Self::from_ratio(&BigRational::from_integer(n.into())).expect("integers embed")
    }

    fn inv(&self) -> Option<Self> {
        self.unit_inverse()
    }

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.mul(&r))
    }

    /// Splits off a leading minus sign for printing: `(true, -x)` when `x` prints negative.
    fn split_sign(&self) -> (bool, Self) {
        (false, self.clone())
    }

    /// Ordering key for search tie-breaks: magnitude first, then sign.
    fn tie_key(&self) -> (BigRational, bool) {
        (BigRational::from_integer(0.into()), false)
    }

    /// Whether the element lies in the prime ring (integers, or anything in characteristic p).
    fn is_integral(&self) -> bool;

    /// Whether printing needs parentheses when used as a coefficient.
    fn is_atomic(&self) -> bool {
        true
    }

    fn pow(&self, mut k: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }
}
