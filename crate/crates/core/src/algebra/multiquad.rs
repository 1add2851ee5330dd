use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::{Field, FieldTag, Gaussian, Ring};
use crate::error::{Error, Result};

/// Maximum number of primes whose square roots may be adjoined.
pub const MAX_TOWER_PRIMES: usize = 6;

/// Elements of Q(i)(sqrt p1, ..., sqrt pk) as coordinates over squarefree radicals.
///
/// The key `m` stands for `sqrt(m)`; key 1 is the Gaussian part.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultiQuad {
    terms: BTreeMap<u64, Gaussian>,
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        while n.is_multiple_of(d) {
            out.push(d);
            n /= d;
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Splits `n` as `s^2 * m` with `m` squarefree.
fn squarefree_split(n: u64) -> (u64, u64) {
    let mut counts: BTreeMap<u64, u32> = BTreeMap::new();
    for p in prime_factors(n) {
        *counts.entry(p).or_default() += 1;
    }
    let (mut s, mut m) = (1, 1);
    for (p, c) in counts {
        s *= p.pow(c / 2);
        if c % 2 == 1 {
            m *= p;
        }
    }
    (s, m)
}

impl MultiQuad {
    pub fn from_gaussian(g: Gaussian) -> Self {
        let mut terms = BTreeMap::new();
        if !g.is_zero() {
            terms.insert(1, g);
        }
        MultiQuad { terms }
    }

    pub fn radical(m: u64, c: Gaussian) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiQuad { terms }
    }

    /// Square root of a rational number; negative inputs pick up a factor `i`.
    pub fn sqrt_rational(q: &BigRational) -> Result<Self> {
        if q.is_zero() {
            return Ok(Self::zero());
        }
        let prod: BigInt = q.numer().abs() * q.denom();
        let n = prod.to_u64().ok_or_else(|| Error::InvalidParam(format!("radicand {q} too large to factor")))?;
        let (s, m) = squarefree_split(n);
        let primes = prime_factors(m).len();
        if primes > MAX_TOWER_PRIMES {
            return Err(Error::TowerOverflow { max: MAX_TOWER_PRIMES });
        }
        let c = BigRational::new(BigInt::from(s), q.denom().clone());
        let coeff =
            if q.is_negative() { Gaussian::new(BigRational::zero(), c) } else { Gaussian::new(c, BigRational::zero()) };
        Ok(Self::radical(m, coeff))
    }

    /// Primes whose square roots occur in this element.
    pub fn primes(&self) -> BTreeSet<u64> {
        self.terms.keys().flat_map(|&m| prime_factors(m)).collect()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &Gaussian)> {
        self.terms.iter().map(|(&m, c)| (m, c))
    }

    /// The Gaussian value when no radical occurs.
    pub fn as_gaussian(&self) -> Option<Gaussian> {
        match self.terms.len() {
            0 => Some(Gaussian::zero()),
            1 => self.terms.get(&1).cloned(),
            _ => None,
        }
    }

    /// Applies sqrt(p) -> -sqrt(p).
    fn flip(&self, p: u64) -> Self {
        let terms = self.terms.iter().map(|(&m, c)| (m, if m % p == 0 { c.neg() } else { c.clone() })).collect();
        MultiQuad { terms }
    }

    fn insert_add(terms: &mut BTreeMap<u64, Gaussian>, m: u64, c: Gaussian) {
        let entry = terms.entry(m).or_insert_with(Gaussian::zero);
        *entry = entry.add(&c);
        if entry.is_zero() {
            terms.remove(&m);
        }
    }

    fn check_tower(&self) {
        debug_assert!(self.primes().len() <= MAX_TOWER_PRIMES, "radical tower overflow");
    }
}

impl fmt::Display for MultiQuad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(g) = self.as_gaussian() {
            return write!(f, "{g}");
        }
        write!(f, "[")?;
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, "+")?;
            }
            if *m == 1 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*sqrt({m})")?;
            }
        }
        write!(f, "]")
    }
}

impl Ring for MultiQuad {
    fn zero() -> Self {
        MultiQuad { terms: BTreeMap::new() }
    }
    fn one() -> Self {
        Self::from_gaussian(Gaussian::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (&m, c) in &rhs.terms {
            Self::insert_add(&mut terms, m, c.clone());
        }
        MultiQuad { terms }
    }
    fn mul(&self, rhs: &Self) -> Self {
        let mut terms = BTreeMap::new();
        for (&a, ca) in &self.terms {
            for (&b, cb) in &rhs.terms {
                let g = a.gcd(&b);
                let m = (a / g) * (b / g);
                let c = ca.mul(cb).mul(&Gaussian::from_i64(g as i64));
                Self::insert_add(&mut terms, m, c);
            }
        }
        let out = MultiQuad { terms };
        out.check_tower();
        out
    }
    fn neg(&self) -> Self {
        MultiQuad { terms: self.terms.iter().map(|(&m, c)| (m, c.neg())).collect() }
    }
    fn bar(&self) -> Self {
        MultiQuad { terms: self.terms.iter().map(|(&m, c)| (m, c.bar())).collect() }
    }
    fn unit_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(g) = self.as_gaussian() {
            return g.inv().map(Self::from_gaussian);
        }
        // Multiply by the sqrt(p)-conjugate to eliminate one prime at a time.
        let p = *self.primes().iter().next().expect("radical present");
        let conj = self.flip(p);
        let norm = self.mul(&conj);
        norm.unit_inverse().map(|n| conj.mul(&n))
    }
}

impl Field for MultiQuad {
    fn tag() -> FieldTag {
        FieldTag::MultiQuad
    }
    fn characteristic() -> u64 {
        0
    }
    fn from_ratio(r: &BigRational) -> Option<Self> {
        Gaussian::from_ratio(r).map(Self::from_gaussian)
    }
    fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let Some(inner) = s.strip_prefix('[').and_then(|x| x.strip_suffix(']')) else {
            return Gaussian::parse(s).map(Self::from_gaussian);
        };
        let mut parts = Vec::new();
        let (mut depth, mut start) = (0i32, 0usize);
        for (k, ch) in inner.char_indices() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                '+' if depth == 0 => {
                    parts.push(&inner[start..k]);
                    start = k + 1;
                }
                _ => {}
            }
        }
        parts.push(&inner[start..]);
        let mut out = Self::zero();
        for part in parts {
            let term = match part.split_once("*sqrt(") {
                Some((c, m)) => {
                    let m: u64 = m
                        .strip_suffix(')')
                        .and_then(|m| m.parse().ok())
                        .ok_or_else(|| Error::Parse(format!("malformed radical `{part}`")))?;
                    if squarefree_split(m).0 != 1 {
                        return Err(Error::Parse(format!("radicand {m} is not squarefree")));
                    }
                    Self::radical(m, Gaussian::parse(c)?)
                }
                None => Self::from_gaussian(Gaussian::parse(part)?),
            };
            out = out.add(&term);
        }
        Ok(out)
    }
    fn split_sign(&self) -> (bool, Self) {
        match self.as_gaussian() {
            Some(g) => {
                let (neg, g) = g.split_sign();
                (neg, Self::from_gaussian(g))
            }
            None => (false, self.clone()),
        }
    }
    fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integral())
    }
    fn is_atomic(&self) -> bool {
        self.as_gaussian().is_some_and(|g| g.is_atomic())
    }
}

crate::impl_ring_ops!([] MultiQuad);

#[cfg(test)]
mod tests {
    use super::*;

    fn sq(n: i64, d: i64) -> MultiQuad {
        MultiQuad::sqrt_rational(&BigRational::new(n.into(), d.into())).unwrap()
    }

    #[test]
    fn radicals_square_back() {
        let r = sq(3, 2);
        assert_eq!(
            &r * &r,
            MultiQuad::from_i64(3).mul(&MultiQuad::from_ratio(&BigRational::new(1.into(), 2.into())).unwrap())
        );
        assert_eq!(sq(8, 1), MultiQuad::radical(2, Gaussian::from_i64(2)));
        assert_eq!(&sq(-1, 1) * &sq(-1, 1), MultiQuad::from_i64(-1));
    }

    #[test]
    fn inverse_through_tower() {
        let x = &(&MultiQuad::one() + &sq(2, 1)) + &(&sq(3, 1) * &sq(5, 1));
        let y = x.inv().unwrap();
        assert_eq!(&x * &y, MultiQuad::one());
    }

    #[test]
    fn text_round_trip() {
        let x = &(&MultiQuad::from_i64(-2) + &sq(17, 1)) + &sq(-6, 1);
        let s = x.to_string();
        assert_eq!(MultiQuad::parse(&s).unwrap(), x);
        assert_eq!(s, "[-2+(0+1i)*sqrt(6)+1*sqrt(17)]");
    }

    #[test]
    fn overflow_is_an_error() {
        let n = 2 * 3 * 5 * 7 * 11 * 13 * 17;
        assert!(matches!(
            MultiQuad::sqrt_rational(&BigRational::from_integer(n.into())),
            Err(Error::TowerOverflow { .. })
        ));
    }
}
