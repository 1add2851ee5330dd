use std::collections::BTreeMap;
use std::fmt;

use super::{Field, Poly, Ring};
use crate::error::{Error, Result};

/// Sparse Laurent polynomial in `t` with coefficients in `F`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentPoly<F: Field> {
    terms: BTreeMap<i64, F>,
}

impl<F: Field> LaurentPoly<F> {
    pub fn monomial(c: F, k: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        LaurentPoly { terms }
    }

    pub fn constant(c: F) -> Self {
        Self::monomial(c, 0)
    }

    pub fn t() -> Self {
        Self::monomial(F::one(), 1)
    }

    pub fn t_pow(k: i64) -> Self {
        Self::monomial(F::one(), k)
    }

    /// `t^-1 + t`.
    pub fn phi() -> Self {
        Self::t_pow(-1).add(&Self::t())
    }

    /// Builds from `(exponent, integer coefficient)` pairs.
    pub fn from_ints(pairs: &[(i64, i64)]) -> Self {
        pairs.iter().fold(Self::zero(), |acc, &(k, c)| acc.add(&Self::monomial(F::from_i64(c), k)))
    }

    pub fn from_terms(pairs: impl IntoIterator<Item = (i64, F)>) -> Self {
        pairs.into_iter().fold(Self::zero(), |acc, (k, c)| acc.add(&Self::monomial(c, k)))
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &F)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn coeff(&self, k: i64) -> F {
        self.terms.get(&k).cloned().unwrap_or_else(F::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&k| k == 0)
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(&e, a)| (e, a.mul(c))).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    pub fn eval(&self, x: &F) -> Result<F> {
        let xinv = x.inv().ok_or(Error::ZeroPoint)?;
        let mut acc = F::zero();
        for (&k, c) in &self.terms {
            let p = if k >= 0 { x.pow(k as u64) } else { xinv.pow(k.unsigned_abs()) };
            acc = acc.add(&c.mul(&p));
        }
        Ok(acc)
    }

    /// Writes `self = t^s * p` with `p` a polynomial not divisible by `t`.
    pub fn to_poly(&self) -> (Poly<F>, i64) {
        let Some(lo) = self.min_exp() else {
            return (Poly::zero(), 0);
        };
        let hi = self.max_exp().unwrap();
        let mut coeffs = vec![F::zero(); (hi - lo + 1) as usize];
        for (&k, c) in &self.terms {
            coeffs[(k - lo) as usize] = c.clone();
        }
        (Poly::new(coeffs), lo)
    }

    pub fn from_poly(p: &Poly<F>, shift: i64) -> Self {
        Self::from_terms(p.coeffs().iter().enumerate().map(|(k, c)| (k as i64 + shift, c.clone())))
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> LaurentPoly<G> {
        LaurentPoly::from_terms(self.terms.iter().map(|(&k, c)| (k, f(c))))
    }

    /// Exact quotient when `rhs` divides `self` in `F[t, t^-1]`.
    pub fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (a, sa) = self.to_poly();
        let (b, sb) = rhs.to_poly();
        let (q, r) = a.div_rem(&b);
        r.is_zero().then(|| Self::from_poly(&q, sa - sb))
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty Laurent polynomial".into()));
        }
        let bytes = s.as_bytes();
        let mut pieces: Vec<(bool, &str)> = Vec::new();
        let (mut depth, mut start, mut negative) = (0i32, 0usize, false);
        for (k, &b) in bytes.iter().enumerate() {
            match b {
                b'(' | b'[' => depth += 1,
                b')' | b']' => depth -= 1,
                b'+' | b'-' if depth == 0 && (k == 0 || bytes[k - 1] != b'^') => {
                    if k > start {
                        pieces.push((negative, &s[start..k]));
                    } else if k > 0 {
                        return Err(Error::Parse(format!("empty term in `{s}`")));
                    }
                    negative = b == b'-';
                    start = k + 1;
                }
                _ => {}
            }
        }
        if start >= s.len() {
            return Err(Error::Parse(format!("dangling sign in `{s}`")));
        }
        pieces.push((negative, &s[start..]));
        let mut out = Self::zero();
        for (neg, term) in pieces {
            let t = Self::parse_term(term)?;
            out = if neg { out.sub(&t) } else { out.add(&t) };
        }
        Ok(out)
    }

    fn parse_term(term: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("malformed term `{term}`"));
        let (coeff, var) = match term.rfind('t') {
            Some(pos) if term.ends_with('t') || term[pos..].starts_with("t^") => {
                let c = &term[..pos];
                let c = if c.is_empty() { F::one() } else { F::parse(c.strip_suffix('*').ok_or_else(bad)?)? };
                (c, Some(&term[pos + 1..]))
            }
            _ => (F::parse(term)?, None),
        };
        let k = match var {
            None => 0,
            Some("") => 1,
            Some(e) => e.strip_prefix('^').and_then(|e| e.parse::<i64>().ok()).ok_or_else(bad)?,
        };
        Ok(Self::monomial(coeff, k))
    }
}

impl<F: Field> fmt::Display for LaurentPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (&k, c)) in self.terms.iter().enumerate() {
            let (neg, c) = c.split_sign();
            if neg {
                write!(f, "-")?;
            } else if n > 0 {
                write!(f, "+")?;
            }
            if k == 0 {
                write!(f, "{c}")?;
                continue;
            }
            if !c.is_one() {
                write!(f, "{c}*")?;
            }
            if k == 1 {
                write!(f, "t")?;
            } else {
                write!(f, "t^{k}")?;
            }
        }
        Ok(())
    }
}

impl<F: Field> Ring for LaurentPoly<F> {
    fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }
    fn one() -> Self {
        Self::constant(F::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (&k, c) in &rhs.terms {
            let e = terms.entry(k).or_insert_with(F::zero);
            *e = e.add(c);
            if e.is_zero() {
                terms.remove(&k);
            }
        }
        LaurentPoly { terms }
    }
    fn mul(&self, rhs: &Self) -> Self {
        let mut terms: BTreeMap<i64, F> = BTreeMap::new();
        for (&a, ca) in &self.terms {
            for (&b, cb) in &rhs.terms {
                let e = terms.entry(a + b).or_insert_with(F::zero);
                *e = e.add(&ca.mul(cb));
            }
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentPoly { terms }
    }
    fn neg(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&k, c)| (k, c.neg())).collect() }
    }
    fn bar(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&k, c)| (-k, c.bar())).collect() }
    }
    fn unit_inverse(&self) -> Option<Self> {
        if !self.is_monomial() {
            return None;
        }
        let (&k, c) = self.terms.iter().next().unwrap();
        c.inv().map(|ci| Self::monomial(ci, -k))
    }
}

crate::impl_ring_ops!([F: Field] LaurentPoly<F>);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Fp, Gaussian, Rational};

    type L = LaurentPoly<Rational>;

    #[test]
    fn arithmetic_examples() {
        let a = L::parse("t+1").unwrap();
        let b = L::parse("t-1").unwrap();
        assert_eq!(&a * &b, L::parse("t^2-1").unwrap());
        let c = L::parse("1-t+t^2").unwrap();
        assert_eq!(&c * &a, L::parse("1+t^3").unwrap());
        let f2 = LaurentPoly::<Fp<2>>::parse("1+t").unwrap();
        assert_eq!((&f2 * &f2).to_string(), "1+t^2");
    }

    #[test]
    fn bar_examples() {
        assert_eq!(L::t().bar(), L::t_pow(-1));
        assert_eq!(L::parse("1-t+t^2").unwrap().bar(), L::parse("1-t^-1+t^-2").unwrap());
        let it = LaurentPoly::<Gaussian>::parse("(0+1i)*t").unwrap();
        assert_eq!(it.bar(), LaurentPoly::parse("(0-1i)*t^-1").unwrap());
    }

    #[test]
    fn eval_examples() {
        let c = L::parse("1-t+t^2").unwrap();
        assert_eq!(c.eval(&Rational::int(-1)).unwrap(), Rational::int(3));
        let phi = LaurentPoly::<Gaussian>::phi();
        assert!(phi.eval(&Gaussian::i().neg()).unwrap().is_zero());
        assert_eq!(L::t().eval(&Rational::int(1)).unwrap(), Rational::int(1));
        assert_eq!(L::t().eval(&Rational::int(0)), Err(Error::ZeroPoint));
    }

    #[test]
    fn text_round_trip() {
        for s in ["0", "-t^-1+2+t", "-3/2*t^-2+t^5", "(0-1i)+(1/2-1/2i)*t"] {
            let g = LaurentPoly::<Gaussian>::parse(s).unwrap();
            assert_eq!(g.to_string(), s);
        }
        assert!(L::parse("t^").is_err());
        assert!(L::parse("1+").is_err());
        assert!(L::parse("2**t").is_err());
    }

    #[test]
    fn exact_division() {
        let a = L::parse("t^-1-t^3").unwrap();
        let b = L::parse("1+t^2").unwrap();
        assert_eq!(a.div_exact(&b).unwrap(), L::parse("t^-1-t").unwrap());
        assert!(L::parse("1+t").unwrap().div_exact(&b).is_none());
    }
}
