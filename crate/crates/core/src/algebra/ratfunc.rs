use std::fmt;

use super::{Field, LaurentPoly, Poly, Ring};
use crate::error::{Error, Result};

/// Rational function `num / den` in lowest terms with monic denominator.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc<F: Field> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Field> RatFunc<F> {
    pub fn new(num: Poly<F>, den: Poly<F>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::NotInvertible);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (num, den) = (num.div_exact(&g), den.div_exact(&g));
        let l = den.leading().unwrap().inv().unwrap();
        Ok(RatFunc { num: num.scale(&l), den: den.scale(&l) })
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn from_laurent(f: &LaurentPoly<F>) -> Self {
        let (p, s) = f.to_poly();
        if s >= 0 {
            RatFunc { num: p.shift(s as usize), den: Poly::one() }
        } else {
            RatFunc { num: p, den: Poly::monomial(F::one(), (-s) as usize) }
        }
    }

    /// `a / b` for Laurent polynomials.
    pub fn ratio(a: &LaurentPoly<F>, b: &LaurentPoly<F>) -> Result<Self> {
        if b.is_zero() {
            return Err(Error::NotInvertible);
        }
        let (p, sp) = a.to_poly();
        let (q, sq) = b.to_poly();
        let d = sp - sq;
        let (p, q) = if d >= 0 { (p.shift(d as usize), q) } else { (p, q.shift((-d) as usize)) };
        Self::new(p, q)
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn inv(&self) -> Option<Self> {
        self.unit_inverse()
    }

    pub fn num(&self) -> &Poly<F> {
        &self.num
    }

    pub fn den(&self) -> &Poly<F> {
        &self.den
    }

    /// Valuation at infinity: `deg(den) - deg(num)`.
    pub fn val_inf(&self) -> Result<i64> {
        let dn = self.num.degree().ok_or(Error::InvalidParam("valuation of zero".into()))?;
        Ok(self.den.degree().unwrap() as i64 - dn as i64)
    }

    /// Whether the denominator is a power of `t`.
    pub fn is_laurent(&self) -> bool {
        self.den.coeffs().iter().filter(|c| !c.is_zero()).count() == 1
    }

    pub fn to_laurent(&self) -> Option<LaurentPoly<F>> {
        self.is_laurent().then(|| LaurentPoly::from_poly(&self.num, -(self.den.degree().unwrap() as i64)))
    }

    pub fn eval(&self, x: &F) -> Result<F> {
        let d = self.den.eval(x);
        let dinv = d.inv().ok_or(Error::NotInvertible)?;
        Ok(self.num.eval(x).mul(&dinv))
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Result<RatFunc<G>> {
        RatFunc::new(self.num.map(&f), self.den.map(&f))
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('(') {
            if let Some((n, d)) = rest.split_once(")/(") {
                if let Some(d) = d.strip_suffix(')') {
                    return Self::ratio(&LaurentPoly::parse(n)?, &LaurentPoly::parse(d)?);
                }
            }
        }
        LaurentPoly::parse(s).map(|l| Self::from_laurent(&l))
    }
}

impl<F: Field> From<LaurentPoly<F>> for RatFunc<F> {
    fn from(f: LaurentPoly<F>) -> Self {
        Self::from_laurent(&f)
    }
}

impl<F: Field> fmt::Display for RatFunc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(l) = self.to_laurent() {
            return write!(f, "{l}");
        }
        write!(f, "({})/({})", LaurentPoly::from_poly(&self.num, 0), LaurentPoly::from_poly(&self.den, 0))
    }
}

impl<F: Field> Ring for RatFunc<F> {
    fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }
    fn one() -> Self {
        RatFunc { num: Poly::one(), den: Poly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return Self::new(self.num.add(&rhs.num), self.den.clone()).unwrap();
        }
        let g = self.den.gcd(&rhs.den);
        let a = rhs.den.div_exact(&g);
        let b = self.den.div_exact(&g);
        let num = self.num.mul(&a).add(&rhs.num.mul(&b));
        Self::new(num, self.den.mul(&a)).unwrap()
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let num = self.num.div_exact(&g1).mul(&rhs.num.div_exact(&g2));
        let den = self.den.div_exact(&g2).mul(&rhs.den.div_exact(&g1));
        let l = den.leading().unwrap().inv().unwrap();
        RatFunc { num: num.scale(&l), den: den.scale(&l) }
    }
    fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }
    fn bar(&self) -> Self {
        let n = LaurentPoly::from_poly(&self.num, 0).bar();
        let d = LaurentPoly::from_poly(&self.den, 0).bar();
        Self::ratio(&n, &d).unwrap()
    }
    fn unit_inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| Self::new(self.den.clone(), self.num.clone()).unwrap())
    }
}

crate::impl_ring_ops!([F: Field] RatFunc<F>);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rational;

    type R = RatFunc<Rational>;

    #[test]
    fn valuation() {
        assert_eq!(R::parse("t").unwrap().val_inf().unwrap(), -1);
        assert_eq!(R::parse("t^-1+t").unwrap().val_inf().unwrap(), -1);
        assert_eq!(R::parse("5").unwrap().val_inf().unwrap(), 0);
        assert!(R::zero().val_inf().is_err());
    }

    #[test]
    fn reduction_and_bar() {
        let x = R::parse("(t^2-1)/(2*t+2)").unwrap();
        assert_eq!(x, R::parse("1/2*t-1/2").unwrap());
        let y = R::parse("(1)/(1+t)").unwrap();
        assert!(!y.is_laurent());
        assert_eq!(y.bar(), R::parse("(t)/(1+t)").unwrap());
        assert_eq!(&y * &y.inv().unwrap(), R::one());
        assert_eq!(y.to_string(), "(1)/(1+t)");
        assert_eq!(R::parse(&y.to_string()).unwrap(), y);
    }
}
