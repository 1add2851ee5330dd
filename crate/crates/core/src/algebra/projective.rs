use std::fmt;

use super::{Field, LMat, LaurentPoly, Matrix, Poly, RMat, RatFunc, Ring};
use crate::error::{Error, Result};

/// Canonical representative of the scalar class of a nonzero matrix.
///
/// Entries are polynomials in `t` with trivial common content, and the first
/// nonzero entry in row-major order has leading coefficient 1.
pub fn canonical_projective<F: Field>(m: &RMat<F>) -> Result<LMat<F>> {
    let first = m
        .entries()
        .iter()
        .find(|x| !x.is_zero())
        .ok_or_else(|| Error::InvalidParam("zero matrix has no projective class".into()))?;
    let scaled = m.scale(&first.inv().expect("nonzero"));
    let mut lcm = Poly::one();
    for e in scaled.entries() {
        let g = lcm.gcd(e.den());
        lcm = lcm.mul(&e.den().div_exact(&g));
    }
    let nums: Vec<Poly<F>> = scaled.entries().iter().map(|e| e.num().mul(&lcm.div_exact(e.den()))).collect();
    let content = nums.iter().fold(Poly::zero(), |g, p| g.gcd(p));
    let nums: Vec<Poly<F>> = nums.iter().map(|p| p.div_exact(&content)).collect();
    let lead = nums.iter().find(|p| !p.is_zero()).and_then(|p| p.leading().cloned()).expect("nonzero entry");
    let li = lead.inv().expect("nonzero");
    let mut k = 0;
    Ok(Matrix::from_fn(m.rows(), m.cols(), |_, _| {
        let p = nums[k].scale(&li);
        k += 1;
        LaurentPoly::from_poly(&p, 0)
    }))
}

/// A matrix up to multiplication by nonzero rational functions.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ProjMat<F: Field> {
    rep: LMat<F>,
}

impl<F: Field> ProjMat<F> {
    pub fn from_laurent(m: &LMat<F>) -> Result<Self> {
        Self::from_ratfunc(&m.to_ratfunc())
    }

    pub fn from_ratfunc(m: &RMat<F>) -> Result<Self> {
        Ok(ProjMat { rep: canonical_projective(m)? })
    }

    pub fn identity(n: usize) -> Self {
        ProjMat { rep: Matrix::identity(n) }
    }

    pub fn rep(&self) -> &LMat<F> {
        &self.rep
    }

    pub fn dim(&self) -> usize {
        self.rep.rows()
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::from_laurent(&self.rep.mul(&rhs.rep)).expect("product of invertible classes")
    }

    /// Inverse class, represented by the adjugate.
    pub fn inverse(&self) -> Result<Self> {
        if self.rep.det().is_zero() {
            return Err(Error::NotInvertible);
        }
        Self::from_laurent(&self.rep.adjugate())
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::identity(self.dim());
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    pub fn conj_by(&self, g: &Self) -> Result<Self> {
        Ok(g.mul(self).mul(&g.inverse()?))
    }

    pub fn is_identity(&self) -> bool {
        self.rep.is_identity()
    }

    pub fn eval(&self, x: &F) -> Result<Matrix<F>> {
        self.rep.eval(x)
    }

    /// Degree span of the representative.
    pub fn span(&self) -> i64 {
        self.rep.entries().iter().filter_map(LaurentPoly::max_exp).max().unwrap_or(0)
    }
}

impl<F: Field> fmt::Display for ProjMat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}

/// Scalar `k` with `B = k * A`, when it exists.
pub fn projective_ratio<F: Field>(a: &RMat<F>, b: &RMat<F>) -> Option<RatFunc<F>> {
    let p = a.entries().iter().position(|x| !x.is_zero())?;
    let k = b.entries()[p].mul(&a.entries()[p].inv().unwrap());
    (!k.is_zero() && a.scale(&k) == *b).then_some(k)
}

/// `bar(A) J A^T - J`.
pub fn unitary_defect<R: Ring>(a: &Matrix<R>, j: &Matrix<R>) -> Matrix<R> {
    a.hermitian_image(j).sub(j)
}

/// The unit `k = c t^m` with `bar(A) J A^T = k J`, when it exists.
pub fn projective_unitary_scalar<F: Field>(a: &RMat<F>, j: &RMat<F>) -> Option<LaurentPoly<F>> {
    let k = projective_ratio(j, &a.hermitian_image(j))?;
    let l = k.to_laurent()?;
    l.is_monomial().then_some(l)
}

/// Laurent-matrix convenience wrapper for `projective_unitary_scalar`.
pub fn projective_unitary_scalar_laurent<F: Field>(a: &LMat<F>, j: &LMat<F>) -> Option<LaurentPoly<F>> {
    let k = projective_ratio(&j.to_ratfunc(), &a.hermitian_image(j).to_ratfunc())?;
    let l = k.to_laurent()?;
    l.is_monomial().then_some(l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rational;

    type M = LMat<Rational>;

    #[test]
    fn canonical_forms_identify_scalars() {
        let a = M::parse_rows(&[&["t", "1"], &["0", "t^-1"]]).unwrap();
        let b = a.scale(&LaurentPoly::parse("3*t^-4+3*t^-3").unwrap());
        let pa = ProjMat::from_laurent(&a).unwrap();
        assert_eq!(pa, ProjMat::from_laurent(&b).unwrap());
        assert_eq!(pa.rep(), &M::parse_rows(&[&["t^2", "t"], &["0", "1"]]).unwrap());
        assert!(ProjMat::from_laurent(&M::zeros(2, 2)).is_err());
    }

    #[test]
    fn unitary_scalar_examples() {
        let i = M::identity(3);
        assert_eq!(projective_unitary_scalar_laurent(&i, &i).unwrap(), LaurentPoly::one());
        let s = M::parse_rows(&[&["1-t", "t", "0"], &["1", "0", "0"], &["0", "0", "1"]]).unwrap();
        let j = M::parse_rows(&[&["1", "-t^-1", "-t^-1"], &["-t", "1", "-t^-1"], &["-t", "-t", "1"]]).unwrap();
        assert!(unitary_defect(&s, &j).is_zero());
        let d = M::parse_rows(&[&["1", "1"], &["0", "1"]]).unwrap();
        let d2 = M::parse_rows(&[&["1", "0"], &["0", "t^-1+t"]]).unwrap();
        assert_eq!(projective_unitary_scalar_laurent(&d, &d2), None);
    }
}
