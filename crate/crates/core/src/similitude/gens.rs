use std::fmt;

use crate::algebra::{Field, LMat, LaurentPoly, Matrix, Poly, ProjMat, Ring};
use crate::error::{Error, Result};

/// Central scalar lifts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ELabel {
    /// `-2t`
    MinusTwoT,
    /// `-4`
    MinusFour,
    /// `t^2`
    TSquared,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GenId<F: Field> {
    G(F),
    H0,
    Hm1,
    AU(Poly<F>),
    AL(Poly<F>),
    E(ELabel),
}

impl<F: Field> GenId<F> {
    /// Letters from the same factor of the free product merge exponents.
    pub fn same_factor(&self, other: &Self) -> bool {
        self == other
    }
}

pub(crate) fn fmt_poly_x<F: Field>(f: &Poly<F>) -> String {
    LaurentPoly::from_poly(f, 0).to_string().replace('t', "x")
}

/// Parses a polynomial in `x`.
pub fn parse_poly_x<F: Field>(s: &str) -> Result<Poly<F>> {
    let l = LaurentPoly::<F>::parse(&s.replace('x', "t"))?;
    if l.min_exp().is_some_and(|k| k < 0) {
        return Err(Error::Parse(format!("`{s}` has negative powers of x")));
    }
    let (p, shift) = l.to_poly();
    Ok(p.shift(shift.max(0) as usize))
}

impl<F: Field> fmt::Display for GenId<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenId::G(r) => write!(f, "g[{r}]"),
            GenId::H0 => write!(f, "h0"),
            GenId::Hm1 => write!(f, "h-1"),
            GenId::AU(p) => write!(f, "au[{}]", fmt_poly_x(p)),
            GenId::AL(p) => write!(f, "al[{}]", fmt_poly_x(p)),
            GenId::E(ELabel::MinusTwoT) => write!(f, "e[-2t]"),
            GenId::E(ELabel::MinusFour) => write!(f, "e[-4]"),
            GenId::E(ELabel::TSquared) => write!(f, "e[t^2]"),
        }
    }
}

fn lp<F: Field>(s: &str) -> LaurentPoly<F> {
    LaurentPoly::parse(s).expect("valid literal")
}

/// `f(t^-1 + t)`.
fn at_phi<F: Field>(f: &Poly<F>) -> LaurentPoly<F> {
    let phi = LaurentPoly::phi();
    f.coeffs().iter().rev().fold(LaurentPoly::zero(), |acc, c| acc.mul(&phi).add(&LaurentPoly::constant(c.clone())))
}

/// The exact matrix behind each generator.
pub fn gen_lift<F: Field>(g: &GenId<F>) -> Result<LMat<F>> {
    let char2 = F::characteristic() == 2;
    let m = match g {
        GenId::G(r) => {
            if r.pow(4).add(&F::one()).is_zero() {
                return Err(Error::InvalidParam(format!("g[{r}] needs r^4 != -1")));
            }
            let r2 = LaurentPoly::constant(r.mul(r));
            let rc = LaurentPoly::constant(r.clone());
            Matrix::from_rows(vec![
                vec![LaurentPoly::t().sub(&r2), rc.clone()],
                vec![rc.neg().mul(&LaurentPoly::phi()), LaurentPoly::t_pow(-1).sub(&r2)],
            ])?
        }
        GenId::H0 => Matrix::diag(vec![LaurentPoly::one(), lp("-t")]),
        GenId::Hm1 => Matrix::diag(vec![LaurentPoly::one(), lp("-1")]),
        GenId::AU(f) | GenId::AL(f) => {
            if !char2 {
                return Err(Error::InvalidParam("additive generators live in characteristic 2".into()));
            }
            let ff = at_phi(f);
            let diag = LaurentPoly::one().add(&LaurentPoly::phi().mul(&ff));
            let (up, low) =
                if matches!(g, GenId::AU(_)) { (lp("t^-1+1"), lp("1+t")) } else { (lp("1+t"), lp("t^-1+1")) };
            Matrix::from_rows(vec![vec![diag.clone(), up.mul(&ff)], vec![low.mul(&LaurentPoly::phi()).mul(&ff), diag]])?
        }
        GenId::E(label) => {
            let s = match label {
                ELabel::MinusTwoT => lp("-2*t"),
                ELabel::MinusFour => lp("-4"),
                ELabel::TSquared => lp("t^2"),
            };
            if s.unit_inverse().is_none() {
                return Err(Error::InvalidParam(format!("{g} vanishes in characteristic {}", F::characteristic())));
            }
            Matrix::diag(vec![s.clone(), s])
        }
    };
    Ok(m)
}

/// Canonical projective matrix of a generator.
pub fn gen_matrix<F: Field>(g: &GenId<F>) -> Result<ProjMat<F>> {
    ProjMat::from_laurent(&gen_lift(g)?)
}

/// Word in the generators with nonzero exponents and merged neighbours.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GenWord<F: Field> {
    letters: Vec<(GenId<F>, i64)>,
}

impl<F: Field> GenWord<F> {
    pub fn empty() -> Self {
        GenWord { letters: Vec::new() }
    }

    pub fn new(letters: impl IntoIterator<Item = (GenId<F>, i64)>) -> Self {
        let mut w = GenWord::empty();
        for (g, e) in letters {
            w.push(g, e);
        }
        w
    }

    pub fn push(&mut self, g: GenId<F>, e: i64) {
        if e == 0 {
            return;
        }
        if let Some((last, le)) = self.letters.last_mut() {
            if last.same_factor(&g) {
                *le += e;
                if *le == 0 {
                    self.letters.pop();
                }
                return;
            }
        }
        self.letters.push((g, e));
    }

    pub fn letters(&self) -> &[(GenId<F>, i64)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        GenWord::new(self.letters.iter().rev().map(|(g, e)| (g.clone(), -e)))
    }

    pub fn concat(&self, rhs: &Self) -> Self {
        GenWord::new(self.letters.iter().chain(&rhs.letters).cloned())
    }

    /// Whether no two neighbours come from the same factor.
    pub fn is_reduced(&self) -> bool {
        self.letters.iter().all(|(_, e)| *e != 0) && self.letters.windows(2).all(|w| !w[0].0.same_factor(&w[1].0))
    }

    /// Projective product of the letters.
    pub fn eval(&self) -> Result<ProjMat<F>> {
        let mut acc = ProjMat::identity(2);
        for (g, e) in &self.letters {
            acc = acc.mul(&gen_matrix(g)?.pow(*e)?);
        }
        Ok(acc)
    }

    /// Exact product of the lifts.
    pub fn eval_lift(&self) -> Result<LMat<F>> {
        let mut acc = Matrix::identity(2);
        for (g, e) in &self.letters {
            acc = acc.mul(&gen_lift(g)?.pow(*e)?);
        }
        Ok(acc)
    }
}

impl<F: Field> fmt::Display for GenWord<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> =
            self.letters.iter().map(|(g, e)| if *e == 1 { g.to_string() } else { format!("{g}^{e}") }).collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{projective_unitary_scalar_laurent, Fp, Rational};

    type L = LaurentPoly<Rational>;

    #[test]
    fn displays() {
        let g0 = gen_matrix(&GenId::G(Rational::int(0))).unwrap();
        assert_eq!(g0, ProjMat::from_laurent(&LMat::parse_rows(&[&["t", "0"], &["0", "t^-1"]]).unwrap()).unwrap());
        let h0 = gen_lift::<Rational>(&GenId::H0).unwrap();
        assert_eq!(h0, LMat::parse_rows(&[&["1", "0"], &["0", "-t"]]).unwrap());
        let au = gen_lift(&GenId::AU(Poly::<Fp<2>>::one())).unwrap();
        assert_eq!(au, LMat::parse_rows(&[&["1+t^-1+t", "t^-1+1"], &["1+t^-1+t+t^2", "1+t^-1+t"]]).unwrap());
        assert!(gen_lift(&GenId::AU(Poly::<Rational>::one())).is_err());
        assert!(gen_lift(&GenId::G(Fp::<17>::new(8))).is_err());
    }

    #[test]
    fn unitary_scalars() {
        let d2 = LMat::diag(vec![L::one(), L::phi()]);
        let g1 = gen_lift(&GenId::G(Rational::int(1))).unwrap();
        assert_eq!(projective_unitary_scalar_laurent(&g1, &d2).unwrap(), L::constant(Rational::int(2)));
    }

    #[test]
    fn words_merge() {
        let g = GenId::G(Rational::int(1));
        let w = GenWord::new([(g.clone(), 1), (g.clone(), 1), (GenId::H0, 1), (GenId::H0, -1)]);
        assert_eq!(w.letters(), &[(g, 2)]);
        assert_eq!(w.to_string(), "g[1]^2");
        assert!(w.concat(&w.inverse()).is_empty());
        assert_eq!(parse_poly_x::<Fp<2>>("x^2+x").unwrap(), Poly::new(vec![Fp::new(0), Fp::new(1), Fp::new(1)]));
    }
}
