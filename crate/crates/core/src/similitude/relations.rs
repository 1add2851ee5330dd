use super::{gen_lift, gen_matrix, ELabel, GenId};
use crate::algebra::{Field, LMat, Matrix, Poly, ProjMat, Ring};
use crate::braid::BraidWord;
use crate::burau::{burau_matrix, BurauKind, ConjDirection, DiagData};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    /// `h-1 g[r] h-1^-1 = g[-r]` and `h-1 h0 h-1^-1 = h0`.
    HMinusOneConj,
    /// `h0 g[r] h0^-1 = g[-1/r]^-1 h0^-2`.
    H0Conj,
    /// `h0 al(f) h0^-1 = au(f)` in characteristic 2.
    AdditiveSwap,
    /// `h0^2 = g[0]^-1`.
    H0Square,
    /// Lifted action of `h-1` on `g[1]`, together with the factorization of `d`.
    OddLift,
    /// `d^2 = e c^-1 (d^-1 c d)^-1` with the expansions of `d^2` and `d^-1 c d`.
    OddSquare,
    /// Characteristic-2 lifts: `au[1]^2 = 1`, the factorization of `d`, `e'^2` and `e'^-1 c e'`.
    CharTwoLift,
    /// `d c d^-1 = c^-1 (d^-1 c d) c`.
    Key,
}

impl std::str::FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "h-1-conj" => Relation::HMinusOneConj,
            "h0-conj" => Relation::H0Conj,
            "additive-swap" => Relation::AdditiveSwap,
            "h0sq" | "h0-square" => Relation::H0Square,
            "odd-lift" => Relation::OddLift,
            "odd-square" => Relation::OddSquare,
            "char2-lift" => Relation::CharTwoLift,
            "key" => Relation::Key,
            _ => return Err(Error::Parse(format!("unknown relation `{s}`"))),
        })
    }
}

#[derive(Clone, Debug)]
pub struct RelParams<F: Field> {
    pub r: Option<F>,
    pub f: Option<Poly<F>>,
}

impl<F: Field> Default for RelParams<F> {
    fn default() -> Self {
        RelParams { r: None, f: None }
    }
}

fn pm<F: Field>(g: GenId<F>) -> Result<ProjMat<F>> {
    gen_matrix(&g)
}

fn lift<F: Field>(g: GenId<F>) -> Result<LMat<F>> {
    gen_lift(&g)
}

fn inv<F: Field>(m: &LMat<F>) -> LMat<F> {
    m.inverse().expect("unit determinant")
}

fn prod<F: Field>(ms: &[&LMat<F>]) -> LMat<F> {
    ms.iter().fold(Matrix::identity(ms[0].rows()), |acc, m| acc.mul(m))
}

/// The 2x2 matrices `c` and `d` generating the centralizer image.
pub fn cd_matrices<F: Field>() -> (LMat<F>, LMat<F>) {
    let c = if F::characteristic() == 2 {
        LMat::parse_rows(&[&["1", "0"], &["0", "t"]])
    } else {
        LMat::parse_rows(&[&["1", "0"], &["0", "-t"]])
    }
    .expect("valid literal");
    let d = LMat::parse_rows(&[&["t-t^2+t^3", "t^2-t^3"], &["t^-1-1+t-t^2", "1-t+t^2"]]).expect("valid literal");
    (c, d)
}

/// Whether `c` and `d` are the upper-left blocks of the diagonalized images of
/// `b1` and `(s2 s3 s2)^2 s3^-6`.
pub fn cd_consistency<F: Field>(data: &DiagData<F>) -> bool {
    let (c, d) = cd_matrices::<F>();
    let block = |w: &str| -> Option<LMat<F>> {
        let a = burau_matrix::<F>(&BraidWord::parse(w, 4).ok()?, BurauKind::Reduced);
        let m = data.conj(&a.to_ratfunc(), ConjDirection::Forward).to_laurent()?;
        let third_trivial =
            m.get(0, 2).is_zero() && m.get(1, 2).is_zero() && m.get(2, 0).is_zero() && m.get(2, 1).is_zero();
        third_trivial.then(|| m.select(&[0, 1], &[0, 1]))
    };
    block("b1") == Some(c) && block("(s2 s3 s2)^2 s3^-6") == Some(d)
}

pub fn verify_relation<F: Field>(rel: Relation, params: &RelParams<F>) -> Result<bool> {
    let need_r = || params.r.clone().ok_or_else(|| Error::InvalidParam("relation needs a value of r".into()));
    let need_f = || params.f.clone().ok_or_else(|| Error::InvalidParam("relation needs a polynomial f".into()));
    let odd = || {
        if F::characteristic() == 2 {
            Err(Error::InvalidParam("relation needs characteristic other than 2".into()))
        } else {
            Ok(())
        }
    };
    match rel {
        Relation::HMinusOneConj => {
            let r = need_r()?;
            let hm1 = pm(GenId::Hm1)?;
            let lhs = pm(GenId::G(r.clone()))?.conj_by(&hm1)?;
            let h0_fixed = pm(GenId::H0)?.conj_by(&hm1)? == pm(GenId::H0)?;
            Ok(h0_fixed && lhs == pm(GenId::G(r.neg()))?)
        }
        Relation::H0Conj => {
            let r = need_r()?;
            let ri = r.inv().ok_or_else(|| Error::InvalidParam("relation needs r != 0".into()))?;
            let h0 = pm(GenId::H0)?;
            let lhs = pm(GenId::G(r))?.conj_by(&h0)?;
            let rhs = pm(GenId::G(ri.neg()))?.inverse()?.mul(&h0.pow(-2)?);
            Ok(lhs == rhs)
        }
        Relation::AdditiveSwap => {
            let f = need_f()?;
            let lhs = pm(GenId::AL(f.clone()))?.conj_by(&pm(GenId::H0)?)?;
            Ok(lhs == pm(GenId::AU(f))?)
        }
        Relation::H0Square => Ok(pm(GenId::H0)?.pow(2)? == pm(GenId::G(F::zero()))?.inverse()?),
        Relation::OddLift => {
            odd()?;
            let (h0, hm1, g1) = (lift(GenId::H0)?, lift(GenId::Hm1)?, lift(GenId::G(F::one()))?);
            let (e2t, e4) = (lift(GenId::E(ELabel::MinusTwoT))?, lift(GenId::E(ELabel::MinusFour))?);
            let lhs = prod(&[&hm1, &g1, &inv(&hm1)]);
            let rhs = prod(&[&e2t, &inv(&h0), &inv(&g1), &inv(&h0)]);
            let (_, d) = cd_matrices::<F>();
            let d_expr = prod(&[&e2t, &inv(&e4), &hm1, &inv(&h0), &g1, &h0, &g1, &h0]);
            Ok(lhs == rhs && d == d_expr)
        }
        Relation::OddSquare => {
            odd()?;
            let (c, d) = cd_matrices::<F>();
            let (h0, g1) = (lift(GenId::H0)?, lift(GenId::G(F::one()))?);
            let (e2t, e4) = (lift(GenId::E(ELabel::MinusTwoT))?, lift(GenId::E(ELabel::MinusFour))?);
            let e = prod(&[&e2t.pow(4)?, &e4.pow(-2)?]);
            let (di, ci) = (inv(&d), inv(&c));
            let dcd = prod(&[&di, &c, &d]);
            let d2 = d.mul(&d);
            let (h0i, g1i) = (inv(&h0), inv(&g1));
            let d2_expr = prod(&[&e, &h0i, &h0i, &g1i, &h0i, &g1i, &h0i, &g1, &h0, &g1, &h0]);
            let dcd_expr = prod(&[&h0i, &g1i, &h0i, &g1i, &h0, &g1, &h0, &g1, &h0]);
            Ok(d2 == prod(&[&e, &ci, &inv(&dcd)]) && d2 == d2_expr && dcd == dcd_expr)
        }
        Relation::CharTwoLift => {
            if F::characteristic() != 2 {
                return Err(Error::InvalidParam("relation lives in characteristic 2".into()));
            }
            let (c, d) = cd_matrices::<F>();
            let h0 = c.clone();
            let au = lift(GenId::AU(Poly::one()))?;
            let et2 = lift(GenId::E(ELabel::TSquared))?;
            let h0i = inv(&h0);
            let d_expr = prod(&[&et2, &h0i, &h0i, &au, &h0]);
            let ep = prod(&[&c, &c, &d, &inv(&c)]);
            let epi = inv(&ep);
            Ok(au.mul(&au).is_identity()
                && d == d_expr
                && ep.mul(&ep) == et2.mul(&et2)
                && prod(&[&epi, &c, &ep]) == prod(&[&au, &h0, &au]))
        }
        Relation::Key => {
            let (c, d) = cd_matrices::<F>();
            let (ci, di) = (inv(&c), inv(&d));
            Ok(prod(&[&d, &c, &di]) == prod(&[&ci, &di, &c, &d, &c]))
        }
    }
}

/// Number of pairwise distinct classes among `diag(1, 1)`, `diag(1, -1)`, `diag(1, t)`, `diag(1, -t)`.
pub fn coset_representatives_distinct<F: Field>() -> usize {
    let reps: Vec<ProjMat<F>> = ["1", "-1", "t", "-t"]
        .iter()
        .map(|s| ProjMat::from_laurent(&LMat::parse_rows(&[&["1", "0"], &["0", s]]).unwrap()).unwrap())
        .collect();
    let mut distinct: Vec<&ProjMat<F>> = Vec::new();
    for r in &reps {
        if !distinct.contains(&r) {
            distinct.push(r);
        }
    }
    distinct.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Fp, Rational};
    use crate::similitude::parse_poly_x;

    fn rp<F: Field>(r: &str) -> RelParams<F> {
        RelParams { r: Some(F::parse(r).unwrap()), f: None }
    }

    #[test]
    fn projective_relations() {
        assert!(verify_relation(Relation::HMinusOneConj, &rp::<Rational>("3")).unwrap());
        assert!(verify_relation(Relation::H0Conj, &rp::<Fp<5>>("2")).unwrap());
        assert!(verify_relation(Relation::H0Square, &RelParams::<Rational>::default()).unwrap());
        assert!(verify_relation(Relation::H0Conj, &rp::<Rational>("0")).is_err());
        assert!(verify_relation(Relation::HMinusOneConj, &RelParams::<Rational>::default()).is_err());
        let f = RelParams::<Fp<2>> { r: None, f: Some(parse_poly_x("x^2+x").unwrap()) };
        assert!(verify_relation(Relation::AdditiveSwap, &f).unwrap());
    }

    #[test]
    fn lifted_relations() {
        let none = RelParams::<Rational>::default();
        for rel in [Relation::OddLift, Relation::OddSquare, Relation::Key] {
            assert!(verify_relation(rel, &none).unwrap(), "{rel:?}");
        }
        assert!(verify_relation(Relation::CharTwoLift, &RelParams::<Fp<2>>::default()).unwrap());
        assert!(verify_relation(Relation::Key, &RelParams::<Fp<2>>::default()).unwrap());
        assert!(verify_relation(Relation::CharTwoLift, &none).is_err());
    }

    #[test]
    fn cd_data() {
        let (_, d) = cd_matrices::<Fp<3>>();
        assert_eq!(d, LMat::parse_rows(&[&["t+2*t^2+t^3", "t^2+2*t^3"], &["t^-1+2+t+2*t^2", "1+2*t+t^2"]]).unwrap());
        assert!(cd_consistency(&DiagData::<Rational>::new()));
        assert_eq!(coset_representatives_distinct::<Rational>(), 4);
        assert_eq!(coset_representatives_distinct::<Fp<2>>(), 2);
    }
}
