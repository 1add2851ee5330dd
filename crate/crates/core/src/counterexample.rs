//! The explicit element of the reduced target group that is not reached by
//! words in the stable subgroup, verified piece by piece.

use serde::Serialize;

use crate::algebra::{Field, LMat, LaurentPoly, Matrix, ProjMat, Rational, Ring};
use crate::braid::{braid_equal, BraidWord};
use crate::burau::{
    burau_matrix, embed_trivial, evaluation_criteria, evaluation_predicates, gamma_membership, gamma_prime_membership,
    BurauKind, ConjDirection, DiagData, GammaPrimeReport, GammaReport,
};
pub use crate::check::Check;
use crate::error::{Error, Result};
use crate::similitude::{q_normal_form, GenId, GenWord};

pub const SIGMA1_EXPONENT: i64 = -58854;
pub const TWIST_EXPONENT: i64 = 9809;
const TWIST: &str = "(s3 s2 s3)^2";

type Q = Rational;

fn q(s: &str) -> Q {
    Q::parse(s).expect("valid literal")
}

fn lp(s: &str) -> LaurentPoly<Q> {
    LaurentPoly::parse(s).expect("valid literal")
}

fn factored(factors: &[&str], shift: i64) -> LaurentPoly<Q> {
    factors.iter().fold(LaurentPoly::one(), |acc, f| acc.mul(&lp(f))).shift(shift)
}

/// The seven-letter alternating word in the elementary generators.
pub fn seven_letter_word() -> GenWord<Q> {
    GenWord::new(
        [("-1/2", -1), ("6/5", 1), ("-7/13", -1), ("13/15", 1), ("-8/13", -1), ("5/6", 1), ("-2", -1)]
            .map(|(r, e)| (GenId::G(q(r)), e)),
    )
}

/// The determinant-one lift of the seven-letter word, written out entrywise.
pub fn build_c() -> LMat<Q> {
    Matrix::from_rows(vec![
        vec![
            factored(&["1-t+t^2", "-2+6*t-9*t^2+8*t^3-6*t^4+2*t^5"], -4),
            factored(&["1-t", "2-2*t+t^2", "-2+2*t-2*t^2+t^3"], -3),
        ],
        vec![
            factored(&["-1+t", "1+t^2", "1-2*t+2*t^2", "-1+2*t-2*t^2+2*t^3"], -4),
            factored(&["1-t+t^2", "2-6*t+8*t^2-9*t^3+6*t^4-2*t^5"], -3),
        ],
    ])
    .expect("2x2 literal")
}

pub fn d2() -> LMat<Q> {
    Matrix::diag(vec![LaurentPoly::one(), LaurentPoly::phi()])
}

fn h_minus_one() -> LMat<Q> {
    Matrix::diag(vec![LaurentPoly::one(), LaurentPoly::constant(q("-1"))])
}

fn reduced(w: &str) -> LMat<Q> {
    burau_matrix(&BraidWord::parse(w, 4).expect("valid braid"), BurauKind::Reduced)
}

fn at_minus_one(m: &LMat<Q>) -> Matrix<Q> {
    m.eval(&q("-1")).expect("t = -1 is not a pole")
}

#[derive(Clone, Debug, Serialize)]
pub struct Materialized {
    pub sigma1_exponent: i64,
    pub twist_exponent: i64,
    pub eigencheck: bool,
    pub agrees_with_evaluation: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CounterexampleReport {
    pub c: String,
    pub b_prime: String,
    pub a0: String,
    pub a0_at_minus_one: String,
    pub w_minus_one: String,
    pub a_at_minus_one: String,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub materialized: Option<Materialized>,
}

impl CounterexampleReport {
    pub fn passes(&self) -> bool {
        crate::check::all_pass(&self.checks)
    }

    pub fn failing(&self) -> Vec<&str> {
        crate::check::failing(&self.checks)
    }
}

/// Pieces of the construction up to `M^-1 B M`.
#[derive(Clone, Debug)]
pub struct Assembly {
    pub c: LMat<Q>,
    pub b_prime: LMat<Q>,
    pub b: LMat<Q>,
    pub a0: LMat<Q>,
    pub checks: Vec<Check>,
}

fn check(checks: &mut Vec<Check>, name: &str, passed: bool) {
    checks.push(Check::new(name, passed));
}

/// Checks on `C` alone: it lifts the seven-letter word, has determinant one and preserves `D2`.
pub fn c_checks(c: &LMat<Q>) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let word = seven_letter_word();
    let lift = word.eval_lift()?;
    check(&mut checks, "c.lifts-word", lift == c.scale(&LaurentPoly::constant(q("28561/50625"))));
    check(&mut checks, "c.det", c.det().is_one());
    check(&mut checks, "c.unitary", c.hermitian_image(&d2()) == d2());
    let nf = q_normal_form(&ProjMat::from_laurent(c)?, 8);
    check(&mut checks, "c.normal-form", nf.as_ref().ok() == Some(&word));
    Ok(checks)
}

pub fn assemble_a0(data: &DiagData<Q>) -> Result<Assembly> {
    let c = build_c();
    let mut checks = c_checks(&c)?;
    let h = h_minus_one();
    let b_prime = c.mul(&h).mul(&c).mul(&h);
    check(&mut checks, "b-prime.trivial-at-minus-one", at_minus_one(&b_prime).is_identity());
    let mut b = Matrix::identity(3);
    for i in 0..2 {
        for j in 0..2 {
            b.set(i, j, b_prime.get(i, j).clone());
        }
    }
    let s3 = data.s[2].to_laurent().ok_or_else(|| Error::CheckFailed("M s3 M^-1 is not Laurent".into()))?;
    check(&mut checks, "b.commutes-s3", b.commutator_is_trivial(&s3));
    let a0r = data.conj(&b.to_ratfunc(), ConjDirection::Backward);
    let a0 = a0r.to_laurent();
    check(&mut checks, "a0.laurent", a0.is_some());
    let a0 = a0.ok_or_else(|| Error::CheckFailed("a0.laurent".into()))?;
    let l39 = evaluation_predicates(&b, data)?;
    check(&mut checks, "a0.laurent-matches-eigencondition", l39.p3 && l39.direct3);
    check(&mut checks, "a0.det", a0.det().is_one());
    check(&mut checks, "a0.commutes-s3", a0.commutator_is_trivial(&reduced("s3")));
    check(&mut checks, "a0.gamma-prime", gamma_prime_membership(&a0, data)?.passes());
    let expected = Matrix::from_field_ints(&[&[1, 41616, 0], &[0, 1, 0], &[0, -17238, 1]]);
    check(&mut checks, "a0.at-minus-one", at_minus_one(&a0) == expected);
    if let Some(bad) = checks.iter().find(|c| !c.passed) {
        return Err(Error::CheckFailed(bad.name.clone()));
    }
    Ok(Assembly { c, b_prime, b, a0, checks })
}

/// `B(s1)^a B((s3 s2 s3)^2)^b` at `t = -1` by fast integer powers.
pub fn correction_at_minus_one(a: i64, b: i64) -> Matrix<Q> {
    let s1 = at_minus_one(&reduced("s1"));
    let tw = at_minus_one(&reduced(TWIST));
    s1.pow(a).expect("unipotent").mul(&tw.pow(b).expect("unit determinant"))
}

fn det_at(m: &LMat<Q>, x: i64) -> Q {
    m.eval(&Q::from_i64(x)).expect("nonzero point").det()
}

fn field_pow(x: &Q, k: i64) -> Q {
    let base = if k < 0 { x.inv().expect("nonzero") } else { x.clone() };
    base.pow(k.unsigned_abs())
}

/// `det A = 1` at `t` in {-1, 2, 3}, using multiplicativity over the factors.
fn det_cross_check(a0: &LMat<Q>, a: i64, b: i64) -> bool {
    let (s1, tw) = (reduced("s1"), reduced(TWIST));
    [-1, 2, 3].iter().all(|&x| {
        let d = det_at(a0, x).mul(&field_pow(&det_at(&s1, x), a)).mul(&field_pow(&det_at(&tw, x), b));
        d.is_one()
    })
}

/// Whether `(1, -1, -1)` is an eigenvector of the transpose of `A` at `t = -1`.
pub fn final_eigencheck(a0: &LMat<Q>, a: i64, b: i64) -> bool {
    let at = at_minus_one(a0).mul(&correction_at_minus_one(a, b));
    evaluation_criteria(&at).1
}

/// Whether `s1` and `(s3 s2 s3)^2` both commute with `s3`.
fn factors_centralize_s3() -> Result<bool> {
    let s3 = BraidWord::parse("s3", 4)?;
    let mut ok = true;
    for w in ["s1", TWIST] {
        let w = BraidWord::parse(w, 4)?;
        ok &= braid_equal(&w.concat(&s3), &s3.concat(&w))?;
    }
    Ok(ok)
}

/// `A0 B(s1)^a B((s3 s2 s3)^2)^b` computed symbolically.
pub fn materialize(a0: &LMat<Q>, a: i64, b: i64) -> Result<LMat<Q>> {
    Ok(a0.mul(&reduced("s1").pow(a)?).mul(&reduced(TWIST).pow(b)?))
}

pub fn report(materialize_exponents: Option<(i64, i64)>) -> Result<CounterexampleReport> {
    let data = DiagData::<Q>::new();
    let asm = assemble_a0(&data)?;
    let mut checks = asm.checks.clone();
    let w = correction_at_minus_one(SIGMA1_EXPONENT, TWIST_EXPONENT);
    let a_m1 = at_minus_one(&asm.a0).mul(&w);
    check(&mut checks, "a.stable-eigencheck", final_eigencheck(&asm.a0, SIGMA1_EXPONENT, TWIST_EXPONENT));
    check(&mut checks, "a0.fails-stable-eigencheck", !final_eigencheck(&asm.a0, 0, 0));
    check(&mut checks, "a.det", det_cross_check(&asm.a0, SIGMA1_EXPONENT, TWIST_EXPONENT));
    check(
        &mut checks,
        "a.exponents-balance-writhe",
        SIGMA1_EXPONENT + BraidWord::parse(TWIST, 4)?.writhe() * TWIST_EXPONENT == 0,
    );
    check(&mut checks, "a.factors-centralize-s3", factors_centralize_s3()?);
    let materialized = match materialize_exponents {
        Some((a, b)) => {
            let full = materialize(&asm.a0, a, b)?;
            let eigencheck = evaluation_criteria(&at_minus_one(&full)).1;
            let agrees = at_minus_one(&full) == at_minus_one(&asm.a0).mul(&correction_at_minus_one(a, b));
            check(&mut checks, "materialized.agrees-with-evaluation", agrees);
            Some(Materialized { sigma1_exponent: a, twist_exponent: b, eigencheck, agrees_with_evaluation: agrees })
        }
        None => None,
    };
    Ok(CounterexampleReport {
        c: asm.c.to_string(),
        b_prime: asm.b_prime.to_string(),
        a0: asm.a0.to_string(),
        a0_at_minus_one: at_minus_one(&asm.a0).to_string(),
        w_minus_one: w.to_string(),
        a_at_minus_one: a_m1.to_string(),
        checks,
        materialized,
    })
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum EmbedReport {
    Gamma(GammaReport),
    GammaPrime(GammaPrimeReport),
}

impl EmbedReport {
    pub fn passes(&self) -> bool {
        match self {
            EmbedReport::Gamma(r) => r.passes(),
            EmbedReport::GammaPrime(r) => r.passes(),
        }
    }
}

/// Embeds `a` one strand up and checks the target group on the result.
/// Reduced inputs are checked against the reduced four-strand conditions, so they must be 2x2.
pub fn hereditary_embed<F: Field>(a: &LMat<F>, kind: BurauKind) -> Result<(LMat<F>, EmbedReport)> {
    match kind {
        BurauKind::Unreduced => {
            let out = embed_trivial(a, kind)?;
            let rep = gamma_membership(&out, out.rows())?;
            Ok((out, EmbedReport::Gamma(rep)))
        }
        BurauKind::Reduced => {
            if a.rows() != 2 {
                return Err(Error::Dimension("reduced embedding is checked from three to four strands".into()));
            }
            let out = embed_trivial(a, kind)?;
            let rep = gamma_prime_membership(&out, &DiagData::new())?;
            Ok((out, EmbedReport::GammaPrime(rep)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c_entries() {
        let c = build_c();
        assert_eq!(c.get(0, 0).coeff(-4), q("-2"));
        assert!(c.det().is_one());
        let checks = c_checks(&c).unwrap();
        assert!(checks.iter().all(|c| c.passed), "{checks:?}");
    }

    #[test]
    fn full_report() {
        let r = report(Some((1, -1))).unwrap();
        assert!(r.passes(), "{:?}", r.failing());
        assert!(!r.materialized.unwrap().eigencheck);
    }

    #[test]
    fn correction_factor() {
        let w = correction_at_minus_one(SIGMA1_EXPONENT, 0);
        assert_eq!(w, Matrix::from_field_ints(&[&[1, -58854, 0], &[0, 1, 0], &[0, 0, 1]]));
        let tw = correction_at_minus_one(0, 1);
        assert_eq!(tw, Matrix::from_field_ints(&[&[1, 0, 0], &[0, -1, 0], &[2, 0, -1]]));
    }

    #[test]
    fn embed_examples() {
        let (out, rep) = hereditary_embed(&Matrix::<LaurentPoly<Q>>::identity(3), BurauKind::Unreduced).unwrap();
        assert!(out.is_identity() && rep.passes());
        let b = burau_matrix::<Q>(&BraidWord::parse("s1 s2", 3).unwrap(), BurauKind::Unreduced);
        assert!(hereditary_embed(&b, BurauKind::Unreduced).unwrap().1.passes());
        let r = burau_matrix::<Q>(&BraidWord::parse("s1 s2^-1", 3).unwrap(), BurauKind::Reduced);
        let (out, rep) = hereditary_embed(&r, BurauKind::Reduced).unwrap();
        assert!(rep.passes(), "{rep:?}");
        assert_eq!(out, burau_matrix(&BraidWord::parse("s2 s3^-1", 4).unwrap(), BurauKind::Reduced));
    }
}
