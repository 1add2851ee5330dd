use std::collections::HashSet;

use serde::Serialize;

use super::{burau_generator, BurauKind};
use crate::algebra::{Field, LMat, LaurentPoly, Matrix, RMat, RatFunc, Ring};
use crate::error::Result;

/// The diagonalizing change of basis for the reduced four-strand image.
#[derive(Clone, Debug)]
pub struct DiagData<F: Field> {
    pub m: RMat<F>,
    pub m_inv: RMat<F>,
    pub d: LMat<F>,
    /// `M B(s_i) M^-1` for `i = 1, 2, 3`.
    pub s: [RMat<F>; 3],
    /// `bar(M)^-1 D (M^T)^-1`, the form preserved by the reduced image.
    pub j4_prime: RMat<F>,
    /// Reduced images evaluated at `t = 1`.
    pub reduced_permutations: HashSet<Matrix<F>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConjDirection {
    /// `M A M^-1`
    Forward,
    /// `M^-1 A M`
    Backward,
}

pub fn m_matrix<F: Field>() -> LMat<F> {
    LMat::parse_rows(&[&["0", "1", "0"], &["1+t^-1", "-t^-1", "0"], &["0", "-t^-1", "t^-2+t^-1"]])
        .expect("valid literal")
}

pub fn d_matrix<F: Field>() -> LMat<F> {
    Matrix::diag(vec![LaurentPoly::one(), LaurentPoly::phi(), LaurentPoly::phi()])
}

impl<F: Field> DiagData<F> {
    pub fn new() -> Self {
        let m = m_matrix::<F>().to_ratfunc();
        let m_inv = m.inverse().expect("M is invertible over rational functions");
        let d = d_matrix::<F>();
        let conj = |a: &LMat<F>| m.mul(&a.to_ratfunc()).mul(&m_inv);
        let s = [1, 2, 3].map(|i| conj(&burau_generator::<F>(4, i, 1, BurauKind::Reduced)));
        let j4_prime = m.bar().inverse().unwrap().mul(&d.to_ratfunc()).mul(&m.transpose().inverse().unwrap());
        DiagData { reduced_permutations: reduced_permutations(), m, m_inv, d, s, j4_prime }
    }

    pub fn conj(&self, a: &RMat<F>, dir: ConjDirection) -> RMat<F> {
        match dir {
            ConjDirection::Forward => self.m.mul(a).mul(&self.m_inv),
            ConjDirection::Backward => self.m_inv.mul(a).mul(&self.m),
        }
    }
}

impl<F: Field> Default for DiagData<F> {
    fn default() -> Self {
        Self::new()
    }
}

/// The 24 evaluations at `t = 1` of the reduced four-strand image.
fn reduced_permutations<F: Field>() -> HashSet<Matrix<F>> {
    let gens: Vec<Matrix<F>> =
        (1..4).map(|i| burau_generator::<F>(4, i, 1, BurauKind::Reduced).eval(&F::one()).expect("t = 1")).collect();
    let mut seen = HashSet::from([Matrix::identity(3)]);
    let mut frontier = vec![Matrix::identity(3)];
    while let Some(x) = frontier.pop() {
        for g in &gens {
            let y = x.mul(g);
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen
}

/// `M A M^-1` or `M^-1 A M` over rational functions.
pub fn conj_m<F: Field>(a: &LMat<F>, dir: ConjDirection, data: &DiagData<F>) -> RMat<F> {
    data.conj(&a.to_ratfunc(), dir)
}

/// Evaluation criteria at `t = -1`, each paired with the direct Laurent test it predicts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EvaluationReport {
    pub p1: bool,
    pub p2: bool,
    pub p3: bool,
    pub direct1: bool,
    pub direct2: bool,
    pub direct3: bool,
}

impl EvaluationReport {
    pub fn consistent(&self) -> bool {
        self.p1 == self.direct1 && self.p2 == self.direct2 && self.p3 == self.direct3
    }
}

/// The three evaluation criteria alone.
pub fn evaluation_criteria<F: Field>(a_at_minus_one: &Matrix<F>) -> (bool, bool, bool) {
    let a = a_at_minus_one;
    let p1 = a.get(1, 0).is_zero() && a.get(1, 2).is_zero();
    let one = F::one();
    let p2 = a.transpose().has_eigenvector(&[one.clone(), one.neg(), one.neg()]);
    let p3 = a.has_eigenvector(&[one.clone(), one.clone(), one]);
    (p1, p2, p3)
}

pub fn evaluation_predicates<F: Field>(a: &LMat<F>, data: &DiagData<F>) -> Result<EvaluationReport> {
    let (p1, p2, p3) = evaluation_criteria(&a.eval(&F::one().neg())?);
    let ar = a.to_ratfunc();
    let s2 = burau_generator::<F>(4, 2, 1, BurauKind::Reduced).to_ratfunc();
    let s2i = burau_generator::<F>(4, 2, -1, BurauKind::Reduced).to_ratfunc();
    let direct1 = data.conj(&ar, ConjDirection::Forward).is_laurent();
    let direct2 = data.conj(&s2.mul(&ar).mul(&s2i), ConjDirection::Forward).is_laurent();
    let direct3 = data.conj(&ar, ConjDirection::Backward).is_laurent();
    Ok(EvaluationReport { p1, p2, p3, direct1, direct2, direct3 })
}

/// Whether every entry is a Laurent polynomial.
pub fn is_laurent<F: Field>(a: &RMat<F>) -> bool {
    a.entries().iter().all(RatFunc::is_laurent)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rational;
    use crate::braid::BraidWord;
    use crate::burau::burau_matrix;

    fn r(rows: &[&[&str]]) -> RMat<Rational> {
        Matrix::from_rows(rows.iter().map(|row| row.iter().map(|s| RatFunc::parse(s).unwrap()).collect()).collect())
            .unwrap()
    }

    fn b(s: &str) -> LMat<Rational> {
        burau_matrix(&BraidWord::parse(s, 4).unwrap(), BurauKind::Reduced)
    }

    #[test]
    fn diagonalized_generators() {
        let data = DiagData::<Rational>::new();
        assert_eq!(data.s[0], r(&[&["1", "0", "0"], &["0", "-t", "0"], &["0", "0", "1"]]));
        assert_eq!(data.s[2], r(&[&["1", "0", "0"], &["0", "1", "0"], &["0", "0", "-t"]]));
        let s2 = r(&[
            &["(t-t^2)/(1+t)", "(t^2)/(1+t)", "(t^2)/(1+t)"],
            &["(1+t^2)/(t+t^2)", "(1)/(1+t)", "(-t)/(1+t)"],
            &["(1+t^2)/(t+t^2)", "(-t)/(1+t)", "(1)/(1+t)"],
        ]);
        assert_eq!(data.s[1], s2);
        assert!(!is_laurent(&data.s[1]));
        let d = data.d.to_ratfunc();
        for s in &data.s {
            assert_eq!(s.hermitian_image(&d), d);
        }
        assert_eq!(data.reduced_permutations.len(), 24);
    }

    #[test]
    fn evaluation_examples() {
        let data = DiagData::<Rational>::new();
        let l = evaluation_predicates(&b("s1"), &data).unwrap();
        assert!(l.p1 && l.consistent());
        let l = evaluation_predicates(&b("s2"), &data).unwrap();
        assert!(!l.p1 && l.consistent());
        let l = evaluation_predicates(&b("s2 s1 s2^-1"), &data).unwrap();
        assert!(!l.p2 && l.consistent());
        let q = conj_m(&b("(s3 s2 s3)^2"), ConjDirection::Forward, &data);
        let twist = r(&[&["t-t^2+t^3", "t^2-t^3", "0"], &["t^-1-1+t-t^2", "1-t+t^2", "0"], &["0", "0", "t^3"]]);
        assert_eq!(q, twist);
    }
}
