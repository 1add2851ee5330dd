use serde::{Deserialize, Serialize};

use crate::algebra::{Field, LMat, LaurentPoly, Matrix, Ring};
use crate::braid::BraidWord;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BurauKind {
    Unreduced,
    Reduced,
}

impl BurauKind {
    pub fn dim(self, n: usize) -> usize {
        match self {
            BurauKind::Unreduced => n,
            BurauKind::Reduced => n - 1,
        }
    }
}

impl std::str::FromStr for BurauKind {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "u" | "unreduced" => Ok(BurauKind::Unreduced),
            "r" | "reduced" => Ok(BurauKind::Reduced),
            _ => Err(crate::Error::Parse(format!("unknown Burau kind `{s}`"))),
        }
    }
}

fn lp<F: Field>(pairs: &[(i64, i64)]) -> LaurentPoly<F> {
    LaurentPoly::from_ints(pairs)
}

/// Image of `sigma_i^e`, `e = +-1`.
pub fn burau_generator<F: Field>(n: usize, i: usize, e: i8, kind: BurauKind) -> LMat<F> {
    assert!(n >= 2 && (1..n).contains(&i), "generator out of range");
    let mut m = Matrix::identity(kind.dim(n));
    match (kind, e > 0) {
        (BurauKind::Unreduced, true) => {
            let k = i - 1;
            m.set(k, k, lp(&[(0, 1), (1, -1)]));
            m.set(k, k + 1, lp(&[(1, 1)]));
            m.set(k + 1, k, LaurentPoly::one());
            m.set(k + 1, k + 1, LaurentPoly::zero());
        }
        (BurauKind::Unreduced, false) => {
            let k = i - 1;
            m.set(k, k, LaurentPoly::zero());
            m.set(k, k + 1, LaurentPoly::one());
            m.set(k + 1, k, lp(&[(-1, 1)]));
            m.set(k + 1, k + 1, lp(&[(0, 1), (-1, -1)]));
        }
        (BurauKind::Reduced, true) => {
            let r = i - 1;
            if r >= 1 {
                m.set(r, r - 1, lp(&[(1, 1)]));
            }
            m.set(r, r, lp(&[(1, -1)]));
            if r + 1 < n - 1 {
                m.set(r, r + 1, LaurentPoly::one());
            }
        }
        (BurauKind::Reduced, false) => {
            m = burau_generator::<F>(n, i, 1, kind).inverse().expect("unit determinant");
        }
    }
    m
}

/// Burau image of a braid word, multiplied in word order.
pub fn burau_matrix<F: Field>(w: &BraidWord, kind: BurauKind) -> LMat<F> {
    let n = w.strands();
    w.letters().iter().fold(Matrix::identity(kind.dim(n)), |acc, &(i, e)| acc.mul(&burau_generator(n, i, e, kind)))
}

/// The Squier form: 1 on the diagonal, `-t` below, `-t^-1` above.
pub fn squier_form<F: Field>(n: usize) -> LMat<F> {
    Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => LaurentPoly::one(),
        std::cmp::Ordering::Greater => lp(&[(1, -1)]),
        std::cmp::Ordering::Less => lp(&[(-1, -1)]),
    })
}

/// The row vector `(t, t^2, ..., t^n)` and the all-ones column.
pub fn salter_vectors<F: Field>(n: usize) -> (LMat<F>, LMat<F>) {
    let v = Matrix::from_fn(1, n, |_, j| LaurentPoly::t_pow(j as i64 + 1));
    let ones = Matrix::from_fn(n, 1, |_, _| LaurentPoly::one());
    (v, ones)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{unitary_defect, Rational};

    type M = LMat<Rational>;

    #[test]
    fn generator_displays() {
        let s1 = burau_matrix::<Rational>(&BraidWord::parse("s1", 4).unwrap(), BurauKind::Reduced);
        assert_eq!(s1, M::parse_rows(&[&["-t", "1", "0"], &["0", "1", "0"], &["0", "0", "1"]]).unwrap());
        let s3 = burau_matrix::<Rational>(&BraidWord::parse("s3", 4).unwrap(), BurauKind::Reduced);
        assert_eq!(s3, M::parse_rows(&[&["1", "0", "0"], &["0", "1", "0"], &["0", "t", "-t"]]).unwrap());
        let s2 = burau_matrix::<Rational>(&BraidWord::parse("s2", 4).unwrap(), BurauKind::Reduced);
        assert_eq!(s2, M::parse_rows(&[&["1", "0", "0"], &["t", "-t", "1"], &["0", "0", "1"]]).unwrap());
        let u = burau_matrix::<Rational>(&BraidWord::parse("s1", 4).unwrap(), BurauKind::Unreduced);
        let p = u.eval(&Rational::int(1)).unwrap();
        assert!(p.is_permutation() && !p.is_identity());
    }

    #[test]
    fn inverse_generators() {
        for kind in [BurauKind::Unreduced, BurauKind::Reduced] {
            for i in 1..4 {
                let a = burau_generator::<Rational>(4, i, 1, kind);
                let b = burau_generator::<Rational>(4, i, -1, kind);
                assert!(a.mul(&b).is_identity());
            }
        }
    }

    #[test]
    fn unitarity_of_generators() {
        let j = squier_form::<Rational>(3);
        let a = burau_matrix::<Rational>(&BraidWord::parse("s1", 3).unwrap(), BurauKind::Unreduced);
        assert!(unitary_defect(&a, &j).is_zero());
    }
}
