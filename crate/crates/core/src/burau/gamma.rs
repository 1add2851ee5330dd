use serde::Serialize;

use super::{salter_vectors, squier_form, BurauKind, DiagData};
use crate::algebra::{Field, LMat, LaurentPoly, Matrix, RatFunc, Ring};
use crate::error::{Error, Result};

/// The four defining conditions of the unreduced target group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GammaReport {
    pub fixes_row_vector: bool,
    pub fixes_ones: bool,
    pub unitary: bool,
    pub permutation_at_one: bool,
}

impl GammaReport {
    pub fn passes(&self) -> bool {
        self.fixes_row_vector && self.fixes_ones && self.unitary && self.permutation_at_one
    }
}

pub fn gamma_membership<F: Field>(a: &LMat<F>, n: usize) -> Result<GammaReport> {
    if a.rows() != n || a.cols() != n {
        return Err(Error::Dimension(format!("expected {n}x{n}, found {}x{}", a.rows(), a.cols())));
    }
    let (v, ones) = salter_vectors::<F>(n);
    let j = squier_form::<F>(n);
    Ok(GammaReport {
        fixes_row_vector: v.mul(a) == v,
        fixes_ones: a.mul(&ones) == ones,
        unitary: a.hermitian_image(&j) == j,
        permutation_at_one: a.eval(&F::one()).map(|m| m.is_permutation()).unwrap_or(false),
    })
}

/// Embeds a matrix acting on `n` strands into `n + 1` strands.
///
/// The unreduced image is `diag(1, A)`. In the reduced image the first row is
/// trivial and the first column is the one forced by the shifted generators.
pub fn embed_trivial<F: Field>(a: &LMat<F>, kind: BurauKind) -> Result<LMat<F>> {
    match kind {
        BurauKind::Unreduced => {
            let n = a.rows();
            if !gamma_membership(a, n)?.passes() {
                return Err(Error::Precondition("matrix is not in the unreduced target group".into()));
            }
            Ok(a.bordered())
        }
        BurauKind::Reduced => embed_reduced(a),
    }
}

/// Vector `w` with `(B(s_i) - I) w` equal to the first column of the shifted generator.
fn reduced_shift_vector<F: Field>(m: usize) -> Vec<RatFunc<F>> {
    let t = RatFunc::from_laurent(&LaurentPoly::t());
    let t1 = t.add(&RatFunc::one());
    // w_k = a_k + b_k * w_0
    let mut a = vec![RatFunc::zero(), t.clone()];
    let mut b = vec![RatFunc::one(), t1.clone()];
    for k in 2..m {
        a.push(t1.mul(&a[k - 1]).sub(&t.mul(&a[k - 2])));
        b.push(t1.mul(&b[k - 1]).sub(&t.mul(&b[k - 2])));
    }
    a.truncate(m);
    b.truncate(m);
    // last generator: t w_{m-2} - (t+1) w_{m-1} = 0, or -(t+1) w_0 = t when m = 1
    let (ca, cb) = if m == 1 {
        (t.clone(), t1.neg())
    } else {
        let ca = t.mul(&a[m - 2]).sub(&t1.mul(&a[m - 1]));
        let cb = t.mul(&b[m - 2]).sub(&t1.mul(&b[m - 1]));
        (ca, cb)
    };
    let w0 = if m == 1 { ca.mul(&cb.inv().unwrap()) } else { ca.neg().mul(&cb.inv().expect("solvable")) };
    (0..m).map(|k| a[k].add(&b[k].mul(&w0))).collect()
}

fn embed_reduced<F: Field>(a: &LMat<F>) -> Result<LMat<F>> {
    let m = a.rows();
    if !a.entries().iter().all(|x| x.terms().all(|(_, c)| c.is_integral())) || a.det().unit_inverse().is_none() {
        return Err(Error::Precondition("matrix is not integral with unit determinant".into()));
    }
    let w = reduced_shift_vector::<F>(m);
    let ar = a.to_ratfunc();
    let mut col = Vec::with_capacity(m);
    for i in 0..m {
        let mut acc = RatFunc::zero();
        for (k, wk) in w.iter().enumerate() {
            let d = if i == k { ar.get(i, k).sub(&RatFunc::one()) } else { ar.get(i, k).clone() };
            acc = acc.add(&d.mul(wk));
        }
        col.push(
            acc.to_laurent().ok_or_else(|| {
                Error::Precondition("the forced first column is not a Laurent polynomial vector".into())
            })?,
        );
    }
    let mut out = a.bordered();
    for (i, c) in col.into_iter().enumerate() {
        out.set(i + 1, 0, c);
    }
    Ok(out)
}

/// Conditions of the reduced four-strand target group, tested with the form derived from `D`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GammaPrimeReport {
    pub laurent_integral: bool,
    pub unitary: bool,
    pub permutation_at_one: bool,
    pub form: String,
}

impl GammaPrimeReport {
    pub fn passes(&self) -> bool {
        self.laurent_integral && self.unitary && self.permutation_at_one
    }
}

pub fn gamma_prime_membership<F: Field>(a: &LMat<F>, data: &DiagData<F>) -> Result<GammaPrimeReport> {
    if a.rows() != 3 || a.cols() != 3 {
        return Err(Error::Dimension("the reduced four-strand group acts on 3x3 matrices".into()));
    }
    let laurent_integral = a.entries().iter().all(|x| x.terms().all(|(_, c)| c.is_integral()));
    let ar = a.to_ratfunc();
    let unitary = ar.hermitian_image(&data.j4_prime) == data.j4_prime;
    let at_one: Option<Matrix<F>> = a.eval(&F::one()).ok();
    let permutation_at_one = at_one.is_some_and(|m| data.reduced_permutations.contains(&m));
    Ok(GammaPrimeReport { laurent_integral, unitary, permutation_at_one, form: data.j4_prime.to_string() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rational;
    use crate::braid::BraidWord;
    use crate::burau::burau_matrix;

    type M = LMat<Rational>;

    fn bu(s: &str, n: usize, kind: BurauKind) -> M {
        burau_matrix(&BraidWord::parse(s, n).unwrap(), kind)
    }

    #[test]
    fn gamma_examples() {
        assert!(gamma_membership(&bu("s1 s2 s3", 4, BurauKind::Unreduced), 4).unwrap().passes());
        assert!(gamma_membership(&M::identity(4), 4).unwrap().passes());
        let mut d = M::identity(4);
        d.set(0, 0, LaurentPoly::t());
        let r = gamma_membership(&d, 4).unwrap();
        assert!(!r.fixes_row_vector && !r.passes());
        assert!(gamma_membership(&M::identity(3), 4).is_err());
    }

    #[test]
    fn embedding_shifts_generators() {
        assert!(embed_trivial(&M::identity(3), BurauKind::Unreduced).unwrap().is_identity());
        let e = embed_trivial(&bu("s1", 3, BurauKind::Unreduced), BurauKind::Unreduced).unwrap();
        assert_eq!(e, bu("s2", 4, BurauKind::Unreduced));
        for (small, big) in [("s1", "s2"), ("s2", "s3"), ("s1 s2^-1 s1", "s2 s3^-1 s2")] {
            let e = embed_trivial(&bu(small, 3, BurauKind::Reduced), BurauKind::Reduced).unwrap();
            assert_eq!(e, bu(big, 4, BurauKind::Reduced));
        }
        for (small, big) in [("s1 s3", "s2 s4"), ("s2^-1", "s3^-1")] {
            let e = embed_trivial(&bu(small, 4, BurauKind::Reduced), BurauKind::Reduced).unwrap();
            assert_eq!(e, bu(big, 5, BurauKind::Reduced));
        }
        let e = embed_trivial(&bu("s1", 2, BurauKind::Reduced), BurauKind::Reduced).unwrap();
        assert_eq!(e, bu("s2", 3, BurauKind::Reduced));
        let mut bad = M::identity(3);
        bad.set(0, 1, LaurentPoly::one());
        assert!(embed_trivial(&bad, BurauKind::Unreduced).is_err());
    }

    #[test]
    fn gamma_prime_examples() {
        let data = DiagData::<Rational>::new();
        assert!(gamma_prime_membership(&bu("s2", 4, BurauKind::Reduced), &data).unwrap().passes());
        let mut d = M::identity(3);
        d.set(2, 2, LaurentPoly::t());
        let r = gamma_prime_membership(&d, &data).unwrap();
        assert!(!r.unitary);
    }
}
