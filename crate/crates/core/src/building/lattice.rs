use std::fmt;

use serde::Serialize;

use crate::algebra::{Field, LMat, LaurentPoly, Matrix, RMat, RatFunc, Ring};
use crate::error::{Error, Result};

/// `v_inf(f) = deg(den) - deg(num)`.
pub fn val_inf<F: Field>(f: &RatFunc<F>) -> Result<i64> {
    if f.is_zero() {
        return Err(Error::ZeroPoint);
    }
    f.val_inf()
}

fn val_laurent<F: Field>(f: &LaurentPoly<F>) -> Option<i64> {
    f.max_exp().map(|e| -e)
}

fn pi_pow<F: Field>(k: i64) -> RatFunc<F> {
    RatFunc::from_laurent(&LaurentPoly::t_pow(-k))
}

/// Terms `c_k pi^k` with `k < a` of the expansion of `x` at infinity, written in `t`.
pub fn polar_part<F: Field>(x: &RatFunc<F>, a: i64) -> LaurentPoly<F> {
    let (q, r) = x.num().div_rem(x.den());
    let mut out = LaurentPoly::from_terms(
        LaurentPoly::from_poly(&q, 0).terms().filter(|(e, _)| *e > -a).map(|(e, c)| (e, c.clone())),
    );
    if a >= 2 && !r.is_zero() {
        let den = LaurentPoly::from_poly(x.den(), 0);
        let m = x.den().degree().unwrap_or(0) as i64;
        let mut rem = LaurentPoly::from_poly(&r, 0);
        for k in 1..a {
            let c = rem.coeff(m - k);
            if c.is_zero() {
                continue;
            }
            let term = LaurentPoly::monomial(c, -k);
            rem = rem.sub(&den.mul(&term));
            out = out.add(&term);
        }
    }
    out
}

/// A vertex of the building: the class of the column lattice of a 3x3 matrix
/// over `O_inf`, kept in lower-triangular Hermite form with first pivot 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticeClass<F: Field> {
    rep: LMat<F>,
}

impl<F: Field> LatticeClass<F> {
    pub fn identity(n: usize) -> Self {
        LatticeClass { rep: Matrix::identity(n) }
    }

    pub fn rep(&self) -> &LMat<F> {
        &self.rep
    }

    /// Exponents `a_i` of the pivots `pi^a_i`.
    pub fn pivots(&self) -> Vec<i64> {
        (0..self.rep.rows()).map(|i| -self.rep.get(i, i).max_exp().unwrap_or(0)).collect()
    }

    /// `-v_inf(det) mod 3`.
    pub fn vertex_type(&self) -> u8 {
        (-self.pivots().iter().sum::<i64>()).rem_euclid(3) as u8
    }
}

impl<F: Field> fmt::Display for LatticeClass<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}

pub fn lattice_canonical<F: Field>(x: &RMat<F>) -> Result<LatticeClass<F>> {
    let n = x.rows();
    if !x.is_square() {
        return Err(Error::Dimension("lattices need a square matrix".into()));
    }
    if x.det().is_zero() {
        return Err(Error::NotInvertible);
    }
    let mut cols: Vec<Vec<RatFunc<F>>> = (0..n).map(|j| (0..n).map(|i| x.get(i, j).clone()).collect()).collect();
    let axpy = |dst: &mut Vec<RatFunc<F>>, f: &RatFunc<F>, src: &[RatFunc<F>]| {
        for (d, s) in dst.iter_mut().zip(src) {
            *d = d.sub(&f.mul(s));
        }
    };
    let mut a = vec![0i64; n];
    for i in 0..n {
        let (p, v) = (i..n)
            .filter(|&j| !cols[j][i].is_zero())
            .map(|j| (j, cols[j][i].val_inf().expect("nonzero")))
            .min_by_key(|&(j, v)| (v, j))
            .expect("invertible");
        cols.swap(i, p);
        let unit = pi_pow::<F>(v).mul(&cols[i][i].inv().expect("nonzero"));
        cols[i] = cols[i].iter().map(|e| e.mul(&unit)).collect();
        let pivot = cols[i].clone();
        for col in cols.iter_mut().skip(i + 1) {
            if !col[i].is_zero() {
                let f = col[i].mul(&pivot[i].inv().expect("nonzero"));
                axpy(col, &f, &pivot);
            }
        }
        a[i] = v;
    }
    for i in 0..n {
        for r in i + 1..n {
            let x = cols[i][r].clone();
            let keep = RatFunc::from_laurent(&polar_part(&x, a[r]));
            let q = x.sub(&keep).mul(&pi_pow::<F>(-a[r]));
            if !q.is_zero() {
                let src = cols[r].clone();
                axpy(&mut cols[i], &q, &src);
            }
        }
    }
    let shift = RatFunc::from_laurent(&LaurentPoly::t_pow(a[0]));
    let rep = Matrix::from_fn(n, n, |i, j| cols[j][i].mul(&shift).to_laurent().expect("reduced entries are Laurent"));
    Ok(LatticeClass { rep })
}

pub fn lattice_of<F: Field>(x: &LMat<F>) -> Result<LatticeClass<F>> {
    lattice_canonical(&x.to_ratfunc())
}

pub fn lattice_equal<F: Field>(a: &LatticeClass<F>, b: &LatticeClass<F>) -> bool {
    a == b
}

/// Valuations `(0, b, c)` of the elementary divisors of `X^-1 Y` over `O_inf`, read off the minors.
pub fn elem_divisors_of<F: Field>(x: &LMat<F>, y: &LMat<F>) -> Result<(i64, i64, i64)> {
    if x.rows() != 3 || y.rows() != 3 {
        return Err(Error::Dimension("elementary divisors are computed for 3x3 lattices".into()));
    }
    let m = x.adjugate().mul(y);
    let idx = [[0, 1], [0, 2], [1, 2]];
    let e1 = m.entries().iter().filter_map(val_laurent).min().ok_or(Error::NotInvertible)?;
    let s2 = idx
        .iter()
        .flat_map(|r| idx.iter().map(move |c| (r, c)))
        .filter_map(|(r, c)| val_laurent(&m.minor_det(r, c)))
        .min()
        .ok_or(Error::NotInvertible)?;
    let s3 = val_laurent(&m.det()).ok_or(Error::NotInvertible)?;
    let (e2, e3) = (s2 - e1, s3 - s2);
    Ok((0, e2 - e1, e3 - e1))
}

pub fn elem_divisors<F: Field>(a: &LatticeClass<F>, b: &LatticeClass<F>) -> Result<(i64, i64, i64)> {
    elem_divisors_of(&a.rep, &b.rep)
}

pub fn adjacent<F: Field>(a: &LatticeClass<F>, b: &LatticeClass<F>) -> bool {
    matches!(elem_divisors(a, b), Ok((0, 0, 1)) | Ok((0, 1, 1)))
}

/// Independent equality test: `X^-1 Y` is a scalar times an `O_inf`-unimodular matrix.
pub fn lattice_equal_oracle<F: Field>(x: &LMat<F>, y: &LMat<F>) -> Result<bool> {
    Ok(elem_divisors_of(x, y)? == (0, 0, 0))
}

#[derive(Clone, Debug, Serialize)]
pub struct VertexSummary {
    pub label: String,
    pub vertex_type: u8,
    pub rep: String,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rational;

    fn lm(rows: &[&[&str]]) -> LMat<Rational> {
        LMat::parse_rows(rows).unwrap()
    }

    #[test]
    fn valuations() {
        let r = |s: &str| RatFunc::<Rational>::parse(s).unwrap();
        assert_eq!(val_inf(&r("t")).unwrap(), -1);
        assert_eq!(val_inf(&r("t^-1+t")).unwrap(), -1);
        assert_eq!(val_inf(&r("5")).unwrap(), 0);
        assert!(val_inf(&r("0")).is_err());
    }

    #[test]
    fn polar_parts() {
        let x = RatFunc::<Rational>::parse("(1)/(1-t)").unwrap();
        assert_eq!(polar_part(&x, 3), LaurentPoly::parse("-t^-1-t^-2").unwrap());
        assert_eq!(
            polar_part(&RatFunc::<Rational>::parse("t^2+3+t^-1").unwrap(), 0),
            LaurentPoly::parse("t^2").unwrap()
        );
    }

    #[test]
    fn canonical_classes() {
        let i = lattice_of(&Matrix::<LaurentPoly<Rational>>::identity(3)).unwrap();
        let seven = lattice_of(&lm(&[&["7", "0", "0"], &["0", "7", "0"], &["0", "0", "7"]])).unwrap();
        assert_eq!(i, seven);
        let dt = lattice_of(&lm(&[&["t", "0", "0"], &["0", "1", "0"], &["0", "0", "1"]])).unwrap();
        assert_ne!(i, dt);
        assert_eq!((dt.vertex_type() + 3 - i.vertex_type()) % 3, 1);
        assert_eq!(elem_divisors(&i, &dt).unwrap(), (0, 1, 1));
        assert!(adjacent(&i, &dt) && adjacent(&dt, &i));
        let dt2 = lattice_of(&lm(&[&["t^2", "0", "0"], &["0", "1", "0"], &["0", "0", "1"]])).unwrap();
        assert_eq!(elem_divisors(&i, &dt2).unwrap(), (0, 2, 2));
        assert!(!adjacent(&i, &dt2));
        assert_eq!(elem_divisors(&dt, &dt).unwrap(), (0, 0, 0));
    }

    #[test]
    fn unimodular_invariance() {
        let x = lm(&[&["1+t", "t^2", "0"], &["t^-1", "2", "1"], &["0", "t", "3"]]);
        let u = lm(&[&["1", "t^-1", "0"], &["0", "1", "0"], &["2", "t^-2", "1"]]);
        let y = x.mul(&u).scale(&LaurentPoly::parse("t^3").unwrap());
        assert_eq!(lattice_of(&x).unwrap(), lattice_of(&y).unwrap());
        assert!(lattice_equal_oracle(&x, &y).unwrap());
    }
}
