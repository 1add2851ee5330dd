use std::fmt;

use super::{Field, LaurentPoly, RatFunc, Ring};
use crate::error::{Error, Result};

/// Dense matrix over a commutative ring, row-major.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix<R: Ring> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

pub type LMat<F> = Matrix<LaurentPoly<F>>;
pub type RMat<F> = Matrix<RatFunc<F>>;

impl<R: Ring> Matrix<R> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| R::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { R::one() } else { R::zero() })
    }

    pub fn diag(d: Vec<R>) -> Self {
        let n = d.len();
        let mut m = Self::zeros(n, n);
        for (k, x) in d.into_iter().enumerate() {
            m.set(k, k, x);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[R] {
        &self.data
    }

    pub fn row_vec(&self, i: usize) -> Vec<R> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn to_rows(&self) -> Vec<Vec<R>> {
        (0..self.rows).map(|i| self.row_vec(i)).collect()
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<S: Ring>(&self, f: impl Fn(&R) -> Result<S>) -> Result<Matrix<S>> {
        let data = self.data.iter().map(f).collect::<Result<Vec<_>>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        Self::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = R::zero();
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let b = rhs.get(k, j);
                if !b.is_zero() {
                    acc = acc.add(&a.mul(b));
                }
            }
            acc
        })
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum dimension mismatch");
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j).add(rhs.get(i, j)))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix difference dimension mismatch");
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j).sub(rhs.get(i, j)))
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|x| x.mul(c))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn bar(&self) -> Self {
        self.map(R::bar)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(R::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    /// Submatrix keeping the listed rows and columns.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// Block diagonal `diag(1, self)`.
    pub fn bordered(&self) -> Self {
        let n = self.rows + 1;
        Self::from_fn(n, n, |i, j| match (i, j) {
            (0, 0) => R::one(),
            (0, _) | (_, 0) => R::zero(),
            _ => self.get(i - 1, j - 1).clone(),
        })
    }

    /// Determinant by Laplace expansion along the first row.
    pub fn det(&self) -> R {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let idx: Vec<usize> = (0..self.rows).collect();
        self.minor_det(&idx, &idx)
    }

    /// Determinant of the square submatrix on the given rows and columns.
    pub fn minor_det(&self, rows: &[usize], cols: &[usize]) -> R {
        match rows.len() {
            0 => R::one(),
            1 => self.get(rows[0], cols[0]).clone(),
            2 => {
                let (a, b) = (self.get(rows[0], cols[0]), self.get(rows[0], cols[1]));
                let (c, d) = (self.get(rows[1], cols[0]), self.get(rows[1], cols[1]));
                a.mul(d).sub(&b.mul(c))
            }
            _ => {
                let mut acc = R::zero();
                let sub_rows = &rows[1..];
                for (k, &c) in cols.iter().enumerate() {
                    let a = self.get(rows[0], c);
                    if a.is_zero() {
                        continue;
                    }
                    let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                    let term = a.mul(&self.minor_det(sub_rows, &sub_cols));
                    acc = if k % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
                }
                acc
            }
        }
    }

    pub fn adjugate(&self) -> Self {
        let n = self.rows;
        if n == 1 {
            return Self::identity(1);
        }
        Self::from_fn(n, n, |i, j| {
            let rows: Vec<usize> = (0..n).filter(|&r| r != j).collect();
            let cols: Vec<usize> = (0..n).filter(|&c| c != i).collect();
            let m = self.minor_det(&rows, &cols);
            if (i + j) % 2 == 0 {
                m
            } else {
                m.neg()
            }
        })
    }

    /// Inverse over the ambient ring; requires a unit determinant.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Dimension("inverse of a non-square matrix".into()));
        }
        let d = self.det().unit_inverse().ok_or(Error::NotInvertible)?;
        let inv = self.adjugate().scale(&d);
        debug_assert!(self.mul(&inv).is_identity());
        Ok(inv)
    }

    /// `self^k` by binary exponentiation; negative `k` inverts first.
    pub fn pow(&self, k: i64) -> Result<Self> {
        let mut base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        Ok(acc)
    }

    pub fn commutator_is_trivial(&self, rhs: &Self) -> bool {
        self.mul(rhs) == rhs.mul(self)
    }

    /// `bar(A) * J * A^T`.
    pub fn hermitian_image(&self, j: &Self) -> Self {
        self.bar().mul(j).mul(&self.transpose())
    }
}

impl<F: Field> Matrix<F> {
    /// Matrix-vector product with a column vector.
    pub fn apply(&self, v: &[F]) -> Vec<F> {
        (0..self.rows).map(|i| (0..self.cols).fold(F::zero(), |acc, k| acc.add(&self.get(i, k).mul(&v[k])))).collect()
    }

    /// Whether `v` is an eigenvector (nonzero, image proportional to `v`).
    pub fn has_eigenvector(&self, v: &[F]) -> bool {
        let w = self.apply(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let lambda = w[p].mul(&v[p].inv().unwrap());
        w.iter().zip(v).all(|(a, b)| *a == lambda.mul(b))
    }

    pub fn is_permutation(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                let row = self.row_vec(i);
                row.iter().filter(|x| x.is_one()).count() == 1
                    && row.iter().filter(|x| x.is_zero()).count() == self.cols - 1
            })
            && (0..self.cols).all(|j| (0..self.rows).filter(|&i| self.get(i, j).is_one()).count() == 1)
    }
}

impl<F: Field> Matrix<LaurentPoly<F>> {
    pub fn eval(&self, x: &F) -> Result<Matrix<F>> {
        self.try_map(|f| f.eval(x))
    }

    pub fn to_ratfunc(&self) -> Matrix<RatFunc<F>> {
        self.map(RatFunc::from_laurent)
    }

    /// Parses rows of Laurent polynomial strings.
    pub fn parse_rows(rows: &[&[&str]]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|s| LaurentPoly::parse(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows)
    }

    /// Parses an integer matrix embedded as constants.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| LaurentPoly::constant(F::from_i64(x))).collect()).collect(),
        )
        .expect("rectangular literal")
    }

    /// Inverse over the Laurent ring when the determinant is a monomial unit.
    pub fn laurent_inverse(&self) -> Result<Self> {
        self.inverse()
    }
}

impl<F: Field> Matrix<RatFunc<F>> {
    pub fn eval(&self, x: &F) -> Result<Matrix<F>> {
        self.try_map(|f| f.eval(x))
    }

    pub fn is_laurent(&self) -> bool {
        self.entries().iter().all(RatFunc::is_laurent)
    }

    pub fn to_laurent(&self) -> Option<Matrix<LaurentPoly<F>>> {
        self.is_laurent().then(|| self.map(|f| f.to_laurent().expect("checked Laurent")))
    }
}

impl<F: Field> Matrix<F> {
    pub fn from_field_ints(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| F::from_i64(x)).collect()).collect())
            .expect("rectangular literal")
    }
}

impl<R: Ring> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl<'a, R: Ring> std::ops::Mul<&'a Matrix<R>> for &'a Matrix<R> {
    type Output = Matrix<R>;
    fn mul(self, rhs: &'a Matrix<R>) -> Matrix<R> {
        Matrix::mul(self, rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rational;

    type L = LaurentPoly<Rational>;

    #[test]
    fn determinant_and_inverse() {
        let m = LMat::<Rational>::parse_rows(&[&["-t", "1", "0"], &["0", "1", "0"], &["0", "0", "1"]]).unwrap();
        assert_eq!(m.det(), L::parse("-t").unwrap());
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        let sing = LMat::<Rational>::parse_rows(&[&["1", "t"], &["1", "t"]]).unwrap();
        assert_eq!(sing.inverse(), Err(Error::NotInvertible));
        let nonunit = LMat::<Rational>::parse_rows(&[&["1+t", "0"], &["0", "1"]]).unwrap();
        assert_eq!(nonunit.inverse(), Err(Error::NotInvertible));
    }

    #[test]
    fn unipotent_power() {
        let u = Matrix::<Rational>::from_field_ints(&[&[1, 1], &[0, 1]]);
        let p = u.pow(-58854).unwrap();
        assert_eq!(p, Matrix::from_field_ints(&[&[1, -58854], &[0, 1]]));
        assert!(LMat::<Rational>::identity(3).mul(&LMat::identity(3)).is_identity());
    }

    #[test]
    fn eigen_and_permutation() {
        let p = Matrix::<Rational>::from_field_ints(&[&[0, 1], &[1, 0]]);
        assert!(p.is_permutation());
        assert!(p.has_eigenvector(&[Rational::int(1), Rational::int(1)]));
        assert!(!p.has_eigenvector(&[Rational::int(1), Rational::int(0)]));
        assert!(!Matrix::<Rational>::from_field_ints(&[&[1, 1], &[0, 1]]).is_permutation());
    }
}
