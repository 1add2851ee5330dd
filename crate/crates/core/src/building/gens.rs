use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::{Field, Gaussian, LMat, LaurentPoly, Matrix, MultiQuad, ProjMat, Rational, Ring};
use crate::braid::FreeWord;
use crate::error::{Error, Result};

/// Parameter of an elementary generator: `0`, `infinity`, or `sqrt(q)` with `q > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KParam {
    Zero,
    Infinity,
    Sqrt(BigRational),
}

impl KParam {
    pub fn rational(r: &BigRational) -> Self {
        if r.is_zero() {
            KParam::Zero
        } else {
            KParam::Sqrt(r * r)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Named {
    D1,
    D2,
    G1,
    G2,
    G3,
    G4,
}

impl Named {
    pub const ALL: [Named; 6] = [Named::D1, Named::D2, Named::G1, Named::G2, Named::G3, Named::G4];

    pub fn name(self) -> &'static str {
        ["d1", "d2", "g1", "g2", "g3", "g4"][self as usize]
    }

    /// Letter index used in free words: `d1, d2, g1..g4` are `1..=6`.
    pub fn symbol(self) -> i32 {
        self as i32 + 1
    }

    pub fn from_symbol(k: i32) -> Option<Self> {
        Named::ALL.get((k.unsigned_abs() as usize).checked_sub(1)?).copied()
    }
}

impl std::str::FromStr for Named {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Named::ALL.into_iter().find(|n| n.name() == s).ok_or_else(|| Error::Parse(format!("unknown generator `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum BuildingGen {
    KE(KParam),
    OE(Matrix<MultiQuad>),
    UK(BigRational),
    UInf,
    U0,
    UU(Matrix<Gaussian>),
    Named(Named),
}

impl fmt::Display for BuildingGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuildingGen::KE(KParam::Zero) => write!(f, "k[0]"),
            BuildingGen::KE(KParam::Infinity) => write!(f, "k[inf]"),
            BuildingGen::KE(KParam::Sqrt(q)) => write!(f, "k[sqrt({})]", Rational(q.clone())),
            BuildingGen::OE(a) => write!(f, "o{a}"),
            BuildingGen::UK(r) => write!(f, "uk[{}]", Rational(r.clone())),
            BuildingGen::UInf => write!(f, "uk[inf]"),
            BuildingGen::U0 => write!(f, "uk[0]"),
            BuildingGen::UU(a) => write!(f, "u{a}"),
            BuildingGen::Named(n) => write!(f, "{}", n.name()),
        }
    }
}

fn gc(re: i64, im: i64) -> Gaussian {
    Gaussian::from_parts((re, 1), (im, 1))
}

fn gq(r: &BigRational) -> Gaussian {
    Gaussian::new(r.clone(), BigRational::zero())
}

fn lc<F: Field>(c: F) -> LaurentPoly<F> {
    LaurentPoly::constant(c)
}

fn mat2<F: Field>(a: [[F; 2]; 2]) -> Matrix<F> {
    let [[p, q], [r, s]] = a;
    Matrix::from_rows(vec![vec![p, q], vec![r, s]]).expect("2x2")
}

/// `u[A] = diag(1, A)`.
pub fn u_block<F: Field>(a: &Matrix<F>) -> LMat<F> {
    a.map(|x| lc(x.clone())).bordered()
}

fn diag_t<F: Field>(pos: usize, c: F) -> LMat<F> {
    let mut m = Matrix::identity(3);
    m.set(pos, pos, LaurentPoly::monomial(c, 1));
    m
}

fn require_unitary(a: &Matrix<Gaussian>) -> Result<()> {
    if a.rows() != 2 || a.cols() != 2 {
        return Err(Error::Dimension("unitary generators take a 2x2 matrix".into()));
    }
    if !a.mul(&a.transpose().bar()).is_identity() {
        return Err(Error::InvalidParam("matrix is not unitary".into()));
    }
    Ok(())
}

/// `k[r] diag(1, mu, (r^2+i)/sqrt(1+r^4))` scaled by `sqrt(1+r^4)`, with `mu = (r^2+i)/(1+ir^2)`.
fn uk_lift(r: &BigRational) -> Result<LMat<Gaussian>> {
    if !r.is_positive() {
        return Err(Error::InvalidParam("unipotent generators need r > 0".into()));
    }
    let r2 = gq(&(r * r));
    let rr = gq(r);
    let i = Gaussian::i();
    let num = r2.add(&i);
    let mu = num.mul(&Gaussian::one().add(&i.mul(&r2)).inv().expect("1 + i r^2 is nonzero"));
    let t = LaurentPoly::<Gaussian>::t();
    let one = LaurentPoly::one();
    let rows = vec![
        vec![lc(r2.clone()).sub(&t), t.scale(&rr.neg()).scale(&mu), LaurentPoly::zero()],
        vec![LaurentPoly::phi().scale(&rr.neg()), one.sub(&t.scale(&r2)).scale(&mu), LaurentPoly::zero()],
        vec![LaurentPoly::zero(), LaurentPoly::zero(), lc(num)],
    ];
    Ok(Matrix::from_rows(rows).expect("3x3"))
}

fn rotation() -> (Matrix<Gaussian>, Matrix<Gaussian>) {
    (mat2([[gc(0, 0), gc(1, 0)], [gc(-1, 0), gc(0, 0)]]), mat2([[gc(0, 0), gc(-1, 0)], [gc(1, 0), gc(0, 0)]]))
}

fn conj_u(a: &Matrix<Gaussian>, ainv: &Matrix<Gaussian>, x: &LMat<Gaussian>) -> LMat<Gaussian> {
    u_block(a).mul(x).mul(&u_block(ainv))
}

pub fn named_lift(n: Named) -> LMat<Gaussian> {
    let (j, ji) = rotation();
    let g1 = uk_lift(&BigRational::one()).expect("r = 1");
    let d1 = diag_t(1, Gaussian::i());
    match n {
        Named::D1 => d1,
        Named::D2 => conj_u(&j, &ji, &d1),
        Named::G1 => g1,
        Named::G2 => conj_u(&j, &ji, &g1),
        Named::G3 => conj_u(
            &mat2([[gc(0, 1), gc(0, 0)], [gc(0, 0), gc(0, -1)]]),
            &mat2([[gc(0, -1), gc(0, 0)], [gc(0, 0), gc(0, 1)]]),
            &g1,
        ),
        Named::G4 => conj_u(
            &mat2([[gc(0, 0), gc(0, 1)], [gc(0, 1), gc(0, 0)]]),
            &mat2([[gc(0, 0), gc(0, -1)], [gc(0, -1), gc(0, 0)]]),
            &g1,
        ),
    }
}

/// Representative over `Q(i)` of a generator of the unipotent side.
pub fn unipotent_lift(g: &BuildingGen) -> Result<LMat<Gaussian>> {
    match g {
        BuildingGen::UK(r) => uk_lift(r),
        BuildingGen::U0 => Ok(diag_t(0, Gaussian::i())),
        BuildingGen::UInf => Ok(diag_t(1, Gaussian::i())),
        BuildingGen::UU(a) => {
            require_unitary(a)?;
            Ok(u_block(a))
        }
        BuildingGen::Named(n) => Ok(named_lift(*n)),
        BuildingGen::KE(_) | BuildingGen::OE(_) => {
            Err(Error::InvalidParam(format!("{g} needs radicals; use the tower representative")))
        }
    }
}

pub fn unipotent_gen(g: &BuildingGen) -> Result<ProjMat<Gaussian>> {
    ProjMat::from_laurent(&unipotent_lift(g)?)
}

fn to_tower(m: &LMat<Gaussian>) -> LMat<MultiQuad> {
    m.map(|e| e.map(|c| MultiQuad::from_gaussian(c.clone())))
}

fn mq(q: &BigRational) -> MultiQuad {
    MultiQuad::from_gaussian(gq(q))
}

/// `k_E[sqrt(q)]` with its radicals.
fn ke_lift(p: &KParam) -> Result<LMat<MultiQuad>> {
    let q = match p {
        KParam::Zero => return Ok(diag_t(0, MultiQuad::one().neg())),
        KParam::Infinity => return Ok(diag_t(1, MultiQuad::one().neg())),
        KParam::Sqrt(q) => q,
    };
    if !q.is_positive() {
        return Err(Error::InvalidParam("elementary generators need r > 0".into()));
    }
    let r = MultiQuad::sqrt_rational(q)?;
    let s = MultiQuad::sqrt_rational(&(BigRational::one() + q * q))?;
    let si = s.inv().ok_or(Error::NotInvertible)?;
    let t = LaurentPoly::<MultiQuad>::t();
    let one = LaurentPoly::<MultiQuad>::one();
    let rows = vec![
        vec![lc(mq(q)).sub(&t).scale(&si), t.scale(&r.neg()).scale(&si), LaurentPoly::zero()],
        vec![LaurentPoly::phi().scale(&r.neg()).scale(&si), one.sub(&t.scale(&mq(q))).scale(&si), LaurentPoly::zero()],
        vec![LaurentPoly::zero(), LaurentPoly::zero(), one],
    ];
    Ok(Matrix::from_rows(rows).expect("3x3"))
}

/// Representative of any generator over the radical tower.
pub fn building_lift(g: &BuildingGen) -> Result<LMat<MultiQuad>> {
    match g {
        BuildingGen::KE(p) => ke_lift(p),
        BuildingGen::OE(a) => {
            if a.rows() != 2 || a.cols() != 2 || !a.mul(&a.transpose()).is_identity() {
                return Err(Error::InvalidParam("orthogonal generators take an orthogonal 2x2 matrix".into()));
            }
            Ok(u_block(a))
        }
        _ => Ok(to_tower(&unipotent_lift(g)?)),
    }
}

pub fn building_gen(g: &BuildingGen) -> Result<ProjMat<MultiQuad>> {
    ProjMat::from_laurent(&building_lift(g)?)
}

/// `S'` and `T'`, the diagonalized images of the two free generators.
pub fn s_prime<F: Field>() -> LMat<F> {
    LMat::parse_rows(&[&["1", "0", "0"], &["0", "-t", "0"], &["0", "0", "-t^-1"]]).expect("valid literal")
}

pub fn t_prime<F: Field>() -> LMat<F> {
    LMat::parse_rows(&[&["-t^-1+1-t", "0", "t-t^2"], &["t^-2-t^-1+1-t", "0", "-1+t-t^2"], &["0", "-t^-1", "0"]])
        .expect("valid literal")
}

/// Parses words such as `d1^3 D2 g4^-2` over a fixed list of letter names;
/// a capitalised name is the inverse letter.
pub fn parse_named_word(s: &str, names: &[&str]) -> Result<FreeWord> {
    let mut letters = Vec::new();
    for tok in s.split_whitespace() {
        let bad = || Error::Parse(format!("malformed letter `{tok}`"));
        let (head, exp) = match tok.split_once('^') {
            Some((h, e)) => (h, e.parse::<i64>().map_err(|_| bad())?),
            None => (tok, 1),
        };
        let (k, sign) = match names.iter().position(|n| *n == head) {
            Some(k) => (k, 1),
            None => (names.iter().position(|n| n.to_ascii_uppercase() == head).ok_or_else(bad)?, -1),
        };
        let l = sign * (k as i32 + 1);
        let (l, n) = if exp < 0 { (-l, exp.unsigned_abs()) } else { (l, exp as u64) };
        letters.extend(std::iter::repeat_n(l, n as usize));
    }
    Ok(FreeWord::new(letters))
}

pub const H_NAMES: [&str; 6] = ["d1", "d2", "g1", "g2", "g3", "g4"];
pub const ST_NAMES: [&str; 2] = ["s", "t"];

pub fn parse_h_word(s: &str) -> Result<FreeWord> {
    parse_named_word(s, &H_NAMES)
}

/// Text with exponents collected, such as `d1^3 d2^-3`.
pub fn named_word_text(w: &FreeWord, names: &[&str]) -> String {
    let mut parts: Vec<(i32, i64)> = Vec::new();
    for &l in w.letters() {
        match parts.last_mut() {
            Some((p, e)) if p.abs() == l.abs() => *e += if *p == l { 1 } else { -1 },
            _ => parts.push((l.abs(), l.signum() as i64)),
        }
    }
    if parts.is_empty() {
        return "1".into();
    }
    parts
        .iter()
        .map(|&(l, e)| {
            let name = names[l as usize - 1];
            if e == 1 {
                name.to_string()
            } else {
                format!("{name}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Product of lifts with inverses taken as adjugates, so the result is a projective representative.
pub fn eval_word<F: Field>(w: &FreeWord, lifts: &[LMat<F>]) -> LMat<F> {
    let n = lifts[0].rows();
    let adj: Vec<LMat<F>> = lifts.iter().map(|m| m.adjugate()).collect();
    w.letters().iter().fold(Matrix::identity(n), |acc, &l| {
        let k = l.unsigned_abs() as usize - 1;
        acc.mul(if l > 0 { &lifts[k] } else { &adj[k] })
    })
}

pub fn named_lifts() -> Vec<LMat<Gaussian>> {
    Named::ALL.iter().map(|&n| named_lift(n)).collect()
}

pub fn eval_h_word(w: &FreeWord) -> LMat<Gaussian> {
    eval_word(w, &named_lifts())
}

/// The nine generators `a_j` as words in `S'` and `T'`.
pub const A_IN_ST: [&str; 9] = [
    "s^2 t^-2",
    "s t^3 s^-1 t^-1",
    "s t s t^-1",
    "t^2 s t s^-1 t^-1",
    "t^4",
    "t^3 s t^-1 s^-1",
    "t s t^-1 s",
    "t s t s^-1",
    "t s^2 t^-3",
];

/// The nine generators `a_j` as words in `d1, d2, g1..g4`.
pub const A_IN_H: [&str; 9] = [
    "d1^3 d2^-3 g4^2 g1^-2",
    "d1 d2^-1 g3^2 d1 g2^2 d2^-1 g3^-2 d1 d2^-1 g1^-2",
    "d1 g3^2 d1^-1 g1^-2",
    "g1^2 g4^-2 d2^-3 g3^-2 d1 g1^-2",
    "g1^2 d1^-1 g4^-2 d2^-1 g1^-2 d1 g4^2 d2",
    "g1^2 d1^-1 g4^-2 d2 g1^-2 d1^-1 g3^-2 d1^-1",
    "d2^2 g1^2 d1^-1 g3^2 d1",
    "d2 g1^2 d1^-3 g2^-2 d2^2",
    "d2^3 g1^2 d1^-2 g1^2 d1 g4^2 g1^-2",
];

pub fn a_matrix(j: usize) -> Result<LMat<Gaussian>> {
    let w =
        parse_named_word(A_IN_ST.get(j.wrapping_sub(1)).ok_or(Error::InvalidParam(format!("no a_{j}")))?, &ST_NAMES)?;
    Ok(eval_word(&w, &[s_prime(), t_prime()]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn displays() {
        let u0 = unipotent_lift(&BuildingGen::U0).unwrap();
        assert_eq!(u0, LMat::parse_rows(&[&["(0+1i)*t", "0", "0"], &["0", "1", "0"], &["0", "0", "1"]]).unwrap());
        let g1 = unipotent_lift(&BuildingGen::UK(BigRational::one())).unwrap();
        let at = g1.eval(&gc(0, -1)).unwrap();
        let c = at.get(0, 0).inv().unwrap();
        let at = at.scale(&c);
        assert!(at.get(1, 0).is_zero() && at.get(2, 1).is_zero() && at.get(1, 1).is_one());
        assert_eq!(*at.get(0, 1), gc(1, 0).div(&gc(1, -1)).unwrap());
    }

    #[test]
    fn generators_are_unitary() {
        let d = Matrix::diag(vec![LaurentPoly::one(), LaurentPoly::phi(), LaurentPoly::phi()]);
        for n in Named::ALL {
            let m = named_lift(n);
            let img = m.hermitian_image(&d);
            let c = img.get(0, 0).clone();
            assert_eq!(img, d.scale(&c), "{}", n.name());
        }
        let k = building_lift(&BuildingGen::KE(KParam::Sqrt(BigRational::from_integer(2.into())))).unwrap();
        let d = d.map(|e| e.map(|c| MultiQuad::from_gaussian(c.clone())));
        assert_eq!(k.hermitian_image(&d), d);
    }

    #[test]
    fn word_text() {
        let w = parse_h_word("d1^3 D2 d2^-2 g4").unwrap();
        assert_eq!(named_word_text(&w, &H_NAMES), "d1^3 d2^-3 g4");
        assert!(parse_h_word("x1").is_err());
    }
}
