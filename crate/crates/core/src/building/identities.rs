use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::gens::*;
use super::lattice::{adjacent, lattice_equal_oracle, lattice_of, LatticeClass};
use crate::algebra::{Field, Gaussian, LMat, LaurentPoly, Matrix, MultiQuad, ProjMat, Rational, Ring};
use crate::check::Check;
use crate::error::{Error, Result};

/// `(b12, b13)` of the evaluation at `t = -i`, normalized to a unipotent upper-triangular matrix.
pub fn phi(b: &LMat<Gaussian>) -> Result<(Gaussian, Gaussian)> {
    let at = b.eval(&Gaussian::i().neg())?;
    let c = at.get(0, 0).inv().ok_or_else(|| Error::Precondition("(1,1) entry vanishes at t = -i".into()))?;
    let at = at.scale(&c);
    let unipotent = (0..3).all(|i| at.get(i, i).is_one() && (0..i).all(|j| at.get(i, j).is_zero()));
    if !unipotent || !at.get(1, 2).is_zero() {
        return Err(Error::Precondition(format!("not in the unipotent kernel: {at}")));
    }
    Ok((at.get(0, 1).clone(), at.get(0, 2).clone()))
}

pub fn in_unipotent_kernel(b: &LMat<Gaussian>) -> bool {
    phi(b).is_ok()
}

/// `phi(u[A] uk[r] u[A]^-1)` by the closed form `(conj(a1) r (r^2+i)/(r^4+1), -a2 r (r^2+i)/(r^4+1))`.
pub fn phi_closed_form(a1: &Gaussian, a2: &Gaussian, r: &BigRational) -> (Gaussian, Gaussian) {
    let rg = Gaussian::new(r.clone(), BigRational::zero());
    let r2 = rg.mul(&rg);
    let f = rg.mul(&r2.add(&Gaussian::i())).mul(&r2.mul(&r2).add(&Gaussian::one()).inv().expect("r^4 + 1 > 0"));
    (a1.bar().mul(&f), a2.neg().mul(&f))
}

#[derive(Clone, Debug, PartialEq)]
pub enum LatticeIdentity {
    /// Chain of four matrices through one type-1 class, for `k_E[r^2]`.
    Chain(BigRational),
    KZeroInfinity,
    KReciprocal(BigRational),
    KProduct(BigRational, BigRational),
    /// One identity, or all nine when `None`.
    UnipotentWords(Option<usize>),
    PhiClosedForm,
    PhiValues,
    TypeOneLink,
}

impl std::str::FromStr for LatticeIdentity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let q = |x: &str| Rational::parse(x).map(|r| r.0);
        let (head, args) = s.split_once(':').unwrap_or((s, ""));
        let args: Vec<&str> = args.split(',').filter(|a| !a.is_empty()).collect();
        let arg = |k: usize, default: &str| q(args.get(k).copied().unwrap_or(default));
        Ok(match head {
            "chain" | "lemma43" => LatticeIdentity::Chain(arg(0, "2")?),
            "k-zero-infinity" | "rel18" => LatticeIdentity::KZeroInfinity,
            "k-reciprocal" | "rel19" => LatticeIdentity::KReciprocal(arg(0, "2")?),
            "k-product" | "rel20" => LatticeIdentity::KProduct(arg(0, "2")?, arg(1, "1")?),
            "unipotent-words" | "eq21" => LatticeIdentity::UnipotentWords(match args.first() {
                Some(j) => Some(j.parse().map_err(|_| Error::Parse(format!("bad index `{j}`")))?),
                None => None,
            }),
            "phi-closed-form" | "eq22" => LatticeIdentity::PhiClosedForm,
            "phi" => LatticeIdentity::PhiValues,
            "type-one-link" | "lemma47" => LatticeIdentity::TypeOneLink,
            _ => return Err(Error::Parse(format!("unknown identity `{s}`"))),
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub id: String,
    pub passed: bool,
    pub checks: Vec<Check>,
    /// Primes whose square roots were adjoined.
    pub tower: Vec<u64>,
}

fn tower_of(ms: &[&LMat<MultiQuad>]) -> Vec<u64> {
    let primes: BTreeSet<u64> = ms
        .iter()
        .flat_map(|m| m.entries().iter().flat_map(|e| e.terms().flat_map(|(_, c)| c.primes()).collect::<Vec<_>>()))
        .collect();
    primes.into_iter().collect()
}

fn ke(p: KParam) -> Result<LMat<MultiQuad>> {
    building_lift(&BuildingGen::KE(p))
}

fn mq(q: &BigRational) -> MultiQuad {
    MultiQuad::from_gaussian(Gaussian::new(q.clone(), BigRational::zero()))
}

fn sqrt(q: &BigRational) -> Result<MultiQuad> {
    MultiQuad::sqrt_rational(q)
}

fn oe(a: [[MultiQuad; 2]; 2]) -> Result<LMat<MultiQuad>> {
    let [[p, q], [r, s]] = a;
    building_lift(&BuildingGen::OE(Matrix::from_rows(vec![vec![p, q], vec![r, s]])?))
}

fn oe_int(a: [[i64; 2]; 2]) -> Result<LMat<MultiQuad>> {
    oe(a.map(|row| row.map(MultiQuad::from_i64)))
}

fn adj<F: Field>(m: &LMat<F>) -> LMat<F> {
    m.adjugate()
}

fn proj_eq<F: Field>(a: &LMat<F>, b: &LMat<F>) -> Result<bool> {
    Ok(ProjMat::from_laurent(a)? == ProjMat::from_laurent(b)?)
}

fn k_zero_infinity() -> Result<(bool, Vec<u64>)> {
    let (k0, kinf) = (ke(KParam::Zero)?, ke(KParam::Infinity)?);
    let lhs = kinf.mul(&k0);
    let rhs = oe_int([[0, -1], [1, 0]])?.mul(&adj(&kinf)).mul(&oe_int([[0, 1], [-1, 0]])?);
    Ok((proj_eq(&lhs, &rhs)?, tower_of(&[&k0, &kinf])))
}

fn k_reciprocal(r: &BigRational) -> Result<(bool, Vec<u64>)> {
    if !r.is_positive() {
        return Err(Error::InvalidParam("relation needs r > 0".into()));
    }
    let kr = ke(KParam::rational(r))?;
    let kri = ke(KParam::rational(&r.recip()))?;
    let lhs = kr.mul(&oe_int([[-1, 0], [0, -1]])?).mul(&kri);
    let rot = oe_int([[0, 1], [-1, 0]])?;
    let rhs = rot.mul(&adj(&ke(KParam::Infinity)?)).mul(&rot);
    Ok((proj_eq(&lhs, &rhs)?, tower_of(&[&kr, &kri])))
}

fn k_product(r1: &BigRational, r2: &BigRational) -> Result<(bool, Vec<u64>)> {
    let one = BigRational::one();
    if !r1.is_positive() || !r2.is_positive() || r1 * r2 <= one {
        return Err(Error::InvalidParam("relation needs r1, r2 > 0 and r1 r2 > 1".into()));
    }
    let sum = r1 + r2;
    let p = (r1 * r2).recip();
    let (a, b) = (sqrt(&p)?, sqrt(&(&one - &p))?);
    let mid = oe([[a.neg(), b.neg()], [b.clone(), a.neg()]])?;
    let (k1, k2) = (ke(KParam::Sqrt(r1.clone()))?, ke(KParam::Sqrt(r2.clone()))?);
    let lhs = k1.mul(&mid).mul(&k2);
    let x = sqrt(&((r2 - r1.recip()) / &sum))?;
    let y = sqrt(&((r1 + r1.recip()) / &sum))?;
    let z = sqrt(&((r1 - r2.recip()) / &sum))?;
    let w = sqrt(&((r2 + r2.recip()) / &sum))?;
    let left = oe([[x.neg(), y.clone()], [y.neg(), x.neg()]])?;
    let right = oe([[z.neg(), w.clone()], [w.neg(), z.neg()]])?;
    let kk = ke(KParam::Sqrt(&sum / (r1 * r2 - &one)))?;
    let rhs = left.mul(&adj(&kk)).mul(&right);
    Ok((proj_eq(&lhs, &rhs)?, tower_of(&[&k1, &mid, &k2, &left, &kk, &right])))
}

/// The four matrices of the chain `[k_E[r]] = ... = [[t,0,0],[rt,1,0],[0,0,1]]`.
pub fn chain_through_identity(r: &BigRational) -> Result<Vec<LMat<MultiQuad>>> {
    if !r.is_positive() {
        return Err(Error::InvalidParam("chain needs r > 0".into()));
    }
    let t = LaurentPoly::<MultiQuad>::t();
    let c = |q: &BigRational| LaurentPoly::constant(mq(q));
    let (z, one) = (LaurentPoly::zero(), LaurentPoly::one());
    let r2 = r * r;
    let m = |rows: Vec<Vec<LaurentPoly<MultiQuad>>>| Matrix::from_rows(rows).expect("3x3");
    let rt = t.scale(&mq(r));
    let second = m(vec![
        vec![c(&r2).sub(&t), rt.neg(), z.clone()],
        vec![LaurentPoly::phi().scale(&mq(r)).neg(), one.sub(&t.scale(&mq(&r2))), z.clone()],
        vec![z.clone(), z.clone(), one.clone()],
    ]);
    let third = m(vec![
        vec![z.clone(), rt.neg(), z.clone()],
        vec![c(&(-(BigRational::one() + &r2 * &r2) / r)), one.sub(&t.scale(&mq(&r2))), z.clone()],
        vec![z.clone(), z.clone(), one.clone()],
    ]);
    let fourth = m(vec![
        vec![t.clone(), z.clone(), z.clone()],
        vec![rt, one.clone(), z.clone()],
        vec![z.clone(), z.clone(), one],
    ]);
    Ok(vec![ke(KParam::rational(r))?, second, third, fourth])
}

fn chain_checks(r: &BigRational) -> Result<(Vec<Check>, Vec<u64>)> {
    let chain = chain_through_identity(r)?;
    let classes: Vec<LatticeClass<MultiQuad>> = chain.iter().map(lattice_of).collect::<Result<_>>()?;
    let mut checks = Vec::new();
    for k in 1..chain.len() {
        checks.push(Check::new(format!("step{k}.canonical"), classes[k] == classes[0]));
        checks.push(Check::new(format!("step{k}.oracle"), lattice_equal_oracle(&chain[0], &chain[k])?));
    }
    let id = LatticeClass::identity(3);
    checks.push(Check::new("type-1", classes[0].vertex_type() == 1));
    checks.push(Check::new("in-link", adjacent(&id, &classes[0])));
    Ok((checks, tower_of(&[&chain[0]])))
}

fn unipotent_word_matches(j: usize) -> Result<bool> {
    let rhs = eval_h_word(&parse_h_word(A_IN_H[j - 1])?);
    proj_eq(&a_matrix(j)?, &rhs)
}

fn g(re: (i64, i64), im: (i64, i64)) -> Gaussian {
    Gaussian::from_parts(re, im)
}

/// Expected values of `phi` on `d1, d2, g1..g4`.
pub fn expected_phi() -> Vec<(Named, (Gaussian, Gaussian))> {
    let z = Gaussian::zero();
    vec![
        (Named::D1, (z.clone(), z.clone())),
        (Named::D2, (z.clone(), z.clone())),
        (Named::G1, (g((1, 2), (1, 2)), z.clone())),
        (Named::G2, (z.clone(), g((-1, 2), (-1, 2)))),
        (Named::G3, (g((1, 2), (-1, 2)), z.clone())),
        (Named::G4, (z, g((1, 2), (-1, 2)))),
    ]
}

/// Matrices of `SU(2, Q(i))` with entries in `{0, +-1, +-i}`.
pub fn su2_grid() -> Vec<(Gaussian, Gaussian)> {
    let units = [g((1, 1), (0, 1)), g((-1, 1), (0, 1)), g((0, 1), (1, 1)), g((0, 1), (-1, 1))];
    let mut out = Vec::new();
    for u in &units {
        out.push((u.clone(), Gaussian::zero()));
        out.push((Gaussian::zero(), u.clone()));
    }
    out
}

fn phi_closed_form_checks() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for (a1, a2) in su2_grid() {
        let a = Matrix::from_rows(vec![vec![a1.clone(), a2.clone()], vec![a2.bar().neg(), a1.bar()]])?;
        let ai = a.transpose().bar();
        for r in 1..=3 {
            let r = BigRational::from_integer(r.into());
            let k = unipotent_lift(&BuildingGen::UK(r.clone()))?;
            let m = u_block(&a).mul(&k).mul(&u_block(&ai));
            let ok = phi(&m).ok() == Some(phi_closed_form(&a1, &a2, &r));
            checks.push(Check::new(format!("a=({a1},{a2}).r={r}"), ok));
        }
    }
    Ok(checks)
}

/// The eleven type-1 classes of the link of `[I]`, as words in `d1, d2, g1..g4`.
pub const TYPE_ONE_WORDS: [&str; 11] =
    ["d1", "d2", "d1^-1 d2^-1", "g1", "g2", "g3", "g4", "d2^-1 g1^-1", "d2^-1 g3^-1", "d1^-1 g2^-1", "d1^-1 g4^-1"];

pub fn type_one_classes() -> Result<Vec<LatticeClass<Gaussian>>> {
    TYPE_ONE_WORDS.iter().map(|w| lattice_of(&eval_h_word(&parse_h_word(w)?))).collect()
}

fn type_one_link() -> Result<Vec<Check>> {
    let classes = type_one_classes()?;
    let id = LatticeClass::identity(3);
    let distinct = classes.iter().collect::<std::collections::HashSet<_>>().len() == classes.len();
    Ok(vec![
        Check::new("pairwise-distinct", distinct),
        Check::new("type-1", classes.iter().all(|c| c.vertex_type() == 1)),
        Check::new("adjacent-to-identity", classes.iter().all(|c| adjacent(&id, c))),
    ])
}

pub fn verify_identity(id: &LatticeIdentity) -> Result<IdentityReport> {
    let mut tower = Vec::new();
    let (name, checks) = match id {
        LatticeIdentity::Chain(r) => {
            let (checks, t) = chain_checks(r)?;
            tower = t;
            (format!("chain.r={}", Rational(r.clone())), checks)
        }
        LatticeIdentity::KZeroInfinity => {
            let (ok, t) = k_zero_infinity()?;
            tower = t;
            ("k-zero-infinity".into(), vec![Check::new("projective-equality", ok)])
        }
        LatticeIdentity::KReciprocal(r) => {
            let (ok, t) = k_reciprocal(r)?;
            tower = t;
            (format!("k-reciprocal.r={}", Rational(r.clone())), vec![Check::new("projective-equality", ok)])
        }
        LatticeIdentity::KProduct(r1, r2) => {
            let (ok, t) = k_product(r1, r2)?;
            tower = t;
            (
                format!("k-product.r1={}.r2={}", Rational(r1.clone()), Rational(r2.clone())),
                vec![Check::new("projective-equality", ok)],
            )
        }
        LatticeIdentity::UnipotentWords(j) => {
            let idx: Vec<usize> = match j {
                Some(j) if (1..=9).contains(j) => vec![*j],
                Some(j) => return Err(Error::InvalidParam(format!("no a_{j}"))),
                None => (1..=9).collect(),
            };
            let mut checks = Vec::new();
            for j in idx {
                checks.push(Check::new(format!("a{j}"), unipotent_word_matches(j)?));
                checks.push(Check::new(format!("a{j}.unipotent"), in_unipotent_kernel(&a_matrix(j)?)));
            }
            ("unipotent-words".into(), checks)
        }
        LatticeIdentity::PhiClosedForm => ("phi-closed-form".into(), phi_closed_form_checks()?),
        LatticeIdentity::PhiValues => {
            let checks = expected_phi()
                .into_iter()
                .map(|(n, v)| Check::new(n.name(), phi(&named_lift(n)).ok() == Some(v)))
                .collect();
            ("phi".into(), checks)
        }
        LatticeIdentity::TypeOneLink => ("type-one-link".into(), type_one_link()?),
    };
    let passed = crate::check::all_pass(&checks);
    Ok(IdentityReport { id: name, passed, checks, tower })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn phi_values() {
        assert!(verify_identity(&LatticeIdentity::PhiValues).unwrap().passed);
        assert!(phi(&LMat::parse_rows(&[&["1", "0", "0"], &["0", "0", "1"], &["0", "1", "0"]]).unwrap()).is_err());
    }

    #[test]
    fn elementary_relations() {
        assert!(verify_identity(&LatticeIdentity::KZeroInfinity).unwrap().passed);
        assert!(verify_identity(&LatticeIdentity::KReciprocal(q(2))).unwrap().passed);
        let r20 = verify_identity(&LatticeIdentity::KProduct(q(2), q(1))).unwrap();
        assert!(r20.passed);
        assert_eq!(r20.tower, vec![2, 3, 5], "{r20:?}");
        assert!(verify_identity(&LatticeIdentity::KProduct(q(1), q(1))).is_err());
    }

    #[test]
    fn chain() {
        let rep = verify_identity(&LatticeIdentity::Chain(q(2))).unwrap();
        assert!(rep.passed, "{:?}", rep.checks);
        assert_eq!(rep.tower, vec![17]);
    }

    #[test]
    fn third_unipotent_word() {
        assert!(verify_identity(&LatticeIdentity::UnipotentWords(Some(3))).unwrap().passed);
    }

    #[test]
    fn link_vertices() {
        let rep = verify_identity(&LatticeIdentity::TypeOneLink).unwrap();
        assert!(rep.passed, "{:?}", rep.checks);
    }

    #[test]
    fn ids_parse() {
        assert_eq!("rel20:3,2".parse::<LatticeIdentity>().unwrap(), LatticeIdentity::KProduct(q(3), q(2)));
        assert_eq!("eq21:4".parse::<LatticeIdentity>().unwrap(), LatticeIdentity::UnipotentWords(Some(4)));
        assert!("nope".parse::<LatticeIdentity>().is_err());
    }
}
