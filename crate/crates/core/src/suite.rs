//! Registered identity checks, the ten acceptance criteria and the scorecard.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{
    projective_unitary_scalar, unitary_defect, Field, Fp, Gaussian, LMat, LaurentPoly, Rational, Ring,
};
use crate::braid::{semidirect_identities, BraidWord, FreeWord};
use crate::building::{
    eval_h_word, explore, explored_classes, named_lift, phi, s_prime, t_prime, type_one_classes, verify_identity,
    BuildingGen, LatticeIdentity, Named,
};
use crate::burau::{burau_matrix, conj_m, gamma_membership, squier_form, BurauKind, ConjDirection, DiagData};
use crate::check::Check;
use crate::counterexample::{build_c, c_checks, report, seven_letter_word};
use crate::error::{Error, Result};
use crate::similitude::{
    gen_lift, parse_poly_x, q_normal_form, verify_relation, ELabel, GenId, GenWord, RelParams, Relation,
};
use crate::stallings::{a_l_words, f_quotient_value, fold, verify_l_consistency};

const SEED: u64 = 0x5eed_b4a0;

fn rng(salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED ^ salt)
}

type Q = Rational;

/// A group of checks that share one computation.
pub struct Entry {
    pub id: &'static str,
    pub anchor: &'static str,
    run: fn() -> Result<Vec<Check>>,
}

impl Entry {
    pub fn run(&self) -> Result<Vec<Check>> {
        (self.run)()
    }
}

fn single(name: &str, passed: bool) -> Vec<Check> {
    vec![Check::new(name, passed)]
}

fn prefixed(prefix: &str, checks: Vec<Check>) -> Vec<Check> {
    checks.into_iter().map(|c| Check::new(format!("{prefix}.{}", c.name), c.passed)).collect()
}

pub fn random_braid(r: &mut impl Rng, n: usize, max_len: usize) -> BraidWord {
    let len = r.gen_range(1..=max_len);
    let letters = (0..len).map(|_| (r.gen_range(1..n), if r.gen_bool(0.5) { 1 } else { -1 })).collect();
    BraidWord::new(n, letters).expect("letters in range")
}

pub fn random_h_word(r: &mut impl Rng, max_len: usize) -> FreeWord {
    let len = r.gen_range(0..=max_len);
    FreeWord::new((0..len).map(|_| r.gen_range(1..=6) * if r.gen_bool(0.5) { 1 } else { -1 }))
}

pub fn random_laurent<F: Field>(r: &mut impl Rng, sample: &impl Fn(&mut dyn rand::RngCore) -> F) -> LaurentPoly<F> {
    let terms = r.gen_range(0..5);
    LaurentPoly::from_terms((0..terms).map(|_| (r.gen_range(-4..=4), sample(r))).collect::<Vec<_>>())
}

/// Reduced `g[r]` letters drawn from `pool`, then a coset representative.
pub fn random_gen_word<F: Field>(r: &mut impl Rng, pool: &[F], max_len: usize) -> GenWord<F> {
    let len = r.gen_range(0..=max_len);
    let mut w = GenWord::empty();
    let mut last: Option<F> = None;
    for _ in 0..len {
        let choices: Vec<&F> = pool.iter().filter(|x| Some(*x) != last.as_ref()).collect();
        let x = (*choices.choose(r).expect("pool has two values")).clone();
        w.push(GenId::G(x.clone()), if r.gen_bool(0.5) { 1 } else { -1 });
        last = Some(x);
    }
    w.concat(&GenWord::new([(GenId::Hm1, r.gen_range(0..2)), (GenId::H0, r.gen_range(0..2))]))
}

// unitarity

pub fn unreduced_unitarity(cases: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in 3..=6 {
        let mut r = rng(n as u64);
        let j = squier_form::<Q>(n);
        let ok = (0..cases).all(|_| {
            unitary_defect(&burau_matrix::<Q>(&random_braid(&mut r, n, 10), BurauKind::Unreduced), &j).is_zero()
        });
        out.push(Check::new(format!("n={n}"), ok));
    }
    Ok(out)
}

pub fn diagonalized_unitarity(cases: usize) -> Result<Vec<Check>> {
    let data = DiagData::<Q>::new();
    let d = data.d.to_ratfunc();
    let mut r = rng(4);
    let ok = (0..cases).all(|_| {
        let a =
            conj_m(&burau_matrix::<Q>(&random_braid(&mut r, 4, 8), BurauKind::Reduced), ConjDirection::Forward, &data);
        projective_unitary_scalar(&a, &d).is_some_and(|k| k.is_one())
    });
    Ok(single("scalar-one", ok))
}

// closed-form matrices

fn rows(r: &[&[&str]]) -> LMat<Q> {
    LMat::parse_rows(r).expect("valid literal")
}

pub fn closed_form_matrices() -> Result<Vec<Check>> {
    let data = DiagData::<Q>::new();
    let conj = |w: &str| -> Result<_> {
        Ok(conj_m(&burau_matrix::<Q>(&BraidWord::parse(w, 4)?, BurauKind::Reduced), ConjDirection::Forward, &data))
    };
    let s2 = crate::algebra::RMat::<Q>::from_rows(
        [
            ["(t-t^2)/(1+t)", "(t^2)/(1+t)", "(t^2)/(1+t)"],
            ["(1+t^2)/(t+t^2)", "(1)/(1+t)", "(-t)/(1+t)"],
            ["(1+t^2)/(t+t^2)", "(-t)/(1+t)", "(1)/(1+t)"],
        ]
        .iter()
        .map(|row| row.iter().map(|s| crate::algebra::RatFunc::parse(s)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?,
    )?;
    let twist = rows(&[&["t-t^2+t^3", "t^2-t^3", "0"], &["t^-1-1+t-t^2", "1-t+t^2", "0"], &["0", "0", "t^3"]]);
    let g1 = rows(&[&["t-1", "1"], &["-t^-1-t", "t^-1-1"]]);
    let au1 = LMat::<Fp<2>>::parse_rows(&[&["1+t^-1+t", "t^-1+1"], &["1+t^-1+t+t^2", "1+t^-1+t"]])?;
    let h0_f2 = LMat::<Fp<2>>::parse_rows(&[&["1", "0"], &["0", "t"]])?;
    let c = build_c();
    let mut out = vec![
        Check::new("s1", data.s[0] == rows(&[&["1", "0", "0"], &["0", "-t", "0"], &["0", "0", "1"]]).to_ratfunc()),
        Check::new("s2", data.s[1] == s2),
        Check::new("s3", data.s[2] == rows(&[&["1", "0", "0"], &["0", "1", "0"], &["0", "0", "-t"]]).to_ratfunc()),
        Check::new("twist", conj("(s3 s2 s3)^2")? == twist.to_ratfunc()),
        Check::new("s-prime", conj("b1")? == s_prime::<Q>().to_ratfunc()),
        Check::new("t-prime", conj("b2")? == t_prime::<Q>().to_ratfunc()),
        Check::new("odd-lift.h0", gen_lift::<Q>(&GenId::H0)? == rows(&[&["1", "0"], &["0", "-t"]])),
        Check::new("odd-lift.h-1", gen_lift::<Q>(&GenId::Hm1)? == rows(&[&["1", "0"], &["0", "-1"]])),
        Check::new("odd-lift.g1", gen_lift::<Q>(&GenId::G(Q::int(1)))? == g1),
        Check::new(
            "odd-lift.e-2t",
            gen_lift::<Q>(&GenId::E(ELabel::MinusTwoT))? == rows(&[&["-2*t", "0"], &["0", "-2*t"]]),
        ),
        Check::new("odd-lift.e-4", gen_lift::<Q>(&GenId::E(ELabel::MinusFour))? == rows(&[&["-4", "0"], &["0", "-4"]])),
        Check::new("char2-lift.h0", gen_lift::<Fp<2>>(&GenId::H0)? == h0_f2),
        Check::new("char2-lift.au1", gen_lift::<Fp<2>>(&GenId::AU(parse_poly_x("1")?))? == au1),
        Check::new(
            "char2-lift.e-t2",
            gen_lift::<Fp<2>>(&GenId::E(ELabel::TSquared))? == LMat::parse_rows(&[&["t^2", "0"], &["0", "t^2"]])?,
        ),
    ];
    out.extend(c_checks(&c)?);
    Ok(out)
}

// similitude relations

fn rel_values<F: Field>(values: &[&str]) -> Vec<F> {
    values.iter().filter_map(|s| F::parse(s).ok()).collect()
}

const R_VALUES: [&str; 7] = ["1", "-1", "2", "-2", "1/2", "-1/2", "3/5"];

fn projective_relations<F: Field>() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for r in rel_values::<F>(&R_VALUES) {
        let p = RelParams { r: Some(r.clone()), f: None };
        out.push(Check::new(format!("h-1-conj.{}.r={r}", F::tag()), verify_relation(Relation::HMinusOneConj, &p)?));
        out.push(Check::new(format!("h0-conj.{}.r={r}", F::tag()), verify_relation(Relation::H0Conj, &p)?));
    }
    out.push(Check::new(
        format!("h0sq.{}", F::tag()),
        verify_relation(Relation::H0Square, &RelParams::<F>::default())?,
    ));
    Ok(out)
}

fn lifted_relations<F: Field>() -> Result<Vec<Check>> {
    let none = RelParams::<F>::default();
    let mut out = vec![Check::new(format!("key.{}", F::tag()), verify_relation(Relation::Key, &none)?)];
    if F::characteristic() != 2 {
        out.push(Check::new(format!("odd-lift.{}", F::tag()), verify_relation(Relation::OddLift, &none)?));
        out.push(Check::new(format!("odd-square.{}", F::tag()), verify_relation(Relation::OddSquare, &none)?));
    }
    Ok(out)
}

pub fn similitude_relations() -> Result<Vec<Check>> {
    let mut out = projective_relations::<Q>()?;
    out.extend(projective_relations::<Fp<5>>()?);
    out.extend(projective_relations::<Fp<7>>()?);
    for f in ["1", "x", "x^2+x"] {
        let p = RelParams::<Fp<2>> { r: None, f: Some(parse_poly_x(f)?) };
        out.push(Check::new(format!("additive-swap.f={f}"), verify_relation(Relation::AdditiveSwap, &p)?));
    }
    out.push(Check::new("char2-lift", verify_relation(Relation::CharTwoLift, &RelParams::<Fp<2>>::default())?));
    out.extend(lifted_relations::<Q>()?);
    out.extend(lifted_relations::<Fp<3>>()?);
    out.extend(lifted_relations::<Fp<5>>()?);
    out.extend(lifted_relations::<Fp<7>>()?);
    out.extend(lifted_relations::<Fp<17>>()?);
    Ok(out)
}

// normal forms

pub fn seven_letter_normal_form() -> Result<Vec<Check>> {
    let w = seven_letter_word();
    let found = q_normal_form(&w.eval()?, 12)?;
    Ok(single("seven-letter", found == w))
}

fn round_trips<F: Field>(pool: &[F], cases: usize, salt: u64) -> Result<bool> {
    let mut r = rng(salt);
    for _ in 0..cases {
        let w = random_gen_word(&mut r, pool, 6);
        if q_normal_form(&w.eval()?, 8)? != w {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn normal_form_round_trips(cases: usize) -> Result<Vec<Check>> {
    let q_pool = rel_values::<Q>(&["1", "-1", "2", "-2", "1/2", "3", "-1/3"]);
    let f5_pool = rel_values::<Fp<5>>(&["1", "2", "3", "4"]);
    Ok(vec![
        Check::new("round-trip.q", round_trips(&q_pool, cases, 6)?),
        Check::new("round-trip.fp:5", round_trips(&f5_pool, cases, 7)?),
    ])
}

// building

fn identities(id: LatticeIdentity) -> Result<Vec<Check>> {
    let rep = verify_identity(&id)?;
    Ok(rep.checks)
}

fn q_int(n: i64) -> num_rational::BigRational {
    num_rational::BigRational::from_integer(n.into())
}

pub fn lattice_chains() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for r in 1..=3 {
        out.extend(prefixed(&format!("r={r}"), identities(LatticeIdentity::Chain(q_int(r)))?));
    }
    Ok(out)
}

pub fn tower_relations() -> Result<Vec<Check>> {
    let mut out = prefixed("k-zero-infinity", identities(LatticeIdentity::KZeroInfinity)?);
    out.extend(prefixed("k-reciprocal", identities(LatticeIdentity::KReciprocal(q_int(2)))?));
    out.extend(prefixed("k-product", identities(LatticeIdentity::KProduct(q_int(2), q_int(1)))?));
    Ok(out)
}

pub fn unipotent_identities() -> Result<Vec<Check>> {
    Ok(identities(LatticeIdentity::UnipotentWords(None))?.into_iter().filter(|c| !c.name.contains('.')).collect())
}

pub fn unipotent_membership() -> Result<Vec<Check>> {
    Ok(identities(LatticeIdentity::UnipotentWords(None))?
        .into_iter()
        .filter_map(|c| c.name.strip_suffix(".unipotent").map(|n| Check::new(n, c.passed)))
        .collect())
}

pub fn link_exploration() -> Result<Vec<Check>> {
    let gens: Vec<BuildingGen> = Named::ALL.iter().map(|&n| BuildingGen::Named(n)).collect();
    let rep = explore(&gens, 2, 10_000)?;
    let classes = explored_classes(&gens, &rep)?;
    let link: std::collections::HashSet<_> = rep.link_of_identity.iter().map(|&k| classes[k].clone()).collect();
    let expected = type_one_classes()?;
    let type1 = rep.link_of_identity.iter().filter(|&&k| rep.vertices[k].vertex_type == 1).count();
    Ok(vec![
        Check::new("contains-expected", expected.iter().all(|c| link.contains(c))),
        Check::new("type-1-count", type1 == expected.len()),
    ])
}

// stallings

pub fn stallings_checks() -> Result<Vec<Check>> {
    let a = a_l_words();
    let g = fold(&a, 9)?;
    let f_zero = crate::building::A_IN_H
        .iter()
        .map(|s| crate::building::parse_h_word(s))
        .collect::<Result<Vec<_>>>()?
        .iter()
        .all(|w| f_quotient_value(w) == 0);
    Ok(vec![Check::new("rank-9", g.rank() == 9), Check::new("quotient-trivial", f_zero)])
}

// property suites

fn bar_cases<F: Field>(cases: usize, salt: u64, sample: impl Fn(&mut dyn rand::RngCore) -> F) -> bool {
    let mut r = rng(salt);
    (0..cases).all(|_| {
        let a = random_laurent(&mut r, &sample);
        let b = random_laurent(&mut r, &sample);
        a.mul(&b).bar() == a.bar().mul(&b.bar()) && a.add(&b).bar() == a.bar().add(&b.bar()) && a.bar().bar() == a
    })
}

fn small(r: &mut dyn rand::RngCore) -> i64 {
    r.gen_range(-5..=5)
}

pub fn bar_homomorphism(cases: usize) -> Vec<Check> {
    vec![
        Check::new("bar.q", bar_cases(cases, 11, |r| Q::new(small(r), r.gen_range(1..=4)))),
        Check::new("bar.fp:5", bar_cases(cases, 12, |r| Fp::<5>::from_i64(small(r)))),
        Check::new("bar.qi", bar_cases(cases, 13, |r| Gaussian::from_parts((small(r), 1), (small(r), 1)))),
    ]
}

pub fn gamma_closure(cases: usize) -> Result<Vec<Check>> {
    let mut r = rng(21);
    let mut ok = true;
    for _ in 0..cases {
        let n = r.gen_range(3..=5);
        let a = burau_matrix::<Q>(&random_braid(&mut r, n, 6), BurauKind::Unreduced);
        let b = burau_matrix::<Q>(&random_braid(&mut r, n, 6), BurauKind::Unreduced);
        ok &= gamma_membership(&a.mul(&b), n)?.passes();
    }
    Ok(single("gamma.closure", ok))
}

pub fn phi_additivity(cases: usize) -> Result<Vec<Check>> {
    let mut r = rng(31);
    let mut ok = true;
    for _ in 0..cases {
        let (u, v) = (random_h_word(&mut r, 4), random_h_word(&mut r, 4));
        let (pu, pv) = (phi(&eval_h_word(&u))?, phi(&eval_h_word(&v))?);
        let puv = phi(&eval_h_word(&u.concat(&v)))?;
        ok &= puv == (pu.0.add(&pv.0), pu.1.add(&pv.1));
    }
    Ok(single("phi.additive", ok))
}

pub fn folding_confluence(shuffles: usize) -> Result<Vec<Check>> {
    let mut r = rng(41);
    let mut a = a_l_words();
    let h = fold(&a, 9)?.canonical_hash();
    let mut ok = true;
    for _ in 0..shuffles {
        a.shuffle(&mut r);
        ok &= fold(&a, 9)?.canonical_hash() == h;
    }
    Ok(single("folding.confluent", ok))
}

// acceptance criteria

pub const CRITERIA: [&str; 10] = [
    "unitarity",
    "braid-identities",
    "closed-form-matrices",
    "similitude-relations",
    "counterexample",
    "normal-form",
    "building",
    "link-of-identity",
    "stallings",
    "properties",
];

fn join(parts: Vec<(&str, Result<Vec<Check>>)>) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (p, checks) in parts {
        out.extend(prefixed(p, checks?));
    }
    Ok(out)
}

/// The checks behind acceptance criterion `n` (1-based).
pub fn criterion(n: usize) -> Result<Vec<Check>> {
    match n {
        1 => join(vec![("unreduced", unreduced_unitarity(500)), ("diagonalized", diagonalized_unitarity(500))]),
        2 => braid_checks(),
        3 => closed_form_matrices(),
        4 => similitude_relations(),
        5 => counterexample_checks(),
        6 => join(vec![("", seven_letter_normal_form()), ("", normal_form_round_trips(200))])
            .map(|c| c.into_iter().map(|c| Check::new(c.name.trim_start_matches('.'), c.passed)).collect()),
        7 => join(vec![
            ("chain", lattice_chains()),
            ("tower", tower_relations()),
            ("unipotent-identity", unipotent_identities()),
            ("phi", identities(LatticeIdentity::PhiValues)),
            ("phi-closed-form", identities(LatticeIdentity::PhiClosedForm)),
        ]),
        8 => join(vec![("expected", identities(LatticeIdentity::TypeOneLink)), ("explore", link_exploration())]),
        9 => join(vec![("fold", stallings_checks()), ("l-consistency", verify_l_consistency().map(|r| r.checks))]),
        10 => join(vec![
            ("", Ok(bar_homomorphism(1000))),
            ("", gamma_closure(100)),
            ("", phi_additivity(100)),
            ("", folding_confluence(20)),
        ])
        .map(|c| c.into_iter().map(|c| Check::new(c.name.trim_start_matches('.'), c.passed)).collect()),
        _ => Err(Error::InvalidParam(format!("no criterion {n}"))),
    }
}

fn braid_checks() -> Result<Vec<Check>> {
    semidirect_identities().into_iter().map(|b| Ok(Check::new(b.id.trim_start_matches("braid."), b.holds()?))).collect()
}

fn counterexample_checks() -> Result<Vec<Check>> {
    Ok(report(None)?.checks)
}

// registry

fn c1() -> Result<Vec<Check>> {
    criterion(1)
}
fn c2() -> Result<Vec<Check>> {
    criterion(2)
}
fn c3() -> Result<Vec<Check>> {
    criterion(3)
}
fn c4() -> Result<Vec<Check>> {
    criterion(4)
}
fn c5() -> Result<Vec<Check>> {
    criterion(5)
}
fn c6() -> Result<Vec<Check>> {
    criterion(6)
}
fn c7() -> Result<Vec<Check>> {
    criterion(7)
}
fn c8() -> Result<Vec<Check>> {
    criterion(8)
}
fn c9() -> Result<Vec<Check>> {
    criterion(9)
}
fn c10() -> Result<Vec<Check>> {
    criterion(10)
}

const CRITERION_RUNS: [fn() -> Result<Vec<Check>>; 10] = [c1, c2, c3, c4, c5, c6, c7, c8, c9, c10];

fn phi_values() -> Result<Vec<Check>> {
    identities(LatticeIdentity::PhiValues)
}
fn phi_closed_form() -> Result<Vec<Check>> {
    identities(LatticeIdentity::PhiClosedForm)
}
fn type_one_expected() -> Result<Vec<Check>> {
    identities(LatticeIdentity::TypeOneLink)
}
fn l_consistency() -> Result<Vec<Check>> {
    Ok(verify_l_consistency()?.checks)
}
fn unitarity_small() -> Result<Vec<Check>> {
    let mut out = prefixed("unreduced", unreduced_unitarity(50)?);
    out.extend(prefixed("diagonalized", diagonalized_unitarity(50)?));
    Ok(out)
}
fn seven_letter() -> Result<Vec<Check>> {
    seven_letter_normal_form()
}
fn named_phi_defined() -> Result<Vec<Check>> {
    Ok(Named::ALL.iter().map(|&n| Check::new(n.name(), phi(&named_lift(n)).is_ok())).collect())
}

/// Every registered group, in id order.
pub fn registry() -> Vec<Entry> {
    let mut out = vec![
        Entry { id: "braid", anchor: "braid relations under the Artin action", run: braid_checks },
        Entry { id: "building.chain", anchor: "lattice chain through [I]", run: lattice_chains },
        Entry { id: "building.link", anchor: "radius-2 exploration around [I]", run: link_exploration },
        Entry { id: "building.tower", anchor: "relations among k_E and o_E", run: tower_relations },
        Entry { id: "counterexample", anchor: "tree-based construction of A", run: counterexample_checks },
        Entry { id: "eq21", anchor: "a_j as words in d1, d2, g1..g4", run: unipotent_identities },
        Entry { id: "building.type-one", anchor: "eleven type-1 vertices adjacent to [I]", run: type_one_expected },
        Entry { id: "normal-form", anchor: "seven-letter word behind C", run: seven_letter },
        Entry { id: "phi", anchor: "values of phi on g1..g4", run: phi_values },
        Entry { id: "phi.defined", anchor: "phi on the named generators", run: named_phi_defined },
        Entry { id: "phi.closed-form", anchor: "phi of conjugated UK(r)", run: phi_closed_form },
        Entry { id: "matrices", anchor: "closed-form matrices", run: closed_form_matrices },
        Entry { id: "similitude", anchor: "relations among g[r], h0, h-1, au, al", run: similitude_relations },
        Entry { id: "stallings", anchor: "folding of a_1..a_9 and the quotient map", run: stallings_checks },
        Entry { id: "stallings.l-consistency", anchor: "a_j as words in l_1..l_9", run: l_consistency },
        Entry { id: "unipotent", anchor: "a_j lie in the unipotent kernel", run: unipotent_membership },
        Entry { id: "unitarity", anchor: "Squier form and the diagonal form D", run: unitarity_small },
    ];
    for (k, run) in CRITERION_RUNS.iter().enumerate() {
        out.push(Entry { id: criterion_id(k + 1), anchor: CRITERIA[k], run: *run });
    }
    out.sort_by_key(|e| e.id);
    out
}

const CRITERION_IDS: [&str; 10] = [
    "criterion.01",
    "criterion.02",
    "criterion.03",
    "criterion.04",
    "criterion.05",
    "criterion.06",
    "criterion.07",
    "criterion.08",
    "criterion.09",
    "criterion.10",
];

pub fn criterion_id(n: usize) -> &'static str {
    CRITERION_IDS[n - 1]
}

#[derive(Clone, Debug, Serialize)]
pub struct ScoreRow {
    pub id: String,
    pub anchor: String,
    pub passed: bool,
    pub millis: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Scorecard {
    pub rows: Vec<ScoreRow>,
    pub passed: bool,
}

impl Scorecard {
    pub fn failures(&self) -> Vec<&str> {
        self.rows.iter().filter(|r| !r.passed).map(|r| r.id.as_str()).collect()
    }
}

fn matches(id: &str, filter: &str) -> bool {
    id.starts_with(filter)
}

/// Runs every group whose checks can match `filter`; checks are reported one row each.
pub fn verify_paper(filter: Option<&str>) -> Scorecard {
    let filter = filter.unwrap_or("");
    let entries: Vec<Entry> =
        registry().into_iter().filter(|e| matches(e.id, filter) || filter.starts_with(e.id)).collect();
    let mut rows: Vec<ScoreRow> = entries
        .par_iter()
        .flat_map_iter(|e| {
            let start = Instant::now();
            let result = e.run();
            let millis = start.elapsed().as_millis();
            match result {
                Ok(checks) => checks
                    .into_iter()
                    .map(|c| ScoreRow {
                        id: format!("{}.{}", e.id, c.name),
                        anchor: e.anchor.to_string(),
                        passed: c.passed,
                        millis,
                        error: None,
                    })
                    .collect::<Vec<_>>(),
                Err(err) => vec![ScoreRow {
                    id: e.id.to_string(),
                    anchor: e.anchor.to_string(),
                    passed: false,
                    millis,
                    error: Some(err.to_string()),
                }],
            }
        })
        .filter(|r| matches(&r.id, filter))
        .collect();
    rows.sort_by(|a, b| a.id.cmp(&b.id));
    let passed = rows.iter().all(|r| r.passed);
    Scorecard { rows, passed }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_ids_are_unique() {
        let reg = registry();
        let ids: std::collections::BTreeSet<_> = reg.iter().map(|e| e.id).collect();
        assert_eq!(ids.len(), reg.len());
        assert_eq!(reg.iter().filter(|e| e.id.starts_with("criterion.")).count(), 10);
    }

    #[test]
    fn filters() {
        let s = verify_paper(Some("eq21"));
        assert_eq!(s.rows.len(), 9);
        assert!(s.passed);
        let s = verify_paper(Some("nothing-matches"));
        assert!(s.rows.is_empty() && s.passed);
    }

    #[test]
    fn fast_groups() {
        for c in [2, 3, 4] {
            let checks = criterion(c).unwrap();
            assert!(crate::check::all_pass(&checks), "{c}: {:?}", crate::check::failing(&checks));
        }
    }
}
