use std::collections::BTreeSet;

use super::{gen_matrix, GenId, GenWord};
use crate::algebra::{Field, LaurentPoly, Matrix, ProjMat};
use crate::error::{Error, Result};

fn extreme_coeffs<F: Field>(w: &ProjMat<F>) -> (Matrix<F>, Matrix<F>) {
    let rep = w.rep();
    let hi = rep.entries().iter().filter_map(LaurentPoly::max_exp).max().unwrap_or(0);
    let lo = rep.entries().iter().filter_map(LaurentPoly::min_exp).min().unwrap_or(0);
    (rep.map(|e| e.coeff(hi)), rep.map(|e| e.coeff(lo)))
}

fn width<F: Field>(w: &ProjMat<F>) -> i64 {
    let rep = w.rep();
    let hi = rep.entries().iter().filter_map(LaurentPoly::max_exp).max().unwrap_or(0);
    let lo = rep.entries().iter().filter_map(LaurentPoly::min_exp).min().unwrap_or(0);
    hi - lo
}

/// Leading letters `g[r]^e` compatible with the extreme coefficients of `w`.
fn candidates<F: Field>(w: &ProjMat<F>) -> Vec<(F, i64)> {
    let (top, bot) = extreme_coeffs(w);
    let mut out: Vec<(F, i64)> = Vec::new();
    for j in 0..2 {
        if let Some(r) = top.get(1, j).div(top.get(0, j)) {
            out.push((r.neg(), 1));
        }
        if let Some(r) = bot.get(1, j).div(bot.get(0, j)) {
            out.push((r, -1));
        }
    }
    out.sort_by(|a, b| a.0.tie_key().cmp(&b.0.tie_key()).then(b.1.cmp(&a.1)));
    out.dedup();
    out
}

/// Words `h-1^a h0^b` with `a` in {0, 1} and `b` in {0, 1}, the coset representatives.
fn coset_tail<F: Field>(w: &ProjMat<F>) -> Result<Option<GenWord<F>>> {
    for (a, b) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
        let word = GenWord::new([(GenId::Hm1, a), (GenId::H0, b)]);
        if word.eval()? == *w {
            return Ok(Some(word));
        }
    }
    Ok(None)
}

fn search<F: Field>(
    w: &ProjMat<F>,
    depth: usize,
    max_len: usize,
    prefix: &mut Vec<(F, i64)>,
) -> Result<Option<GenWord<F>>> {
    if let Some(tail) = coset_tail(w)? {
        let word = GenWord::new(prefix.iter().map(|(r, e)| (GenId::G(r.clone()), *e)));
        return Ok(Some(word.concat(&tail)));
    }
    if depth == max_len {
        return Ok(None);
    }
    let span = width(w);
    for (r, e) in candidates(w) {
        let g = match gen_matrix(&GenId::G(r.clone())) {
            Ok(g) => g,
            Err(_) => continue,
        };
        let next = g.pow(-e)?.mul(w);
        if width(&next) >= span {
            continue;
        }
        prefix.push((r, e));
        if let Some(found) = search(&next, depth + 1, max_len, prefix)? {
            return Ok(Some(found));
        }
        prefix.pop();
    }
    Ok(None)
}

/// Free-product normal form of `w` as a word in the `g[r]` followed by a coset
/// representative, found by peeling leading letters that shrink the degree span.
/// `max_len` bounds the number of peeled letters counted with multiplicity.
pub fn q_normal_form<F: Field>(w: &ProjMat<F>, max_len: usize) -> Result<GenWord<F>> {
    if w.dim() != 2 {
        return Err(Error::Dimension(format!("expected a 2x2 matrix, got {}x{}", w.dim(), w.dim())));
    }
    let found = search(w, 0, max_len, &mut Vec::new())?.ok_or(Error::NotFound { bound: max_len })?;
    if found.eval()? != *w {
        return Err(Error::CheckFailed("normal form does not reproduce the input".into()));
    }
    Ok(found)
}

/// Closure of `basis` under the rewrites by `h0` and `h-1`.
pub fn basis_closure<F: Field>(basis: &[GenId<F>]) -> BTreeSet<String> {
    let has_h0 = basis.contains(&GenId::H0);
    let has_hm1 = basis.contains(&GenId::Hm1);
    let mut rs: Vec<F> =
        basis.iter().filter_map(|g| if let GenId::G(r) = g { Some(r.clone()) } else { None }).collect();
    if has_h0 {
        rs.push(F::zero());
    }
    let mut i = 0;
    while i < rs.len() {
        let r = rs[i].clone();
        let mut next = Vec::new();
        if has_h0 {
            if let Some(ri) = r.inv() {
                next.push(ri.neg());
            }
        }
        if has_hm1 {
            next.push(r.neg());
        }
        for s in next {
            if !rs.contains(&s) {
                rs.push(s);
            }
        }
        i += 1;
    }
    let mut out: BTreeSet<String> = rs.into_iter().map(|r| GenId::G(r).to_string()).collect();
    out.extend(basis.iter().filter(|g| !matches!(g, GenId::G(_))).map(|g| g.to_string()));
    out
}

/// Whether every letter of `w` lies in the closure of `basis`.
pub fn subgroup_member_basis<F: Field>(w: &GenWord<F>, basis: &[GenId<F>]) -> bool {
    let closure = basis_closure(basis);
    w.letters().iter().all(|(g, _)| closure.contains(&g.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Fp, Rational};

    fn g<F: Field>(r: &str) -> GenId<F> {
        GenId::G(F::parse(r).unwrap())
    }

    #[test]
    fn trivial_round_trips() {
        let w = GenWord::new([(g::<Rational>("1"), 2)]);
        assert_eq!(q_normal_form(&w.eval().unwrap(), 4).unwrap(), w);
        assert!(q_normal_form(&ProjMat::<Rational>::identity(2), 4).unwrap().is_empty());
        let h = GenWord::new([(g::<Fp<5>>("2"), -1), (g("3"), 1), (GenId::Hm1, 1), (GenId::H0, 1)]);
        assert_eq!(q_normal_form(&h.eval().unwrap(), 4).unwrap(), h);
    }

    #[test]
    fn bound_is_reported() {
        let w = GenWord::new([(g::<Rational>("1"), 1), (g("2"), -1), (g("3"), 1)]);
        match q_normal_form(&w.eval().unwrap(), 2) {
            Err(Error::NotFound { bound }) => assert_eq!(bound, 2),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn membership() {
        let basis7 = [GenId::H0, g::<Fp<7>>("1")];
        assert!(!subgroup_member_basis(&GenWord::new([(g("-1/2"), 1)]), &basis7));
        assert!(subgroup_member_basis(&GenWord::new([(g("1"), 3), (GenId::H0, 1)]), &basis7));
        let basis17 = [GenId::H0, g::<Fp<17>>("1")];
        assert!(!subgroup_member_basis(&GenWord::new([(g("-7/13"), 1)]), &basis17));
        assert!(subgroup_member_basis(&GenWord::new([(g("-1"), 1), (g("0"), 2)]), &basis17));
        let closure = basis_closure(&[GenId::Hm1, GenId::H0, g::<Rational>("2")]);
        assert!(closure.contains("g[1/2]") && closure.contains("g[-1/2]") && closure.contains("g[-2]"));
    }
}
