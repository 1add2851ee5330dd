//! Braid words, free words and braid equality through the Artin action.

mod artin;
mod free;
mod word;

pub use artin::{artin_images, braid_equal, ArtinAuto};
pub use free::FreeWord;
pub use word::BraidWord;

use crate::error::Result;

/// Which generator's centralizer in the four-strand braid group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Centralized {
    Sigma3,
    Sigma2,
}

fn b4(s: &str) -> BraidWord {
    BraidWord::parse(s, 4).expect("valid literal")
}

/// Generating sets of the centralizers of `s3` and `s2` in four strands.
pub fn centralizer_data(which: Centralized) -> Vec<BraidWord> {
    match which {
        Centralized::Sigma3 => vec![b4("s1"), b4("s3"), b4("(s3 s2 s3)^2")],
        Centralized::Sigma2 => vec![b4("b2"), b4("b1^-1 b2 b1"), b4("s2"), b4("(s1 s2 s1)^2")],
    }
}

/// The centralized generator itself.
pub fn centralized_generator(which: Centralized) -> BraidWord {
    match which {
        Centralized::Sigma3 => b4("s3"),
        Centralized::Sigma2 => b4("s2"),
    }
}

/// A named braid identity `lhs = rhs`.
#[derive(Clone, Debug)]
pub struct BraidIdentity {
    pub id: &'static str,
    pub lhs: BraidWord,
    pub rhs: BraidWord,
}

impl BraidIdentity {
    pub fn holds(&self) -> Result<bool> {
        braid_equal(&self.lhs, &self.rhs)
    }
}

/// Semidirect-product identities in four strands and the half-twist conjugations.
pub fn semidirect_identities() -> Vec<BraidIdentity> {
    let q = "(s3 s2 s3)";
    let d = "(s1 s2 s3)";
    let rows: Vec<(&'static str, String, String)> = vec![
        ("braid.conj.s2-b1", "s2 b1 s2^-1".into(), "b2^-1 b1".into()),
        ("braid.conj.s3-b1", "s3 b1 s3^-1".into(), "b1".into()),
        ("braid.conj.s2-b2", "s2 b2 s2^-1".into(), "b2".into()),
        ("braid.conj.s3-b2", "s3 b2 s3^-1".into(), "b2 b1".into()),
        ("braid.twist-inverse-b1", format!("{q}^-2 b1 {q}^2"), "b2 b1^-1 b2^-1".into()),
        ("braid.twist-b1", format!("{q}^2 b1 {q}^-2"), "b1^-1 b2 b1^-1 b2^-1 b1".into()),
        ("braid.twist-recursion", format!("{q}^2 b1 {q}^-2"), format!("b1^-1 ({q}^-2 b1 {q}^2) b1")),
        ("braid.shift-s1", format!("{d} s1 {d}^-1"), "s2".into()),
        ("braid.shift-s2", format!("{d} s2 {d}^-1"), "s3".into()),
        ("braid.shift-s3", format!("{d} s3 {d}^-1"), "b2 s2".into()),
    ];
    rows.into_iter().map(|(id, l, r)| BraidIdentity { id, lhs: b4(&l), rhs: b4(&r) }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn centralizers_commute() {
        for which in [Centralized::Sigma3, Centralized::Sigma2] {
            let c = centralized_generator(which);
            for g in centralizer_data(which) {
                assert!(braid_equal(&g.concat(&c), &c.concat(&g)).unwrap(), "{g} vs {c}");
            }
        }
        assert_eq!(centralizer_data(Centralized::Sigma3).len(), 3);
        assert_eq!(centralizer_data(Centralized::Sigma2).len(), 4);
    }

    #[test]
    fn identities_hold() {
        for id in semidirect_identities() {
            assert!(id.holds().unwrap(), "{}", id.id);
        }
    }
}
