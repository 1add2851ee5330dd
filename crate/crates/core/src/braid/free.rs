use std::fmt;

use crate::error::{Error, Result};

/// Freely reduced word in `x1..xr`; letter `k` is `x_k`, letter `-k` its inverse.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Default)]
pub struct FreeWord {
    letters: Vec<i32>,
}

impl FreeWord {
    pub fn empty() -> Self {
        FreeWord::default()
    }

    pub fn letter(k: i32) -> Self {
        assert!(k != 0, "letters are nonzero");
        FreeWord { letters: vec![k] }
    }

    /// Freely reduces the given letters.
    pub fn new(letters: impl IntoIterator<Item = i32>) -> Self {
        let mut out: Vec<i32> = Vec::new();
        for l in letters {
            assert!(l != 0, "letters are nonzero");
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        FreeWord { letters: out }
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, rhs: &Self) -> Self {
        FreeWord::new(self.letters.iter().chain(&rhs.letters).copied())
    }

    pub fn inverse(&self) -> Self {
        FreeWord { letters: self.letters.iter().rev().map(|l| -l).collect() }
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(FreeWord::empty(), |acc, _| acc.concat(&base))
    }

    /// Largest symbol index used.
    pub fn max_symbol(&self) -> u32 {
        self.letters.iter().map(|l| l.unsigned_abs()).max().unwrap_or(0)
    }

    /// Replaces every `x_k` by `images[k-1]`.
    pub fn substitute(&self, images: &[FreeWord]) -> FreeWord {
        let mut out = Vec::new();
        for &l in &self.letters {
            let img = &images[l.unsigned_abs() as usize - 1];
            if l > 0 {
                out.extend_from_slice(&img.letters);
            } else {
                out.extend(img.letters.iter().rev().map(|x| -x));
            }
        }
        FreeWord::new(out)
    }

    /// Parses space-separated letters such as `x1 X2 x1^-2`, where `prefix` is
    /// the lowercase letter name and the uppercase form denotes the inverse.
    pub fn parse(s: &str, prefix: char) -> Result<Self> {
        let upper = prefix.to_ascii_uppercase();
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            let bad = || Error::Parse(format!("malformed letter `{tok}`"));
            let (head, exp) = match tok.split_once('^') {
                Some((h, e)) => (h, e.parse::<i64>().map_err(|_| bad())?),
                None => (tok, 1),
            };
            let mut chars = head.chars();
            let sign = match chars.next() {
                Some(c) if c == prefix => 1,
                Some(c) if c == upper => -1,
                _ => return Err(bad()),
            };
            let k: i32 = chars.as_str().parse().map_err(|_| bad())?;
            if k <= 0 {
                return Err(bad());
            }
            let l = sign * k;
            let (l, n) = if exp < 0 { (-l, exp.unsigned_abs()) } else { (l, exp as u64) };
            letters.extend(std::iter::repeat_n(l, n as usize));
        }
        Ok(FreeWord::new(letters))
    }

    pub fn to_text(&self, prefix: char) -> String {
        let upper = prefix.to_ascii_uppercase();
        self.letters
            .iter()
            .map(|&l| format!("{}{}", if l > 0 { prefix } else { upper }, l.unsigned_abs()))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text('x'))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_is_eager() {
        let w = FreeWord::new([1, 2, -2, -1, 3]);
        assert_eq!(w.letters(), &[3]);
        let a = FreeWord::new([1, 2]);
        assert!(a.concat(&a.inverse()).is_empty());
        assert_eq!(FreeWord::parse("x1 X2 x2 x3^-2", 'x').unwrap().letters(), &[1, -3, -3]);
        assert_eq!(FreeWord::parse("l1 L9", 'l').unwrap().to_text('l'), "l1 L9");
        assert!(FreeWord::parse("y1", 'x').is_err());
        assert!(FreeWord::parse("x0", 'x').is_err());
    }
}
