use std::fmt;

use crate::error::{Error, Result};

/// Word in the Artin generators of the braid group on `n` strands.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BraidWord {
    n: usize,
    letters: Vec<(usize, i8)>,
}

impl BraidWord {
    pub fn identity(n: usize) -> Self {
        BraidWord { n, letters: Vec::new() }
    }

    pub fn new(n: usize, letters: Vec<(usize, i8)>) -> Result<Self> {
        for &(i, e) in &letters {
            if i == 0 || i >= n {
                return Err(Error::InvalidParam(format!("generator index {i} out of range for {n} strands")));
            }
            if e != 1 && e != -1 {
                return Err(Error::InvalidParam(format!("letter exponent {e} must be 1 or -1")));
            }
        }
        Ok(BraidWord { n, letters })
    }

    /// `sigma_i^e` for any integer `e`.
    pub fn gen(n: usize, i: usize, e: i64) -> Result<Self> {
        let s = if e < 0 { -1 } else { 1 };
        BraidWord::new(n, vec![(i, s); e.unsigned_abs() as usize])
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "strand mismatch in concatenation");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&rhs.letters);
        BraidWord { n: self.n, letters }
    }

    pub fn inverse(&self) -> Self {
        BraidWord { n: self.n, letters: self.letters.iter().rev().map(|&(i, e)| (i, -e)).collect() }
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(BraidWord::identity(self.n), |acc, _| acc.concat(&base))
    }

    /// `g * self * g^-1`.
    pub fn conj(&self, g: &Self) -> Self {
        g.concat(self).concat(&g.inverse())
    }

    /// Exponent sum.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|&(_, e)| e as i64).sum()
    }

    /// Parses `s1 s3^-1 (s3 s2 s3)^2 b1 b2^-1`; `b1`, `b2` need four strands.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let mut p = Parser { s: text.as_bytes(), pos: 0, n };
        let w = p.seq()?;
        p.skip_ws();
        if p.pos != p.s.len() {
            return Err(p.err("unexpected character"));
        }
        Ok(w)
    }

    pub fn b1() -> Self {
        BraidWord::parse("s1 s3^-1", 4).expect("valid literal")
    }

    pub fn b2() -> Self {
        BraidWord::parse("s1 s2 s3 s1^-1 s2^-1 s1^-1", 4).expect("valid literal")
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    n: usize,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {} in braid word", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn int(&mut self) -> Result<i64> {
        let start = self.pos;
        if self.peek() == Some(b'-') || self.peek() == Some(b'+') {
            self.pos += 1;
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .ok()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| self.err("expected an integer"))
    }

    fn seq(&mut self) -> Result<BraidWord> {
        let mut w = BraidWord::identity(self.n);
        loop {
            self.skip_ws();
            match self.peek() {
                None | Some(b')') => return Ok(w),
                _ => w = w.concat(&self.atom()?),
            }
        }
    }

    fn atom(&mut self) -> Result<BraidWord> {
        let base = match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let w = self.seq()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("missing `)`"));
                }
                self.pos += 1;
                w
            }
            Some(b's') => {
                self.pos += 1;
                let i = self.int()?;
                if i < 1 || i as usize >= self.n {
                    return Err(Error::InvalidParam(format!("generator s{i} out of range for {} strands", self.n)));
                }
                BraidWord::gen(self.n, i as usize, 1)?
            }
            Some(b'b') => {
                self.pos += 1;
                let k = self.int()?;
                if self.n != 4 {
                    return Err(Error::InvalidParam("b1 and b2 are braids on four strands".into()));
                }
                match k {
                    1 => BraidWord::b1(),
                    2 => BraidWord::b2(),
                    _ => return Err(self.err("unknown named braid")),
                }
            }
            _ => return Err(self.err("malformed token")),
        };
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.int()?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.letters.iter().map(|&(i, e)| if e > 0 { format!("s{i}") } else { format!("s{i}^-1") }).collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        assert_eq!(BraidWord::parse("s1 s3^-1", 4).unwrap().letters(), &[(1, 1), (3, -1)]);
        assert_eq!(BraidWord::parse("b2", 4).unwrap().letters(), &[(1, 1), (2, 1), (3, 1), (1, -1), (2, -1), (1, -1)]);
        assert!(BraidWord::parse("s1^0", 4).unwrap().is_empty());
        assert_eq!(BraidWord::parse("(s3 s2 s3)^-2", 4).unwrap().len(), 6);
        assert!(BraidWord::parse("s4", 4).is_err());
        assert!(BraidWord::parse("s0", 4).is_err());
        assert!(BraidWord::parse("q1", 4).is_err());
        assert!(BraidWord::parse("(s1", 4).is_err());
        assert!(BraidWord::parse("b1", 3).is_err());
    }

    #[test]
    fn display_round_trip() {
        let w = BraidWord::parse("s1 s2^-2 s3", 4).unwrap();
        assert_eq!(BraidWord::parse(&w.to_string(), 4).unwrap(), w);
        assert_eq!(w.writhe(), 0);
    }
}
