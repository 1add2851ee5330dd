use serde::{Serialize, Serializer};

use super::{BraidWord, FreeWord};
use crate::error::{Error, Result};

/// Automorphism of the free group on `x1..xn`, stored by the images of the generators.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ArtinAuto {
    images: Vec<FreeWord>,
}

impl ArtinAuto {
    pub fn identity(n: usize) -> Self {
        ArtinAuto { images: (1..=n as i32).map(FreeWord::letter).collect() }
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    /// Image of `sigma_i^e` for `e = +-1`.
    fn generator(n: usize, i: usize, e: i8) -> Self {
        let mut a = Self::identity(n);
        let (x, y) = (i as i32, i as i32 + 1);
        if e > 0 {
            a.images[i - 1] = FreeWord::new([x, y, -x]);
            a.images[i] = FreeWord::letter(x);
        } else {
            a.images[i - 1] = FreeWord::letter(y);
            a.images[i] = FreeWord::new([-y, x, y]);
        }
        a
    }

    /// `self ∘ rhs`.
    pub fn compose(&self, rhs: &Self) -> Self {
        ArtinAuto { images: rhs.images.iter().map(|w| w.substitute(&self.images)).collect() }
    }

    pub fn apply(&self, w: &FreeWord) -> FreeWord {
        w.substitute(&self.images)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.images.len())
    }
}

impl Serialize for ArtinAuto {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let texts: Vec<String> = self.images.iter().map(|w| w.to_text('x')).collect();
        texts.serialize(s)
    }
}

/// The action of a braid on the free group, as a homomorphism in word order.
pub fn artin_images(w: &BraidWord) -> ArtinAuto {
    let n = w.strands();
    w.letters().iter().fold(ArtinAuto::identity(n), |acc, &(i, e)| acc.compose(&ArtinAuto::generator(n, i, e)))
}

/// Exact equality of braids.
pub fn braid_equal(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    if a.strands() != b.strands() {
        return Err(Error::Dimension(format!("braids on {} and {} strands", a.strands(), b.strands())));
    }
    Ok(artin_images(a) == artin_images(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str, n: usize) -> BraidWord {
        BraidWord::parse(s, n).unwrap()
    }

    #[test]
    fn generator_images() {
        let a = artin_images(&w("s1", 2));
        assert_eq!(a.images()[0], FreeWord::new([1, 2, -1]));
        assert_eq!(a.images()[1], FreeWord::letter(1));
        assert!(artin_images(&w("", 3)).is_identity());
    }

    #[test]
    fn braid_relations() {
        assert!(braid_equal(&w("s1 s2 s1", 3), &w("s2 s1 s2", 3)).unwrap());
        assert!(braid_equal(&w("s1 s3", 4), &w("s3 s1", 4)).unwrap());
        assert!(!braid_equal(&w("s1 s2", 3), &w("s2 s1", 3)).unwrap());
        assert!(braid_equal(&w("s1", 3), &w("s1", 4)).is_err());
        let x = w("s1 s2^-1 s3 s2", 4);
        assert!(artin_images(&x.concat(&x.inverse())).is_identity());
    }
}
