use serde::{Deserialize, Serialize};

use super::{Field, FieldTag, LaurentPoly, Matrix, RatFunc, Ring};
use crate::error::{Error, Result};

/// Ring elements with a text form and an underlying coefficient field.
pub trait TextRing: Ring {
    fn field_tag() -> FieldTag;
    fn parse_text(s: &str) -> Result<Self>;
}

impl<F: Field> TextRing for LaurentPoly<F> {
    fn field_tag() -> FieldTag {
        F::tag()
    }
    fn parse_text(s: &str) -> Result<Self> {
        LaurentPoly::parse(s)
    }
}

impl<F: Field> TextRing for RatFunc<F> {
    fn field_tag() -> FieldTag {
        F::tag()
    }
    fn parse_text(s: &str) -> Result<Self> {
        RatFunc::parse(s)
    }
}

/// Serialized matrix: `{"n": .., "field": .., "entries": [[..]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub n: usize,
    pub field: String,
    pub entries: Vec<Vec<String>>,
}

impl MatrixJson {
    pub fn from_matrix<R: TextRing>(m: &Matrix<R>) -> Self {
        MatrixJson {
            n: m.rows(),
            field: R::field_tag().to_string(),
            entries: m.to_rows().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect(),
        }
    }

    pub fn to_matrix<R: TextRing>(&self) -> Result<Matrix<R>> {
        let expected = R::field_tag().to_string();
        if self.field != expected {
            return Err(Error::FieldMismatch { expected, found: self.field.clone() });
        }
        if self.entries.len() != self.n || self.entries.iter().any(|r| r.len() != self.n) {
            return Err(Error::Dimension(format!("expected a {0}x{0} entry table", self.n)));
        }
        let rows = self
            .entries
            .iter()
            .map(|r| r.iter().map(|s| R::parse_text(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(rows)
    }

    pub fn field_tag(&self) -> Result<FieldTag> {
        self.field.parse()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Fp, Gaussian, LMat, Rational};

    #[test]
    fn json_round_trip() {
        let m = LMat::<Gaussian>::parse_rows(&[&["(0+1i)*t", "0"], &["1-t^-1", "1"]]).unwrap();
        let j = MatrixJson::from_matrix(&m);
        assert_eq!(j.field, "qi");
        let back: LMat<Gaussian> = MatrixJson::from_json(&j.to_json()).unwrap().to_matrix().unwrap();
        assert_eq!(back, m);
        assert!(matches!(j.to_matrix::<LaurentPoly<Rational>>(), Err(Error::FieldMismatch { .. })));
        let f: LMat<Fp<5>> = LMat::parse_rows(&[&["4*t"]]).unwrap();
        assert_eq!(MatrixJson::from_matrix(&f).field, "fp:5");
    }
}
