//! Text encodings for matrices and scalars.
//!
//! Rationals are always written as strings in lowest terms: `"3/10"`,
//! `"-1/2"`, and integers without a denominator (`"5"`, `"-2"`, `"0"`). The
//! decoders accept only that canonical form, so decoding and re-encoding any
//! emitted document reproduces it byte for byte.

use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::closed_form::{ClosedFormResult, MatrixKind};
use crate::error::{Error, Result};
use crate::graph::{FamilySpec, MAX_LOAD_N};
use crate::linalg::RationalMatrix;

/// Longest accepted numerator or denominator, in decimal digits.
pub const MAX_DIGITS: usize = 4096;

pub fn format_rational(v: &BigRational) -> String {
    if v.denom().is_one() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

fn parse_digits(s: &str, what: &str, full: &str) -> Result<BigInt> {
    let bad = |why: &str| Error::Parse(format!("bad rational `{full}`: {what} {why}"));
    if s.is_empty() {
        return Err(bad("is empty"));
    }
    if s.len() > MAX_DIGITS {
        return Err(bad("is too long"));
    }
    if !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad("has non-digit characters"));
    }
    if s.len() > 1 && s.starts_with('0') {
        return Err(bad("has a leading zero"));
    }
    s.parse::<BigInt>().map_err(|_| bad("does not parse"))
}

/// Parses the canonical form produced by [`format_rational`].
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let (negative, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (
            parse_digits(n, "numerator", s)?,
            Some(parse_digits(d, "denominator", s)?),
        ),
        None => (parse_digits(body, "numerator", s)?, None),
    };
    if negative && num.is_zero() {
        return Err(Error::Parse(format!("bad rational `{s}`: negative zero")));
    }
    let num = if negative { -num } else { num };
    match den {
        None => Ok(BigRational::from_integer(num)),
        Some(d) => {
            if d.is_zero() || d.is_one() {
                return Err(Error::Parse(format!(
                    "bad rational `{s}`: denominator must exceed 1"
                )));
            }
            let v = BigRational::new(num.clone(), d.clone());
            if v.numer() != &num || v.denom() != &d {
                return Err(Error::Parse(format!(
                    "bad rational `{s}`: not in lowest terms"
                )));
            }
            Ok(v)
        }
    }
}

/// `{"spec":{...},"kind":"qplus","rows":[...],"cols":[...],"entries":[["p/q",...],...]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDocument {
    pub spec: FamilySpec,
    pub kind: MatrixKind,
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub entries: Vec<Vec<String>>,
}

impl MatrixDocument {
    pub fn from_result(r: &ClosedFormResult) -> Self {
        let m = &r.matrix;
        MatrixDocument {
            spec: r.spec,
            kind: r.kind,
            rows: m.row_labels().to_vec(),
            cols: m.col_labels().to_vec(),
            entries: (0..m.rows())
                .map(|i| m.row(i).iter().map(format_rational).collect())
                .collect(),
        }
    }

    /// Checks shape consistency and entry syntax, then builds the matrix.
    pub fn to_result(&self) -> Result<ClosedFormResult> {
        self.spec.validate()?;
        if self.entries.len() != self.rows.len() {
            return Err(Error::Parse(format!(
                "{} row labels but {} rows of entries",
                self.rows.len(),
                self.entries.len()
            )));
        }
        let parsed = self
            .entries
            .iter()
            .map(|row| {
                if row.len() != self.cols.len() {
                    return Err(Error::Parse(format!(
                        "row has {} entries, expected {}",
                        row.len(),
                        self.cols.len()
                    )));
                }
                row.iter()
                    .map(|s| parse_rational(s))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let matrix = if parsed.is_empty() {
            RationalMatrix::zeros(0, self.cols.len())
        } else {
            RationalMatrix::from_rows(parsed)?
        }
        .with_labels(self.rows.clone(), self.cols.clone())?;
        Ok(ClosedFormResult {
            spec: self.spec,
            kind: self.kind,
            matrix,
        })
    }
}

pub fn matrix_to_json(r: &ClosedFormResult) -> String {
    let mut s =
        serde_json::to_string(&MatrixDocument::from_result(r)).expect("document serializes");
    s.push('\n');
    s
}

pub fn parse_matrix_json(text: &str) -> Result<ClosedFormResult> {
    let doc: MatrixDocument =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    doc.to_result()
}

/// Header row of column labels, then one line per row led by its label.
/// With `bare` set, only the entries are written.
pub fn matrix_to_csv(m: &RationalMatrix, bare: bool) -> String {
    let mut out = String::new();
    if !bare {
        out.push_str(
            &std::iter::once("")
                .chain(m.col_labels().iter().map(String::as_str))
                .collect::<Vec<_>>()
                .join(","),
        );
        out.push('\n');
    }
    for i in 0..m.rows() {
        let cells = m.row(i).iter().map(format_rational);
        let line: Vec<String> = if bare {
            cells.collect()
        } else {
            std::iter::once(m.row_labels()[i].clone())
                .chain(cells)
                .collect()
        };
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

/// Inverse of [`matrix_to_csv`] with labels.
pub fn parse_matrix_csv(text: &str) -> Result<RationalMatrix> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty CSV".into()))?;
    let mut head = header.split(',');
    if head.next() != Some("") {
        return Err(Error::Parse(
            "CSV header must start with an empty cell".into(),
        ));
    }
    let cols: Vec<String> = head.map(str::to_owned).collect();
    if cols.iter().any(String::is_empty) {
        return Err(Error::Parse("empty column label".into()));
    }
    let mut row_labels = Vec::new();
    let mut rows = Vec::new();
    for line in lines {
        let mut cells = line.split(',');
        let label = cells.next().unwrap_or_default();
        if label.is_empty() {
            return Err(Error::Parse("empty row label".into()));
        }
        let values = cells.map(parse_rational).collect::<Result<Vec<_>>>()?;
        if values.len() != cols.len() {
            return Err(Error::Parse(format!(
                "row `{label}` has {} entries, expected {}",
                values.len(),
                cols.len()
            )));
        }
        row_labels.push(label.to_owned());
        rows.push(values);
    }
    let m = if rows.is_empty() {
        RationalMatrix::zeros(0, cols.len())
    } else {
        RationalMatrix::from_rows(rows)?
    };
    m.with_labels(row_labels, cols)
}

/// Parses `"7"` or the inclusive range `"3..8"`. Bounds above
/// [`MAX_LOAD_N`] are rejected.
pub fn parse_n_range(s: &str) -> Result<RangeInclusive<usize>> {
    let bound = |part: &str| -> Result<usize> {
        if part.is_empty() || part.len() > 6 || !part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(format!("bad n `{part}` in `{s}`")));
        }
        let v: usize = part
            .parse()
            .map_err(|_| Error::Parse(format!("bad n `{part}`")))?;
        if v > MAX_LOAD_N {
            return Err(Error::Parse(format!(
                "n = {v} exceeds the limit {MAX_LOAD_N}"
            )));
        }
        Ok(v)
    };
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (bound(lo)?, bound(hi)?),
        None => {
            let v = bound(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(Error::Parse(format!("empty range `{s}`")));
    }
    Ok(lo..=hi)
}

/// A single exact value attached to an instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScalarDocument {
    pub spec: FamilySpec,
    pub kind: String,
    pub value: String,
}

pub fn scalar_to_json(spec: &FamilySpec, kind: &str, value: &BigRational) -> String {
    let doc = ScalarDocument {
        spec: *spec,
        kind: kind.to_owned(),
        value: format_rational(value),
    };
    let mut s = serde_json::to_string(&doc).expect("document serializes");
    s.push('\n');
    s
}

pub fn scalar_to_csv(spec: &FamilySpec, kind: &str, value: &BigRational) -> String {
    format!(
        "family,n,kind,value\n{},{},{kind},{}\n",
        spec.family,
        spec.n,
        format_rational(value)
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_form::{ladder_qplus, qplus};
    use crate::graph::Family;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rational_text() {
        assert_eq!(format_rational(&q(3, 10)), "3/10");
        assert_eq!(format_rational(&q(-1, 2)), "-1/2");
        assert_eq!(format_rational(&q(10, 2)), "5");
        assert_eq!(format_rational(&q(0, 7)), "0");
        for s in ["0", "5", "-5", "3/10", "-47/180"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
    }

    #[test]
    fn non_canonical_rationals_are_rejected() {
        for s in [
            "", "-", "+1", "-0", "01", "1/1", "2/4", "1/0", "1/", "/2", "1/-2", "1.5", "1/2/3",
            " 1",
        ] {
            assert!(parse_rational(s).is_err(), "{s:?}");
        }
    }

    #[test]
    fn csv_k2() {
        let h = ladder_qplus(1).unwrap();
        assert_eq!(matrix_to_csv(&h.matrix, true), "1/2,-1/2\n");
        let labelled = matrix_to_csv(&h.matrix, false);
        assert_eq!(labelled, ",u1+,u1-\nf1,1/2,-1/2\n");
        assert_eq!(parse_matrix_csv(&labelled).unwrap(), h.matrix);
    }

    #[test]
    fn json_layout() {
        let h = ladder_qplus(1).unwrap();
        assert_eq!(
            matrix_to_json(&h),
            "{\"spec\":{\"family\":\"ladder\",\"n\":1},\"kind\":\"qplus\",\"rows\":[\"f1\"],\
             \"cols\":[\"u1+\",\"u1-\"],\"entries\":[[\"1/2\",\"-1/2\"]]}\n"
        );
    }

    #[test]
    fn json_round_trip_is_byte_exact() {
        let r = qplus(&FamilySpec::new(Family::Mobius, 4).unwrap()).unwrap();
        let text = matrix_to_json(&r);
        let back = parse_matrix_json(&text).unwrap();
        assert_eq!(back, r);
        assert_eq!(matrix_to_json(&back), text);
    }

    #[test]
    fn malformed_documents() {
        let good = matrix_to_json(&ladder_qplus(2).unwrap());
        assert!(parse_matrix_json(&good.replace("\"3/8\"", "\"6/16\"")).is_err());
        assert!(parse_matrix_json(&good.replace("\"n\":2", "\"n\":0")).is_err());
        assert!(parse_matrix_json(&good.replace("\"f1\",", "")).is_err());
        assert!(parse_matrix_json("{}").is_err());
        assert!(parse_matrix_csv("").is_err());
        assert!(parse_matrix_csv("x,a\n").is_err());
        assert!(parse_matrix_csv(",a,b\nr,1\n").is_err());
    }

    #[test]
    fn n_ranges() {
        assert_eq!(parse_n_range("7").unwrap(), 7..=7);
        assert_eq!(parse_n_range("3..16").unwrap(), 3..=16);
        assert_eq!(parse_n_range("0").unwrap(), 0..=0);
        for s in [
            "", "..", "3..", "..3", "8..3", "3..=8", "-1", "3...8", "1e3", "99999999",
        ] {
            assert!(parse_n_range(s).is_err(), "{s:?}");
        }
    }

    #[test]
    fn scalars() {
        let spec = FamilySpec::new(Family::CircularLadder, 3).unwrap();
        assert_eq!(
            scalar_to_json(&spec, "kirchhoff", &q(47, 5)),
            "{\"spec\":{\"family\":\"cl\",\"n\":3},\"kind\":\"kirchhoff\",\"value\":\"47/5\"}\n"
        );
        assert_eq!(
            scalar_to_csv(&spec, "trees", &q(75, 1)),
            "family,n,kind,value\ncl,3,trees,75\n"
        );
    }
}
