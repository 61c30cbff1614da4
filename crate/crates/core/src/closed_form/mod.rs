//! Closed-form pseudoinverses, resistance matrices, Kirchhoff indices and
//! spanning-tree counts for the three ladder families.
//!
//! Every matrix here is assembled entry by entry from the `a_n` / `s_n`
//! sequences; nothing in this module performs elimination. The ladder `L+`
//! is the one exception: it is `H^T H` with `H` the closed-form `Q+`.

mod circular;
mod ladder;
mod mobius;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{
    build_graph, incidence_matrix, laplacian_matrix, Family, FamilySpec, OrientedGraph,
};
use crate::linalg::RationalMatrix;
use crate::sequences::SeqTable;

pub use circular::{
    cl_kirchhoff, cl_lplus, cl_qplus, cl_resistance, cl_resistance_entry, cl_tree_count,
    cl_tree_count_factored,
};
pub use ladder::{ladder_kirchhoff, ladder_lplus, ladder_qplus, ladder_resistance, LadderBlocks};
pub use mobius::{
    mobius_kirchhoff, mobius_lplus, mobius_qplus, mobius_resistance, mobius_resistance_entry,
    mobius_tree_count,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MatrixKind {
    QPlus,
    LPlus,
    Resistance,
    Incidence,
    Laplacian,
}

impl MatrixKind {
    pub const ALL: [MatrixKind; 5] = [
        MatrixKind::QPlus,
        MatrixKind::LPlus,
        MatrixKind::Resistance,
        MatrixKind::Incidence,
        MatrixKind::Laplacian,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MatrixKind::QPlus => "qplus",
            MatrixKind::LPlus => "lplus",
            MatrixKind::Resistance => "resistance",
            MatrixKind::Incidence => "incidence",
            MatrixKind::Laplacian => "laplacian",
        }
    }
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MatrixKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "qplus" => Ok(MatrixKind::QPlus),
            "lplus" => Ok(MatrixKind::LPlus),
            "resistance" => Ok(MatrixKind::Resistance),
            "incidence" => Ok(MatrixKind::Incidence),
            "laplacian" => Ok(MatrixKind::Laplacian),
            _ => Err(Error::Parse(format!("unknown matrix kind `{s}`"))),
        }
    }
}

/// A closed-form matrix together with the instance it describes. Labels
/// follow the canonical orders of [`crate::graph`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedFormResult {
    pub spec: FamilySpec,
    pub kind: MatrixKind,
    pub matrix: RationalMatrix,
}

pub(crate) fn int(v: &BigInt) -> BigRational {
    BigRational::from_integer(v.clone())
}

pub(crate) fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

pub(crate) fn checked_ratio(num: BigInt, den: BigInt, what: &str) -> Result<BigRational> {
    if den.is_zero() {
        return Err(Error::domain(format!("denominator {what} vanishes")));
    }
    Ok(BigRational::new(num, den))
}

pub(crate) fn halve(v: BigInt) -> Result<BigInt> {
    let (q, r) = v.div_rem(&BigInt::from(2));
    if !r.is_zero() {
        return Err(Error::domain("expected an even spanning-tree numerator"));
    }
    Ok(q)
}

pub fn qplus(spec: &FamilySpec) -> Result<ClosedFormResult> {
    match spec.family {
        Family::Ladder => ladder_qplus(spec.n),
        Family::CircularLadder => cl_qplus(spec.n),
        Family::Mobius => mobius_qplus(spec.n),
    }
}

pub fn lplus(spec: &FamilySpec) -> Result<ClosedFormResult> {
    match spec.family {
        Family::Ladder => ladder_lplus(spec.n),
        Family::CircularLadder => cl_lplus(spec.n),
        Family::Mobius => mobius_lplus(spec.n),
    }
}

pub fn resistance(spec: &FamilySpec) -> Result<ClosedFormResult> {
    match spec.family {
        Family::Ladder => ladder_resistance(spec.n),
        Family::CircularLadder => cl_resistance(spec.n),
        Family::Mobius => mobius_resistance(spec.n),
    }
}

/// Any matrix attached to an instance. Incidence and Laplacian come
/// straight from the graph; the rest are closed forms.
pub fn matrix(spec: &FamilySpec, kind: MatrixKind) -> Result<ClosedFormResult> {
    let structural = |build: fn(&OrientedGraph) -> RationalMatrix| -> Result<ClosedFormResult> {
        let g = build_graph(spec)?;
        Ok(ClosedFormResult {
            spec: *spec,
            kind,
            matrix: build(&g),
        })
    };
    match kind {
        MatrixKind::QPlus => qplus(spec),
        MatrixKind::LPlus => lplus(spec),
        MatrixKind::Resistance => resistance(spec),
        MatrixKind::Incidence => structural(incidence_matrix),
        MatrixKind::Laplacian => structural(laplacian_matrix),
    }
}

pub fn kirchhoff_index(spec: &FamilySpec) -> Result<BigRational> {
    match spec.family {
        Family::Ladder => ladder_kirchhoff(spec.n),
        Family::CircularLadder => cl_kirchhoff(spec.n),
        Family::Mobius => mobius_kirchhoff(spec.n),
    }
}

pub fn tree_count(spec: &FamilySpec) -> Result<BigInt> {
    spec.validate()?;
    match spec.family {
        Family::Ladder => Ok(SeqTable::new(spec.n).s(spec.n).clone()),
        Family::CircularLadder => cl_tree_count(spec.n),
        Family::Mobius => mobius_tree_count(spec.n),
    }
}

/// Spanning trees of the graph with spoke `f_i` contracted:
/// `a_i a_{n-i+1}` on the ladder and `n s_n` on the cyclic families.
pub fn contracted_tree_count(spec: &FamilySpec, spoke_index: usize) -> Result<BigInt> {
    spec.validate()?;
    let n = spec.n;
    if !(1..=n).contains(&spoke_index) {
        return Err(Error::domain(format!(
            "spoke index {spoke_index} outside 1..={n}"
        )));
    }
    let t = SeqTable::new(n + 1);
    Ok(match spec.family {
        Family::Ladder => t.a(spoke_index) * t.a(n - spoke_index + 1),
        Family::CircularLadder | Family::Mobius => BigInt::from(n) * t.s(n),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(f: Family, n: usize) -> FamilySpec {
        FamilySpec::new(f, n).unwrap()
    }

    #[test]
    fn tree_count_anchors() {
        assert_eq!(
            tree_count(&spec(Family::Ladder, 3)).unwrap(),
            BigInt::from(15)
        );
        assert_eq!(
            tree_count(&spec(Family::CircularLadder, 3)).unwrap(),
            BigInt::from(75)
        );
        assert_eq!(
            tree_count(&spec(Family::Mobius, 3)).unwrap(),
            BigInt::from(81)
        );
    }

    #[test]
    fn contracted_anchors() {
        let l3 = spec(Family::Ladder, 3);
        assert_eq!(contracted_tree_count(&l3, 2).unwrap(), BigInt::from(9));
        assert_eq!(contracted_tree_count(&l3, 1).unwrap(), BigInt::from(11));
        for i in 1..=3 {
            assert_eq!(
                contracted_tree_count(&spec(Family::CircularLadder, 3), i).unwrap(),
                BigInt::from(45)
            );
        }
        assert!(contracted_tree_count(&l3, 0).is_err());
        assert!(contracted_tree_count(&l3, 4).is_err());
    }

    #[test]
    fn kirchhoff_anchors() {
        assert_eq!(
            kirchhoff_index(&spec(Family::Ladder, 2)).unwrap(),
            ratio(5, 1)
        );
        assert_eq!(
            kirchhoff_index(&spec(Family::CircularLadder, 3)).unwrap(),
            ratio(47, 5)
        );
        assert_eq!(
            kirchhoff_index(&spec(Family::Mobius, 3)).unwrap(),
            ratio(9, 1)
        );
    }

    #[test]
    fn structural_matrices() {
        let s = spec(Family::Ladder, 2);
        let q = matrix(&s, MatrixKind::Incidence).unwrap().matrix;
        assert_eq!(q.shape(), (4, 4));
        let l = matrix(&s, MatrixKind::Laplacian).unwrap().matrix;
        assert_eq!(l.trace(), ratio(8, 1));
        assert_eq!(q.mul(&q.transpose()).unwrap(), l);
    }

    #[test]
    fn invalid_specs_are_rejected() {
        let bad = FamilySpec {
            family: Family::Mobius,
            n: 2,
        };
        assert!(qplus(&bad).is_err());
        assert!(tree_count(&bad).is_err());
        assert!(kirchhoff_index(&bad).is_err());
        assert!("nope".parse::<MatrixKind>().is_err());
        for kind in MatrixKind::ALL {
            assert_eq!(kind.name().parse::<MatrixKind>().unwrap(), kind);
        }
    }
}
