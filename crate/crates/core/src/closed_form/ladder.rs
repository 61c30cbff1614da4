use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::{int, ratio, ClosedFormResult, MatrixKind};
use crate::error::Result;
use crate::graph::{build_graph, Family, FamilySpec};
use crate::linalg::RationalMatrix;
use crate::sequences::SeqTable;

/// The blocks of `Q+ = [[B, -B], [C, D], [D, C]]` for the ladder `L_n`.
///
/// `B` is `n x n`; `C` and `D` are `(n-1) x n` (empty when `n = 1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LadderBlocks {
    pub n: usize,
    pub b: RationalMatrix,
    pub c: RationalMatrix,
    pub d: RationalMatrix,
}

impl LadderBlocks {
    pub fn new(n: usize) -> Result<Self> {
        FamilySpec::new(Family::Ladder, n)?;
        let t = SeqTable::new(n + 1);
        let a = |i: usize| int(t.a(i));
        let s = |i: usize| int(t.s(i));
        let two_sn = int(&(t.s(n) * 2));
        let two_n = BigRational::from_integer(BigInt::from(2 * n));
        let half = ratio(1, 2);

        // b_{i,j} = a_i a_{n-j+1} / 2s_n read on the upper triangle.
        let b = RationalMatrix::from_fn(n, n, |r, c| {
            let (i, j) = (r.min(c) + 1, r.max(c) + 1);
            a(i) * a(n - j + 1) / &two_sn
        });

        let c = RationalMatrix::from_fn(n - 1, n, |r, col| {
            let (i, j) = (r + 1, col + 1);
            let base = -BigRational::from_integer(i.into()) / &two_n;
            if i <= j {
                let delta = if i == j {
                    BigRational::one()
                } else {
                    ratio(0, 1)
                };
                delta + base - a(n - j + 1) * s(i) / &two_sn
            } else {
                &half + base + a(j) * s(n - i) / &two_sn
            }
        });

        let d = RationalMatrix::from_fn(n - 1, n, |r, col| {
            let (i, j) = (r + 1, col + 1);
            let base = -BigRational::from_integer(i.into()) / &two_n;
            if i <= j {
                base + a(n - j + 1) * s(i) / &two_sn
            } else {
                &half + base - a(j) * s(n - i) / &two_sn
            }
        });

        Ok(LadderBlocks { n, b, c, d })
    }

    /// `2 s_n B`, an integer matrix whose diagonal holds the contracted
    /// spanning-tree counts `a_i a_{n-i+1}`.
    pub fn scaled_b(&self) -> RationalMatrix {
        let sn = crate::sequences::seq_value(crate::sequences::SeqKind::S, self.n);
        self.b.scale(&BigRational::from_integer(sn * 2))
    }

    /// Assembles `[[B, -B], [C, D], [D, C]]`.
    pub fn assemble(&self) -> Result<RationalMatrix> {
        self.b
            .beside(&self.b.neg())?
            .stack(&self.c.beside(&self.d)?)?
            .stack(&self.d.beside(&self.c)?)
    }
}

pub fn ladder_qplus(n: usize) -> Result<ClosedFormResult> {
    let spec = FamilySpec::new(Family::Ladder, n)?;
    let g = build_graph(&spec)?;
    let h = LadderBlocks::new(n)?
        .assemble()?
        .with_labels(g.edge_labels(), g.vertex_labels().to_vec())?;
    Ok(ClosedFormResult {
        spec,
        kind: MatrixKind::QPlus,
        matrix: h,
    })
}

/// `L+ = H^T H`, from `(Q Q^T)+ = (Q+)^T Q+`.
pub fn ladder_lplus(n: usize) -> Result<ClosedFormResult> {
    let h = ladder_qplus(n)?;
    let lplus = h.matrix.transpose().mul(&h.matrix)?;
    Ok(ClosedFormResult {
        spec: h.spec,
        kind: MatrixKind::LPlus,
        matrix: lplus,
    })
}

/// `r(u_i^ε, u_j^ε') = (j-i)/2 - εε' a_i a_{n-j+1} / 2s_n
///                     + (a_i a_{n-i+1} + a_j a_{n-j+1}) / 4s_n` for `i <= j`.
pub fn ladder_resistance(n: usize) -> Result<ClosedFormResult> {
    let spec = FamilySpec::new(Family::Ladder, n)?;
    let g = build_graph(&spec)?;
    let t = SeqTable::new(n + 1);
    let a = |i: usize| int(t.a(i));
    let sn = int(t.s(n));
    let contracted = |i: usize| a(i) * a(n - i + 1);

    let side = |p: usize| (p % n + 1, if p < n { 1i64 } else { -1 });
    let entry = |p: usize, q: usize| {
        let (mut i, e1) = side(p);
        let (mut j, e2) = side(q);
        if i > j {
            std::mem::swap(&mut i, &mut j);
        }
        let sigma = BigRational::from_integer((e1 * e2).into());
        let half_gap = ratio((j - i) as i64, 2);
        half_gap - sigma * a(i) * a(n - j + 1) / (&sn * ratio(2, 1))
            + (contracted(i) + contracted(j)) / (&sn * ratio(4, 1))
    };

    let m = RationalMatrix::from_fn(
        2 * n,
        2 * n,
        |p, q| if p <= q { entry(p, q) } else { entry(q, p) },
    )
    .with_labels(g.vertex_labels().to_vec(), g.vertex_labels().to_vec())?;
    Ok(ClosedFormResult {
        spec,
        kind: MatrixKind::Resistance,
        matrix: m,
    })
}

/// `Kf(L_n) = n^2/3 (n + 1 + a_n / s_n)`.
pub fn ladder_kirchhoff(n: usize) -> Result<BigRational> {
    FamilySpec::new(Family::Ladder, n)?;
    let t = SeqTable::new(n);
    let nn = ratio(n as i64, 1);
    Ok(&nn * &nn / ratio(3, 1) * (&nn + ratio(1, 1) + int(t.a(n)) / int(t.s(n))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        ratio(n, d)
    }

    fn rows(m: &RationalMatrix) -> Vec<Vec<BigRational>> {
        (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
    }

    #[test]
    fn n1_is_k2_pseudoinverse() {
        let h = ladder_qplus(1).unwrap();
        assert_eq!(rows(&h.matrix), vec![vec![q(1, 2), q(-1, 2)]]);
        assert_eq!(h.matrix.row_labels(), ["f1"]);
        let lp = ladder_lplus(1).unwrap();
        assert_eq!(
            rows(&lp.matrix),
            vec![vec![q(1, 4), q(-1, 4)], vec![q(-1, 4), q(1, 4)]]
        );
    }

    #[test]
    fn n2_blocks_by_hand() {
        // a = (1, 1, 3), s_2 = 4.
        let blocks = LadderBlocks::new(2).unwrap();
        assert_eq!(
            rows(&blocks.b),
            vec![vec![q(3, 8), q(1, 8)], vec![q(1, 8), q(3, 8)]]
        );
        assert_eq!(rows(&blocks.c), vec![vec![q(3, 8), q(-3, 8)]]);
        assert_eq!(rows(&blocks.d), vec![vec![q(1, 8), q(-1, 8)]]);
    }

    #[test]
    fn scaled_b_row_sums_and_diagonal() {
        for n in 1..=12 {
            let t = SeqTable::new(n + 1);
            let sb = LadderBlocks::new(n).unwrap().scaled_b();
            assert!(sb.is_integral());
            assert!(sb.is_symmetric());
            for (i, sum) in sb.row_sums().into_iter().enumerate() {
                assert_eq!(sum, int(t.s(n)));
                assert_eq!(sb.get(i, i), &int(&(t.a(i + 1) * t.a(n - i))));
            }
        }
    }

    #[test]
    fn n2_resistance_and_kirchhoff() {
        let r = ladder_resistance(2).unwrap().matrix;
        assert_eq!(r.at("u1+", "u2+").unwrap(), &q(3, 4));
        assert_eq!(r.at("u1+", "u1-").unwrap(), &q(3, 4));
        assert_eq!(r.at("u1+", "u2-").unwrap(), &q(1, 1));
        assert_eq!(ladder_kirchhoff(2).unwrap(), q(5, 1));
        assert_eq!(r.grand_sum() / q(2, 1), q(5, 1));
    }

    #[test]
    fn resistance_diagonal_vanishes() {
        for n in 1..=10 {
            let r = ladder_resistance(n).unwrap().matrix;
            assert!(r.is_symmetric());
            assert!((0..2 * n).all(|p| r.get(p, p) == &q(0, 1)));
            assert_eq!(r.at("u1+", "u1-").unwrap(), r.at("u1-", "u1+").unwrap());
        }
        assert_eq!(
            ladder_resistance(1)
                .unwrap()
                .matrix
                .at("u1+", "u1-")
                .unwrap(),
            &q(1, 1)
        );
    }

    #[test]
    fn rejects_zero() {
        assert!(ladder_qplus(0).is_err());
        assert!(ladder_kirchhoff(0).is_err());
    }
}
