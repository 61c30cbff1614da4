use num_bigint::BigInt;
use num_rational::BigRational;

use super::{checked_ratio, int, ratio, ClosedFormResult, MatrixKind};
use crate::error::{Error, Result};
use crate::graph::{build_graph, Family, FamilySpec};
use crate::linalg::RationalMatrix;
use crate::sequences::SeqTable;

/// Sequence terms and `K = (a_{n+1} - a_n) / (a_{n+1} + a_n + 2)`.
struct MobiusTerms {
    n: usize,
    t: SeqTable,
    k: BigRational,
}

impl MobiusTerms {
    fn new(n: usize) -> Result<Self> {
        FamilySpec::new(Family::Mobius, n)?;
        let t = SeqTable::new(n + 1);
        let k = checked_ratio(
            t.a(n + 1) - t.a(n),
            t.a(n + 1) + t.a(n) + 2,
            "a_{n+1} + a_n + 2",
        )?;
        Ok(MobiusTerms { n, t, k })
    }

    fn a(&self, i: usize) -> BigRational {
        int(self.t.a(i))
    }

    /// `q+_{e_{i+t}, u_i}` for `t` in `0..n`.
    fn rail_near(&self, t: usize) -> BigRational {
        let (a1, a0) = (self.a(t + 1), self.a(t));
        -(a1.clone() * ratio(2, 1) - a0) / ratio(4, 1) * &self.k + (a1 + ratio(1, 1)) / ratio(4, 1)
            - ratio(2 * t as i64 + 1, 4 * self.n as i64)
    }

    /// `q+_{e_{n+i+t}, u_i}` for `t` in `0..n`.
    fn rail_far(&self, t: usize) -> BigRational {
        let (a1, a0) = (self.a(t + 1), self.a(t));
        (a1.clone() * ratio(2, 1) - a0) / ratio(4, 1) * &self.k
            - (a1 - ratio(1, 1)) / ratio(4, 1)
            - ratio(2 * t as i64 + 1, 4 * self.n as i64)
    }

    /// `ε_{i+t} q+_{f_{i+t}, u_i}`.
    fn spoke(&self, t: usize) -> BigRational {
        let (a1, a0) = (self.a(t + 1), self.a(t));
        (&a1 + &a0) / ratio(4, 1) * &self.k - (a1 - a0) / ratio(4, 1)
    }

    /// Valid for cyclic gaps `0..=n`.
    fn lplus(&self, g: usize) -> BigRational {
        let (a1, a0) = (self.a(g + 1), self.a(g));
        let n = self.n as i64;
        let g = g as i64;
        (&a1 + &a0) / ratio(8, 1) * &self.k - (a1 - a0) / ratio(8, 1) - ratio(g, 4)
            + ratio(g * g, 4 * n)
            + (ratio(n, 1) - ratio(1, n)) / ratio(24, 1)
    }

    /// Valid for cyclic gaps `0..=n`.
    fn resistance(&self, g: usize) -> BigRational {
        let (a1, a0) = (self.a(g + 1), self.a(g));
        let n = self.n as i64;
        let g = g as i64;
        -(&a1 + &a0 - ratio(2, 1)) / ratio(4, 1) * &self.k + (a1 - a0) / ratio(4, 1) + ratio(g, 2)
            - ratio(g * g, 2 * n)
    }
}

/// `ε_j = (-1)^floor((j-1)/n)` for a 1-based cycle index `j`.
fn epsilon(n: usize, j: usize) -> i64 {
    if ((j - 1) / n).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Cyclic distance on the 2n-cycle, in `0..=n`.
fn cyclic_gap(n: usize, p: usize, q: usize) -> usize {
    let d = (q + 2 * n - p) % (2 * n);
    d.min(2 * n - d)
}

pub fn mobius_qplus(n: usize) -> Result<ClosedFormResult> {
    let spec = FamilySpec::new(Family::Mobius, n)?;
    let g = build_graph(&spec)?;
    let terms = MobiusTerms::new(n)?;
    let near: Vec<BigRational> = (0..n).map(|t| terms.rail_near(t)).collect();
    let far: Vec<BigRational> = (0..n).map(|t| terms.rail_far(t)).collect();
    let spoke: Vec<BigRational> = (0..n).map(|t| terms.spoke(t)).collect();
    // Rows: e1..e2n, f1..fn. Columns: u1..u2n (u_{n+i} labelled v_i).
    let m = RationalMatrix::from_fn(3 * n, 2 * n, |row, col| {
        let i = col + 1;
        if row < 2 * n {
            let j = row + 1;
            let d = (j + 2 * n - i) % (2 * n);
            if d < n {
                near[d].clone()
            } else {
                far[d - n].clone()
            }
        } else {
            // Spoke f_j meets the cycle at u_j and u_{j+n}; exactly one of
            // them is u_{i+t} with t in 0..n.
            let j = row - 2 * n + 1;
            let t = (j + n - i % n) % n;
            let at = (i - 1 + t) % (2 * n) + 1;
            if epsilon(n, at) > 0 {
                spoke[t].clone()
            } else {
                -&spoke[t]
            }
        }
    })
    .with_labels(g.edge_labels(), g.vertex_labels().to_vec())?;
    Ok(ClosedFormResult {
        spec,
        kind: MatrixKind::QPlus,
        matrix: m,
    })
}

fn vertex_matrix(
    n: usize,
    kind: MatrixKind,
    f: impl Fn(&MobiusTerms, usize) -> BigRational,
) -> Result<ClosedFormResult> {
    let spec = FamilySpec::new(Family::Mobius, n)?;
    let g = build_graph(&spec)?;
    let terms = MobiusTerms::new(n)?;
    let table: Vec<BigRational> = (0..=n).map(|g| f(&terms, g)).collect();
    let entry = |p: usize, q: usize| table[cyclic_gap(n, p, q)].clone();
    let m = RationalMatrix::from_fn(
        2 * n,
        2 * n,
        |p, q| if p <= q { entry(p, q) } else { entry(q, p) },
    )
    .with_labels(g.vertex_labels().to_vec(), g.vertex_labels().to_vec())?;
    Ok(ClosedFormResult {
        spec,
        kind,
        matrix: m,
    })
}

pub fn mobius_lplus(n: usize) -> Result<ClosedFormResult> {
    vertex_matrix(n, MatrixKind::LPlus, MobiusTerms::lplus)
}

pub fn mobius_resistance(n: usize) -> Result<ClosedFormResult> {
    vertex_matrix(n, MatrixKind::Resistance, MobiusTerms::resistance)
}

/// Resistance between `u_i` and `u_{i+gap}` for `gap` in `0..=n`.
pub fn mobius_resistance_entry(n: usize, gap: usize) -> Result<BigRational> {
    if gap > n {
        return Err(Error::domain(format!("gap {gap} must be <= n = {n}")));
    }
    Ok(MobiusTerms::new(n)?.resistance(gap))
}

/// `Kf(M_n) = n^2 K + n(n^2 - 1)/6`.
pub fn mobius_kirchhoff(n: usize) -> Result<BigRational> {
    let terms = MobiusTerms::new(n)?;
    let nn = n as i64;
    Ok(ratio(nn * nn, 1) * &terms.k + ratio(nn * (nn * nn - 1), 6))
}

/// `s(M_n) = n (a_{n+1} + a_n + 2) / 2`.
pub fn mobius_tree_count(n: usize) -> Result<BigInt> {
    FamilySpec::new(Family::Mobius, n)?;
    let t = SeqTable::new(n + 1);
    super::halve(BigInt::from(n) * (t.a(n + 1) + t.a(n) + 2))
}
