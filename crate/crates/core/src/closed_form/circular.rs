use num_bigint::BigInt;
use num_rational::BigRational;

use super::{checked_ratio, int, ratio, ClosedFormResult, MatrixKind};
use crate::error::Result;
use crate::graph::{build_graph, Family, FamilySpec};
use crate::linalg::RationalMatrix;
use crate::sequences::SeqTable;

/// Precomputed sequence terms and the ratio
/// `K = (a_{n+1} - a_n) / (a_{n+1} + a_n - 2)` shared by every entry.
pub(crate) struct CircularTerms {
    n: usize,
    t: SeqTable,
    k: BigRational,
}

impl CircularTerms {
    pub(crate) fn new(n: usize) -> Result<Self> {
        FamilySpec::new(Family::CircularLadder, n)?;
        let t = SeqTable::new(n + 1);
        let k = checked_ratio(
            t.a(n + 1) - t.a(n),
            t.a(n + 1) + t.a(n) - 2,
            "a_{n+1} + a_n - 2",
        )?;
        Ok(CircularTerms { n, t, k })
    }

    fn a(&self, i: usize) -> BigRational {
        int(self.t.a(i))
    }

    /// `q+_{e_{i+t}^ε', u_i^ε}` with `sigma = εε'`.
    pub(crate) fn rail(&self, gap: usize, sigma: i64) -> BigRational {
        let (a1, a0) = (self.a(gap + 1), self.a(gap));
        let s = ratio(sigma, 1);
        -&s * (a1.clone() * ratio(2, 1) - &a0) / ratio(4, 1) * &self.k
            + (&s * &a1 + ratio(1, 1)) / ratio(4, 1)
            - ratio(2 * gap as i64 + 1, 4 * self.n as i64)
    }

    /// `ε q+_{f_{i+t}, u_i^ε}`.
    pub(crate) fn spoke(&self, gap: usize) -> BigRational {
        let (a1, a0) = (self.a(gap + 1), self.a(gap));
        (&a1 + &a0) / ratio(4, 1) * &self.k - (a1 - a0) / ratio(4, 1)
    }

    pub(crate) fn lplus(&self, gap: usize, sigma: i64) -> BigRational {
        let (a1, a0) = (self.a(gap + 1), self.a(gap));
        let s = ratio(sigma, 1);
        let n = self.n as i64;
        let g = gap as i64;
        &s * (&a1 + &a0) / ratio(8, 1) * &self.k - &s * (a1 - a0) / ratio(8, 1) - ratio(g, 4)
            + ratio(g * g, 4 * n)
            + (ratio(n, 1) - ratio(1, n)) / ratio(24, 1)
    }

    pub(crate) fn resistance(&self, gap: usize, sigma: i64) -> BigRational {
        let (a1, a0) = (self.a(gap + 1), self.a(gap));
        let s = ratio(sigma, 1);
        let n = self.n as i64;
        let g = gap as i64;
        -&s * (&a1 + &a0 - ratio(2 * sigma, 1)) / ratio(4, 1) * &self.k
            + &s * (a1 - a0) / ratio(4, 1)
            + ratio(g, 2)
            - ratio(g * g, 2 * n)
    }
}

/// Resistance between `u_i^ε` and `u_{i+gap}^ε'` straight from the
/// gap formula, for any `gap` in `0..n` (no reduction applied).
pub fn cl_resistance_entry(n: usize, gap: usize, sigma: i64) -> Result<BigRational> {
    let terms = CircularTerms::new(n)?;
    if gap >= n {
        return Err(crate::error::Error::domain(format!(
            "gap {gap} must be < n = {n}"
        )));
    }
    Ok(terms.resistance(gap, sigma))
}

/// Values indexed by gap `0..n` and sign product `±1`.
struct SignedTable {
    plus: Vec<BigRational>,
    minus: Vec<BigRational>,
}

impl SignedTable {
    fn new(n: usize, f: impl Fn(usize, i64) -> BigRational) -> Self {
        SignedTable {
            plus: (0..n).map(|t| f(t, 1)).collect(),
            minus: (0..n).map(|t| f(t, -1)).collect(),
        }
    }

    fn get(&self, gap: usize, sigma: i64) -> &BigRational {
        if sigma > 0 {
            &self.plus[gap]
        } else {
            &self.minus[gap]
        }
    }
}

fn position(n: usize, p: usize) -> (usize, i64) {
    (p % n, if p < n { 1 } else { -1 })
}

fn gap(n: usize, from: usize, to: usize) -> usize {
    (to + n - from) % n
}

pub fn cl_qplus(n: usize) -> Result<ClosedFormResult> {
    let spec = FamilySpec::new(Family::CircularLadder, n)?;
    let g = build_graph(&spec)?;
    let terms = CircularTerms::new(n)?;
    let rail = SignedTable::new(n, |t, sigma| terms.rail(t, sigma));
    let spoke: Vec<BigRational> = (0..n).map(|t| terms.spoke(t)).collect();
    // Rows: e1+..en+, e1-..en-, f1..fn. Columns: u1+..un+, u1-..un-.
    let m = RationalMatrix::from_fn(3 * n, 2 * n, |row, col| {
        let (i, eps) = position(n, col);
        if row < 2 * n {
            let (j, eps_rail) = position(n, row);
            rail.get(gap(n, i, j), eps * eps_rail).clone()
        } else {
            let t = gap(n, i, row - 2 * n);
            if eps > 0 {
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
    f: impl Fn(&CircularTerms, usize, i64) -> BigRational,
) -> Result<ClosedFormResult> {
    let spec = FamilySpec::new(Family::CircularLadder, n)?;
    let g = build_graph(&spec)?;
    let terms = CircularTerms::new(n)?;
    let table = SignedTable::new(n, |t, sigma| f(&terms, t, sigma));
    let entry = |p: usize, q: usize| {
        let (i, e1) = position(n, p);
        let (j, e2) = position(n, q);
        table.get(gap(n, i, j), e1 * e2).clone()
    };
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

pub fn cl_lplus(n: usize) -> Result<ClosedFormResult> {
    vertex_matrix(n, MatrixKind::LPlus, CircularTerms::lplus)
}

pub fn cl_resistance(n: usize) -> Result<ClosedFormResult> {
    vertex_matrix(n, MatrixKind::Resistance, CircularTerms::resistance)
}

/// `Kf(CL_n) = n^2 K + n(n^2 - 1)/6`.
pub fn cl_kirchhoff(n: usize) -> Result<BigRational> {
    let terms = CircularTerms::new(n)?;
    let nn = n as i64;
    Ok(ratio(nn * nn, 1) * &terms.k + ratio(nn * (nn * nn - 1), 6))
}

/// `s(CL_n) = n (a_{n+1} + a_n - 2) / 2`.
pub fn cl_tree_count(n: usize) -> Result<BigInt> {
    FamilySpec::new(Family::CircularLadder, n)?;
    let t = SeqTable::new(n + 1);
    super::halve(BigInt::from(n) * (t.a(n + 1) + t.a(n) - 2))
}

/// `s(CL_n) = n s_n * ratio(k)` with the odd/even factorization of
/// `(a_{n+1} + a_n - 2) / (a_{n+1} - a_n)` in terms of `s_k`.
pub fn cl_tree_count_factored(n: usize) -> Result<BigRational> {
    FamilySpec::new(Family::CircularLadder, n)?;
    let k = n / 2;
    let t = SeqTable::new(k + 1);
    let s = |i: usize| t.s(i).clone();
    let factor = if n % 2 == 1 {
        checked_ratio(s(k + 1) + s(k), s(k + 1) - s(k), "s_{k+1} - s_k")?
    } else {
        checked_ratio(
            s(k + 1) + s(k) * 2 + s(k - 1),
            s(k + 1) - s(k - 1),
            "s_{k+1} - s_{k-1}",
        )?
    };
    let sn = int(&crate::sequences::seq_value(
        crate::sequences::SeqKind::S,
        n,
    ));
    Ok(ratio(n as i64, 1) * sn * factor)
}
