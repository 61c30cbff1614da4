use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::elimination::bareiss_integer;
use super::matrix::RationalMatrix;
use crate::error::{Error, Result};
use crate::graph::{laplacian_matrix, EdgeId, OrientedGraph, VertexId};

/// Number of spanning trees: the Bareiss determinant of the Laplacian with
/// the last vertex's row and column removed. Multigraphs are fine.
pub fn matrix_tree_count(g: &OrientedGraph) -> Result<BigInt> {
    if g.vertex_count() == 0 {
        return Err(Error::domain("matrix-tree count of an empty graph"));
    }
    matrix_tree_count_deleting(g, g.vertex_count() - 1)
}

/// Same as [`matrix_tree_count`] but deleting the vertex at `position`.
pub fn matrix_tree_count_deleting(g: &OrientedGraph, position: usize) -> Result<BigInt> {
    if position >= g.vertex_count() {
        return Err(Error::domain(format!(
            "vertex position {position} out of range for {} vertices",
            g.vertex_count()
        )));
    }
    let reduced = laplacian_matrix(g).minor(position, position);
    let rows = reduced
        .to_integer_rows()
        .expect("Laplacian entries are integers");
    Ok(bareiss_integer(rows))
}

/// `L+_uu + L+_vv - L+_uv - L+_vu`, addressed by vertex labels.
pub fn resistance_from_lplus(lplus: &RationalMatrix, u: &str, v: &str) -> Result<BigRational> {
    let (i, j) = (lplus.row_index(u)?, lplus.col_index(v)?);
    let (ii, jj) = (lplus.col_index(u)?, lplus.row_index(v)?);
    Ok(lplus.get(i, ii) + lplus.get(jj, j) - lplus.get(i, j) - lplus.get(jj, ii))
}

/// Full resistance matrix recovered from `L+`.
pub fn resistance_matrix_from_lplus(lplus: &RationalMatrix) -> Result<RationalMatrix> {
    if !lplus.is_square() {
        return Err(Error::shape("resistance", lplus.shape(), lplus.shape()));
    }
    let n = lplus.rows();
    RationalMatrix::from_fn(n, n, |i, j| {
        lplus.get(i, i) + lplus.get(j, j) - lplus.get(i, j) - lplus.get(j, i)
    })
    .with_labels(lplus.row_labels().to_vec(), lplus.col_labels().to_vec())
}

/// `Kf = N tr(L+)` for a graph on `N` vertices.
pub fn kirchhoff_from_lplus(lplus: &RationalMatrix) -> BigRational {
    lplus.trace() * BigRational::from_integer(lplus.rows().into())
}

/// Resistance between `u` and `v` as `sum_e (Q+_{e,u} - Q+_{e,v})` over a
/// path whose edges all point from `u` towards `v`.
///
/// `qplus` rows are edge labels and columns vertex labels of `g`.
pub fn path_sum_resistance(
    g: &OrientedGraph,
    qplus: &RationalMatrix,
    path: &[EdgeId],
    u: &VertexId,
    v: &VertexId,
) -> Result<BigRational> {
    let start = g.vertex_position(u)?;
    let end = g.vertex_position(v)?;
    let labels = g.vertex_labels();
    let orientation_error = |reason: String| Error::PathOrientation {
        from: labels[start].clone(),
        to: labels[end].clone(),
        reason,
    };

    let mut at = start;
    for id in path {
        let e = g.edge(id)?;
        if e.tail != at {
            return Err(orientation_error(format!(
                "edge {id} leaves {} but the walk is at {}",
                labels[e.tail], labels[at]
            )));
        }
        at = e.head;
    }
    if at != end {
        return Err(orientation_error(format!("walk ends at {}", labels[at])));
    }

    let (ul, vl) = (&labels[start], &labels[end]);
    let col_u = qplus.col_index(ul)?;
    let col_v = qplus.col_index(vl)?;
    let mut total = BigRational::zero();
    for id in path {
        let r = qplus.row_index(&id.to_string())?;
        total += qplus.get(r, col_u) - qplus.get(r, col_v);
    }
    Ok(total)
}
