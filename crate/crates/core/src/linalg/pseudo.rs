use num_rational::BigRational;
use num_traits::Zero;

use super::elimination::gauss_jordan_inverse;
use super::matrix::RationalMatrix;
use crate::error::{Error, Result};

/// Moore-Penrose inverse of the Laplacian of a connected graph on `N`
/// vertices, via `L+ = (L + J/N)^-1 - J/N`.
pub fn pinv_laplacian(l: &RationalMatrix) -> Result<RationalMatrix> {
    if !l.is_square() {
        return Err(Error::shape(
            "pinv_laplacian",
            l.shape(),
            (l.cols(), l.rows()),
        ));
    }
    if !l.is_symmetric() {
        return Err(Error::domain("Laplacian must be symmetric"));
    }
    if !l.row_sums().iter().all(Zero::is_zero) {
        return Err(Error::domain("Laplacian rows must sum to zero"));
    }
    let n = l.rows();
    if n == 0 {
        return Err(Error::domain("empty Laplacian"));
    }
    let j_over_n = RationalMatrix::ones(n, n).scale(&BigRational::new(1.into(), n.into()));
    let shifted = l.add(&j_over_n)?;
    let inv = match gauss_jordan_inverse(&shifted) {
        Ok(m) => m,
        Err(Error::Singular { .. }) => return Err(Error::Disconnected),
        Err(e) => return Err(e),
    };
    inv.sub(&j_over_n)?
        .with_labels(l.row_labels().to_vec(), l.col_labels().to_vec())
}

/// `Q+ = Q^T L+`, valid whenever `L = Q Q^T` and `lplus` is its
/// Moore-Penrose inverse.
pub fn pinv_incidence(q: &RationalMatrix, lplus: &RationalMatrix) -> Result<RationalMatrix> {
    if lplus.rows() != q.rows() || !lplus.is_square() {
        return Err(Error::shape("pinv_incidence", q.shape(), lplus.shape()));
    }
    q.transpose().mul(lplus)
}

/// Verdicts for the four Penrose conditions of a candidate `X = A+`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PenroseReport {
    /// `A X A = A`
    pub axa: bool,
    /// `X A X = X`
    pub xax: bool,
    /// `(A X)^T = A X`
    pub ax_symmetric: bool,
    /// `(X A)^T = X A`
    pub xa_symmetric: bool,
}

impl PenroseReport {
    pub fn all(&self) -> bool {
        self.axa && self.xax && self.ax_symmetric && self.xa_symmetric
    }

    pub fn as_array(&self) -> [(&'static str, bool); 4] {
        [
            ("axa", self.axa),
            ("xax", self.xax),
            ("ax_sym", self.ax_symmetric),
            ("xa_sym", self.xa_symmetric),
        ]
    }
}

pub fn penrose_check(a: &RationalMatrix, x: &RationalMatrix) -> Result<PenroseReport> {
    if x.rows() != a.cols() || x.cols() != a.rows() {
        return Err(Error::shape("penrose_check", a.shape(), x.shape()));
    }
    let ax = a.mul(x)?;
    let xa = x.mul(a)?;
    // Cheaper association for each triple product: AX and XA are reused.
    let axa = if a.rows() <= a.cols() {
        ax.mul(a)?
    } else {
        a.mul(&xa)?
    };
    let xax = if a.rows() <= a.cols() {
        x.mul(&ax)?
    } else {
        xa.mul(x)?
    };
    Ok(PenroseReport {
        axa: axa.same_entries(a),
        xax: xax.same_entries(x),
        ax_symmetric: ax.is_symmetric(),
        xa_symmetric: xa.is_symmetric(),
    })
}
