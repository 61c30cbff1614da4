use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Dense row-major matrix of exact rationals with row and column labels.
///
/// Labels ride along through arithmetic: a product takes its row labels from
/// the left factor and its column labels from the right one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
    row_labels: Vec<String>,
    col_labels: Vec<String>,
}

fn default_labels(len: usize) -> Vec<String> {
    (1..=len).map(|i| i.to_string()).collect()
}

/// Position and values of the first entry where two matrices disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntryDiff {
    pub row: String,
    pub col: String,
    pub left: BigRational,
    pub right: BigRational,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
            row_labels: default_labels(rows),
            col_labels: default_labels(cols),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigRational::one();
        }
        m
    }

    /// The all-ones matrix `J`.
    pub fn ones(rows: usize, cols: usize) -> Self {
        let mut m = Self::zeros(rows, cols);
        m.data.fill(BigRational::one());
        m
    }

    /// Column vector of ones.
    pub fn ones_vector(n: usize) -> Self {
        Self::ones(n, 1)
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> BigRational,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RationalMatrix {
            rows,
            cols,
            data,
            row_labels: default_labels(rows),
            col_labels: default_labels(cols),
        }
    }

    /// Builds from nested rows; every row must have the same length.
    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::shape("from_rows", (r, c), (1, bad.len())));
        }
        Ok(RationalMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
            row_labels: default_labels(r),
            col_labels: default_labels(c),
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&v| BigRational::from_integer(v.into()))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn with_labels(mut self, row_labels: Vec<String>, col_labels: Vec<String>) -> Result<Self> {
        if row_labels.len() != self.rows || col_labels.len() != self.cols {
            return Err(Error::shape(
                "with_labels",
                (self.rows, self.cols),
                (row_labels.len(), col_labels.len()),
            ));
        }
        self.row_labels = row_labels;
        self.col_labels = col_labels;
        Ok(self)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[String] {
        &self.col_labels
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_index(&self, label: &str) -> Result<usize> {
        self.row_labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_owned()))
    }

    pub fn col_index(&self, label: &str) -> Result<usize> {
        self.col_labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_owned()))
    }

    /// Entry addressed by labels.
    pub fn at(&self, row: &str, col: &str) -> Result<&BigRational> {
        Ok(self.get(self.row_index(row)?, self.col_index(col)?))
    }

    pub fn entries(&self) -> impl Iterator<Item = &BigRational> {
        self.data.iter()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        RationalMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
            row_labels: self.col_labels.clone(),
            col_labels: self.row_labels.clone(),
        }
    }

    /// Matrix product. Each left row and right column is brought to a common
    /// denominator first, so the inner loop runs on integers and every
    /// output entry is reduced exactly once. Zero entries are skipped.
    pub fn mul(&self, rhs: &RationalMatrix) -> Result<RationalMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::shape("mul", self.shape(), rhs.shape()));
        }
        let row_den: Vec<BigInt> = (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
            })
            .collect();
        let col_den: Vec<BigInt> = (0..rhs.cols)
            .map(|j| (0..rhs.rows).fold(BigInt::one(), |acc, k| acc.lcm(rhs.get(k, j).denom())))
            .collect();
        // Sparse integer numerators of the right factor, by row.
        let rhs_rows: Vec<Vec<(usize, BigInt)>> = (0..rhs.rows)
            .map(|k| {
                (0..rhs.cols)
                    .filter(|&j| !rhs.get(k, j).is_zero())
                    .map(|j| {
                        let v = rhs.get(k, j);
                        (j, v.numer() * (&col_den[j] / v.denom()))
                    })
                    .collect()
            })
            .collect();

        let mut data = Vec::with_capacity(self.rows * rhs.cols);
        let mut acc = vec![BigInt::zero(); rhs.cols];
        for (i, den) in row_den.iter().enumerate() {
            for (k, lik) in self.row(i).iter().enumerate() {
                if lik.is_zero() {
                    continue;
                }
                let left = lik.numer() * (den / lik.denom());
                for (j, right) in &rhs_rows[k] {
                    acc[*j] += &left * right;
                }
            }
            for (j, sum) in acc.iter_mut().enumerate() {
                let num = std::mem::take(sum);
                data.push(if num.is_zero() {
                    BigRational::zero()
                } else {
                    BigRational::new(num, den * &col_den[j])
                });
            }
        }
        Ok(RationalMatrix {
            rows: self.rows,
            cols: rhs.cols,
            data,
            row_labels: self.row_labels.clone(),
            col_labels: rhs.col_labels.clone(),
        })
    }

    fn zip_with(
        &self,
        rhs: &RationalMatrix,
        op: &'static str,
        f: impl Fn(&BigRational, &BigRational) -> BigRational,
    ) -> Result<RationalMatrix> {
        if self.shape() != rhs.shape() {
            return Err(Error::shape(op, self.shape(), rhs.shape()));
        }
        Ok(RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| f(a, b))
                .collect(),
            row_labels: self.row_labels.clone(),
            col_labels: self.col_labels.clone(),
        })
    }

    pub fn add(&self, rhs: &RationalMatrix) -> Result<RationalMatrix> {
        self.zip_with(rhs, "add", |a, b| a + b)
    }

    pub fn sub(&self, rhs: &RationalMatrix) -> Result<RationalMatrix> {
        self.zip_with(rhs, "sub", |a, b| a - b)
    }

    pub fn scale(&self, k: &BigRational) -> RationalMatrix {
        let mut out = self.clone();
        for v in &mut out.data {
            *v *= k;
        }
        out
    }

    pub fn neg(&self) -> RationalMatrix {
        self.scale(&-BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|v| v.is_integer())
    }

    pub fn row_sums(&self) -> Vec<BigRational> {
        (0..self.rows).map(|i| self.row(i).iter().sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<BigRational> {
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.get(i, j)).sum())
            .collect()
    }

    pub fn trace(&self) -> BigRational {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    pub fn grand_sum(&self) -> BigRational {
        self.data.iter().sum()
    }

    /// Same shape and entries; labels are ignored.
    pub fn same_entries(&self, other: &RationalMatrix) -> bool {
        self.shape() == other.shape() && self.data == other.data
    }

    /// First entry (row-major) where the two matrices differ, or `None` when
    /// they agree. Shapes must match.
    pub fn first_difference(&self, other: &RationalMatrix) -> Result<Option<EntryDiff>> {
        if self.shape() != other.shape() {
            return Err(Error::shape("compare", self.shape(), other.shape()));
        }
        let pos = self.data.iter().zip(&other.data).position(|(a, b)| a != b);
        Ok(pos.map(|p| {
            let (i, j) = (p / self.cols, p % self.cols);
            EntryDiff {
                row: self.row_labels[i].clone(),
                col: self.col_labels[j].clone(),
                left: self.data[p].clone(),
                right: other.data[p].clone(),
            }
        }))
    }

    /// Copy with row `r` and column `c` removed.
    pub fn minor(&self, r: usize, c: usize) -> RationalMatrix {
        let mut data = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for i in (0..self.rows).filter(|&i| i != r) {
            for j in (0..self.cols).filter(|&j| j != c) {
                data.push(self.get(i, j).clone());
            }
        }
        let drop = |labels: &[String], k: usize| {
            labels
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != k)
                .map(|(_, l)| l.clone())
                .collect()
        };
        RationalMatrix {
            rows: self.rows - 1,
            cols: self.cols - 1,
            data,
            row_labels: drop(&self.row_labels, r),
            col_labels: drop(&self.col_labels, c),
        }
    }

    /// Vertical concatenation; column labels come from `self`.
    pub fn stack(&self, below: &RationalMatrix) -> Result<RationalMatrix> {
        if self.cols != below.cols {
            return Err(Error::shape("stack", self.shape(), below.shape()));
        }
        let mut out = self.clone();
        out.rows += below.rows;
        out.data.extend(below.data.iter().cloned());
        out.row_labels.extend(below.row_labels.iter().cloned());
        Ok(out)
    }

    /// Horizontal concatenation; row labels come from `self`.
    pub fn beside(&self, right: &RationalMatrix) -> Result<RationalMatrix> {
        if self.rows != right.rows {
            return Err(Error::shape("beside", self.shape(), right.shape()));
        }
        let cols = self.cols + right.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend(self.row(i).iter().cloned());
            data.extend(right.row(i).iter().cloned());
        }
        let mut col_labels = self.col_labels.clone();
        col_labels.extend(right.col_labels.iter().cloned());
        Ok(RationalMatrix {
            rows: self.rows,
            cols,
            data,
            row_labels: self.row_labels.clone(),
            col_labels,
        })
    }

    /// Integer entries as `BigInt`, or `None` if any entry is fractional.
    pub fn to_integer_rows(&self) -> Option<Vec<Vec<BigInt>>> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|v| v.is_integer().then(|| v.to_integer()))
                    .collect()
            })
            .collect()
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
