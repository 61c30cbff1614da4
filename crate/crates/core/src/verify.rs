//! Cross-checks the closed forms of one instance against the elimination
//! oracle and against each other.
//!
//! Every check is exact. A failing check carries the first entry (in
//! row-major order) where the closed form and its reference disagree.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::closed_form::{
    contracted_tree_count, kirchhoff_index, lplus, qplus, resistance, tree_count,
};
use crate::error::{Error, Result};
use crate::export::format_rational;
use crate::graph::{
    build_graph, contract_edge, incidence_matrix, laplacian_matrix, EdgeId, EdgeKind, Family,
    FamilySpec, OrientedGraph,
};
use crate::linalg::{
    kirchhoff_from_lplus, matrix_tree_count, path_sum_resistance, penrose_check, pinv_incidence,
    pinv_laplacian, resistance_from_lplus, resistance_matrix_from_lplus, EntryDiff, RationalMatrix,
};

/// Check names in the order they run.
pub const CHECKS: [&str; 11] = [
    "penrose",
    "qplus_oracle",
    "lplus_oracle",
    "lplus_factor",
    "projector",
    "trees_oracle",
    "contracted_trees",
    "resistance_oracle",
    "spoke_ratio",
    "path_sum",
    "kirchhoff",
];

/// Longest rail walk used by the `path_sum` check.
pub const MAX_RAIL_PATH: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiffRecord {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub row: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub col: Option<String>,
    pub expected: String,
    pub actual: String,
}

impl DiffRecord {
    pub fn scalar(expected: &BigRational, actual: &BigRational) -> Self {
        DiffRecord {
            row: None,
            col: None,
            expected: format_rational(expected),
            actual: format_rational(actual),
        }
    }

    pub fn pair(row: &str, col: &str, expected: &BigRational, actual: &BigRational) -> Self {
        DiffRecord {
            row: Some(row.to_owned()),
            col: Some(col.to_owned()),
            ..Self::scalar(expected, actual)
        }
    }
}

impl From<EntryDiff> for DiffRecord {
    /// `left` is taken as the closed form, `right` as the reference.
    fn from(d: EntryDiff) -> Self {
        DiffRecord::pair(&d.row, &d.col, &d.right, &d.left)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub family: Family,
    pub n: usize,
    pub check: &'static str,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_difference: Option<DiffRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check: &'static str,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<Failure>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpecReport {
    pub family: Family,
    pub n: usize,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

impl SpecReport {
    pub fn spec(&self) -> FamilySpec {
        FamilySpec {
            family: self.family,
            n: self.n,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Failure> {
        self.checks.iter().filter_map(|c| c.failure.as_ref())
    }
}

struct Problem {
    message: String,
    diff: Option<DiffRecord>,
}

impl From<Error> for Problem {
    fn from(e: Error) -> Self {
        Problem {
            message: e.to_string(),
            diff: None,
        }
    }
}

type Outcome = std::result::Result<(), Problem>;

fn fail(message: impl Into<String>, diff: Option<DiffRecord>) -> Outcome {
    Err(Problem {
        message: message.into(),
        diff,
    })
}

fn compare(what: &str, closed: &RationalMatrix, reference: &RationalMatrix) -> Outcome {
    match closed.first_difference(reference)? {
        None => Ok(()),
        Some(d) => fail(format!("{what} differs from reference"), Some(d.into())),
    }
}

fn compare_scalar(what: &str, expected: &BigRational, actual: &BigRational) -> Outcome {
    if expected == actual {
        Ok(())
    } else {
        fail(
            format!("{what} differs from reference"),
            Some(DiffRecord::scalar(expected, actual)),
        )
    }
}

fn int(v: BigInt) -> BigRational {
    BigRational::from_integer(v)
}

/// Everything the checks share, computed once per instance.
struct Instance {
    spec: FamilySpec,
    graph: OrientedGraph,
    q: RationalMatrix,
    oracle: std::result::Result<(RationalMatrix, RationalMatrix), Error>,
    closed_q: Result<RationalMatrix>,
    closed_l: Result<RationalMatrix>,
    closed_r: Result<RationalMatrix>,
}

impl Instance {
    fn new(spec: &FamilySpec) -> Result<Self> {
        let graph = build_graph(spec)?;
        let q = incidence_matrix(&graph);
        let oracle = pinv_laplacian(&laplacian_matrix(&graph))
            .and_then(|lp| pinv_incidence(&q, &lp).map(|qp| (lp, qp)));
        Ok(Instance {
            spec: *spec,
            graph,
            q,
            oracle,
            closed_q: qplus(spec).map(|r| r.matrix),
            closed_l: lplus(spec).map(|r| r.matrix),
            closed_r: resistance(spec).map(|r| r.matrix),
        })
    }

    fn oracle_lplus(&self) -> Result<&RationalMatrix> {
        self.oracle.as_ref().map(|o| &o.0).map_err(Clone::clone)
    }

    fn oracle_qplus(&self) -> Result<&RationalMatrix> {
        self.oracle.as_ref().map(|o| &o.1).map_err(Clone::clone)
    }

    fn closed_q(&self) -> Result<&RationalMatrix> {
        self.closed_q.as_ref().map_err(Clone::clone)
    }

    fn closed_l(&self) -> Result<&RationalMatrix> {
        self.closed_l.as_ref().map_err(Clone::clone)
    }

    fn closed_r(&self) -> Result<&RationalMatrix> {
        self.closed_r.as_ref().map_err(Clone::clone)
    }

    fn outcome(&self, check: &str) -> Outcome {
        match check {
            "penrose" => self.penrose(),
            "qplus_oracle" => compare("Q+", self.closed_q()?, self.oracle_qplus()?),
            "lplus_oracle" => compare("L+", self.closed_l()?, self.oracle_lplus()?),
            "lplus_factor" => {
                let h = self.closed_q()?;
                compare(
                    "L+ against (Q+)^T Q+",
                    self.closed_l()?,
                    &h.transpose().mul(h)?,
                )
            }
            "projector" => self.projector(),
            "trees_oracle" => compare_scalar(
                "spanning-tree count",
                &int(matrix_tree_count(&self.graph)?),
                &int(tree_count(&self.spec)?),
            ),
            "contracted_trees" => self.contracted_trees(),
            "resistance_oracle" => compare(
                "resistance",
                self.closed_r()?,
                &resistance_matrix_from_lplus(self.oracle_lplus()?)?,
            ),
            "spoke_ratio" => self.spoke_ratio(),
            "path_sum" => self.path_sums(),
            "kirchhoff" => self.kirchhoff(),
            other => fail(format!("unknown check `{other}`"), None),
        }
    }

    fn run(&self, check: &'static str) -> CheckResult {
        match self.outcome(check) {
            Ok(()) => CheckResult {
                check,
                passed: true,
                failure: None,
            },
            Err(p) => CheckResult {
                check,
                passed: false,
                failure: Some(Failure {
                    family: self.spec.family,
                    n: self.spec.n,
                    check,
                    message: p.message,
                    first_difference: p.diff,
                }),
            },
        }
    }

    fn penrose(&self) -> Outcome {
        let report = penrose_check(&self.q, self.closed_q()?)?;
        match report.as_array().into_iter().find(|(_, ok)| !ok) {
            None => Ok(()),
            Some((name, _)) => fail(
                format!("Penrose condition {name} fails for closed-form Q+"),
                None,
            ),
        }
    }

    /// `Q+ 1 = 0`, `Q Q+ = I - J/N`, and `Q+ Q` symmetric.
    fn projector(&self) -> Outcome {
        let h = self.closed_q()?;
        let big_n = self.spec.vertex_count();
        let kills_ones = h.mul(&RationalMatrix::ones_vector(big_n))?;
        if let Some(i) = (0..kills_ones.rows()).find(|&i| !kills_ones.get(i, 0).is_zero()) {
            let label = &h.row_labels()[i];
            return fail(
                "Q+ row sums are not zero",
                Some(DiffRecord::pair(
                    label,
                    "1",
                    &BigRational::zero(),
                    kills_ones.get(i, 0),
                )),
            );
        }
        let qh = self.q.mul(h)?;
        let j_over_n =
            RationalMatrix::ones(big_n, big_n).scale(&BigRational::new(1.into(), big_n.into()));
        let expected = RationalMatrix::identity(big_n)
            .sub(&j_over_n)?
            .with_labels(qh.row_labels().to_vec(), qh.col_labels().to_vec())?;
        compare("Q Q+", &qh, &expected)?;
        if !h.mul(&self.q)?.is_symmetric() {
            return fail("Q+ Q is not symmetric", None);
        }
        Ok(())
    }

    fn spokes(&self) -> impl Iterator<Item = (usize, EdgeId)> {
        (1..=self.spec.n).map(|i| (i, EdgeId::spoke(i)))
    }

    fn contracted_trees(&self) -> Outcome {
        for (i, f) in self.spokes() {
            let g = contract_edge(&self.graph, &f)?;
            compare_scalar(
                &format!("spanning trees with {f} contracted"),
                &int(matrix_tree_count(&g)?),
                &int(contracted_tree_count(&self.spec, i)?),
            )?;
        }
        Ok(())
    }

    /// Resistance across a spoke equals the fraction of spanning trees that
    /// survive its contraction.
    fn spoke_ratio(&self) -> Outcome {
        let r = self.closed_r()?;
        let total = int(tree_count(&self.spec)?);
        let labels = self.graph.vertex_labels();
        for (i, f) in self.spokes() {
            let e = self.graph.edge(&f)?;
            let (u, v) = (&labels[e.tail], &labels[e.head]);
            let expected = int(contracted_tree_count(&self.spec, i)?) / &total;
            let actual = r.at(u, v)?;
            if &expected != actual {
                return fail(
                    format!("resistance across {f} is not the contracted tree ratio"),
                    Some(DiffRecord::pair(u, v, &expected, actual)),
                );
            }
        }
        Ok(())
    }

    /// Every spoke and every forward rail walk of length up to
    /// [`MAX_RAIL_PATH`].
    fn paths(&self) -> Vec<Vec<EdgeId>> {
        let edges = self.graph.edges();
        let mut paths: Vec<Vec<EdgeId>> = self.spokes().map(|(_, f)| vec![f]).collect();
        let rail_from = |tail: usize| {
            edges
                .iter()
                .find(|e| e.id.kind == EdgeKind::Rail && e.tail == tail)
        };
        for start in edges.iter().filter(|e| e.id.kind == EdgeKind::Rail) {
            let mut walk = vec![start.id];
            let mut head = start.head;
            paths.push(walk.clone());
            while walk.len() < MAX_RAIL_PATH {
                match rail_from(head) {
                    Some(next) if next.head != start.tail => {
                        walk.push(next.id);
                        head = next.head;
                        paths.push(walk.clone());
                    }
                    _ => break,
                }
            }
        }
        paths
    }

    fn path_sums(&self) -> Outcome {
        let h = self.closed_q()?;
        let lp = self.oracle_lplus()?;
        let vertices = self.graph.vertices();
        let labels = self.graph.vertex_labels();
        for path in self.paths() {
            let from = self.graph.edge(&path[0])?.tail;
            let to = self
                .graph
                .edge(path.last().expect("paths are non-empty"))?
                .head;
            let actual =
                path_sum_resistance(&self.graph, h, &path, &vertices[from], &vertices[to])?;
            let expected = resistance_from_lplus(lp, &labels[from], &labels[to])?;
            if actual != expected {
                let names: Vec<String> = path.iter().map(ToString::to_string).collect();
                return fail(
                    format!(
                        "path sum over [{}] differs from resistance",
                        names.join(",")
                    ),
                    Some(DiffRecord::pair(
                        &labels[from],
                        &labels[to],
                        &expected,
                        &actual,
                    )),
                );
            }
        }
        Ok(())
    }

    /// Closed-form `Kf` against half the resistance grand sum and `N tr(L+)`.
    fn kirchhoff(&self) -> Outcome {
        let kf = kirchhoff_index(&self.spec)?;
        let half_sum = self.closed_r()?.grand_sum() / int(2.into());
        compare_scalar("Kirchhoff index against resistance sum", &half_sum, &kf)?;
        compare_scalar(
            "Kirchhoff index against N tr(L+)",
            &kirchhoff_from_lplus(self.oracle_lplus()?),
            &kf,
        )
    }
}

/// Runs every check in [`CHECKS`] on one instance.
pub fn verify_spec(spec: &FamilySpec) -> Result<SpecReport> {
    spec.validate()?;
    let instance = Instance::new(spec)?;
    let checks: Vec<CheckResult> = CHECKS.iter().map(|c| instance.run(c)).collect();
    Ok(SpecReport {
        family: spec.family,
        n: spec.n,
        passed: checks.iter().all(|c| c.passed),
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_instances_pass() {
        for family in Family::ALL {
            for n in family.min_n()..=family.min_n() + 3 {
                let report = verify_spec(&FamilySpec::new(family, n).unwrap()).unwrap();
                let failed: Vec<_> = report.failures().collect();
                assert!(failed.is_empty(), "{family}({n}): {failed:?}");
                assert_eq!(report.checks.len(), CHECKS.len());
            }
        }
    }

    #[test]
    fn paths_cover_spokes_and_short_rails() {
        let spec = FamilySpec::new(Family::Ladder, 4).unwrap();
        let inst = Instance::new(&spec).unwrap();
        let paths = inst.paths();
        // 4 spokes; per side rails e1..e3 start walks of lengths 3, 2, 1.
        assert_eq!(paths.len(), 4 + 2 * (3 + 2 + 1));
        assert!(paths.iter().all(|p| p.len() <= MAX_RAIL_PATH));
    }

    #[test]
    fn mismatch_is_reported_with_first_difference() {
        let spec = FamilySpec::new(Family::CircularLadder, 3).unwrap();
        let mut inst = Instance::new(&spec).unwrap();
        let mut bad = inst.closed_q.clone().unwrap();
        let v = bad.get(0, 0) + BigRational::new(1.into(), 7.into());
        bad.set(0, 0, v);
        inst.closed_q = Ok(bad);
        let r = inst.run("qplus_oracle");
        assert!(!r.passed);
        let f = r.failure.unwrap();
        let d = f.first_difference.unwrap();
        assert_eq!(
            (d.row.as_deref(), d.col.as_deref()),
            (Some("e1+"), Some("u1+"))
        );
        assert_eq!(f.check, "qplus_oracle");
        assert!(!inst.run("penrose").passed);
    }
}
