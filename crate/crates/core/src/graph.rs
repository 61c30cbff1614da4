//! Oriented ladder, circular ladder and Möbius ladder graphs with their
//! canonical vertex and edge orders.
//!
//! Vertex order is `u1+..un+, u1-..un-` for the ladder and circular ladder
//! and `u1..un, v1..vn` (the 2n-cycle `u_1..u_2n` with `u_{n+i} = v_i`) for
//! the Möbius ladder. Edge order:
//!
//! * ladder: `f1..fn, e1+..e(n-1)+, e1-..e(n-1)-`
//! * circular ladder: `e1+..en+, e1-..en-, f1..fn`
//! * Möbius ladder: `e1..e2n, f1..fn`
//!
//! Spokes run from the `+` side (or `u_i`) to the `-` side (or `v_i`); rails
//! run from index `i` to `i+1`, wrapping around on the cyclic families.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::RationalMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Ladder,
    #[serde(rename = "cl")]
    CircularLadder,
    Mobius,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Ladder, Family::CircularLadder, Family::Mobius];

    /// Smallest `n` for which the family is a simple graph.
    pub fn min_n(self) -> usize {
        match self {
            Family::Ladder => 1,
            Family::CircularLadder | Family::Mobius => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Ladder => "ladder",
            Family::CircularLadder => "cl",
            Family::Mobius => "mobius",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ladder" | "l" => Ok(Family::Ladder),
            "cl" | "circular" | "circular-ladder" | "prism" => Ok(Family::CircularLadder),
            "mobius" | "m" | "mobius-ladder" | "möbius" => Ok(Family::Mobius),
            _ => Err(Error::Parse(format!("unknown family `{s}`"))),
        }
    }
}

/// One graph instance: a family and half its vertex count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
}

impl FamilySpec {
    pub fn new(family: Family, n: usize) -> Result<Self> {
        let spec = FamilySpec { family, n };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let min = self.family.min_n();
        if self.n < min {
            return Err(Error::domain(format!(
                "{} requires n >= {min}, got n = {}",
                self.family, self.n
            )));
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        2 * self.n
    }

    pub fn edge_count(&self) -> usize {
        match self.family {
            Family::Ladder => 3 * self.n - 2,
            Family::CircularLadder | Family::Mobius => 3 * self.n,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.family, self.n)
    }
}

/// The `ε = ±1` side of a ladder vertex or rail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// `u_i^ε` on ladders and circular ladders; `u_i` with `i` in `1..=2n` on the
/// Möbius ladder (`sign` is `None` there).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId {
    pub index: usize,
    pub sign: Option<Sign>,
}

impl VertexId {
    pub fn rung(index: usize, sign: Sign) -> Self {
        VertexId {
            index,
            sign: Some(sign),
        }
    }

    pub fn cycle(index: usize) -> Self {
        VertexId { index, sign: None }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeKind {
    Spoke,
    Rail,
}

/// `f_i`, `e_i^ε`, or the Möbius rail `e_i` (no sign).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId {
    pub kind: EdgeKind,
    pub index: usize,
    pub sign: Option<Sign>,
}

impl EdgeId {
    pub fn spoke(index: usize) -> Self {
        EdgeId {
            kind: EdgeKind::Spoke,
            index,
            sign: None,
        }
    }

    pub fn rail(index: usize, sign: Sign) -> Self {
        EdgeId {
            kind: EdgeKind::Rail,
            index,
            sign: Some(sign),
        }
    }

    pub fn cycle_rail(index: usize) -> Self {
        EdgeId {
            kind: EdgeKind::Rail,
            index,
            sign: None,
        }
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self.kind {
            EdgeKind::Spoke => 'f',
            EdgeKind::Rail => 'e',
        };
        write!(f, "{letter}{}", self.index)?;
        if let Some(s) = self.sign {
            write!(f, "{}", s.symbol())?;
        }
        Ok(())
    }
}

impl FromStr for EdgeId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad edge id `{s}`"));
        let mut chars = s.chars();
        let kind = match chars.next() {
            Some('f') => EdgeKind::Spoke,
            Some('e') => EdgeKind::Rail,
            _ => return Err(bad()),
        };
        let rest = chars.as_str();
        let (digits, sign) = match rest.strip_suffix('+') {
            Some(d) => (d, Some(Sign::Plus)),
            None => match rest.strip_suffix('-') {
                Some(d) => (d, Some(Sign::Minus)),
                None => (rest, None),
            },
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let index: usize = digits.parse().map_err(|_| bad())?;
        if kind == EdgeKind::Spoke && sign.is_some() {
            return Err(bad());
        }
        Ok(EdgeId { kind, index, sign })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub id: EdgeId,
    /// Position of the tail in the graph's vertex list.
    pub tail: usize,
    /// Position of the head in the graph's vertex list.
    pub head: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedGraph {
    spec: FamilySpec,
    vertices: Vec<VertexId>,
    labels: Vec<String>,
    edges: Vec<Edge>,
}

impl OrientedGraph {
    pub fn spec(&self) -> FamilySpec {
        self.spec
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.labels
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_labels(&self) -> Vec<String> {
        self.edges.iter().map(|e| e.id.to_string()).collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_position(&self, v: &VertexId) -> Result<usize> {
        self.vertices
            .iter()
            .position(|x| x == v)
            .ok_or_else(|| Error::UnknownLabel(format!("{v:?}")))
    }

    pub fn label_position(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_owned()))
    }

    pub fn vertex_label(&self, v: &VertexId) -> Result<&str> {
        Ok(&self.labels[self.vertex_position(v)?])
    }

    pub fn edge(&self, id: &EdgeId) -> Result<&Edge> {
        self.edges
            .iter()
            .find(|e| &e.id == id)
            .ok_or_else(|| Error::UnknownLabel(id.to_string()))
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertices.len()];
        for e in &self.edges {
            deg[e.tail] += 1;
            deg[e.head] += 1;
        }
        deg
    }

    /// Undirected edge multiset as sorted position pairs.
    pub fn undirected_edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|e| (e.tail.min(e.head), e.tail.max(e.head)))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return false;
        }
        let mut adj = vec![Vec::new(); n];
        for e in &self.edges {
            adj[e.tail].push(e.head);
            adj[e.head].push(e.tail);
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Serializes the graph as an edge list.
    pub fn to_edge_list(&self) -> EdgeListJson {
        EdgeListJson {
            family: self.spec.family,
            n: self.spec.n,
            vertices: self.labels.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeJson {
                    id: e.id.to_string(),
                    tail: self.labels[e.tail].clone(),
                    head: self.labels[e.head].clone(),
                })
                .collect(),
        }
    }

    pub fn to_edge_list_json(&self) -> String {
        serde_json::to_string(&self.to_edge_list()).expect("edge list serializes")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub id: String,
    pub tail: String,
    pub head: String,
}

/// `{"family":"mobius","n":3,"vertices":[...],"edges":[{"id":"f1","tail":"u1","head":"v1"},...]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeListJson {
    pub family: Family,
    pub n: usize,
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeJson>,
}

/// Largest `n` accepted when loading an edge list.
pub const MAX_LOAD_N: usize = 4096;

/// Parses an edge-list document and checks it describes exactly the canonical
/// graph of its declared family and size.
pub fn parse_edge_list_json(text: &str) -> Result<OrientedGraph> {
    let doc: EdgeListJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if doc.n > MAX_LOAD_N {
        return Err(Error::domain(format!("n = {} exceeds {MAX_LOAD_N}", doc.n)));
    }
    let spec = FamilySpec::new(doc.family, doc.n)?;
    let g = build_graph(&spec)?;
    if g.to_edge_list() != doc {
        return Err(Error::Parse(format!(
            "edge list does not match the canonical {spec}"
        )));
    }
    Ok(g)
}

fn rung_label(i: usize, s: Sign) -> String {
    format!("u{i}{}", s.symbol())
}

/// Canonical oriented graph for `spec`.
pub fn build_graph(spec: &FamilySpec) -> Result<OrientedGraph> {
    spec.validate()?;
    let n = spec.n;
    let mut vertices = Vec::with_capacity(2 * n);
    let mut labels = Vec::with_capacity(2 * n);
    let mut edges = Vec::with_capacity(spec.edge_count());

    match spec.family {
        Family::Ladder | Family::CircularLadder => {
            for s in [Sign::Plus, Sign::Minus] {
                for i in 1..=n {
                    vertices.push(VertexId::rung(i, s));
                    labels.push(rung_label(i, s));
                }
            }
            let pos = |i: usize, s: Sign| match s {
                Sign::Plus => i - 1,
                Sign::Minus => n + i - 1,
            };
            let spokes = (1..=n).map(|i| Edge {
                id: EdgeId::spoke(i),
                tail: pos(i, Sign::Plus),
                head: pos(i, Sign::Minus),
            });
            if spec.family == Family::Ladder {
                edges.extend(spokes);
                for s in [Sign::Plus, Sign::Minus] {
                    for i in 1..n {
                        edges.push(Edge {
                            id: EdgeId::rail(i, s),
                            tail: pos(i, s),
                            head: pos(i + 1, s),
                        });
                    }
                }
            } else {
                for s in [Sign::Plus, Sign::Minus] {
                    for i in 1..=n {
                        edges.push(Edge {
                            id: EdgeId::rail(i, s),
                            tail: pos(i, s),
                            head: pos(i % n + 1, s),
                        });
                    }
                }
                edges.extend(spokes);
            }
        }
        Family::Mobius => {
            for i in 1..=2 * n {
                vertices.push(VertexId::cycle(i));
                labels.push(if i <= n {
                    format!("u{i}")
                } else {
                    format!("v{}", i - n)
                });
            }
            for i in 1..=2 * n {
                edges.push(Edge {
                    id: EdgeId::cycle_rail(i),
                    tail: i - 1,
                    head: i % (2 * n),
                });
            }
            for i in 1..=n {
                edges.push(Edge {
                    id: EdgeId::spoke(i),
                    tail: i - 1,
                    head: n + i - 1,
                });
            }
        }
    }

    Ok(OrientedGraph {
        spec: *spec,
        vertices,
        labels,
        edges,
    })
}

/// `|V| x |E|` matrix with `+1` at each edge's tail and `-1` at its head.
pub fn incidence_matrix(g: &OrientedGraph) -> RationalMatrix {
    let mut q = RationalMatrix::zeros(g.vertex_count(), g.edge_count());
    for (j, e) in g.edges.iter().enumerate() {
        q.set(e.tail, j, BigRational::one());
        q.set(e.head, j, -BigRational::one());
    }
    q.with_labels(g.labels.clone(), g.edge_labels())
        .expect("label counts match dimensions")
}

/// Degree matrix minus adjacency (with multiplicity).
pub fn laplacian_matrix(g: &OrientedGraph) -> RationalMatrix {
    let n = g.vertex_count();
    let mut counts: BTreeMap<(usize, usize), i64> = BTreeMap::new();
    for (i, d) in g.degrees().into_iter().enumerate() {
        counts.insert((i, i), d as i64);
    }
    for e in &g.edges {
        if e.tail != e.head {
            *counts.entry((e.tail, e.head)).or_default() -= 1;
            *counts.entry((e.head, e.tail)).or_default() -= 1;
        }
    }
    let mut l = RationalMatrix::zeros(n, n);
    for ((i, j), v) in counts {
        if v != 0 {
            l.set(i, j, BigRational::from_integer(v.into()));
        }
    }
    l.with_labels(g.labels.clone(), g.labels.clone())
        .expect("label counts match dimensions")
}

/// Identifies the endpoints of `e` and deletes it. Loops created by the
/// merge are dropped; parallel edges are kept. The merged vertex keeps the
/// identity of whichever endpoint comes first in vertex order.
pub fn contract_edge(g: &OrientedGraph, e: &EdgeId) -> Result<OrientedGraph> {
    let edge = g.edge(e)?;
    let keep = edge.tail.min(edge.head);
    let gone = edge.tail.max(edge.head);
    let remap = |p: usize| {
        let p = if p == gone { keep } else { p };
        if p > gone {
            p - 1
        } else {
            p
        }
    };
    let mut vertices = g.vertices.clone();
    let mut labels = g.labels.clone();
    if keep != gone {
        vertices.remove(gone);
        labels.remove(gone);
    }
    let edges = g
        .edges
        .iter()
        .filter(|x| &x.id != e)
        .map(|x| Edge {
            id: x.id,
            tail: remap(x.tail),
            head: remap(x.head),
        })
        .filter(|x| x.tail != x.head)
        .collect();
    Ok(OrientedGraph {
        spec: g.spec,
        vertices,
        labels,
        edges,
    })
}

/// Whether `perm` (old position -> new position) maps the undirected edge
/// multiset onto itself.
pub fn is_automorphism(g: &OrientedGraph, perm: &[usize]) -> bool {
    if perm.len() != g.vertex_count() {
        return false;
    }
    let mut mapped: Vec<(usize, usize)> = g
        .undirected_edges()
        .into_iter()
        .map(|(a, b)| (perm[a].min(perm[b]), perm[a].max(perm[b])))
        .collect();
    mapped.sort_unstable();
    mapped == g.undirected_edges()
}

/// The rotation `i -> i+1` on vertex positions of a cyclic family.
pub fn cyclic_shift(spec: &FamilySpec) -> Vec<usize> {
    let n = spec.n;
    match spec.family {
        Family::Mobius => (0..2 * n).map(|p| (p + 1) % (2 * n)).collect(),
        _ => (0..2 * n).map(|p| (p / n) * n + (p % n + 1) % n).collect(),
    }
}

/// Sum of entries in each column of `m` is zero.
pub fn columns_sum_to_zero(m: &RationalMatrix) -> bool {
    m.col_sums().iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rank;

    fn graph(f: Family, n: usize) -> OrientedGraph {
        build_graph(&FamilySpec::new(f, n).unwrap()).unwrap()
    }

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    #[test]
    fn minimum_sizes() {
        assert!(FamilySpec::new(Family::Ladder, 0).is_err());
        let err = FamilySpec::new(Family::CircularLadder, 2).unwrap_err();
        assert!(err.to_string().contains("n >= 3"));
        assert!(FamilySpec::new(Family::Mobius, 2).is_err());
        assert!(build_graph(&FamilySpec {
            family: Family::Mobius,
            n: 1
        })
        .is_err());
    }

    #[test]
    fn ladder_two_is_four_cycle() {
        let g = graph(Family::Ladder, 2);
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_labels(), ["f1", "f2", "e1+", "e1-"]);
        assert!(g.degrees().iter().all(|&d| d == 2));
        assert!(g.is_connected());
    }

    #[test]
    fn prism_and_mobius_three_are_cubic() {
        for f in [Family::CircularLadder, Family::Mobius] {
            let g = graph(f, 3);
            assert_eq!((g.vertex_count(), g.edge_count()), (6, 9));
            assert!(g.degrees().iter().all(|&d| d == 3));
        }
    }

    #[test]
    fn mobius_three_is_k33() {
        // Bipartition {u1, u3, u5} / {u2, u4, u6} on the 6-cycle labels.
        let g = graph(Family::Mobius, 3);
        let side = |p: usize| p % 2;
        for e in g.edges() {
            assert_ne!(side(e.tail), side(e.head), "edge {} inside a side", e.id);
        }
        let mut pairs = g.undirected_edges();
        pairs.dedup();
        assert_eq!(pairs.len(), 9);
    }

    #[test]
    fn mobius_has_no_triangles() {
        let g = graph(Family::Mobius, 3);
        let n = g.vertex_count();
        let mut adj = vec![vec![false; n]; n];
        for (a, b) in g.undirected_edges() {
            adj[a][b] = true;
            adj[b][a] = true;
        }
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    assert!(!(adj[a][b] && adj[b][c] && adj[a][c]));
                }
            }
        }
    }

    #[test]
    fn incidence_examples() {
        let q1 = incidence_matrix(&graph(Family::Ladder, 1));
        assert!(q1.same_entries(&RationalMatrix::from_i64_rows(&[&[1], &[-1]]).unwrap()));

        let q2 = incidence_matrix(&graph(Family::Ladder, 2));
        let f1: Vec<_> = (0..4).map(|i| q2.get(i, 0).clone()).collect();
        assert_eq!(f1, [q(1), q(0), q(-1), q(0)]);

        let q3 = incidence_matrix(&graph(Family::CircularLadder, 3));
        assert_eq!(q3.at("u3+", "e3+").unwrap(), &q(1));
        assert_eq!(q3.at("u1+", "e3+").unwrap(), &q(-1));
    }

    #[test]
    fn laplacian_examples() {
        let l1 = laplacian_matrix(&graph(Family::Ladder, 1));
        assert!(l1.same_entries(&RationalMatrix::from_i64_rows(&[&[1, -1], &[-1, 1]]).unwrap()));

        let l3 = laplacian_matrix(&graph(Family::CircularLadder, 3));
        assert!((0..6).all(|i| l3.get(i, i) == &q(3)));
    }

    #[test]
    fn mobius_three_laplacian_is_k33() {
        let l = laplacian_matrix(&graph(Family::Mobius, 3));
        // K_{3,3} built directly from the bipartition on positions 0..6.
        let k33 = RationalMatrix::from_fn(6, 6, |i, j| {
            if i == j {
                q(3)
            } else if i % 2 != j % 2 {
                q(-1)
            } else {
                q(0)
            }
        });
        assert!(l.same_entries(&k33));
    }

    #[test]
    fn laplacian_is_q_qt_and_connected() {
        for f in Family::ALL {
            for n in f.min_n()..=8 {
                let g = graph(f, n);
                let q = incidence_matrix(&g);
                assert!(columns_sum_to_zero(&q));
                let l = laplacian_matrix(&g);
                assert_eq!(l, q.mul(&q.transpose()).unwrap());
                assert_eq!(rank(&l), 2 * n - 1, "{f} n={n}");
            }
        }
    }

    #[test]
    fn rotations_are_automorphisms() {
        for f in [Family::CircularLadder, Family::Mobius] {
            for n in 3..=9 {
                let spec = FamilySpec::new(f, n).unwrap();
                let g = build_graph(&spec).unwrap();
                assert!(is_automorphism(&g, &cyclic_shift(&spec)));
            }
        }
        // The ladder is not rotation-invariant.
        let spec = FamilySpec::new(Family::Ladder, 4).unwrap();
        assert!(!is_automorphism(
            &build_graph(&spec).unwrap(),
            &cyclic_shift(&spec)
        ));
    }

    #[test]
    fn contraction_examples() {
        let k2 = contract_edge(&graph(Family::Ladder, 1), &EdgeId::spoke(1)).unwrap();
        assert_eq!((k2.vertex_count(), k2.edge_count()), (1, 0));

        let tri = contract_edge(&graph(Family::Ladder, 2), &EdgeId::spoke(1)).unwrap();
        assert_eq!((tri.vertex_count(), tri.edge_count()), (3, 3));
        assert!(tri.degrees().iter().all(|&d| d == 2));

        let prism = contract_edge(&graph(Family::CircularLadder, 3), &EdgeId::spoke(1)).unwrap();
        assert_eq!((prism.vertex_count(), prism.edge_count()), (5, 8));
        assert_eq!(prism.vertex_labels()[0], "u1+");
        assert!(!prism.vertex_labels().contains(&"u1-".to_string()));
    }

    #[test]
    fn contraction_keeps_parallel_edges() {
        // C_4 with f1 then e1+ contracted: two vertices joined by f2 and e1-.
        let g = contract_edge(&graph(Family::Ladder, 2), &EdgeId::spoke(1)).unwrap();
        let g = contract_edge(&g, &EdgeId::rail(1, Sign::Plus)).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (2, 2));
        assert_eq!(g.undirected_edges(), [(0, 1), (0, 1)]);
        let l = laplacian_matrix(&g);
        assert_eq!(l.get(0, 1), &q(-2));
    }

    #[test]
    fn contraction_unknown_edge() {
        let g = graph(Family::Ladder, 3);
        assert!(matches!(
            contract_edge(&g, &EdgeId::spoke(9)),
            Err(Error::UnknownLabel(ref l)) if l == "f9"
        ));
        assert!(contract_edge(&g, &EdgeId::cycle_rail(1)).is_err());
    }

    #[test]
    fn edge_id_text() {
        for s in ["f1", "e12+", "e3-", "e7"] {
            assert_eq!(s.parse::<EdgeId>().unwrap().to_string(), s);
        }
        for s in ["", "f", "g1", "f1+", "e+", "e1x", "e-1"] {
            assert!(s.parse::<EdgeId>().is_err(), "{s}");
        }
    }

    #[test]
    fn edge_list_json_shape() {
        let g = graph(Family::Mobius, 3);
        let text = g.to_edge_list_json();
        assert!(text
            .starts_with(r#"{"family":"mobius","n":3,"vertices":["u1","u2","u3","v1","v2","v3"]"#));
        assert!(text.contains(r#"{"id":"f1","tail":"u1","head":"v1"}"#));
        assert!(text.contains(r#"{"id":"e3","tail":"u3","head":"v1"}"#));
        assert_eq!(parse_edge_list_json(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_rejects_tampering() {
        let text = graph(Family::CircularLadder, 3).to_edge_list_json();
        let flipped = text.replacen(
            r#""tail":"u1+","head":"u2+""#,
            r#""tail":"u2+","head":"u1+""#,
            1,
        );
        assert_ne!(flipped, text);
        assert!(parse_edge_list_json(&flipped).is_err());
        assert!(parse_edge_list_json(r#"{"family":"cl","n":2,"vertices":[],"edges":[]}"#).is_err());
        assert!(parse_edge_list_json("not json").is_err());
    }
}
