//! Recognition of irreducible Coxeter diagrams against the finite and affine
//! classifications, with group orders and centre data for the finite types.
//!
//! Templates are stored as explicit diagrams and matched by label-preserving
//! isomorphism, so every answer can be checked against the presentation that
//! [`FiniteType::diagram`] builds.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

use crate::graph::{DyerGraph, Order};

/// Label of a Coxeter diagram edge. Pairs with `m = 2` carry no edge;
/// non-adjacent pairs of the Dyer graph are `Infinity` edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DiagramLabel {
    Finite(u32),
    Infinity,
}

impl fmt::Display for DiagramLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramLabel::Finite(m) => write!(f, "{m}"),
            DiagramLabel::Infinity => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("vertex `{0}` has order {1}, a Coxeter diagram needs f = 2 everywhere")]
    NotCoxeter(String, Order),
    #[error("diagram is not irreducible ({0} components)")]
    NotIrreducible(usize),
    #[error("{0} is not a finite type")]
    NotFinite(DiagramType),
    #[error("invalid Coxeter type {0}")]
    InvalidType(String),
}

/// Coxeter diagram of a Dyer graph with `f = 2` everywhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterDiagram {
    edges: Vec<Vec<Option<DiagramLabel>>>,
}

impl CoxeterDiagram {
    /// Diagram with `rank` vertices and no edges (all generators commute).
    pub fn discrete(rank: usize) -> Self {
        CoxeterDiagram {
            edges: vec![vec![None; rank]; rank],
        }
    }

    pub fn from_graph(g: &DyerGraph) -> Result<Self, CatalogError> {
        let n = g.vertex_count();
        if let Some(v) = (0..n).find(|&v| !g.order(v).is_two()) {
            return Err(CatalogError::NotCoxeter(g.name(v).to_owned(), g.order(v)));
        }
        let mut d = Self::discrete(n);
        for u in 0..n {
            for v in (u + 1)..n {
                match g.label(u, v) {
                    Some(2) => {}
                    Some(m) => d.set(u, v, DiagramLabel::Finite(m)),
                    None => d.set(u, v, DiagramLabel::Infinity),
                }
            }
        }
        Ok(d)
    }

    pub fn rank(&self) -> usize {
        self.edges.len()
    }

    pub fn label(&self, u: usize, v: usize) -> Option<DiagramLabel> {
        self.edges[u][v]
    }

    fn set(&mut self, u: usize, v: usize, label: DiagramLabel) {
        self.edges[u][v] = Some(label);
        self.edges[v][u] = Some(label);
    }

    fn set_m(&mut self, u: usize, v: usize, m: u32) {
        self.set(u, v, DiagramLabel::Finite(m));
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges[v].iter().filter(|l| l.is_some()).count()
    }

    pub fn has_infinity_edge(&self) -> bool {
        self.edges
            .iter()
            .any(|row| row.contains(&Some(DiagramLabel::Infinity)))
    }

    /// Connected components of the diagram, each sorted, ordered by first vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.rank();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for (v, label) in self.edges[u].iter().enumerate() {
                    if !seen[v] && label.is_some() {
                        seen[v] = true;
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn restrict(&self, vertices: &[usize]) -> CoxeterDiagram {
        let mut d = Self::discrete(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate() {
                d.edges[i][j] = self.edges[u][v];
            }
        }
        d
    }

    /// The Dyer graph (all `f = 2`) with this diagram, vertices named `s0, s1, ...`.
    pub fn to_graph(&self) -> DyerGraph {
        let n = self.rank();
        let mut g = DyerGraph::new();
        for v in 0..n {
            g.add_vertex(&format!("s{v}"), Order::Finite(2))
                .expect("generated names are distinct");
        }
        for u in 0..n {
            for v in (u + 1)..n {
                let m = match self.edges[u][v] {
                    None => Some(2),
                    Some(DiagramLabel::Finite(m)) => Some(m),
                    Some(DiagramLabel::Infinity) => None,
                };
                if let Some(m) = m {
                    g.add_edge(u, v, m).expect("f = 2 satisfies the Dyer condition");
                }
            }
        }
        g
    }

    /// Sorted per-vertex (degree, incident labels) profile; equal for isomorphic diagrams.
    fn signature(&self) -> Vec<(usize, Vec<DiagramLabel>)> {
        let mut sig: Vec<_> = (0..self.rank())
            .map(|v| {
                let mut labels: Vec<DiagramLabel> = self.edges[v].iter().flatten().copied().collect();
                labels.sort_unstable();
                (labels.len(), labels)
            })
            .collect();
        sig.sort_unstable();
        sig
    }

    /// Label-preserving isomorphism test by backtracking.
    pub fn is_isomorphic(&self, other: &CoxeterDiagram) -> bool {
        if self.rank() != other.rank() || self.signature() != other.signature() {
            return false;
        }
        let order = self.search_order();
        let mut image = vec![usize::MAX; self.rank()];
        let mut used = vec![false; other.rank()];
        self.extend_iso(other, &order, 0, &mut image, &mut used)
    }

    /// Vertices in BFS order so each new vertex has a mapped neighbour when possible.
    fn search_order(&self) -> Vec<usize> {
        let n = self.rank();
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                order.push(u);
                for (v, label) in self.edges[u].iter().enumerate() {
                    if !seen[v] && label.is_some() {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
        }
        order
    }

    fn extend_iso(
        &self,
        other: &CoxeterDiagram,
        order: &[usize],
        depth: usize,
        image: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let Some(&u) = order.get(depth) else {
            return true;
        };
        for cand in 0..other.rank() {
            if used[cand] || self.degree(u) != other.degree(cand) {
                continue;
            }
            let consistent = order[..depth]
                .iter()
                .all(|&w| self.edges[u][w] == other.edges[cand][image[w]]);
            if !consistent {
                continue;
            }
            image[u] = cand;
            used[cand] = true;
            if self.extend_iso(other, order, depth + 1, image, used) {
                return true;
            }
            used[cand] = false;
        }
        image[u] = usize::MAX;
        false
    }
}

/// Irreducible finite Coxeter types. `B` stands for both `B_n` and `C_n`;
/// `G2` is `I2(6)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FiniteType {
    A(usize),
    B(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
    I2(u32),
}

/// Irreducible affine Coxeter types. The index is the subscript: `A(n)` has
/// `n + 1` vertices; `I1` is the infinite dihedral group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AffineType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    G2,
    I1,
}

/// Result of recognising an irreducible Coxeter diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DiagramType {
    Finite(FiniteType),
    Affine(AffineType),
    OtherInfinite,
}

impl fmt::Display for FiniteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiniteType::A(n) => write!(f, "A{n}"),
            FiniteType::B(n) => write!(f, "B{n}"),
            FiniteType::D(n) => write!(f, "D{n}"),
            FiniteType::E6 => f.write_str("E6"),
            FiniteType::E7 => f.write_str("E7"),
            FiniteType::E8 => f.write_str("E8"),
            FiniteType::F4 => f.write_str("F4"),
            FiniteType::H3 => f.write_str("H3"),
            FiniteType::H4 => f.write_str("H4"),
            FiniteType::I2(m) => write!(f, "I2({m})"),
        }
    }
}

impl fmt::Display for AffineType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AffineType::A(n) => write!(f, "~A{n}"),
            AffineType::B(n) => write!(f, "~B{n}"),
            AffineType::C(n) => write!(f, "~C{n}"),
            AffineType::D(n) => write!(f, "~D{n}"),
            AffineType::E6 => f.write_str("~E6"),
            AffineType::E7 => f.write_str("~E7"),
            AffineType::E8 => f.write_str("~E8"),
            AffineType::F4 => f.write_str("~F4"),
            AffineType::G2 => f.write_str("~G2"),
            AffineType::I1 => f.write_str("~I1"),
        }
    }
}

impl fmt::Display for DiagramType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramType::Finite(t) => t.fmt(f),
            DiagramType::Affine(t) => t.fmt(f),
            DiagramType::OtherInfinite => f.write_str("other infinite"),
        }
    }
}

fn path(labels: &[u32]) -> CoxeterDiagram {
    let mut d = CoxeterDiagram::discrete(labels.len() + 1);
    for (i, &m) in labels.iter().enumerate() {
        d.set_m(i, i + 1, m);
    }
    d
}

/// Simply-laced tree: a centre (vertex 0) with arms of the given lengths.
fn star(arms: &[usize]) -> CoxeterDiagram {
    let mut d = CoxeterDiagram::discrete(1 + arms.iter().sum::<usize>());
    let mut next = 1;
    for &len in arms {
        let mut prev = 0;
        for _ in 0..len {
            d.set_m(prev, next, 3);
            prev = next;
            next += 1;
        }
    }
    d
}

impl FiniteType {
    pub fn rank(&self) -> usize {
        match *self {
            FiniteType::A(n) | FiniteType::B(n) | FiniteType::D(n) => n,
            FiniteType::E6 => 6,
            FiniteType::E7 => 7,
            FiniteType::E8 => 8,
            FiniteType::F4 | FiniteType::H4 => 4,
            FiniteType::H3 => 3,
            FiniteType::I2(_) => 2,
        }
    }

    pub fn is_valid(&self) -> bool {
        match *self {
            FiniteType::A(n) => n >= 1,
            FiniteType::B(n) => n >= 2,
            FiniteType::D(n) => n >= 4,
            FiniteType::I2(m) => m >= 3,
            _ => true,
        }
    }

    fn validated(self) -> Result<Self, CatalogError> {
        if self.is_valid() {
            Ok(self)
        } else {
            Err(CatalogError::InvalidType(format!("{self:?}")))
        }
    }

    /// Name under which recognition reports this type: `I2(3)` is `A2`,
    /// `I2(4)` is `B2`.
    pub fn canonical(self) -> Self {
        match self {
            FiniteType::I2(3) => FiniteType::A(2),
            FiniteType::I2(4) => FiniteType::B(2),
            other => other,
        }
    }

    /// Template diagram.
    pub fn diagram(&self) -> Result<CoxeterDiagram, CatalogError> {
        let t = self.validated()?;
        Ok(match t {
            FiniteType::A(n) => path(&vec![3; n - 1]),
            FiniteType::B(n) => {
                let mut labels = vec![3; n - 1];
                labels[n - 2] = 4;
                path(&labels)
            }
            FiniteType::D(n) => star(&[1, 1, n - 3]),
            FiniteType::E6 => star(&[1, 2, 2]),
            FiniteType::E7 => star(&[1, 2, 3]),
            FiniteType::E8 => star(&[1, 2, 4]),
            FiniteType::F4 => path(&[3, 4, 3]),
            FiniteType::H3 => path(&[5, 3]),
            FiniteType::H4 => path(&[5, 3, 3]),
            FiniteType::I2(m) => path(&[m]),
        })
    }

    pub fn order(&self) -> Result<BigUint, CatalogError> {
        let t = self.validated()?;
        let factorial = |n: usize| -> BigUint { (1..=n).map(BigUint::from).product() };
        let pow2 = |e: usize| -> BigUint { BigUint::one() << e };
        Ok(match t {
            FiniteType::A(n) => factorial(n + 1),
            FiniteType::B(n) => pow2(n) * factorial(n),
            FiniteType::D(n) => pow2(n - 1) * factorial(n),
            FiniteType::E6 => BigUint::from(51_840u32),
            FiniteType::E7 => BigUint::from(2_903_040u32),
            FiniteType::E8 => BigUint::from(696_729_600u32),
            FiniteType::F4 => BigUint::from(1_152u32),
            FiniteType::H3 => BigUint::from(120u32),
            FiniteType::H4 => BigUint::from(14_400u32),
            FiniteType::I2(m) => BigUint::from(2 * m as u64),
        })
    }

    /// Whether the longest element is central, i.e. the centre has order 2.
    pub fn has_central_longest_element(&self) -> Result<bool, CatalogError> {
        let t = self.validated()?;
        Ok(match t {
            FiniteType::A(n) => n == 1,
            FiniteType::B(_) => true,
            FiniteType::D(n) => n % 2 == 0,
            FiniteType::E6 => false,
            FiniteType::E7 | FiniteType::E8 | FiniteType::F4 | FiniteType::H3 | FiniteType::H4 => {
                true
            }
            FiniteType::I2(m) => m % 2 == 0,
        })
    }
}

impl AffineType {
    /// Number of vertices of the diagram.
    pub fn rank(&self) -> usize {
        match *self {
            AffineType::A(n) | AffineType::B(n) | AffineType::C(n) | AffineType::D(n) => n + 1,
            AffineType::E6 => 7,
            AffineType::E7 => 8,
            AffineType::E8 => 9,
            AffineType::F4 => 5,
            AffineType::G2 => 3,
            AffineType::I1 => 2,
        }
    }

    pub fn is_valid(&self) -> bool {
        match *self {
            AffineType::A(n) | AffineType::C(n) => n >= 2,
            AffineType::B(n) => n >= 3,
            AffineType::D(n) => n >= 4,
            _ => true,
        }
    }

    pub fn diagram(&self) -> Result<CoxeterDiagram, CatalogError> {
        if !self.is_valid() {
            return Err(CatalogError::InvalidType(format!("{self:?}")));
        }
        Ok(match *self {
            AffineType::A(n) => {
                let mut d = path(&vec![3; n]);
                d.set_m(n, 0, 3);
                d
            }
            AffineType::B(n) => {
                // fork 0, 1 -> 2, chain 2 .. n, double bond at the far end
                let mut d = CoxeterDiagram::discrete(n + 1);
                d.set_m(0, 2, 3);
                d.set_m(1, 2, 3);
                for i in 2..n {
                    d.set_m(i, i + 1, if i + 1 == n { 4 } else { 3 });
                }
                d
            }
            AffineType::C(n) => {
                let mut labels = vec![3; n];
                labels[0] = 4;
                labels[n - 1] = 4;
                path(&labels)
            }
            AffineType::D(n) => {
                let mut d = CoxeterDiagram::discrete(n + 1);
                d.set_m(0, 2, 3);
                d.set_m(1, 2, 3);
                for i in 2..(n - 2) {
                    d.set_m(i, i + 1, 3);
                }
                d.set_m(n - 2, n - 1, 3);
                d.set_m(n - 2, n, 3);
                d
            }
            AffineType::E6 => star(&[2, 2, 2]),
            AffineType::E7 => star(&[1, 3, 3]),
            AffineType::E8 => star(&[1, 2, 5]),
            AffineType::F4 => path(&[3, 3, 4, 3]),
            AffineType::G2 => path(&[6, 3]),
            AffineType::I1 => {
                let mut d = CoxeterDiagram::discrete(2);
                d.set(0, 1, DiagramLabel::Infinity);
                d
            }
        })
    }
}

impl DiagramType {
    pub fn is_finite(&self) -> bool {
        matches!(self, DiagramType::Finite(_))
    }

    pub fn is_affine(&self) -> bool {
        matches!(self, DiagramType::Affine(_))
    }
}

/// Templates of a given rank >= 3, finite types first.
fn templates_of_rank(n: usize) -> Vec<DiagramType> {
    use DiagramType::{Affine, Finite};
    let mut out = vec![Finite(FiniteType::A(n)), Finite(FiniteType::B(n))];
    if n >= 4 {
        out.push(Finite(FiniteType::D(n)));
    }
    match n {
        3 => out.push(Finite(FiniteType::H3)),
        4 => out.extend([Finite(FiniteType::F4), Finite(FiniteType::H4)]),
        6 => out.push(Finite(FiniteType::E6)),
        7 => out.push(Finite(FiniteType::E7)),
        8 => out.push(Finite(FiniteType::E8)),
        _ => {}
    }
    out.push(Affine(AffineType::A(n - 1)));
    out.push(Affine(AffineType::C(n - 1)));
    if n >= 4 {
        out.push(Affine(AffineType::B(n - 1)));
    }
    if n >= 5 {
        out.push(Affine(AffineType::D(n - 1)));
    }
    match n {
        3 => out.push(Affine(AffineType::G2)),
        5 => out.push(Affine(AffineType::F4)),
        7 => out.push(Affine(AffineType::E6)),
        8 => out.push(Affine(AffineType::E7)),
        9 => out.push(Affine(AffineType::E8)),
        _ => {}
    }
    out
}

fn template(t: &DiagramType) -> CoxeterDiagram {
    match t {
        DiagramType::Finite(f) => f.diagram(),
        DiagramType::Affine(a) => a.diagram(),
        DiagramType::OtherInfinite => unreachable!("no template for other infinite"),
    }
    .expect("catalog templates are valid")
}

/// Identifies an irreducible diagram as a finite type, an affine type, or
/// neither.
pub fn recognize_irreducible(d: &CoxeterDiagram) -> Result<DiagramType, CatalogError> {
    let components = d.components().len();
    if components != 1 {
        return Err(CatalogError::NotIrreducible(components));
    }
    Ok(match d.rank() {
        1 => DiagramType::Finite(FiniteType::A(1)),
        2 => match d.label(0, 1).expect("irreducible rank-2 diagram has an edge") {
            DiagramLabel::Finite(m) => DiagramType::Finite(FiniteType::I2(m).canonical()),
            DiagramLabel::Infinity => DiagramType::Affine(AffineType::I1),
        },
        n => {
            if d.has_infinity_edge() {
                return Ok(DiagramType::OtherInfinite);
            }
            templates_of_rank(n)
                .into_iter()
                .find(|t| template(t).is_isomorphic(d))
                .unwrap_or(DiagramType::OtherInfinite)
        }
    })
}

/// Components of `d` with their recognised types.
pub fn recognize_components(d: &CoxeterDiagram) -> Vec<(Vec<usize>, DiagramType)> {
    d.components()
        .into_iter()
        .map(|c| {
            let t = recognize_irreducible(&d.restrict(&c)).expect("components are irreducible");
            (c, t)
        })
        .collect()
}

pub fn is_finite_coxeter(d: &CoxeterDiagram) -> bool {
    recognize_components(d).iter().all(|(_, t)| t.is_finite())
}

/// All components finite or affine, at least one affine.
pub fn is_affine_coxeter(d: &CoxeterDiagram) -> bool {
    let types = recognize_components(d);
    types.iter().all(|(_, t)| t.is_finite() || t.is_affine()) && types.iter().any(|(_, t)| t.is_affine())
}

pub fn finite_order(t: &DiagramType) -> Result<BigUint, CatalogError> {
    match t {
        DiagramType::Finite(f) => f.order(),
        other => Err(CatalogError::NotFinite(*other)),
    }
}

/// Order and centre data of a finite type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteTypeFacts {
    pub order: BigUint,
    pub has_central_longest_element: bool,
}

pub fn centre_facts(t: &DiagramType) -> Result<FiniteTypeFacts, CatalogError> {
    match t {
        DiagramType::Finite(f) => Ok(FiniteTypeFacts {
            order: f.order()?,
            has_central_longest_element: f.has_central_longest_element()?,
        }),
        other => Err(CatalogError::NotFinite(*other)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;

    fn diagram(text: &str) -> CoxeterDiagram {
        CoxeterDiagram::from_graph(&parse_graph(text).unwrap()).unwrap()
    }

    fn recognize(text: &str) -> DiagramType {
        recognize_irreducible(&diagram(text)).unwrap()
    }

    #[test]
    fn recognition_examples() {
        assert_eq!(recognize("vertex a 2"), DiagramType::Finite(FiniteType::A(1)));
        assert_eq!(
            recognize("vertex a 2\nvertex b 2"),
            DiagramType::Affine(AffineType::I1)
        );
        assert_eq!(
            recognize("vertex a 2\nvertex b 2\nvertex c 2\nedge a b 3\nedge b c 3\nedge a c 3"),
            DiagramType::Affine(AffineType::A(2))
        );
        assert_eq!(
            recognize("vertex a 2\nvertex b 2\nvertex c 2\nedge a b 4\nedge b c 3\nedge a c 2"),
            DiagramType::Finite(FiniteType::B(3))
        );
    }

    #[test]
    fn rank_two_naming() {
        let two = |m: u32| recognize(&format!("vertex a 2\nvertex b 2\nedge a b {m}"));
        assert_eq!(two(3), DiagramType::Finite(FiniteType::A(2)));
        assert_eq!(two(4), DiagramType::Finite(FiniteType::B(2)));
        assert_eq!(two(6), DiagramType::Finite(FiniteType::I2(6)));
        assert_eq!(two(11), DiagramType::Finite(FiniteType::I2(11)));
    }

    #[test]
    fn reducible_input_is_rejected() {
        let d = diagram("vertex a 2\nvertex b 2\nedge a b 2");
        assert_eq!(recognize_irreducible(&d), Err(CatalogError::NotIrreducible(2)));
        assert_eq!(
            recognize_irreducible(&CoxeterDiagram::discrete(0)),
            Err(CatalogError::NotIrreducible(0))
        );
        assert!(matches!(
            CoxeterDiagram::from_graph(&parse_graph("vertex a 3").unwrap()),
            Err(CatalogError::NotCoxeter(..))
        ));
    }

    #[test]
    fn finite_and_affine_predicates() {
        assert!(is_finite_coxeter(&CoxeterDiagram::discrete(0)));
        assert!(!is_affine_coxeter(&CoxeterDiagram::discrete(0)));

        let a2_tilde_plus_a1 = "vertex a 2\nvertex b 2\nvertex c 2\nvertex d 2\n\
            edge a b 3\nedge b c 3\nedge a c 3\nedge a d 2\nedge b d 2\nedge c d 2";
        assert!(!is_finite_coxeter(&diagram(a2_tilde_plus_a1)));
        assert!(is_affine_coxeter(&diagram(a2_tilde_plus_a1)));

        let two_a2 = "vertex a 2\nvertex b 2\nvertex c 2\nvertex d 2\n\
            edge a b 3\nedge c d 3\nedge a c 2\nedge a d 2\nedge b c 2\nedge b d 2";
        assert!(is_finite_coxeter(&diagram(two_a2)));

        assert!(is_affine_coxeter(&diagram("vertex a 2\nvertex b 2")));

        // ~A2 and ~I1 with one missing join edge: a single component with an infinity edge
        let broken = "vertex a 2\nvertex b 2\nvertex c 2\nvertex d 2\nvertex e 2\n\
            edge a b 3\nedge b c 3\nedge a c 3\n\
            edge a d 2\nedge a e 2\nedge b d 2\nedge b e 2\nedge c d 2";
        let d = diagram(broken);
        assert_eq!(d.components().len(), 1);
        assert_eq!(recognize_irreducible(&d).unwrap(), DiagramType::OtherInfinite);
        assert!(!is_affine_coxeter(&d));
        assert!(!is_finite_coxeter(&d));
    }

    #[test]
    fn order_examples() {
        let order = |t: FiniteType| finite_order(&DiagramType::Finite(t)).unwrap();
        assert_eq!(order(FiniteType::I2(4)), BigUint::from(8u32));
        assert_eq!(order(FiniteType::A(3)), BigUint::from(24u32));
        assert_eq!(order(FiniteType::A(1)), BigUint::from(2u32));
        assert_eq!(order(FiniteType::B(3)), BigUint::from(48u32));
        assert_eq!(order(FiniteType::D(4)), BigUint::from(192u32));
        assert!(matches!(
            finite_order(&DiagramType::Affine(AffineType::I1)),
            Err(CatalogError::NotFinite(_))
        ));
        assert!(finite_order(&DiagramType::Finite(FiniteType::D(3))).is_err());
    }

    #[test]
    fn centre_fact_examples() {
        let central = |t: FiniteType| {
            centre_facts(&DiagramType::Finite(t))
                .unwrap()
                .has_central_longest_element
        };
        assert!(central(FiniteType::B(2)));
        assert!(central(FiniteType::I2(4)));
        assert!(!central(FiniteType::A(2)));
        assert!(!central(FiniteType::I2(3)));
        assert!(central(FiniteType::I2(6)));
        assert!(central(FiniteType::A(1)));
        assert!(central(FiniteType::D(4)));
        assert!(!central(FiniteType::D(5)));
        assert!(!central(FiniteType::E6));
        assert!(central(FiniteType::E7));
        assert!(centre_facts(&DiagramType::OtherInfinite).is_err());
    }

    #[test]
    fn templates_recognise_as_themselves() {
        let mut all: Vec<DiagramType> = Vec::new();
        for n in 1..=10 {
            all.push(DiagramType::Finite(FiniteType::A(n)));
            if n >= 2 {
                all.push(DiagramType::Finite(FiniteType::B(n)));
                all.push(DiagramType::Affine(AffineType::A(n)));
                all.push(DiagramType::Affine(AffineType::C(n)));
            }
            if n >= 3 {
                all.push(DiagramType::Affine(AffineType::B(n)));
            }
            if n >= 4 {
                all.push(DiagramType::Finite(FiniteType::D(n)));
                all.push(DiagramType::Affine(AffineType::D(n)));
            }
        }
        for m in 5..=12 {
            all.push(DiagramType::Finite(FiniteType::I2(m)));
        }
        all.extend(
            [FiniteType::E6, FiniteType::E7, FiniteType::E8, FiniteType::F4, FiniteType::H3, FiniteType::H4]
                .map(DiagramType::Finite),
        );
        all.extend(
            [AffineType::E6, AffineType::E7, AffineType::E8, AffineType::F4, AffineType::G2, AffineType::I1]
                .map(DiagramType::Affine),
        );
        for t in all {
            let d = template(&t);
            let expected_rank = match t {
                DiagramType::Finite(f) => f.rank(),
                DiagramType::Affine(a) => a.rank(),
                DiagramType::OtherInfinite => unreachable!(),
            };
            assert_eq!(d.rank(), expected_rank, "{t}");
            assert_eq!(recognize_irreducible(&d).unwrap(), t, "{t}");
        }
    }

    #[test]
    fn infinity_edges_above_rank_two_are_other() {
        // path a - b - c where a, c are non-adjacent in the Dyer graph
        let d = diagram("vertex a 2\nvertex b 2\nvertex c 2\nedge a b 3\nedge b c 3");
        assert_eq!(recognize_irreducible(&d).unwrap(), DiagramType::OtherInfinite);
    }

    #[test]
    fn hyperbolic_triangle_is_other() {
        // (2,3,7) triangle group
        let d = diagram("vertex a 2\nvertex b 2\nvertex c 2\nedge a b 3\nedge b c 7\nedge a c 2");
        assert_eq!(recognize_irreducible(&d).unwrap(), DiagramType::OtherInfinite);
    }
}
