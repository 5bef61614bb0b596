//! Decisions on Dyer groups read off the graph: finiteness and order, the
//! centre, the abelianisation, the family, hyperbolicity and acylindrical
//! hyperbolicity.
//!
//! Finiteness of any parabolic is decided through the Coxeter lift, which
//! contains the Dyer group with finite index and has the same irreducible
//! components (each lifted).

use std::collections::HashMap;
use std::fmt;
use std::ops::Mul;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::catalog::{
    finite_order, is_finite_coxeter, recognize_components, recognize_irreducible, AffineType,
    CoxeterDiagram, DiagramType, FiniteType,
};
use crate::graph::{induced_subgraph, irreducible_components, DyerGraph, Order};
use crate::lift::{index_factor, lift_graph};

/// Largest irreducible component the hyperbolicity check will enumerate by default.
pub const DEFAULT_MAX_SUBSET_VERTICES: usize = 20;

/// Bitmask enumeration limit.
const MASK_BITS: usize = 63;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("infinite component has {size} vertices, above the subset enumeration cap of {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("internal error: lifted order {lifted} is not divisible by index {index}")]
    InexactIndex { lifted: BigUint, index: BigUint },
}

/// Order of a group: a positive integer or infinity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupOrder {
    Finite(BigUint),
    Infinite,
}

impl GroupOrder {
    pub fn one() -> Self {
        GroupOrder::Finite(BigUint::one())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, GroupOrder::Finite(_))
    }

    pub fn as_finite(&self) -> Option<&BigUint> {
        match self {
            GroupOrder::Finite(n) => Some(n),
            GroupOrder::Infinite => None,
        }
    }
}

impl From<Order> for GroupOrder {
    fn from(o: Order) -> Self {
        match o {
            Order::Finite(n) => GroupOrder::Finite(BigUint::from(n)),
            Order::Infinite => GroupOrder::Infinite,
        }
    }
}

impl From<u64> for GroupOrder {
    fn from(n: u64) -> Self {
        GroupOrder::Finite(BigUint::from(n))
    }
}

impl Mul for GroupOrder {
    type Output = GroupOrder;

    fn mul(self, rhs: GroupOrder) -> GroupOrder {
        match (self, rhs) {
            (GroupOrder::Finite(a), GroupOrder::Finite(b)) => GroupOrder::Finite(a * b),
            _ => GroupOrder::Infinite,
        }
    }
}

impl std::iter::Product for GroupOrder {
    fn product<I: Iterator<Item = GroupOrder>>(iter: I) -> Self {
        iter.fold(GroupOrder::one(), Mul::mul)
    }
}

impl fmt::Display for GroupOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupOrder::Finite(n) => write!(f, "{n}"),
            GroupOrder::Infinite => f.write_str("infinity"),
        }
    }
}

fn lifted_diagram(g: &DyerGraph) -> CoxeterDiagram {
    CoxeterDiagram::from_graph(&lift_graph(g).lifted).expect("the lift has f = 2 everywhere")
}

pub fn dyer_is_finite(g: &DyerGraph) -> bool {
    is_finite_coxeter(&lifted_diagram(g))
}

/// Finiteness of the parabolic subgroup generated by `t`.
pub fn parabolic_is_finite(g: &DyerGraph, t: &[usize]) -> bool {
    dyer_is_finite(&induced_subgraph(g, t).expect("vertex set from the graph"))
}

/// `|W(lift)| / 2^k`, or infinity.
pub fn dyer_order(g: &DyerGraph) -> Result<GroupOrder, ClassifyError> {
    let types = recognize_components(&lifted_diagram(g));
    if !types.iter().all(|(_, t)| t.is_finite()) {
        return Ok(GroupOrder::Infinite);
    }
    let lifted: BigUint = types
        .iter()
        .map(|(_, t)| finite_order(t).expect("all components are finite"))
        .product();
    let index = index_factor(g);
    if !(&lifted % &index).is_zero() {
        return Err(ClassifyError::InexactIndex { lifted, index });
    }
    Ok(GroupOrder::Finite(lifted / index))
}

/// Centre of one irreducible factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CentreKind {
    Trivial,
    /// The whole (cyclic) factor, for a single vertex.
    CyclicFull(Order),
    /// `<w0>` of order 2 in a finite Coxeter factor of the given type.
    LongestElement(FiniteType),
}

impl CentreKind {
    pub fn order(&self) -> GroupOrder {
        match self {
            CentreKind::Trivial => GroupOrder::one(),
            CentreKind::CyclicFull(o) => (*o).into(),
            CentreKind::LongestElement(_) => GroupOrder::from(2u64),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentreFactor {
    pub component: Vec<usize>,
    pub kind: CentreKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentreDescription {
    pub factors: Vec<CentreFactor>,
    pub total_order: GroupOrder,
}

fn centre_of_component(g: &DyerGraph, comp: &[usize]) -> CentreKind {
    if let [v] = comp {
        return CentreKind::CyclicFull(g.order(*v));
    }
    if comp.iter().any(|&v| !g.order(v).is_two()) {
        return CentreKind::Trivial;
    }
    let sub = induced_subgraph(g, comp).expect("component of g");
    let diagram = CoxeterDiagram::from_graph(&sub).expect("f = 2 on the component");
    match recognize_irreducible(&diagram).expect("components are irreducible") {
        DiagramType::Finite(t)
            if t.has_central_longest_element().expect("recognised types are valid") =>
        {
            CentreKind::LongestElement(t)
        }
        _ => CentreKind::Trivial,
    }
}

pub fn dyer_centre(g: &DyerGraph) -> CentreDescription {
    let factors: Vec<CentreFactor> = irreducible_components(g)
        .into_iter()
        .map(|component| {
            let kind = centre_of_component(g, &component);
            CentreFactor { component, kind }
        })
        .collect();
    let total_order = factors.iter().map(|f| f.kind.order()).product();
    CentreDescription {
        factors,
        total_order,
    }
}

/// A cyclic factor of the abelianisation together with the vertices whose
/// images generate it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianFactor {
    pub order: Order,
    pub class: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianisationDescription {
    pub factors: Vec<AbelianFactor>,
}

impl AbelianisationDescription {
    pub fn order(&self) -> GroupOrder {
        self.factors.iter().map(|f| GroupOrder::from(f.order)).product()
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut root = x;
    while parent[root] != root {
        root = parent[root];
    }
    let mut cur = x;
    while parent[cur] != root {
        let next = parent[cur];
        parent[cur] = root;
        cur = next;
    }
    root
}

/// Odd braid relations identify their endpoints in the abelianisation; even
/// ones become commutators. One cyclic factor per class of the generated
/// equivalence.
pub fn abelianisation(g: &DyerGraph) -> AbelianisationDescription {
    let n = g.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    for (u, v, m) in g.edges() {
        if m % 2 == 1 {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut slot: HashMap<usize, usize> = HashMap::new();
    for v in 0..n {
        let root = find(&mut parent, v);
        let idx = *slot.entry(root).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[idx].push(v);
    }
    let factors = classes
        .into_iter()
        .map(|class| AbelianFactor {
            order: g.order(class[0]),
            class,
        })
        .collect();
    AbelianisationDescription { factors }
}

/// Most specific classical family the group belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    CoxeterGroup,
    RightAngledArtinGroup,
    GraphProductOfCyclics,
    GeneralDyer,
}

impl Family {
    pub fn as_str(&self) -> &'static str {
        match self {
            Family::CoxeterGroup => "coxeter_group",
            Family::RightAngledArtinGroup => "right_angled_artin_group",
            Family::GraphProductOfCyclics => "graph_product_of_cyclics",
            Family::GeneralDyer => "general_dyer",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub fn classify_family(g: &DyerGraph) -> Family {
    if g.orders().iter().all(|o| o.is_two()) {
        Family::CoxeterGroup
    } else if g.orders().iter().all(|o| o.is_infinite()) {
        Family::RightAngledArtinGroup
    } else if g.edges().all(|(_, _, m)| m == 2) {
        Family::GraphProductOfCyclics
    } else {
        Family::GeneralDyer
    }
}

/// Evidence that a group is not hyperbolic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// Vertices spanning an irreducible affine Coxeter diagram of rank >= 3.
    Affine {
        vertices: Vec<usize>,
        diagram_type: AffineType,
    },
    /// Two commuting vertex sets, each generating an infinite parabolic.
    Product { t1: Vec<usize>, t2: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hyperbolicity {
    pub hyperbolic: bool,
    pub witness: Option<Witness>,
}

impl Hyperbolicity {
    fn yes() -> Self {
        Hyperbolicity {
            hyperbolic: true,
            witness: None,
        }
    }

    fn no(witness: Witness) -> Self {
        Hyperbolicity {
            hyperbolic: false,
            witness: Some(witness),
        }
    }
}

fn infinite_components(g: &DyerGraph) -> Vec<Vec<usize>> {
    irreducible_components(g)
        .into_iter()
        .filter(|c| !parabolic_is_finite(g, c))
        .collect()
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        if rest == 0 {
            return None;
        }
        let i = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        Some(i)
    })
}

/// Spreads the low bits of `value` over the set bits of `mask`, in order.
fn deposit(value: u64, mask: u64) -> u64 {
    let mut out = 0;
    for (k, i) in bits(mask).enumerate() {
        if value >> k & 1 == 1 {
            out |= 1 << i;
        }
    }
    out
}

/// Irreducible components of `t` under a non-commutation adjacency.
fn mask_components(noncommuting: &[u64], t: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut rest = t;
    while rest != 0 {
        let seed = rest & rest.wrapping_neg();
        let mut comp = seed;
        let mut frontier = seed;
        loop {
            let reach = bits(frontier).fold(0, |acc, i| acc | noncommuting[i]) & rest & !comp;
            if reach == 0 {
                break;
            }
            comp |= reach;
            frontier = reach;
        }
        out.push(comp);
        rest &= !comp;
    }
    out
}

/// Subset search inside one irreducible component.
struct SubsetSearch<'a> {
    g: &'a DyerGraph,
    vertices: Vec<usize>,
    adjacent: Vec<u64>,
    noncommuting: Vec<u64>,
    finite_memo: HashMap<u64, bool>,
}

impl<'a> SubsetSearch<'a> {
    fn new(g: &'a DyerGraph, vertices: Vec<usize>) -> Self {
        let k = vertices.len();
        let mut adjacent = vec![0u64; k];
        let mut noncommuting = vec![0u64; k];
        for i in 0..k {
            for j in 0..k {
                if i == j {
                    continue;
                }
                if g.adjacent(vertices[i], vertices[j]) {
                    adjacent[i] |= 1 << j;
                }
                if !g.commute(vertices[i], vertices[j]) {
                    noncommuting[i] |= 1 << j;
                }
            }
        }
        SubsetSearch {
            g,
            vertices,
            adjacent,
            noncommuting,
            finite_memo: HashMap::new(),
        }
    }

    fn vertices_of(&self, mask: u64) -> Vec<usize> {
        bits(mask).map(|i| self.vertices[i]).collect()
    }

    fn is_finite(&mut self, mask: u64) -> bool {
        if let Some(&known) = self.finite_memo.get(&mask) {
            return known;
        }
        let finite = parabolic_is_finite(self.g, &self.vertices_of(mask));
        self.finite_memo.insert(mask, finite);
        finite
    }

    /// Irreducible affine diagrams of rank >= 3 have no infinity edges, so
    /// only cliques of order-2 vertices need recognising.
    fn affine_subset(&self) -> Option<Witness> {
        let v2: u64 = self
            .vertices
            .iter()
            .enumerate()
            .filter(|(_, &v)| self.g.order(v).is_two())
            .fold(0, |acc, (i, _)| acc | 1 << i);
        let count = v2.count_ones();
        for s in 0..(1u64 << count) {
            let t = deposit(s, v2);
            if t.count_ones() < 3 {
                continue;
            }
            let clique = bits(t).all(|i| self.adjacent[i] & t == t & !(1 << i));
            if !clique || mask_components(&self.noncommuting, t).len() != 1 {
                continue;
            }
            let vertices = self.vertices_of(t);
            let sub = induced_subgraph(self.g, &vertices).expect("subset of g");
            let diagram = CoxeterDiagram::from_graph(&sub).expect("subset of V2");
            if let Ok(DiagramType::Affine(diagram_type)) = recognize_irreducible(&diagram) {
                return Some(Witness::Affine {
                    vertices,
                    diagram_type,
                });
            }
        }
        None
    }

    fn infinite_product(&mut self) -> Option<Witness> {
        let full = (1u64 << self.vertices.len()) - 1;
        for t in 1..=full {
            if t.count_ones() < 2 {
                continue;
            }
            let mut infinite = Vec::new();
            for comp in mask_components(&self.noncommuting, t) {
                if !self.is_finite(comp) {
                    infinite.push(comp);
                    if infinite.len() == 2 {
                        return Some(Witness::Product {
                            t1: self.vertices_of(infinite[0]),
                            t2: self.vertices_of(infinite[1]),
                        });
                    }
                }
            }
        }
        None
    }
}

/// Hyperbolicity, by exhaustive search of the parabolics of the unique
/// infinite component. Fails when that component exceeds
/// `max_subset_vertices` vertices.
pub fn dyer_is_hyperbolic(
    g: &DyerGraph,
    max_subset_vertices: usize,
) -> Result<Hyperbolicity, ClassifyError> {
    let infinite = infinite_components(g);
    match infinite.as_slice() {
        [] => Ok(Hyperbolicity::yes()),
        [c] => {
            let cap = max_subset_vertices.min(MASK_BITS);
            if c.len() > cap {
                return Err(ClassifyError::CapExceeded { size: c.len(), cap });
            }
            let mut search = SubsetSearch::new(g, c.clone());
            if let Some(w) = search.affine_subset() {
                return Ok(Hyperbolicity::no(w));
            }
            Ok(match search.infinite_product() {
                Some(w) => Hyperbolicity::no(w),
                None => Hyperbolicity::yes(),
            })
        }
        [c1, c2, ..] => Ok(Hyperbolicity::no(Witness::Product {
            t1: c1.clone(),
            t2: c2.clone(),
        })),
    }
}

/// Type of an irreducible Coxeter component (`f = 2` on all of `comp`).
fn coxeter_type(g: &DyerGraph, comp: &[usize]) -> Option<DiagramType> {
    if !comp.iter().all(|&v| g.order(v).is_two()) {
        return None;
    }
    let sub = induced_subgraph(g, comp).expect("component of g");
    recognize_irreducible(&CoxeterDiagram::from_graph(&sub).ok()?).ok()
}

/// Exactly one infinite component, which is neither `Z` (a lone vertex of
/// infinite order) nor an affine Coxeter group.
pub fn dyer_is_acyl_hyperbolic(g: &DyerGraph) -> bool {
    let infinite = infinite_components(g);
    let [c] = infinite.as_slice() else {
        return false;
    };
    if let [v] = c.as_slice() {
        if g.order(*v).is_infinite() {
            return false;
        }
    }
    !matches!(coxeter_type(g, c), Some(DiagramType::Affine(_)))
}

/// Everything the classifier knows about one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisReport {
    pub graph: DyerGraph,
    pub family: Family,
    pub components: Vec<Vec<usize>>,
    pub finite: bool,
    pub order: GroupOrder,
    pub centre: CentreDescription,
    pub abelianisation: AbelianisationDescription,
    pub hyperbolicity: Hyperbolicity,
    pub acylindrically_hyperbolic: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnalysisOptions {
    pub max_subset_vertices: usize,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            max_subset_vertices: DEFAULT_MAX_SUBSET_VERTICES,
        }
    }
}

pub fn analyze(g: &DyerGraph, options: &AnalysisOptions) -> Result<AnalysisReport, ClassifyError> {
    let order = dyer_order(g)?;
    Ok(AnalysisReport {
        graph: g.clone(),
        family: classify_family(g),
        components: irreducible_components(g),
        finite: order.is_finite(),
        order,
        centre: dyer_centre(g),
        abelianisation: abelianisation(g),
        hyperbolicity: dyer_is_hyperbolic(g, options.max_subset_vertices)?,
        acylindrically_hyperbolic: dyer_is_acyl_hyperbolic(g),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;

    fn graph(text: &str) -> DyerGraph {
        parse_graph(text).unwrap()
    }

    fn finite(n: u64) -> GroupOrder {
        GroupOrder::from(n)
    }

    const A2_TILDE: &str = "vertex a 2\nvertex b 2\nvertex c 2\nedge a b 3\nedge b c 3\nedge a c 3";

    #[test]
    fn finiteness_examples() {
        assert!(dyer_is_finite(&graph("vertex a 5")));
        assert!(!dyer_is_finite(&graph("vertex a inf")));
        assert!(!dyer_is_finite(&graph("vertex a 2\nvertex b inf\nedge a b 2")));
        assert!(dyer_is_finite(&graph("vertex a 2\nvertex b 2\nedge a b 3")));
        assert!(dyer_is_finite(&DyerGraph::new()));
    }

    #[test]
    fn order_examples() {
        assert_eq!(dyer_order(&graph("vertex a 5")).unwrap(), finite(5));
        assert_eq!(
            dyer_order(&graph("vertex a 3\nvertex b 2\nedge a b 2")).unwrap(),
            finite(6)
        );
        assert_eq!(dyer_order(&DyerGraph::new()).unwrap(), finite(1));
        assert_eq!(dyer_order(&graph(A2_TILDE)).unwrap(), GroupOrder::Infinite);
        // Z3 * Z2 is infinite
        assert_eq!(
            dyer_order(&graph("vertex a 3\nvertex b 2")).unwrap(),
            GroupOrder::Infinite
        );
    }

    #[test]
    fn centre_examples() {
        let c = dyer_centre(&graph("vertex a 7"));
        assert_eq!(c.factors[0].kind, CentreKind::CyclicFull(Order::Finite(7)));
        assert_eq!(c.total_order, finite(7));

        let c = dyer_centre(&graph("vertex a 2\nvertex b 2\nedge a b 4"));
        assert_eq!(c.factors[0].kind, CentreKind::LongestElement(FiniteType::B(2)));
        assert_eq!(c.total_order, finite(2));

        let c = dyer_centre(&graph("vertex a 3\nvertex b 2"));
        assert_eq!(c.factors.len(), 1);
        assert_eq!(c.factors[0].kind, CentreKind::Trivial);
        assert_eq!(c.total_order, finite(1));

        let c = dyer_centre(&graph("vertex a 3\nvertex b 3\nedge a b 2"));
        assert_eq!(c.factors.len(), 2);
        assert_eq!(c.total_order, finite(9));

        let c = dyer_centre(&graph("vertex a inf"));
        assert_eq!(c.total_order, GroupOrder::Infinite);

        let c = dyer_centre(&graph(A2_TILDE));
        assert_eq!(c.total_order, finite(1));

        let c = dyer_centre(&DyerGraph::new());
        assert!(c.factors.is_empty());
        assert_eq!(c.total_order, finite(1));
    }

    #[test]
    fn abelianisation_examples() {
        let a = abelianisation(&graph("vertex a 2\nvertex b 2\nedge a b 3"));
        assert_eq!(a.factors.len(), 1);
        assert_eq!(a.factors[0].class, vec![0, 1]);
        assert_eq!(a.order(), finite(2));

        let a = abelianisation(&graph("vertex a 2\nvertex b 2\nedge a b 4"));
        assert_eq!(a.factors.len(), 2);
        assert_eq!(a.order(), finite(4));

        let a = abelianisation(&graph("vertex a inf"));
        assert_eq!(a.factors[0].order, Order::Infinite);
        assert_eq!(a.order(), GroupOrder::Infinite);

        // chains of odd labels merge transitively
        let a = abelianisation(&graph(
            "vertex a 2\nvertex b 2\nvertex c 2\nvertex d 5\nedge a b 3\nedge b c 5\nedge c d 2",
        ));
        assert_eq!(a.factors.len(), 2);
        assert_eq!(a.factors[0].class, vec![0, 1, 2]);
        assert_eq!(a.order(), finite(10));
    }

    #[test]
    fn family_examples() {
        assert_eq!(classify_family(&graph(A2_TILDE)), Family::CoxeterGroup);
        assert_eq!(
            classify_family(&graph("vertex a inf\nvertex b inf\nedge a b 2")),
            Family::RightAngledArtinGroup
        );
        assert_eq!(
            classify_family(&graph("vertex a 3\nvertex b 2")),
            Family::GraphProductOfCyclics
        );
        assert_eq!(
            classify_family(&graph("vertex a 3\nvertex b 2\nvertex c 2\nedge b c 3")),
            Family::GeneralDyer
        );
        assert_eq!(classify_family(&DyerGraph::new()), Family::CoxeterGroup);
    }

    #[test]
    fn hyperbolicity_examples() {
        let h = dyer_is_hyperbolic(&graph(A2_TILDE), 20).unwrap();
        assert!(!h.hyperbolic);
        assert_eq!(
            h.witness,
            Some(Witness::Affine {
                vertices: vec![0, 1, 2],
                diagram_type: AffineType::A(2)
            })
        );

        let h = dyer_is_hyperbolic(&graph("vertex a inf\nvertex b inf\nedge a b 2"), 20).unwrap();
        assert!(!h.hyperbolic);
        assert_eq!(h.witness, Some(Witness::Product { t1: vec![0], t2: vec![1] }));

        assert!(dyer_is_hyperbolic(&graph("vertex a inf\nvertex b inf"), 20).unwrap().hyperbolic);
        assert!(dyer_is_hyperbolic(&graph("vertex a 2\nvertex b 2"), 20).unwrap().hyperbolic);
        assert!(dyer_is_hyperbolic(&DyerGraph::new(), 20).unwrap().hyperbolic);

        let c2_tilde = "vertex a 2\nvertex b 2\nvertex c 2\nedge a b 4\nedge b c 4\nedge a c 2";
        assert!(!dyer_is_hyperbolic(&graph(c2_tilde), 20).unwrap().hyperbolic);
    }

    #[test]
    fn product_inside_one_component() {
        // a, b commute and are both infinite; c ties everything into one component
        let g = graph("vertex a inf\nvertex b inf\nvertex c 2\nedge a b 2");
        assert_eq!(irreducible_components(&g).len(), 1);
        let h = dyer_is_hyperbolic(&g, 20).unwrap();
        assert_eq!(h.witness, Some(Witness::Product { t1: vec![0], t2: vec![1] }));
    }

    #[test]
    fn cap_is_enforced_on_the_infinite_component() {
        let mut text = String::new();
        for i in 0..6 {
            text.push_str(&format!("vertex v{i} inf\n"));
        }
        let g = graph(&text);
        assert_eq!(
            dyer_is_hyperbolic(&g, 5),
            Err(ClassifyError::CapExceeded { size: 6, cap: 5 })
        );
        assert!(dyer_is_hyperbolic(&g, 6).unwrap().hyperbolic);
    }

    #[test]
    fn acylindrical_hyperbolicity_examples() {
        assert!(dyer_is_acyl_hyperbolic(&graph("vertex a inf\nvertex b inf")));
        assert!(!dyer_is_acyl_hyperbolic(&graph("vertex a inf")));
        assert!(!dyer_is_acyl_hyperbolic(&graph("vertex a 2\nvertex b 2")));
        assert!(!dyer_is_acyl_hyperbolic(&graph("vertex a 2\nvertex b 2\nedge a b 4")));
        assert!(!dyer_is_acyl_hyperbolic(&graph(A2_TILDE)));
        // Z3 * Z2 is virtually free, non-elementary
        assert!(dyer_is_acyl_hyperbolic(&graph("vertex a 3\nvertex b 2")));
        // Z x F2 has two infinite factors
        assert!(!dyer_is_acyl_hyperbolic(&graph(
            "vertex a inf\nvertex b inf\nvertex c inf\nedge a b 2\nedge a c 2"
        )));
    }

    #[test]
    fn analyze_examples() {
        let opts = AnalysisOptions::default();
        let r = analyze(&DyerGraph::new(), &opts).unwrap();
        assert!(r.finite && r.hyperbolicity.hyperbolic && !r.acylindrically_hyperbolic);
        assert_eq!(r.order, finite(1));
        assert_eq!(r.centre.total_order, finite(1));

        let r = analyze(&graph(A2_TILDE), &opts).unwrap();
        assert!(!r.finite && !r.hyperbolicity.hyperbolic && !r.acylindrically_hyperbolic);
        assert_eq!(r.family, Family::CoxeterGroup);

        let r = analyze(&graph("vertex a 5"), &opts).unwrap();
        assert_eq!(r.order, finite(5));
        assert_eq!(r.centre.factors[0].kind, CentreKind::CyclicFull(Order::Finite(5)));
        assert!(r.hyperbolicity.hyperbolic && !r.acylindrically_hyperbolic);
    }

    #[test]
    fn mask_helpers() {
        assert_eq!(deposit(0b101, 0b11010), 0b10010);
        assert_eq!(bits(0b1001).collect::<Vec<_>>(), vec![0, 3]);
        // path 0 - 1, isolated 2
        let nc = vec![0b010, 0b001, 0b000];
        assert_eq!(mask_components(&nc, 0b111), vec![0b011, 0b100]);
    }
}
