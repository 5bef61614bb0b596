//! Exhaustive small-graph corpus and the classifier-versus-oracle cross-check.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::catalog::{recognize_irreducible, CoxeterDiagram, DiagramType};
use crate::classify::{
    abelianisation, dyer_centre, dyer_is_acyl_hyperbolic, dyer_is_finite, dyer_is_hyperbolic,
    dyer_order, CentreKind, GroupOrder,
};
use crate::graph::{induced_subgraph, irreducible_components, serialize_graph, DyerGraph, Order};
use crate::lift::{index_factor, lift_graph, lift_subset};
use crate::oracle::{
    brute_abelianisation_order, brute_centre_order, brute_order, presentation_of, todd_coxeter,
};

/// Generation bounds and oracle limits for [`corpus_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusBounds {
    pub max_vertices: usize,
    pub f_values: Vec<Order>,
    pub m_values: Vec<u32>,
    /// Only groups of at most this order are compared against the oracle.
    pub order_cap: usize,
    /// Coset limit for each enumeration.
    pub max_cosets: usize,
    pub max_subset_vertices: usize,
}

pub const DEFAULT_CORPUS_MAX_COSETS: usize = 100_000;

impl Default for CorpusBounds {
    fn default() -> Self {
        CorpusBounds {
            max_vertices: 4,
            f_values: vec![
                Order::Finite(2),
                Order::Finite(3),
                Order::Finite(4),
                Order::Finite(5),
                Order::Infinite,
            ],
            m_values: vec![2, 3, 4],
            order_cap: 5000,
            max_cosets: DEFAULT_CORPUS_MAX_COSETS,
            max_subset_vertices: crate::classify::DEFAULT_MAX_SUBSET_VERTICES,
        }
    }
}

fn vertex_name(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("v{i}")
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Nondecreasing sequences of length `n` over `0..k`.
fn sorted_sequences(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut seq = vec![0usize; n];
    loop {
        out.push(seq.clone());
        let Some(pos) = (0..n).rev().find(|&i| seq[i] + 1 < k) else {
            return out;
        };
        let next = seq[pos] + 1;
        for x in &mut seq[pos..] {
            *x = next;
        }
    }
}

/// Every Dyer graph within the bounds, once per label-preserving isomorphism
/// class, in a fixed order (by size, then vertex labels, then edges).
pub fn generate(bounds: &CorpusBounds) -> Vec<DyerGraph> {
    let mut out = Vec::new();
    let k = bounds.f_values.len();
    for n in 0..=bounds.max_vertices {
        if n > 0 && k == 0 {
            break;
        }
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
            .collect();
        let perms = permutations(n);
        for f_idx in sorted_sequences(n, k.max(1)) {
            let f: Vec<Order> = f_idx.iter().map(|&i| bounds.f_values[i]).collect();
            let symmetries: Vec<&Vec<usize>> = perms
                .iter()
                .filter(|p| (0..n).all(|i| f_idx[p[i]] == f_idx[i]))
                .collect();
            // per pair: None or one of the allowed m values
            let options: Vec<Vec<Option<u32>>> = pairs
                .iter()
                .map(|&(i, j)| {
                    let mut opts = vec![None];
                    for &m in &bounds.m_values {
                        if m == 2 || (f[i].is_two() && f[j].is_two()) {
                            opts.push(Some(m));
                        }
                    }
                    opts
                })
                .collect();
            let code = |labels: &[Option<u32>]| -> Vec<u32> {
                labels.iter().map(|l| l.unwrap_or(0)).collect()
            };
            let mut seen: HashSet<Vec<u32>> = HashSet::new();
            let mut choice = vec![0usize; pairs.len()];
            loop {
                let labels: Vec<Option<u32>> = choice
                    .iter()
                    .zip(&options)
                    .map(|(&c, o)| o[c])
                    .collect();
                let mut matrix = vec![vec![None; n]; n];
                for (&(i, j), &l) in pairs.iter().zip(&labels) {
                    matrix[i][j] = l;
                    matrix[j][i] = l;
                }
                let canonical = symmetries
                    .iter()
                    .map(|p| {
                        code(&pairs.iter().map(|&(i, j)| matrix[p[i]][p[j]]).collect::<Vec<_>>())
                    })
                    .min()
                    .unwrap_or_default();
                if seen.insert(canonical) {
                    let mut g = DyerGraph::new();
                    for (i, &order) in f.iter().enumerate() {
                        g.add_vertex(&vertex_name(i), order)
                            .expect("generated vertex is valid");
                    }
                    for (&(i, j), &l) in pairs.iter().zip(&labels) {
                        if let Some(m) = l {
                            g.add_edge(i, j, m).expect("options respect the Dyer condition");
                        }
                    }
                    out.push(g);
                }
                let Some(pos) = (0..choice.len()).rev().find(|&p| choice[p] + 1 < options[p].len())
                else {
                    break;
                };
                choice[pos] += 1;
                for c in &mut choice[pos + 1..] {
                    *c = 0;
                }
            }
        }
    }
    out
}

/// Names of the individual checks run per graph.
pub mod checks {
    pub const COMPONENT_PARTITION: &str = "component_partition";
    pub const COMPONENT_LIFTING: &str = "component_lifting";
    pub const FINITENESS: &str = "finiteness";
    pub const ORDER: &str = "order";
    pub const CENTRE: &str = "centre";
    pub const CENTRE_TRIVIAL_MIXED: &str = "centre_trivial_mixed";
    pub const INDEX_IDENTITY: &str = "index_identity";
    pub const ABELIANISATION: &str = "abelianisation";
    pub const AFFINE_LIFT: &str = "affine_lift";
    pub const HYPERBOLIC_IMPLIES_AH: &str = "hyperbolic_implies_ah";
    pub const FINITE_NOT_AH: &str = "finite_not_ah";
    pub const INFINITE_EXTENSION: &str = "infinite_extension";
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub check: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn outcome(check: &'static str, passed: bool, detail: impl Into<String>) -> CheckOutcome {
    CheckOutcome {
        check,
        passed,
        detail: detail.into(),
    }
}

fn as_usize(order: &GroupOrder) -> Option<usize> {
    order
        .as_finite()
        .and_then(|n| usize::try_from(n).ok())
}

/// Runs every applicable check on one graph.
pub fn check_graph(g: &DyerGraph, bounds: &CorpusBounds) -> Vec<CheckOutcome> {
    use checks::*;
    let mut out = Vec::new();
    let n = g.vertex_count();
    let components = irreducible_components(g);

    let mut covered = vec![0usize; n];
    for c in &components {
        for &v in c {
            covered[v] += 1;
        }
    }
    let mut split_ok = true;
    for (a, ca) in components.iter().enumerate() {
        for cb in &components[a + 1..] {
            split_ok &= ca.iter().all(|&u| cb.iter().all(|&v| g.commute(u, v)));
        }
    }
    let idempotent = components.iter().all(|c| {
        irreducible_components(&induced_subgraph(g, c).expect("component")).len() == 1
    });
    out.push(outcome(
        COMPONENT_PARTITION,
        covered.iter().all(|&k| k == 1) && split_ok && idempotent,
        format!("components {components:?}"),
    ));

    let lift = lift_graph(g);
    let mut lifted_components = irreducible_components(&lift.lifted);
    lifted_components.sort();
    let mut expected: Vec<Vec<usize>> = components
        .iter()
        .map(|c| lift_subset(g, c).expect("component"))
        .collect();
    expected.sort();
    out.push(outcome(
        COMPONENT_LIFTING,
        lifted_components == expected,
        format!("lift components {lifted_components:?}, expected {expected:?}"),
    ));

    let finite = dyer_is_finite(g);
    let order = dyer_order(g);
    let centre = dyer_centre(g);
    let ab = abelianisation(g);
    let ah = dyer_is_acyl_hyperbolic(g);

    for (c, factor) in components.iter().zip(&centre.factors) {
        if c.len() >= 2 && c.iter().any(|&v| !g.order(v).is_two()) {
            out.push(outcome(
                CENTRE_TRIVIAL_MIXED,
                factor.kind == CentreKind::Trivial,
                format!("component {c:?} centre {:?}", factor.kind),
            ));
        }
    }

    let order = match order {
        Ok(o) => o,
        Err(e) => {
            out.push(outcome(ORDER, false, e.to_string()));
            return out;
        }
    };
    let small = as_usize(&order).filter(|&o| o <= bounds.order_cap);
    let table = todd_coxeter(&presentation_of(g), bounds.max_cosets);
    match (&order, small) {
        (GroupOrder::Infinite, _) => {
            out.push(outcome(
                FINITENESS,
                !finite && !table.is_complete(),
                format!("classifier infinite, oracle complete = {}", table.is_complete()),
            ));
        }
        (GroupOrder::Finite(_), None) => {}
        (GroupOrder::Finite(_), Some(expected)) => {
            out.push(outcome(
                FINITENESS,
                finite && table.is_complete(),
                format!("classifier finite, oracle complete = {}", table.is_complete()),
            ));
            if table.is_complete() {
                out.push(outcome(
                    ORDER,
                    table.len() == expected,
                    format!("classifier {expected}, oracle {}", table.len()),
                ));
                let z = brute_centre_order(&table).expect("complete table");
                out.push(outcome(
                    CENTRE,
                    centre.total_order == GroupOrder::from(z as u64),
                    format!("classifier {}, oracle {z}", centre.total_order),
                ));
                let index = index_factor(g);
                let lifted = brute_order(&lift.lifted, bounds.max_cosets);
                let ok = matches!(&lifted, Ok(l) if BigUint::from(*l) == BigUint::from(table.len()) * &index);
                out.push(outcome(
                    INDEX_IDENTITY,
                    ok,
                    format!("lift oracle {lifted:?}, group {} x index {index}", table.len()),
                ));
            }
            out.push(outcome(FINITE_NOT_AH, !ah, format!("finite group reported AH = {ah}")));
        }
    }

    match brute_abelianisation_order(g, bounds.max_cosets) {
        Ok(brute) => out.push(outcome(
            ABELIANISATION,
            brute == ab.order(),
            format!("classifier {}, oracle {brute}", ab.order()),
        )),
        Err(e) => out.push(outcome(ABELIANISATION, false, e.to_string())),
    }

    if components.len() == 1 {
        out.push(affine_lift_check(g));
    }

    match dyer_is_hyperbolic(g, bounds.max_subset_vertices) {
        Ok(h) => {
            let infinite: Vec<&Vec<usize>> = components
                .iter()
                .filter(|c| !dyer_is_finite(&induced_subgraph(g, c).expect("component")))
                .collect();
            if h.hyperbolic && infinite.len() == 1 {
                let c = infinite[0];
                let sub = induced_subgraph(g, c).expect("component");
                let is_z = c.len() == 1 && g.order(c[0]).is_infinite();
                let is_i1 = c.len() == 2
                    && c.iter().all(|&v| g.order(v).is_two())
                    && !g.adjacent(c[0], c[1]);
                if !is_z && !is_i1 {
                    out.push(outcome(
                        HYPERBOLIC_IMPLIES_AH,
                        ah,
                        format!("hyperbolic infinite component {:?} but AH = {ah}", sub.names()),
                    ));
                }
            }
        }
        Err(e) => out.push(outcome(HYPERBOLIC_IMPLIES_AH, false, e.to_string())),
    }

    let mut extended = g.clone();
    let mut name = String::from("z");
    while extended.index_of(&name).is_some() {
        name.push('z');
    }
    // Isolated in the diagram sense: a direct factor Z.
    let z = extended
        .add_vertex(&name, Order::Infinite)
        .expect("fresh name");
    for v in 0..n {
        extended.add_edge(v, z, 2).expect("m = 2 is always allowed");
    }
    let ext_finite = dyer_is_finite(&extended);
    let ext_ah = dyer_is_acyl_hyperbolic(&extended);
    out.push(outcome(
        INFINITE_EXTENSION,
        !ext_finite && !ext_ah,
        format!("times Z: finite = {ext_finite}, AH = {ext_ah}"),
    ));

    out
}

/// For an irreducible graph: being an affine Coxeter graph of rank >= 3 is
/// the same as the lift being affine of rank >= 3, and the lift is `~I1`
/// exactly for `Z` and for `~I1` itself.
fn affine_lift_check(g: &DyerGraph) -> CheckOutcome {
    let own = if g.orders().iter().all(|o| o.is_two()) && !g.is_empty() {
        recognize_irreducible(&CoxeterDiagram::from_graph(g).expect("f = 2")).ok()
    } else {
        None
    };
    let lifted = recognize_irreducible(
        &CoxeterDiagram::from_graph(&lift_graph(g).lifted).expect("lift has f = 2"),
    )
    .ok();
    let affine3 = |t: &Option<DiagramType>| matches!(t, Some(DiagramType::Affine(a)) if a.rank() >= 3);
    let is_i1 = |t: &Option<DiagramType>| {
        matches!(t, Some(DiagramType::Affine(crate::catalog::AffineType::I1)))
    };
    let is_z = g.vertex_count() == 1 && g.order(0).is_infinite();
    let ok = affine3(&own) == affine3(&lifted) && is_i1(&lifted) == (is_z || is_i1(&own));
    outcome(
        checks::AFFINE_LIFT,
        ok,
        format!("graph type {own:?}, lift type {lifted:?}"),
    )
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckTally {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub check: &'static str,
    pub graph: String,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CorpusSummary {
    pub cases: usize,
    pub finite_cases: usize,
    pub tallies: BTreeMap<&'static str, CheckTally>,
    pub first_failure: Option<Counterexample>,
}

impl CorpusSummary {
    pub fn passed(&self) -> bool {
        self.tallies.values().all(|t| t.failed == 0)
    }

    pub fn tally(&self, check: &str) -> CheckTally {
        self.tallies.get(check).cloned().unwrap_or_default()
    }
}

impl fmt::Display for CorpusSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "cases: {} ({} finite)", self.cases, self.finite_cases)?;
        for (name, t) in &self.tallies {
            let verdict = if t.failed == 0 { "PASS" } else { "FAIL" };
            writeln!(
                f,
                "{verdict} {name}: {}/{} passed",
                t.passed,
                t.passed + t.failed
            )?;
        }
        if let Some(c) = &self.first_failure {
            writeln!(f, "first counterexample ({}): {}", c.check, c.detail)?;
            for line in c.graph.lines() {
                writeln!(f, "  {line}")?;
            }
        }
        writeln!(f, "result: {}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

/// Generates the corpus and cross-checks classifier against oracle on every
/// graph. Graphs are checked in parallel; the summary does not depend on
/// scheduling.
pub fn corpus_check(bounds: &CorpusBounds) -> CorpusSummary {
    let graphs = generate(bounds);
    let results: Vec<(bool, Vec<CheckOutcome>)> = graphs
        .par_iter()
        .map(|g| (dyer_is_finite(g), check_graph(g, bounds)))
        .collect();
    let mut summary = CorpusSummary {
        cases: graphs.len(),
        ..Default::default()
    };
    for (g, (finite, outcomes)) in graphs.iter().zip(results) {
        summary.finite_cases += usize::from(finite);
        for o in outcomes {
            let tally = summary.tallies.entry(o.check).or_default();
            if o.passed {
                tally.passed += 1;
            } else {
                tally.failed += 1;
                if summary.first_failure.is_none() {
                    summary.first_failure = Some(Counterexample {
                        check: o.check,
                        graph: serialize_graph(g),
                        detail: o.detail,
                    });
                }
            }
        }
    }
    summary
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bounds(max_vertices: usize) -> CorpusBounds {
        CorpusBounds {
            max_vertices,
            ..Default::default()
        }
    }

    #[test]
    fn empty_bounds_give_trivial_group() {
        let graphs = generate(&bounds(0));
        assert_eq!(graphs.len(), 1);
        assert!(graphs[0].is_empty());
        let summary = corpus_check(&bounds(0));
        assert_eq!(summary.cases, 1);
        assert!(summary.passed(), "{summary}");
    }

    #[test]
    fn counts_up_to_two_vertices() {
        // 1 + 5 single vertices; pairs: 15 unordered f-pairs, each with
        // "no edge" or m = 2, plus m = 3, 4 when both f = 2
        let graphs = generate(&bounds(2));
        assert_eq!(graphs.len(), 1 + 5 + 15 * 2 + 2);
    }

    #[test]
    fn generation_is_deduplicated_up_to_isomorphism() {
        // three f = 2 vertices, labels from {none, 2, 3, 4} on 3 pairs:
        // multisets of size 3 over 4 labels = 20 classes
        let b = CorpusBounds {
            max_vertices: 3,
            f_values: vec![Order::Finite(2)],
            ..Default::default()
        };
        let three: Vec<_> = generate(&b).into_iter().filter(|g| g.vertex_count() == 3).collect();
        assert_eq!(three.len(), 20);
    }

    #[test]
    fn sequences_and_permutations() {
        assert_eq!(sorted_sequences(2, 3).len(), 6);
        assert_eq!(sorted_sequences(0, 3), vec![Vec::<usize>::new()]);
        assert_eq!(permutations(3).len(), 6);
    }
}
