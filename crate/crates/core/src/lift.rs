//! The Coxeter lift of a Dyer graph.
//!
//! Each vertex `v` of order other than 2 gets a primed twin `v'` that commutes
//! with everything except `v`. For finite `f(v)` the pair is joined by an edge
//! labelled `f(v)`; for `f(v) = inf` it is left unjoined. The Dyer group sits
//! in the resulting Coxeter group with index `2^k`, `k` the number of twins.

use num_bigint::BigUint;
use num_traits::One;

use crate::graph::{partition_vertices, DyerGraph, GraphError, Order};

/// Marker appended to a vertex name to form its twin. Extra marks are added
/// while the name is already taken.
pub const PRIME: char = '\'';

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftResult {
    /// Coxeter graph: originals at their indices, twins appended after.
    pub lifted: DyerGraph,
    /// `prime_of[v]` is the lifted index of `v'`, when `v` has a twin.
    pub prime_of: Vec<Option<usize>>,
    pub k: usize,
}

fn twin_indices(g: &DyerGraph) -> (Vec<Option<usize>>, usize) {
    let n = g.vertex_count();
    let mut prime_of = vec![None; n];
    let mut next = n;
    for (v, slot) in prime_of.iter_mut().enumerate() {
        if !g.order(v).is_two() {
            *slot = Some(next);
            next += 1;
        }
    }
    (prime_of, next - n)
}

pub fn lift_graph(g: &DyerGraph) -> LiftResult {
    let n = g.vertex_count();
    let (prime_of, k) = twin_indices(g);
    let mut lifted = DyerGraph::new();
    for v in 0..n {
        lifted
            .add_vertex(g.name(v), Order::Finite(2))
            .expect("names come from a valid graph");
    }
    for (v, twin) in prime_of.iter().enumerate() {
        if twin.is_some() {
            let mut name = format!("{}{PRIME}", g.name(v));
            while g.index_of(&name).is_some() || lifted.index_of(&name).is_some() {
                name.push(PRIME);
            }
            lifted
                .add_vertex(&name, Order::Finite(2))
                .expect("twin names are fresh");
        }
    }
    for (u, v, m) in g.edges() {
        lifted.add_edge(u, v, m).expect("all orders are 2 in the lift");
    }
    for (v, &twin) in prime_of.iter().enumerate() {
        let Some(twin) = twin else { continue };
        for u in 0..(n + k) {
            if u == v || u == twin || lifted.adjacent(twin, u) {
                continue;
            }
            lifted.add_edge(twin, u, 2).expect("label 2 is always allowed");
        }
        if let Order::Finite(f) = g.order(v) {
            lifted.add_edge(v, twin, f).expect("all orders are 2 in the lift");
        }
    }
    LiftResult { lifted, prime_of, k }
}

/// `T` together with the twins of its vertices, as indices in the lifted graph.
pub fn lift_subset(g: &DyerGraph, t: &[usize]) -> Result<Vec<usize>, GraphError> {
    if let Some(&bad) = t.iter().find(|&&v| v >= g.vertex_count()) {
        return Err(GraphError::VertexIndexOutOfRange(bad));
    }
    let (prime_of, _) = twin_indices(g);
    let mut out: Vec<usize> = t.to_vec();
    out.extend(t.iter().filter_map(|&v| prime_of[v]));
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// `2^|Vp ∪ Vinf|`, the index of the Dyer group in its Coxeter lift.
pub fn index_factor(g: &DyerGraph) -> BigUint {
    let p = partition_vertices(g);
    BigUint::one() << (p.vp.len() + p.vinf.len())
}
