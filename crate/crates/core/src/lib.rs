//! Finiteness, order, centre, abelianisation and (acylindrical) hyperbolicity
//! of Dyer groups, decided from the defining graph.
//!
//! A Dyer graph assigns each vertex an order `f(v)` in `{2, 3, ..., inf}` and
//! each edge a label `m >= 2`, subject to the rule that a vertex with
//! `f(v) >= 3` only carries edges labelled 2. Coxeter groups, right-angled
//! Artin groups and graph products of cyclic groups are special cases.
//!
//! The decision procedures in [`classify`] reduce to recognising finite and
//! affine Coxeter diagrams ([`catalog`]) in the Coxeter lift ([`lift`]).
//! [`oracle`] is an independent coset enumerator used to cross-check them on
//! small groups.

pub mod catalog;
pub mod classify;
pub mod cli;
pub mod corpus;
pub mod graph;
pub mod lift;
pub mod oracle;
pub mod report;

pub use catalog::{AffineType, CoxeterDiagram, DiagramType, FiniteType};
pub use classify::{
    abelianisation, analyze, dyer_centre, dyer_is_acyl_hyperbolic, dyer_is_finite,
    dyer_is_hyperbolic, dyer_order, AnalysisOptions, AnalysisReport, ClassifyError, Family,
    GroupOrder, Hyperbolicity, Witness,
};
pub use graph::{parse_graph, serialize_graph, DyerGraph, GraphError, Order, ParseError};
pub use lift::{lift_graph, LiftResult};
pub use oracle::{todd_coxeter, CosetTable, OracleError, Presentation};
