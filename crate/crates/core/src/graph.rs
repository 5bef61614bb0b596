//! Dyer graphs: vertex order labels, edge braid labels, the line-based text
//! format, induced subgraphs and the decomposition into irreducible
//! components.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Order label of a vertex generator: an integer `>= 2` or infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Order {
    Finite(u32),
    Infinite,
}

impl Order {
    pub fn finite(value: u32) -> Result<Self, GraphError> {
        if value < 2 {
            return Err(GraphError::LabelOutOfRange {
                what: "vertex order",
                value: value.to_string(),
            });
        }
        Ok(Order::Finite(value))
    }

    pub fn is_two(self) -> bool {
        self == Order::Finite(2)
    }

    pub fn is_infinite(self) -> bool {
        self == Order::Infinite
    }

    pub fn as_finite(self) -> Option<u32> {
        match self {
            Order::Finite(n) => Some(n),
            Order::Infinite => None,
        }
    }
}

impl PartialOrd for Order {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Order {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Order::Finite(a), Order::Finite(b)) => a.cmp(b),
            (Order::Finite(_), Order::Infinite) => Ordering::Less,
            (Order::Infinite, Order::Finite(_)) => Ordering::Greater,
            (Order::Infinite, Order::Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{n}"),
            Order::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for Order {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "inf" {
            return Ok(Order::Infinite);
        }
        let value: u32 = s.parse().map_err(|_| GraphError::LabelOutOfRange {
            what: "vertex order",
            value: s.to_owned(),
        })?;
        Order::finite(value)
    }
}

/// Errors raised while building or querying a [`DyerGraph`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("invalid vertex name `{0}`")]
    InvalidName(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("vertex index {0} out of range")]
    VertexIndexOutOfRange(usize),
    #[error("{what} `{value}` out of range")]
    LabelOutOfRange { what: &'static str, value: String },
    #[error("self-loop at `{0}`")]
    SelfLoop(String),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(String, String),
    #[error("Dyer condition violated on edge {{{u}, {v}}}: f({vertex}) = {order} forces m = 2, found m = {m}")]
    DyerCondition {
        u: String,
        v: String,
        m: u32,
        vertex: String,
        order: Order,
    },
}

/// Error from [`parse_graph`], carrying the 1-based position of the offending token.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error(transparent)]
    Invalid(#[from] GraphError),
}

impl ParseError {
    /// True for well-formed lines describing an invalid graph (as opposed to
    /// malformed text).
    pub fn is_validation(&self) -> bool {
        matches!(self.kind, ParseErrorKind::Invalid(_))
    }
}

/// A finite simplicial graph with vertex orders `f` and edge labels `m`,
/// satisfying the Dyer condition: an edge at a vertex of order `>= 3` has
/// label 2.
///
/// Vertices are addressed by their index in declaration order. Absent edges
/// mean the two generators satisfy no relation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DyerGraph {
    names: Vec<String>,
    orders: Vec<Order>,
    labels: Vec<Vec<Option<u32>>>,
    index: HashMap<String, usize>,
}

pub(crate) fn is_valid_name(name: &str) -> bool {
    let base = name.trim_end_matches('\'');
    !base.is_empty() && base.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl DyerGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn order(&self, v: usize) -> Order {
        self.orders[v]
    }

    pub fn orders(&self) -> &[Order] {
        &self.orders
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Edge label `m(u, v)`, or `None` when `u` and `v` are not adjacent.
    pub fn label(&self, u: usize, v: usize) -> Option<u32> {
        self.labels[u][v]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.labels[u][v].is_some()
    }

    /// Whether the generators `u` and `v` commute by a defining relation.
    pub fn commute(&self, u: usize, v: usize) -> bool {
        self.labels[u][v] == Some(2)
    }

    /// Edges as `(u, v, m)` with `u < v`, in lexicographic index order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        let n = self.vertex_count();
        (0..n).flat_map(move |u| {
            ((u + 1)..n).filter_map(move |v| self.labels[u][v].map(|m| (u, v, m)))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }

    pub fn add_vertex(&mut self, name: &str, order: Order) -> Result<usize, GraphError> {
        if !is_valid_name(name) {
            return Err(GraphError::InvalidName(name.to_owned()));
        }
        if let Order::Finite(n) = order {
            Order::finite(n)?;
        }
        if self.index.contains_key(name) {
            return Err(GraphError::DuplicateVertex(name.to_owned()));
        }
        let id = self.names.len();
        self.names.push(name.to_owned());
        self.orders.push(order);
        for row in &mut self.labels {
            row.push(None);
        }
        self.labels.push(vec![None; id + 1]);
        self.index.insert(name.to_owned(), id);
        Ok(id)
    }

    pub fn add_edge(&mut self, u: usize, v: usize, m: u32) -> Result<(), GraphError> {
        let n = self.vertex_count();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexIndexOutOfRange(w));
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(self.names[u].clone()));
        }
        if m < 2 {
            return Err(GraphError::LabelOutOfRange {
                what: "edge label",
                value: m.to_string(),
            });
        }
        if self.labels[u][v].is_some() {
            return Err(GraphError::DuplicateEdge(
                self.names[u].clone(),
                self.names[v].clone(),
            ));
        }
        if m != 2 {
            for w in [u, v] {
                if self.orders[w] != Order::Finite(2) {
                    return Err(GraphError::DyerCondition {
                        u: self.names[u].clone(),
                        v: self.names[v].clone(),
                        m,
                        vertex: self.names[w].clone(),
                        order: self.orders[w],
                    });
                }
            }
        }
        self.labels[u][v] = Some(m);
        self.labels[v][u] = Some(m);
        Ok(())
    }

    pub fn add_edge_by_name(&mut self, u: &str, v: &str, m: u32) -> Result<(), GraphError> {
        let u = self.require(u)?;
        let v = self.require(v)?;
        self.add_edge(u, v, m)
    }

    fn require(&self, name: &str) -> Result<usize, GraphError> {
        self.index_of(name)
            .ok_or_else(|| GraphError::UnknownVertex(name.to_owned()))
    }

    /// Resolves vertex names to indices, sorted in declaration order.
    pub fn vertex_set<S: AsRef<str>>(&self, names: &[S]) -> Result<Vec<usize>, GraphError> {
        let mut set = names
            .iter()
            .map(|n| self.require(n.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        set.sort_unstable();
        set.dedup();
        Ok(set)
    }

    pub fn names_of(&self, set: &[usize]) -> Vec<String> {
        set.iter().map(|&v| self.names[v].clone()).collect()
    }
}

/// Parses the line format: `vertex <name> <f>` and `edge <u> <v> <m>`, with
/// `#` starting a comment.
pub fn parse_graph(text: &str) -> Result<DyerGraph, ParseError> {
    let mut graph = DyerGraph::new();
    for (line_no, raw) in text.lines().enumerate() {
        let line = line_no + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<(usize, &str)> = tokenize(content);
        let Some(&(col, keyword)) = tokens.first() else {
            continue;
        };
        let syntax = |column: usize, msg: String| ParseError {
            line,
            column,
            kind: ParseErrorKind::Syntax(msg),
        };
        let invalid = |column: usize, err: GraphError| ParseError {
            line,
            column,
            kind: ParseErrorKind::Invalid(err),
        };
        match keyword {
            "vertex" => {
                if tokens.len() != 3 {
                    return Err(syntax(col, format!("expected `vertex <name> <f>`, found {} fields", tokens.len())));
                }
                let (ncol, name) = tokens[1];
                check_name(name).map_err(|m| syntax(ncol, m))?;
                let (fcol, ftok) = tokens[2];
                let order = parse_order_token(ftok).map_err(|e| match e {
                    TokenError::Syntax(m) => syntax(fcol, m),
                    TokenError::Invalid(g) => invalid(fcol, g),
                })?;
                graph.add_vertex(name, order).map_err(|e| invalid(ncol, e))?;
            }
            "edge" => {
                if tokens.len() != 4 {
                    return Err(syntax(col, format!("expected `edge <name> <name> <m>`, found {} fields", tokens.len())));
                }
                let (ucol, u) = tokens[1];
                let (vcol, v) = tokens[2];
                check_name(u).map_err(|m| syntax(ucol, m))?;
                check_name(v).map_err(|m| syntax(vcol, m))?;
                let (mcol, mtok) = tokens[3];
                let m: u32 = if mtok.chars().all(|c| c.is_ascii_digit()) {
                    mtok.parse().map_err(|_| {
                        invalid(mcol, GraphError::LabelOutOfRange { what: "edge label", value: mtok.to_owned() })
                    })?
                } else {
                    return Err(syntax(mcol, format!("expected an integer edge label, found `{mtok}`")));
                };
                let ui = graph
                    .index_of(u)
                    .ok_or_else(|| invalid(ucol, GraphError::UnknownVertex(u.to_owned())))?;
                let vi = graph
                    .index_of(v)
                    .ok_or_else(|| invalid(vcol, GraphError::UnknownVertex(v.to_owned())))?;
                graph.add_edge(ui, vi, m).map_err(|e| invalid(mcol, e))?;
            }
            other => {
                return Err(syntax(col, format!("unknown declaration `{other}`")));
            }
        }
    }
    Ok(graph)
}

enum TokenError {
    Syntax(String),
    Invalid(GraphError),
}

fn parse_order_token(tok: &str) -> Result<Order, TokenError> {
    if tok == "inf" {
        return Ok(Order::Infinite);
    }
    if tok.is_empty() || !tok.chars().all(|c| c.is_ascii_digit()) {
        return Err(TokenError::Syntax(format!(
            "expected an integer or `inf` vertex order, found `{tok}`"
        )));
    }
    tok.parse::<Order>().map_err(TokenError::Invalid)
}

fn check_name(name: &str) -> Result<(), String> {
    if is_valid_name(name) {
        Ok(())
    } else {
        Err(format!("invalid vertex name `{name}`"))
    }
}

/// Splits on whitespace, keeping 1-based character columns.
fn tokenize(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    for (i, c) in line.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter()
        .map(|(s, tok)| (line[..s].chars().count() + 1, tok))
        .collect()
}

/// Canonical text form: all vertices in declaration order, then edges in
/// index order. Re-parses to an equal graph.
pub fn serialize_graph(g: &DyerGraph) -> String {
    let mut out = String::new();
    for v in 0..g.vertex_count() {
        out.push_str(&format!("vertex {} {}\n", g.name(v), g.order(v)));
    }
    for (u, v, m) in g.edges() {
        out.push_str(&format!("edge {} {} {}\n", g.name(u), g.name(v), m));
    }
    out
}

impl fmt::Display for DyerGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize_graph(self))
    }
}

/// The `(V2, Vp, Vinf)` split of the vertex set by order label.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VertexPartition {
    pub v2: Vec<usize>,
    pub vp: Vec<usize>,
    pub vinf: Vec<usize>,
}

pub fn partition_vertices(g: &DyerGraph) -> VertexPartition {
    let mut p = VertexPartition::default();
    for (v, &order) in g.orders().iter().enumerate() {
        match order {
            Order::Finite(2) => p.v2.push(v),
            Order::Finite(_) => p.vp.push(v),
            Order::Infinite => p.vinf.push(v),
        }
    }
    p
}

/// Subgraph spanned by `t`, with vertices kept in the parent's declaration
/// order and labels inherited.
pub fn induced_subgraph(g: &DyerGraph, t: &[usize]) -> Result<DyerGraph, GraphError> {
    let mut keep: Vec<usize> = t.to_vec();
    if let Some(&bad) = keep.iter().find(|&&v| v >= g.vertex_count()) {
        return Err(GraphError::VertexIndexOutOfRange(bad));
    }
    keep.sort_unstable();
    keep.dedup();
    let mut sub = DyerGraph::new();
    for &v in &keep {
        sub.add_vertex(g.name(v), g.order(v))?;
    }
    for (i, &u) in keep.iter().enumerate() {
        for (j, &v) in keep.iter().enumerate().skip(i + 1) {
            if let Some(m) = g.label(u, v) {
                sub.add_edge(i, j, m)?;
            }
        }
    }
    Ok(sub)
}

/// Splits the vertex set into irreducible components: connected components
/// of the relation "not joined by an edge labelled 2". Each component is
/// sorted and components are ordered by their first vertex.
pub fn irreducible_components(g: &DyerGraph) -> Vec<Vec<usize>> {
    let all: Vec<usize> = (0..g.vertex_count()).collect();
    components_within(g, &all)
}

/// Irreducible components of the subgraph spanned by `t`, in parent indices.
pub fn components_within(g: &DyerGraph, t: &[usize]) -> Vec<Vec<usize>> {
    let mut set: Vec<usize> = t.to_vec();
    set.sort_unstable();
    set.dedup();
    let mut seen = vec![false; set.len()];
    let mut out = Vec::new();
    for start in 0..set.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![set[start]];
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..set.len() {
                if !seen[j] && !g.commute(set[i], set[j]) {
                    seen[j] = true;
                    comp.push(set[j]);
                    stack.push(j);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}
