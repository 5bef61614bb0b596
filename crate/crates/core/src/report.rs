//! JSON and plain-text renderings of analysis results.
//!
//! The JSON document has a fixed key order (struct declaration order) and
//! lists vertices in declaration order, so identical input yields identical
//! bytes. Orders are JSON integers of any size, or the string `"infinity"`.

use num_bigint::BigUint;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::classify::{
    AbelianisationDescription, AnalysisReport, CentreDescription, CentreKind, GroupOrder,
    Hyperbolicity, Witness,
};
use crate::graph::{DyerGraph, GraphError, Order};

pub const SCHEMA_VERSION: u32 = 1;

const INFINITY: &str = "infinity";

/// Group or element order as it appears in JSON.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderValue(pub GroupOrder);

impl Serialize for OrderValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match &self.0 {
            GroupOrder::Finite(n) => {
                let number: serde_json::Number = n
                    .to_string()
                    .parse()
                    .map_err(serde::ser::Error::custom)?;
                number.serialize(s)
            }
            GroupOrder::Infinite => s.serialize_str(INFINITY),
        }
    }
}

impl<'de> Deserialize<'de> for OrderValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match serde_json::Value::deserialize(d)? {
            serde_json::Value::String(s) if s == INFINITY => Ok(OrderValue(GroupOrder::Infinite)),
            serde_json::Value::Number(n) => n
                .to_string()
                .parse::<BigUint>()
                .map(|n| OrderValue(GroupOrder::Finite(n)))
                .map_err(D::Error::custom),
            other => Err(D::Error::custom(format!("expected an order, found {other}"))),
        }
    }
}

impl From<Order> for OrderValue {
    fn from(o: Order) -> Self {
        OrderValue(o.into())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexEcho {
    pub name: String,
    pub f: OrderValue,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeEcho {
    pub u: String,
    pub v: String,
    pub m: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphEcho {
    pub vertices: Vec<VertexEcho>,
    pub edges: Vec<EdgeEcho>,
}

impl GraphEcho {
    pub fn of(g: &DyerGraph) -> Self {
        GraphEcho {
            vertices: (0..g.vertex_count())
                .map(|v| VertexEcho {
                    name: g.name(v).to_owned(),
                    f: g.order(v).into(),
                })
                .collect(),
            edges: g
                .edges()
                .map(|(u, v, m)| EdgeEcho {
                    u: g.name(u).to_owned(),
                    v: g.name(v).to_owned(),
                    m,
                })
                .collect(),
        }
    }

    /// Rebuilds the graph, re-running all validation.
    pub fn to_graph(&self) -> Result<DyerGraph, GraphError> {
        let mut g = DyerGraph::new();
        for v in &self.vertices {
            let order = match &v.f.0 {
                GroupOrder::Infinite => Order::Infinite,
                GroupOrder::Finite(n) => {
                    let n = u32::try_from(n).map_err(|_| GraphError::LabelOutOfRange {
                        what: "vertex order",
                        value: n.to_string(),
                    })?;
                    Order::finite(n)?
                }
            };
            g.add_vertex(&v.name, order)?;
        }
        for e in &self.edges {
            g.add_edge_by_name(&e.u, &e.v, e.m)?;
        }
        Ok(g)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentreFactorEcho {
    pub component: Vec<String>,
    pub kind: String,
    pub order: OrderValue,
    #[serde(rename = "type", skip_serializing_if = "Option::is_none", default)]
    pub coxeter_type: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentreEcho {
    pub total_order: OrderValue,
    pub factors: Vec<CentreFactorEcho>,
}

impl CentreEcho {
    pub fn of(g: &DyerGraph, c: &CentreDescription) -> Self {
        CentreEcho {
            total_order: OrderValue(c.total_order.clone()),
            factors: c
                .factors
                .iter()
                .map(|f| {
                    let (kind, coxeter_type) = match &f.kind {
                        CentreKind::Trivial => ("trivial", None),
                        CentreKind::CyclicFull(_) => ("cyclic", None),
                        CentreKind::LongestElement(t) => ("longest_element", Some(t.to_string())),
                    };
                    CentreFactorEcho {
                        component: g.names_of(&f.component),
                        kind: kind.to_owned(),
                        order: OrderValue(f.kind.order()),
                        coxeter_type,
                    }
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianFactorEcho {
    pub order: OrderValue,
    pub vertices: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianisationEcho {
    pub order: OrderValue,
    pub factors: Vec<AbelianFactorEcho>,
}

impl AbelianisationEcho {
    pub fn of(g: &DyerGraph, a: &AbelianisationDescription) -> Self {
        AbelianisationEcho {
            order: OrderValue(a.order()),
            factors: a
                .factors
                .iter()
                .map(|f| AbelianFactorEcho {
                    order: f.order.into(),
                    vertices: g.names_of(&f.class),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WitnessEcho {
    Affine {
        #[serde(rename = "type")]
        coxeter_type: String,
        vertices: Vec<String>,
    },
    Product {
        t1: Vec<String>,
        t2: Vec<String>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperbolicEcho {
    pub value: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<WitnessEcho>,
}

impl HyperbolicEcho {
    pub fn of(g: &DyerGraph, h: &Hyperbolicity) -> Self {
        HyperbolicEcho {
            value: h.hyperbolic,
            witness: h.witness.as_ref().map(|w| match w {
                Witness::Affine {
                    vertices,
                    diagram_type,
                } => WitnessEcho::Affine {
                    coxeter_type: diagram_type.to_string(),
                    vertices: g.names_of(vertices),
                },
                Witness::Product { t1, t2 } => WitnessEcho::Product {
                    t1: g.names_of(t1),
                    t2: g.names_of(t2),
                },
            }),
        }
    }
}

/// The `analyze --json` document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub graph: GraphEcho,
    pub family: String,
    pub components: Vec<Vec<String>>,
    pub finite: bool,
    pub order: OrderValue,
    pub centre: CentreEcho,
    pub abelianisation: AbelianisationEcho,
    pub hyperbolic: HyperbolicEcho,
    pub acylindrically_hyperbolic: bool,
}

impl ReportDocument {
    pub fn of(r: &AnalysisReport) -> Self {
        let g = &r.graph;
        ReportDocument {
            schema_version: SCHEMA_VERSION,
            graph: GraphEcho::of(g),
            family: r.family.to_string(),
            components: r.components.iter().map(|c| g.names_of(c)).collect(),
            finite: r.finite,
            order: OrderValue(r.order.clone()),
            centre: CentreEcho::of(g, &r.centre),
            abelianisation: AbelianisationEcho::of(g, &r.abelianisation),
            hyperbolic: HyperbolicEcho::of(g, &r.hyperbolicity),
            acylindrically_hyperbolic: r.acylindrically_hyperbolic,
        }
    }
}

/// Pretty-printed JSON followed by a newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types always serialize");
    s.push('\n');
    s
}

pub fn render_json(r: &AnalysisReport) -> String {
    to_json(&ReportDocument::of(r))
}

pub(crate) fn brace(names: &[String]) -> String {
    format!("{{{}}}", names.join(", "))
}

pub fn centre_text(g: &DyerGraph, c: &CentreDescription) -> String {
    let parts: Vec<String> = c
        .factors
        .iter()
        .map(|f| {
            let what = match &f.kind {
                CentreKind::Trivial => "trivial".to_owned(),
                CentreKind::CyclicFull(o) => format!("cyclic of order {}", GroupOrder::from(*o)),
                CentreKind::LongestElement(t) => format!("<w0> of order 2 ({t})"),
            };
            format!("{} {}", what, brace(&g.names_of(&f.component)))
        })
        .collect();
    if parts.is_empty() {
        format!("order {}", c.total_order)
    } else {
        format!("order {}: {}", c.total_order, parts.join(" x "))
    }
}

pub fn abelianisation_text(g: &DyerGraph, a: &AbelianisationDescription) -> String {
    if a.factors.is_empty() {
        return "trivial".to_owned();
    }
    a.factors
        .iter()
        .map(|f| {
            let z = match f.order {
                Order::Finite(n) => format!("Z{n}"),
                Order::Infinite => "Z".to_owned(),
            };
            format!("{} {}", z, brace(&g.names_of(&f.class)))
        })
        .collect::<Vec<_>>()
        .join(" x ")
}

pub fn hyperbolicity_text(g: &DyerGraph, h: &Hyperbolicity) -> String {
    match &h.witness {
        None => h.hyperbolic.to_string(),
        Some(Witness::Affine {
            vertices,
            diagram_type,
        }) => format!(
            "{} (affine {} on {})",
            h.hyperbolic,
            diagram_type,
            brace(&g.names_of(vertices))
        ),
        Some(Witness::Product { t1, t2 }) => format!(
            "{} (infinite commuting parabolics {} and {})",
            h.hyperbolic,
            brace(&g.names_of(t1)),
            brace(&g.names_of(t2))
        ),
    }
}

pub fn components_text(g: &DyerGraph, components: &[Vec<usize>]) -> String {
    components
        .iter()
        .map(|c| brace(&g.names_of(c)))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn render_text(r: &AnalysisReport) -> String {
    let g = &r.graph;
    let mut out = String::new();
    out.push_str(&format!(
        "graph: {} vertices, {} edges\n",
        g.vertex_count(),
        g.edge_count()
    ));
    out.push_str(&format!("family: {}\n", r.family));
    out.push_str(&format!("components: {}\n", components_text(g, &r.components)));
    out.push_str(&format!("finite: {}\n", r.finite));
    out.push_str(&format!("order: {}\n", r.order));
    out.push_str(&format!("centre: {}\n", centre_text(g, &r.centre)));
    out.push_str(&format!(
        "abelianisation: {}\n",
        abelianisation_text(g, &r.abelianisation)
    ));
    out.push_str(&format!(
        "hyperbolic: {}\n",
        hyperbolicity_text(g, &r.hyperbolicity)
    ));
    out.push_str(&format!(
        "acylindrically hyperbolic: {}\n",
        r.acylindrically_hyperbolic
    ));
    out
}
