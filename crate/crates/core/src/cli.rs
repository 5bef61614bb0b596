//! Command-line front end.
//!
//! Exit statuses: 0 success, 1 usage or syntax error, 2 invalid graph,
//! 3 cap exceeded, 4 corpus disagreement.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::classify::{
    abelianisation, analyze, dyer_centre, dyer_is_acyl_hyperbolic, dyer_is_finite,
    dyer_is_hyperbolic, dyer_order, AnalysisOptions, ClassifyError, DEFAULT_MAX_SUBSET_VERTICES,
};
use crate::corpus::{corpus_check, CorpusBounds, DEFAULT_CORPUS_MAX_COSETS};
use crate::graph::{irreducible_components, parse_graph, serialize_graph, DyerGraph};
use crate::lift::{index_factor, lift_graph};
use crate::oracle::{
    brute_abelianisation_order, brute_centre_order, enumerate_graph, OracleError,
    DEFAULT_MAX_COSETS,
};
use crate::report::{
    abelianisation_text, centre_text, components_text, hyperbolicity_text, render_json,
    render_text, to_json, AbelianisationEcho, CentreEcho, GraphEcho, HyperbolicEcho, OrderValue,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_CORPUS_FAILURE: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "dyer", version, about = "Structural properties of Dyer groups from their graphs")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Coset limit for enumerations (default 1000000; 100000 for corpus-check).
    #[arg(long, global = true, value_name = "N")]
    max_cosets: Option<usize>,

    /// Largest infinite component the hyperbolicity check will enumerate.
    #[arg(long, global = true, value_name = "N", default_value_t = DEFAULT_MAX_SUBSET_VERTICES)]
    max_subset_vertices: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse and validate a graph file.
    Validate { file: PathBuf },
    /// Full report.
    Analyze { file: PathBuf },
    /// Irreducible components.
    Decompose { file: PathBuf },
    /// Coxeter lift, in the graph file format.
    Lift { file: PathBuf },
    Finite { file: PathBuf },
    Order { file: PathBuf },
    Centre { file: PathBuf },
    Hyperbolic { file: PathBuf },
    /// Acylindrical hyperbolicity.
    Ah { file: PathBuf },
    Abelian { file: PathBuf },
    /// Brute-force answers from coset enumeration.
    Oracle {
        #[command(subcommand)]
        query: OracleQuery,
    },
    /// Cross-check classifier and oracle on every small graph.
    CorpusCheck {
        #[arg(long, default_value_t = 4)]
        max_vertices: usize,
        #[arg(long, default_value_t = 5000)]
        order_cap: usize,
    },
}

#[derive(Debug, Subcommand)]
enum OracleQuery {
    Order { file: PathBuf },
    Centre { file: PathBuf },
    Abelian { file: PathBuf },
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<ClassifyError> for Failure {
    fn from(e: ClassifyError) -> Self {
        let code = match e {
            ClassifyError::CapExceeded { .. } => EXIT_CAP,
            ClassifyError::InexactIndex { .. } => EXIT_INVALID,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        Failure::new(EXIT_CAP, e.to_string())
    }
}

fn read_graph(path: &Path) -> Result<DyerGraph, Failure> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::new(EXIT_USAGE, format!("<stdin>: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Failure::new(EXIT_USAGE, format!("{}: {e}", path.display())))?
    };
    parse_graph(&text).map_err(|e| {
        let code = if e.is_validation() { EXIT_INVALID } else { EXIT_USAGE };
        Failure::new(code, format!("{}:{}:{}: {}", path.display(), e.line, e.column, e.kind))
    })
}

/// Runs the CLI with `args` (including the program name), writing the report
/// to `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok((text, code)) => {
            if out.write_all(text.as_bytes()).is_err() {
                return EXIT_USAGE;
            }
            if let Some(message) = code.1 {
                let _ = writeln!(err, "dyer: {message}");
            }
            code.0
        }
        Err(f) => {
            let _ = writeln!(err, "dyer: {}", f.message);
            f.code
        }
    }
}

type Outcome = (String, (i32, Option<String>));

fn ok(text: String) -> Result<Outcome, Failure> {
    Ok((text, (EXIT_OK, None)))
}

fn execute(cli: &Cli) -> Result<Outcome, Failure> {
    let json = cli.json;
    let options = AnalysisOptions {
        max_subset_vertices: cli.max_subset_vertices,
    };
    let max_cosets = cli.max_cosets.unwrap_or(DEFAULT_MAX_COSETS);
    match &cli.command {
        Command::Validate { file } => {
            let g = read_graph(file)?;
            ok(if json {
                to_json(&json!({
                    "valid": true,
                    "vertices": g.vertex_count(),
                    "edges": g.edge_count(),
                }))
            } else {
                format!("valid: {} vertices, {} edges\n", g.vertex_count(), g.edge_count())
            })
        }
        Command::Analyze { file } => {
            let g = read_graph(file)?;
            let report = analyze(&g, &options)?;
            ok(if json {
                render_json(&report)
            } else {
                render_text(&report)
            })
        }
        Command::Decompose { file } => {
            let g = read_graph(file)?;
            let comps = irreducible_components(&g);
            ok(if json {
                let names: Vec<Vec<String>> = comps.iter().map(|c| g.names_of(c)).collect();
                to_json(&json!({ "components": names }))
            } else {
                format!("{}\n", components_text(&g, &comps))
            })
        }
        Command::Lift { file } => {
            let g = read_graph(file)?;
            let lift = lift_graph(&g);
            ok(if json {
                to_json(&json!({
                    "graph": GraphEcho::of(&lift.lifted),
                    "k": lift.k,
                    "index": OrderValue(crate::classify::GroupOrder::Finite(index_factor(&g))),
                }))
            } else {
                serialize_graph(&lift.lifted)
            })
        }
        Command::Finite { file } => {
            let g = read_graph(file)?;
            let finite = dyer_is_finite(&g);
            ok(if json {
                to_json(&json!({ "finite": finite }))
            } else {
                format!("{finite}\n")
            })
        }
        Command::Order { file } => {
            let g = read_graph(file)?;
            let order = dyer_order(&g)?;
            ok(if json {
                to_json(&json!({ "order": OrderValue(order) }))
            } else {
                format!("{order}\n")
            })
        }
        Command::Centre { file } => {
            let g = read_graph(file)?;
            let centre = dyer_centre(&g);
            ok(if json {
                to_json(&CentreEcho::of(&g, &centre))
            } else {
                format!("{}\n", centre_text(&g, &centre))
            })
        }
        Command::Hyperbolic { file } => {
            let g = read_graph(file)?;
            let h = dyer_is_hyperbolic(&g, options.max_subset_vertices)?;
            ok(if json {
                to_json(&HyperbolicEcho::of(&g, &h))
            } else {
                format!("{}\n", hyperbolicity_text(&g, &h))
            })
        }
        Command::Ah { file } => {
            let g = read_graph(file)?;
            let ah = dyer_is_acyl_hyperbolic(&g);
            ok(if json {
                to_json(&json!({ "acylindrically_hyperbolic": ah }))
            } else {
                format!("{ah}\n")
            })
        }
        Command::Abelian { file } => {
            let g = read_graph(file)?;
            let a = abelianisation(&g);
            ok(if json {
                to_json(&AbelianisationEcho::of(&g, &a))
            } else {
                format!("{} (order {})\n", abelianisation_text(&g, &a), a.order())
            })
        }
        Command::Oracle { query } => oracle(query, max_cosets, json),
        Command::CorpusCheck {
            max_vertices,
            order_cap,
        } => {
            let bounds = CorpusBounds {
                max_vertices: *max_vertices,
                order_cap: *order_cap,
                max_cosets: cli.max_cosets.unwrap_or(DEFAULT_CORPUS_MAX_COSETS),
                max_subset_vertices: cli.max_subset_vertices,
                ..Default::default()
            };
            let summary = corpus_check(&bounds);
            let text = if json {
                let checks: serde_json::Map<String, serde_json::Value> = summary
                    .tallies
                    .iter()
                    .map(|(k, t)| {
                        (
                            k.to_string(),
                            json!({ "passed": t.passed, "failed": t.failed }),
                        )
                    })
                    .collect();
                to_json(&json!({
                    "cases": summary.cases,
                    "finite_cases": summary.finite_cases,
                    "checks": checks,
                    "passed": summary.passed(),
                    "counterexample": summary.first_failure.as_ref().map(|c| json!({
                        "check": c.check,
                        "graph": c.graph,
                        "detail": c.detail,
                    })),
                }))
            } else {
                summary.to_string()
            };
            if summary.passed() {
                ok(text)
            } else {
                Ok((
                    text,
                    (
                        EXIT_CORPUS_FAILURE,
                        Some("classifier and oracle disagree".to_owned()),
                    ),
                ))
            }
        }
    }
}

fn oracle(query: &OracleQuery, max_cosets: usize, json: bool) -> Result<Outcome, Failure> {
    let (name, value) = match query {
        OracleQuery::Order { file } => {
            let g = read_graph(file)?;
            ("order", enumerate_graph(&g, max_cosets)?.len().to_string())
        }
        OracleQuery::Centre { file } => {
            let g = read_graph(file)?;
            let table = enumerate_graph(&g, max_cosets)?;
            ("centre_order", brute_centre_order(&table)?.to_string())
        }
        OracleQuery::Abelian { file } => {
            let g = read_graph(file)?;
            (
                "abelianisation_order",
                brute_abelianisation_order(&g, max_cosets)?.to_string(),
            )
        }
    };
    ok(if json {
        let v: serde_json::Value = value
            .parse::<serde_json::Number>()
            .map(serde_json::Value::Number)
            .unwrap_or(serde_json::Value::String(value.clone()));
        to_json(&json!({ name: v, "status": "complete" }))
    } else {
        format!("{value}\n")
    })
}
