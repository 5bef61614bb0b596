//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits non-zero
//! if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use dyer::catalog::{centre_facts, finite_order, DiagramType, FiniteType};
use dyer::classify::{dyer_is_acyl_hyperbolic, dyer_is_finite, dyer_is_hyperbolic, Witness};
use dyer::corpus::{checks, corpus_check, generate, CorpusBounds, CorpusSummary};
use dyer::graph::{parse_graph, serialize_graph, DyerGraph};
use dyer::oracle::{brute_centre_order, brute_order, enumerate_graph, DEFAULT_MAX_COSETS};
use num_bigint::BigUint;

const CATALOG_TIME_LIMIT: Duration = Duration::from_secs(60);
const SMALL_CORPUS_VERTICES: usize = 3;

struct Verdict {
    passed: bool,
    detail: String,
}

impl Verdict {
    fn new(passed: bool, detail: impl Into<String>) -> Self {
        Verdict {
            passed,
            detail: detail.into(),
        }
    }
}

fn graph(text: &str) -> DyerGraph {
    parse_graph(text).expect("fixture parses")
}

fn type_graph(t: FiniteType) -> DyerGraph {
    t.diagram().expect("valid type").to_graph()
}

fn catalog_soundness() -> Verdict {
    let mut types = vec![
        FiniteType::A(1),
        FiniteType::A(2),
        FiniteType::A(3),
        FiniteType::A(4),
        FiniteType::B(2),
        FiniteType::B(3),
        FiniteType::B(4),
        FiniteType::D(4),
        FiniteType::F4,
        FiniteType::H3,
        FiniteType::H4,
    ];
    types.extend((3..=8).map(FiniteType::I2));
    let start = Instant::now();
    let mut mismatches = Vec::new();
    for &t in &types {
        let expected = finite_order(&DiagramType::Finite(t)).expect("finite");
        match brute_order(&type_graph(t), DEFAULT_MAX_COSETS) {
            Ok(n) if BigUint::from(n) == expected => {}
            other => mismatches.push(format!("{t}: catalog {expected}, oracle {other:?}")),
        }
    }
    let elapsed = start.elapsed();
    Verdict::new(
        mismatches.is_empty() && elapsed <= CATALOG_TIME_LIMIT,
        format!(
            "{} types, {} mismatches, {:.2}s (limit {}s){}",
            types.len(),
            mismatches.len(),
            elapsed.as_secs_f64(),
            CATALOG_TIME_LIMIT.as_secs(),
            first(&mismatches)
        ),
    )
}

fn centre_reproduction() -> Verdict {
    let cases = [
        (FiniteType::B(2), 2),
        (FiniteType::B(3), 2),
        (FiniteType::I2(4), 2),
        (FiniteType::I2(6), 2),
        (FiniteType::I2(8), 2),
        (FiniteType::H3, 2),
        (FiniteType::D(4), 2),
        (FiniteType::A(2), 1),
        (FiniteType::A(3), 1),
        (FiniteType::A(4), 1),
        (FiniteType::I2(3), 1),
        (FiniteType::I2(5), 1),
        (FiniteType::I2(7), 1),
        (FiniteType::D(5), 1),
    ];
    let mut mismatches = Vec::new();
    for (t, expected) in cases {
        let facts = centre_facts(&DiagramType::Finite(t)).expect("finite");
        let structural = if facts.has_central_longest_element { 2 } else { 1 };
        let brute = enumerate_graph(&type_graph(t), DEFAULT_MAX_COSETS)
            .and_then(|table| brute_centre_order(&table));
        if structural != expected || brute.as_ref().ok() != Some(&expected) {
            mismatches.push(format!(
                "{t}: expected {expected}, structural {structural}, oracle {brute:?}"
            ));
        }
    }
    Verdict::new(
        mismatches.is_empty(),
        format!("{} types, {} mismatches{}", cases.len(), mismatches.len(), first(&mismatches)),
    )
}

fn tallied(summary: &CorpusSummary, names: &[&str]) -> Verdict {
    let mut passed = 0;
    let mut failed = 0;
    for name in names {
        let t = summary.tally(name);
        passed += t.passed;
        failed += t.failed;
    }
    let counterexample = summary
        .first_failure
        .as_ref()
        .filter(|c| names.contains(&c.check))
        .map(|c| format!("; first: {} on\n{}", c.detail, c.graph))
        .unwrap_or_default();
    Verdict::new(
        failed == 0 && passed > 0,
        format!(
            "{passed} checks passed, {failed} failed over {} graphs{counterexample}",
            summary.cases
        ),
    )
}

fn hyperbolicity_spot_values() -> Verdict {
    let cases: [(&str, &str, bool, Option<&str>); 5] = [
        (
            "~A2",
            "vertex a 2\nvertex b 2\nvertex c 2\nedge a b 3\nedge b c 3\nedge a c 3\n",
            false,
            Some("affine"),
        ),
        (
            "Z^2",
            "vertex a inf\nvertex b inf\nedge a b 2\n",
            false,
            Some("product"),
        ),
        ("F2", "vertex a inf\nvertex b inf\n", true, None),
        ("infinite dihedral", "vertex a 2\nvertex b 2\n", true, None),
        (
            "~C2",
            "vertex a 2\nvertex b 2\nvertex c 2\nedge a b 4\nedge b c 4\nedge a c 2\n",
            false,
            Some("affine"),
        ),
    ];
    let mut mismatches = Vec::new();
    for (name, text, expected, witness) in cases {
        let h = dyer_is_hyperbolic(&graph(text), 20).expect("within cap");
        let kind = h.witness.as_ref().map(|w| match w {
            Witness::Affine { .. } => "affine",
            Witness::Product { .. } => "product",
        });
        if h.hyperbolic != expected || kind != witness {
            mismatches.push(format!("{name}: hyperbolic {}, witness {kind:?}", h.hyperbolic));
        }
    }
    Verdict::new(
        mismatches.is_empty(),
        format!("{} graphs, {} mismatches{}", cases.len(), mismatches.len(), first(&mismatches)),
    )
}

fn acylindrical_spot_values(summary: &CorpusSummary) -> Verdict {
    let cases = [
        ("F2", "vertex a inf\nvertex b inf\n", true),
        ("Z", "vertex a inf\n", false),
        ("~I1", "vertex a 2\nvertex b 2\n", false),
        (
            "~A2",
            "vertex a 2\nvertex b 2\nvertex c 2\nedge a b 3\nedge b c 3\nedge a c 3\n",
            false,
        ),
    ];
    let mut mismatches: Vec<String> = cases
        .iter()
        .filter(|(_, text, expected)| dyer_is_acyl_hyperbolic(&graph(text)) != *expected)
        .map(|(name, _, expected)| format!("{name}: expected {expected}"))
        .collect();
    let finite_graphs: Vec<DyerGraph> = generate(&CorpusBounds::default())
        .into_iter()
        .filter(dyer_is_finite)
        .collect();
    mismatches.extend(
        finite_graphs
            .iter()
            .filter(|g| dyer_is_acyl_hyperbolic(g))
            .map(|g| format!("finite graph reported AH:\n{}", serialize_graph(g))),
    );
    let cross = tallied(summary, &[checks::HYPERBOLIC_IMPLIES_AH]);
    Verdict::new(
        mismatches.is_empty() && cross.passed,
        format!(
            "{} spot values, {} finite graphs, {} mismatches; hyperbolic implies AH: {}{}",
            cases.len(),
            finite_graphs.len(),
            mismatches.len(),
            cross.detail,
            first(&mismatches)
        ),
    )
}

fn determinism() -> Verdict {
    let graphs = generate(&CorpusBounds::default());
    let dir = tempfile::tempdir().expect("temp dir");
    let path = dir.path().join("g.dyer");
    let mut differing = Vec::new();
    let mut failures = Vec::new();
    for g in &graphs {
        let text = serialize_graph(g);
        std::fs::write(&path, &text).expect("write graph");
        let args = ["dyer", "analyze", path.to_str().expect("utf-8 path"), "--json"];
        let run = || {
            let mut out = Vec::new();
            let mut err = Vec::new();
            let code = dyer::cli::run(args, &mut out, &mut err);
            (code, out)
        };
        let (c1, o1) = run();
        let (c2, o2) = run();
        if c1 != 0 || c2 != 0 {
            failures.push(text);
        } else if o1 != o2 {
            differing.push(text);
        }
    }
    Verdict::new(
        differing.is_empty() && failures.is_empty(),
        format!(
            "{} graphs, {} differing, {} failed{}{}",
            graphs.len(),
            differing.len(),
            failures.len(),
            first(&differing),
            first(&failures)
        ),
    )
}

fn first(items: &[String]) -> String {
    items
        .first()
        .map(|s| format!("; first: {s}"))
        .unwrap_or_default()
}

fn main() -> ExitCode {
    let small = corpus_check(&CorpusBounds {
        max_vertices: SMALL_CORPUS_VERTICES,
        ..CorpusBounds::default()
    });
    let full = corpus_check(&CorpusBounds::default());

    let criteria: Vec<(&str, Verdict)> = vec![
        ("catalog soundness", catalog_soundness()),
        ("centre of irreducible finite Coxeter groups", centre_reproduction()),
        (
            "centre over corpus (<= 3 vertices)",
            tallied(&small, &[checks::CENTRE, checks::CENTRE_TRIVIAL_MIXED]),
        ),
        ("index of group in its lift", tallied(&full, &[checks::INDEX_IDENTITY])),
        ("component lifting", tallied(&full, &[checks::COMPONENT_LIFTING])),
        ("hyperbolicity spot values", hyperbolicity_spot_values()),
        ("acylindrical hyperbolicity", acylindrical_spot_values(&full)),
        ("abelianisation", tallied(&full, &[checks::ABELIANISATION])),
        ("determinism of analyze --json", determinism()),
    ];

    let mut all = true;
    for (i, (name, verdict)) in criteria.iter().enumerate() {
        all &= verdict.passed;
        let status = if verdict.passed { "PASS" } else { "FAIL" };
        println!("{status} [{}] {name}: {}", i + 1, verdict.detail);
    }
    println!(
        "acceptance: {}/{} criteria passed",
        criteria.iter().filter(|(_, v)| v.passed).count(),
        criteria.len()
    );
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
