//! Command-line workbench for finite quantum-logic hypergraphs: state
//! enumeration, pseudocontext certification, vector labelings, and the
//! analytic construction curves, with the study fixtures embedded.
//!
//! Exit codes are a stable contract: 0 success, 1 negative mathematical
//! verdict (no certificate, failed verification, degenerate angle), 2 input
//! error (unreadable or invalid input, bad flags, fixture mismatch).

mod report;

use std::borrow::Cow;
use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::OnceLock;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use pseudoctx_core::fixtures;
use pseudoctx_core::geometry::{
    alpha_max, aperture_of_alpha, beta_of_alpha, construct_combo_for, construct_small_for,
    eigen_sym3, find_degenerate_alpha, infer_hypergraph_from_labels, pairwise_overlaps,
    parse_vectors, parse_vectors_json, projector_sum, quantum_bounds, verify_for, ConstructError,
    VectorLabeling, ORTH_EPS_DEFAULT,
};
use pseudoctx_core::hypergraph::{parse_hypergraph, parse_hypergraph_json, Hypergraph};
use pseudoctx_core::numfmt::fmt17;
use pseudoctx_core::pseudo::{
    classical_bounds, find_coverings, find_pseudocontext_pairs, verify_pseudocontext_pair,
};
use pseudoctx_core::states::{
    edges_from_partition, enumerate_two_valued_states, is_separating, partition_representation,
    Separation,
};
use pseudoctx_core::VertexId;
use report::Report;

#[derive(Parser)]
#[command(name = "pseudoctx", version, about = "Workbench for quantum-logic hypergraphs")]
struct Cli {
    /// Emit a JSON report instead of the human summary
    #[arg(long, global = true)]
    json: bool,
    /// Print wall-clock timing to stderr
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the two-valued states of a graph
    States {
        /// Graph file or fixture name
        graph: String,
        /// Print every state as a bit string
        #[arg(long)]
        dump: bool,
        /// Add the separation verdict
        #[arg(long)]
        separating: bool,
        /// Print the per-vertex state-index sets
        #[arg(long)]
        partition: bool,
    },
    /// List or certify pseudocontext pairs
    Pseudo {
        /// Graph file or fixture name
        graph: String,
        /// Size of the sets to search for when no pair is given
        #[arg(long, default_value_t = 3)]
        k: usize,
        /// Certify one pair, e.g. --pair 1,6,11 5,10,15
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        pair: Option<Vec<String>>,
        /// Also list the edge coverings excluding each set
        #[arg(long, requires = "pair")]
        coverings: bool,
        /// Also print the classical bounds over the two-valued states
        #[arg(long, requires = "pair")]
        bounds: bool,
        /// Cap on the number of coverings listed per set
        #[arg(long, default_value_t = 100)]
        max_coverings: usize,
    },
    /// Construct, verify, infer from, or bound vector labelings
    For {
        #[command(subcommand)]
        action: ForAction,
    },
    /// Tabulate the analytic construction curves
    Table {
        #[command(subcommand)]
        what: TableWhat,
    },
}

#[derive(Subcommand)]
enum ForAction {
    /// Build the analytic labeling for a given opening angle
    Construct {
        #[arg(long, value_enum)]
        variant: Variant,
        /// Opening angle in radians
        #[arg(long)]
        alpha: f64,
        /// Also write the vectors to a JSON file
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a labeling against a graph's orthogonality constraints
    Verify {
        /// Vector file or fixture name
        vectors: String,
        /// Graph file or fixture name (defaults to the fixture's own graph)
        #[arg(long)]
        graph: Option<String>,
        /// Orthogonality tolerance (default from PSEUDOCTX_EPS or 1e-10)
        #[arg(long)]
        eps: Option<f64>,
    },
    /// Recover the hypergraph whose edges are the orthogonal triples
    Infer {
        /// Vector file or fixture name
        vectors: String,
        /// Orthogonality tolerance (default from PSEUDOCTX_EPS or 1e-10)
        #[arg(long)]
        eps: Option<f64>,
    },
    /// Projector sum, eigenvalues, quantum interval, and overlaps of a set
    Bounds {
        /// Vector file or fixture name
        vectors: String,
        /// Vertex set, e.g. --set 4,16,28
        #[arg(long)]
        set: String,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Variant {
    Small,
    Combo,
}

impl Variant {
    fn name(self) -> &'static str {
        match self {
            Variant::Small => "small",
            Variant::Combo => "combo",
        }
    }
}

#[derive(Subcommand)]
enum TableWhat {
    /// CSV of (alpha, beta, aperture) over the valid domain
    BetaCurve {
        /// Number of sampling intervals (emits steps+1 rows)
        #[arg(long, default_value_t = 256, value_parser = clap::value_parser!(u32).range(1..))]
        steps: u32,
    },
    /// The angle at which the construction degenerates by an extra orthogonality
    Alpha0,
}

struct CliError(String);

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl CliError {
    fn msg(m: impl Into<String>) -> Self {
        CliError(m.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let code = match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    };
    if cli.timings {
        eprintln!("elapsed: {:.3} ms", started.elapsed().as_secs_f64() * 1e3);
    }
    ExitCode::from(code)
}

fn run(cli: &Cli) -> Result<u8, CliError> {
    match &cli.command {
        Command::States { graph, dump, separating, partition } => {
            cmd_states(cli.json, graph, *dump, *separating, *partition)
        }
        Command::Pseudo { graph, k, pair, coverings, bounds, max_coverings } => {
            cmd_pseudo(cli.json, graph, *k, pair.as_deref(), *coverings, *bounds, *max_coverings)
        }
        Command::For { action } => match action {
            ForAction::Construct { variant, alpha, out } => {
                cmd_construct(cli.json, *variant, *alpha, out.as_deref())
            }
            ForAction::Verify { vectors, graph, eps } => {
                cmd_verify(cli.json, vectors, graph.as_deref(), *eps)
            }
            ForAction::Infer { vectors, eps } => cmd_infer(cli.json, vectors, *eps),
            ForAction::Bounds { vectors, set } => cmd_bounds(cli.json, vectors, set),
        },
        Command::Table { what } => match what {
            TableWhat::BetaCurve { steps } => cmd_beta_curve(cli.json, *steps),
            TableWhat::Alpha0 => cmd_alpha0(cli.json),
        },
    }
}

// ---------------------------------------------------------------------------
// Input resolution
// ---------------------------------------------------------------------------

/// Cross-check the embedded fixtures once before any of them is served.
fn ensure_fixtures() -> Result<(), CliError> {
    static CHECK: OnceLock<Result<(), String>> = OnceLock::new();
    CHECK
        .get_or_init(fixtures::cross_check)
        .clone()
        .map_err(|m| CliError::msg(format!("fixture cross-check failed: {m}")))
}

fn resolve_graph(spec: &str) -> Result<Cow<'static, Hypergraph>, CliError> {
    match spec {
        "small-graph" => {
            ensure_fixtures()?;
            Ok(Cow::Borrowed(fixtures::small_graph()))
        }
        "combo-graph" => {
            ensure_fixtures()?;
            Ok(Cow::Borrowed(fixtures::combo_graph()))
        }
        "small-partition" | "combo-partition" => {
            ensure_fixtures()?;
            let p = if spec == "small-partition" {
                fixtures::small_partition()
            } else {
                fixtures::combo_partition()
            };
            let h = Hypergraph::validated(p.n_vertices(), edges_from_partition(p))
                .map_err(|d| CliError::msg(format!("{spec} does not induce a valid graph: {d:?}")))?;
            Ok(Cow::Owned(h))
        }
        path => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::msg(format!("cannot read {path}: {e}")))?;
            let h = if text.trim_start().starts_with('{') {
                parse_hypergraph_json(&text).map_err(|e| CliError::msg(format!("{path}: {e}")))?
            } else {
                parse_hypergraph(&text).map_err(|e| CliError::msg(format!("{path}: {e}")))?
            };
            Ok(Cow::Owned(h))
        }
    }
}

fn resolve_vectors(spec: &str) -> Result<Cow<'static, VectorLabeling>, CliError> {
    match spec {
        "small-for-heuristic" => {
            ensure_fixtures()?;
            Ok(Cow::Borrowed(fixtures::small_for_heuristic()))
        }
        "combo-for-alpha-pi3" => {
            ensure_fixtures()?;
            Ok(Cow::Borrowed(fixtures::combo_for_alpha_pi3()))
        }
        "combo-for-alpha-pi2" => {
            ensure_fixtures()?;
            Ok(Cow::Borrowed(fixtures::combo_for_alpha_pi2()))
        }
        path => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::msg(format!("cannot read {path}: {e}")))?;
            let l = if text.trim_start().starts_with('{') {
                parse_vectors_json(&text).map_err(|e| CliError::msg(format!("{path}: {e}")))?
            } else {
                parse_vectors(&text).map_err(|e| CliError::msg(format!("{path}: {e}")))?
            };
            Ok(Cow::Owned(l))
        }
    }
}

/// The graph a vector fixture labels, for `verify` without `--graph`.
fn graph_of_vector_fixture(spec: &str) -> Option<&'static str> {
    match spec {
        "small-for-heuristic" => Some("small-graph"),
        "combo-for-alpha-pi3" | "combo-for-alpha-pi2" => Some("combo-graph"),
        _ => None,
    }
}

fn orth_eps(flag: Option<f64>) -> Result<f64, CliError> {
    let eps = match flag {
        Some(e) => e,
        None => match std::env::var("PSEUDOCTX_EPS") {
            Ok(s) => s
                .trim()
                .parse()
                .map_err(|_| CliError::msg(format!("PSEUDOCTX_EPS is not a number: {s:?}")))?,
            Err(_) => ORTH_EPS_DEFAULT,
        },
    };
    if !(0.0..1.0).contains(&eps) {
        return Err(CliError::msg(format!("tolerance must lie in [0, 1), got {eps}")));
    }
    Ok(eps)
}

fn parse_vertex_list(s: &str) -> Result<Vec<VertexId>, CliError> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| CliError::msg(format!("not a vertex number: {:?}", t.trim())))
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Output helpers
// ---------------------------------------------------------------------------

fn emit(json: bool, report: Report, human: String) {
    if json {
        println!("{}", report.to_json_line());
    } else {
        print!("{human}");
    }
}

fn set_text(set: &[VertexId]) -> String {
    let items: Vec<String> = set.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn edge_values(h: &Hypergraph) -> Value {
    Value::Array(h.edges().iter().map(|e| json!(e.members())).collect())
}

// ---------------------------------------------------------------------------
// states
// ---------------------------------------------------------------------------

fn cmd_states(
    json: bool,
    graph: &str,
    dump: bool,
    separating: bool,
    partition: bool,
) -> Result<u8, CliError> {
    let h = resolve_graph(graph)?;
    let s = enumerate_two_valued_states(&h);

    let mut human = format!("{}\n", s.len());
    let mut results = serde_json::Map::new();
    results.insert("count".into(), json!(s.len()));

    if dump {
        human.push_str(&s.to_lines());
        let states: Vec<String> = s.states().iter().map(|st| st.to_string()).collect();
        results.insert("states".into(), json!(states));
    }
    if separating {
        match is_separating(&s, &h) {
            Separation::Separating => {
                human.push_str("separating: yes\n");
                results.insert("separating".into(), json!(true));
                results.insert("unseparated_pair".into(), Value::Null);
            }
            Separation::Unseparated(u, v) => {
                human.push_str(&format!("separating: no ({u}, {v})\n"));
                results.insert("separating".into(), json!(false));
                results.insert("unseparated_pair".into(), json!([u, v]));
            }
        }
    }
    if partition {
        if s.is_empty() {
            human.push_str("partition: none (no states)\n");
            results.insert("partition".into(), Value::Null);
        } else {
            let p = partition_representation(&s).expect("state set is non-empty");
            let mut sets = Vec::new();
            for v in 1..=p.n_vertices() {
                let indices = p.set(v);
                let items: Vec<String> = indices.iter().map(|i| i.to_string()).collect();
                human.push_str(&format!("{v}: {}\n", items.join(" ")));
                sets.push(json!(indices));
            }
            results.insert("partition".into(), Value::Array(sets));
        }
    }

    let report = Report {
        command: "states",
        inputs: json!({
            "graph": graph,
            "dump": dump,
            "separating": separating,
            "partition": partition,
        }),
        results: Value::Object(results),
    };
    emit(json, report, human);
    Ok(0)
}

// ---------------------------------------------------------------------------
// pseudo
// ---------------------------------------------------------------------------

fn cmd_pseudo(
    json: bool,
    graph: &str,
    k: usize,
    pair: Option<&[String]>,
    coverings: bool,
    bounds: bool,
    max_coverings: usize,
) -> Result<u8, CliError> {
    let h = resolve_graph(graph)?;

    let Some(pair) = pair else {
        // listing mode: all certified pairs of the requested size
        if k < 2 {
            return Err(CliError::msg("--k must be at least 2"));
        }
        let pairs = find_pseudocontext_pairs(&h, k);
        let mut human = format!("certified pairs of size {k}: {}\n", pairs.len());
        let mut values = Vec::new();
        for (a, b) in &pairs {
            human.push_str(&format!("{} ~ {}\n", set_text(a), set_text(b)));
            values.push(json!([a, b]));
        }
        let report = Report {
            command: "pseudo",
            inputs: json!({
                "graph": graph, "k": k, "pair": Value::Null,
                "coverings": coverings, "bounds": bounds, "max_coverings": max_coverings,
            }),
            results: json!({ "k": k, "pairs": values }),
        };
        emit(json, report, human);
        return Ok(0);
    };

    let a = parse_vertex_list(&pair[0])?;
    let b = parse_vertex_list(&pair[1])?;
    let inputs = json!({
        "graph": graph, "k": k, "pair": [a, b],
        "coverings": coverings, "bounds": bounds, "max_coverings": max_coverings,
    });

    let cert = verify_pseudocontext_pair(&h, &a, &b).map_err(|e| CliError::msg(e.to_string()))?;
    let Some(cert) = cert else {
        let report = Report {
            command: "pseudo",
            inputs,
            results: json!({ "certificate": Value::Null }),
        };
        emit(json, report, "no certificate\n".to_string());
        return Ok(1);
    };

    let mut human = String::from("certified: yes\n");
    for (e, l) in cert.lambda() {
        let coeff = l.to_string();
        if coeff != "0" {
            let [u, v, w] = e.members();
            human.push_str(&format!("  lambda[{u},{v},{w}] = {coeff}\n"));
        }
    }
    let mut results = serde_json::Map::new();
    results.insert(
        "certificate".into(),
        serde_json::from_str(&cert.to_json_string()).expect("certificate JSON is valid"),
    );

    if coverings {
        let mut value = serde_json::Map::new();
        for (label, key, set) in [("A", "excluding_a", &a), ("B", "excluding_b", &b)] {
            let found = find_coverings(&h, set).map_err(|e| CliError::msg(e.to_string()))?;
            human.push_str(&format!("coverings excluding {label} = {}: {}\n", set_text(set), found.len()));
            if found.len() > max_coverings {
                human.push_str(&format!("  (showing first {max_coverings})\n"));
            }
            let mut listed = Vec::new();
            for c in found.iter().take(max_coverings) {
                let edges: Vec<String> = c
                    .edges()
                    .iter()
                    .map(|e| {
                        let [u, v, w] = e.members();
                        format!("[{u},{v},{w}]")
                    })
                    .collect();
                human.push_str(&format!("  {}\n", edges.join(" ")));
                listed.push(Value::Array(
                    c.edges().iter().map(|e| json!(e.members())).collect(),
                ));
            }
            value.insert(key.into(), json!({ "total": found.len(), "coverings": listed }));
        }
        results.insert("coverings".into(), Value::Object(value));
    }

    if bounds {
        let s = enumerate_two_valued_states(&h);
        let cb = classical_bounds(&s, &a).map_err(|e| CliError::msg(e.to_string()))?;
        human.push_str(&format!("classical bounds: [{}, {}]\n", cb.lo, cb.hi));
        results.insert("classical_bounds".into(), json!([cb.lo, cb.hi]));
    }

    let report = Report { command: "pseudo", inputs, results: Value::Object(results) };
    emit(json, report, human);
    Ok(0)
}

// ---------------------------------------------------------------------------
// for
// ---------------------------------------------------------------------------

fn cmd_construct(
    json: bool,
    variant: Variant,
    alpha: f64,
    out: Option<&std::path::Path>,
) -> Result<u8, CliError> {
    let inputs = json!({
        "variant": variant.name(),
        "alpha": alpha,
        "out": out.map(|p| p.display().to_string()),
    });
    let built = match variant {
        Variant::Small => construct_small_for(alpha),
        Variant::Combo => construct_combo_for(alpha),
    };
    let labeling = match built {
        Ok(l) => l,
        Err(ConstructError::Degenerate(d)) => {
            let report = Report {
                command: "for-construct",
                inputs,
                results: json!({ "alpha": alpha, "degenerate": d.to_string() }),
            };
            emit(json, report, format!("degenerate: {d}\n"));
            return Ok(1);
        }
        Err(e @ ConstructError::OutOfDomain { .. }) => {
            return Err(CliError::msg(e.to_string()));
        }
    };

    // the rotation and aperture angles exist only on the combo domain
    let beta = beta_of_alpha(alpha).ok();
    let aperture = aperture_of_alpha(alpha).ok();

    let mut human = format!("alpha = {}\n", fmt17(alpha));
    if let Some(b) = beta {
        human.push_str(&format!("beta = {}\n", fmt17(b)));
    }
    if let Some(a) = aperture {
        human.push_str(&format!("aperture = {}\n", fmt17(a)));
    }
    human.push_str(&labeling.to_text());

    if let Some(path) = out {
        fs::write(path, labeling.to_json_string() + "\n")
            .map_err(|e| CliError::msg(format!("cannot write {}: {e}", path.display())))?;
    }

    let report = Report {
        command: "for-construct",
        inputs,
        results: json!({
            "alpha": alpha,
            "beta": beta,
            "aperture": aperture,
            "vectors": labeling.vectors(),
        }),
    };
    emit(json, report, human);
    Ok(0)
}

fn cmd_verify(
    json: bool,
    vectors: &str,
    graph: Option<&str>,
    eps_flag: Option<f64>,
) -> Result<u8, CliError> {
    let eps = orth_eps(eps_flag)?;
    let l = resolve_vectors(vectors)?;
    let graph_spec = match graph.or_else(|| graph_of_vector_fixture(vectors)) {
        Some(g) => g,
        None => return Err(CliError::msg("--graph is required for vector files")),
    };
    let h = resolve_graph(graph_spec)?;
    let r = verify_for(&h, &l, eps).map_err(|e| CliError::msg(e.to_string()))?;

    let mut human = format!("faithful: {}\n", if r.is_clean() { "yes" } else { "no" });
    for (u, v) in &r.missing {
        human.push_str(&format!("missing orthogonality: ({u}, {v})\n"));
    }
    for (u, v) in &r.extra {
        human.push_str(&format!("extra orthogonality: ({u}, {v})\n"));
    }
    for (u, v) in &r.duplicates {
        human.push_str(&format!("duplicate labels: ({u}, {v})\n"));
    }

    let clean = r.is_clean();
    let report = Report {
        command: "for-verify",
        inputs: json!({ "vectors": vectors, "graph": graph_spec, "eps": eps }),
        results: json!({
            "clean": clean,
            "missing": r.missing,
            "extra": r.extra,
            "duplicates": r.duplicates,
        }),
    };
    emit(json, report, human);
    Ok(if clean { 0 } else { 1 })
}

fn cmd_infer(json: bool, vectors: &str, eps_flag: Option<f64>) -> Result<u8, CliError> {
    let eps = orth_eps(eps_flag)?;
    let l = resolve_vectors(vectors)?;
    let inputs = json!({ "vectors": vectors, "eps": eps });

    match infer_hypergraph_from_labels(&l, eps) {
        Ok(h) => {
            let human = h.to_text();
            let report = Report {
                command: "for-infer",
                inputs,
                results: json!({ "n": h.n(), "edges": edge_values(&h) }),
            };
            emit(json, report, human);
            Ok(0)
        }
        Err(e) => {
            let report = Report {
                command: "for-infer",
                inputs,
                results: json!({ "error": e.to_string() }),
            };
            emit(json, report, format!("not a faithful labeling: {e}\n"));
            Ok(1)
        }
    }
}

fn cmd_bounds(json: bool, vectors: &str, set: &str) -> Result<u8, CliError> {
    let l = resolve_vectors(vectors)?;
    let subset = parse_vertex_list(set)?;

    let m = projector_sum(&l, &subset).map_err(|e| CliError::msg(e.to_string()))?;
    let d = eigen_sym3(&m);
    let (lo, hi) = quantum_bounds(&l, &subset).map_err(|e| CliError::msg(e.to_string()))?;
    let overlaps = pairwise_overlaps(&l, &subset).map_err(|e| CliError::msg(e.to_string()))?;

    let rows = m.to_rows();
    let mut human = String::from("projector sum:\n");
    for row in &rows {
        human.push_str(&format!("  {} {} {}\n", fmt17(row[0]), fmt17(row[1]), fmt17(row[2])));
    }
    let eigs: Vec<String> = d.eigenvalues.iter().map(|&x| fmt17(x)).collect();
    human.push_str(&format!("eigenvalues: {}\n", eigs.join(" ")));
    human.push_str(&format!("interval: [{}, {}]\n", fmt17(lo), fmt17(hi)));
    let ovs: Vec<String> = overlaps.iter().map(|&x| fmt17(x)).collect();
    human.push_str(&format!("overlaps: {}\n", ovs.join(" ")));

    let report = Report {
        command: "for-bounds",
        inputs: json!({ "vectors": vectors, "set": subset }),
        results: json!({
            "projector_sum": rows,
            "eigenvalues": d.eigenvalues,
            "interval": [lo, hi],
            "overlaps": overlaps,
        }),
    };
    emit(json, report, human);
    Ok(0)
}

// ---------------------------------------------------------------------------
// table
// ---------------------------------------------------------------------------

fn cmd_beta_curve(json: bool, steps: u32) -> Result<u8, CliError> {
    let hi = alpha_max();
    let mut human = String::from("alpha,beta,aperture\n");
    let mut rows = Vec::new();
    for i in 0..=steps {
        let alpha = hi * f64::from(i) / f64::from(steps);
        let beta = beta_of_alpha(alpha).map_err(|e| CliError::msg(e.to_string()))?;
        let aperture = aperture_of_alpha(alpha).map_err(|e| CliError::msg(e.to_string()))?;
        human.push_str(&format!("{},{},{}\n", fmt17(alpha), fmt17(beta), fmt17(aperture)));
        rows.push(json!([alpha, beta, aperture]));
    }
    let report = Report {
        command: "table-beta-curve",
        inputs: json!({ "steps": steps }),
        results: json!({ "rows": rows, "steps": steps }),
    };
    emit(json, report, human);
    Ok(0)
}

fn cmd_alpha0(json: bool) -> Result<u8, CliError> {
    let a0 = find_degenerate_alpha();
    let report = Report {
        command: "table-alpha0",
        inputs: json!({}),
        results: json!({ "alpha0": a0 }),
    };
    emit(json, report, format!("{}\n", fmt17(a0)));
    Ok(0)
}
