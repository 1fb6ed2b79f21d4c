//! `planarity`: command-line front end for the planarity checks.
//!
//! Every subcommand prints one JSON document on stdout (or an indented text
//! rendering with `--pretty`). Exit codes: 0 when a verdict or report was
//! produced, 2 on input errors, 3 when the input parses but violates a
//! precondition of the requested check.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use planarity::fillhomology::filling_report;
use planarity::grouppres::{badness, compile, parse_presentation};
use planarity::lattice::{EmbeddingSearch, Matrix};
use planarity::obstruct::{
    detect_bad_configuration, enumerate_sphere_classes, etnyre_obstruction, no_minus_one_class, VerdictKind,
};
use planarity::page::Factorization;
use planarity::plumbing::{
    classify_singularity_link, gram_determinant, is_tree_of_spheres, parse_rational, seifert_planarity_check,
    PlumbingGraph,
};
use planarity::{Error, Int, ParseError};

/// Pages and factorizations larger than this are refused before any linear
/// algebra runs; the Smith transforms are quadratic in both.
const MAX_HOLES: usize = 512;
const MAX_CYCLES: usize = 512;

#[derive(Parser)]
#[command(name = "planarity", version, about = "Planarity checks for contact 3-manifolds")]
struct Cli {
    #[command(flatten)]
    output: Output,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Output {
    /// Print JSON (the default).
    #[arg(long, global = true, conflicts_with = "pretty")]
    json: bool,
    /// Print an indented text rendering instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the link of a singularity from its resolution graph.
    CheckGraph {
        /// Graph JSON: {"vertices": [{"genus", "weight"}], "edges": [[u, v]]}.
        path: PathBuf,
        /// Treat the boundary as an L-space (in particular a rational homology sphere).
        #[arg(long)]
        assume_lspace: bool,
    },
    /// Homology, intersection form and sphere classes of a planar fibration.
    CheckFibration {
        /// Factorization JSON: {"holes": n, "cycles": [[0|1, ...], ...]}.
        path: PathBuf,
    },
    /// Check a small Seifert fibered space M(e0; r1, r2, r3).
    Seifert {
        #[arg(long, allow_negative_numbers = true)]
        e0: i64,
        /// Three invariants p/q in (0, 1).
        #[arg(long, num_args = 1.., required = true)]
        r: Vec<String>,
        /// Assert that the manifold is an L-space.
        #[arg(long)]
        lspace: bool,
    },
    /// Compile a group presentation into a planar Lefschetz fibration.
    Compile {
        /// Presentation file `< g1 g2 | w1, w2 >`; stdin when omitted or `-`.
        path: Option<PathBuf>,
        /// Also write the resulting factorization JSON here.
        #[arg(long, value_name = "OUT")]
        emit_fibration: Option<PathBuf>,
    },
    /// Search for an embedding of a negative definite form into a diagonal lattice.
    Embed {
        /// Symmetric integer matrix as JSON rows.
        path: PathBuf,
        /// Number of coordinates to search; at least the sum of |q_ii|.
        #[arg(long)]
        bound: Option<usize>,
    },
}

enum Failure {
    Input(String),
    Precondition(String),
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type CmdResult = Result<Value, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize to JSON")
}

#[derive(Serialize)]
struct Verdict {
    verdict: VerdictKind,
    reasons: Vec<String>,
    witnesses: serde_json::Map<String, Value>,
    caveats: Vec<String>,
}

fn check_graph(path: &Path, assume_lspace: bool) -> CmdResult {
    let g = PlumbingGraph::from_json(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let class = classify_singularity_link(&g).map_err(|e| Failure::Precondition(e.to_string()))?;

    let mut caveats = class.caveats.clone();
    let mut witnesses = serde_json::Map::new();
    witnesses.insert("classification".into(), to_value(&class));

    // both obstructions assume a minimal filling, so they read the blow-down
    // normal form rather than the input graph
    let m = &class.normalized;
    let minimal = !m.vertices().iter().any(|v| v.genus == 0 && v.weight == -1);
    if !minimal {
        caveats.push("configuration and lattice checks skipped: the graph does not blow down to a minimal one".into());
    } else {
        if m.vertices().iter().all(|v| v.weight < 0) {
            let config = m.intersection_graph().ok().and_then(|ig| detect_bad_configuration(&ig));
            witnesses.insert("configuration".into(), to_value(&config));
        } else {
            caveats.push("configuration detector skipped: it needs negative weights".into());
        }
        let qhs3 = is_tree_of_spheres(m) && gram_determinant(m) != Int::from(0);
        if assume_lspace && !qhs3 {
            caveats.push("--assume-lspace ignored: this plumbing does not bound a rational homology sphere".into());
        }
        match etnyre_obstruction(&m.gram(), qhs3) {
            Ok(etnyre) => {
                witnesses.insert("lattice".into(), to_value(&etnyre.to_verdict()));
            }
            Err(e) => caveats.push(format!("lattice check skipped: {e}")),
        }
    }

    Ok(to_value(&Verdict {
        verdict: class.verdict.into(),
        reasons: class.reason.iter().map(ToString::to_string).collect(),
        witnesses,
        caveats,
    }))
}

fn check_fibration(path: &Path) -> CmdResult {
    let f = Factorization::from_json(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    check_size(f.holes(), f.len())?;
    let spheres: Vec<Value> = enumerate_sphere_classes(&f)
        .iter()
        .map(|s| json!({"plus": s.plus, "minus": s.minus, "square": s.square()}))
        .collect();
    let mut report = to_value(&filling_report(&f));
    let extra = json!({
        "sphere_classes": spheres,
        "no_minus_one_class": no_minus_one_class(&f),
    });
    if let (Value::Object(r), Value::Object(e)) = (&mut report, extra) {
        r.extend(e);
    }
    Ok(report)
}

fn check_size(holes: usize, cycles: usize) -> Result<(), Failure> {
    if holes > MAX_HOLES || cycles > MAX_CYCLES {
        return Err(Failure::Input(format!(
            "page with {holes} holes and {cycles} vanishing cycles exceeds the supported {MAX_HOLES} and {MAX_CYCLES}"
        )));
    }
    Ok(())
}

fn seifert(e0: i64, rs: &[String], lspace: bool) -> CmdResult {
    let rs = rs
        .iter()
        .map(|s| parse_rational(s))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Failure::Input(e.to_string()))?;
    let check = seifert_planarity_check(e0, &rs, lspace).map_err(|e| Failure::Input(e.to_string()))?;
    Ok(to_value(&check))
}

fn compile_cmd(path: Option<&Path>, emit: Option<&Path>) -> CmdResult {
    let text = match path {
        Some(p) if p != Path::new("-") => read(p)?,
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    let p = parse_presentation(&text)?;
    // each reduction step adds one generator and one relator
    let steps = usize::try_from(badness(&p).implementation_total).unwrap_or(usize::MAX);
    check_size(
        p.generator_count().saturating_add(steps),
        p.relators().len().saturating_add(steps),
    )?;
    let bundle = compile(&p);
    if let Some(out) = emit {
        let body = serde_json::to_string_pretty(&bundle.factorization.to_json()).expect("JSON value");
        fs::write(out, body + "\n").map_err(|e| Failure::Input(format!("{}: {e}", out.display())))?;
    }
    Ok(to_value(&bundle))
}

fn embed(path: &Path, bound: Option<usize>) -> CmdResult {
    let text = read(path)?;
    let rows: Vec<Vec<i64>> =
        serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {}", path.display(), ParseError::from(e))))?;
    let cols = rows.first().map_or(0, Vec::len);
    let rows: Vec<Vec<Int>> = rows.into_iter().map(|r| r.into_iter().map(Int::from).collect()).collect();
    let q = Matrix::from_rows(rows, cols).map_err(|e| Failure::Input(e.to_string()))?;
    if !q.is_square() {
        return Err(Failure::Input(Error::NotSquare { rows: q.rows(), cols: q.cols() }.to_string()));
    }
    q.check_symmetric().map_err(|e| Failure::Input(e.to_string()))?;
    let mut search = EmbeddingSearch::new();
    if let Some(b) = bound {
        search = search.with_bound(b);
    }
    match search.run(&q) {
        Ok(outcome) => Ok(to_value(&outcome)),
        Err(Error::NotNegativeDefinite) => Err(Failure::Precondition(Error::NotNegativeDefinite.to_string())),
        Err(e) => Err(Failure::Input(e.to_string())),
    }
}

/// Indented text rendering of a JSON value.
fn render(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                if is_inline(x) {
                    out.push_str(&format!("{pad}{k}: {}\n", inline(x)));
                } else {
                    out.push_str(&format!("{pad}{k}:\n"));
                    render(x, indent + 1, out);
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                if is_inline(x) {
                    out.push_str(&format!("{pad}- {}\n", inline(x)));
                } else {
                    out.push_str(&format!("{pad}-\n"));
                    render(x, indent + 1, out);
                }
            }
        }
        scalar => out.push_str(&format!("{pad}{}\n", inline(scalar))),
    }
}

fn is_inline(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|x| !x.is_array() && !x.is_object()),
        Value::Object(map) => map.is_empty(),
        _ => true,
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "none".into(),
        Value::Array(items) => format!("[{}]", items.iter().map(inline).collect::<Vec<_>>().join(", ")),
        Value::Object(_) => "{}".into(),
        other => other.to_string(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::CheckGraph { path, assume_lspace } => check_graph(path, *assume_lspace),
        Command::CheckFibration { path } => check_fibration(path),
        Command::Seifert { e0, r, lspace } => seifert(*e0, r, *lspace),
        Command::Compile { path, emit_fibration } => compile_cmd(path.as_deref(), emit_fibration.as_deref()),
        Command::Embed { path, bound } => embed(path, *bound),
    };
    match result {
        Ok(value) => {
            let text = if cli.output.pretty {
                let mut out = String::new();
                render(&value, 0, &mut out);
                out
            } else {
                serde_json::to_string(&value).expect("JSON value") + "\n"
            };
            match io::stdout().lock().write_all(text.as_bytes()) {
                Err(e) if e.kind() != io::ErrorKind::BrokenPipe => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
                _ => ExitCode::SUCCESS,
            }
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Precondition(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
