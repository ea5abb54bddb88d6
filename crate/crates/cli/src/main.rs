//! `sgm`: file-driven front end for the matroid toolkit. Matroid verbs take
//! either a matrix file (`#labels` line, dimensions, 0/1 rows) or a graph
//! file (`label: link u v` lines); a graph file stands for its bond matroid,
//! matching the cographic setting the recognizer lives in.

use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use sgm_core::catalog;
use sgm_core::matroid::{
    apply_minor, connectivity, has_minor, is_isomorphic, Connectivity,
    MinorWitness,
};
use sgm_core::negami::{
    derivation, negami_closure, verify_family_theorems, ExtensionStep,
};
use sgm_core::recognize::{
    cocircuit_audit, cocircuit_ledger, decompose, graphic_obstruction,
    realize_graph, recognize_cographic, LedgerEntry, RecognizeOptions,
};
use sgm_core::{BinaryMatroid, Multigraph, SignedGraph};

#[derive(Parser)]
#[command(name = "sgm", version)]
#[command(about = "Binary matroid toolkit: circuits, minors, decomposition, \
                   and the signed-graphic recognizer for cographic matroids")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Ground-set ceiling for the exhaustive searches
    #[arg(long, global = true, default_value_t = sgm_core::DEFAULT_ELEMENT_BOUND)]
    bound: usize,

    /// Print elapsed wall time to stderr
    #[arg(long, global = true)]
    timings: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Rank of the matroid
    Rank { file: PathBuf },
    /// All circuits, one per line, in canonical order
    Circuits { file: PathBuf },
    /// All cocircuits, one per line, in canonical order
    Cocircuits { file: PathBuf },
    /// Standard representation of the dual matroid
    Dual { file: PathBuf },
    /// Does the first matroid have a minor isomorphic to the second?
    MinorTest { host: PathBuf, target: PathBuf },
    /// Tutte connectivity
    Connectivity { file: PathBuf },
    /// Graphicness via the four excluded minors, with a witness
    GraphicTest { file: PathBuf },
    /// Per-cocircuit ledger: graphicness of every cocircuit deletion
    CocircuitAudit { file: PathBuf },
    /// Split into 3-connected pieces along 1- and 2-separations
    Decompose { file: PathBuf },
    /// Build a graph whose cycle matroid is the input
    Realize { file: PathBuf },
    /// Decide whether a cographic matroid with graphic cocircuits is
    /// signed-graphic
    Recognize {
        file: PathBuf,
        /// Verify cographicness and the cocircuit condition first (slow)
        #[arg(long)]
        check_preconditions: bool,
    },
    /// Export a named instance, or list the names
    Catalog {
        name: Option<String>,
        #[arg(long)]
        list: bool,
    },
    /// Closure of a seed graph under edge addition and vertex splitting
    NegamiClosure {
        /// Catalog graph name or graph file path
        seed: String,
        #[arg(long)]
        max_edges: usize,
        /// Write member-NNN.graph files and manifest.json here
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Built-in verification harnesses (exit 1 on FAIL)
    #[command(subcommand)]
    Verify(Harness),
}

#[derive(Subcommand)]
enum Harness {
    /// Every cocircuit deletion of M*(K35) and M*(K44-e) is graphic
    CocircuitDeletions,
    /// R15* and R16* each have a cocircuit whose deletion is non-graphic
    Counterexamples,
    /// The two graph families are exactly the closure members passing the
    /// circle-contraction test
    Families {
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long, default_value_t = 17)]
        max_edges: usize,
    },
}

fn main() {
    let cli = Cli::parse();
    let start = Instant::now();
    let timings = cli.timings;
    let outcome = run(cli);
    if timings {
        eprintln!("elapsed: {:.3?}", start.elapsed());
    }
    match outcome {
        Ok(true) => {}
        Ok(false) => std::process::exit(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(1);
        }
    }
}

fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
}

/// A matrix file starts with `#labels` or a `<rows> <cols>` line; anything
/// else is the graph edge-list format.
fn looks_like_matrix(text: &str) -> bool {
    for line in text.lines() {
        let t = line.trim();
        if t.is_empty() {
            continue;
        }
        if t.starts_with('#') {
            if t.starts_with("#labels") {
                return true;
            }
            continue;
        }
        let tokens: Vec<&str> = t.split_whitespace().collect();
        return tokens.len() == 2
            && tokens.iter().all(|s| s.parse::<usize>().is_ok());
    }
    false
}

fn read_matroid(path: &Path) -> Result<BinaryMatroid> {
    let text = read_file(path)?;
    let m = if looks_like_matrix(&text) {
        BinaryMatroid::from_text(&text)
    } else {
        Multigraph::parse(&text).and_then(|g| g.bond_matroid())
    };
    m.with_context(|| format!("parsing {}", path.display()))
}

fn read_graph(path: &Path) -> Result<Multigraph> {
    let text = read_file(path)?;
    Multigraph::parse(&text)
        .with_context(|| format!("parsing {}", path.display()))
}

fn emit<T: Serialize>(format: Format, value: &T, text: String) -> Result<bool> {
    let out = match format {
        Format::Text => text,
        Format::Json => serde_json::to_string_pretty(value)? + "\n",
    };
    // A closed pipe (`sgm ... | head`) is not an error worth reporting.
    if let Err(e) = io::Write::write_all(&mut io::stdout(), out.as_bytes()) {
        if e.kind() != io::ErrorKind::BrokenPipe {
            return Err(e.into());
        }
    }
    Ok(true)
}

fn join(labels: &[String]) -> String {
    labels.join(" ")
}

fn witness_text(w: &MinorWitness) -> String {
    format!("contract [{}] delete [{}]", join(&w.contracted), join(&w.deleted))
}

fn run(cli: Cli) -> Result<bool> {
    let bound = cli.bound;
    let format = cli.format;
    match cli.command {
        Command::Rank { file } => {
            #[derive(Serialize)]
            struct Out {
                rank: usize,
            }
            let m = read_matroid(&file)?;
            let rank = m.rank();
            emit(format, &Out { rank }, format!("{rank}\n"))
        }
        Command::Circuits { file } => {
            #[derive(Serialize)]
            struct Out {
                circuits: Vec<Vec<String>>,
            }
            let m = read_matroid(&file)?;
            let circuits = m.circuits(bound)?;
            let text = circuits.iter().map(|c| join(c) + "\n").collect();
            emit(format, &Out { circuits }, text)
        }
        Command::Cocircuits { file } => {
            #[derive(Serialize)]
            struct Out {
                cocircuits: Vec<Vec<String>>,
            }
            let m = read_matroid(&file)?;
            let cocircuits = m.cocircuits(bound)?;
            let text = cocircuits.iter().map(|c| join(c) + "\n").collect();
            emit(format, &Out { cocircuits }, text)
        }
        Command::Dual { file } => {
            let d = read_matroid(&file)?.dual();
            emit(format, &matrix_out(&d), d.to_text())
        }
        Command::MinorTest { host, target } => {
            #[derive(Serialize)]
            struct Out {
                found: bool,
                witness: Option<MinorWitness>,
            }
            let m = read_matroid(&host)?;
            let n = read_matroid(&target)?;
            let witness = has_minor(&m, &n, bound)?;
            let text = match &witness {
                Some(w) => format!("minor: {}\n", witness_text(w)),
                None => "no minor\n".to_owned(),
            };
            emit(format, &Out { found: witness.is_some(), witness }, text)
        }
        Command::Connectivity { file } => {
            #[derive(Serialize)]
            struct Out {
                /// `null` means no separation at all (infinite connectivity).
                connectivity: Option<usize>,
            }
            let m = read_matroid(&file)?;
            let (value, text) = match connectivity(&m, bound)? {
                Connectivity::Finite(k) => (Some(k), format!("{k}\n")),
                Connectivity::Infinite => (None, "infinite\n".to_owned()),
            };
            emit(format, &Out { connectivity: value }, text)
        }
        Command::GraphicTest { file } => {
            #[derive(Serialize)]
            struct Out {
                graphic: bool,
                minor: Option<String>,
                witness: Option<MinorWitness>,
            }
            let m = read_matroid(&file)?;
            let (out, text) = match graphic_obstruction(&m, bound)? {
                Some(o) => (
                    Out {
                        graphic: false,
                        minor: Some(o.minor.clone()),
                        witness: Some(o.witness.clone()),
                    },
                    format!(
                        "not graphic: {} minor, {}\n",
                        o.minor,
                        witness_text(&o.witness)
                    ),
                ),
                None => (
                    Out {
                        graphic: true,
                        minor: None,
                        witness: None,
                    },
                    "graphic\n".to_owned(),
                ),
            };
            emit(format, &out, text)
        }
        Command::CocircuitAudit { file } => {
            #[derive(Serialize)]
            struct Out {
                all_graphic: bool,
                entries: Vec<LedgerEntry>,
            }
            let m = read_matroid(&file)?;
            let entries = cocircuit_ledger(&m, bound)?;
            let mut text = String::new();
            for e in &entries {
                match &e.obstruction {
                    Some(o) => writeln!(
                        text,
                        "{}: not graphic ({} minor)",
                        join(&e.cocircuit),
                        o.minor
                    )?,
                    None => writeln!(text, "{}: graphic", join(&e.cocircuit))?,
                }
            }
            let bad = entries.iter().filter(|e| e.obstruction.is_some()).count();
            if bad == 0 {
                writeln!(text, "all {} cocircuit deletions graphic", entries.len())?;
            } else {
                writeln!(
                    text,
                    "{bad} of {} cocircuit deletions not graphic",
                    entries.len()
                )?;
            }
            emit(format, &Out { all_graphic: bad == 0, entries }, text)
        }
        Command::Decompose { file } => {
            let m = read_matroid(&file)?;
            let pieces = decompose(&m, bound)?;
            let out: Vec<MatrixOut> = pieces.iter().map(matrix_out).collect();
            let mut text = String::new();
            for (i, p) in pieces.iter().enumerate() {
                writeln!(text, "# piece {} ({} elements)", i + 1, p.len())?;
                text.push_str(&p.to_text());
            }
            emit(format, &out, text)
        }
        Command::Realize { file } => {
            let m = read_matroid(&file)?;
            let g = realize_graph(&m, bound)?;
            emit(format, &g, g.to_text())
        }
        Command::Recognize {
            file,
            check_preconditions,
        } => {
            let m = read_matroid(&file)?;
            let opts = RecognizeOptions {
                bound,
                check_preconditions,
            };
            let report = recognize_cographic(&m, &opts)?;
            let mut text = format!("{}\n", report.decision);
            writeln!(
                text,
                "{} elements, rank {}, {} piece(s)",
                report.elements,
                report.rank,
                report.pieces.len()
            )?;
            for (i, p) in report.pieces.iter().enumerate() {
                match p.family {
                    Some(f) => writeln!(
                        text,
                        "piece {}: {} elements, family {f}",
                        i + 1,
                        p.elements.len()
                    )?,
                    None => writeln!(
                        text,
                        "piece {}: {} elements",
                        i + 1,
                        p.elements.len()
                    )?,
                }
            }
            emit(format, &report, text)
        }
        Command::Catalog { name, list } => catalog_cmd(format, name, list),
        Command::NegamiClosure {
            seed,
            max_edges,
            out,
        } => closure_cmd(format, &seed, max_edges, bound, out),
        Command::Verify(harness) => verify_cmd(format, bound, harness),
    }
}

#[derive(Serialize)]
struct MatrixOut {
    labels: Vec<String>,
    rows: Vec<String>,
}

fn matrix_out(m: &BinaryMatroid) -> MatrixOut {
    let text = m.to_text();
    let mut lines = text.lines();
    lines.next(); // #labels
    lines.next(); // dimensions
    MatrixOut {
        labels: m.elements().to_vec(),
        rows: lines.map(str::to_owned).collect(),
    }
}

enum CatalogItem {
    Graph(Multigraph),
    Matroid(BinaryMatroid),
    Signed(SignedGraph),
}

/// Parametric graph names: complete `k5`, bipartite `k3.5`, the family
/// `k3.7+2`, wheels `w5`, and a few specials.
fn catalog_graph(name: &str) -> Option<Multigraph> {
    match name {
        "petersen" => return Some(catalog::petersen()),
        "k4.4-e" => return Some(catalog::k44_minus_e()),
        _ => {}
    }
    if let Some(rest) = name.strip_prefix('w') {
        let n: usize = rest.parse().ok()?;
        return (3..=9).contains(&n).then(|| catalog::wheel(n));
    }
    let rest = name.strip_prefix('k')?;
    let (shape, extra) = match rest.split_once('+') {
        Some((s, e)) => (s, e.parse::<usize>().ok()?),
        None => (rest, 0),
    };
    match shape.split_once('.') {
        Some((a, b)) => {
            let (a, b) = (a.parse::<usize>().ok()?, b.parse::<usize>().ok()?);
            if !(1..=8).contains(&a) || !(1..=8).contains(&b) {
                return None;
            }
            if extra == 0 {
                Some(catalog::complete_bipartite(a, b))
            } else {
                (a == 3).then(|| catalog::k3n_plus(b, extra).ok()).flatten()
            }
        }
        None => {
            let n: usize = shape.parse().ok()?;
            (extra == 0 && (1..=10).contains(&n))
                .then(|| catalog::complete_graph(n))
        }
    }
}

fn catalog_item(name: &str) -> Option<CatalogItem> {
    if let Some(g) = catalog_graph(&name.to_ascii_lowercase()) {
        return Some(CatalogItem::Graph(g));
    }
    if let Some((_, m)) = catalog::binary_suite()
        .into_iter()
        .find(|(n, _)| n.eq_ignore_ascii_case(name))
    {
        return Some(CatalogItem::Matroid(m));
    }
    if let Some((_, s)) = catalog::signed_suite()
        .into_iter()
        .find(|(n, _)| n.eq_ignore_ascii_case(name))
    {
        return Some(CatalogItem::Signed(s));
    }
    None
}

fn catalog_names() -> Vec<String> {
    let mut names: Vec<String> = [
        "k4", "k5", "k6", "k3.3", "k3.5", "k3.5+1", "k3.5+2", "k3.5+3",
        "k4.4", "k4.4-e", "w4", "w5", "petersen",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    names.extend(catalog::binary_suite().into_iter().map(|(n, _)| n));
    names.extend(catalog::signed_suite().into_iter().map(|(n, _)| n));
    names
}

fn catalog_cmd(format: Format, name: Option<String>, list: bool) -> Result<bool> {
    if list {
        let names = catalog_names();
        let text = names.iter().map(|n| n.clone() + "\n").collect();
        return emit(format, &names, text);
    }
    let name = name.ok_or_else(|| anyhow!("catalog needs a name or --list"))?;
    let item = catalog_item(&name)
        .ok_or_else(|| anyhow!("no catalog entry named `{name}`"))?;
    #[derive(Serialize)]
    struct Out {
        name: String,
        kind: &'static str,
        text: String,
    }
    let (kind, text) = match item {
        CatalogItem::Graph(g) => ("graph", g.to_text()),
        CatalogItem::Matroid(m) => ("matroid", m.to_text()),
        CatalogItem::Signed(s) => ("signed-graph", s.to_text()),
    };
    emit(
        format,
        &Out {
            name,
            kind,
            text: text.clone(),
        },
        text,
    )
}

#[derive(Serialize)]
struct ClosureRecord {
    index: usize,
    vertices: usize,
    edges: usize,
    parent: Option<usize>,
    step: Option<ExtensionStep>,
    derivation: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    file: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    graph: Option<String>,
}

fn closure_cmd(
    format: Format,
    seed: &str,
    max_edges: usize,
    bound: usize,
    out_dir: Option<PathBuf>,
) -> Result<bool> {
    let seed_graph = match catalog_graph(&seed.to_ascii_lowercase()) {
        Some(g) => g,
        None => read_graph(Path::new(seed))?,
    };
    let members = negami_closure(&seed_graph, max_edges, bound.max(max_edges))?;
    let records: Vec<ClosureRecord> = members
        .iter()
        .enumerate()
        .map(|(i, m)| ClosureRecord {
            index: i,
            vertices: m.graph.vertices().len(),
            edges: m.graph.edges().len(),
            parent: m.parent,
            step: m.step.clone(),
            derivation: derivation(&members, i),
            file: out_dir
                .as_ref()
                .map(|_| format!("member-{i:03}.graph")),
            graph: out_dir
                .is_none()
                .then(|| m.graph.to_text()),
        })
        .collect();
    if let Some(dir) = &out_dir {
        fs::create_dir_all(dir)
            .with_context(|| format!("creating {}", dir.display()))?;
        for (r, m) in records.iter().zip(&members) {
            let path = dir.join(r.file.as_ref().expect("file set"));
            fs::write(&path, m.graph.to_text())
                .with_context(|| format!("writing {}", path.display()))?;
        }
        let manifest = dir.join("manifest.json");
        fs::write(&manifest, serde_json::to_string_pretty(&records)?)
            .with_context(|| format!("writing {}", manifest.display()))?;
    }
    let mut text = String::new();
    for r in &records {
        writeln!(
            text,
            "{:3}: {} vertices, {} edges  [{}]",
            r.index, r.vertices, r.edges, r.derivation
        )?;
    }
    writeln!(text, "{} graphs within {} edges", records.len(), max_edges)?;
    if let Some(dir) = &out_dir {
        writeln!(text, "written to {}", dir.display())?;
    }
    emit(format, &records, text)
}

fn verify_cmd(format: Format, bound: usize, harness: Harness) -> Result<bool> {
    match harness {
        Harness::CocircuitDeletions => {
            #[derive(Serialize)]
            struct MatroidOut {
                name: String,
                cocircuits: usize,
                failures: Vec<LedgerEntry>,
            }
            #[derive(Serialize)]
            struct Out {
                pass: bool,
                matroids: Vec<MatroidOut>,
            }
            let cases = [
                ("M*(K35)", catalog::g17().bond_matroid()?),
                ("M*(K44-e)", catalog::g19().bond_matroid()?),
            ];
            let mut matroids = Vec::new();
            let mut text = String::new();
            for (name, m) in cases {
                let ledger = cocircuit_ledger(&m, bound)?;
                let failures: Vec<LedgerEntry> = ledger
                    .iter()
                    .filter(|e| e.obstruction.is_some())
                    .cloned()
                    .collect();
                writeln!(
                    text,
                    "{name}: {} cocircuits, {} non-graphic deletions",
                    ledger.len(),
                    failures.len()
                )?;
                matroids.push(MatroidOut {
                    name: name.to_owned(),
                    cocircuits: ledger.len(),
                    failures,
                });
            }
            let pass = matroids.iter().all(|m| m.failures.is_empty());
            writeln!(
                text,
                "{}",
                if pass {
                    "PASS: all cocircuit deletions graphic for M*(K35), M*(K44-e)"
                } else {
                    "FAIL: some cocircuit deletion is not graphic"
                }
            )?;
            emit(format, &Out { pass, matroids }, text)?;
            Ok(pass)
        }
        Harness::Counterexamples => {
            #[derive(Serialize)]
            struct CaseOut {
                name: String,
                cocircuit: Vec<String>,
                minor: String,
                witness: MinorWitness,
                replayed: bool,
            }
            #[derive(Serialize)]
            struct Out {
                pass: bool,
                cases: Vec<CaseOut>,
            }
            let inputs = [
                ("R15*", catalog::r15().dual()),
                ("R16*", catalog::r16().dual()),
            ];
            let mut cases = Vec::new();
            let mut text = String::new();
            let mut pass = true;
            for (name, m) in inputs {
                let Some(fail) = cocircuit_audit(&m, bound)? else {
                    writeln!(text, "{name}: every cocircuit deletion graphic")?;
                    pass = false;
                    continue;
                };
                let rest = m.delete(&fail.cocircuit)?;
                let shrunk = apply_minor(&rest, &fail.obstruction.witness)?;
                let target = excluded_minor(&fail.obstruction.minor)?;
                let replayed =
                    is_isomorphic(&shrunk, &target, bound)?.is_some();
                pass &= replayed;
                writeln!(
                    text,
                    "{name}: deleting cocircuit [{}] leaves an {} minor \
                     ({}; replay {})",
                    join(&fail.cocircuit),
                    fail.obstruction.minor,
                    witness_text(&fail.obstruction.witness),
                    if replayed { "ok" } else { "FAILED" }
                )?;
                cases.push(CaseOut {
                    name: name.to_owned(),
                    cocircuit: fail.cocircuit,
                    minor: fail.obstruction.minor,
                    witness: fail.obstruction.witness,
                    replayed,
                });
            }
            writeln!(
                text,
                "{}",
                if pass {
                    "PASS: R15* and R16* both fail the graphic-cocircuit condition"
                } else {
                    "FAIL: expected non-graphic cocircuit deletions"
                }
            )?;
            emit(format, &Out { pass, cases }, text)?;
            Ok(pass)
        }
        Harness::Families { n_max, max_edges } => {
            #[derive(Serialize)]
            struct Out {
                pass: bool,
                family_checked: Vec<String>,
                closure_checked: usize,
                counterexamples: Vec<String>,
            }
            let report = verify_family_theorems(n_max, max_edges)?;
            let pass = report.counterexamples.is_empty();
            let mut text = format!(
                "{} family graphs, {} closure members up to {} edges\n",
                report.family_checked.len(),
                report.closure_checked,
                max_edges
            );
            for c in &report.counterexamples {
                writeln!(text, "counterexample: {c}")?;
            }
            writeln!(
                text,
                "{}",
                if pass {
                    "PASS: families match the closure exactly"
                } else {
                    "FAIL: characterization mismatch"
                }
            )?;
            emit(
                format,
                &Out {
                    pass,
                    family_checked: report.family_checked,
                    closure_checked: report.closure_checked,
                    counterexamples: report.counterexamples,
                },
                text,
            )?;
            Ok(pass)
        }
    }
}

fn excluded_minor(name: &str) -> Result<BinaryMatroid> {
    Ok(match name {
        "F7" => catalog::fano(),
        "F7*" => catalog::fano().dual(),
        "M*(K33)" => catalog::complete_bipartite(3, 3).bond_matroid()?,
        "M*(K5)" => catalog::complete_graph(5).bond_matroid()?,
        other => bail!("unknown excluded minor `{other}`"),
    })
}
