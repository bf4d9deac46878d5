//! `antimagic`: build, verify and search local antimagic labelings.
//!
//! Exit codes: 0 ok, 1 bijection failure, 2 properness failure (or a failed
//! claim / sweep / ledger check), 3 unreadable input or invalid parameters,
//! 4 search refused by a size guard.

mod expr;
mod sweep;
mod targets;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use antimagic::errata::{Fix, Fixes};
use antimagic::io;
use antimagic::matrixlab::{appendix_fixture, Appendix, Corona, LabelingMatrix};
use antimagic::oracle::{exact_chi_la, exact_chi_lat, exists_with_colors, SearchBudget, SearchMode};
use antimagic::{build_ledger, AnyLabeling, Graph, LabelKind};

use expr::{parse_family, slug};
use targets::Built;

#[derive(Parser)]
#[command(name = "antimagic", version, about = "Local antimagic labelings: construct, verify, search")]
struct Cli {
    /// Directory for output files.
    #[arg(long, global = true, env = "ANTIMAGIC_OUT", default_value = ".")]
    out_dir: PathBuf,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write a graph as JSON (and optionally DOT).
    Gen(GenArgs),
    /// Run a construction, verify it and write the labeling and its report.
    Label {
        #[command(subcommand)]
        what: LabelCmd,
    },
    /// Check a labeling file; the exit code gives the verdict.
    Verify {
        #[arg(long)]
        labeling: PathBuf,
        /// Graph the labeling must belong to.
        #[arg(long)]
        graph: Option<PathBuf>,
    },
    /// Exact search for the minimum number of colors on a tiny graph.
    Search(SearchArgs),
    /// Label and verify every point of a parameter grid; writes a CSV.
    Sweep(sweep::SweepArgs),
    /// Exporters: ledger, DOT, CSV, matrices and the printed fixtures.
    Export {
        #[command(subcommand)]
        what: ExportCmd,
    },
}

#[derive(Args)]
struct GenArgs {
    /// star, double-star, firecracker, path, empty, k2, copies-k2, edge-corona, join.
    family: String,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    k1: Option<u32>,
    #[arg(long)]
    k2: Option<u32>,
    #[arg(long)]
    r: Option<u32>,
    /// Factor expression, e.g. `star:3`.
    #[arg(long)]
    g: Option<String>,
    #[arg(long)]
    h: Option<String>,
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Also write a DOT file next to the JSON.
    #[arg(long)]
    dot: bool,
}

#[derive(Subcommand)]
enum LabelCmd {
    /// Edge labeling of F_{n,k}.
    La {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[command(flatten)]
        common: LabelOpts,
    },
    /// Total labeling of F_{n,k}; `--join` transfers it to F_{n,1} ∨ K_1.
    Lat {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        join: bool,
        #[command(flatten)]
        common: LabelOpts,
    },
    /// Edge-corona construction via labeling matrices.
    Matrix {
        #[arg(long, value_enum)]
        construction: Construction,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        k1: Option<u32>,
        #[arg(long)]
        k2: Option<u32>,
        #[arg(long)]
        r: u32,
        /// Print the ★-padded grid.
        #[arg(long)]
        render: bool,
        #[command(flatten)]
        common: LabelOpts,
    },
}

#[derive(Args)]
struct LabelOpts {
    /// Disable one correction to reproduce the printed reading (see errata.json).
    #[arg(long, value_name = "FIX")]
    without: Option<String>,
    /// Base path for outputs; `.labeling.json` and `.report.json` are appended.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    SkEmpty,
    DstarEmpty,
    SkK2,
    DstarK2,
}

fn corona(c: Construction, k: Option<u32>, k1: Option<u32>, k2: Option<u32>, r: u32) -> Result<Corona> {
    let need = |x: Option<u32>, f: &str| x.ok_or_else(|| anyhow!("--{f} is required for this construction"));
    Ok(match c {
        Construction::SkEmpty => Corona::SkEmpty { k: need(k, "k")?, r },
        Construction::SkK2 => Corona::SkK2 { k: need(k, "k")?, r },
        Construction::DstarEmpty => Corona::DstarEmpty { k1: need(k1, "k1")?, k2: need(k2, "k2")?, r },
        Construction::DstarK2 => Corona::DstarK2 { k1: need(k1, "k1")?, k2: need(k2, "k2")?, r },
    })
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    La,
    Lat,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exhaustive,
    FirstWitness,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long, conflicts_with = "family", required_unless_present = "family")]
    graph: Option<PathBuf>,
    /// Family expression instead of a graph file, e.g. `path:6`.
    #[arg(long)]
    family: Option<String>,
    #[arg(long, value_enum, default_value = "la")]
    kind: Kind,
    #[arg(long, value_enum, default_value = "exhaustive")]
    mode: Mode,
    /// Look for a witness with exactly this many colors instead of minimizing.
    #[arg(long)]
    colors: Option<usize>,
    #[arg(long, default_value_t = SearchBudget::default().max_nodes)]
    max_nodes: u64,
    /// Wall-clock limit in seconds.
    #[arg(long, default_value_t = 60)]
    time_limit: u64,
    #[arg(long, default_value_t = SearchBudget::default().max_items)]
    max_items: usize,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum ExportCmd {
    /// Rebuild the erratum ledger.
    Errata {
        #[arg(short, long, default_value = "errata.json")]
        output: PathBuf,
        /// Compare with the existing file instead of writing; exit 2 on any difference.
        #[arg(long)]
        check: bool,
    },
    /// DOT from a graph file, or from a labeling file with edge labels.
    Dot {
        #[arg(long, conflicts_with = "labeling", required_unless_present = "labeling")]
        graph: Option<PathBuf>,
        #[arg(long)]
        labeling: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Per-vertex weights and classes as CSV.
    Csv {
        #[arg(long)]
        labeling: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Labeling matrix JSON of an edge labeling.
    Matrix {
        #[arg(long)]
        labeling: PathBuf,
        #[arg(long)]
        render: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// One of the printed worked matrices, exactly as printed.
    Fixture {
        #[arg(long, value_enum)]
        appendix: AppendixArg,
        #[arg(long)]
        render: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum AppendixArg {
    A,
    B,
    C,
}

/// Guard refusals exit 4; every other error is bad input (3).
fn exit_code_of(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<antimagic::Error>() {
        Some(antimagic::Error::Guard(_)) => 4,
        _ => 3,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code_of(&e))
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    let out = cli.out_dir;
    match cli.cmd {
        Cmd::Gen(a) => gen(&out, a),
        Cmd::Label { what } => label(&out, what),
        Cmd::Verify { labeling, graph } => verify(&out, &labeling, graph.as_deref()),
        Cmd::Search(a) => search(&out, a),
        Cmd::Sweep(a) => sweep::run(&out, a),
        Cmd::Export { what } => export(&out, what),
    }
}

pub(crate) fn write(path: &Path, contents: &str) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    }
    fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

/// `base` with `suffix` appended to its file name.
fn with_suffix(base: &Path, suffix: &str) -> PathBuf {
    let mut s = base.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

fn read_labeling(path: &Path) -> Result<(AnyLabeling, Option<usize>)> {
    io::labeling_from_json(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn read_graph(path: &Path) -> Result<Graph> {
    io::graph_from_json(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn gen(out: &Path, a: GenArgs) -> Result<u8> {
    use antimagic::Family;
    let need = |x: Option<u32>, f: &str| x.ok_or_else(|| anyhow!("--{f} is required for {}", a.family));
    let expr = |x: &Option<String>, f: &str| -> Result<Family> {
        parse_family(x.as_deref().ok_or_else(|| anyhow!("--{f} is required for {}", a.family))?)
    };
    let family = match a.family.as_str() {
        "star" => Family::Star { k: need(a.k, "k")? },
        "double-star" => Family::DoubleStar { k1: need(a.k1, "k1")?, k2: need(a.k2, "k2")? },
        "firecracker" => Family::Firecracker { n: need(a.n, "n")?, k: need(a.k, "k")? },
        "path" => Family::Path { n: need(a.n, "n")? },
        "empty" => Family::Empty { r: need(a.r, "r")? },
        "k2" => Family::CompleteTwo,
        "copies-k2" => Family::CopiesK2 { r: need(a.r, "r")? },
        "edge-corona" => Family::EdgeCorona { g: Box::new(expr(&a.g, "g")?), h: Box::new(expr(&a.h, "h")?) },
        "join" => Family::Join { g: Box::new(expr(&a.g, "g")?) },
        other => parse_family(other)?,
    };
    let g = family.build()?;
    let path = a.output.unwrap_or_else(|| out.join(format!("{}.graph.json", slug(&family.to_string()))));
    write(&path, &io::graph_to_json(&g))?;
    if a.dot {
        write(&path.with_extension("dot"), &io::to_dot(&g, None))?;
    }
    println!("{family}: {} vertices, {} edges -> {}", g.order(), g.size(), path.display());
    Ok(0)
}

fn parse_fixes(without: &Option<String>) -> Result<Fixes> {
    match without {
        None => Ok(Fixes::all()),
        Some(name) => {
            let fix: Fix = serde_json::from_value(serde_json::Value::String(name.clone()))
                .map_err(|_| anyhow!("unknown fix {name:?}"))?;
            Ok(Fixes::without(fix))
        }
    }
}

fn label(out: &Path, what: LabelCmd) -> Result<u8> {
    let (built, common, matrix) = match what {
        LabelCmd::La { n, k, common } => (targets::la(n, k, parse_fixes(&common.without)?)?, common, None),
        LabelCmd::Lat { n, k, join, common } => {
            let fixes = parse_fixes(&common.without)?;
            let b = if join {
                if k != 1 {
                    bail!("--join applies to F_{{n,1}} only");
                }
                targets::join(n, fixes)?
            } else {
                targets::lat(n, k, fixes)?
            };
            (b, common, None)
        }
        LabelCmd::Matrix { construction, k, k1, k2, r, render, common } => {
            let c = corona(construction, k, k1, k2, r)?;
            (targets::matrix(c, parse_fixes(&common.without)?)?, common, Some((c, render)))
        }
    };
    let Built { name, labeling, claim, fixes } = built;
    let base = common.output.unwrap_or_else(|| out.join(slug(&name)));
    let report = labeling.check();
    let g = labeling.graph();
    write(&with_suffix(&base, ".labeling.json"), &io::labeling_to_json(&labeling, Some(claim.colors())))?;
    write(&with_suffix(&base, ".report.json"), &io::report_to_json(&report, g))?;
    if let (Some((c, render)), AnyLabeling::Edge(e)) = (matrix, &labeling) {
        let m = LabelingMatrix::from_labeling(e);
        write(&with_suffix(&base, ".matrix.json"), &io::matrix_to_json(&m, Some(c)))?;
        if render {
            print!("{}", m.render());
        }
    }
    println!("{name}: {}", report.summary(g));
    if !fixes.is_empty() {
        let names: Vec<String> = fixes.iter().map(targets::fix_name).collect();
        println!("corrections used: {}", names.join(", "));
    }
    let code = report.exit_code() as u8;
    if code == 0 && !claim.met_by(report.color_count) {
        eprintln!("{name}: {} colors, claim is {claim}", report.color_count);
        return Ok(2);
    }
    Ok(code)
}

fn verify(out: &Path, labeling: &Path, graph: Option<&Path>) -> Result<u8> {
    let (l, claimed) = read_labeling(labeling)?;
    if let Some(gp) = graph {
        let g = read_graph(gp)?;
        if g.vertices() != l.graph().vertices() || g.edges() != l.graph().edges() {
            bail!("{} does not label the graph in {}", labeling.display(), gp.display());
        }
    }
    let report = l.check();
    let g = l.graph();
    let stem = labeling.file_name().and_then(|s| s.to_str()).unwrap_or("labeling");
    let stem = stem.strip_suffix(".labeling.json").or_else(|| stem.strip_suffix(".json")).unwrap_or(stem);
    write(&out.join(format!("{stem}.verify.json")), &io::report_to_json(&report, g))?;
    write(&out.join(format!("{stem}.weights.csv")), &io::report_to_csv(&report, g))?;
    println!("{}", report.summary(g));
    if let (Some(c), true) = (claimed, report.certified()) {
        if c != report.color_count {
            println!("note: file claims {c} colors");
        }
    }
    Ok(report.exit_code() as u8)
}

fn search(out: &Path, a: SearchArgs) -> Result<u8> {
    let g = match (&a.graph, &a.family) {
        (Some(p), _) => read_graph(p)?,
        (None, Some(f)) => parse_family(f)?.build()?,
        (None, None) => bail!("--graph or --family is required"),
    };
    let budget = SearchBudget {
        max_nodes: a.max_nodes,
        wall_clock_limit: Duration::from_secs(a.time_limit),
        mode: match a.mode {
            Mode::Exhaustive => SearchMode::Exhaustive,
            Mode::FirstWitness => SearchMode::FirstWitness,
        },
        max_items: a.max_items,
    };
    let kind = match a.kind {
        Kind::La => LabelKind::Edge,
        Kind::Lat => LabelKind::Total,
    };
    let r = match (a.colors, kind) {
        (Some(c), _) => exists_with_colors(&g, c, kind, budget)?,
        (None, LabelKind::Edge) => exact_chi_la(&g, budget)?,
        (None, LabelKind::Total) => exact_chi_lat(&g, budget)?,
    };
    let path = a.output.unwrap_or_else(|| out.join(format!("{}.oracle.json", slug(&g.family().to_string()))));
    write(&path, &io::oracle_to_json(&r))?;
    let doc = io::OracleDoc::from(&r);
    println!(
        "{}: value {} ({} nodes, {} ms)",
        g.family(),
        serde_json::to_string(&doc.value)?,
        r.explored,
        r.elapsed_ms
    );
    Ok(0)
}

fn export(out: &Path, what: ExportCmd) -> Result<u8> {
    match what {
        ExportCmd::Errata { output, check } => {
            let json = build_ledger()?.to_json();
            if check {
                let current = read(&output)?;
                if current == json {
                    println!("{} is up to date", output.display());
                    return Ok(0);
                }
                let line = current.lines().zip(json.lines()).position(|(a, b)| a != b);
                eprintln!(
                    "{} differs from the rebuilt ledger (first difference at line {})",
                    output.display(),
                    line.map_or_else(|| "end".to_string(), |l| (l + 1).to_string())
                );
                return Ok(2);
            }
            write(&output, &json)?;
            println!("ledger -> {}", output.display());
        }
        ExportCmd::Dot { graph, labeling, output } => {
            let (g, labels) = match (graph, labeling) {
                (Some(p), _) => (read_graph(&p)?, None),
                (None, Some(p)) => match read_labeling(&p)?.0 {
                    AnyLabeling::Edge(e) => (e.graph, Some(e.labels)),
                    AnyLabeling::Total(t) => (t.graph, Some(t.edge_labels)),
                },
                (None, None) => bail!("--graph or --labeling is required"),
            };
            let path = output.unwrap_or_else(|| out.join(format!("{}.dot", slug(&g.family().to_string()))));
            write(&path, &io::to_dot(&g, labels.as_deref()))?;
            println!("dot -> {}", path.display());
        }
        ExportCmd::Csv { labeling, output } => {
            let (l, _) = read_labeling(&labeling)?;
            let g = l.graph();
            let path = output.unwrap_or_else(|| out.join(format!("{}.weights.csv", slug(&g.family().to_string()))));
            write(&path, &io::report_to_csv(&l.check(), g))?;
            println!("csv -> {}", path.display());
        }
        ExportCmd::Matrix { labeling, render, output } => {
            let e = match read_labeling(&labeling)?.0 {
                AnyLabeling::Edge(e) => e,
                AnyLabeling::Total(_) => bail!("matrices are defined for edge labelings"),
            };
            let m = LabelingMatrix::from_labeling(&e);
            let path = output.unwrap_or_else(|| out.join(format!("{}.matrix.json", slug(&e.graph.family().to_string()))));
            write(&path, &io::matrix_to_json(&m, None))?;
            if render {
                print!("{}", m.render());
            }
            println!("matrix -> {}", path.display());
        }
        ExportCmd::Fixture { appendix, render, output } => {
            let id = match appendix {
                AppendixArg::A => Appendix::A,
                AppendixArg::B => Appendix::B,
                AppendixArg::C => Appendix::C,
            };
            let m = appendix_fixture(id);
            let path = output.unwrap_or_else(|| out.join(format!("appendix-{id:?}.matrix.json").to_lowercase()));
            write(&path, &io::matrix_to_json(&m, Some(id.corona())))?;
            if render {
                print!("{}", m.render());
            }
            let mut sums = m.row_sums();
            sums.sort_unstable();
            sums.dedup();
            println!("{}: row sums {:?} -> {}", id.corona(), sums, path.display());
        }
    }
    Ok(0)
}
