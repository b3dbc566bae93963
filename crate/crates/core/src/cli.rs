//! Command-line front end. Exit codes: 0 success, 1 validation failure,
//! 2 parse or usage failure, 3 internal error.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use crate::census::{
    census_breakdown, write_analysis, write_breakdown, write_extremal, write_manifest, CensusError,
    IsomerCatalog,
};
use crate::clar::{clar_number, is_extremal};
use crate::enumerate::with_workers;
use crate::fragment::{
    boundary_labeling, classify_fragment, gamma, pentagon_components, theorem2_classify,
    BoundaryLabeling, CensusClass, FragmentTag,
};
use crate::fullerene::{validate, Fullerene};
use crate::graph::{cyclic_edge_connectivity, parse_adjacency, GraphError};
use crate::matching::fries_number;
use crate::spiral::{from_spiral, parse_spiral, SpiralError};
use crate::svg;

#[derive(Debug, Parser)]
#[command(
    name = "clarkit",
    version,
    about = "Clar numbers, Fries numbers and isomer census for fullerenes"
)]
pub struct Cli {
    /// Worker threads for enumeration and census runs.
    #[arg(long, global = true, env = "CLARKIT_WORKERS", value_parser = clap::value_parser!(u64).range(1..))]
    workers: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check that the input is a fullerene.
    Validate(InputArgs),
    /// Clar number, bound and Clar formulas.
    Clar {
        #[command(flatten)]
        input: InputArgs,
        /// List the hexagons of every Clar formula.
        #[arg(long)]
        formulas: bool,
        /// Draw the first Clar formula.
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Fries number with a witness matching.
    Fries {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate all isomers on n vertices into a manifest.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Manifest path; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate, analyze and list the extremal isomers.
    Census {
        #[arg(long, default_value_t = 60)]
        n: usize,
        /// Manifest path; the sidecar, extremal list and breakdown are
        /// written next to it.
        #[arg(long, default_value = "catalog.tsv")]
        out: PathBuf,
    },
    /// Pentagon components, their classes and the extremality verdicts.
    Classify {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
struct InputArgs {
    /// File path, `-` for standard input, or an inline spiral.
    input: String,
    /// Detected from the first line when absent.
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Spiral,
    Adjacency,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Internal(e.to_string())
    }
}

impl From<CensusError> for CliError {
    fn from(e: CensusError) -> Self {
        match e {
            CensusError::Parse { .. } => CliError::Parse(e.to_string()),
            CensusError::Enumerate(_) => CliError::Validation(e.to_string()),
            CensusError::Io(e) => e.into(),
        }
    }
}

fn spiral_error(line: usize, e: SpiralError) -> CliError {
    match e {
        SpiralError::Parse(_) | SpiralError::BadFaceSize { .. } => {
            CliError::Parse(format!("line {line}: {e}"))
        }
        _ => CliError::Validation(format!("line {line}: {e}")),
    }
}

fn read_input(input: &str) -> Result<String, CliError> {
    if input == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else if Path::new(input).is_file() {
        Ok(fs::read_to_string(input)?)
    } else {
        Ok(input.to_string())
    }
}

/// Every graph in the input. Spiral input takes one graph per line, using
/// the first tab-separated field that contains a comma, so manifests and
/// census lists are accepted as they are.
fn load(args: &InputArgs) -> Result<Vec<Fullerene>, CliError> {
    let text = read_input(&args.input)?;
    let first = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
    let format = args.format.unwrap_or(if first.contains(',') {
        Format::Spiral
    } else {
        Format::Adjacency
    });
    let graphs = match format {
        Format::Adjacency => {
            let rot = parse_adjacency(&text).map_err(|e| match e {
                GraphError::Parse { .. } => CliError::Parse(e.to_string()),
                _ => CliError::Validation(e.to_string()),
            })?;
            vec![validate(&rot).map_err(|e| CliError::Validation(e.to_string()))?]
        }
        Format::Spiral => {
            let mut out = Vec::new();
            for (i, line) in text.lines().enumerate() {
                if line.trim().is_empty() || line.starts_with('#') {
                    continue;
                }
                let field = line.split('\t').find(|f| f.contains(',')).ok_or_else(|| {
                    CliError::Parse(format!("line {}: no spiral in {:?}", i + 1, line))
                })?;
                let s = parse_spiral(field).map_err(|e| spiral_error(i + 1, e))?;
                out.push(from_spiral(&s).map_err(|e| spiral_error(i + 1, e))?);
            }
            out
        }
    };
    if graphs.is_empty() {
        return Err(CliError::Parse("no graph in input".into()));
    }
    Ok(graphs)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn one_graph(graphs: &[Fullerene], svg: &Option<PathBuf>) -> Result<(), CliError> {
    if svg.is_some() && graphs.len() > 1 {
        return Err(CliError::Parse("--svg needs a single graph".into()));
    }
    Ok(())
}

fn cmd_validate(args: &InputArgs, out: &mut dyn Write) -> Result<(), CliError> {
    for f in load(args)? {
        let lambda = cyclic_edge_connectivity(f.rotation(), 6)
            .map_or_else(|| ">6".to_string(), |k| k.to_string());
        writeln!(
            out,
            "fullerene: n={}, pentagons={}, hexagons={}, cλ={}",
            f.order(),
            f.pentagons().len(),
            f.hexagons().len(),
            lambda
        )?;
    }
    Ok(())
}

#[derive(Serialize)]
struct ClarReport {
    n: usize,
    clar: usize,
    bound: usize,
    extremal: bool,
    formula_count: usize,
    truncated: bool,
    formulas: Option<Vec<Vec<usize>>>,
}

fn cmd_clar(
    args: &InputArgs,
    formulas: bool,
    svg_path: &Option<PathBuf>,
    json: bool,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let graphs = load(args)?;
    one_graph(&graphs, svg_path)?;
    for f in &graphs {
        let r = clar_number(f);
        let sets: Vec<Vec<usize>> = r.formulas.iter().map(|p| p.hexagons.clone()).collect();
        if json {
            let report = ClarReport {
                n: f.order(),
                clar: r.clar_number,
                bound: r.bound,
                extremal: r.extremal,
                formula_count: sets.len(),
                truncated: r.truncated,
                formulas: formulas.then(|| sets.clone()),
            };
            writeln!(
                out,
                "{}",
                serde_json::to_string(&report).map_err(|e| CliError::Internal(e.to_string()))?
            )?;
        } else {
            let plus = if r.truncated { "+" } else { "" };
            writeln!(
                out,
                "clar={} bound={} extremal={} formulas={}{plus}",
                r.clar_number,
                r.bound,
                yes_no(r.extremal),
                sets.len()
            )?;
            if formulas {
                for (i, h) in sets.iter().enumerate() {
                    let ids: Vec<String> = h.iter().map(|x| x.to_string()).collect();
                    writeln!(out, "formula {}: {}", i + 1, ids.join(" "))?;
                }
            }
        }
        if let Some(path) = svg_path {
            let p = &r.formulas[0];
            fs::write(path, svg::render(f, &p.hexagons, Some(&p.witness), &[]))?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct FriesReport {
    n: usize,
    fries: usize,
    pentagon_free: bool,
    alternating_hexagons: Vec<usize>,
    matching: Vec<(usize, usize)>,
}

fn cmd_fries(
    args: &InputArgs,
    svg_path: &Option<PathBuf>,
    json: bool,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let graphs = load(args)?;
    one_graph(&graphs, svg_path)?;
    for f in &graphs {
        let (value, r) = fries_number(f);
        if json {
            let report = FriesReport {
                n: f.order(),
                fries: value,
                pentagon_free: r.pentagon_free,
                alternating_hexagons: r.alternating_hexagons.clone(),
                matching: r.matching.edges().to_vec(),
            };
            writeln!(
                out,
                "{}",
                serde_json::to_string(&report).map_err(|e| CliError::Internal(e.to_string()))?
            )?;
        } else {
            writeln!(
                out,
                "fries={} pentagon-free={}",
                value,
                yes_no(r.pentagon_free)
            )?;
        }
        if let Some(path) = svg_path {
            fs::write(
                path,
                svg::render(f, &[], Some(&r.matching), &r.alternating_hexagons),
            )?;
        }
    }
    Ok(())
}

/// The manifest path with `.tsv` replaced by `.{part}.tsv`.
fn sibling(path: &Path, part: &str) -> PathBuf {
    let stem = path
        .file_stem()
        .map_or_else(|| "catalog".into(), |s| s.to_string_lossy().into_owned());
    path.with_file_name(format!("{stem}.{part}.tsv"))
}

/// Runs `job` on the worker pool.
fn pooled<T: Send>(
    workers: usize,
    job: impl FnOnce() -> Result<T, CensusError> + Send,
) -> Result<T, CliError> {
    Ok(with_workers(workers, job).map_err(|e| CliError::Internal(e.to_string()))??)
}

fn cmd_enumerate(
    n: usize,
    path: &Option<PathBuf>,
    workers: usize,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let catalog = pooled(workers, || IsomerCatalog::enumerate(n))?;
    match path {
        Some(p) => {
            write_manifest(&catalog, io::BufWriter::new(fs::File::create(p)?))?;
            writeln!(out, "isomers={}", catalog.len())?;
        }
        None => write_manifest(&catalog, out)?,
    }
    Ok(())
}

fn cmd_census(n: usize, path: &Path, workers: usize, out: &mut dyn Write) -> Result<(), CliError> {
    let catalog = pooled(workers, || {
        let mut c = IsomerCatalog::enumerate(n)?;
        c.analyze();
        Ok(c)
    })?;
    let extremal = catalog.extremal();
    let breakdown = census_breakdown(&extremal);
    write_manifest(&catalog, io::BufWriter::new(fs::File::create(path)?))?;
    write_analysis(
        &catalog,
        io::BufWriter::new(fs::File::create(sibling(path, "analysis"))?),
    )?;
    write_extremal(
        &extremal,
        io::BufWriter::new(fs::File::create(sibling(path, "extremal"))?),
    )?;
    write_breakdown(
        &breakdown,
        io::BufWriter::new(fs::File::create(sibling(path, "breakdown"))?),
    )?;
    writeln!(out, "isomers={} extremal={}", catalog.len(), extremal.len())?;
    Ok(())
}

#[derive(Serialize)]
struct ComponentReport {
    tag: FragmentTag,
    faces: Vec<usize>,
    gamma: usize,
    labeling: Option<BoundaryLabeling>,
    uncovered: usize,
    normal: bool,
}

#[derive(Serialize)]
struct ClassifyReport {
    n: usize,
    components: Vec<ComponentReport>,
    /// Fragment criterion verdict; absent below 60 vertices.
    criterion: Option<bool>,
    direct: bool,
    class: Option<CensusClass>,
}

fn classify_report(f: &Fullerene) -> ClassifyReport {
    let components = pentagon_components(f)
        .iter()
        .map(|g| {
            let c = classify_fragment(f, g).expect("pentagon components are maximal");
            ComponentReport {
                tag: c.tag,
                faces: g.faces().to_vec(),
                gamma: gamma(f, g),
                labeling: if g.is_simply_connected() {
                    boundary_labeling(g).ok()
                } else {
                    None
                },
                uncovered: c.clar_set.uncovered.len(),
                normal: c.clar_set.normal,
            }
        })
        .collect();
    let criterion = theorem2_classify(f).ok();
    let direct = is_extremal(f);
    ClassifyReport {
        n: f.order(),
        components,
        class: criterion
            .as_ref()
            .filter(|_| direct)
            .map(|r| r.census_class()),
        criterion: criterion.map(|r| r.extremal),
        direct,
    }
}

fn verdict(b: bool) -> &'static str {
    if b {
        "extremal"
    } else {
        "not-extremal"
    }
}

fn cmd_classify(args: &InputArgs, json: bool, out: &mut dyn Write) -> Result<(), CliError> {
    for f in load(args)? {
        let r = classify_report(&f);
        if json {
            writeln!(
                out,
                "{}",
                serde_json::to_string(&r).map_err(|e| CliError::Internal(e.to_string()))?
            )?;
            continue;
        }
        for (i, c) in r.components.iter().enumerate() {
            let labeling = c
                .labeling
                .as_ref()
                .map_or_else(|| "-".to_string(), |l| l.to_string());
            writeln!(
                out,
                "component {}: {} pentagons={} gamma={} labeling={} uncovered={} normal={}",
                i + 1,
                c.tag,
                c.faces.len(),
                c.gamma,
                labeling,
                c.uncovered,
                yes_no(c.normal)
            )?;
        }
        let criterion = r.criterion.map_or("-", verdict);
        let class = r.class.map_or_else(|| "-".to_string(), |c| c.to_string());
        writeln!(
            out,
            "criterion={} direct={} class={}",
            criterion,
            verdict(r.direct),
            class
        )?;
    }
    Ok(())
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let workers = cli.workers.unwrap_or(0) as usize;
    match cli.command {
        Command::Validate(a) => cmd_validate(&a, out),
        Command::Clar {
            input,
            formulas,
            svg,
            json,
        } => cmd_clar(&input, formulas, &svg, json, out),
        Command::Fries { input, svg, json } => cmd_fries(&input, &svg, json, out),
        Command::Classify { input, json } => cmd_classify(&input, json, out),
        Command::Enumerate { n, out: path } => cmd_enumerate(n, &path, workers, out),
        Command::Census { n, out: path } => cmd_census(n, &path, workers, out),
    }
}

/// Parses `args` (program name first), runs the command writing to `out`,
/// and returns the exit code. Errors go to standard error.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.code()
        }
    }
}

/// Entry point of the `clarkit` binary: panics become exit code 3.
pub fn main() -> i32 {
    let result = std::panic::catch_unwind(|| {
        let stdout = io::stdout();
        let mut lock = stdout.lock();
        run(std::env::args_os(), &mut lock)
    });
    result.unwrap_or(3)
}
