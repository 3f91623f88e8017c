use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use transversal::bijection::{closure, opening, random_triangulation};
use transversal::counting::{
    bivariate_internal_red, bivariate_red_edges, four_connected_count, rooted_irreducible_count, series_a, series_c,
    unrooted_irreducible_count, BivariateSeries,
};
use transversal::drawing::{compact, emit_svg, fast_coordinates, verify_drawing, SvgStyle};
use transversal::experiment::{run_experiment, ExperimentConfig};
use transversal::io::{parse_coords, parse_tree, write_coords, write_map, write_tree, Annotations, MapFile};
use transversal::planar_map::IrreducibleTriangulation;
use transversal::transversal::{
    compute_structure, find_right_alternating_cycles, minimal_structure, minimalize, orient, phi, verify_partition,
    verify_structure, EdgePartition, TransversalStructure, Violation,
};

#[derive(Parser)]
#[command(name = "transversal", version, about = "Transversal structures, ternary trees and grid drawings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Uniformly random triangulation with its minimal transversal structure.
    Generate {
        /// Number of inner vertices.
        #[arg(short, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Closes a tree file into a map with its minimal structure.
    Close {
        tree: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Opens a map file (with a minimal structure, or none) into a tree.
    Open {
        map: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Grid coordinates of a map file.
    Draw {
        map: PathBuf,
        /// Delete empty rows and columns.
        #[arg(long)]
        compact: bool,
        /// Also write an SVG picture.
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Pixels per grid step in the SVG.
        #[arg(long, default_value_t = 20)]
        unit: u32,
        /// Draw with the structure as given instead of the minimal one.
        #[arg(long)]
        no_minimalize: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exact number of triangulations with `n` inner vertices.
    #[command(group(ArgGroup::new("kind").required(true).args(["rooted", "unrooted", "four_connected"])))]
    Count {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long)]
        rooted: bool,
        #[arg(long)]
        unrooted: bool,
        #[arg(long = "4connected")]
        four_connected: bool,
    },
    /// Coefficients of a generating function.
    Series {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long)]
        order: usize,
    },
    /// Grid-size statistics over random triangulations, as TSV.
    Stats {
        /// Comma-separated sizes.
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        /// Skip measuring the compacted drawing.
        #[arg(long)]
        no_compact: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Runs every applicable validator and prints a pass/fail matrix.
    Verify {
        map: PathBuf,
        /// Coordinates to check against the map.
        #[arg(long)]
        coords: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    /// Ternary trees by nodes.
    #[value(name = "A")]
    A,
    /// Rooted 4-connected triangulations by inner vertices.
    #[value(name = "C")]
    C,
    /// Bicolored trees by nodes and red edges.
    #[value(name = "RB")]
    Rb,
    /// Bicolored trees by nodes and internal red edges.
    #[value(name = "FG")]
    Fg,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{}: {source}", source.code())]
    Core {
        #[from]
        source: transversal::Error,
    },
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Invalid(String),
}

type Result<T> = std::result::Result<T, CliError>;

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(p) => fs::write(p, text).map_err(|source| CliError::Io { path: p.to_owned(), source }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn violations(what: &str, vs: &[Violation]) -> CliError {
    let list: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
    CliError::Invalid(format!("{what} is not transversal: {}", list.join("; ")))
}

/// The partition stored in a map file, checked.
fn stored_partition(f: &MapFile, t: &IrreducibleTriangulation) -> Result<Option<EdgePartition>> {
    if let Some(ts) = f.structure(t)? {
        let vs = verify_structure(t, &ts);
        if !vs.is_empty() {
            return Err(violations("structure", &vs));
        }
        return Ok(Some(phi(&ts)));
    }
    match f.partition(t)? {
        Some(ep) => {
            let vs = verify_partition(t, &ep);
            if vs.is_empty() {
                Ok(Some(ep))
            } else {
                Err(violations("partition", &vs))
            }
        }
        None => Ok(None),
    }
}

fn structure_for_drawing(f: &MapFile, t: &IrreducibleTriangulation, minimal: bool) -> Result<TransversalStructure> {
    Ok(match (stored_partition(f, t)?, minimal) {
        (Some(ep), true) => orient(t, &minimalize(t, &ep))?,
        (Some(ep), false) => match f.structure(t)? {
            Some(ts) => ts,
            None => orient(t, &ep)?,
        },
        (None, true) => minimal_structure(t)?,
        (None, false) => compute_structure(t)?,
    })
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Generate { n, seed, output } => {
            let c = random_triangulation(n as usize, seed)?;
            let ts = orient(&c.triangulation, &c.partition)?;
            let ann = Annotations { partition: None, structure: Some(&ts), root: Some(c.root) };
            emit(output.as_deref(), &write_map(&c.triangulation, ann))?;
        }
        Command::Close { tree, output } => {
            let bt = parse_tree(&read(&tree)?)?;
            let c = closure(&bt)?;
            let ts = orient(&c.triangulation, &c.partition)?;
            let ann = Annotations { partition: None, structure: Some(&ts), root: Some(c.root) };
            emit(output.as_deref(), &write_map(&c.triangulation, ann))?;
        }
        Command::Open { map, output } => {
            let f = MapFile::parse(&read(&map)?)?;
            let t = f.triangulation()?;
            let ep = match stored_partition(&f, &t)? {
                Some(ep) => ep,
                None => phi(&minimal_structure(&t)?),
            };
            let bt = opening(&t, &ep, f.root_dart(&t)?)?;
            emit(output.as_deref(), &write_tree(&bt))?;
        }
        Command::Draw { map, compact: squeeze, svg, unit, no_minimalize, output } => {
            let f = MapFile::parse(&read(&map)?)?;
            let t = f.triangulation()?;
            let ts = structure_for_drawing(&f, &t, !no_minimalize)?;
            let mut d = fast_coordinates(&t, &ts);
            if squeeze {
                d = compact(&d);
            }
            let report = verify_drawing(&t, &d, Some(&ts));
            if let Some(v) = report.violations.first() {
                return Err(CliError::Invalid(format!("drawing check failed: {v}")));
            }
            if let Some(path) = svg {
                let style = SvgStyle { unit, ..SvgStyle::default() };
                let text = emit_svg(&t, &ts.partition(), &d, &style);
                fs::write(&path, text).map_err(|source| CliError::Io { path, source })?;
            }
            emit(output.as_deref(), &write_coords(&d))?;
        }
        Command::Count { n, rooted, unrooted, four_connected } => {
            let n = n as usize;
            let value = if rooted {
                rooted_irreducible_count(n).to_string()
            } else if unrooted {
                unrooted_irreducible_count(n).to_string()
            } else {
                debug_assert!(four_connected);
                four_connected_count(n).to_string()
            };
            println!("{value}");
        }
        Command::Series { which, order } => print!("{}", series_text(which, order)),
        Command::Stats { sizes, samples, seed, no_compact, output } => {
            let cfg = ExperimentConfig { sizes, samples_per_size: samples, seed, compact: !no_compact };
            if cfg.validate().is_err() {
                return Err(CliError::Invalid("sizes and samples must be positive".into()));
            }
            emit(output.as_deref(), &run_experiment(&cfg)?.to_tsv())?;
        }
        Command::Verify { map, coords } => return verify(&map, coords.as_deref()),
    }
    Ok(true)
}

fn series_text(which: Which, order: usize) -> String {
    let mut s = String::new();
    let univariate = |s: &mut String, name: &str, coeffs: Vec<String>| {
        s.push_str(&format!("# n\t[z^n]{name}\n"));
        for (n, c) in coeffs.iter().enumerate() {
            s.push_str(&format!("{n}\t{c}\n"));
        }
    };
    let bivariate = |s: &mut String, name: &str, b: BivariateSeries| {
        s.push_str(&format!("# n\tcoefficients of u^0, u^1, ... in [z^n]{name}\n"));
        for n in 0..=b.order() {
            let cs: Vec<String> = b.z_coeff(n).0.iter().map(|c| c.to_string()).collect();
            s.push_str(&format!("{n}\t{}\n", if cs.is_empty() { "0".into() } else { cs.join(" ") }));
        }
    };
    match which {
        Which::A => univariate(&mut s, "A", series_a(order).integer_coeffs().iter().map(|c| c.to_string()).collect()),
        Which::C => univariate(&mut s, "C", series_c(order).integer_coeffs().iter().map(|c| c.to_string()).collect()),
        Which::Rb => bivariate(&mut s, "(R+B)", bivariate_red_edges(order)),
        Which::Fg => bivariate(&mut s, "(F+G)", bivariate_internal_red(order)),
    }
    s
}

fn verify(map: &Path, coords: Option<&Path>) -> Result<bool> {
    let mut rows: Vec<(&str, String)> = Vec::new();
    let mut ok = true;
    let mut row = |rows: &mut Vec<(&str, String)>, name, pass: bool, detail: String| {
        ok &= pass;
        let status = if pass { "PASS" } else { "FAIL" };
        rows.push((name, if detail.is_empty() { status.to_string() } else { format!("{status}\t{detail}") }));
    };
    let first =
        |vs: &[Violation]| vs.first().map(|v| format!("{} violation(s), first: {v}", vs.len())).unwrap_or_default();

    let parsed = MapFile::parse(&read(map)?).map_err(CliError::from).and_then(|f| {
        let t = f.triangulation()?;
        Ok((f, t))
    });
    match parsed {
        Err(e) => row(&mut rows, "map", false, e.to_string()),
        Ok((f, t)) => {
            row(&mut rows, "map", true, format!("{} inner vertices", t.inner_vertex_count()));
            let mut structure = None;
            match (f.partition(&t), f.structure(&t)) {
                (Err(e), _) | (_, Err(e)) => row(&mut rows, "partition", false, format!("{}: {e}", e.code())),
                (Ok(None), _) => rows.push(("partition", "ABSENT".into())),
                (Ok(Some(ep)), Ok(ts)) => {
                    let vs = verify_partition(&t, &ep);
                    row(&mut rows, "partition", vs.is_empty(), first(&vs));
                    if vs.is_empty() {
                        let k = find_right_alternating_cycles(&t, &ep).len();
                        rows.push(("minimal", if k == 0 { "yes".into() } else { format!("no ({k} right 4-cycles)") }));
                    }
                    match ts {
                        Some(ts) => {
                            let vs = verify_structure(&t, &ts);
                            row(&mut rows, "structure", vs.is_empty(), first(&vs));
                            structure = vs.is_empty().then_some(ts);
                        }
                        None => rows.push(("structure", "ABSENT".into())),
                    }
                }
            }
            if let Some(path) = coords {
                match parse_coords(&read(path)?) {
                    Err(e) => row(&mut rows, "drawing", false, format!("{}: {e}", e.code())),
                    Ok(d) => {
                        let r = verify_drawing(&t, &d, structure.as_ref());
                        let detail = match r.violations.first() {
                            Some(v) if !r.planar() => format!("not planar: {v}"),
                            Some(v) => format!("orientation property: {v}"),
                            None => format!("{} x {} grid", d.width, d.height),
                        };
                        row(&mut rows, "drawing", r.is_ok(), detail);
                    }
                }
            }
        }
    }
    for (name, status) in &rows {
        println!("{name}\t{status}");
    }
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
