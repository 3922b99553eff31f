//! The `maclane` command line.
//!
//! Exit codes: 0 success or yes, 1 definite no, 2 bad input, 3 budget
//! exhausted or interrupted.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error as ThisError;

use crate::cycle_space::{check_basis, DEFAULT_BASIS_BUDGET};
use crate::embedder::{embed_from_simple_basis, planarity_by_blocks, BasisVerdict, BlockOutcome};
use crate::embedding::Embedding;
use crate::error::Error;
use crate::graph::Graph;
use crate::io;
use crate::layout::{render_svg, tutte_layout};
use crate::oracle::{
    enumerate_two_connected_graphs, is_planar_bruteforce, random_planar_two_connected,
    DEFAULT_ROTATION_BUDGET,
};

pub const BUDGET_VAR: &str = "MACLANE_BUDGET";

pub const EXIT_OK: u8 = 0;
pub const EXIT_NO: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "maclane", version, about = "Planarity via simple cycle bases")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check whether a basis file is a simple cycle basis of a graph.
    VerifyBasis { graph: PathBuf, basis: PathBuf },
    /// Build the embedding realizing a simple basis.
    Embed {
        graph: PathBuf,
        basis: PathBuf,
        /// where to write the rotation system
        #[arg(short, long)]
        out: PathBuf,
        /// also draw the embedding as SVG
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Write the facial basis that omits one face of a planar embedding.
    ExtractBasis {
        embedding: PathBuf,
        face: usize,
        /// write here instead of stdout
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Decide planarity, block by block.
    Planarity {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Basis)]
        method: Method,
        /// search budget per block (overrides MACLANE_BUDGET)
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Generate test graphs.
    #[command(subcommand)]
    Gen(Gen),
    /// Draw an embedding as SVG.
    Render {
        embedding: PathBuf,
        /// face placed on the outside (default: a longest face)
        #[arg(long)]
        face: Option<usize>,
        #[arg(short, long)]
        out: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum Gen {
    /// Every 2-connected graph up to isomorphism, as concatenated edge lists.
    Enumerate {
        #[arg(long)]
        max_vertices: usize,
        #[arg(long)]
        max_edges: Option<usize>,
        /// allowed parallel copies of an edge
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
        multiplicity: u8,
    },
    /// A random planar 2-connected graph, printed as an edge list.
    Random {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        vertices: usize,
        /// also write its embedding
        #[arg(long)]
        embedding: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Basis,
    Rotations,
}

#[derive(Debug, ThisError)]
enum CliError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Lib(#[from] Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(Error::NotASimpleBasis(_) | Error::ThreadCoverViolation(_)) => EXIT_NO,
            CliError::Lib(Error::SearchBudgetExceeded(_)) => EXIT_BUDGET,
            _ => EXIT_INPUT,
        }
    }
}

type CliResult = std::result::Result<u8, CliError>;

fn read(path: &Path) -> std::result::Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn write(path: &Path, text: &str) -> std::result::Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn in_file<T>(path: &Path, r: crate::Result<T>) -> std::result::Result<T, CliError> {
    r.map_err(|e| match e {
        Error::Parse { .. } => CliError::Input(format!("{}: {e}", path.display())),
        e => CliError::Lib(e),
    })
}

/// Parses `args` and runs the command. `env_budget` is the value of
/// `MACLANE_BUDGET`, if set.
pub fn run<I, T>(args: I, env_budget: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return EXIT_INPUT;
            }
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
    };
    match dispatch(cli.command, env_budget, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(command: Command, env_budget: Option<&str>, out: &mut dyn Write) -> CliResult {
    match command {
        Command::VerifyBasis { graph, basis } => verify_basis(&graph, &basis, out),
        Command::Embed {
            graph,
            basis,
            out: target,
            svg,
        } => embed(&graph, &basis, &target, svg.as_deref(), out),
        Command::ExtractBasis {
            embedding,
            face,
            out: target,
        } => extract_basis(&embedding, face, target.as_deref(), out),
        Command::Planarity {
            graph,
            method,
            budget,
        } => {
            let budget = match (budget, env_budget) {
                (Some(b), _) => b,
                (None, Some(s)) => s.trim().parse().map_err(|_| {
                    CliError::Input(format!(
                        "{BUDGET_VAR} must be a non-negative integer, got {s:?}"
                    ))
                })?,
                (None, None) => match method {
                    Method::Basis => DEFAULT_BASIS_BUDGET,
                    Method::Rotations => DEFAULT_ROTATION_BUDGET,
                },
            };
            planarity(&graph, method, budget, out)
        }
        Command::Gen(gen) => generate(gen, out),
        Command::Render {
            embedding,
            face,
            out: target,
        } => render(&embedding, face, &target),
    }
}

fn emit(out: &mut dyn Write, text: &str) -> std::result::Result<(), CliError> {
    out.write_all(text.as_bytes())
        .map_err(|source| CliError::Io {
            path: PathBuf::from("<stdout>"),
            source,
        })
}

fn verify_basis(graph: &Path, basis: &Path, out: &mut dyn Write) -> CliResult {
    let g = in_file(graph, io::read_graph(&read(graph)?))?;
    let b = in_file(basis, io::read_basis(&read(basis)?))?;
    let report = check_basis(&g, &b)?;
    if report.is_simple() {
        emit(out, "simple-basis: yes\n")?;
        Ok(EXIT_OK)
    } else {
        let mut text = String::from("simple-basis: no\n");
        for line in report.diagnostics() {
            text.push_str(&line);
            text.push('\n');
        }
        emit(out, &text)?;
        Ok(EXIT_NO)
    }
}

fn embed(
    graph: &Path,
    basis: &Path,
    target: &Path,
    svg: Option<&Path>,
    out: &mut dyn Write,
) -> CliResult {
    let g = in_file(graph, io::read_graph(&read(graph)?))?;
    let b = in_file(basis, io::read_basis(&read(basis)?))?;
    let cert = embed_from_simple_basis(&g, &b)?;
    write(target, &io::write_embedding(&cert.embedding))?;
    if let Some(svg) = svg {
        let layout = tutte_layout(&g, &cert.residual_face);
        write(svg, &render_svg(&g, &layout))?;
    }
    emit(out, &io::write_certificate(&cert)?)?;
    Ok(EXIT_OK)
}

fn extract_basis(
    embedding: &Path,
    face: usize,
    target: Option<&Path>,
    out: &mut dyn Write,
) -> CliResult {
    let emb = in_file(embedding, io::read_embedding(&read(embedding)?))?;
    if !emb.is_planar()? {
        return Err(Error::NotPlanarEmbedding.into());
    }
    let faces = emb.faces()?;
    let f = faces.get(face).ok_or(Error::FaceIndexOutOfRange {
        index: face,
        count: faces.len(),
    })?;
    let text = io::write_basis(&emb.facial_basis(f)?);
    match target {
        Some(path) => write(path, &text)?,
        None => emit(out, &text)?,
    }
    Ok(EXIT_OK)
}

fn planarity(graph: &Path, method: Method, budget: u64, out: &mut dyn Write) -> CliResult {
    let g = in_file(graph, io::read_graph(&read(graph)?))?;
    let mut lines = Vec::new();
    let mut any_no = false;
    let mut any_unknown = false;
    match method {
        Method::Basis => {
            for (i, (block, outcome)) in planarity_by_blocks(&g, budget).into_iter().enumerate() {
                lines.push(format!("block {i}: {}", block.edge_set()));
                match outcome {
                    BlockOutcome::Bridge => lines.push("  bridge".into()),
                    BlockOutcome::Decided(BasisVerdict::Planar(cert)) => {
                        lines.push(format!("  simple basis: {} elements", cert.basis.len()));
                        lines.push(format!(
                            "  residual: {}",
                            cert.embedding.residual_face.circuit()
                        ));
                        for f in cert.embedding.embedding.faces()? {
                            lines.push(format!("  face: {}", f.circuit()));
                        }
                        for l in io::write_embedding(&cert.embedding.embedding).lines() {
                            lines.push(format!("  rotation {l}"));
                        }
                    }
                    BlockOutcome::Decided(BasisVerdict::NonPlanar(att)) => {
                        any_no = true;
                        lines.push(format!(
                            "  no simple basis: exhausted {} circuits, dimension {}, {} steps",
                            att.circuits, att.dimension, att.steps
                        ));
                    }
                    BlockOutcome::Unknown(Error::SearchBudgetExceeded(_)) => {
                        any_unknown = true;
                        lines.push("  budget exhausted".into());
                    }
                    BlockOutcome::Unknown(e) => return Err(e.into()),
                }
            }
        }
        Method::Rotations => {
            for (i, block) in g.block_decomposition().into_iter().enumerate() {
                lines.push(format!("block {i}: {}", block.edge_set()));
                match is_planar_bruteforce(&block, budget) {
                    Ok(true) => lines.push("  planar rotation system found".into()),
                    Ok(false) => {
                        any_no = true;
                        lines.push("  no rotation system satisfies Euler's formula".into());
                    }
                    Err(Error::SearchBudgetExceeded(_)) => {
                        any_unknown = true;
                        lines.push("  budget exhausted".into());
                    }
                    Err(e) => return Err(e.into()),
                }
            }
        }
    }
    let (verdict, code) = if any_no {
        ("no".to_string(), EXIT_NO)
    } else if any_unknown {
        (format!("unknown({budget})"), EXIT_BUDGET)
    } else {
        ("yes".to_string(), EXIT_OK)
    };
    let mut text = format!("planar: {verdict}\n");
    for l in lines {
        text.push_str(&l);
        text.push('\n');
    }
    emit(out, &text)?;
    Ok(code)
}

fn generate(gen: Gen, out: &mut dyn Write) -> CliResult {
    match gen {
        Gen::Enumerate {
            max_vertices,
            max_edges,
            multiplicity,
        } => {
            if max_vertices > 7 {
                return Err(CliError::Input(
                    "enumeration is limited to 7 vertices".into(),
                ));
            }
            let graphs = enumerate_two_connected_graphs(
                max_vertices,
                max_edges.unwrap_or(usize::MAX),
                multiplicity,
            );
            for (i, g) in graphs.enumerate() {
                emit(out, &format!("# graph {i}\n{}", io::write_graph(&g)?))?;
            }
        }
        Gen::Random {
            seed,
            vertices,
            embedding,
        } => {
            if vertices < 3 {
                return Err(CliError::Input("need at least 3 vertices".into()));
            }
            let (g, emb) = random_planar_two_connected(seed, vertices);
            if let Some(path) = embedding {
                write(&path, &io::write_embedding(&emb))?;
            }
            emit(out, &io::write_graph(&g)?)?;
        }
    }
    Ok(EXIT_OK)
}

fn render(embedding: &Path, face: Option<usize>, target: &Path) -> CliResult {
    let emb: Embedding = in_file(embedding, io::read_embedding(&read(embedding)?))?;
    let faces = emb.faces()?;
    let outer = match face {
        Some(i) => faces.get(i).ok_or(Error::FaceIndexOutOfRange {
            index: i,
            count: faces.len(),
        })?,
        // first of the longest faces
        None => faces
            .iter()
            .rev()
            .max_by_key(|f| f.len())
            .ok_or(Error::FaceNotInEmbedding)?,
    };
    let g: &Graph = emb.graph();
    write(target, &render_svg(g, &tutte_layout(g, outer)))?;
    Ok(EXIT_OK)
}
