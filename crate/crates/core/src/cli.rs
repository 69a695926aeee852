//! Command-line front end. Every command returns its output and exit code
//! instead of printing, so it can be tested in-process.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use rayon::prelude::*;

use crate::corpus::{CorpusItem, CORPUS};
use crate::error::{Error, Result};
use crate::homology::build_model;
use crate::norm::{norm_oracle, IntersectionNorm, DEFAULT_MAX_EDGES, DEFAULT_ORACLE_BOUND};
use crate::polytope::parse_polygon;
use crate::ribbon::{parse_collection, RibbonGraph};
use crate::thurston::{certify_with, realize_torus_polygon, Verdict};

#[derive(Debug, Parser)]
#[command(
    name = "internorm",
    version,
    about = "Intersection norms of filling curve collections"
)]
pub struct Cli {
    /// Largest edge count accepted by coorientation enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_EDGES)]
    pub max_edges: usize,
    /// Print only result lines.
    #[arg(long, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Vertex, edge, face, genus and component counts.
    Check { file: PathBuf },
    /// Norm of an integer class given as comma-separated coordinates.
    Norm {
        file: PathBuf,
        #[arg(allow_hyphen_values = true)]
        class: String,
        /// Use the minimum-cycle search instead of the dual ball.
        #[arg(long)]
        oracle: bool,
        /// Potential bound for the minimum-cycle search.
        #[arg(long, default_value_t = DEFAULT_ORACLE_BOUND)]
        bound: u32,
    },
    /// Dual unit ball with symmetry and parity flags.
    Ball { file: PathBuf },
    /// Realizability report.
    Certify { file: PathBuf },
    /// Geodesic collection realizing a symmetric parity polygon on the torus.
    RealizeTorus { polygon: PathBuf },
    /// Checks every bundled example.
    Corpus,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: 0,
        }
    }

    fn error(err: &Error) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
            code: err.exit_code(),
        }
    }

    fn from_result(result: Result<String>) -> Self {
        match result {
            Ok(s) => Outcome::ok(s),
            Err(e) => Outcome::error(&e),
        }
    }
}

/// Parses arguments (including the program name) and runs the command.
/// Usage errors exit with 1.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            }
        }
    }
}

pub fn execute(cli: &Cli) -> Outcome {
    let max_edges = cli.max_edges;
    match &cli.command {
        Command::Check { file } => with_graph(file, |g| Ok(cmd_check(g))),
        Command::Norm {
            file,
            class,
            oracle,
            bound,
        } => with_graph(file, |g| cmd_norm(g, class, *oracle, *bound, max_edges)),
        Command::Ball { file } => with_graph(file, |g| cmd_ball(g, max_edges)),
        Command::Certify { file } => with_graph(file, |g| cmd_certify(g, max_edges)),
        Command::RealizeTorus { polygon } => match read(polygon) {
            Ok(text) => Outcome::from_result(cmd_realize_torus(&text)),
            Err(o) => o,
        },
        Command::Corpus => cmd_corpus(max_edges, cli.quiet),
    }
}

fn read(path: &Path) -> std::result::Result<String, Outcome> {
    std::fs::read_to_string(path).map_err(|e| Outcome {
        stdout: String::new(),
        stderr: format!("error: cannot read {}: {e}\n", path.display()),
        code: 1,
    })
}

fn with_graph(path: &Path, f: impl FnOnce(&RibbonGraph) -> Result<String>) -> Outcome {
    match read(path) {
        Ok(text) => Outcome::from_result(parse_collection(&text).and_then(|g| f(&g))),
        Err(o) => o,
    }
}

pub fn cmd_check(g: &RibbonGraph) -> String {
    format!(
        "vertices: {}\nedges: {}\nfaces: {}\ngenus: {}\ncomponents: {}\n",
        g.vertex_count(),
        g.edge_count(),
        g.face_count(),
        g.genus(),
        g.components().len()
    )
}

/// Parses `"1,-2,0"`; only integers are accepted.
pub fn parse_class(text: &str) -> Result<Vec<i64>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|t| {
            t.trim().parse::<i64>().map_err(|_| {
                Error::parse(
                    1,
                    format!("class coordinate `{}` is not an integer", t.trim()),
                )
            })
        })
        .collect()
}

pub fn cmd_norm(
    g: &RibbonGraph,
    class: &str,
    oracle: bool,
    bound: u32,
    max_edges: usize,
) -> Result<String> {
    let a = parse_class(class)?;
    if g.genus() == 0 {
        return Err(Error::TrivialNorm);
    }
    let model = build_model(g);
    if a.len() != model.rank() {
        return Err(Error::DimensionMismatch {
            expected: model.rank(),
            got: a.len(),
        });
    }
    let value = if oracle {
        norm_oracle(&model, &a, bound)?.value
    } else {
        IntersectionNorm::compute(&model, max_edges)?.norm(&a)?
    };
    Ok(format!("{value}\n"))
}

pub fn cmd_ball(g: &RibbonGraph, max_edges: usize) -> Result<String> {
    if g.genus() == 0 {
        return Err(Error::TrivialNorm);
    }
    let model = build_model(g);
    let norm = IntersectionNorm::compute(&model, max_edges)?;
    let ball = norm.ball();
    Ok(format!(
        "{}symmetric: {}\nparity: {}\n",
        ball.to_text(),
        ball.is_symmetric(),
        ball.parity_property()
    ))
}

pub fn cmd_certify(g: &RibbonGraph, max_edges: usize) -> Result<String> {
    Ok(certify_with(g, max_edges)?.to_text())
}

pub fn cmd_realize_torus(polygon_text: &str) -> Result<String> {
    let polygon = parse_polygon(polygon_text)?;
    Ok(realize_torus_polygon(&polygon)?.to_text())
}

fn check_item(item: &CorpusItem, max_edges: usize) -> std::result::Result<String, String> {
    let g = item.graph().map_err(|e| e.to_string())?;
    if g.genus() != item.genus || g.components().len() != item.components {
        return Err(format!(
            "expected genus {} with {} components, found {} with {}",
            item.genus,
            item.components,
            g.genus(),
            g.components().len()
        ));
    }
    let report = certify_with(&g, max_edges).map_err(|e| e.to_string())?;
    if let (Some(expected), Some(ball)) = (item.ball, &report.ball) {
        let expected: Vec<Vec<i64>> = expected.iter().map(|v| v.to_vec()).collect();
        if ball.vertices() != expected.as_slice() {
            return Err("dual ball differs from the recorded one".into());
        }
    }
    if report.verdict == Verdict::Realizable && report.certificate.is_none() {
        return Err("realizable verdict without a certificate".into());
    }
    let vertices = report.ball.as_ref().map_or(0, |b| b.vertices().len());
    Ok(format!(
        "verdict {} ball_vertices {vertices}",
        report.verdict
    ))
}

/// One line per bundled item, in corpus order, then a summary line.
/// Exits with 3 when some item fails.
pub fn cmd_corpus(max_edges: usize, quiet: bool) -> Outcome {
    let results: Vec<_> = CORPUS
        .par_iter()
        .map(|item| check_item(item, max_edges))
        .collect();
    let mut out = String::new();
    let mut passed = 0;
    for (item, result) in CORPUS.iter().zip(&results) {
        let line = match result {
            Ok(summary) => {
                passed += 1;
                format!(
                    "PASS {:<22} genus {} components {} {summary}",
                    item.name, item.genus, item.components
                )
            }
            Err(why) => format!("FAIL {:<22} {why}", item.name),
        };
        if !quiet {
            let _ = writeln!(out, "{line}");
        }
    }
    let _ = writeln!(out, "corpus: {passed}/{} passed", CORPUS.len());
    Outcome {
        stdout: out,
        stderr: String::new(),
        code: if passed == CORPUS.len() { 0 } else { 3 },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const T1: &str = "vertices 1\nvertex 0: 0 1 2 3\nedges\n0 2\n1 3\nend\n";
    const T0: &str = "vertices 1\nvertex 0: 0 1 2 3\nedges\n0 1\n2 3\nend\n";

    #[test]
    fn class_parsing() {
        assert_eq!(parse_class("1, -2,0").unwrap(), vec![1, -2, 0]);
        assert_eq!(parse_class("").unwrap(), Vec::<i64>::new());
        assert_eq!(parse_class("1.5,0").unwrap_err().exit_code(), 2);
    }

    #[test]
    fn norm_and_ball_on_small_graphs() {
        let t1 = parse_collection(T1).unwrap();
        assert_eq!(cmd_norm(&t1, "1,1", false, 6, 24).unwrap(), "2\n");
        assert_eq!(cmd_norm(&t1, "1,1", true, 6, 24).unwrap(), "2\n");
        assert_eq!(cmd_norm(&t1, "1", false, 6, 24).unwrap_err().exit_code(), 3);
        let t0 = parse_collection(T0).unwrap();
        let err = cmd_ball(&t0, 24).unwrap_err();
        assert_eq!(
            (err.exit_code(), err.to_string()),
            (4, "genus 0: trivial norm".to_string())
        );
    }

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(run(["internorm", "frobnicate"]).code, 1);
        assert_eq!(run(["internorm", "--help"]).code, 0);
    }

    #[test]
    fn corpus_passes() {
        let out = cmd_corpus(DEFAULT_MAX_EDGES, true);
        assert_eq!(out.code, 0, "{}", out.stdout);
        assert_eq!(
            out.stdout,
            format!("corpus: {0}/{0} passed\n", CORPUS.len())
        );
    }
}
