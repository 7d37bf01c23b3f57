//! The `zdpoly` command line: `zdpoly (poly|verify|graph|gamma|table) <args> [flags]`.
//!
//! [`run`] writes to caller-supplied streams and returns the exit code, so the
//! binary is a two-line wrapper and every command is testable in-process.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::closedform::closed_form;
use crate::domcount::{
    brute_force_poly, gamma_from_poly, lattice_summary, ClassEngine, DominationKind,
    DEFAULT_BRUTE_LIMIT, DEFAULT_DOWNSET_LIMIT,
};
use crate::error::Error;
use crate::numtheory::{classify_family, factorize, Family};
use crate::polyring::Polynomial;
use crate::verify::{run_verification, VerificationReport, VerifyOptions};
use crate::zdgraph::{ClassGraph, DivisorClass, DEFAULT_EXPANSION_LIMIT};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_MISMATCH: u8 = 2;
pub const EXIT_CAPACITY: u8 = 3;
pub const EXIT_UNSUPPORTED: u8 = 4;

/// Upper end of `table` ranges.
pub const TABLE_MAX: u64 = 1_000_000;
/// Per-row cap on the down-set search behind `table`.
pub const TABLE_SEARCH_LIMIT: usize = 1 << 18;

#[derive(Debug, Parser)]
#[command(
    name = "zdpoly",
    version,
    about = "Domination polynomials of zero-divisor graphs of Z_n"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print D (or D_t with --total) of the zero-divisor graph of Z_n.
    Poly {
        #[arg(value_parser = clap::value_parser!(u64).range(2..))]
        n: u64,
        #[arg(long)]
        total: bool,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        #[arg(long)]
        json: bool,
        #[arg(long, env = "ZDPOLY_BRUTE_LIMIT", default_value_t = DEFAULT_BRUTE_LIMIT)]
        brute_limit: usize,
    },
    /// Compare brute force, the class engine and the closed form.
    Verify {
        #[arg(value_parser = clap::value_parser!(u64).range(2..))]
        n: u64,
        #[arg(long)]
        total: bool,
        /// Exit with status 2 when the methods disagree.
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        json: bool,
        #[arg(long, env = "ZDPOLY_BRUTE_LIMIT", default_value_t = DEFAULT_BRUTE_LIMIT)]
        brute_limit: usize,
    },
    /// Export the graph as DOT, as a vertex/edge list, or as its class quotient.
    Graph {
        #[arg(value_parser = clap::value_parser!(u64).range(2..))]
        n: u64,
        #[arg(long, value_enum, default_value_t = GraphFormat::Classes)]
        format: GraphFormat,
    },
    /// Print the domination and total domination numbers.
    Gamma {
        #[arg(value_parser = clap::value_parser!(u64).range(2..))]
        n: u64,
    },
    /// One summary row per n in the range with a nonempty graph.
    Table {
        #[arg(value_parser = clap::value_parser!(u64).range(2..=TABLE_MAX))]
        from: u64,
        #[arg(value_parser = clap::value_parser!(u64).range(2..=TABLE_MAX))]
        to: u64,
        #[arg(long)]
        total: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Auto,
    Brute,
    Classes,
    Closed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
    Classes,
}

fn kind_of(total: bool) -> DominationKind {
    if total {
        DominationKind::Total
    } else {
        DominationKind::Ordinary
    }
}

/// `poly --json`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyRecord {
    pub n: u64,
    pub kind: DominationKind,
    pub method: String,
    pub coeffs: Polynomial,
    pub gamma: Option<usize>,
}

/// `graph --format classes`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassesRecord {
    pub n: u64,
    pub vertex_count: u64,
    pub edge_count: u64,
    pub classes: Vec<DivisorClass>,
    /// Adjacent class pairs, by divisor.
    pub adjacency: Vec<[u64; 2]>,
}

/// `graph --format json`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexRecord {
    pub n: u64,
    pub vertex_count: u64,
    pub edge_count: u64,
    pub vertices: Vec<u64>,
    pub edges: Vec<[u64; 2]>,
}

/// One `table` row. `value_at_one` is the number of dominating sets (total
/// dominating sets with `--total`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub n: u64,
    pub family: String,
    pub vertices: u64,
    pub edges: u64,
    pub gamma: Option<usize>,
    pub gamma_total: Option<usize>,
    pub kind: DominationKind,
    pub value_at_one: Option<String>,
    pub note: Option<String>,
}

/// Failure of a command, carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Capacity { .. } => EXIT_CAPACITY,
            Error::UnsupportedFamily(_) => EXIT_UNSUPPORTED,
            Error::Domain(_) => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

type CmdResult = std::result::Result<u8, Failure>;

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("records serialize")
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Poly {
            n,
            total,
            method,
            json,
            brute_limit,
        } => cmd_poly(n, kind_of(total), method, json, brute_limit, out, err),
        Command::Verify {
            n,
            total,
            strict,
            json,
            brute_limit,
        } => cmd_verify(n, kind_of(total), strict, json, brute_limit, out),
        Command::Graph { n, format } => cmd_graph(n, format, out, err),
        Command::Gamma { n } => cmd_gamma(n, out),
        Command::Table {
            from,
            to,
            total,
            json,
        } => cmd_table(from, to, kind_of(total), json, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn cmd_poly(
    n: u64,
    kind: DominationKind,
    method: MethodArg,
    json: bool,
    brute_limit: usize,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let cg = ClassGraph::build(n)?;
    let (name, poly) = match method {
        MethodArg::Auto | MethodArg::Classes => {
            ("classes", ClassEngine::default().poly(&cg, kind)?)
        }
        MethodArg::Brute => {
            let vg = cg.expand(brute_limit)?;
            ("brute", brute_force_poly(&vg, kind, brute_limit)?)
        }
        MethodArg::Closed => {
            let tag = classify_family(&factorize(n)?);
            ("closed", closed_form(n, tag, kind)?.polynomial)
        }
    };
    if cg.is_empty() {
        writeln!(err, "note: empty graph")?;
    }
    if json {
        let record = PolyRecord {
            n,
            kind,
            method: name.to_string(),
            gamma: gamma_from_poly(&poly),
            coeffs: poly,
        };
        writeln!(out, "{}", to_json(&record))?;
    } else {
        writeln!(out, "{poly}")?;
    }
    Ok(EXIT_OK)
}

fn cmd_verify(
    n: u64,
    kind: DominationKind,
    strict: bool,
    json: bool,
    brute_limit: usize,
    out: &mut dyn Write,
) -> CmdResult {
    let opts = VerifyOptions {
        brute_limit,
        ..VerifyOptions::default()
    };
    let report: VerificationReport = run_verification(n, kind, &opts)?;
    if json {
        writeln!(out, "{}", to_json(&report))?;
    } else {
        writeln!(out, "{report}")?;
    }
    Ok(if strict && report.agreement.is_mismatch() {
        EXIT_MISMATCH
    } else {
        EXIT_OK
    })
}

fn cmd_graph(n: u64, format: GraphFormat, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let cg = ClassGraph::build(n)?;
    match format {
        GraphFormat::Classes => {
            let adjacency = cg
                .adjacent_pairs()
                .map(|(i, j)| [cg.classes()[i].divisor, cg.classes()[j].divisor])
                .collect();
            let record = ClassesRecord {
                n,
                vertex_count: cg.vertex_count(),
                edge_count: cg.edge_count(),
                classes: cg.classes().to_vec(),
                adjacency,
            };
            writeln!(out, "{}", to_json(&record))?;
        }
        GraphFormat::Dot => {
            let vg = cg.expand(DEFAULT_EXPANSION_LIMIT)?;
            out.write_all(vg.to_dot().as_bytes())?;
            writeln!(err, "vertices: {}, edges: {}", vg.order(), vg.edge_count())?;
        }
        GraphFormat::Json => {
            let vg = cg.expand(DEFAULT_EXPANSION_LIMIT)?;
            let labels = vg.labels();
            let record = VertexRecord {
                n,
                vertex_count: vg.order() as u64,
                edge_count: vg.edge_count(),
                vertices: labels.to_vec(),
                edges: vg.edges().map(|(u, v)| [labels[u], labels[v]]).collect(),
            };
            writeln!(out, "{}", to_json(&record))?;
        }
    }
    Ok(EXIT_OK)
}

fn show(g: Option<usize>) -> String {
    g.map_or_else(|| "undef".to_string(), |g| g.to_string())
}

fn cmd_gamma(n: u64, out: &mut dyn Write) -> CmdResult {
    let cg = ClassGraph::build(n)?;
    // the class engine where it fits, the lattice sum beyond
    let gamma_of = |kind| -> Result<Option<usize>, Error> {
        match ClassEngine::default().poly(&cg, kind) {
            Ok(p) => Ok(gamma_from_poly(&p)),
            Err(Error::Capacity { .. }) => {
                Ok(lattice_summary(&cg, kind, DEFAULT_DOWNSET_LIMIT)?.gamma)
            }
            Err(e) => Err(e),
        }
    };
    let gamma = gamma_of(DominationKind::Ordinary)?;
    let gamma_total = gamma_of(DominationKind::Total)?;
    writeln!(
        out,
        "gamma = {}\ngamma_t = {}",
        show(gamma),
        show(gamma_total)
    )?;
    Ok(EXIT_OK)
}

fn table_row(n: u64, kind: DominationKind) -> Option<TableRow> {
    let cg = ClassGraph::build(n).ok()?;
    if cg.is_empty() {
        return None;
    }
    let family = classify_family(&factorize(n).ok()?).family;
    let family = if family == Family::Other {
        "other".to_string()
    } else {
        family.to_string()
    };
    let mut row = TableRow {
        n,
        family,
        vertices: cg.vertex_count(),
        edges: cg.edge_count(),
        gamma: None,
        gamma_total: None,
        kind,
        value_at_one: None,
        note: None,
    };
    let total = lattice_summary(&cg, DominationKind::Total, TABLE_SEARCH_LIMIT)
        .expect("total counts need no search");
    row.gamma_total = total.gamma;
    if kind == DominationKind::Total {
        row.value_at_one = Some(total.value_at_one.to_string());
    }
    match lattice_summary(&cg, DominationKind::Ordinary, TABLE_SEARCH_LIMIT) {
        Ok(d) => {
            row.gamma = d.gamma;
            if kind == DominationKind::Ordinary {
                row.value_at_one = Some(d.value_at_one.to_string());
            }
        }
        Err(e) => row.note = Some(format!("gamma and D(1) skipped: {e}")),
    }
    Some(row)
}

fn cmd_table(
    from: u64,
    to: u64,
    kind: DominationKind,
    json: bool,
    out: &mut dyn Write,
) -> CmdResult {
    if from > to {
        return Err(Failure {
            code: EXIT_USAGE,
            message: format!("empty range: {from} > {to}"),
        });
    }
    let rows: Vec<TableRow> = (from..=to)
        .into_par_iter()
        .filter_map(|n| table_row(n, kind))
        .collect();
    if json {
        writeln!(out, "{}", to_json(&rows))?;
        return Ok(EXIT_OK);
    }
    let value_header = format!("{}(1)", kind.symbol());
    writeln!(
        out,
        "{:>8}  {:<22}  {:>8}  {:>10}  {:>5}  {:>7}  {}",
        "n", "family", "|V|", "|E|", "gamma", "gamma_t", value_header
    )?;
    for row in &rows {
        let value = match (&row.value_at_one, &row.note) {
            (Some(v), _) => v.clone(),
            (None, Some(note)) => note.clone(),
            (None, None) => String::new(),
        };
        writeln!(
            out,
            "{:>8}  {:<22}  {:>8}  {:>10}  {:>5}  {:>7}  {}",
            row.n,
            row.family,
            row.vertices,
            row.edges,
            show(row.gamma),
            show(row.gamma_total),
            value
        )?;
    }
    Ok(EXIT_OK)
}
