//! Command-line front end: parse elements and roots, run computations in
//! the double affine Weyl semigroup, and emit text, JSON, or DOT.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 domain error (level
//! zero, non-root, hypothesis violation), 3 internal cap or assertion.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::result::Result;
use std::sync::Arc;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use daws::{oracle, Error as DawsError, *};

pub mod parse;
pub mod render;
pub mod selftest;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Syntax { pos: usize, msg: String },
    Domain(DawsError),
    Internal(DawsError),
    Io(String),
}

impl CliError {
    pub fn domain(e: DawsError) -> CliError {
        match e {
            DawsError::CapExceeded { .. } | DawsError::IterationGuard(_) => CliError::Internal(e),
            other => CliError::Domain(other),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Syntax { .. } => 1,
            CliError::Domain(_) => 2,
            CliError::Internal(_) | CliError::Io(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{}", msg),
            CliError::Syntax { pos, msg } => write!(f, "syntax error at byte {}: {}", pos, msg),
            CliError::Domain(e) => write!(f, "domain error: {}", e),
            CliError::Internal(e) => write!(f, "internal error: {}", e),
            CliError::Io(msg) => write!(f, "io error: {}", msg),
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TypeArg {
    A,
    D,
    E,
}

impl TypeArg {
    fn label(self) -> TypeLabel {
        match self {
            TypeArg::A => TypeLabel::A,
            TypeArg::D => TypeLabel::D,
            TypeArg::E => TypeLabel::E,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Dot,
}

#[derive(Parser, Debug)]
#[command(
    name = "daws",
    about = "Exact Bruhat-order computations in the double affine Weyl semigroup",
    disable_help_subcommand = true
)]
struct Cli {
    /// Simply-laced type of the finite root system.
    #[arg(long = "type", global = true, value_enum, default_value_t = TypeArg::A)]
    type_: TypeArg,

    /// Rank; inferred from the first coordinate vector when omitted.
    #[arg(long, global = true)]
    rank: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,

    /// Seed for the randomized selftest suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Safety cap for enumeration scans.
    #[arg(long, global = true, default_value_t = daws::DEFAULT_CAP)]
    cap: usize,

    /// Write the output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Length of an element, with its big/small breakdown in JSON.
    Len {
        #[arg(allow_hyphen_values = true)]
        elt: String,
    },
    /// The length difference set L_{x, alpha}.
    Ldset {
        #[arg(allow_hyphen_values = true)]
        elt: String,
        #[arg(allow_hyphen_values = true)]
        root: String,
    },
    /// All cocovers of an element.
    Cocovers {
        #[arg(allow_hyphen_values = true)]
        elt: String,
    },
    /// All covers of an element.
    Covers {
        #[arg(allow_hyphen_values = true)]
        elt: String,
    },
    /// Bruhat comparison: is the first element <= the second?
    Leq {
        #[arg(allow_hyphen_values = true)]
        lower: String,
        #[arg(allow_hyphen_values = true)]
        upper: String,
    },
    /// The finite Bruhat interval between two elements.
    Interval {
        #[arg(allow_hyphen_values = true)]
        lower: String,
        #[arg(allow_hyphen_values = true)]
        upper: String,
    },
    /// Lattice points of a lower graph inside a window, corners marked.
    Graph {
        #[arg(allow_hyphen_values = true)]
        elt: String,
        /// Finite part nu, as "1,0" or a full root literal.
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
        /// Window R0 R1 J0 J1.
        #[arg(long, num_args = 4, allow_negative_numbers = true, value_names = ["R0", "R1", "J0", "J1"])]
        window: Vec<i64>,
    },
    /// The quantum Bruhat graph restricted to a word-length ball.
    Qbg {
        #[arg(long)]
        radius: usize,
    },
    /// Oracle agreement suites; nonzero exit on any mismatch.
    Selftest,
}

fn resolve_system(cli: &Cli) -> Result<Arc<RootSystem>, CliError> {
    let first_literal = match &cli.command {
        Command::Len { elt }
        | Command::Cocovers { elt }
        | Command::Covers { elt }
        | Command::Graph { elt, .. }
        | Command::Ldset { elt, .. } => Some(elt.as_str()),
        Command::Leq { lower, .. } | Command::Interval { lower, .. } => Some(lower.as_str()),
        Command::Qbg { .. } | Command::Selftest => None,
    };
    let rank = match (cli.rank, first_literal) {
        (Some(r), _) => r,
        (None, Some(text)) => parse::infer_rank(text).ok_or_else(|| {
            CliError::Usage("cannot infer --rank from the arguments".to_string())
        })?,
        (None, None) => {
            return Err(CliError::Usage(
                "--rank is required for this subcommand".to_string(),
            ))
        }
    };
    RootSystem::new(cli.type_.label(), rank).map_err(CliError::domain)
}

fn sorted_pairs(
    mut rows: Vec<(DoubleAffineRoot, SemigroupElement, Option<u8>)>,
) -> Vec<(DoubleAffineRoot, SemigroupElement, Option<u8>)> {
    rows.sort_by_key(|(root, y, _)| (y.length(), render::element(y), render::root(root)));
    rows
}

fn reject_dot(format: FormatArg) -> Result<(), CliError> {
    if format == FormatArg::Dot {
        return Err(CliError::Usage(
            "this subcommand has no dot output; use --format text or json".to_string(),
        ));
    }
    Ok(())
}

fn execute(cli: &Cli) -> Result<(String, i32), CliError> {
    let mut out = String::new();
    match &cli.command {
        Command::Len { elt } => {
            reject_dot(cli.format)?;
            let sys = resolve_system(cli)?;
            let x = parse::parse_element(&sys, elt)?;
            let b = x.length_breakdown();
            match cli.format {
                FormatArg::Text => writeln!(out, "{}", b.total()).unwrap(),
                FormatArg::Json => writeln!(
                    out,
                    "{}",
                    json!({"length": b.total(), "big": b.big, "small": b.small})
                )
                .unwrap(),
                FormatArg::Dot => unreachable!(),
            }
        }
        Command::Ldset { elt, root } => {
            reject_dot(cli.format)?;
            let sys = resolve_system(cli)?;
            let x = parse::parse_element(&sys, elt)?;
            let alpha = parse::parse_root(&sys, root)?;
            let lds = daws::bruhat::length_diff_set_with_cap(&x, &alpha, cli.cap)
                .map_err(CliError::domain)?;
            match cli.format {
                FormatArg::Text => {
                    for beta in &lds.members {
                        writeln!(out, "{}", render::root(beta)).unwrap();
                    }
                }
                FormatArg::Json => {
                    let roots: Vec<_> = lds.members.iter().map(render::root_json).collect();
                    writeln!(out, "{}", json!({ "roots": roots })).unwrap();
                }
                FormatArg::Dot => unreachable!(),
            }
        }
        Command::Cocovers { elt } => {
            reject_dot(cli.format)?;
            let sys = resolve_system(cli)?;
            let x = parse::parse_element(&sys, elt)?;
            let rows = sorted_pairs(
                cocovers(&x)
                    .map_err(CliError::domain)?
                    .into_iter()
                    .map(|c| {
                        let case = c.descriptor.as_ref().map(|d| d.case_id);
                        (c.alpha, c.y, case)
                    })
                    .collect(),
            );
            render_pairs(&mut out, cli.format, "cocovers", rows);
        }
        Command::Covers { elt } => {
            reject_dot(cli.format)?;
            let sys = resolve_system(cli)?;
            let x = parse::parse_element(&sys, elt)?;
            let rows = sorted_pairs(
                covers(&x)
                    .map_err(CliError::domain)?
                    .into_iter()
                    .map(|(r, y)| (r, y, None))
                    .collect(),
            );
            render_pairs(&mut out, cli.format, "covers", rows);
        }
        Command::Leq { lower, upper } => {
            reject_dot(cli.format)?;
            let sys = resolve_system(cli)?;
            let y = parse::parse_element(&sys, lower)?;
            let x = parse::parse_element(&sys, upper)?;
            let ans = is_leq(&y, &x).map_err(CliError::domain)?;
            match cli.format {
                FormatArg::Text => writeln!(out, "{}", ans).unwrap(),
                FormatArg::Json => writeln!(out, "{}", json!({ "leq": ans })).unwrap(),
                FormatArg::Dot => unreachable!(),
            }
        }
        Command::Interval { lower, upper } => {
            let sys = resolve_system(cli)?;
            let y = parse::parse_element(&sys, lower)?;
            let x = parse::parse_element(&sys, upper)?;
            let members = interval(&y, &x).map_err(CliError::domain)?;
            let mut sorted: Vec<&SemigroupElement> = members.iter().collect();
            sorted.sort_by_key(|z| (z.length(), render::element(z)));
            match cli.format {
                FormatArg::Text => {
                    for z in sorted {
                        writeln!(out, "{}", render::element(z)).unwrap();
                    }
                }
                FormatArg::Json => {
                    let edges = hasse_edges(&members).map_err(CliError::domain)?;
                    let elements: Vec<String> =
                        sorted.iter().map(|z| render::element(z)).collect();
                    let edges: Vec<_> = edges
                        .iter()
                        .map(|(lo, hi, root)| {
                            json!({
                                "lower": render::element(lo),
                                "upper": render::element(hi),
                                "root": render::root_json(root),
                            })
                        })
                        .collect();
                    writeln!(out, "{}", json!({ "elements": elements, "edges": edges }))
                        .unwrap();
                }
                FormatArg::Dot => {
                    let edges = hasse_edges(&members).map_err(CliError::domain)?;
                    writeln!(out, "digraph interval {{").unwrap();
                    writeln!(out, "  rankdir=BT;").unwrap();
                    for z in sorted {
                        writeln!(out, "  {};", render::quote(&render::element(z))).unwrap();
                    }
                    for (lo, hi, root) in edges {
                        writeln!(
                            out,
                            "  {} -> {} [label={}];",
                            render::quote(&render::element(&lo)),
                            render::quote(&render::element(&hi)),
                            render::quote(&render::root(&root)),
                        )
                        .unwrap();
                    }
                    writeln!(out, "}}").unwrap();
                }
            }
        }
        Command::Graph { elt, nu, window } => {
            let sys = resolve_system(cli)?;
            let x = parse::parse_element(&sys, elt)?;
            let nu = parse::parse_finite_root(&sys, nu)?;
            let win = oracle::ScanWindow {
                r_min: window[0],
                r_max: window[1],
                j_min: window[2],
                j_max: window[3],
                cap: cli.cap,
            };
            let points = oracle::gamma_scan(&x, &nu, &win).map_err(CliError::domain)?;
            let corner_set: Vec<(i64, i64)> = corners(&x, &nu)
                .map_err(CliError::domain)?
                .into_iter()
                .map(|c| (c.r(), c.j()))
                .filter(|&(r, j)| win.contains(r, j))
                .collect();
            match cli.format {
                FormatArg::Text => {
                    for &(r, j) in &points {
                        let mark = if corner_set.contains(&(r, j)) {
                            " corner"
                        } else {
                            ""
                        };
                        writeln!(out, "{} {}{}", r, j, mark).unwrap();
                    }
                }
                FormatArg::Json => {
                    let pts: Vec<_> = points.iter().map(|&(r, j)| json!([r, j])).collect();
                    let cs: Vec<_> = corner_set.iter().map(|&(r, j)| json!([r, j])).collect();
                    writeln!(
                        out,
                        "{}",
                        json!({ "nu": nu.coords(), "points": pts, "corners": cs })
                    )
                    .unwrap();
                }
                FormatArg::Dot => {
                    writeln!(out, "graph gamma {{").unwrap();
                    writeln!(out, "  node [shape=point, width=0.1];").unwrap();
                    for &(r, j) in &points {
                        let extra = if corner_set.contains(&(r, j)) {
                            ", shape=circle, width=0.2, color=red"
                        } else {
                            ""
                        };
                        writeln!(
                            out,
                            "  \"{},{}\" [pos=\"{},{}!\"{}];",
                            r, j, r, j, extra
                        )
                        .unwrap();
                    }
                    writeln!(out, "}}").unwrap();
                }
            }
        }
        Command::Qbg { radius } => {
            if cli.rank.is_none() {
                return Err(CliError::Usage(
                    "--rank is required for qbg".to_string(),
                ));
            }
            let sys = resolve_system(cli)?;
            let ball: Vec<AffineWeylElement> = oracle::affine_ball(&sys, *radius)
                .into_iter()
                .map(|(w, _)| w)
                .collect();
            let mut labels: Vec<(String, AffineWeylElement)> = ball
                .iter()
                .map(|w| (render::affine_word(w), w.clone()))
                .collect();
            labels.sort_by_key(|(s, w)| (w.length(), s.clone()));
            let mut edges = Vec::new();
            for (_, target) in &labels {
                for (_, source) in &labels {
                    let t = target.inverse().compose(source);
                    let Some(alpha) = t.as_reflection_root() else {
                        continue;
                    };
                    if let Some(edge) = qbg_edge(target, &alpha).map_err(CliError::domain)? {
                        debug_assert_eq!(&edge.source, source);
                        edges.push(edge);
                    }
                }
            }
            edges.sort_by_key(|e| {
                (
                    e.source.length(),
                    render::affine_word(&e.source),
                    render::affine_word(&e.target),
                )
            });
            let label = |alpha: &AffineRoot| -> String {
                format!(
                    "{};{}",
                    alpha
                        .nu()
                        .coords()
                        .iter()
                        .map(|c| c.to_string())
                        .collect::<Vec<_>>()
                        .join(","),
                    alpha.r()
                )
            };
            match cli.format {
                FormatArg::Text => {
                    for e in &edges {
                        writeln!(
                            out,
                            "{} -> {}\t{}\t{}",
                            render::affine_word(&e.source),
                            render::affine_word(&e.target),
                            match e.kind {
                                QbgEdgeKind::Bruhat => "bruhat",
                                QbgEdgeKind::Quantum => "quantum",
                            },
                            label(&e.label)
                        )
                        .unwrap();
                    }
                }
                FormatArg::Json => {
                    let vs: Vec<&String> = labels.iter().map(|(s, _)| s).collect();
                    let es: Vec<_> = edges
                        .iter()
                        .map(|e| {
                            json!({
                                "source": render::affine_word(&e.source),
                                "target": render::affine_word(&e.target),
                                "label": [e.label.nu().coords(), e.label.r()],
                                "kind": match e.kind {
                                    QbgEdgeKind::Bruhat => "bruhat",
                                    QbgEdgeKind::Quantum => "quantum",
                                },
                            })
                        })
                        .collect();
                    writeln!(out, "{}", json!({ "vertices": vs, "edges": es })).unwrap();
                }
                FormatArg::Dot => {
                    writeln!(out, "digraph qbg {{").unwrap();
                    writeln!(out, "  rankdir=BT;").unwrap();
                    for (s, _) in &labels {
                        writeln!(out, "  {};", render::quote(s)).unwrap();
                    }
                    for e in &edges {
                        writeln!(
                            out,
                            "  {} -> {} [label={}, style={}];",
                            render::quote(&render::affine_word(&e.source)),
                            render::quote(&render::affine_word(&e.target)),
                            render::quote(&label(&e.label)),
                            match e.kind {
                                QbgEdgeKind::Bruhat => "solid",
                                QbgEdgeKind::Quantum => "dashed",
                            }
                        )
                        .unwrap();
                    }
                    writeln!(out, "}}").unwrap();
                }
            }
        }
        Command::Selftest => {
            let report = selftest::run(cli.seed);
            out.push_str(&report.output);
            if report.failures > 0 {
                writeln!(out, "{} suite(s) failed", report.failures).unwrap();
                return Ok((out, 3));
            }
        }
    }
    Ok((out, 0))
}

fn render_pairs(
    out: &mut String,
    format: FormatArg,
    key: &str,
    rows: Vec<(DoubleAffineRoot, SemigroupElement, Option<u8>)>,
) {
    match format {
        FormatArg::Text => {
            for (root, y, _) in rows {
                writeln!(out, "{}\t{}", render::root(&root), render::element(&y)).unwrap();
            }
        }
        FormatArg::Json => {
            let items: Vec<_> = rows
                .iter()
                .map(|(root, y, case)| {
                    json!({
                        "root": render::root_json(root),
                        "element": render::element(y),
                        "case": case,
                    })
                })
                .collect();
            writeln!(out, "{}", json!({ key: items })).unwrap();
        }
        FormatArg::Dot => unreachable!("dot rejected earlier"),
    }
}

/// Runs the CLI on the given argv; returns (exit code, stdout, stderr).
pub fn run_captured<I, S>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    (0, e.to_string(), String::new())
                }
                _ => (1, String::new(), e.to_string()),
            };
        }
    };
    match execute(&cli) {
        Ok((payload, code)) => {
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &payload) {
                    return (3, String::new(), format!("io error: {}", e));
                }
                (code, String::new(), String::new())
            } else {
                (code, payload, String::new())
            }
        }
        Err(e) => (e.exit_code(), String::new(), format!("{}\n", e)),
    }
}
