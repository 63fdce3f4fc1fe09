//! `lcrid`: command line front end for series-parallel LCR network
//! analysis.
//!
//! Every subcommand prints one result to stdout, as a single JSON
//! document by default or as human-readable text with `--output text`.
//! Diagnostics go to stderr. Exit codes: 0 on success, 1 when an
//! analysis refuses its input (the counting criterion on a three-kind
//! network, class queries on resistor-bearing networks, relation
//! strata over the size guards), 2 on usage errors.
//!
//! Randomized analyses take their seed from `--seed`, falling back to
//! the `LCRID_SEED` environment variable and then to 42. Identical
//! argv and seed produce byte-identical output.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use lcr_core::identify::IdentifyError;
use lcr_core::typesys::{lc_class, lc_table_lookup, type_of, LcTableRow, ShapeExpr};
use lcr_core::{
    build_consteq, count_criterion, find_relations, is_locally_identifiable, monomial_stratum,
    type_closure, Alternation, CoefficientMap, CombineOp, ConstEq, ElementKind, GhProblem,
    IdentVerdict, LcClass, Network, Parameterization, Shape, Side, TypeQuad, FORBIDDEN_TYPES,
};

const DEFAULT_SEED: u64 = 42;

#[derive(Parser)]
#[command(
    name = "lcrid",
    version,
    about = "Series-parallel LCR network analysis"
)]
struct Cli {
    /// Seed for randomized analyses; overrides the LCRID_SEED
    /// environment variable and the default 42.
    #[arg(long, global = true, value_name = "N")]
    seed: Option<u64>,

    /// Output mode.
    #[arg(long, global = true, value_enum, default_value_t = OutputMode::Json)]
    output: OutputMode,

    /// Write the result to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputMode {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Build the constitutive differential equation of a network.
    Consteq {
        /// Network expression, e.g. "(R1 | C1) & L1".
        network: String,
    },
    /// Decide local identifiability by generic Jacobian rank.
    Ident { network: String },
    /// Decide identifiability by coefficient counting; refuses
    /// networks with three element kinds.
    CountIdent { network: String },
    /// Compute the equation's type: degree gaps and alternation bits.
    Type { network: String },
    /// Classify a resistor-free network's equation as A, B, C, or D.
    LcClass { network: String },
    /// Print the dual network.
    Dual { network: String },
    /// List all candidate equation types with the unreachable ones
    /// flagged.
    Closure,
    /// Print the series and parallel combination tables for the LC
    /// classes.
    LcTables,
    /// Analyze the coefficient recovery problem for four operator
    /// shapes.
    Gh {
        /// Eight comma-separated integers m1,n1,m2,n2,m3,n3,m4,n4: the
        /// min/max degree pairs of the four operators.
        #[arg(long, value_name = "LIST")]
        shapes: String,
    },
    /// Search a bidegree stratum for polynomial relations among the
    /// equation's coefficients.
    Relations {
        network: String,
        /// Total degree in the V-side coefficients c0, c1, ...
        #[arg(long, value_name = "N")]
        cdeg: usize,
        /// Total degree in the I-side coefficients d0, d1, ...
        #[arg(long, value_name = "N")]
        ddeg: usize,
        /// Weighted degree, each ck or dk weighted by its index k.
        #[arg(long, value_name = "N")]
        wdeg: usize,
        /// Sample points for the evaluation kernel; defaults to twice
        /// the stratum size plus eight.
        #[arg(long, value_name = "N")]
        samples: Option<usize>,
    },
    /// Enumerate structurally distinct networks, optionally running a
    /// batch check over all of them.
    Enumerate {
        /// Element kinds to draw from, as letters (e.g. LC or RLC).
        #[arg(long, value_name = "KINDS")]
        kinds: String,
        /// Largest leaf count to enumerate.
        #[arg(long, value_name = "K")]
        max_leaves: usize,
        /// Batch check to run on every enumerated network.
        #[arg(long, value_enum)]
        check: Option<CheckKind>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckKind {
    /// Counting verdict equals rank verdict on every two-kind network.
    CountVsRank,
    /// Degree, gap, alternation, and type-closure bounds hold.
    Invariants,
}

/// An error already mapped to its exit code.
enum CliError {
    /// Exit 1: the analysis refused its input.
    Refused(String),
    /// Exit 2: bad arguments.
    Usage(String),
}

fn refused(e: impl std::fmt::Display) -> CliError {
    CliError::Refused(e.to_string())
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let seed = match resolve_seed(cli.seed) {
        Ok(s) => s,
        Err(e) => return fail(e),
    };
    match run(&cli.command, cli.output, seed) {
        Ok(output) => match &cli.out {
            Some(path) => match std::fs::write(path, output) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => fail(CliError::Refused(format!(
                    "cannot write {}: {e}",
                    path.display()
                ))),
            },
            None => {
                print!("{output}");
                ExitCode::SUCCESS
            }
        },
        Err(e) => fail(e),
    }
}

fn fail(e: CliError) -> ExitCode {
    let (msg, code) = match e {
        CliError::Refused(m) => (m, 1),
        CliError::Usage(m) => (m, 2),
    };
    eprintln!("lcrid: {msg}");
    ExitCode::from(code)
}

fn resolve_seed(flag: Option<u64>) -> Result<u64, CliError> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match std::env::var("LCRID_SEED") {
        Ok(text) => text
            .parse()
            .map_err(|_| CliError::Usage(format!("LCRID_SEED is not an integer: {text:?}"))),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

fn run(command: &Command, mode: OutputMode, seed: u64) -> Result<String, CliError> {
    match command {
        Command::Consteq { network } => {
            let net = parse_network(network)?;
            let eq = build_consteq(&net, Parameterization::Affine).map_err(refused)?;
            Ok(render_consteq(&net, &eq, mode))
        }
        Command::Ident { network } => {
            let net = parse_network(network)?;
            let verdict = is_locally_identifiable(&net, seed).map_err(refused)?;
            Ok(render_verdict(&net, verdict, seed, mode))
        }
        Command::CountIdent { network } => {
            let net = parse_network(network)?;
            let verdict = count_criterion(&net).map_err(refused)?;
            Ok(render_verdict(&net, verdict, seed, mode))
        }
        Command::Type { network } => {
            let net = parse_network(network)?;
            let eq = build_consteq(&net, Parameterization::Affine).map_err(refused)?;
            let quad = type_of(&eq).map_err(refused)?;
            Ok(render_type(&net, quad, mode))
        }
        Command::LcClass { network } => {
            let net = parse_network(network)?;
            let eq = build_consteq(&net, Parameterization::Affine).map_err(refused)?;
            let class = lc_class(&eq).map_err(refused)?;
            Ok(render_lc_class(&net, class, mode))
        }
        Command::Dual { network } => {
            let net = parse_network(network)?;
            Ok(render_dual(&net, mode))
        }
        Command::Closure => Ok(render_closure(mode)),
        Command::LcTables => Ok(render_lc_tables(mode)),
        Command::Gh { shapes } => {
            let shapes = parse_shapes(shapes)?;
            let problem = GhProblem::new(shapes).map_err(refused)?;
            Ok(render_gh(&problem, mode))
        }
        Command::Relations {
            network,
            cdeg,
            ddeg,
            wdeg,
            samples,
        } => {
            let net = parse_network(network)?;
            let samples = match samples {
                Some(n) => *n,
                None => default_samples(&net, *cdeg, *ddeg, *wdeg)?,
            };
            let found =
                find_relations(&net, *cdeg, *ddeg, *wdeg, samples, seed).map_err(refused)?;
            Ok(render_relations(&net, (*cdeg, *ddeg, *wdeg), &found, mode))
        }
        Command::Enumerate {
            kinds,
            max_leaves,
            check,
        } => {
            let kinds = parse_kinds(kinds)?;
            let nets = Network::enumerate(&kinds, *max_leaves).map_err(usage)?;
            let report = enumerate_report(&kinds, *max_leaves, &nets, *check, seed)?;
            Ok(render_enumerate(&report, mode))
        }
    }
}

fn parse_network(text: &str) -> Result<Network, CliError> {
    Network::parse(text).map_err(usage)
}

fn parse_shapes(text: &str) -> Result<[Shape; 4], CliError> {
    let parts: Vec<usize> = text
        .split(',')
        .map(|p| p.trim().parse())
        .collect::<Result<_, _>>()
        .map_err(|_| CliError::Usage(format!("--shapes wants eight integers, got {text:?}")))?;
    if parts.len() != 8 {
        return Err(CliError::Usage(format!(
            "--shapes wants eight integers, got {}",
            parts.len()
        )));
    }
    let mut shapes = [Shape::new(0, 0); 4];
    for (i, pair) in parts.chunks_exact(2).enumerate() {
        if pair[0] > pair[1] {
            return Err(CliError::Usage(format!(
                "shape {} has min {} above max {}",
                i + 1,
                pair[0],
                pair[1]
            )));
        }
        shapes[i] = Shape::new(pair[0], pair[1]);
    }
    Ok(shapes)
}

fn parse_kinds(text: &str) -> Result<Vec<ElementKind>, CliError> {
    let mut kinds = Vec::new();
    for c in text.chars() {
        let kind = ElementKind::from_letter(c)
            .ok_or_else(|| CliError::Usage(format!("unknown element kind {c:?} in --kinds")))?;
        if !kinds.contains(&kind) {
            kinds.push(kind);
        }
    }
    if kinds.is_empty() {
        return Err(CliError::Usage(
            "--kinds wants at least one of R, L, C".into(),
        ));
    }
    kinds.sort();
    Ok(kinds)
}

/// Smallest sample count the kernel accepts, plus slack for the
/// verification batch.
fn default_samples(
    net: &Network,
    cdeg: usize,
    ddeg: usize,
    wdeg: usize,
) -> Result<usize, CliError> {
    let eq = build_consteq(net, Parameterization::Projective).map_err(refused)?;
    let stratum = monomial_stratum(eq.v_op().shape(), eq.i_op().shape(), cdeg, ddeg, wdeg);
    Ok(2 * stratum.len() + 8)
}

// ---------------------------------------------------------------- JSON

#[derive(Serialize)]
struct CoeffJson {
    order: usize,
    poly: String,
}

#[derive(Serialize)]
struct MonicJson {
    side: &'static str,
    order: usize,
}

#[derive(Serialize)]
struct ConstEqJson {
    network: String,
    v: Vec<CoeffJson>,
    i: Vec<CoeffJson>,
    monic: MonicJson,
}

#[derive(Serialize)]
struct VerdictJson {
    network: String,
    n_params: usize,
    n_nonmonic: usize,
    generic_rank: usize,
    locally_identifiable: bool,
    method: &'static str,
    seed: u64,
}

#[derive(Serialize)]
struct TypeJson {
    network: String,
    quad: [i8; 4],
}

#[derive(Serialize)]
struct LcClassJson {
    network: String,
    class: String,
    quad: [i8; 4],
}

#[derive(Serialize)]
struct DualJson {
    network: String,
    dual: String,
}

#[derive(Serialize)]
struct ClosureEntryJson {
    quad: [i8; 4],
    forbidden: bool,
}

#[derive(Serialize)]
struct ShapeExprJson {
    min: usize,
    max_offset: i32,
}

#[derive(Serialize)]
struct TableRowJson {
    op: &'static str,
    pair: [String; 2],
    v_shape: ShapeExprJson,
    i_shape: ShapeExprJson,
    count_offset: i32,
    identifiable: bool,
    result: String,
}

#[derive(Serialize)]
struct LcTablesJson {
    series: Vec<TableRowJson>,
    parallel: Vec<TableRowJson>,
}

#[derive(Serialize)]
struct GhJson {
    shapes: [[usize; 2]; 4],
    d_min: usize,
    d_max: usize,
    rows: usize,
    g_cols: usize,
    h_cols: usize,
    cols: usize,
    square: bool,
}

#[derive(Serialize)]
struct RelationJson {
    poly: String,
    bidegree: [usize; 2],
    wdegree: usize,
    verified_exact: bool,
    lifted: bool,
}

#[derive(Serialize)]
struct EnumerateJson {
    kinds: String,
    max_leaves: usize,
    total: usize,
    by_leaves: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    check: Option<CheckJson>,
}

#[derive(Serialize)]
struct CheckJson {
    name: &'static str,
    checked: usize,
    skipped: usize,
    failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
}

fn to_json(value: &impl Serialize) -> String {
    let mut text = serde_json::to_string(value).expect("serialization cannot fail");
    text.push('\n');
    text
}

fn quad_array(q: TypeQuad) -> [i8; 4] {
    [q.a, q.b, q.c as i8, q.d as i8]
}

// ------------------------------------------------------------- render

fn render_consteq(net: &Network, eq: &ConstEq, mode: OutputMode) -> String {
    let map = eq.coefficient_map();
    match mode {
        OutputMode::Json => {
            let entries = |side: Side| {
                map.entries()
                    .iter()
                    .filter(|e| e.side == side)
                    .map(|e| CoeffJson {
                        order: e.order,
                        poly: e.poly.render(),
                    })
                    .collect()
            };
            to_json(&ConstEqJson {
                network: net.format(),
                v: entries(Side::V),
                i: entries(Side::I),
                monic: MonicJson {
                    side: map.monic().side.as_str(),
                    order: map.monic().order,
                },
            })
        }
        OutputMode::Text => {
            format!(
                "network: {}\n{} = {}\n",
                net.format(),
                side_text(&map, Side::V),
                side_text(&map, Side::I)
            )
        }
    }
}

/// One side of the equation in derivative notation, highest order
/// first. Composition never cancels terms, so every coefficient is a
/// polynomial with positive terms and `+` joins them all.
fn side_text(map: &CoefficientMap, side: Side) -> String {
    let terms: Vec<String> = map
        .entries()
        .iter()
        .filter(|e| e.side == side)
        .map(|e| {
            let var = derivative_text(side, e.order);
            let poly = e.poly.render();
            if poly == "1" {
                var
            } else if e.poly.n_terms() > 1 {
                format!("({poly}) {var}")
            } else {
                format!("{poly} {var}")
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn derivative_text(side: Side, order: usize) -> String {
    let name = side.as_str();
    match order {
        0 => name.into(),
        1 => format!("{name}\u{0307}"),
        2 => format!("{name}\u{0308}"),
        k => format!("{name}^({k})"),
    }
}

fn render_verdict(net: &Network, v: IdentVerdict, seed: u64, mode: OutputMode) -> String {
    match mode {
        OutputMode::Json => to_json(&VerdictJson {
            network: net.format(),
            n_params: v.n_params,
            n_nonmonic: v.n_nonmonic,
            generic_rank: v.generic_rank,
            locally_identifiable: v.locally_identifiable,
            method: v.method.as_str(),
            seed,
        }),
        OutputMode::Text => format!(
            "network: {}\nparameters: {}\nnonmonic coefficients: {}\ngeneric rank: {}\nlocally identifiable: {}\nmethod: {}\nseed: {}\n",
            net.format(),
            v.n_params,
            v.n_nonmonic,
            v.generic_rank,
            if v.locally_identifiable { "yes" } else { "no" },
            v.method.as_str(),
            seed
        ),
    }
}

fn render_type(net: &Network, quad: TypeQuad, mode: OutputMode) -> String {
    match mode {
        OutputMode::Json => to_json(&TypeJson {
            network: net.format(),
            quad: quad_array(quad),
        }),
        OutputMode::Text => format!("network: {}\ntype: {}\n", net.format(), quad),
    }
}

fn render_lc_class(net: &Network, class: LcClass, mode: OutputMode) -> String {
    match mode {
        OutputMode::Json => to_json(&LcClassJson {
            network: net.format(),
            class: class.to_string(),
            quad: quad_array(class.quad()),
        }),
        OutputMode::Text => format!(
            "network: {}\nclass: {}\ntype: {}\n",
            net.format(),
            class,
            class.quad()
        ),
    }
}

fn render_dual(net: &Network, mode: OutputMode) -> String {
    let dual = net.dual();
    match mode {
        OutputMode::Json => to_json(&DualJson {
            network: net.format(),
            dual: dual.format(),
        }),
        OutputMode::Text => format!("network: {}\ndual: {}\n", net.format(), dual.format()),
    }
}

fn render_closure(mode: OutputMode) -> String {
    let mut candidates = TypeQuad::all_candidates();
    candidates.sort();
    let forbidden = |q: &TypeQuad| FORBIDDEN_TYPES.contains(q);
    match mode {
        OutputMode::Json => {
            let entries: Vec<ClosureEntryJson> = candidates
                .iter()
                .map(|q| ClosureEntryJson {
                    quad: quad_array(*q),
                    forbidden: forbidden(q),
                })
                .collect();
            to_json(&entries)
        }
        OutputMode::Text => {
            let reached = type_closure();
            let mut out = format!("reachable types ({}):\n", reached.len());
            for q in &reached {
                let _ = writeln!(out, "  {q}");
            }
            let _ = writeln!(out, "forbidden types ({}):", FORBIDDEN_TYPES.len());
            for q in candidates.iter().filter(|q| forbidden(q)) {
                let _ = writeln!(out, "  {q}");
            }
            out
        }
    }
}

fn table_row_json(row: &LcTableRow) -> TableRowJson {
    let expr = |e: ShapeExpr| ShapeExprJson {
        min: e.min_const,
        max_offset: e.max_offset,
    };
    TableRowJson {
        op: match row.op {
            CombineOp::Series => "series",
            CombineOp::Parallel => "parallel",
        },
        pair: [row.pair.0.to_string(), row.pair.1.to_string()],
        v_shape: expr(row.v_shape),
        i_shape: expr(row.i_shape),
        count_offset: row.count_offset,
        identifiable: row.identifiable,
        result: row.result.to_string(),
    }
}

fn render_lc_tables(mode: OutputMode) -> String {
    let classes = [LcClass::A, LcClass::B, LcClass::C, LcClass::D];
    let rows = |op| {
        let mut rows = Vec::new();
        for (i, x) in classes.into_iter().enumerate() {
            for y in classes.into_iter().skip(i) {
                rows.push(lc_table_lookup(op, x, y));
            }
        }
        rows
    };
    match mode {
        OutputMode::Json => to_json(&LcTablesJson {
            series: rows(CombineOp::Series)
                .into_iter()
                .map(table_row_json)
                .collect(),
            parallel: rows(CombineOp::Parallel)
                .into_iter()
                .map(table_row_json)
                .collect(),
        }),
        OutputMode::Text => {
            let mut out = String::new();
            for (name, op) in [
                ("series", CombineOp::Series),
                ("parallel", CombineOp::Parallel),
            ] {
                let _ = writeln!(out, "{name} combinations:");
                for row in rows(op) {
                    let _ = writeln!(
                        out,
                        "  {} + {}  V {}  I {}  nonmonic {}  {}  class {}",
                        row.pair.0,
                        row.pair.1,
                        shape_expr_text(row.v_shape),
                        shape_expr_text(row.i_shape),
                        count_text(row.count_offset),
                        if row.identifiable {
                            "identifiable"
                        } else {
                            "not identifiable"
                        },
                        row.result
                    );
                }
            }
            out
        }
    }
}

fn shape_expr_text(e: ShapeExpr) -> String {
    format!("[{}, {}]", e.min_const, count_text(e.max_offset))
}

fn count_text(offset: i32) -> String {
    match offset {
        0 => "n".into(),
        o if o < 0 => format!("n-{}", -o),
        o => format!("n+{o}"),
    }
}

fn render_gh(p: &GhProblem, mode: OutputMode) -> String {
    let shapes = p.shapes();
    match mode {
        OutputMode::Json => to_json(&GhJson {
            shapes: shapes.map(|s| [s.min_deg, s.max_deg]),
            d_min: p.d_min(),
            d_max: p.d_max(),
            rows: p.rows(),
            g_cols: p.g_cols(),
            h_cols: p.h_cols(),
            cols: p.cols(),
            square: p.is_alternating_good(),
        }),
        OutputMode::Text => {
            let mut out = String::from("shapes:");
            for (i, s) in shapes.iter().enumerate() {
                let _ = write!(out, " s{} [{}, {}]", i + 1, s.min_deg, s.max_deg);
            }
            let _ = writeln!(out);
            let _ = writeln!(
                out,
                "degree range: {} to {} ({} rows)",
                p.d_min(),
                p.d_max(),
                p.rows()
            );
            let _ = writeln!(
                out,
                "unknowns: {} g-coefficients + {} h-coefficients = {} columns",
                p.g_cols(),
                p.h_cols(),
                p.cols()
            );
            let _ = writeln!(
                out,
                "square: {}",
                if p.is_alternating_good() { "yes" } else { "no" }
            );
            out
        }
    }
}

fn render_relations(
    net: &Network,
    degrees: (usize, usize, usize),
    found: &[lcr_core::RelationPoly],
    mode: OutputMode,
) -> String {
    match mode {
        OutputMode::Json => {
            let entries: Vec<RelationJson> = found
                .iter()
                .map(|r| RelationJson {
                    poly: r.text(),
                    bidegree: [r.bidegree.0, r.bidegree.1],
                    wdegree: r.weighted_degree,
                    verified_exact: true,
                    lifted: r.lifted,
                })
                .collect();
            to_json(&entries)
        }
        OutputMode::Text => {
            let mut out = format!(
                "network: {}\nstratum: cdeg {}, ddeg {}, wdeg {}\nrelations found: {}\n",
                net.format(),
                degrees.0,
                degrees.1,
                degrees.2,
                found.len()
            );
            for r in found {
                let _ = writeln!(
                    out,
                    "  {}  [bidegree ({}, {}), weighted degree {}{}]",
                    r.text(),
                    r.bidegree.0,
                    r.bidegree.1,
                    r.weighted_degree,
                    if r.lifted {
                        ""
                    } else {
                        ", modular coefficients"
                    }
                );
            }
            out
        }
    }
}

struct EnumerateReport {
    kinds: String,
    max_leaves: usize,
    total: usize,
    by_leaves: Vec<usize>,
    check: Option<CheckReport>,
}

struct CheckReport {
    name: &'static str,
    checked: usize,
    skipped: usize,
    failures: usize,
    seed: Option<u64>,
}

fn enumerate_report(
    kinds: &[ElementKind],
    max_leaves: usize,
    nets: &[Network],
    check: Option<CheckKind>,
    seed: u64,
) -> Result<EnumerateReport, CliError> {
    let mut by_leaves = vec![0usize; max_leaves];
    for net in nets {
        by_leaves[net.leaf_count() - 1] += 1;
    }
    let check = match check {
        None => None,
        Some(CheckKind::CountVsRank) => Some(check_count_vs_rank(nets, seed)?),
        Some(CheckKind::Invariants) => Some(check_invariants(nets)?),
    };
    Ok(EnumerateReport {
        kinds: kinds.iter().map(|k| k.letter()).collect(),
        max_leaves,
        total: nets.len(),
        by_leaves,
        check,
    })
}

fn check_count_vs_rank(nets: &[Network], seed: u64) -> Result<CheckReport, CliError> {
    let mut report = CheckReport {
        name: "count-vs-rank",
        checked: 0,
        skipped: 0,
        failures: 0,
        seed: Some(seed),
    };
    for net in nets {
        let count = match count_criterion(net) {
            Ok(v) => v,
            Err(IdentifyError::NotApplicable { .. }) => {
                report.skipped += 1;
                continue;
            }
            Err(e) => return Err(refused(e)),
        };
        let rank = is_locally_identifiable(net, seed).map_err(refused)?;
        report.checked += 1;
        let agree = count.locally_identifiable == rank.locally_identifiable
            && count.generic_rank == rank.generic_rank
            && count.n_params == rank.n_params
            && count.n_nonmonic == rank.n_nonmonic;
        if !agree {
            report.failures += 1;
        }
    }
    Ok(report)
}

fn check_invariants(nets: &[Network]) -> Result<CheckReport, CliError> {
    let closure = type_closure();
    let mut report = CheckReport {
        name: "invariants",
        checked: 0,
        skipped: 0,
        failures: 0,
        seed: None,
    };
    for net in nets {
        let eq = build_consteq(net, Parameterization::Affine).map_err(refused)?;
        let n = net.leaf_count();
        let vs = eq.v_op().shape();
        let is = eq.i_op().shape();
        let a = vs.min_deg as i64 - is.min_deg as i64;
        let b = vs.max_deg as i64 - is.max_deg as i64;
        let mut ok = vs.max_deg <= n && is.max_deg <= n && a.abs() <= 1 && b.abs() <= 1;
        ok = ok
            && eq.v_op().alternation() != Alternation::Neither
            && eq.i_op().alternation() != Alternation::Neither;
        ok = ok && type_of(&eq).is_ok_and(|q| closure.contains(&q));
        if !net.kinds_present().contains(&ElementKind::Resistor) {
            ok = ok
                && eq.v_op().alternation() == Alternation::Alternating
                && eq.i_op().alternation() == Alternation::Alternating
                && a.abs() == 1
                && b.abs() == 1;
        }
        report.checked += 1;
        if !ok {
            report.failures += 1;
        }
    }
    Ok(report)
}

fn render_enumerate(report: &EnumerateReport, mode: OutputMode) -> String {
    match mode {
        OutputMode::Json => to_json(&EnumerateJson {
            kinds: report.kinds.clone(),
            max_leaves: report.max_leaves,
            total: report.total,
            by_leaves: report.by_leaves.clone(),
            check: report.check.as_ref().map(|c| CheckJson {
                name: c.name,
                checked: c.checked,
                skipped: c.skipped,
                failures: c.failures,
                seed: c.seed,
            }),
        }),
        OutputMode::Text => {
            let mut out = format!(
                "kinds: {}  max leaves: {}\n",
                report.kinds, report.max_leaves
            );
            for (i, count) in report.by_leaves.iter().enumerate() {
                let _ = writeln!(out, "  leaves {}: {}", i + 1, count);
            }
            let _ = writeln!(out, "total: {}", report.total);
            if let Some(c) = &report.check {
                let seed_note = match c.seed {
                    Some(s) => format!(" (seed {s})"),
                    None => String::new(),
                };
                let _ = writeln!(
                    out,
                    "check {}: {} checked, {} skipped, {} failures{}",
                    c.name, c.checked, c.skipped, c.failures, seed_note
                );
            }
            out
        }
    }
}
