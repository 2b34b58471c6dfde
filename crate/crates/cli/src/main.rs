//! `latframe`: framing lattices of framed DAGs from the command line.
//!
//! Inputs are builtin families (`oruga:N`, `caracol:N`, `random:SEED[,V,E]`)
//! or framed-graph files. Exit codes: 0 ok, 1 usage, 2 parse/validation,
//! 3 route limit, 4 invariant failure.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use latframe_core::checks::run_all_checks;
use latframe_core::coherence::notation;
use latframe_core::cubical::{ccl, ccr, not_leq_witness};
use latframe_core::lattice::lattice_to_dot;
use latframe_core::reconstruct::{
    down_bricks, phi_l_all, psi_l_all, up_bricks, BrickClique,
};
use latframe_core::{
    build_lattice, caracol, enumerate_routes_limited, is_coherent, oruga, parse_brick,
    parse_framed_graph, parse_route, random_framed_graph, route_notation, brick_notation,
    FramedGraph, FramingLattice, MaximalClique, Route, DEFAULT_ROUTE_LIMIT,
};

/// Writes a line to stdout, exiting quietly when the pipe is gone.
macro_rules! outln {
    ($($arg:tt)*) => {{
        use std::io::Write;
        let mut stdout = std::io::stdout().lock();
        if writeln!(stdout, $($arg)*).is_err() {
            std::process::exit(0);
        }
    }};
}

const EXIT_USAGE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_LIMIT: u8 = 3;
const EXIT_INVARIANT: u8 = 4;

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }

    fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "latframe",
    version,
    about = "Routes, maximal cliques, framing lattices, bricks, and cubical coordinates of framed DAGs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(clap::Args)]
struct Common {
    /// Builtin family (oruga:N, caracol:N, random:SEED[,V,E]) or a file path
    input: String,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Abort when the graph has more routes than this
    #[arg(long, default_value_t = DEFAULT_ROUTE_LIMIT)]
    route_limit: usize,
}

#[derive(Subcommand)]
enum Command {
    /// List all source-to-sink routes
    Routes(Common),
    /// List all maximal cliques of coherent routes
    Cliques(Common),
    /// Build the framing lattice: elements and brick-labelled covers
    Lattice(Common),
    /// Bricks labelling the lower and upper covers of one element
    Bricks {
        #[command(flatten)]
        common: Common,
        /// Element index, or its routes joined by commas
        element: String,
    },
    /// Run the two reconstruction steps on a brick clique
    Reconstruct {
        #[command(flatten)]
        common: Common,
        /// Bricks in corner notation, separated by ';' (empty for none)
        #[arg(long, default_value = "")]
        bricks: String,
    },
    /// Left and right cubical coordinates of every element
    Coords(Common),
    /// Compare two elements: verdict, coordinates, or a crossing witness
    Compare {
        #[command(flatten)]
        common: Common,
        first: String,
        second: String,
    },
    /// Run the full invariant suite on the input graph
    Check(Common),
    /// Write the Hasse diagram as DOT with coordinate labels
    ExportDot {
        #[command(flatten)]
        common: Common,
        /// Output file (stdout when absent)
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn parse_builtin_number(input: &str, rest: &str) -> Result<usize, Failure> {
    rest.parse()
        .map_err(|_| Failure::usage(format!("bad builtin size in `{input}`")))
}

fn load_graph(input: &str, route_limit: usize) -> Result<FramedGraph, Failure> {
    if let Some(rest) = input.strip_prefix("oruga:") {
        let n = parse_builtin_number(input, rest)?;
        if n == 0 {
            return Err(Failure::usage("oruga needs N >= 1"));
        }
        return Ok(oruga(n));
    }
    if let Some(rest) = input.strip_prefix("caracol:") {
        let n = parse_builtin_number(input, rest)?;
        if n < 2 {
            return Err(Failure::usage("caracol needs N >= 2"));
        }
        return Ok(caracol(n));
    }
    if let Some(rest) = input.strip_prefix("random:") {
        let parts: Vec<&str> = rest.split(',').collect();
        if parts.is_empty() || parts.len() > 3 {
            return Err(Failure::usage("random takes SEED[,V,E]"));
        }
        let seed: u64 = parts[0]
            .parse()
            .map_err(|_| Failure::usage(format!("bad seed in `{input}`")))?;
        let v = if parts.len() > 1 {
            parse_builtin_number(input, parts[1])?
        } else {
            6
        };
        let e = if parts.len() > 2 {
            parse_builtin_number(input, parts[2])?
        } else {
            10
        };
        if v < 3 || e < 3 {
            return Err(Failure::usage("random needs V >= 3 and E >= 3"));
        }
        return Ok(random_framed_graph(seed, v, e, route_limit));
    }
    let text = std::fs::read_to_string(input)
        .map_err(|e| Failure::input(format!("cannot read `{input}`: {e}")))?;
    parse_framed_graph(&text).map_err(|e| Failure::input(e.to_string()))
}

fn routes_of(g: &FramedGraph, route_limit: usize) -> Result<Vec<Route>, Failure> {
    enumerate_routes_limited(g, route_limit).map_err(|e| Failure {
        code: EXIT_LIMIT,
        message: e.to_string(),
    })
}

fn lattice_of(g: &FramedGraph, route_limit: usize) -> Result<FramingLattice, Failure> {
    build_lattice(g, route_limit).map_err(|e| Failure {
        code: EXIT_LIMIT,
        message: e.to_string(),
    })
}

/// Element reference: a lattice index, or the clique's routes joined by ','.
fn resolve_element(
    g: &FramedGraph,
    l: &FramingLattice,
    reference: &str,
) -> Result<usize, Failure> {
    if reference.chars().all(|c| c.is_ascii_digit()) && !reference.is_empty() {
        let idx: usize = reference
            .parse()
            .map_err(|_| Failure::input(format!("bad element index `{reference}`")))?;
        if idx >= l.len() {
            return Err(Failure::input(format!(
                "element index {idx} out of range (lattice has {} elements)",
                l.len()
            )));
        }
        return Ok(idx);
    }
    let routes: Vec<Route> = reference
        .split(',')
        .map(|part| parse_route(g, part.trim()).map_err(|e| Failure::input(e.to_string())))
        .collect::<Result<_, _>>()?;
    let clique = MaximalClique::from_routes(routes);
    l.index_of(&clique).ok_or_else(|| {
        Failure::input(format!("`{reference}` is not a maximal clique of this graph"))
    })
}

fn clique_json(g: &FramedGraph, index: usize, clique: &MaximalClique) -> Value {
    json!({
        "index": index,
        "routes": clique.routes().iter().map(|r| route_notation(g, r)).collect::<Vec<_>>(),
    })
}

fn print_value(v: &Value) {
    outln!("{}", serde_json::to_string_pretty(v).expect("valid json"));
}

fn cmd_routes(common: &Common) -> Result<(), Failure> {
    let g = load_graph(&common.input, common.route_limit)?;
    let routes = routes_of(&g, common.route_limit)?;
    match common.format {
        Format::Text => {
            for r in &routes {
                outln!("{}", route_notation(&g, r));
            }
        }
        Format::Json => print_value(&json!({
            "input": common.input,
            "count": routes.len(),
            "routes": routes.iter().map(|r| route_notation(&g, r)).collect::<Vec<_>>(),
        })),
    }
    Ok(())
}

fn cmd_cliques(common: &Common) -> Result<(), Failure> {
    let g = load_graph(&common.input, common.route_limit)?;
    let l = lattice_of(&g, common.route_limit)?;
    match common.format {
        Format::Text => {
            for (i, c) in l.elements().iter().enumerate() {
                let routes: Vec<String> =
                    c.routes().iter().map(|r| route_notation(&g, r)).collect();
                outln!("#{i}: {}", routes.join(", "));
            }
        }
        Format::Json => print_value(&json!({
            "input": common.input,
            "count": l.len(),
            "cliques": l.elements().iter().enumerate()
                .map(|(i, c)| clique_json(&g, i, c)).collect::<Vec<_>>(),
        })),
    }
    Ok(())
}

fn cmd_lattice(common: &Common) -> Result<(), Failure> {
    let g = load_graph(&common.input, common.route_limit)?;
    let l = lattice_of(&g, common.route_limit)?;
    match common.format {
        Format::Text => {
            outln!("elements: {}", l.len());
            outln!("covers: {}", l.covers().len());
            outln!("bottom: #{}", l.bottom());
            outln!("top: #{}", l.top());
            for (lo, hi, label) in l.covers() {
                outln!("#{lo} -> #{hi}  {}", brick_notation(&g, label));
            }
        }
        Format::Json => print_value(&json!({
            "input": common.input,
            "elements": l.elements().iter().enumerate()
                .map(|(i, c)| clique_json(&g, i, c)).collect::<Vec<_>>(),
            "covers": l.covers().iter().map(|(lo, hi, label)| json!({
                "lower": lo,
                "upper": hi,
                "label": brick_notation(&g, label),
            })).collect::<Vec<_>>(),
            "bottom": l.bottom(),
            "top": l.top(),
        })),
    }
    Ok(())
}

fn cmd_bricks(common: &Common, element: &str) -> Result<(), Failure> {
    let g = load_graph(&common.input, common.route_limit)?;
    let l = lattice_of(&g, common.route_limit)?;
    let idx = resolve_element(&g, &l, element)?;
    let down = down_bricks(&g, &l, idx);
    let up = up_bricks(&g, &l, idx);
    let names = |t: &BrickClique| -> Vec<String> {
        t.bricks().iter().map(|b| brick_notation(&g, b)).collect()
    };
    match common.format {
        Format::Text => {
            outln!("element #{idx}");
            outln!("down: {}", names(&down).join(" ; "));
            outln!("up: {}", names(&up).join(" ; "));
        }
        Format::Json => print_value(&json!({
            "element": idx,
            "down": names(&down),
            "up": names(&up),
        })),
    }
    Ok(())
}

fn parse_brick_clique(g: &FramedGraph, spec: &str) -> Result<BrickClique, Failure> {
    let mut bricks = Vec::new();
    for part in spec.split(';') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        bricks.push(parse_brick(g, part).map_err(|e| Failure::input(e.to_string()))?);
    }
    for i in 0..bricks.len() {
        for j in i + 1..bricks.len() {
            if !is_coherent(g, bricks[i].as_gen(), bricks[j].as_gen()) {
                return Err(Failure::input(format!(
                    "bricks are not pairwise coherent: {} vs {}",
                    brick_notation(g, &bricks[i]),
                    brick_notation(g, &bricks[j])
                )));
            }
        }
    }
    Ok(BrickClique::new(g, bricks))
}

fn cmd_reconstruct(common: &Common, bricks: &str) -> Result<(), Failure> {
    let g = load_graph(&common.input, common.route_limit)?;
    let t = parse_brick_clique(&g, bricks)?;
    let lt = phi_l_all(&g, &t);
    let clique = psi_l_all(&g, &lt);
    let l = lattice_of(&g, common.route_limit)?;
    let idx = l
        .index_of(&clique)
        .expect("reconstructed clique is a lattice element");
    match common.format {
        Format::Text => {
            outln!(
                "bricks: {}",
                t.bricks()
                    .iter()
                    .map(|b| brick_notation(&g, b))
                    .collect::<Vec<_>>()
                    .join(" ; ")
            );
            outln!("stage 1 (cornered routes):");
            for r in lt.routes() {
                outln!("  {}", notation(&g, r.as_gen()));
            }
            outln!("stage 2 (maximal clique #{idx}):");
            for r in clique.routes() {
                outln!("  {}", route_notation(&g, r));
            }
        }
        Format::Json => print_value(&json!({
            "bricks": t.bricks().iter().map(|b| brick_notation(&g, b)).collect::<Vec<_>>(),
            "cornered": lt.routes().iter()
                .map(|r| notation(&g, r.as_gen())).collect::<Vec<_>>(),
            "clique": clique_json(&g, idx, &clique),
        })),
    }
    Ok(())
}

fn corner_names(g: &FramedGraph) -> (Vec<String>, Vec<String>) {
    let left = g
        .left_corners()
        .iter()
        .map(|c| {
            format!(
                "[{}:{}|{}>",
                g.external(c.apex),
                g.token(c.lower),
                g.token(c.upper)
            )
        })
        .collect();
    let right = g
        .right_corners()
        .iter()
        .map(|c| {
            format!(
                "<{}|{}:{}]",
                g.token(c.lower),
                g.token(c.upper),
                g.external(c.apex)
            )
        })
        .collect();
    (left, right)
}

fn cmd_coords(common: &Common) -> Result<(), Failure> {
    let g = load_graph(&common.input, common.route_limit)?;
    let l = lattice_of(&g, common.route_limit)?;
    let (left, right) = corner_names(&g);
    let rows: Vec<(usize, Vec<usize>, Vec<usize>)> = l
        .elements()
        .iter()
        .enumerate()
        .map(|(i, c)| (i, ccl(&g, c).values, ccr(&g, c).values))
        .collect();
    match common.format {
        Format::Text => {
            outln!("left corners: {}", left.join(" "));
            outln!("right corners: {}", right.join(" "));
            for (i, l_vals, r_vals) in &rows {
                outln!("#{i}: ccl={l_vals:?} ccr={r_vals:?}");
            }
        }
        Format::Json => print_value(&json!({
            "left_corners": left,
            "right_corners": right,
            "elements": rows.iter().map(|(i, l_vals, r_vals)| json!({
                "index": i,
                "ccl": l_vals,
                "ccr": r_vals,
            })).collect::<Vec<_>>(),
        })),
    }
    Ok(())
}

fn cmd_compare(common: &Common, first: &str, second: &str) -> Result<(), Failure> {
    let g = load_graph(&common.input, common.route_limit)?;
    let l = lattice_of(&g, common.route_limit)?;
    let a = resolve_element(&g, &l, first)?;
    let b = resolve_element(&g, &l, second)?;
    let forward = l.leq(a, b);
    let backward = l.leq(b, a);
    let verdict = match (forward, backward) {
        (true, true) => "equal",
        (true, false) => "less",
        (false, true) => "greater",
        (false, false) => "incomparable",
    };
    let ccl_a = ccl(&g, l.element(a)).values;
    let ccl_b = ccl(&g, l.element(b)).values;
    let witness = (!forward).then(|| {
        let w = not_leq_witness(&g, l.element(a), l.element(b))
            .expect("a failed comparison always has a crossing witness");
        (
            route_notation(&g, &w.in_first),
            route_notation(&g, &w.in_second),
            g.external(w.vertex),
        )
    });
    match common.format {
        Format::Text => {
            outln!("#{a} {verdict} #{b}");
            outln!("ccl #{a}: {ccl_a:?}");
            outln!("ccl #{b}: {ccl_b:?}");
            if let Some((r, rp, v)) = &witness {
                outln!("witness: {rp} (of #{b}) is clockwise to {r} (of #{a}) at vertex {v}");
            }
        }
        Format::Json => print_value(&json!({
            "first": a,
            "second": b,
            "verdict": verdict,
            "leq": forward,
            "ccl_first": ccl_a,
            "ccl_second": ccl_b,
            "witness": witness.map(|(r, rp, v)| json!({
                "route_of_first": r,
                "route_of_second": rp,
                "vertex": v,
            })),
        })),
    }
    Ok(())
}

fn cmd_check(common: &Common) -> Result<(), Failure> {
    let g = load_graph(&common.input, common.route_limit)?;
    match run_all_checks(&g, common.route_limit) {
        Ok(report) => {
            match common.format {
                Format::Text => {
                    for name in &report.passed {
                        outln!("ok {name}");
                    }
                    outln!(
                        "rowmotion orbits: {:?}",
                        report.observations.rowmotion_orbit_sizes
                    );
                    outln!("all checks passed");
                }
                Format::Json => print_value(&json!({
                    "input": common.input,
                    "passed": report.passed,
                    "rowmotion_orbits": report.observations.rowmotion_orbit_sizes,
                    "ok": true,
                })),
            }
            Ok(())
        }
        Err(failure) => {
            if failure.check == "analysis" {
                return Err(Failure {
                    code: EXIT_LIMIT,
                    message: failure.detail,
                });
            }
            Err(Failure {
                code: EXIT_INVARIANT,
                message: format!("check `{}` failed: {}", failure.check, failure.detail),
            })
        }
    }
}

fn cmd_export_dot(common: &Common, output: Option<&PathBuf>) -> Result<(), Failure> {
    let g = load_graph(&common.input, common.route_limit)?;
    let l = lattice_of(&g, common.route_limit)?;
    let coords: Vec<Vec<usize>> = l.elements().iter().map(|c| ccl(&g, c).values).collect();
    let dot = lattice_to_dot(&g, &l, Some(&coords));
    match output {
        Some(path) => std::fs::write(path, dot)
            .map_err(|e| Failure::input(format!("cannot write `{}`: {e}", path.display())))?,
        None => outln!("{}", dot.trim_end()),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Routes(c) => cmd_routes(c),
        Command::Cliques(c) => cmd_cliques(c),
        Command::Lattice(c) => cmd_lattice(c),
        Command::Bricks { common, element } => cmd_bricks(common, element),
        Command::Reconstruct { common, bricks } => cmd_reconstruct(common, bricks),
        Command::Coords(c) => cmd_coords(c),
        Command::Compare {
            common,
            first,
            second,
        } => cmd_compare(common, first, second),
        Command::Check(c) => cmd_check(c),
        Command::ExportDot { common, output } => cmd_export_dot(common, output.as_ref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let _ = e.print();
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let mut msg = String::new();
            let _ = write!(msg, "error: {}", f.message);
            eprintln!("{msg}");
            ExitCode::from(f.code)
        }
    }
}
