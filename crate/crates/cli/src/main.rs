//! Deterministic command-line front end.
//!
//! Results go to stdout, errors and warnings to stderr. Exit codes:
//! 0 = success / HOLDS, 1 = verification FAILS or an underdetermined
//! solution, 2 = usage or format error. Every subcommand takes `--json`
//! for a machine-readable envelope `{"command": ..., "result": ...}` with
//! an optional `"holds"` field.

use clap::{Parser, Subcommand};
use pwhodge::files;
use pwhodge::grid::{DiamondParams, GridTransform, HodgeGrid};
use pwhodge::les::{SlotStatus, UnknownOutcome};
use pwhodge::mhs::PerverseHodgeTable;
use pwhodge::pw::PWPolynomial;
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "pwhodge",
    version,
    about = "Exact perverse-weight polynomial and Laurent period toolkit",
    max_term_width = 100
)]
struct Cli {
    /// Emit a machine-readable JSON envelope instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the perverse-weight polynomial of a table.
    Compute {
        /// Table: catalog key or JSON file path.
        #[arg(long)]
        table: String,
    },
    /// Apply the mirror exponent transform to a polynomial or a table.
    Mirror {
        /// Table: catalog key or JSON file path.
        #[arg(long, conflicts_with = "poly")]
        table: Option<String>,
        /// Polynomial in u, t, w, p, e.g. "p^3 + 8*u^2*t^3*w".
        #[arg(long)]
        poly: Option<String>,
        /// Dimension d of the transform; defaults to the table's dimension.
        #[arg(long)]
        dim: Option<u32>,
    },
    /// Check the mirror identity between two tables.
    Verify {
        #[arg(long = "side-a")]
        side_a: String,
        #[arg(long = "side-b")]
        side_b: String,
    },
    /// Print the period sequence of a Laurent polynomial.
    Period {
        /// Expression, e.g. "(x+1)^2*(y+1)^2/(x*y*z)+z".
        #[arg(long)]
        expr: String,
        /// Comma-separated variable list, e.g. "x,y,z".
        #[arg(long)]
        vars: String,
        #[arg(long = "max-n")]
        max_n: usize,
    },
    /// Solve a long exact sequence problem file.
    Les {
        #[arg(long)]
        problem: PathBuf,
    },
    /// Print the threefold relative-cohomology diamond.
    Diamond {
        #[arg(long)]
        ky: u64,
        #[arg(long)]
        ph: u64,
        #[arg(long)]
        h12: u64,
        #[arg(long)]
        h21: u64,
    },
    /// Compare two grids under an index transform.
    Grids {
        /// Grid or table: JSON file path or catalog key (tables are turned
        /// into their Hodge-number grids).
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        /// identity | logCY(d) | fano(n) | boundary(n)
        #[arg(long)]
        transform: String,
    },
    /// List, show, or dump catalog tables.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// List the available keys.
    List,
    /// Print one table.
    Show { key: String },
    /// Write one table to a JSON file.
    Dump { key: String, path: PathBuf },
}

/// Usage or format problem: message on stderr, exit 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn main() -> ExitCode {
    // die quietly when a pipe reader closes early, like other line tools
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<u8, UsageError> {
    match &cli.command {
        Command::Compute { table } => cmd_compute(cli.json, table),
        Command::Mirror { table, poly, dim } => {
            cmd_mirror(cli.json, table.as_deref(), poly.as_deref(), *dim)
        }
        Command::Verify { side_a, side_b } => cmd_verify(cli.json, side_a, side_b),
        Command::Period { expr, vars, max_n } => cmd_period(cli.json, expr, vars, *max_n),
        Command::Les { problem } => cmd_les(cli.json, problem),
        Command::Diamond { ky, ph, h12, h21 } => cmd_diamond(cli.json, *ky, *ph, *h12, *h21),
        Command::Grids { a, b, transform } => cmd_grids(cli.json, a, b, transform),
        Command::Catalog { action } => cmd_catalog(cli.json, action),
    }
}

fn emit(value: Value) {
    println!("{value}");
}

fn load_table_arg(reference: &str) -> Result<PerverseHodgeTable, UsageError> {
    let (table, warnings) = files::resolve_table(reference)?;
    for w in warnings {
        eprintln!("warning: {w}");
    }
    Ok(table)
}

fn cmd_compute(as_json: bool, table_ref: &str) -> Result<u8, UsageError> {
    let table = load_table_arg(table_ref)?;
    let pw = pwhodge::pw_polynomial(&table)?;
    if as_json {
        emit(json!({
            "command": "compute",
            "result": {
                "table": table.name(),
                "dim": table.dim(),
                "pw": pw.to_string(),
            }
        }));
    } else {
        println!("{pw}");
    }
    Ok(0)
}

fn cmd_mirror(
    as_json: bool,
    table_ref: Option<&str>,
    poly: Option<&str>,
    dim: Option<u32>,
) -> Result<u8, UsageError> {
    let (input, d): (PWPolynomial, u32) = match (table_ref, poly) {
        (Some(t), None) => {
            let table = load_table_arg(t)?;
            let d = dim.unwrap_or_else(|| table.dim());
            (pwhodge::pw_polynomial(&table)?, d)
        }
        (None, Some(s)) => {
            let d = dim.ok_or_else(|| UsageError("--dim is required with --poly".into()))?;
            (pwhodge::parse_pw(s)?, d)
        }
        _ => return Err(UsageError("give exactly one of --table or --poly".into())),
    };
    let out = pwhodge::mirror_transform(&input, d)?;
    if as_json {
        emit(json!({
            "command": "mirror",
            "result": {
                "dim": d,
                "input": input.to_string(),
                "output": out.to_string(),
            }
        }));
    } else {
        println!("{out}");
    }
    Ok(0)
}

fn cmd_verify(as_json: bool, side_a: &str, side_b: &str) -> Result<u8, UsageError> {
    let a = load_table_arg(side_a)?;
    let b = load_table_arg(side_b)?;
    let report = pwhodge::verify_mirror_pair(&a, &b)?;
    let verdict = if report.holds { "HOLDS" } else { "FAILS" };
    if as_json {
        emit(json!({
            "command": "verify",
            "holds": report.holds,
            "result": {
                "side_a": a.name(),
                "side_b": b.name(),
                "dim": report.dim,
                "pw_a": report.pw_a.to_string(),
                "transformed_a": report.lhs.to_string(),
                "pw_b": report.rhs.to_string(),
                "difference": report.difference.to_string(),
            }
        }));
    } else {
        println!("PW[{}] = {}", a.name(), report.pw_a);
        println!("M_{}(PW[{}]) = {}", report.dim, a.name(), report.lhs);
        println!("PW[{}] = {}", b.name(), report.rhs);
        println!("difference = {}", report.difference);
        println!("{verdict}");
    }
    Ok(if report.holds { 0 } else { 1 })
}

fn cmd_period(as_json: bool, expr: &str, vars: &str, max_n: usize) -> Result<u8, UsageError> {
    let vars: Vec<String> = vars
        .split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect();
    if vars.is_empty() {
        return Err(UsageError("--vars needs at least one variable".into()));
    }
    let p = pwhodge::parse_laurent(expr, &vars)?;
    let seq = pwhodge::period_sequence(&p, max_n);
    let rendered: Vec<String> = seq.iter().map(|n| n.to_string()).collect();
    if as_json {
        emit(json!({
            "command": "period",
            "result": {
                "expr": p.to_string(),
                "vars": vars,
                "pi": rendered,
            }
        }));
    } else {
        println!("{}", rendered.join(" "));
    }
    Ok(0)
}

fn slot_status_str(status: SlotStatus) -> &'static str {
    match status {
        SlotStatus::Forced => "forced",
        SlotStatus::Hinted => "hinted",
        SlotStatus::Underdetermined => "underdetermined",
    }
}

fn cmd_les(as_json: bool, problem_path: &std::path::Path) -> Result<u8, UsageError> {
    let (problem, warnings) = files::load_problem(problem_path)?;
    for w in warnings {
        eprintln!("warning: {w}");
    }
    let solution = pwhodge::solve(&problem)?;
    let mut slot_values = Vec::new();
    for slot in &solution.slots {
        let mut unknowns = Vec::new();
        for u in &slot.unknowns {
            match &u.outcome {
                UnknownOutcome::Forced(v) => {
                    if *v > 0 {
                        unknowns.push(json!({
                            "id": u.label,
                            "degree": u.degree,
                            "value": v,
                        }));
                    }
                }
                UnknownOutcome::Admissible(vals) => {
                    unknowns.push(json!({
                        "id": u.label,
                        "degree": u.degree,
                        "admissible": vals.iter().collect::<Vec<_>>(),
                    }));
                }
            }
        }
        slot_values.push(json!({
            "hodge": slot.slot.hodge,
            "weight": slot.slot.weight,
            "status": slot_status_str(slot.status),
            "unknowns": unknowns,
        }));
    }
    if as_json {
        let table_file = files::table_to_file(&solution.solved);
        emit(json!({
            "command": "les",
            "holds": solution.fully_determined,
            "result": {
                "pattern": problem.pattern.as_str(),
                "determined": solution.fully_determined,
                "slots": slot_values,
                "table": serde_json::to_value(&table_file).expect("table serializes"),
            }
        }));
    } else {
        println!("pattern: {}", problem.pattern);
        for slot in &solution.slots {
            print!(
                "slot ({},{}): {}",
                slot.slot.hodge,
                slot.slot.weight,
                slot_status_str(slot.status)
            );
            let mut shown = Vec::new();
            for u in &slot.unknowns {
                match &u.outcome {
                    UnknownOutcome::Forced(v) if *v > 0 => {
                        shown.push(format!("{} = {}", u.label, v));
                    }
                    UnknownOutcome::Forced(_) => {}
                    UnknownOutcome::Admissible(vals) => {
                        let vals: Vec<String> = vals.iter().map(|v| v.to_string()).collect();
                        shown.push(format!("{} in {{{}}}", u.label, vals.join(",")));
                    }
                }
            }
            if shown.is_empty() {
                println!();
            } else {
                println!("   {}", shown.join(", "));
            }
        }
        println!("{}", solution.solved);
        println!(
            "status: {}",
            if solution.fully_determined {
                "determined"
            } else {
                "underdetermined"
            }
        );
    }
    Ok(if solution.fully_determined { 0 } else { 1 })
}

fn cmd_diamond(as_json: bool, ky: u64, ph: u64, h12: u64, h21: u64) -> Result<u8, UsageError> {
    let grid = pwhodge::fpq_diamond(&DiamondParams {
        k_y: ky,
        ph,
        h12,
        h21,
    })?;
    if as_json {
        let entries: Vec<Value> = grid
            .entries()
            .map(|((p, q), v)| json!({"p": p, "q": q, "value": v}))
            .collect();
        emit(json!({
            "command": "diamond",
            "result": {
                "entries": entries,
                "total": grid.total(),
            }
        }));
    } else {
        println!("{grid}");
    }
    Ok(0)
}

/// A grid argument: a grid file, or a table (catalog key or file) whose
/// Hodge numbers are taken.
fn load_grid_arg(reference: &str) -> Result<HodgeGrid, UsageError> {
    let path = std::path::Path::new(reference);
    if path.exists() {
        let text = std::fs::read_to_string(path).map_err(|e| UsageError(e.to_string()))?;
        let value: Value = serde_json::from_str(&text)
            .map_err(|e| UsageError(format!("{reference}: invalid JSON: {e}")))?;
        if value.get("entries").is_some() {
            return Ok(files::load_grid(path)?);
        }
        let (table, warnings) = files::load_table(path)?;
        for w in warnings {
            eprintln!("warning: {w}");
        }
        return Ok(pwhodge::hodge_numbers(&table));
    }
    let table = load_table_arg(reference)?;
    Ok(pwhodge::hodge_numbers(&table))
}

fn cmd_grids(as_json: bool, a: &str, b: &str, transform: &str) -> Result<u8, UsageError> {
    let transform = GridTransform::parse(transform).ok_or_else(|| {
        UsageError(format!(
            "unknown transform `{transform}`; expected identity, logCY(d), fano(n), or boundary(n)"
        ))
    })?;
    let grid_a = load_grid_arg(a)?;
    let grid_b = load_grid_arg(b)?;
    let report = pwhodge::check_grid_equality(&grid_a, &grid_b, transform);
    let verdict = if report.holds { "HOLDS" } else { "FAILS" };
    if as_json {
        let mismatches: Vec<Value> = report
            .mismatches
            .iter()
            .map(|m| json!({"p": m.p, "q": m.q, "left": m.left, "right": m.right}))
            .collect();
        emit(json!({
            "command": "grids",
            "holds": report.holds,
            "result": {
                "transform": transform.to_string(),
                "total_a": grid_a.total(),
                "total_b": grid_b.total(),
                "mismatches": mismatches,
            }
        }));
    } else {
        println!("transform: {transform}");
        println!("total a = {}, total b = {}", grid_a.total(), grid_b.total());
        for m in &report.mismatches {
            println!(
                "mismatch at ({},{}): left {} vs right {}",
                m.p, m.q, m.left, m.right
            );
        }
        println!("{verdict}");
    }
    Ok(if report.holds { 0 } else { 1 })
}

fn cmd_catalog(as_json: bool, action: &CatalogAction) -> Result<u8, UsageError> {
    match action {
        CatalogAction::List => {
            let keys = pwhodge::builtin_keys();
            if as_json {
                emit(json!({
                    "command": "catalog",
                    "result": {
                        "keys": keys,
                        "standard": [
                            "point", "line", "torus1", "elliptic_curve", "K3",
                            "curve(g)", "projective_space(n)", "del_pezzo(deg)",
                            "cycle_In_times_line(n)"
                        ],
                    }
                }));
            } else {
                for k in keys {
                    println!("{k}");
                }
                println!(
                    "standard: line, torus1, elliptic_curve, K3, curve(g), \
                     projective_space(n), del_pezzo(deg), cycle_In_times_line(n)"
                );
            }
            Ok(0)
        }
        CatalogAction::Show { key } => {
            let table = load_table_arg(key)?;
            let provenance = pwhodge::builtin_entry(key).ok().map(|e| e.provenance);
            if as_json {
                let table_file = files::table_to_file(&table);
                emit(json!({
                    "command": "catalog",
                    "result": {
                        "table": serde_json::to_value(&table_file).expect("table serializes"),
                        "provenance": provenance,
                    }
                }));
            } else {
                println!("{table}");
                if let Some(p) = provenance {
                    println!("  provenance: {p}");
                }
            }
            Ok(0)
        }
        CatalogAction::Dump { key, path } => {
            let table = load_table_arg(key)?;
            files::save_table(&table, path)?;
            if as_json {
                emit(json!({
                    "command": "catalog",
                    "result": { "dumped": key, "path": path.display().to_string() }
                }));
            } else {
                println!("wrote {} to {}", key, path.display());
            }
            Ok(0)
        }
    }
}
