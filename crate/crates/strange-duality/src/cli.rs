//! Command-line orchestration: lookups, duals, verification suites, searches,
//! and table emission. Exit codes: 0 success, 1 verification failure,
//! 2 usage error.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::catalog::{Catalog, GabVariant, SingularityRecord};
use crate::etaq::{saito_identity_residual, UpperHalfPoint};
use crate::frameshape::FrameShape;
use crate::lattice::{coxeter_frame_of_root_system, parse_graph};
use crate::magicsquare::{enumerate_duals, find_magic_squares};
use crate::moonshine::search_sequences;
use crate::verify::{run_suites, Suite, ALL_SUITES};
use crate::weights::WeightSystem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "strange-duality", version, about = "Exact workbench for strange duality of singularities")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a catalog record with all invariants.
    Show { name: String },
    /// Print the dual singularities of a record.
    Dual { name: String },
    /// Print the Saito dual of a frame shape, e.g. "6*7*42/1*14*21".
    FrameDual { shape: String },
    /// Run verification suites.
    Verify {
        /// "all" or one of: arnold, extension, lattices, frames, eta,
        /// kobayashi, moonshine.
        #[arg(default_value = "all")]
        suite: String,
        /// List the check manifest instead of running.
        #[arg(long)]
        list: bool,
    },
    /// Enumerate dual weight systems of a hypersurface weight system.
    Kobayashi {
        /// Three comma-separated weights, e.g. 3,8,12.
        #[arg(long, value_delimiter = ',', required = true)]
        weights: Vec<u64>,
        /// Degree N of the weight system.
        #[arg(long)]
        degree: u64,
        /// Also print the primitive magic squares for each dual.
        #[arg(long)]
        all_squares: bool,
    },
    /// Search for self-dual degree-24 frame shapes up to a bound.
    Moonshine {
        #[arg(long, default_value_t = 119)]
        max_n: u64,
    },
    /// Lattice computations on a graph expression.
    Lattice {
        #[command(subcommand)]
        op: LatticeOp,
    },
    /// Coxeter frame of a root system, e.g. "D10+E7^2".
    CoxeterRoot { symbols: String },
    /// Evaluate the eta identity residual for a record or a shape.
    EtaCheck {
        /// Catalog name; uses the record's frame and reduced frame.
        name: Option<String>,
        /// Explicit frame shape instead of a catalog name.
        #[arg(long)]
        shape: Option<String>,
        /// Point of the upper half plane as re,im.
        #[arg(long, default_value = "0,1")]
        tau: UpperHalfPoint,
        /// Residual tolerance; exceeding it fails the invocation.
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
}

#[derive(Debug, Subcommand)]
pub enum LatticeOp {
    /// Determinant of the Gram matrix.
    Det {
        #[arg(long)]
        graph: String,
    },
    /// Smith normal form invariant factors.
    Snf {
        #[arg(long)]
        graph: String,
    },
    /// Signature (positive, negative, zero).
    Sig {
        #[arg(long)]
        graph: String,
    },
    /// Coxeter element: characteristic polynomial, frame shape, order.
    Coxeter {
        #[arg(long)]
        graph: String,
    },
}

struct Rendered {
    text: String,
    json: Value,
    failed: bool,
}

impl Rendered {
    fn ok(text: String, json: Value) -> Self {
        Rendered { text, json, failed: false }
    }
}

/// Parse `argv` and execute one subcommand, printing to stdout or stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 2 } else { 0 };
            let _ = err.print();
            return code;
        }
    };
    let format = cli.format;
    match execute(cli.command) {
        Ok(rendered) => {
            let text = match format {
                Format::Text => rendered.text.trim_end().to_string(),
                Format::Json => {
                    serde_json::to_string_pretty(&rendered.json).expect("serializable output")
                }
            };
            if !emit(&text) {
                return 0;
            }
            if rendered.failed {
                1
            } else {
                0
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            2
        }
    }
}

/// Write one line to stdout; a closed pipe is a silent success, not a panic.
fn emit(text: &str) -> bool {
    use std::io::Write;
    writeln!(std::io::stdout().lock(), "{text}").is_ok()
}

fn execute(command: Command) -> Result<Rendered, String> {
    let catalog = Catalog::get();
    match command {
        Command::Show { name } => {
            let record = catalog.lookup(&name).map_err(|e| e.to_string())?;
            let json = serde_json::to_value(record).map_err(|e| e.to_string())?;
            Ok(Rendered::ok(format_record(record), json))
        }
        Command::Dual { name } => {
            let duals = catalog.dual_of(&name).map_err(|e| e.to_string())?;
            let names: Vec<&str> = duals.iter().map(|r| r.name.as_str()).collect();
            Ok(Rendered::ok(
                names.join("\n"),
                json!({ "name": name, "duals": names }),
            ))
        }
        Command::FrameDual { shape } => {
            let frame: FrameShape = shape.parse().map_err(|e: crate::FrameError| e.to_string())?;
            let dual = frame.saito_dual();
            Ok(Rendered::ok(
                dual.to_string(),
                json!({ "shape": frame.to_string(), "dual": dual.to_string() }),
            ))
        }
        Command::Verify { suite, list } => verify_command(catalog, &suite, list),
        Command::Kobayashi { weights, degree, all_squares } => {
            kobayashi_command(&weights, degree, all_squares)
        }
        Command::Moonshine { max_n } => {
            let shapes = search_sequences(max_n);
            let mut text = String::new();
            let mut rows = Vec::new();
            for shape in &shapes {
                let label = catalog
                    .table8_match(shape)
                    .map(|row| row.atlas_label.as_str())
                    .unwrap_or("extra");
                let _ = writeln!(text, "{:>4}  {shape}  {label}", shape.order());
                rows.push(json!({
                    "order": shape.order(),
                    "shape": shape.to_string(),
                    "label": label,
                }));
            }
            let _ = writeln!(text, "{} shapes up to order {max_n}", shapes.len());
            Ok(Rendered::ok(text, Value::Array(rows)))
        }
        Command::Lattice { op } => lattice_command(op),
        Command::CoxeterRoot { symbols } => {
            let frame = coxeter_frame_of_root_system(&symbols).map_err(|e| e.to_string())?;
            Ok(Rendered::ok(
                frame.to_string(),
                json!({ "symbols": symbols, "frame": frame.to_string() }),
            ))
        }
        Command::EtaCheck { name, shape, tau, tol } => {
            eta_check_command(catalog, name, shape, tau, tol)
        }
    }
}

fn format_variant(variant: &GabVariant) -> String {
    let numbers: Vec<String> = variant
        .numbers
        .iter()
        .zip(&variant.underline)
        .map(|(n, under)| if *under { format!("{n}_") } else { n.to_string() })
        .collect();
    format!("star:{}", numbers.join(","))
}

fn format_record(record: &SingularityRecord) -> String {
    let mut text = String::new();
    let _ = writeln!(text, "{}  ({})", record.name, record.family);
    for equation in &record.equations {
        let _ = writeln!(text, "  equation:     {equation}");
    }
    if let Some(restrictions) = &record.restrictions {
        let _ = writeln!(text, "  restrictions: {restrictions}");
    }
    let _ = writeln!(text, "  weights:      {}", record.weights);
    let dol: Vec<String> = record.dol.iter().map(u64::to_string).collect();
    let _ = writeln!(text, "  dolgachev:    {}", dol.join(","));
    let gab: Vec<String> = record.gab_variants.iter().map(format_variant).collect();
    let _ = writeln!(text, "  gabrielov:    {}", gab.join("  "));
    let mut mu_line = format!("  mu:           {}", record.mu);
    if let Some(mu1) = record.mu1 {
        let _ = write!(mu_line, "   mu1: {mu1}");
    }
    if let Some(nu) = record.nu {
        let _ = write!(mu_line, "   nu: {nu}");
    }
    let _ = writeln!(text, "{mu_line}");
    let mut d_line = format!("  d:            {}", record.d);
    if let Some(mu_flat) = record.mu_flat {
        let _ = write!(d_line, "   reduced mu: {mu_flat}");
    }
    if let Some(d_flat) = record.d_flat {
        let _ = write!(d_line, "   reduced d: {d_flat}");
    }
    let _ = writeln!(text, "{d_line}");
    if let Some(frame) = &record.frame {
        let _ = writeln!(text, "  frame:        {frame}");
    }
    if let Some(frame) = &record.frame_flat {
        let _ = writeln!(text, "  reduced frame: {frame}");
    }
    let _ = writeln!(text, "  order:        {}", record.h);
    let _ = writeln!(text, "  duals:        {}", record.duals.join(", "));
    if let Some(series) = &record.series_dual {
        let mut line = format!("  series dual:  {}", series.names.join(", "));
        if let Some(h_star) = series.h_star {
            let _ = write!(line, "  (virtual order {h_star}, virtual mu {})", series.mu_star);
        } else {
            let _ = write!(line, "  (virtual mu {})", series.mu_star);
        }
        let _ = writeln!(text, "{line}");
    }
    if let Some(form) = &record.disc_form {
        let _ = writeln!(text, "  disc form:    {form}");
    }
    if let Some(form) = &record.disc_form_dual {
        let _ = writeln!(text, "  dual form:    {form}");
    }
    text
}

fn verify_command(catalog: &Catalog, suite: &str, list: bool) -> Result<Rendered, String> {
    let suites: Vec<Suite> = if suite == "all" {
        ALL_SUITES.to_vec()
    } else {
        vec![suite.parse()?]
    };
    if list {
        let mut text = String::new();
        let mut rows = Vec::new();
        for s in &suites {
            let _ = writeln!(text, "{}: {}", s.name(), s.description());
            rows.push(json!({ "suite": s.name(), "description": s.description() }));
        }
        return Ok(Rendered::ok(text, Value::Array(rows)));
    }
    let results = run_suites(&suites, catalog);
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut total = 0usize;
    let mut failures = 0usize;
    for (suite, checks) in &results {
        let passed = checks.iter().filter(|c| c.passed).count();
        total += checks.len();
        failures += checks.len() - passed;
        let _ = writeln!(text, "suite {suite}: {passed}/{} checks passed", checks.len());
        for check in checks.iter().filter(|c| !c.passed) {
            let _ = writeln!(text, "  FAIL {}: {}", check.label, check.details);
        }
        rows.push(json!({
            "suite": suite.name(),
            "passed": passed,
            "total": checks.len(),
            "checks": checks,
        }));
    }
    let _ = writeln!(text, "total: {total} checks, {failures} failures");
    Ok(Rendered {
        text,
        json: json!({ "suites": rows, "total": total, "failures": failures }),
        failed: failures > 0,
    })
}

fn kobayashi_command(weights: &[u64], degree: u64, all_squares: bool) -> Result<Rendered, String> {
    let [w1, w2, w3] = weights else {
        return Err("--weights expects exactly three comma-separated weights".into());
    };
    let ws = WeightSystem::hypersurface(*w1, *w2, *w3, degree).map_err(|e| e.to_string())?;
    let duals = enumerate_duals(&ws);
    let mut text = String::new();
    let mut rows = Vec::new();
    for dual in &duals {
        let _ = writeln!(text, "{dual}");
        let mut row = json!({ "weights": dual.to_string() });
        if all_squares {
            let squares = find_magic_squares(&ws, dual, true);
            let mut square_rows = Vec::new();
            for square in &squares {
                let det = square
                    .determinant()
                    .map(|d| d.to_string())
                    .unwrap_or_else(|| "none".into());
                for line in square.to_string().lines() {
                    let _ = writeln!(text, "    {line}");
                }
                let _ = writeln!(text, "    det {det}");
                let _ = writeln!(text);
                square_rows.push(json!({ "entries": square.entries(), "determinant": det }));
            }
            row["squares"] = Value::Array(square_rows);
        }
        rows.push(row);
    }
    if duals.is_empty() {
        let _ = writeln!(text, "no dual weight systems");
    }
    Ok(Rendered::ok(
        text,
        json!({ "weights": ws.to_string(), "duals": rows }),
    ))
}

fn lattice_command(op: LatticeOp) -> Result<Rendered, String> {
    match op {
        LatticeOp::Det { graph } => {
            let lattice = parse_graph(&graph).map_err(|e| e.to_string())?;
            let det = lattice.determinant();
            Ok(Rendered::ok(
                det.to_string(),
                json!({ "graph": graph, "determinant": det.to_string() }),
            ))
        }
        LatticeOp::Snf { graph } => {
            let lattice = parse_graph(&graph).map_err(|e| e.to_string())?;
            let invariants = lattice.smith_invariants().map_err(|e| e.to_string())?;
            let printed: Vec<String> = invariants.iter().map(|d| d.to_string()).collect();
            Ok(Rendered::ok(
                printed.join(" "),
                json!({ "graph": graph, "invariants": printed }),
            ))
        }
        LatticeOp::Sig { graph } => {
            let lattice = parse_graph(&graph).map_err(|e| e.to_string())?;
            let (positive, negative, zero) = lattice.signature();
            Ok(Rendered::ok(
                format!("positive {positive}, negative {negative}, zero {zero}"),
                json!({ "graph": graph, "positive": positive, "negative": negative, "zero": zero }),
            ))
        }
        LatticeOp::Coxeter { graph } => {
            let lattice = parse_graph(&graph).map_err(|e| e.to_string())?;
            let report = lattice.coxeter_element().map_err(|e| e.to_string())?;
            let mut text = String::new();
            let _ = writeln!(text, "char poly: {}", report.char_poly);
            match &report.frame {
                Some(frame) => {
                    let _ = writeln!(text, "frame:     {frame}");
                }
                None => {
                    let _ = writeln!(text, "frame:     none (not a cyclotomic product)");
                }
            }
            match report.order {
                Some(order) => {
                    let _ = writeln!(text, "order:     {order}");
                }
                None => {
                    let _ = writeln!(text, "order:     unknown");
                }
            }
            Ok(Rendered::ok(
                text,
                json!({
                    "graph": graph,
                    "char_poly": report.char_poly.to_string(),
                    "frame": report.frame.as_ref().map(FrameShape::to_string),
                    "order": report.order,
                }),
            ))
        }
    }
}

fn eta_check_command(
    catalog: &Catalog,
    name: Option<String>,
    shape: Option<String>,
    tau: UpperHalfPoint,
    tol: f64,
) -> Result<Rendered, String> {
    let shapes: Vec<(String, FrameShape)> = match (&name, &shape) {
        (None, Some(text)) => {
            let frame: FrameShape = text.parse().map_err(|e: crate::FrameError| e.to_string())?;
            vec![("shape".into(), frame)]
        }
        (Some(name), None) => {
            let record = catalog.lookup(name).map_err(|e| e.to_string())?;
            let mut list = Vec::new();
            if let Some(frame) = &record.frame {
                list.push(("frame".into(), frame.clone()));
            }
            if let Some(frame) = &record.frame_flat {
                list.push(("reduced frame".into(), frame.clone()));
            }
            list
        }
        _ => return Err("pass either a catalog name or --shape, not both".into()),
    };
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut failed = false;
    for (what, frame) in &shapes {
        let residual = saito_identity_residual(frame, tau).map_err(|e| e.to_string())?;
        let ok = residual < tol;
        failed |= !ok;
        let verdict = if ok { "ok" } else { "BREACH" };
        let _ = writeln!(
            text,
            "{what} {frame}  tau = {tau}  residual = {residual:.3e}  {verdict}"
        );
        rows.push(json!({
            "source": what,
            "shape": frame.to_string(),
            "residual": residual,
            "ok": ok,
        }));
    }
    Ok(Rendered {
        text,
        json: json!({ "tau": tau.to_string(), "tol": tol, "checks": rows }),
        failed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rendered(args: &[&str]) -> Rendered {
        let cli = Cli::try_parse_from(args).unwrap();
        execute(cli.command).unwrap()
    }

    #[test]
    fn dual_lookup_prints_the_partner() {
        let out = rendered(&["strange-duality", "dual", "E13"]);
        assert_eq!(out.text.trim(), "Z11");
        assert_eq!(out.json["duals"], json!(["Z11"]));
        assert!(!out.failed);
    }

    #[test]
    fn frame_dual_round_trips() {
        let out = rendered(&["strange-duality", "frame-dual", "2*3*30/1*6*15"]);
        assert_eq!(out.text.trim(), "2*5*30/1*10*15");
        let back = rendered(&["strange-duality", "frame-dual", "2*5*30/1*10*15"]);
        assert_eq!(back.text.trim(), "2*3*30/1*6*15");
        let fixed = rendered(&["strange-duality", "frame-dual", "2*3*7*42/1*6*14*21"]);
        assert_eq!(fixed.text.trim(), "2*3*7*42/1*6*14*21");
    }

    #[test]
    fn lattice_det_matches_the_table() {
        let out = rendered(&["strange-duality", "lattice", "det", "--graph", "star:2,3,7+U"]);
        assert_eq!(out.text.trim(), "1");
    }

    #[test]
    fn show_emits_the_full_record() {
        let out = rendered(&["strange-duality", "show", "I1,0"]);
        assert!(out.text.contains("weights:      2,3,3,3;6,6"));
        assert!(out.text.contains("frame:        6^3/1*2^2"));
        assert_eq!(out.json["name"], json!("I1,0"));
    }

    #[test]
    fn verify_list_names_every_suite() {
        let out = rendered(&["strange-duality", "verify", "--list"]);
        for suite in ALL_SUITES {
            assert!(out.text.contains(suite.name()));
        }
        let one = rendered(&["strange-duality", "verify", "moonshine", "--list"]);
        assert!(one.text.starts_with("moonshine:"));
    }

    #[test]
    fn verify_arnold_suite_passes() {
        let out = rendered(&["strange-duality", "verify", "arnold"]);
        assert!(!out.failed, "{}", out.text);
        assert!(out.text.contains("0 failures"));
    }

    #[test]
    fn kobayashi_finds_the_dual_of_e14() {
        let out = rendered(&[
            "strange-duality",
            "kobayashi",
            "--weights",
            "3,8,12",
            "--degree",
            "24",
        ]);
        assert_eq!(out.text.trim(), "6,8,9;24");
        let squares = rendered(&[
            "strange-duality",
            "kobayashi",
            "--weights",
            "3,8,12",
            "--degree",
            "24",
            "--all-squares",
        ]);
        assert!(squares.text.contains("det 24") || squares.text.contains("det -24"));
    }

    #[test]
    fn eta_check_reports_a_breach_under_a_tight_tolerance() {
        let ok = rendered(&["strange-duality", "eta-check", "E12"]);
        assert!(!ok.failed);
        let breach = rendered(&[
            "strange-duality",
            "eta-check",
            "E12",
            "--tol",
            "1e-30",
        ]);
        assert!(breach.failed);
        assert!(breach.text.contains("BREACH"));
    }

    #[test]
    fn usage_errors_exit_with_code_two() {
        assert_eq!(run(["strange-duality", "verify", "bogus"]), 2);
        assert_eq!(run(["strange-duality", "dual", "X99"]), 2);
        assert_eq!(run(["strange-duality", "nonsense"]), 2);
    }
}
