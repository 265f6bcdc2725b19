//! Command-line front end: single-point evaluation, chamber and
//! wall-crossing reports, and cross-path verification sweeps, with plain
//! text or JSON output.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage error,
//! 3 domain error (point outside the parameter space).

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::arith::Rat;
use crate::chambers::{
    chamber_of, chamber_poly, enumerate_chambers, r_i_poly, totally_negative_poly,
    wall_crossing_poly, ChamberSig, MultiPoly, PointLocation,
};
use crate::combinatorics::descending_tuples;
use crate::error::Error;
use crate::invariants::{
    descendant_value, f_graph_oracle, f_value_with_order, r_i_series_value_with_order,
    LatticePoint, MarkSet,
};

const SCHEMA_VERSION: u64 = 1;

#[derive(Parser)]
#[command(
    name = "relgw",
    version,
    about = "Exact relative Gromov-Witten invariants of P^1: values, chambers, wall crossings"
)]
struct Cli {
    /// Emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Minimum power-series truncation order (raised automatically when a
    /// computation needs more; results never depend on it)
    #[arg(long, global = true)]
    order: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate F at one lattice point
    Value {
        /// Comma-separated insertions x_1,...,x_m (sorted descending)
        #[arg(long, value_delimiter = ',', required = true)]
        x: Vec<u32>,
        /// Ramification degree y >= 1
        #[arg(long)]
        y: u32,
        /// Re-evaluate through the localization-graph oracle and compare
        #[arg(long)]
        verify: bool,
        /// Report F = 0 for points outside the parameter space instead of
        /// failing (the invariant vanishes there by dimension reasons)
        #[arg(long)]
        allow_outside: bool,
    },
    /// Enumerate chamber signatures with witnesses and polynomials
    Chambers {
        #[arg(long)]
        m: usize,
        /// Coordinate bound for the witness search
        #[arg(long, default_value_t = 6)]
        bound: u32,
    },
    /// Wall-crossing polynomial across the wall sum_{i in I} x_i = y
    Wall {
        #[arg(long)]
        m: usize,
        /// Comma-separated 1-based mark indices of I
        #[arg(long = "I", value_delimiter = ',', required = true)]
        i: Vec<usize>,
    },
    /// Closed-form polynomial of the totally negative chamber
    Tn {
        #[arg(long)]
        m: usize,
    },
    /// Descendant value d^{m-2} / (l_1! ... l_m!) with d = 1 + sum(l)
    Descendant {
        /// Comma-separated descendant exponents l_1,...,l_m
        #[arg(long, value_delimiter = ',', required = true)]
        l: Vec<u32>,
    },
    /// Sweep all parameter-space points within bounds and cross-check the
    /// series path, polynomial path and graph oracle against each other
    Verify {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 4)]
        xmax: u32,
        #[arg(long, default_value_t = 6)]
        ymax: u32,
    },
}

/// Runs the CLI against the process arguments and returns the exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let ctx = Context {
        json: cli.json,
        order: cli.order,
    };
    let result = match cli.command {
        Command::Value {
            x,
            y,
            verify,
            allow_outside,
        } => cmd_value(&ctx, x, y, verify, allow_outside),
        Command::Chambers { m, bound } => cmd_chambers(&ctx, m, bound),
        Command::Wall { m, i } => cmd_wall(&ctx, m, &i),
        Command::Tn { m } => cmd_tn(&ctx, m),
        Command::Descendant { l } => cmd_descendant(&ctx, &l),
        Command::Verify { m, xmax, ymax } => cmd_verify(&ctx, m, xmax, ymax),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

struct Context {
    json: bool,
    order: Option<usize>,
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::OutsideParameterSpace { .. } => 3,
        Error::InvalidDegree(_)
        | Error::TooFewMarks(_)
        | Error::MarkIndexOutOfRange { .. }
        | Error::NotAResonance { .. }
        | Error::SubsetTooLarge { .. } => 2,
    }
}

fn poly_json(p: &MultiPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .collect::<Vec<_>>()
        .into_iter()
        .rev()
        .map(|(exps, coeff)| {
            json!({
                "exponents": exps,
                "coeff": coeff.to_string(),
            })
        })
        .collect();
    Value::Array(terms)
}

fn sets_json(sets: &[MarkSet]) -> Value {
    Value::Array(sets.iter().map(|s| json!(s.one_based())).collect())
}

fn sig_json(sig: &ChamberSig) -> Value {
    let below: Vec<MarkSet> = sig.below().iter().copied().collect();
    json!({
        "below": sets_json(&below),
        "above": sets_json(&sig.above()),
    })
}

fn location_json(location: &PointLocation) -> Value {
    match location {
        PointLocation::Interior(sig) => json!({
            "kind": "interior",
            "signature": sig_json(sig),
        }),
        PointLocation::OnWall { below, walls } => {
            let below: Vec<MarkSet> = below.iter().copied().collect();
            json!({
                "kind": "wall",
                "below": sets_json(&below),
                "walls": sets_json(walls),
            })
        }
    }
}

fn location_text(location: &PointLocation) -> String {
    match location {
        PointLocation::Interior(sig) => {
            let below: Vec<String> = sig.below().iter().map(|s| s.to_string()).collect();
            format!("interior; below: [{}]", below.join(", "))
        }
        PointLocation::OnWall { walls, .. } => {
            let walls: Vec<String> = walls.iter().map(|s| s.to_string()).collect();
            format!("on wall(s): [{}]", walls.join(", "))
        }
    }
}

fn emit(ctx: &Context, report: &Value, text: &str) {
    if ctx.json {
        println!(
            "{}",
            serde_json::to_string_pretty(report).expect("valid json")
        );
    } else {
        println!("{text}");
    }
}

fn cmd_value(
    ctx: &Context,
    x: Vec<u32>,
    y: u32,
    verify: bool,
    allow_outside: bool,
) -> Result<i32, Error> {
    let input = x.clone();
    let point = LatticePoint::new(x, y)?;
    let sorted = point.x() != input.as_slice();

    if !point.in_parameter_space() {
        if !allow_outside {
            return Err(Error::OutsideParameterSpace {
                bound: 1 + point.sum_x(),
                y,
            });
        }
        // dimension constraint: the invariant vanishes when 1 + sum(x) < y
        let report = json!({
            "schema": SCHEMA_VERSION,
            "command": "value",
            "x": point.x(),
            "y": point.y(),
            "input_sorted": sorted,
            "in_parameter_space": false,
            "vanishing": true,
            "t_exponent": point.t_exponent(),
            "f": "0",
        });
        let mut text = String::new();
        if sorted {
            text.push_str(&format!("note: insertions sorted to {point}\n"));
        }
        text.push_str(&format!(
            "point {point} lies outside the parameter space (1 + sum(x) < y)\n\
             F = 0 (vanishes by the dimension constraint)\n\
             t-exponent = {}",
            point.t_exponent()
        ));
        emit(ctx, &report, &text);
        return Ok(0);
    }

    let order = ctx.order.unwrap_or(y as usize + 2);
    let f = f_value_with_order(&point, order)?;
    let location = chamber_of(&point)?;

    let mut oracle_value: Option<Rat> = None;
    let mut matched = true;
    if verify {
        let oracle = f_graph_oracle(&point)?;
        matched = oracle == f;
        oracle_value = Some(oracle);
    }

    let mut report = json!({
        "schema": SCHEMA_VERSION,
        "command": "value",
        "x": point.x(),
        "y": point.y(),
        "input_sorted": sorted,
        "in_parameter_space": true,
        "t_exponent": point.t_exponent(),
        "chamber": location_json(&location),
        "f": f.to_string(),
    });
    let mut text = String::new();
    if sorted {
        text.push_str(&format!("note: insertions sorted to {point}\n"));
    }
    text.push_str(&format!(
        "point {point}\nchamber: {}\nt-exponent = {}\nF = {f}",
        location_text(&location),
        point.t_exponent()
    ));
    if let Some(oracle) = &oracle_value {
        report["oracle"] = json!(oracle.to_string());
        report["verified"] = json!(matched);
        text.push_str(&format!(
            "\ngraph oracle = {oracle} ({})",
            if matched { "match" } else { "MISMATCH" }
        ));
    }
    emit(ctx, &report, &text);
    Ok(if matched { 0 } else { 1 })
}

fn cmd_chambers(ctx: &Context, m: usize, bound: u32) -> Result<i32, Error> {
    let chambers = enumerate_chambers(m, bound)?;
    let mut entries = Vec::new();
    let mut text = format!("m = {m}, bound = {bound}: {} chamber(s)", chambers.len());
    for (index, (sig, witness)) in chambers.iter().enumerate() {
        let poly = chamber_poly(sig);
        entries.push(json!({
            "signature": sig_json(sig),
            "witness": {"x": witness.x(), "y": witness.y()},
            "degree": poly.total_degree(),
            "polynomial": poly_json(&poly),
        }));
        let below: Vec<String> = sig.below().iter().map(|s| s.to_string()).collect();
        text.push_str(&format!(
            "\nchamber {}: below = [{}]\n  witness: {witness}\n  P = {poly}",
            index + 1,
            below.join(", "),
        ));
    }
    let report = json!({
        "schema": SCHEMA_VERSION,
        "command": "chambers",
        "m": m,
        "bound": bound,
        "count": chambers.len(),
        "chambers": entries,
    });
    emit(ctx, &report, &text);
    Ok(0)
}

fn cmd_wall(ctx: &Context, m: usize, indices: &[usize]) -> Result<i32, Error> {
    let subset = MarkSet::from_one_based(indices, m)?;
    let poly = wall_crossing_poly(m, subset)?;
    let report = json!({
        "schema": SCHEMA_VERSION,
        "command": "wall",
        "m": m,
        "wall": subset.one_based(),
        "degree": poly.total_degree(),
        "polynomial": poly_json(&poly),
    });
    let text = format!(
        "WC_{subset} (difference across the wall sum_{subset} x_i = y) for m = {m}:\n{poly}"
    );
    emit(ctx, &report, &text);
    Ok(0)
}

fn cmd_tn(ctx: &Context, m: usize) -> Result<i32, Error> {
    let poly = totally_negative_poly(m)?;
    let report = json!({
        "schema": SCHEMA_VERSION,
        "command": "tn",
        "m": m,
        "degree": poly.total_degree(),
        "polynomial": poly_json(&poly),
    });
    let text = format!("totally negative chamber polynomial for m = {m}:\n{poly}");
    emit(ctx, &report, &text);
    Ok(0)
}

fn cmd_descendant(ctx: &Context, l: &[u32]) -> Result<i32, Error> {
    if l.is_empty() {
        return Err(Error::TooFewMarks(0));
    }
    let d: u64 = 1 + l.iter().map(|&v| v as u64).sum::<u64>();
    let value = descendant_value(l);
    let report = json!({
        "schema": SCHEMA_VERSION,
        "command": "descendant",
        "l": l,
        "d": d,
        "value": value.to_string(),
    });
    let text = format!("d = 1 + sum(l) = {d}\ndescendant value = {value}");
    emit(ctx, &report, &text);
    Ok(0)
}

struct Sweep {
    points: u64,
    mismatches: Vec<String>,
}

impl Sweep {
    fn new() -> Self {
        Sweep {
            points: 0,
            mismatches: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.points += 1;
        if !ok {
            self.mismatches.push(describe());
        }
    }
}

fn cmd_verify(ctx: &Context, m: usize, xmax: u32, ymax: u32) -> Result<i32, Error> {
    if m < 2 {
        return Err(Error::TooFewMarks(m));
    }
    let tuples = descending_tuples(m, xmax);

    let mut oracle = Sweep::new();
    let mut series_vs_poly = Sweep::new();
    let mut chamber_agreement = Sweep::new();
    let mut full_sum = Sweep::new();

    // polynomial forms, one per subset with |I| <= m-2
    let subsets: Vec<MarkSet> = MarkSet::all_subsets(m)
        .filter(|s| s.len() + 2 <= m)
        .collect();
    let polys: Vec<(MarkSet, MultiPoly)> = subsets
        .iter()
        .map(|&s| Ok((s, r_i_poly(m, s)?)))
        .collect::<Result<_, Error>>()?;
    let mut chamber_cache: std::collections::BTreeMap<ChamberSig, MultiPoly> =
        std::collections::BTreeMap::new();

    for xs in &tuples {
        for y in 1..=ymax {
            let p = LatticePoint::new(xs.clone(), y).expect("y >= 1");
            let order = ctx.order.unwrap_or(y as usize + 2);

            if p.in_parameter_space() {
                let f = f_value_with_order(&p, order)?;

                let g = f_graph_oracle(&p)?;
                oracle.check(f == g, || format!("oracle: {p}: series {f} vs graphs {g}"));

                for (subset, poly) in &polys {
                    if p.resonance_sum(*subset) > y as u64 {
                        continue;
                    }
                    let series = r_i_series_value_with_order(&p, *subset, order)?;
                    let closed = poly.eval_point(&p);
                    series_vs_poly.check(series == closed, || {
                        format!("series-vs-poly: {p} I={subset}: {series} vs {closed}")
                    });
                }

                match chamber_of(&p)? {
                    PointLocation::Interior(sig) => {
                        let poly = chamber_cache
                            .entry(sig.clone())
                            .or_insert_with(|| chamber_poly(&sig));
                        let value = poly.eval_point(&p);
                        chamber_agreement.check(value == f, || {
                            format!("chamber: {p}: poly {value} vs F {f}")
                        });
                    }
                    PointLocation::OnWall { below, walls } => {
                        // every chamber whose closure holds the point must
                        // agree with F there; check both extreme signatures
                        let mut with_walls = below.clone();
                        with_walls.extend(walls.iter().copied());
                        for below_set in [below, with_walls] {
                            let sig = ChamberSig::new(m, below_set)?;
                            let poly = chamber_cache
                                .entry(sig.clone())
                                .or_insert_with(|| chamber_poly(&sig));
                            let value = poly.eval_point(&p);
                            chamber_agreement.check(value == f, || {
                                format!("wall closure: {p}: poly {value} vs F {f}")
                            });
                        }
                    }
                }
            } else if y as u64 >= p.sum_x() + m as u64 {
                // y >= sum(x_i + 1): the full sum over every subset of
                // {1..m} must vanish
                let mut total = Rat::zero();
                for subset in MarkSet::all_subsets(m) {
                    total += r_i_series_value_with_order(&p, subset, order)?;
                }
                full_sum.check(total.is_zero(), || format!("full-sum: {p}: sum = {total}"));
            }
        }
    }

    let sweeps = [
        ("oracle", &oracle),
        ("series_vs_poly", &series_vs_poly),
        ("chamber_agreement", &chamber_agreement),
        ("full_sum_vanishing", &full_sum),
    ];
    let total_mismatches: usize = sweeps.iter().map(|(_, s)| s.mismatches.len()).sum();

    let mut checks = serde_json::Map::new();
    let mut text = format!("verify m = {m}, xmax = {xmax}, ymax = {ymax}");
    let mut all_mismatches = Vec::new();
    for (name, sweep) in &sweeps {
        checks.insert(
            name.to_string(),
            json!({
                "checked": sweep.points,
                "mismatches": sweep.mismatches.len(),
            }),
        );
        text.push_str(&format!(
            "\n  {name}: {} checked, {} mismatch(es)",
            sweep.points,
            sweep.mismatches.len()
        ));
        all_mismatches.extend(sweep.mismatches.iter().cloned());
    }
    for line in all_mismatches.iter().take(20) {
        text.push_str(&format!("\n  MISMATCH {line}"));
    }
    text.push_str(&format!(
        "\nresult: {}",
        if total_mismatches == 0 {
            "OK"
        } else {
            "FAILED"
        }
    ));

    let report = json!({
        "schema": SCHEMA_VERSION,
        "command": "verify",
        "m": m,
        "xmax": xmax,
        "ymax": ymax,
        "checks": Value::Object(checks),
        "mismatches": all_mismatches,
        "ok": total_mismatches == 0,
    });
    emit(ctx, &report, &text);
    Ok(if total_mismatches == 0 { 0 } else { 1 })
}
