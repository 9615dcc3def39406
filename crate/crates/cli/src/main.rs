//! `conicfree`: inspect the curve catalogs, certify arrangements and rerun
//! the reference checks.
//!
//! Exit codes: 0 success, 1 a check or computation failed, 2 usage error.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use conicfree::arrangements::{
    analyze, fermat_catalog, nodal_catalog, pair_orbits, select, ArrangementReport, CatalogConic, ConicId, Curve, FermatExport, Group,
};
use conicfree::claims::{anchors, run_claims, CheckOptions, ClaimResult};
use conicfree::Error;

#[derive(Parser)]
#[command(name = "conicfree", version, about = "Cubic curves, hyperosculating conics and free arrangements")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum CurveArg {
    Nodal,
    Fermat,
}

impl From<CurveArg> for Curve {
    fn from(c: CurveArg) -> Curve {
        match c {
            CurveArg::Nodal => Curve::Nodal,
            CurveArg::Fermat => Curve::Fermat,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// List sextactic points and hyperosculating conics with their ids.
    Catalog {
        curve: CurveArg,
        #[arg(long)]
        json: bool,
        /// List one representative per orbit of conic pairs (Fermat only).
        #[arg(long)]
        pairs: bool,
    },
    /// Certify the cubic together with the selected conics
    /// (`1 2` for the nodal cubic, `P1:0 P2:0` for the Fermat cubic).
    Certify {
        curve: CurveArg,
        #[arg(required = true)]
        conics: Vec<String>,
        #[arg(long)]
        json: bool,
        /// Omit wall-clock times.
        #[arg(long)]
        no_timing: bool,
    },
    /// Rerun the reference checks and report pass or fail for each.
    Check {
        #[arg(long)]
        json: bool,
        /// Run only the checks with this anchor.
        #[arg(long, value_name = "ANCHOR")]
        only: Option<String>,
        /// Exhaustive variants of the spot checks.
        #[arg(long)]
        slow: bool,
        /// Omit wall-clock times.
        #[arg(long)]
        no_timing: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Catalog { curve, json, pairs } => catalog(curve.into(), json, pairs),
        Command::Certify { curve, conics, json, no_timing } => certify(curve.into(), &conics, json, !no_timing),
        Command::Check { json, only, slow, no_timing } => check(json, only.as_deref(), slow, !no_timing),
    }
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn print_json(v: &impl Serialize) {
    println!("{}", serde_json::to_string_pretty(v).expect("reports serialize"));
}

#[derive(Serialize)]
struct CatalogReport {
    command: &'static str,
    #[serde(flatten)]
    catalog: FermatExport,
}

fn conic_json(c: &CatalogConic) -> Value {
    json!({ "id": c.id, "conic": c.conic, "sextactic": c.sextactic })
}

fn catalog(curve: Curve, as_json: bool, pairs: bool) -> ExitCode {
    match (curve, pairs) {
        (Curve::Nodal, true) => usage_error("--pairs is only available for the Fermat cubic"),
        (Curve::Nodal, false) => {
            let cat = nodal_catalog();
            if as_json {
                print_json(&json!({
                    "command": "catalog nodal",
                    "curve": cat.curve,
                    "conics": cat.conics.iter().map(conic_json).collect::<Vec<_>>(),
                }));
            } else {
                println!("nodal cubic: {}", cat.curve);
                for c in &cat.conics {
                    println!("{}  s{} = {}", c.id, &c.id.to_string()[1..], c.sextactic);
                    println!("    {}", c.conic);
                }
            }
            ExitCode::SUCCESS
        }
        (Curve::Fermat, false) => {
            let cat = fermat_catalog();
            if as_json {
                print_json(&CatalogReport { command: "catalog fermat", catalog: cat.export() });
            } else {
                println!("Fermat cubic: {}", cat.curve);
                for j in 1..=9u8 {
                    println!("P{j}: base point {}", cat.base_points[j as usize - 1]);
                    for c in cat.fibre(j) {
                        println!("  {}  s = {}", c.id, c.sextactic);
                        println!("      {}", c.conic);
                    }
                }
            }
            ExitCode::SUCCESS
        }
        (Curve::Fermat, true) => {
            let orbits = pair_orbits(&fermat_catalog(), Group::GPrime);
            if as_json {
                print_json(&json!({ "command": "catalog fermat --pairs", "group": "G'", "orbits": orbits }));
            } else {
                println!("{} orbits of G' on pairs of conics", orbits.len());
                for o in &orbits {
                    let (a, b) = o.representative;
                    let kind = if o.same_set { "same set" } else { "different sets" };
                    println!("  {a} {b}  size {}  {kind}", o.size);
                }
            }
            ExitCode::SUCCESS
        }
    }
}

fn parse_selection(curve: Curve, raw: &[String]) -> Result<Vec<ConicId>, Error> {
    let ids = raw.iter().map(|s| ConicId::parse_for(curve, s)).collect::<Result<Vec<_>, _>>()?;
    for (i, id) in ids.iter().enumerate() {
        if ids[..i].contains(id) {
            return Err(Error::InvalidSelection(format!("{id} selected twice")));
        }
    }
    Ok(ids)
}

fn certify(curve: Curve, raw: &[String], as_json: bool, timing: bool) -> ExitCode {
    let ids = match parse_selection(curve, raw) {
        Ok(ids) => ids,
        Err(e) => return usage_error(e),
    };
    let start = Instant::now();
    let result = select(curve, &ids).and_then(|arr| analyze(&arr).map(|r| (arr, r)));
    let seconds = start.elapsed().as_secs_f64();
    let (arr, report) = match result {
        Ok(x) => x,
        Err(e @ Error::InvalidSelection(_)) => return usage_error(e),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let names: Vec<String> = ids.iter().map(|c| c.to_string()).collect();
    if as_json {
        let mut v = json!({
            "command": format!("certify {curve} {}", names.join(" ")),
            "inputs": { "curve": curve, "conics": ids, "product_degree": arr.degree() },
            "certificate": report.certificate,
            "census": report.census,
            "census_summary": report.census.summary(),
        });
        if timing {
            v["seconds"] = json!(seconds);
        }
        print_json(&v);
    } else {
        print_certificate(curve, &names, &report);
        if timing {
            println!("time: {seconds:.3}s");
        }
    }
    ExitCode::SUCCESS
}

fn print_certificate(curve: Curve, names: &[String], r: &ArrangementReport) {
    let c = &r.certificate;
    let exps: Vec<String> = c.exponents.iter().map(|e| e.to_string()).collect();
    let gens: Vec<String> = c.generator_degrees.iter().map(|e| e.to_string()).collect();
    println!("arrangement: {curve} cubic + {}", names.join(" "));
    println!("degree: {}", c.degree);
    println!("verdict: {}", c.verdict);
    println!("exponents: ({})", exps.join(", "));
    println!("mdr: {}", c.mdr);
    println!("tau: {}", c.tjurina);
    println!("generator degrees: {}", gens.join(" "));
    println!("singular points:");
    for s in &r.census.rational {
        println!(
            "  {:<28} {:<6} tau {:<3} mu {:<3} multiplicity {}",
            s.point.to_string(),
            s.kind.to_string(),
            s.tjurina,
            s.milnor,
            s.multiplicity
        );
    }
    for s in &r.census.conjugate {
        println!("  {:<28} {:<6} tau {:<3}", format!("outside K, components {} {}", s.components.0, s.components.1), s.kind.to_string(), s.tjurina);
    }
    println!("census: {}", r.census.summary());
}

fn check(as_json: bool, only: Option<&str>, slow: bool, timing: bool) -> ExitCode {
    let Some(mut results) = run_claims(only, &CheckOptions { slow }) else {
        return usage_error(format!("unknown anchor {:?}; known anchors: {}", only.unwrap_or(""), anchors().join(", ")));
    };
    if !timing {
        for r in &mut results {
            r.seconds = None;
        }
    }
    let passed = results.iter().filter(|r| r.passed).count();
    if as_json {
        print_json(&json!({
            "command": "check",
            "only": only,
            "slow": slow,
            "passed": passed,
            "total": results.len(),
            "results": results,
        }));
    } else {
        for r in &results {
            print_result(r);
        }
        println!("{passed}/{} passed", results.len());
    }
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn print_result(r: &ClaimResult) {
    let status = if r.passed { "PASS" } else { "FAIL" };
    let time = r.seconds.map(|s| format!(" ({s:.2}s)")).unwrap_or_default();
    println!("[{status}] {:>2} {:<20} {}{time}", r.criterion, r.anchor, r.title);
    println!("     {}", r.detail);
}
