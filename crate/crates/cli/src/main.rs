//! `chiralmap`: build and verify chiral maps with alternating groups.
//!
//! Exit codes: 0 PASS, 1 FAIL or error, 2 UNSUPPORTED, 3 not hyperbolic.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};

use chiralmap_core::chirality::{ChiralityConfig, OracleChoice};
use chiralmap_core::constructions::{build, dispatch, MapType, PlanOutcome};
use chiralmap_core::group::DEFAULT_DEGREE_CAP;
use chiralmap_core::map_model::export_dot;
use chiralmap_core::verify::{self, Overall, Summary, VerificationReport, VerifyConfig, DEGREE_CAP_ENV};

const EXIT_FAIL: u8 = 1;
const EXIT_UNSUPPORTED: u8 = 2;
const EXIT_NOT_HYPERBOLIC: u8 = 3;

#[derive(Parser)]
#[command(
    name = "chiralmap",
    version,
    about = "Construct and verify chiral maps with alternating automorphism groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build generators for one type and verify them end to end.
    Construct {
        #[arg(short = 'm', value_parser = clap::value_parser!(u32).range(3..))]
        m: u32,
        #[arg(short = 'n', value_parser = clap::value_parser!(u32).range(3..))]
        n: u32,
        /// Print the full report as JSON.
        #[arg(long)]
        json: bool,
        /// Write the permutation diagram as DOT.
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long, default_value = "auto")]
        oracle: OracleChoice,
        #[arg(long, env = DEGREE_CAP_ENV, default_value_t = DEFAULT_DEGREE_CAP)]
        degree_cap: usize,
    },
    /// Verify every hyperbolic type in a range and write the reports as JSON.
    Sweep {
        #[arg(long, default_value_t = 3)]
        min_m: u32,
        #[arg(long)]
        max_m: u32,
        #[arg(long, default_value_t = 3)]
        min_n: u32,
        #[arg(long)]
        max_n: u32,
        #[arg(long, env = DEGREE_CAP_ENV, default_value_t = DEFAULT_DEGREE_CAP)]
        degree_cap: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Verify the tabulated small types and their duals.
    Table1 {
        #[arg(long)]
        json: bool,
        #[arg(long, env = DEGREE_CAP_ENV, default_value_t = DEFAULT_DEGREE_CAP)]
        degree_cap: usize,
    },
}

fn config(degree_cap: usize, oracle: OracleChoice) -> VerifyConfig {
    VerifyConfig {
        degree_cap,
        chirality: ChiralityConfig {
            oracle,
            ..ChiralityConfig::default()
        },
    }
}

fn exit_code(overall: Overall) -> u8 {
    match overall {
        Overall::Pass => 0,
        Overall::Fail | Overall::Skipped => EXIT_FAIL,
        Overall::Unsupported => EXIT_UNSUPPORTED,
        Overall::NotHyperbolic => EXIT_NOT_HYPERBOLIC,
    }
}

fn one_line(r: &VerificationReport) -> String {
    let mut line = format!("{} {}", r.requested_type, r.overall);
    if let Some(plan) = r.plan.and_then(|p| p.params()) {
        line += &format!(" {}", plan.construction_id);
        if plan.dualized {
            line += " (dual)";
        }
    }
    if let Some(k) = r.degree {
        line += &format!(" k={k}");
    }
    if let Some(c) = &r.classification {
        line += &format!(" {:?}", c.verdict);
    }
    if let Some(ch) = &r.chirality {
        line += &format!(" {:?} via {}", ch.verdict, ch.method);
    }
    if let Some(reason) = &r.unsupported_reason {
        line += &format!(" [{reason}]");
    }
    if let Some(e) = &r.error {
        line += &format!(" [{e}]");
    }
    line
}

fn print_report(r: &VerificationReport) {
    println!("type {}: {}", r.requested_type, r.overall);
    if let Some(params) = r.plan.and_then(|p| p.params()) {
        println!(
            "  construction {} a={} i={} nu={} dualized={}",
            params.construction_id, params.a, params.i, params.nu, params.dualized
        );
    }
    if let Some(reason) = &r.unsupported_reason {
        println!("  covered externally: {reason}");
    }
    if let Some(g) = &r.generators {
        println!("  s = {}", g.s_labelled);
        println!("  t = {}", g.t_labelled);
        println!("  r = {}", g.r_labelled);
    }
    if let Some(k) = r.degree {
        println!("  degree {k}");
    }
    if let Some(o) = &r.order_checks {
        println!(
            "  orders: s {}/{} t {}/{} st {}/{}",
            o.s.actual, o.s.expected, o.t.actual, o.t.expected, o.st.actual, o.st.expected
        );
    }
    if let Some(p) = &r.parity {
        println!("  parity: s {:?}, t {:?}", p.s, p.t);
    }
    if let (Some(t), Some(p)) = (r.transitive, r.primitive) {
        println!("  transitive {t}, primitive {p}");
    }
    if let Some(c) = &r.classification {
        print!("  group {:?}", c.verdict);
        if let Some(order) = &c.order {
            print!(", order {order}");
        }
        if let Some(w) = &c.witness {
            print!(
                ", witness {} ({}-cycle, {} fixed)",
                w.word, w.cycle_length, w.fixed_count
            );
        }
        println!();
    }
    if let Some(ch) = &r.chirality {
        print!("  {:?} via {}", ch.verdict, ch.method);
        if let Some(l) = &ch.lemma {
            print!(
                " ({:?} on {:?}: zeta={} b={} c={})",
                l.lemma, l.rotation, l.zeta, l.b, l.c
            );
        }
        if !ch.confirmations.is_empty() {
            print!(", confirmed by {:?}", ch.confirmations);
        }
        println!();
        if let Some(caveat) = &ch.caveat {
            println!("  caveat: {caveat}");
        }
    }
    if let Some(m) = &r.map {
        println!(
            "  map: V={} E={} F={} chi={} genus={}",
            m.vertices, m.edges, m.faces, m.euler_characteristic, m.genus
        );
    }
    if let Some(e) = &r.error {
        println!("  error: {e}");
    }
}

fn construct(m: u32, n: u32, json: bool, dot: Option<PathBuf>, config: &VerifyConfig) -> Result<u8> {
    let report = verify::verify_type(MapType::new(m, n), config);
    if json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        print_report(&report);
    }
    if let Some(path) = dot {
        let plan = dispatch(MapType::new(m, n));
        if let PlanOutcome::Supported { .. } = plan.outcome {
            let g = build(&plan)?;
            fs::write(&path, export_dot(&g)).with_context(|| format!("writing {}", path.display()))?;
        }
    }
    Ok(exit_code(report.overall))
}

fn sweep((min_m, max_m, min_n, max_n): (u32, u32, u32, u32), out: PathBuf, config: &VerifyConfig) -> Result<u8> {
    let reports = verify::sweep(min_m, max_m, min_n, max_n, config);
    for r in &reports {
        println!("{}", one_line(r));
    }
    let summary = Summary::of(&reports);
    println!(
        "summary: {} PASS, {} FAIL, {} UNSUPPORTED, {} SKIPPED",
        summary.pass, summary.fail, summary.unsupported, summary.skipped
    );
    let text = serde_json::to_string_pretty(&reports)?;
    fs::write(&out, text).with_context(|| format!("writing {}", out.display()))?;
    Ok(if summary.fail > 0 { EXIT_FAIL } else { 0 })
}

fn table1(json: bool, config: &VerifyConfig) -> Result<u8> {
    let reports = verify::table1_reports(config);
    if json {
        println!("{}", serde_json::to_string_pretty(&reports)?);
    } else {
        for r in &reports {
            println!("{}", one_line(r));
        }
    }
    Ok(if reports.iter().all(|r| r.overall == Overall::Pass) {
        0
    } else {
        EXIT_FAIL
    })
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Construct {
            m,
            n,
            json,
            dot,
            oracle,
            degree_cap,
        } => construct(m, n, json, dot, &config(degree_cap, oracle)),
        Command::Sweep {
            min_m,
            max_m,
            min_n,
            max_n,
            degree_cap,
            out,
        } => sweep(
            (min_m, max_m, min_n, max_n),
            out,
            &config(degree_cap, OracleChoice::Auto),
        ),
        Command::Table1 { json, degree_cap } => table1(json, &config(degree_cap, OracleChoice::Auto)),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_FAIL)
        }
    }
}
