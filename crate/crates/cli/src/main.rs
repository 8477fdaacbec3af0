//! Command-line front end for the sinecert verification suite.
//!
//! Exit codes: 0 = everything certified/proved, 1 = a check failed (a lemma
//! did not certify, a pipeline instance was not established, a scan found a
//! certainly-negative cell, a certificate failed re-validation), 2 = usage or
//! parse error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use sinecert::{
    brute_min, check_certificate, h_lower_bounds, pipeline, verify_h_certificates, verify_lemma,
    BetaSpec, DifCertificate, Error, Interval, LemmaReport, PipelineTrace, LEMMA_IDS,
};

const DEFAULT_PRECISION: usize = 128;
const PRECISION_ENV: &str = "SINECERT_PRECISION";

#[derive(Parser)]
#[command(name = "sinecert", version, about = "Certified nonnegativity checks for the S_{n,\u{3b2}} sine polynomial family")]
struct Cli {
    /// Working precision in bits (env SINECERT_PRECISION overrides the default)
    #[arg(long, global = true)]
    precision: Option<usize>,

    /// Number of grid cells for brute-force scans
    #[arg(long, global = true, default_value_t = 8192)]
    cells: usize,

    /// Maximum chain length when building difference certificates
    #[arg(long, global = true, default_value_t = 64)]
    max_points: usize,

    /// Directory to write report files into
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Write reports as JSON instead of plain text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Verify a lemma by id, the h-certificate suite, or everything
    Verify {
        /// A lemma id, "h-certificates", "h-lower-bounds", or "all"
        target: String,
    },
    /// Run the regional proof pipeline for a single (n, beta) instance
    Pipeline {
        /// Polynomial degree parameter (n >= 7)
        #[arg(long)]
        n: u32,
        /// "beta1", "beta2", a decimal, or a fraction p/q
        #[arg(long)]
        beta: String,
    },
    /// Brute-force grid scan over a range of n, reporting certified minima
    Scan {
        /// A single n or an inclusive range a..b
        #[arg(long)]
        n: String,
        /// "beta1", "beta2", a decimal, or a fraction p/q
        #[arg(long)]
        beta: String,
    },
    /// Re-validate a difference certificate file link by link
    Check {
        /// Path to a certificate in the difcert v1 text format
        file: PathBuf,
    },
}

fn resolved_precision(cli: &Cli) -> Result<usize, String> {
    if let Some(p) = cli.precision {
        return Ok(p);
    }
    match std::env::var(PRECISION_ENV) {
        Ok(s) => s
            .parse()
            .map_err(|_| format!("{PRECISION_ENV} is not a bit count: {s:?}")),
        Err(_) => Ok(DEFAULT_PRECISION),
    }
}

fn write_report(out: &Option<PathBuf>, name: &str, body: &str) -> Result<(), String> {
    let Some(dir) = out else { return Ok(()) };
    fs::create_dir_all(dir).map_err(|e| format!("cannot create {}: {e}", dir.display()))?;
    let path = dir.join(name);
    fs::write(&path, body).map_err(|e| format!("cannot write {}: {e}", path.display()))
}

fn interval_json(iv: &Interval) -> serde_json::Value {
    json!({ "lo": iv.lo().to_string(), "hi": iv.hi().to_string() })
}

fn lemma_report_json(r: &LemmaReport) -> serde_json::Value {
    json!({
        "lemma": r.id,
        "status": r.status.to_string(),
        "constants": r.constants.iter()
            .map(|(name, iv)| json!({ "name": name, "enclosure": interval_json(iv) }))
            .collect::<Vec<_>>(),
        "certificates": r.certificates.iter()
            .map(|(name, c)| json!({ "name": name, "points": c.chain.len() }))
            .collect::<Vec<_>>(),
        "notes": r.notes,
    })
}

fn trace_json(t: &PipelineTrace) -> serde_json::Value {
    json!({
        "n": t.n,
        "beta": t.beta.to_string(),
        "branch": t.branch,
        "regions": t.regions.iter().map(|r| json!({
            "name": r.name,
            "verdict": format!("{:?}", r.verdict),
            "constants": r.constants.iter()
                .map(|(name, iv)| json!({ "name": name, "enclosure": interval_json(iv) }))
                .collect::<Vec<_>>(),
            "notes": r.notes,
        })).collect::<Vec<_>>(),
        "verdict": format!("{:?}", t.verdict()),
    })
}

/// A beta spec made safe for use in a file name (fractions contain '/').
fn beta_slug(beta: &BetaSpec) -> String {
    beta.to_string().replace('/', "-")
}

fn parse_beta(s: &str) -> Result<BetaSpec, u8> {
    BetaSpec::parse(s).map_err(|e| {
        eprintln!("error: invalid --beta value {s:?}: {e}");
        2
    })
}

fn cmd_verify(cli: &Cli, target: &str, prec: usize) -> u8 {
    let known = |t: &str| {
        LEMMA_IDS.contains(&t) || t == "h-certificates" || t == "h-lower-bounds" || t == "all"
    };
    if !known(target) {
        eprintln!(
            "error: unknown verification target {target:?}; expected one of {}, h-certificates, h-lower-bounds, all",
            LEMMA_IDS.join(", ")
        );
        return 2;
    }
    let ids: Vec<&str> = if target == "all" {
        LEMMA_IDS
            .iter()
            .copied()
            .chain(["h-certificates", "h-lower-bounds"])
            .collect()
    } else {
        vec![target]
    };

    let mut all_passed = true;
    for id in ids {
        let result = match id {
            "h-certificates" => verify_h_certificates(cli.max_points, prec),
            "h-lower-bounds" => h_lower_bounds(prec),
            _ => verify_lemma(id, prec),
        };
        match result {
            Ok(report) => {
                println!("{}", report.summary());
                all_passed &= report.passed();
                let (name, body) = if cli.json {
                    (
                        format!("{id}.json"),
                        format!("{:#}\n", lemma_report_json(&report)),
                    )
                } else {
                    (format!("{id}.txt"), report.to_text())
                };
                if let Err(e) = write_report(&cli.out, &name, &body) {
                    eprintln!("error: {e}");
                    return 1;
                }
            }
            Err(e) => {
                eprintln!("error: verification of {id} aborted: {e}");
                all_passed = false;
            }
        }
    }
    if all_passed {
        0
    } else {
        1
    }
}

fn cmd_pipeline(cli: &Cli, n: u32, beta: &str, prec: usize) -> u8 {
    let beta = match parse_beta(beta) {
        Ok(b) => b,
        Err(code) => return code,
    };
    let trace = match pipeline(n, &beta, prec) {
        Ok(t) => t,
        Err(Error::Argument(msg)) => {
            eprintln!("error: {msg}");
            return 2;
        }
        Err(e) => {
            eprintln!("error: pipeline aborted: {e}");
            return 1;
        }
    };
    print!("{}", trace.to_text());
    let (name, body) = if cli.json {
        (
            format!("pipeline-n{}-{}.json", n, beta_slug(&beta)),
            format!("{:#}\n", trace_json(&trace)),
        )
    } else {
        (
            format!("pipeline-n{}-{}.txt", n, beta_slug(&beta)),
            trace.to_text(),
        )
    };
    if let Err(e) = write_report(&cli.out, &name, &body) {
        eprintln!("error: {e}");
        return 1;
    }
    if trace.proved() {
        0
    } else {
        1
    }
}

fn parse_n_range(s: &str) -> Result<(u32, u32), u8> {
    let bad = || {
        eprintln!("error: invalid --n value {s:?}: expected a single n or an inclusive range a..b");
        2
    };
    if let Some((a, b)) = s.split_once("..") {
        let a: u32 = a.trim().parse().map_err(|_| bad())?;
        let b: u32 = b.trim().parse().map_err(|_| bad())?;
        if a < 2 || b < a {
            return Err(bad());
        }
        Ok((a, b))
    } else {
        let n: u32 = s.trim().parse().map_err(|_| bad())?;
        if n < 2 {
            return Err(bad());
        }
        Ok((n, n))
    }
}

fn cmd_scan(cli: &Cli, n_spec: &str, beta: &str, prec: usize) -> u8 {
    let (lo, hi) = match parse_n_range(n_spec) {
        Ok(r) => r,
        Err(code) => return code,
    };
    let beta = match parse_beta(beta) {
        Ok(b) => b,
        Err(code) => return code,
    };
    let beta_iv = beta.interval(prec);

    let mut lines = Vec::new();
    let mut rows = Vec::new();
    let mut found_negative = false;
    for n in lo..=hi {
        let scan = match brute_min(n, &beta_iv, cli.cells, prec) {
            Ok(s) => s,
            Err(e) => {
                eprintln!("error: scan of n = {n} aborted: {e}");
                return 1;
            }
        };
        let m = scan.min_cell;
        let mut line = format!("n {n} min >= {:.6e} near x = {:.9}", m.lo, m.x_mid);
        if let Some(w) = scan.negative_cell {
            line.push_str(&format!(
                "  NEGATIVE witness x = {:.9} with S <= {:.6e}",
                w.x_mid, w.hi
            ));
            found_negative = true;
        }
        println!("{line}");
        lines.push(line);
        rows.push(json!({
            "n": n,
            "min_lower_bound": m.lo,
            "min_x": m.x_mid,
            "witness": scan.negative_cell.map(|w| json!({ "x": w.x_mid, "upper_bound": w.hi })),
        }));
    }

    let (name, body) = if cli.json {
        let doc = json!({
            "beta": beta.to_string(),
            "cells": cli.cells,
            "rows": rows,
            "negative_cell_found": found_negative,
        });
        (format!("scan-{}.json", beta_slug(&beta)), format!("{doc:#}\n"))
    } else {
        let mut body = format!("scan beta {} cells {}\n", beta, cli.cells);
        for l in &lines {
            body.push_str(l);
            body.push('\n');
        }
        (format!("scan-{}.txt", beta_slug(&beta)), body)
    };
    if let Err(e) = write_report(&cli.out, &name, &body) {
        eprintln!("error: {e}");
        return 1;
    }
    if found_negative {
        1
    } else {
        0
    }
}

fn cmd_check(file: &PathBuf) -> u8 {
    let text = match fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", file.display());
            return 2;
        }
    };
    let cert = match DifCertificate::from_text(&text) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    if check_certificate(&cert) {
        println!(
            "certificate ok: {} points, {} links re-validated",
            cert.chain.len(),
            cert.links.len()
        );
        0
    } else {
        println!("certificate FAILED re-validation");
        1
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let prec = match resolved_precision(&cli) {
        Ok(p) => p,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let code = match &cli.cmd {
        Cmd::Verify { target } => cmd_verify(&cli, target, prec),
        Cmd::Pipeline { n, beta } => cmd_pipeline(&cli, *n, beta, prec),
        Cmd::Scan { n, beta } => cmd_scan(&cli, n, beta, prec),
        Cmd::Check { file } => cmd_check(file),
    };
    ExitCode::from(code)
}
