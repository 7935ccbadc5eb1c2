//! Text, JSON and CSV renderings of the command results.

use std::fmt::Write as _;

use serde::Serialize;

use quintic::claims::{render_text, TargetRun};
use quintic::config::Config;
use quintic::frobenius::{FrobeniusReport, RangeSummary};
use quintic::modforms::N3Row;
use quintic::{Error, Result};

pub const SWEEP_COLUMNS: [&str; 12] =
    ["p", "type5", "type6", "type48", "class", "ap_sq", "N_p", "k19", "k151", "k2869", "verdicts", "predicted_product"];

fn json<T: Serialize>(value: &T) -> Result<String> {
    serde_json::to_string_pretty(value).map(|s| s + "\n").map_err(|e| Error::Internal(e.to_string()))
}

fn csv_string(header: &str, rows: impl FnOnce(&mut csv::Writer<Vec<u8>>) -> csv::Result<()>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    rows(&mut w).map_err(|e| Error::Internal(e.to_string()))?;
    let bytes = w.into_inner().map_err(|e| Error::Internal(e.to_string()))?;
    let body = String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))?;
    Ok(format!("# {header}\n{body}"))
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    config: &'a Config,
    passed: bool,
    runs: &'a [TargetRun],
}

pub fn verify_text(config: &Config, runs: &[TargetRun]) -> String {
    render_text(config, runs)
}

pub fn verify_json(config: &Config, runs: &[TargetRun]) -> Result<String> {
    json(&VerifyJson { config, passed: runs.iter().all(|r| r.passed()), runs })
}

pub fn verify_csv(config: &Config, runs: &[TargetRun]) -> Result<String> {
    csv_string(&config.header(), |w| {
        w.write_record(["target", "claim", "id", "subject", "computed", "expected", "verdict"])?;
        for run in runs {
            for rep in &run.reports {
                for l in &rep.lines {
                    let verdict = l.verdict.to_string();
                    w.write_record([
                        run.target.name(),
                        rep.claim.as_str(),
                        &l.id,
                        &l.subject,
                        &l.computed,
                        &l.expected,
                        &verdict,
                    ])?;
                }
            }
        }
        Ok(())
    })
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(ToString::to_string).unwrap_or_default()
}

fn sweep_record(r: &FrobeniusReport) -> [String; 12] {
    [
        r.p.to_string(),
        r.type5.to_string(),
        opt(&r.type6),
        opt(&r.type48),
        r.class.label().to_string(),
        opt(&r.ap_squared),
        r.n_p.to_string(),
        r.kronecker.k19.to_string(),
        r.kronecker.k151.to_string(),
        r.kronecker.k2869.to_string(),
        r.verdict_summary(),
        r.predicted_product.to_string(),
    ]
}

#[derive(Serialize)]
struct ReportJson<'a> {
    config: &'a Config,
    report: &'a FrobeniusReport,
}

pub fn report_text(config: &Config, r: &FrobeniusReport) -> String {
    format!("# quintic report  {}\n{r}\n", config.header())
}

pub fn report_json(config: &Config, r: &FrobeniusReport) -> Result<String> {
    json(&ReportJson { config, report: r })
}

pub fn report_csv(config: &Config, r: &FrobeniusReport) -> Result<String> {
    csv_string(&config.header(), |w| {
        w.write_record(SWEEP_COLUMNS)?;
        w.write_record(sweep_record(r))
    })
}

#[derive(Serialize)]
struct SweepJson<'a> {
    config: &'a Config,
    passed: bool,
    summary: &'a RangeSummary,
}

pub fn sweep_text(config: &Config, s: &RangeSummary) -> String {
    let mut out = format!("# quintic sweep  {}\n", config.header());
    let records: Vec<[String; 12]> = s.rows.iter().map(sweep_record).collect();
    let mut widths: Vec<usize> = SWEEP_COLUMNS.iter().map(|c| c.len()).collect();
    for rec in &records {
        for (w, cell) in widths.iter_mut().zip(rec) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &[&str]| -> String {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        padded.join("  ").trim_end().to_string()
    };
    out.push_str(&line(&SWEEP_COLUMNS));
    out.push('\n');
    for rec in &records {
        let cells: Vec<&str> = rec.iter().map(String::as_str).collect();
        out.push_str(&line(&cells));
        out.push('\n');
    }
    let _ = writeln!(out, "\n# Frobenius class frequencies over {} primes", s.rows.len());
    let _ = writeln!(out, "{:<14} {:>9} {:>10} {:>10}", "class", "observed", "fraction", "|C|/120");
    for f in &s.frequencies {
        let _ = writeln!(out, "{:<14} {:>9} {:>10.6} {:>10.6}", f.class.label(), f.observed, f.fraction, f.expected);
    }
    let _ = writeln!(out, "\n# skipped lift-level checks");
    for sk in &s.skipped {
        let _ = writeln!(out, "p={} {}", sk.p, sk.reason);
    }
    let _ = writeln!(
        out,
        "# checks pass={} fail={} skip={}  overall {}",
        s.checks_passed,
        s.checks_failed,
        s.checks_skipped,
        if s.passed() { "PASS" } else { "FAIL" }
    );
    out
}

pub fn sweep_json(config: &Config, s: &RangeSummary) -> Result<String> {
    json(&SweepJson { config, passed: s.passed(), summary: s })
}

pub fn sweep_csv(config: &Config, s: &RangeSummary) -> Result<String> {
    csv_string(&config.header(), |w| {
        w.write_record(SWEEP_COLUMNS)?;
        for r in &s.rows {
            w.write_record(sweep_record(r))?;
        }
        Ok(())
    })
}

pub fn n3_csv(config: &Config, rows: &[N3Row]) -> Result<String> {
    csv_string(&config.header(), |w| {
        w.write_record(["n", "a_n", "tau_mod_23"])?;
        for r in rows {
            w.write_record([r.n.to_string(), r.a_n.clone(), r.tau_mod_23.to_string()])?;
        }
        Ok(())
    })
}
