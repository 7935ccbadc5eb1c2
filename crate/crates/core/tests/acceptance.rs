//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use quintic::asai::{verify_cor_asai, verify_hilbert_products, verify_n4_identity, verify_prop_asai, AsaiSetup};
use quintic::claims::{render_text, run_target, Target};
use quintic::config::Config;
use quintic::data::DataBundle;
use quintic::frobenius::{
    triple_injectivity_check, verify_character_identifications, verify_range, FrobeniusContext, RangeSummary,
};
use quintic::groups::{lifted_group, verify_inertia_matrices, verify_structure, verify_table1, verify_table2};
use quintic::modforms::verify_n3;
use quintic::polyfactor::{verify_discriminants, DISC_NMAX, SQUAREFREE_BOUND, SQUAREFREE_NMAX};
use quintic::report::{Verdict, VerifyReport};
use quintic::Result;

struct Outcome {
    ok: bool,
    detail: String,
}

fn from_reports(reports: &[VerifyReport]) -> Outcome {
    let pass: usize = reports.iter().map(|r| r.count(Verdict::Pass)).sum();
    let skip: usize = reports.iter().map(|r| r.count(Verdict::Skip)).sum();
    match reports.iter().find_map(|r| r.ensure_passed().err()) {
        None => Outcome { ok: pass > 0, detail: format!("{pass} checks passed, {skip} skipped") },
        Some(e) => Outcome { ok: false, detail: e.to_string() },
    }
}

fn criterion(id: usize, name: &str, limit: Option<Duration>, body: impl FnOnce() -> Result<Outcome>) -> bool {
    let start = Instant::now();
    let out = body().unwrap_or_else(|e| Outcome { ok: false, detail: format!("error: {e}") });
    let took = start.elapsed();
    let in_time = limit.is_none_or(|l| took <= l);
    let ok = out.ok && in_time;
    let budget = limit.map(|l| format!(" (limit {:.0?})", l)).unwrap_or_default();
    let late = if in_time { String::new() } else { " OVER TIME".into() };
    println!("{} {id:>2}. {name}: {} [{:.2?}{budget}{late}]", if ok { "PASS" } else { "FAIL" }, out.detail, took);
    ok
}

fn sweep_check_count(s: &RangeSummary, id: &str) -> (usize, usize) {
    let mut pass = 0;
    let mut other = 0;
    for row in &s.rows {
        for c in row.checks.iter().filter(|c| c.id == id) {
            if c.verdict == Verdict::Pass {
                pass += 1;
            } else {
                other += 1;
            }
        }
    }
    (pass, other)
}

fn main() -> ExitCode {
    let config = Config::default();
    let tol = config.tol;
    let seed = config.seed;
    let ctx = match DataBundle::embedded().and_then(FrobeniusContext::new) {
        Ok(c) => c,
        Err(e) => {
            println!("FAIL setup: {e}");
            return ExitCode::FAILURE;
        }
    };
    let mut sweep_1e5: Option<RangeSummary> = None;
    let mut results = Vec::new();
    let sec = Duration::from_secs;

    results.push(criterion(1, "trace/det pairs of lifts of each S5 class", Some(sec(1)), || {
        Ok(from_reports(&[verify_table1(&lifted_group(2)?)?]))
    }));
    results.push(criterion(2, "index-2 subgroups and their quadratic characters for p < 10^4", Some(sec(60)), || {
        let g = &ctx.model.group;
        Ok(from_reports(&[verify_table2(g)?, verify_structure(g)?, verify_character_identifications(&ctx, 10_000)?]))
    }));
    results.push(criterion(3, "root-count congruence mod 5, checks (i)-(iv) for p < 10^5", Some(sec(600)), || {
        let s = verify_range(&ctx, 99_999)?;
        let mut detail = Vec::new();
        let mut ok = true;
        for id in ["i.dictionary", "ii.sgn", "ii.det", "iii.root_count", "iv.congruence", "iv.congruence_class_level"] {
            let (pass, other) = sweep_check_count(&s, id);
            detail.push(format!("{id} {pass}/{}", pass + other));
            ok &= pass > 0;
        }
        detail.insert(0, format!("{} primes", s.rows.len()));
        let out = Outcome { ok: ok && s.passed(), detail: detail.join(", ") };
        sweep_1e5 = Some(s);
        Ok(out)
    }));
    results.push(criterion(4, "triple injectivity with the identity/5-cycle exception", None, || {
        Ok(from_reports(&[triple_injectivity_check(&ctx.model.group)?]))
    }));
    results.push(criterion(5, "twisted Asai transfer and central values, r = 1, 2", None, || {
        let mut reps = Vec::new();
        for r in [1, 2] {
            reps.push(verify_prop_asai(&AsaiSetup::new(r, seed, tol)?)?);
        }
        Ok(from_reports(&reps))
    }));
    results.push(criterion(6, "lift-independent formulas, r = 1, 2", None, || {
        let mut reps = Vec::new();
        for r in [1, 2] {
            let s = AsaiSetup::new(r, seed, tol)?;
            reps.push(verify_cor_asai(&s)?);
            reps.push(verify_hilbert_products(&s)?);
        }
        Ok(from_reports(&reps))
    }));
    results.push(criterion(7, "1 + (-151/p)·Hilbert product = N_p for p < 10^5", None, || {
        let s = sweep_1e5.as_ref().ok_or_else(|| quintic::Error::Internal("criterion 3 did not run".into()))?;
        let (pass, other) = sweep_check_count(s, "hp.root_count");
        Ok(Outcome { ok: other == 0 && pass == s.rows.len(), detail: format!("{pass}/{} primes", s.rows.len()) })
    }));
    results.push(criterion(8, "level-23 identities to N = 5000", Some(sec(60)), || {
        Ok(from_reports(&[verify_n3(5000, 5000)?]))
    }));
    results
        .push(criterion(9, "GL2(F3) character identity", None, || Ok(from_reports(&[verify_n4_identity(seed, tol)?]))));
    results.push(criterion(10, "discriminants of X^n - X - 1", None, || {
        Ok(from_reports(&[verify_discriminants(DISC_NMAX, SQUAREFREE_NMAX, SQUAREFREE_BOUND)?]))
    }));
    results.push(criterion(11, "inertia matrix identities", None, || {
        Ok(from_reports(&[verify_inertia_matrices(&ctx.model.group)?]))
    }));
    results.push(criterion(12, "two full default runs are byte-identical", None, || {
        let run = || -> Result<String> {
            let ctx = FrobeniusContext::new(DataBundle::embedded()?)?;
            Ok(render_text(&config, &run_target(Target::All, &config, Some(&ctx))?))
        };
        let (a, b) = (run()?, run()?);
        Ok(Outcome { ok: a == b && !a.is_empty(), detail: format!("{} bytes, identical: {}", a.len(), a == b) })
    }));

    let passed = results.iter().filter(|&&r| r).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
