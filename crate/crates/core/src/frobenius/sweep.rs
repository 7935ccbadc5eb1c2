use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::arith::primes_up_to;
use crate::error::{Error, Result};
use crate::groups::{projective_data, s5_class_of, LiftedGroup, QuadraticCharacter, S5Class, TrDet};
use crate::report::{Verdict, VerifyReport};

use super::model::RAMIFIED;
use super::report::{frobenius_report, FrobeniusContext, FrobeniusReport};

pub const MIN_SWEEP_BOUND: u64 = 100;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassFrequency {
    pub class: S5Class,
    pub observed: usize,
    pub fraction: f64,
    /// `|C| / 120`.
    pub expected: f64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkippedPrime {
    pub p: u64,
    pub reason: String,
}

/// All per-prime reports up to a bound, with aggregates.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RangeSummary {
    pub pmax: u64,
    pub rows: Vec<FrobeniusReport>,
    pub frequencies: Vec<ClassFrequency>,
    /// Primes where some check was skipped, with the reason.
    pub skipped: Vec<SkippedPrime>,
    pub checks_passed: usize,
    pub checks_failed: usize,
    pub checks_skipped: usize,
}

impl RangeSummary {
    pub fn passed(&self) -> bool {
        self.checks_failed == 0
    }

    pub fn observed_classes(&self) -> usize {
        self.frequencies.iter().filter(|f| f.observed > 0).count()
    }

    /// `Err(Verification)` naming the first failing prime and check.
    pub fn ensure_passed(&self) -> Result<()> {
        for row in &self.rows {
            if let Some(c) = row.failures().next() {
                return Err(Error::Verification(format!(
                    "p={}: check {} computed {} expected {}",
                    row.p, c.id, c.computed, c.expected
                )));
            }
        }
        Ok(())
    }

    pub fn as_verify_report(&self) -> VerifyReport {
        let mut rep = VerifyReport::new(
            "cor_int2",
            format!("root-count congruence and class checks for admissible p <= {}", self.pmax),
        );
        rep.check_eq("sweep.failed_checks", format!("p<={}", self.pmax), self.checks_failed, 0);
        for row in &self.rows {
            for c in row.failures() {
                rep.lines.push(c.clone());
            }
        }
        rep.info("sweep.primes", format!("p<={}", self.pmax), self.rows.len());
        rep.info("sweep.checks", "pass/skip", format!("{}/{}", self.checks_passed, self.checks_skipped));
        for s in &self.skipped {
            rep.info("sweep.skipped", format!("p={}", s.p), &s.reason);
        }
        for f in &self.frequencies {
            rep.info(
                "chebotarev.frequency",
                f.class,
                format!("{} observed, {:.4} vs {:.4}", f.observed, f.fraction, f.expected),
            );
        }
        rep
    }
}

/// Reports for every unramified prime up to `pmax`, without failing on checks.
/// Any bound is accepted; below 2 the table is empty.
pub fn sweep(ctx: &FrobeniusContext, pmax: u64) -> Result<RangeSummary> {
    let mut rows = Vec::new();
    for p in primes_up_to(pmax) {
        if RAMIFIED.contains(&p) {
            continue;
        }
        rows.push(frobenius_report(ctx, p)?);
    }
    Ok(summarize(pmax, rows))
}

fn summarize(pmax: u64, mut rows: Vec<FrobeniusReport>) -> RangeSummary {
    rows.sort_by_key(|r| r.p);
    let mut counts: BTreeMap<S5Class, usize> = BTreeMap::new();
    let (mut passed, mut failed, mut skipped_checks) = (0, 0, 0);
    let mut skipped = Vec::new();
    for r in &rows {
        *counts.entry(r.class).or_insert(0) += 1;
        let mut reasons = BTreeSet::new();
        for c in &r.checks {
            match c.verdict {
                Verdict::Pass => passed += 1,
                Verdict::Fail => failed += 1,
                Verdict::Skip => {
                    skipped_checks += 1;
                    reasons.insert(c.computed.clone());
                }
                Verdict::Info => {}
            }
        }
        if !reasons.is_empty() {
            skipped.push(SkippedPrime { p: r.p, reason: reasons.into_iter().collect::<Vec<_>>().join("; ") });
        }
    }
    let total = rows.len().max(1) as f64;
    let frequencies = S5Class::ALL
        .iter()
        .map(|&class| {
            let observed = counts.get(&class).copied().unwrap_or(0);
            ClassFrequency { class, observed, fraction: observed as f64 / total, expected: class.size() as f64 / 120.0 }
        })
        .collect();
    RangeSummary {
        pmax,
        rows,
        frequencies,
        skipped,
        checks_passed: passed,
        checks_failed: failed,
        checks_skipped: skipped_checks,
    }
}

/// As [`sweep`], but any failed check is an error naming the prime and check.
pub fn verify_range(ctx: &FrobeniusContext, pmax: u64) -> Result<RangeSummary> {
    if pmax < MIN_SWEEP_BOUND {
        return Err(Error::Domain(format!("pmax must be at least {MIN_SWEEP_BOUND}, got {pmax}")));
    }
    let summary = sweep(ctx, pmax)?;
    summary.ensure_passed()?;
    Ok(summary)
}

/// The invariant attached to each `S5` class by the root-count formula:
/// trace/determinant pairs of its lifts, the `sgn` value, and the set of
/// `det·sgn` values on its lifts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ClassTriple {
    pub pairs: BTreeSet<TrDet>,
    pub sgn: i8,
    pub det_sgn: BTreeSet<i8>,
}

pub fn class_triples(g: &LiftedGroup) -> Result<BTreeMap<S5Class, ClassTriple>> {
    let mut out: BTreeMap<S5Class, ClassTriple> = BTreeMap::new();
    for m in g.elements() {
        let class = s5_class_of(m)?;
        let sgn = if projective_data(m)?.in_psl { 1 } else { -1 };
        let ds = QuadraticCharacter::DetSgn.eval(m)?;
        let e =
            out.entry(class).or_insert_with(|| ClassTriple { pairs: BTreeSet::new(), sgn, det_sgn: BTreeSet::new() });
        if e.sgn != sgn {
            return Err(Error::Internal(format!("sgn not constant on lifts of {class}")));
        }
        e.pairs.insert((m.trace(), m.det()));
        e.det_sgn.insert(ds);
    }
    Ok(out)
}

/// The triple separates the seven classes except the identity and the
/// 5-cycles, which must collide.
pub fn triple_injectivity_check(g: &LiftedGroup) -> Result<VerifyReport> {
    let mut rep = VerifyReport::new("disc", "classes are separated by (trace/det pairs, sgn, det*sgn)");
    let triples = class_triples(g)?;
    rep.check_eq("triple.classes", "S5", triples.len(), 7);
    let allowed = |a: S5Class, b: S5Class| {
        matches!((a, b), (S5Class::Identity, S5Class::FiveCycle) | (S5Class::FiveCycle, S5Class::Identity))
    };
    for (i, a) in S5Class::ALL.iter().enumerate() {
        for b in &S5Class::ALL[i + 1..] {
            let same = triples.get(a) == triples.get(b);
            let subject = format!("{} vs {}", a.label(), b.label());
            if allowed(*a, *b) {
                rep.check("triple.expected_collision", subject, same, true, same);
            } else {
                rep.check("triple.separated", subject, !same, true, !same);
            }
        }
    }
    Ok(rep)
}

/// Bound for the sweep behind the quadratic-character identifications.
pub const CHARACTER_ID_PMAX: u64 = 10_000;

/// `sgn`, `det` and `det·sgn` against `(2869/p)`, `(-19/p)`, `(-151/p)` for
/// every unramified `p < bound`, aggregated from the per-prime reports.
pub fn verify_character_identifications(ctx: &FrobeniusContext, bound: u64) -> Result<VerifyReport> {
    let summary = sweep(ctx, bound.saturating_sub(1))?;
    let mut rep =
        VerifyReport::new("table2_characters", "quadratic characters of the lifted group as Kronecker symbols");
    let mut counts: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
    for row in &summary.rows {
        for c in row.checks.iter().filter(|c| c.id.starts_with("ii.")) {
            let e = counts.entry(match c.id.as_str() {
                "ii.sgn" => "sgn = (2869/p)",
                "ii.det" => "det = (-19/p)",
                _ => "det*sgn = (-151/p)",
            });
            let e = e.or_insert((0, 0));
            match c.verdict {
                Verdict::Pass => e.0 += 1,
                Verdict::Skip => e.1 += 1,
                _ => rep.lines.push(c.clone()),
            }
        }
    }
    for (name, (pass, skip)) in counts {
        rep.check(
            "characters.identified",
            name,
            format!("{pass} primes, {skip} skipped"),
            format!("p < {bound}"),
            pass > 0,
        );
    }
    Ok(rep)
}
