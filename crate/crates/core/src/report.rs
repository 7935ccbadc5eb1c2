//! Check lines and verification reports shared by every module.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// The check does not apply (e.g. a non-squarefree reduction).
    Skip,
    /// Recorded observation; never fails.
    Info,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Skip => "SKIP",
            Verdict::Info => "INFO",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckLine {
    pub id: String,
    /// Which object the check is about: a class label, a prime, a subgroup.
    pub subject: String,
    pub computed: String,
    pub expected: String,
    pub verdict: Verdict,
}

impl fmt::Display for CheckLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<4}  {:<28} {:<22} computed={}  expected={}",
            self.verdict, self.id, self.subject, self.computed, self.expected
        )
    }
}

/// An ordered list of check lines under a claim id.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub claim: String,
    pub description: String,
    pub lines: Vec<CheckLine>,
}

impl VerifyReport {
    pub fn new(claim: impl Into<String>, description: impl Into<String>) -> Self {
        VerifyReport { claim: claim.into(), description: description.into(), lines: Vec::new() }
    }

    fn push_line(
        &mut self,
        id: impl Into<String>,
        subject: impl fmt::Display,
        computed: impl fmt::Display,
        expected: impl fmt::Display,
        verdict: Verdict,
    ) {
        self.lines.push(CheckLine {
            id: id.into(),
            subject: subject.to_string(),
            computed: computed.to_string(),
            expected: expected.to_string(),
            verdict,
        });
    }

    /// Records a pass/fail line.
    pub fn check(
        &mut self,
        id: impl Into<String>,
        subject: impl fmt::Display,
        computed: impl fmt::Display,
        expected: impl fmt::Display,
        ok: bool,
    ) -> bool {
        let v = if ok { Verdict::Pass } else { Verdict::Fail };
        self.push_line(id, subject, computed, expected, v);
        ok
    }

    /// Records a pass/fail line comparing two displayable values for equality.
    pub fn check_eq<T: PartialEq + fmt::Display>(
        &mut self,
        id: impl Into<String>,
        subject: impl fmt::Display,
        computed: T,
        expected: T,
    ) -> bool {
        let ok = computed == expected;
        self.check(id, subject, computed, expected, ok)
    }

    pub fn skip(&mut self, id: impl Into<String>, subject: impl fmt::Display, reason: impl fmt::Display) {
        self.push_line(id, subject, reason, "-", Verdict::Skip);
    }

    pub fn info(&mut self, id: impl Into<String>, subject: impl fmt::Display, value: impl fmt::Display) {
        self.push_line(id, subject, value, "-", Verdict::Info);
    }

    pub fn extend(&mut self, other: VerifyReport) {
        self.lines.extend(other.lines);
    }

    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.verdict != Verdict::Fail)
    }

    pub fn count(&self, verdict: Verdict) -> usize {
        self.lines.iter().filter(|l| l.verdict == verdict).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckLine> {
        self.lines.iter().filter(|l| l.verdict == Verdict::Fail)
    }

    /// `Err(Verification)` naming the first failing line, if any.
    pub fn ensure_passed(&self) -> Result<()> {
        match self.failures().next() {
            None => Ok(()),
            Some(l) => Err(Error::Verification(format!(
                "{}: {} [{}] computed {} expected {}",
                self.claim, l.id, l.subject, l.computed, l.expected
            ))),
        }
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: {} ({} pass, {} fail, {} skip, {} info)",
            self.claim,
            if self.passed() { "PASS" } else { "FAIL" },
            self.count(Verdict::Pass),
            self.count(Verdict::Fail),
            self.count(Verdict::Skip),
            self.count(Verdict::Info)
        )
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "== {} :: {}", self.claim, self.description)?;
        for line in &self.lines {
            writeln!(f, "{line}")?;
        }
        writeln!(f, "{}", self.summary())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_aggregation() {
        let mut r = VerifyReport::new("demo", "a demo");
        assert!(r.check_eq("a", "x", 1, 1));
        r.info("b", "x", "note");
        r.skip("c", "p=11", "not squarefree");
        assert!(r.passed());
        assert!(r.ensure_passed().is_ok());
        assert!(!r.check_eq("d", "y", 2, 3));
        assert!(!r.passed());
        let err = r.ensure_passed().unwrap_err().to_string();
        assert!(err.contains("computed 2 expected 3"), "{err}");
        assert_eq!(r.count(Verdict::Pass), 1);
        assert!(r.to_string().contains("FAIL"));
    }
}
