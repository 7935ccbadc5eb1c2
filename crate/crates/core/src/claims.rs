//! Named verification targets: each bundles the reports behind one claim.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::asai::{verify_cor_asai, verify_hilbert_products, verify_n4_identity, verify_prop_asai, AsaiSetup};
use crate::config::Config;
use crate::error::{Error, Result};
use crate::frobenius::{
    triple_injectivity_check, verify_character_identifications, FrobeniusContext, CHARACTER_ID_PMAX,
};
use crate::groups::{verify_inertia_matrices, verify_structure, verify_table1, verify_table2};
use crate::modforms::verify_n3;
use crate::polyfactor::{verify_discriminants, DISC_NMAX, SQUAREFREE_BOUND, SQUAREFREE_NMAX};
use crate::report::{Verdict, VerifyReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Target {
    Table1,
    Table2,
    Inertia,
    PropAsai,
    CorAsai,
    N3,
    N4,
    Disc,
    CorInt2,
    All,
}

impl Target {
    /// Every individual target, in the order `all` runs them.
    pub const EACH: [Target; 9] = [
        Target::Table1,
        Target::Table2,
        Target::Inertia,
        Target::PropAsai,
        Target::CorAsai,
        Target::N3,
        Target::N4,
        Target::Disc,
        Target::CorInt2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Target::Table1 => "table1",
            Target::Table2 => "table2",
            Target::Inertia => "inertia",
            Target::PropAsai => "prop-asai",
            Target::CorAsai => "cor-asai",
            Target::N3 => "n3",
            Target::N4 => "n4",
            Target::Disc => "disc",
            Target::CorInt2 => "cor-int2",
            Target::All => "all",
        }
    }

    pub fn from_name(s: &str) -> Option<Target> {
        Target::EACH.into_iter().chain([Target::All]).find(|t| t.name() == s)
    }

    /// What the target establishes.
    pub fn claim(self) -> &'static str {
        match self {
            Target::Table1 => "trace/det pairs, standard traces and signs of lifts of the S5 classes",
            Target::Table2 => "index-2 subgroups of the lifted group and their quadratic characters",
            Target::Inertia => "inertia generators at 19 and 151 and the conductor 19*151",
            Target::PropAsai => "twisted Asai transfer of each 2-dimensional irreducible is the standard character",
            Target::CorAsai => "lift-independent formulas for the standard character and the Hilbert products",
            Target::N3 => "eta product, theta series and Delta mod 23 for X^3 - X - 1",
            Target::N4 => "square of a faithful 2-dimensional character of GL2(F3)",
            Target::Disc => "discriminants of X^n - X - 1",
            Target::CorInt2 => "root-count congruence mod 5, class separation and Hilbert-product consistency",
            Target::All => "every claim above",
        }
    }

    pub fn needs_polynomials(self) -> bool {
        matches!(self, Target::Table2 | Target::CorInt2 | Target::All)
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The reports produced for one target.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TargetRun {
    pub target: Target,
    pub claim: String,
    pub reports: Vec<VerifyReport>,
}

impl TargetRun {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(|r| r.passed())
    }

    pub fn count(&self, v: Verdict) -> usize {
        self.reports.iter().map(|r| r.count(v)).sum()
    }

    pub fn ensure_passed(&self) -> Result<()> {
        for r in &self.reports {
            r.ensure_passed()?;
        }
        Ok(())
    }
}

impl fmt::Display for TargetRun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "#### {} :: {}", self.target, self.claim)?;
        for r in &self.reports {
            writeln!(f, "{r}")?;
        }
        write!(
            f,
            "#### {} {}  pass={} fail={} skip={} info={}",
            self.target,
            if self.passed() { "PASS" } else { "FAIL" },
            self.count(Verdict::Pass),
            self.count(Verdict::Fail),
            self.count(Verdict::Skip),
            self.count(Verdict::Info)
        )
    }
}

/// Runs one target; `All` expands to every individual target. The Frobenius
/// context is only consulted by targets that need the shipped polynomials.
pub fn run_target(target: Target, config: &Config, ctx: Option<&FrobeniusContext>) -> Result<Vec<TargetRun>> {
    if target == Target::All {
        let mut out = Vec::new();
        for t in Target::EACH {
            out.extend(run_target(t, config, ctx)?);
        }
        return Ok(out);
    }
    let need_ctx = || ctx.ok_or_else(|| Error::Domain(format!("target {target} needs the polynomial data")));
    let reports = match target {
        Target::Table1 => vec![verify_table1(&crate::groups::lifted_group(2)?)?],
        Target::Table2 => {
            let ctx = need_ctx()?;
            vec![
                verify_table2(&ctx.model.group)?,
                verify_structure(&ctx.model.group)?,
                verify_character_identifications(ctx, CHARACTER_ID_PMAX)?,
            ]
        }
        Target::Inertia => vec![verify_inertia_matrices(&crate::groups::lifted_group(2)?)?],
        Target::PropAsai => {
            let mut v = Vec::new();
            for r in [1, 2] {
                v.push(verify_prop_asai(&AsaiSetup::new(r, config.seed, config.tol)?)?);
            }
            v
        }
        Target::CorAsai => {
            let mut v = Vec::new();
            for r in [1, 2] {
                let setup = AsaiSetup::new(r, config.seed, config.tol)?;
                v.push(verify_cor_asai(&setup)?);
                v.push(verify_hilbert_products(&setup)?);
            }
            v
        }
        Target::N3 => vec![verify_n3(config.truncation, config.truncation as u64)?],
        Target::N4 => vec![verify_n4_identity(config.seed, config.tol)?],
        Target::Disc => vec![verify_discriminants(DISC_NMAX, SQUAREFREE_NMAX, SQUAREFREE_BOUND)?],
        Target::CorInt2 => {
            let ctx = need_ctx()?;
            let summary = crate::frobenius::sweep(ctx, config.pmax)?;
            let mut calibration =
                VerifyReport::new("calibration", "which coset action the degree-48 polynomial realizes");
            for e in &ctx.calibration.evidence {
                calibration.info(
                    "calibration.evidence",
                    format!("{:?}", e.model),
                    format!("{}/{}", e.agreeing, e.total),
                );
            }
            calibration.info("calibration.chosen", "h", format!("{:?}", ctx.calibration.chosen));
            vec![calibration, summary.as_verify_report(), triple_injectivity_check(&ctx.model.group)?]
        }
        Target::All => unreachable!(),
    };
    Ok(vec![TargetRun { target, claim: target.claim().to_string(), reports }])
}

/// Header line, every target's report, and a final verdict line.
pub fn render_text(config: &Config, runs: &[TargetRun]) -> String {
    let mut out = format!("# quintic verify  {}\n", config.header());
    for r in runs {
        out.push_str(&r.to_string());
        out.push('\n');
    }
    let ok = runs.iter().all(|r| r.passed());
    out.push_str(&format!("# overall {}\n", if ok { "PASS" } else { "FAIL" }));
    out
}
