//! Verification reports: each claim is recomputed and compared exactly
//! against its stated or independently derived value.

mod commands;
mod table1;

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::groups::{
    abelianization, todd_coxeter, AbelianInvariants, Outcome, Presentation,
};

pub use commands::{
    cmd_classify, cmd_conjecture, cmd_curve, cmd_discriminant, cmd_euler, cmd_order,
    known_order, CommandError, INCIDENCE_SAMPLES,
};
pub use table1::{cmd_table1, table1_rows, ConventionChoice, Expected, Table1Row};

/// Phrases of the source text that each claim is attached to.
pub mod anchors {
    pub const BRAID_TABLE: &str = "Table 1.";
    pub const FINITE_ORDER: &str = "finite group of order";
    pub const CENTRAL_EXTENSION: &str = "finite central extension of the triangle group";
    pub const HYPERSURFACE_DEGREE: &str = "the discriminant hypersurface";
    pub const PARAMETRIZATION: &str = "one has the parametrizations";
    pub const EULER_NUMBER: &str = "euler number";
    pub const RIEMANN_HURWITZ: &str = "computed by Riemann-Hurwitz formula";
    pub const COVERING_DEGREE: &str = "of degree $n!b^{n^2-n}$";
    pub const CURVE_CENSUS: &str = "an irreducible curve of degree";
    pub const DOUBLE_POINTS: &str = "has only double points";
    pub const UNIFORMIZATION: &str = "admits a finite uniformization";
    pub const CONJECTURE: &str = "We believe that the group";
    pub const PRESENTATION: &str = "orbifold relations";
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Match,
    Mismatch,
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Match => "MATCH",
            Status::Mismatch => "MISMATCH",
            Status::Inconclusive => "INCONCLUSIVE",
        };
        write!(f, "{s}")
    }
}

/// Where the expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// printed in the source as a number
    Stated,
    /// a closed formula from the source, evaluated here
    Formula,
    /// an independent computation
    Oracle,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Provenance::Stated => "stated",
            Provenance::Formula => "formula",
            Provenance::Oracle => "oracle",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub claim: String,
    pub anchor: String,
    pub computed: String,
    pub expected: String,
    pub provenance: Provenance,
    pub status: Status,
    pub millis: u64,
    pub seed: u64,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, String>,
}

impl Report {
    /// `MATCH` iff the two strings agree exactly.
    pub fn compare(
        claim: impl Into<String>,
        anchor: &str,
        computed: impl Into<String>,
        expected: impl Into<String>,
        provenance: Provenance,
    ) -> Self {
        let (computed, expected) = (computed.into(), expected.into());
        let status = if computed == expected {
            Status::Match
        } else {
            Status::Mismatch
        };
        Report {
            claim: claim.into(),
            anchor: anchor.to_string(),
            computed,
            expected,
            provenance,
            status,
            millis: 0,
            seed: 0,
            details: BTreeMap::new(),
        }
    }

    pub fn inconclusive(mut self) -> Self {
        self.status = Status::Inconclusive;
        self
    }

    pub fn with_detail(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.details.insert(key.to_string(), value.to_string());
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_millis(mut self, millis: u64) -> Self {
        self.millis = millis;
        self
    }

    /// One human-readable line.
    pub fn line(&self) -> String {
        let mut s = format!(
            "{:<12} {}: computed {}, expected {} ({}; \"{}\") {} ms",
            self.status.to_string(),
            self.claim,
            self.computed,
            self.expected,
            self.provenance,
            self.anchor,
            self.millis
        );
        for (k, v) in &self.details {
            s.push_str(&format!("\n{:<12}   {k}: {v}", ""));
        }
        s
    }
}

/// Runs `f` and stamps the elapsed wall time on every report it returns.
pub fn timed<F: FnOnce() -> Vec<Report>>(f: F) -> Vec<Report> {
    let start = Instant::now();
    let reports = f();
    let millis = start.elapsed().as_millis() as u64;
    reports.into_iter().map(|r| r.with_millis(millis)).collect()
}

/// Deterministic output order.
pub fn sort_reports(reports: &mut [Report]) {
    reports.sort_by(|a, b| a.claim.cmp(&b.claim));
}

pub fn any_mismatch(reports: &[Report]) -> bool {
    reports.iter().any(|r| r.status == Status::Mismatch)
}

/// Enumeration result plus the checks made on it.
#[derive(Clone, Debug)]
pub struct GroupEvidence {
    pub outcome: Outcome,
    pub abelian: AbelianInvariants,
    /// closed table is a permutation action satisfying every relator
    pub table_verified: bool,
    pub cosets_defined: u64,
}

impl GroupEvidence {
    pub fn gather(p: &Presentation, max_cosets: usize) -> Self {
        let e = todd_coxeter(p, max_cosets);
        let table_verified = e
            .table
            .as_ref()
            .is_some_and(|t| t.is_permutation_action() && t.satisfies(p));
        GroupEvidence {
            outcome: e.outcome,
            abelian: abelianization(p),
            table_verified,
            cosets_defined: e.stats.defined,
        }
    }

    /// The order, `infinite` when the abelianization has free rank, and
    /// `EXCEEDED` when neither is known.
    pub fn computed(&self) -> String {
        match self.outcome {
            Outcome::Closed(k) => k.to_string(),
            Outcome::Exceeded if self.abelian.certifies_infinite() => "infinite".to_string(),
            Outcome::Exceeded => "EXCEEDED".to_string(),
        }
    }

    /// Abelianization order divides the group order.
    pub fn abelian_divides(&self) -> Option<bool> {
        match (self.outcome, self.abelian.order()) {
            (Outcome::Closed(k), Some(a)) => Some(a != 0 && k % a == 0),
            (Outcome::Closed(_), None) => Some(false),
            _ => None,
        }
    }

    /// Compares against an expected value; non-closure is never read as
    /// infiniteness.
    pub fn report(&self, claim: String, anchor: &str, expected: &Expected, provenance: Provenance) -> Report {
        let computed = self.computed();
        let mut r = Report::compare(claim, anchor, computed.clone(), expected.to_string(), provenance)
            .with_detail("abelianization", &self.abelian)
            .with_detail("cosets defined", self.cosets_defined);
        if matches!(self.outcome, Outcome::Closed(_)) && !self.table_verified {
            r.status = Status::Mismatch;
            r = r.with_detail("table check", "FAILED");
        }
        if self.abelian_divides() == Some(false) {
            r.status = Status::Mismatch;
            r = r.with_detail("abelianization check", "order does not divide");
        }
        if computed == "EXCEEDED" {
            r = r.with_detail("evidence", "INCONCLUSIVE-FINITE-ABELIANIZATION");
        }
        if computed == "EXCEEDED" || matches!(expected, Expected::Unknown) {
            r = r.inconclusive();
        }
        r
    }
}

#[cfg(test)]
mod tests;
