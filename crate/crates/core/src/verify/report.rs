//! Machine-readable results for the verification suites.

use serde::Serialize;

/// Suite outcome. Scans of open questions never report `Pass`; they are
/// either confirmed within the given ranges or carry counterexamples.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SuiteStatus {
    Pass,
    Fail,
    Counterexample,
    ConfirmedInRange,
}

/// One checked claim.
#[derive(Clone, Debug, Serialize)]
pub struct ClaimRecord {
    pub claim: String,
    pub ok: bool,
    /// Epistemic or range-limitation notes ("checked for d <= 200", ...).
    #[serde(skip_serializing_if = "String::is_empty")]
    pub note: String,
}

impl ClaimRecord {
    pub fn new(claim: impl Into<String>, ok: bool) -> Self {
        ClaimRecord {
            claim: claim.into(),
            ok,
            note: String::new(),
        }
    }

    pub fn with_note(claim: impl Into<String>, ok: bool, note: impl Into<String>) -> Self {
        ClaimRecord {
            claim: claim.into(),
            ok,
            note: note.into(),
        }
    }
}

/// A failing point, re-verified from a fresh row before being emitted.
#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub n: u64,
    pub d: u32,
    /// Exact `Delta_d(n)` in decimal.
    pub delta: String,
    pub context: String,
}

/// Deterministic, timestamp-free record of one suite run.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub scope: String,
    pub status: SuiteStatus,
    pub witnesses: Vec<Witness>,
    pub details: Vec<ClaimRecord>,
}

impl VerificationReport {
    pub(crate) fn assemble(
        suite: impl Into<String>,
        scope: impl Into<String>,
        exhaustive: bool,
        details: Vec<ClaimRecord>,
        witnesses: Vec<Witness>,
    ) -> Self {
        let ok = witnesses.is_empty() && details.iter().all(|c| c.ok);
        let status = match (exhaustive, ok) {
            (true, true) => SuiteStatus::Pass,
            (true, false) => SuiteStatus::Fail,
            (false, true) => SuiteStatus::ConfirmedInRange,
            (false, false) => SuiteStatus::Counterexample,
        };
        VerificationReport {
            suite: suite.into(),
            scope: scope.into(),
            status,
            witnesses,
            details,
        }
    }

    pub fn passed(&self) -> bool {
        matches!(
            self.status,
            SuiteStatus::Pass | SuiteStatus::ConfirmedInRange
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("## suite `{}`\n\n", self.suite));
        out.push_str(&format!("- scope: {}\n", self.scope));
        out.push_str(&format!("- status: **{:?}**\n\n", self.status));
        if !self.details.is_empty() {
            out.push_str("| claim | ok | note |\n|---|---|---|\n");
            for c in &self.details {
                out.push_str(&format!(
                    "| {} | {} | {} |\n",
                    c.claim,
                    if c.ok { "yes" } else { "NO" },
                    c.note
                ));
            }
            out.push('\n');
        }
        if !self.witnesses.is_empty() {
            out.push_str("| n | d | delta | context |\n|---|---|---|---|\n");
            for w in &self.witnesses {
                out.push_str(&format!(
                    "| {} | {} | {} | {} |\n",
                    w.n, w.d, w.delta, w.context
                ));
            }
            out.push('\n');
        }
        out
    }
}
