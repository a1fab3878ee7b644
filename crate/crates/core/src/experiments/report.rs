use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    DataOnly,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

/// One experiment outcome. `runtime_ms` stays 0 unless timings are requested,
/// so report files are reproducible byte for byte.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub experiment: String,
    pub claim: String,
    pub inputs: Value,
    pub computed: Value,
    pub verdict: Verdict,
    pub runtime_ms: u64,
}

impl Report {
    pub fn new(
        experiment: &str,
        claim: &str,
        inputs: Value,
        computed: Value,
        verdict: Verdict,
    ) -> Self {
        Report {
            experiment: experiment.into(),
            claim: claim.into(),
            inputs,
            computed,
            verdict,
            runtime_ms: 0,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// One human-readable line.
    pub fn summary(&self) -> String {
        let v = match self.verdict {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::DataOnly => "DATA",
        };
        format!("{v} {}: {}", self.experiment, self.claim)
    }
}
