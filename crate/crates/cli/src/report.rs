use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// Agrees with a statement that has a proof.
    ProvedMatch,
    /// Agrees with a statement that is only conjectured.
    ConjectureMatch,
    Mismatch,
}

#[derive(Clone, Debug, Serialize)]
pub struct Case {
    pub claim: String,
    pub parameters: Value,
    pub status: Status,
    pub expected: Value,
    pub actual: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub cases: Vec<Case>,
}

impl VerificationReport {
    pub fn new(suite: &str) -> Self {
        Self {
            suite: suite.to_string(),
            cases: Vec::new(),
        }
    }

    /// Records a comparison; `proved` selects the status used on agreement.
    pub fn check(
        &mut self,
        claim: &str,
        parameters: Value,
        proved: bool,
        expected: impl Serialize,
        actual: impl Serialize,
    ) -> bool {
        let expected = serde_json::to_value(expected).expect("serializable");
        let actual = serde_json::to_value(actual).expect("serializable");
        let status = match (expected == actual, proved) {
            (false, _) => Status::Mismatch,
            (true, true) => Status::ProvedMatch,
            (true, false) => Status::ConjectureMatch,
        };
        self.cases.push(Case {
            claim: claim.to_string(),
            parameters,
            status,
            expected,
            actual,
        });
        status != Status::Mismatch
    }

    pub fn has_mismatch(&self) -> bool {
        self.cases.iter().any(|c| c.status == Status::Mismatch)
    }

    pub fn count(&self, status: Status) -> usize {
        self.cases.iter().filter(|c| c.status == status).count()
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.cases.extend(other.cases);
    }
}
