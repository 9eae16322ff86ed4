use serde::{Deserialize, Serialize};

use crate::filtration::Index;

/// A fixed `(l, q, p)` slice of a sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LaneCoord {
    pub l: i32,
    pub q: i32,
    pub p: i32,
}

/// One violated relation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    /// Short name of the relation, followed by the specifics.
    pub relation: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub space: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lane: Option<LaneCoord>,
    /// Residue of the starting degree modulo the template period.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phase: Option<i32>,
    /// 1-based position in the lane chain.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub position: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub indices: Vec<Index>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub dims: Vec<u64>,
}

impl Finding {
    pub fn new(relation: impl Into<String>) -> Self {
        Finding {
            relation: relation.into(),
            space: None,
            lane: None,
            phase: None,
            position: None,
            indices: Vec::new(),
            dims: Vec::new(),
        }
    }

    pub fn in_space(mut self, space: impl ToString) -> Self {
        self.space = Some(space.to_string());
        self
    }

    pub fn at(mut self, index: Index, dim: u64) -> Self {
        self.indices.push(index);
        self.dims.push(dim);
        self
    }

    pub fn on_lane(mut self, lane: LaneCoord, phase: i32, position: usize) -> Self {
        self.lane = Some(lane);
        self.phase = Some(phase);
        self.position = Some(position);
        self
    }
}

/// Pass/fail outcome with every violated relation listed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub violations: Vec<Finding>,
}

impl VerificationReport {
    pub fn passed() -> Self {
        Self::from_findings(Vec::new())
    }

    pub fn from_findings(violations: Vec<Finding>) -> Self {
        VerificationReport {
            pass: violations.is_empty(),
            note: None,
            violations,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn push(&mut self, finding: Finding) {
        self.violations.push(finding);
        self.pass = false;
    }

    pub fn merge(&mut self, other: VerificationReport) {
        for f in other.violations {
            self.push(f);
        }
    }

    pub fn relations(&self) -> impl Iterator<Item = &str> {
        self.violations.iter().map(|f| f.relation.as_str())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
