//! One JSON object per instance, one instance per line.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use iquandle::winker::Presentation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamsRecord {
    pub p: i64,
    pub q: i64,
    pub e: i64,
    pub w: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BudgetStatus {
    Ok,
    Exceeded,
}

/// Outcome of each check that ran; absent checks are omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchFlags {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub components: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub model_isomorphism: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rewritten_isomorphism: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub commuting_identity: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub displacements: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub geodesics: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub aut_bound: Option<bool>,
}

impl MatchFlags {
    fn all(&self) -> [Option<bool>; 8] {
        [
            self.order,
            self.components,
            self.model_isomorphism,
            self.rewritten_isomorphism,
            self.commuting_identity,
            self.displacements,
            self.geodesics,
            self.aut_bound,
        ]
    }

    /// True if some check ran and failed.
    pub fn any_mismatch(&self) -> bool {
        self.all().contains(&Some(false))
    }

    pub fn is_empty(&self) -> bool {
        self.all().iter().all(Option::is_none)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<ParamsRecord>,
    /// SHA-256 of the presentation's canonical text.
    pub presentation_hash: String,
    pub budget: BudgetStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub component_sizes: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub predicted_order: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub predicted_component_sizes: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "MatchFlags::is_empty")]
    pub matches: MatchFlags,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_us: Option<u64>,
}

impl ResultRecord {
    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("records always serialize")
    }

    pub fn from_line(line: &str) -> serde_json::Result<Self> {
        serde_json::from_str(line)
    }
}

pub fn presentation_hash(p: &Presentation) -> String {
    hex::encode(Sha256::digest(p.to_text().as_bytes()))
}
