use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

/// Outcome of checking one named statement on one graph.
///
/// A skipped verdict has `holds == true` and a reason; it is not evidence
/// either way. A violated verdict always carries a witness.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LawVerdict {
    pub law: String,
    pub graph: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<BTreeMap<String, Value>>,
}

impl LawVerdict {
    pub fn holds(law: impl Into<String>, graph: impl Into<String>) -> Self {
        LawVerdict {
            law: law.into(),
            graph: graph.into(),
            holds: true,
            skipped: None,
            witness: None,
        }
    }

    pub fn violated(law: impl Into<String>, graph: impl Into<String>, witness: BTreeMap<String, Value>) -> Self {
        LawVerdict {
            law: law.into(),
            graph: graph.into(),
            holds: false,
            skipped: None,
            witness: Some(witness),
        }
    }

    pub fn skipped(law: impl Into<String>, graph: impl Into<String>, reason: impl Into<String>) -> Self {
        LawVerdict {
            law: law.into(),
            graph: graph.into(),
            holds: true,
            skipped: Some(reason.into()),
            witness: None,
        }
    }

    pub fn with_witness(mut self, witness: BTreeMap<String, Value>) -> Self {
        self.witness = Some(witness);
        self
    }

    pub fn is_skipped(&self) -> bool {
        self.skipped.is_some()
    }

    pub fn is_violation(&self) -> bool {
        !self.holds
    }
}

/// Builds a witness map from `(key, value)` pairs.
#[macro_export]
macro_rules! witness {
    ($($k:expr => $v:expr),* $(,)?) => {{
        let mut m = ::std::collections::BTreeMap::<String, ::serde_json::Value>::new();
        $( m.insert(String::from($k), ::serde_json::json!($v)); )*
        m
    }};
}
