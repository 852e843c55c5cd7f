//! JSON description of a space: universe labels, either a generating
//! relation or an explicit base, and the order pairs.
//!
//! ```json
//! {
//!   "universe": ["a", "b", "c", "d"],
//!   "base": [["a"], ["a", "b"], ["c", "d"]],
//!   "order": [["a", "b"], ["b", "d"], ["a", "d"], ["a", "c"], ["c", "d"]],
//!   "options": { "auto_reflexive": true }
//! }
//! ```

use serde::{Deserialize, Serialize};

use crate::approx::Gotas;
use crate::error::{GotasError, Result};
use crate::order::PartialOrder;
use crate::topology::{BinaryRelation, Topology};
use crate::universe::{Subset, Universe};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDocument {
    pub universe: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relation: Option<Vec<(String, String)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<Vec<Vec<String>>>,
    #[serde(default)]
    pub order: Vec<(String, String)>,
    #[serde(default)]
    pub options: DocumentOptions,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DocumentOptions {
    /// Add the loops `(x, x)` to the order before validating it.
    #[serde(default = "default_true")]
    pub auto_reflexive: bool,
}

impl Default for DocumentOptions {
    fn default() -> Self {
        Self {
            auto_reflexive: true,
        }
    }
}

fn default_true() -> bool {
    true
}

/// How the document specifies the topology.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TopologySource {
    Relation,
    Base,
}

impl SpaceDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| GotasError::Document(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn source(&self) -> Result<TopologySource> {
        match (&self.relation, &self.base) {
            (Some(_), None) => Ok(TopologySource::Relation),
            (None, Some(_)) => Ok(TopologySource::Base),
            (Some(_), Some(_)) => Err(GotasError::Document(
                "`relation` and `base` are mutually exclusive".into(),
            )),
            (None, None) => Err(GotasError::Document(
                "one of `relation` or `base` is required".into(),
            )),
        }
    }

    /// Base-mode document describing `space`: the base is the full list of
    /// open sets, the order is listed pair by pair including loops.
    pub fn from_space(space: &Gotas) -> Self {
        let universe = space.topology().universe();
        let names = |s: &Subset| s.labels().into_iter().map(String::from).collect();
        Self {
            universe: universe.labels().to_vec(),
            relation: None,
            base: Some(space.topology().opens().iter().map(names).collect()),
            order: space
                .order()
                .pairs()
                .map(|(x, y)| (universe.label(x).to_string(), universe.label(y).to_string()))
                .collect(),
            options: DocumentOptions {
                auto_reflexive: false,
            },
        }
    }

    pub fn build(&self) -> Result<Gotas> {
        let universe = Universe::new(self.universe.iter().cloned())?;
        let topology = match self.source()? {
            TopologySource::Relation => {
                let pairs = self.relation.as_deref().unwrap_or_default();
                let relation = BinaryRelation::from_labels(
                    &universe,
                    pairs.iter().map(|(x, y)| (x.as_str(), y.as_str())),
                )?;
                Topology::from_relation(&relation)
            }
            TopologySource::Base => {
                let base = self
                    .base
                    .as_deref()
                    .unwrap_or_default()
                    .iter()
                    .map(|set| universe.subset(set))
                    .collect::<Result<Vec<Subset>>>()?;
                Topology::generate(&universe, &base)?
            }
        };
        let order = PartialOrder::from_labels(
            &universe,
            self.order.iter().map(|(x, y)| (x.as_str(), y.as_str())),
            self.options.auto_reflexive,
        )?;
        Gotas::new(topology, order)
    }
}
