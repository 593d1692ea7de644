//! Versioned JSON records. Every record carries a `schema` string; readers
//! should reject versions they do not know.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finders::HomogeneityWitness;
use crate::graph::{Graph, Side, VertexSet};
use crate::graph6::{decode_graph6, to_graph6_string};

pub const WITNESS_SCHEMA: &str = "qramsey.witness/1";
pub const LOWER_BOUND_SCHEMA: &str = "qramsey.lower-bound/1";
pub const EXACT_SCHEMA: &str = "qramsey.exact/1";

/// A positive result as written to disk: the graph travels with the set so
/// the record can be rechecked on its own.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub schema: String,
    pub graph6: String,
    pub set: VertexSet,
    pub side: Side,
    pub min_degree: usize,
    pub threshold: f64,
    /// Finder that produced the set (`peel`, `skew`, `thin`, `fixed`, `variable`).
    pub mode: String,
    pub params: BTreeMap<String, serde_json::Value>,
    pub seed: Option<u64>,
}

impl WitnessRecord {
    pub fn new(
        g: &Graph,
        witness: &HomogeneityWitness,
        mode: &str,
        params: BTreeMap<String, serde_json::Value>,
    ) -> Result<Self> {
        Ok(WitnessRecord {
            schema: WITNESS_SCHEMA.to_string(),
            graph6: to_graph6_string(g)?,
            set: witness.set.clone(),
            side: witness.side,
            min_degree: witness.min_degree,
            threshold: witness.threshold,
            mode: mode.to_string(),
            params,
            seed: witness.seed,
        })
    }

    pub fn witness(&self) -> HomogeneityWitness {
        HomogeneityWitness {
            set: self.set.clone(),
            side: self.side,
            min_degree: self.min_degree,
            threshold: self.threshold,
            seed: self.seed,
        }
    }

    /// Decodes the embedded graph and recomputes the minimum degree.
    pub fn recheck(&self) -> Result<bool> {
        if self.schema != WITNESS_SCHEMA {
            return Err(Error::Domain(format!("unknown witness schema `{}`", self.schema)));
        }
        let g = decode_graph6(self.graph6.as_bytes())?;
        self.witness().verify(&g)
    }
}

/// Wraps any record with a schema tag for output.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Versioned<T> {
    pub schema: String,
    #[serde(flatten)]
    pub body: T,
}

impl<T> Versioned<T> {
    pub fn new(schema: &str, body: T) -> Self {
        Versioned {
            schema: schema.to_string(),
            body,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witness_record_rechecks_and_detects_tampering() {
        let g = Graph::cycle(6);
        let w = HomogeneityWitness::certify(&g, VertexSet::full(6), Side::Graph, 2.0, Some(3)).unwrap();
        let rec = WitnessRecord::new(&g, &w, "peel", BTreeMap::new()).unwrap();
        let json = serde_json::to_string(&rec).unwrap();
        let back: WitnessRecord = serde_json::from_str(&json).unwrap();
        assert!(back.recheck().unwrap());
        let mut forged = back.clone();
        forged.side = Side::Complement;
        assert!(!forged.recheck().unwrap());
        forged.schema = "other/9".into();
        assert!(forged.recheck().is_err());
    }

    #[test]
    fn versioned_flattens() {
        let v = Versioned::new(EXACT_SCHEMA, BTreeMap::from([("a".to_string(), 1)]));
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"{"schema":"qramsey.exact/1","a":1}"#);
    }
}
