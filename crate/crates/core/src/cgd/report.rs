#![allow(non_snake_case)]

//! JSON rendering of decomposition tables.
//!
//! Big integers are always decimal strings. Keys are emitted in sorted order,
//! the same order any `serde_json::Value` uses, so parsing and
//! re-serializing a document reproduces it byte for byte.

use serde::{Deserialize, Serialize};

use super::DecompositionTable;
use crate::spinset::{format_twice, SpinMultiset};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermReport {
    pub twice_J: u64,
    pub J: String,
    pub multiplicity: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub spins: String,
    /// `"full"`, `"symmetric"` or `"antisymmetric"`; absent for a plain
    /// decomposition.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub composition: Option<String>,
    pub twice_J0: Option<u64>,
    pub twice_Jm: Option<u64>,
    pub total_dimension: String,
    pub terms: Vec<TermReport>,
}

impl DecompositionReport {
    /// Report for the full decomposition of `spins`.
    pub fn full(spins: &SpinMultiset, table: &DecompositionTable) -> Self {
        DecompositionReport {
            spins: spins.to_string(),
            composition: None,
            twice_J0: Some(spins.twice_j0()),
            twice_Jm: Some(spins.twice_jmin()),
            total_dimension: spins.total_dimension().to_string(),
            terms: terms(table),
        }
    }

    /// Report for a symmetric or antisymmetric composition. The extremal
    /// spins and the dimension are those of the table itself; an empty
    /// table has no extremal spins.
    pub fn composed(spins: &SpinMultiset, composition: &str, table: &DecompositionTable) -> Self {
        DecompositionReport {
            spins: spins.to_string(),
            composition: Some(composition.to_string()),
            twice_J0: table.max_twice_j(),
            twice_Jm: table.min_twice_j(),
            total_dimension: table.dimension().to_string(),
            terms: terms(table),
        }
    }

    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        serde_json::to_string_pretty(&value).expect("value serializes")
    }
}

fn terms(table: &DecompositionTable) -> Vec<TermReport> {
    table
        .terms()
        .iter()
        .map(|t| TermReport {
            twice_J: t.twice_j,
            J: format_twice(t.twice_j),
            multiplicity: t.multiplicity.to_string(),
        })
        .collect()
}
