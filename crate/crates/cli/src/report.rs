//! Machine-readable documents emitted with `--json`, and the certificate file schema.

use serde::{Deserialize, Serialize};

use extremal_core::{
    CmReport, DecompositionTree, Face, Field, Obstruction, StrategyUsed,
};

/// Value of the top-level `format` field of certificate files.
pub const CERTIFICATE_FORMAT: &str = "extremal-vd-certificate/1";

pub const REISNER_NOTE: &str =
    "only the listed fields were checked; torsion at primes other than 2 is not detected";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub facet_count: usize,
    pub vertex_count: usize,
    pub dimension: i32,
    pub f_vector: Vec<u64>,
    pub is_pure: bool,
    pub kk_bound: Option<u64>,
    pub slack: Option<i64>,
    pub is_extremal: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub format: String,
    pub strategy: StrategyUsed,
    pub facets: Vec<Face>,
    pub tree: DecompositionTree,
}

impl Certificate {
    pub fn new(strategy: StrategyUsed, facets: Vec<Face>, tree: DecompositionTree) -> Self {
        Certificate {
            format: CERTIFICATE_FORMAT.to_string(),
            strategy,
            facets,
            tree,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct VdDoc {
    pub decomposable: bool,
    pub strategy: StrategyUsed,
    pub certificate: Option<Certificate>,
    pub obstruction: Option<Obstruction>,
}

#[derive(Debug, Serialize)]
pub struct DeltaDoc {
    pub k: u64,
    pub n: u64,
    pub cascade: Vec<(u64, u64)>,
    pub delta: u64,
}

#[derive(Debug, Serialize)]
pub struct BettiDoc {
    pub field: Field,
    /// Starting at dimension -1.
    pub reduced_betti: Vec<usize>,
}

#[derive(Debug, Serialize)]
pub struct ReisnerDoc {
    pub fields_checked: Vec<Field>,
    pub is_cm: bool,
    pub note: &'static str,
    pub reports: Vec<CmReport>,
}

#[derive(Debug, Serialize)]
pub struct ShellDoc {
    pub shellable: bool,
    pub order: Option<Vec<Face>>,
}
