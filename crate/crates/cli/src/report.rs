//! Serializable result records. The text printer and the JSON emitter
//! both read from these, so the two modes cannot disagree on a number.

use serde::Serialize;

/// The single JSON document a successful run prints.
#[derive(Serialize)]
#[serde(tag = "command", rename_all = "lowercase")]
pub enum Report {
    Resolve(ResolveReport),
    Zeta(ZetaReport),
    Hilb(HilbReport),
    Qseries(QseriesReport),
    Verify(VerifyReport),
}

#[derive(Serialize)]
pub struct DivisorReport {
    pub id: u32,
    #[serde(rename = "N")]
    pub n: u64,
    pub nu: u64,
    pub m: u64,
    pub strict: u64,
    pub neighbors: Vec<u32>,
    pub class_open: String,
    pub class_strict: String,
}

#[derive(Serialize)]
pub struct BlowupReport {
    pub id: u32,
    /// Divisors the blown-up point lay on (empty for the first blowup).
    pub centers: Vec<u32>,
    /// Multiplicity of the strict transform at that point.
    pub multiplicity: u32,
}

#[derive(Serialize)]
pub struct ResolveReport {
    pub curve: String,
    pub ambient_dim: u32,
    pub origin_mult: Option<u64>,
    pub smooth_branch: bool,
    pub threshold: Option<u64>,
    pub divisors: Vec<DivisorReport>,
    pub edges: Vec<(u32, u32)>,
    pub blowups: Vec<BlowupReport>,
}

#[derive(Serialize)]
pub struct ZetaReport {
    pub input: String,
    pub zeta: String,
}

#[derive(Serialize)]
pub struct ClassEntry {
    pub k: u64,
    pub value: String,
}

#[derive(Serialize)]
pub struct HilbReport {
    pub input: String,
    pub max_k: u64,
    pub specialize: String,
    pub threshold: Option<u64>,
    pub classes: Vec<ClassEntry>,
}

#[derive(Serialize)]
pub struct QseriesReport {
    pub input: String,
    pub leading_term: String,
    pub closed_form: String,
    pub order: u32,
    pub expansion: Vec<ClassEntry>,
}

/// Counts that can exceed 2^53 are reported as decimal strings.
#[derive(Serialize)]
pub struct JetRow {
    pub prime: u64,
    pub k: u64,
    pub raw_count: String,
    pub predicted: String,
    pub matches: bool,
}

#[derive(Serialize)]
pub struct VerifyReport {
    pub curve: String,
    pub primes: Vec<u64>,
    pub max_k: u64,
    pub jobs: usize,
    pub budget: String,
    pub reports: Vec<JetRow>,
    pub all_match: bool,
}

#[derive(Serialize)]
pub struct ErrorReport {
    pub error: ErrorBody,
}

#[derive(Serialize)]
pub struct ErrorBody {
    pub code: &'static str,
    pub message: String,
}
