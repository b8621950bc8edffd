//! JSON output shapes, one per subcommand. Field order is declaration order,
//! so documents are schema-stable; big integers travel as decimal strings.

use serde::Serialize;

#[derive(Serialize)]
pub struct CfOut {
    pub input: String,
    /// `rational`, `surd-periodic`, or `surd-prefix`.
    pub kind: String,
    pub cf: String,
    pub quotients: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tail: Option<Vec<String>>,
    pub truncated: bool,
}

#[derive(Serialize)]
pub struct SequenceOut {
    pub slope: String,
    pub word: String,
}

#[derive(Serialize)]
pub struct SlopeOut {
    pub word: String,
    pub slope: String,
    pub trace: Vec<String>,
}

#[derive(Serialize)]
pub struct ValidateOut {
    pub word: String,
    pub verdict: String,
    pub trace: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rule: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

#[derive(Serialize)]
pub struct ComplexityRow {
    pub n: usize,
    pub p: usize,
}

#[derive(Serialize)]
pub struct ComplexityOut {
    pub word: String,
    pub values: Vec<ComplexityRow>,
}

#[derive(Serialize)]
pub struct BalanceOut {
    pub balanced: bool,
    pub n_max: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub heavy: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub light: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Serialize)]
pub struct ClassifyOut {
    pub class: String,
    pub detail: String,
    pub caveat: String,
}

#[derive(Serialize)]
pub struct SturmianOut {
    pub slope: String,
    pub intercept: String,
    pub n: usize,
    pub word: String,
}

#[derive(Serialize)]
pub struct BounceRow {
    pub edge: String,
    pub x: String,
    pub y: String,
    pub param: String,
}

#[derive(Serialize)]
pub struct SimulateOut {
    pub slope: String,
    pub start: String,
    pub bounces: Vec<BounceRow>,
    pub period: Option<usize>,
}

#[derive(Serialize)]
pub struct DecomposeOut {
    pub matrix: String,
    pub word: String,
}

#[derive(Serialize)]
pub struct ApplyOut {
    pub matrix: String,
    pub input: String,
    pub output: String,
}

#[derive(Serialize)]
pub struct RenderOut {
    pub path: String,
    pub bytes: usize,
}
