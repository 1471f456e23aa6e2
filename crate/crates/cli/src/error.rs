use serde_json::{json, Value};
use splitwidth_core::closure_prover::ClosureError;
use splitwidth_core::cutlib::CutError;
use splitwidth_core::exact_kernel::KernelError;
use splitwidth_core::lattice_free::BodyError;
use splitwidth_core::polyhedron::PolyError;
use splitwidth_core::relaxation::RelaxError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Semantic(String),
    #[error("{0}")]
    Budget(String),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 64,
            CliError::Semantic(_) => 65,
            CliError::Budget(_) => 69,
            CliError::Internal(_) => 1,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Parse(_) => "parse",
            CliError::Semantic(_) => "semantic",
            CliError::Budget(_) => "budget",
            CliError::Internal(_) => "internal",
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "v": 1, "error": { "kind": self.kind(), "message": self.to_string(), "exit_code": self.exit_code() } })
    }
}

impl From<KernelError> for CliError {
    fn from(e: KernelError) -> Self {
        CliError::Semantic(e.to_string())
    }
}

impl From<PolyError> for CliError {
    fn from(e: PolyError) -> Self {
        match e {
            PolyError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            _ => CliError::Semantic(e.to_string()),
        }
    }
}

impl From<BodyError> for CliError {
    fn from(e: BodyError) -> Self {
        match e {
            BodyError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            _ => CliError::Semantic(e.to_string()),
        }
    }
}

impl From<CutError> for CliError {
    fn from(e: CutError) -> Self {
        match e {
            CutError::CutOffMismatch { expected, found } => {
                let one = |v: Vec<usize>| v.into_iter().map(|i| i + 1).collect::<Vec<_>>();
                CliError::Semantic(format!("cut-off vertex sets differ: {:?} vs {:?}", one(expected), one(found)))
            }
            CutError::NotNonNegative(j) => CliError::Semantic(format!("inequality is negative on ray {}", j + 1)),
            CutError::IndexOutOfRange(i) => CliError::Semantic(format!("index {} out of range", i + 1)),
            _ => CliError::Semantic(e.to_string()),
        }
    }
}

impl From<RelaxError> for CliError {
    fn from(e: RelaxError) -> Self {
        match e {
            RelaxError::Body(b) => b.into(),
            _ => CliError::Semantic(e.to_string()),
        }
    }
}

impl From<ClosureError> for CliError {
    fn from(e: ClosureError) -> Self {
        match e {
            ClosureError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            ClosureError::Body(b) => b.into(),
            ClosureError::Poly(p) => p.into(),
            ClosureError::Relax(r) => r.into(),
            _ => CliError::Semantic(e.to_string()),
        }
    }
}
