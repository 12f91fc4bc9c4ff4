use thiserror::Error;

/// Errors raised by field arithmetic, form construction, the oracles and the
/// linkage machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operation requires a nonzero element")]
    ZeroElement,
    #[error("integer {0} has a prime factor beyond the trial-division bound")]
    FactorizationTooLarge(String),
    #[error("operands live over different field towers")]
    TowerMismatch,
    #[error("invalid slot: {0}")]
    InvalidSlot(String),
    #[error("presentation has no shared factor (shared_k = 0)")]
    NoSharedFactor,
    #[error("residue field has characteristic 2; Springer decomposition does not apply")]
    ResidueChar2,
    #[error("degenerate form: {0}")]
    Degenerate(String),
    #[error("form is singular (nonempty quasilinear part)")]
    SingularInput,
    #[error("form has odd dimension {0}")]
    OddDimension(usize),
    #[error("shared slots differ: {0}")]
    SharedSlotMismatch(String),
    #[error("wrong characteristic: {0}")]
    WrongCharacteristic(String),
    #[error("no anisotropic vector found in the complement intersection within the budget")]
    NoAnisotropicVector,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid move parameter: {0}")]
    InvalidMoveParameter(String),
    #[error("the tower does not contain a square root of -1")]
    TowerLacksSqrtMinusOne,
    #[error("search budget entries must be positive")]
    InvalidBudget,
    #[error("empty form")]
    EmptyForm,
    #[error("invalid tower: {0}")]
    InvalidTower(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
