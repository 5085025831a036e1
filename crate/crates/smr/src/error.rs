use std::fmt;

use crate::verify::VerificationReport;

/// Errors shared by the whole crate.
///
/// Verification itself never errors: a failed check is a reported
/// [`VerificationReport`], not an `Err`. Errors mean the caller asked for
/// something outside an operation's domain, or a construction could not
/// deliver a verified result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The parameter triple violates `mk = 3n` or `3 <= m,k <= n`.
    Inadmissible {
        m: usize,
        n: usize,
        k: usize,
        reason: String,
    },
    /// An array did not have the shape the operation requires.
    DimensionMismatch {
        expected: (usize, usize),
        got: (usize, usize),
    },
    /// Cell index outside the grid.
    CellOutOfRange { row: usize, col: usize },
    /// Two values written to the same cell.
    CellOccupied { row: usize, col: usize },
    /// The same value appears in two cells.
    DuplicateEntry { value: i32 },
    /// Two partitions over different ground sets were compared.
    GroundMismatch,
    /// A row that must be closed under negation is not.
    NotNegationClosed { row: usize },
    /// An even side length was required.
    OddSide { n: usize },
    /// Side length below the smallest supported instance.
    TooSmall { n: usize },
    /// `(n, k)` has no tabulated data.
    NotTabulated { n: usize, k: usize },
    /// The shape is served by a fixed array, not a block construction.
    FixedShape { n: usize, k: usize },
    /// The half-range shift needs an odd number of filled cells.
    EvenShift { mk: usize },
    /// An input failed the verification that the operation requires.
    InvalidInput {
        what: &'static str,
        report: Box<VerificationReport>,
    },
    /// A selection step that should always succeed did not. Surfaced loudly:
    /// a reproducible instance of this is a genuine counterexample to the
    /// construction and worth reporting.
    Defect {
        stage: &'static str,
        detail: String,
    },
    /// The bounded search gave up before finding a witness.
    SearchExhausted { what: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Inadmissible { m, n, k, reason } => {
                write!(f, "inadmissible parameters ({m},{n},{k}): {reason}")
            }
            Error::DimensionMismatch { expected, got } => write!(
                f,
                "dimension mismatch: expected {}x{}, got {}x{}",
                expected.0, expected.1, got.0, got.1
            ),
            Error::CellOutOfRange { row, col } => {
                write!(f, "cell ({row},{col}) outside the grid")
            }
            Error::CellOccupied { row, col } => write!(f, "cell ({row},{col}) already filled"),
            Error::DuplicateEntry { value } => write!(f, "value {value} appears more than once"),
            Error::GroundMismatch => write!(f, "partitions have different ground sets"),
            Error::NotNegationClosed { row } => {
                write!(f, "row {row} is not closed under negation")
            }
            Error::OddSide { n } => write!(f, "side length {n} must be even"),
            Error::TooSmall { n } => write!(f, "side length {n} too small"),
            Error::NotTabulated { n, k } => write!(f, "no tabulated data for (n,k)=({n},{k})"),
            Error::FixedShape { n, k } => write!(
                f,
                "(n,k)=({n},{k}) is served by a fixed array, not the block construction"
            ),
            Error::EvenShift { mk } => write!(
                f,
                "half-range shift needs an odd cell count, got mk={mk}"
            ),
            Error::InvalidInput { what, report } => {
                write!(f, "invalid {what}: {}", report.summary())
            }
            Error::Defect { stage, detail } => {
                write!(f, "construction defect in {stage}: {detail}")
            }
            Error::SearchExhausted { what } => write!(f, "search budget exhausted: {what}"),
        }
    }
}

impl std::error::Error for Error {}
