//! Error type shared across the crate.

use crate::sic::FidCand;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// `a` has no multiplicative inverse mod `modulus`.
    #[error("{a} is not coprime to {modulus}")]
    NotCoprime { a: u64, modulus: u64 },

    /// An enumeration or power search exceeded its configured cap.
    #[error("cap exceeded: {what} requires more than {cap}")]
    CapExceeded { what: &'static str, cap: u64 },

    /// Matrix/vector dimensions do not match.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimMismatch { expected: usize, got: usize },

    /// A matrix failed the k-nomial block-structure check; coordinates of the
    /// offending block (block-row, block-column) are included.
    #[error("matrix is not k-nomial at block ({block_row}, {block_col})")]
    NotKNomial { block_row: usize, block_col: usize },

    /// The block formula requires β coprime to N̄.
    #[error("beta = {beta} is not coprime to nbar = {nbar}")]
    BetaNotCoprime { beta: u64, nbar: u64 },

    /// Expected a matrix of determinant −1 mod N̄.
    #[error("matrix is not anti-symplectic (det must be -1 mod nbar)")]
    NotAntisymplectic,

    /// Expected a unit vector.
    #[error("vector is not normalized (norm = {norm})")]
    NotNormalized { norm: f64 },

    /// The fiducial search exhausted its restarts without reaching the
    /// requested tolerance; the best candidate found is carried along.
    #[error("search did not converge (best defect = {})", best.defect)]
    NoConvergence { best: Box<FidCand> },

    /// Malformed input encountered while parsing a serialized object.
    #[error("parse error: {0}")]
    Parse(String),
}
