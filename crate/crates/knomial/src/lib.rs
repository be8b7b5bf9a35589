//! Weyl-Heisenberg and Clifford groups in arbitrary finite dimension, the
//! k-nomial (system-of-imprimitivity) basis in which every Clifford operation
//! is block-monomial, and SIC-POVM fiducial verification and search built on
//! that machinery.
//!
//! Write the dimension as N = kn² with k square-free. The crate constructs
//! the shift/clock generators X, Z and the displacement operators D_p, the
//! symplectic unitaries U_F for F ∈ SL(2, Z_N̄), the joint eigenbasis
//! ∣r,s,j⟩ of X^{kn} and Z^{kn} in which every U_F has exactly one nonzero
//! k×k block per block-row and block-column, and the closed-form expressions
//! for those blocks. On top of this sit SIC fiducial diagnostics, the exact
//! dimension-8 fiducial family, a numeric dimension-12 fiducial, and a
//! seeded random-restart fiducial search.

pub mod cliffordrep;
pub mod error;
pub mod heisenberg;
pub mod imprimitivity;
pub mod io;
pub mod linalg;
pub mod numtheory;
pub mod sic;

pub use error::Error;
pub use linalg::{Basis, CMat, CVec};
pub use numtheory::{Dim, Sl2};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
