//! Jordan partitions of tensor products of unipotent Jordan blocks.
//!
//! Over a field of characteristic `p`, `J_m(1) ⊗ J_n(1)` with `m <= n` is
//! similar to a direct sum of `m` Jordan blocks whose sizes form the Jordan
//! partition `lambda(m, n, p)`. This crate computes it two ways:
//!
//! - [`jordan`]: a six-case recursion for the composition `c(m, n, p)` (the
//!   multiplicities of the distinct block sizes) followed by a closed formula
//!   that recovers the sizes from the composition and `n`;
//! - [`oracle`]: explicit linear algebra over GF(p), reading the Jordan type
//!   off the ranks of powers of the nilpotent part.
//!
//! [`verify`] cross-checks the two and sweeps the known structural theorems
//! (standardness for `p = 2`, periodicity and reflection in `n`).
//!
//! The recursion is generic over the unsigned integer type; the aliases below
//! fix it to `u64`.

pub mod error;
pub mod gf;
pub mod int;
pub mod jordan;
pub mod oracle;
pub mod verify;

pub use error::{JordanError, OracleError, VerifyError};
pub use int::BlockInt;

pub type Prime = jordan::Prime<u64>;
pub type BlockPair = jordan::BlockPair<u64>;
pub type Composition = jordan::Composition<u64>;
pub type JordanDecomposition = jordan::JordanDecomposition<u64>;
pub type RadixParams = jordan::RadixParams<u64>;
pub type JordanSolver = jordan::JordanSolver<u64>;
pub use jordan::CaseId;
