//! Entanglement-assisted classical capacity of finite-dimensional quantum
//! channels.
//!
//! The crate computes the entanglement-assisted classical capacity
//!
//! ```text
//! C_E(N) = max_rho S(rho) + S(N(rho)) - S((N (x) I)(|phi_rho>))
//! ```
//!
//! by concave maximization of the quantum mutual information over input
//! density matrices, computes the one-shot (unassisted) Holevo capacity
//! `C_1` by ensemble search, and verifies the entropy inequalities that
//! this capacity theory rests on — data processing, convexity, additivity,
//! strong subadditivity, joint subadditivity, monotonicity of relative
//! entropy, the entropy-exchange bound, concavity, and the Holevo-quantity
//! decomposition — on seeded randomized instances.
//!
//! Conventions used throughout:
//!
//! - all entropies and capacities are base-2 (bits);
//! - composite indices are row-major with the first subsystem slowest,
//!   i.e. `|a>|b>` lives at linear index `a * dim_b + b`;
//! - Choi matrices are normalized to unit trace;
//! - eigenvalues are reported in descending order;
//! - randomness is always explicit: every generator is seeded, and equal
//!   seeds give bitwise-equal results.
//!
//! Matrices are dense and the algorithms are exact-diagonalization based,
//! so the intended scale is small dimensions (products of a few qubits or
//! qudits), not many-body systems.

pub mod capacity;
pub mod channels;
pub mod entropy;
mod error;
pub mod qmat;
pub mod tol;
pub mod verify;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
