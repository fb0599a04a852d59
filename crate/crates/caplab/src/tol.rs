//! Numerical tolerances, collected in one place.
//!
//! Three regimes: *validation* tolerances guard object constructors,
//! *arithmetic* tolerances absorb eigensolver round-off in entropy
//! identities, and *capacity* tolerances absorb optimizer termination
//! error. The verification suites pick their slack from the regime the
//! checked inequality lives in.

/// Max-abs deviation from `m == m^dagger` accepted as Hermitian.
pub const HERMITIAN_TOL: f64 = 1e-10;

/// Accepted deviation of a density-matrix trace from 1.
pub const TRACE_TOL: f64 = 1e-10;

/// Eigenvalues in `[-EIGENVALUE_CLIP, 0)` are clipped to 0 and the
/// spectrum renormalized; anything below is rejected as not positive
/// semidefinite.
pub const EIGENVALUE_CLIP: f64 = 1e-8;

/// Accepted deviation of a pure-state squared norm from 1.
pub const NORM_TOL: f64 = 1e-10;

/// Max-abs deviation of `sum_k E_k^dagger E_k` from the identity accepted
/// as trace-preserving.
pub const CPTP_TOL: f64 = 1e-8;

/// Accepted deviation of a Choi input marginal from `I / dim_in`.
pub const CHOI_MARGINAL_TOL: f64 = 1e-8;

/// Eigenvalues below this count as exact zeros in entropy sums.
pub const ENTROPY_ZERO: f64 = 1e-12;

/// An eigenvalue of sigma below `ENTROPY_ZERO` only sends the relative
/// entropy to +infinity when rho puts more than this much weight on it.
pub const SUPPORT_WEIGHT_TOL: f64 = 1e-10;

/// Entropy-like quantities in `[-ENTROPY_NEG_CLAMP, 0)` clamp to 0;
/// anything more negative is a bug, not round-off.
pub const ENTROPY_NEG_CLAMP: f64 = 1e-9;

/// Largest eigenvalue at least `1 - PURITY_TOL` counts as a pure state.
pub const PURITY_TOL: f64 = 1e-9;

/// Accepted deviation of ensemble probabilities from summing to 1.
pub const PROB_SUM_TOL: f64 = 1e-10;

/// Choi eigenvalues below this are dropped when extracting Kraus
/// operators.
pub const KRAUS_EIGEN_CUTOFF: f64 = 1e-10;

/// Central finite-difference step for optimizer gradients.
pub const FD_STEP: f64 = 1e-5;

/// Multi-restart optimizer values must agree within this many bits for
/// the run to count as converged.
pub const RESTART_AGREEMENT_BITS: f64 = 1e-6;

/// Slack for inequalities checked at entropy level (pure linear algebra).
pub const ENTROPY_SUITE_TOL: f64 = 1e-9;

/// Slack for identities checked between two computation routes.
pub const ROUTE_TOL: f64 = 1e-8;

/// Slack for inequalities whose sides come out of capacity optimizers.
pub const CAPACITY_SUITE_TOL: f64 = 1e-3;
