//! Entropy functionals: von Neumann entropy, relative entropy, entropy
//! exchange, quantum mutual information, Holevo quantity, coherent
//! information, and ensemble purification.
//!
//! All results are base-2 (bits). `0 log 0 := 0`, implemented by treating
//! eigenvalues below [`tol::ENTROPY_ZERO`] as exact zeros.

use nalgebra::DVector;
use num_complex::Complex64;

use crate::channels::QuantumChannel;
use crate::qmat::{purify, ComplexMatrix, ComplexVector, DensityMatrix, PureBipartiteState};
use crate::tol;
use crate::{Error, Result};

// --- entropy values ---------------------------------------------------------

/// A nonnegative entropy-like quantity in bits, with a `+inf` sentinel for
/// relative entropy under support violation.
///
/// Values in `[-1e-9, 0)` clamp to zero (eigensolver round-off); anything
/// more negative panics, since it signals a bug rather than noise.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EntropyValue {
    bits: f64,
}

impl EntropyValue {
    /// The support-violation sentinel.
    pub const INFINITE: Self = Self {
        bits: f64::INFINITY,
    };

    pub(crate) fn new(bits: f64) -> Self {
        assert!(!bits.is_nan(), "entropy computed as NaN");
        assert!(
            bits >= -tol::ENTROPY_NEG_CLAMP,
            "entropy computed as {bits}, beyond round-off"
        );
        Self {
            bits: bits.max(0.0),
        }
    }

    /// The value in bits (`f64::INFINITY` for the sentinel).
    pub fn bits(&self) -> f64 {
        self.bits
    }

    pub fn is_infinite(&self) -> bool {
        self.bits.is_infinite()
    }
}

/// `-sum lambda_i log2 lambda_i` over a spectrum, zeros skipped.
pub(crate) fn entropy_of_spectrum(values: &[f64]) -> f64 {
    let mut s = 0.0;
    for &v in values {
        if v > tol::ENTROPY_ZERO {
            s -= v * v.log2();
        }
    }
    s
}

/// Entropy of a matrix that is PSD and unit-trace by construction.
pub(crate) fn entropy_of_psd(m: &ComplexMatrix) -> f64 {
    let (values, _) = crate::qmat::hermitian_spectrum_unchecked(m);
    entropy_of_spectrum(&values)
}

// --- basic functionals --------------------------------------------------------

/// Von Neumann entropy `S(rho) = -Tr rho log2 rho`.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> EntropyValue {
    EntropyValue::new(entropy_of_spectrum(rho.eigenvalues()))
}

/// Relative entropy `S(rho || sigma) = Tr rho (log2 rho - log2 sigma)`.
///
/// Computed in the two eigenbases. Returns the `+inf` sentinel when the
/// support of `rho` leaks outside the support of `sigma`: a
/// `sigma`-eigenvalue below [`tol::ENTROPY_ZERO`] carrying more than
/// [`tol::SUPPORT_WEIGHT_TOL`] of `rho`-weight.
pub fn relative_entropy(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<EntropyValue> {
    if rho.dim() != sigma.dim() {
        return Err(Error::DimensionMismatch(format!(
            "relative entropy needs equal dimensions, got {} and {}",
            rho.dim(),
            sigma.dim()
        )));
    }
    // rho-weight on each sigma-eigenvector: w_j = <f_j| rho |f_j>
    //                                           = sum_i lambda_i |<f_j|e_i>|^2.
    let overlaps = sigma.eigenvectors().adjoint() * rho.eigenvectors();
    let d = rho.dim();
    let mut value = 0.0;
    for &lambda in rho.eigenvalues().iter() {
        if lambda > tol::ENTROPY_ZERO {
            value += lambda * lambda.log2();
        }
    }
    for (j, &mu) in sigma.eigenvalues().iter().enumerate() {
        let mut weight = 0.0;
        for i in 0..d {
            weight += rho.eigenvalues()[i] * overlaps[(j, i)].norm_sqr();
        }
        if mu > tol::ENTROPY_ZERO {
            value -= weight * mu.log2();
        } else if weight > tol::SUPPORT_WEIGHT_TOL {
            return Ok(EntropyValue::INFINITE);
        }
    }
    Ok(EntropyValue::new(value))
}

// --- channel functionals --------------------------------------------------------

fn check_input(ch: &QuantumChannel, rho: &DensityMatrix) -> Result<()> {
    if rho.dim() != ch.dim_in() {
        return Err(Error::DimensionMismatch(format!(
            "state dimension {} does not match channel input {}",
            rho.dim(),
            ch.dim_in()
        )));
    }
    Ok(())
}

/// The three mutual-information terms `(S(rho), S(N(rho)), S_exchange)`,
/// sharing one purification. Single evaluation path for both the public
/// functionals and the capacity optimizer.
pub(crate) fn mi_parts(ch: &QuantumChannel, rho: &DensityMatrix) -> (f64, f64, f64) {
    let s_in = entropy_of_spectrum(rho.eigenvalues());
    let s_out = entropy_of_psd(&ch.apply_raw(rho.matrix()));
    let s_exch = entropy_of_psd(&ch.apply_extended_raw(&purify(rho)));
    (s_in, s_out, s_exch)
}

/// Entropy exchange `S((N (x) I)(|phi_rho><phi_rho|))` for the canonical
/// purification of `rho` — the entropy pumped into the environment.
pub fn entropy_exchange(ch: &QuantumChannel, rho: &DensityMatrix) -> Result<EntropyValue> {
    check_input(ch, rho)?;
    let s = entropy_of_psd(&ch.apply_extended_raw(&purify(rho)));
    debug_assert!(
        {
            let via_env = entropy_of_psd(&ch.complementary().apply_raw(rho.matrix()));
            (s - via_env).abs() <= tol::ROUTE_TOL
        },
        "entropy exchange disagrees with the complementary-channel route"
    );
    Ok(EntropyValue::new(s))
}

/// Quantum mutual information of a channel and input,
/// `I(rho, N) = S(rho) + S(N(rho)) - S_exchange`.
pub fn mutual_information(ch: &QuantumChannel, rho: &DensityMatrix) -> Result<EntropyValue> {
    check_input(ch, rho)?;
    let (s_in, s_out, s_exch) = mi_parts(ch, rho);
    Ok(EntropyValue::new(s_in + s_out - s_exch))
}

/// Coherent information `S(N(rho)) - S_exchange`; may be negative.
pub fn coherent_information(ch: &QuantumChannel, rho: &DensityMatrix) -> Result<f64> {
    check_input(ch, rho)?;
    let (_, s_out, s_exch) = mi_parts(ch, rho);
    Ok(s_out - s_exch)
}

// --- ensembles ---------------------------------------------------------------------

/// A finite ensemble `{(p_i, rho_i)}` of states of common dimension.
#[derive(Clone, Debug)]
pub struct Ensemble {
    probabilities: Vec<f64>,
    states: Vec<DensityMatrix>,
}

impl Ensemble {
    /// Validates lengths, the probability vector (nonnegative, summing to
    /// 1 within [`tol::PROB_SUM_TOL`], then normalized exactly), and the
    /// common dimension.
    pub fn new(probabilities: Vec<f64>, states: Vec<DensityMatrix>) -> Result<Self> {
        if probabilities.is_empty() || probabilities.len() != states.len() {
            return Err(Error::InvalidProbabilities(format!(
                "{} probabilities for {} states",
                probabilities.len(),
                states.len()
            )));
        }
        if probabilities.iter().any(|&p| !p.is_finite() || p < 0.0) {
            return Err(Error::InvalidProbabilities(
                "probabilities must be finite and nonnegative".into(),
            ));
        }
        let total: f64 = probabilities.iter().sum();
        if (total - 1.0).abs() > tol::PROB_SUM_TOL {
            return Err(Error::InvalidProbabilities(format!(
                "probabilities sum to {total}, expected 1"
            )));
        }
        let dim = states[0].dim();
        if states.iter().any(|s| s.dim() != dim) {
            return Err(Error::DimensionMismatch(
                "ensemble states must share a dimension".into(),
            ));
        }
        let probabilities = probabilities.iter().map(|p| p / total).collect();
        Ok(Self {
            probabilities,
            states,
        })
    }

    /// Ensemble of pure states from amplitude vectors (normalized here).
    pub fn from_pure_states(probabilities: Vec<f64>, states: &[ComplexVector]) -> Result<Self> {
        let states = states
            .iter()
            .map(DensityMatrix::pure)
            .collect::<Result<Vec<_>>>()?;
        Self::new(probabilities, states)
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.probabilities
    }

    pub fn states(&self) -> &[DensityMatrix] {
        &self.states
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.states[0].dim()
    }

    /// The average state `sum_i p_i rho_i`.
    pub fn average(&self) -> DensityMatrix {
        let d = self.dim();
        let mut m = ComplexMatrix::zeros(d, d);
        for (p, s) in self.probabilities.iter().zip(&self.states) {
            m += s.matrix().map(|z| z * *p);
        }
        DensityMatrix::from_psd(&m)
    }
}

/// Holevo quantity `chi = S(sum_i p_i rho_i) - sum_i p_i S(rho_i)`.
pub fn holevo_chi(ensemble: &Ensemble) -> EntropyValue {
    let avg = entropy_of_spectrum(ensemble.average().eigenvalues());
    let mut members = 0.0;
    for (p, s) in ensemble.probabilities().iter().zip(ensemble.states()) {
        members += p * entropy_of_spectrum(s.eigenvalues());
    }
    EntropyValue::new(avg - members)
}

/// Joint purification `|Phi_ABD> = sum_i sqrt(p_i) |Phi^i_AB> |i>_D` of a
/// pure-state ensemble, with `B` the canonical per-member reference and
/// `D` an index register of dimension equal to the ensemble size.
///
/// Returned as a bipartite state `A (x) (B D)`, so its `A`-reduction is
/// the ensemble average.
pub fn purify_ensemble(ensemble: &Ensemble) -> Result<PureBipartiteState> {
    let d = ensemble.dim();
    let m = ensemble.len();
    for (index, s) in ensemble.states().iter().enumerate() {
        if !s.is_pure() {
            return Err(Error::NotPure {
                index,
                largest: s.eigenvalues()[0],
            });
        }
    }
    let mut amplitudes = DVector::zeros(d * d * m);
    for (i, (p, s)) in ensemble
        .probabilities()
        .iter()
        .zip(ensemble.states())
        .enumerate()
    {
        let w = p.sqrt();
        let member = purify(s);
        let amp = member.amplitudes();
        for a in 0..d {
            for b in 0..d {
                amplitudes[a * d * m + b * m + i] += amp[a * d + b] * w;
            }
        }
    }
    // Global norm is sum_i p_i = 1 up to round-off.
    let norm = amplitudes.norm();
    PureBipartiteState::new(d, d * m, amplitudes.map(|z: Complex64| z / norm))
}

// --- tests ----------------------------------------------------------------------
