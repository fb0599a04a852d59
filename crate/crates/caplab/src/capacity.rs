//! Capacity optimizers: entanglement-assisted capacity `C_E` by concave
//! maximization of quantum mutual information, the one-shot Holevo
//! capacity `C_1` by ensemble search, the Holevo-quantity decomposition
//! report, and parameter sweeps.
//!
//! `C_E` maximizes `I(rho, N) = S(rho) + S(N(rho)) - S_exchange` over
//! density matrices through the exponential parameterization
//! `rho(H) = exp(H) / Tr exp(H)` with `H` Hermitian (`dim^2` real
//! parameters), which keeps every iterate strictly positive with no
//! constraint handling. Gradients are central finite differences; ascent
//! uses a backtracking (Armijo) line search with an adaptive initial
//! step. The objective is concave, so independently restarted runs must
//! agree; disagreement beyond [`tol::RESTART_AGREEMENT_BITS`] flags the
//! result as non-converged.
//!
//! `C_1` maximizes the Holevo quantity of channel outputs over ensembles
//! of `dim_in^2` pure input states. That objective is not concave, so the
//! result is always reported as a lower bound.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;

use crate::channels::{standard_channel, QuantumChannel};
use crate::entropy::{holevo_chi, mutual_information, von_neumann_entropy, Ensemble};
use crate::qmat::{ComplexMatrix, ComplexVector, DensityMatrix};
use crate::tol;
use crate::{Error, Result};
use num_complex::Complex64;

// --- configuration and results ------------------------------------------------

/// Knobs for the multi-restart ascent.
#[derive(Clone, Copy, Debug)]
pub struct OptimizerConfig {
    /// Independent restarts; restart `i` derives its seed as `seed + i`.
    pub restarts: usize,
    /// Gradient iterations per restart.
    pub max_iters: usize,
    /// Terminate a restart once an accepted step improves the objective
    /// by less than this many bits.
    pub step_tolerance: f64,
    /// Base seed for restart initialization.
    pub seed: u64,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        Self {
            restarts: 8,
            max_iters: 2000,
            step_tolerance: 1e-9,
            seed: 0,
        }
    }
}

impl OptimizerConfig {
    fn validate(&self) {
        assert!(self.restarts >= 1, "restarts must be positive");
        assert!(self.max_iters >= 1, "max_iters must be positive");
        assert!(
            self.step_tolerance > 0.0 && self.step_tolerance.is_finite(),
            "step_tolerance must be positive"
        );
    }
}

/// The argument achieving the reported value.
#[derive(Clone, Debug)]
pub enum OptimizerState {
    /// Maximizing input state (for `C_E`).
    Input(DensityMatrix),
    /// Maximizing input ensemble (for `C_1`).
    InputEnsemble(Ensemble),
}

/// Outcome of a capacity optimization.
#[derive(Clone, Debug)]
pub struct CapacityResult {
    /// Best objective value found, in bits.
    pub value_bits: f64,
    /// The maximizer.
    pub optimizer_state: OptimizerState,
    /// Total gradient iterations across all restarts.
    pub iterations: usize,
    /// Restarts performed.
    pub restarts_used: usize,
    /// For the concave `C_E` objective: all restarts agreed within
    /// [`tol::RESTART_AGREEMENT_BITS`] and the best restart met the step
    /// tolerance. For `C_1`: the best restart met the step tolerance
    /// (restart agreement is not expected on a non-concave landscape).
    pub converged: bool,
    /// Gradient norm at the last iteration of the best restart.
    pub gradient_norm_final: f64,
    /// Set when the optimizer can only certify a lower bound (`C_1`).
    pub lower_bound_only: bool,
}

// --- generic ascent -------------------------------------------------------------

struct RestartOutcome {
    theta: Vec<f64>,
    value: f64,
    iterations: usize,
    gradient_norm: f64,
    hit_tolerance: bool,
}

/// Backtracking gradient ascent from `theta0`; monotone in the objective.
fn ascend<F>(objective: &F, theta0: Vec<f64>, cfg: &OptimizerConfig) -> RestartOutcome
where
    F: Fn(&[f64]) -> f64,
{
    let n = theta0.len();
    let mut theta = theta0;
    let mut value = objective(&theta);
    let mut gradient = vec![0.0; n];
    let mut gradient_norm = 0.0;
    let mut alpha = 1.0f64;
    let mut iterations = 0;
    let mut hit_tolerance = false;

    for _ in 0..cfg.max_iters {
        iterations += 1;
        let mut probe = theta.clone();
        for i in 0..n {
            let base = theta[i];
            probe[i] = base + tol::FD_STEP;
            let up = objective(&probe);
            probe[i] = base - tol::FD_STEP;
            let down = objective(&probe);
            probe[i] = base;
            gradient[i] = (up - down) / (2.0 * tol::FD_STEP);
        }
        gradient_norm = gradient.iter().map(|g| g * g).sum::<f64>().sqrt();
        if gradient_norm < 1e-10 {
            hit_tolerance = true;
            break;
        }

        let mut step = alpha;
        let mut accepted = false;
        for _ in 0..60 {
            let candidate: Vec<f64> = theta
                .iter()
                .zip(&gradient)
                .map(|(t, g)| t + step * g)
                .collect();
            let trial = objective(&candidate);
            if trial >= value + 1e-4 * step * gradient_norm * gradient_norm {
                let gain = trial - value;
                theta = candidate;
                value = trial;
                alpha = (step * 2.0).min(64.0);
                accepted = true;
                if gain < cfg.step_tolerance {
                    hit_tolerance = true;
                }
                break;
            }
            step *= 0.5;
        }
        if !accepted {
            // No improving step at any scale: at the optimum to within
            // finite-difference resolution.
            hit_tolerance = true;
            break;
        }
        if hit_tolerance {
            break;
        }
    }

    RestartOutcome {
        theta,
        value,
        iterations,
        gradient_norm,
        hit_tolerance,
    }
}

fn run_restarts<F, S>(objective: &F, start: &S, cfg: &OptimizerConfig) -> Vec<RestartOutcome>
where
    F: Fn(&[f64]) -> f64 + Sync,
    S: Fn(usize) -> Vec<f64> + Sync,
{
    (0..cfg.restarts)
        .into_par_iter()
        .map(|r| ascend(objective, start(r), cfg))
        .collect()
}

/// Index of the best restart; ties break toward the lowest index.
fn best_index(outcomes: &[RestartOutcome]) -> usize {
    let mut best = 0;
    for (i, o) in outcomes.iter().enumerate().skip(1) {
        if o.value > outcomes[best].value {
            best = i;
        }
    }
    best
}

fn value_spread(outcomes: &[RestartOutcome]) -> f64 {
    let lo = outcomes
        .iter()
        .map(|o| o.value)
        .fold(f64::INFINITY, f64::min);
    let hi = outcomes
        .iter()
        .map(|o| o.value)
        .fold(f64::NEG_INFINITY, f64::max);
    hi - lo
}

// --- density-matrix parameterization ----------------------------------------------

/// Hermitian `H` from `d^2` reals: the diagonal first, then `(re, im)`
/// pairs for the upper triangle row by row.
fn hermitian_from_params(theta: &[f64], d: usize) -> ComplexMatrix {
    debug_assert_eq!(theta.len(), d * d);
    let mut h = ComplexMatrix::zeros(d, d);
    for i in 0..d {
        h[(i, i)] = Complex64::new(theta[i], 0.0);
    }
    let mut k = d;
    for i in 0..d {
        for j in (i + 1)..d {
            let z = Complex64::new(theta[k], theta[k + 1]);
            h[(i, j)] = z;
            h[(j, i)] = z.conj();
            k += 2;
        }
    }
    h
}

/// `rho(theta) = exp(H) / Tr exp(H)`, strictly positive for finite
/// parameters. The max eigenvalue is subtracted before exponentiating, so
/// overflow cannot occur.
fn density_from_params(theta: &[f64], d: usize) -> DensityMatrix {
    let h = hermitian_from_params(theta, d);
    let (values, vectors) = crate::qmat::hermitian_spectrum_unchecked(&h);
    let shift = values[0];
    let weights: Vec<f64> = values.iter().map(|v| (v - shift).exp()).collect();
    let total: f64 = weights.iter().sum();
    let spectrum: Vec<f64> = weights.iter().map(|w| w / total).collect();
    DensityMatrix::from_spectrum(spectrum, vectors)
        .expect("exponential spectrum is positive by construction")
}

// --- C_E ------------------------------------------------------------------------

/// Entanglement-assisted classical capacity
/// `C_E = max_rho I(rho, N)` by multi-restart concave ascent.
///
/// Restart 0 starts at the maximally mixed state (`H = 0`); restart `i`
/// draws a Gaussian `H` from seed `cfg.seed + i`. Non-convergence is
/// flagged in the result, never an error.
pub fn compute_ce(ch: &QuantumChannel, cfg: &OptimizerConfig) -> CapacityResult {
    cfg.validate();
    let d = ch.dim_in();
    let n = d * d;
    let objective = |theta: &[f64]| {
        let rho = density_from_params(theta, d);
        let (s_in, s_out, s_exch) = crate::entropy::mi_parts(ch, &rho);
        s_in + s_out - s_exch
    };
    let start = |r: usize| {
        if r == 0 {
            vec![0.0; n]
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed + r as u64);
            (0..n)
                .map(|_| rng.sample::<f64, _>(StandardNormal))
                .collect()
        }
    };
    let outcomes = run_restarts(&objective, &start, cfg);
    let best = best_index(&outcomes);
    let rho = density_from_params(&outcomes[best].theta, d);
    let value_bits = mutual_information(ch, &rho)
        .expect("maximizer matches channel input dimension")
        .bits();
    let limit = 2.0 * (d as f64).log2() + tol::RESTART_AGREEMENT_BITS;
    assert!(
        (0.0..=limit).contains(&value_bits),
        "C_E = {value_bits} outside [0, 2 log2 d]"
    );
    CapacityResult {
        value_bits,
        optimizer_state: OptimizerState::Input(rho),
        iterations: outcomes.iter().map(|o| o.iterations).sum(),
        restarts_used: outcomes.len(),
        converged: value_spread(&outcomes) <= tol::RESTART_AGREEMENT_BITS
            && outcomes[best].hit_tolerance,
        gradient_norm_final: outcomes[best].gradient_norm,
        lower_bound_only: false,
    }
}

// --- C_1 ------------------------------------------------------------------------

/// Parameter block for `C_1`: `m = dim_in^2` pure states as raw complex
/// amplitude pairs, then `m` weights squared-and-normalized into
/// probabilities.
struct EnsembleParams {
    dim: usize,
    members: usize,
}

impl EnsembleParams {
    fn len(&self) -> usize {
        self.members * (2 * self.dim + 1)
    }

    fn decode(&self, theta: &[f64]) -> (Vec<f64>, Vec<ComplexVector>) {
        let (d, m) = (self.dim, self.members);
        let mut states = Vec::with_capacity(m);
        for i in 0..m {
            let base = i * 2 * d;
            let mut v = ComplexVector::zeros(d);
            for a in 0..d {
                v[a] = Complex64::new(theta[base + 2 * a], theta[base + 2 * a + 1]);
            }
            if v.norm_squared() < 1e-12 {
                // Degenerate direction; pin to a basis vector.
                v[i % d] = Complex64::new(1.0, 0.0);
            }
            let norm = v.norm();
            states.push(v.map(|z| z / norm));
        }
        let mut probs: Vec<f64> = theta[m * 2 * d..].iter().map(|w| w * w).collect();
        let total: f64 = probs.iter().sum();
        if total < 1e-12 {
            probs = vec![1.0 / m as f64; m];
        } else {
            probs.iter_mut().for_each(|p| *p /= total);
        }
        (probs, states)
    }
}

/// One-shot (unassisted) Holevo capacity lower bound
/// `C_1 = max chi({N(rho_i)})` over ensembles of `dim_in^2` pure states.
///
/// The objective is not concave; the result always carries
/// `lower_bound_only = true`. Restart 0 starts from the equal-weight
/// standard-basis ensemble, further restarts from Gaussian draws seeded
/// `cfg.seed + i`.
pub fn compute_one_shot_c1(ch: &QuantumChannel, cfg: &OptimizerConfig) -> CapacityResult {
    cfg.validate();
    let d = ch.dim_in();
    let layout = EnsembleParams {
        dim: d,
        members: d * d,
    };
    let objective = |theta: &[f64]| {
        let (probs, states) = layout.decode(theta);
        // chi of the pushed-through ensemble, on raw spectra.
        let mut avg = ComplexMatrix::zeros(ch.dim_out(), ch.dim_out());
        let mut member_entropy = 0.0;
        for (p, v) in probs.iter().zip(&states) {
            let out = ch.apply_raw(&(v * v.adjoint()));
            member_entropy += p * crate::entropy::entropy_of_psd(&out);
            avg += out.map(|z| z * *p);
        }
        crate::entropy::entropy_of_psd(&avg) - member_entropy
    };
    let start = |r: usize| {
        let mut theta = vec![0.0; layout.len()];
        if r == 0 {
            for i in 0..layout.members {
                theta[i * 2 * d + 2 * (i % d)] = 1.0;
            }
            for w in theta[layout.members * 2 * d..].iter_mut() {
                *w = 1.0;
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed + r as u64);
            for t in theta.iter_mut() {
                *t = rng.sample::<f64, _>(StandardNormal);
            }
        }
        theta
    };
    let outcomes = run_restarts(&objective, &start, cfg);
    let best = best_index(&outcomes);
    let (probs, states) = layout.decode(&outcomes[best].theta);
    let ensemble = Ensemble::from_pure_states(probs, &states).expect("decoded ensemble is valid");
    let pushed = ch
        .apply_ensemble(&ensemble)
        .expect("ensemble dimension matches channel input");
    let value_bits = holevo_chi(&pushed).bits();
    let limit = (ch.dim_out() as f64).log2() + tol::RESTART_AGREEMENT_BITS;
    assert!(
        (0.0..=limit).contains(&value_bits),
        "C_1 = {value_bits} outside [0, log2 dim_out]"
    );
    CapacityResult {
        value_bits,
        optimizer_state: OptimizerState::InputEnsemble(ensemble),
        iterations: outcomes.iter().map(|o| o.iterations).sum(),
        restarts_used: outcomes.len(),
        converged: outcomes[best].hit_tolerance,
        gradient_norm_final: outcomes[best].gradient_norm,
        lower_bound_only: true,
    }
}

// --- decomposition report ----------------------------------------------------------

/// The Holevo decomposition of mutual information at a pure-state
/// ensemble: `I = S(rho_A) + chi(outputs) - chi(environment)`.
#[derive(Clone, Copy, Debug)]
pub struct DecompositionReport {
    /// `S(sum_i p_i rho_i)` in bits.
    pub input_entropy_bits: f64,
    /// Holevo quantity of the channel outputs `{N(rho_i)}`.
    pub chi_output_bits: f64,
    /// Holevo quantity of the environment outputs `{N_c(rho_i)}`.
    pub chi_environment_bits: f64,
    /// `input_entropy_bits + chi_output_bits - chi_environment_bits`;
    /// equals the mutual information at the ensemble average.
    pub mutual_information_bits: f64,
}

/// Evaluates the decomposition for a pure-state ensemble. The individual
/// `chi` terms depend on the decomposition of the average state; their
/// difference does not.
pub fn decomposition_report(
    ch: &QuantumChannel,
    ensemble: &Ensemble,
) -> Result<DecompositionReport> {
    for (index, s) in ensemble.states().iter().enumerate() {
        if !s.is_pure() {
            return Err(Error::NotPure {
                index,
                largest: s.eigenvalues()[0],
            });
        }
    }
    let input_entropy_bits = von_neumann_entropy(&ensemble.average()).bits();
    let chi_output_bits = holevo_chi(&ch.apply_ensemble(ensemble)?).bits();
    let chi_environment_bits = holevo_chi(&ch.complementary_ensemble(ensemble)?).bits();
    Ok(DecompositionReport {
        input_entropy_bits,
        chi_output_bits,
        chi_environment_bits,
        mutual_information_bits: input_entropy_bits + chi_output_bits - chi_environment_bits,
    })
}

// --- sweeps -----------------------------------------------------------------------

/// One row of a capacity sweep.
#[derive(Clone, Copy, Debug)]
pub struct SweepPoint {
    pub param: f64,
    pub ce_bits: f64,
}

/// `C_E` over a grid of the family's parameter, sorted by parameter.
/// Every grid point is validated against the family's range before any
/// optimization starts.
pub fn capacity_sweep(
    family: &str,
    param_grid: &[f64],
    cfg: &OptimizerConfig,
) -> Result<Vec<SweepPoint>> {
    cfg.validate();
    let key = crate::channels::family_parameter(family)?.ok_or_else(|| {
        Error::ParameterOutOfRange(format!("family '{family}' has no sweepable parameter"))
    })?;
    let channels = param_grid
        .iter()
        .map(|&p| {
            let mut params = std::collections::BTreeMap::new();
            params.insert(key.to_string(), p);
            standard_channel(family, &params).map(|ch| (p, ch))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut points: Vec<SweepPoint> = channels
        .par_iter()
        .map(|(p, ch)| SweepPoint {
            param: *p,
            ce_bits: compute_ce(ch, cfg).value_bits,
        })
        .collect();
    points.sort_by(|a, b| a.param.total_cmp(&b.param));
    Ok(points)
}

// --- tests -------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channels::{amplitude_damping, depolarizing, identity_channel};
    use crate::entropy::mutual_information;

    fn cfg(restarts: usize, seed: u64) -> OptimizerConfig {
        OptimizerConfig {
            restarts,
            seed,
            ..OptimizerConfig::default()
        }
    }

    #[test]
    fn ce_of_identity_qubit_is_two_bits() {
        let r = compute_ce(&identity_channel(2).unwrap(), &cfg(3, 11));
        assert!((r.value_bits - 2.0).abs() < 1e-6, "got {}", r.value_bits);
        assert!(r.converged);
        assert!(!r.lower_bound_only);
        let OptimizerState::Input(rho) = &r.optimizer_state else {
            panic!("C_E maximizer must be a state");
        };
        // Maximizer is the maximally mixed state.
        assert!((rho.eigenvalues()[0] - 0.5).abs() < 1e-4);
    }

    #[test]
    fn ce_of_fully_depolarizing_qubit_is_zero() {
        let r = compute_ce(&depolarizing(1.0, 2).unwrap(), &cfg(2, 3));
        assert!(r.value_bits.abs() < 1e-6);
    }

    #[test]
    fn ce_of_depolarizing_half_matches_oracle_fixture() {
        // Bloch-grid oracle value for p = 0.5, frozen to full precision.
        let r = compute_ce(&depolarizing(0.5, 2).unwrap(), &cfg(3, 5));
        assert!(
            (r.value_bits - 0.451205059305).abs() < 1e-5,
            "got {}",
            r.value_bits
        );
        assert!(r.converged);
    }

    #[test]
    fn ce_of_amplitude_damping_has_asymmetric_maximizer() {
        // Oracle optimum sits at an interior, non-maximally-mixed input.
        let r = compute_ce(&amplitude_damping(0.4).unwrap(), &cfg(3, 9));
        assert!(
            (r.value_bits - 1.159688416984).abs() < 1e-5,
            "got {}",
            r.value_bits
        );
        let OptimizerState::Input(rho) = &r.optimizer_state else {
            panic!("C_E maximizer must be a state");
        };
        let top = rho.eigenvalues()[0];
        assert!((top - 0.5098).abs() < 1e-2, "eigenvalue {top}");
    }

    #[test]
    fn ce_dominates_the_maximally_mixed_probe() {
        let ch = amplitude_damping(0.3).unwrap();
        let r = compute_ce(&ch, &cfg(2, 1));
        let probe = mutual_information(&ch, &DensityMatrix::maximally_mixed(2))
            .unwrap()
            .bits();
        assert!(r.value_bits >= probe - 1e-9);
    }

    #[test]
    fn ce_value_matches_reevaluated_state() {
        let ch = depolarizing(0.25, 2).unwrap();
        let r = compute_ce(&ch, &cfg(2, 2));
        let OptimizerState::Input(rho) = &r.optimizer_state else {
            panic!("C_E maximizer must be a state");
        };
        let again = mutual_information(&ch, rho).unwrap().bits();
        assert!((r.value_bits - again).abs() < 1e-9);
    }

    #[test]
    fn c1_of_identity_qubit_is_one_bit() {
        let r = compute_one_shot_c1(&identity_channel(2).unwrap(), &cfg(2, 7));
        assert!((r.value_bits - 1.0).abs() < 1e-4, "got {}", r.value_bits);
        assert!(r.lower_bound_only);
        let OptimizerState::InputEnsemble(ens) = &r.optimizer_state else {
            panic!("C_1 maximizer must be an ensemble");
        };
        assert_eq!(ens.len(), 4);
    }

    #[test]
    fn c1_of_fully_depolarizing_qubit_is_zero() {
        let r = compute_one_shot_c1(&depolarizing(1.0, 2).unwrap(), &cfg(2, 7));
        assert!(r.value_bits < 1e-6);
    }

    #[test]
    fn c1_of_depolarizing_half_matches_closed_form() {
        // chi is maximized by antipodal basis inputs:
        // C_1 = 1 - H2(p/2); at p = 1/2 that is 0.188722 bits (frozen).
        let r = compute_one_shot_c1(&depolarizing(0.5, 2).unwrap(), &cfg(2, 13));
        assert!(
            (r.value_bits - 0.188721875541).abs() < 1e-5,
            "got {}",
            r.value_bits
        );
    }

    #[test]
    fn c1_value_matches_reevaluated_ensemble() {
        let ch = amplitude_damping(0.5).unwrap();
        let r = compute_one_shot_c1(&ch, &cfg(2, 21));
        let OptimizerState::InputEnsemble(ens) = &r.optimizer_state else {
            panic!("C_1 maximizer must be an ensemble");
        };
        let again = holevo_chi(&ch.apply_ensemble(ens).unwrap()).bits();
        assert!((r.value_bits - again).abs() < 1e-9);
    }

    #[test]
    fn same_seed_reproduces_results_exactly() {
        let ch = amplitude_damping(0.4).unwrap();
        let a = compute_ce(&ch, &cfg(3, 17));
        let b = compute_ce(&ch, &cfg(3, 17));
        assert_eq!(a.value_bits, b.value_bits);
        assert_eq!(a.iterations, b.iterations);
    }

    #[test]
    #[should_panic(expected = "restarts must be positive")]
    fn zero_restarts_is_a_config_bug() {
        let bad = OptimizerConfig {
            restarts: 0,
            ..OptimizerConfig::default()
        };
        compute_ce(&identity_channel(2).unwrap(), &bad);
    }

    #[test]
    fn decomposition_of_identity_with_orthogonal_ensemble() {
        let mut v0 = ComplexVector::zeros(2);
        v0[0] = Complex64::new(1.0, 0.0);
        let mut v1 = ComplexVector::zeros(2);
        v1[1] = Complex64::new(1.0, 0.0);
        let ens = Ensemble::from_pure_states(vec![0.5, 0.5], &[v0, v1]).unwrap();
        let ch = identity_channel(2).unwrap();
        let rep = decomposition_report(&ch, &ens).unwrap();
        assert!((rep.input_entropy_bits - 1.0).abs() < 1e-10);
        assert!((rep.chi_output_bits - 1.0).abs() < 1e-10);
        assert!(rep.chi_environment_bits.abs() < 1e-10);
        assert!((rep.mutual_information_bits - 2.0).abs() < 1e-10);
    }

    #[test]
    fn decomposition_of_fully_depolarizing_vanishes() {
        let mut v0 = ComplexVector::zeros(2);
        v0[0] = Complex64::new(1.0, 0.0);
        let mut v1 = ComplexVector::zeros(2);
        v1[1] = Complex64::new(1.0, 0.0);
        let ens = Ensemble::from_pure_states(vec![0.5, 0.5], &[v0, v1]).unwrap();
        let rep = decomposition_report(&depolarizing(1.0, 2).unwrap(), &ens).unwrap();
        assert!(rep.mutual_information_bits.abs() < 1e-8);
    }

    #[test]
    fn decomposition_rejects_mixed_members() {
        let ens = Ensemble::new(vec![1.0], vec![DensityMatrix::maximally_mixed(2)]).unwrap();
        assert!(matches!(
            decomposition_report(&identity_channel(2).unwrap(), &ens),
            Err(Error::NotPure { .. })
        ));
    }

    #[test]
    fn sweep_endpoints_of_depolarizing() {
        let pts = capacity_sweep("depolarizing", &[1.0, 0.0], &cfg(2, 0)).unwrap();
        assert_eq!(pts.len(), 2);
        // Sorted by parameter.
        assert_eq!(pts[0].param, 0.0);
        assert!((pts[0].ce_bits - 2.0).abs() < 1e-6);
        assert!(pts[1].ce_bits.abs() < 1e-6);
    }

    #[test]
    fn sweep_of_erasure_midpoint() {
        let pts = capacity_sweep("erasure", &[0.5], &cfg(2, 0)).unwrap();
        assert!((pts[0].ce_bits - 1.0).abs() < 1e-3);
    }

    #[test]
    fn sweep_validates_family_and_range() {
        assert!(matches!(
            capacity_sweep("identity", &[0.5], &cfg(1, 0)),
            Err(Error::ParameterOutOfRange(_))
        ));
        assert!(matches!(
            capacity_sweep("warp", &[0.5], &cfg(1, 0)),
            Err(Error::UnknownFamily(_))
        ));
        assert!(capacity_sweep("dephasing", &[0.5, 1.5], &cfg(1, 0)).is_err());
    }
}
