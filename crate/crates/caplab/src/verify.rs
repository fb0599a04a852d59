//! Seeded randomized-instance generators and the named verification
//! suites for the capacity theory's inequalities.
//!
//! Every suite checks one inequality (or two-route identity) on `trials`
//! independent instances. Trial `t` derives its generator seed as
//! `seed + t`, so any failure is exactly replayable from the reported
//! witness. A trial's *margin* is the amount by which the inequality
//! holds (negative = violated); a trial fails when its margin is below
//! minus the suite tolerance.
//!
//! | suite id        | checks                                                    | tolerance |
//! |-----------------|-----------------------------------------------------------|-----------|
//! | `dp`            | C_E(N2 . N1) <= min(C_E(N1), C_E(N2))                     | 1e-3      |
//! | `convexity`     | C_E(sum w_i N_i) <= sum w_i C_E(N_i)                      | 1e-3      |
//! | `additivity`    | C_E(N1 (x) N2) = C_E(N1) + C_E(N2)                        | 1e-3      |
//! | `ssa`           | S(AB) + S(BC) >= S(ABC) + S(B)                            | 1e-9      |
//! | `jsa`           | S(AC) + S(BD) + S(CD) >= S(ABCD) + S(C) + S(D)            | 1e-9      |
//! | `monotonicity`  | S(N(rho) || N(sigma)) <= S(rho || sigma)                  | 1e-9      |
//! | `exchange-bound`| S_exch(N, avg) >= sum p_i S(N(rho_i))                     | 1e-9      |
//! | `concavity`     | I(blend, N) >= blend of I                                 | 1e-9      |
//! | `decomp`        | chi_out - chi_env decomposition-independent; sum = I      | 1e-8      |
//! | `bound`         | C_1 <= C_E <= log2(d) + C_1                               | 1e-3      |
//! | `eq3`           | I(rho, N) = S((N(x)I)phi || N(rho) (x) rho_B)             | 1e-8      |
//!
//! Capacity-level suites run qubit channels (the additivity suite
//! optimizes dim-4 joint inputs); entropy-level suites go up to four
//! qubits.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::capacity::{compute_ce, compute_one_shot_c1, decomposition_report, OptimizerConfig};
use crate::channels::{compose, mix, standard_channel, tensor, QuantumChannel};
use crate::entropy::{
    entropy_exchange, entropy_of_psd, mutual_information, relative_entropy, von_neumann_entropy,
    Ensemble,
};
use crate::qmat::{partial_trace, purify, ComplexMatrix, ComplexVector, DensityMatrix};
use crate::tol;
use crate::{Error, Result};

// --- suite identifiers ---------------------------------------------------------

/// The named verification suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteId {
    DataProcessing,
    Convexity,
    Additivity,
    StrongSubadditivity,
    JointSubadditivity,
    Monotonicity,
    ExchangeBound,
    Concavity,
    Decomposition,
    BoundChain,
    Eq3,
}

impl SuiteId {
    /// All suites in canonical order.
    pub const ALL: [SuiteId; 11] = [
        SuiteId::DataProcessing,
        SuiteId::Convexity,
        SuiteId::Additivity,
        SuiteId::StrongSubadditivity,
        SuiteId::JointSubadditivity,
        SuiteId::Monotonicity,
        SuiteId::ExchangeBound,
        SuiteId::Concavity,
        SuiteId::Decomposition,
        SuiteId::BoundChain,
        SuiteId::Eq3,
    ];

    /// The stable string id used on the command line and in reports.
    pub fn id(&self) -> &'static str {
        match self {
            SuiteId::DataProcessing => "dp",
            SuiteId::Convexity => "convexity",
            SuiteId::Additivity => "additivity",
            SuiteId::StrongSubadditivity => "ssa",
            SuiteId::JointSubadditivity => "jsa",
            SuiteId::Monotonicity => "monotonicity",
            SuiteId::ExchangeBound => "exchange-bound",
            SuiteId::Concavity => "concavity",
            SuiteId::Decomposition => "decomp",
            SuiteId::BoundChain => "bound",
            SuiteId::Eq3 => "eq3",
        }
    }

    /// Failure threshold: a trial fails when `margin < -tolerance()`.
    pub fn tolerance(&self) -> f64 {
        match self {
            SuiteId::DataProcessing
            | SuiteId::Convexity
            | SuiteId::Additivity
            | SuiteId::BoundChain => tol::CAPACITY_SUITE_TOL,
            SuiteId::StrongSubadditivity
            | SuiteId::JointSubadditivity
            | SuiteId::Monotonicity
            | SuiteId::ExchangeBound
            | SuiteId::Concavity => tol::ENTROPY_SUITE_TOL,
            SuiteId::Decomposition | SuiteId::Eq3 => tol::ROUTE_TOL,
        }
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for SuiteId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SuiteId::ALL
            .iter()
            .copied()
            .find(|id| id.id() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

// --- reports ----------------------------------------------------------------------

/// Replay handle for a trial: the trial's generator seed plus the
/// structural parameters of the instance (never the matrices).
#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub seed: u64,
    pub params: BTreeMap<String, Value>,
}

/// Aggregated outcome of one suite run.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub trials: usize,
    /// Count of trials with margin below minus the suite tolerance.
    pub failures: usize,
    /// Most negative margin observed (positive = comfortable pass).
    pub worst_slack_bits: f64,
    pub worst_witness: Witness,
    pub elapsed_seconds: f64,
}

struct TrialOutcome {
    margin: f64,
    witness: Witness,
}

// --- random instance generators ------------------------------------------------------

fn gaussian_vector(len: usize, rng: &mut ChaCha8Rng) -> ComplexVector {
    ComplexVector::from_fn(len, |_, _| {
        num_complex::Complex64::new(
            rng.sample::<f64, _>(StandardNormal),
            rng.sample::<f64, _>(StandardNormal),
        )
    })
}

/// Haar-random unitary: QR of a Ginibre matrix with the R-diagonal phase
/// fix.
fn haar_unitary(d: usize, rng: &mut ChaCha8Rng) -> ComplexMatrix {
    let g = ComplexMatrix::from_fn(d, d, |_, _| {
        num_complex::Complex64::new(
            rng.sample::<f64, _>(StandardNormal),
            rng.sample::<f64, _>(StandardNormal),
        )
    });
    let qr = g.qr();
    let r = qr.r();
    let mut q = qr.q();
    for j in 0..d {
        let rjj = r[(j, j)];
        if rjj.norm() > 0.0 {
            let phase = rjj / rjj.norm();
            q.column_mut(j).iter_mut().for_each(|z| *z *= phase);
        }
    }
    q
}

/// Reduction of a Haar-random pure state on `dim x dim`; full rank almost
/// surely, deterministic per seed.
pub fn random_density(dim: usize, seed: u64) -> DensityMatrix {
    assert!(dim >= 1, "dimension must be positive");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let v = gaussian_vector(dim * dim, &mut rng);
    let norm = v.norm();
    let psi = crate::qmat::PureBipartiteState::new_normalized(dim, dim, v.map(|z| z / norm));
    psi.reduced_a()
}

/// Random channel from a Haar-random isometry
/// `dim_in -> dim_out (x) kraus_rank`; deterministic per seed.
pub fn random_channel(
    dim_in: usize,
    dim_out: usize,
    kraus_rank: usize,
    seed: u64,
) -> QuantumChannel {
    assert!(kraus_rank >= 1, "kraus_rank must be positive");
    assert!(
        dim_out * kraus_rank >= dim_in,
        "no isometry into dim_out * kraus_rank < dim_in"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows = dim_out * kraus_rank;
    let g = ComplexMatrix::from_fn(rows, dim_in, |_, _| {
        num_complex::Complex64::new(
            rng.sample::<f64, _>(StandardNormal),
            rng.sample::<f64, _>(StandardNormal),
        )
    });
    let qr = g.qr();
    let r = qr.r();
    let mut v = qr.q();
    for j in 0..dim_in {
        let rjj = r[(j, j)];
        if rjj.norm() > 0.0 {
            let phase = rjj / rjj.norm();
            v.column_mut(j).iter_mut().for_each(|z| *z *= phase);
        }
    }
    let kraus = (0..kraus_rank)
        .map(|k| ComplexMatrix::from_fn(dim_out, dim_in, |o, i| v[(o * kraus_rank + k, i)]))
        .collect();
    QuantumChannel::new(dim_in, dim_out, kraus, None).expect("isometry columns are orthonormal")
}

/// Random ensemble of `size` Haar-ish pure states with a random
/// probability vector; deterministic per seed.
pub fn random_pure_ensemble(dim: usize, size: usize, seed: u64) -> Ensemble {
    assert!(size >= 1, "ensemble size must be positive");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut probs: Vec<f64> = (0..size).map(|_| rng.random::<f64>() + 1e-3).collect();
    let total: f64 = probs.iter().sum();
    probs.iter_mut().for_each(|p| *p /= total);
    let states: Vec<ComplexVector> = (0..size).map(|_| gaussian_vector(dim, &mut rng)).collect();
    Ensemble::from_pure_states(probs, &states).expect("construction yields a valid ensemble")
}

/// Two distinct pure-state decompositions of `rho`: its eigendecomposition
/// and the mixture obtained by rotating the square-root vectors with a
/// Haar-random unitary on the probability register.
pub fn two_decompositions(rho: &DensityMatrix, seed: u64) -> (Ensemble, Ensemble) {
    let kept: Vec<(f64, ComplexVector)> = rho
        .eigenvalues()
        .iter()
        .enumerate()
        .filter(|(_, &l)| l > tol::ENTROPY_ZERO)
        .map(|(i, &l)| (l, rho.eigenvectors().column(i).clone_owned()))
        .collect();
    let m = kept.len();
    let eigen = Ensemble::from_pure_states(
        kept.iter().map(|(l, _)| *l).collect(),
        &kept.iter().map(|(_, v)| v.clone()).collect::<Vec<_>>(),
    )
    .expect("eigendecomposition is a valid ensemble");

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let u = haar_unitary(m, &mut rng);
    let mut probs = Vec::with_capacity(m);
    let mut states = Vec::with_capacity(m);
    for j in 0..m {
        let mut v = ComplexVector::zeros(rho.dim());
        for (i, (l, e)) in kept.iter().enumerate() {
            let w = u[(j, i)] * l.sqrt();
            v += e * w;
        }
        let q = v.norm_squared();
        probs.push(q);
        states.push(v.map(|z| z / q.sqrt()));
    }
    let rotated =
        Ensemble::from_pure_states(probs, &states).expect("rotation preserves the mixture");
    (eigen, rotated)
}

// --- the suite runner -------------------------------------------------------------

/// Runs `trials` seeded instances of a suite and aggregates the report.
/// Trials execute in parallel; aggregation is order-independent, so equal
/// `(suite, trials, seed)` give identical reports (except wall time).
pub fn run_suite(suite: SuiteId, trials: usize, seed: u64) -> SuiteReport {
    assert!(trials >= 1, "trials must be positive");
    let started = Instant::now();
    let outcomes: Vec<TrialOutcome> = (0..trials)
        .into_par_iter()
        .map(|t| run_trial(suite, seed.wrapping_add(t as u64), t))
        .collect();
    let tolerance = suite.tolerance();
    let failures = outcomes.iter().filter(|o| o.margin < -tolerance).count();
    let mut worst = 0;
    for (i, o) in outcomes.iter().enumerate().skip(1) {
        if o.margin < outcomes[worst].margin {
            worst = i;
        }
    }
    SuiteReport {
        suite: suite.id().to_string(),
        trials,
        failures,
        worst_slack_bits: outcomes[worst].margin,
        worst_witness: outcomes[worst].witness.clone(),
        elapsed_seconds: started.elapsed().as_secs_f64(),
    }
}

/// Parses a suite id and runs it.
pub fn run_suite_named(suite: &str, trials: usize, seed: u64) -> Result<SuiteReport> {
    Ok(run_suite(SuiteId::from_str(suite)?, trials, seed))
}

fn suite_cfg(seed: u64) -> OptimizerConfig {
    OptimizerConfig {
        restarts: 2,
        max_iters: 2000,
        step_tolerance: 1e-9,
        seed,
    }
}

fn run_trial(suite: SuiteId, trial_seed: u64, trial: usize) -> TrialOutcome {
    match suite {
        SuiteId::DataProcessing => dp_trial(trial_seed, trial),
        SuiteId::Convexity => convexity_trial(trial_seed, trial),
        SuiteId::Additivity => additivity_trial(trial_seed, trial),
        SuiteId::StrongSubadditivity => ssa_trial(trial_seed, trial),
        SuiteId::JointSubadditivity => jsa_trial(trial_seed, trial),
        SuiteId::Monotonicity => monotonicity_trial(trial_seed, trial),
        SuiteId::ExchangeBound => exchange_bound_trial(trial_seed, trial),
        SuiteId::Concavity => concavity_trial(trial_seed, trial),
        SuiteId::Decomposition => decomp_trial(trial_seed, trial),
        SuiteId::BoundChain => bound_trial(trial_seed, trial),
        SuiteId::Eq3 => eq3_trial(trial_seed, trial),
    }
}

fn witness(trial_seed: u64, params: BTreeMap<String, Value>) -> Witness {
    Witness {
        seed: trial_seed,
        params,
    }
}

fn params_of(entries: &[(&str, Value)]) -> BTreeMap<String, Value> {
    entries
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

/// C_E(N2 . N1) <= min(C_E(N1), C_E(N2)).
fn dp_trial(trial_seed: u64, trial: usize) -> TrialOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(trial_seed);
    let s1 = rng.random::<u64>();
    let s2 = rng.random::<u64>();
    let opt = rng.random::<u64>();
    let n1 = random_channel(2, 2, 2, s1);
    let n2 = random_channel(2, 2, 2, s2);
    let chained = compose(&n2, &n1).expect("matching qubit dimensions");
    let ce1 = compute_ce(&n1, &suite_cfg(opt)).value_bits;
    let ce2 = compute_ce(&n2, &suite_cfg(opt.wrapping_add(1000))).value_bits;
    let ce12 = compute_ce(&chained, &suite_cfg(opt.wrapping_add(2000))).value_bits;
    TrialOutcome {
        margin: ce1.min(ce2) - ce12,
        witness: witness(
            trial_seed,
            params_of(&[
                ("trial", json!(trial)),
                ("dim", json!(2)),
                ("kraus_rank", json!(2)),
                ("channel_seed_1", json!(s1)),
                ("channel_seed_2", json!(s2)),
                ("optimizer_seed", json!(opt)),
            ]),
        ),
    }
}

/// C_E(w N1 + (1-w) N2) <= w C_E(N1) + (1-w) C_E(N2).
fn convexity_trial(trial_seed: u64, trial: usize) -> TrialOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(trial_seed);
    let s1 = rng.random::<u64>();
    let s2 = rng.random::<u64>();
    let lambda = rng.random::<f64>();
    let opt = rng.random::<u64>();
    let n1 = random_channel(2, 2, 2, s1);
    let n2 = random_channel(2, 2, 2, s2);
    let mixed = mix(&[n1.clone(), n2.clone()], &[lambda, 1.0 - lambda]).expect("valid mixture");
    let ce1 = compute_ce(&n1, &suite_cfg(opt)).value_bits;
    let ce2 = compute_ce(&n2, &suite_cfg(opt.wrapping_add(1000))).value_bits;
    let ce_mix = compute_ce(&mixed, &suite_cfg(opt.wrapping_add(2000))).value_bits;
    TrialOutcome {
        margin: lambda * ce1 + (1.0 - lambda) * ce2 - ce_mix,
        witness: witness(
            trial_seed,
            params_of(&[
                ("trial", json!(trial)),
                ("dim", json!(2)),
                ("kraus_rank", json!(2)),
                ("channel_seed_1", json!(s1)),
                ("channel_seed_2", json!(s2)),
                ("lambda", json!(lambda)),
                ("optimizer_seed", json!(opt)),
            ]),
        ),
    }
}

/// |C_E(N1 (x) N2) - C_E(N1) - C_E(N2)| small in both directions.
fn additivity_trial(trial_seed: u64, trial: usize) -> TrialOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(trial_seed);
    let s1 = rng.random::<u64>();
    let s2 = rng.random::<u64>();
    let opt = rng.random::<u64>();
    let n1 = random_channel(2, 2, 2, s1);
    let n2 = random_channel(2, 2, 2, s2);
    let joint = tensor(&n1, &n2).expect("tensor of valid channels");
    let ce1 = compute_ce(&n1, &suite_cfg(opt)).value_bits;
    let ce2 = compute_ce(&n2, &suite_cfg(opt.wrapping_add(1000))).value_bits;
    let ce12 = compute_ce(&joint, &suite_cfg(opt.wrapping_add(2000))).value_bits;
    TrialOutcome {
        margin: -(ce12 - ce1 - ce2).abs(),
        witness: witness(
            trial_seed,
            params_of(&[
                ("trial", json!(trial)),
                ("dim", json!(2)),
                ("kraus_rank", json!(2)),
                ("channel_seed_1", json!(s1)),
                ("channel_seed_2", json!(s2)),
                ("optimizer_seed", json!(opt)),
            ]),
        ),
    }
}

fn random_multiqubit_projector(qubits: usize, rng: &mut ChaCha8Rng) -> ComplexMatrix {
    let d = 1usize << qubits;
    let v = gaussian_vector(d, rng);
    let norm = v.norm();
    let psi = v.map(|z| z / norm);
    &psi * psi.adjoint()
}

/// S(AB) + S(BC) >= S(ABC) + S(B) on reductions of a random 4-qubit pure state.
fn ssa_trial(trial_seed: u64, trial: usize) -> TrialOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(trial_seed);
    let proj = random_multiqubit_projector(4, &mut rng);
    let dims = [2usize, 2, 2, 2];
    let s = |keep: &[usize]| {
        entropy_of_psd(&partial_trace(&proj, &dims, keep).expect("valid reduction"))
    };
    TrialOutcome {
        margin: s(&[0, 1]) + s(&[1, 2]) - s(&[0, 1, 2]) - s(&[1]),
        witness: witness(
            trial_seed,
            params_of(&[("trial", json!(trial)), ("local_dims", json!([2, 2, 2, 2]))]),
        ),
    }
}

/// S(AC) + S(BD) + S(CD) >= S(ABCD) + S(C) + S(D) on a random 4-qubit state.
fn jsa_trial(trial_seed: u64, trial: usize) -> TrialOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(trial_seed);
    let proj = random_multiqubit_projector(4, &mut rng);
    let dims = [2usize, 2, 2, 2];
    let s = |keep: &[usize]| {
        entropy_of_psd(&partial_trace(&proj, &dims, keep).expect("valid reduction"))
    };
    let margin = s(&[0, 2]) + s(&[1, 3]) + s(&[2, 3]) - entropy_of_psd(&proj) - s(&[2]) - s(&[3]);
    TrialOutcome {
        margin,
        witness: witness(
            trial_seed,
            params_of(&[("trial", json!(trial)), ("local_dims", json!([2, 2, 2, 2]))]),
        ),
    }
}

/// S(N(rho) || N(sigma)) <= S(rho || sigma), checked when the right side
/// is finite (it is, almost surely, for full-rank random states).
fn monotonicity_trial(trial_seed: u64, trial: usize) -> TrialOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(trial_seed);
    let sr = rng.random::<u64>();
    let ss = rng.random::<u64>();
    let sc = rng.random::<u64>();
    let rho = random_density(4, sr);
    let sigma = random_density(4, ss);
    let ch = random_channel(4, 4, 3, sc);
    let before = relative_entropy(&rho, &sigma).expect("equal dimensions");
    let after = relative_entropy(
        &ch.apply(&rho).expect("matching input"),
        &ch.apply(&sigma).expect("matching input"),
    )
    .expect("equal dimensions");
    // A support-violating right side makes the inequality vacuous; margins
    // stay finite so reports serialize cleanly.
    let margin = if before.is_infinite() {
        1e6
    } else {
        (before.bits() - after.bits()).clamp(-1e6, 1e6)
    };
    TrialOutcome {
        margin,
        witness: witness(
            trial_seed,
            params_of(&[
                ("trial", json!(trial)),
                ("dim", json!(4)),
                ("kraus_rank", json!(3)),
                ("state_seed_1", json!(sr)),
                ("state_seed_2", json!(ss)),
                ("channel_seed", json!(sc)),
            ]),
        ),
    }
}

/// S_exch(N, sum p_i rho_i) >= sum p_i S(N(rho_i)) for pure-state ensembles.
fn exchange_bound_trial(trial_seed: u64, trial: usize) -> TrialOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(trial_seed);
    let se = rng.random::<u64>();
    let sc = rng.random::<u64>();
    let ens = random_pure_ensemble(4, 4, se);
    let ch = random_channel(4, 4, 2, sc);
    let lhs = entropy_exchange(&ch, &ens.average())
        .expect("matching input")
        .bits();
    let mut rhs = 0.0;
    for (p, s) in ens.probabilities().iter().zip(ens.states()) {
        rhs += p * von_neumann_entropy(&ch.apply(s).expect("matching input")).bits();
    }
    TrialOutcome {
        margin: lhs - rhs,
        witness: witness(
            trial_seed,
            params_of(&[
                ("trial", json!(trial)),
                ("dim", json!(4)),
                ("ensemble_size", json!(4)),
                ("kraus_rank", json!(2)),
                ("ensemble_seed", json!(se)),
                ("channel_seed", json!(sc)),
            ]),
        ),
    }
}

/// I(blend, N) >= blended I — concavity of mutual information in the input.
fn concavity_trial(trial_seed: u64, trial: usize) -> TrialOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(trial_seed);
    let s1 = rng.random::<u64>();
    let s2 = rng.random::<u64>();
    let sc = rng.random::<u64>();
    let lambda = rng.random::<f64>();
    let rho1 = random_density(2, s1);
    let rho2 = random_density(2, s2);
    let ch = random_channel(2, 2, 2, sc);
    let blend = DensityMatrix::blend(&rho1, &rho2, lambda).expect("equal dimensions");
    let i_blend = mutual_information(&ch, &blend)
        .expect("matching input")
        .bits();
    let i1 = mutual_information(&ch, &rho1)
        .expect("matching input")
        .bits();
    let i2 = mutual_information(&ch, &rho2)
        .expect("matching input")
        .bits();
    TrialOutcome {
        margin: i_blend - lambda * i1 - (1.0 - lambda) * i2,
        witness: witness(
            trial_seed,
            params_of(&[
                ("trial", json!(trial)),
                ("dim", json!(2)),
                ("kraus_rank", json!(2)),
                ("state_seed_1", json!(s1)),
                ("state_seed_2", json!(s2)),
                ("channel_seed", json!(sc)),
                ("lambda", json!(lambda)),
            ]),
        ),
    }
}

/// chi_out - chi_env agrees across two decompositions of the same state,
/// and S + chi_out - chi_env equals the mutual information.
fn decomp_trial(trial_seed: u64, trial: usize) -> TrialOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(trial_seed);
    let sr = rng.random::<u64>();
    let sc = rng.random::<u64>();
    let su = rng.random::<u64>();
    let rho = random_density(2, sr);
    let ch = random_channel(2, 2, 2, sc);
    let (eigen, rotated) = two_decompositions(&rho, su);
    let r1 = decomposition_report(&ch, &eigen).expect("pure eigen decomposition");
    let r2 = decomposition_report(&ch, &rotated).expect("pure rotated decomposition");
    let mi = mutual_information(&ch, &rho)
        .expect("matching input")
        .bits();
    let cross = ((r1.chi_output_bits - r1.chi_environment_bits)
        - (r2.chi_output_bits - r2.chi_environment_bits))
        .abs();
    let dev = cross
        .max((r1.mutual_information_bits - mi).abs())
        .max((r2.mutual_information_bits - mi).abs());
    TrialOutcome {
        margin: -dev,
        witness: witness(
            trial_seed,
            params_of(&[
                ("trial", json!(trial)),
                ("dim", json!(2)),
                ("kraus_rank", json!(2)),
                ("state_seed", json!(sr)),
                ("channel_seed", json!(sc)),
                ("unitary_seed", json!(su)),
            ]),
        ),
    }
}

/// C_1 <= C_E <= log2(d) + C_1 on a random catalog channel (d = 2).
fn bound_trial(trial_seed: u64, trial: usize) -> TrialOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(trial_seed);
    let families = [
        "identity",
        "depolarizing",
        "dephasing",
        "amplitude_damping",
        "erasure",
    ];
    let family = families[rng.random_range(0..families.len())];
    let param = rng.random::<f64>();
    let opt = rng.random::<u64>();
    let mut params = BTreeMap::new();
    if let Some(key) = crate::channels::family_parameter(family).expect("catalog family") {
        params.insert(key.to_string(), param);
    }
    let ch = standard_channel(family, &params).expect("catalog parameters in range");
    let ce = compute_ce(&ch, &suite_cfg(opt)).value_bits;
    let c1 = compute_one_shot_c1(
        &ch,
        &OptimizerConfig {
            restarts: 4,
            seed: opt.wrapping_add(1000),
            ..OptimizerConfig::default()
        },
    )
    .value_bits;
    // C_1 is a lower bound; a shortfall can only relax the first check
    // and tighten the second, never fake a violation of the first.
    let margin = (ce - c1).min(1.0 + c1 - ce);
    TrialOutcome {
        margin,
        witness: witness(
            trial_seed,
            params_of(&[
                ("trial", json!(trial)),
                ("family", json!(family)),
                ("param", json!(param)),
                ("optimizer_seed", json!(opt)),
            ]),
        ),
    }
}

/// Mutual information equals S((N (x) I)(phi) || N(rho) (x) rho_B).
fn eq3_trial(trial_seed: u64, trial: usize) -> TrialOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(trial_seed);
    let sr = rng.random::<u64>();
    let sc = rng.random::<u64>();
    let rho = random_density(2, sr);
    let ch = random_channel(2, 2, 2, sc);
    let mi = mutual_information(&ch, &rho)
        .expect("matching input")
        .bits();
    let phi = purify(&rho);
    let extended = ch.apply_extended(&phi).expect("matching input");
    let product = DensityMatrix::tensor(&ch.apply(&rho).expect("matching input"), &phi.reduced_b());
    let rel = relative_entropy(&extended, &product)
        .expect("equal dimensions")
        .bits();
    TrialOutcome {
        margin: -(mi - rel).abs(),
        witness: witness(
            trial_seed,
            params_of(&[
                ("trial", json!(trial)),
                ("dim", json!(2)),
                ("kraus_rank", json!(2)),
                ("state_seed", json!(sr)),
                ("channel_seed", json!(sc)),
            ]),
        ),
    }
}

// --- tests -------------------------------------------------------------------------
