//! Quantum channels in Kraus form, with Choi and Stinespring views, a
//! small catalog of standard families, and the compositions the capacity
//! suites need.
//!
//! A channel `N: rho -> sum_k E_k rho E_k^dagger` is stored as its Kraus
//! operators (`dim_out x dim_in` each) and validated as trace-preserving
//! at construction: `sum_k E_k^dagger E_k = I` within [`tol::CPTP_TOL`].
//! Complete positivity is automatic in this representation.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::entropy::Ensemble;
use crate::qmat::{
    self, max_abs_diff, partial_trace, tensor_product, ComplexMatrix, DensityMatrix,
    PureBipartiteState,
};
use crate::tol;
use crate::{Error, Result};

// --- validation -------------------------------------------------------------

/// Outcome of the trace-preservation check `sum_k E_k^dagger E_k = I`.
#[derive(Clone, Copy, Debug)]
pub struct CptpReport {
    /// Whether the deviation is within [`tol::CPTP_TOL`].
    pub passed: bool,
    /// Largest absolute entry of `sum_k E_k^dagger E_k - I`.
    pub deviation: f64,
}

/// Checks a raw Kraus family for trace preservation on a `dim_in` input
/// space. Complete positivity needs no check in Kraus form.
pub fn validate_kraus(dim_in: usize, kraus: &[ComplexMatrix]) -> CptpReport {
    let mut sum = ComplexMatrix::zeros(dim_in, dim_in);
    for e in kraus {
        sum += e.adjoint() * e;
    }
    let deviation = max_abs_diff(&sum, &ComplexMatrix::identity(dim_in, dim_in));
    CptpReport {
        passed: deviation <= tol::CPTP_TOL,
        deviation,
    }
}

// --- the channel type --------------------------------------------------------

/// A completely positive trace-preserving map in Kraus form.
#[derive(Clone, Debug)]
pub struct QuantumChannel {
    dim_in: usize,
    dim_out: usize,
    kraus: Vec<ComplexMatrix>,
    name: Option<String>,
}

impl QuantumChannel {
    /// Validates shapes, finiteness, and trace preservation.
    pub fn new(
        dim_in: usize,
        dim_out: usize,
        kraus: Vec<ComplexMatrix>,
        name: Option<String>,
    ) -> Result<Self> {
        if dim_in == 0 || dim_out == 0 {
            return Err(Error::DimensionMismatch(
                "channel dimensions must be positive".into(),
            ));
        }
        if kraus.is_empty() {
            return Err(Error::DimensionMismatch(
                "channel needs at least one Kraus operator".into(),
            ));
        }
        for (k, e) in kraus.iter().enumerate() {
            if e.nrows() != dim_out || e.ncols() != dim_in {
                return Err(Error::DimensionMismatch(format!(
                    "Kraus operator {} is {}x{}, expected {}x{}",
                    k,
                    e.nrows(),
                    e.ncols(),
                    dim_out,
                    dim_in
                )));
            }
            if !qmat::is_finite(e) {
                return Err(Error::NonFinite);
            }
        }
        let report = validate_kraus(dim_in, &kraus);
        if !report.passed {
            return Err(Error::NotTracePreserving(report.deviation));
        }
        Ok(Self {
            dim_in,
            dim_out,
            kraus,
            name,
        })
    }

    pub fn dim_in(&self) -> usize {
        self.dim_in
    }

    pub fn dim_out(&self) -> usize {
        self.dim_out
    }

    /// The Kraus operators, each `dim_out x dim_in`.
    pub fn kraus(&self) -> &[ComplexMatrix] {
        &self.kraus
    }

    /// Number of Kraus operators (the environment dimension of the
    /// dilation built from this representation).
    pub fn kraus_rank(&self) -> usize {
        self.kraus.len()
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Re-checks trace preservation of the stored representation.
    pub fn validate_cptp(&self) -> CptpReport {
        validate_kraus(self.dim_in, &self.kraus)
    }

    /// `sum_k E_k m E_k^dagger` on a raw matrix (no validation).
    pub(crate) fn apply_raw(&self, m: &ComplexMatrix) -> ComplexMatrix {
        let mut out = ComplexMatrix::zeros(self.dim_out, self.dim_out);
        for e in &self.kraus {
            out += e * m * e.adjoint();
        }
        out
    }

    /// Applies the channel to a density matrix.
    pub fn apply(&self, rho: &DensityMatrix) -> Result<DensityMatrix> {
        if rho.dim() != self.dim_in {
            return Err(Error::DimensionMismatch(format!(
                "state dimension {} does not match channel input {}",
                rho.dim(),
                self.dim_in
            )));
        }
        Ok(DensityMatrix::from_psd(&self.apply_raw(rho.matrix())))
    }

    /// `(N (x) I)` on a bipartite pure state, acting on the `A` factor:
    /// raw output on `dim_out x dim_b` composite indices.
    ///
    /// Uses the reshape identity `(E (x) I)|psi> = E M` with
    /// `M[a, b] = psi[a * dim_b + b]`.
    pub(crate) fn apply_extended_raw(&self, psi: &PureBipartiteState) -> ComplexMatrix {
        let m = psi.amplitude_matrix();
        let db = psi.dim_b();
        let n = self.dim_out * db;
        let mut out = ComplexMatrix::zeros(n, n);
        for e in &self.kraus {
            let em = e * &m;
            // |v_k> = vec(E_k M) with A slowest; accumulate |v_k><v_k|.
            for r in 0..n {
                let vr = em[(r / db, r % db)];
                if vr.norm_sqr() == 0.0 {
                    continue;
                }
                for c in 0..n {
                    out[(r, c)] += vr * em[(c / db, c % db)].conj();
                }
            }
        }
        out
    }

    /// `(N (x) I)(|psi><psi|)` for a bipartite pure state whose `A` factor
    /// matches the channel input; the identity acts on `B`.
    pub fn apply_extended(&self, psi: &PureBipartiteState) -> Result<DensityMatrix> {
        if psi.dim_a() != self.dim_in {
            return Err(Error::DimensionMismatch(format!(
                "state A-dimension {} does not match channel input {}",
                psi.dim_a(),
                self.dim_in
            )));
        }
        Ok(DensityMatrix::from_psd(&self.apply_extended_raw(psi)))
    }

    /// The complementary channel to the environment of the Stinespring
    /// dilation built from this Kraus representation:
    /// `[N_c(rho)]_{kl} = Tr(E_k rho E_l^dagger)`.
    ///
    /// The environment dimension, and hence the complementary channel
    /// itself, depends on the Kraus representation; entropies of its
    /// outputs do not.
    pub fn complementary(&self) -> QuantumChannel {
        let rank = self.kraus.len();
        let mut comp = Vec::with_capacity(self.dim_out);
        for j in 0..self.dim_out {
            comp.push(ComplexMatrix::from_fn(rank, self.dim_in, |k, i| {
                self.kraus[k][(j, i)]
            }));
        }
        QuantumChannel {
            dim_in: self.dim_in,
            dim_out: rank,
            kraus: comp,
            name: None,
        }
    }

    /// The Stinespring isometry `V: in -> out (x) env` assembled from the
    /// Kraus operators, `V[(o, k), i] = E_k[o, i]`.
    pub fn dilation(&self) -> StinespringDilation {
        let env = self.kraus.len();
        let isometry = ComplexMatrix::from_fn(self.dim_out * env, self.dim_in, |row, i| {
            self.kraus[row % env][(row / env, i)]
        });
        StinespringDilation {
            dim_in: self.dim_in,
            dim_out: self.dim_out,
            dim_env: env,
            isometry,
        }
    }

    /// Choi state `(N (x) I)(|Phi><Phi|)` of the channel, where `|Phi>` is
    /// the maximally entangled state on `in (x) in`; unit-trace
    /// normalization, output factor slowest.
    pub fn choi_of(&self) -> ChoiMatrix {
        let d = self.dim_in;
        let mut amps = nalgebra::DVector::zeros(d * d);
        let w = Complex64::new(1.0 / (d as f64).sqrt(), 0.0);
        for i in 0..d {
            amps[i * d + i] = w;
        }
        let phi = PureBipartiteState::new_normalized(d, d, amps);
        ChoiMatrix {
            dim_in: d,
            dim_out: self.dim_out,
            state: DensityMatrix::from_psd(&self.apply_extended_raw(&phi)),
        }
    }

    /// Rebuilds the channel in its canonical Kraus form (orthogonal
    /// operators, descending Choi weights) via the Choi eigensystem.
    pub fn canonicalize(&self) -> QuantumChannel {
        let mut ch = kraus_from_choi(&self.choi_of())
            .expect("Choi state of a valid channel is a valid channel");
        ch.name = self.name.clone();
        ch
    }

    /// Pushes every member of an ensemble through the channel.
    pub fn apply_ensemble(&self, ensemble: &Ensemble) -> Result<Ensemble> {
        let states = ensemble
            .states()
            .iter()
            .map(|s| self.apply(s))
            .collect::<Result<Vec<_>>>()?;
        Ensemble::new(ensemble.probabilities().to_vec(), states)
    }

    /// Pushes every member of an ensemble to the environment.
    pub fn complementary_ensemble(&self, ensemble: &Ensemble) -> Result<Ensemble> {
        self.complementary().apply_ensemble(ensemble)
    }
}

/// Environment output state under `ch`, with entries
/// `[N_c(rho)]_{kl} = Tr(E_k rho E_l^dagger)` computed directly from the
/// Kraus family (see [`QuantumChannel::complementary`] for the map
/// itself). Dimension: the channel's Kraus rank.
pub fn complementary(ch: &QuantumChannel, rho: &DensityMatrix) -> Result<DensityMatrix> {
    if rho.dim() != ch.dim_in {
        return Err(Error::DimensionMismatch(format!(
            "channel expects input dimension {}, state has dimension {}",
            ch.dim_in,
            rho.dim()
        )));
    }
    let rank = ch.kraus.len();
    let pushed: Vec<ComplexMatrix> = ch.kraus.iter().map(|e| e * rho.matrix()).collect();
    let env = ComplexMatrix::from_fn(rank, rank, |k, l| {
        let mut entry = Complex64::new(0.0, 0.0);
        for o in 0..ch.dim_out {
            for j in 0..ch.dim_in {
                entry += pushed[k][(o, j)] * ch.kraus[l][(o, j)].conj();
            }
        }
        entry
    });
    Ok(DensityMatrix::from_psd(&env))
}

/// Largest single-entry disagreement of two channels' actions on the
/// matrix-unit basis of the input space; zero iff the channels implement
/// the same map.
pub fn action_distance(a: &QuantumChannel, b: &QuantumChannel) -> Result<f64> {
    if a.dim_in != b.dim_in || a.dim_out != b.dim_out {
        return Err(Error::DimensionMismatch(format!(
            "cannot compare a {}->{} channel with a {}->{} channel",
            a.dim_in, a.dim_out, b.dim_in, b.dim_out
        )));
    }
    let d = a.dim_in;
    let mut worst = 0.0f64;
    for i in 0..d {
        for j in 0..d {
            let mut unit = ComplexMatrix::zeros(d, d);
            unit[(i, j)] = Complex64::new(1.0, 0.0);
            worst = worst.max(max_abs_diff(&a.apply_raw(&unit), &b.apply_raw(&unit)));
        }
    }
    Ok(worst)
}

// --- Choi and Stinespring views ----------------------------------------------

/// Unit-trace Choi state of a channel, output factor slowest.
#[derive(Clone, Debug)]
pub struct ChoiMatrix {
    dim_in: usize,
    dim_out: usize,
    state: DensityMatrix,
}

impl ChoiMatrix {
    /// Validates a candidate Choi state: correct joint dimension and input
    /// marginal `I / dim_in` within [`tol::CHOI_MARGINAL_TOL`]. Positivity
    /// and unit trace come with the [`DensityMatrix`].
    pub fn new(dim_in: usize, dim_out: usize, state: DensityMatrix) -> Result<Self> {
        if dim_in == 0 || dim_out == 0 || state.dim() != dim_in * dim_out {
            return Err(Error::InvalidChoi(format!(
                "state dimension {} does not match dim_out*dim_in = {}",
                state.dim(),
                dim_in * dim_out
            )));
        }
        let marginal = partial_trace(state.matrix(), &[dim_out, dim_in], &[1])?;
        let target = ComplexMatrix::identity(dim_in, dim_in).map(|z| z / dim_in as f64);
        let dev = max_abs_diff(&marginal, &target);
        if dev > tol::CHOI_MARGINAL_TOL {
            return Err(Error::InvalidChoi(format!(
                "input marginal deviates from I/{dim_in} by {dev:.3e}"
            )));
        }
        Ok(Self {
            dim_in,
            dim_out,
            state,
        })
    }

    pub fn dim_in(&self) -> usize {
        self.dim_in
    }

    pub fn dim_out(&self) -> usize {
        self.dim_out
    }

    /// The Choi state as a density matrix on `out (x) in`.
    pub fn state(&self) -> &DensityMatrix {
        &self.state
    }
}

/// Stinespring isometry `V: in -> out (x) env` with the output factor
/// slowest, so `N(rho) = Tr_env(V rho V^dagger)`.
#[derive(Clone, Debug)]
pub struct StinespringDilation {
    dim_in: usize,
    dim_out: usize,
    dim_env: usize,
    isometry: ComplexMatrix,
}

impl StinespringDilation {
    pub fn dim_in(&self) -> usize {
        self.dim_in
    }

    pub fn dim_out(&self) -> usize {
        self.dim_out
    }

    pub fn dim_env(&self) -> usize {
        self.dim_env
    }

    /// The isometry matrix, `(dim_out * dim_env) x dim_in`.
    pub fn isometry(&self) -> &ComplexMatrix {
        &self.isometry
    }

    /// The conjugated state `V rho V^dagger` on `out (x) env`.
    pub fn conjugate(&self, rho: &DensityMatrix) -> Result<ComplexMatrix> {
        if rho.dim() != self.dim_in {
            return Err(Error::DimensionMismatch(format!(
                "state dimension {} does not match dilation input {}",
                rho.dim(),
                self.dim_in
            )));
        }
        Ok(&self.isometry * rho.matrix() * self.isometry.adjoint())
    }
}

// --- conversions ---------------------------------------------------------------

/// Extracts a canonical Kraus representation from a Choi state: one
/// operator per Choi eigenvalue above [`tol::KRAUS_EIGEN_CUTOFF`], ordered
/// by descending weight.
pub fn kraus_from_choi(choi: &ChoiMatrix) -> Result<QuantumChannel> {
    let (din, dout) = (choi.dim_in(), choi.dim_out());
    let scale = din as f64;
    let mut kraus = Vec::new();
    for (j, &lambda) in choi.state().eigenvalues().iter().enumerate() {
        if lambda <= tol::KRAUS_EIGEN_CUTOFF {
            break;
        }
        let w = (scale * lambda).sqrt();
        let v = choi.state().eigenvectors().column(j);
        kraus.push(ComplexMatrix::from_fn(dout, din, |o, i| v[o * din + i] * w));
    }
    QuantumChannel::new(din, dout, kraus, None)
}

// --- composition ----------------------------------------------------------------

/// Sequential composition `after . before` (apply `before` first).
pub fn compose(after: &QuantumChannel, before: &QuantumChannel) -> Result<QuantumChannel> {
    if before.dim_out != after.dim_in {
        return Err(Error::DimensionMismatch(format!(
            "cannot chain {}->{} into {}->{}",
            before.dim_in, before.dim_out, after.dim_in, after.dim_out
        )));
    }
    let mut kraus = Vec::with_capacity(after.kraus.len() * before.kraus.len());
    for a in &after.kraus {
        for b in &before.kraus {
            kraus.push(a * b);
        }
    }
    QuantumChannel::new(before.dim_in, after.dim_out, kraus, None)
}

/// Parallel composition `a (x) b`, first factor slowest.
pub fn tensor(a: &QuantumChannel, b: &QuantumChannel) -> Result<QuantumChannel> {
    let mut kraus = Vec::with_capacity(a.kraus.len() * b.kraus.len());
    for ka in &a.kraus {
        for kb in &b.kraus {
            kraus.push(tensor_product(ka, kb));
        }
    }
    QuantumChannel::new(a.dim_in * b.dim_in, a.dim_out * b.dim_out, kraus, None)
}

/// Convex mixture `sum_i w_i N_i` of channels with equal dimensions.
pub fn mix(channels: &[QuantumChannel], weights: &[f64]) -> Result<QuantumChannel> {
    if channels.is_empty() || channels.len() != weights.len() {
        return Err(Error::InvalidProbabilities(format!(
            "{} channels with {} weights",
            channels.len(),
            weights.len()
        )));
    }
    if weights.iter().any(|&w| !w.is_finite() || w < 0.0) {
        return Err(Error::InvalidProbabilities(
            "weights must be finite and nonnegative".into(),
        ));
    }
    let total: f64 = weights.iter().sum();
    if (total - 1.0).abs() > tol::PROB_SUM_TOL {
        return Err(Error::InvalidProbabilities(format!(
            "weights sum to {total}, expected 1"
        )));
    }
    let (din, dout) = (channels[0].dim_in, channels[0].dim_out);
    let mut kraus = Vec::new();
    for (ch, &w) in channels.iter().zip(weights) {
        if ch.dim_in != din || ch.dim_out != dout {
            return Err(Error::DimensionMismatch(
                "mixed channels must share dimensions".into(),
            ));
        }
        let s = w.sqrt();
        for e in &ch.kraus {
            kraus.push(e.map(|z| z * s));
        }
    }
    QuantumChannel::new(din, dout, kraus, None)
}

// --- standard families ------------------------------------------------------------

/// Identity channel on a `d`-dimensional system.
pub fn identity_channel(d: usize) -> Result<QuantumChannel> {
    if d == 0 {
        return Err(Error::ParameterOutOfRange("d must be positive".into()));
    }
    QuantumChannel::new(
        d,
        d,
        vec![ComplexMatrix::identity(d, d)],
        Some(format!("identity(d={d})")),
    )
}

/// Depolarizing channel `rho -> (1 - p) rho + p I/d`.
///
/// Kraus form uses the discrete Weyl set `W_{ab} = X^a Z^b` with weight
/// `sqrt(p)/d` on each nonidentity element and `sqrt(1 - p + p/d^2)` on
/// the identity.
pub fn depolarizing(p: f64, d: usize) -> Result<QuantumChannel> {
    check_unit_interval("p", p)?;
    if d == 0 {
        return Err(Error::ParameterOutOfRange("d must be positive".into()));
    }
    let mut kraus = Vec::with_capacity(d * d);
    let c0 = (1.0 - p + p / (d * d) as f64).sqrt();
    let cw = p.sqrt() / d as f64;
    for a in 0..d {
        for b in 0..d {
            let w = if a == 0 && b == 0 { c0 } else { cw };
            if w == 0.0 {
                continue;
            }
            kraus.push(weyl(d, a, b).map(|z| z * w));
        }
    }
    QuantumChannel::new(d, d, kraus, Some(format!("depolarizing(p={p}, d={d})")))
}

/// Discrete Weyl operator `X^a Z^b` on dimension `d`.
fn weyl(d: usize, a: usize, b: usize) -> ComplexMatrix {
    let omega = 2.0 * std::f64::consts::PI / d as f64;
    ComplexMatrix::from_fn(d, d, |r, c| {
        if r == (c + a) % d {
            Complex64::from_polar(1.0, omega * (b * c) as f64)
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

/// Qubit phase-damping channel with Kraus set
/// `{sqrt(1 - lambda/2) I, sqrt(lambda/2) Z}`: off-diagonals shrink by
/// `1 - lambda`, populations are untouched.
pub fn dephasing(lambda: f64) -> Result<QuantumChannel> {
    check_unit_interval("lambda", lambda)?;
    let id = ComplexMatrix::identity(2, 2);
    let z = ComplexMatrix::from_fn(2, 2, |r, c| match (r, c) {
        (0, 0) => Complex64::new(1.0, 0.0),
        (1, 1) => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, 0.0),
    });
    let kraus = vec![
        id.map(|v| v * (1.0 - lambda / 2.0).sqrt()),
        z.map(|v| v * (lambda / 2.0).sqrt()),
    ];
    QuantumChannel::new(2, 2, kraus, Some(format!("dephasing(lambda={lambda})")))
}

/// Qubit amplitude-damping channel with decay probability `gamma`:
/// `K_0 = [[1, 0], [0, sqrt(1 - gamma)]]`,
/// `K_1 = [[0, sqrt(gamma)], [0, 0]]`.
pub fn amplitude_damping(gamma: f64) -> Result<QuantumChannel> {
    check_unit_interval("gamma", gamma)?;
    let k0 = ComplexMatrix::from_fn(2, 2, |r, c| match (r, c) {
        (0, 0) => Complex64::new(1.0, 0.0),
        (1, 1) => Complex64::new((1.0 - gamma).sqrt(), 0.0),
        _ => Complex64::new(0.0, 0.0),
    });
    let k1 = ComplexMatrix::from_fn(2, 2, |r, c| {
        if (r, c) == (0, 1) {
            Complex64::new(gamma.sqrt(), 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    QuantumChannel::new(
        2,
        2,
        vec![k0, k1],
        Some(format!("amplitude_damping(gamma={gamma})")),
    )
}

/// Erasure channel on dimension `d`: with probability `p` the input is
/// replaced by an orthogonal flag state `|d>`, otherwise it passes through
/// embedded in the `d + 1`-dimensional output space.
pub fn erasure(p: f64, d: usize) -> Result<QuantumChannel> {
    check_unit_interval("p", p)?;
    if d == 0 {
        return Err(Error::ParameterOutOfRange("d must be positive".into()));
    }
    let keep = ComplexMatrix::from_fn(d + 1, d, |r, c| {
        if r == c {
            Complex64::new((1.0 - p).sqrt(), 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    let mut kraus = vec![keep];
    let s = p.sqrt();
    for i in 0..d {
        kraus.push(ComplexMatrix::from_fn(d + 1, d, |r, c| {
            if r == d && c == i {
                Complex64::new(s, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        }));
    }
    QuantumChannel::new(d, d + 1, kraus, Some(format!("erasure(p={p}, d={d})")))
}

fn check_unit_interval(key: &str, value: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&value) {
        return Err(Error::ParameterOutOfRange(format!(
            "{key} = {value} outside [0, 1]"
        )));
    }
    Ok(())
}

/// Builds a catalog channel by family name.
///
/// Families and parameters (all parameters `f64`, dimensions must be
/// integral): `identity {d}`, `depolarizing {p, d}`, `dephasing {lambda}`,
/// `amplitude_damping {gamma}`, `erasure {p, d}`. `d` defaults to 2.
pub fn standard_channel(family: &str, params: &BTreeMap<String, f64>) -> Result<QuantumChannel> {
    let allowed: &[&str] = match family {
        "identity" => &["d"],
        "depolarizing" | "erasure" => &["p", "d"],
        "dephasing" => &["lambda"],
        "amplitude_damping" => &["gamma"],
        _ => return Err(Error::UnknownFamily(family.to_string())),
    };
    for key in params.keys() {
        if !allowed.contains(&key.as_str()) {
            return Err(Error::ParameterOutOfRange(format!(
                "unexpected parameter '{key}' for family '{family}'"
            )));
        }
    }
    match family {
        "identity" => identity_channel(dim_param(params, "d")?),
        "depolarizing" => depolarizing(
            required_param(params, "p", family)?,
            dim_param(params, "d")?,
        ),
        "dephasing" => dephasing(required_param(params, "lambda", family)?),
        "amplitude_damping" => amplitude_damping(required_param(params, "gamma", family)?),
        "erasure" => erasure(
            required_param(params, "p", family)?,
            dim_param(params, "d")?,
        ),
        _ => unreachable!(),
    }
}

/// The sweepable parameter key of a catalog family, if it has one.
pub fn family_parameter(family: &str) -> Result<Option<&'static str>> {
    match family {
        "identity" => Ok(None),
        "depolarizing" | "erasure" => Ok(Some("p")),
        "dephasing" => Ok(Some("lambda")),
        "amplitude_damping" => Ok(Some("gamma")),
        _ => Err(Error::UnknownFamily(family.to_string())),
    }
}

fn required_param(params: &BTreeMap<String, f64>, key: &str, family: &str) -> Result<f64> {
    params.get(key).copied().ok_or_else(|| {
        Error::ParameterOutOfRange(format!("family '{family}' requires parameter '{key}'"))
    })
}

fn dim_param(params: &BTreeMap<String, f64>, key: &str) -> Result<usize> {
    let raw = params.get(key).copied().unwrap_or(2.0);
    if !raw.is_finite() || raw < 1.0 || raw.fract() != 0.0 {
        return Err(Error::ParameterOutOfRange(format!(
            "{key} = {raw} is not a positive integer"
        )));
    }
    Ok(raw as usize)
}

// --- tests ------------------------------------------------------------------------
