//! Dense complex-matrix kernel: density matrices, bipartite pure states,
//! tensor products, partial traces, Hermitian spectra, purification.
//!
//! Composite indices are row-major with the first subsystem slowest:
//! basis ket `|a>|b>` of an `A (x) B` system sits at linear index
//! `a * dim_b + b`. Eigenvalues are always reported in descending order
//! with eigenvector columns in matching order.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::tol;
use crate::{Error, Result};

/// Dense complex matrix, the substrate for every operator in the crate.
pub type ComplexMatrix = DMatrix<Complex64>;

/// Dense complex vector (state amplitudes).
pub type ComplexVector = DVector<Complex64>;

// --- free helpers ---------------------------------------------------------

pub(crate) fn is_finite(m: &ComplexMatrix) -> bool {
    m.iter().all(|z| z.re.is_finite() && z.im.is_finite())
}

/// Largest absolute entry of `a - b`.
pub fn max_abs_diff(a: &ComplexMatrix, b: &ComplexMatrix) -> f64 {
    (a - b).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Largest absolute entry of `m - m^dagger`.
pub fn hermiticity_deviation(m: &ComplexMatrix) -> f64 {
    max_abs_diff(m, &m.adjoint())
}

fn hermitize(m: &ComplexMatrix) -> ComplexMatrix {
    (m + m.adjoint()).map(|z| z * 0.5)
}

/// Kronecker product with the first factor slowest, so that
/// `tensor_product(a, b)` acts on `|a>|b>` composite indices.
pub fn tensor_product(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    a.kronecker(b)
}

/// Eigendecomposition of a Hermitian matrix.
///
/// Returns eigenvalues in descending order and the unitary of eigenvector
/// columns in matching order. Rejects non-square, non-finite, or
/// non-Hermitian (beyond [`tol::HERMITIAN_TOL`]) input.
pub fn hermitian_spectrum(m: &ComplexMatrix) -> Result<(Vec<f64>, ComplexMatrix)> {
    if m.nrows() != m.ncols() || m.nrows() == 0 {
        return Err(Error::DimensionMismatch(format!(
            "expected a nonempty square matrix, got {}x{}",
            m.nrows(),
            m.ncols()
        )));
    }
    if !is_finite(m) {
        return Err(Error::NonFinite);
    }
    let dev = hermiticity_deviation(m);
    if dev > tol::HERMITIAN_TOL {
        return Err(Error::NotHermitian(dev));
    }
    Ok(hermitian_spectrum_unchecked(m))
}

/// Spectrum of a matrix already known to be Hermitian (symmetrized before
/// factoring to keep the solver honest against round-off).
pub(crate) fn hermitian_spectrum_unchecked(m: &ComplexMatrix) -> (Vec<f64>, ComplexMatrix) {
    let n = m.nrows();
    let eig = nalgebra::SymmetricEigen::new(hermitize(m));
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));
    let values: Vec<f64> = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let mut vectors = ComplexMatrix::zeros(n, n);
    for (c, &i) in order.iter().enumerate() {
        vectors.set_column(c, &eig.eigenvectors.column(i));
    }
    (values, vectors)
}

/// Partial trace over the complement of `keep`.
///
/// `dims` lists the subsystem dimensions, first subsystem slowest; `keep`
/// lists the subsystem positions to retain. The result is ordered by the
/// kept subsystems in their original order.
pub fn partial_trace(m: &ComplexMatrix, dims: &[usize], keep: &[usize]) -> Result<ComplexMatrix> {
    let total: usize = dims.iter().product();
    if dims.is_empty() || dims.contains(&0) {
        return Err(Error::DimensionMismatch(format!(
            "subsystem dims must be nonempty and positive, got {dims:?}"
        )));
    }
    if m.nrows() != total || m.ncols() != total {
        return Err(Error::DimensionMismatch(format!(
            "subsystem dims {:?} multiply to {}, matrix is {}x{}",
            dims,
            total,
            m.nrows(),
            m.ncols()
        )));
    }
    let mut kept = keep.to_vec();
    kept.sort_unstable();
    kept.dedup();
    if kept.len() != keep.len() || kept.iter().any(|&k| k >= dims.len()) || kept.is_empty() {
        return Err(Error::DimensionMismatch(format!(
            "keep {:?} must be a nonempty set of subsystem positions below {}",
            keep,
            dims.len()
        )));
    }
    let traced: Vec<usize> = (0..dims.len()).filter(|i| !kept.contains(i)).collect();

    let mut stride = vec![1usize; dims.len()];
    for i in (0..dims.len().saturating_sub(1)).rev() {
        stride[i] = stride[i + 1] * dims[i + 1];
    }
    let keep_offsets = subsystem_offsets(&kept, dims, &stride);
    let trace_offsets = subsystem_offsets(&traced, dims, &stride);

    let n = keep_offsets.len();
    let mut out = ComplexMatrix::zeros(n, n);
    for (i, &ro) in keep_offsets.iter().enumerate() {
        for (j, &co) in keep_offsets.iter().enumerate() {
            let mut acc = Complex64::new(0.0, 0.0);
            for &eo in &trace_offsets {
                acc += m[(ro + eo, co + eo)];
            }
            out[(i, j)] = acc;
        }
    }
    Ok(out)
}

/// Linear offsets spanned by the listed subsystems, first listed slowest.
fn subsystem_offsets(subsys: &[usize], dims: &[usize], stride: &[usize]) -> Vec<usize> {
    let mut offsets = vec![0usize];
    for &s in subsys {
        let mut next = Vec::with_capacity(offsets.len() * dims[s]);
        for &o in &offsets {
            for v in 0..dims[s] {
                next.push(o + v * stride[s]);
            }
        }
        offsets = next;
    }
    offsets
}

// --- density matrices -----------------------------------------------------

/// A validated density matrix with its spectral decomposition cached.
///
/// Construction enforces Hermiticity, unit trace, and positive
/// semidefiniteness; eigenvalues in `[-1e-8, 0)` are clipped to zero and
/// the spectrum renormalized, anything more negative is rejected. The
/// stored matrix is rebuilt from the clipped spectrum, so the cached
/// eigensystem and the matrix always agree exactly.
#[derive(Clone, Debug)]
pub struct DensityMatrix {
    dim: usize,
    matrix: ComplexMatrix,
    eigenvalues: Vec<f64>,
    eigenvectors: ComplexMatrix,
}

impl DensityMatrix {
    /// Validates and spectrally caches a candidate density matrix.
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        if matrix.nrows() != matrix.ncols() || matrix.nrows() == 0 {
            return Err(Error::DimensionMismatch(format!(
                "density matrix must be square and nonempty, got {}x{}",
                matrix.nrows(),
                matrix.ncols()
            )));
        }
        if !is_finite(&matrix) {
            return Err(Error::NonFinite);
        }
        let dev = hermiticity_deviation(&matrix);
        if dev > tol::HERMITIAN_TOL {
            return Err(Error::NotHermitian(dev));
        }
        let trace = matrix.trace().re;
        if (trace - 1.0).abs() > tol::TRACE_TOL {
            return Err(Error::InvalidDensityMatrix(format!(
                "trace is {trace}, expected 1"
            )));
        }
        let (values, vectors) = hermitian_spectrum_unchecked(&matrix);
        Self::from_spectrum(values, vectors)
    }

    /// Builds from a Hermitian eigensystem (descending values, matching
    /// columns), clipping tiny negatives and renormalizing to unit trace.
    pub(crate) fn from_spectrum(mut values: Vec<f64>, vectors: ComplexMatrix) -> Result<Self> {
        for v in values.iter_mut() {
            if *v < 0.0 {
                if *v < -tol::EIGENVALUE_CLIP {
                    return Err(Error::InvalidDensityMatrix(format!(
                        "negative eigenvalue {v}"
                    )));
                }
                *v = 0.0;
            }
        }
        let total: f64 = values.iter().sum();
        if total <= 0.0 || !total.is_finite() {
            return Err(Error::InvalidDensityMatrix(format!(
                "spectrum sums to {total}"
            )));
        }
        for v in values.iter_mut() {
            *v /= total;
        }
        let dim = vectors.nrows();
        let mut scaled = vectors.clone();
        for (c, &v) in values.iter().enumerate() {
            scaled.column_mut(c).iter_mut().for_each(|z| *z *= v);
        }
        let matrix = &scaled * vectors.adjoint();
        Ok(Self {
            dim,
            matrix,
            eigenvalues: values,
            eigenvectors: vectors,
        })
    }

    /// Builds from a matrix that is positive semidefinite and unit-trace
    /// by construction (channel outputs, reductions, mixtures). Panics on
    /// violation, since that is a bug in the caller, not bad input.
    pub(crate) fn from_psd(matrix: &ComplexMatrix) -> Self {
        let (values, vectors) = hermitian_spectrum_unchecked(matrix);
        Self::from_spectrum(values, vectors).expect("matrix positive semidefinite by construction")
    }

    /// The pure state `|psi><psi|` for a normalizable amplitude vector.
    pub fn pure(state: &ComplexVector) -> Result<Self> {
        if state.is_empty() {
            return Err(Error::InvalidPureState("empty amplitude vector".into()));
        }
        if !state.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::InvalidPureState("non-finite amplitudes".into()));
        }
        let norm = state.norm();
        if norm <= 0.0 {
            return Err(Error::InvalidPureState("zero amplitude vector".into()));
        }
        let psi = state.map(|z| z / norm);
        let dim = psi.len();
        let matrix = &psi * psi.adjoint();
        // Spectrum is known: eigenvalue 1 on |psi>, 0 elsewhere; complete
        // the eigenbasis by Gram-Schmidt against the standard basis.
        let mut vectors = ComplexMatrix::zeros(dim, dim);
        vectors.set_column(0, &psi);
        let mut filled = 1;
        for b in 0..dim {
            if filled == dim {
                break;
            }
            let mut cand = ComplexVector::zeros(dim);
            cand[b] = Complex64::new(1.0, 0.0);
            for c in 0..filled {
                let col = vectors.column(c);
                let overlap = col.dotc(&cand);
                cand -= col * overlap;
            }
            let n = cand.norm();
            if n > 1e-8 {
                vectors.set_column(filled, &cand.map(|z| z / n));
                filled += 1;
            }
        }
        debug_assert_eq!(filled, dim);
        let mut eigenvalues = vec![0.0; dim];
        eigenvalues[0] = 1.0;
        Ok(Self {
            dim,
            matrix,
            eigenvalues,
            eigenvectors: vectors,
        })
    }

    /// The maximally mixed state `I / dim`.
    pub fn maximally_mixed(dim: usize) -> Self {
        assert!(dim >= 1, "dimension must be positive");
        let w = 1.0 / dim as f64;
        Self {
            dim,
            matrix: ComplexMatrix::identity(dim, dim).map(|z| z * w),
            eigenvalues: vec![w; dim],
            eigenvectors: ComplexMatrix::identity(dim, dim),
        }
    }

    /// Convex blend `lambda * a + (1 - lambda) * b`.
    pub fn blend(a: &Self, b: &Self, lambda: f64) -> Result<Self> {
        if a.dim != b.dim {
            return Err(Error::DimensionMismatch(format!(
                "cannot blend dimensions {} and {}",
                a.dim, b.dim
            )));
        }
        if !(0.0..=1.0).contains(&lambda) {
            return Err(Error::ParameterOutOfRange(format!(
                "blend weight {lambda} outside [0, 1]"
            )));
        }
        let m = a.matrix.map(|z| z * lambda) + b.matrix.map(|z| z * (1.0 - lambda));
        Ok(Self::from_psd(&m))
    }

    /// Tensor product of two density matrices, first factor slowest.
    pub fn tensor(a: &Self, b: &Self) -> Self {
        Self::from_psd(&tensor_product(&a.matrix, &b.matrix))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    /// Eigenvalues in descending order; nonnegative, summing to 1.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Eigenvector columns matching [`Self::eigenvalues`].
    pub fn eigenvectors(&self) -> &ComplexMatrix {
        &self.eigenvectors
    }

    /// Whether the state is pure up to [`tol::PURITY_TOL`].
    pub fn is_pure(&self) -> bool {
        self.eigenvalues[0] >= 1.0 - tol::PURITY_TOL
    }
}

// --- bipartite pure states ------------------------------------------------

/// A normalized pure state on `A (x) B` with amplitude `|a>|b>` stored at
/// linear index `a * dim_b + b`.
#[derive(Clone, Debug)]
pub struct PureBipartiteState {
    dim_a: usize,
    dim_b: usize,
    amplitudes: ComplexVector,
}

impl PureBipartiteState {
    /// Validates dimensions and norm (within [`tol::NORM_TOL`] of 1, then
    /// normalized exactly).
    pub fn new(dim_a: usize, dim_b: usize, amplitudes: ComplexVector) -> Result<Self> {
        if dim_a == 0 || dim_b == 0 || amplitudes.len() != dim_a * dim_b {
            return Err(Error::DimensionMismatch(format!(
                "expected {}x{} = {} amplitudes, got {}",
                dim_a,
                dim_b,
                dim_a * dim_b,
                amplitudes.len()
            )));
        }
        if !amplitudes
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
        {
            return Err(Error::InvalidPureState("non-finite amplitudes".into()));
        }
        let norm_sq = amplitudes.norm_squared();
        if (norm_sq - 1.0).abs() > tol::NORM_TOL {
            return Err(Error::InvalidPureState(format!(
                "squared norm is {norm_sq}, expected 1"
            )));
        }
        let norm = norm_sq.sqrt();
        Ok(Self {
            dim_a,
            dim_b,
            amplitudes: amplitudes.map(|z| z / norm),
        })
    }

    /// Wraps amplitudes normalized by construction.
    pub(crate) fn new_normalized(dim_a: usize, dim_b: usize, amplitudes: ComplexVector) -> Self {
        debug_assert_eq!(amplitudes.len(), dim_a * dim_b);
        Self {
            dim_a,
            dim_b,
            amplitudes,
        }
    }

    pub fn dim_a(&self) -> usize {
        self.dim_a
    }

    pub fn dim_b(&self) -> usize {
        self.dim_b
    }

    pub fn amplitudes(&self) -> &ComplexVector {
        &self.amplitudes
    }

    /// Amplitudes reshaped to a `dim_a x dim_b` matrix `M[a, b]`.
    pub(crate) fn amplitude_matrix(&self) -> ComplexMatrix {
        ComplexMatrix::from_fn(self.dim_a, self.dim_b, |a, b| {
            self.amplitudes[a * self.dim_b + b]
        })
    }

    /// The rank-one projector `|psi><psi|` on the joint space.
    pub fn projector(&self) -> ComplexMatrix {
        &self.amplitudes * self.amplitudes.adjoint()
    }

    /// Reduced state on `A`: `Tr_B |psi><psi| = M M^dagger`.
    pub fn reduced_a(&self) -> DensityMatrix {
        let m = self.amplitude_matrix();
        DensityMatrix::from_psd(&(&m * m.adjoint()))
    }

    /// Reduced state on `B`: `Tr_A |psi><psi| = (M^dagger M)`.
    pub fn reduced_b(&self) -> DensityMatrix {
        let m = self.amplitude_matrix();
        DensityMatrix::from_psd(&(m.adjoint() * &m))
    }
}

/// Canonical purification of `rho` on `A (x) B` with `dim_b = dim_a`:
/// `|phi> = sum_i sqrt(lambda_i) |e_i>|i>` over the descending spectrum.
///
/// The `B` marginal is therefore `diag(lambda)` in the standard basis.
pub fn purify(rho: &DensityMatrix) -> PureBipartiteState {
    let d = rho.dim();
    let mut amplitudes = ComplexVector::zeros(d * d);
    for (i, &lambda) in rho.eigenvalues().iter().enumerate() {
        if lambda <= 0.0 {
            continue;
        }
        let s = lambda.sqrt();
        let v = rho.eigenvectors().column(i);
        for a in 0..d {
            amplitudes[a * d + i] += v[a] * s;
        }
    }
    PureBipartiteState::new_normalized(d, d, amplitudes)
}

// --- tests -----------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn mat2(entries: [[Complex64; 2]; 2]) -> ComplexMatrix {
        ComplexMatrix::from_fn(2, 2, |r, c| entries[r][c])
    }

    #[test]
    fn tensor_product_of_pauli_z_with_identity() {
        let z = mat2([[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(-1.0, 0.0)]]);
        let id = ComplexMatrix::identity(2, 2);
        let t = tensor_product(&z, &id);
        let diag: Vec<f64> = (0..4).map(|i| t[(i, i)].re).collect();
        assert_eq!(diag, vec![1.0, 1.0, -1.0, -1.0]);
        assert!(t.iter().enumerate().all(|(k, z)| {
            let (r, c) = (k % 4, k / 4);
            r == c || z.norm() == 0.0
        }));
    }

    #[test]
    fn tensor_product_trace_is_multiplicative() {
        let a = mat2([[c(0.7, 0.0), c(0.1, 0.2)], [c(0.1, -0.2), c(0.3, 0.0)]]);
        let b = mat2([[c(0.4, 0.0), c(0.0, -0.3)], [c(0.0, 0.3), c(0.6, 0.0)]]);
        let t = tensor_product(&a, &b);
        let lhs = t.trace();
        let rhs = a.trace() * b.trace();
        assert!((lhs - rhs).norm() < 1e-12);
    }

    #[test]
    fn partial_trace_of_bell_state_is_maximally_mixed() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let mut psi = ComplexVector::zeros(4);
        psi[0] = c(s, 0.0);
        psi[3] = c(s, 0.0);
        let proj = &psi * psi.adjoint();
        let a = partial_trace(&proj, &[2, 2], &[0]).unwrap();
        let b = partial_trace(&proj, &[2, 2], &[1]).unwrap();
        for m in [a, b] {
            assert!(max_abs_diff(&m, &ComplexMatrix::identity(2, 2).map(|z| z * 0.5)) < 1e-12);
        }
    }

    #[test]
    fn partial_trace_of_product_recovers_factors() {
        let a = mat2([[c(0.8, 0.0), c(0.1, 0.1)], [c(0.1, -0.1), c(0.2, 0.0)]]);
        let b = ComplexMatrix::from_fn(3, 3, |r, q| {
            if r == q {
                c(1.0 / 3.0, 0.0)
            } else {
                c(0.01 * (r as f64 - q as f64), 0.02)
            }
        });
        let b = (&b + b.adjoint()).map(|z| z * 0.5);
        let joint = tensor_product(&a, &b);
        let got_a = partial_trace(&joint, &[2, 3], &[0]).unwrap();
        let got_b = partial_trace(&joint, &[2, 3], &[1]).unwrap();
        assert!(max_abs_diff(&got_a, &a.map(|z| z * b.trace())) < 1e-12);
        assert!(max_abs_diff(&got_b, &b.map(|z| z * a.trace())) < 1e-12);
    }

    #[test]
    fn partial_trace_keeping_everything_is_identity_map() {
        let m = ComplexMatrix::from_fn(6, 6, |r, q| c(r as f64, q as f64));
        let kept = partial_trace(&m, &[2, 3], &[0, 1]).unwrap();
        assert!(max_abs_diff(&kept, &m) < 1e-15);
    }

    #[test]
    fn partial_trace_rejects_bad_arguments() {
        let m = ComplexMatrix::identity(4, 4);
        assert!(matches!(
            partial_trace(&m, &[2, 3], &[0]),
            Err(Error::DimensionMismatch(_))
        ));
        assert!(matches!(
            partial_trace(&m, &[2, 2], &[2]),
            Err(Error::DimensionMismatch(_))
        ));
        assert!(matches!(
            partial_trace(&m, &[2, 2], &[]),
            Err(Error::DimensionMismatch(_))
        ));
        assert!(matches!(
            partial_trace(&m, &[2, 2], &[0, 0]),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn hermitian_spectrum_of_pauli_x() {
        let x = mat2([[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]]);
        let (vals, vecs) = hermitian_spectrum(&x).unwrap();
        assert!((vals[0] - 1.0).abs() < 1e-12);
        assert!((vals[1] + 1.0).abs() < 1e-12);
        // Columns reconstruct X.
        let d = ComplexMatrix::from_fn(
            2,
            2,
            |r, q| if r == q { c(vals[r], 0.0) } else { c(0.0, 0.0) },
        );
        let back = &vecs * d * vecs.adjoint();
        assert!(max_abs_diff(&back, &x) < 1e-12);
    }

    #[test]
    fn hermitian_spectrum_rejects_non_hermitian() {
        let m = mat2([[c(0.0, 0.0), c(1.0, 0.0)], [c(0.0, 0.0), c(0.0, 0.0)]]);
        assert!(matches!(
            hermitian_spectrum(&m),
            Err(Error::NotHermitian(_))
        ));
    }

    #[test]
    fn hermitian_spectrum_handles_dim_one() {
        let m = ComplexMatrix::from_fn(1, 1, |_, _| c(3.5, 0.0));
        let (vals, _) = hermitian_spectrum(&m).unwrap();
        assert_eq!(vals, vec![3.5]);
    }

    #[test]
    fn density_matrix_accepts_qubit_mixed_state() {
        let rho = mat2([[c(0.75, 0.0), c(0.1, 0.05)], [c(0.1, -0.05), c(0.25, 0.0)]]);
        let dm = DensityMatrix::new(rho.clone()).unwrap();
        assert_eq!(dm.dim(), 2);
        assert!(max_abs_diff(dm.matrix(), &rho) < 1e-10);
        let s: f64 = dm.eigenvalues().iter().sum();
        assert!((s - 1.0).abs() < 1e-12);
        assert!(dm.eigenvalues().windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn density_matrix_rejects_wrong_trace() {
        let m = mat2([[c(0.9, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(0.2, 0.0)]]);
        assert!(matches!(
            DensityMatrix::new(m),
            Err(Error::InvalidDensityMatrix(_))
        ));
    }

    #[test]
    fn density_matrix_rejects_negative_eigenvalue() {
        let m = mat2([[c(1.2, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(-0.2, 0.0)]]);
        assert!(matches!(
            DensityMatrix::new(m),
            Err(Error::InvalidDensityMatrix(_))
        ));
    }

    #[test]
    fn density_matrix_clips_round_off_negatives() {
        let eps = 1e-9;
        let m = mat2([
            [c(1.0 + eps, 0.0), c(0.0, 0.0)],
            [c(0.0, 0.0), c(-eps, 0.0)],
        ]);
        let dm = DensityMatrix::new(m).unwrap();
        assert_eq!(dm.eigenvalues()[1], 0.0);
        let s: f64 = dm.eigenvalues().iter().sum();
        assert!((s - 1.0).abs() < 1e-15);
    }

    #[test]
    fn density_matrix_rejects_non_hermitian() {
        let m = mat2([[c(0.5, 0.0), c(0.3, 0.0)], [c(0.0, 0.0), c(0.5, 0.0)]]);
        assert!(matches!(DensityMatrix::new(m), Err(Error::NotHermitian(_))));
    }

    #[test]
    fn pure_state_normalizes_and_caches_spectrum() {
        let mut v = ComplexVector::zeros(3);
        v[0] = c(3.0, 0.0);
        v[2] = c(0.0, 4.0);
        let dm = DensityMatrix::pure(&v).unwrap();
        assert!(dm.is_pure());
        assert!((dm.matrix()[(0, 0)].re - 0.36).abs() < 1e-12);
        assert!((dm.matrix()[(2, 2)].re - 0.64).abs() < 1e-12);
        assert_eq!(dm.eigenvalues()[0], 1.0);
        // Eigenvector columns are orthonormal.
        let g = dm.eigenvectors().adjoint() * dm.eigenvectors();
        assert!(max_abs_diff(&g, &ComplexMatrix::identity(3, 3)) < 1e-10);
    }

    #[test]
    fn maximally_mixed_state() {
        let dm = DensityMatrix::maximally_mixed(4);
        assert_eq!(dm.eigenvalues(), &[0.25; 4]);
        assert!(!dm.is_pure());
    }

    #[test]
    fn blend_interpolates_matrices() {
        let a = DensityMatrix::maximally_mixed(2);
        let mut v = ComplexVector::zeros(2);
        v[0] = c(1.0, 0.0);
        let b = DensityMatrix::pure(&v).unwrap();
        let m = DensityMatrix::blend(&a, &b, 0.25).unwrap();
        assert!((m.matrix()[(0, 0)].re - (0.25 * 0.5 + 0.75)).abs() < 1e-12);
        assert!((m.matrix()[(1, 1)].re - 0.25 * 0.5).abs() < 1e-12);
    }

    #[test]
    fn purify_round_trips_the_reduced_state() {
        let rho = DensityMatrix::new(mat2([
            [c(0.7, 0.0), c(0.2, 0.1)],
            [c(0.2, -0.1), c(0.3, 0.0)],
        ]))
        .unwrap();
        let phi = purify(&rho);
        let back = phi.reduced_a();
        assert!(max_abs_diff(back.matrix(), rho.matrix()) < 1e-12);
        // Canonical purification has diagonal B marginal = spectrum.
        let b = phi.reduced_b();
        for (i, &lam) in rho.eigenvalues().iter().enumerate() {
            assert!((b.matrix()[(i, i)].re - lam).abs() < 1e-12);
        }
    }

    #[test]
    fn purify_pure_state_stays_product() {
        let mut v = ComplexVector::zeros(2);
        v[1] = c(1.0, 0.0);
        let rho = DensityMatrix::pure(&v).unwrap();
        let phi = purify(&rho);
        // Schmidt rank 1: reduced state is pure.
        assert!(phi.reduced_a().is_pure());
        assert!(phi.reduced_b().is_pure());
    }

    #[test]
    fn bipartite_state_validates_norm() {
        let mut v = ComplexVector::zeros(4);
        v[0] = c(0.5, 0.0);
        assert!(matches!(
            PureBipartiteState::new(2, 2, v),
            Err(Error::InvalidPureState(_))
        ));
    }

    #[test]
    fn bipartite_reduced_states_share_spectrum() {
        // Amplitudes of a 2x3 pure state; reductions must have equal
        // nonzero spectra (Schmidt).
        let raw: Vec<Complex64> = (0..6)
            .map(|k| c(0.1 + 0.2 * k as f64, 0.05 * (k as f64 - 2.0)))
            .collect();
        let v = ComplexVector::from_vec(raw);
        let n = v.norm();
        let psi = PureBipartiteState::new(2, 3, v.map(|z| z / n)).unwrap();
        let sa = psi.reduced_a();
        let sb = psi.reduced_b();
        for i in 0..2 {
            assert!((sa.eigenvalues()[i] - sb.eigenvalues()[i]).abs() < 1e-10);
        }
        assert!(sb.eigenvalues()[2].abs() < 1e-10);
    }
}
