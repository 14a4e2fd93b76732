//! Mutual information, classical correlation and quantum discord.
//!
//! All quantities are in bits. The classical correlation is
//! `C = max_{Πⱼ on B} [S(ρ_A) − Σⱼ qⱼ S(ρ_A^j)]` and the discord is
//! `Q = I − C`. For Bell-diagonal states the maximum has a closed form in
//! `χ = max(|α|, |β|, |γ|)`; the matrix route here finds it numerically.

pub mod extremize;

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{
    hermitian_eigenvalues, partial_trace, partial_trace_unchecked, tensor, validate_density, von_neumann_entropy,
    xlog2x, ComplexMatrix, PauliAxis, Subsystem,
};
use crate::states::{spectrum_from_coefficients, EvolvedCoefficients};

pub use extremize::{ConditionalEntropyKernel, ExtremizeOptions};

/// Marginals must be `1/2` to this tolerance for [`classical_correlation_numeric`].
pub const MAXIMALLY_MIXED_TOL: f64 = 1e-9;

const RADICAND_TOL: f64 = 1e-14;

/// Projective measurement on one qubit, given by the angles of
/// `|Θ∥⟩ = cos θ|0⟩ + e^{iφ} sin θ|1⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeasurementBasis {
    pub theta: f64,
    pub phi: f64,
}

impl MeasurementBasis {
    /// `θ ∈ [0, π/2]`, `φ ∈ [0, π)`.
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !(0.0..=FRAC_PI_2).contains(&theta) || !(0.0..PI).contains(&phi) {
            return Err(Error::InvalidArgument(format!(
                "measurement angles (θ={theta}, φ={phi}) outside [0, π/2] × [0, π)"
            )));
        }
        Ok(Self { theta, phi })
    }

    pub const fn new_unchecked(theta: f64, phi: f64) -> Self {
        Self { theta, phi }
    }

    /// `σ_z` eigenbasis.
    pub const Z: Self = Self::new_unchecked(0.0, 0.0);
    /// `σ_x` eigenbasis.
    pub const X: Self = Self::new_unchecked(FRAC_PI_4, 0.0);
    /// `σ_y` eigenbasis.
    pub const Y: Self = Self::new_unchecked(FRAC_PI_4, FRAC_PI_2);

    pub fn eigenbasis_of(axis: PauliAxis) -> Self {
        match axis {
            PauliAxis::X => Self::X,
            PauliAxis::Y => Self::Y,
            PauliAxis::Z => Self::Z,
        }
    }

    /// `|Θ∥⟩` and `|Θ⊥⟩ = e^{−iφ} sin θ|0⟩ − cos θ|1⟩`.
    pub fn kets(&self) -> [[Complex64; 2]; 2] {
        let (s, c) = self.theta.sin_cos();
        let w = Complex64::from_polar(1.0, self.phi);
        [[Complex64::new(c, 0.0), w * s], [w.conj() * s, Complex64::new(-c, 0.0)]]
    }

    /// `[Π∥, Π⊥]` as 2×2 projectors.
    pub fn projectors(&self) -> [ComplexMatrix; 2] {
        self.kets().map(|k| ComplexMatrix::outer(&k).expect("dim 2"))
    }
}

/// Spectrum of the conditional state of A after one measurement outcome on
/// B, and the outcome probabilities.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConditionalSpectrum {
    pub xi1: f64,
    pub xi2: f64,
    pub q_par: f64,
    pub q_perp: f64,
}

impl ConditionalSpectrum {
    pub fn entropy(&self) -> f64 {
        -xlog2x(self.xi1) - xlog2x(self.xi2)
    }
}

/// One sample of a correlation trajectory.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CorrelationRecord {
    pub p: f64,
    #[serde(rename = "C")]
    pub classical: f64,
    #[serde(rename = "Q")]
    pub quantum: f64,
    #[serde(rename = "I")]
    pub mutual: f64,
    pub chi: f64,
    pub theta_opt: f64,
    pub phi_opt: f64,
    /// Which evolved coefficient attains `χ`.
    pub branch: PauliAxis,
}

/// Closed-form classical correlation and the coefficient that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnalyticClassical {
    pub value: f64,
    pub chi: f64,
    pub branch: PauliAxis,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NumericClassical {
    pub value: f64,
    pub basis: MeasurementBasis,
}

/// `I = S(ρ_A) + S(ρ_B) − S(ρ)`.
pub fn mutual_information(rho: &ComplexMatrix) -> Result<f64> {
    let sa = von_neumann_entropy(&partial_trace(rho, Subsystem::A)?)?;
    let sb = von_neumann_entropy(&partial_trace(rho, Subsystem::B)?)?;
    let s = von_neumann_entropy(rho)?;
    Ok(sa + sb - s)
}

/// `I = 2 + Σ λ log₂ λ` for a Bell-diagonal state.
pub fn mutual_information_analytic(e: &EvolvedCoefficients) -> Result<f64> {
    let lambda = spectrum_from_coefficients(e)?;
    Ok(2.0 + lambda.iter().map(|&l| xlog2x(l)).sum::<f64>())
}

/// `Σⱼ qⱼ S(ρ_A^j)` with `ρ_A^j = Tr_B(Πⱼ ρ Πⱼ)/qⱼ`, built from explicit
/// projectors on B.
pub fn conditional_entropy(rho: &ComplexMatrix, basis: &MeasurementBasis) -> Result<f64> {
    validate_density(rho)?;
    let id = ComplexMatrix::identity(2)?;
    let mut total = 0.0;
    for proj in basis.projectors() {
        let big = tensor(&id, &proj)?;
        let post = &(&big * rho) * &big;
        let q = post.trace().re;
        if q < extremize::MIN_OUTCOME_PROBABILITY {
            continue;
        }
        let cond = partial_trace_unchecked(&post, Subsystem::A).scale_real(1.0 / q);
        let cond = (&cond + &cond.adjoint()).scale_real(0.5);
        total += q * hermitian_eigenvalues(&cond)?.entropy()?;
    }
    Ok(total)
}

/// Closed-form conditional spectrum of a Bell-diagonal state:
/// `ξ = ¼{2 ± √(2γ² + α² + β² + (2γ² − α² − β²)cos 4θ + 2(α² − β²) cos 2φ sin² 2θ)}`,
/// with both outcomes equally likely.
pub fn conditional_spectrum_analytic(e: &EvolvedCoefficients, basis: &MeasurementBasis) -> Result<ConditionalSpectrum> {
    spectrum_from_coefficients(e)?;
    let (a2, b2, g2) = (e.alpha * e.alpha, e.beta * e.beta, e.gamma * e.gamma);
    let (theta, phi) = (basis.theta, basis.phi);
    let s2 = (2.0 * theta).sin();
    let mut radicand =
        2.0 * g2 + a2 + b2 + (2.0 * g2 - a2 - b2) * (4.0 * theta).cos() + 2.0 * (a2 - b2) * (2.0 * phi).cos() * s2 * s2;
    if radicand < 0.0 {
        if radicand < -RADICAND_TOL {
            return Err(Error::Internal(format!("negative radicand {radicand:e} in conditional spectrum")));
        }
        radicand = 0.0;
    }
    let root = radicand.sqrt();
    Ok(ConditionalSpectrum { xi1: 0.25 * (2.0 + root), xi2: 0.25 * (2.0 - root), q_par: 0.5, q_perp: 0.5 })
}

/// Coefficient of largest magnitude, ties resolved `γ` (axis 3) first, then
/// `α` (axis 1), then `β` (axis 2).
pub fn dominant_axis(c: [f64; 3]) -> (PauliAxis, f64) {
    [PauliAxis::Z, PauliAxis::X, PauliAxis::Y]
        .into_iter()
        .map(|ax| (ax, c[ax.index() - 1].abs()))
        .fold((PauliAxis::Z, f64::NEG_INFINITY), |best, cand| if cand.1 > best.1 { cand } else { best })
}

/// `C = ½(1−χ) log₂(1−χ) + ½(1+χ) log₂(1+χ)`.
pub fn classical_from_chi(chi: f64) -> f64 {
    0.5 * (xlog2x(1.0 - chi) + xlog2x(1.0 + chi))
}

pub fn classical_correlation_analytic(e: &EvolvedCoefficients) -> AnalyticClassical {
    let (branch, chi) = dominant_axis(e.as_array());
    AnalyticClassical { value: classical_from_chi(chi), chi, branch }
}

/// `Q = 2 + Σ λ log₂ λ − C`, clamped at zero.
pub fn quantum_discord_analytic(e: &EvolvedCoefficients) -> Result<f64> {
    let i = mutual_information_analytic(e)?;
    Ok((i - classical_correlation_analytic(e).value).max(0.0))
}

/// Full closed-form record for evolved coefficients at parametrized time `p`.
pub fn record_analytic(e: &EvolvedCoefficients, p: f64) -> Result<CorrelationRecord> {
    let mutual = mutual_information_analytic(e)?;
    let AnalyticClassical { value, chi, branch } = classical_correlation_analytic(e);
    let basis = MeasurementBasis::eigenbasis_of(branch);
    Ok(CorrelationRecord {
        p,
        classical: value,
        quantum: (mutual - value).max(0.0),
        mutual,
        chi,
        theta_opt: basis.theta,
        phi_opt: basis.phi,
        branch,
    })
}

fn is_maximally_mixed(m: &ComplexMatrix) -> bool {
    let half = ComplexMatrix::identity(2).expect("dim 2").scale_real(0.5);
    m.max_abs_diff(&half) <= MAXIMALLY_MIXED_TOL
}

/// Classical correlation of a state with maximally mixed marginals,
/// `C = 1 − min S_cond`, by grid search plus refinement.
pub fn classical_correlation_numeric(rho: &ComplexMatrix, opts: &ExtremizeOptions) -> Result<NumericClassical> {
    let rho_a = partial_trace(rho, Subsystem::A)?;
    let rho_b = partial_trace(rho, Subsystem::B)?;
    if !is_maximally_mixed(&rho_a) || !is_maximally_mixed(&rho_b) {
        return Err(Error::UnsupportedState(
            "marginals are not maximally mixed; use classical_correlation_general".into(),
        ));
    }
    let min = minimize_checked(rho, opts)?;
    Ok(NumericClassical { value: 1.0 - min.value, basis: min.basis })
}

/// `C = S(ρ_A) − min S_cond` for an arbitrary two-qubit state.
pub fn classical_correlation_general(rho: &ComplexMatrix, opts: &ExtremizeOptions) -> Result<NumericClassical> {
    let s_a = von_neumann_entropy(&partial_trace(rho, Subsystem::A)?)?;
    let min = minimize_checked(rho, opts)?;
    Ok(NumericClassical { value: s_a - min.value, basis: min.basis })
}

fn minimize_checked(rho: &ComplexMatrix, opts: &ExtremizeOptions) -> Result<extremize::Minimum> {
    if opts.grid_n < 32 {
        return Err(Error::InvalidArgument(format!("grid_n = {} must be at least 32", opts.grid_n)));
    }
    if !(opts.refine_tol > 0.0) {
        return Err(Error::InvalidArgument(format!("refine_tol = {} must be positive", opts.refine_tol)));
    }
    validate_density(rho)?;
    Ok(extremize::minimize(&ConditionalEntropyKernel::new(rho), opts))
}

/// Matrix-route `C`, `Q`, `I` and the optimal basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NumericCorrelations {
    pub classical: f64,
    pub quantum: f64,
    pub mutual: f64,
    pub basis: MeasurementBasis,
}

pub fn correlations_numeric(rho: &ComplexMatrix, opts: &ExtremizeOptions) -> Result<NumericCorrelations> {
    let mutual = mutual_information(rho)?;
    let c = classical_correlation_general(rho, opts)?;
    Ok(NumericCorrelations { classical: c.value, quantum: mutual - c.value, mutual, basis: c.basis })
}
