//! Local flip channels in Kraus form and their action on Bell-diagonal
//! coefficients.
//!
//! Each channel flips one Pauli axis with probability `p/2` on each qubit:
//! `Γ₀ = √(1−p/2)·1`, `Γ₁ = √(p/2)·σ_axis`. Both qubits see the same `p`.
//! On the coefficient triple the flipped channel leaves the `axis` component
//! alone and damps the other two by `(1−p)²`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{pauli, tensor, ComplexMatrix, PauliAxis, Subsystem};
use crate::states::{BellVector, EvolvedCoefficients};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChannelKind {
    PhaseFlip,
    BitFlip,
    BitPhaseFlip,
}

impl ChannelKind {
    pub const ALL: [ChannelKind; 3] = [ChannelKind::PhaseFlip, ChannelKind::BitFlip, ChannelKind::BitPhaseFlip];

    /// The Pauli axis of the error operator `Γ₁`; it is also the coefficient
    /// the channel leaves untouched.
    pub fn flip_axis(self) -> PauliAxis {
        match self {
            ChannelKind::BitFlip => PauliAxis::X,
            ChannelKind::BitPhaseFlip => PauliAxis::Y,
            ChannelKind::PhaseFlip => PauliAxis::Z,
        }
    }

    /// Channel whose flip axis is `axis`.
    pub fn preserving(axis: PauliAxis) -> Self {
        match axis {
            PauliAxis::X => ChannelKind::BitFlip,
            PauliAxis::Y => ChannelKind::BitPhaseFlip,
            PauliAxis::Z => ChannelKind::PhaseFlip,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ChannelKind::PhaseFlip => "phase-flip",
            ChannelKind::BitFlip => "bit-flip",
            ChannelKind::BitPhaseFlip => "bit-phase-flip",
        }
    }
}

impl fmt::Display for ChannelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ChannelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ChannelKind::ALL.into_iter().find(|k| k.name() == s).ok_or_else(|| {
            Error::InvalidArgument(format!("unknown channel `{s}` (expected phase-flip, bit-flip or bit-phase-flip)"))
        })
    }
}

/// Kraus operators of a channel acting on one qubit, embedded in the
/// two-qubit space.
#[derive(Debug, Clone, PartialEq)]
pub struct KrausSet {
    pub kind: ChannelKind,
    pub side: Subsystem,
    pub p: f64,
    pub operators: Vec<ComplexMatrix>,
}

impl KrausSet {
    /// Largest elementwise deviation of `Σ Γ†Γ` from the identity.
    pub fn completeness_error(&self) -> f64 {
        let mut sum = ComplexMatrix::zeros(4).expect("dim 4");
        for g in &self.operators {
            sum = &sum + &(&g.adjoint() * g);
        }
        sum.max_abs_diff(&ComplexMatrix::identity(4).expect("dim 4"))
    }

    /// `Σₖ Γₖ ρ Γₖ†`.
    pub fn apply(&self, rho: &ComplexMatrix) -> ComplexMatrix {
        let mut out = ComplexMatrix::zeros(4).expect("dim 4");
        for g in &self.operators {
            out = &out + &rho.conjugate_by(g);
        }
        out
    }
}

fn check_p(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("parametrized time p = {p} outside [0, 1]")))
    }
}

/// Single-qubit Kraus pair `{√(1−p/2)·1, √(p/2)·σ_axis}`.
pub fn single_qubit_kraus(kind: ChannelKind, p: f64) -> Result<[ComplexMatrix; 2]> {
    check_p(p)?;
    let id = ComplexMatrix::identity(2)?;
    Ok([id.scale_real((1.0 - 0.5 * p).sqrt()), pauli(kind.flip_axis()).scale_real((0.5 * p).sqrt())])
}

pub fn kraus_set(kind: ChannelKind, side: Subsystem, p: f64) -> Result<KrausSet> {
    let id = ComplexMatrix::identity(2)?;
    let operators = single_qubit_kraus(kind, p)?
        .iter()
        .map(|k| match side {
            Subsystem::A => tensor(k, &id),
            Subsystem::B => tensor(&id, k),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(KrausSet { kind, side, p, operators })
}

/// `ε(ρ) = Σᵢⱼ Γᵢ^(A) Γⱼ^(B) ρ Γⱼ^(B)† Γᵢ^(A)†` with the same `p` on both
/// qubits.
pub fn apply_channel(rho: &ComplexMatrix, kind: ChannelKind, p: f64) -> Result<ComplexMatrix> {
    if rho.dim() != 4 {
        return Err(Error::InvalidArgument(format!("expected a 4×4 state, got {0}×{0}", rho.dim())));
    }
    crate::linalg::validate_density(rho)?;
    let a = kraus_set(kind, Subsystem::A, p)?;
    let b = kraus_set(kind, Subsystem::B, p)?;
    let mut out = ComplexMatrix::zeros(4)?;
    for ga in &a.operators {
        for gb in &b.operators {
            out = &out + &rho.conjugate_by(&(ga * gb));
        }
    }
    crate::linalg::validate_density(&out)?;
    let spectrum = crate::linalg::hermitian_eigenvalues(&out)?;
    if let Some((index, &eigenvalue)) =
        spectrum.values().iter().enumerate().find(|(_, &l)| l < -crate::linalg::PSD_CLAMP_TOL)
    {
        return Err(Error::NotAState { index, eigenvalue });
    }
    Ok(out)
}

/// Closed-form coefficient map: the flip axis is kept, the other two shrink
/// by `(1−p)²`.
pub fn evolve_coefficients(c: &BellVector, kind: ChannelKind, p: f64) -> Result<EvolvedCoefficients> {
    check_p(p)?;
    c.validate()?;
    let damp = (1.0 - p) * (1.0 - p);
    let kept = kind.flip_axis();
    let mut out = c.as_array();
    for axis in PauliAxis::ALL {
        if axis != kept {
            out[axis.index() - 1] *= damp;
        }
    }
    Ok(EvolvedCoefficients::from_array(out))
}

/// `p = 1 − exp(−rate·t)`.
pub fn p_from_time(t: f64, rate: f64) -> Result<f64> {
    if !(t >= 0.0) || !t.is_finite() {
        return Err(Error::InvalidArgument(format!("time t = {t} must be a finite non-negative number")));
    }
    if !(rate > 0.0) || !rate.is_finite() {
        return Err(Error::InvalidArgument(format!("rate = {rate} must be positive")));
    }
    Ok(-(-rate * t).exp_m1())
}
