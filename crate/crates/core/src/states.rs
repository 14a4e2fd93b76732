//! Two-qubit states with maximally mixed marginals,
//! `ρ = ¼(1 + Σᵢ cᵢ σᵢ ⊗ σᵢ)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{pauli, tensor, ComplexMatrix, PauliAxis};

/// Probabilities may dip this far below zero before a coefficient triple is
/// rejected as unphysical.
pub const PHYSICAL_TOL: f64 = 1e-12;
/// Largest admissible non-Bell-diagonal Pauli component in
/// [`coefficients_from_matrix`].
pub const BELL_DIAGONAL_TOL: f64 = 1e-9;

/// Correlation-tensor diagonal `(c1, c2, c3)` of a Bell-diagonal state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BellVector {
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
}

/// Coefficient triple after a channel has acted; same algebra as
/// [`BellVector`] but named `alpha, beta, gamma` along axes 1, 2, 3.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvolvedCoefficients {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl BellVector {
    /// Validated constructor: components in `[−1, 1]` and a non-negative
    /// spectrum.
    pub fn new(c1: f64, c2: f64, c3: f64) -> Result<Self> {
        let v = Self { c1, c2, c3 };
        v.validate()?;
        Ok(v)
    }

    pub const fn new_unchecked(c1: f64, c2: f64, c3: f64) -> Self {
        Self { c1, c2, c3 }
    }

    pub fn zero() -> Self {
        Self::new_unchecked(0.0, 0.0, 0.0)
    }

    pub fn validate(&self) -> Result<()> {
        for (i, c) in self.as_array().into_iter().enumerate() {
            if !c.is_finite() || c.abs() > 1.0 {
                return Err(Error::InvalidArgument(format!("coefficient c{} = {c} outside [-1, 1]", i + 1)));
            }
        }
        spectrum_from_coefficients(&self.as_evolved()).map(|_| ())
    }

    pub fn is_physical(&self) -> bool {
        self.validate().is_ok()
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.c1, self.c2, self.c3]
    }

    pub fn from_array(c: [f64; 3]) -> Self {
        Self::new_unchecked(c[0], c[1], c[2])
    }

    pub fn component(&self, axis: PauliAxis) -> f64 {
        self.as_array()[axis.index() - 1]
    }

    /// Exchange two components.
    pub fn swapped(&self, a: PauliAxis, b: PauliAxis) -> Self {
        let mut c = self.as_array();
        c.swap(a.index() - 1, b.index() - 1);
        Self::from_array(c)
    }

    /// State with the given Bell-basis weights, in the order returned by
    /// [`spectrum_from_coefficients`]. Weights are normalized; they must be
    /// non-negative and not all zero.
    pub fn from_bell_weights(w: [f64; 4]) -> Result<Self> {
        let total: f64 = w.iter().sum();
        if w.iter().any(|x| *x < 0.0 || !x.is_finite()) || total <= 0.0 {
            return Err(Error::InvalidArgument(format!("bad Bell weights {w:?}")));
        }
        let [l1, l2, l3, l4] = w.map(|x| x / total);
        Ok(Self::new_unchecked(
            (l3 + l4 - l1 - l2).clamp(-1.0, 1.0),
            (l2 + l4 - l1 - l3).clamp(-1.0, 1.0),
            (l2 + l3 - l1 - l4).clamp(-1.0, 1.0),
        ))
    }

    /// The untouched state, as evolved coefficients at `p = 0`.
    pub fn as_evolved(&self) -> EvolvedCoefficients {
        EvolvedCoefficients { alpha: self.c1, beta: self.c2, gamma: self.c3 }
    }
}

impl fmt::Display for BellVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.c1, self.c2, self.c3)
    }
}

/// Parses `c1,c2,c3` and checks physicality.
impl FromStr for BellVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(Error::InvalidArgument(format!("expected three comma-separated coefficients, got `{s}`")));
        }
        let mut c = [0.0; 3];
        for (slot, text) in c.iter_mut().zip(&parts) {
            *slot = text.parse().map_err(|_| Error::InvalidArgument(format!("`{text}` is not a number")))?;
        }
        Self::new(c[0], c[1], c[2])
    }
}

impl EvolvedCoefficients {
    pub fn as_array(&self) -> [f64; 3] {
        [self.alpha, self.beta, self.gamma]
    }

    pub fn from_array(c: [f64; 3]) -> Self {
        Self { alpha: c[0], beta: c[1], gamma: c[2] }
    }

    pub fn component(&self, axis: PauliAxis) -> f64 {
        self.as_array()[axis.index() - 1]
    }

    /// Reinterpret as a state vector (evolved triples are themselves valid
    /// Bell-diagonal states).
    pub fn as_bell_vector(&self) -> BellVector {
        BellVector::from_array(self.as_array())
    }
}

/// The four eigenvalues of the Bell-diagonal operator with coefficients `e`,
/// in the order `¼(1−α−β−γ), ¼(1−α+β+γ), ¼(1+α−β+γ), ¼(1+α+β−γ)`
/// (singlet, Φ⁻, Φ⁺, Ψ⁺ weights).
pub fn spectrum_from_coefficients(e: &EvolvedCoefficients) -> Result<[f64; 4]> {
    let EvolvedCoefficients { alpha: a, beta: b, gamma: g } = *e;
    let lambda =
        [0.25 * (1.0 - a - b - g), 0.25 * (1.0 - a + b + g), 0.25 * (1.0 + a - b + g), 0.25 * (1.0 + a + b - g)];
    for (index, &l) in lambda.iter().enumerate() {
        if l < -PHYSICAL_TOL || !l.is_finite() {
            return Err(Error::NotAState { index, eigenvalue: l });
        }
    }
    Ok(lambda)
}

/// Pauli pair `σ_axis ⊗ σ_axis`.
pub fn correlator(axis: PauliAxis) -> ComplexMatrix {
    let s = pauli(axis);
    tensor(&s, &s).expect("2×2 factors")
}

/// Density matrix `¼(1 + Σ cᵢ σᵢ ⊗ σᵢ)`.
pub fn bell_state_matrix(c: &BellVector) -> Result<ComplexMatrix> {
    c.validate()?;
    Ok(bell_matrix_unchecked(&c.as_array()))
}

pub(crate) fn bell_matrix_unchecked(c: &[f64; 3]) -> ComplexMatrix {
    let mut rho = ComplexMatrix::identity(4).expect("dim 4");
    for axis in PauliAxis::ALL {
        let ci = c[axis.index() - 1];
        if ci != 0.0 {
            rho = &rho + &correlator(axis).scale_real(ci);
        }
    }
    rho.scale_real(0.25)
}

/// Inverts [`bell_state_matrix`]: `cᵢ = Tr[ρ σᵢ⊗σᵢ]`. Every other Pauli
/// component must vanish to within [`BELL_DIAGONAL_TOL`].
pub fn coefficients_from_matrix(rho: &ComplexMatrix) -> Result<BellVector> {
    if rho.dim() != 4 {
        return Err(Error::InvalidArgument(format!("expected a 4×4 operator, got {0}×{0}", rho.dim())));
    }
    crate::linalg::validate_density(rho)?;
    let labels = ['I', 'X', 'Y', 'Z'];
    let single = |k: usize| match k {
        0 => ComplexMatrix::identity(2).expect("dim 2"),
        k => pauli(PauliAxis::from_index(k).expect("1..=3")),
    };
    let mut c = [0.0; 3];
    let mut worst: Option<(String, f64)> = None;
    for i in 0..4 {
        for j in 0..4 {
            if i == 0 && j == 0 {
                continue;
            }
            let op = tensor(&single(i), &single(j)).expect("2×2 factors");
            let comp = (rho * &op).trace();
            if i == j {
                c[i - 1] = comp.re;
                continue;
            }
            let mag = comp.norm();
            if worst.as_ref().is_none_or(|(_, w)| mag > *w) {
                worst = Some((format!("{}{}", labels[i], labels[j]), mag));
            }
        }
    }
    if let Some((component, value)) = worst {
        if value > BELL_DIAGONAL_TOL {
            return Err(Error::NotBellDiagonal { component, value });
        }
    }
    let v = BellVector::from_array(c);
    v.validate()?;
    Ok(v)
}
