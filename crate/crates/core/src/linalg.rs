//! Dense complex matrices for one- and two-qubit operators.
//!
//! Only the two sizes that occur in the problem are supported: 2×2 (single
//! qubit) and 4×4 (two qubits, subsystem A as the major index). Everything is
//! a value type; nothing here allocates beyond the entry vector.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const HERMITIAN_TOL: f64 = 1e-12;
pub const TRACE_TOL: f64 = 1e-9;
/// Eigenvalues down to this value are treated as rounding noise and clamped.
pub const PSD_CLAMP_TOL: f64 = 1e-10;
/// Below this an eigenvalue is a genuine negative probability.
pub const PSD_ERROR_TOL: f64 = 1e-8;

const JACOBI_OFF_TOL: f64 = 1e-14;
const JACOBI_MAX_SWEEPS: usize = 64;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Pauli direction `i ∈ {1, 2, 3}`. Serialized as its index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "u8", try_from = "u8")]
pub enum PauliAxis {
    X = 1,
    Y = 2,
    Z = 3,
}

impl PauliAxis {
    pub const ALL: [PauliAxis; 3] = [PauliAxis::X, PauliAxis::Y, PauliAxis::Z];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Option<Self> {
        match i {
            1 => Some(PauliAxis::X),
            2 => Some(PauliAxis::Y),
            3 => Some(PauliAxis::Z),
            _ => None,
        }
    }
}

impl From<PauliAxis> for u8 {
    fn from(a: PauliAxis) -> u8 {
        a as u8
    }
}

impl TryFrom<u8> for PauliAxis {
    type Error = String;

    fn try_from(i: u8) -> std::result::Result<Self, String> {
        PauliAxis::from_index(i as usize).ok_or_else(|| format!("Pauli axis must be 1, 2 or 3, got {i}"))
    }
}

impl fmt::Display for PauliAxis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Subsystem {
    A,
    B,
}

/// Row-major square complex matrix of dimension 2 or 4.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

fn check_dim(dim: usize) -> Result<()> {
    if dim == 2 || dim == 4 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("matrix dimension must be 2 or 4, got {dim}")))
    }
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Result<Self> {
        check_dim(dim)?;
        Ok(Self { dim, data: vec![ZERO; dim * dim] })
    }

    pub fn identity(dim: usize) -> Result<Self> {
        let mut m = Self::zeros(dim)?;
        for i in 0..dim {
            m.data[i * dim + i] = ONE;
        }
        Ok(m)
    }

    pub fn from_vec(dim: usize, data: Vec<Complex64>) -> Result<Self> {
        check_dim(dim)?;
        if data.len() != dim * dim {
            return Err(Error::InvalidArgument(format!("{} entries for a {dim}×{dim} matrix", data.len())));
        }
        Ok(Self { dim, data })
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Result<Self> {
        let mut m = Self::zeros(diag.len())?;
        for (i, &d) in diag.iter().enumerate() {
            m.data[i * m.dim + i] = Complex64::new(d, 0.0);
        }
        Ok(m)
    }

    /// Rank-one projector `|v⟩⟨v|`.
    pub fn outer(v: &[Complex64]) -> Result<Self> {
        let dim = v.len();
        check_dim(dim)?;
        let data = (0..dim * dim).map(|k| v[k / dim] * v[k % dim].conj()).collect();
        Ok(Self { dim, data })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.dim + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        self.data[row * self.dim + col] = value;
    }

    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let data = (0..n * n).map(|k| self.data[(k % n) * n + k / n].conj()).collect();
        Self { dim: n, data }
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self { dim: self.dim, data: self.data.iter().map(|z| z * s).collect() }
    }

    pub fn scale_real(&self, s: f64) -> Self {
        self.scale(Complex64::new(s, 0.0))
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// Largest elementwise modulus of `self − other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        self.data.iter().zip(&other.data).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.max_abs_diff(&self.adjoint()) <= tol
    }

    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// `U · self · U†`.
    pub fn conjugate_by(&self, u: &Self) -> Self {
        &(u * self) * &u.adjoint()
    }

    fn try_binary(&self, other: &Self, op: impl Fn(Complex64, Complex64) -> Complex64) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        Self { dim: self.dim, data: self.data.iter().zip(&other.data).map(|(&a, &b)| op(a, b)).collect() }
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: Self) -> ComplexMatrix {
        self.try_binary(rhs, |a, b| a + b)
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: Self) -> ComplexMatrix {
        self.try_binary(rhs, |a, b| a - b)
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: Self) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let mut data = vec![ZERO; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == ZERO {
                    continue;
                }
                for j in 0..n {
                    data[i * n + j] += a * rhs.data[k * n + j];
                }
            }
        }
        ComplexMatrix { dim: n, data }
    }
}

/// Single-qubit Pauli matrix in the `{|0⟩, |1⟩}` basis.
pub fn pauli(axis: PauliAxis) -> ComplexMatrix {
    let i = Complex64::i();
    let data = match axis {
        PauliAxis::X => vec![ZERO, ONE, ONE, ZERO],
        PauliAxis::Y => vec![ZERO, -i, i, ZERO],
        PauliAxis::Z => vec![ONE, ZERO, ZERO, -ONE],
    };
    ComplexMatrix { dim: 2, data }
}

/// Kronecker product `a ⊗ b` of two single-qubit operators, `a`'s index major.
pub fn tensor(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    if a.dim != 2 || b.dim != 2 {
        return Err(Error::InvalidArgument(format!(
            "tensor expects two 2×2 factors, got {}×{} and {}×{}",
            a.dim, a.dim, b.dim, b.dim
        )));
    }
    let mut out = ComplexMatrix::zeros(4)?;
    for (i, j, k, l) in iproduct4() {
        out.set(2 * i + k, 2 * j + l, a.get(i, j) * b.get(k, l));
    }
    Ok(out)
}

fn iproduct4() -> impl Iterator<Item = (usize, usize, usize, usize)> {
    (0..16).map(|n| (n >> 3 & 1, n >> 2 & 1, n >> 1 & 1, n & 1))
}

/// Reduced operator of a two-qubit matrix, keeping `keep` and tracing out the
/// other qubit. No normalization or state check is done.
pub fn partial_trace_unchecked(rho: &ComplexMatrix, keep: Subsystem) -> ComplexMatrix {
    assert_eq!(rho.dim, 4, "partial trace needs a 4×4 operator");
    let mut out = ComplexMatrix { dim: 2, data: vec![ZERO; 4] };
    for r in 0..2 {
        for c in 0..2 {
            let z = match keep {
                Subsystem::A => rho.get(2 * r, 2 * c) + rho.get(2 * r + 1, 2 * c + 1),
                Subsystem::B => rho.get(r, c) + rho.get(2 + r, 2 + c),
            };
            out.set(r, c, z);
        }
    }
    out
}

/// Marginal density operator `ρ_A` or `ρ_B` of a two-qubit state.
pub fn partial_trace(rho: &ComplexMatrix, keep: Subsystem) -> Result<ComplexMatrix> {
    if rho.dim != 4 {
        return Err(Error::InvalidArgument(format!("partial trace of a {0}×{0} matrix", rho.dim)));
    }
    validate_density(rho)?;
    Ok(partial_trace_unchecked(rho, keep))
}

/// Hermiticity and unit trace. Positivity is checked where a spectrum exists.
pub fn validate_density(rho: &ComplexMatrix) -> Result<()> {
    if !rho.is_hermitian(HERMITIAN_TOL) {
        return Err(Error::InvalidState(format!(
            "operator is not Hermitian (max |M − M†| = {:e})",
            rho.max_abs_diff(&rho.adjoint())
        )));
    }
    let tr = rho.trace();
    if (tr.re - 1.0).abs() > TRACE_TOL || tr.im.abs() > TRACE_TOL {
        return Err(Error::InvalidState(format!("trace is {tr}, expected 1")));
    }
    Ok(())
}

/// Real eigenvalues in descending order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum(Vec<f64>);

impl Spectrum {
    /// Sorts the given values descending.
    pub fn new(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        Self(values)
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn sum(&self) -> f64 {
        self.0.iter().sum()
    }

    /// Shannon entropy in bits, treating the values as probabilities.
    pub fn entropy(&self) -> Result<f64> {
        shannon_entropy(&self.0)
    }
}

/// `−Σ p log₂ p` with `0·log 0 = 0`; small negative values are clamped and
/// anything below `−PSD_ERROR_TOL` is rejected.
pub fn shannon_entropy(probs: &[f64]) -> Result<f64> {
    let mut s = 0.0;
    for (index, &p) in probs.iter().enumerate() {
        if p < -PSD_ERROR_TOL {
            return Err(Error::NotAState { index, eigenvalue: p });
        }
        s -= xlog2x(p);
    }
    Ok(s)
}

/// `x log₂ x`, zero for `x ≤ 0`.
#[inline]
pub fn xlog2x(x: f64) -> f64 {
    if x > 0.0 {
        x * x.log2()
    } else {
        0.0
    }
}

/// Binary entropy `H₂(x)` in bits.
#[inline]
pub fn binary_entropy(x: f64) -> f64 {
    -xlog2x(x) - xlog2x(1.0 - x)
}

/// Eigenvalues of a 2×2 Hermitian matrix `[[a, b], [b*, d]]` in closed form,
/// larger first.
#[inline]
pub fn hermitian2_eigenvalues(a: f64, d: f64, b: Complex64) -> (f64, f64) {
    let mean = 0.5 * (a + d);
    let half = 0.5 * (a - d);
    let r = (half * half + b.norm_sqr()).sqrt();
    (mean + r, mean - r)
}

pub fn hermitian_eigenvalues(m: &ComplexMatrix) -> Result<Spectrum> {
    if !m.is_hermitian(HERMITIAN_TOL) {
        return Err(Error::InvalidArgument(format!(
            "eigenvalues requested for a non-Hermitian matrix (max |M − M†| = {:e})",
            m.max_abs_diff(&m.adjoint())
        )));
    }
    match m.dim {
        2 => {
            let (hi, lo) = hermitian2_eigenvalues(m.get(0, 0).re, m.get(1, 1).re, m.get(0, 1));
            Ok(Spectrum(vec![hi, lo]))
        }
        _ => Ok(Spectrum::new(jacobi_eigenvalues(m))),
    }
}

/// Cyclic complex Jacobi. Each rotation first removes the phase of the pivot
/// `a_pq`, then applies a real Givens rotation to zero it.
fn jacobi_eigenvalues(m: &ComplexMatrix) -> Vec<f64> {
    let n = m.dim;
    let mut a = m.data.clone();
    let scale = m.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt().max(1.0);
    let off = |a: &[Complex64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i * n + j].norm_sqr();
                }
            }
        }
        s.sqrt()
    };

    for _ in 0..JACOBI_MAX_SWEEPS {
        if off(&a) < JACOBI_OFF_TOL * scale {
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[p * n + q];
                let mag = apq.norm();
                if mag == 0.0 {
                    continue;
                }
                let phase = apq / mag;
                let app = a[p * n + p].re;
                let aqq = a[q * n + q].re;
                let t = 0.5 * (-2.0 * mag).atan2(app - aqq);
                let (s, c) = t.sin_cos();
                // Columns p, q of U: U_pp = c, U_qp = -s·e^{-iφ}, U_pq = s, U_qq = c·e^{-iφ}.
                let upp = Complex64::new(c, 0.0);
                let uqp = -phase.conj() * s;
                let upq = Complex64::new(s, 0.0);
                let uqq = phase.conj() * c;
                // A ← A U
                for r in 0..n {
                    let x = a[r * n + p];
                    let y = a[r * n + q];
                    a[r * n + p] = x * upp + y * uqp;
                    a[r * n + q] = x * upq + y * uqq;
                }
                // A ← U† A
                for col in 0..n {
                    let x = a[p * n + col];
                    let y = a[q * n + col];
                    a[p * n + col] = upp.conj() * x + uqp.conj() * y;
                    a[q * n + col] = upq.conj() * x + uqq.conj() * y;
                }
                a[p * n + q] = ZERO;
                a[q * n + p] = ZERO;
            }
        }
    }
    (0..n).map(|i| a[i * n + i].re).collect()
}

/// Von Neumann entropy in bits.
pub fn von_neumann_entropy(m: &ComplexMatrix) -> Result<f64> {
    validate_density(m)?;
    hermitian_eigenvalues(m)?.entropy()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn tensor_identity_and_zz() {
        let i2 = ComplexMatrix::identity(2).unwrap();
        assert_eq!(tensor(&i2, &i2).unwrap(), ComplexMatrix::identity(4).unwrap());
        let zz = tensor(&pauli(PauliAxis::Z), &pauli(PauliAxis::Z)).unwrap();
        assert_eq!(zz, ComplexMatrix::from_real_diagonal(&[1.0, -1.0, -1.0, 1.0]).unwrap());
    }

    #[test]
    fn tensor_xx_entries() {
        // ¼(1 + σx⊗σx)
        let xx = tensor(&pauli(PauliAxis::X), &pauli(PauliAxis::X)).unwrap();
        let rho = (&ComplexMatrix::identity(4).unwrap() + &xx).scale_real(0.25);
        assert_eq!(rho.get(0, 3), c(0.25, 0.0));
        assert_eq!(rho.get(1, 2), c(0.25, 0.0));
        assert_eq!(rho.get(0, 1), c(0.0, 0.0));
    }

    #[test]
    fn tensor_rejects_4x4_factor() {
        let i4 = ComplexMatrix::identity(4).unwrap();
        let i2 = ComplexMatrix::identity(2).unwrap();
        assert!(matches!(tensor(&i4, &i2), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn partial_trace_of_product_state() {
        let zero = ComplexMatrix::from_real_diagonal(&[1.0, 0.0]).unwrap();
        let one = ComplexMatrix::from_real_diagonal(&[0.0, 1.0]).unwrap();
        let rho = tensor(&zero, &one).unwrap();
        assert_eq!(partial_trace(&rho, Subsystem::A).unwrap(), zero);
        assert_eq!(partial_trace(&rho, Subsystem::B).unwrap(), one);
    }

    #[test]
    fn partial_trace_rejects_bad_trace() {
        let rho = ComplexMatrix::identity(4).unwrap();
        assert!(matches!(partial_trace(&rho, Subsystem::A), Err(Error::InvalidState(_))));
    }

    #[test]
    fn eigenvalues_of_diagonal() {
        let m = ComplexMatrix::from_real_diagonal(&[0.1, 0.4, 0.2, 0.3]).unwrap();
        let s = hermitian_eigenvalues(&m).unwrap();
        assert_eq!(s.values(), &[0.4, 0.3, 0.2, 0.1]);
    }

    #[test]
    fn eigenvalues_of_bell_projector() {
        let v = [c(0.5f64.sqrt(), 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.5f64.sqrt(), 0.0)];
        let s = hermitian_eigenvalues(&ComplexMatrix::outer(&v).unwrap()).unwrap();
        for (got, want) in s.values().iter().zip([1.0, 0.0, 0.0, 0.0]) {
            assert!((got - want).abs() < 1e-12, "{got} vs {want}");
        }
    }

    #[test]
    fn eigenvalues_reject_non_hermitian() {
        let mut m = ComplexMatrix::identity(2).unwrap();
        m.set(0, 1, c(1.0, 0.0));
        assert!(matches!(hermitian_eigenvalues(&m), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn complex_pivot_is_diagonalized() {
        // σy ⊗ σy + diag has purely imaginary-free but phase-carrying pivots after mixing.
        let mut m = ComplexMatrix::from_real_diagonal(&[0.3, 0.2, 0.1, 0.4]).unwrap();
        m.set(0, 1, c(0.05, 0.07));
        m.set(1, 0, c(0.05, -0.07));
        m.set(2, 3, c(0.0, -0.02));
        m.set(3, 2, c(0.0, 0.02));
        let s = hermitian_eigenvalues(&m).unwrap();
        // 2×2 blocks decouple; compare against closed form.
        let (a, b) = hermitian2_eigenvalues(0.3, 0.2, c(0.05, 0.07));
        let (x, y) = hermitian2_eigenvalues(0.1, 0.4, c(0.0, -0.02));
        let want = Spectrum::new(vec![a, b, x, y]);
        for (g, w) in s.values().iter().zip(want.values()) {
            assert!((g - w).abs() < 1e-12);
        }
    }

    #[test]
    fn entropy_examples() {
        let half = ComplexMatrix::identity(2).unwrap().scale_real(0.5);
        assert!((von_neumann_entropy(&half).unwrap() - 1.0).abs() < 1e-14);
        let pure = ComplexMatrix::from_real_diagonal(&[1.0, 0.0]).unwrap();
        assert_eq!(von_neumann_entropy(&pure).unwrap(), 0.0);
        let m = ComplexMatrix::from_real_diagonal(&[0.325, 0.325, 0.175, 0.175]).unwrap();
        assert!((von_neumann_entropy(&m).unwrap() - 1.934068055375).abs() < 1e-11);
    }

    #[test]
    fn entropy_rejects_negative_probability() {
        let m = ComplexMatrix::from_real_diagonal(&[1.1, -0.1]).unwrap();
        assert!(matches!(von_neumann_entropy(&m), Err(Error::NotAState { .. })));
        // rounding-level negatives are clamped
        assert_eq!(shannon_entropy(&[1.0, -1e-11]).unwrap(), 0.0);
    }

    fn arb_hermitian2() -> impl Strategy<Value = ComplexMatrix> {
        (-1.0..1.0f64, -1.0..1.0f64, -1.0..1.0f64, -1.0..1.0f64).prop_map(|(a, d, re, im)| {
            ComplexMatrix::from_vec(2, vec![c(a, 0.0), c(re, im), c(re, -im), c(d, 0.0)]).unwrap()
        })
    }

    fn arb_unitary4() -> impl Strategy<Value = ComplexMatrix> {
        // exp(-iθ σ⊗σ) style rotations composed from Pauli products
        prop::collection::vec((0usize..16, -3.0..3.0f64), 1..6).prop_map(|gens| {
            let axes = [None, Some(PauliAxis::X), Some(PauliAxis::Y), Some(PauliAxis::Z)];
            let one = |ax: Option<PauliAxis>| ax.map(pauli).unwrap_or_else(|| ComplexMatrix::identity(2).unwrap());
            let mut u = ComplexMatrix::identity(4).unwrap();
            for (g, t) in gens {
                let p = tensor(&one(axes[g / 4]), &one(axes[g % 4])).unwrap();
                // P² = I ⇒ exp(-itP) = cos t I − i sin t P
                let r = &ComplexMatrix::identity(4).unwrap().scale_real(t.cos()) + &p.scale(c(0.0, -t.sin()));
                u = &r * &u;
            }
            u
        })
    }

    fn arb_hermitian4() -> impl Strategy<Value = ComplexMatrix> {
        prop::collection::vec(-1.0..1.0f64, 16).prop_map(|v| {
            let mut m = ComplexMatrix::zeros(4).unwrap();
            let mut k = 0;
            for i in 0..4 {
                m.set(i, i, c(v[k], 0.0));
                k += 1;
                for j in i + 1..4 {
                    m.set(i, j, c(v[k], v[k + 1]));
                    m.set(j, i, c(v[k], -v[k + 1]));
                    k += 2;
                }
            }
            m
        })
    }

    proptest! {
        #[test]
        fn tensor_trace_multiplies(a in arb_hermitian2(), b in arb_hermitian2()) {
            let t = tensor(&a, &b).unwrap().trace();
            prop_assert!((t - a.trace() * b.trace()).norm() < 1e-12);
        }

        #[test]
        fn partial_trace_recovers_factor(a in arb_hermitian2(), b in arb_hermitian2()) {
            let ab = tensor(&a, &b).unwrap();
            let ra = partial_trace_unchecked(&ab, Subsystem::A);
            let rb = partial_trace_unchecked(&ab, Subsystem::B);
            prop_assert!(ra.max_abs_diff(&a.scale(b.trace())) < 1e-12);
            prop_assert!(rb.max_abs_diff(&b.scale(a.trace())) < 1e-12);
        }

        #[test]
        fn spectrum_is_unitarily_invariant(m in arb_hermitian4(), u in arb_unitary4()) {
            let s1 = hermitian_eigenvalues(&m).unwrap();
            let rotated = m.conjugate_by(&u);
            // rounding can leave ~1e-16 asymmetry; symmetrize before solving
            let rotated = (&rotated + &rotated.adjoint()).scale_real(0.5);
            let s2 = hermitian_eigenvalues(&rotated).unwrap();
            for (x, y) in s1.values().iter().zip(s2.values()) {
                prop_assert!((x - y).abs() < 1e-9, "{:?} vs {:?}", s1, s2);
            }
            prop_assert!((s1.sum() - m.trace().re).abs() < 1e-10);
        }

        #[test]
        fn jacobi_reconstructs_characteristic_traces(m in arb_hermitian4()) {
            // tr(M²) = Σλ² is an independent check on the spectrum
            let s = hermitian_eigenvalues(&m).unwrap();
            let tr2 = (&m * &m).trace().re;
            let sum2: f64 = s.values().iter().map(|x| x * x).sum();
            prop_assert!((tr2 - sum2).abs() < 1e-12);
        }
    }
}
