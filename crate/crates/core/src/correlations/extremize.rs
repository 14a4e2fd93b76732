//! Minimization of the measured conditional entropy over projective
//! measurements on qubit B.
//!
//! A measurement is the projector pair built from
//! `|Θ⟩ = cos θ|0⟩ + e^{iφ} sin θ|1⟩` and its complement, with
//! `θ ∈ [0, π/2]`, `φ ∈ [0, π)`. The search is an exhaustive `n × n` grid
//! followed by alternating golden-section line searches in θ and φ.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::exec::Execution;
use crate::linalg::{xlog2x, ComplexMatrix};

use super::MeasurementBasis;

/// Conditional states of qubit A with weight below this are dropped.
pub const MIN_OUTCOME_PROBABILITY: f64 = 1e-14;

/// Golden-section bracket resolution, in radians.
const LINE_SEARCH_XTOL: f64 = 1e-10;

const INV_PHI: f64 = 0.618_033_988_749_894_8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtremizeOptions {
    /// Grid points per angle; at least 32.
    pub grid_n: usize,
    /// Coordinate descent stops once a sweep improves the objective by less.
    pub refine_tol: f64,
    pub max_refine_iters: usize,
    pub exec: Execution,
}

impl Default for ExtremizeOptions {
    fn default() -> Self {
        Self { grid_n: 256, refine_tol: 1e-12, max_refine_iters: 200, exec: Execution::default() }
    }
}

/// Hermitian 2×2 block `[[a, b], [b*, d]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Herm2 {
    a: f64,
    d: f64,
    b: Complex64,
}

impl Herm2 {
    fn block(rho: &ComplexMatrix, k: usize, l: usize) -> (Complex64, Complex64, Complex64, Complex64) {
        // (B_kl)_{xy} = ρ_{2x+k, 2y+l}
        (rho.get(k, l), rho.get(k, 2 + l), rho.get(2 + k, l), rho.get(2 + k, 2 + l))
    }

    #[inline]
    fn combine(s0: f64, x: &Herm2, s1: f64, y: &Herm2, s2: f64, z: &Herm2) -> Herm2 {
        Herm2 {
            a: s0 * x.a + s1 * y.a + s2 * z.a,
            d: s0 * x.d + s1 * y.d + s2 * z.d,
            b: x.b * s0 + y.b * s1 + z.b * s2,
        }
    }

    #[inline]
    fn minus(&self, other: &Herm2) -> Herm2 {
        Herm2 { a: self.a - other.a, d: self.d - other.d, b: self.b - other.b }
    }

    /// `q · S(ρ/q)` for the unnormalized conditional state, in bits.
    #[inline]
    fn weighted_entropy(&self) -> f64 {
        let q = self.a + self.d;
        if q < MIN_OUTCOME_PROBABILITY {
            return 0.0;
        }
        let half = 0.5 * (self.a - self.d);
        let r = (2.0 * (half * half + self.b.norm_sqr()).sqrt() / q).min(1.0);
        // S = 1 − ½[(1+r)log(1+r) + (1−r)log(1−r)]
        q * (1.0 - 0.5 * (xlog2x(1.0 + r) + xlog2x(1.0 - r)))
    }
}

/// The measured conditional entropy `Σⱼ qⱼ S(ρ_A^j)` of a fixed two-qubit
/// state as a function of the measurement angles.
///
/// For `Π = |Θ⟩⟨Θ|` the unnormalized conditional state of A is
/// `Tr_B[(1⊗Π)ρ] = cos²θ B₀₀ + sin²θ B₁₁ + cosθ sinθ (e^{iφ}B₀₁ + h.c.)`,
/// where `B_kl` are the 2×2 blocks of ρ in B's indices. The complementary
/// outcome is `ρ_A` minus that.
#[derive(Debug, Clone)]
pub struct ConditionalEntropyKernel {
    rho_a: Herm2,
    b00: Herm2,
    b11: Herm2,
    b01: [Complex64; 4],
}

impl ConditionalEntropyKernel {
    pub fn new(rho: &ComplexMatrix) -> Self {
        assert_eq!(rho.dim(), 4, "kernel needs a two-qubit operator");
        let herm = |k| {
            let (xa, xb, _, xd) = Herm2::block(rho, k, k);
            Herm2 { a: xa.re, d: xd.re, b: xb }
        };
        let b00 = herm(0);
        let b11 = herm(1);
        let (p, q, r, s) = Herm2::block(rho, 0, 1);
        let rho_a = Herm2 { a: b00.a + b11.a, d: b00.d + b11.d, b: b00.b + b11.b };
        Self { rho_a, b00, b11, b01: [p, q, r, s] }
    }

    /// `e^{iφ}B₀₁ + (e^{iφ}B₀₁)†`.
    #[inline]
    fn phase_part(&self, phi: f64) -> Herm2 {
        let (s, c) = phi.sin_cos();
        let w = Complex64::new(c, s);
        let [p, q, r, t] = self.b01.map(|z| z * w);
        Herm2 { a: 2.0 * p.re, d: 2.0 * t.re, b: q + r.conj() }
    }

    #[inline]
    fn eval_parts(&self, cos2: f64, sin2: f64, cross: f64, phase: &Herm2) -> f64 {
        let par = Herm2::combine(cos2, &self.b00, sin2, &self.b11, cross, phase);
        let perp = self.rho_a.minus(&par);
        par.weighted_entropy() + perp.weighted_entropy()
    }

    pub fn eval(&self, theta: f64, phi: f64) -> f64 {
        let (s, c) = theta.sin_cos();
        self.eval_parts(c * c, s * s, c * s, &self.phase_part(phi))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Minimum {
    pub value: f64,
    pub basis: MeasurementBasis,
    pub grid_index: (usize, usize),
}

pub fn grid_theta(grid_n: usize, i: usize) -> f64 {
    FRAC_PI_2 * i as f64 / (grid_n - 1) as f64
}

pub fn grid_phi(grid_n: usize, j: usize) -> f64 {
    PI * j as f64 / grid_n as f64
}

/// Exhaustive grid minimum. Ties go to the lowest `(i, j)` so the result is
/// independent of evaluation order.
pub fn grid_minimum(kernel: &ConditionalEntropyKernel, grid_n: usize, exec: Execution) -> Minimum {
    assert!(grid_n >= 2);
    let phases: Vec<Herm2> = (0..grid_n).map(|j| kernel.phase_part(grid_phi(grid_n, j))).collect();
    let rows = exec.map_range(grid_n, |i| {
        let (s, c) = grid_theta(grid_n, i).sin_cos();
        let (cos2, sin2, cross) = (c * c, s * s, c * s);
        let mut best = (f64::INFINITY, 0);
        for (j, ph) in phases.iter().enumerate() {
            let v = kernel.eval_parts(cos2, sin2, cross, ph);
            if v < best.0 {
                best = (v, j);
            }
        }
        best
    });
    let (i, &(value, j)) = rows
        .iter()
        .enumerate()
        .fold(None::<(usize, &(f64, usize))>, |acc, (i, row)| match acc {
            Some((_, b)) if b.0 <= row.0 => acc,
            _ => Some((i, row)),
        })
        .expect("non-empty grid");
    Minimum {
        value,
        basis: MeasurementBasis::new_unchecked(grid_theta(grid_n, i), grid_phi(grid_n, j)),
        grid_index: (i, j),
    }
}

/// Golden-section minimization of `f` on `[lo, hi]`. Returns the best
/// abscissa seen and its value.
pub fn golden_section(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, xtol: f64) -> (f64, f64) {
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > xtol {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        }
    }
    let (flo, fhi) = (f(lo), f(hi));
    [(x1, f1), (x2, f2), (lo, flo), (hi, fhi)]
        .into_iter()
        .fold((x1, f1), |best, cand| if cand.1 < best.1 { cand } else { best })
}

/// Grid search then coordinate-descent refinement.
pub fn minimize(kernel: &ConditionalEntropyKernel, opts: &ExtremizeOptions) -> Minimum {
    let start = grid_minimum(kernel, opts.grid_n, opts.exec);
    let h_theta = FRAC_PI_2 / (opts.grid_n - 1) as f64;
    let h_phi = PI / opts.grid_n as f64;
    let (mut theta, mut phi) = (start.basis.theta, start.basis.phi);
    let mut best = start.value;

    for _ in 0..opts.max_refine_iters {
        let (t, _) = golden_section(
            |t| kernel.eval(t, phi),
            (theta - h_theta).max(0.0),
            (theta + h_theta).min(FRAC_PI_2),
            LINE_SEARCH_XTOL,
        );
        let (u, _) = golden_section(|u| kernel.eval(t, u), phi - h_phi, phi + h_phi, LINE_SEARCH_XTOL);
        let value = kernel.eval(t, u);
        if !(value < best) {
            break;
        }
        let gain = best - value;
        best = value;
        theta = t;
        phi = u;
        if gain < opts.refine_tol {
            break;
        }
    }

    Minimum {
        value: best,
        basis: MeasurementBasis::new_unchecked(theta.clamp(0.0, FRAC_PI_2), phi.rem_euclid(PI)),
        grid_index: start.grid_index,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{bell_state_matrix, BellVector};

    #[test]
    fn golden_section_finds_parabola_vertex() {
        let (x, fx) = golden_section(|x| (x - 0.3).powi(2) + 1.0, 0.0, 1.0, 1e-10);
        // a quadratic minimum is only resolvable to about sqrt(eps)
        assert!((x - 0.3).abs() < 1e-7);
        let (x, _) = golden_section(|x| (x - 0.3).powi(2), 0.0, 1.0, 1e-10);
        assert!((x - 0.3).abs() < 1e-9);
        assert!((fx - 1.0).abs() < 1e-15);
    }

    #[test]
    fn golden_section_handles_boundary_minimum() {
        let (x, _) = golden_section(|x| x, 0.0, 0.01, 1e-10);
        assert_eq!(x, 0.0);
    }

    #[test]
    fn kernel_matches_projector_route() {
        let rho = bell_state_matrix(&BellVector::new(0.06, 0.42, 0.30).unwrap()).unwrap();
        let k = ConditionalEntropyKernel::new(&rho);
        // independent numpy evaluation of Σ q_j S(ρ_A^j) at θ=0.3, φ=0.7
        assert!((k.eval(0.3, 0.7) - 0.937549585320).abs() < 1e-11);
    }

    #[test]
    fn grid_is_order_independent() {
        let rho = bell_state_matrix(&BellVector::new(0.2, -0.2, 0.2).unwrap()).unwrap();
        let k = ConditionalEntropyKernel::new(&rho);
        let a = grid_minimum(&k, 64, Execution::Sequential);
        let b = grid_minimum(&k, 64, Execution::Parallel);
        assert_eq!(a, b);
        // the landscape is flat, so every grid point is within rounding of the minimum
        assert!((k.eval(0.0, 0.0) - a.value).abs() < 1e-14);
    }
}
