//! Correlation dynamics under a flip channel.
//!
//! For a channel that preserves axis `k`, write `κ = |c_k|` and
//! `m = max |c_j|` over the other two axes. Then
//!
//! * regime (i) when `κ ≥ m`: `C` is constant in `p`, `Q` decays;
//! * regime (ii) when `0 < κ < m`: `C` decays until `p_SC = 1 − √(κ/m)` and
//!   is constant afterwards, while `Q` changes its decay rate abruptly there;
//! * regime (iii) when `κ = 0`: both decay monotonically.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::channels::{evolve_coefficients, kraus_set, ChannelKind};
use crate::correlations::{
    classical_correlation_numeric, dominant_axis, mutual_information_analytic, record_analytic, CorrelationRecord,
    ExtremizeOptions, MeasurementBasis,
};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::linalg::{tensor, ComplexMatrix, PauliAxis, Subsystem};
use crate::states::{bell_state_matrix, BellVector};

/// Commutators smaller than this count as vanishing.
pub const COMMUTATOR_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Regime {
    /// (i) classical correlation frozen
    #[serde(rename = "i")]
    ConstantClassical,
    /// (ii) sudden change at `p_SC`
    #[serde(rename = "ii")]
    SuddenChange,
    /// (iii) monotonic decay of both
    #[serde(rename = "iii")]
    MonotonicDecay,
}

impl Regime {
    pub fn label(self) -> &'static str {
        match self {
            Regime::ConstantClassical => "i",
            Regime::SuddenChange => "ii",
            Regime::MonotonicDecay => "iii",
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegimeReport {
    pub regime: Regime,
    pub p_sc: Option<f64>,
    /// Axis whose coefficient fixes `C` for all `p` (regime (i) only).
    pub constant_axis: Option<PauliAxis>,
    pub description: String,
}

/// The preserved-axis magnitude and the largest magnitude on the damped axes.
fn preserved_and_damped(c: &BellVector, kind: ChannelKind) -> (f64, f64) {
    let kept = kind.flip_axis();
    let damped = PauliAxis::ALL.into_iter().filter(|&a| a != kept).map(|a| c.component(a).abs()).fold(0.0, f64::max);
    (c.component(kept).abs(), damped)
}

pub fn classify_regime(c: &BellVector, kind: ChannelKind) -> RegimeReport {
    let (kept, damped) = preserved_and_damped(c, kind);
    let axis = kind.flip_axis();
    if kept >= damped {
        RegimeReport {
            regime: Regime::ConstantClassical,
            p_sc: None,
            constant_axis: Some(axis),
            description: format!("|c{axis}| = {kept} dominates: C is constant under {kind}, Q decays monotonically"),
        }
    } else if kept == 0.0 {
        RegimeReport {
            regime: Regime::MonotonicDecay,
            p_sc: None,
            constant_axis: None,
            description: format!("c{axis} = 0: C and Q both decay monotonically under {kind}"),
        }
    } else {
        let p_sc = 1.0 - (kept / damped).sqrt();
        RegimeReport {
            regime: Regime::SuddenChange,
            p_sc: Some(p_sc),
            constant_axis: None,
            description: format!(
                "C decays until p_sc = {p_sc:.6} and is constant afterwards; Q changes decay rate there"
            ),
        }
    }
}

/// `p_SC` for regime (ii), `None` otherwise.
pub fn sudden_change_time(c: &BellVector, kind: ChannelKind) -> Option<f64> {
    classify_regime(c, kind).p_sc
}

/// Largest elementwise `[Πⱼ, Γₖ^(B)]` over both projectors and both Kraus
/// operators, at `p = ½`.
pub fn commutator_norm(basis: &MeasurementBasis, kind: ChannelKind) -> f64 {
    let kraus = kraus_set(kind, Subsystem::B, 0.5).expect("p = 1/2 is valid");
    let id = ComplexMatrix::identity(2).expect("dim 2");
    basis
        .projectors()
        .iter()
        .map(|proj| tensor(&id, proj).expect("2×2 factors"))
        .flat_map(|big| kraus.operators.iter().map(move |g| big.commutator(g).max_abs()).collect::<Vec<_>>())
        .fold(0.0, f64::max)
}

/// Whether measuring in `basis` commutes with the channel's Kraus operators
/// on B, the condition for `C` to stay constant.
pub fn commutation_condition(basis: &MeasurementBasis, kind: ChannelKind) -> bool {
    commutator_norm(basis, kind) <= COMMUTATOR_TOL
}

/// Extremization-free correlations: `C = I(ε(ρ)|_{p=1})`, `Q = I(ρ) − C`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OperationalMeasure {
    #[serde(rename = "Q")]
    pub quantum: f64,
    #[serde(rename = "C")]
    pub classical: f64,
    #[serde(rename = "I")]
    pub mutual: f64,
    pub channel_used: ChannelKind,
    /// Two or more coefficients tied for the largest magnitude; the channel
    /// was picked by the axis preference 3 > 1 > 2.
    pub tie_broken: bool,
}

pub fn operational_discord(c: &BellVector) -> Result<OperationalMeasure> {
    c.validate()?;
    let arr = c.as_array();
    let (axis, max) = dominant_axis(arr);
    let ties = arr.iter().filter(|x| x.abs() == max).count();
    let channel = ChannelKind::preserving(axis);
    let mutual = mutual_information_analytic(&c.as_evolved())?;
    let classical = mutual_information_analytic(&evolve_coefficients(c, channel, 1.0)?)?;
    Ok(OperationalMeasure {
        quantum: mutual - classical,
        classical,
        mutual,
        channel_used: channel,
        tie_broken: ties > 1,
    })
}

/// The operational measure next to a numeric extremization of `C` at `p = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OperationalCheck {
    pub measure: OperationalMeasure,
    pub numeric_classical: f64,
    pub numeric_basis: MeasurementBasis,
    /// `|C_operational − C_numeric|`
    pub discrepancy: f64,
    /// Commutation condition for the selected channel, checked on the
    /// eigenbasis of the dominant axis.
    pub commutes: bool,
}

pub fn operational_discord_checked(c: &BellVector, opts: &ExtremizeOptions) -> Result<OperationalCheck> {
    let measure = operational_discord(c)?;
    let numeric = classical_correlation_numeric(&bell_state_matrix(c)?, opts)?;
    let (axis, _) = dominant_axis(c.as_array());
    Ok(OperationalCheck {
        measure,
        numeric_classical: numeric.value,
        numeric_basis: numeric.basis,
        discrepancy: (measure.classical - numeric.value).abs(),
        commutes: commutation_condition(&MeasurementBasis::eigenbasis_of(axis), measure.channel_used),
    })
}

/// Uniform `p` grid `start, start + step, …` up to `stop`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PGrid {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl PGrid {
    pub fn new(start: f64, stop: f64, step: f64) -> Result<Self> {
        let g = Self { start, stop, step };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.step > 0.0) || !self.step.is_finite() {
            return Err(Error::InvalidArgument(format!("step {} must be positive", self.step)));
        }
        if !(self.start <= self.stop) {
            return Err(Error::InvalidArgument(format!("start {} exceeds stop {}", self.start, self.stop)));
        }
        if self.start < 0.0 || self.stop > 1.0 {
            return Err(Error::InvalidArgument(format!("range [{}, {}] leaves [0, 1]", self.start, self.stop)));
        }
        Ok(())
    }

    pub fn points(&self) -> Vec<f64> {
        grid_points(self.start, self.stop, self.step)
    }
}

/// `start + k·step` for `k = 0..`, stopping at `stop` (with a little slack
/// for accumulated rounding in `(stop − start)/step`). Points are snapped to
/// multiples of `1e-12` so that decimal grids hit values like `0.1` exactly.
pub fn grid_points(start: f64, stop: f64, step: f64) -> Vec<f64> {
    let n = ((stop - start) / step + 1e-9).floor() as usize + 1;
    (0..n).map(|k| snap(start + k as f64 * step).min(stop)).collect()
}

fn snap(x: f64) -> f64 {
    (x * 1e12).round() / 1e12
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    pub channel: ChannelKind,
    pub state: BellVector,
    pub regime: Regime,
    pub samples: Vec<CorrelationRecord>,
    /// `p` values where `Q = C`, linearly interpolated between samples.
    pub crossings: Vec<f64>,
    /// First sample at which the optimal branch differs from its predecessor.
    pub p_sc_detected: Option<f64>,
    /// Closed-form sudden-change time.
    pub p_sc: Option<f64>,
}

/// Closed-form trajectory on an increasing `p` grid.
pub fn sweep(c: &BellVector, kind: ChannelKind, p_grid: &[f64], exec: Execution) -> Result<SweepResult> {
    c.validate()?;
    if let Some(bad) = p_grid.iter().find(|p| !(0.0..=1.0).contains(*p)) {
        return Err(Error::InvalidArgument(format!("p = {bad} outside [0, 1]")));
    }
    if p_grid.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::InvalidArgument("p grid must be strictly increasing".into()));
    }
    let samples = exec
        .map(p_grid, |&p| record_analytic(&evolve_coefficients(c, kind, p)?, p))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let report = classify_regime(c, kind);
    Ok(SweepResult {
        channel: kind,
        state: *c,
        regime: report.regime,
        crossings: crossings(&samples),
        p_sc_detected: samples.windows(2).find(|w| w[0].branch != w[1].branch).map(|w| w[1].p),
        p_sc: report.p_sc,
        samples,
    })
}

/// Zeros of `Q − C` by sign change and linear interpolation.
pub fn crossings(samples: &[CorrelationRecord]) -> Vec<f64> {
    let diff = |r: &CorrelationRecord| r.quantum - r.classical;
    let mut out = Vec::new();
    if let Some(first) = samples.first() {
        if diff(first) == 0.0 {
            out.push(first.p);
        }
    }
    for w in samples.windows(2) {
        let (d0, d1) = (diff(&w[0]), diff(&w[1]));
        if d1 == 0.0 {
            out.push(w[1].p);
        } else if d0 != 0.0 && d0.signum() != d1.signum() {
            out.push(w[0].p + (w[1].p - w[0].p) * d0 / (d0 - d1));
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CellFlag {
    Ok,
    NoSuddenChange,
    Unphysical,
}

impl CellFlag {
    pub fn label(self) -> &'static str {
        match self {
            CellFlag::Ok => "ok",
            CellFlag::NoSuddenChange => "no-sudden-change",
            CellFlag::Unphysical => "unphysical",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SurfaceCell {
    /// Coefficient on the lower-indexed scanned axis.
    pub u: f64,
    /// Coefficient on the higher-indexed scanned axis.
    pub v: f64,
    /// `p_SC` for `ok` cells; `0` where the preserved coefficient dominates
    /// and `1` where it vanishes; `None` for unphysical cells.
    pub p_sc: Option<f64>,
    pub flag: CellFlag,
}

/// Range for both scanned coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SurfaceGrid {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl SurfaceGrid {
    pub fn validate(&self) -> Result<()> {
        if !(self.step > 0.0) || !(self.start <= self.stop) || self.start < -1.0 || self.stop > 1.0 {
            return Err(Error::InvalidArgument(format!(
                "coefficient grid {}:{}:{} must satisfy -1 <= start <= stop <= 1, step > 0",
                self.start, self.stop, self.step
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Surface {
    pub channel: ChannelKind,
    pub fixed_axis: PauliAxis,
    pub fixed_value: f64,
    pub scanned_axes: (PauliAxis, PauliAxis),
    /// Row-major: `u` outer, `v` inner.
    pub cells: Vec<SurfaceCell>,
}

/// The two axes a channel damps, ascending.
pub fn scanned_axes(kind: ChannelKind) -> (PauliAxis, PauliAxis) {
    let mut it = PauliAxis::ALL.into_iter().filter(|&a| a != kind.flip_axis());
    (it.next().expect("two axes"), it.next().expect("two axes"))
}

/// `p_SC` over a square grid of the two damped coefficients, with the
/// preserved one held at `fixed_value`.
pub fn surface(kind: ChannelKind, fixed_value: f64, grid: &SurfaceGrid, exec: Execution) -> Result<Surface> {
    if !(-1.0..=1.0).contains(&fixed_value) {
        return Err(Error::InvalidArgument(format!("fixed coefficient {fixed_value} outside [-1, 1]")));
    }
    grid.validate()?;
    let values = grid_points(grid.start, grid.stop, grid.step);
    let (ua, va) = scanned_axes(kind);
    let fixed_axis = kind.flip_axis();
    let pairs: Vec<(f64, f64)> = values.iter().flat_map(|&u| values.iter().map(move |&v| (u, v))).collect();
    let cells = exec.map(&pairs, |&(u, v)| {
        let mut c = [0.0; 3];
        c[fixed_axis.index() - 1] = fixed_value;
        c[ua.index() - 1] = u;
        c[va.index() - 1] = v;
        let state = BellVector::from_array(c);
        if !state.is_physical() {
            return SurfaceCell { u, v, p_sc: None, flag: CellFlag::Unphysical };
        }
        let report = classify_regime(&state, kind);
        match (report.regime, report.p_sc) {
            (Regime::SuddenChange, Some(p)) => SurfaceCell { u, v, p_sc: Some(p), flag: CellFlag::Ok },
            (Regime::MonotonicDecay, _) => SurfaceCell { u, v, p_sc: Some(1.0), flag: CellFlag::NoSuddenChange },
            _ => SurfaceCell { u, v, p_sc: Some(0.0), flag: CellFlag::NoSuddenChange },
        }
    });
    Ok(Surface { channel: kind, fixed_axis, fixed_value, scanned_axes: (ua, va), cells })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::correlations::quantum_discord_analytic;
    use proptest::prelude::*;
    use std::f64::consts::FRAC_PI_4;

    fn bv(a: f64, b: f64, c: f64) -> BellVector {
        BellVector::new(a, b, c).unwrap()
    }

    #[test]
    fn sudden_change_examples() {
        let p = sudden_change_time(&bv(0.06, 0.42, 0.30), ChannelKind::PhaseFlip).unwrap();
        assert!((p - 0.154845745271).abs() < 1e-11);
        assert!((0.150..=0.160).contains(&p));
        assert_eq!(sudden_change_time(&bv(0.1, 0.1, 0.5), ChannelKind::PhaseFlip), None);
        let q = sudden_change_time(&bv(0.30, 0.42, 0.06), ChannelKind::BitFlip).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn regime_examples() {
        assert_eq!(classify_regime(&bv(0.06, 0.42, 0.30), ChannelKind::PhaseFlip).regime, Regime::SuddenChange);
        let r = classify_regime(&bv(0.2, 0.1, 0.5), ChannelKind::PhaseFlip);
        assert_eq!((r.regime, r.constant_axis), (Regime::ConstantClassical, Some(PauliAxis::Z)));
        assert_eq!(classify_regime(&bv(0.5, 0.3, 0.0), ChannelKind::PhaseFlip).regime, Regime::MonotonicDecay);
        // boundary tie goes to (i) with no sudden change
        let r = classify_regime(&bv(0.3, 0.1, 0.3), ChannelKind::PhaseFlip);
        assert_eq!((r.regime, r.p_sc), (Regime::ConstantClassical, None));
        let r = classify_regime(&bv(0.5, 0.2, 0.1), ChannelKind::BitFlip);
        assert_eq!(r.constant_axis, Some(PauliAxis::X));
    }

    #[test]
    fn commutation_examples() {
        assert!(commutation_condition(&MeasurementBasis::Z, ChannelKind::PhaseFlip));
        assert!(!commutation_condition(&MeasurementBasis::Z, ChannelKind::BitFlip));
        assert!(!commutation_condition(&MeasurementBasis::Z, ChannelKind::BitPhaseFlip));
        assert!(commutation_condition(&MeasurementBasis::X, ChannelKind::BitFlip));
        assert!(commutation_condition(&MeasurementBasis::Y, ChannelKind::BitPhaseFlip));
        assert!(!commutation_condition(&MeasurementBasis::new(0.3, 0.2).unwrap(), ChannelKind::PhaseFlip));
    }

    #[test]
    fn operational_examples() {
        let m = operational_discord(&bv(0.1, 0.1, 0.5)).unwrap();
        assert_eq!(m.channel_used, ChannelKind::PhaseFlip);
        assert!((m.classical - 0.188721875541).abs() < 1e-11);
        let q = quantum_discord_analytic(&bv(0.1, 0.1, 0.5).as_evolved()).unwrap();
        assert!((m.quantum - q).abs() < 1e-9);
        let z = operational_discord(&BellVector::zero()).unwrap();
        assert_eq!((z.quantum, z.classical), (0.0, 0.0));
        assert!(z.tie_broken);
        let b = operational_discord(&bv(1.0, -1.0, 1.0)).unwrap();
        assert!((b.quantum - 1.0).abs() < 1e-9 && (b.classical - 1.0).abs() < 1e-9);
    }

    #[test]
    fn operational_check_reports_discrepancy() {
        let opts = ExtremizeOptions { grid_n: 64, ..Default::default() };
        let chk = operational_discord_checked(&bv(0.06, 0.42, 0.30), &opts).unwrap();
        assert_eq!(chk.measure.channel_used, ChannelKind::BitPhaseFlip);
        assert!(chk.commutes);
        assert!(chk.discrepancy < 1e-9);
        assert!((chk.numeric_basis.theta - FRAC_PI_4).abs() < 1e-3);
    }

    #[test]
    fn grid_points_edge_cases() {
        assert_eq!(grid_points(0.2, 0.3, 0.5), vec![0.2]);
        let g = grid_points(0.0, 1.0, 1e-3);
        assert_eq!(g.len(), 1001);
        assert_eq!(*g.last().unwrap(), 1.0);
        assert!(PGrid::new(0.5, 0.1, 0.1).is_err());
        assert!(PGrid::new(0.0, 1.0, 0.0).is_err());
        assert!(PGrid::new(0.0, 1.5, 0.1).is_err());
    }

    #[test]
    fn sudden_change_sweep() {
        let c = bv(0.06, 0.42, 0.30);
        let grid = grid_points(0.0, 1.0, 1e-3);
        let s = sweep(&c, ChannelKind::PhaseFlip, &grid, Execution::Sequential).unwrap();
        assert_eq!(s.crossings.len(), 2);
        assert!((s.crossings[0] - 0.09332).abs() < 1e-3, "{:?}", s.crossings);
        assert!((s.crossings[1] - 0.1976).abs() < 1e-3, "{:?}", s.crossings);
        for r in &s.samples {
            if r.p > s.crossings[0] && r.p < s.crossings[1] {
                assert!(r.quantum > r.classical);
            }
        }
        let psc = s.p_sc.unwrap();
        assert!((s.p_sc_detected.unwrap() - psc).abs() <= 1e-3 + 1e-12);
    }

    #[test]
    fn regime_one_sweep_has_constant_classical() {
        let s = sweep(&bv(0.2, 0.1, 0.5), ChannelKind::PhaseFlip, &grid_points(0.0, 1.0, 0.01), Execution::Parallel)
            .unwrap();
        let c0 = s.samples[0].classical;
        assert!(s.samples.iter().all(|r| (r.classical - c0).abs() < 1e-12));
        assert_eq!(s.p_sc_detected, None);
    }

    #[test]
    fn sweep_rejects_unsorted_grid() {
        assert!(sweep(&BellVector::zero(), ChannelKind::BitFlip, &[0.2, 0.1], Execution::Sequential).is_err());
        assert!(sweep(&BellVector::zero(), ChannelKind::BitFlip, &[0.2, 1.1], Execution::Sequential).is_err());
    }

    #[test]
    fn surface_examples() {
        let grid = SurfaceGrid { start: -1.0, stop: 1.0, step: 0.02 };
        let s = surface(ChannelKind::PhaseFlip, 0.1, &grid, Execution::Sequential).unwrap();
        assert_eq!(s.scanned_axes, (PauliAxis::X, PauliAxis::Y));
        let find = |u: f64, v: f64| *s.cells.iter().find(|c| (c.u - u).abs() < 1e-9 && (c.v - v).abs() < 1e-9).unwrap();
        let cell = find(0.06, 0.42);
        assert_eq!(cell.flag, CellFlag::Ok);
        assert!((cell.p_sc.unwrap() - 0.512049963526).abs() < 1e-6);
        assert_eq!(find(0.08, -0.04).flag, CellFlag::NoSuddenChange);
        assert_eq!(find(0.9, 0.9).flag, CellFlag::Unphysical);
        assert_eq!(find(0.9, 0.9).p_sc, None);
    }

    #[test]
    fn grid_points_hit_decimals() {
        let g = grid_points(-1.0, 1.0, 0.01);
        assert_eq!(g.len(), 201);
        assert_eq!(g[110], 0.1);
        assert_eq!(g[90], -0.1);
        assert_eq!(g[200], 1.0);
        assert_eq!(grid_points(0.0, 1.0, 1e-3)[90], 0.09);
        assert_eq!(grid_points(0.3, 0.3, 0.1), vec![0.3]);
    }

    fn arb_physical() -> impl Strategy<Value = BellVector> {
        prop::array::uniform4(0.0..1.0f64)
            .prop_filter("nonzero", |w| w.iter().sum::<f64>() > 1e-6)
            .prop_map(|w| BellVector::from_bell_weights(w).unwrap())
    }

    fn arb_regime_two() -> impl Strategy<Value = BellVector> {
        arb_physical().prop_filter("regime ii under phase flip", |c| {
            let (k, m) = preserved_and_damped(c, ChannelKind::PhaseFlip);
            k > 0.05 && k < 0.9 * m
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn regime_two_shape(c in arb_regime_two()) {
            let grid = grid_points(0.0, 1.0, 1e-3);
            let s = sweep(&c, ChannelKind::PhaseFlip, &grid, Execution::Sequential).unwrap();
            let psc = s.p_sc.unwrap();
            let c_end = mutual_information_analytic(&evolve_coefficients(&c, ChannelKind::PhaseFlip, 1.0).unwrap()).unwrap();
            for w in s.samples.windows(2) {
                if w[1].p < psc {
                    prop_assert!(w[1].classical < w[0].classical);
                } else if w[0].p >= psc {
                    prop_assert!((w[1].classical - w[0].classical).abs() <= 1e-12);
                    prop_assert!((w[1].classical - c_end).abs() <= 1e-9);
                }
            }
            // no sudden death
            for r in &s.samples {
                if r.p < 1.0 {
                    prop_assert!(r.quantum > 0.0, "Q = {} at p = {}", r.quantum, r.p);
                }
            }
            prop_assert!((s.p_sc_detected.unwrap() - psc).abs() <= 1e-3 + 1e-12);
        }

        #[test]
        fn discord_slope_jumps_at_sudden_change(c in arb_regime_two()) {
            let psc = sudden_change_time(&c, ChannelKind::PhaseFlip).unwrap();
            prop_assume!(psc > 0.01 && psc < 0.99);
            let h = 1e-5;
            let q = |p: f64| quantum_discord_analytic(&evolve_coefficients(&c, ChannelKind::PhaseFlip, p).unwrap()).unwrap();
            let slope = |a: f64, b: f64| (q(b) - q(a)) / (b - a);
            let jump = (slope(psc, psc + h) - slope(psc - h, psc)).abs();
            // curvature-level change of slope over one step away from p_sc
            let p0 = psc * 0.5;
            let smooth = (slope(p0, p0 + h) - slope(p0 - h, p0)).abs();
            prop_assert!(jump > 10.0 * smooth.max(h), "jump {jump} vs smooth {smooth}");
        }

        #[test]
        fn phase_flip_information_is_nonincreasing(c in arb_physical()) {
            let s = sweep(&c, ChannelKind::PhaseFlip, &grid_points(0.0, 1.0, 1e-3), Execution::Sequential).unwrap();
            for w in s.samples.windows(2) {
                prop_assert!(w[1].mutual <= w[0].mutual + 1e-12);
            }
            let last = s.samples.last().unwrap();
            prop_assert!(last.quantum.abs() < 1e-12);
            prop_assert!((last.classical - last.mutual).abs() < 1e-12);
        }

        #[test]
        fn sweeps_respect_channel_symmetry(c in arb_physical()) {
            let grid = grid_points(0.0, 1.0, 0.01);
            let pf = sweep(&c, ChannelKind::PhaseFlip, &grid, Execution::Sequential).unwrap();
            let bf = sweep(&c.swapped(PauliAxis::X, PauliAxis::Z), ChannelKind::BitFlip, &grid, Execution::Sequential).unwrap();
            for (a, b) in pf.samples.iter().zip(&bf.samples) {
                prop_assert!((a.classical - b.classical).abs() <= 1e-12);
                prop_assert!((a.quantum - b.quantum).abs() <= 1e-12);
                prop_assert!((a.mutual - b.mutual).abs() <= 1e-12);
            }
            prop_assert_eq!(pf.p_sc, bf.p_sc);
        }

        #[test]
        fn pure_state_like_crossings(c in arb_regime_two()) {
            let s = sweep(&c, ChannelKind::PhaseFlip, &grid_points(0.0, 1.0, 1e-3), Execution::Sequential).unwrap();
            for r in &s.samples {
                if (r.classical - r.quantum).abs() < 1e-4 {
                    prop_assert!((r.classical - r.mutual / 2.0).abs() < 1e-4);
                }
            }
        }
    }
}
