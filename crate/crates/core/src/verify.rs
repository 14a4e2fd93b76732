//! Randomized cross-check of the closed-form correlations against the matrix
//! route (Kraus evolution of the 4×4 state plus numeric extremization).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::channels::{apply_channel, evolve_coefficients, ChannelKind};
use crate::correlations::{correlations_numeric, record_analytic, ExtremizeOptions};
use crate::error::Result;
use crate::exec::Execution;
use crate::states::{bell_state_matrix, BellVector, EvolvedCoefficients};

pub const DEFAULT_TOLERANCE: f64 = 1e-6;

/// `p = 0, 0.1, …, 1`.
pub fn verification_p_values() -> Vec<f64> {
    (0..=10).map(|k| k as f64 / 10.0).collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyConfig {
    pub samples: usize,
    pub seed: u64,
    pub tolerance: f64,
    pub extremize: ExtremizeOptions,
    /// Parallelism across states; each extremization then runs sequentially.
    pub exec: Execution,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            samples: 500,
            seed: 42,
            tolerance: DEFAULT_TOLERANCE,
            extremize: ExtremizeOptions { exec: Execution::Sequential, ..Default::default() },
            exec: Execution::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyFailure {
    pub state: BellVector,
    pub channel: ChannelKind,
    pub p: f64,
    pub delta_c: f64,
    pub delta_q: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub samples: usize,
    pub evaluations: usize,
    pub seed: u64,
    pub tolerance: f64,
    pub max_delta_c: f64,
    pub max_delta_q: f64,
    pub failures: Vec<VerifyFailure>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.max_delta_c <= self.tolerance && self.max_delta_q <= self.tolerance
    }
}

/// Uniform sample from the physical tetrahedron: Dirichlet(1,1,1,1) weights
/// on the four Bell projectors.
pub fn random_state(rng: &mut impl Rng) -> BellVector {
    let w: [f64; 4] = std::array::from_fn(|_| -(1.0 - rng.random::<f64>()).ln());
    BellVector::from_bell_weights(w).expect("positive weights")
}

pub fn random_states(n: usize, seed: u64) -> Vec<BellVector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| random_state(&mut rng)).collect()
}

/// Closed-form `(C, Q)`.
pub fn analytic_pair(e: &EvolvedCoefficients) -> Result<(f64, f64)> {
    let r = record_analytic(e, 0.0)?;
    Ok((r.classical, r.quantum))
}

pub fn run(config: &VerifyConfig) -> Result<VerifyReport> {
    run_with(config, analytic_pair)
}

/// Same as [`run`] with a substitute for the closed-form evaluator.
pub fn run_with<F>(config: &VerifyConfig, analytic: F) -> Result<VerifyReport>
where
    F: Fn(&EvolvedCoefficients) -> Result<(f64, f64)> + Sync + Send,
{
    let states = random_states(config.samples, config.seed);
    let ps = verification_p_values();
    let per_state = config.exec.map(&states, |c| -> Result<Vec<VerifyFailure>> {
        let rho = bell_state_matrix(c)?;
        let mut rows = Vec::with_capacity(3 * ps.len());
        for kind in ChannelKind::ALL {
            for &p in &ps {
                let (ca, qa) = analytic(&evolve_coefficients(c, kind, p)?)?;
                let numeric = correlations_numeric(&apply_channel(&rho, kind, p)?, &config.extremize)?;
                rows.push(VerifyFailure {
                    state: *c,
                    channel: kind,
                    p,
                    delta_c: (ca - numeric.classical).abs(),
                    delta_q: (qa - numeric.quantum).abs(),
                });
            }
        }
        Ok(rows)
    });

    let mut report = VerifyReport {
        samples: config.samples,
        evaluations: 0,
        seed: config.seed,
        tolerance: config.tolerance,
        max_delta_c: 0.0,
        max_delta_q: 0.0,
        failures: Vec::new(),
    };
    for rows in per_state {
        for row in rows? {
            report.evaluations += 1;
            report.max_delta_c = report.max_delta_c.max(row.delta_c);
            report.max_delta_q = report.max_delta_q.max(row.delta_q);
            if !(row.delta_c <= config.tolerance && row.delta_q <= config.tolerance) {
                report.failures.push(row);
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> VerifyConfig {
        VerifyConfig {
            samples: 3,
            extremize: ExtremizeOptions { grid_n: 64, exec: Execution::Sequential, ..Default::default() },
            ..Default::default()
        }
    }

    #[test]
    fn random_states_are_physical_and_reproducible() {
        let a = random_states(200, 7);
        assert!(a.iter().all(BellVector::is_physical));
        assert_eq!(a, random_states(200, 7));
        assert_ne!(a, random_states(200, 8));
    }

    #[test]
    fn empty_run_passes() {
        let r = run(&VerifyConfig { samples: 0, ..small() }).unwrap();
        assert_eq!(r.evaluations, 0);
        assert!(r.passed());
    }

    #[test]
    fn small_run_passes() {
        let r = run(&small()).unwrap();
        assert_eq!(r.evaluations, 3 * 3 * 11);
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn corrupted_branch_is_caught() {
        // pick the smallest coefficient instead of the largest
        let r = run_with(&small(), |e| {
            let chi = e.as_array().iter().map(|x| x.abs()).fold(f64::INFINITY, f64::min);
            let c = crate::correlations::classical_from_chi(chi);
            Ok((c, crate::correlations::mutual_information_analytic(e)? - c))
        })
        .unwrap();
        assert!(!r.passed());
        assert!(r.max_delta_c > 1e-3);
    }
}
