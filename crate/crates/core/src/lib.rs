//! Classical correlation, quantum discord and mutual information of two-qubit
//! Bell-diagonal states under local phase-flip, bit-flip and bit-phase-flip
//! decoherence.
//!
//! Every correlation quantity has two independent evaluation routes:
//!
//! * a closed form on the coefficient triple `(c1, c2, c3)`, where the
//!   classical correlation reduces to a function of the largest evolved
//!   coefficient magnitude, and
//! * a matrix route that builds the 4×4 density operator, applies the Kraus
//!   operators, and maximizes the classical correlation over projective
//!   measurements on subsystem B numerically.
//!
//! The [`dynamics`] module sits on top of the closed forms and classifies the
//! three kinds of correlation dynamics (constant, sudden change, monotonic
//! decay), locates the sudden-change time and the `Q = C` crossings of a
//! trajectory, and evaluates the extremization-free operational measure.
//!
//! ```
//! use bellcorr::{channels::ChannelKind, dynamics, states::BellVector};
//!
//! let state = BellVector::new(0.06, 0.42, 0.30).unwrap();
//! let p_sc = dynamics::sudden_change_time(&state, ChannelKind::PhaseFlip).unwrap();
//! assert!((p_sc - 0.1548).abs() < 1e-4);
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod channels;
pub mod correlations;
pub mod dynamics;
pub mod error;
pub mod exec;
pub mod linalg;
pub mod states;
pub mod verify;

pub use channels::{ChannelKind, KrausSet};
pub use correlations::{CorrelationRecord, MeasurementBasis};
pub use error::{Error, Result};
pub use exec::Execution;
pub use linalg::{ComplexMatrix, PauliAxis, Spectrum, Subsystem};
pub use states::{BellVector, EvolvedCoefficients};
