//! Iwasawa invariants at finite level.
//!
//! [`invariants`] reads mu and lambda off the T-coefficients of an element of Lambda_n.
//! [`g_psi_n`] predicts the lambda jump from raising the tame level by a prime l, and
//! [`check_transition`] compares that prediction with two Mazur-Tate elements built from scratch.

pub mod error;
pub mod growth;
pub mod invariants;
pub mod transition;

pub use error::{IwError, Result};
pub use growth::{cyclotomic_factor, g_psi_n, g_psi_n_case, g_q_layer, omega_pm, q_n, GCase, OmegaPair};
pub use invariants::{invariants, poly_invariants, InvariantPair};
pub use transition::{check_transition, theta_invariants, TransitionReport, TransitionVerdict};
