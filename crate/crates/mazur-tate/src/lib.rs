//! Mazur-Tate elements of elliptic curves.
//!
//! [`theta_raw`] builds Theta_n^M in the group ring of (Z/p^{n+1}M)^x from an eigensymbol,
//! [`twist`] / [`twist_exact`] push it into Lambda_n through a character, and
//! [`descend_to_field`] assembles Theta_n(E/K) for an abelian field K.
//!
//! Exact work happens in [`GroupPoly`] (group basis over cyclotomic integers); valuations and
//! Weierstrass data use [`LambdaNPoly`] (T-basis over a local ring).

pub mod checks;
pub mod descent;
pub mod error;
pub mod euler;
pub mod group;
pub mod lambda;
pub mod theta;

pub use checks::{check_eval_compat, check_tame_compat, check_vertical, Convention, EvalReport, TameReport, VerticalReport};
pub use descent::{descend_to_field, iterated_division, Descent};
pub use error::{MtError, Result};
pub use euler::{c_values, euler_h, euler_h_exact, CSeq};
pub use group::GroupPoly;
pub use lambda::LambdaNPoly;
pub use theta::{check_conductor, field_for, ring_for, theta_raw, theta_signed, twist, twist_exact, ThetaElem};
