//! Kida-type formula for Mazur-Tate elements.
//!
//! The left side, lambda(Theta_n(E/L)), comes from the descended product of twisted
//! elements. The right side is [L_inf:K_inf] lambda(Theta_{n+n_L-n_K}(E/K)) plus corrections
//! read from the splitting of primes in L_(n) / K_(n+n_L-n_K) and the reduction of E there.

pub mod error;
pub mod formula;
pub mod instance;
pub mod primes;
pub mod signed;

pub use error::{KidaError, Result};
pub use formula::{theta_over, FieldInvariants, verify_kida, verify_tower_consistency, KidaReport, TowerReport, Verdict};
pub use instance::{check_add, KidaInstance, P1P2Convention, Subject};
pub use primes::{build_p1_p2, Class, PrimeData};
pub use signed::{signed_growth_check, SignedLevel, SignedReport};
