//! Exact and p-adic arithmetic shared by the other crates.
//!
//! * [`Rat`]: reduced rationals.
//! * [`CycInt`]: cyclotomic integers in a power basis.
//! * [`LocalRing`] / [`LocalElem`]: O/p^B for O = Z_p[zeta_d, zeta_{p^s}], with valuations.
//! * [`TnTable`]: the logarithm t_n of the principal-unit part.

pub mod cyclo;
pub mod error;
pub mod local;
pub mod numth;
pub mod poly;
pub mod rat;
pub mod tn;

pub use cyclo::{CycField, CycInt};
pub use error::{ArithError, Result};
pub use local::{hensel_factor, LocalElem, LocalRing, DEFAULT_PRECISION};
pub use rat::{rat, rat_int, Rat};
pub use tn::{teichmuller_decompose, TnTable};

/// Valuation of an exact cyclotomic integer through a local ring containing it.
pub fn val_p(x: &CycInt, ring: &std::sync::Arc<LocalRing>) -> Result<Rat> {
    if x.is_zero() {
        return Err(ArithError::ZeroInput);
    }
    x.to_local(ring)?.val()
}
