//! Numerical checks for the exact engine: Eichler integrals of f_E from its q-expansion,
//! twisted L-values by Birch's formula, and Gauss sums.

pub mod eichler;
pub mod error;
pub mod gauss;
pub mod interp;
pub mod lvalue;
pub mod qexp;

pub use eichler::{eichler_at_height, eichler_integral, eichler_integral_tol, fricke_sign, integral_from, ComplexVal};
pub use error::{OracleError, Result};
pub use gauss::{conj, gauss_field, gauss_sum, gauss_sum_exact, gauss_sum_exact_at};
pub use interp::{calibrate, check_interpolation, check_paths, InterpReport, PathCheck, Periods};
pub use lvalue::{birch_sum, lvalue_twisted};
pub use qexp::QExpansion;
