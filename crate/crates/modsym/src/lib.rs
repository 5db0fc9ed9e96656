//! Weight-2 modular symbols for Gamma0(N) over Q.
//!
//! [`ManinSpace`] holds the functionals on Manin symbols; [`EigenSymbol`] is the pair of
//! sign eigenvectors cut out by the Hecke eigenvalues of an elliptic curve, scaled to
//! primitive integer values.

pub mod eigen;
pub mod error;
pub mod linalg;
pub mod p1;
pub mod space;

pub use eigen::{isolate_eigensymbol, sturm_bound, CuspPath, EigenSymbol, Sign};
pub use error::{Result, SymError};
pub use p1::{cusp, Cusp, P1List};
pub use space::{decompose_zero_to, ManinSpace};
