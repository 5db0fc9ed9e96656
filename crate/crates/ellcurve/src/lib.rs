//! Elliptic curves over Q in Weierstrass form.
//!
//! The conductor is an input, checked against c4, c6 and the discriminant for
//! primes at least 5. At 2 and 3 the reduction type comes from a small table
//! supplied with the curve and is cross-checked by counting points on the
//! reduced cubic. Split versus nonsplit multiplicative reduction at l >= 5 is
//! decided by whether -c6 is a square mod l.

pub mod curve;
pub mod error;
pub mod frob;

pub use curve::{by_label, catalog, CurveSpec, ECurve, ReductionData, ReductionKind, DEFAULT_COUNT_BOUND};
pub use error::{CurveError, Result};
pub use frob::{count_over_extension, frobenius_root, local_p_torsion, FrobeniusRoot, Fp2};
