//! Dirichlet characters and abelian fields presented by character groups.
//!
//! A character is stored primitive, as a table of exponents: chi(a) = zeta_order^k.
//! An abelian field K is the group X of characters of Gal(K/Q). Everything needed about
//! K (degree, conductor, n_K, splitting of primes, the layers K_(n)) is read off X.

pub mod character;
pub mod error;
pub mod group;
pub mod units;

pub use character::{CharSpec, DirichletChar};
pub use error::{CharError, Result};
pub use group::{AbelianFieldDesc, CharGroup, FieldSpec, SplitData};
pub use units::UnitGroup;
