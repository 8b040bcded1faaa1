//! Exact computation of secondary invariants of finite matrix groups
//! acting on polynomial rings over the rationals, given primary
//! invariants. The core search maintains a degree-truncated homogeneous
//! Groebner basis that is extended in place whenever a new secondary
//! invariant is found, so no Groebner basis is ever recomputed.

pub mod error;
pub mod examples;
pub mod groebner;
pub mod group;
pub mod molien;
pub mod monomial;
pub mod parser;
pub mod poly;
pub mod problem;
pub mod report;
pub mod secondary;

pub use error::{Error, Result};
pub use groebner::{buchberger, reduce, s_polynomial, TruncatedGroebnerBasis};
pub use group::{GroupRepresentation, PrimarySystem, QMatrix};
pub use molien::{molien_series, secondary_counts, MolienProfile};
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{Polynomial, Rational};
pub use secondary::{Algorithm, SecondaryResult};
