//! Exact computations with the differential operators ξ and ∇ on Schur
//! functions and back-stable Schubert polynomials.
//!
//! * [`yops`]: the ring of Young diagrams, where ξ and ∇ alone determine the
//!   Littlewood–Richardson coefficients, together with the bosonic operators
//!   ρ^(k), the operators ξ^λ and the determinantal identities.
//! * [`bsops`]: the same operators acting on the back-stable Schubert basis,
//!   and the Schur expansion of Stanley symmetric functions they produce.
//! * [`product`]: the recursive Schur × Schubert product.
//! * [`oracle`]: independent tableau and polynomial ground truth. It never
//!   calls the operator modules.
//! * [`suite`]: the acceptance battery with adjustable sizes.

pub mod bsops;
pub mod error;
pub mod exact;
mod memo;
pub mod oracle;
pub mod perm;
pub mod product;
pub mod suite;
pub mod yops;
pub mod young;

pub use error::{Error, ParseError, Result};
pub use exact::{FormalSum, Rational};
pub use perm::PermutationZ;
pub use young::Partition;
