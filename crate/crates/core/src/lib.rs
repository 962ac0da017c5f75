//! Exact computation of the Hochschild cohomology of linear quotient
//! orbifolds `[V/G]` at the fiber over the origin, with machinery for
//! checking the structure constants, cocycles and Pfaffian identities
//! that describe it.

pub mod arith;
pub mod detalg;
pub mod error;
pub mod fiberalg;
pub mod fixedloci;
pub mod group;
pub mod linalg;
pub mod symplectic;
pub mod verdict;

pub use arith::{Cyclotomic, Field, SqrtPosReal};
pub use error::{Error, Result};

pub type Rational = num_rational::BigRational;
pub type CycloMat = linalg::Mat<Cyclotomic>;
pub type RationalMat = linalg::Mat<Rational>;
