//! Exact scalars: rationals, cyclotomic fields and formal square roots.

pub mod cyclotomic;
pub mod field;
pub mod parse;
pub(crate) mod poly;
pub mod sqrtpos;

pub use cyclotomic::{cyclo_reduce, Cyclotomic};
pub use field::{ratio, Field};
pub use parse::parse_scalar;
pub use sqrtpos::{SqrtPosReal, POSITIVITY_TOL};
