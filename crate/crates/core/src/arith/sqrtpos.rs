use std::fmt;

use num_traits::One;

use super::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};

/// A positive real number known through its exact square.
#[derive(Clone, Debug)]
pub struct SqrtPosReal {
    square: Cyclotomic,
    approx: f64,
}

/// Tolerance for the numeric positivity tests.
pub const POSITIVITY_TOL: f64 = 1e-9;

impl SqrtPosReal {
    /// √square; the square must be exactly real and numerically positive.
    pub fn new(square: Cyclotomic) -> Result<Self> {
        if !square.is_real() {
            return Err(Error::InvalidForm(format!("square {square} is not real")));
        }
        let v = square.cyclo_embed().re;
        if v <= POSITIVITY_TOL {
            return Err(Error::InvalidForm(format!(
                "square {square} is not positive"
            )));
        }
        Ok(SqrtPosReal {
            square,
            approx: v.sqrt(),
        })
    }

    pub fn one() -> Self {
        SqrtPosReal {
            square: Cyclotomic::one(),
            approx: 1.0,
        }
    }

    pub fn square(&self) -> &Cyclotomic {
        &self.square
    }

    pub fn approx(&self) -> f64 {
        self.approx
    }

    pub fn sqrtpos_mul(&self, other: &Self) -> Self {
        SqrtPosReal {
            square: &self.square * &other.square,
            approx: self.approx * other.approx,
        }
    }

    pub fn sqrtpos_eq(&self, other: &Self) -> bool {
        self.square == other.square
    }
}

impl PartialEq for SqrtPosReal {
    fn eq(&self, other: &Self) -> bool {
        self.sqrtpos_eq(other)
    }
}

impl fmt::Display for SqrtPosReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sqrt({})", self.square)
    }
}
