//! Scalar traits for the coefficient-generic algebra layers.

use std::ops::{Div, Neg, Sub};

use num_traits::{One, Zero};

/// Commutative-ring scalars; enough for polynomial and basis-expansion
/// coefficients.
pub trait Ring: Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self> {}

impl<T> Ring for T where T: Clone + PartialEq + Zero + One + Neg<Output = T> + Sub<Output = T> {}

/// Scalars with exact division; required by the elimination routines.
pub trait Field: Ring + Div<Output = Self> {}

impl<T> Field for T where T: Ring + Div<Output = T> {}
