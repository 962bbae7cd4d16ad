//! Aircraft state generation (placeholder).

use crate::math::{Real, Vec3};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AircraftState<F: Real> {
    pub t: F,
    pub pos_n: Vec3<F>,
}
