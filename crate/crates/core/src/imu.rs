//! IMU signal synthesis (placeholder).

use crate::math::{Real, Vec3};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ImuSample<F: Real> {
    pub t: F,
    pub f_b: Vec3<F>,
    pub w_b: Vec3<F>,
}
