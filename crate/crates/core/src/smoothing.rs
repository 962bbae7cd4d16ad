//! Corner fillet construction (placeholder).

use crate::math::Real;
use crate::segments::Segment;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FilletMethod {
    ArcFillet,
    ClothoidFillet,
    FermatFillet,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FilletConfig<F> {
    pub method: FilletMethod,
    pub k_max: F,
    pub k_prime_max: F,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Corner<F> {
    pub psi_delta: F,
    pub psi_1: F,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SmoothPath<F: Real> {
    pub segments: Vec<Segment<F>>,
}
