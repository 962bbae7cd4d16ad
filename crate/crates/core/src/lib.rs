//! Waypoint-to-trajectory toolkit for fixed-wing flight simulation.
//!
//! The crate turns a piecewise-linear waypoint path into a flyable,
//! continuous-curvature trajectory and synthesizes the inertial signals an
//! aircraft flying it would measure:
//!
//! - [`segments`]: closed-form / quadrature evaluation of the four path
//!   primitives (line, arc, clothoid, Fermat spiral) by arc length.
//! - [`smoothing`]: corner fillet construction (arc, clothoid or Fermat
//!   method) under maximum-curvature and curvature-rate limits.
//! - [`kinematics`]: constant-speed aircraft states along the smoothed path
//!   under a coordinated-turn model.
//! - [`imu`]: body-frame specific force and angular rates, generated either
//!   analytically from the path geometry or by reverse INS integration of a
//!   state series.
//!
//! All core math is generic over the scalar type through [`Real`]; concrete
//! `f64`/`f32` aliases for the main types live at the crate root.

pub mod error;
pub mod imu;
pub mod kinematics;
pub mod math;
pub mod numeric;
pub mod segments;
pub mod smoothing;

pub use error::Error;
pub use math::{Mat3, Real, Vec3};
pub use segments::{PathPoint, Pose2, Segment, SegmentKind, Shape, TurnDirection};
pub use smoothing::{Corner, FilletConfig, FilletMethod, SmoothPath};

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

pub type Pose2F64 = Pose2<f64>;
pub type Pose2F32 = Pose2<f32>;
pub type SegmentF64 = Segment<f64>;
pub type SegmentF32 = Segment<f32>;
pub type PathPointF64 = PathPoint<f64>;
pub type PathPointF32 = PathPoint<f32>;
pub type SmoothPathF64 = SmoothPath<f64>;
pub type SmoothPathF32 = SmoothPath<f32>;
pub type AircraftStateF64 = kinematics::AircraftState<f64>;
pub type AircraftStateF32 = kinematics::AircraftState<f32>;
pub type ImuSampleF64 = imu::ImuSample<f64>;
pub type ImuSampleF32 = imu::ImuSample<f32>;
