//! Error type shared by all modules.

/// Errors raised by path construction, evaluation and signal generation.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// An evaluation parameter (arc length, polar angle, time) fell outside
    /// the valid range of the segment or trajectory.
    #[error("{what} = {value} outside [{min}, {max}]")]
    ParameterOutOfRange {
        what: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    /// A segment was constructed with parameters that define no valid curve.
    #[error("invalid segment: {0}")]
    InvalidSegment(&'static str),

    /// A configuration value (curvature limit, speed, sample period) is not
    /// usable.
    #[error("invalid config: {0}")]
    InvalidConfig(&'static str),

    /// Two consecutive waypoints coincide.
    #[error("degenerate waypoints: consecutive points coincide")]
    DegenerateWaypoints,

    /// The corner reverses direction (course change of ~pi) and admits no
    /// finite fillet.
    #[error("unsmoothable corner: course change too close to pi")]
    UnsmoothableCorner,

    /// A fillet does not fit between its waypoint and a neighbour.
    #[error(
        "insufficient waypoint spacing at waypoint {index}: \
         fillet needs {needed} m, only {available} m available"
    )]
    InsufficientWaypointSpacing {
        index: usize,
        needed: f64,
        available: f64,
    },

    /// Malformed caller input (too few waypoints, mismatched grids, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The relative rotation between two attitude samples is too close to pi
    /// for the matrix logarithm to be meaningful.
    #[error("near-singular rotation: angle within {margin} of pi")]
    NearSingularRotation { margin: f64 },
}
