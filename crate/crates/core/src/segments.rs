//! The four path primitives and their evaluation by arc length.
//!
//! Every segment exposes position, course angle and signed curvature as a
//! function of the distance travelled from its start. Lines and arcs are
//! closed form; clothoids need a pair of Fresnel-type integrals, evaluated
//! here by adaptive quadrature; Fermat spirals are closed form in the polar
//! angle, with a quadrature-based arc-length map used to translate between
//! the two parameterizations.

use crate::error::Error;
use crate::math::{wrap_angle, Real};
use crate::numeric::{integrate_n, solve_bracketed};
use crate::Result;

/// Absolute tolerance for the quadratures behind clothoid positions and
/// Fermat arc lengths.
pub const QUAD_TOL: f64 = 1e-10;

/// Absolute tolerance on `|arclength(theta) - s|` when inverting the Fermat
/// arc-length map.
pub const ARCLENGTH_INV_TOL: f64 = 1e-9;

/// Planar position plus course angle. `psi` is measured from the +x axis and
/// stored wrapped to `(-pi, pi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Pose2<F> {
    pub x: F,
    pub y: F,
    pub psi: F,
}

impl<F: Real> Pose2<F> {
    pub fn new(x: F, y: F, psi: F) -> Self {
        Self {
            x,
            y,
            psi: wrap_angle(psi),
        }
    }

    /// Rotates about the origin by `rot`, then translates by `(tx, ty)`.
    pub fn transformed(&self, rot: F, tx: F, ty: F) -> Self {
        let (sin, cos) = rot.sin_cos();
        Self::new(
            tx + cos * self.x - sin * self.y,
            ty + sin * self.x + cos * self.y,
            self.psi + rot,
        )
    }

    /// Reflection across the x axis.
    pub fn mirrored_x(&self) -> Self {
        Self::new(self.x, -self.y, -self.psi)
    }
}

/// Turn direction; left (counter-clockwise) carries positive curvature sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TurnDirection {
    Left,
    Right,
}

impl TurnDirection {
    /// +1 for left, -1 for right.
    pub fn sign<F: Real>(self) -> F {
        match self {
            TurnDirection::Left => F::one(),
            TurnDirection::Right => -F::one(),
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            TurnDirection::Left => TurnDirection::Right,
            TurnDirection::Right => TurnDirection::Left,
        }
    }
}

/// Discriminant of [`Shape`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SegmentKind {
    Line,
    Arc,
    Clothoid,
    Fermat,
}

impl SegmentKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SegmentKind::Line => "line",
            SegmentKind::Arc => "arc",
            SegmentKind::Clothoid => "clothoid",
            SegmentKind::Fermat => "fermat",
        }
    }
}

/// Per-kind curve parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Shape<F> {
    Line,
    Arc {
        /// Radius in meters, > 0.
        radius: F,
        direction: TurnDirection,
    },
    Clothoid {
        /// Curvature at the segment start, 1/m (signed, left positive).
        k0: F,
        /// Curvature rate d k / d s, 1/m^2 (signed).
        sigma_c: F,
    },
    Fermat {
        /// Shaping parameter of `r = c sqrt(theta)`, meters, > 0.
        c: F,
        direction: TurnDirection,
        /// Polar-angle span of the used portion, `(0, theta_kmax]`.
        theta_end: F,
        /// Reflected segments run the spiral backwards: curvature decreases
        /// along the path and `start` holds the spiral anchor at the far end.
        reflected: bool,
    },
}

/// One piece of a smoothed path, evaluated by arc length from `start`.
///
/// For a reflected Fermat segment `start` is not the point where travel
/// begins but the anchor pose of the reflected-spiral equations: the spiral
/// origin on the exit leg, carrying the *backward* heading there. Travel
/// begins at the far end of the spiral and finishes at the anchor position.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment<F> {
    pub start: Pose2<F>,
    /// Arc length in meters, >= 0.
    pub length: F,
    pub shape: Shape<F>,
}

/// Sampled state of a segment at arc length `s` from its start.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathPoint<F> {
    /// Arc length from the segment start, meters.
    pub s: F,
    pub pose: Pose2<F>,
    /// Signed curvature, 1/m (left positive).
    pub k: F,
    /// Curvature rate d k / d s, 1/m^2.
    pub k_prime: F,
}

impl<F: Real> Segment<F> {
    pub fn line(start: Pose2<F>, length: F) -> Result<Self> {
        check_nonnegative_length(length)?;
        Ok(Self {
            start,
            length,
            shape: Shape::Line,
        })
    }

    pub fn arc(start: Pose2<F>, radius: F, direction: TurnDirection, length: F) -> Result<Self> {
        if !(radius > F::zero()) {
            return Err(Error::InvalidSegment("arc radius must be positive"));
        }
        check_nonnegative_length(length)?;
        Ok(Self {
            start,
            length,
            shape: Shape::Arc { radius, direction },
        })
    }

    pub fn clothoid(start: Pose2<F>, k0: F, sigma_c: F, length: F) -> Result<Self> {
        check_nonnegative_length(length)?;
        Ok(Self {
            start,
            length,
            shape: Shape::Clothoid { k0, sigma_c },
        })
    }

    /// Forward Fermat spiral from its origin pose over `theta in [0, theta_end]`.
    pub fn fermat(start: Pose2<F>, c: F, direction: TurnDirection, theta_end: F) -> Result<Self> {
        let length = fermat_segment_length(c, theta_end)?;
        Ok(Self {
            start,
            length,
            shape: Shape::Fermat {
                c,
                direction,
                theta_end,
                reflected: false,
            },
        })
    }

    /// Reflected Fermat spiral anchored at `anchor` (spiral origin pose on
    /// the exit side, backward heading). Curvature decreases along travel.
    pub fn fermat_reflected(
        anchor: Pose2<F>,
        c: F,
        direction: TurnDirection,
        theta_end: F,
    ) -> Result<Self> {
        let length = fermat_segment_length(c, theta_end)?;
        Ok(Self {
            start: anchor,
            length,
            shape: Shape::Fermat {
                c,
                direction,
                theta_end,
                reflected: true,
            },
        })
    }

    pub fn kind(&self) -> SegmentKind {
        match self.shape {
            Shape::Line => SegmentKind::Line,
            Shape::Arc { .. } => SegmentKind::Arc,
            Shape::Clothoid { .. } => SegmentKind::Clothoid,
            Shape::Fermat { .. } => SegmentKind::Fermat,
        }
    }

    /// Evaluates the segment at arc length `s` from its start.
    pub fn point_at(&self, s: F) -> Result<PathPoint<F>> {
        let s = check_param("arc length s", s, F::zero(), self.length)?;
        match self.shape {
            Shape::Line => Ok(self.eval_line(s)),
            Shape::Arc { radius, direction } => Ok(self.eval_arc(s, radius, direction)),
            Shape::Clothoid { k0, sigma_c } => Ok(self.eval_clothoid(s, k0, sigma_c)),
            Shape::Fermat {
                c,
                theta_end,
                reflected,
                ..
            } => {
                let theta = if reflected {
                    let native_len = self.length - s;
                    theta_end - fermat_theta_from_arclength(c, native_len)?
                } else {
                    fermat_theta_from_arclength(c, s)?
                };
                self.point_at_theta(theta)
            }
        }
    }

    /// Evaluates a Fermat segment at its polar-angle parameter. The
    /// parameter runs in travel order for both orientations: `0` at the
    /// start of travel, `theta_end` at its end.
    pub fn point_at_theta(&self, theta: F) -> Result<PathPoint<F>> {
        let Shape::Fermat {
            c,
            direction,
            theta_end,
            reflected,
        } = self.shape
        else {
            return Err(Error::InvalidSegment(
                "polar-angle evaluation applies to Fermat segments only",
            ));
        };
        let theta = check_param("polar angle theta", theta, F::zero(), theta_end)?;
        let rho = direction.sign::<F>();
        let p = &self.start;

        if !reflected {
            let radius = c * theta.sqrt();
            let polar = rho * theta + p.psi;
            let pose = Pose2::new(
                p.x + radius * polar.cos(),
                p.y + radius * polar.sin(),
                p.psi + rho * fermat_course_change(theta),
            );
            Ok(PathPoint {
                s: fermat_arclength(c, theta),
                pose,
                k: rho * fermat_curvature(c, theta),
                k_prime: rho * fermat_curvature_slope(c, theta),
            })
        } else {
            // native spiral parameter counts down toward the anchor
            let native = theta_end - theta;
            let radius = c * native.sqrt();
            let polar = rho * (theta - theta_end) + p.psi;
            let pose = Pose2::new(
                p.x + radius * polar.cos(),
                p.y + radius * polar.sin(),
                p.psi + F::PI() - rho * fermat_course_change(native),
            );
            Ok(PathPoint {
                s: self.length - fermat_arclength(c, native),
                pose,
                k: rho * fermat_curvature(c, native),
                k_prime: -rho * fermat_curvature_slope(c, native),
            })
        }
    }

    /// Pose at the end of the segment.
    pub fn end_pose(&self) -> Result<Pose2<F>> {
        Ok(self.point_at(self.length)?.pose)
    }

    /// Signed curvature at arc length `s` without computing the position
    /// (cheap for every kind; Fermat still needs the arc-length inversion).
    pub fn curvature_at(&self, s: F) -> Result<F> {
        match self.shape {
            Shape::Line => Ok(F::zero()),
            Shape::Arc { radius, direction } => Ok(direction.sign::<F>() / radius),
            Shape::Clothoid { k0, sigma_c } => {
                let s = check_param("arc length s", s, F::zero(), self.length)?;
                Ok(k0 + sigma_c * s)
            }
            Shape::Fermat { .. } => Ok(self.point_at(s)?.k),
        }
    }

    /// Same segment reflected across the x axis (handedness flips).
    pub fn mirrored_x(&self) -> Self {
        let shape = match self.shape {
            Shape::Line => Shape::Line,
            Shape::Arc { radius, direction } => Shape::Arc {
                radius,
                direction: direction.flipped(),
            },
            Shape::Clothoid { k0, sigma_c } => Shape::Clothoid {
                k0: -k0,
                sigma_c: -sigma_c,
            },
            Shape::Fermat {
                c,
                direction,
                theta_end,
                reflected,
            } => Shape::Fermat {
                c,
                direction: direction.flipped(),
                theta_end,
                reflected,
            },
        };
        Self {
            start: self.start.mirrored_x(),
            length: self.length,
            shape,
        }
    }

    /// Same segment rotated by `rot` about the origin, then translated.
    pub fn transformed(&self, rot: F, tx: F, ty: F) -> Self {
        Self {
            start: self.start.transformed(rot, tx, ty),
            length: self.length,
            shape: self.shape,
        }
    }

    fn eval_line(&self, s: F) -> PathPoint<F> {
        let p = &self.start;
        PathPoint {
            s,
            pose: Pose2::new(p.x + s * p.psi.cos(), p.y + s * p.psi.sin(), p.psi),
            k: F::zero(),
            k_prime: F::zero(),
        }
    }

    fn eval_arc(&self, s: F, radius: F, direction: TurnDirection) -> PathPoint<F> {
        let rho = direction.sign::<F>();
        let p = &self.start;
        // center sits one radius along the inside normal of the start pose
        let cx = p.x - rho * radius * p.psi.sin();
        let cy = p.y + rho * radius * p.psi.cos();
        let psi = p.psi + rho * s / radius;
        // radial direction from center to the point trails the course by
        // rho * pi/2
        let radial = psi - rho * F::FRAC_PI_2();
        PathPoint {
            s,
            pose: Pose2::new(cx + radius * radial.cos(), cy + radius * radial.sin(), psi),
            k: rho / radius,
            k_prime: F::zero(),
        }
    }

    fn eval_clothoid(&self, s: F, k0: F, sigma_c: F) -> PathPoint<F> {
        let p = &self.start;
        let (dx, dy) = fresnel_position(p.psi, k0, sigma_c, s);
        let psi = p.psi + k0 * s + F::half() * sigma_c * s * s;
        PathPoint {
            s,
            pose: Pose2::new(p.x + dx, p.y + dy, psi),
            k: k0 + sigma_c * s,
            k_prime: sigma_c,
        }
    }
}

fn check_nonnegative_length<F: Real>(length: F) -> Result<()> {
    if length < F::zero() || !length.is_finite() {
        return Err(Error::InvalidSegment("segment length must be finite and >= 0"));
    }
    Ok(())
}

/// Validates `value` against `[min, max]` with a small relative slack and
/// clamps it into the interval.
fn check_param<F: Real>(what: &'static str, value: F, min: F, max: F) -> Result<F> {
    let slack = F::of(1e-9) * (F::one() + max.abs().max(min.abs()));
    if !value.is_finite() || value < min - slack || value > max + slack {
        return Err(Error::ParameterOutOfRange {
            what,
            value: value.as_f64(),
            min: min.as_f64(),
            max: max.as_f64(),
        });
    }
    Ok(value.max(min).min(max))
}

/// Displacement `(dx, dy)` covered by a curvature-polynomial heading,
/// `integral of (cos, sin)(0.5 sigma_c xi^2 + k0 xi + psi0) d xi` over
/// `[0, s]`, by adaptive quadrature to [`QUAD_TOL`].
pub fn fresnel_position<F: Real>(psi0: F, k0: F, sigma_c: F, s: F) -> (F, F) {
    let [dx, dy] = integrate_n(
        |xi| {
            let (sin, cos) = (F::half() * sigma_c * xi * xi + k0 * xi + psi0).sin_cos();
            [cos, sin]
        },
        F::zero(),
        s,
        F::of(QUAD_TOL),
    );
    (dx, dy)
}

/// Polar angle at which the Fermat spiral curvature peaks,
/// `sqrt(sqrt(7)/2 - 5/4)`, independent of the shaping parameter.
pub fn fermat_theta_kmax<F: Real>() -> F {
    (F::of(7.0).sqrt() / F::two() - F::of(1.25)).sqrt()
}

/// Course change accumulated by a Fermat spiral from its origin to polar
/// angle `theta`: `theta + arctan(2 theta)` (unsigned).
pub fn fermat_course_change<F: Real>(theta: F) -> F {
    theta + (F::two() * theta).atan()
}

/// Largest course change a single Fermat transition segment can span,
/// i.e. the course change at the curvature peak (~0.7650 rad).
pub fn fermat_psi_m<F: Real>() -> F {
    fermat_course_change(fermat_theta_kmax::<F>())
}

/// Curvature magnitude of a Fermat spiral at polar angle `theta >= 0`.
pub fn fermat_curvature<F: Real>(c: F, theta: F) -> F {
    let t2 = theta * theta;
    let q = F::of(4.0) * t2 + F::one();
    F::two() * theta.sqrt() * (F::of(4.0) * t2 + F::of(3.0)) / (c * q * q.sqrt())
}

/// Derivative of the Fermat curvature magnitude with respect to native arc
/// length, `d k / d s = (2 / c^2) (3 - 40 theta^2 - 16 theta^4) / (4 theta^2 + 1)^3`.
pub fn fermat_curvature_slope<F: Real>(c: F, theta: F) -> F {
    let t2 = theta * theta;
    let q = F::of(4.0) * t2 + F::one();
    F::two() * (F::of(3.0) - F::of(40.0) * t2 - F::of(16.0) * t2 * t2) / (c * c * q * q * q)
}

/// Shaping parameter that makes the spiral's peak curvature equal `k_max`.
pub fn fermat_c_for_kmax<F: Real>(k_max: F) -> Result<F> {
    if !(k_max > F::zero()) || !k_max.is_finite() {
        return Err(Error::InvalidConfig("k_max must be positive"));
    }
    // k scales as 1/c, so c for a given peak is the unit-c peak over k_max
    Ok(fermat_curvature(F::one(), fermat_theta_kmax::<F>()) / k_max)
}

/// Arc length of a Fermat spiral from its origin to polar angle `theta`,
/// `c * integral of sqrt(1 + 4 u^4) d u` over `[0, sqrt(theta)]`.
pub fn fermat_arclength<F: Real>(c: F, theta: F) -> F {
    debug_assert!(theta >= F::zero());
    let [v] = integrate_n(
        |u: F| {
            let u4 = u * u * u * u;
            [(F::one() + F::of(4.0) * u4).sqrt()]
        },
        F::zero(),
        theta.sqrt(),
        F::of(QUAD_TOL),
    );
    c * v
}

/// Inverse of [`fermat_arclength`] over the usable span `[0, theta_kmax]`,
/// to absolute tolerance [`ARCLENGTH_INV_TOL`] on the arc length.
pub fn fermat_theta_from_arclength<F: Real>(c: F, s: F) -> Result<F> {
    if !(c > F::zero()) {
        return Err(Error::InvalidSegment("fermat shaping parameter must be positive"));
    }
    let u_max = fermat_theta_kmax::<F>().sqrt();
    let total = fermat_arclength(c, fermat_theta_kmax::<F>());
    let s = check_param("fermat arc length s", s, F::zero(), total)?;
    if s == F::zero() {
        return Ok(F::zero());
    }

    // The integrand lies in [1, m] on the usable span, bracketing the root
    // of L(u) - s between s/(c m) and s/c.
    let u4 = u_max * u_max * u_max * u_max;
    let m = (F::one() + F::of(4.0) * u4).sqrt();
    let lo = (s / (c * m)).min(u_max);
    let hi = (s / c).min(u_max);
    let ftol = F::of(ARCLENGTH_INV_TOL);

    let f = |u: F| {
        let uu4 = u * u * u * u;
        let root = (F::one() + F::of(4.0) * uu4).sqrt();
        (
            fermat_arclength(c, u * u) - s,
            c * root,
            c * F::of(8.0) * u * u * u / root,
        )
    };
    let u = solve_bracketed(f, lo, hi, ftol)
        .or_else(|| solve_bracketed(f, F::zero(), u_max, ftol))
        .ok_or(Error::InvalidSegment("fermat arc-length inversion failed"))?;
    Ok(u * u)
}

fn fermat_segment_length<F: Real>(c: F, theta_end: F) -> Result<F> {
    if !(c > F::zero()) || !c.is_finite() {
        return Err(Error::InvalidSegment("fermat shaping parameter must be positive"));
    }
    let max = fermat_theta_kmax::<F>() * (F::one() + F::of(1e-9));
    if !(theta_end > F::zero()) || theta_end > max {
        return Err(Error::InvalidSegment(
            "fermat theta_end must lie in (0, theta_kmax]",
        ));
    }
    Ok(fermat_arclength(c, theta_end))
}
