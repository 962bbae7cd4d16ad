//! Scalar abstraction and the small amount of linear algebra the crate needs.

use std::fmt::{Debug, Display};
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating-point scalar the library is generic over (`f32` or `f64`).
pub trait Real: Float + FloatConst + FromPrimitive + Debug + Display + 'static {
    /// Converts an `f64` literal into this scalar type.
    #[inline]
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable in scalar type")
    }

    /// Two pi.
    #[inline]
    fn tau() -> Self {
        Self::PI() + Self::PI()
    }

    #[inline]
    fn two() -> Self {
        Self::one() + Self::one()
    }

    #[inline]
    fn half() -> Self {
        Self::of(0.5)
    }

    /// Lossy conversion back to `f64`, for diagnostics.
    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl<T> Real for T where T: Float + FloatConst + FromPrimitive + Debug + Display + 'static {}

/// Wraps an angle to `(-pi, pi]`.
pub fn wrap_angle<F: Real>(a: F) -> F {
    if !a.is_finite() {
        return a;
    }
    let mut y = (a + F::PI()) % F::tau();
    if y < F::zero() {
        y = y + F::tau();
    }
    if y == F::zero() {
        F::PI()
    } else {
        y - F::PI()
    }
}

/// Signed smallest difference `a - b` wrapped to `(-pi, pi]`.
pub fn angle_diff<F: Real>(a: F, b: F) -> F {
    wrap_angle(a - b)
}

/// Column vector in R^3.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vec3<F> {
    pub x: F,
    pub y: F,
    pub z: F,
}

impl<F: Real> Vec3<F> {
    pub fn new(x: F, y: F, z: F) -> Self {
        Self { x, y, z }
    }

    pub fn zeros() -> Self {
        Self::new(F::zero(), F::zero(), F::zero())
    }

    pub fn dot(self, o: Self) -> F {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(self, o: Self) -> Self {
        Self::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    pub fn norm(self) -> F {
        self.dot(self).sqrt()
    }

    pub fn scale(self, s: F) -> Self {
        Self::new(self.x * s, self.y * s, self.z * s)
    }
}

impl<F: Real> Add for Vec3<F> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl<F: Real> AddAssign for Vec3<F> {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl<F: Real> Sub for Vec3<F> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl<F: Real> Neg for Vec3<F> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y, -self.z)
    }
}

impl<F: Real> Mul<F> for Vec3<F> {
    type Output = Self;
    fn mul(self, s: F) -> Self {
        self.scale(s)
    }
}

impl<F: Real> Div<F> for Vec3<F> {
    type Output = Self;
    fn div(self, s: F) -> Self {
        Self::new(self.x / s, self.y / s, self.z / s)
    }
}

/// Row-major 3x3 matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat3<F> {
    pub m: [[F; 3]; 3],
}

impl<F: Real> Mat3<F> {
    pub fn new(m: [[F; 3]; 3]) -> Self {
        Self { m }
    }

    pub fn identity() -> Self {
        let (o, z) = (F::one(), F::zero());
        Self::new([[o, z, z], [z, o, z], [z, z, o]])
    }

    pub fn transpose(self) -> Self {
        let m = self.m;
        Self::new([
            [m[0][0], m[1][0], m[2][0]],
            [m[0][1], m[1][1], m[2][1]],
            [m[0][2], m[1][2], m[2][2]],
        ])
    }

    pub fn trace(self) -> F {
        self.m[0][0] + self.m[1][1] + self.m[2][2]
    }

    pub fn det(self) -> F {
        let m = self.m;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    /// Skew-symmetric cross-product matrix `[w x]`.
    pub fn skew(w: Vec3<F>) -> Self {
        let z = F::zero();
        Self::new([[z, -w.z, w.y], [w.z, z, -w.x], [-w.y, w.x, z]])
    }

    /// Largest absolute entry of `self - other`.
    pub fn max_abs_diff(self, other: Self) -> F {
        let mut worst = F::zero();
        for i in 0..3 {
            for j in 0..3 {
                worst = worst.max((self.m[i][j] - other.m[i][j]).abs());
            }
        }
        worst
    }
}

impl<F: Real> Mul for Mat3<F> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let mut r = [[F::zero(); 3]; 3];
        for (i, row) in r.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = self.m[i][0] * o.m[0][j] + self.m[i][1] * o.m[1][j] + self.m[i][2] * o.m[2][j];
            }
        }
        Self::new(r)
    }
}

impl<F: Real> Mul<Vec3<F>> for Mat3<F> {
    type Output = Vec3<F>;
    fn mul(self, v: Vec3<F>) -> Vec3<F> {
        Vec3::new(
            self.m[0][0] * v.x + self.m[0][1] * v.y + self.m[0][2] * v.z,
            self.m[1][0] * v.x + self.m[1][1] * v.y + self.m[1][2] * v.z,
            self.m[2][0] * v.x + self.m[2][1] * v.y + self.m[2][2] * v.z,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wrap_boundaries() {
        assert_eq!(wrap_angle(std::f64::consts::PI), std::f64::consts::PI);
        assert_eq!(wrap_angle(-std::f64::consts::PI), std::f64::consts::PI);
        assert!((wrap_angle(3.0 * std::f64::consts::PI) - std::f64::consts::PI).abs() < 1e-12);
        assert!((wrap_angle(7.0) - (7.0 - std::f64::consts::TAU)).abs() < 1e-12);
        assert_eq!(wrap_angle(0.25f32), 0.25f32);
    }

    #[test]
    fn mat_vec_roundtrip() {
        let r = Mat3::new([[0.0, 1.0, 0.0], [-1.0, 0.0, 0.0], [0.0, 0.0, 1.0]]);
        let v = Vec3::new(1.0, 2.0, 3.0);
        let w = r * v;
        assert_eq!(w, Vec3::new(2.0, -1.0, 3.0));
        let back = r.transpose() * w;
        assert!((back - v).norm() < 1e-15);
        assert!((r.det() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn cross_matches_skew() {
        let a = Vec3::new(0.3, -1.2, 2.0);
        let b = Vec3::new(1.5, 0.2, -0.7);
        let by_skew = Mat3::skew(a) * b;
        assert!((a.cross(b) - by_skew).norm() < 1e-15);
    }
}
