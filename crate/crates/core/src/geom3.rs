//! Rotations about arbitrary anchor points.
//!
//! Every motion in an orb model is a rotation `R(center, axis, angle)`: the
//! point is translated so that `center` is the origin, rotated by `angle`
//! about `axis` following the right-hand rule, then translated back.
//! Sequences are written outermost-first, as in `R₁∘R₂∘…∘Rₙ (P)`, so the
//! last rotation in a list is applied first.

use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const ZERO: Vec3 = Vec3::new(0.0, 0.0, 0.0);
    pub const I: Vec3 = Vec3::new(1.0, 0.0, 0.0);
    pub const J: Vec3 = Vec3::new(0.0, 1.0, 0.0);
    pub const K: Vec3 = Vec3::new(0.0, 0.0, 1.0);

    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Vec3 { x, y, z }
    }

    pub fn dot(self, o: Vec3) -> f64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(self, o: Vec3) -> Vec3 {
        Vec3::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn normalized(self) -> Vec3 {
        self * (1.0 / self.norm())
    }

    pub fn distance(self, o: Vec3) -> f64 {
        (self - o).norm()
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

impl Mul<f64> for Vec3 {
    type Output = Vec3;
    fn mul(self, s: f64) -> Vec3 {
        Vec3::new(self.x * s, self.y * s, self.z * s)
    }
}

/// Row-major 3×3 matrix; only used for the linear part of a rotation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat3([[f64; 3]; 3]);

impl Mat3 {
    pub const IDENTITY: Mat3 = Mat3([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]);

    /// Rodrigues' formula for a unit axis and an angle in radians.
    fn axis_angle(a: Vec3, theta: f64) -> Mat3 {
        let (s, c) = theta.sin_cos();
        let t = 1.0 - c;
        Mat3([
            [
                t * a.x * a.x + c,
                t * a.x * a.y - s * a.z,
                t * a.x * a.z + s * a.y,
            ],
            [
                t * a.x * a.y + s * a.z,
                t * a.y * a.y + c,
                t * a.y * a.z - s * a.x,
            ],
            [
                t * a.x * a.z - s * a.y,
                t * a.y * a.z + s * a.x,
                t * a.z * a.z + c,
            ],
        ])
    }

    pub fn apply(&self, v: Vec3) -> Vec3 {
        let m = &self.0;
        Vec3::new(
            m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
            m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
            m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z,
        )
    }

    pub fn rows(&self) -> [[f64; 3]; 3] {
        self.0
    }
}

/// `R(center, axis, angle)`; angle in degrees, positive counterclockwise
/// when looking down the axis toward its origin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rotation {
    center: Vec3,
    axis: Vec3,
    angle: f64,
    linear: Mat3,
}

impl Rotation {
    /// Panics if `axis` is zero or not finite.
    pub fn new(center: Vec3, axis: Vec3, angle_deg: f64) -> Self {
        let n = axis.norm();
        assert!(
            n > 0.0 && n.is_finite(),
            "rotation axis must be a nonzero finite vector"
        );
        let axis = axis * (1.0 / n);
        Rotation {
            center,
            axis,
            angle: angle_deg,
            linear: Mat3::axis_angle(axis, angle_deg.to_radians()),
        }
    }

    pub fn identity() -> Self {
        Rotation::new(Vec3::ZERO, Vec3::K, 0.0)
    }

    pub fn center(&self) -> Vec3 {
        self.center
    }

    pub fn axis(&self) -> Vec3 {
        self.axis
    }

    /// Angle in degrees.
    pub fn angle(&self) -> f64 {
        self.angle
    }

    pub fn linear(&self) -> &Mat3 {
        &self.linear
    }

    pub fn inverse(&self) -> Rotation {
        Rotation::new(self.center, self.axis, -self.angle)
    }

    pub fn apply(&self, p: Vec3) -> Vec3 {
        self.center + self.linear.apply(p - self.center)
    }
}

pub fn apply(r: &Rotation, p: Vec3) -> Vec3 {
    r.apply(p)
}

/// Applies `rs` as the composition `rs[0] ∘ rs[1] ∘ … ∘ rs[n-1]`.
pub fn apply_sequence(rs: &[Rotation], p: Vec3) -> Vec3 {
    rs.iter().rev().fold(p, |q, r| r.apply(q))
}

/// The rotation `T` with `r ∘ s = T ∘ r`: same angle as `s`, center and
/// axis carried by `r`.
pub fn conjugate(r: &Rotation, s: &Rotation) -> Rotation {
    Rotation::new(r.apply(s.center), r.linear.apply(s.axis), s.angle)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use nalgebra::{Point3, Unit, UnitQuaternion, Vector3};
    use proptest::prelude::*;

    fn close(a: Vec3, b: Vec3, tol: f64) -> bool {
        a.distance(b) <= tol
    }

    /// Independent back-end: unit quaternion about the anchor.
    fn quat_apply(r: &Rotation, p: Vec3) -> Vec3 {
        let axis = Unit::new_normalize(Vector3::new(r.axis().x, r.axis().y, r.axis().z));
        let q = UnitQuaternion::from_axis_angle(&axis, r.angle().to_radians());
        let c = Point3::new(r.center().x, r.center().y, r.center().z);
        let v = q * (Point3::new(p.x, p.y, p.z) - c);
        let out = c + v;
        Vec3::new(out.x, out.y, out.z)
    }

    #[test]
    fn quarter_turn_about_k() {
        let r = Rotation::new(Vec3::ZERO, Vec3::K, 90.0);
        assert!(close(r.apply(Vec3::J), Vec3::new(-1.0, 0.0, 0.0), 1e-15));
    }

    #[test]
    fn zero_angle_is_identity() {
        let p = Vec3::new(3.0, -2.0, 7.5);
        for axis in [Vec3::I, Vec3::J, Vec3::K, Vec3::new(1.0, 2.0, -3.0)] {
            let r = Rotation::new(Vec3::new(1.0, 1.0, 1.0), axis, 0.0);
            assert_eq!(r.apply(p), p);
        }
    }

    #[test]
    fn half_turn_about_offset_center() {
        let r = Rotation::new(Vec3::new(0.0, 60.0, 0.0), Vec3::K, 180.0);
        assert!(close(
            r.apply(Vec3::new(0.0, 61.0, 0.0)),
            Vec3::new(0.0, 59.0, 0.0),
            1e-12
        ));
    }

    #[test]
    fn axis_is_normalized() {
        let r = Rotation::new(Vec3::ZERO, Vec3::new(0.0, 0.0, 5.0), 10.0);
        assert_abs_diff_eq!(r.axis().norm(), 1.0, epsilon = 1e-15);
    }

    #[test]
    #[should_panic]
    fn zero_axis_panics() {
        Rotation::new(Vec3::ZERO, Vec3::ZERO, 1.0);
    }

    #[test]
    fn sequence_applies_rightmost_first() {
        let p = Vec3::new(0.3, 1.0, -0.2);
        assert_eq!(apply_sequence(&[], p), p);

        let a = Rotation::new(Vec3::ZERO, Vec3::K, 37.0);
        let b = Rotation::new(Vec3::ZERO, Vec3::K, 15.0);
        let ab = Rotation::new(Vec3::ZERO, Vec3::K, 52.0);
        assert!(close(apply_sequence(&[a, b], p), ab.apply(p), 1e-13));

        // non-commuting pair: order matters
        let x = Rotation::new(Vec3::ZERO, Vec3::I, 90.0);
        let z = Rotation::new(Vec3::ZERO, Vec3::K, 90.0);
        let got = apply_sequence(&[x, z], Vec3::J);
        // z first: j -> -i; then x leaves -i fixed
        assert!(close(got, Vec3::new(-1.0, 0.0, 0.0), 1e-15));
    }

    #[test]
    fn conjugate_examples() {
        let s = Rotation::new(Vec3::ZERO, Vec3::I, 10.0 / 60.0);
        let t = conjugate(&Rotation::identity(), &s);
        assert!(close(t.axis(), s.axis(), 1e-15));
        assert!(close(t.center(), s.center(), 1e-15));
        assert_eq!(t.angle(), s.angle());

        let theta_a = 77.0 + 52.0 / 60.0 + 10.0 / 3600.0;
        let r = Rotation::new(Vec3::ZERO, Vec3::K, theta_a);
        let t = conjugate(&r, &s);
        let u = r.apply(Vec3::I);
        assert!(close(t.axis(), u, 1e-15));
        assert_eq!(t.angle(), 10.0 / 60.0);

        let r = Rotation::new(Vec3::ZERO, Vec3::K, 90.0);
        let s = Rotation::new(Vec3::new(0.0, 60.0, 0.0), Vec3::I, 5.0);
        let t = conjugate(&r, &s);
        assert!(close(t.center(), Vec3::new(-60.0, 0.0, 0.0), 1e-12));
        assert!(close(t.axis(), Vec3::J, 1e-15));
        assert_eq!(t.angle(), 5.0);
    }

    fn vec3(range: f64) -> impl Strategy<Value = Vec3> {
        (-range..range, -range..range, -range..range).prop_map(|(x, y, z)| Vec3::new(x, y, z))
    }

    fn axis() -> impl Strategy<Value = Vec3> {
        vec3(1.0).prop_filter("nonzero axis", |a| a.norm() > 1e-3)
    }

    fn rotation() -> impl Strategy<Value = Rotation> {
        (vec3(100.0), axis(), -360.0..360.0f64).prop_map(|(c, a, t)| Rotation::new(c, a, t))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn isometry(r in rotation(), p in vec3(150.0), q in vec3(150.0)) {
            let d = p.distance(q);
            let d2 = r.apply(p).distance(r.apply(q));
            prop_assert!((d - d2).abs() <= 1e-12 * d.max(1.0));
            let rc = p.distance(r.center());
            prop_assert!((r.apply(p).distance(r.center()) - rc).abs() <= 1e-12 * rc.max(1.0));
        }

        #[test]
        fn conjugation_identity(r in rotation(), s in rotation(), p in vec3(150.0)) {
            let t = conjugate(&r, &s);
            let lhs = r.apply(s.apply(p));
            let rhs = t.apply(r.apply(p));
            prop_assert!(lhs.distance(rhs) <= 1e-9);
        }

        #[test]
        fn inverse_undoes(r in rotation(), p in vec3(150.0)) {
            let back = r.inverse().apply(r.apply(p));
            prop_assert!(back.distance(p) <= 1e-12 * p.distance(r.center()).max(1.0));
        }

        #[test]
        fn matrix_and_quaternion_agree(r in rotation(), p in vec3(150.0)) {
            prop_assert!(r.apply(p).distance(quat_apply(&r, p)) <= 1e-10);
        }
    }
}
