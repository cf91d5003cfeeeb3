//! Spherical coordinates of points carried by the inclined orb, and the
//! equation of displacement.
//!
//! Longitudes are measured from `j` (the vernal point) in the sense of
//! increasing θa, i.e. counterclockwise about `k`.

use crate::angle::{normalize_deg, wrap180};
use crate::geom3::Vec3;
use crate::planar::{equation_of_center, second_equation, PlanarGeometry};

/// Lunar maximum latitude used by the displacement-correction recipe.
pub const LUNAR_MAX_LATITUDE: f64 = 5.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EclipticCoord {
    /// `[0, 360)`
    pub longitude: f64,
    /// `[-90, 90]`
    pub latitude: f64,
    pub radius: f64,
}

/// Longitude of `v` from `j`, counterclockwise about `k`.
pub fn ecliptic_longitude(v: Vec3) -> f64 {
    normalize_deg((-v.x).atan2(v.y).to_degrees())
}

pub fn ecliptic_of(v: Vec3) -> EclipticCoord {
    let radius = v.norm();
    let latitude = if radius > 0.0 {
        (v.z / radius).clamp(-1.0, 1.0).asin().to_degrees()
    } else {
        0.0
    };
    EclipticCoord {
        longitude: ecliptic_longitude(v),
        latitude,
        radius,
    }
}

/// Angle from the ascending-node direction `u` to P′ in the inclined plane.
pub fn theta_ell(g: &PlanarGeometry, theta_c: f64, theta_p: f64) -> f64 {
    let (e_c, _) = equation_of_center(g, theta_c);
    let (e, _) = second_equation(g, theta_c, theta_p);
    theta_ell_from(theta_c, e_c, e)
}

pub fn theta_ell_from(theta_c: f64, e_c: f64, e: f64) -> f64 {
    normalize_deg(theta_c + e_c + e + 90.0)
}

/// Ecliptic longitude and latitude of the point at angle `theta_ell` on a
/// circle inclined by `tilt` whose node line sits at longitude θa − 90°.
/// The radius is set to 1.
pub fn incline_coords(theta_ell: f64, theta_a: f64, tilt: f64) -> EclipticCoord {
    let t = theta_ell.to_radians();
    let i = tilt.to_radians();
    // quadrant-correct arctan(cos i · tan θℓ)
    let along = (i.cos() * t.sin()).atan2(t.cos()).to_degrees();
    EclipticCoord {
        longitude: normalize_deg(along - 90.0 + theta_a),
        latitude: (i.sin() * t.sin()).asin().to_degrees(),
        radius: 1.0,
    }
}

/// `arctan(cos i · tan θ) − θ`, signed, in degrees.
pub fn displacement_equation(theta: f64, inclination: f64) -> f64 {
    let t = theta.to_radians();
    let projected = (inclination.to_radians().cos() * t.sin())
        .atan2(t.cos())
        .to_degrees();
    wrap180(projected - theta)
}

/// Largest |displacement| for a given inclination: `asin(tan²(i/2))`.
pub fn displacement_max(inclination: f64) -> f64 {
    let h = (inclination.to_radians() / 2.0).tan();
    (h * h).asin().to_degrees()
}

/// The table recipe for a body other than the Moon: take the lunar
/// displacement for the elongation from the ascending node, scale by
/// `latitude / max_latitude`, add it in the second and fourth quadrants
/// and subtract it otherwise.
pub fn displacement_correction(elongation_from_node: f64, latitude: f64, max_latitude: f64) -> f64 {
    assert!(max_latitude > 0.0, "max_latitude must be positive");
    let elong = normalize_deg(elongation_from_node);
    let magnitude =
        displacement_equation(elong, LUNAR_MAX_LATITUDE).abs() * latitude / max_latitude;
    let additive = (90.0 < elong && elong < 180.0) || (270.0 < elong && elong < 360.0);
    if additive {
        magnitude
    } else {
        -magnitude
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom3::Rotation;

    const G: PlanarGeometry = PlanarGeometry::VENUS;
    const INCLINE: f64 = 10.0 / 60.0;

    #[test]
    fn longitude_convention() {
        assert_eq!(ecliptic_longitude(Vec3::J), 0.0);
        assert!((ecliptic_longitude(Vec3::new(-1.0, 0.0, 0.0)) - 90.0).abs() < 1e-12);
        assert!((ecliptic_longitude(Vec3::I) - 270.0).abs() < 1e-12);
        let r = Rotation::new(Vec3::ZERO, Vec3::K, 123.0);
        assert!((ecliptic_longitude(r.apply(Vec3::J)) - 123.0).abs() < 1e-12);
        let c = ecliptic_of(Vec3::new(0.0, 1.0, 1.0));
        assert!((c.latitude - 45.0).abs() < 1e-12);
        assert!((c.radius - 2f64.sqrt()).abs() < 1e-15);
        assert_eq!(ecliptic_of(Vec3::ZERO).latitude, 0.0);
    }

    #[test]
    fn theta_ell_examples() {
        assert!((theta_ell(&G, 0.0, 0.0) - 90.0).abs() < 1e-12);
        assert!((theta_ell(&G, 180.0, 180.0) - 270.0).abs() < 1e-9);
        let tc = 202.0 + 16.0 / 60.0 + 50.0 / 3600.0;
        let tp = 320.0 + 50.0 / 60.0 + 19.0 / 3600.0;
        // 202.28056 + 0.78136 − 16.86360 + 90
        assert!((theta_ell(&G, tc, tp) - 276.198_316).abs() < 1e-5);
    }

    #[test]
    fn incline_coords_examples() {
        let ta = 77.0 + 52.0 / 60.0 + 10.0 / 3600.0;
        let c = incline_coords(90.0, ta, INCLINE);
        assert!((c.latitude - INCLINE).abs() < 1e-12);
        assert!((c.longitude - ta).abs() < 1e-12);

        for th in [0.0, 37.0, 90.0, 200.0, 300.0] {
            let c = incline_coords(th, ta, 0.0);
            assert_eq!(c.latitude, 0.0);
            assert!(wrap180(c.longitude - (th - 90.0 + ta)).abs() < 1e-12);
        }

        let tc = 202.0 + 16.0 / 60.0 + 50.0 / 3600.0;
        let tp = 320.0 + 50.0 / 60.0 + 19.0 / 3600.0;
        let c = incline_coords(theta_ell(&G, tc, tp), ta, INCLINE);
        assert!((c.latitude * 60.0 + 9.9).abs() < 0.05);
        assert!((c.longitude - 264.0678).abs() < 0.01);
    }

    #[test]
    fn incline_coords_match_3d_rotation() {
        // rotate the in-plane point about u = R(k, θa) i by the tilt
        let ta = 40.0;
        let u = Rotation::new(Vec3::ZERO, Vec3::K, ta).apply(Vec3::I);
        let tilt = Rotation::new(Vec3::ZERO, u, INCLINE);
        for k in 0..72 {
            let th = k as f64 * 5.0;
            let in_plane = Rotation::new(Vec3::ZERO, Vec3::K, th).apply(u);
            let c3 = ecliptic_of(tilt.apply(in_plane));
            let c = incline_coords(th, ta, INCLINE);
            assert!(wrap180(c3.longitude - c.longitude).abs() < 1e-9);
            assert!((c3.latitude - c.latitude).abs() < 1e-9);
        }
    }

    #[test]
    fn displacement_examples() {
        assert_eq!(displacement_equation(0.0, 5.0), 0.0);
        let mut worst: f64 = 0.0;
        for k in 0..=36_000 {
            worst = worst.max(displacement_equation(k as f64 * 0.01, 5.0).abs());
        }
        let analytic = displacement_max(5.0);
        assert!((worst - analytic).abs() * 3600.0 < 0.01);
        // 6′33″, within 10″ of six and two-thirds minutes
        assert!((analytic * 3600.0 - 393.0).abs() < 1.0);
        assert!((analytic * 3600.0 - 400.0).abs() <= 10.0);
        // asin(tan²(0;5)) = 0.436″
        let bound = displacement_max(INCLINE);
        assert!((bound * 3600.0 - 0.436).abs() < 1e-3);
        for k in 0..3600 {
            assert!(displacement_equation(k as f64 * 0.1, INCLINE).abs() <= bound * (1.0 + 1e-9));
        }
    }

    #[test]
    fn incline_longitude_is_displacement() {
        for k in 0..720 {
            let th = k as f64 * 0.5;
            let c = incline_coords(th, 0.0, INCLINE);
            let d = wrap180(c.longitude - (th - 90.0));
            assert!((d - displacement_equation(th, INCLINE)).abs() <= 1e-12);
            let mirrored = incline_coords(360.0 - th, 0.0, INCLINE);
            assert!((mirrored.latitude + c.latitude).abs() <= 1e-12);
        }
    }

    #[test]
    fn displacement_correction_quadrants() {
        assert_eq!(displacement_correction(0.0, 3.0, 5.0), 0.0);
        assert!(displacement_correction(90.0, 3.0, 5.0).abs() < 1e-12);
        let oct = displacement_correction(45.0, 5.0, 5.0);
        assert!((oct * 3600.0 + 393.0).abs() < 1.0);
        assert!(displacement_correction(135.0, 5.0, 5.0) > 0.0);
        assert!(displacement_correction(225.0, 5.0, 5.0) < 0.0);
        assert!(displacement_correction(315.0, 5.0, 5.0) > 0.0);
        let half = displacement_correction(45.0, 2.5, 5.0);
        assert!((half - oct / 2.0).abs() < 1e-15);
    }
}
