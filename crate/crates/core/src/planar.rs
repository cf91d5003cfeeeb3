//! Planar theory: the equation of center, the second equation and the
//! planar longitude, plus a direct composition of the k-rotations that
//! serves as an independent check on the closed forms.
//!
//! With every tilt dropped, the image of the planet is
//!
//! ```text
//! P′ = R(P1,k,θa)∘R(P2,k,θc)∘R(P3,k,−θc)∘R(P4,k,2θc)∘R(P5,k,θp−θc) (P)
//! ```
//!
//! and its longitude from `j` is `θa + θc + e_c(θc) + e(θc, θp)`, where
//!
//! ```text
//! e_c(θc)  = −asin((P3P4 + P4P5)·sin θc / OP5′)
//! OP5′     = √(((P3P4 + P4P5)·sin θc)² + (OP3 + (P3P4 − P4P5)·cos θc)²)
//! e(θc,θp) = asin(P5P·sin(θp − e_c) / OP′)
//! OP′      = √((P5P·sin(θp − e_c))² + (OP5′ + P5P·cos(θp − e_c))²)
//! ```
//!
//! with the lengths taken as distances (P4P5 points back toward the
//! center of the World, which the sign pattern already accounts for).

use thiserror::Error;

use crate::angle::normalize_deg;
use crate::geom3::{apply_sequence, Rotation, Vec3};
use crate::model::{Axis, OrbModel, Param, PLANET};
use crate::sphere::ecliptic_longitude;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PlanarError {
    #[error("model has no anchor `{0}` required by the planar equations")]
    MissingAnchor(&'static str),
    #[error("model's k-rotations do not follow the θa, θc, −θc, 2θc, θp−θc pattern")]
    NotPlanarForm,
    #[error("centers P1 and P2 must coincide with the center of the World")]
    OffCenter,
    #[error("epicycle radius {p5p} reaches the center of the World (min OP5′ = {min_op5})")]
    EpicycleTooLarge { p5p: f64, min_op5: f64 },
}

/// Signed offsets along `j` of the initial figure.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlanarGeometry {
    /// O→P3
    pub op3: f64,
    /// P3→P4
    pub p3p4: f64,
    /// P4→P5 (negative for Venus)
    pub p4p5: f64,
    /// P5→P
    pub p5p: f64,
}

impl PlanarGeometry {
    pub const VENUS: PlanarGeometry = PlanarGeometry {
        op3: 60.0,
        p3p4: 1.0 + 41.0 / 60.0,
        p4p5: -26.0 / 60.0,
        p5p: 43.0 + 33.0 / 60.0,
    };

    /// Reads the leg lengths from a model's anchors and checks that its
    /// k-rotations are the ones the closed forms describe.
    pub fn from_model(m: &OrbModel) -> Result<Self, PlanarError> {
        let off = |name: &'static str| {
            m.anchor(name)
                .map(|a| a.offset)
                .ok_or(PlanarError::MissingAnchor(name))
        };
        if off("P1")? != 0.0 || off("P2")? != 0.0 {
            return Err(PlanarError::OffCenter);
        }
        let (p3, p4, p5, p) = (off("P3")?, off("P4")?, off("P5")?, off(PLANET)?);

        use Param::*;
        let expected: [(&str, &[(i32, Param)]); 5] = [
            ("P1", &[(1, ThetaA)]),
            ("P2", &[(1, ThetaC)]),
            ("P3", &[(-1, ThetaC)]),
            ("P4", &[(2, ThetaC)]),
            ("P5", &[(1, ThetaP), (-1, ThetaC)]),
        ];
        let ks: Vec<_> = m.rotations.iter().filter(|r| r.axis == Axis::K).collect();
        let matches = ks.len() == expected.len()
            && ks.iter().zip(expected.iter()).all(|(r, (anchor, terms))| {
                r.anchor == *anchor
                    && r.angle.constant == 0.0
                    && r.angle.terms.len() == terms.len()
                    && r.angle
                        .terms
                        .iter()
                        .zip(terms.iter())
                        .all(|(t, &(c, p))| t.coef == c && t.param == p)
            });
        if !matches {
            return Err(PlanarError::NotPlanarForm);
        }

        let g = PlanarGeometry {
            op3: p3,
            p3p4: p4 - p3,
            p4p5: p5 - p4,
            p5p: p - p5,
        };
        let min_op5 = g.op3 - (g.p3p4.abs() + g.p4p5.abs());
        if g.p5p.abs() >= min_op5 {
            return Err(PlanarError::EpicycleTooLarge {
                p5p: g.p5p.abs(),
                min_op5,
            });
        }
        Ok(g)
    }

    /// Range of OP5′ over all θc.
    pub fn op5_range(&self) -> (f64, f64) {
        let a = self.op3 + self.p3p4 + self.p4p5;
        let b = self.op3 - self.p3p4 - self.p4p5;
        (a.min(b), a.max(b))
    }
}

impl Default for PlanarGeometry {
    fn default() -> Self {
        PlanarGeometry::VENUS
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlanarSolution {
    pub e_c: f64,
    pub e: f64,
    pub op5: f64,
    pub op: f64,
    /// `θa + θc + e_c + e`, in `[0, 360)`.
    pub longitude: f64,
}

/// `(e_c, OP5′)` in degrees and model lengths.
pub fn equation_of_center(g: &PlanarGeometry, theta_c: f64) -> (f64, f64) {
    let (s, c) = normalize_deg(theta_c).to_radians().sin_cos();
    // distances: P3P4 = p3p4, P4P5 = −p4p5
    let across = (g.p3p4 - g.p4p5) * s;
    let along = g.op3 + (g.p3p4 + g.p4p5) * c;
    let op5 = across.hypot(along);
    (-(across / op5).asin().to_degrees(), op5)
}

fn second_from(g: &PlanarGeometry, e_c: f64, op5: f64, theta_p: f64) -> (f64, f64) {
    let (s, c) = (theta_p - e_c).to_radians().sin_cos();
    let across = g.p5p * s;
    let op = across.hypot(op5 + g.p5p * c);
    debug_assert!(g.p5p.abs() < op5, "arcsin branch requires P5P < OP5′");
    ((across / op).asin().to_degrees(), op)
}

/// `(e, OP′)` in degrees and model lengths.
pub fn second_equation(g: &PlanarGeometry, theta_c: f64, theta_p: f64) -> (f64, f64) {
    let (e_c, op5) = equation_of_center(g, theta_c);
    second_from(g, e_c, op5, theta_p)
}

pub fn planar_longitude(
    g: &PlanarGeometry,
    theta_a: f64,
    theta_c: f64,
    theta_p: f64,
) -> PlanarSolution {
    let (e_c, op5) = equation_of_center(g, theta_c);
    let (e, op) = second_from(g, e_c, op5, theta_p);
    PlanarSolution {
        e_c,
        e,
        op5,
        op,
        longitude: normalize_deg(theta_a + theta_c + e_c + e),
    }
}

/// Images of the initial figure's points under the k-rotations alone.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlanarFigure {
    pub p3: Vec3,
    pub p4: Vec3,
    pub p5: Vec3,
    pub p: Vec3,
    pub longitude: f64,
}

/// Direct rotation composition in the ecliptic plane; shares nothing
/// with the closed forms.
pub fn planar_oracle(g: &PlanarGeometry, theta_a: f64, theta_c: f64, theta_p: f64) -> PlanarFigure {
    let on_j = |y: f64| Vec3::new(0.0, y, 0.0);
    let p3 = on_j(g.op3);
    let p4 = on_j(g.op3 + g.p3p4);
    let p5 = on_j(g.op3 + g.p3p4 + g.p4p5);
    let p = on_j(g.op3 + g.p3p4 + g.p4p5 + g.p5p);
    let rs = [
        Rotation::new(Vec3::ZERO, Vec3::K, theta_a),
        Rotation::new(Vec3::ZERO, Vec3::K, theta_c),
        Rotation::new(p3, Vec3::K, -theta_c),
        Rotation::new(p4, Vec3::K, 2.0 * theta_c),
        Rotation::new(p5, Vec3::K, theta_p - theta_c),
    ];
    let image = apply_sequence(&rs, p);
    PlanarFigure {
        p3: apply_sequence(&rs[..2], p3),
        p4: apply_sequence(&rs[..3], p4),
        p5: apply_sequence(&rs[..4], p5),
        p: image,
        longitude: ecliptic_longitude(image),
    }
}
