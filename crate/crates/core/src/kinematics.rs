//! Full 3D evaluation of a model, and its split into planar motion,
//! incline and the residual operator M.
//!
//! The split uses the commutation `R∘S = T∘R` with `T = conjugate(R, S)`:
//! every k-axis rotation is bubbled to the right end of the list, turning
//! the tilts it passes into conjugated tilts. The k-rotations keep their
//! original centers and order, so they form exactly the planar motion.
//! The outermost swept tilt is the inclined orb `R(P2, u, 0;10)`; the rest
//! are conjugated once more by it so the reassembled order reads
//! `M ∘ incline ∘ planar`.

use crate::angle::wrap180;
use crate::exec::Exec;
use crate::geom3::{apply_sequence, conjugate, Rotation, Vec3};
use crate::grid::{self, GridSample, StepError};
use crate::model::{Axis, OrbModel, ParamSet};
use crate::sphere::{ecliptic_longitude, ecliptic_of, EclipticCoord};

#[derive(Debug, Clone, PartialEq)]
pub struct SplitMotion {
    /// M, outermost first.
    pub m_rotations: Vec<Rotation>,
    pub incline_rotation: Option<Rotation>,
    /// All about axes parallel to `k`, outermost first.
    pub planar_rotations: Vec<Rotation>,
}

impl SplitMotion {
    /// Planar rotations, then the incline, then M.
    pub fn apply(&self, p: Vec3) -> Vec3 {
        let q = self.apply_without_m(p);
        apply_sequence(&self.m_rotations, q)
    }

    /// Image when M is neglected.
    pub fn apply_without_m(&self, p: Vec3) -> Vec3 {
        let q = apply_sequence(&self.planar_rotations, p);
        match &self.incline_rotation {
            Some(r) => r.apply(q),
            None => q,
        }
    }

    pub fn planar_image(&self, p: Vec3) -> Vec3 {
        apply_sequence(&self.planar_rotations, p)
    }
}

pub fn position_at(m: &OrbModel, params: &ParamSet) -> Vec3 {
    apply_sequence(&m.rotations_at(params), m.planet())
}

/// Image of the planet at `t` Persian years.
pub fn position3d(m: &OrbModel, t: f64) -> Vec3 {
    position_at(m, &m.params_at(t))
}

pub fn coords_at(m: &OrbModel, params: &ParamSet) -> EclipticCoord {
    ecliptic_of(position_at(m, params))
}

pub fn split_at(m: &OrbModel, params: &ParamSet) -> SplitMotion {
    let is_planar: Vec<bool> = m.rotations.iter().map(|r| r.axis == Axis::K).collect();
    let mut rots: Vec<(Rotation, bool)> =
        m.rotations_at(params).into_iter().zip(is_planar).collect();

    // bubble sort by "is planar", conjugating each tilt a k-rotation passes
    let n = rots.len();
    for end in (1..n).rev() {
        for i in 0..end {
            if rots[i].1 && !rots[i + 1].1 {
                let (k_rot, tilt) = (rots[i].0, rots[i + 1].0);
                rots[i] = (conjugate(&k_rot, &tilt), false);
                rots[i + 1] = (k_rot, true);
            }
        }
    }

    let split_at = rots.iter().position(|r| r.1).unwrap_or(n);
    let tilts: Vec<Rotation> = rots[..split_at].iter().map(|r| r.0).collect();
    let planar_rotations = rots[split_at..].iter().map(|r| r.0).collect();

    let (incline_rotation, m_rotations) = match tilts.split_first() {
        Some((incline, rest)) => (
            Some(*incline),
            rest.iter().map(|s| conjugate(incline, s)).collect(),
        ),
        None => (None, Vec::new()),
    };
    SplitMotion {
        m_rotations,
        incline_rotation,
        planar_rotations,
    }
}

pub fn split(m: &OrbModel, t: f64) -> SplitMotion {
    split_at(m, &m.params_at(t))
}

/// Longitude error from neglecting M, in degrees, wrapped to (−180, 180].
pub fn delta_lambda_at(m: &OrbModel, params: &ParamSet) -> f64 {
    let parts = split_at(m, params);
    let p = m.planet();
    let full = apply_sequence(&m.rotations_at(params), p);
    wrap180(ecliptic_longitude(full) - ecliptic_longitude(parts.apply_without_m(p)))
}

/// Same as [`delta_lambda_at`] with θa = 0; the value does not depend on θa.
pub fn delta_lambda(m: &OrbModel, theta_c: f64, theta_p: f64) -> f64 {
    delta_lambda_at(m, &ParamSet::new(0.0, theta_c, theta_p))
}

pub fn delta_lambda_grid(
    m: &OrbModel,
    step: f64,
    exec: Exec,
) -> Result<Vec<GridSample>, StepError> {
    grid::scan(step, exec, |c, p| delta_lambda(m, c, p))
}

/// Latitude of the full 3D position over (θc, θp); θa does not enter.
pub fn latitude_grid(m: &OrbModel, step: f64, exec: Exec) -> Result<Vec<GridSample>, StepError> {
    grid::scan(step, exec, |c, p| {
        coords_at(m, &ParamSet::new(0.0, c, p)).latitude
    })
}
