//! Routes one instant through the chosen computation path.

use orbkin_core::kinematics::coords_at;
use orbkin_core::model::OrbModel;
use orbkin_core::planar::planar_longitude;
use orbkin_core::sphere::{incline_coords, theta_ell_from, EclipticCoord};
use orbkin_core::tables::interp_longitude;
use orbkin_core::time::Instant;
use orbkin_core::{Exec, PlanarGeometry, PlanarSolution};

use crate::error::DataError;
use crate::records::{EphemerisRecord, Method};

#[derive(Debug, Clone)]
pub struct Engine {
    model: OrbModel,
    method: Method,
    geometry: Option<PlanarGeometry>,
}

impl Engine {
    /// Fails when a planar method is asked of a model the closed forms do
    /// not describe.
    pub fn new(model: OrbModel, method: Method) -> Result<Self, DataError> {
        let geometry = match method {
            Method::Full3d => None,
            _ => Some(PlanarGeometry::from_model(&model)?),
        };
        Ok(Engine {
            model,
            method,
            geometry,
        })
    }

    pub fn model(&self) -> &OrbModel {
        &self.model
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn coords(&self, t: f64) -> EclipticCoord {
        let params = self.model.params_at(t);
        let (ta, tc, tp) = (params.theta_a, params.theta_c, params.theta_p);
        let solve = |sol: PlanarSolution| {
            let th = theta_ell_from(tc, sol.e_c, sol.e);
            EclipticCoord {
                radius: sol.op,
                ..incline_coords(th, ta, self.model.incline_tilt())
            }
        };
        match (self.method, &self.geometry) {
            (Method::PlanarExact, Some(g)) => solve(planar_longitude(g, ta, tc, tp)),
            (Method::PlanarInterp, Some(g)) => solve(interp_longitude(g, ta, tc, tp)),
            _ => coords_at(&self.model, &params),
        }
    }

    pub fn record(&self, instant: Instant) -> EphemerisRecord {
        let c = self.coords(instant.t);
        EphemerisRecord {
            jd: instant.jd(),
            t_years: instant.t,
            method: self.method,
            longitude_deg: c.longitude,
            latitude_deg: c.latitude,
            radius: c.radius,
        }
    }

    /// Rows come back in input order whatever `exec` is.
    pub fn records(&self, instants: &[Instant], exec: Exec) -> Vec<EphemerisRecord> {
        exec.map(instants, |i| self.record(*i))
    }
}
