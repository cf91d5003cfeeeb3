//! Ptolemaic interpolation of the second equation, and zij-style tables.
//!
//! The two-variable `e(θc, θp)` is approximated from its two profiles at
//! θc = 0° and 180°:
//!
//! ```text
//! e(θc, θp) ≈ e(0, θp) + χ(θc)·(e(180°, θp) − e(0, θp))
//! χ(θc)     = (max|e(θc,·)| − max|e(0,·)|) / (max|e(180°,·)| − max|e(0,·)|)
//! max|e(θc,·)| = asin(P5P / OP5′(θc))
//! ```
//!
//! The maximum is reached when O–P′ is tangent to the epicycle.

use crate::angle::normalize_deg;
use crate::exec::Exec;
use crate::grid::{self, GridSample, StepError};
use crate::planar::{equation_of_center, second_equation, PlanarGeometry, PlanarSolution};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZijRow {
    pub theta: f64,
    pub e_c: f64,
    pub chi: f64,
    /// e(0°, θ)
    pub e0: f64,
    /// e(180°, θ) − e(0°, θ)
    pub de: f64,
}

pub fn max_abs_e(g: &PlanarGeometry, theta_c: f64) -> f64 {
    let (_, op5) = equation_of_center(g, theta_c);
    (g.p5p.abs() / op5).asin().to_degrees()
}

pub fn chi(g: &PlanarGeometry, theta_c: f64) -> f64 {
    let at_apogee = max_abs_e(g, 0.0);
    let at_perigee = max_abs_e(g, 180.0);
    (max_abs_e(g, theta_c) - at_apogee) / (at_perigee - at_apogee)
}

pub fn interp_e(g: &PlanarGeometry, theta_c: f64, theta_p: f64) -> f64 {
    let (e0, _) = second_equation(g, 0.0, theta_p);
    let (e180, _) = second_equation(g, 180.0, theta_p);
    e0 + chi(g, theta_c) * (e180 - e0)
}

/// Planar solution with `e` replaced by its interpolated value. `op` is
/// still the exact OP′.
pub fn interp_longitude(
    g: &PlanarGeometry,
    theta_a: f64,
    theta_c: f64,
    theta_p: f64,
) -> PlanarSolution {
    let (e_c, op5) = equation_of_center(g, theta_c);
    let (_, op) = second_equation(g, theta_c, theta_p);
    let e = interp_e(g, theta_c, theta_p);
    PlanarSolution {
        e_c,
        e,
        op5,
        op,
        longitude: normalize_deg(theta_a + theta_c + e_c + e),
    }
}

/// One row per grid node `0, step, …, 360 − step`.
pub fn generate_zij(g: &PlanarGeometry, step: f64) -> Result<Vec<ZijRow>, StepError> {
    Ok(grid::nodes(step)?
        .into_iter()
        .map(|theta| {
            let (e0, _) = second_equation(g, 0.0, theta);
            let (e180, _) = second_equation(g, 180.0, theta);
            ZijRow {
                theta,
                e_c: equation_of_center(g, theta).0,
                chi: chi(g, theta),
                e0,
                de: e180 - e0,
            }
        })
        .collect())
}

/// `interp_e − e` over the (θc, θp) grid.
pub fn error_surface(
    g: &PlanarGeometry,
    step: f64,
    exec: Exec,
) -> Result<Vec<GridSample>, StepError> {
    grid::scan(step, exec, |c, p| {
        interp_e(g, c, p) - second_equation(g, c, p).0
    })
}

/// `e(θc, θp)` over the grid.
pub fn e_surface(g: &PlanarGeometry, step: f64, exec: Exec) -> Result<Vec<GridSample>, StepError> {
    grid::scan(step, exec, |c, p| second_equation(g, c, p).0)
}
