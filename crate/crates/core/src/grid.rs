//! Regular (θc, θp) grids used for the figure surfaces.

use thiserror::Error;

use crate::exec::Exec;

#[derive(Debug, Clone, Copy, PartialEq, Error)]
#[error("grid step {0}° must be positive and divide 360°")]
pub struct StepError(pub f64);

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSample {
    pub theta_c: f64,
    pub theta_p: f64,
    pub value: f64,
}

/// Nodes `0, step, …, 360 − step`.
pub fn nodes(step: f64) -> Result<Vec<f64>, StepError> {
    if !(step.is_finite() && step > 0.0) {
        return Err(StepError(step));
    }
    let n = (360.0 / step).round();
    if n < 1.0 || (n * step - 360.0).abs() > 1e-9 {
        return Err(StepError(step));
    }
    Ok((0..n as usize).map(|i| i as f64 * step).collect())
}

/// Evaluates `f(θc, θp)` on the full grid, θc-major.
pub fn scan<F>(step: f64, exec: Exec, f: F) -> Result<Vec<GridSample>, StepError>
where
    F: Fn(f64, f64) -> f64 + Sync + Send,
{
    let axis = nodes(step)?;
    let n = axis.len();
    Ok(exec.map_range(n * n, |idx| {
        let theta_c = axis[idx / n];
        let theta_p = axis[idx % n];
        GridSample {
            theta_c,
            theta_p,
            value: f(theta_c, theta_p),
        }
    }))
}

pub fn max_abs(samples: &[GridSample]) -> f64 {
    samples.iter().map(|s| s.value.abs()).fold(0.0, f64::max)
}
