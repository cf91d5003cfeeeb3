//! Degree helpers shared by every module.

/// Maps any finite angle into `[0, 360)`.
pub fn normalize_deg(x: f64) -> f64 {
    let r = x.rem_euclid(360.0);
    // rem_euclid can round up to exactly 360 for tiny negative inputs
    if r >= 360.0 {
        0.0
    } else {
        r
    }
}

/// Maps any finite angle into `(-180, 180]`.
pub fn wrap180(x: f64) -> f64 {
    let r = normalize_deg(x);
    if r > 180.0 {
        r - 360.0
    } else {
        r
    }
}

pub fn arcmin(deg: f64) -> f64 {
    deg * 60.0
}

pub fn arcsec(deg: f64) -> f64 {
    deg * 3600.0
}
