//! Executable ephemeris engine for concentric nested-orb planetary models.
//!
//! A model is a fixed initial figure (anchor points on the apsidal line)
//! carried by an ordered list of rotations whose angles follow linear laws
//! in time. The crate evaluates such models in full 3D, reduces them to the
//! plane, and provides the closed-form "equations", the interpolation
//! tables, the spherical coordinates of the inclined orb, and the
//! timescale helpers needed to tie the results to calendar dates.
//!
//! Grid scans and batch evaluations run on rayon when the `parallel`
//! feature is enabled (the default); see [`exec::Exec`].

pub mod angle;
pub mod exec;
pub mod geom3;
pub mod grid;
pub mod kinematics;
pub mod model;
pub mod planar;
pub mod sexa;
pub mod sphere;
pub mod tables;
pub mod time;

pub use exec::Exec;
pub use geom3::{Rotation, Vec3};
pub use model::{OrbModel, ParamSet};
pub use planar::{PlanarGeometry, PlanarSolution};
pub use sexa::SexNum;
pub use sphere::EclipticCoord;
