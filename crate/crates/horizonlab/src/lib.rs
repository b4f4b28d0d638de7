//! Mode-level realization of branch-selected wave-operator inverses on the
//! extended de Sitter sphere (hyperbolic caps glued to a de Sitter belt along
//! two horizon circles), with asymptotic-data maps, scattering matrices,
//! two-point forms, and a flat 1+1 spacetime companion module.

pub mod cache;
pub mod caps;
pub mod cheb;
pub mod config;
pub mod desitter;
pub mod error;
pub mod geometry;
pub mod linalg;
pub mod minkowski;
pub mod modeode;
pub mod propagators;
pub mod report;
pub mod series;
pub mod specfun;
pub mod states;
pub mod types;
pub mod verify;

pub use error::{Error, Result};
pub use types::{BranchLabel, Horizon, ModeIndex, RegionLabel, SigmaParam, C64};
