//! Fractional Adams-Bashforth-Moulton solver for systems of Gerasimov-Caputo
//! equations, a hereditary model of Kondratyev long waves built on it, and
//! Runge-rule convergence studies.
//!
//! ```
//! use fracdyn::{abm_solve, gdm_system, GdmParams, UniformGrid};
//!
//! let params = GdmParams { alpha1: 0.9, alpha2: 0.8, ..GdmParams::default() };
//! let system = gdm_system(&params).unwrap();
//! let traj = abm_solve(&system, &UniformGrid::new(1.0, 100).unwrap()).unwrap();
//! assert_eq!(traj.len(), 101);
//! assert_eq!(traj.state(0), &[5.0, 4.0]);
//! ```

pub mod abm;
pub mod cli;
pub mod config;
pub mod convergence;
pub mod error;
pub mod gdm;
pub mod grid;
pub mod order;
pub mod output;
pub mod rl;
pub mod system;
pub mod trajectory;
pub mod weights;

pub use abm::abm_solve;
pub use config::{parse_config, Mode, RunConfig};
pub use convergence::{
    computational_order, convergence_study, runge_error, ConvergenceReport, ConvergenceRow,
};
pub use error::{Error, Result};
pub use gdm::{gdm_rhs, gdm_system, GdmParams};
pub use grid::UniformGrid;
pub use order::FractionalOrder;
pub use rl::rl_integral;
pub use system::SystemSpec;
pub use trajectory::Trajectory;
pub use weights::{rho_weight, theta_weight};
