//! Executes a [`RunConfig`]: one solve (or a convergence study) and one CSV.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use thiserror::Error;

use crate::abm::abm_solve;
use crate::config::{ConfigError, Mode, RunConfig};
use crate::convergence::convergence_study;
use crate::error::Error;
use crate::gdm::gdm_system;
use crate::grid::UniformGrid;
use crate::output::{write_convergence, write_phase, write_trajectory};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 1;
pub const EXIT_NUMERICAL: i32 = 2;

#[derive(Debug, Error)]
pub enum RunError {
    #[error(transparent)]
    Config(#[from] ConfigError),

    #[error("invalid run: {0}")]
    Invalid(Error),

    #[error("numerical failure: {0}")]
    Numerical(Error),

    #[error("cannot write {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: io::Error,
    },
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Numerical(_) => EXIT_NUMERICAL,
            _ => EXIT_VALIDATION,
        }
    }
}

impl From<Error> for RunError {
    fn from(e: Error) -> Self {
        match e {
            Error::NonFinite { .. } | Error::Study { .. } => RunError::Numerical(e),
            other => RunError::Invalid(other),
        }
    }
}

/// Runs `config` and writes its CSV to `out`.
pub fn run_to_writer<W: Write>(config: &RunConfig, out: W) -> Result<(), RunError> {
    config.validate()?;
    let system = gdm_system(&config.params)?;
    let io_err = |source| RunError::Io {
        path: "<output>".into(),
        source,
    };
    match config.mode {
        Mode::Simulate | Mode::Phase => {
            let grid = UniformGrid::new(config.horizon, config.steps)?;
            let traj = abm_solve(&system, &grid)?;
            if config.mode == Mode::Simulate {
                write_trajectory(out, &traj).map_err(io_err)
            } else {
                write_phase(out, &traj).map_err(io_err)
            }
        }
        Mode::Converge => {
            let report =
                convergence_study(&system, config.horizon, &config.effective_step_counts())?;
            write_convergence(out, &report).map_err(io_err)
        }
    }
}

/// Runs `config` and writes its CSV to `path`. Nothing is created when the
/// run fails before output starts.
pub fn run(config: &RunConfig, path: &Path) -> Result<(), RunError> {
    let mut buf = Vec::new();
    run_to_writer(config, &mut buf)?;
    let io_err = |source| RunError::Io {
        path: path.display().to_string(),
        source,
    };
    let mut file = BufWriter::new(File::create(path).map_err(io_err)?);
    file.write_all(&buf).map_err(io_err)?;
    file.flush().map_err(io_err)
}
