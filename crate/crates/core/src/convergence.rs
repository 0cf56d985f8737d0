//! Runge double-recalculation error estimates and empirical orders.
//!
//! A solution on `N` steps is compared with one on `2N` steps at the
//! coincident nodes; the largest gap, scaled by `1 / (2^mu - 1)`, estimates
//! the error of the coarse solution. Successive estimates give the observed
//! order `p = log2(xi_N / xi_2N)`.

use rayon::prelude::*;

use crate::abm::abm_solve;
use crate::error::{Error, Result};
use crate::grid::UniformGrid;
use crate::system::SystemSpec;
use crate::trajectory::Trajectory;

const HORIZON_REL_TOL: f64 = 1e-12;

/// Runge estimate `max_i |coarse_i - fine_{2i}| / (2^mu - 1)` for one
/// component. The maximum includes `t = 0`.
pub fn runge_error(coarse: &Trajectory, fine: &Trajectory, mu: f64, component: usize) -> Result<f64> {
    let (hc, hf) = (coarse.grid().horizon(), fine.grid().horizon());
    if (hc - hf).abs() > HORIZON_REL_TOL * hc.abs().max(hf.abs()) {
        return Err(Error::IncompatibleTrajectories(format!(
            "horizons differ: {hc} vs {hf}"
        )));
    }
    if fine.steps() != 2 * coarse.steps() {
        return Err(Error::IncompatibleTrajectories(format!(
            "step counts {} and {} are not in ratio 1:2",
            coarse.steps(),
            fine.steps()
        )));
    }
    if coarse.dimension() != fine.dimension() || component >= coarse.dimension() {
        return Err(Error::IncompatibleTrajectories(format!(
            "component {component} not present in both trajectories"
        )));
    }
    if !(mu.is_finite() && mu > 0.0) {
        return Err(Error::IncompatibleTrajectories(format!(
            "order mu must be positive, got {mu}"
        )));
    }

    let max_gap = (0..coarse.len())
        .map(|i| (coarse.state(i)[component] - fine.state(2 * i)[component]).abs())
        .fold(0.0, f64::max);
    Ok(max_gap / (2f64.powf(mu) - 1.0))
}

/// Observed order `log2(xi_coarse / xi_fine)`.
pub fn computational_order(xi_coarse: f64, xi_fine: f64) -> Result<f64> {
    if !(xi_coarse > 0.0 && xi_fine > 0.0) || !xi_coarse.is_finite() || !xi_fine.is_finite() {
        return Err(Error::DegenerateEstimate {
            coarse: xi_coarse,
            fine: xi_fine,
        });
    }
    Ok((xi_coarse / xi_fine).log2())
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceRow {
    pub steps: usize,
    pub step_size: f64,
    /// Runge estimate per component.
    pub xi: Vec<f64>,
    /// Observed order per component; `None` in the first row or when either
    /// estimate is zero.
    pub order: Vec<Option<f64>>,
}

impl ConvergenceRow {
    pub fn xi_x(&self) -> f64 {
        self.xi[0]
    }

    pub fn xi_y(&self) -> f64 {
        self.xi[1]
    }

    pub fn p_x(&self) -> Option<f64> {
        self.order[0]
    }

    pub fn p_y(&self) -> Option<f64> {
        self.order[1]
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceReport {
    pub horizon: f64,
    /// `1 + min_i alpha_i`.
    pub mu: f64,
    pub rows: Vec<ConvergenceRow>,
}

impl ConvergenceReport {
    pub fn last(&self) -> &ConvergenceRow {
        self.rows.last().expect("report has rows")
    }
}

fn check_doubling(step_counts: &[usize]) -> Result<()> {
    if step_counts.len() < 2 {
        return Err(Error::InvalidGrid(
            "a convergence study needs at least two step counts".into(),
        ));
    }
    if step_counts[0] == 0 {
        return Err(Error::InvalidGrid("step counts must be positive".into()));
    }
    if let Some(w) = step_counts.windows(2).find(|w| w[1] != 2 * w[0]) {
        return Err(Error::InvalidGrid(format!(
            "step counts must double: {} is followed by {}",
            w[0], w[1]
        )));
    }
    Ok(())
}

/// Solves `system` at every count in `step_counts` and at twice the last one,
/// then tabulates Runge estimates and observed orders row by row.
///
/// Solves run in parallel; the report does not depend on scheduling.
pub fn convergence_study(
    system: &SystemSpec,
    horizon: f64,
    step_counts: &[usize],
) -> Result<ConvergenceReport> {
    check_doubling(step_counts)?;
    let mu = 1.0 + system.min_order().value();

    let mut counts = step_counts.to_vec();
    counts.push(2 * step_counts[step_counts.len() - 1]);

    let solutions = counts
        .par_iter()
        .map(|&steps| {
            let grid = UniformGrid::new(horizon, steps)?;
            abm_solve(system, &grid).map_err(|e| Error::Study {
                steps,
                source: Box::new(e),
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let d = system.dimension();
    let mut rows: Vec<ConvergenceRow> = Vec::with_capacity(step_counts.len());
    for (k, pair) in solutions.windows(2).enumerate() {
        let xi = (0..d)
            .map(|i| runge_error(&pair[0], &pair[1], mu, i))
            .collect::<Result<Vec<_>>>()?;
        let order = match rows.last() {
            Some(prev) => prev
                .xi
                .iter()
                .zip(&xi)
                .map(|(&c, &f)| computational_order(c, f).ok())
                .collect(),
            None => vec![None; d],
        };
        rows.push(ConvergenceRow {
            steps: step_counts[k],
            step_size: pair[0].grid().step_size(),
            xi,
            order,
        });
    }

    Ok(ConvergenceReport { horizon, mu, rows })
}
