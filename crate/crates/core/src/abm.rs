//! Fractional Adams-Bashforth-Moulton predictor-corrector (PECE).
//!
//! Each step `n -> n + 1` predicts with the product-rectangle rule
//!
//! ```text
//! x^p_{n+1} = x_0 + tau^a / Gamma(a + 1) * sum_{j=0}^{n} theta_{j,n+1} f_j
//! ```
//!
//! and corrects with the product-trapezoid rule
//!
//! ```text
//! x_{n+1} = x_0 + tau^a / Gamma(a + 2) * ( f(t_{n+1}, x^p_{n+1})
//!                                        + sum_{j=0}^{n} rho_{j,n+1} f_j )
//! ```
//!
//! where `f_j = f(t_j, x_j)` is evaluated once at every accepted node and kept
//! for the whole run. Memory is never truncated, so a run costs `O(N^2 d)`.

use statrs::function::gamma::gamma;

use crate::error::{Error, Result};
use crate::grid::UniformGrid;
use crate::system::SystemSpec;
use crate::trajectory::Trajectory;
use crate::weights::{rho_origin, second_difference, theta_lag};

/// Per-component weights, indexed by lag `n - j` (and by `n` for the
/// initial-node corrector weight).
struct ComponentWeights {
    predictor_scale: f64,
    corrector_scale: f64,
    theta: Vec<f64>,
    rho_interior: Vec<f64>,
    rho_origin: Vec<f64>,
}

impl ComponentWeights {
    fn new(alpha: f64, tau: f64, steps: usize) -> Self {
        let tau_pow = tau.powf(alpha);
        Self {
            predictor_scale: tau_pow / gamma(alpha + 1.0),
            corrector_scale: tau_pow / gamma(alpha + 2.0),
            theta: (0..steps).map(|m| theta_lag(m, alpha)).collect(),
            rho_interior: (0..steps.saturating_sub(1))
                .map(|m| second_difference(m, alpha))
                .collect(),
            rho_origin: (0..steps).map(|n| rho_origin(n, alpha)).collect(),
        }
    }
}

/// Solves `system` on `grid` and returns the corrected values at every node.
///
/// Fails with [`Error::NonFinite`] at the first node whose corrected state
/// overflows or becomes NaN.
pub fn abm_solve(system: &SystemSpec, grid: &UniformGrid) -> Result<Trajectory> {
    let d = system.dimension();
    let steps = grid.steps();
    let tau = grid.step_size();
    let x0 = system.initial_state();

    let weights: Vec<ComponentWeights> = system
        .orders()
        .iter()
        .map(|a| ComponentWeights::new(a.value(), tau, steps))
        .collect();

    let mut trajectory = Trajectory::with_capacity(*grid, d);
    trajectory.push(0.0, x0);

    // f_j for every accepted node, row-major
    let mut history = Vec::with_capacity(grid.len() * d);
    history.extend(system.eval_vec(0.0, x0));

    let mut predicted = vec![0.0; d];
    let mut f_predicted = vec![0.0; d];
    let mut corrected = vec![0.0; d];
    let mut f_corrected = vec![0.0; d];

    for n in 0..steps {
        let t_next = grid.node(n + 1);

        for (i, w) in weights.iter().enumerate() {
            let sum: f64 = (0..=n).map(|j| w.theta[n - j] * history[j * d + i]).sum();
            predicted[i] = x0[i] + w.predictor_scale * sum;
        }
        system.eval(t_next, &predicted, &mut f_predicted);

        for (i, w) in weights.iter().enumerate() {
            let mut sum = f_predicted[i] + w.rho_origin[n] * history[i];
            for j in 1..=n {
                sum += w.rho_interior[n - j] * history[j * d + i];
            }
            corrected[i] = x0[i] + w.corrector_scale * sum;
        }
        if corrected.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite {
                step: n + 1,
                time: t_next,
            });
        }

        system.eval(t_next, &corrected, &mut f_corrected);
        history.extend_from_slice(&f_corrected);
        trajectory.push(t_next, &corrected);
    }

    Ok(trajectory)
}
