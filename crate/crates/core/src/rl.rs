//! Discrete Riemann-Liouville fractional integral on a uniform grid.

use statrs::function::gamma::gamma;

use crate::error::{Error, Result};
use crate::grid::UniformGrid;
use crate::weights::theta_lag;

/// Product-rectangle approximation of `I^alpha u` at every grid node:
///
/// ```text
/// out[k] = tau^alpha / Gamma(alpha + 1) * sum_{j<k} u_j [(k-j)^alpha - (k-j-1)^alpha]
/// ```
///
/// with `out[0] = 0`. `alpha` may be any positive order, so results can be
/// fed back in to compose integrals.
pub fn rl_integral(samples: &[f64], alpha: f64, grid: &UniformGrid) -> Result<Vec<f64>> {
    if !(alpha.is_finite() && alpha > 0.0) {
        return Err(Error::InvalidIntegralOrder(alpha));
    }
    if samples.len() != grid.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} samples for a grid with {} nodes",
            samples.len(),
            grid.len()
        )));
    }
    let scale = grid.step_size().powf(alpha) / gamma(alpha + 1.0);
    let weights: Vec<f64> = (0..grid.steps()).map(|m| theta_lag(m, alpha)).collect();

    let out = (0..grid.len())
        .map(|k| {
            let sum: f64 = (0..k).map(|j| samples[j] * weights[k - j - 1]).sum();
            scale * sum
        })
        .collect();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integral_of_one_is_t() {
        let grid = UniformGrid::new(1.0, 320).unwrap();
        let ones = vec![1.0; grid.len()];
        let out = rl_integral(&ones, 1.0, &grid).unwrap();
        for (k, v) in out.iter().enumerate() {
            assert_eq!(*v, k as f64 * grid.step_size(), "k={k}");
        }
    }

    #[test]
    fn starts_at_zero() {
        let grid = UniformGrid::new(2.0, 10).unwrap();
        let u: Vec<f64> = grid.nodes().map(|t| 3.0 + t).collect();
        assert_eq!(rl_integral(&u, 0.4, &grid).unwrap()[0], 0.0);
    }

    #[test]
    fn rejects_bad_inputs() {
        let grid = UniformGrid::new(1.0, 4).unwrap();
        assert!(matches!(
            rl_integral(&[1.0; 5], 0.0, &grid),
            Err(Error::InvalidIntegralOrder(_))
        ));
        assert!(rl_integral(&[1.0; 5], -1.0, &grid).is_err());
        assert!(rl_integral(&[1.0; 5], f64::NAN, &grid).is_err());
        assert!(matches!(
            rl_integral(&[1.0; 4], 0.5, &grid),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn higher_orders_are_accepted() {
        let grid = UniformGrid::new(1.0, 100).unwrap();
        let ones = vec![1.0; grid.len()];
        let out = rl_integral(&ones, 2.0, &grid).unwrap();
        // exact for constants: t^2 / 2
        assert!((out[100] - 0.5).abs() < 1e-12);
    }
}
