use crate::error::{Error, Result};

/// Uniform grid `t_k = k * tau`, `k = 0..=N`, on `[0, T]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UniformGrid {
    horizon: f64,
    steps: usize,
    step_size: f64,
}

impl UniformGrid {
    pub fn new(horizon: f64, steps: usize) -> Result<Self> {
        if !(horizon.is_finite() && horizon > 0.0) {
            return Err(Error::InvalidGrid(format!(
                "horizon must be positive and finite, got {horizon}"
            )));
        }
        if steps == 0 {
            return Err(Error::InvalidGrid("step count must be positive".into()));
        }
        Ok(Self {
            horizon,
            steps,
            step_size: horizon / steps as f64,
        })
    }

    #[inline]
    pub fn horizon(&self) -> f64 {
        self.horizon
    }

    #[inline]
    pub fn steps(&self) -> usize {
        self.steps
    }

    #[inline]
    pub fn step_size(&self) -> f64 {
        self.step_size
    }

    /// Number of nodes, `N + 1`.
    #[inline]
    pub fn len(&self) -> usize {
        self.steps + 1
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn node(&self, k: usize) -> f64 {
        k as f64 * self.step_size
    }

    pub fn nodes(&self) -> impl Iterator<Item = f64> + '_ {
        (0..=self.steps).map(|k| self.node(k))
    }

    /// The grid with every interval bisected.
    pub fn refined(&self) -> Self {
        Self::new(self.horizon, 2 * self.steps).expect("refining a valid grid")
    }
}
