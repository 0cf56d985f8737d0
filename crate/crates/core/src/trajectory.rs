use crate::error::{Error, Result};
use crate::grid::UniformGrid;

/// Grid solution: node times and one state vector per node.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    grid: UniformGrid,
    dimension: usize,
    times: Vec<f64>,
    // row-major, node by node
    states: Vec<f64>,
}

impl Trajectory {
    pub(crate) fn with_capacity(grid: UniformGrid, dimension: usize) -> Self {
        Self {
            grid,
            dimension,
            times: Vec::with_capacity(grid.len()),
            states: Vec::with_capacity(grid.len() * dimension),
        }
    }

    /// Wraps externally produced node values; times are taken from `grid`.
    pub fn from_states(grid: UniformGrid, states: Vec<Vec<f64>>) -> Result<Self> {
        if states.len() != grid.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} states for a grid with {} nodes",
                states.len(),
                grid.len()
            )));
        }
        let dimension = states[0].len();
        if dimension == 0 || states.iter().any(|s| s.len() != dimension) {
            return Err(Error::DimensionMismatch(
                "states must share one positive dimension".into(),
            ));
        }
        let mut traj = Self::with_capacity(grid, dimension);
        for (k, s) in states.iter().enumerate() {
            traj.push(grid.node(k), s);
        }
        Ok(traj)
    }

    pub(crate) fn push(&mut self, t: f64, state: &[f64]) {
        debug_assert_eq!(state.len(), self.dimension);
        self.times.push(t);
        self.states.extend_from_slice(state);
    }

    pub fn grid(&self) -> &UniformGrid {
        &self.grid
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Number of nodes, `N + 1`.
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn steps(&self) -> usize {
        self.grid.steps()
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn state(&self, k: usize) -> &[f64] {
        &self.states[k * self.dimension..(k + 1) * self.dimension]
    }

    pub fn states(&self) -> impl ExactSizeIterator<Item = &[f64]> + '_ {
        self.states.chunks_exact(self.dimension)
    }

    pub fn component(&self, i: usize) -> impl ExactSizeIterator<Item = f64> + '_ {
        assert!(i < self.dimension, "component {i} out of range");
        self.states().map(move |s| s[i])
    }

    pub fn final_state(&self) -> &[f64] {
        self.state(self.len() - 1)
    }
}
