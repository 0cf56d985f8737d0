use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::order::FractionalOrder;

/// Right-hand side `f(t, state) -> out`. `out` has the system dimension.
pub type Rhs = dyn Fn(f64, &[f64], &mut [f64]) + Send + Sync;

/// Initial value problem `D^{a_i} x_i(t) = f_i(t, x(t))`, `x(0) = x0`, with
/// one Gerasimov-Caputo order per component.
///
/// Cloning is cheap; the right-hand side is shared.
#[derive(Clone)]
pub struct SystemSpec {
    orders: Vec<FractionalOrder>,
    initial_state: Vec<f64>,
    rhs: Arc<Rhs>,
}

impl SystemSpec {
    pub fn new<F>(orders: Vec<FractionalOrder>, initial_state: Vec<f64>, rhs: F) -> Result<Self>
    where
        F: Fn(f64, &[f64], &mut [f64]) + Send + Sync + 'static,
    {
        if orders.is_empty() {
            return Err(Error::DimensionMismatch(
                "system needs at least one component".into(),
            ));
        }
        if orders.len() != initial_state.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} orders but initial state has {} components",
                orders.len(),
                initial_state.len()
            )));
        }
        if let Some(i) = initial_state.iter().position(|v| !v.is_finite()) {
            return Err(Error::DimensionMismatch(format!(
                "initial state component {i} is not finite"
            )));
        }
        Ok(Self {
            orders,
            initial_state,
            rhs: Arc::new(rhs),
        })
    }

    /// Same order for every component.
    pub fn uniform<F>(order: FractionalOrder, initial_state: Vec<f64>, rhs: F) -> Result<Self>
    where
        F: Fn(f64, &[f64], &mut [f64]) + Send + Sync + 'static,
    {
        let orders = vec![order; initial_state.len()];
        Self::new(orders, initial_state, rhs)
    }

    #[inline]
    pub fn dimension(&self) -> usize {
        self.orders.len()
    }

    pub fn orders(&self) -> &[FractionalOrder] {
        &self.orders
    }

    pub fn initial_state(&self) -> &[f64] {
        &self.initial_state
    }

    /// Smallest order among the components.
    pub fn min_order(&self) -> FractionalOrder {
        self.orders
            .iter()
            .copied()
            .fold(FractionalOrder::ONE, |acc, a| if a < acc { a } else { acc })
    }

    #[inline]
    pub fn eval(&self, t: f64, state: &[f64], out: &mut [f64]) {
        debug_assert_eq!(state.len(), self.dimension());
        debug_assert_eq!(out.len(), self.dimension());
        (self.rhs)(t, state, out)
    }

    pub fn eval_vec(&self, t: f64, state: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.dimension()];
        self.eval(t, state, &mut out);
        out
    }
}

impl fmt::Debug for SystemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SystemSpec")
            .field("orders", &self.orders)
            .field("initial_state", &self.initial_state)
            .finish_non_exhaustive()
    }
}
