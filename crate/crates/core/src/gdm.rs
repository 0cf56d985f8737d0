//! Generalized Dubovsky model of long economic waves with memory.
//!
//! ```text
//! D^{a1} x = -lambda n x (x - 1)(y - y*) + delta1 cos(omega1 t),   x(0) = a
//! D^{a2} y =  n (1 - n) y^2 (x - x*)     + delta2 cos(omega2 t),   y(0) = b
//! ```
//!
//! `x` is the efficiency of innovations, `y` the efficiency of fixed assets,
//! and `n` the accumulation rate. With `a1 = a2 = 1` and no forcing this is
//! the classical Dubovsky model.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::order::FractionalOrder;
use crate::system::SystemSpec;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GdmParams {
    /// Size and duration of the cycles.
    pub lambda: f64,
    /// Gross capital formation as a share of output, in `(0, 1)`.
    pub accumulation_rate: f64,
    pub delta1: f64,
    pub delta2: f64,
    /// Forcing frequencies, radians per unit time.
    pub omega1: f64,
    pub omega2: f64,
    pub x_star: f64,
    pub y_star: f64,
    /// Initial innovation efficiency `x(0)`.
    pub a: f64,
    /// Initial fixed-asset efficiency `y(0)`.
    pub b: f64,
    pub alpha1: f64,
    pub alpha2: f64,
}

impl Default for GdmParams {
    /// The forced classical configuration used for the convergence tables.
    fn default() -> Self {
        Self {
            lambda: 1.5,
            accumulation_rate: 0.2,
            delta1: 1.0,
            delta2: 1.0,
            omega1: 0.5,
            omega2: 0.5,
            x_star: 1.35,
            y_star: 0.5,
            a: 5.0,
            b: 4.0,
            alpha1: 1.0,
            alpha2: 1.0,
        }
    }
}

fn invalid(field: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidParameter {
        field,
        reason: reason.into(),
    }
}

fn finite(field: &'static str, v: f64) -> Result<()> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(invalid(field, format!("must be finite, got {v}")))
    }
}

fn non_negative(field: &'static str, v: f64) -> Result<()> {
    finite(field, v)?;
    if v >= 0.0 {
        Ok(())
    } else {
        Err(invalid(field, format!("must be >= 0, got {v}")))
    }
}

fn positive(field: &'static str, v: f64) -> Result<()> {
    finite(field, v)?;
    if v > 0.0 {
        Ok(())
    } else {
        Err(invalid(field, format!("must be > 0, got {v}")))
    }
}

fn fractional(field: &'static str, v: f64) -> Result<FractionalOrder> {
    FractionalOrder::new(v).map_err(|_| invalid(field, format!("must lie in (0, 1], got {v}")))
}

impl GdmParams {
    /// Classical Dubovsky model: integer orders, no forcing.
    pub fn classical() -> Self {
        Self {
            delta1: 0.0,
            delta2: 0.0,
            ..Self::default()
        }
    }

    /// Checks every field and reports the first offender by name.
    pub fn validate(&self) -> Result<()> {
        positive("lambda", self.lambda)?;
        finite("n", self.accumulation_rate)?;
        if !(self.accumulation_rate > 0.0 && self.accumulation_rate < 1.0) {
            return Err(invalid(
                "n",
                format!(
                    "accumulation rate must lie in (0, 1), got {}",
                    self.accumulation_rate
                ),
            ));
        }
        non_negative("delta1", self.delta1)?;
        non_negative("delta2", self.delta2)?;
        non_negative("omega1", self.omega1)?;
        non_negative("omega2", self.omega2)?;
        finite("x_star", self.x_star)?;
        finite("y_star", self.y_star)?;
        positive("a", self.a)?;
        positive("b", self.b)?;
        fractional("alpha1", self.alpha1)?;
        fractional("alpha2", self.alpha2)?;
        Ok(())
    }

    pub fn orders(&self) -> Result<[FractionalOrder; 2]> {
        Ok([
            fractional("alpha1", self.alpha1)?,
            fractional("alpha2", self.alpha2)?,
        ])
    }

    /// Theoretical order of the solver on this model, `1 + min(a1, a2)`.
    pub fn expected_order(&self) -> f64 {
        1.0 + self.alpha1.min(self.alpha2)
    }

    /// Right-hand side at `(t, x, y)`.
    #[inline]
    pub fn rhs(&self, t: f64, x: f64, y: f64) -> (f64, f64) {
        let n = self.accumulation_rate;
        let dx = -self.lambda * n * x * (x - 1.0) * (y - self.y_star)
            + self.delta1 * (self.omega1 * t).cos();
        let dy = n * (1.0 - n) * y * y * (x - self.x_star) + self.delta2 * (self.omega2 * t).cos();
        (dx, dy)
    }
}

/// The model's right-hand side as a system evaluator.
pub fn gdm_rhs(params: GdmParams) -> impl Fn(f64, &[f64], &mut [f64]) + Send + Sync + 'static {
    move |t, state, out| {
        let (dx, dy) = params.rhs(t, state[0], state[1]);
        out[0] = dx;
        out[1] = dy;
    }
}

/// Two-component system with orders `(a1, a2)` and initial state `(a, b)`.
pub fn gdm_system(params: &GdmParams) -> Result<SystemSpec> {
    params.validate()?;
    let orders = params.orders()?;
    SystemSpec::new(orders.to_vec(), vec![params.a, params.b], gdm_rhs(*params))
}
