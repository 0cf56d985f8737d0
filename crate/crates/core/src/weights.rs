//! Quadrature weights of the fractional Adams-Bashforth-Moulton scheme.
//!
//! For step `n -> n + 1` and history node `j`, the predictor weight is
//!
//! ```text
//! theta(j, n) = (n - j + 1)^a - (n - j)^a,             0 <= j <= n
//! ```
//!
//! and the corrector weight is
//!
//! ```text
//! rho(0, n)   = n^(a+1) - (n - a) (n + 1)^a
//! rho(j, n)   = (n-j+2)^(a+1) + (n-j)^(a+1) - 2 (n-j+1)^(a+1),   1 <= j <= n
//! rho(n+1, n) = 1
//! ```
//!
//! The predictor weight is evaluated literally: consecutive powers are within
//! a factor of two of each other, so the difference is exact and the weights
//! telescope without rounding. The corrector weights are second differences
//! of `k^(a+1)` and lose most of their digits to cancellation when evaluated
//! literally, so for lags of two or more they are summed from the binomial
//! expansion around the middle node, whose terms are all non-negative.

use crate::error::{Error, Result};
use crate::order::FractionalOrder;

const SERIES_REL_TOL: f64 = 1e-18;
const SERIES_MAX_TERMS: usize = 400;

/// Predictor weight `theta_{j,n+1}`.
pub fn theta_weight(j: usize, n: usize, alpha: FractionalOrder) -> Result<f64> {
    if j > n {
        return Err(Error::WeightIndex {
            j: j as i64,
            max: n as i64,
        });
    }
    Ok(theta_lag(n - j, alpha.value()))
}

/// Corrector weight `rho_{j,n+1}`.
pub fn rho_weight(j: usize, n: usize, alpha: FractionalOrder) -> Result<f64> {
    let a = alpha.value();
    match j {
        0 => Ok(rho_origin(n, a)),
        j if j <= n => Ok(second_difference(n - j, a)),
        j if j == n + 1 => Ok(1.0),
        _ => Err(Error::WeightIndex {
            j: j as i64,
            max: n as i64 + 1,
        }),
    }
}

/// `(m + 1)^a - m^a`.
#[inline]
pub(crate) fn theta_lag(m: usize, a: f64) -> f64 {
    let m = m as f64;
    (m + 1.0).powf(a) - m.powf(a)
}

/// `(m + 2)^(a+1) + m^(a+1) - 2 (m + 1)^(a+1)`, the interior corrector weight
/// at lag `m = n - j`.
pub(crate) fn second_difference(m: usize, a: f64) -> f64 {
    if m == 0 {
        // 2^(a+1) - 2
        return 2.0 * (a * std::f64::consts::LN_2).exp_m1();
    }
    // c^(a+1) [(1 + 1/c)^(a+1) + (1 - 1/c)^(a+1) - 2]
    //   = 2 * sum_{k>=1} C(a+1, 2k) c^(a+1-2k),   c = m + 1
    // Every even binomial coefficient of a+1 in (1, 2] is non-negative.
    let c = (m + 1) as f64;
    let inv_sq = 1.0 / (c * c);
    let mut power = c.powf(a - 1.0);
    let mut coef = 0.5 * (a + 1.0) * a;
    let mut sum = 0.0;
    for k in 1..SERIES_MAX_TERMS {
        let term = coef * power;
        sum += term;
        if term <= SERIES_REL_TOL * sum {
            break;
        }
        let k = k as f64;
        coef *= (a + 1.0 - 2.0 * k) * (a - 2.0 * k) / ((2.0 * k + 1.0) * (2.0 * k + 2.0));
        power *= inv_sq;
    }
    2.0 * sum
}

/// `n^(a+1) - (n - a) (n + 1)^a`, the corrector weight of the initial node.
pub(crate) fn rho_origin(n: usize, a: f64) -> f64 {
    if n <= 1 {
        let n = n as f64;
        return n.powf(a + 1.0) - (n - a) * (n + 1.0).powf(a);
    }
    // c^(a+1) [(1 - 1/c)^(a+1) - 1 + (a+1)/c]
    //   = sum_{k>=2} |C(a+1, k)| c^(a+1-k),   c = n + 1
    let c = (n + 1) as f64;
    let inv = 1.0 / c;
    let mut power = c.powf(a - 1.0);
    let mut coef = 0.5 * (a + 1.0) * a;
    let mut sum = 0.0;
    for k in 2..SERIES_MAX_TERMS {
        let term = coef * power;
        sum += term;
        if term <= SERIES_REL_TOL * sum {
            break;
        }
        let k = k as f64;
        coef *= (k - 1.0 - a) / (k + 1.0);
        power *= inv;
    }
    sum
}
