//! Reference implementations shared by the integration tests. Nothing here
//! touches the library's weight code.

#![allow(dead_code)]

use fracdyn::{SystemSpec, Trajectory, UniformGrid};
use statrs::function::gamma::{gamma, ln_gamma};

/// `E_alpha(z) = sum_k z^k / Gamma(alpha k + 1)` for `0 < alpha <= 1` and
/// `-5 <= z <= 0`, summed until the terms are decreasing and below `tol`.
pub fn mittag_leffler(alpha: f64, z: f64, tol: f64) -> f64 {
    assert!(alpha > 0.0 && alpha <= 1.0, "alpha {alpha} outside (0, 1]");
    assert!((-5.0..=0.0).contains(&z), "z {z} outside [-5, 0]");
    assert!(tol > 0.0);
    if z == 0.0 {
        return 1.0;
    }
    let ln_abs = (-z).ln();
    let mut sum = 1.0;
    let mut prev = 1.0;
    for k in 1..10_000u32 {
        let kf = f64::from(k);
        let arg = alpha * kf + 1.0;
        let mag = if arg < 170.0 && k < 300 {
            (-z).powi(k as i32) / gamma(arg)
        } else {
            (kf * ln_abs - ln_gamma(arg)).exp()
        };
        let term = if k % 2 == 0 { mag } else { -mag };
        sum += term;
        if mag < tol && mag < prev {
            return sum;
        }
        prev = mag;
    }
    panic!("Mittag-Leffler series did not converge for alpha={alpha}, z={z}");
}

/// Second-order PECE for integer-order systems in cumulative form: the
/// predictor is `x0 + tau * sum_{j<=n} f_j`, the corrector the trapezoid
/// rule over all accepted nodes plus the predicted endpoint.
pub fn classical_pece(system: &SystemSpec, grid: &UniformGrid) -> Vec<Vec<f64>> {
    assert!(
        system.orders().iter().all(|a| a.value() == 1.0),
        "classical PECE needs integer orders"
    );
    let d = system.dimension();
    let h = grid.step_size();
    let x0 = system.initial_state().to_vec();
    let f0 = system.eval_vec(0.0, &x0);

    // running sum of f_j over accepted nodes
    let mut total = f0.clone();
    let mut out = vec![x0.clone()];
    for n in 0..grid.steps() {
        let t = grid.node(n + 1);
        let pred: Vec<f64> = (0..d).map(|i| x0[i] + h * total[i]).collect();
        let fp = system.eval_vec(t, &pred);
        let corr: Vec<f64> = (0..d)
            .map(|i| x0[i] + 0.5 * h * (2.0 * total[i] - f0[i] + fp[i]))
            .collect();
        let fc = system.eval_vec(t, &corr);
        for i in 0..d {
            total[i] += fc[i];
        }
        out.push(corr);
    }
    out
}

/// Neumaier-compensated sum.
pub fn compensated_sum(values: impl IntoIterator<Item = f64>) -> f64 {
    let mut sum = 0.0f64;
    let mut c = 0.0f64;
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            c += (sum - t) + v;
        } else {
            c += (v - t) + sum;
        }
        sum = t;
    }
    sum + c
}

/// Distance between two finite doubles in units of last place.
pub fn ulps_between(a: f64, b: f64) -> u64 {
    assert!(a.is_finite() && b.is_finite());
    let key = |x: f64| {
        let bits = x.to_bits() as i64;
        if bits < 0 {
            i64::MIN - bits
        } else {
            bits
        }
    };
    key(a).abs_diff(key(b))
}

pub fn max_abs_error(traj: &Trajectory, exact: impl Fn(f64) -> f64) -> f64 {
    traj.times()
        .iter()
        .zip(traj.component(0))
        .map(|(&t, x)| (x - exact(t)).abs())
        .fold(0.0, f64::max)
}
