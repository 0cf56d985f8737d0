mod common;

use common::{classical_pece, max_abs_error, mittag_leffler};
use fracdyn::{abm_solve, gdm_system, FractionalOrder, GdmParams, SystemSpec, UniformGrid};
use proptest::prelude::*;

fn relaxation(alpha: f64) -> SystemSpec {
    SystemSpec::uniform(FractionalOrder::new(alpha).unwrap(), vec![1.0], |_, x, out| {
        out[0] = -x[0]
    })
    .unwrap()
}

#[test]
fn mittag_leffler_oracle_sanity() {
    let e1 = mittag_leffler(1.0, -1.0, 1e-15);
    assert!((e1 - (-1.0f64).exp()).abs() < 1e-13);
    assert!((e1 - 0.3678794412).abs() < 1e-10);
    assert_eq!(mittag_leffler(0.37, 0.0, 1e-12), 1.0);
    // 40-digit series value, frozen
    assert!((mittag_leffler(0.8, -1.0, 1e-12) - 0.3869485786189769).abs() < 1e-12);
    for k in 0..=50 {
        let z = -5.0 * f64::from(k) / 50.0;
        assert!((mittag_leffler(1.0, z, 1e-16) - z.exp()).abs() < 1e-10, "z={z}");
    }
}

#[test]
fn relaxation_matches_mittag_leffler() {
    let alpha = 0.8;
    let grid = UniformGrid::new(1.0, 320).unwrap();
    let traj = abm_solve(&relaxation(alpha), &grid).unwrap();
    let exact = mittag_leffler(alpha, -1.0, 1e-15);
    assert!((traj.final_state()[0] - exact).abs() < 1e-3);
}

#[test]
fn relaxation_refinement() {
    let alpha = 0.8;
    let exact = |t: f64| mittag_leffler(alpha, -t.powf(alpha), 1e-15);
    let counts = [10usize, 20, 40, 80, 160, 320];
    let mut max_errors = Vec::new();
    let mut end_errors = Vec::new();
    for &n in &counts {
        let traj = abm_solve(&relaxation(alpha), &UniformGrid::new(1.0, n).unwrap()).unwrap();
        max_errors.push(max_abs_error(&traj, exact));
        end_errors.push((traj.final_state()[0] - exact(1.0)).abs());
    }
    for w in max_errors.windows(2) {
        assert!(w[1] <= w[0], "max-node error grew: {max_errors:?}");
    }
    // from N = 80 on, halving the step divides the end-point error by ~2^1.8
    for (k, w) in end_errors.windows(2).enumerate() {
        if counts[k] >= 80 {
            let p = (w[0] / w[1]).log2();
            assert!((p - 1.8).abs() <= 0.2, "N={}: order {p}", counts[k]);
        }
    }
}

#[test]
fn classical_orders_reduce_to_trapezoid_pece() {
    let system = gdm_system(&GdmParams::default()).unwrap();
    for n in [1usize, 2, 10, 320] {
        let grid = UniformGrid::new(1.0, n).unwrap();
        let got = abm_solve(&system, &grid).unwrap();
        let reference = classical_pece(&system, &grid);
        for (k, (a, b)) in got.states().zip(&reference).enumerate() {
            for i in 0..2 {
                let scale = b[i].abs().max(1.0);
                assert!(
                    (a[i] - b[i]).abs() <= 1e-12 * scale,
                    "n={n} node {k} component {i}: {} vs {}",
                    a[i],
                    b[i]
                );
            }
        }
    }
}

#[test]
fn classical_pece_oracle_on_exponential() {
    let sys = relaxation(1.0);
    let grid = UniformGrid::new(1.0, 320).unwrap();
    let traj = classical_pece(&sys, &grid);
    assert!((traj[320][0] - (-1.0f64).exp()).abs() < 1e-4);
}

#[test]
fn gdm_end_states_match_independent_transcription() {
    // Produced by a separate scripted transcription of the same scheme.
    let cases = [
        ((1.0, 1.0), [1.3393807089436436, 8.85343904028645]),
        ((0.9, 0.8), [1.4030272940851196, 9.621182083552656]),
    ];
    for ((a1, a2), expected) in cases {
        let p = GdmParams { alpha1: a1, alpha2: a2, ..GdmParams::default() };
        let traj = abm_solve(&gdm_system(&p).unwrap(), &UniformGrid::new(1.0, 320).unwrap()).unwrap();
        for i in 0..2 {
            let got = traj.final_state()[i];
            assert!((got - expected[i]).abs() < 1e-11 * expected[i].abs(), "{a1},{a2}: {got} vs {}", expected[i]);
        }
    }
}

#[test]
fn deterministic() {
    let p = GdmParams { alpha1: 0.9, alpha2: 0.8, ..GdmParams::default() };
    let sys = gdm_system(&p).unwrap();
    let grid = UniformGrid::new(3.0, 500).unwrap();
    let a = abm_solve(&sys, &grid).unwrap();
    let b = abm_solve(&sys, &grid).unwrap();
    for (x, y) in a.states().zip(b.states()) {
        assert_eq!(x[0].to_bits(), y[0].to_bits());
        assert_eq!(x[1].to_bits(), y[1].to_bits());
    }
}

#[test]
fn independent_runs_in_parallel() {
    let sys = gdm_system(&GdmParams { alpha1: 0.7, ..GdmParams::default() }).unwrap();
    let serial: Vec<_> = [50usize, 100, 200]
        .iter()
        .map(|&n| abm_solve(&sys, &UniformGrid::new(1.0, n).unwrap()).unwrap())
        .collect();
    let parallel: Vec<_> = std::thread::scope(|s| {
        let handles: Vec<_> = [50usize, 100, 200]
            .iter()
            .map(|&n| {
                let sys = &sys;
                s.spawn(move || abm_solve(sys, &UniformGrid::new(1.0, n).unwrap()).unwrap())
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    assert_eq!(serial, parallel);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn zero_rhs_keeps_initial_state(
        x0 in prop::collection::vec(-1e6f64..1e6, 1..4),
        alphas in prop::collection::vec(0.01f64..=1.0, 4),
        horizon in 0.01f64..50.0,
        steps in 1usize..200,
    ) {
        let orders = x0.iter().enumerate().map(|(i, _)| FractionalOrder::new(alphas[i]).unwrap()).collect();
        let sys = SystemSpec::new(orders, x0.clone(), |_, _, out| out.fill(0.0)).unwrap();
        let traj = abm_solve(&sys, &UniformGrid::new(horizon, steps).unwrap()).unwrap();
        for s in traj.states() {
            for (a, b) in s.iter().zip(&x0) {
                prop_assert_eq!(a.to_bits(), b.to_bits());
            }
        }
    }

    #[test]
    fn first_node_is_initial_state(a in 0.05f64..=1.0, x0 in -10.0f64..10.0, steps in 1usize..50) {
        let sys = SystemSpec::uniform(FractionalOrder::new(a).unwrap(), vec![x0], |t, x, out| out[0] = t.sin() - x[0]).unwrap();
        let traj = abm_solve(&sys, &UniformGrid::new(1.0, steps).unwrap()).unwrap();
        prop_assert_eq!(traj.times()[0], 0.0);
        prop_assert_eq!(traj.state(0), &[x0][..]);
        prop_assert_eq!(traj.len(), steps + 1);
    }
}
