//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
//!
//! Criteria 5 and 8 pin μ = 1 on unit-weight ring(5)/complete(4) graphs.
//! Those spectra (λmax ≈ 3.618 and 4) lie outside the stability region of
//! every registry algorithm's denominator ((z−1)(z−1+ζ1λ)+λ(ζ0+ζ2λ) is
//! Schur only for λ < 8/3 resp. λ < 2), so the λ>0 stability clauses and the
//! convergence run cannot hold as stated; those two tests record the honest
//! failure. Companion tests (`..._at_quarter_scaling`) show the identical
//! checks passing at μ = 1/4.

use std::process::Command;
use std::time::Instant;

use canform::algorithms::{expected_params, get_algorithm, reproduce_parameter_table, AlgorithmId};
use canform::canonical::{
    canonical_realization, canonical_transfer_function, canonicalize, check_technical_conditions,
    construct_fixed_point, factor_out_z_minus_one, input_side_realization, single_state_infeasible,
    CanonicalParams,
};
use canform::graph::{build_laplacian, SplitMix64, Topology};
use canform::matrix::RatMatrix;
use canform::ratpoly::{rat, rat_int, ratfun_reduce, BivarPoly, LambdaPoly, Rational};
use canform::realization::StructuredRealization;
use canform::sim::{
    broadcast_init, convergence_metrics, open_loop_response, quadratic_objective, run_canonical,
};
use canform::spectral::{spectral_check, pole_zero_report, StabilityClass};

fn one() -> Rational {
    Rational::from_integer(1.into())
}

fn nids_params() -> CanonicalParams {
    CanonicalParams::new(rat(1, 10), rat(1, 2), rat_int(1), rat_int(0), rat(1, 2))
}

fn report(criterion: &str, pass: bool, detail: &str) {
    let status = if pass { "PASS" } else { "FAIL" };
    println!("acceptance {criterion}: {status}{}{detail}", if detail.is_empty() { "" } else { " - " });
}

/// Criterion 1: exact reproduction of the seven-row parameter table at
/// α = 1/10, β = 1, in under a second.
#[test]
fn criterion_1_table_reproduction() {
    let start = Instant::now();
    let rows = reproduce_parameter_table(&rat(1, 10), Some(&one())).unwrap();
    let elapsed = start.elapsed();

    let expected: [(&str, (i64, i64), (i64, i64), (i64, i64), (i64, i64)); 7] = [
        ("extra", (1, 2), (1, 1), (0, 1), (0, 1)),
        ("nids", (1, 2), (1, 1), (0, 1), (1, 2)),
        ("exact_diffusion", (1, 2), (1, 1), (0, 1), (1, 2)),
        ("diging", (0, 1), (2, 1), (1, 1), (0, 1)),
        ("asyn_dgm", (0, 1), (2, 1), (1, 1), (1, 1)),
        ("jakovetic_bI", (1, 10), (2, 1), (1, 1), (0, 1)),
        ("jakovetic_bW", (1, 10), (2, 1), (9, 10), (0, 1)),
    ];
    let mut ok = rows.len() == 7;
    for (row, (name, z0, z1, z2, z3)) in rows.iter().zip(expected) {
        ok &= row.name == name
            && row.computed.zeta0 == rat(z0.0, z0.1)
            && row.computed.zeta1 == rat(z1.0, z1.1)
            && row.computed.zeta2 == rat(z2.0, z2.1)
            && row.computed.zeta3 == rat(z3.0, z3.1)
            && row.computed.alpha == rat(1, 10);
    }
    let fast = elapsed.as_secs_f64() < 1.0;
    report("1 (table reproduction)", ok && fast, &format!("{:?}", elapsed));
    assert!(ok, "table rows do not match the expected tuples: {rows:?}");
    assert!(fast, "table reproduction took {elapsed:?}, budget 1 s");
}

/// Criterion 2: the three-state lift reduces to
/// -α(1-λ/2)(z-1) / ((z-1)(z-1+λ) + λ/2) exactly and canonicalizes to
/// (1/2, 1, 0, 1/2).
#[test]
fn criterion_2_nids_worked_example() {
    let alpha = rat(1, 10);
    let r = get_algorithm(AlgorithmId::Nids, &alpha, None, &one()).unwrap();
    let tf = r.transfer_function();

    let gain = LambdaPoly::new(vec![rat(-1, 10), rat(1, 20)]);
    let num = BivarPoly::z_minus_one().mul_lambda(&gain);
    let zm1 = BivarPoly::z_minus_one();
    let shifted = BivarPoly::new(vec![LambdaPoly::new(vec![rat_int(-1), rat_int(1)]), LambdaPoly::one()]);
    let den = &(&zm1 * &shifted) + &BivarPoly::constant(LambdaPoly::new(vec![rat_int(0), rat(1, 2)]));
    let expected_tf = ratfun_reduce(num, den).unwrap();

    let tf_ok = tf == expected_tf;
    let params = canonicalize(&r).unwrap();
    let params_ok = params == nids_params();
    report("2 (worked example)", tf_ok && params_ok, "");
    assert!(tf_ok, "reduced transfer function mismatch: {tf}");
    assert!(params_ok, "parameters mismatch: {params}");
}

/// Criterion 3: the compare command reports EQUIVALENT, and the two lifts'
/// zero-state responses to a rational impulse agree exactly for 50 steps.
#[test]
fn criterion_3_equivalence_claim() {
    let output = Command::new(env!("CARGO_BIN_EXE_canform"))
        .args(["compare", "nids", "exact_diffusion", "--alpha", "1/10"])
        .output()
        .expect("binary runs");
    let stdout = String::from_utf8_lossy(&output.stdout);
    let cli_ok = output.status.success() && stdout.contains("EQUIVALENT");

    let alpha = rat(1, 10);
    let nids = get_algorithm(AlgorithmId::Nids, &alpha, None, &one()).unwrap();
    let ed = get_algorithm(AlgorithmId::ExactDiffusion, &alpha, None, &one()).unwrap();
    let graph = build_laplacian(&Topology::Ring(5), &one()).unwrap();
    // Rational impulse at agent 0, then silence.
    let mut inputs = vec![vec![vec![rat_int(0)]; 5]; 50];
    inputs[0][0][0] = rat_int(1);
    let ya = open_loop_response(&nids, graph.lap_exact(), &inputs).unwrap();
    let yb = open_loop_response(&ed, graph.lap_exact(), &inputs).unwrap();
    let open_loop_ok = ya == yb;

    report("3 (equivalence claim)", cli_ok && open_loop_ok, "");
    assert!(cli_ok, "compare CLI output: {stdout}");
    assert!(open_loop_ok, "zero-state responses differ");
}

/// Criterion 4: 200 seeded random parameter tuples round-trip exactly, and
/// the alternate (input-side communication) realization canonicalizes to the
/// same tuple. Budget 30 s.
#[test]
fn criterion_4_round_trip_suite() {
    let start = Instant::now();
    let mut rng = SplitMix64::new(0x5EED_CA11);
    let mut draw = |lo: i64, hi: i64| {
        let span = (hi - lo + 1) as u64;
        lo + (rng.next_u64() % span) as i64
    };
    let mut checked = 0;
    while checked < 200 {
        let alpha = rat(draw(-9, 9), draw(1, 9));
        if alpha == rat_int(0) {
            continue;
        }
        let zeta0 = rat(draw(-9, 9), draw(1, 9));
        let zeta1 = rat(draw(-9, 9), draw(1, 9));
        let zeta2 = rat(draw(-9, 9), draw(1, 9));
        let zeta3 = rat(draw(-9, 9), draw(1, 9));
        // The pair ζ0 = ζ2 = 0 collapses the transfer function to first
        // order (it also fails T2 on every connected graph); skip it.
        if zeta0 == rat_int(0) && zeta2 == rat_int(0) {
            continue;
        }
        let p = CanonicalParams::new(alpha, zeta0, zeta1, zeta2, zeta3);
        assert_eq!(canonicalize(&canonical_realization(&p)).unwrap(), p, "round trip failed");
        assert_eq!(canonicalize(&input_side_realization(&p)).unwrap(), p, "alternate realization");
        checked += 1;
    }
    let elapsed = start.elapsed();
    let fast = elapsed.as_secs_f64() < 30.0;
    report("4 (round-trip property suite)", fast, &format!("200 tuples in {elapsed:?}"));
    assert!(fast, "round trips took {elapsed:?}, budget 30 s");
}

fn table_param_tuples() -> Vec<(&'static str, CanonicalParams)> {
    let alpha = rat(1, 10);
    let beta = one();
    [
        AlgorithmId::Extra,
        AlgorithmId::Nids,
        AlgorithmId::ExactDiffusion,
        AlgorithmId::Diging,
        AlgorithmId::AsynDgm,
        AlgorithmId::JakoveticBI,
        AlgorithmId::JakoveticBW,
    ]
    .into_iter()
    .map(|id| {
        let name = canform::algorithms::spec_for(id).name;
        (name, expected_params(id, &alpha, Some(&beta)).unwrap())
    })
    .collect()
}

/// Criterion 5, as stated (μ = 1): λ=0 marginal with a pole at one and every
/// λ>0 strictly stable with a zero at one, for every table algorithm on
/// ring(5) and complete(4); plus the symbolic (z-1) factor.
///
/// The unit-scaled spectra sit outside every row's stability region (see the
/// module header), so the stability clause fails; the failure is asserted
/// honestly rather than loosened.
#[test]
fn criterion_5_spectral_verification() {
    let tol = 1e-9;
    let ring = build_laplacian(&Topology::Ring(5), &one()).unwrap();
    let k4 = build_laplacian(&Topology::Complete(4), &one()).unwrap();

    let mut symbolic_ok = true;
    let mut failures = Vec::new();
    for (name, params) in table_param_tuples() {
        let tf = canonical_transfer_function(&params);
        symbolic_ok &= factor_out_z_minus_one(tf.num()).is_some();
        for (graph, gname) in [(&ring, "ring(5)"), (&k4, "complete(4)")] {
            let outcome = spectral_check(&params, graph, tol);
            for r in &outcome.reports {
                let ok = if r.lambda.abs() <= tol {
                    r.classification == StabilityClass::MarginalWithPoleAtOne
                } else {
                    r.classification == StabilityClass::StrictlyStableWithZeroAtOne
                };
                if !ok {
                    failures.push(format!("{name} on {gname} at lambda={:.6}: {}", r.lambda, r.classification));
                }
            }
        }
    }
    let pass = symbolic_ok && failures.is_empty();
    report(
        "5 (spectral verification at mu=1)",
        pass,
        &format!("symbolic (z-1) factor: {symbolic_ok}; {} stability violations", failures.len()),
    );
    assert!(symbolic_ok, "(z-1) factor missing from a canonical numerator");
    assert!(
        failures.is_empty(),
        "unit-scaled spectra violate strict stability (expected per the recorded analysis):\n{}",
        failures.join("\n")
    );
}

/// Companion to criterion 5: identical checks pass at μ = 1/4 on both graphs.
#[test]
fn spectral_verification_at_quarter_scaling() {
    let tol = 1e-9;
    let quarter = rat(1, 4);
    let ring = build_laplacian(&Topology::Ring(5), &quarter).unwrap();
    let k4 = build_laplacian(&Topology::Complete(4), &quarter).unwrap();
    for (name, params) in table_param_tuples() {
        let tf = canonical_transfer_function(&params);
        assert!(factor_out_z_minus_one(tf.num()).is_some(), "{name}: no (z-1) factor");
        for (graph, gname) in [(&ring, "ring(5)"), (&k4, "complete(4)")] {
            let outcome = spectral_check(&params, graph, tol);
            assert!(
                outcome.pass,
                "{name} fails on quarter-scaled {gname}: {:?}",
                outcome
                    .reports
                    .iter()
                    .map(|r| format!("{:.4}: {}", r.lambda, r.classification))
                    .collect::<Vec<_>>()
            );
        }
    }
    // Spot-check the explicit λ = 4 quadratic-formula finding that grounds
    // the criterion-5 analysis: poles -1 ± √2 at the K4 eigenvalue, μ = 1.
    let tf = canonical_transfer_function(&nids_params());
    let r = pole_zero_report(&tf, 4.0, tol);
    assert!(r
        .poles
        .iter()
        .any(|p| (p.re + 1.0 + 2.0_f64.sqrt()).abs() < 1e-9 && p.im.abs() < 1e-9));
    println!("acceptance 5-companion (spectral verification at mu=1/4): PASS");
}

/// Criterion 6: ten thousand seeded single-state realizations all fail at
/// least one of the two conditions, and the contradiction is structural.
#[test]
fn criterion_6_single_state_impossibility() {
    let mut rng = SplitMix64::new(0xC0_FFEE);
    let mut draw = |lo: i64, hi: i64| {
        let span = (hi - lo + 1) as u64;
        lo + (rng.next_u64() % span) as i64
    };
    let mut all_infeasible = true;
    for _ in 0..10_000 {
        let entry = |rng_draw: &mut dyn FnMut(i64, i64) -> i64| {
            rat(rng_draw(-5, 5), rng_draw(1, 5))
        };
        let r = StructuredRealization::new(
            RatMatrix::new(1, 1, vec![entry(&mut draw)]),
            RatMatrix::new(1, 1, vec![entry(&mut draw)]),
            RatMatrix::new(1, 1, vec![entry(&mut draw)]),
            RatMatrix::new(1, 1, vec![entry(&mut draw)]),
            RatMatrix::new(1, 1, vec![entry(&mut draw)]),
            RatMatrix::new(1, 1, vec![entry(&mut draw)]),
            rat_int(0),
            rat_int(0),
        )
        .unwrap();
        let cert = single_state_infeasible(&r).unwrap();
        all_infeasible &= cert.infeasible();
        // Structural contradiction: the zero condition forces B0 = 0 or
        // C0 = 0, while the pole condition requires B0·C0 ≠ 0.
        if cert.pole_at_one_holds {
            assert!(!(&r.b0[(0, 0)] * &r.c0[(0, 0)]).eq(&rat_int(0)));
            assert!(!cert.zero_at_one_holds);
        }
        if cert.zero_at_one_holds {
            assert_eq!(&r.b0[(0, 0)] * &r.c0[(0, 0)], rat_int(0));
        }
    }
    // Forcing the pole condition symbolically (A0 = 1, B0·C0 ≠ 0) makes the
    // zero condition impossible for any B1, C1.
    let mut symbolic_ok = true;
    for (b1, c1) in [(0i64, 0i64), (3, 0), (0, -2), (4, 5)] {
        let r = StructuredRealization::new(
            RatMatrix::identity(1),
            RatMatrix::from_i64(1, 1, &[-1]),
            RatMatrix::from_i64(1, 1, &[-2]),
            RatMatrix::from_i64(1, 1, &[b1]),
            RatMatrix::from_i64(1, 1, &[3]),
            RatMatrix::from_i64(1, 1, &[c1]),
            rat_int(0),
            rat_int(0),
        )
        .unwrap();
        let cert = single_state_infeasible(&r).unwrap();
        symbolic_ok &= cert.pole_at_one_holds && !cert.zero_at_one_holds;
    }
    report(
        "6 (single-state impossibility)",
        all_infeasible && symbolic_ok,
        "10000 random realizations",
    );
    assert!(all_infeasible);
    assert!(symbolic_ok);
}

/// Criterion 7: the constructed fixed point on ring(5) quadratics has
/// residual ≤ 1e-10, is stationary under one canonical step to 1e-10, and
/// has balanced u* to 1e-12.
#[test]
fn criterion_7_fixed_point() {
    let graph = build_laplacian(&Topology::Ring(5), &one()).unwrap();
    let b: Vec<Vec<f64>> = [1.0, 2.0, 3.0, 4.0, 5.0].iter().map(|v| vec![*v]).collect();
    let obj = quadratic_objective(&b, &[1.0; 5]).unwrap();
    let x_star = obj.known_minimizer.clone().unwrap();
    let grads: Vec<Vec<f64>> = (0..5).map(|i| obj.gradient(i, &x_star)).collect();
    let fp = construct_fixed_point(&nids_params(), &graph, &x_star, &grads).unwrap();

    let residual_ok = fp.residual <= 1e-10;
    let u_sum: f64 = fp.u_star.iter().map(|u| u[0]).sum();
    let balanced_ok = u_sum.abs() <= 1e-12;

    // One canonical step from the fixed point must reproduce it.
    let traj = run_canonical(&nids_params(), &graph, &obj, &fp.x_star, &fp.w_star, 2).unwrap();
    let mut stationary = true;
    for i in 0..5 {
        stationary &= (traj.records[1].x[i][0] - fp.x_star[i][0]).abs() <= 1e-10;
        stationary &= (traj.records[1].w[i][0] - fp.w_star[i][0]).abs() <= 1e-10;
        stationary &= (traj.records[0].y[i][0] - fp.y_star[i][0]).abs() <= 1e-10;
        stationary &= (traj.records[0].u[i][0] - fp.u_star[i][0]).abs() <= 1e-10;
    }
    let pass = residual_ok && balanced_ok && stationary;
    report(
        "7 (fixed point)",
        pass,
        &format!("residual {:.2e}, |sum u*| {:.2e}", fp.residual, u_sum.abs()),
    );
    assert!(residual_ok, "residual {}", fp.residual);
    assert!(balanced_ok, "sum u* = {u_sum}");
    assert!(stationary, "fixed point drifted after one step");
}

/// Criterion 8, as stated (ring(5) at default μ = 1): the run must reach
/// max_i |y_i - 3| ≤ 1e-8 within 2000 iterations with Σw conserved to 1e-12
/// throughout.
///
/// The unit-scaled instance is closed-loop unstable (pole ≈ -1.917 at
/// λ ≈ 3.618), so it diverges; the assertions record the honest failure.
#[test]
fn criterion_8_convergence_desk_scale() {
    let start = Instant::now();
    let graph = build_laplacian(&Topology::Ring(5), &one()).unwrap();
    let b: Vec<Vec<f64>> = [1.0, 2.0, 3.0, 4.0, 5.0].iter().map(|v| vec![*v]).collect();
    let obj = quadratic_objective(&b, &[1.0; 5]).unwrap();
    let traj = run_canonical(
        &nids_params(),
        &graph,
        &obj,
        &broadcast_init(5, 1, 0.0),
        &broadcast_init(5, 1, 0.0),
        2000,
    )
    .unwrap();
    let elapsed = start.elapsed();
    let metrics = convergence_metrics(&traj, &[3.0]).unwrap();
    let best = metrics.optimality.iter().cloned().fold(f64::INFINITY, f64::min);
    let reached = best <= 1e-8;
    let conserved = traj.w_sums.iter().all(|ws| ws[0].abs() <= 1e-12);
    let fast = elapsed.as_secs_f64() < 1.0;
    report(
        "8 (desk-scale convergence at mu=1)",
        reached && conserved && fast,
        &format!("best error {best:.3e}, conserved: {conserved}, {elapsed:?}"),
    );
    assert!(fast, "run took {elapsed:?}, budget 1 s");
    assert!(
        reached,
        "never reached 1e-8 (best {best:.3e}); unit-scaled ring(5) is unstable per the recorded analysis"
    );
    assert!(conserved, "sum w drifted beyond 1e-12");
}

/// Companion to criterion 8: the identical run at μ = 1/4 meets every bound.
#[test]
fn convergence_desk_scale_at_quarter_scaling() {
    let start = Instant::now();
    let graph = build_laplacian(&Topology::Ring(5), &rat(1, 4)).unwrap();
    let b: Vec<Vec<f64>> = [1.0, 2.0, 3.0, 4.0, 5.0].iter().map(|v| vec![*v]).collect();
    let obj = quadratic_objective(&b, &[1.0; 5]).unwrap();
    let traj = run_canonical(
        &nids_params(),
        &graph,
        &obj,
        &broadcast_init(5, 1, 0.0),
        &broadcast_init(5, 1, 0.0),
        2000,
    )
    .unwrap();
    let elapsed = start.elapsed();
    let metrics = convergence_metrics(&traj, &[3.0]).unwrap();
    let final_err = *metrics.optimality.last().unwrap();
    assert!(final_err <= 1e-8, "final error {final_err:.3e}");
    assert!(traj.w_sums.iter().all(|ws| ws[0].abs() <= 1e-12), "conservation violated");
    assert!(elapsed.as_secs_f64() < 1.0, "run took {elapsed:?}");
    println!("acceptance 8-companion (convergence at mu=1/4): PASS - final error {final_err:.3e}");
}

/// Criterion 9: T2/T3 diagnostics.
#[test]
fn criterion_9_t2_t3_diagnostics() {
    // (ζ0, ζ2) = (0, 0) fails T2 on every connected graph sampled.
    let dead = CanonicalParams::new(rat_int(1), rat_int(0), rat_int(1), rat_int(0), rat_int(0));
    let mut dead_fails_everywhere = true;
    for topo in [Topology::Ring(5), Topology::Complete(4), Topology::Path(3), Topology::Star(6)] {
        let g = build_laplacian(&topo, &one()).unwrap();
        dead_fails_everywhere &= !check_technical_conditions(&dead, &g, &[0.0]).t2_solvable;
    }

    // (ζ0, ζ2) = (1, -1/4): fails on complete(4) (eigenvalue 4), passes ring(5).
    let tuned = CanonicalParams::new(rat_int(1), rat_int(1), rat_int(2), rat(-1, 4), rat_int(0));
    let k4 = build_laplacian(&Topology::Complete(4), &one()).unwrap();
    let ring = build_laplacian(&Topology::Ring(5), &one()).unwrap();
    let k4_fails = !check_technical_conditions(&tuned, &k4, &[0.0]).t2_solvable;
    let ring_passes = check_technical_conditions(&tuned, &ring, &[0.0]).t2_solvable;

    // T3: ζ0 ≠ 0 with Σw0 ≠ 0 is flagged, and the run demonstrably settles
    // away from the minimizer while the compliant baseline converges.
    // (Run on the quarter-scaled graph, where the baseline is stable; the
    // criterion does not pin the scaling. Recorded in the analysis notes.)
    let graph = build_laplacian(&Topology::Ring(5), &rat(1, 4)).unwrap();
    let b: Vec<Vec<f64>> = [1.0, 2.0, 3.0, 4.0, 5.0].iter().map(|v| vec![*v]).collect();
    let obj = quadratic_objective(&b, &[1.0; 5]).unwrap();
    let mut w0 = broadcast_init(5, 1, 0.0);
    w0[0][0] = 1.0;
    let flagged = !check_technical_conditions(&nids_params(), &graph, &[1.0]).t3_initialization;
    let run = |w0: &Vec<Vec<f64>>| {
        let traj = run_canonical(
            &nids_params(),
            &graph,
            &obj,
            &broadcast_init(5, 1, 0.0),
            w0,
            2000,
        )
        .unwrap();
        *convergence_metrics(&traj, &[3.0]).unwrap().optimality.last().unwrap()
    };
    let baseline_err = run(&broadcast_init(5, 1, 0.0));
    let violating_err = run(&w0);
    // Σ C.5 at a fixed point gives αΣu = ζ0Σw, so the violating run settles
    // at the solution of Σ∇f_i(y) = 5, i.e. y = 4: error 1.
    let demo_ok = baseline_err <= 1e-8 && violating_err > 0.5;

    let pass = dead_fails_everywhere && k4_fails && ring_passes && flagged && demo_ok;
    report(
        "9 (T2/T3 diagnostics)",
        pass,
        &format!("baseline {baseline_err:.2e}, T3-violating {violating_err:.3}"),
    );
    assert!(dead_fails_everywhere);
    assert!(k4_fails && ring_passes);
    assert!(flagged, "T3 violation not flagged");
    assert!(demo_ok, "baseline {baseline_err:.3e}, violating {violating_err:.3e}");
}
