//! Deterministic multi-agent simulation: the five-parameter canonical
//! iteration, generic realization runs, exact open-loop responses, gradient
//! oracles, and convergence metrics.

use std::io::Write;

use num_traits::Zero;

use crate::canonical::CanonicalParams;
use crate::error::{Error, Result};
use crate::graph::LaplacianGraph;
use crate::matrix::RatMatrix;
use crate::ratpoly::{rational_to_f64, Rational};
use crate::realization::StructuredRealization;

/// A boxed per-agent gradient oracle.
pub type GradientFn = Box<dyn Fn(&[f64]) -> Vec<f64> + Send + Sync>;

/// Per-agent gradient oracles for the separable objective, with the
/// minimizer when it is known in closed form.
pub struct Objective {
    pub n: usize,
    pub d: usize,
    gradients: Vec<GradientFn>,
    pub known_minimizer: Option<Vec<f64>>,
}

impl Objective {
    pub fn new(
        n: usize,
        d: usize,
        gradients: Vec<GradientFn>,
        known_minimizer: Option<Vec<f64>>,
    ) -> Result<Self> {
        if gradients.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "{} gradient oracles for {n} agents",
                gradients.len()
            )));
        }
        Ok(Self { n, d, gradients, known_minimizer })
    }

    pub fn gradient(&self, agent: usize, x: &[f64]) -> Vec<f64> {
        (self.gradients[agent])(x)
    }

    /// Sum of per-agent gradients at a point.
    pub fn gradient_sum(&self, x: &[f64]) -> Vec<f64> {
        let mut sum = vec![0.0; self.d];
        for i in 0..self.n {
            for (s, g) in sum.iter_mut().zip(self.gradient(i, x)) {
                *s += g;
            }
        }
        sum
    }
}

/// f_i(x) = (c_i/2)·‖x − b_i‖² with minimizer (Σ c_i b_i)/(Σ c_i).
pub fn quadratic_objective(b: &[Vec<f64>], curvatures: &[f64]) -> Result<Objective> {
    let n = b.len();
    if n == 0 || curvatures.len() != n {
        return Err(Error::DimensionMismatch("one curvature per target".into()));
    }
    if curvatures.iter().any(|c| *c <= 0.0) {
        return Err(Error::NonpositiveCurvature);
    }
    let d = b[0].len();
    if b.iter().any(|bi| bi.len() != d) {
        return Err(Error::DimensionMismatch("targets must share a dimension".into()));
    }
    let total: f64 = curvatures.iter().sum();
    let minimizer: Vec<f64> = (0..d)
        .map(|c| b.iter().zip(curvatures).map(|(bi, ci)| ci * bi[c]).sum::<f64>() / total)
        .collect();
    let gradients: Vec<GradientFn> = b
        .iter()
        .zip(curvatures)
        .map(|(bi, ci)| {
            let bi = bi.clone();
            let ci = *ci;
            Box::new(move |x: &[f64]| x.iter().zip(&bi).map(|(xv, bv)| ci * (xv - bv)).collect())
                as GradientFn
        })
        .collect();
    Objective::new(n, d, gradients, Some(minimizer))
}

/// One iteration's worth of per-agent records.
#[derive(Clone, Debug)]
pub struct IterationRecord {
    pub x: Vec<Vec<f64>>,
    pub w: Vec<Vec<f64>>,
    pub v1: Vec<Vec<f64>>,
    pub v2: Vec<Vec<f64>>,
    pub y: Vec<Vec<f64>>,
    pub u: Vec<Vec<f64>>,
}

/// Per-iteration per-agent history of a run. Generic realization runs store
/// the first two state slots in place of (x, w).
#[derive(Clone, Debug)]
pub struct Trajectory {
    pub n: usize,
    pub d: usize,
    pub records: Vec<IterationRecord>,
    /// Σ_i w_i at every iteration (one vector of length d per iteration).
    pub w_sums: Vec<Vec<f64>>,
    /// Communication rounds performed over the whole run.
    pub comm_rounds: usize,
}

impl Trajectory {
    pub fn iterations(&self) -> usize {
        self.records.len()
    }

    pub fn final_y(&self) -> &[Vec<f64>] {
        &self.records.last().expect("at least one iteration").y
    }

    /// CSV with header `k,i,coord,x,w,v1,v2,y,u`, one row per
    /// (iteration, agent, coordinate), 17 significant digits.
    pub fn write_csv<W: Write>(&self, out: &mut W) -> std::io::Result<()> {
        writeln!(out, "k,i,coord,x,w,v1,v2,y,u")?;
        for (k, rec) in self.records.iter().enumerate() {
            for i in 0..self.n {
                for c in 0..self.d {
                    writeln!(
                        out,
                        "{k},{i},{c},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}",
                        rec.x[i][c], rec.w[i][c], rec.v1[i][c], rec.v2[i][c], rec.y[i][c], rec.u[i][c]
                    )?;
                }
            }
        }
        Ok(())
    }
}

fn check_init(n: usize, d: usize, init: &[Vec<f64>], what: &str) -> Result<()> {
    if init.len() != n || init.iter().any(|v| v.len() != d) {
        return Err(Error::DimensionMismatch(format!("{what} must be {n} vectors of dimension {d}")));
    }
    Ok(())
}

/// Runs the canonical iteration:
///
/// ```text
/// v1_i = Σ_j L_ij x_j                     (communication)
/// v2_i = Σ_j L_ij w_j    only if ζ2 ≠ 0   (communication)
/// y_i  = x_i − ζ3 v1_i
/// u_i  = ∇f_i(y_i)                        (gradient)
/// x_i⁺ = x_i + ζ0 w_i − α u_i − ζ1 v1_i + ζ2 v2_i
/// w_i⁺ = w_i − v1_i
/// ```
///
/// Each agent reads only previous-iteration neighbor values, so the result
/// is independent of the agent update order.
pub fn run_canonical(
    params: &CanonicalParams,
    graph: &LaplacianGraph,
    obj: &Objective,
    x0: &[Vec<f64>],
    w0: &[Vec<f64>],
    iterations: usize,
) -> Result<Trajectory> {
    let n = graph.n();
    let d = obj.d;
    if obj.n != n {
        return Err(Error::DimensionMismatch("objective agent count differs from graph".into()));
    }
    if iterations == 0 {
        return Err(Error::DimensionMismatch("need at least one iteration".into()));
    }
    check_init(n, d, x0, "x0")?;
    check_init(n, d, w0, "w0")?;

    let (alpha, z0, z1, z2, z3) = params.to_f64();
    let gossip_w = !params.zeta2.is_zero();
    let mut x = x0.to_vec();
    let mut w = w0.to_vec();
    let mut records = Vec::with_capacity(iterations);
    let mut w_sums = Vec::with_capacity(iterations);
    let mut comm_rounds = 0usize;

    for _ in 0..iterations {
        let v1 = apply_laplacian(graph, &x, d);
        comm_rounds += 1;
        let v2 = if gossip_w {
            comm_rounds += 1;
            apply_laplacian(graph, &w, d)
        } else {
            vec![vec![0.0; d]; n]
        };
        let mut y = vec![vec![0.0; d]; n];
        let mut u = vec![vec![0.0; d]; n];
        for i in 0..n {
            for c in 0..d {
                y[i][c] = x[i][c] - z3 * v1[i][c];
            }
            u[i] = obj.gradient(i, &y[i]);
        }
        let mut x_next = vec![vec![0.0; d]; n];
        let mut w_next = vec![vec![0.0; d]; n];
        for i in 0..n {
            for c in 0..d {
                x_next[i][c] = x[i][c] + z0 * w[i][c] - alpha * u[i][c] - z1 * v1[i][c] + z2 * v2[i][c];
                w_next[i][c] = w[i][c] - v1[i][c];
            }
        }
        let mut w_sum = vec![0.0; d];
        for wi in &w {
            for (s, v) in w_sum.iter_mut().zip(wi) {
                *s += v;
            }
        }
        w_sums.push(w_sum);
        records.push(IterationRecord { x: x.clone(), w: w.clone(), v1, v2, y, u });
        x = x_next;
        w = w_next;
    }

    Ok(Trajectory { n, d, records, w_sums, comm_rounds })
}

fn apply_laplacian(graph: &LaplacianGraph, values: &[Vec<f64>], d: usize) -> Vec<Vec<f64>> {
    let n = graph.n();
    let mut out = vec![vec![0.0; d]; n];
    for (i, out_i) in out.iter_mut().enumerate() {
        for (j, vj) in values.iter().enumerate() {
            let lij = graph.lap()[i][j];
            if lij == 0.0 {
                continue;
            }
            for c in 0..d {
                out_i[c] += lij * vj[c];
            }
        }
    }
    out
}

/// Closed-loop run of an arbitrary realization (D0 = D1 = 0):
/// ξ⁺ = A(L)ξ + B(L)u, y = C(L)ξ, u = ∇f(y).
///
/// Products are formed per agent with the Laplacian applied to stacked
/// per-agent terms; no ns × ns matrix is materialized. `xi0[i][slot]` is
/// agent i's initial value of a state slot (a d-vector).
pub fn run_realization(
    r: &StructuredRealization,
    graph: &LaplacianGraph,
    obj: &Objective,
    xi0: &[Vec<Vec<f64>>],
    iterations: usize,
) -> Result<Trajectory> {
    if r.has_passthrough() {
        return Err(Error::PassthroughInClosedLoop);
    }
    let n = graph.n();
    let d = obj.d;
    let s = r.state_dim();
    if obj.n != n {
        return Err(Error::DimensionMismatch("objective agent count differs from graph".into()));
    }
    if xi0.len() != n || xi0.iter().any(|xi| xi.len() != s || xi.iter().any(|v| v.len() != d)) {
        return Err(Error::DimensionMismatch(format!(
            "xi0 must be {n} agents x {s} slots x {d} coords"
        )));
    }
    if iterations == 0 {
        return Err(Error::DimensionMismatch("need at least one iteration".into()));
    }

    let a0 = r.a0.to_f64();
    let a1 = r.a1.to_f64();
    let b0: Vec<f64> = r.b0.to_f64().into_iter().map(|row| row[0]).collect();
    let b1: Vec<f64> = r.b1.to_f64().into_iter().map(|row| row[0]).collect();
    let c0 = r.c0.to_f64().remove(0);
    let c1 = r.c1.to_f64().remove(0);

    let mut xi = xi0.to_vec();
    let mut records = Vec::with_capacity(iterations);
    let mut w_sums = Vec::with_capacity(iterations);
    let mut comm_rounds = 0usize;

    for _ in 0..iterations {
        // y_i = C0 ξ_i + Σ_j L_ij (C1 ξ_j)
        let c1_terms: Vec<Vec<f64>> = xi.iter().map(|xij| row_times_state(&c1, xij, d)).collect();
        let c1_mixed = apply_laplacian(graph, &c1_terms, d);
        comm_rounds += 1;
        let mut y = vec![vec![0.0; d]; n];
        let mut u = vec![vec![0.0; d]; n];
        for i in 0..n {
            let own = row_times_state(&c0, &xi[i], d);
            for c in 0..d {
                y[i][c] = own[c] + c1_mixed[i][c];
            }
            u[i] = obj.gradient(i, &y[i]);
        }
        // ξ_i⁺ = A0 ξ_i + B0 u_i + Σ_j L_ij (A1 ξ_j + B1 u_j)
        let neighbor_terms: Vec<Vec<Vec<f64>>> = (0..n)
            .map(|j| state_update(&a1, &b1, &xi[j], &u[j], s, d))
            .collect();
        let mut xi_next = Vec::with_capacity(n);
        for i in 0..n {
            let mut next = state_update(&a0, &b0, &xi[i], &u[i], s, d);
            for (j, term) in neighbor_terms.iter().enumerate() {
                let lij = graph.lap()[i][j];
                if lij == 0.0 {
                    continue;
                }
                for slot in 0..s {
                    for c in 0..d {
                        next[slot][c] += lij * term[slot][c];
                    }
                }
            }
            xi_next.push(next);
        }

        let x_slot: Vec<Vec<f64>> = xi.iter().map(|v| v[0].clone()).collect();
        let w_slot: Vec<Vec<f64>> = xi
            .iter()
            .map(|v| if s > 1 { v[1].clone() } else { vec![0.0; d] })
            .collect();
        let v1 = apply_laplacian(graph, &x_slot, d);
        let v2 = apply_laplacian(graph, &w_slot, d);
        let mut w_sum = vec![0.0; d];
        for wi in &w_slot {
            for (sum, v) in w_sum.iter_mut().zip(wi) {
                *sum += v;
            }
        }
        w_sums.push(w_sum);
        records.push(IterationRecord { x: x_slot, w: w_slot, v1, v2, y, u });
        xi = xi_next;
    }

    Ok(Trajectory { n, d, records, w_sums, comm_rounds })
}

fn row_times_state(row: &[f64], state: &[Vec<f64>], d: usize) -> Vec<f64> {
    let mut out = vec![0.0; d];
    for (coef, slot) in row.iter().zip(state) {
        if *coef == 0.0 {
            continue;
        }
        for c in 0..d {
            out[c] += coef * slot[c];
        }
    }
    out
}

fn state_update(a: &[Vec<f64>], b: &[f64], state: &[Vec<f64>], u: &[f64], s: usize, d: usize) -> Vec<Vec<f64>> {
    let mut out = vec![vec![0.0; d]; s];
    for i in 0..s {
        for (j, slot) in state.iter().enumerate() {
            let coef = a[i][j];
            if coef == 0.0 {
                continue;
            }
            for c in 0..d {
                out[i][c] += coef * slot[c];
            }
        }
        for c in 0..d {
            out[i][c] += b[i] * u[c];
        }
    }
    out
}

/// Zero-state response to a given input sequence (no gradient feedback),
/// computed in exact rational arithmetic. Equal reduced transfer functions
/// imply exactly equal outputs.
///
/// `inputs[k][i]` is agent i's d-dimensional input at step k; the result has
/// the same shape and length.
pub fn open_loop_response(
    r: &StructuredRealization,
    lap: &RatMatrix,
    inputs: &[Vec<Vec<Rational>>],
) -> Result<Vec<Vec<Vec<Rational>>>> {
    let n = lap.rows();
    if lap.cols() != n {
        return Err(Error::DimensionMismatch("Laplacian must be square".into()));
    }
    let Some(first) = inputs.first() else {
        return Ok(Vec::new());
    };
    if first.len() != n {
        return Err(Error::DimensionMismatch("one input vector per agent".into()));
    }
    let d = first.first().map_or(0, |v| v.len());
    for step in inputs {
        if step.len() != n || step.iter().any(|v| v.len() != d) {
            return Err(Error::DimensionMismatch("ragged input sequence".into()));
        }
    }
    let s = r.state_dim();
    let zero_state = vec![vec![vec![Rational::zero(); d]; s]; n];
    let mut xi = zero_state;
    let mut outputs = Vec::with_capacity(inputs.len());

    for u in inputs {
        // y_i = C0 ξ_i + Σ_j L_ij (C1 ξ_j) + D0 u_i + Σ_j L_ij D1 u_j
        let mixed: Vec<Vec<Rational>> = (0..n)
            .map(|j| {
                let mut t = rat_row_times_state(&r.c1, &xi[j], d);
                for (tc, uc) in t.iter_mut().zip(&u[j]) {
                    *tc += &r.d1 * uc;
                }
                t
            })
            .collect();
        let mut y = Vec::with_capacity(n);
        for i in 0..n {
            let mut yi = rat_row_times_state(&r.c0, &xi[i], d);
            for (yc, uc) in yi.iter_mut().zip(&u[i]) {
                *yc += &r.d0 * uc;
            }
            for j in 0..n {
                let lij = &lap[(i, j)];
                if lij.is_zero() {
                    continue;
                }
                for c in 0..d {
                    yi[c] += lij * &mixed[j][c];
                }
            }
            y.push(yi);
        }
        // ξ⁺
        let neighbor: Vec<Vec<Vec<Rational>>> =
            (0..n).map(|j| rat_state_update(&r.a1, &r.b1, &xi[j], &u[j], s, d)).collect();
        let mut xi_next = Vec::with_capacity(n);
        for i in 0..n {
            let mut next = rat_state_update(&r.a0, &r.b0, &xi[i], &u[i], s, d);
            for j in 0..n {
                let lij = &lap[(i, j)];
                if lij.is_zero() {
                    continue;
                }
                for slot in 0..s {
                    for c in 0..d {
                        next[slot][c] += lij * &neighbor[j][slot][c];
                    }
                }
            }
            xi_next.push(next);
        }
        outputs.push(y);
        xi = xi_next;
    }
    Ok(outputs)
}

fn rat_row_times_state(row: &RatMatrix, state: &[Vec<Rational>], d: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); d];
    for (j, slot) in state.iter().enumerate() {
        let coef = &row[(0, j)];
        if coef.is_zero() {
            continue;
        }
        for c in 0..d {
            out[c] += coef * &slot[c];
        }
    }
    out
}

fn rat_state_update(
    a: &RatMatrix,
    b: &RatMatrix,
    state: &[Vec<Rational>],
    u: &[Rational],
    s: usize,
    d: usize,
) -> Vec<Vec<Rational>> {
    let mut out = vec![vec![Rational::zero(); d]; s];
    for i in 0..s {
        for (j, slot) in state.iter().enumerate() {
            let coef = &a[(i, j)];
            if coef.is_zero() {
                continue;
            }
            for c in 0..d {
                out[i][c] += coef * &slot[c];
            }
        }
        let bi = &b[(i, 0)];
        if !bi.is_zero() {
            for c in 0..d {
                out[i][c] += bi * &u[c];
            }
        }
    }
    out
}

/// Optimality error max_i ‖y_i − x*‖ and consensus residual
/// max_{i,j} ‖y_i − y_j‖ per iteration.
#[derive(Clone, Debug)]
pub struct ConvergenceMetrics {
    pub optimality: Vec<f64>,
    pub consensus: Vec<f64>,
}

pub fn convergence_metrics(traj: &Trajectory, x_star: &[f64]) -> Result<ConvergenceMetrics> {
    if x_star.len() != traj.d {
        return Err(Error::DimensionMismatch("x* dimension differs from trajectory".into()));
    }
    let mut optimality = Vec::with_capacity(traj.records.len());
    let mut consensus = Vec::with_capacity(traj.records.len());
    // Non-finite values (diverged runs) must surface as infinite error, not
    // vanish in the max.
    let guard = |v: f64| if v.is_finite() { v } else { f64::INFINITY };
    for rec in &traj.records {
        let mut err: f64 = 0.0;
        for yi in &rec.y {
            let dist = yi.iter().zip(x_star).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt();
            err = err.max(guard(dist));
        }
        let mut spread: f64 = 0.0;
        for yi in &rec.y {
            for yj in &rec.y {
                let dist = yi.iter().zip(yj).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt();
                spread = spread.max(guard(dist));
            }
        }
        optimality.push(err);
        consensus.push(spread);
    }
    Ok(ConvergenceMetrics { optimality, consensus })
}

/// Broadcasts a scalar to the per-agent vector-of-vectors init shape.
pub fn broadcast_init(n: usize, d: usize, value: f64) -> Vec<Vec<f64>> {
    vec![vec![value; d]; n]
}

pub fn rational_f64(r: &Rational) -> f64 {
    rational_to_f64(r)
}
