//! Weighted graph Laplacians satisfying the standing assumption (symmetric,
//! positive semidefinite, L·1 = 0, connected) together with their sorted
//! spectral decomposition.

use nalgebra::DMatrix;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::RatMatrix;
use crate::ratpoly::{rational_to_f64, Rational};

const CONNECTIVITY_TOL: f64 = 1e-9;

/// Graph topology descriptor. All weights are positive; `ErdosRenyi` edges
/// have unit weight.
#[derive(Clone, Debug, PartialEq)]
pub enum Topology {
    Ring(usize),
    Path(usize),
    Complete(usize),
    Star(usize),
    ErdosRenyi { n: usize, prob: f64, seed: u64 },
    Explicit { n: usize, edges: Vec<(usize, usize, Rational)> },
}

impl Topology {
    /// Parses compact specs like "ring(5)", "complete(4)", or
    /// "erdos_renyi(8,0.3,7)".
    pub fn parse(spec: &str) -> Result<Self> {
        let spec = spec.trim();
        let (name, args) = match spec.split_once('(') {
            Some((name, rest)) => {
                let rest = rest
                    .strip_suffix(')')
                    .ok_or_else(|| Error::InvalidSpec(format!("missing ')' in '{spec}'")))?;
                (name.trim(), rest.split(',').map(str::trim).collect::<Vec<_>>())
            }
            None => (spec, Vec::new()),
        };
        let arg_n = |idx: usize| -> Result<usize> {
            args.get(idx)
                .and_then(|a| a.parse().ok())
                .ok_or_else(|| Error::InvalidSpec(format!("bad integer argument in '{spec}'")))
        };
        match name {
            "ring" => Ok(Self::Ring(arg_n(0)?)),
            "path" => Ok(Self::Path(arg_n(0)?)),
            "complete" => Ok(Self::Complete(arg_n(0)?)),
            "star" => Ok(Self::Star(arg_n(0)?)),
            "erdos_renyi" => {
                let n = arg_n(0)?;
                let prob: f64 = args
                    .get(1)
                    .and_then(|a| a.parse().ok())
                    .ok_or_else(|| Error::InvalidSpec(format!("bad probability in '{spec}'")))?;
                let seed: u64 = args
                    .get(2)
                    .and_then(|a| a.parse().ok())
                    .ok_or_else(|| Error::InvalidSpec(format!("bad seed in '{spec}'")))?;
                Ok(Self::ErdosRenyi { n, prob, seed })
            }
            other => Err(Error::InvalidSpec(format!("unknown topology '{other}'"))),
        }
    }

    fn agent_count(&self) -> usize {
        match self {
            Self::Ring(n) | Self::Path(n) | Self::Complete(n) | Self::Star(n) => *n,
            Self::ErdosRenyi { n, .. } => *n,
            Self::Explicit { n, .. } => *n,
        }
    }
}

/// SplitMix64: a tiny, well-known PRNG with documented state update, used so
/// seeded graphs are bit-reproducible across platforms.
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1) with 53 random bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / 9007199254740992.0)
    }
}

/// A validated Laplacian with its sorted eigendecomposition.
///
/// Invariants established at construction: symmetry (exact, from rational
/// weights), zero row sums, eigenvalues sorted ascending with λ1 = 0 and
/// v1 = 1/√n, algebraic connectivity above tolerance, deterministic
/// eigenvector signs.
#[derive(Clone, Debug)]
pub struct LaplacianGraph {
    n: usize,
    mu: Rational,
    lap_exact: RatMatrix,
    lap: Vec<Vec<f64>>,
    eigenvalues: Vec<f64>,
    /// Column ℓ is the eigenvector for eigenvalues[ℓ].
    eigenvectors: Vec<Vec<f64>>,
}

impl LaplacianGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mu(&self) -> &Rational {
        &self.mu
    }

    pub fn lap(&self) -> &[Vec<f64>] {
        &self.lap
    }

    /// The μ-scaled Laplacian with exact rational entries.
    pub fn lap_exact(&self) -> &RatMatrix {
        &self.lap_exact
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn nonzero_eigenvalues(&self) -> &[f64] {
        &self.eigenvalues[1..]
    }

    /// Distinct eigenvalues (ascending), merging values closer than `tol`.
    pub fn distinct_eigenvalues(&self, tol: f64) -> Vec<f64> {
        let mut out: Vec<f64> = Vec::new();
        for &lam in &self.eigenvalues {
            if out.last().is_none_or(|&prev| (lam - prev).abs() > tol) {
                out.push(lam);
            }
        }
        out
    }

    /// Eigenvector column ℓ.
    pub fn eigenvector(&self, ell: usize) -> &[f64] {
        &self.eigenvectors[ell]
    }

    /// Coordinates of `v` in the eigenbasis: Vᵀ v.
    pub fn to_eigenbasis(&self, v: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|ell| self.eigenvectors[ell].iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Reassembles from eigenbasis coordinates: V v̂.
    pub fn from_eigenbasis(&self, v_hat: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.n];
        for (ell, col) in self.eigenvectors.iter().enumerate() {
            for (o, c) in out.iter_mut().zip(col) {
                *o += v_hat[ell] * c;
            }
        }
        out
    }

    /// L·v for per-agent scalars.
    pub fn apply(&self, v: &[f64]) -> Vec<f64> {
        self.lap
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }
}

/// Builds L = μ(D − Adj) from a topology descriptor, computes its sorted
/// eigendecomposition, and validates the standing assumption.
pub fn build_laplacian(topology: &Topology, mu: &Rational) -> Result<LaplacianGraph> {
    if mu <= &Rational::zero() {
        return Err(Error::InvalidSpec("mu must be positive".into()));
    }
    let n = topology.agent_count();
    if n < 2 {
        return Err(Error::InvalidSpec("graphs need at least 2 agents".into()));
    }
    let edges = edge_list(topology)?;
    for &(i, j, ref w) in &edges {
        if i >= n || j >= n || i == j {
            return Err(Error::InvalidSpec(format!("bad edge ({i}, {j})")));
        }
        if w <= &Rational::zero() {
            return Err(Error::InvalidSpec("edge weights must be positive".into()));
        }
    }
    if !connected(n, &edges) {
        return Err(Error::DisconnectedGraph(0.0));
    }

    let mut lap_exact = RatMatrix::zeros(n, n);
    for (i, j, w) in &edges {
        let scaled = mu * w;
        lap_exact[(*i, *j)] -= scaled.clone();
        lap_exact[(*j, *i)] -= scaled.clone();
        lap_exact[(*i, *i)] += scaled.clone();
        lap_exact[(*j, *j)] += scaled;
    }
    let lap = lap_exact.to_f64();

    let (eigenvalues, eigenvectors) = symmetric_eigen_sorted(&lap, n);
    if eigenvalues[1] <= CONNECTIVITY_TOL {
        return Err(Error::DisconnectedGraph(eigenvalues[1]));
    }

    Ok(LaplacianGraph { n, mu: mu.clone(), lap_exact, lap, eigenvalues, eigenvectors })
}

fn edge_list(topology: &Topology) -> Result<Vec<(usize, usize, Rational)>> {
    let one = Rational::from_integer(1.into());
    Ok(match topology {
        Topology::Ring(n) => {
            if *n == 2 {
                vec![(0, 1, one)]
            } else {
                (0..*n).map(|i| (i, (i + 1) % n, one.clone())).collect()
            }
        }
        Topology::Path(n) => (0..n - 1).map(|i| (i, i + 1, one.clone())).collect(),
        Topology::Complete(n) => {
            let mut edges = Vec::new();
            for i in 0..*n {
                for j in i + 1..*n {
                    edges.push((i, j, one.clone()));
                }
            }
            edges
        }
        Topology::Star(n) => (1..*n).map(|i| (0, i, one.clone())).collect(),
        Topology::ErdosRenyi { n, prob, seed } => {
            if !(0.0..=1.0).contains(prob) {
                return Err(Error::InvalidSpec("probability must be in [0, 1]".into()));
            }
            // Pairs are drawn in lexicographic (i, j) order, one SplitMix64
            // sample per pair, so a seed pins the graph exactly.
            let mut rng = SplitMix64::new(*seed);
            let mut edges = Vec::new();
            for i in 0..*n {
                for j in i + 1..*n {
                    if rng.next_f64() < *prob {
                        edges.push((i, j, one.clone()));
                    }
                }
            }
            edges
        }
        Topology::Explicit { edges, .. } => edges.clone(),
    })
}

fn connected(n: usize, edges: &[(usize, usize, Rational)]) -> bool {
    let mut adj = vec![Vec::new(); n];
    for &(i, j, _) in edges {
        adj[i].push(j);
        adj[j].push(i);
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == n
}

/// Symmetric eigendecomposition, sorted ascending, with deterministic signs:
/// each eigenvector is flipped so its largest-magnitude entry (lowest index
/// on ties) is positive. The zero eigenvalue is pinned to exactly 0 with
/// eigenvector 1/√n.
fn symmetric_eigen_sorted(lap: &[Vec<f64>], n: usize) -> (Vec<f64>, Vec<Vec<f64>>) {
    let flat: Vec<f64> = lap.iter().flatten().copied().collect();
    let m = DMatrix::from_row_slice(n, n, &flat);
    let eig = m.symmetric_eigen();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].partial_cmp(&eig.eigenvalues[b]).unwrap());

    let mut eigenvalues = Vec::with_capacity(n);
    let mut eigenvectors = Vec::with_capacity(n);
    for &idx in &order {
        eigenvalues.push(eig.eigenvalues[idx]);
        let col = eig.eigenvectors.column(idx);
        let mut v: Vec<f64> = col.iter().copied().collect();
        let mut best = 0;
        for (k, entry) in v.iter().enumerate() {
            if entry.abs() > v[best].abs() + 1e-12 {
                best = k;
            }
        }
        if v[best] < 0.0 {
            for entry in &mut v {
                *entry = -*entry;
            }
        }
        eigenvectors.push(v);
    }
    eigenvalues[0] = 0.0;
    eigenvectors[0] = vec![1.0 / (n as f64).sqrt(); n];
    (eigenvalues, eigenvectors)
}

/// One clause of the Laplacian validation report.
#[derive(Clone, Debug)]
pub struct Clause {
    pub pass: bool,
    pub residual: f64,
}

/// Pass/fail for each clause of the standing assumption, with measured
/// residuals.
#[derive(Clone, Debug)]
pub struct LaplacianReport {
    pub symmetric: Clause,
    pub rows_sum_to_zero: Clause,
    pub positive_semidefinite: Clause,
    pub zero_eigenvalue_distinct: Clause,
}

impl LaplacianReport {
    pub fn all_pass(&self) -> bool {
        self.symmetric.pass
            && self.rows_sum_to_zero.pass
            && self.positive_semidefinite.pass
            && self.zero_eigenvalue_distinct.pass
    }
}

/// Checks an arbitrary square matrix against the standing assumption.
pub fn validate_laplacian(l: &[Vec<f64>]) -> LaplacianReport {
    let n = l.len();
    let mut sym_res: f64 = 0.0;
    let mut row_res: f64 = 0.0;
    for (i, row) in l.iter().enumerate() {
        let mut sum = 0.0;
        for (j, &val) in row.iter().enumerate() {
            sym_res = sym_res.max((val - l[j][i]).abs());
            sum += val;
        }
        row_res = row_res.max(sum.abs());
    }
    // Eigen-based clauses use the symmetrized matrix when needed.
    let sym: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| 0.5 * (l[i][j] + l[j][i])).collect())
        .collect();
    let (eigenvalues, _) = symmetric_eigen_sorted_raw(&sym, n);
    let min_eig = eigenvalues.first().copied().unwrap_or(0.0);
    let second = eigenvalues.get(1).copied().unwrap_or(0.0);
    LaplacianReport {
        symmetric: Clause { pass: sym_res <= 1e-12, residual: sym_res },
        rows_sum_to_zero: Clause { pass: row_res <= 1e-12, residual: row_res },
        positive_semidefinite: Clause { pass: min_eig >= -1e-12, residual: min_eig },
        zero_eigenvalue_distinct: Clause { pass: second > CONNECTIVITY_TOL, residual: second },
    }
}

/// Like [`symmetric_eigen_sorted`] but without pinning the zero eigenvalue
/// (the input may not be a valid Laplacian).
fn symmetric_eigen_sorted_raw(m: &[Vec<f64>], n: usize) -> (Vec<f64>, Vec<Vec<f64>>) {
    let flat: Vec<f64> = m.iter().flatten().copied().collect();
    let dm = DMatrix::from_row_slice(n, n, &flat);
    let eig = dm.symmetric_eigen();
    let mut vals: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
    (vals, Vec::new())
}

/// μ-scaled gossip matrix W = I − μL as floats (for reporting).
pub fn gossip_from_laplacian(graph: &LaplacianGraph) -> Vec<Vec<f64>> {
    let n = graph.n();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let id = if i == j { 1.0 } else { 0.0 };
                    id - graph.lap()[i][j]
                })
                .collect()
        })
        .collect()
}

/// Parses an edge list "i j w ; i j w ; ...".
pub fn parse_edges(text: &str) -> Result<Vec<(usize, usize, Rational)>> {
    let mut edges = Vec::new();
    for part in text.split(';') {
        let fields: Vec<&str> = part.split_whitespace().collect();
        if fields.is_empty() {
            continue;
        }
        if fields.len() != 3 {
            return Err(Error::InvalidSpec(format!("edge entry '{part}' must be 'i j weight'")));
        }
        let i: usize = fields[0]
            .parse()
            .map_err(|_| Error::InvalidSpec(format!("bad vertex '{}'", fields[0])))?;
        let j: usize = fields[1]
            .parse()
            .map_err(|_| Error::InvalidSpec(format!("bad vertex '{}'", fields[1])))?;
        let w = crate::ratpoly::parse_rational(fields[2])?;
        edges.push((i, j, w));
    }
    Ok(edges)
}

pub fn rational_abs_f64(r: &Rational) -> f64 {
    rational_to_f64(&r.abs())
}
