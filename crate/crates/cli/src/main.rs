//! Command-line surface: canonicalize, compare, table, analyze, simulate,
//! fixed-point.
//!
//! Exit codes are a stable contract: 0 success, 1 usage/I-O error,
//! 2 canonicalization failure, 3 table mismatch, 4 spectral verdict fail,
//! 5 convergence threshold missed, 6 fixed-point solvability (T2) failure.

mod config;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use canform::algorithms::{self, reproduce_parameter_table};
use canform::canonical::{
    canonicalize_tf, check_technical_conditions, construct_fixed_point, CanonicalParams,
};
use canform::graph::{build_laplacian, LaplacianGraph, SplitMix64, Topology};
use canform::ratpoly::{parse_rational, BivarRatFun, Rational};
use canform::realization::StructuredRealization;
use canform::sim::{convergence_metrics, quadratic_objective, run_canonical, run_realization};
use canform::spectral::{spectral_check, Complex64, StabilityClass, DEFAULT_TOL};
use canform::Error;

use config::{materialize_init, Dynamics, RunConfig};

#[derive(Parser)]
#[command(
    name = "canform",
    version,
    about = "Canonical-form toolkit for first-order distributed optimization algorithms",
    after_help = "Transfer functions are printed in the shift variable z with \
                  coefficients in L, the Laplacian eigenvalue. Exact-path values \
                  (alpha, beta, mu, zeta*) parse as 'p/q' or integer strings only."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce an algorithm or realization file to the five canonical parameters
    Canonicalize(CanonicalizeArgs),
    /// Decide whether two algorithms/realizations are equivalent
    Compare(CompareArgs),
    /// Canonicalize every registry algorithm and check the parameter table
    Table(TableArgs),
    /// Pole/zero analysis of the canonical transfer function on a graph
    Analyze(AnalyzeArgs),
    /// Run the canonical iteration (or a realization) from a config file
    Simulate(SimulateArgs),
    /// Construct an optimal fixed point and report the technical conditions
    FixedPoint(FixedPointArgs),
}

/// Selects dynamics: a named registry algorithm, a realization file, or
/// explicit canonical parameters.
#[derive(Args, Clone)]
struct InputArgs {
    /// Registry algorithm name (nids, exact_diffusion, extra, diging,
    /// asyn_dgm, jakovetic_bI, jakovetic_bW)
    #[arg(long)]
    alg: Option<String>,
    /// Realization config file
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,
    /// Canonical parameters "alpha,zeta0,zeta1,zeta2,zeta3" (rational strings)
    #[arg(long)]
    params: Option<String>,
    /// Stepsize (rational string), required with --alg
    #[arg(long)]
    alpha: Option<String>,
    /// Second parameter for the Jakovetic variants (rational string)
    #[arg(long)]
    beta: Option<String>,
    /// Gossip scaling W = I - mu L applied to the algorithm (rational string)
    #[arg(long)]
    mu: Option<String>,
}

#[derive(Args)]
struct CanonicalizeArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Output format (text or csv)
    #[arg(long, default_value = "text")]
    format: String,
}

#[derive(Args)]
struct CompareArgs {
    /// Algorithm name or realization file path
    a: String,
    /// Algorithm name or realization file path
    b: String,
    /// Stepsize shared by named algorithms (rational string)
    #[arg(long, default_value = "1/10")]
    alpha: String,
    #[arg(long)]
    beta: Option<String>,
    #[arg(long)]
    mu: Option<String>,
}

#[derive(Args)]
struct TableArgs {
    /// Stepsize (rational string)
    #[arg(long)]
    alpha: String,
    /// Jakovetic parameter; those rows are skipped when absent
    #[arg(long)]
    beta: Option<String>,
    /// Override the expected rows (verification hook): lines of
    /// "name zeta0 zeta1 zeta2 zeta3"
    #[arg(long, value_name = "PATH")]
    golden: Option<PathBuf>,
    #[arg(long, default_value = "text")]
    format: String,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Graph spec: ring(5), path(4), complete(4), star(6), erdos_renyi(8,0.3,7)
    #[arg(long)]
    graph: String,
    /// Laplacian scaling (rational string)
    #[arg(long, default_value = "1")]
    graph_mu: String,
    /// Root tolerance
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Output format (text or csv)
    #[arg(long, default_value = "text")]
    format: String,
}

#[derive(Args)]
struct SimulateArgs {
    /// Run configuration file
    #[arg(long, value_name = "PATH")]
    config: PathBuf,
}

#[derive(Args)]
struct FixedPointArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Graph spec, e.g. ring(5)
    #[arg(long)]
    graph: String,
    /// Laplacian scaling (rational string)
    #[arg(long, default_value = "1")]
    graph_mu: String,
    /// Quadratic targets, comma-separated
    #[arg(long)]
    b: String,
    /// Per-agent curvatures, comma-separated (default all 1)
    #[arg(long)]
    curvatures: Option<String>,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Self { code, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::new(1, e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Canonicalize(args) => cmd_canonicalize(args),
        Command::Compare(args) => cmd_compare(args),
        Command::Table(args) => cmd_table(args),
        Command::Analyze(args) => cmd_analyze(args),
        Command::Simulate(args) => cmd_simulate(args),
        Command::FixedPoint(args) => cmd_fixed_point(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn parse_rat_arg(value: &Option<String>, what: &str) -> Result<Option<Rational>, Failure> {
    value
        .as_deref()
        .map(|v| parse_rational(v).map_err(|e| Failure::new(1, format!("{what}: {e}"))))
        .transpose()
}

fn parse_params_list(text: &str) -> Result<CanonicalParams, Failure> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 5 {
        return Err(Failure::new(
            1,
            "--params needs five comma-separated rationals: alpha,zeta0,zeta1,zeta2,zeta3",
        ));
    }
    let mut values = Vec::with_capacity(5);
    for p in parts {
        values.push(parse_rational(p).map_err(|e| Failure::new(1, e.to_string()))?);
    }
    let zeta3 = values.pop().unwrap();
    let zeta2 = values.pop().unwrap();
    let zeta1 = values.pop().unwrap();
    let zeta0 = values.pop().unwrap();
    let alpha = values.pop().unwrap();
    Ok(CanonicalParams::new(alpha, zeta0, zeta1, zeta2, zeta3))
}

/// Resolves input to a realization (None when given bare canonical params).
fn resolve_realization(input: &InputArgs) -> Result<Option<StructuredRealization>, Failure> {
    let picked = [input.alg.is_some(), input.file.is_some(), input.params.is_some()]
        .iter()
        .filter(|b| **b)
        .count();
    if picked != 1 {
        return Err(Failure::new(1, "pick exactly one of --alg, --file, --params"));
    }
    if let Some(name) = &input.alg {
        let alpha = parse_rat_arg(&input.alpha, "--alpha")?
            .ok_or_else(|| Failure::new(1, "--alg requires --alpha"))?;
        let beta = parse_rat_arg(&input.beta, "--beta")?;
        let mu =
            parse_rat_arg(&input.mu, "--mu")?.unwrap_or_else(|| Rational::from_integer(1.into()));
        let r = algorithms::get_algorithm_by_name(name, &alpha, beta.as_ref(), &mu)
            .map_err(|e| Failure::new(1, e.to_string()))?;
        return Ok(Some(r));
    }
    if let Some(path) = &input.file {
        let r = StructuredRealization::read_file(path)
            .map_err(|e| Failure::new(1, format!("{}: {e}", path.display())))?;
        return Ok(Some(r));
    }
    Ok(None)
}

/// Resolves input to canonical parameters, canonicalizing when needed.
/// Canonicalization failures exit with code 2.
fn resolve_params(input: &InputArgs) -> Result<(CanonicalParams, BivarRatFun), Failure> {
    if let Some(text) = &input.params {
        let p = parse_params_list(text)?;
        let tf = canform::canonical::canonical_transfer_function(&p);
        return Ok((p, tf));
    }
    let r = resolve_realization(input)?.expect("params case handled above");
    let tf = r.transfer_function();
    let p = canonicalize_tf(&tf).map_err(|e| Failure::new(2, e.to_string()))?;
    Ok((p, tf))
}

fn zeta_tuple(p: &CanonicalParams) -> String {
    format!("({}, {}, {}, {})", p.zeta0, p.zeta1, p.zeta2, p.zeta3)
}

fn cmd_canonicalize(args: CanonicalizeArgs) -> Result<(), Failure> {
    let (params, tf) = resolve_params(&args.input)?;
    match args.format.as_str() {
        "csv" => {
            println!("field,value");
            println!("alpha,{}", params.alpha);
            println!("zeta0,{}", params.zeta0);
            println!("zeta1,{}", params.zeta1);
            println!("zeta2,{}", params.zeta2);
            println!("zeta3,{}", params.zeta3);
            println!("num,\"{}\"", tf.num().coeff_list_string());
            println!("den,\"{}\"", tf.den().coeff_list_string());
        }
        "text" => {
            println!("transfer function:");
            println!("  num = {}", tf.num());
            println!("  den = {}", tf.den());
            println!("parameters:");
            println!("  alpha = {}", params.alpha);
            println!("  zeta = {}", zeta_tuple(&params));
        }
        other => return Err(Failure::new(1, format!("unknown format '{other}'"))),
    }
    Ok(())
}

/// An operand of `compare`: an existing file path is a realization file,
/// anything else is a registry algorithm name.
fn compare_operand(
    token: &str,
    alpha: &Rational,
    beta: Option<&Rational>,
    mu: &Rational,
) -> Result<StructuredRealization, Failure> {
    let path = Path::new(token);
    if path.exists() {
        return StructuredRealization::read_file(path)
            .map_err(|e| Failure::new(1, format!("{token}: {e}")));
    }
    algorithms::get_algorithm_by_name(token, alpha, beta, mu)
        .map_err(|e| Failure::new(1, e.to_string()))
}

fn cmd_compare(args: CompareArgs) -> Result<(), Failure> {
    let alpha = parse_rational(&args.alpha).map_err(|e| Failure::new(1, e.to_string()))?;
    let beta = parse_rat_arg(&args.beta, "--beta")?;
    let mu = parse_rat_arg(&args.mu, "--mu")?.unwrap_or_else(|| Rational::from_integer(1.into()));
    let ra = compare_operand(&args.a, &alpha, beta.as_ref(), &mu)?;
    let rb = compare_operand(&args.b, &alpha, beta.as_ref(), &mu)?;
    for (label, r) in [(&args.a, &ra), (&args.b, &rb)] {
        match canform::canonical::canonicalize(r) {
            Ok(p) => println!("{label}: alpha = {}, zeta = {}", p.alpha, zeta_tuple(&p)),
            Err(e) => println!("{label}: not canonicalizable ({e}); comparing transfer functions"),
        }
    }
    let verdict = if canform::canonical::equivalent(&ra, &rb) { "EQUIVALENT" } else { "DISTINCT" };
    println!("{verdict}");
    Ok(())
}

fn load_golden(path: &Path) -> Result<Vec<(String, [Rational; 4])>, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::new(1, format!("{}: {e}", path.display())))?;
    let mut rows = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 5 {
            return Err(Failure::new(1, format!("golden row '{line}' needs 5 fields")));
        }
        let mut zetas = Vec::with_capacity(4);
        for f in &fields[1..] {
            zetas.push(parse_rational(f).map_err(|e| Failure::new(1, e.to_string()))?);
        }
        rows.push((
            fields[0].to_string(),
            [zetas[0].clone(), zetas[1].clone(), zetas[2].clone(), zetas[3].clone()],
        ));
    }
    Ok(rows)
}

fn cmd_table(args: TableArgs) -> Result<(), Failure> {
    let alpha = parse_rational(&args.alpha).map_err(|e| Failure::new(1, e.to_string()))?;
    let beta = parse_rat_arg(&args.beta, "--beta")?;
    if beta.is_none() {
        eprintln!("warning: --beta not given; Jakovetic rows skipped");
    }
    let mut rows = reproduce_parameter_table(&alpha, beta.as_ref()).map_err(|e| match e {
        Error::CanonicalizationFailed { .. } => Failure::new(2, e.to_string()),
        other => Failure::new(1, other.to_string()),
    })?;

    if let Some(golden_path) = &args.golden {
        let golden = load_golden(golden_path)?;
        for row in &mut rows {
            if let Some((_, zetas)) = golden.iter().find(|(name, _)| name == row.name) {
                row.expected = CanonicalParams::new(
                    row.computed.alpha.clone(),
                    zetas[0].clone(),
                    zetas[1].clone(),
                    zetas[2].clone(),
                    zetas[3].clone(),
                );
                row.matches = row.computed == row.expected;
            }
        }
    }

    let csv = args.format == "csv";
    if csv {
        println!("name,zeta0,zeta1,zeta2,zeta3,expected,match");
    } else {
        println!(
            "{:<24} {:>8} {:>8} {:>8} {:>8}   status",
            "algorithm", "zeta0", "zeta1", "zeta2", "zeta3"
        );
    }
    let mut mismatched = Vec::new();
    for row in &rows {
        let p = &row.computed;
        if csv {
            println!(
                "{},{},{},{},{},\"{}\",{}",
                row.name,
                p.zeta0,
                p.zeta1,
                p.zeta2,
                p.zeta3,
                zeta_tuple(&row.expected),
                row.matches
            );
        } else {
            let status = if row.matches { "ok" } else { "MISMATCH" };
            println!(
                "{:<24} {:>8} {:>8} {:>8} {:>8}   {}",
                row.label,
                p.zeta0.to_string(),
                p.zeta1.to_string(),
                p.zeta2.to_string(),
                p.zeta3.to_string(),
                status
            );
        }
        if !row.matches {
            mismatched.push(format!(
                "{}: computed zeta = {}, expected {}",
                row.name,
                zeta_tuple(&row.computed),
                zeta_tuple(&row.expected)
            ));
        }
    }
    if !mismatched.is_empty() {
        return Err(Failure::new(3, format!("table mismatch\n{}", mismatched.join("\n"))));
    }
    Ok(())
}

fn build_graph_arg(spec: &str, mu_text: &str) -> Result<LaplacianGraph, Failure> {
    let topology = Topology::parse(spec).map_err(|e| Failure::new(1, e.to_string()))?;
    let mu = parse_rational(mu_text).map_err(|e| Failure::new(1, e.to_string()))?;
    build_laplacian(&topology, &mu).map_err(|e| Failure::new(1, e.to_string()))
}

fn fmt_complex(c: &Complex64) -> String {
    if c.im.abs() < 1e-12 {
        format!("{:.6}", c.re)
    } else {
        format!("{:.6}{:+.6}i", c.re, c.im)
    }
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<(), Failure> {
    let (params, _) = resolve_params(&args.input)?;
    let graph = build_graph_arg(&args.graph, &args.graph_mu)?;
    if args.tol <= 0.0 {
        return Err(Failure::new(1, "--tol must be positive"));
    }
    let outcome = spectral_check(&params, &graph, args.tol);
    let csv = match args.format.as_str() {
        "csv" => true,
        "text" => false,
        other => return Err(Failure::new(1, format!("unknown format '{other}'"))),
    };
    if csv {
        println!("lambda,poles,zeros,classification");
    } else {
        println!("{:<12} {:<30} {:<22} classification", "lambda", "poles", "zeros");
    }
    for report in &outcome.reports {
        let poles: Vec<String> = report.poles.iter().map(fmt_complex).collect();
        let zeros: Vec<String> = report.zeros.iter().map(fmt_complex).collect();
        if csv {
            println!(
                "{:.12e},\"{}\",\"{}\",\"{}\"",
                report.lambda,
                poles.join(" "),
                zeros.join(" "),
                report.classification
            );
        } else {
            println!(
                "{:<12.6} {:<30} {:<22} {}",
                report.lambda,
                poles.join(" "),
                zeros.join(" "),
                report.classification
            );
        }
    }
    if outcome.pass {
        println!("verdict: PASS");
        Ok(())
    } else {
        let offending: Vec<String> = outcome
            .reports
            .iter()
            .filter(|r| matches!(r.classification, StabilityClass::Violation(_)))
            .map(|r| format!("{:.6}", r.lambda))
            .collect();
        println!("verdict: FAIL (offending lambda: {})", offending.join(", "));
        Err(Failure::new(4, "spectral conditions violated"))
    }
}

fn cmd_simulate(args: SimulateArgs) -> Result<(), Failure> {
    let cfg = RunConfig::from_file(&args.config).map_err(|e| Failure::new(1, e.to_string()))?;
    let graph = build_laplacian(&cfg.graph.topology, &cfg.graph.mu)
        .map_err(|e| Failure::new(1, e.to_string()))?;
    let mut obj =
        quadratic_objective(&cfg.b, &cfg.curvatures).map_err(|e| Failure::new(1, e.to_string()))?;
    if !cfg.use_known_minimizer {
        obj.known_minimizer = None;
    }
    let n = graph.n();
    let d = obj.d;
    let mut rng = SplitMix64::new(cfg.seed);
    let x0 =
        materialize_init(&cfg.x0, n, d, &mut rng).map_err(|e| Failure::new(1, e.to_string()))?;
    let w0 =
        materialize_init(&cfg.w0, n, d, &mut rng).map_err(|e| Failure::new(1, e.to_string()))?;

    let traj = match &cfg.dynamics {
        Dynamics::Canonical(params) => {
            let report = check_technical_conditions(params, &graph, &column_sums(&w0, d));
            if !report.t3_initialization {
                eprintln!(
                    "warning: T3 violated (zeta0 != 0 and sum w0 has norm {:.3e}); \
                     the run converges away from the minimizer",
                    report.w0_sum_norm
                );
            }
            if !report.t2_solvable {
                eprintln!("warning: T2 violated; no optimal fixed point exists on this graph");
            }
            run_canonical(params, &graph, &obj, &x0, &w0, cfg.iterations)
                .map_err(|e| Failure::new(1, e.to_string()))?
        }
        Dynamics::Realization(path) => {
            let r = StructuredRealization::read_file(path)
                .map_err(|e| Failure::new(1, format!("{}: {e}", path.display())))?;
            let s = r.state_dim();
            let xi0: Vec<Vec<Vec<f64>>> = (0..n)
                .map(|i| {
                    (0..s)
                        .map(|slot| match slot {
                            0 => x0[i].clone(),
                            1 => w0[i].clone(),
                            _ => vec![0.0; d],
                        })
                        .collect()
                })
                .collect();
            run_realization(&r, &graph, &obj, &xi0, cfg.iterations)
                .map_err(|e| Failure::new(1, e.to_string()))?
        }
    };

    if let Some(path) = &cfg.trajectory_out {
        let file = std::fs::File::create(path)
            .map_err(|e| Failure::new(1, format!("{}: {e}", path.display())))?;
        let mut writer = std::io::BufWriter::new(file);
        traj.write_csv(&mut writer).map_err(|e| Failure::new(1, e.to_string()))?;
        println!("trajectory written to {}", path.display());
    }

    match &obj.known_minimizer {
        Some(x_star) => {
            let metrics =
                convergence_metrics(&traj, x_star).map_err(|e| Failure::new(1, e.to_string()))?;
            let final_err = *metrics.optimality.last().expect("at least one iteration");
            let final_consensus = *metrics.consensus.last().expect("at least one iteration");
            println!("iterations: {}", traj.iterations());
            println!("communication rounds: {}", traj.comm_rounds);
            println!("final error: {final_err:.3e}");
            println!("final consensus residual: {final_consensus:.3e}");
            if final_err <= cfg.threshold {
                Ok(())
            } else {
                Err(Failure::new(
                    5,
                    format!("final error {final_err:.3e} exceeds threshold {:.3e}", cfg.threshold),
                ))
            }
        }
        None => {
            println!("iterations: {}", traj.iterations());
            println!("communication rounds: {}", traj.comm_rounds);
            println!("no known minimizer; metrics-only run");
            Ok(())
        }
    }
}

fn column_sums(values: &[Vec<f64>], d: usize) -> Vec<f64> {
    let mut sums = vec![0.0; d];
    for v in values {
        for (s, x) in sums.iter_mut().zip(v) {
            *s += x;
        }
    }
    sums
}

fn parse_comma_f64(text: &str, what: &str) -> Result<Vec<f64>, Failure> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<f64>().map_err(|_| Failure::new(1, format!("bad {what} entry '{t}'"))))
        .collect()
}

fn cmd_fixed_point(args: FixedPointArgs) -> Result<(), Failure> {
    let (params, _) = resolve_params(&args.input)?;
    let graph = build_graph_arg(&args.graph, &args.graph_mu)?;
    let targets = parse_comma_f64(&args.b, "--b")?;
    if targets.len() != graph.n() {
        return Err(Failure::new(1, format!("--b needs {} entries", graph.n())));
    }
    let curvatures = match &args.curvatures {
        Some(text) => parse_comma_f64(text, "--curvatures")?,
        None => vec![1.0; targets.len()],
    };
    let b: Vec<Vec<f64>> = targets.iter().map(|t| vec![*t]).collect();
    let obj = quadratic_objective(&b, &curvatures).map_err(|e| Failure::new(1, e.to_string()))?;
    let x_star = obj.known_minimizer.clone().expect("quadratic objective has a minimizer");
    let grads: Vec<Vec<f64>> = (0..graph.n()).map(|i| obj.gradient(i, &x_star)).collect();

    let report = check_technical_conditions(&params, &graph, &[0.0]);
    println!("T1 (alpha nonzero): {}", if report.t1_alpha_nonzero { "pass" } else { "FAIL" });
    match report.t2_offending_eigenvalue {
        None if report.t2_solvable => println!("T2 (solvable off consensus): pass"),
        Some(lam) => println!("T2 (solvable off consensus): FAIL at lambda = {lam:.6}"),
        None => println!("T2 (solvable off consensus): FAIL"),
    }

    let fp = construct_fixed_point(&params, &graph, &x_star, &grads).map_err(|e| match e {
        Error::T2Violated(_) => Failure::new(6, e.to_string()),
        Error::ZeroStepsize => Failure::new(6, "T1 violated: alpha = 0".to_string()),
        other => Failure::new(1, other.to_string()),
    })?;

    println!("x* = {:.12}", x_star[0]);
    println!(
        "{:<6} {:>16} {:>16} {:>16} {:>16} {:>16} {:>16}",
        "agent", "x", "w", "v1", "v2", "y", "u"
    );
    let mut lines = String::new();
    for i in 0..graph.n() {
        writeln!(
            lines,
            "{:<6} {:>16.10} {:>16.10} {:>16.10} {:>16.10} {:>16.10} {:>16.10}",
            i,
            fp.x_star[i][0],
            fp.w_star[i][0],
            fp.v1_star[i][0],
            fp.v2_star[i][0],
            fp.y_star[i][0],
            fp.u_star[i][0]
        )
        .expect("string write");
    }
    print!("{lines}");
    println!("linear-system residual: {:.3e}", fp.residual);
    Ok(())
}
