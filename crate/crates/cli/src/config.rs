//! Run-configuration files: sectioned key-value text.
//!
//! ```text
//! [algorithm]
//! name = nids          # or: file = realization.real
//! alpha = 1/10
//!
//! [graph]
//! topology = ring
//! n = 5
//! mu = 1
//!
//! [objective]
//! kind = quadratic
//! b = 1 2 3 4 5
//! curvatures = 1 1 1 1 1
//!
//! [simulation]
//! iterations = 2000
//! x0 = 0
//! w0 = 0
//! seed = 0
//! threshold = 1e-8
//!
//! [output]
//! trajectory = traj.csv
//! ```
//!
//! Rational-valued keys (alpha, beta, mu, zeta*) take "p/q" or integer
//! strings; simulation-side keys (threshold, x0, w0, b, curvatures) take
//! decimals. Lines starting with `#` are comments.

use std::collections::HashMap;
use std::path::{Path, PathBuf};

use canform::canonical::CanonicalParams;
use canform::graph::{parse_edges, Topology};
use canform::ratpoly::{parse_rational, Rational};
use canform::Error;

pub struct Ini {
    sections: HashMap<String, HashMap<String, String>>,
}

impl Ini {
    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut sections: HashMap<String, HashMap<String, String>> = HashMap::new();
        let mut current = String::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(name) = line.strip_prefix('[') {
                let name = name
                    .strip_suffix(']')
                    .ok_or_else(|| Error::Parse(format!("line {}: unterminated section", lineno + 1)))?;
                current = name.trim().to_lowercase();
                sections.entry(current.clone()).or_default();
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::Parse(format!("line {}: expected 'key = value'", lineno + 1))
            })?;
            if current.is_empty() {
                return Err(Error::Parse(format!("line {}: key outside any section", lineno + 1)));
            }
            sections
                .get_mut(&current)
                .expect("section created above")
                .insert(key.trim().to_lowercase(), value.trim().to_string());
        }
        Ok(Self { sections })
    }

    pub fn get(&self, section: &str, key: &str) -> Option<&str> {
        self.sections.get(section).and_then(|s| s.get(key)).map(String::as_str)
    }

    pub fn has_section(&self, section: &str) -> bool {
        self.sections.contains_key(section)
    }
}

/// What drives the simulation: canonical parameters or a realization file.
#[allow(clippy::large_enum_variant)]
pub enum Dynamics {
    Canonical(CanonicalParams),
    Realization(PathBuf),
}

pub enum InitSpec {
    Broadcast(f64),
    PerAgent(Vec<Vec<f64>>),
    Random,
}

pub struct GraphConfig {
    pub topology: Topology,
    pub mu: Rational,
}

pub struct RunConfig {
    pub dynamics: Dynamics,
    pub graph: GraphConfig,
    pub b: Vec<Vec<f64>>,
    pub curvatures: Vec<f64>,
    /// `known_minimizer = none` suppresses the closed-form minimizer, turning
    /// the run into a metrics-only simulation.
    pub use_known_minimizer: bool,
    pub iterations: usize,
    pub x0: InitSpec,
    pub w0: InitSpec,
    pub seed: u64,
    pub threshold: f64,
    pub trajectory_out: Option<PathBuf>,
}

fn parse_f64(value: &str, what: &str) -> Result<f64, Error> {
    value.parse().map_err(|_| Error::Parse(format!("bad number for {what}: '{value}'")))
}

/// Scalar lists "1 2 3" or ';'-separated vectors "1 0 ; 2 1".
fn parse_vectors(text: &str, what: &str) -> Result<Vec<Vec<f64>>, Error> {
    let mut out = Vec::new();
    for part in text.split(';') {
        let entries: Result<Vec<f64>, Error> =
            part.split_whitespace().map(|e| parse_f64(e, what)).collect();
        let entries = entries?;
        if !entries.is_empty() {
            out.push(entries);
        }
    }
    if out.is_empty() {
        return Err(Error::Parse(format!("{what} is empty")));
    }
    // A single row of scalars means one scalar per agent.
    if out.len() == 1 && out[0].len() > 1 {
        return Ok(out[0].iter().map(|v| vec![*v]).collect());
    }
    Ok(out)
}

fn parse_init(text: &str, what: &str) -> Result<InitSpec, Error> {
    let text = text.trim();
    if text.eq_ignore_ascii_case("random") {
        return Ok(InitSpec::Random);
    }
    if !text.contains(' ') && !text.contains(';') {
        return Ok(InitSpec::Broadcast(parse_f64(text, what)?));
    }
    Ok(InitSpec::PerAgent(parse_vectors(text, what)?))
}

pub fn graph_from_ini(ini: &Ini) -> Result<GraphConfig, Error> {
    let topo_name = ini
        .get("graph", "topology")
        .ok_or_else(|| Error::Parse("missing [graph] topology".into()))?;
    let n: usize = ini
        .get("graph", "n")
        .map(|v| v.parse().map_err(|_| Error::Parse("bad [graph] n".into())))
        .transpose()?
        .unwrap_or(0);
    let topology = match topo_name.to_lowercase().as_str() {
        "ring" => Topology::Ring(n),
        "path" => Topology::Path(n),
        "complete" => Topology::Complete(n),
        "star" => Topology::Star(n),
        "erdos_renyi" => {
            let prob = parse_f64(
                ini.get("graph", "prob")
                    .ok_or_else(|| Error::Parse("erdos_renyi needs prob".into()))?,
                "[graph] prob",
            )?;
            let seed: u64 = ini
                .get("graph", "seed")
                .ok_or_else(|| Error::Parse("erdos_renyi needs seed".into()))?
                .parse()
                .map_err(|_| Error::Parse("bad [graph] seed".into()))?;
            Topology::ErdosRenyi { n, prob, seed }
        }
        "explicit" => {
            let edges = parse_edges(
                ini.get("graph", "edges")
                    .ok_or_else(|| Error::Parse("explicit topology needs edges".into()))?,
            )?;
            Topology::Explicit { n, edges }
        }
        other => return Err(Error::InvalidSpec(format!("unknown topology '{other}'"))),
    };
    let mu = match ini.get("graph", "mu") {
        Some(v) => parse_rational(v)?,
        None => Rational::from_integer(1.into()),
    };
    Ok(GraphConfig { topology, mu })
}

fn params_from_section(ini: &Ini) -> Result<CanonicalParams, Error> {
    let field = |key: &str| -> Result<Rational, Error> {
        parse_rational(
            ini.get("params", key)
                .ok_or_else(|| Error::Parse(format!("missing [params] {key}")))?,
        )
    };
    Ok(CanonicalParams::new(
        field("alpha")?,
        field("zeta0")?,
        field("zeta1")?,
        field("zeta2")?,
        field("zeta3")?,
    ))
}

fn apply_param_overrides(ini: &Ini, mut p: CanonicalParams) -> Result<CanonicalParams, Error> {
    // `mu` is handled at graph-construction time, not as a parameter slot.
    let over = |key: &str, slot: &mut Rational| -> Result<(), Error> {
        if let Some(v) = ini.get("params", key) {
            *slot = parse_rational(v)?;
        }
        Ok(())
    };
    over("alpha", &mut p.alpha)?;
    over("zeta0", &mut p.zeta0)?;
    over("zeta1", &mut p.zeta1)?;
    over("zeta2", &mut p.zeta2)?;
    over("zeta3", &mut p.zeta3)?;
    Ok(p)
}

impl RunConfig {
    pub fn from_file(path: &Path) -> Result<Self, Error> {
        let text = std::fs::read_to_string(path)?;
        let ini = Ini::parse(&text)?;
        let base_dir = path.parent().unwrap_or_else(|| Path::new("."));

        let dynamics = if ini.has_section("algorithm") {
            let name = ini.get("algorithm", "name");
            let file = ini.get("algorithm", "file");
            match (name, file) {
                (Some(name), None) => {
                    let alpha = parse_rational(
                        ini.get("algorithm", "alpha")
                            .ok_or_else(|| Error::Parse("missing [algorithm] alpha".into()))?,
                    )?;
                    let beta =
                        ini.get("algorithm", "beta").map(parse_rational).transpose()?;
                    let mu = match ini.get("algorithm", "mu") {
                        Some(v) => parse_rational(v)?,
                        None => Rational::from_integer(1.into()),
                    };
                    let realization = canform::algorithms::get_algorithm_by_name(
                        name,
                        &alpha,
                        beta.as_ref(),
                        &mu,
                    )?;
                    let params = canform::canonical::canonicalize(&realization).map_err(|e| {
                        Error::CanonicalizationFailed {
                            algorithm: name.to_string(),
                            detail: e.to_string(),
                        }
                    })?;
                    Dynamics::Canonical(apply_param_overrides(&ini, params)?)
                }
                (None, Some(file)) => {
                    if ini.has_section("params") {
                        return Err(Error::Parse(
                            "[params] overrides apply to named algorithms, not realization files"
                                .into(),
                        ));
                    }
                    Dynamics::Realization(base_dir.join(file))
                }
                _ => {
                    return Err(Error::Parse(
                        "[algorithm] must set exactly one of 'name' or 'file'".into(),
                    ))
                }
            }
        } else if ini.has_section("params") {
            Dynamics::Canonical(params_from_section(&ini)?)
        } else {
            return Err(Error::Parse("config needs an [algorithm] or [params] section".into()));
        };

        let mut graph = graph_from_ini(&ini)?;
        // Optional [params] mu applies the gossip rescaling by replacing L
        // with mu*L for the whole run; it composes with [graph] mu.
        if let Some(v) = ini.get("params", "mu") {
            graph.mu = &graph.mu * &parse_rational(v)?;
        }

        if let Some(kind) = ini.get("objective", "kind") {
            if !kind.eq_ignore_ascii_case("quadratic") {
                return Err(Error::Parse(format!("unsupported objective kind '{kind}'")));
            }
        }
        let b = parse_vectors(
            ini.get("objective", "b")
                .ok_or_else(|| Error::Parse("missing [objective] b".into()))?,
            "[objective] b",
        )?;
        let curvatures = match ini.get("objective", "curvatures") {
            Some(text) => {
                let flat: Result<Vec<f64>, Error> =
                    text.split_whitespace().map(|e| parse_f64(e, "[objective] curvatures")).collect();
                flat?
            }
            None => vec![1.0; b.len()],
        };
        let use_known_minimizer = match ini.get("objective", "known_minimizer") {
            None | Some("auto") => true,
            Some("none") => false,
            Some(other) => {
                return Err(Error::Parse(format!(
                    "[objective] known_minimizer must be 'auto' or 'none', got '{other}'"
                )))
            }
        };

        let iterations: usize = ini
            .get("simulation", "iterations")
            .or_else(|| ini.get("simulation", "k"))
            .map(|v| v.parse().map_err(|_| Error::Parse("bad [simulation] iterations".into())))
            .transpose()?
            .unwrap_or(1000);
        let x0 = parse_init(ini.get("simulation", "x0").unwrap_or("0"), "[simulation] x0")?;
        let w0 = parse_init(ini.get("simulation", "w0").unwrap_or("0"), "[simulation] w0")?;
        let mut seed: u64 = ini
            .get("simulation", "seed")
            .map(|v| v.parse().map_err(|_| Error::Parse("bad [simulation] seed".into())))
            .transpose()?
            .unwrap_or(0);
        if let Ok(env_seed) = std::env::var("CANFORM_SEED") {
            seed = env_seed
                .parse()
                .map_err(|_| Error::Parse(format!("bad CANFORM_SEED '{env_seed}'")))?;
        }
        let threshold = match ini.get("simulation", "threshold") {
            Some(v) => parse_f64(v, "[simulation] threshold")?,
            None => 1e-8,
        };
        let trajectory_out =
            ini.get("output", "trajectory").map(|p| base_dir.join(p));

        Ok(Self {
            dynamics,
            graph,
            b,
            curvatures,
            use_known_minimizer,
            iterations,
            x0,
            w0,
            seed,
            threshold,
            trajectory_out,
        })
    }
}

/// Materializes an init spec into per-agent d-vectors, drawing any random
/// values from the given generator (agents outer, coordinates inner).
pub fn materialize_init(
    spec: &InitSpec,
    n: usize,
    d: usize,
    rng: &mut canform::graph::SplitMix64,
) -> Result<Vec<Vec<f64>>, Error> {
    match spec {
        InitSpec::Broadcast(v) => Ok(vec![vec![*v; d]; n]),
        InitSpec::Random => Ok((0..n)
            .map(|_| (0..d).map(|_| 2.0 * rng.next_f64() - 1.0).collect())
            .collect()),
        InitSpec::PerAgent(values) => {
            if values.len() != n || values.iter().any(|v| v.len() != d) {
                return Err(Error::DimensionMismatch(format!(
                    "init needs {n} vectors of dimension {d}"
                )));
            }
            Ok(values.clone())
        }
    }
}
