//! Registry of named first-order distributed algorithms as structured
//! realizations, with the gossip matrix written as W = I − μL.
//!
//! NIDS and Exact Diffusion are lifted from their published update
//! equations (both combine iterates through the averaged matrix
//! (I + W)/2 as their authors prescribe). EXTRA and DIGing come from their
//! standard literature updates, pinned by the golden parameter table.
//! The remaining entries carry only known canonical parameter rows.

use std::str::FromStr;

use num_traits::{One, Zero};

use crate::canonical::{canonical_realization, canonicalize, CanonicalParams};
use crate::error::{Error, Result};
use crate::matrix::RatMatrix;
use crate::ratpoly::{rat, Rational};
use crate::realization::StructuredRealization;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgorithmId {
    Extra,
    Nids,
    ExactDiffusion,
    Diging,
    AsynDgm,
    JakoveticBI,
    JakoveticBW,
}

/// Where a registry entry's dynamics come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgorithmSource {
    /// Lifted from update equations printed in the source material.
    PaperUpdateEquations,
    /// Lifted from the standard literature form, validated against the table.
    LiteratureForm,
    /// Only the canonical parameter row is known; the realization is the
    /// canonical one.
    CanonicalParamsRow,
}

#[derive(Clone, Copy, Debug)]
pub struct AlgorithmSpec {
    pub id: AlgorithmId,
    /// CLI-facing identifier.
    pub name: &'static str,
    /// Human-facing label used in rendered tables.
    pub label: &'static str,
    pub source: AlgorithmSource,
    pub needs_beta: bool,
}

impl FromStr for AlgorithmId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_lowercase().as_str() {
            "extra" => Ok(Self::Extra),
            "nids" => Ok(Self::Nids),
            "exact_diffusion" | "exact-diffusion" => Ok(Self::ExactDiffusion),
            "diging" => Ok(Self::Diging),
            "asyn_dgm" | "asyndgm" => Ok(Self::AsynDgm),
            "jakovetic_bi" => Ok(Self::JakoveticBI),
            "jakovetic_bw" => Ok(Self::JakoveticBW),
            other => Err(Error::UnknownAlgorithm(other.to_string())),
        }
    }
}

/// The seven registry entries in table order.
pub fn registry() -> [AlgorithmSpec; 7] {
    use AlgorithmSource::*;
    [
        AlgorithmSpec {
            id: AlgorithmId::Extra,
            name: "extra",
            label: "EXTRA",
            source: LiteratureForm,
            needs_beta: false,
        },
        AlgorithmSpec {
            id: AlgorithmId::Nids,
            name: "nids",
            label: "NIDS",
            source: PaperUpdateEquations,
            needs_beta: false,
        },
        AlgorithmSpec {
            id: AlgorithmId::ExactDiffusion,
            name: "exact_diffusion",
            label: "Exact Diffusion",
            source: PaperUpdateEquations,
            needs_beta: false,
        },
        AlgorithmSpec {
            id: AlgorithmId::Diging,
            name: "diging",
            label: "DIGing",
            source: LiteratureForm,
            needs_beta: false,
        },
        AlgorithmSpec {
            id: AlgorithmId::AsynDgm,
            name: "asyn_dgm",
            label: "AsynDGM",
            source: CanonicalParamsRow,
            needs_beta: false,
        },
        AlgorithmSpec {
            id: AlgorithmId::JakoveticBI,
            name: "jakovetic_bI",
            label: "Jakovetic (B = beta I)",
            source: CanonicalParamsRow,
            needs_beta: true,
        },
        AlgorithmSpec {
            id: AlgorithmId::JakoveticBW,
            name: "jakovetic_bW",
            label: "Jakovetic (B = beta W)",
            source: CanonicalParamsRow,
            needs_beta: true,
        },
    ]
}

pub fn spec_for(id: AlgorithmId) -> AlgorithmSpec {
    registry().into_iter().find(|s| s.id == id).expect("registry covers every id")
}

/// Expected canonical parameters per the known table, W = I − L (μ = 1).
pub fn expected_params(
    id: AlgorithmId,
    alpha: &Rational,
    beta: Option<&Rational>,
) -> Result<CanonicalParams> {
    let r = |n: i64, d: i64| rat(n, d);
    let p = |z0: Rational, z1: Rational, z2: Rational, z3: Rational| {
        CanonicalParams::new(alpha.clone(), z0, z1, z2, z3)
    };
    Ok(match id {
        AlgorithmId::Extra => p(r(1, 2), r(1, 1), r(0, 1), r(0, 1)),
        AlgorithmId::Nids | AlgorithmId::ExactDiffusion => p(r(1, 2), r(1, 1), r(0, 1), r(1, 2)),
        AlgorithmId::Diging => p(r(0, 1), r(2, 1), r(1, 1), r(0, 1)),
        AlgorithmId::AsynDgm => p(r(0, 1), r(2, 1), r(1, 1), r(1, 1)),
        AlgorithmId::JakoveticBI => {
            let beta = beta.ok_or_else(|| Error::BetaRequired("jakovetic_bI".into()))?;
            p(alpha * beta, r(2, 1), r(1, 1), r(0, 1))
        }
        AlgorithmId::JakoveticBW => {
            let beta = beta.ok_or_else(|| Error::BetaRequired("jakovetic_bW".into()))?;
            let ab = alpha * beta;
            p(ab.clone(), r(2, 1), &Rational::one() - &ab, r(0, 1))
        }
    })
}

/// Replaces L by μL: scales every λ-linear block.
fn scale_comm_blocks(mut r: StructuredRealization, mu: &Rational) -> StructuredRealization {
    if mu.is_one() {
        return r;
    }
    r.a1 = r.a1.scale(mu);
    r.b1 = r.b1.scale(mu);
    r.c1 = r.c1.scale(mu);
    r.d1 = &r.d1 * mu;
    r
}

/// NIDS, lifted around the state (x^{k+1}, x^k, u^{k-1}) with
/// x^{k+2} = W̃(2x^{k+1} − x^k − α u^k + α u^{k-1}) and W̃ = (I + W)/2.
fn nids_realization(alpha: &Rational) -> StructuredRealization {
    let a = alpha.clone();
    let z = Rational::zero;
    let a0 = RatMatrix::from_rows(vec![
        vec![rat(2, 1), rat(-1, 1), a.clone()],
        vec![Rational::one(), z(), z()],
        vec![z(), z(), z()],
    ]);
    let a1 = RatMatrix::from_rows(vec![
        vec![rat(-1, 1), rat(1, 2), -(&a / rat(2, 1))],
        vec![z(), z(), z()],
        vec![z(), z(), z()],
    ]);
    let b0 = RatMatrix::from_rows(vec![vec![-a.clone()], vec![z()], vec![Rational::one()]]);
    let b1 = RatMatrix::from_rows(vec![vec![&a / rat(2, 1)], vec![z()], vec![z()]]);
    let c0 = RatMatrix::from_rows(vec![vec![Rational::one(), z(), z()]]);
    let c1 = RatMatrix::zeros(1, 3);
    StructuredRealization::new(a0, a1, b0, b1, c0, c1, z(), z()).expect("consistent blocks")
}

/// Exact Diffusion: a gradient step x1⁺ = x2 − αu followed by the combine
/// step x2⁺ = M(x1⁺ − x1 + x2) with M = (I + W)/2.
fn exact_diffusion_realization(alpha: &Rational) -> StructuredRealization {
    let a = alpha.clone();
    let z = Rational::zero;
    let a0 = RatMatrix::from_rows(vec![
        vec![z(), Rational::one()],
        vec![rat(-1, 1), rat(2, 1)],
    ]);
    let a1 = RatMatrix::from_rows(vec![
        vec![z(), z()],
        vec![rat(1, 2), rat(-1, 1)],
    ]);
    let b0 = RatMatrix::from_rows(vec![vec![-a.clone()], vec![-a.clone()]]);
    let b1 = RatMatrix::from_rows(vec![vec![z()], vec![&a / rat(2, 1)]]);
    let c0 = RatMatrix::from_rows(vec![vec![z(), Rational::one()]]);
    let c1 = RatMatrix::zeros(1, 2);
    StructuredRealization::new(a0, a1, b0, b1, c0, c1, z(), z()).expect("consistent blocks")
}

/// EXTRA: x^{k+2} = (I + W)x^{k+1} − W̃ x^k − α(u^k − u^{k-1}), W̃ = (I + W)/2.
fn extra_realization(alpha: &Rational) -> StructuredRealization {
    let a = alpha.clone();
    let z = Rational::zero;
    let a0 = RatMatrix::from_rows(vec![
        vec![rat(2, 1), rat(-1, 1), a.clone()],
        vec![Rational::one(), z(), z()],
        vec![z(), z(), z()],
    ]);
    let a1 = RatMatrix::from_rows(vec![
        vec![rat(-1, 1), rat(1, 2), z()],
        vec![z(), z(), z()],
        vec![z(), z(), z()],
    ]);
    let b0 = RatMatrix::from_rows(vec![vec![-a.clone()], vec![z()], vec![Rational::one()]]);
    let b1 = RatMatrix::zeros(3, 1);
    let c0 = RatMatrix::from_rows(vec![vec![Rational::one(), z(), z()]]);
    let c1 = RatMatrix::zeros(1, 3);
    StructuredRealization::new(a0, a1, b0, b1, c0, c1, z(), z()).expect("consistent blocks")
}

/// DIGing gradient tracking, lifted around (x^k, s^{k-1}, u^{k-1}) with
/// s^k = W s^{k-1} + u^k − u^{k-1} and x^{k+1} = W x^k − α s^k.
fn diging_realization(alpha: &Rational) -> StructuredRealization {
    let a = alpha.clone();
    let z = Rational::zero;
    let a0 = RatMatrix::from_rows(vec![
        vec![Rational::one(), -a.clone(), a.clone()],
        vec![z(), Rational::one(), rat(-1, 1)],
        vec![z(), z(), z()],
    ]);
    let a1 = RatMatrix::from_rows(vec![
        vec![rat(-1, 1), a.clone(), z()],
        vec![z(), rat(-1, 1), z()],
        vec![z(), z(), z()],
    ]);
    let b0 = RatMatrix::from_rows(vec![vec![-a.clone()], vec![Rational::one()], vec![Rational::one()]]);
    let b1 = RatMatrix::zeros(3, 1);
    let c0 = RatMatrix::from_rows(vec![vec![Rational::one(), z(), z()]]);
    let c1 = RatMatrix::zeros(1, 3);
    StructuredRealization::new(a0, a1, b0, b1, c0, c1, z(), z()).expect("consistent blocks")
}

/// Builds the named algorithm as a structured realization with W = I − μL.
pub fn get_algorithm(
    id: AlgorithmId,
    alpha: &Rational,
    beta: Option<&Rational>,
    mu: &Rational,
) -> Result<StructuredRealization> {
    if alpha.is_zero() {
        return Err(Error::ZeroStepsize);
    }
    let spec = spec_for(id);
    let base = match id {
        AlgorithmId::Nids => nids_realization(alpha),
        AlgorithmId::ExactDiffusion => exact_diffusion_realization(alpha),
        AlgorithmId::Extra => extra_realization(alpha),
        AlgorithmId::Diging => diging_realization(alpha),
        AlgorithmId::AsynDgm | AlgorithmId::JakoveticBI | AlgorithmId::JakoveticBW => {
            canonical_realization(&expected_params(id, alpha, beta)?)
        }
    };
    if spec.source == AlgorithmSource::LiteratureForm && mu.is_one() {
        // The table row is authoritative for literature transcriptions.
        debug_assert_eq!(
            canonicalize(&base).expect("literature lift canonicalizes"),
            expected_params(id, alpha, beta)?,
            "literature transcription of {} disagrees with its table row",
            spec.name
        );
    }
    Ok(scale_comm_blocks(base, mu))
}

/// Convenience: name-based lookup for the CLI surface.
pub fn get_algorithm_by_name(
    name: &str,
    alpha: &Rational,
    beta: Option<&Rational>,
    mu: &Rational,
) -> Result<StructuredRealization> {
    get_algorithm(name.parse()?, alpha, beta, mu)
}

#[derive(Clone, Debug)]
pub struct TableRow {
    pub name: &'static str,
    pub label: &'static str,
    pub computed: CanonicalParams,
    pub expected: CanonicalParams,
    pub matches: bool,
}

/// Canonicalizes every registry entry at the given numerals (μ = 1) and
/// compares exactly against the known parameter table. Rows requiring β are
/// skipped when β is absent.
pub fn reproduce_parameter_table(alpha: &Rational, beta: Option<&Rational>) -> Result<Vec<TableRow>> {
    if alpha.is_zero() {
        return Err(Error::ZeroStepsize);
    }
    let mut rows = Vec::new();
    for spec in registry() {
        if spec.needs_beta && beta.is_none() {
            continue;
        }
        let realization = get_algorithm(spec.id, alpha, beta, &Rational::one())?;
        let computed = canonicalize(&realization).map_err(|e| Error::CanonicalizationFailed {
            algorithm: spec.name.to_string(),
            detail: e.to_string(),
        })?;
        let expected = expected_params(spec.id, alpha, beta)?;
        let matches = computed == expected;
        rows.push(TableRow { name: spec.name, label: spec.label, computed, expected, matches });
    }
    Ok(rows)
}
