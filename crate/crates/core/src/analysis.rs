//! End-to-end pipeline for one modulus, and sweeps over ranges.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::audit::{audit, flag_count, AuditFinding, AuditInput};
use crate::error::{Error, Result};
use crate::numfmt::format_real;
use crate::numtheory::{factorize, Factorization};
use crate::ring_oracle::build_dense_oracle;
use crate::sombor_index::{index_report, FormulaCase, IndexReport};
use crate::spectral::{
    eig_sym, energy_report, sombor_matrix, spectrum_theoretical, EnergyReport, Spectrum, DEFAULT_CLUSTER_TOL,
    DENSE_EIG_MAX_ORDER,
};
use crate::structure::{build_compressed, expand, ClassInfo};

/// Both graph constructions run by default up to this modulus.
pub const BOTH_METHODS_MAX_N: u64 = 300;

/// Relative tolerance (times `max(1, ‖S‖_F)`) for spectrum multiset matching.
pub const SPECTRUM_MATCH_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Structural,
    Oracle,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpectrumMode {
    Full,
    Quotient,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpectrumSource {
    Full,
    Theoretical,
    Both,
}

#[derive(Debug, Clone, Default)]
pub struct AnalysisOptions {
    /// `None` picks `Both` up to [`BOTH_METHODS_MAX_N`], else `Structural`.
    pub method: Option<Method>,
    /// `None` picks `Both` when the dense eigensolve fits, else `Quotient`.
    pub spectrum: Option<SpectrumMode>,
    pub audit: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumRecord {
    pub source: SpectrumSource,
    /// Dense spectrum when computed, otherwise the class-level one.
    pub spectrum: Spectrum<f64>,
    pub multiset_match: Option<bool>,
    pub max_deviation: Option<f64>,
    /// `Σ λ·mult`, zero in exact arithmetic.
    pub trace: f64,
    /// `|Σ λ²·mult − Σ d³| / max(1, Σ d³)`
    pub frobenius_residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisRecord {
    pub n: u64,
    pub factorization: Factorization,
    pub trivial: bool,
    pub num_vertices: u64,
    pub num_edges: u64,
    pub method: Method,
    pub oracle_match: Option<bool>,
    pub classes: Vec<ClassInfo>,
    pub index: IndexReport<f64>,
    pub spectrum: SpectrumRecord,
    pub energy: Option<EnergyReport<f64>>,
    pub audit_findings: Vec<AuditFinding>,
}

pub fn analyze(n: u64, opts: &AnalysisOptions) -> Result<AnalysisRecord> {
    let factorization = factorize(n)?;
    let g = build_compressed(n)?;
    let method = opts.method.unwrap_or(if n <= BOTH_METHODS_MAX_N {
        Method::Both
    } else {
        Method::Structural
    });
    let mut oracle_match = None;
    let dense = match method {
        Method::Structural => expand(&g)?,
        Method::Oracle => build_dense_oracle(n)?,
        Method::Both => {
            let structural = expand(&g)?;
            oracle_match = Some(structural == build_dense_oracle(n)?);
            structural
        }
    };
    let index = index_report::<f64>(&dense, &g)?;
    let trivial = g.partition.is_trivial();
    let order = dense.order();

    let mode = opts.spectrum.unwrap_or(if order <= DENSE_EIG_MAX_ORDER {
        SpectrumMode::Both
    } else {
        SpectrumMode::Quotient
    });
    let source = match mode {
        SpectrumMode::Full => SpectrumSource::Full,
        SpectrumMode::Quotient => SpectrumSource::Theoretical,
        SpectrumMode::Both => SpectrumSource::Both,
    };

    let frob_sq = g.sombor_frobenius_sq() as f64;
    let (spectrum, energy, audit_findings) = if trivial {
        let record = SpectrumRecord {
            source,
            spectrum: Spectrum::empty(),
            multiset_match: None,
            max_deviation: None,
            trace: 0.0,
            frobenius_residual: 0.0,
        };
        (record, None, Vec::new())
    } else {
        let full = match mode {
            SpectrumMode::Quotient => None,
            _ => Some(eig_sym(&sombor_matrix::<f64>(&dense)?, DEFAULT_CLUSTER_TOL)?),
        };
        let theoretical = match mode {
            SpectrumMode::Full => None,
            _ => Some(spectrum_theoretical::<f64>(n)?),
        };
        let (multiset_match, max_deviation) = match (&full, &theoretical) {
            (Some(f), Some(t)) => {
                let dev = f.max_deviation(t);
                (
                    Some(dev.is_some_and(|d| d <= SPECTRUM_MATCH_TOL * frob_sq.sqrt().max(1.0))),
                    dev,
                )
            }
            _ => (None, None),
        };
        let primary = full.or(theoretical).expect("at least one spectrum path runs");
        let record = SpectrumRecord {
            source,
            trace: primary.trace(),
            frobenius_residual: (primary.sum_of_squares() - frob_sq).abs() / frob_sq.max(1.0),
            spectrum: primary,
            multiset_match,
            max_deviation,
        };
        let energy = energy_report(n, &record.spectrum)?;
        let findings = if opts.audit {
            audit(&AuditInput {
                graph: &g,
                so_direct: index.so_direct,
                spectrum: &record.spectrum,
            })?
        } else {
            Vec::new()
        };
        (record, Some(energy), findings)
    };

    Ok(AnalysisRecord {
        n,
        factorization,
        trivial,
        num_vertices: order as u64,
        num_edges: dense.edge_count(),
        method,
        oracle_match,
        classes: g.partition.classes.clone(),
        index,
        spectrum,
        energy,
        audit_findings,
    })
}

/// One CSV row of a sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub n: u64,
    pub num_vertices: u64,
    pub edges: u64,
    pub so_direct: f64,
    pub so_formula: Option<f64>,
    pub formula_case: FormulaCase,
    pub rel_delta: Option<f64>,
    pub energy: Option<f64>,
    pub lower_bound: Option<f64>,
    pub spectrum_match: Option<bool>,
    pub audit_flag_count: Option<usize>,
}

impl SweepRow {
    pub fn from_record(r: &AnalysisRecord, audited: bool) -> Self {
        SweepRow {
            n: r.n,
            num_vertices: r.num_vertices,
            edges: r.num_edges,
            so_direct: r.index.so_direct,
            so_formula: r.index.so_formula,
            formula_case: r.index.formula_case,
            rel_delta: r.index.rel_delta_formula,
            energy: r.energy.as_ref().map(|e| e.energy),
            lower_bound: r.energy.as_ref().map(|e| e.lower_bound),
            spectrum_match: r.spectrum.multiset_match,
            audit_flag_count: audited.then(|| flag_count(&r.audit_findings)),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum SweepEntry {
    Prime(u64),
    Row(SweepRow),
    Failed { n: u64, error: Error },
}

pub const SWEEP_HEADER: &str =
    "n,N,edges,so_direct,so_formula,formula_case,rel_delta,energy,lower_bound,spectrum_match,audit_flag_count,error";

fn opt_real(x: Option<f64>) -> String {
    x.map(format_real).unwrap_or_default()
}

fn case_name(c: FormulaCase) -> &'static str {
    match c {
        FormulaCase::CompleteCase => "complete_case",
        FormulaCase::GeneralCase => "general_case",
        FormulaCase::PkQCorollary => "pkq_corollary",
        FormulaCase::PqrCorollary => "pqr_corollary",
        FormulaCase::NotApplicable => "not_applicable",
    }
}

impl SweepEntry {
    pub fn n(&self) -> u64 {
        match self {
            SweepEntry::Prime(n) | SweepEntry::Failed { n, .. } => *n,
            SweepEntry::Row(r) => r.n,
        }
    }

    /// The CSV line for this entry; primes become `#` comment lines.
    pub fn to_csv_line(&self) -> String {
        match self {
            SweepEntry::Prime(n) => format!("# n={n} prime: skipped"),
            SweepEntry::Failed { n, error } => {
                let msg = error.to_string().replace(['"', ','], " ");
                format!("{n},,,,,,,,,,,\"{}: {msg}\"", error.kind())
            }
            SweepEntry::Row(r) => format!(
                "{},{},{},{},{},{},{},{},{},{},{},",
                r.n,
                r.num_vertices,
                r.edges,
                format_real(r.so_direct),
                opt_real(r.so_formula),
                case_name(r.formula_case),
                opt_real(r.rel_delta),
                opt_real(r.energy),
                opt_real(r.lower_bound),
                r.spectrum_match.map(|b| b.to_string()).unwrap_or_default(),
                r.audit_flag_count.map(|c| c.to_string()).unwrap_or_default(),
            ),
        }
    }
}

/// Analyzes every `n` in `from..=to` independently; failures become rows.
pub fn sweep(from: u64, to: u64, opts: &AnalysisOptions) -> Result<Vec<SweepEntry>> {
    if from < 2 || from > to {
        return Err(Error::InvalidArgument(format!(
            "sweep range needs 2 <= from <= to, got {from}..{to}"
        )));
    }
    Ok((from..=to)
        .into_par_iter()
        .map(|n| {
            if crate::numtheory::is_prime(n) {
                return SweepEntry::Prime(n);
            }
            match analyze(n, opts) {
                Ok(r) => SweepEntry::Row(SweepRow::from_record(&r, opts.audit)),
                Err(error) => SweepEntry::Failed { n, error },
            }
        })
        .collect())
}
