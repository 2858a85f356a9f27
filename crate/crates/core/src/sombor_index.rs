//! Sombor index `SO(G) = Σ_{uv ∈ E} √(d_u² + d_v²)` computed three ways: from
//! the dense graph, from the class-level graph, and from closed forms in `n`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::{factorize, totient, Factorization};
use crate::ring_oracle::DenseGraph;
use crate::scalar::Real;
use crate::structure::{ClassKind, CompressedGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FormulaCase {
    /// Every prime exponent is at least 2; the graph is complete.
    CompleteCase,
    /// At least one prime divides `n` exactly once.
    GeneralCase,
    PkQCorollary,
    PqrCorollary,
    NotApplicable,
}

/// Summands of the closed form, kept apart so a mismatch can be localized.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FormulaTerms<T> {
    /// Edges inside the clique formed by all complete classes.
    pub clique: T,
    /// Edges between the clique and the independent classes.
    pub clique_independent: T,
    /// Edges between two distinct independent classes.
    pub independent_pairs: T,
}

impl<T: Real> FormulaTerms<T> {
    pub fn total(&self) -> T {
        self.clique + self.clique_independent + self.independent_pairs
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IndexReport<T> {
    pub n: u64,
    pub so_direct: T,
    pub so_compressed: T,
    pub so_formula: Option<T>,
    pub formula_terms: Option<FormulaTerms<T>>,
    pub formula_case: FormulaCase,
    pub rel_delta_formula: Option<T>,
}

/// Sums over the edges of `g`, grouping equal degree pairs so each square
/// root is taken once and scaled by an exact count.
pub fn sombor_direct<T: Real>(g: &DenseGraph) -> T {
    let degrees = g.degrees();
    let mut buckets: BTreeMap<(u64, u64), u64> = BTreeMap::new();
    for (i, j) in g.edges() {
        let (a, b) = (degrees[i], degrees[j]);
        *buckets.entry((a.min(b), a.max(b))).or_default() += 1;
    }
    buckets
        .into_iter()
        .map(|((a, b), count)| T::count(count) * T::hypot_u64(a, b))
        .fold(T::zero(), |acc, x| acc + x)
}

/// Class-level sum: clique edges inside complete classes plus the complete
/// join between every pair of classes.
pub fn sombor_compressed<T: Real>(g: &CompressedGraph) -> T {
    let classes = g.classes();
    let mut total = T::zero();
    for (i, a) in classes.iter().enumerate() {
        if a.kind == ClassKind::Complete && a.size > 1 {
            total = total + T::count(a.size * (a.size - 1) / 2) * T::sqrt2() * T::count(a.degree);
        }
        for b in &classes[i + 1..] {
            total = total + T::count(a.size * b.size) * T::hypot_u64(a.degree, b.degree);
        }
    }
    total
}

/// Quantities the closed forms are written in.
#[derive(Debug, Clone)]
struct Shape {
    /// n − φ(n) − 1
    order: u64,
    /// φ(n / p) for each prime p dividing n exactly once
    simple_sizes: Vec<u64>,
}

impl Shape {
    fn of(fact: &Factorization) -> Result<Shape> {
        let n = fact.n;
        let order = n - fact.totient() - 1;
        let simple_sizes = fact.simple_primes().map(|p| totient(n / p)).collect::<Result<_>>()?;
        Ok(Shape { order, simple_sizes })
    }

    fn clique_size(&self) -> u64 {
        self.order - self.simple_sizes.iter().sum::<u64>()
    }
}

/// Closed form for `SO`, split into terms.
///
/// All exponents ≥ 2: `(N/√2)(N−1)²` with `N = n − φ(n) − 1`. Otherwise, with
/// `s_i = φ(n/p_i)` over the `m` primes of exponent 1 and `K = N − Σ s_i`:
///
/// ```text
/// (N−1)/√2 · K(K−1)
///   + K Σ_i s_i √((N−1)² + (N−s_i)²)
///   + Σ_{i<j} s_i s_j √((N−s_i)² + (N−s_j)²)
/// ```
pub fn theorem_terms<T: Real>(n: u64) -> Result<(FormulaTerms<T>, FormulaCase)> {
    let fact = factorize(n)?;
    if fact.is_prime() {
        return Err(Error::NotApplicable {
            n,
            reason: "prime modulus gives the null graph",
        });
    }
    let shape = Shape::of(&fact)?;
    let big_n = shape.order;
    let zero = T::zero();
    if shape.simple_sizes.is_empty() {
        let clique = T::count(big_n) / T::sqrt2() * T::count((big_n - 1) * (big_n - 1));
        let terms = FormulaTerms {
            clique,
            clique_independent: zero,
            independent_pairs: zero,
        };
        return Ok((terms, FormulaCase::CompleteCase));
    }
    let k = shape.clique_size();
    let clique = if k >= 2 {
        T::count(big_n - 1) / T::sqrt2() * T::count(k * (k - 1))
    } else {
        zero
    };
    let clique_independent = T::count(k)
        * shape
            .simple_sizes
            .iter()
            .map(|&s| T::count(s) * T::hypot_u64(big_n - 1, big_n - s))
            .fold(zero, |a, b| a + b);
    let mut independent_pairs = zero;
    for (i, &si) in shape.simple_sizes.iter().enumerate() {
        for &sj in &shape.simple_sizes[i + 1..] {
            independent_pairs = independent_pairs + T::count(si * sj) * T::hypot_u64(big_n - si, big_n - sj);
        }
    }
    Ok((
        FormulaTerms {
            clique,
            clique_independent,
            independent_pairs,
        },
        FormulaCase::GeneralCase,
    ))
}

/// Closed-form value of `SO` and the case that produced it.
pub fn sombor_formula<T: Real>(n: u64) -> Result<(T, FormulaCase)> {
    theorem_terms(n).map(|(t, case)| (t.total(), case))
}

/// `(p, k, q)` when `n = p^k·q` with distinct primes and `q` of exponent 1.
/// For `n = pq` the smaller prime plays `p`.
pub fn pkq_shape(fact: &Factorization) -> Option<(u64, u32, u64)> {
    match fact.factors[..] {
        [(a, ea), (b, 1)] => Some((a, ea, b)),
        [(a, 1), (b, eb)] => Some((b, eb, a)),
        _ => None,
    }
}

/// `(p, q, r)` when `n` is a product of three distinct primes.
pub fn pqr_shape(fact: &Factorization) -> Option<(u64, u64, u64)> {
    match fact.factors[..] {
        [(p, 1), (q, 1), (r, 1)] => Some((p, q, r)),
        _ => None,
    }
}

/// The `n = p^k q` index corollary exactly as printed, including its squared
/// clique degree in the first term.
pub fn pkq_corollary_printed<T: Real>(p: u64, k: u32, q: u64) -> T {
    let pk1 = p.pow(k - 1);
    let a = T::count(pk1 * q) - T::one();
    let b = T::count(pk1 * (p + q - 1)) - T::lit(2.0);
    let indep = T::count(pk1 * (p - 1));
    a * (a - T::one()) * b * b / T::sqrt2() + a * indep * (b * b + a * a).sqrt()
}

/// The `n = pqr` index corollary as printed: clique degree
/// `p(q−1)+q(r−1)+r(p−1)−4` and no terms for edges between independent classes.
pub fn pqr_corollary_printed<T: Real>(p: u64, q: u64, r: u64) -> T {
    let f = |x: u64| T::count(x);
    let d1 = f(p * (q - 1) + q * (r - 1) + r * (p - 1)) - f(4);
    let k = f(p + q + r - 3);
    let d2 = f(p * q + p * r - p - 1);
    let d3 = f(p * q + q * r - q - 1);
    let d4 = f(p * r + q * r - r - 1);
    let hyp = |d: T| (d1 * d1 + d * d).sqrt();
    k * (k - T::one()) * d1 / T::sqrt2()
        + k * f((q - 1) * (r - 1)) * hyp(d2)
        + k * f((p - 1) * (r - 1)) * hyp(d3)
        + k * f((p - 1) * (q - 1)) * hyp(d4)
}

/// Every printed corollary that applies to `n`.
pub fn corollary_values<T: Real>(n: u64) -> Result<Vec<(FormulaCase, T)>> {
    let fact = factorize(n)?;
    let mut out = Vec::new();
    if let Some((p, k, q)) = pkq_shape(&fact) {
        out.push((FormulaCase::PkQCorollary, pkq_corollary_printed(p, k, q)));
    }
    if let Some((p, q, r)) = pqr_shape(&fact) {
        out.push((FormulaCase::PqrCorollary, pqr_corollary_printed(p, q, r)));
    }
    Ok(out)
}

pub(crate) fn rel_delta<T: Real>(value: T, reference: T) -> T {
    (value - reference).abs() / reference.abs().max(T::one())
}

/// Reconciles the three routes for one modulus.
pub fn index_report<T: Real>(dense: &DenseGraph, compressed: &CompressedGraph) -> Result<IndexReport<T>> {
    let n = compressed.n();
    let so_direct = sombor_direct::<T>(dense);
    let so_compressed = sombor_compressed::<T>(compressed);
    let (formula_terms, formula_case) = match theorem_terms::<T>(n) {
        Ok((terms, case)) => (Some(terms), case),
        Err(Error::NotApplicable { .. }) => (None, FormulaCase::NotApplicable),
        Err(e) => return Err(e),
    };
    let so_formula = formula_terms.map(|t| t.total());
    Ok(IndexReport {
        n,
        so_direct,
        so_compressed,
        so_formula,
        formula_terms,
        formula_case,
        rel_delta_formula: so_formula.map(|f| rel_delta(f, so_direct)),
    })
}
