//! Divisor-class construction of the weakly zero-divisor graph.
//!
//! Vertices split into classes `A_d = { x : gcd(x, n) = d }` for the proper
//! divisors `d` of `n`. Each class induces either a clique or an independent
//! set, and any two distinct classes are completely joined, so the graph is a
//! generalized join of cliques and null graphs over a complete graph on the
//! divisors.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::{factorize, gcd_unchecked, proper_divisors, Factorization};
use crate::ring_oracle::DenseGraph;

/// `expand` refuses graphs with more vertices than this.
pub const EXPAND_MAX_ORDER: u64 = 20_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassKind {
    Complete,
    Independent,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassInfo {
    pub divisor: u64,
    pub size: u64,
    pub kind: ClassKind,
    pub degree: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorClassPartition {
    pub n: u64,
    pub factorization: Factorization,
    pub classes: Vec<ClassInfo>,
    pub total_vertices: u64,
}

impl DivisorClassPartition {
    /// Prime moduli give the empty graph.
    pub fn is_trivial(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_of(&self, d: u64) -> Option<&ClassInfo> {
        self.classes.iter().find(|c| c.divisor == d)
    }

    /// Total size of the complete classes (they form one clique).
    pub fn clique_size(&self) -> u64 {
        self.classes
            .iter()
            .filter(|c| c.kind == ClassKind::Complete)
            .map(|c| c.size)
            .sum()
    }

    pub fn independent(&self) -> impl Iterator<Item = &ClassInfo> {
        self.classes.iter().filter(|c| c.kind == ClassKind::Independent)
    }
}

/// Class-level graph: the partition plus a complete join between classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompressedGraph {
    pub partition: DivisorClassPartition,
}

impl CompressedGraph {
    pub fn n(&self) -> u64 {
        self.partition.n
    }

    pub fn order(&self) -> u64 {
        self.partition.total_vertices
    }

    pub fn classes(&self) -> &[ClassInfo] {
        &self.partition.classes
    }

    pub fn edge_count(&self) -> u64 {
        let classes = self.classes();
        let within: u64 = classes
            .iter()
            .filter(|c| c.kind == ClassKind::Complete)
            .map(|c| c.size * (c.size - 1) / 2)
            .sum();
        let mut across = 0;
        for (i, a) in classes.iter().enumerate() {
            for b in &classes[i + 1..] {
                across += a.size * b.size;
            }
        }
        within + across
    }

    pub fn degree_sum(&self) -> u64 {
        self.classes().iter().map(|c| c.size * c.degree).sum()
    }

    /// Σ_v d_v³.
    pub fn cubed_degree_sum(&self) -> u64 {
        self.classes().iter().map(|c| c.size * c.degree.pow(3)).sum()
    }

    /// `‖S‖_F² = Σλ² = 2·Σ_v d_v³` for the Sombor matrix.
    pub fn sombor_frobenius_sq(&self) -> u64 {
        2 * self.cubed_degree_sum()
    }
}

/// Intrinsic class-kind rule: `A_d` is independent iff `d` is prime and `d² ∤ n`.
pub fn class_kind(fact: &Factorization, d: u64) -> ClassKind {
    if fact.exponent_of(d) == 1 {
        ClassKind::Independent
    } else {
        ClassKind::Complete
    }
}

pub fn partition(n: u64) -> Result<DivisorClassPartition> {
    let factorization = factorize(n)?;
    let divisors = proper_divisors(n)?;
    let sizes: Vec<u64> = divisors.iter().map(|&d| factorize_totient(n / d)).collect();
    let total: u64 = sizes.iter().sum();
    let classes = divisors
        .iter()
        .zip(sizes)
        .map(|(&d, size)| {
            let kind = class_kind(&factorization, d);
            let degree = match kind {
                ClassKind::Complete => total - 1,
                ClassKind::Independent => total - size,
            };
            ClassInfo {
                divisor: d,
                size,
                kind,
                degree,
            }
        })
        .collect();
    Ok(DivisorClassPartition {
        n,
        factorization,
        classes,
        total_vertices: total,
    })
}

fn factorize_totient(m: u64) -> u64 {
    crate::numtheory::totient(m).expect("quotient of a proper divisor is at least 2")
}

/// Elements `x ∈ [1, n−1]` with `gcd(x, n) = d`, ascending.
pub fn members(n: u64, d: u64) -> Result<Vec<u64>> {
    if n < 2 || d <= 1 || d >= n || !n.is_multiple_of(d) {
        return Err(Error::NotAProperDivisor { n, d });
    }
    // x = d·t with gcd(t, n/d) = 1
    let m = n / d;
    Ok((1..m).filter(|&t| gcd_unchecked(t, m) == 1).map(|t| t * d).collect())
}

pub fn build_compressed(n: u64) -> Result<CompressedGraph> {
    Ok(CompressedGraph {
        partition: partition(n)?,
    })
}

/// Materializes the generalized join over ascending ring elements.
pub fn expand(g: &CompressedGraph) -> Result<DenseGraph> {
    let order = g.order();
    if order > EXPAND_MAX_ORDER {
        return Err(Error::GuardRefusal {
            what: "dense expansion",
            size: order,
            limit: EXPAND_MAX_ORDER,
        });
    }
    let n = g.n();
    let mut labelled: Vec<(u64, usize)> = Vec::with_capacity(order as usize);
    for (ci, class) in g.classes().iter().enumerate() {
        labelled.extend(members(n, class.divisor)?.into_iter().map(|x| (x, ci)));
    }
    labelled.sort_unstable();
    let class_of: Vec<usize> = labelled.iter().map(|v| v.1).collect();
    let mut dense = DenseGraph::new(n, labelled.into_iter().map(|v| v.0).collect());
    let classes = g.classes();
    for i in 0..dense.order() {
        for j in i + 1..dense.order() {
            let (a, b) = (class_of[i], class_of[j]);
            if a != b || classes[a].kind == ClassKind::Complete {
                dense.add_edge(i, j);
            }
        }
    }
    Ok(dense)
}

/// Graphviz rendering: one node line per vertex carrying its class, one
/// `--` line per edge.
pub fn to_dot(g: &CompressedGraph, dense: &DenseGraph) -> String {
    let n = g.n();
    let mut out = String::new();
    let _ = writeln!(out, "graph wzd_{n} {{");
    for &v in dense.vertices() {
        let _ = writeln!(out, "  {v} [class=\"d{}\"];", gcd_unchecked(v, n));
    }
    for (x, y) in dense.edge_values() {
        let _ = writeln!(out, "  {x} -- {y};");
    }
    out.push_str("}\n");
    out
}
