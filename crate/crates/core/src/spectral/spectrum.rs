use serde::{Deserialize, Serialize};

use crate::scalar::Real;

/// Relative clustering tolerance used when none is given.
pub const DEFAULT_CLUSTER_TOL: f64 = 1e-8;

/// Eigenvalue multiset as `(value, multiplicity)` pairs, values descending.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum<T> {
    pub pairs: Vec<(T, usize)>,
    pub cluster_tolerance: T,
}

impl<T: Real> Spectrum<T> {
    pub fn empty() -> Self {
        Spectrum {
            pairs: Vec::new(),
            cluster_tolerance: T::zero(),
        }
    }

    /// Single-linkage clustering: sorted neighbours closer than `tolerance`
    /// share a cluster, reported at its mean.
    pub fn from_values(mut values: Vec<T>, tolerance: T) -> Self {
        values.sort_by(|a, b| b.partial_cmp(a).expect("eigenvalues are not NaN"));
        let mut pairs: Vec<(T, usize)> = Vec::new();
        let mut sum = T::zero();
        let mut count = 0usize;
        let mut last = T::zero();
        for v in values {
            if count > 0 && last - v > tolerance {
                pairs.push((sum / T::count(count as u64), count));
                sum = T::zero();
                count = 0;
            }
            sum = sum + v;
            count += 1;
            last = v;
        }
        if count > 0 {
            pairs.push((sum / T::count(count as u64), count));
        }
        Spectrum {
            pairs,
            cluster_tolerance: tolerance,
        }
    }

    /// Total multiplicity.
    pub fn order(&self) -> usize {
        self.pairs.iter().map(|p| p.1).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn largest(&self) -> Option<T> {
        self.pairs.first().map(|p| p.0)
    }

    /// Σ λ·mult
    pub fn trace(&self) -> T {
        self.pairs
            .iter()
            .map(|&(v, m)| v * T::count(m as u64))
            .fold(T::zero(), |a, b| a + b)
    }

    /// Σ λ²·mult
    pub fn sum_of_squares(&self) -> T {
        self.pairs
            .iter()
            .map(|&(v, m)| v * v * T::count(m as u64))
            .fold(T::zero(), |a, b| a + b)
    }

    /// Σ |λ|·mult
    pub fn energy(&self) -> T {
        self.pairs
            .iter()
            .map(|&(v, m)| v.abs() * T::count(m as u64))
            .fold(T::zero(), |a, b| a + b)
    }

    /// Every eigenvalue repeated by multiplicity, descending.
    pub fn expanded(&self) -> Vec<T> {
        self.pairs
            .iter()
            .flat_map(|&(v, m)| std::iter::repeat_n(v, m))
            .collect()
    }

    /// Largest elementwise gap between the sorted multisets, `None` when the
    /// orders differ.
    pub fn max_deviation(&self, other: &Spectrum<T>) -> Option<T> {
        if self.order() != other.order() {
            return None;
        }
        Some(
            self.expanded()
                .into_iter()
                .zip(other.expanded())
                .map(|(a, b)| (a - b).abs())
                .fold(T::zero(), T::max),
        )
    }

    /// Multiset equality within `tolerance`.
    pub fn matches(&self, other: &Spectrum<T>, tolerance: T) -> bool {
        self.max_deviation(other).is_some_and(|d| d <= tolerance)
    }

    /// The cluster closest to `value`.
    pub fn nearest(&self, value: T) -> Option<(T, usize)> {
        self.pairs
            .iter()
            .copied()
            .min_by(|a, b| (a.0 - value).abs().partial_cmp(&(b.0 - value).abs()).expect("finite"))
    }

    /// Multiplicity of the cluster within `tolerance` of `value`, else 0.
    pub fn multiplicity_of(&self, value: T, tolerance: T) -> usize {
        self.nearest(value)
            .filter(|p| (p.0 - value).abs() <= tolerance)
            .map_or(0, |p| p.1)
    }
}
