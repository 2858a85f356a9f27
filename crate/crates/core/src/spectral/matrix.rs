use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numfmt::format_real;
use crate::ring_oracle::DenseGraph;
use crate::scalar::Real;

/// Dense eigensolves refuse matrices larger than this.
pub const DENSE_EIG_MAX_ORDER: usize = 5000;

/// Dense symmetric matrix, row-major.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SymMatrix<T> {
    order: usize,
    entries: Vec<T>,
}

impl<T: Real> SymMatrix<T> {
    pub fn zeros(order: usize) -> Self {
        SymMatrix {
            order,
            entries: vec![T::zero(); order * order],
        }
    }

    /// Builds from full rows; fails unless square and exactly symmetric.
    pub fn from_rows(rows: &[Vec<T>]) -> Result<Self> {
        let order = rows.len();
        let mut m = Self::zeros(order);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::InvalidArgument(format!(
                    "row {i} has {} entries, expected {order}",
                    row.len()
                )));
            }
            m.entries[i * order..(i + 1) * order].copy_from_slice(row);
        }
        for i in 0..order {
            for j in 0..i {
                if m.get(i, j) != m.get(j, i) {
                    return Err(Error::InvalidArgument(format!("matrix is not symmetric at ({i}, {j})")));
                }
            }
        }
        Ok(m)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> T {
        self.entries[i * self.order + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.entries[i * self.order + j] = v;
        self.entries[j * self.order + i] = v;
    }

    pub fn frobenius_norm(&self) -> T {
        self.entries.iter().map(|&x| x * x).fold(T::zero(), |a, b| a + b).sqrt()
    }

    pub fn trace(&self) -> T {
        (0..self.order).map(|i| self.get(i, i)).fold(T::zero(), |a, b| a + b)
    }

    pub(crate) fn into_entries(self) -> Vec<T> {
        self.entries
    }

    /// Plain-text export: header `order E`, then one `i j value` line per
    /// nonzero upper-triangle entry, 0-based, 17 significant digits.
    pub fn to_triplets(&self) -> String {
        let mut lines = Vec::new();
        for i in 0..self.order {
            for j in i..self.order {
                let v = self.get(i, j);
                if v != T::zero() {
                    lines.push(format!("{i} {j} {}", format_real(v.to_f64().unwrap_or(f64::NAN))));
                }
            }
        }
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.order, lines.len());
        for l in lines {
            out.push_str(&l);
            out.push('\n');
        }
        out
    }
}

/// `s_ij = √(d_i² + d_j²)` on edges, zero elsewhere.
pub fn sombor_matrix<T: Real>(g: &DenseGraph) -> Result<SymMatrix<T>> {
    let order = g.order();
    if order > DENSE_EIG_MAX_ORDER {
        return Err(Error::GuardRefusal {
            what: "dense Sombor matrix",
            size: order as u64,
            limit: DENSE_EIG_MAX_ORDER as u64,
        });
    }
    let degrees = g.degrees();
    let mut m = SymMatrix::zeros(order);
    for (i, j) in g.edges() {
        m.set(i, j, T::hypot_u64(degrees[i], degrees[j]));
    }
    Ok(m)
}
