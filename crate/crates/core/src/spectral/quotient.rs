use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::structure::{build_compressed, expand, ClassKind, CompressedGraph};

use super::eigen::{eig_sym, eigenvalues, EigenSolver};
use super::matrix::{sombor_matrix, SymMatrix};
use super::spectrum::{Spectrum, DEFAULT_CLUSTER_TOL};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientCell {
    pub label: String,
    pub size: u64,
    pub degree: u64,
    pub clique: bool,
}

/// Quotient of the Sombor matrix over an equitable partition. Entry `(i, j)`
/// is the constant row sum of block `(i, j)`, so the matrix is generally not
/// symmetric.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuotientMatrix<T> {
    pub cells: Vec<QuotientCell>,
    pub entries: Vec<Vec<T>>,
}

impl<T: Real> QuotientMatrix<T> {
    pub fn order(&self) -> usize {
        self.cells.len()
    }

    /// `D^{1/2} Q D^{-1/2}` with `D = diag(cell sizes)`; similar to `Q`.
    pub fn symmetrized(&self) -> SymMatrix<T> {
        let k = self.order();
        let mut m = SymMatrix::zeros(k);
        for i in 0..k {
            for j in i..k {
                let si = T::count(self.cells[i].size);
                let sj = T::count(self.cells[j].size);
                m.set(i, j, self.entries[i][j] * si.sqrt() / sj.sqrt());
            }
        }
        m
    }

    pub fn eigenvalues(&self) -> Result<Vec<T>> {
        eigenvalues(&self.symmetrized(), EigenSolver::Jacobi)
    }
}

/// Cells: all complete classes merged into one clique (when present), then
/// one cell per independent class. Every clique vertex has degree `N − 1`,
/// which keeps the merged partition equitable.
pub fn quotient_matrix<T: Real>(g: &CompressedGraph) -> QuotientMatrix<T> {
    let order = g.order();
    let clique = g.partition.clique_size();
    let mut cells = Vec::new();
    if clique > 0 {
        cells.push(QuotientCell {
            label: "clique".into(),
            size: clique,
            degree: order - 1,
            clique: true,
        });
    }
    for c in g.classes().iter().filter(|c| c.kind == ClassKind::Independent) {
        cells.push(QuotientCell {
            label: format!("d{}", c.divisor),
            size: c.size,
            degree: c.degree,
            clique: false,
        });
    }
    let entries = cells
        .iter()
        .enumerate()
        .map(|(i, a)| {
            cells
                .iter()
                .enumerate()
                .map(|(j, b)| {
                    if i == j {
                        if a.clique {
                            T::sqrt2() * T::count(a.degree) * T::count(a.size - 1)
                        } else {
                            T::zero()
                        }
                    } else {
                        T::hypot_u64(a.degree, b.degree) * T::count(b.size)
                    }
                })
                .collect()
        })
        .collect();
    QuotientMatrix { cells, entries }
}

fn composite(n: u64) -> Result<CompressedGraph> {
    let g = build_compressed(n)?;
    if g.partition.is_trivial() {
        return Err(Error::NotApplicable {
            n,
            reason: "prime modulus gives the null graph",
        });
    }
    Ok(g)
}

/// Eigenvalues assembled from twin sets and the quotient:
/// `−√2(N−1)` with multiplicity `K−1` from the clique of size `K`, `0` with
/// multiplicity `s−1` from each independent class, and the quotient's
/// eigenvalues.
pub fn theoretical_eigenvalues<T: Real>(g: &CompressedGraph) -> Result<Vec<T>> {
    let order = g.order();
    let clique = g.partition.clique_size();
    let mut values = Vec::with_capacity(order as usize);
    if clique >= 2 {
        let v = -T::sqrt2() * T::count(order - 1);
        values.extend(std::iter::repeat_n(v, (clique - 1) as usize));
    }
    let zeros: u64 = g.partition.independent().map(|c| c.size - 1).sum();
    values.extend(std::iter::repeat_n(T::zero(), zeros as usize));
    values.extend(quotient_matrix::<T>(g).eigenvalues()?);
    Ok(values)
}

fn default_cluster<T: Real>(g: &CompressedGraph) -> T {
    let frob = T::count(g.sombor_frobenius_sq()).sqrt();
    T::lit(DEFAULT_CLUSTER_TOL) * frob.max(T::one())
}

/// Spectrum from the class structure alone; never builds an `N × N` matrix.
pub fn spectrum_theoretical<T: Real>(n: u64) -> Result<Spectrum<T>> {
    let g = composite(n)?;
    Ok(Spectrum::from_values(theoretical_eigenvalues(&g)?, default_cluster(&g)))
}

/// Spectrum by dense eigensolve of the full Sombor matrix.
pub fn spectrum_full<T: Real>(n: u64) -> Result<Spectrum<T>> {
    let g = composite(n)?;
    let a = sombor_matrix::<T>(&expand(&g)?)?;
    eig_sym(&a, T::lit(DEFAULT_CLUSTER_TOL))
}
