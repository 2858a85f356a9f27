//! Eigenvalues of dense real symmetric matrices.
//!
//! Two independent solvers: cyclic Jacobi rotations, and Householder
//! reduction to tridiagonal form followed by implicit QL with Wilkinson-type
//! shifts. The tridiagonal route is the default since it costs one O(N³)
//! reduction instead of several O(N³) sweeps.

use crate::error::{Error, Result};
use crate::scalar::Real;

use super::matrix::SymMatrix;
use super::spectrum::Spectrum;

pub const JACOBI_MAX_SWEEPS: usize = 100;

/// Iteration budget per eigenvalue for the QL stage.
const QL_MAX_ITER: usize = 60;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EigenSolver {
    Jacobi,
    #[default]
    TridiagonalQl,
}

/// Spectrum of `a` with multiplicities clustered at `tol · max(1, ‖a‖_F)`.
pub fn eig_sym<T: Real>(a: &SymMatrix<T>, tol: T) -> Result<Spectrum<T>> {
    eig_sym_with(a, tol, EigenSolver::default())
}

pub fn eig_sym_with<T: Real>(a: &SymMatrix<T>, tol: T, solver: EigenSolver) -> Result<Spectrum<T>> {
    if tol.is_nan() || tol <= T::zero() {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
    }
    let cluster = tol * a.frobenius_norm().max(T::one());
    Ok(Spectrum::from_values(eigenvalues(a, solver)?, cluster))
}

/// Raw eigenvalues, unsorted.
pub fn eigenvalues<T: Real>(a: &SymMatrix<T>, solver: EigenSolver) -> Result<Vec<T>> {
    match solver {
        EigenSolver::Jacobi => jacobi(a),
        EigenSolver::TridiagonalQl => {
            let (d, e) = tridiagonalize(a.clone());
            tridiagonal_ql(d, e)
        }
    }
}

/// Cyclic Jacobi: sweep all `(p, q)` pairs in row order until the
/// off-diagonal Frobenius mass drops below `1e-12 · ‖A‖_F`.
fn jacobi<T: Real>(a: &SymMatrix<T>) -> Result<Vec<T>> {
    let n = a.order();
    let threshold = T::lit(1e-12) * a.frobenius_norm();
    let mut m = a.clone().into_entries();
    let off = |m: &[T]| {
        let mut s = T::zero();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s = s + m[i * n + j] * m[i * n + j];
                }
            }
        }
        s.sqrt()
    };
    for _ in 0..JACOBI_MAX_SWEEPS {
        if off(&m) <= threshold {
            return Ok((0..n).map(|i| m[i * n + i]).collect());
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[p * n + q];
                if apq == T::zero() {
                    continue;
                }
                let theta = (m[q * n + q] - m[p * n + p]) / (T::lit(2.0) * apq);
                let t = if theta.abs() > T::lit(1e150) {
                    T::lit(0.5) / theta
                } else {
                    let t = T::one() / (theta.abs() + (theta * theta + T::one()).sqrt());
                    if theta < T::zero() {
                        -t
                    } else {
                        t
                    }
                };
                let c = T::one() / (t * t + T::one()).sqrt();
                let s = t * c;
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = m[k * n + p];
                    let akq = m[k * n + q];
                    let new_p = c * akp - s * akq;
                    let new_q = s * akp + c * akq;
                    m[k * n + p] = new_p;
                    m[p * n + k] = new_p;
                    m[k * n + q] = new_q;
                    m[q * n + k] = new_q;
                }
                m[p * n + p] = m[p * n + p] - t * apq;
                m[q * n + q] = m[q * n + q] + t * apq;
                m[p * n + q] = T::zero();
                m[q * n + p] = T::zero();
            }
        }
    }
    if off(&m) <= threshold {
        return Ok((0..n).map(|i| m[i * n + i]).collect());
    }
    Err(Error::NoConvergence {
        order: n,
        iterations: JACOBI_MAX_SWEEPS,
    })
}

/// Householder reduction working on the lower triangle. Returns the diagonal
/// and the subdiagonal, with `e[i]` coupling rows `i−1` and `i` (`e[0] = 0`).
fn tridiagonalize<T: Real>(a: SymMatrix<T>) -> (Vec<T>, Vec<T>) {
    let n = a.order();
    let mut a = a.into_entries();
    let mut d = vec![T::zero(); n];
    let mut e = vec![T::zero(); n];
    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = T::zero();
        if l > 0 {
            let scale = (0..=l).map(|k| a[i * n + k].abs()).fold(T::zero(), |x, y| x + y);
            if scale == T::zero() {
                e[i] = a[i * n + l];
            } else {
                for k in 0..=l {
                    a[i * n + k] = a[i * n + k] / scale;
                    h = h + a[i * n + k] * a[i * n + k];
                }
                let f = a[i * n + l];
                let g = if f >= T::zero() { -h.sqrt() } else { h.sqrt() };
                e[i] = scale * g;
                h = h - f * g;
                a[i * n + l] = f - g;
                let mut f = T::zero();
                for j in 0..=l {
                    let mut g = T::zero();
                    for k in 0..=j {
                        g = g + a[j * n + k] * a[i * n + k];
                    }
                    for k in j + 1..=l {
                        g = g + a[k * n + j] * a[i * n + k];
                    }
                    e[j] = g / h;
                    f = f + e[j] * a[i * n + j];
                }
                let hh = f / (h + h);
                for j in 0..=l {
                    let f = a[i * n + j];
                    let g = e[j] - hh * f;
                    e[j] = g;
                    for k in 0..=j {
                        a[j * n + k] = a[j * n + k] - (f * e[k] + g * a[i * n + k]);
                    }
                }
            }
        } else {
            e[i] = a[i * n + l];
        }
        d[i] = h;
    }
    for i in 0..n {
        d[i] = a[i * n + i];
    }
    if n > 0 {
        e[0] = T::zero();
    }
    (d, e)
}

/// Implicit QL on a symmetric tridiagonal matrix.
fn tridiagonal_ql<T: Real>(mut d: Vec<T>, mut e: Vec<T>) -> Result<Vec<T>> {
    let n = d.len();
    if n == 0 {
        return Ok(d);
    }
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = T::zero();
    let eps = T::epsilon();
    // off-diagonals below eps·‖T‖ are negligible even between near-zero
    // diagonal entries, where the relative test alone never fires
    let norm = (0..n).map(|i| d[i].abs() + e[i].abs()).fold(T::zero(), T::max);
    let floor = eps * norm;
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= eps * dd || e[m].abs() <= floor {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > QL_MAX_ITER {
                return Err(Error::NoConvergence {
                    order: n,
                    iterations: iter,
                });
            }
            let mut g = (d[l + 1] - d[l]) / (T::lit(2.0) * e[l]);
            let mut r = g.hypot(T::one());
            g = d[m] - d[l] + e[l] / (g + if g >= T::zero() { r.abs() } else { -r.abs() });
            let (mut s, mut c, mut p) = (T::one(), T::one(), T::zero());
            let mut underflow = false;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == T::zero() {
                    d[i + 1] = d[i + 1] - p;
                    e[m] = T::zero();
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + T::lit(2.0) * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if underflow {
                continue;
            }
            d[l] = d[l] - p;
            e[l] = g;
            e[m] = T::zero();
        }
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const SQRT2: f64 = std::f64::consts::SQRT_2;

    fn sorted(mut v: Vec<f64>) -> Vec<f64> {
        v.sort_by(|a, b| b.partial_cmp(a).unwrap());
        v
    }

    fn both(a: &SymMatrix<f64>) -> (Vec<f64>, Vec<f64>) {
        (
            sorted(eigenvalues(a, EigenSolver::Jacobi).unwrap()),
            sorted(eigenvalues(a, EigenSolver::TridiagonalQl).unwrap()),
        )
    }

    #[test]
    fn two_by_two_antidiagonal() {
        let a = SymMatrix::from_rows(&[vec![0.0, SQRT2], vec![SQRT2, 0.0]]).unwrap();
        for solver in [EigenSolver::Jacobi, EigenSolver::TridiagonalQl] {
            let s = eig_sym_with(&a, 1e-9, solver).unwrap();
            assert_eq!(s.order(), 2);
            let v = s.expanded();
            assert!((v[0] - SQRT2).abs() < 1e-14 && (v[1] + SQRT2).abs() < 1e-14);
        }
    }

    #[test]
    fn complete_graph_k3() {
        let w = 2.0 * SQRT2;
        let a = SymMatrix::from_rows(&[vec![0.0, w, w], vec![w, 0.0, w], vec![w, w, 0.0]]).unwrap();
        let s = eig_sym(&a, 1e-9).unwrap();
        assert_eq!(s.pairs.len(), 2);
        assert!((s.pairs[0].0 - 4.0 * SQRT2).abs() < 1e-13 && s.pairs[0].1 == 1);
        assert!((s.pairs[1].0 + 2.0 * SQRT2).abs() < 1e-13 && s.pairs[1].1 == 2);
    }

    #[test]
    fn one_by_one_and_empty() {
        let s = eig_sym(&SymMatrix::<f64>::zeros(1), 1e-9).unwrap();
        assert_eq!(s.pairs, vec![(0.0, 1)]);
        let s = eig_sym(&SymMatrix::<f64>::zeros(0), 1e-9).unwrap();
        assert!(s.pairs.is_empty());
    }

    #[test]
    fn rejects_non_positive_tolerance() {
        assert!(eig_sym(&SymMatrix::<f64>::zeros(2), 0.0).is_err());
    }

    #[test]
    fn diagonal_matrix() {
        let a = SymMatrix::from_rows(&[vec![3.0, 0.0, 0.0], vec![0.0, -1.0, 0.0], vec![0.0, 0.0, 2.0]]).unwrap();
        let (j, q) = both(&a);
        assert_eq!(j, vec![3.0, 2.0, -1.0]);
        assert_eq!(q, vec![3.0, 2.0, -1.0]);
    }

    #[test]
    fn tridiagonal_toeplitz_closed_form() {
        // tridiag(1, 2, 1) of order n has eigenvalues 2 + 2cos(kπ/(n+1))
        let n = 40;
        let mut a = SymMatrix::zeros(n);
        for i in 0..n {
            a.set(i, i, 2.0);
            if i + 1 < n {
                a.set(i, i + 1, 1.0);
            }
        }
        let expected: Vec<f64> = sorted(
            (1..=n)
                .map(|k| 2.0 + 2.0 * (k as f64 * std::f64::consts::PI / (n as f64 + 1.0)).cos())
                .collect(),
        );
        let (j, q) = both(&a);
        for ((x, y), z) in j.iter().zip(&q).zip(&expected) {
            assert!((x - z).abs() < 1e-12 && (y - z).abs() < 1e-12);
        }
    }

    #[test]
    fn single_precision() {
        let a = SymMatrix::<f32>::from_rows(&[vec![2.0, 1.0], vec![1.0, 2.0]]).unwrap();
        let s = eig_sym(&a, 1e-4).unwrap();
        let v = s.expanded();
        assert!((v[0] - 3.0).abs() < 1e-5 && (v[1] - 1.0).abs() < 1e-5);
    }

    fn symmetric(order: usize) -> impl Strategy<Value = SymMatrix<f64>> {
        proptest::collection::vec(-10.0f64..10.0, order * order).prop_map(move |raw| {
            let mut m = SymMatrix::zeros(order);
            for i in 0..order {
                for j in 0..=i {
                    m.set(i, j, raw[i * order + j]);
                }
            }
            m
        })
    }

    proptest! {
        #[test]
        fn solvers_agree_and_preserve_invariants(a in (1usize..24).prop_flat_map(symmetric)) {
            let (j, q) = both(&a);
            let norm = a.frobenius_norm().max(1.0);
            for (x, y) in j.iter().zip(&q) {
                prop_assert!((x - y).abs() <= 1e-10 * norm);
            }
            let trace: f64 = q.iter().sum();
            prop_assert!((trace - a.trace()).abs() <= 1e-10 * norm);
            let squares: f64 = q.iter().map(|x| x * x).sum();
            let fro2 = a.frobenius_norm().powi(2);
            prop_assert!((squares - fro2).abs() <= 1e-10 * fro2.max(1.0));
        }
    }
}
